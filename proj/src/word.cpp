#include "dejean/word.hpp"

#include <algorithm>
#include <numeric>

namespace dejean {

namespace {

using i128 = __int128;

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

// floor(a/b) for b > 0, exact for negative a.
long long floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return static_cast<long long>(q);
}

}  // namespace

Word make_word(int n, std::vector<Letter> letters) {
    if (n < 1) throw std::invalid_argument("alphabet size must be >= 1");
    for (Letter a : letters)
        if (a < 0 || a >= n) throw std::invalid_argument("letter out of alphabet range");
    return Word{n, std::move(letters)};
}

Word concat(const Word& a, const Word& b) {
    if (a.n != b.n) throw std::invalid_argument("concat: alphabet mismatch");
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

Word factor(const Word& w, Index start, Index len) {
    if (start < 0 || len < 0 || start + len > w.size())
        throw std::out_of_range("factor out of range");
    Word r;
    r.n = w.n;
    r.letters.assign(w.letters.begin() + start, w.letters.begin() + start + len);
    return r;
}

Word rotate_left(const Word& w, Index m) {
    if (w.empty()) return w;
    Index k = ((m % w.size()) + w.size()) % w.size();
    Word r;
    r.n = w.n;
    r.letters.reserve(w.letters.size());
    r.letters.insert(r.letters.end(), w.letters.begin() + k, w.letters.end());
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + k);
    return r;
}

Ratio Ratio::of(long long num, long long den) {
    if (den <= 0) throw std::invalid_argument("Ratio denominator must be positive");
    if (num < 0) throw std::invalid_argument("Ratio must be non-negative");
    long long g = num == 0 ? den : gcd_ll(num, den);
    return Ratio{num / g, den / g};
}

bool Ratio::operator<(const Ratio& o) const {
    return static_cast<i128>(num) * o.den < static_cast<i128>(o.num) * den;
}

bool Ratio::operator<=(const Ratio& o) const {
    return static_cast<i128>(num) * o.den <= static_cast<i128>(o.num) * den;
}

Ratio Ratio::operator+(const Ratio& o) const {
    return Ratio::of(num * o.den + o.num * den, den * o.den);
}

Ratio Ratio::operator-(const Ratio& o) const {
    long long v = num * o.den - o.num * den;
    if (v < 0) throw std::domain_error("Ratio subtraction went negative");
    return Ratio::of(v, den * o.den);
}

Ratio Ratio::operator*(const Ratio& o) const { return Ratio::of(num * o.num, den * o.den); }

std::string Ratio::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

Ratio repetition_threshold(int n) {
    if (n < 2) throw std::invalid_argument("repetition threshold needs n >= 2");
    return Ratio::of(n, n - 1);
}

bool EpsProfile::is_exempt(Index repeat_len) const {
    return std::binary_search(exempt.begin(), exempt.end(), static_cast<int>(repeat_len));
}

EpsProfile EpsProfile::plain() { return EpsProfile{Ratio::integer(0), {}}; }

EpsProfile EpsProfile::with(Ratio eps, std::vector<int> e) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return EpsProfile{eps, std::move(e)};
}

EpsProfile EpsProfile::standard(Ratio eps) { return with(eps, {1, 2}); }

std::vector<Index> border_array(const Word& w) {
    std::vector<Index> b(w.letters.size(), 0);
    Index k = 0;
    for (Index i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = b[k - 1];
        if (w[i] == w[k]) ++k;
        b[i] = k;
    }
    return b;
}

Index period(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word has no period");
    auto b = border_array(w);
    return w.size() - b[w.letters.size() - 1];
}

Ratio exponent(const Word& w) { return Ratio::of(w.size(), period(w)); }

std::pair<Ratio, FactorWitness> local_exponent(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word has no local exponent");
    Ratio best = Ratio::integer(0);
    FactorWitness bw{};
    std::vector<Index> b(w.letters.size(), 0);
    for (Index s = 0; s < w.size(); ++s) {
        // border array of the suffix starting at s, built incrementally
        Index k = 0;
        b[0] = 0;
        for (Index i = 0; s + i < w.size(); ++i) {
            if (i > 0) {
                while (k > 0 && w[s + i] != w[s + k]) k = b[k - 1];
                if (w[s + i] == w[s + k]) ++k;
                b[i] = k;
            }
            Index len = i + 1;
            Index per = len - b[i];
            Ratio e = Ratio::of(len, per);
            if (best < e) {
                best = e;
                bw = FactorWitness{s, len, per};
            } else if (e == best) {
                if (std::tuple(s, per, len) < std::tuple(bw.start, bw.period, bw.len))
                    bw = FactorWitness{s, len, per};
            }
        }
    }
    return {best, bw};
}

std::optional<Index> smallest_violating_repeat(Index p, Index max_repeat, Ratio bound,
                                               const EpsProfile& prof) {
    if (p < 1 || max_repeat < 1) return std::nullopt;
    // repeats longer than the period are kept: the verdict must match the
    // local-exponent semantics at bound 2 (n = 2)
    Index cap = max_repeat;
    const i128 Bn = bound.num, Bd = bound.den;
    const i128 en = prof.epsilon.num, ed = prof.epsilon.den;

    std::optional<Index> best;
    // Non-exempt candidates: e + p + eps > bound*p, i.e. e > T1.
    {
        i128 num = Bn * p * ed - Bd * p * ed - Bd * en;
        i128 den = Bd * ed;
        Index e = floor_div(num, den) + 1;
        if (e < 1) e = 1;
        while (e <= cap && prof.is_exempt(e)) ++e;
        if (e <= cap) best = e;
    }
    // Exempt candidates: e + p > bound*p (plain threshold), smallest exempt e.
    for (int ex : prof.exempt) {
        Index e = ex;
        if (e < 1 || e > cap) continue;
        if (static_cast<i128>(p + e) * Bd > Bn * static_cast<i128>(p)) {
            if (!best || e < *best) best = e;
            break;  // exempt list is sorted; first hit is smallest
        }
    }
    return best;
}

std::optional<FactorWitness> find_forbidden_naive_range(const Word& w, Ratio bound,
                                                        const EpsProfile& prof,
                                                        Index period_min, Index period_max) {
    if (!(Ratio::integer(1) < bound)) throw std::invalid_argument("bound must be > 1");
    const Index len = w.size();
    if (len == 0) return std::nullopt;
    period_min = std::max<Index>(period_min, 1);
    period_max = std::min(period_max, len);

    std::optional<FactorWitness> best;
    std::vector<Index> run(w.letters.size());
    for (Index p = period_min; p < period_max; ++p) {
        // run[s] = length of the maximal block of matches w[s+i] == w[s+p+i]
        for (Index s = len - p - 1; s >= 0; --s) {
            run[s] = (w[s] == w[s + p]) ? ((s + p + 1 < len) ? run[s + 1] + 1 : 1) : 0;
            if (run[s] == 0) continue;
            auto e = smallest_violating_repeat(p, run[s], bound, prof);
            if (!e) continue;
            FactorWitness cand{s, p + *e, p};
            if (!best || std::tuple(cand.start, cand.period, cand.len) <
                             std::tuple(best->start, best->period, best->len))
                best = cand;
        }
    }
    return best;
}

std::optional<FactorWitness> find_forbidden_naive(const Word& w, Ratio bound,
                                                  const EpsProfile& prof) {
    return find_forbidden_naive_range(w, bound, prof, 1, w.size());
}

}  // namespace dejean
