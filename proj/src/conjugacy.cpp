#include "dejean/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dejean {

namespace {

/// lcm/gcd through cached prime factorizations; the canonical-form procedure
/// hits the same small cycle lengths over and over.
class PrimeFactorCache {
  public:
    const std::map<long long, int>& factors(long long v) {
        auto it = cache_.find(v);
        if (it != cache_.end()) return it->second;
        std::map<long long, int> f;
        long long x = v;
        for (long long p = 2; p * p <= x; ++p)
            while (x % p == 0) { ++f[p]; x /= p; }
        if (x > 1) ++f[x];
        return cache_.emplace(v, std::move(f)).first->second;
    }

    long long lcm(long long a, long long b) {
        std::map<long long, int> m = factors(a);
        for (auto [p, e] : factors(b)) m[p] = std::max(m[p], e);
        long long r = 1;
        for (auto [p, e] : m)
            for (int i = 0; i < e; ++i) r *= p;
        return r;
    }

    long long gcd(long long a, long long b) {
        long long r = 1;
        const auto& fb = factors(b);
        for (auto [p, e] : factors(a)) {
            auto it = fb.find(p);
            if (it == fb.end()) continue;
            int c = std::min(e, it->second);
            for (int i = 0; i < c; ++i) r *= p;
        }
        return r;
    }

  private:
    std::map<long long, std::map<long long, int>> cache_;
};

long long egcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    long long x1, y1;
    long long g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

long long mod_pos(long long a, long long m) { return ((a % m) + m) % m; }

// Combine s == a (mod M) with s == r (mod c); assumes compatibility.
std::pair<long long, long long> crt(long long a, long long M, long long r, long long c,
                                    PrimeFactorCache& pf) {
    long long x, y;
    long long g = egcd(M, c, x, y);
    if ((r - a) % g != 0) throw std::logic_error("incompatible congruences");
    long long Mg = M / g, cg = c / g;
    long long t = mod_pos(((r - a) / g) % cg * mod_pos(x, cg) % cg, cg);
    long long M2 = pf.lcm(M, c);
    long long s = mod_pos(a + M * t, M2);
    return {s, M2};
}

}  // namespace

Permutation Permutation::identity(int n) {
    Permutation p;
    p.map.resize(static_cast<std::size_t>(n));
    std::iota(p.map.begin(), p.map.end(), 0);
    return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (n() != o.n()) throw std::invalid_argument("permutation size mismatch");
    Permutation r;
    r.map.resize(map.size());
    for (int i = 0; i < n(); ++i) r.map[static_cast<std::size_t>(i)] = (*this)(o(i));
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.map.resize(map.size());
    for (int i = 0; i < n(); ++i) r.map[static_cast<std::size_t>((*this)(i))] = i;
    return r;
}

Permutation Permutation::pow(long long e) const {
    Permutation base = *this;
    if (e < 0) { base = inverse(); e = -e; }
    Permutation r = identity(n());
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

int Permutation::order() const {
    Permutation p = *this;
    int k = 1;
    while (!p.is_identity()) {
        p = p * *this;
        ++k;
        if (k > 1 << 20) throw std::logic_error("runaway permutation order");
    }
    return k;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Word Permutation::rename(const Word& w) const {
    Word r = w;
    for (auto& a : r.letters) a = map[static_cast<std::size_t>(a)];
    return r;
}

Word Permutation::one_line() const {
    return make_word(n(), std::vector<Letter>(map.begin(), map.end()));
}

bool conjugate_oracle(const Word& u, const Word& v) {
    if (u.size() != v.size()) return false;
    if (u.empty()) return true;
    // KMP search of v in u.u
    std::vector<Index> b = border_array(v);
    Index k = 0;
    const Index len = u.size();
    for (Index i = 0; i < 2 * len; ++i) {
        Letter a = u[i < len ? i : i - len];
        while (k > 0 && a != v[k]) k = b[k - 1];
        if (a == v[k]) ++k;
        if (k == len) return true;
    }
    return false;
}

Permutation induced_permutation(const Premise& p, const Code& c) {
    const int n = p.letters.n;
    if (c.size() < n) throw std::invalid_argument("induced_permutation: code shorter than n");
    Word w = decode(p, c);
    Word suffix = factor(w, w.size() - n, n);
    Permutation sigma;
    sigma.map.assign(static_cast<std::size_t>(n), -1);
    for (Index t = 0; t < n; ++t) {
        int from = p.letters[t], to = suffix[t];
        int& slot = sigma.map[static_cast<std::size_t>(from)];
        if (slot != -1 && slot != to)
            throw std::runtime_error("suffix is not a consistent renaming of the premise");
        slot = to;
    }
    if (p.kind == PremiseKind::AMinus) {
        Letter from = missing_letter(p);
        Letter to = missing_letter(make_premise(suffix));
        sigma.map[static_cast<std::size_t>(from)] = to;
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : sigma.map) {
        if (v < 0 || seen[static_cast<std::size_t>(v)])
            throw std::runtime_error("induced mapping is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    return sigma;
}

bool orbit_test(const Permutation& pi, const Permutation& pi_p, const Permutation& pi_q, int k) {
    if (!pi.pow(k).is_identity()) throw std::invalid_argument("not a k-root permutation");
    Permutation acc = Permutation::identity(pi.n());
    for (int m = 0; m < k; ++m) {
        if (acc * pi_q == pi_p) return true;
        acc = pi * acc;
    }
    return false;
}

Word canonical_form_bruteforce(const Permutation& pi, const Permutation& pi_i, int k) {
    if (!pi.pow(k).is_identity()) throw std::invalid_argument("not a k-root permutation");
    Word best = pi_i.one_line();
    Permutation acc = pi;
    for (int s = 1; s <= k; ++s) {
        Word cand = (acc * pi_i).one_line();
        if (cand.letters < best.letters) best = cand;
        acc = pi * acc;
    }
    return best;
}

Word canonical_form(const Permutation& pi, const Permutation& pi_i, int k) {
    if (!pi.pow(k).is_identity()) throw std::invalid_argument("not a k-root permutation");
    const int n = pi.n();
    PrimeFactorCache pf;

    // cycle decomposition of pi, indexed by value
    std::vector<int> cyc_id(static_cast<std::size_t>(n), -1);
    std::vector<int> cyc_pos(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> cycles;
    for (int v = 0; v < n; ++v) {
        if (cyc_id[static_cast<std::size_t>(v)] != -1) continue;
        std::vector<int> cyc;
        int x = v;
        do {
            cyc_id[static_cast<std::size_t>(x)] = static_cast<int>(cycles.size());
            cyc_pos[static_cast<std::size_t>(x)] = static_cast<int>(cyc.size());
            cyc.push_back(x);
            x = pi(x);
        } while (x != v);
        cycles.push_back(std::move(cyc));
    }
    auto step = [&](int v, long long s) {
        const auto& cyc = cycles[static_cast<std::size_t>(cyc_id[static_cast<std::size_t>(v)])];
        long long c = static_cast<long long>(cyc.size());
        return cyc[static_cast<std::size_t>(mod_pos(cyc_pos[static_cast<std::size_t>(v)] + s, c))];
    };

    // Fix s left to right: at position t the letter is pi^s(pi_i(t)), which only
    // depends on s modulo that value's cycle length. The feasible shifts form a
    // congruence class s == a (mod M); the reachable residues modulo c are the
    // class of a modulo gcd(M, c), strided by it.
    long long a = 0, M = 1;
    std::vector<Letter> out(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        int b = pi_i(t);
        long long c = static_cast<long long>(
            cycles[static_cast<std::size_t>(cyc_id[static_cast<std::size_t>(b)])].size());
        long long g = pf.gcd(M, c);
        int best_letter = n;
        long long best_r = -1;
        for (long long r = mod_pos(a, g); r < c; r += g) {
            int letter = step(b, r);
            if (letter < best_letter) { best_letter = letter; best_r = r; }
        }
        out[static_cast<std::size_t>(t)] = best_letter;
        std::tie(a, M) = crt(a, M, best_r, c, pf);
    }
    return make_word(n, std::move(out));
}

Permutation shift_permutation(const BcWord& root, Flavor f, int n, Index off) {
    if (off == 0) return Permutation::identity(n);
    Code c = phi(root, f, n);
    if (off < n || off > c.size())
        throw std::invalid_argument("shift offset must be 0 or in [n, |phi(root)|]");
    return induced_permutation(canonical_premise(n, PremiseKind::A0), code_factor(c, 0, off));
}

bool conjugate_shifts(const ConjInstance& inst) {
    Permutation pi =
        induced_permutation(canonical_premise(inst.n, PremiseKind::A0), phi(inst.root, inst.flavor, inst.n));
    Permutation pp = shift_permutation(inst.root, inst.flavor, inst.n, inst.p_off);
    Permutation pq = shift_permutation(inst.root, inst.flavor, inst.n, inst.q_off);
    return orbit_test(pi, pp, pq, inst.k);
}

Word canonical_conjugate(const ConjInstance& inst) {
    Permutation pi =
        induced_permutation(canonical_premise(inst.n, PremiseKind::A0), phi(inst.root, inst.flavor, inst.n));
    Permutation pp = shift_permutation(inst.root, inst.flavor, inst.n, inst.p_off);
    return canonical_form(pi, pp, inst.k);
}

}  // namespace dejean
