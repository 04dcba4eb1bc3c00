#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dejean {

using Letter = std::int32_t;
using Index = std::int64_t;

/// Finite word over the alphabet {0, ..., n-1}.
struct Word {
    int n = 0;
    std::vector<Letter> letters;

    Index size() const { return static_cast<Index>(letters.size()); }
    bool empty() const { return letters.empty(); }
    Letter operator[](Index i) const { return letters[static_cast<std::size_t>(i)]; }
    Letter& operator[](Index i) { return letters[static_cast<std::size_t>(i)]; }
    bool operator==(const Word& o) const { return n == o.n && letters == o.letters; }
};

Word make_word(int n, std::vector<Letter> letters);
Word concat(const Word& a, const Word& b);
Word factor(const Word& w, Index start, Index len);
Word rotate_left(const Word& w, Index m);

/// Exact non-negative rational, stored reduced. All repetition-threshold
/// comparisons go through cross-multiplication; no floating point on any
/// verdict path.
struct Ratio {
    long long num = 0;
    long long den = 1;

    static Ratio of(long long num, long long den);
    static Ratio integer(long long v) { return of(v, 1); }

    bool operator==(const Ratio& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Ratio& o) const { return !(*this == o); }
    bool operator<(const Ratio& o) const;
    bool operator<=(const Ratio& o) const;
    bool operator>(const Ratio& o) const { return o < *this; }
    bool operator>=(const Ratio& o) const { return o <= *this; }

    Ratio operator+(const Ratio& o) const;
    Ratio operator-(const Ratio& o) const;
    Ratio operator*(const Ratio& o) const;

    std::string str() const;
};

/// Repetition threshold RT(n) = n/(n-1).
Ratio repetition_threshold(int n);

/// Locates a factor xyx: the factor starts at `start`, spans `len` letters
/// and repeats with period `period` (so the repeat x has length len - period).
struct FactorWitness {
    Index start = 0;
    Index len = 0;
    Index period = 0;

    Index repeat() const { return len - period; }
    Ratio exponent() const { return Ratio::of(len, period); }
    bool operator==(const FactorWitness& o) const {
        return start == o.start && len == o.len && period == o.period;
    }
};

/// Epsilon reserve plus the exempt repeat lengths E of the (eps, E)-threshold
/// condition. A factor xyx with |x| in E is checked against the plain bound,
/// all others against (|xyx| + eps)/|xy|.
struct EpsProfile {
    Ratio epsilon = Ratio::integer(0);
    std::vector<int> exempt;  // kept sorted ascending

    bool is_exempt(Index repeat_len) const;
    static EpsProfile plain();                     // eps = 0, E = {}
    static EpsProfile with(Ratio eps, std::vector<int> e);
    static EpsProfile standard(Ratio eps);         // E = {1, 2}
};

/// Longest-border (failure function) array: border[i] = length of the longest
/// proper border of the prefix w[0..i].
std::vector<Index> border_array(const Word& w);

Index period(const Word& w);
Ratio exponent(const Word& w);
std::pair<Ratio, FactorWitness> local_exponent(const Word& w);

/// Leftmost factor xyx with (|xyx| + eps*chi)/|xy| > bound, chi = 0 iff the
/// repeat length |x| is exempt. Ties: smallest start, then period, then length.
std::optional<FactorWitness> find_forbidden_naive(const Word& w, Ratio bound,
                                                  const EpsProfile& prof);

/// Same check restricted to periods in [period_min, period_max).
std::optional<FactorWitness> find_forbidden_naive_range(const Word& w, Ratio bound,
                                                        const EpsProfile& prof,
                                                        Index period_min, Index period_max);

/// Smallest repeat length e <= max_repeat whose factor at period p violates
/// the bound, or nothing.
std::optional<Index> smallest_violating_repeat(Index p, Index max_repeat, Ratio bound,
                                               const EpsProfile& prof);

}  // namespace dejean
