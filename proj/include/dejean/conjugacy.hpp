#pragma once

#include "dejean/bc.hpp"

namespace dejean {

struct Permutation {
    std::vector<int> map;  // map[i] = image of i

    static Permutation identity(int n);
    int n() const { return static_cast<int>(map.size()); }
    int operator()(int i) const { return map[static_cast<std::size_t>(i)]; }
    /// (a * b)(x) = a(b(x))
    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    Permutation pow(long long e) const;
    int order() const;
    bool is_identity() const;
    bool operator==(const Permutation& o) const { return map == o.map; }

    /// Letterwise renaming: result[i] = sigma(w[i]).
    Word rename(const Word& w) const;
    /// One-line notation as a word: sigma(0) sigma(1) ... sigma(n-1).
    Word one_line() const;
};

/// Doubling trick: |u| == |v| and v occurs in u.u.
bool conjugate_oracle(const Word& u, const Word& v);

/// The permutation carrying the premise letters to the n-suffix of
/// decode(p, c): sigma(premise[t]) = suffix[t]. Requires |c| >= n.
Permutation induced_permutation(const Premise& p, const Code& c);

/// True iff pi_p == pi^m * pi_q for some m in [0, k). Requires pi^k == id.
bool orbit_test(const Permutation& pi, const Permutation& pi_p, const Permutation& pi_q, int k);

/// Lexicographically minimal one-line word over the orbit class
/// { pi^s * pi_i : s }, by the per-cycle congruence-fixing procedure.
Word canonical_form(const Permutation& pi, const Permutation& pi_i, int k);
/// Reference implementation: direct minimum over all s in [0, k).
Word canonical_form_bruteforce(const Permutation& pi, const Permutation& pi_i, int k);

/// A pair of shifts of one bc-root, identified by code-level offsets.
struct ConjInstance {
    BcWord root;
    Flavor flavor = Flavor::Rbc;
    int n = 0;
    int k = 3;
    Index p_off = 0;
    Index q_off = 0;
};

/// Canonical representative of shift p's conjugacy class.
Word canonical_conjugate(const ConjInstance& inst);
/// Orbit-test decision for the instance's (p, q) shift pair.
bool conjugate_shifts(const ConjInstance& inst);

/// Shift-prefix permutation pi_off = permutation of pref_off(phi(root)).
Permutation shift_permutation(const BcWord& root, Flavor f, int n, Index off);

}  // namespace dejean
