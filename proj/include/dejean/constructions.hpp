#pragma once

#include "dejean/bc.hpp"

#include <map>

namespace dejean {

/// d- and q-blocks of the odd/even circular-word constructions, kept at the
/// bc level; code lengths follow the closed forms |d_i| = n+i+1 (odd) and
/// |d_{i,j}| = n+2j+6i-3 (even).
struct BlockSet {
    int n = 0;
    bool odd = false;

    // odd: d[i] for even i in [0, 2m+7); q/qp indexed by i in [0, m)
    std::map<int, BcWord> d_odd;
    std::vector<BcWord> q_odd, qp_odd;

    // even: d[i][j] for i in [0, h], j in [0, 3]; q/qp indexed [j][i], j < 3, i < h
    std::vector<std::array<BcWord, 4>> d_even;
    std::array<std::vector<BcWord>, 3> q_even, qp_even;
};

BlockSet build_blocks(int n);

/// The axial bc-roots: for every whole-q-block left rotation w_i of w0,
/// the d-block shifts w_i^- (leading d-block moved to the back), w_i^0 = w_i
/// and w_i^+ (trailing d-block moved to the front).
struct RootFamily {
    int n = 0;
    bool odd = false;
    int default_k = 3;
    BcWord w0;
    std::vector<BcWord> minus, zero, plus;
    // bc-level left-rotation offset of each root relative to w0
    std::vector<Index> minus_off, zero_off, plus_off;

    Index rotations() const { return static_cast<Index>(zero.size()); }
    Index total_roots() const { return 3 * rotations(); }
    // flat order: all of W^-, then W^0, then W^+
    const BcWord& root(Index flat) const;
    Index root_offset(Index flat) const;
    // the same rotation offset measured in code symbols
    Index code_offset(Index flat) const;
};

RootFamily build_roots(int n);

/// Smallest k >= 3 closing the premise (pi^k = identity for the w0 code).
int suggested_k(const RootFamily& fam);

/// Images f(phi(root)^k) with the canonical A0 premise, premise stripped.
/// Verifies the suffix-closure requirement (n-suffix equals the premise) and
/// fails hard if any root breaks it.
struct Materialized {
    int n = 0;
    int k = 0;
    Index L = 0;  // common image length, k * |phi(w0)|
    std::vector<Word> images;  // flat order matching RootFamily::root
};

Materialized materialize(const RootFamily& fam, int k);

/// Conjugacy classes of the materialized images (cyclic-rotation equality),
/// computed with the doubling oracle. Returned as lists of flat indices.
std::vector<std::vector<Index>> image_conjugacy_classes(const Materialized& m);

}  // namespace dejean
