#pragma once

#include "dejean/word.hpp"

namespace dejean {

/// Period bands [R_i, R_{i+1}) with anchor step P_i per band. Valid schedules
/// satisfy R_i >= ceil((P_i + eps)/(f(n)-1)) with f(n) = n/(n-1), re-checked
/// in exact arithmetic on construction.
struct Schedule {
    int n = 0;
    Ratio eps = Ratio::integer(0);
    std::vector<Index> R;  // R_0 < ... < R_r = len
    std::vector<Index> P;  // P_0 < ... < P_{r-1}

    int bands() const { return static_cast<int>(P.size()); }
};

Schedule build_schedule(Index len, int n, Ratio eps, Index r0_min);

struct PrevArray {
    std::vector<Index> prew;  // distance to the previous equal letter, 0 if none
};

PrevArray previous_positions(const Word& w);

/// For band i, returns one entry per anchor a (0-based positions a >= R_i with
/// a == len (mod P_i)): the nearest position <= a - R_i holding w[a], or -1.
std::vector<Index> start_points(const Word& w, const Schedule& s, int band);

struct MaxRepTable {
    std::vector<Index> max_rep;   // indexed by period
    std::vector<Index> rep_start; // left-repeat start of the recorded maximum
};

/// Walks each anchor's candidate chain through the prew array, extends the
/// repeat around every (candidate, anchor) pair and records per-period maxima.
/// Covers periods in [R_i, R_{i+1}) exactly. Returns inner iteration count.
std::uint64_t max_repeat(const Word& w, const Schedule& s, int band, const PrevArray& prew,
                         const std::vector<Index>& points, MaxRepTable& table);

struct CheckResult {
    std::optional<FactorWitness> witness;
    int bands = 0;
    std::uint64_t iterations = 0;
    bool used_bc_shortcut = false;

    bool threshold() const { return !witness.has_value(); }
};

/// Scheduled forbidden-factor detector: brute force below R_0 (skipped above
/// 3n-2 for rule-conforming bc-coded words with 1 in E), banded scan above.
/// Existence verdict matches find_forbidden_naive with bound n/(n-1); the
/// witness may differ. jobs > 1 runs bands in parallel; jobs == 1 is the
/// serial reference; jobs == 0 picks the default.
CheckResult check_fast_stats(const Word& w, int n, const EpsProfile& prof, int jobs = 0);

std::optional<FactorWitness> check_fast(const Word& w, int n, const EpsProfile& prof,
                                        int jobs = 0);

}  // namespace dejean
