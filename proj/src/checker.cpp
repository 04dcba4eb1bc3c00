#include "dejean/checker.hpp"

#include "dejean/bc.hpp"
#include "dejean/pansiot.hpp"

#include <algorithm>
#include <cmath>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace dejean {

namespace {

using i128 = __int128;

// smallest integer >= eps*(n-1), at least 1
Index eps_margin(Ratio eps, int n) {
    i128 num = static_cast<i128>(eps.num) * (n - 1);
    Index ceil_v = static_cast<Index>((num + eps.den - 1) / eps.den);
    return std::max<Index>(1, ceil_v);
}

// exact check of alg1 condition 2: R >= ceil((P + eps) / (f(n) - 1))
bool band_condition_holds(Index R, Index P, Ratio eps, int n) {
    // (P + eps)/(1/(n-1)) = (P + eps)*(n-1) <= R
    i128 lhs = (static_cast<i128>(P) * eps.den + eps.num) * (n - 1);
    return lhs <= static_cast<i128>(R) * eps.den;
}

}  // namespace

Schedule build_schedule(Index len, int n, Ratio eps, Index r0_min) {
    if (n < 2) throw std::invalid_argument("build_schedule: n must be >= 2");
    Schedule s;
    s.n = n;
    s.eps = eps;
    Index p0 = std::max<Index>(1, (r0_min - 1) / (n - 1));
    const Index margin = eps_margin(eps, n);

    if (len - 1 < p0 * (n - 1) + margin) {
        s.R = {len};  // degenerate: nothing to band, brute force handles it all
        return s;
    }
    int r = static_cast<int>(std::floor(std::log(static_cast<double>(len - 1) /
                                                 static_cast<double>(p0 * (n - 1)))));
    r = std::max(r, 1);
    Index prev_p = 0;
    for (int i = 0; i < r; ++i) {
        Index p = static_cast<Index>(std::ceil(static_cast<double>(p0) * std::exp(i)));
        p = std::max(p, prev_p + 1);
        Index R = p * (n - 1) + margin;
        if (R >= len) break;  // band start past the word; stop early
        s.P.push_back(p);
        s.R.push_back(R);
        prev_p = p;
    }
    if (s.P.empty()) {
        s.R = {len};
        return s;
    }
    s.R.push_back(len);
    for (std::size_t i = 0; i < s.P.size(); ++i)
        if (!band_condition_holds(s.R[i], s.P[i], eps, n))
            throw std::logic_error("schedule violates the band condition");
    return s;
}

PrevArray previous_positions(const Word& w) {
    PrevArray r;
    r.prew.assign(w.letters.size(), 0);
    std::vector<Index> last(static_cast<std::size_t>(w.n), -1);
    for (Index j = 0; j < w.size(); ++j) {
        Index& l = last[static_cast<std::size_t>(w[j])];
        if (l >= 0) r.prew[static_cast<std::size_t>(j)] = j - l;
        l = j;
    }
    return r;
}

std::vector<Index> start_points(const Word& w, const Schedule& s, int band) {
    if (band < 0 || band >= s.bands()) throw std::out_of_range("band out of range");
    const Index len = w.size();
    const Index P = s.P[static_cast<std::size_t>(band)];
    const Index R = s.R[static_cast<std::size_t>(band)];
    std::vector<Index> points;
    // anchors: a in [R, len) with a == len (mod P); one sweep answers every
    // "nearest occurrence of w[a] at position <= a - R" query in order
    Index first = R + ((len - R) % P);
    if (first >= len) return points;
    std::vector<Index> last(static_cast<std::size_t>(w.n), -1);
    Index pos = 0;
    for (Index a = first; a < len; a += P) {
        const Index limit = a - R;
        while (pos <= limit) {
            last[static_cast<std::size_t>(w[pos])] = pos;
            ++pos;
        }
        points.push_back(last[static_cast<std::size_t>(w[a])]);
    }
    return points;
}

std::uint64_t max_repeat(const Word& w, const Schedule& s, int band, const PrevArray& prew,
                         const std::vector<Index>& points, MaxRepTable& table) {
    const Index len = w.size();
    const Index P = s.P[static_cast<std::size_t>(band)];
    const Index R = s.R[static_cast<std::size_t>(band)];
    const Index Rnext = s.R[static_cast<std::size_t>(band) + 1];
    std::uint64_t iters = 0;

    Index first = R + ((len - R) % P);
    std::size_t idx = 0;
    for (Index a = first; a < len; a += P, ++idx) {
        for (Index c = points[idx]; c >= 0 && c > a - Rnext; c -= prew.prew[static_cast<std::size_t>(c)]) {
            ++iters;
            // extend the guaranteed anchor match w[c] == w[a] on both sides
            Index l = 0;
            while (c - 1 - l >= 0 && w[c - 1 - l] == w[a - 1 - l]) { ++l; ++iters; }
            Index rr = 0;
            while (a + 1 + rr < len && w[c + 1 + rr] == w[a + 1 + rr]) { ++rr; ++iters; }
            const Index p = a - c;
            const Index rep = l + rr + 1;
            if (rep > table.max_rep[static_cast<std::size_t>(p)]) {
                table.max_rep[static_cast<std::size_t>(p)] = rep;
                table.rep_start[static_cast<std::size_t>(p)] = c - l;
            }
            if (prew.prew[static_cast<std::size_t>(c)] == 0) break;
        }
    }
    return iters;
}

namespace {

bool bc_shortcut_applies(const Word& w, int n, const EpsProfile& prof) {
    if (n < 5) return false;
    if (!prof.is_exempt(1)) return false;
    if (Ratio::of(1, n - 1) < prof.epsilon) return false;
    if (w.size() < n) return false;
    try {
        auto [p, c] = encode(w);
        (void)p;
        return !tile_flavors(c).empty() && validate_bc_rule(c);
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

CheckResult check_fast_stats(const Word& w, int n, const EpsProfile& prof, int jobs) {
    CheckResult res;
    const Index len = w.size();
    if (len == 0) return res;
    const Ratio bound = repetition_threshold(n);

    const bool shortcut = bc_shortcut_applies(w, n, prof);
    res.used_bc_shortcut = shortcut;
    const Index r0_min = shortcut ? 3 * static_cast<Index>(n) - 2 : n;
    const Index small_from = shortcut ? r0_min : 1;

    Schedule s = build_schedule(len, n, prof.epsilon, r0_min);
    res.bands = s.bands();
    const Index banded_from = s.bands() > 0 ? s.R.front() : len;

    // periods below the first band, the paper's bc-rule skip applied
    if (small_from < banded_from)
        if (auto wit = find_forbidden_naive_range(w, bound, prof, small_from, banded_from)) {
            res.witness = wit;
            return res;
        }
    if (s.bands() == 0) return res;

    PrevArray prew = previous_positions(w);
    MaxRepTable table;
    table.max_rep.assign(static_cast<std::size_t>(len), 0);
    table.rep_start.assign(static_cast<std::size_t>(len), 0);

#if defined(_OPENMP)
    if (jobs == 0) jobs = omp_get_max_threads();
#else
    if (jobs == 0) jobs = 1;
#endif

    std::uint64_t iters = 0;
    if (jobs > 1 && s.bands() > 1) {
        // bands write to disjoint period ranges; only the counter is reduced
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs) reduction(+ : iters)
#endif
        for (int i = 0; i < s.bands(); ++i) {
            std::vector<Index> pts = start_points(w, s, i);
            iters += max_repeat(w, s, i, prew, pts, table);
        }
    } else {
        for (int i = 0; i < s.bands(); ++i) {
            std::vector<Index> pts = start_points(w, s, i);
            iters += max_repeat(w, s, i, prew, pts, table);
        }
    }
    res.iterations = iters;

    for (Index p = banded_from; p < len; ++p) {
        const Index rep = table.max_rep[static_cast<std::size_t>(p)];
        if (rep == 0) continue;
        if (auto e = smallest_violating_repeat(p, rep, bound, prof)) {
            Index start = table.rep_start[static_cast<std::size_t>(p)];
            res.witness = FactorWitness{start, p + *e, p};
            return res;
        }
    }
    return res;
}

std::optional<FactorWitness> check_fast(const Word& w, int n, const EpsProfile& prof, int jobs) {
    return check_fast_stats(w, n, prof, jobs).witness;
}

}  // namespace dejean
