#include "dejean/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace dejean {

namespace {

using i128 = __int128;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Index lcp_len(const Word& a, const Word& b) {
    Index m = std::min(a.size(), b.size());
    Index i = 0;
    while (i < m && a[i] == b[i]) ++i;
    return i;
}

Index lcs_len(const Word& a, const Word& b) {
    Index m = std::min(a.size(), b.size());
    Index i = 0;
    while (i < m && a[a.size() - 1 - i] == b[b.size() - 1 - i]) ++i;
    return i;
}

// exact test of (len + eps*chi)/per <= n/(n-1)
bool within_threshold(Index len, Index per, bool chi, Ratio eps, int n) {
    if (per <= 0) return true;
    i128 lhs = (static_cast<i128>(len) * eps.den + (chi ? eps.num : 0)) * (n - 1);
    i128 rhs = static_cast<i128>(n) * per * eps.den;
    return lhs <= rhs;
}

// exact test of eps + extra <= L/(n-1)
bool within_c3(Index extra, Ratio eps, Index L, int n) {
    i128 lhs = (static_cast<i128>(eps.num) + static_cast<i128>(extra) * eps.den) * (n - 1);
    return lhs <= static_cast<i128>(L) * eps.den;
}

struct PairTables {
    std::vector<std::vector<Index>> lcp, lcs;
};

PairTables pair_tables(const std::vector<const Word*>& flat) {
    const std::size_t t = flat.size();
    PairTables pt;
    pt.lcp.assign(t, std::vector<Index>(t, 0));
    pt.lcs.assign(t, std::vector<Index>(t, 0));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            if (i == j) continue;
            pt.lcp[i][j] = lcp_len(*flat[i], *flat[j]);
            pt.lcs[i][j] = lcs_len(*flat[i], *flat[j]);
        }
    return pt;
}

struct PairOutcome {
    bool checked = false;
    std::optional<FactorWitness> witness;
};

/// Runs check_fast on every listed concatenation; deterministic first-failure
/// selection regardless of thread interleaving.
ConditionVerdict pairwise_condition(const std::string& name, const ImageFamily& fam,
                                    const std::vector<std::pair<int, int>>& pairs, int n,
                                    const EpsProfile& prof, int jobs) {
    auto t0 = Clock::now();
    std::vector<PairOutcome> out(pairs.size());
    const int total = static_cast<int>(pairs.size());
#if defined(_OPENMP)
    if (jobs == 0) jobs = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, jobs))
#endif
    for (int t = 0; t < total; ++t) {
        const auto [i, j] = pairs[static_cast<std::size_t>(t)];
        Word uv = concat(fam.image(i), fam.image(j));
        out[static_cast<std::size_t>(t)] =
            PairOutcome{true, check_fast(uv, n, prof, 1)};
    }
    ConditionVerdict v{name, true, "", std::nullopt, 0.0};
    int failures = 0;
    for (int t = 0; t < total; ++t) {
        if (!out[static_cast<std::size_t>(t)].witness) continue;
        ++failures;
        if (v.pass) {
            v.pass = false;
            v.witness = out[static_cast<std::size_t>(t)].witness;
            const auto [i, j] = pairs[static_cast<std::size_t>(t)];
            v.detail = "pair (" + std::to_string(i) + "," + std::to_string(j) + ") has a forbidden factor";
        }
    }
    if (v.pass) v.detail = std::to_string(total) + " pairs checked";
    else v.detail += "; " + std::to_string(failures) + "/" + std::to_string(total) + " pairs fail";
    v.seconds = since(t0);
    return v;
}

ConditionVerdict primitivity_condition(const std::string& name, const ImageFamily& fam) {
    auto t0 = Clock::now();
    ConditionVerdict v{name, true, "", std::nullopt, 0.0};
    auto flat = fam.flattened();
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (period(*flat[i]) != flat[i]->size()) {
            v.pass = false;
            v.detail = "image " + std::to_string(i) + " is not primitive";
            v.witness = FactorWitness{0, flat[i]->size(), period(*flat[i])};
            break;
        }
    }
    if (v.pass) v.detail = std::to_string(flat.size()) + " images primitive";
    v.seconds = since(t0);
    return v;
}

std::vector<std::pair<int, int>> ordered_distinct_pairs(const ImageFamily& fam, bool cross_only) {
    std::vector<std::pair<int, int>> pairs;
    const int total = static_cast<int>(fam.total_images());
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j) {
            if (i == j) continue;
            if (cross_only && fam.letter_of(i) == fam.letter_of(j)) continue;
            pairs.emplace_back(i, j);
        }
    return pairs;
}

}  // namespace

FamilyStats family_stats(const ImageFamily& fam) {
    auto flat = fam.flattened();
    if (flat.size() < 2) throw std::invalid_argument("family_stats needs at least 2 images");
    FamilyStats st;
    st.L = fam.L;
    for (std::size_t i = 0; i < flat.size(); ++i)
        for (std::size_t j = 0; j < flat.size(); ++j) {
            if (i == j) continue;
            Index p = lcp_len(*flat[i], *flat[j]);
            Index s = lcs_len(*flat[i], *flat[j]);
            st.l_V = std::max(st.l_V, p);
            st.r_V = std::max(st.r_V, s);
            if (fam.letter_of(static_cast<int>(i)) != fam.letter_of(static_cast<int>(j))) {
                st.lcp_Vn = std::max(st.lcp_Vn, p);
                st.lcs_Vn = std::max(st.lcs_Vn, s);
            }
        }
    st.epsilon = Ratio::of(st.l_V + st.r_V, st.L - 1);
    return st;
}

bool VerificationReport::pass() const {
    for (const auto& c : conditions)
        if (!c.pass) return false;
    return true;
}

const ConditionVerdict* VerificationReport::find(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

bool check_C3(const ImageFamily& fam, int n) {
    FamilyStats st = family_stats(fam);
    bool direct = within_c3(st.l_V + st.r_V, st.epsilon, st.L, n);
    bool equivalent = (st.l_V + st.r_V) * (n - 1) <= st.L - 1;
    if (direct != equivalent) throw std::logic_error("C3 forms disagree");
    return direct;
}

VerificationReport check_l2(const ImageFamily& fam, int n, int jobs) {
    VerificationReport rep;
    auto t0 = Clock::now();
    const Index total = fam.total_images();
    if (total < 3 * n || fam.L < 6 * (n - 1)) {
        rep.conditions.push_back({"l2.pre", false,
                                  "need |V| >= 3n and L >= 6(n-1), got |V|=" + std::to_string(total) +
                                      " L=" + std::to_string(fam.L),
                                  std::nullopt, since(t0)});
        return rep;
    }
    rep.conditions.push_back({"l2.pre", true, "|V|=" + std::to_string(total), std::nullopt, since(t0)});

    FamilyStats st = family_stats(fam);
    rep.conditions.push_back(primitivity_condition("l2.c1", fam));
    rep.conditions.push_back(pairwise_condition("l2.c2", fam, ordered_distinct_pairs(fam, false), n,
                                                EpsProfile::standard(st.epsilon), jobs));

    // c3: eps + lcp(u, v) + lcs(v', w) <= L/(n-1) over u != w outside V_a, v, v' in V_a
    auto t1 = Clock::now();
    auto flat = fam.flattened();
    PairTables pt = pair_tables(flat);
    ConditionVerdict c3{"l2.c3", true, "", std::nullopt, 0.0};
    const int tot = static_cast<int>(total);
    for (int a = 0; a < fam.source_letters() && c3.pass; ++a) {
        for (int u = 0; u < tot && c3.pass; ++u) {
            if (fam.letter_of(u) == a) continue;
            for (int w = 0; w < tot && c3.pass; ++w) {
                if (w == u || fam.letter_of(w) == a) continue;
                Index best = 0;
                for (std::size_t sv = 0; sv < fam.images[static_cast<std::size_t>(a)].size(); ++sv)
                    for (std::size_t sv2 = 0; sv2 < fam.images[static_cast<std::size_t>(a)].size(); ++sv2) {
                        int v1 = fam.flat_id(a, static_cast<int>(sv));
                        int v2 = fam.flat_id(a, static_cast<int>(sv2));
                        best = std::max(best, pt.lcp[static_cast<std::size_t>(u)][static_cast<std::size_t>(v1)] +
                                                  pt.lcs[static_cast<std::size_t>(v2)][static_cast<std::size_t>(w)]);
                    }
                if (!within_c3(best, st.epsilon, fam.L, n)) {
                    c3.pass = false;
                    c3.detail = "letter " + std::to_string(a) + ", pair (" + std::to_string(u) + "," +
                                std::to_string(w) + "): lcp+lcs = " + std::to_string(best);
                }
            }
        }
    }
    if (c3.pass) c3.detail = "all letter classes within L/(n-1)";
    c3.seconds = since(t1);
    rep.conditions.push_back(std::move(c3));
    return rep;
}

VerificationReport check_l1(const ImageFamily& fam, int n, int k, int jobs) {
    VerificationReport rep;
    auto t0 = Clock::now();
    bool bijective = true;
    for (const auto& v : fam.images)
        if (v.size() != 1) bijective = false;
    if (!bijective || fam.total_images() != n + k) {
        rep.conditions.push_back({"l1.pre", false,
                                  "need a bijective family of n+k images, got " +
                                      std::to_string(fam.total_images()),
                                  std::nullopt, since(t0)});
        return rep;
    }
    rep.conditions.push_back({"l1.pre", true, "|V|=" + std::to_string(n + k), std::nullopt, since(t0)});
    rep.conditions.push_back(primitivity_condition("l1.c1", fam));
    rep.conditions.push_back(pairwise_condition("l1.c2", fam, ordered_distinct_pairs(fam, false), n,
                                                EpsProfile::plain(), jobs));

    auto t1 = Clock::now();
    auto flat = fam.flattened();
    PairTables pt = pair_tables(flat);
    ConditionVerdict c3{"l1.c3", true, "", std::nullopt, 0.0};
    const int tot = static_cast<int>(flat.size());
    for (int u = 0; u < tot && c3.pass; ++u)
        for (int v = 0; v < tot && c3.pass; ++v)
            for (int w = 0; w < tot && c3.pass; ++w) {
                if (u == v || v == w || u == w) continue;
                Index sum = pt.lcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] +
                            pt.lcp[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
                if (sum * (n - 1) > fam.L) {
                    c3.pass = false;
                    c3.detail = "triple (" + std::to_string(u) + "," + std::to_string(v) + "," +
                                std::to_string(w) + "): lcs+lcp = " + std::to_string(sum);
                }
            }
    if (c3.pass) c3.detail = "all triples within L/(n-1)";
    c3.seconds = since(t1);
    rep.conditions.push_back(std::move(c3));
    return rep;
}

VerificationReport check_family_for_substitution(const ImageFamily& fam, int n, int jobs) {
    VerificationReport rep;
    FamilyStats st = family_stats(fam);
    rep.conditions.push_back(primitivity_condition("c1", fam));
    auto t0 = Clock::now();
    bool c3 = check_C3(fam, n);
    rep.conditions.push_back(
        {"C3", c3, "eps = " + st.epsilon.str() + ", l_V = " + std::to_string(st.l_V) +
                       ", r_V = " + std::to_string(st.r_V),
         std::nullopt, since(t0)});
    rep.conditions.push_back(pairwise_condition("c2.cross", fam, ordered_distinct_pairs(fam, true), n,
                                                EpsProfile::standard(st.epsilon), jobs));
    return rep;
}

std::optional<FactorWitness> windowed_pair_check(const Word& u, const Word& v, Index window,
                                                 int n, const EpsProfile& prof) {
    Index wu = std::min(window, u.size());
    Index wv = std::min(window, v.size());
    Word joined = concat(factor(u, u.size() - wu, wu), factor(v, 0, wv));
    return check_fast(joined, n, prof);
}

// ---------------------------------------------------------------------------
// uf-conditions

namespace {

struct UfContext {
    const ImageFamily& fam;
    const DeltaRelation& rel;
    std::vector<const Word*> flat;
    PairTables pt;
    Ratio eps;  // Lemma-4 convention: eps*(L-1) = lcp_Vn + lcs_Vn
    std::vector<int> exempt;
    int n;
    Index L;

    bool chi(Index repeat_len) const {
        return !std::binary_search(exempt.begin(), exempt.end(), static_cast<int>(repeat_len));
    }
    bool edge(int u, int v) const {
        int b = fam.letter_of(v);
        const auto& succ = rel.allowed[static_cast<std::size_t>(u)][static_cast<std::size_t>(b)];
        return std::find(succ.begin(), succ.end(), v) != succ.end();
    }
    bool eq(const Word& a, Index off_a, const Word& b, Index off_b, Index len) const {
        for (Index t = 0; t < len; ++t)
            if (a[off_a + t] != b[off_b + t]) return false;
        return true;
    }
    // (len + eps*chi)/per <= RT(n), with possible delta*L added to both sides
    bool es_ok(Index delta, Index len, Index per, bool chi_flag) const {
        return within_threshold(delta * L + len, delta * L + per, chi_flag, eps, n);
    }
};

void uf_fail(ConditionVerdict& v, const std::string& what) {
    if (v.pass) {
        v.pass = false;
        v.detail = what;
    }
}

// u1 = a x y z x, v1 = y a  ->  xyzxy es-check (uf2.1.1)
// u1 = a x, v1 = y z x y a  ->  same factor     (uf2.1.3)
void check_uf21_chained(const UfContext& cx, ConditionVerdict& v211, ConditionVerdict& v213) {
    const Index L = cx.L;
    const int tot = static_cast<int>(cx.flat.size());
    for (int u = 0; u < tot; ++u)
        for (int w = 0; w < tot; ++w) {
            if (cx.fam.letter_of(u) == cx.fam.letter_of(w) || !cx.edge(u, w)) continue;
            const Word& U = *cx.flat[static_cast<std::size_t>(u)];
            const Word& V = *cx.flat[static_cast<std::size_t>(w)];
            // uf2.1.1: v1 = y . a, u1 = a . (x y z x)
            for (Index ly = 0; ly <= L && v211.pass; ++ly) {
                const Index la = L - ly;
                if (!cx.eq(U, 0, V, ly, la)) continue;  // u1 starts with a
                const Index rest = L - la;              // x y z x inside u1
                for (Index lx = 0; 2 * lx + ly <= rest; ++lx) {
                    if (lx + ly == 0) continue;
                    if (!cx.eq(U, la, U, L - lx, lx)) continue;          // prefix x == suffix x
                    if (!cx.eq(U, la + lx, V, 0, ly)) continue;          // y matches
                    const Index lz = rest - 2 * lx - ly;
                    if (!cx.es_ok(0, 2 * (lx + ly) + lz, lx + ly + lz, cx.chi(lx + ly)))
                        uf_fail(v211, "images (" + std::to_string(u) + "," + std::to_string(w) +
                                          ") ly=" + std::to_string(ly) + " lx=" + std::to_string(lx));
                }
            }
            // uf2.1.3: u1 = a . x, v1 = (y z x y) . a
            for (Index la = 0; la <= L && v213.pass; ++la) {
                const Index lx = L - la;
                if (!cx.eq(U, 0, V, L - la, la)) continue;  // shared a
                const Index body = L - la;                  // y z x y inside v1
                for (Index ly = 0; 2 * ly <= body && v213.pass; ++ly) {
                    if (lx + ly == 0) continue;
                    if (body < 2 * ly + lx) continue;
                    if (!cx.eq(V, 0, V, body - ly, ly)) continue;             // the two y
                    if (!cx.eq(U, la, V, body - ly - lx, lx)) continue;       // x matches u1 suffix
                    const Index lz = body - 2 * ly - lx;
                    if (!cx.es_ok(0, 2 * (lx + ly) + lz, lx + ly + lz, cx.chi(lx + ly)))
                        uf_fail(v213, "images (" + std::to_string(u) + "," + std::to_string(w) +
                                          ") la=" + std::to_string(la) + " ly=" + std::to_string(ly));
                }
            }
        }
}

}  // namespace

VerificationReport check_uf(const ImageFamily& fam, const DeltaRelation& rel,
                            const EpsProfile& prof) {
    VerificationReport rep;
    UfContext cx{fam, rel, fam.flattened(), {}, Ratio::integer(0), prof.exempt, fam.n, fam.L};
    cx.pt = pair_tables(cx.flat);
    FamilyStats st = family_stats(fam);
    cx.eps = Ratio::of(st.lcp_Vn + st.lcs_Vn, st.L - 1);
    const int tot = static_cast<int>(cx.flat.size());
    const Index L = fam.L;
    const int n = fam.n;

    // uf1.1: primitivity
    rep.conditions.push_back(primitivity_condition("uf1.1", fam));

    // uf1.2: no suffix of u equals a prefix of v for images of distinct letters
    {
        auto t0 = Clock::now();
        ConditionVerdict v{"uf1.2", true, "", std::nullopt, 0.0};
        for (int u = 0; u < tot && v.pass; ++u)
            for (int w = 0; w < tot && v.pass; ++w) {
                if (fam.letter_of(u) == fam.letter_of(w)) continue;
                const Word& U = *cx.flat[static_cast<std::size_t>(u)];
                const Word& V = *cx.flat[static_cast<std::size_t>(w)];
                for (Index l = 1; l <= L; ++l)
                    if (cx.eq(U, L - l, V, 0, l)) {
                        uf_fail(v, "suff_" + std::to_string(l) + "(" + std::to_string(u) +
                                       ") == pref(" + std::to_string(w) + ")");
                        break;
                    }
            }
        if (v.pass) v.detail = "no cross-letter suffix/prefix overlap";
        v.seconds = since(t0);
        rep.conditions.push_back(std::move(v));
    }

    // uf2.1.1 / uf2.1.3
    ConditionVerdict v211{"uf2.1.1", true, "", std::nullopt, 0.0};
    ConditionVerdict v213{"uf2.1.3", true, "", std::nullopt, 0.0};
    {
        auto t0 = Clock::now();
        check_uf21_chained(cx, v211, v213);
        v211.seconds = v213.seconds = since(t0);
        if (v211.pass) v211.detail = "all decompositions exponential";
        if (v213.pass) v213.detail = "all decompositions exponential";
    }
    rep.conditions.push_back(std::move(v211));
    rep.conditions.push_back(std::move(v213));

    // uf2.1.2: u = a x y, v = z x a over distinct letters, delta-distance gap
    {
        auto t0 = Clock::now();
        ConditionVerdict v{"uf2.1.2", true, "", std::nullopt, 0.0};
        for (int u = 0; u < tot && v.pass; ++u)
            for (int w = 0; w < tot && v.pass; ++w) {
                if (u == w || fam.letter_of(u) == fam.letter_of(w)) continue;
                auto dist = delta_distance(rel, fam, u, w);
                if (!dist) continue;  // never adjacent in any image
                const Word& U = *cx.flat[static_cast<std::size_t>(u)];
                const Word& V = *cx.flat[static_cast<std::size_t>(w)];
                for (Index la = 0; la <= L && v.pass; ++la) {
                    if (!cx.eq(U, 0, V, L - la, la)) continue;  // shared a
                    for (Index lx = 1; la + lx <= L && v.pass; ++lx) {
                        if (L - la - lx < 0) break;
                        if (!cx.eq(U, la, V, L - la - lx, lx)) continue;  // shared x
                        const Index ly = L - la - lx;
                        const Index lz = L - la - lx;
                        if (!cx.es_ok(*dist, 2 * lx + ly + lz, lx + ly + lz, cx.chi(lx)))
                            uf_fail(v, "images (" + std::to_string(u) + "," + std::to_string(w) +
                                           ") la=" + std::to_string(la) + " lx=" + std::to_string(lx));
                    }
                }
            }
        if (v.pass) v.detail = "all split-repeat pairs exponential";
        v.seconds = since(t0);
        rep.conditions.push_back(std::move(v));
    }

    // uf2.2.1: u = a x, v = y z1, w = z2 x y a, three distinct letters
    {
        auto t0 = Clock::now();
        ConditionVerdict v{"uf2.2.1", true, "", std::nullopt, 0.0};
        for (int u = 0; u < tot && v.pass; ++u)
            for (int q = 0; q < tot && v.pass; ++q) {
                if (!cx.edge(u, q)) continue;
                for (int w = 0; w < tot && v.pass; ++w) {
                    std::set<int> letters{fam.letter_of(u), fam.letter_of(q), fam.letter_of(w)};
                    if (letters.size() != 3) continue;
                    auto dist = delta_distance(rel, fam, q, w);
                    if (!dist) continue;
                    const Word& U = *cx.flat[static_cast<std::size_t>(u)];
                    const Word& Q = *cx.flat[static_cast<std::size_t>(q)];
                    const Word& W = *cx.flat[static_cast<std::size_t>(w)];
                    for (Index la = 0; la <= L && v.pass; ++la) {
                        const Index lx = L - la;
                        if (!cx.eq(U, 0, W, L - la, la)) continue;  // shared a
                        for (Index ly = 0; la + ly <= L && v.pass; ++ly) {
                            if (L - la - ly - lx < 0) break;
                            if (!cx.eq(Q, 0, W, L - la - ly, ly)) continue;   // shared y
                            if (!cx.eq(U, la, W, L - la - ly - lx, lx)) continue;  // shared x
                            const Index lz1 = L - ly;
                            const Index lz2 = L - la - ly - lx;
                            if (lx + ly == 0) continue;
                            if (!cx.es_ok(*dist, 2 * (lx + ly) + lz1 + lz2, lx + ly + lz1 + lz2,
                                          cx.chi(lx + ly)))
                                uf_fail(v, "images (" + std::to_string(u) + "," + std::to_string(q) +
                                               "," + std::to_string(w) + ")");
                        }
                    }
                }
            }
        if (v.pass) v.detail = "all chained triples exponential";
        v.seconds = since(t0);
        rep.conditions.push_back(std::move(v));
    }

    // uf2.2.2: u1 = a x, v1 = y z x, w1 = y a along one delta chain
    {
        auto t0 = Clock::now();
        ConditionVerdict v{"uf2.2.2", true, "", std::nullopt, 0.0};
        for (int u = 0; u < tot && v.pass; ++u)
            for (int q = 0; q < tot && v.pass; ++q) {
                if (!cx.edge(u, q)) continue;
                for (int w = 0; w < tot && v.pass; ++w) {
                    if (!cx.edge(q, w)) continue;
                    std::set<int> letters{fam.letter_of(u), fam.letter_of(q), fam.letter_of(w)};
                    if (letters.size() != 3) continue;
                    const Word& U = *cx.flat[static_cast<std::size_t>(u)];
                    const Word& Q = *cx.flat[static_cast<std::size_t>(q)];
                    const Word& W = *cx.flat[static_cast<std::size_t>(w)];
                    for (Index la = 0; la <= L && v.pass; ++la) {
                        const Index lx = L - la;
                        const Index ly = L - la;
                        if (!cx.eq(W, ly, U, 0, la)) continue;        // shared a
                        if (!cx.eq(Q, L - lx, U, la, lx)) continue;   // shared x
                        if (!cx.eq(Q, 0, W, 0, ly)) continue;         // shared y (v1 and w1)
                        const Index lz = L - ly - lx;
                        if (lz < 0 || lx + ly == 0) continue;
                        if (!cx.es_ok(0, 2 * (lx + ly) + lz, lx + ly + lz, cx.chi(lx + ly)))
                            uf_fail(v, "images (" + std::to_string(u) + "," + std::to_string(q) + "," +
                                           std::to_string(w) + ") la=" + std::to_string(la));
                    }
                }
            }
        if (v.pass) v.detail = "all chained triples exponential";
        v.seconds = since(t0);
        rep.conditions.push_back(std::move(v));
    }

    // uf2.2.3: u = a x y z1, v = z2 x, w = y a, three distinct letters
    {
        auto t0 = Clock::now();
        ConditionVerdict v{"uf2.2.3", true, "", std::nullopt, 0.0};
        for (int u = 0; u < tot && v.pass; ++u)
            for (int q = 0; q < tot && v.pass; ++q) {
                for (int w = 0; w < tot && v.pass; ++w) {
                    if (!cx.edge(q, w)) continue;
                    std::set<int> letters{fam.letter_of(u), fam.letter_of(q), fam.letter_of(w)};
                    if (letters.size() != 3) continue;
                    auto dist = delta_distance(rel, fam, u, q);
                    if (!dist) continue;
                    const Word& U = *cx.flat[static_cast<std::size_t>(u)];
                    const Word& Q = *cx.flat[static_cast<std::size_t>(q)];
                    const Word& W = *cx.flat[static_cast<std::size_t>(w)];
                    for (Index la = 0; la <= L && v.pass; ++la) {
                        const Index ly = L - la;
                        if (!cx.eq(W, ly, U, 0, la)) continue;  // shared a (w = y a)
                        for (Index lx = 0; la + lx + ly <= L && v.pass; ++lx) {
                            if (!cx.eq(Q, L - lx, U, la, lx)) continue;       // shared x
                            if (!cx.eq(W, 0, U, la + lx, ly)) continue;       // shared y
                            const Index lz1 = L - la - lx - ly;
                            const Index lz2 = L - lx;
                            if (lx + ly == 0) continue;
                            if (!cx.es_ok(*dist, 2 * (lx + ly) + lz1 + lz2, lx + ly + lz1 + lz2,
                                          cx.chi(lx + ly)))
                                uf_fail(v, "images (" + std::to_string(u) + "," + std::to_string(q) +
                                               "," + std::to_string(w) + ")");
                        }
                    }
                }
            }
        if (v.pass) v.detail = "all gapped triples exponential";
        v.seconds = since(t0);
        rep.conditions.push_back(std::move(v));
    }

    // uf2.3: u1 = a x, v1 = y z1, u2 = z2 x, v2 = y a, four distinct letters
    {
        auto t0 = Clock::now();
        ConditionVerdict v{"uf2.3", true, "", std::nullopt, 0.0};
        for (int u1 = 0; u1 < tot && v.pass; ++u1)
            for (int v1 = 0; v1 < tot && v.pass; ++v1) {
                if (!cx.edge(u1, v1)) continue;
                for (int u2 = 0; u2 < tot && v.pass; ++u2)
                    for (int v2 = 0; v2 < tot && v.pass; ++v2) {
                        if (!cx.edge(u2, v2)) continue;
                        std::set<int> letters{fam.letter_of(u1), fam.letter_of(v1),
                                              fam.letter_of(u2), fam.letter_of(v2)};
                        if (letters.size() != 4) continue;
                        auto dist = delta_distance(rel, fam, v1, u2);
                        if (!dist) continue;
                        const Word& U1 = *cx.flat[static_cast<std::size_t>(u1)];
                        const Word& V1 = *cx.flat[static_cast<std::size_t>(v1)];
                        const Word& U2 = *cx.flat[static_cast<std::size_t>(u2)];
                        const Word& V2 = *cx.flat[static_cast<std::size_t>(v2)];
                        for (Index la = 0; la <= L && v.pass; ++la) {
                            const Index lx = L - la;
                            const Index ly = L - la;
                            if (!cx.eq(V2, ly, U1, 0, la)) continue;  // shared a
                            if (!cx.eq(U2, L - lx, U1, la, lx)) continue;  // shared x
                            if (!cx.eq(V1, 0, V2, 0, ly)) continue;        // shared y
                            const Index lz1 = L - ly;
                            const Index lz2 = L - lx;
                            if (lx + ly == 0) continue;
                            if (!cx.es_ok(*dist, 2 * (lx + ly) + lz1 + lz2, lx + ly + lz1 + lz2,
                                          cx.chi(lx + ly)))
                                uf_fail(v, "images (" + std::to_string(u1) + "," + std::to_string(v1) +
                                               "," + std::to_string(u2) + "," + std::to_string(v2) + ")");
                        }
                    }
            }
        if (v.pass) v.detail = "all separated pairs exponential";
        v.seconds = since(t0);
        rep.conditions.push_back(std::move(v));
    }

    // uf3.1: lcp(u1, u2) <= L - lcs(Vn) - eps and symmetrically
    {
        auto t0 = Clock::now();
        ConditionVerdict v{"uf3.1", true, "", std::nullopt, 0.0};
        for (int u = 0; u < tot && v.pass; ++u)
            for (int w = 0; w < tot && v.pass; ++w) {
                if (u == w) continue;
                Index p = cx.pt.lcp[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
                Index s = cx.pt.lcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
                // p <= L - lcs_Vn - eps, exact via (p + lcs_Vn)*den + num <= L*den
                i128 lhs1 = (static_cast<i128>(p) + st.lcs_Vn) * cx.eps.den + cx.eps.num;
                i128 lhs2 = (static_cast<i128>(s) + st.lcp_Vn) * cx.eps.den + cx.eps.num;
                if (lhs1 > static_cast<i128>(L) * cx.eps.den || lhs2 > static_cast<i128>(L) * cx.eps.den)
                    uf_fail(v, "pair (" + std::to_string(u) + "," + std::to_string(w) + ") overlaps too much");
            }
        if (v.pass) v.detail = "all pairwise overlaps bounded";
        v.seconds = since(t0);
        rep.conditions.push_back(std::move(v));
    }

    // uf3.2: u = a x, v = z a on a delta edge; L(n-1) period wrap
    {
        auto t0 = Clock::now();
        ConditionVerdict v{"uf3.2", true, "", std::nullopt, 0.0};
        for (int u = 0; u < tot && v.pass; ++u)
            for (int w = 0; w < tot && v.pass; ++w) {
                if (!cx.edge(u, w)) continue;
                const Word& U = *cx.flat[static_cast<std::size_t>(u)];
                const Word& W = *cx.flat[static_cast<std::size_t>(w)];
                for (Index la = 1; la <= L && v.pass; ++la) {
                    if (!cx.eq(U, 0, W, L - la, la)) continue;  // shared a
                    const Index lx = L - la;
                    const Index lz = L - la;
                    if (!within_threshold(static_cast<Index>(L) * (n - 1) + lx + lz,
                                          static_cast<Index>(L) * (n - 1), cx.chi(lx + lz), cx.eps, n))
                        uf_fail(v, "images (" + std::to_string(u) + "," + std::to_string(w) +
                                       ") la=" + std::to_string(la));
                }
            }
        if (v.pass) v.detail = "all premise wraps exponential";
        v.seconds = since(t0);
        rep.conditions.push_back(std::move(v));
    }

    return rep;
}

// ---------------------------------------------------------------------------

AltTreeResult alt_image_tree(const Word& w, const ImageFamily& fam, const Word& alt,
                             const Word& replaced, int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    if (alt.size() != fam.L) throw std::invalid_argument("alternative image has the wrong length");
    int target_letter = -1, target_slot = -1;
    for (int a = 0; a < fam.source_letters(); ++a)
        for (std::size_t s = 0; s < fam.images[static_cast<std::size_t>(a)].size(); ++s)
            if (fam.images[static_cast<std::size_t>(a)][s] == replaced) {
                target_letter = a;
                target_slot = static_cast<int>(s);
            }
    if (target_letter < 0) throw std::invalid_argument("replaced image not in the family");
    for (const auto& va : fam.images)
        for (const Word& im : va)
            if (im == alt) throw std::invalid_argument("alternative image already in the family");

    // The swapped family must pass the same verification the base family did.
    ImageFamily swapped = fam;
    swapped.images[static_cast<std::size_t>(target_letter)][static_cast<std::size_t>(target_slot)] = alt;
    if (!check_family_for_substitution(swapped, fam.n).pass())
        throw std::invalid_argument("alternative family fails verification; refusing to grow");

    auto [image, log] = apply_three_valued_logged(w, fam);
    const int replaced_id = fam.flat_id(target_letter, target_slot);
    std::vector<Index> sites;
    for (std::size_t j = 0; j < log.size(); ++j)
        if (log[j] == replaced_id) sites.push_back(static_cast<Index>(j));
    if (static_cast<int>(sites.size()) > depth) sites.resize(static_cast<std::size_t>(depth));

    AltTreeResult res;
    res.all_threshold = true;
    const std::size_t branches = static_cast<std::size_t>(1) << sites.size();
    for (std::size_t mask = 0; mask < branches; ++mask) {
        Word cand = image;
        for (std::size_t b = 0; b < sites.size(); ++b) {
            if (!(mask & (static_cast<std::size_t>(1) << b))) continue;
            const Index off = sites[b] * fam.L;
            std::copy(alt.letters.begin(), alt.letters.end(), cand.letters.begin() + off);
        }
        if (check_fast(cand, fam.n, EpsProfile::plain()).has_value() && res.all_threshold) {
            res.all_threshold = false;
            res.first_failure = mask;
        }
        res.words.push_back(std::move(cand));
    }
    return res;
}

}  // namespace dejean
