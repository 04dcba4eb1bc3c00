#include "dejean/io.hpp"
#include "dejean/substitution.hpp"
#include "dejean/verifier.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace dejean;

namespace {

// tiny distinct two-letter images, one triple per letter over A_n
ImageFamily toy_family(int n) {
    std::vector<std::vector<Word>> v;
    for (int a = 0; a < n; ++a) {
        std::vector<Word> va;
        for (int s = 0; s < 3; ++s)
            va.push_back(make_word(n, {a, static_cast<Letter>((a + s + 1) % n)}));
        v.push_back(std::move(va));
    }
    return make_image_family(n, std::move(v));
}

Word threshold_word(std::mt19937& rng, int n, Index len) {
    Word w = make_word(n, {});
    while (w.size() < len) {
        std::vector<Letter> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        bool ok = false;
        for (Letter a : order) {
            w.letters.push_back(a);
            if (!find_forbidden_naive(w, repetition_threshold(n), EpsProfile::plain())) { ok = true; break; }
            w.letters.pop_back();
        }
        if (!ok) break;
    }
    return w;
}

}  // namespace

TEST_CASE("three-valued substitution cycles images per letter") {
    ImageFamily fam = toy_family(5);
    auto [img, log] = apply_three_valued_logged(parse_word(5, "aaaa"), fam);
    CHECK(log == std::vector<int>{fam.flat_id(0, 0), fam.flat_id(0, 1), fam.flat_id(0, 2),
                                  fam.flat_id(0, 0)});
    CHECK(img.size() == 4 * fam.L);

    auto [img2, log2] = apply_three_valued_logged(parse_word(5, "aba"), fam);
    CHECK(log2 == std::vector<int>{fam.flat_id(0, 0), fam.flat_id(1, 0), fam.flat_id(0, 1)});
    (void)img2;
}

TEST_CASE("equal images in a three-valued output sit far apart") {
    std::mt19937 rng(5);
    ImageFamily fam = toy_family(5);
    Word seed = threshold_word(rng, 5, 120);
    auto [img, log] = apply_three_valued_logged(seed, fam);
    (void)img;
    for (std::size_t i = 0; i < log.size(); ++i)
        for (std::size_t j = i + 1; j < log.size(); ++j)
            if (log[i] == log[j]) {
                // starts at least 3(n-1)L apart in the image
                CHECK((static_cast<Index>(j - i)) * fam.L >= 3 * (5 - 1) * fam.L);
            }
}

TEST_CASE("descent morphism concatenates a bijective family") {
    // 6 distinct singleton images over 5 letters
    std::vector<std::vector<Word>> v;
    for (int a = 0; a < 6; ++a)
        v.push_back({make_word(5, {static_cast<Letter>(a % 5), static_cast<Letter>((a + 1) % 5),
                                   static_cast<Letter>((a + 2) % 5)})});
    ImageFamily fam = make_image_family(5, std::move(v));
    Word w = make_word(6, {0, 3, 5});
    Word img = apply_descent_morphism(w, fam);
    CHECK(img.size() == 3 * fam.L);
    CHECK(apply_descent_morphism(make_word(6, {}), fam).empty());
    CHECK_THROWS(apply_descent_morphism(w, toy_family(5)));  // not bijective
}

TEST_CASE("critical factors locate tight repeats through a position") {
    // distance n-1 = 4 single-letter repeat: a....a
    Word w = parse_word(5, "abcdaecbd");
    auto prof = EpsProfile::standard(Ratio::of(1, 4));
    // the 'a' pair (0, 4): right repeat is position 5 (1-based); the
    // 'c' pair (2, 6) runs through position 7 instead
    CriticalSets cs = critical_factors(w, 5, prof, 5);
    REQUIRE(cs.factors.size() == 1);
    CHECK(cs.factors[0] == CriticalSets::Item{0, 1, 4});
    CHECK(cs.left_positions[0] == 0);
    // no critical factor through position 3
    CHECK(critical_factors(w, 5, prof, 3).factors.empty());
    // epsilon zero: nothing is critical
    CHECK(critical_factors(w, 5, EpsProfile::standard(Ratio::integer(0)), 5).factors.empty());
}

TEST_CASE("at most one critical factor per repeat length through adjacent positions") {
    std::mt19937 rng(7);
    auto prof = EpsProfile::standard(Ratio::of(1, 4));
    for (int t = 0; t < 40; ++t) {
        Word w = threshold_word(rng, 5, 80);
        for (Index m = 1; m < w.size(); ++m) {
            CriticalSets a = critical_factors(w, 5, prof, m);
            CriticalSets b = critical_factors(w, 5, prof, m + 1);
            for (int e : {1, 2}) {
                std::vector<CriticalSets::Item> merged;
                for (const auto& it : a.factors)
                    if (it.repeat == e) merged.push_back(it);
                for (const auto& it : b.factors)
                    if (it.repeat == e &&
                        std::find(merged.begin(), merged.end(), it) == merged.end())
                        merged.push_back(it);
                CHECK(merged.size() <= 1);
            }
        }
    }
}

TEST_CASE("delta distance is a shortest path") {
    ImageFamily fam = toy_family(5);
    DeltaRelation rel = DeltaRelation::full(fam);
    CHECK(rel.delta_min(fam) == 3);
    // v in delta(u): distance 0 for any cross-letter pair under the full relation
    CHECK(delta_distance(rel, fam, fam.flat_id(0, 0), fam.flat_id(1, 2)) == 0);
    // same-letter images need one intermediate
    CHECK(delta_distance(rel, fam, fam.flat_id(0, 0), fam.flat_id(0, 1)) == 1);

    // a sparse relation with an unreachable image
    DeltaRelation sparse = rel;
    for (auto& row : sparse.allowed)
        for (auto& succ : row)
            succ.erase(std::remove(succ.begin(), succ.end(), fam.flat_id(4, 2)), succ.end());
    CHECK(!delta_distance(sparse, fam, fam.flat_id(0, 0), fam.flat_id(4, 2)).has_value());

    // BFS equals exhaustive path enumeration on the small family
    const int total = static_cast<int>(fam.total_images());
    for (int u = 0; u < total; ++u)
        for (int v = 0; v < total; ++v) {
            if (u == v) continue;
            // enumerate paths up to length 3 edges
            int best = -1;
            std::vector<std::pair<int, int>> frontier{{u, 0}};
            for (int depth = 1; depth <= 3 && best < 0; ++depth) {
                std::vector<std::pair<int, int>> next;
                for (auto [x, d] : frontier)
                    for (const auto& succ : rel.allowed[static_cast<std::size_t>(x)])
                        for (int y : succ) {
                            if (y == v && best < 0) best = depth;
                            next.emplace_back(y, d + 1);
                        }
                frontier = std::move(next);
            }
            auto got = delta_distance(rel, fam, u, v);
            REQUIRE(got.has_value());
            CHECK(*got == best - 1);
        }
}

TEST_CASE("growth of the generalized enumeration") {
    std::mt19937 rng(11);
    ImageFamily fam = toy_family(5);
    DeltaRelation rel = DeltaRelation::full(fam);
    auto prof = EpsProfile::standard(Ratio::of(1, 4));
    for (int t = 0; t < 10; ++t) {
        Word seed = threshold_word(rng, 5, 8);
        REQUIRE(seed.size() == 8);
        GrowthReport rep = enumerate_generalized_images(seed, fam, rel, prof, 1u << 22);
        CHECK(!rep.capped);
        CHECK(!rep.defect_position.has_value());
        CHECK(rep.delta_min == 3);
        CHECK(rep.bound_ok);
        // counts after 2t letters grow at least like delta_min^t
        std::uint64_t want = 1;
        for (std::size_t j = 2; j < rep.counts.size(); j += 2) {
            want *= 3;
            CHECK(rep.counts[j] >= want);
        }
        // per-step bound of the pair-growth proposition
        for (Index m = 1; m + 1 <= seed.size(); ++m) {
            auto em = critical_factors(seed, 5, prof, m).factors.size();
            std::uint64_t factor_bound =
                static_cast<std::uint64_t>((3 - em) * (em + 1));
            CHECK(rep.counts[static_cast<std::size_t>(m + 1)] >=
                  factor_bound * rep.counts[static_cast<std::size_t>(m - 1)]);
        }
    }
}

TEST_CASE("single letter enumeration counts the admissible images") {
    ImageFamily fam = toy_family(5);
    DeltaRelation rel = DeltaRelation::full(fam);
    GrowthReport rep = enumerate_generalized_images(parse_word(5, "a"), fam, rel,
                                                    EpsProfile::standard(Ratio::of(1, 4)), 1000);
    CHECK(rep.counts == std::vector<std::uint64_t>{1, 3});
}

TEST_CASE("k-valued substitution choices satisfy the M2 audit") {
    // with E = {1, 2} and the cyclic 3-valued rule, images at synchronous
    // critical positions always differ
    std::mt19937 rng(17);
    ImageFamily fam = toy_family(5);
    auto prof = EpsProfile::standard(Ratio::of(1, 4));
    for (int t = 0; t < 20; ++t) {
        Word seed = threshold_word(rng, 5, 60);
        auto [img, log] = apply_three_valued_logged(seed, fam);
        (void)img;
        for (Index m = 1; m <= seed.size(); ++m) {
            CriticalSets cs = critical_factors(seed, 5, prof, m);
            for (std::size_t i = 0; i < cs.factors.size(); ++i) {
                const auto& f = cs.factors[i];
                // some position of the right repeat maps differently
                bool differs = false;
                for (Index tpos = 0; tpos < f.repeat && !differs; ++tpos)
                    differs = log[static_cast<std::size_t>(f.start + tpos)] !=
                              log[static_cast<std::size_t>(f.start + f.period + tpos)];
                CHECK(differs);
            }
        }
    }
}
