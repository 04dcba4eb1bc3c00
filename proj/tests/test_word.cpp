#include "dejean/io.hpp"
#include "dejean/word.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace dejean;

namespace {

Word rand_word(std::mt19937& rng, int n, Index len) {
    std::uniform_int_distribution<int> d(0, n - 1);
    std::vector<Letter> v(static_cast<std::size_t>(len));
    for (auto& a : v) a = d(rng);
    return make_word(n, std::move(v));
}

// definition scan: smallest p with w[i] == w[p+i] for all valid i
Index period_scan(const Word& w) {
    for (Index p = 1; p < w.size(); ++p) {
        bool ok = true;
        for (Index i = 0; i + p < w.size() && ok; ++i) ok = w[i] == w[i + p];
        if (ok) return p;
    }
    return w.size();
}

}  // namespace

TEST_CASE("period of simple words") {
    CHECK(period(parse_word(1, "aaaa")) == 1);
    CHECK(period(parse_word(2, "ababa")) == 2);
    CHECK(period(parse_word(3, "abc")) == 3);
    CHECK_THROWS_AS(period(Word{2, {}}), std::invalid_argument);
}

TEST_CASE("period equals the quadratic definition scan on random words") {
    std::mt19937 rng(12345);
    for (int t = 0; t < 400; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        Word w = rand_word(rng, n, 1 + static_cast<Index>(rng() % 64));
        CHECK(period(w) == period_scan(w));
    }
}

TEST_CASE("exponent basics") {
    CHECK(exponent(parse_word(2, "ababa")) == Ratio::of(5, 2));
    CHECK(exponent(parse_word(3, "abc")) == Ratio::of(1, 1));
    std::mt19937 rng(99);
    for (int t = 0; t < 200; ++t) {
        Word w = rand_word(rng, 3, 1 + static_cast<Index>(rng() % 40));
        CHECK(exponent(w) == Ratio::of(w.size(), period_scan(w)));
    }
}

TEST_CASE("exponent and period of powers of a primitive word") {
    std::mt19937 rng(7);
    int built = 0;
    while (built < 50) {
        Word w = rand_word(rng, 3, 2 + static_cast<Index>(rng() % 8));
        if (exponent(w) != Ratio::integer(1)) continue;
        ++built;
        int k = 2 + static_cast<int>(rng() % 3);
        Word p = w;
        for (int i = 1; i < k; ++i) p = concat(p, w);
        CHECK(period(p) == w.size());
        CHECK(exponent(p) == Ratio::integer(k));
    }
}

TEST_CASE("local exponent witnesses") {
    auto [e1, w1] = local_exponent(parse_word(3, "abcab"));
    CHECK(e1 == Ratio::of(5, 3));
    CHECK(w1 == FactorWitness{0, 5, 3});

    auto [e2, w2] = local_exponent(parse_word(2, "a"));
    CHECK(e2 == Ratio::integer(1));
    CHECK(w2 == FactorWitness{0, 1, 1});

    auto [e3, w3] = local_exponent(parse_word(2, "aa"));
    CHECK(e3 == Ratio::integer(2));
    CHECK(w3 == FactorWitness{0, 2, 1});
}

TEST_CASE("local exponent dominates sampled factor exponents") {
    std::mt19937 rng(31);
    for (int t = 0; t < 100; ++t) {
        Word w = rand_word(rng, 3, 2 + static_cast<Index>(rng() % 30));
        auto [e, wit] = local_exponent(w);
        (void)wit;
        for (int s = 0; s < 20; ++s) {
            Index start = static_cast<Index>(rng() % static_cast<std::uint64_t>(w.size()));
            Index len = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(w.size() - start));
            CHECK(exponent(factor(w, start, len)) <= e);
        }
    }
}

TEST_CASE("find_forbidden_naive examples") {
    // abcdeabc over n=5 violates at period 5; the smallest violating repeat
    // is 2, so the deterministic witness is (start 0, len 7, period 5)
    auto wit = find_forbidden_naive(parse_word(5, "abcdeabc"), Ratio::of(5, 4), EpsProfile::plain());
    REQUIRE(wit.has_value());
    CHECK(*wit == FactorWitness{0, 7, 5});
    CHECK(wit->exponent() == Ratio::of(7, 5));

    CHECK(!find_forbidden_naive(parse_word(5, "abcde"), Ratio::of(5, 4), EpsProfile::plain()));

    // abcdea: repeat length 1 at period 5; exempting 1 leaves (6+0)/5 <= 5/4
    auto prof = EpsProfile::with(Ratio::of(1, 4), {1});
    CHECK(!find_forbidden_naive(parse_word(5, "abcdea"), Ratio::of(5, 4), prof));
    // (6 + 1/4)/5 is the exact boundary, still fine without the exemption
    CHECK(!find_forbidden_naive(parse_word(5, "abcdea"), Ratio::of(5, 4),
                                EpsProfile::with(Ratio::of(1, 4), {})));
    // a bigger reserve pushes it over: (6 + 1/2)/5 > 5/4
    CHECK(find_forbidden_naive(parse_word(5, "abcdea"), Ratio::of(5, 4),
                               EpsProfile::with(Ratio::of(1, 2), {}))
              .has_value());
}

TEST_CASE("naive verdict agrees with local_exponent on small alphabets") {
    // exhaustive over n = 2 (len <= 14) and sampled n = 3, 4; bound n/(n-1)
    for (int n = 2; n <= 4; ++n) {
        Ratio bound = repetition_threshold(n);
        std::mt19937 rng(500 + n);
        int cases = n == 2 ? 1 << 14 : 4000;
        for (int t = 0; t < cases; ++t) {
            Word w;
            if (n == 2) {
                Index len = 1 + (t % 14);
                std::vector<Letter> v(static_cast<std::size_t>(len));
                for (Index i = 0; i < len; ++i) v[static_cast<std::size_t>(i)] = (t >> i) & 1;
                w = make_word(2, std::move(v));
            } else {
                w = rand_word(rng, n, 1 + static_cast<Index>(rng() % 32));
            }
            bool naive_ok = !find_forbidden_naive(w, bound, EpsProfile::plain()).has_value();
            bool lexp_ok = local_exponent(w).first <= bound;
            CHECK(naive_ok == lexp_ok);
        }
    }
}

TEST_CASE("threshold words have no tight short-period repeats") {
    // repeat 2 needs period >= 2n-1, repeat 3 needs period >= 3n-1
    std::mt19937 rng(77);
    const int n = 5;
    Ratio bound = repetition_threshold(n);
    for (int found = 0; found < 300; ++found) {
        // grow a random threshold word letter by letter
        Word w = make_word(n, {});
        Index target = 10 + static_cast<Index>(rng() % 40);
        while (w.size() < target) {
            std::vector<Letter> order{0, 1, 2, 3, 4};
            std::shuffle(order.begin(), order.end(), rng);
            bool placed = false;
            for (Letter a : order) {
                w.letters.push_back(a);
                if (!find_forbidden_naive(w, bound, EpsProfile::plain())) { placed = true; break; }
                w.letters.pop_back();
            }
            if (!placed) break;
        }
        // plain thresholdness forces repeat 2 at period >= 2n-2 and
        // repeat 3 at period >= 3n-3
        for (Index p = 1; p < w.size(); ++p)
            for (Index s = 0; s + p + 3 <= w.size(); ++s) {
                if (w[s] == w[s + p] && w[s + 1] == w[s + p + 1]) {
                    CHECK(p >= 2 * n - 2);
                    if (w[s + 2] == w[s + p + 2]) CHECK(p >= 3 * n - 3);
                }
            }
    }
}

TEST_CASE("witness tie-breaking is deterministic") {
    Word w = parse_word(2, "abab");
    auto wit = find_forbidden_naive(w, Ratio::of(5, 4), EpsProfile::plain());
    REQUIRE(wit.has_value());
    // leftmost start, then smallest period, then smallest length
    CHECK(wit->start == 0);
    CHECK(wit->period == 2);
    CHECK(wit->len == 3);
}

TEST_CASE("ratio arithmetic stays exact at boundaries") {
    CHECK(Ratio::of(5, 4) == Ratio::of(10, 8));
    CHECK(Ratio::of(1000000000, 999999999) > Ratio::of(1000000001, 1000000000));
    CHECK(Ratio::of(8, 5) > Ratio::of(5, 4));
    CHECK_THROWS(Ratio::of(1, 0));
}
