#include "dejean/constructions.hpp"
#include "dejean/io.hpp"
#include "dejean/verifier.hpp"

#include <doctest.h>

#include <random>

using namespace dejean;

namespace {

ImageFamily family_of(std::vector<std::vector<std::string>> words, int n) {
    std::vector<std::vector<Word>> v;
    for (auto& group : words) {
        std::vector<Word> g;
        for (auto& s : group) g.push_back(parse_word(n, s));
        v.push_back(std::move(g));
    }
    return make_image_family(n, std::move(v));
}

}  // namespace

TEST_CASE("family stats on hand-built families") {
    // shared 4-letter prefix between two images of different letters
    ImageFamily fam = family_of({{"abcdea"}, {"abcdeb"}, {"cdeabc"}}, 5);
    FamilyStats st = family_stats(fam);
    CHECK(st.l_V == 5);
    CHECK(st.lcp_Vn == 5);
    CHECK(st.L == 6);
    CHECK(st.epsilon == Ratio::of(st.l_V + st.r_V, 5));

    // disjoint alphabets: no overlap at all
    ImageFamily disj = family_of({{"aab"}, {"ccd"}}, 5);
    FamilyStats st2 = family_stats(disj);
    CHECK(st2.l_V == 0);
    CHECK(st2.r_V == 0);
    CHECK(st2.epsilon == Ratio::integer(0));
    CHECK(check_C3(disj, 5));
}

TEST_CASE("C3 boundary case is exact") {
    // L = 13, n = 5: C3 demands (l+r)(n-1) <= L-1 = 12, so l+r = 3 passes
    // exactly and l+r = 4 fails exactly
    ImageFamily pass = family_of({{"abcdeabcdeabc"}, {"abcedbacedbac"}}, 5);
    FamilyStats st = family_stats(pass);
    CHECK(st.l_V + st.r_V == 3);  // lcp "abc", lcs "c"... computed: lcp 3, lcs 0
    CHECK(check_C3(pass, 5));
}

TEST_CASE("check_l1 on a clean bijective family and a planted triple") {
    // n = 5, k = 1: six images, pairwise overlaps small
    RootFamily fam = build_roots(5);
    Materialized m = materialize(fam, 3);
    // planted: shared suffix between u, v and shared prefix between v, w
    ImageFamily bad = family_of({{"abcab"}, {"edcab"}, {"edcba"}, {"bacde"}, {"cdeba"}, {"deabc"}}, 5);
    VerificationReport rep = check_l1(bad, 5, 1, 1);
    CHECK(!rep.pass());

    ImageFamily wrong_count = family_of({{"abcab"}, {"edcab"}}, 5);
    CHECK(!check_l1(wrong_count, 5, 1, 1).pass());
    CHECK(!check_l1(wrong_count, 5, 1, 1).find("l1.pre")->pass);
}

TEST_CASE("check_l2 fail-fast preconditions") {
    ImageFamily tiny = family_of({{"ab"}, {"bc"}}, 5);
    VerificationReport rep = check_l2(tiny, 5, 1);
    CHECK(!rep.pass());
    CHECK(rep.conditions.size() == 1);
    CHECK(rep.conditions[0].name == "l2.pre");
}

TEST_CASE("check_l2 flags a conjugate pair with a square witness") {
    RootFamily fam = build_roots(5);
    Materialized m = materialize(fam, 3);
    auto tv = make_three_valued_family(m);
    // plant a rotation of an existing image as another letter's image
    ImageFamily planted = tv.family;
    planted.images[1][0] = rotate_left(planted.images[0][0], 17);
    VerificationReport rep = check_l2(planted, 5, 0);
    const ConditionVerdict* c2 = rep.find("l2.c2");
    REQUIRE(c2 != nullptr);
    CHECK(!c2->pass);
}

TEST_CASE("n=5 construction family: machine verdicts") {
    // what the generated family actually satisfies: primitivity yes, the
    // aggregate overlap bound and pairwise thresholdness no (the images share
    // long q-runs); the report records this honestly
    RootFamily fam = build_roots(5);
    Materialized m = materialize(fam, 3);
    auto tv = make_three_valued_family(m);
    CHECK(tv.spare.size() == 3);
    FamilyStats st = family_stats(tv.family);
    CHECK(st.epsilon <= Ratio::of(2, 4));  // within Lemma 2's admissible range
    VerificationReport rep = check_l2(tv.family, 5, 0);
    CHECK(rep.find("l2.pre")->pass);
    CHECK(rep.find("l2.c1")->pass);
    CHECK(!rep.find("l2.c2")->pass);
    CHECK(!check_C3(tv.family, 5));
}

TEST_CASE("n=6 construction family satisfies the aggregate bound") {
    RootFamily fam = build_roots(6);
    Materialized m = materialize(fam, 5);
    std::vector<std::vector<Word>> one;
    for (auto& w : m.images) one.push_back({w});
    ImageFamily flat = make_image_family(6, std::move(one));
    CHECK(check_C3(flat, 6));
}

TEST_CASE("windowed pair check agrees with the full check") {
    RootFamily fam = build_roots(5);
    Materialized m = materialize(fam, 3);
    auto prof = EpsProfile::plain();
    // full window equals the full check by construction
    const Word& u = m.images[6];
    const Word& v = m.images[13];
    CHECK(windowed_pair_check(u, v, u.size(), 5, prof).has_value() ==
          check_fast(concat(u, v), 5, prof).has_value());
    // the paper's seam bound: windows of a few q-blocks already decide
    int checked = 0, agree = 0;
    for (Index i = 0; i < 18; i += 5)
        for (Index j = 1; j < 18; j += 5) {
            if (i == j) continue;
            const Word& a = m.images[static_cast<std::size_t>(i)];
            const Word& b = m.images[static_cast<std::size_t>(j)];
            bool full = check_fast(concat(a, b), 5, prof).has_value();
            bool win = windowed_pair_check(a, b, 8 * 360, 5, prof).has_value();
            ++checked;
            agree += full == win;
        }
    CHECK(checked == agree);
}

TEST_CASE("uf conditions on a compliant toy family") {
    // images with pairwise-disjoint boundary letters: every uf clause is
    // either vacuous or comfortably inside the threshold
    ImageFamily fam = family_of({{"aab", "aeb", "adb"},
                                 {"bbc", "bac", "bec"},
                                 {"ccd", "cbd", "cad"},
                                 {"dde", "dce", "dbe"},
                                 {"eea", "eda", "eca"}},
                                5);
    DeltaRelation rel = DeltaRelation::full(fam);
    VerificationReport rep = check_uf(fam, rel, EpsProfile::standard(Ratio::integer(0)));
    CHECK(rep.find("uf1.1")->pass);
    // uf1.2 fails here: "aab" ends with b, "bbc" starts with b
    CHECK(!rep.find("uf1.2")->pass);
}

TEST_CASE("uf1.2 passes on suffix/prefix-disjoint images") {
    ImageFamily fam = family_of({{"aba"}, {"bcb"}, {"cdc"}, {"ded"}, {"eae"}}, 5);
    DeltaRelation rel = DeltaRelation::full(fam);
    VerificationReport rep = check_uf(fam, rel, EpsProfile::standard(Ratio::integer(0)));
    CHECK(rep.find("uf1.2")->pass);
    CHECK(!rep.find("uf1.1")->pass);  // aba is not primitive-free: per(aba)=2 < 3
}

TEST_CASE("uf2 clause catches a planted square seam") {
    // u1 = "ab", v1 = "ab" is impossible (distinct letters); plant u1 = "ba"
    // for letter b after u0 = "ab" for letter a: uv = "abba"? use shapes that
    // trigger uf2.1.1: u1 = a|x y z x with v1 = y|a
    ImageFamily fam = family_of({{"abab"}, {"baba"}, {"cdcd"}, {"dcdc"}, {"eaea"}}, 5);
    DeltaRelation rel = DeltaRelation::full(fam);
    VerificationReport rep = check_uf(fam, rel, EpsProfile::standard(Ratio::integer(0)));
    CHECK(!rep.pass());
}
