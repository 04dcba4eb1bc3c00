#include "dejean/constructions.hpp"
#include "dejean/conjugacy.hpp"
#include "dejean/io.hpp"

#include <doctest.h>

using namespace dejean;

TEST_CASE("odd block length invariants") {
    for (int n : {5, 7, 9, 11}) {
        BlockSet bs = build_blocks(n);
        REQUIRE(bs.odd);
        const int m = (n - 3) / 2;
        for (int i = 0; i < 2 * m + 7; i += 2)
            CHECK(phi_length(bs.d_odd.at(i)) == n + i + 1);
        for (int i = 0; i < m; ++i) {
            CHECK(phi_length(bs.q_odd[static_cast<std::size_t>(i)]) == 6 * n + 2 * i + 30);
            CHECK(phi_length(bs.qp_odd[static_cast<std::size_t>(i)]) == 6 * n + 2 * i + 30);
        }
    }
}

TEST_CASE("even block length invariants") {
    for (int n : {6, 8, 10, 12}) {
        BlockSet bs = build_blocks(n);
        REQUIRE(!bs.odd);
        const int h = n / 12 + 1;
        for (int i = 0; i <= h; ++i)
            for (int j = 0; j <= 3; ++j)
                CHECK(phi_length(bs.d_even[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ==
                      n + 2 * j + 6 * i - 3);
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < 3; ++j) {
                CHECK(phi_length(bs.q_even[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) ==
                      6 * n - 4 + 2 * j + 24 * i);
                CHECK(phi_length(bs.qp_even[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) ==
                      6 * n - 4 + 2 * j + 24 * i);
            }
    }
}

TEST_CASE("specific block sizes") {
    BlockSet b5 = build_blocks(5);
    CHECK(phi_length(b5.d_odd.at(0)) == 6);
    CHECK(phi_length(b5.d_odd.at(6)) == 12);
    CHECK(phi_length(b5.q_odd[0]) == 60);
    BlockSet b6 = build_blocks(6);
    CHECK(phi_length(b6.d_even[0][0]) == 3);
    CHECK(phi_length(b6.q_even[0][0]) == 32);
    CHECK_THROWS(build_blocks(4));
}

TEST_CASE("root family shape") {
    RootFamily f5 = build_roots(5);
    CHECK(f5.rotations() == 6);          // n + 1 whole-q rotations
    CHECK(f5.total_roots() == 18);       // 3(n+1)
    CHECK(phi_length(f5.w0) == 360);     // block sum, six q-blocks of 60

    RootFamily f6 = build_roots(6);
    CHECK(f6.rotations() == 10);         // n_12 + 10
    CHECK(phi_length(f6.w0) == 336);

    RootFamily f12 = build_roots(12);
    CHECK(f12.rotations() == 22);
}

TEST_CASE("all roots are rotations of w0 and pairwise distinct") {
    for (int n : {5, 6}) {
        RootFamily fam = build_roots(n);
        for (Index i = 0; i < fam.total_roots(); ++i) {
            CHECK(fam.root(i) == bc_rotate_left(fam.w0, fam.root_offset(i)));
            for (Index j = i + 1; j < fam.total_roots(); ++j)
                CHECK(!(fam.root(i) == fam.root(j)));
        }
    }
}

TEST_CASE("materialize closes the premise and yields primitive distinct images") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 3}, {6, 5}}) {
        RootFamily fam = build_roots(n);
        CHECK(suggested_k(fam) == k);
        Materialized m = materialize(fam, k);
        CHECK(m.L == static_cast<Index>(k) * phi_length(fam.w0));
        Premise a0 = canonical_premise(n, PremiseKind::A0);
        for (const Word& w : m.images) {
            CHECK(w.size() == m.L);
            CHECK(factor(w, w.size() - n, n) == a0.letters);
            CHECK(period(w) == w.size());  // primitive
        }
        for (std::size_t i = 0; i < m.images.size(); ++i)
            for (std::size_t j = i + 1; j < m.images.size(); ++j)
                CHECK(!(m.images[i] == m.images[j]));
    }
}

TEST_CASE("materialize with a non-closing k fails hard") {
    RootFamily fam = build_roots(7);
    CHECK(suggested_k(fam) == 4);
    CHECK_THROWS_WITH(materialize(fam, 3), "l3.c2 violated for root 0");
    CHECK_NOTHROW(materialize(fam, 4));
}

TEST_CASE("every image is a k-bc-root word of its root") {
    RootFamily fam = build_roots(5);
    Materialized m = materialize(fam, 3);
    for (Index i = 0; i < fam.total_roots(); ++i)
        CHECK(is_k_bc_root(m.images[static_cast<std::size_t>(i)], fam.root(i), Flavor::Rbc, 3));
}

TEST_CASE("induced permutation composes over code powers") {
    RootFamily fam = build_roots(5);
    Code c = phi(fam.w0, Flavor::Rbc, 5);
    Premise a0 = canonical_premise(5, PremiseKind::A0);
    Permutation pi = induced_permutation(a0, c);
    CHECK(pi.order() == 3);
    CHECK(induced_permutation(a0, repeat(c, 2)) == pi * pi);
    CHECK(induced_permutation(a0, repeat(c, 3)).is_identity());
}
