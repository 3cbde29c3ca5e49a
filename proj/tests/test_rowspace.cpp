#include "doctest.h"

#include <set>

#include "zgz/rowspace.hpp"

using namespace zgz;

TEST_CASE("index/vector bijection") {
    CHECK(int_to_vec(4, 3, 2).digits == std::vector<std::uint8_t>{1, 1});
    CHECK(int_to_vec(0, 3, 2).is_zero());
    CHECK(int_to_vec(5, 2, 3).digits == std::vector<std::uint8_t>{1, 0, 1});
    CHECK_THROWS_AS(int_to_vec(9, 3, 2), ParamError);

    for (auto [r, m] : {std::pair<unsigned, unsigned>{2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
        const std::uint32_t p = pow_u32(r, m);
        for (std::uint32_t x = 0; x < p; ++x) CHECK(vec_to_int(int_to_vec(x, r, m)) == x);
    }
}

TEST_CASE("zigzag permutation evaluation") {
    const RVec v01(3, 2, {0, 1});
    CHECK(zigzag_perm(v01, 2, 4) == 3);  // worked example
    SUBCASE("l = 0 is the identity") {
        for (std::uint32_t x = 0; x < 9; ++x) CHECK(zigzag_perm(v01, 0, x) == x);
    }
    SUBCASE("full vector forms match the reference permutation tables") {
        std::vector<std::uint32_t> got;
        for (std::uint32_t x = 0; x < 9; ++x) got.push_back(zigzag_perm(v01, 2, x));
        CHECK(got == std::vector<std::uint32_t>{2, 0, 1, 5, 3, 4, 8, 6, 7});

        const RVec e1 = RVec::unit(3, 2, 1);
        got.clear();
        for (std::uint32_t x = 0; x < 9; ++x) got.push_back(zigzag_perm(e1, 1, x));
        CHECK(got == std::vector<std::uint32_t>{3, 4, 5, 6, 7, 8, 0, 1, 2});
    }
    SUBCASE("applying it r times with a fixed shift returns to start") {
        for (unsigned r : {2u, 3u, 5u}) {
            const RVec v(r, 2, {1, 1});
            for (unsigned l = 0; l < r; ++l)
                for (std::uint32_t x = 0; x < pow_u32(r, 2); ++x) {
                    std::uint32_t y = x;
                    for (unsigned rep = 0; rep < r; ++rep) y = zigzag_perm(v, l, y);
                    CHECK(y == x);
                }
        }
    }
    SUBCASE("bijection for fixed (v,l)") {
        std::set<std::uint32_t> image;
        for (std::uint32_t x = 0; x < 9; ++x) image.insert(zigzag_perm(v01, 1, x));
        CHECK(image.size() == 9);
    }
}

TEST_CASE("dot products") {
    CHECK(dot(RVec(2, 2, {1, 1}), RVec(2, 2, {1, 0})) == 1);
    CHECK(dot(RVec(3, 2, {2, 1}), RVec(3, 2, {0, 0})) == 0);
    CHECK(dot(RVec(3, 2, {2, 1}), RVec(3, 2, {1, 2})) == 1);
    CHECK_THROWS_AS(dot(RVec(3, 2, {0, 0}), RVec(3, 3, {0, 0, 0})), ParamError);
}

TEST_CASE("span, cosets, orthogonal complement") {
    SUBCASE("span{e_1} over F_3^2") {
        const Subspace s = span(3, 2, {RVec::unit(3, 2, 1)});
        CHECK(s.elements == std::vector<std::uint32_t>{0, 3, 6});
        CHECK(s.rank() == 1);
    }
    SUBCASE("empty span is the zero subspace") {
        const Subspace s = span(3, 2, {});
        CHECK(s.elements == std::vector<std::uint32_t>{0});
        CHECK(s.rank() == 0);
    }
    SUBCASE("complement of e_2 over F_3^2") {
        const Subspace s = orth_complement(RVec::unit(3, 2, 2));
        CHECK(s.elements == std::vector<std::uint32_t>{0, 3, 6});
    }
    SUBCASE("non-prime base rejected") {
        CHECK_THROWS_AS(span(4, 2, {}), ParamError);
    }
    SUBCASE("cosets partition the whole index range") {
        for (unsigned r : {2u, 3u, 5u}) {
            const Subspace s = span(r, 3, {RVec::unit(r, 3, 2)});
            const auto cs = cosets(s);
            std::set<std::uint32_t> all;
            std::size_t count = 0;
            for (const auto& c : cs) {
                count += c.size();
                all.insert(c.begin(), c.end());
            }
            CHECK(count == pow_u32(r, 3));
            CHECK(all.size() == count);
        }
    }
    SUBCASE("|S| * |S_perp| == r^m for spans, m <= 4") {
        for (unsigned r : {2u, 3u}) {
            for (unsigned m = 1; m <= 4; ++m) {
                std::vector<RVec> gens;
                for (unsigned j = 1; j <= m; j += 2) gens.push_back(RVec::unit(r, m, j));
                const Subspace s = span(r, m, gens);
                const Subspace c = orth_complement(s);
                CHECK(s.elements.size() * c.elements.size() == pow_u32(r, m));
                for (std::uint32_t u : c.elements)
                    for (const RVec& b : s.basis)
                        CHECK(dot(int_to_vec(u, r, m), b) == 0);
            }
        }
    }
    SUBCASE("subspace sizes are powers of r and contain zero") {
        const Subspace s = span(5, 2, {RVec(5, 2, {1, 2}), RVec(5, 2, {2, 4})});
        CHECK(s.elements.size() == 5);  // second vector is dependent
        CHECK(s.contains(0));
    }
}
