#include "cpmat/exact_core.hpp"
#include "cpmat/family.hpp"
#include "cpmat/lattice.hpp"
#include "check_kind.hpp"
#include "oracles.hpp"

using namespace cpmat;

TEST_CASE("FPD of the 2x2 figure matrix") {
    const IntMatrix n{{2, 3}, {1, 4}};
    const auto fpd = fpd_enumerate(n);
    CHECK(fpd.points.size() == 5);
    CHECK(fpd.points.front() == IntVector{0, 0});
    CHECK(fpd.points == oracle::fpd_scan(n));
}

TEST_CASE("FPD small cases") {
    CHECK(fpd_enumerate(IntMatrix::identity(3)).points == std::vector<IntVector>{{0, 0, 0}});
    const auto f = fpd_enumerate(IntMatrix{{3, 0}, {1, 3}});
    CHECK(f.points.size() == 9);
    CHECK(axis_profile(f, 1).max == 3);
    CHECK_THROWS_KIND(fpd_enumerate(IntMatrix{{1, 2}, {2, 4}}), ErrorKind::Singular);
}

TEST_CASE("Smith-based and scanning FPD enumerations agree") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 120; ++t) {
        const std::size_t d = 1 + t % 3;
        const IntMatrix m = oracle::random_nonsingular(rng, d, d == 3 ? 5 : 12);
        const auto fpd = fpd_enumerate(m);
        CHECK(Int(static_cast<unsigned long>(fpd.points.size())) == abs(oracle::leibniz_det(m)));
        CHECK(fpd.points == oracle::fpd_scan(m));
        CHECK(fpd.points == fpd_enumerate_bounding_box(m).points);
        // pairwise incongruent
        const Modulus mod(m);
        for (std::size_t a = 0; a + 1 < std::min<std::size_t>(fpd.points.size(), 25); ++a)
            for (std::size_t b = a + 1; b < std::min<std::size_t>(fpd.points.size(), 25); ++b)
                CHECK_FALSE(mod.congruent(fpd.points[a], fpd.points[b]));
    }
}

TEST_CASE("FPD of sign-flipped constructed matrices") {
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t d = 2; d <= 3; ++d) {
        for (const auto& m : construct_family({2, 3}, generate_feasible_set(d, FeasibleKind::Cyclic))) {
            SignMask mask{d, std::vector<int>(d * d)};
            for (auto& s : mask.signs) s = coin(rng) ? 1 : -1;
            const IntMatrix f = apply_sign_flips(m, mask).matrix;
            const auto pts = fpd_enumerate(f).points;
            CHECK(Int(static_cast<unsigned long>(pts.size())) == abs(determinant(f)));
            CHECK(pts == oracle::fpd_scan(f));
        }
    }
}

TEST_CASE("mod_reduce") {
    const IntMatrix m{{3, 0}, {1, 3}};
    const auto z = mod_reduce({0, 0}, m);
    CHECK(z.n == IntVector{0, 0});
    CHECK(z.residue.r() == IntVector{0, 0});

    const auto exact = mod_reduce(m * IntVector{1, 1}, m);
    CHECK(exact.n == IntVector{1, 1});
    CHECK(exact.residue.r() == IntVector{0, 0});

    const auto red = mod_reduce({5, 7}, m);
    CHECK(m * red.n + red.residue.r() == IntVector{5, 7});
    const auto pts = fpd_enumerate(m).points;
    CHECK(std::find(pts.begin(), pts.end(), red.residue.r()) != pts.end());
    CHECK(red.residue.r() == oracle::reduce(m, {5, 7}));

    CHECK_THROWS_KIND(mod_reduce({1, 2}, IntMatrix{{1, 1}, {1, 1}}), ErrorKind::Singular);
    CHECK_THROWS_KIND(mod_reduce({1, 2, 3}, m), ErrorKind::DimensionMismatch);
}

TEST_CASE("mod_reduce roundtrip over a wide box") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = 1 + t % 4;
        const IntMatrix m = oracle::random_nonsingular(rng, d, 9);
        const IntVector f = oracle::random_vector(rng, d, -1000000, 1000000);
        const auto red = mod_reduce(f, m);
        CHECK(m * red.n + red.residue.r() == f);
        CHECK(oracle::in_fpd(m, red.residue.r()));
    }
}

TEST_CASE("Residue validates membership") {
    CHECK_NOTHROW(Residue({1, 1}, IntMatrix{{3, 0}, {1, 3}}));
    CHECK_THROWS_KIND(Residue({3, 0}, IntMatrix{{3, 0}, {1, 3}}), ErrorKind::NotInFpd);
    CHECK_THROWS_KIND(Residue({-1, 0}, IntMatrix{{3, 0}, {1, 3}}), ErrorKind::NotInFpd);
    CHECK_THROWS_KIND(Residue({0}, IntMatrix{{3, 0}, {1, 3}}), ErrorKind::DimensionMismatch);
}

TEST_CASE("axis profiles") {
    const auto p = axis_profile(construct_matrix(3, {2, 1}).matrix, 0);
    CHECK(p.min >= 0);
    CHECK(p.distinct_count <= 4);
    const auto dg0 = axis_profile(IntMatrix{{9, 0}, {0, 1}}, 0);
    const auto dg1 = axis_profile(IntMatrix{{9, 0}, {0, 1}}, 1);
    CHECK(dg0.distinct_count == 9);
    CHECK(dg1.distinct_count == 1);
    for (std::size_t k = 0; k < 3; ++k) {
        const auto id = axis_profile(IntMatrix::identity(3), k);
        CHECK(id.min == 0);
        CHECK(id.max == 0);
        CHECK(id.distinct_count == 1);
    }
}

TEST_CASE("constructed matrices keep FPD coordinates within [0, q]") {
    for (std::size_t d = 1; d <= 4; ++d) {
        for (long q : {2L, 3L, 5L}) {
            const auto pf = generate_feasible_set(d, FeasibleKind::Cyclic);
            for (const auto& p : pf.perms()) {
                const IntMatrix m = construct_matrix(q, p).matrix;
                const auto fpd = fpd_enumerate(m);
                for (const auto& pt : fpd.points)
                    for (const auto& x : pt) CHECK((x >= 0 && x <= q));
                for (std::size_t k = 0; k < d; ++k) CHECK(axis_profile(fpd, k).distinct_count <= std::size_t(q + 1));
            }
        }
    }
}

TEST_CASE("spread ratios") {
    const auto s = spread_ratios(construct_matrix(3, {2, 1}).matrix);
    CHECK(s.peak_over_mean == Rat(12, 7));
    CHECK(s.peak_over_min_nonzero == 3);
    const auto d = spread_ratios(IntMatrix{{9, 0}, {0, 1}});
    CHECK(d.peak_over_mean == Rat(18, 5));  // 36/10
    CHECK(d.peak_over_min_nonzero == 9);
    const auto id = spread_ratios(IntMatrix::identity(4));
    CHECK(id.peak_over_mean == 4);
    CHECK(id.peak_over_min_nonzero == 1);
    CHECK_THROWS_KIND(spread_ratios(IntMatrix(2, 2)), ErrorKind::ZeroMatrix);
}
