#include "cpmat/divisibility.hpp"
#include "cpmat/exact_core.hpp"
#include "cpmat/family.hpp"
#include "cpmat/sampling.hpp"
#include "check_kind.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace cpmat;

namespace {

HarmonicScene scene(IntVector f, Complex a = {1.0, 0.0}, double sigma = 0.0, std::uint64_t seed = 7) {
    HarmonicScene s;
    s.amplitude = a;
    s.frequency = std::move(f);
    s.noise_sigma = sigma;
    s.seed = seed;
    return s;
}

}  // namespace

TEST_CASE("noiseless samples for trivial frequencies") {
    const IntMatrix m{{3, 0}, {1, 3}};
    const Complex a(0.5, -2.0);
    for (const auto& f : {IntVector{0, 0}, m.col(0), m.col(1), IntVector{-9, 3}}) {
        const auto grid = sample_signal(scene(f, a), m);
        CHECK(grid.points.size() == 9);
        for (const auto& x : grid.values) CHECK(std::abs(x - a) < 1e-12);
    }
}

TEST_CASE("the q=3 example peaks at the reduced frequency") {
    const IntMatrix m{{3, 0}, {1, 3}};
    const auto grid = sample_signal(scene({5, 7}), m);
    REQUIRE(grid.values.size() == 9);
    const auto det = detect_remainder(grid, 1.0);
    CHECK(det.residue.r() == oracle::reduce(m, {5, 7}));
    CHECK(std::abs(det.peak_magnitude - 9.0) < 9e-9);
}

TEST_CASE("noiseless detection is exact with clean off-peak bins") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 60; ++t) {
        const std::size_t d = 1 + t % 3;
        IntMatrix m = oracle::random_nonsingular(rng, d, d == 1 ? 40 : 6);
        const IntVector f = oracle::random_vector(rng, d, -1000000000, 1000000000);
        const Complex a(1.0 + t % 3, -0.5 * (t % 2));
        const auto grid = sample_signal(scene(f, a), m);
        const double full = std::abs(a) * std::abs(determinant(m).get_d());
        const IntVector r = oracle::reduce(m, f);
        for (const auto& bin : md_dft(grid)) {
            if (bin.k == r) {
                CHECK(std::abs(std::abs(bin.value) - full) <= 1e-9 * full);
            } else {
                CHECK(std::abs(bin.value) <= 1e-9 * full);
            }
        }
        if (std::abs(determinant(m).get_d()) > 1) {
            const auto det = detect_remainder(grid, 0.5, a);
            CHECK(det.residue.r() == r);
        }
    }
}

TEST_CASE("detection argument checks") {
    const IntMatrix m{{2, 1}, {0, 2}};
    const auto grid = sample_signal(scene({1, 1}), m);
    CHECK_THROWS_KIND(detect_remainder(grid, 0.0), ErrorKind::InvalidArgument);
    CHECK_THROWS_KIND(detect_remainder(grid, 1.5), ErrorKind::InvalidArgument);
    // a flat spectrum cannot be resolved
    SampleGrid flat = grid;
    flat.values.assign(flat.values.size(), Complex(0.0, 0.0));
    flat.values[0] = 1.0;
    CHECK_THROWS_KIND(detect_remainder(flat, 1.0), ErrorKind::AmbiguousPeak);
    // claimed amplitude larger than the signal
    CHECK_THROWS_KIND(detect_remainder(grid, 1.0, Complex(3.0, 0.0)), ErrorKind::PeakBelowThreshold);
    CHECK_THROWS_KIND(sample_signal(scene({1, 1}, {0.0, 0.0}), m), ErrorKind::InvalidArgument);
    CHECK_THROWS_KIND(sample_signal(scene({1, 1}, {1.0, 0.0}, -1.0), m), ErrorKind::InvalidArgument);
    CHECK_THROWS_KIND(sample_signal(scene({1, 1, 1}), m), ErrorKind::DimensionMismatch);
    CHECK_THROWS_KIND(sample_signal(scene({1, 1}), IntMatrix{{1, 2}, {2, 4}}), ErrorKind::Singular);
}

TEST_CASE("noisy sampling is reproducible per seed") {
    const IntMatrix m{{3, 0}, {1, 3}};
    const auto a = sample_signal(scene({5, 7}, {1.0, 0.0}, 0.3, 99), m);
    const auto b = sample_signal(scene({5, 7}, {1.0, 0.0}, 0.3, 99), m);
    const auto c = sample_signal(scene({5, 7}, {1.0, 0.0}, 0.3, 100), m);
    CHECK(a.values == b.values);
    CHECK(a.values != c.values);
}

TEST_CASE("end-to-end frequency estimation, D=2") {
    const auto fam = construct_family({2, 3}, generate_feasible_set(2, FeasibleKind::Cyclic));
    const auto est = estimate_frequency(scene({17, 29}), fam);
    CHECK(est.f_hat == IntVector{17, 29});
    CHECK(est.dynamic_range == 1296);
    CHECK_FALSE(est.out_of_range);
    CHECK(est.detections.size() == 4);

    CHECK(estimate_frequency(scene({0, 0}), fam).f_hat == IntVector{0, 0});

    const auto far = estimate_frequency(scene({40, 3}), fam, 0.5);
    CHECK(far.out_of_range);
    CHECK(far.f_hat == IntVector{4, 3});
}

TEST_CASE("end-to-end frequency estimation, D=4") {
    const auto fam = construct_family({2, 3}, generate_feasible_set(4, FeasibleKind::Cyclic));
    std::mt19937_64 rng(72);
    for (int seed = 0; seed < 100; ++seed) {
        const IntVector f = oracle::random_vector(rng, 4, 0, 1295);
        const auto est = estimate_frequency(scene(f, {1.0, 0.0}, 0.0, seed), fam);
        CHECK(est.f_hat == f);
    }
}

TEST_CASE("noise Monte Carlo reports an error rate") {
    const IntMatrix m{{3, 0}, {1, 3}};
    const auto low = remainder_error_rate(m, {1.0, 0.0}, 0.1, 200, 5);
    CHECK(low.trials == 200);
    CHECK(low.error_rate() <= 0.05);
    const auto high = remainder_error_rate(m, {1.0, 0.0}, 10.0, 200, 5);
    CHECK(high.error_rate() > low.error_rate());
    MESSAGE("remainder error rate at sigma=0.1: " << low.error_rate() << ", at sigma=10: " << high.error_rate());
}
