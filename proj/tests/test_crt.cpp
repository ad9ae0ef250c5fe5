#include "cpmat/crt.hpp"
#include "cpmat/divisibility.hpp"
#include "cpmat/family.hpp"
#include "cpmat/lattice.hpp"
#include "check_kind.hpp"
#include "oracles.hpp"

using namespace cpmat;

namespace {

std::vector<IntMatrix> family_matrices(const std::vector<Int>& qs, std::size_t d) {
    std::vector<IntMatrix> out;
    for (const auto& m : construct_family(qs, generate_feasible_set(d, FeasibleKind::Cyclic))) out.push_back(m.matrix);
    return out;
}

std::vector<Residue> residues_of(const IntVector& n, const std::vector<IntMatrix>& moduli) {
    std::vector<Residue> out;
    for (const auto& m : moduli) out.push_back(mod_reduce(n, m).residue);
    return out;
}

}  // namespace

TEST_CASE("Bezout pairs") {
    const auto id = bezout_pair(IntMatrix::identity(2), IntMatrix::identity(2));
    CHECK(id.P + id.Q == IntMatrix::identity(2));
    const auto ms = family_matrices({2, 3}, 2);
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = 0; b < ms.size(); ++b) {
            if (a == b) continue;
            const auto bp = bezout_pair(ms[a], ms[b]);
            CHECK(ms[a] * bp.P + ms[b] * bp.Q == IntMatrix::identity(2));
        }
    CHECK_THROWS_KIND(bezout_pair(ms[0], Int(2) * ms[0]), ErrorKind::NotCoprime);
}

TEST_CASE("crt_pair") {
    const auto ms = family_matrices({2, 3}, 2);  // M11, M12, M21, M22
    const auto zero = crt_pair(Residue({0, 0}, ms[0]), Residue({0, 0}, ms[1]));
    CHECK(zero.r() == IntVector{0, 0});
    CHECK(zero.modulus() == lcrm_pair(ms[0], ms[1]).canonical);

    const IntMatrix r = lcrm_pair(ms[0], ms[1]).canonical;
    if (Modulus(r).contains({3, 2})) {
        const auto rs = residues_of({3, 2}, {ms[0], ms[1]});
        CHECK(crt_pair(rs[0], rs[1]).r() == IntVector{3, 2});
    }

    // every n in FPD(lcrm(M11, M21)): 4 * 9 vectors
    const IntMatrix r2 = lcrm_pair(ms[0], ms[2]).canonical;
    const auto pts = fpd_enumerate(r2).points;
    CHECK(pts.size() == 36);
    for (const auto& n : pts) {
        const auto rs = residues_of(n, {ms[0], ms[2]});
        CHECK(crt_pair(rs[0], rs[1]).r() == n);
    }
    // adding M12 gives 16 * 9 = 144
    const std::vector<IntMatrix> three{ms[0], ms[1], ms[2]};
    const auto pts3 = fpd_enumerate(lcrm_family(three)).points;
    CHECK(pts3.size() == 144);
    for (const auto& n : pts3) CHECK(crt_solve(residues_of(n, three)).r() == n);
    CHECK_THROWS_KIND(crt_pair(Residue({0, 0}, ms[0]), Residue({0, 0}, Int(2) * ms[0])), ErrorKind::NotCoprime);
}

TEST_CASE("crt_solve on the full D=2 family") {
    const auto ms = family_matrices({2, 3}, 2);
    CHECK(crt_solve(residues_of({17, 23}, ms)).r() == IntVector{17, 23});
    CHECK(crt_solve(residues_of({17, 23}, ms)).modulus() == IntMatrix::scalar(2, 36));

    const Residue single({1, 1}, ms[2]);
    CHECK(crt_solve({single}) == single);
    CHECK_THROWS_KIND(crt_solve({}), ErrorKind::EmptyList);

    // periodic in R
    const IntVector n{5, 30};
    CHECK(crt_solve(residues_of(n + IntVector{36, 0}, ms)).r() == n);
    CHECK(crt_solve(residues_of(n - IntVector{0, 72}, ms)).r() == n);
}

TEST_CASE("exhaustive roundtrip and brute-force agreement, D=2, qs={2,3}") {
    const auto ms = family_matrices({2, 3}, 2);
    const CrtPlan plan(ms);
    const IntMatrix r = plan.lcrm();
    const auto pts = fpd_enumerate(r).points;
    REQUIRE(pts.size() == 1296);
    for (const auto& n : pts) {
        std::vector<IntVector> rem;
        for (const auto& m : ms) rem.push_back(oracle::reduce(m, n));
        CHECK(plan.solve(rem) == n);
    }
    // oracle equivalence on a sample of remainder tuples
    std::mt19937_64 rng(61);
    for (int t = 0; t < 12; ++t) {
        const IntVector n = pts[rng() % pts.size()];
        const auto rs = residues_of(n, ms);
        const auto bf = crt_brute_force(rs, r);
        REQUIRE(bf.has_value());
        CHECK(*bf == crt_solve(rs).r());
    }
}

TEST_CASE("every remainder combination has exactly one solution") {
    const IntMatrix a{{2, 0}, {1, 2}}, b{{3, 0}, {1, 3}};
    const IntMatrix r = lcrm_pair(a, b).canonical;
    const auto pts = fpd_enumerate(r).points;
    std::size_t combos = 0;
    for (const auto& ra : fpd_enumerate(a).points)
        for (const auto& rb : fpd_enumerate(b).points) {
            ++combos;
            const std::vector<Residue> rs{Residue(ra, a), Residue(rb, b)};
            const auto hits = oracle::crt_scan({a, b}, {ra, rb}, pts);
            CHECK(hits.size() == 1);
            CHECK(crt_brute_force(rs, r) == hits.front());
            CHECK(crt_solve(rs).r() == hits.front());
        }
    CHECK(combos == pts.size());
}

TEST_CASE("brute force edge cases") {
    CHECK(crt_brute_force({Residue({0, 0}, IntMatrix::identity(2))}, IntMatrix::identity(2)) == IntVector{0, 0});
    // moduli sharing a factor: R too small for uniqueness
    const IntMatrix a = IntMatrix::scalar(2, 2);
    CHECK_THROWS_KIND(crt_brute_force({Residue({0, 0}, a)}, IntMatrix::scalar(2, 4)), ErrorKind::MultipleSolutions);
    // no point of FPD(R) fits both residues
    const IntMatrix b = IntMatrix::scalar(2, 4);
    CHECK_FALSE(crt_brute_force({Residue({0, 0}, a), Residue({1, 0}, b)}, b).has_value());
}

TEST_CASE("fold order does not change the solution") {
    auto ms = family_matrices({2, 3}, 3);
    std::mt19937_64 rng(62);
    const IntMatrix r = lcrm_family(ms);
    for (int t = 0; t < 20; ++t) {
        const IntVector n = oracle::random_vector(rng, 3, 0, 215);
        REQUIRE(Modulus(r).contains(n));
        auto rs = residues_of(n, ms);
        const IntVector base = crt_solve(rs).r();
        CHECK(base == n);
        std::shuffle(rs.begin(), rs.end(), rng);
        CHECK(crt_solve(rs).r() == base);
    }
}

TEST_CASE("randomized roundtrip at D=4") {
    const auto ms = family_matrices({2, 3}, 4);
    const CrtPlan plan(ms);
    CHECK(plan.lcrm() == IntMatrix::scalar(4, 1296));
    std::mt19937_64 rng(63);
    for (int t = 0; t < 100; ++t) {
        const IntVector n = oracle::random_vector(rng, 4, 0, 1295);
        std::vector<IntVector> rem;
        for (const auto& m : ms) rem.push_back(oracle::reduce(m, n));
        CHECK(plan.solve(rem) == n);
    }
}
