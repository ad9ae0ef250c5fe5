#include "cpmat/crt.hpp"

#include "cpmat/divisibility.hpp"
#include "cpmat/error.hpp"
#include "cpmat/exact_core.hpp"
#include "cpmat/normal_forms.hpp"

#include <utility>

namespace cpmat {

BezoutPair bezout_pair(const IntMatrix& m1, const IntMatrix& m2) {
    if (!m1.is_square() || !m2.is_square() || m1.rows() != m2.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "bezout_pair needs two square matrices of equal size");
    }
    const std::size_t d = m1.rows();
    const auto smith = smith_decompose(m1.hstack(m2));
    if (smith.S != IntMatrix::identity(d).hstack(IntMatrix(d, d))) {
        throw Error(ErrorKind::NotCoprime, to_string(m1) + " and " + to_string(m2) +
                                               " are not left co-prime");
    }
    // (M1 M2) V = U^-1 (I 0): the first D columns of V solve M1 P' + M2 Q' = U^-1.
    const IntMatrix p = smith.V.block(0, 0, d, d) * smith.U;
    const IntMatrix q = smith.V.block(d, 0, d, d) * smith.U;
    return BezoutPair{p, q};
}

CrtPlan::CrtPlan(std::vector<IntMatrix> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw Error(ErrorKind::EmptyList, "no moduli");
    const std::size_t d = moduli_.front().rows();
    for (const auto& m : moduli_) {
        if (!m.is_square() || m.rows() != d) {
            throw Error(ErrorKind::DimensionMismatch, "moduli must be square of equal size");
        }
    }

    steps_.push_back(Step{IntMatrix(), Modulus(canonical_form(moduli_.front()))});
    for (std::size_t k = 1; k < moduli_.size(); ++k) {
        const IntMatrix& acc = steps_.back().modulus.matrix();
        const auto bz = bezout_pair(acc, moduli_[k]);
        IntMatrix next = lcrm_pair(acc, moduli_[k]).canonical;
        steps_.push_back(Step{acc * bz.P, Modulus(std::move(next))});
    }
}

IntVector CrtPlan::solve(const std::vector<IntVector>& remainders) const {
    if (remainders.size() != moduli_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "one remainder per modulus is required");
    }
    IntVector n = steps_.front().modulus.reduce(remainders.front());
    for (std::size_t k = 1; k < steps_.size(); ++k) {
        // n + R_k P_k (r - n) agrees with n mod R_k and with r mod M_{k+1}.
        const IntVector lifted = n + steps_[k].lift * (remainders[k] - n);
        n = steps_[k].modulus.reduce(lifted);
    }
    return n;
}

Residue crt_pair(const Residue& a, const Residue& b) {
    const CrtPlan plan({a.modulus(), b.modulus()});
    return Residue(plan.solve({a.r(), b.r()}), plan.lcrm());
}

Residue crt_solve(const std::vector<Residue>& residues) {
    if (residues.empty()) throw Error(ErrorKind::EmptyList, "no residues");
    if (residues.size() == 1) return residues.front();

    std::vector<IntMatrix> moduli;
    std::vector<IntVector> remainders;
    for (const auto& res : residues) {
        moduli.push_back(res.modulus());
        remainders.push_back(res.r());
    }
    const CrtPlan plan(std::move(moduli));
    Residue out(plan.solve(remainders), plan.lcrm());
    for (const auto& res : residues) {
        if (!Modulus(res.modulus()).congruent(out.r(), res.r())) {
            throw Error(ErrorKind::InternalMismatch,
                        "solution " + to_string(out.r()) + " violates remainder " + to_string(res.r()));
        }
    }
    return out;
}

std::optional<IntVector> crt_brute_force(const std::vector<Residue>& residues, const IntMatrix& r) {
    std::vector<Modulus> moduli;
    moduli.reserve(residues.size());
    for (const auto& res : residues) moduli.emplace_back(res.modulus());

    std::optional<IntVector> found;
    for (const auto& n : fpd_enumerate(r).points) {
        bool match = true;
        for (std::size_t k = 0; k < residues.size() && match; ++k) {
            match = moduli[k].congruent(n, residues[k].r());
        }
        if (!match) continue;
        if (found) {
            throw Error(ErrorKind::MultipleSolutions,
                        to_string(*found) + " and " + to_string(n) + " both match");
        }
        found = n;
    }
    return found;
}

}  // namespace cpmat
