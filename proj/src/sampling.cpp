#include "cpmat/sampling.hpp"

#include "cpmat/crt.hpp"
#include "cpmat/error.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace cpmat {

namespace {

// Phase arithmetic mod N = |det M|: k^T M^-T n = sign(det) (adj(M) k) . n / N.
class PhaseTable {
public:
    explicit PhaseTable(const Modulus& mod) : mod_(mod) {
        const Int n = mod.abs_det();
        if (!n.fits_uint_p()) {
            throw Error(ErrorKind::InvalidArgument, "|det M| too large for direct MD-DFT");
        }
        order_ = n.get_ui();
        twiddle_.resize(order_);
        for (std::uint64_t t = 0; t < order_; ++t) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) /
                                 static_cast<double>(order_);
            twiddle_[t] = Complex(std::cos(angle), std::sin(angle));
        }
    }

    std::uint64_t order() const { return order_; }
    const Complex& twiddle(std::uint64_t t) const { return twiddle_[t]; }

    /// sign(det) adj(M) v, each component reduced into [0, N).
    std::vector<std::uint64_t> phase_coefficients(const IntVector& v) const {
        IntVector g = mod_.adjugate() * v;
        std::vector<std::uint64_t> out(g.size());
        const Int n(static_cast<unsigned long>(order_));
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (sgn(mod_.det()) < 0) g[i] = -g[i];
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), g[i].get_mpz_t(), n.get_mpz_t());
            out[i] = r.get_ui();
        }
        return out;
    }

    /// Components of n reduced into [0, N).
    std::vector<std::uint64_t> reduce(const IntVector& v) const {
        std::vector<std::uint64_t> out(v.size());
        const Int n(static_cast<unsigned long>(order_));
        for (std::size_t i = 0; i < v.size(); ++i) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), v[i].get_mpz_t(), n.get_mpz_t());
            out[i] = r.get_ui();
        }
        return out;
    }

    std::uint64_t dot(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
        unsigned __int128 acc = 0;
        for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<unsigned __int128>(a[i]) * b[i];
        return static_cast<std::uint64_t>(acc % order_);
    }

private:
    const Modulus& mod_;
    std::uint64_t order_ = 1;
    std::vector<Complex> twiddle_;
};

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

void HarmonicScene::validate() const {
    if (amplitude == Complex(0.0, 0.0)) throw Error(ErrorKind::InvalidArgument, "amplitude must be nonzero");
    if (!(noise_sigma >= 0.0)) throw Error(ErrorKind::InvalidArgument, "noise_sigma must be >= 0");
    if (frequency.empty()) throw Error(ErrorKind::InvalidArgument, "frequency vector is empty");
}

SampleGrid sample_signal(const HarmonicScene& scene, const IntMatrix& m, std::uint64_t stream) {
    scene.validate();
    const Modulus mod(m);
    if (scene.frequency.size() != mod.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "frequency and sampling matrix sizes differ");
    }
    const PhaseTable table(mod);
    const auto f_coeff = table.phase_coefficients(scene.frequency);

    SampleGrid grid{m, fpd_enumerate(m.transpose()).points, {}};
    grid.values.reserve(grid.points.size());

    auto engine = make_engine(scene.seed, stream);
    std::normal_distribution<double> component(0.0, scene.noise_sigma / std::sqrt(2.0));
    for (const auto& n : grid.points) {
        Complex x = scene.amplitude * table.twiddle(table.dot(f_coeff, table.reduce(n)));
        if (scene.noise_sigma > 0.0) x += Complex(component(engine), component(engine));
        grid.values.push_back(x);
    }
    return grid;
}

std::vector<SpectrumBin> md_dft(const SampleGrid& grid) {
    const Modulus mod(grid.matrix);
    if (grid.points.size() != grid.values.size() ||
        Int(static_cast<unsigned long>(grid.points.size())) != mod.abs_det()) {
        throw Error(ErrorKind::DimensionMismatch, "sample grid does not cover FPD(M^T)");
    }
    const PhaseTable table(mod);
    std::vector<std::vector<std::uint64_t>> sample_idx;
    sample_idx.reserve(grid.points.size());
    for (const auto& n : grid.points) sample_idx.push_back(table.reduce(n));

    std::vector<SpectrumBin> out;
    for (auto& k : fpd_enumerate(grid.matrix).points) {
        const auto k_coeff = table.phase_coefficients(k);
        Complex acc(0.0, 0.0);
        for (std::size_t s = 0; s < sample_idx.size(); ++s) {
            acc += grid.values[s] * std::conj(table.twiddle(table.dot(k_coeff, sample_idx[s])));
        }
        out.push_back(SpectrumBin{std::move(k), acc});
    }
    return out;
}

Detection detect_remainder(const SampleGrid& grid, double threshold_ratio,
                           std::optional<Complex> known_amplitude) {
    if (!(threshold_ratio > 0.0 && threshold_ratio <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "threshold_ratio must lie in (0, 1]");
    }
    const auto spectrum = md_dft(grid);
    std::size_t best = 0;
    double peak = -1.0;
    double runner_up = 0.0;
    for (std::size_t b = 0; b < spectrum.size(); ++b) {
        const double mag = std::abs(spectrum[b].value);
        if (mag > peak) {
            runner_up = std::max(runner_up, peak);
            peak = mag;
            best = b;
        } else if (mag > runner_up) {
            runner_up = mag;
        }
    }
    if (spectrum.size() > 1 && runner_up >= peak * (1.0 - 1e-9)) {
        throw Error(ErrorKind::AmbiguousPeak, "top two MD-DFT bins are indistinguishable");
    }
    if (known_amplitude) {
        const double det = std::abs(Modulus(grid.matrix).det().get_d());
        const double floor = threshold_ratio * std::abs(*known_amplitude) * det;
        if (peak < floor) {
            throw Error(ErrorKind::PeakBelowThreshold,
                        "peak " + std::to_string(peak) + " below " + std::to_string(floor));
        }
    }
    return Detection{Residue(spectrum[best].k, grid.matrix), peak, std::max(runner_up, 0.0)};
}

FrequencyEstimate estimate_frequency(const HarmonicScene& scene,
                                     const std::vector<ConstructedMatrix>& family,
                                     std::optional<double> threshold_ratio) {
    scene.validate();
    if (family.empty()) throw Error(ErrorKind::EmptyList, "empty sampling family");

    FrequencyEstimate est;
    std::vector<IntMatrix> moduli;
    std::vector<IntVector> remainders;
    for (std::size_t idx = 0; idx < family.size(); ++idx) {
        const auto grid = sample_signal(scene, family[idx].matrix, idx);
        auto det = threshold_ratio
                       ? detect_remainder(grid, *threshold_ratio, scene.amplitude)
                       : detect_remainder(grid, 1.0);
        moduli.push_back(family[idx].matrix);
        remainders.push_back(det.residue.r());
        est.detections.push_back(std::move(det));
    }
    const CrtPlan plan(std::move(moduli));
    est.f_hat = plan.solve(remainders);
    est.lcrm = plan.lcrm();
    est.dynamic_range = abs(Modulus(est.lcrm).det());
    est.out_of_range = !Modulus(est.lcrm).contains(scene.frequency);
    return est;
}

NoiseTrialReport remainder_error_rate(const IntMatrix& m, Complex amplitude, double noise_sigma,
                                      std::size_t trials, std::uint64_t seed, long freq_bound) {
    const Modulus mod(m);
    auto engine = make_engine(seed, ~std::uint64_t{0});
    std::uniform_int_distribution<long> coord(0, freq_bound - 1);

    NoiseTrialReport rep;
    for (std::size_t t = 0; t < trials; ++t) {
        HarmonicScene scene;
        scene.amplitude = amplitude;
        scene.noise_sigma = noise_sigma;
        scene.seed = seed + t + 1;
        for (std::size_t i = 0; i < mod.dim(); ++i) scene.frequency.emplace_back(coord(engine));

        ++rep.trials;
        try {
            const auto det = detect_remainder(sample_signal(scene, m), 1.0);
            if (det.residue.r() != mod.reduce(scene.frequency)) ++rep.errors;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::AmbiguousPeak) throw;
            ++rep.errors;
        }
    }
    return rep;
}

}  // namespace cpmat
