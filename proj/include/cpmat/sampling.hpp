#pragma once

#include "cpmat/family.hpp"
#include "cpmat/int_matrix.hpp"
#include "cpmat/lattice.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace cpmat {

using Complex = std::complex<double>;

/// Single-tone scene x(t) = a exp(j 2 pi f^T t) + w(t), with w circularly
/// symmetric complex Gaussian of standard deviation noise_sigma per sample.
struct HarmonicScene {
    Complex amplitude{1.0, 0.0};
    IntVector frequency;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;

    /// Throws InvalidArgument for a zero amplitude or negative sigma.
    void validate() const;
};

/// Samples x[n] for n in FPD(M^T), in FPD point order.
struct SampleGrid {
    IntMatrix matrix;
    std::vector<IntVector> points;
    std::vector<Complex> values;
};

/// x[n] = a exp(j 2 pi f^T M^-T n) + noise. The phase f^T M^-T n is formed as
/// an exact rational and reduced mod 1 before any trigonometry. `stream`
/// selects an independent noise stream derived from scene.seed.
SampleGrid sample_signal(const HarmonicScene& scene, const IntMatrix& m, std::uint64_t stream = 0);

struct SpectrumBin {
    IntVector k;
    Complex value;
};

/// X(k) = sum_n x[n] exp(-j 2 pi k^T M^-T n) for every k in FPD(M), by direct
/// summation. Throws DimensionMismatch if the grid was sampled with another matrix.
std::vector<SpectrumBin> md_dft(const SampleGrid& grid);

struct Detection {
    Residue residue;
    double peak_magnitude = 0.0;
    double runner_up_magnitude = 0.0;
};

/// Arg-max bin of the MD-DFT. With a known amplitude the peak must reach
/// threshold_ratio |a| |det M| (else PeakBelowThreshold). Two bins within
/// relative 1e-9 of each other raise AmbiguousPeak.
Detection detect_remainder(const SampleGrid& grid, double threshold_ratio,
                           std::optional<Complex> known_amplitude = std::nullopt);

struct FrequencyEstimate {
    IntVector f_hat;
    std::vector<Detection> detections;  // one per family member, in family order
    IntMatrix lcrm;                     // canonical lcrm of the family
    Int dynamic_range;                  // |det lcrm|
    bool out_of_range = false;          // true f not in FPD(lcrm); recovery not guaranteed
};

/// Sample and detect with every family member, then solve the MD-CRT.
/// When `threshold_ratio` is set the scene amplitude is treated as known.
FrequencyEstimate estimate_frequency(const HarmonicScene& scene,
                                     const std::vector<ConstructedMatrix>& family,
                                     std::optional<double> threshold_ratio = std::nullopt);

struct NoiseTrialReport {
    std::size_t trials = 0;
    std::size_t errors = 0;
    double error_rate() const { return trials ? static_cast<double>(errors) / trials : 0.0; }
};

/// Monte Carlo remainder-detection error rate for modulus M at the given
/// noise level, with frequencies drawn uniformly from [0, freq_bound)^D.
NoiseTrialReport remainder_error_rate(const IntMatrix& m, Complex amplitude, double noise_sigma,
                                      std::size_t trials, std::uint64_t seed,
                                      long freq_bound = 1000000);

}  // namespace cpmat
