#pragma once

#include "qsegre/core.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qsegre {

/// Largest amplitude count the Schmidt oracle accepts.
inline constexpr std::size_t kMaxOracleDimension = 4096;
inline constexpr double kDefaultRankTolerance = 1e-9;

struct SchmidtSpectrum {
    /// Descending, nonnegative.
    std::vector<double> singular_values;
    /// 1-based factor positions on each side of the cut.
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
};

struct SchmidtDecomposition {
    SchmidtSpectrum spectrum;
    /// The reshaped amplitude matrix (rows: left factors, cols: right factors)
    /// equals left_vectors * diag(singular_values) * right_vectors^H.
    Eigen::MatrixXcd left_vectors;
    Eigen::MatrixXcd right_vectors;
};

/// Amplitudes as a matrix whose rows run over the `left` factors and columns
/// over the rest, both in row-major order of the remaining multi-index.
Eigen::MatrixXcd reshape_for_cut(const PureState& state, std::span<const std::size_t> left);

/// `left` must be a nonempty proper subset of {1..m}; throws std::domain_error
/// otherwise and std::length_error above kMaxOracleDimension amplitudes.
SchmidtSpectrum schmidt(const PureState& state, std::span<const std::size_t> left);
SchmidtDecomposition schmidt_decompose(const PureState& state, std::span<const std::size_t> left);

/// True iff every single-factor cut {j} | rest has Schmidt rank one, i.e. its
/// second singular value is below tol times the largest.
bool full_separability(const PureState& state, double tol = kDefaultRankTolerance);

/**
 * Seedable source for random states with a fixed stream: std::mt19937_64
 * (fully specified by the standard), uniforms from the top 53 bits, and
 * Gaussians from the cosine branch of Box-Muller, one pair of uniforms per
 * draw. Unlike std::normal_distribution this is identical across standard
 * libraries.
 */
class StateRng {
public:
    explicit StateRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform();
    double gaussian();
    /// Independent standard normal real and imaginary parts.
    Complex complex_gaussian();

private:
    std::mt19937_64 engine_;
};

/// Complex Gaussian amplitudes, normalized.
PureState random_state(std::span<const std::size_t> dims, StateRng& rng);
PureState random_state(std::span<const std::size_t> dims, std::uint64_t seed);

/// Product of independently drawn, normalized per-factor Gaussian vectors.
PureState random_product_state(std::span<const std::size_t> dims, StateRng& rng);
PureState random_product_state(std::span<const std::size_t> dims, std::uint64_t seed);

} // namespace qsegre
