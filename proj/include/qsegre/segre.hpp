#pragma once

#include "qsegre/core.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qsegre {

/// Default relative threshold for separability verdicts.
inline constexpr double kDefaultSeparabilityTolerance = 1e-9;

/**
 * One quadric generator of the Segre ideal: the 2x2 minor about coordinate j
 *
 *   a[k] a[l] - a[k with k_j := l_j] a[l with l_j := k_j].
 *
 * Descriptors returned by generate_generators() are canonical: k < l, the
 * monomial a[k] a[l] is the lexicographically smaller of the two, and j is
 * the smallest coordinate that produces the same polynomial up to sign.
 */
struct MinorDescriptor {
    std::size_t coordinate = 1; ///< j, 1-based
    MultiIndex k;
    MultiIndex l;

    MultiIndex swapped_k() const;
    MultiIndex swapped_l() const;

    bool operator==(const MinorDescriptor&) const = default;
};

struct GeneratorResidual {
    MinorDescriptor generator;
    Complex residual;
};

struct ResidualReport {
    std::vector<GeneratorResidual> per_generator;
    double max_modulus = 0.0;
    std::size_t generator_count = 0;

    /// Position of the generator attaining max_modulus, if any.
    std::optional<std::size_t> worst() const;
};

struct SeparabilityVerdict {
    bool separable = false;
    /// Absolute cutoff actually applied: tol * squared norm.
    double threshold = 0.0;
    ResidualReport report;
};

/// Product state with amplitude a[i_1..i_m] = prod_j factors[j][i_j].
/// Requires at least two factors, each nonzero.
PureState segre_embed(std::span<const std::vector<Complex>> factors);

/// All canonical, pairwise distinct, not identically zero minors for dims.
/// Factors of dimension 1 contribute no minors. Throws for fewer than two factors.
std::vector<MinorDescriptor> generate_generators(std::span<const std::size_t> dims);

Complex minor_value(const PureState& state, const MinorDescriptor& generator);

ResidualReport evaluate_residuals(const PureState& state,
                                  std::span<const MinorDescriptor> generators);

/// (N * sum over ordered (i, j, k, l) of |a_ik a_jl - a_il a_jk|^2)^(1/2).
/// Every minor is counted four times, zeros included.
double concurrence_bipartite(const PureState& state, double normalization = 1.0);

/// Verdict against the canonical generators of the state's dims, using the
/// cutoff tol * |state|^2 on the largest residual modulus.
SeparabilityVerdict is_separable(const PureState& state,
                                 double tol = kDefaultSeparabilityTolerance);

/// Root-sum-square of all canonical minors. A diagnostic only; it is not
/// normalized to agree with any concurrence convention.
double segre_residual_norm(const PureState& state);

/// "a[1,1]*a[2,2] - a[1,2]*a[2,1]"
std::string render_generator(const MinorDescriptor& generator);
/// One generator per line, in the given order, each line newline-terminated.
std::string render_generators_text(std::span<const MinorDescriptor> generators);

} // namespace qsegre
