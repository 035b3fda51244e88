#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qsegre {

using Complex = std::complex<double>;

/// Absolute tolerance for the unit-norm precondition on states.
inline constexpr double kUnitNormTolerance = 1e-12;

/**
 * A multi-index (i_1, ..., i_m) addressing one amplitude of a multipartite
 * state. Entries are 1-based so that |1>, |2>, ... label the local basis.
 */
struct MultiIndex {
    std::vector<std::size_t> entries;

    std::size_t size() const noexcept { return entries.size(); }
    std::size_t operator[](std::size_t position) const { return entries[position]; }

    auto operator<=>(const MultiIndex&) const = default;

    /// Renders as "1,2,1".
    std::string to_string() const;
};

/**
 * Pure state of an m-partite system, stored as the box-shaped amplitude
 * array of size N_1 x ... x N_m in row-major order (last index fastest).
 *
 * The amplitudes are homogeneous coordinates: the class does not force unit
 * norm. Operations that need a normalized state check it explicitly.
 */
class PureState {
public:
    /// Throws std::domain_error if any dimension is zero, dims is empty, or
    /// the amplitude count differs from the product of dims.
    PureState(std::vector<std::size_t> dims, std::vector<Complex> amplitudes);

    /// Basis state |index>.
    static PureState basis(std::vector<std::size_t> dims, const MultiIndex& index);

    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::size_t factor_count() const noexcept { return dims_.size(); }
    std::size_t size() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

    /// Flat row-major offset of a 1-based multi-index. Throws std::domain_error
    /// when the index does not fit the dims.
    std::size_t offset(const MultiIndex& index) const;
    MultiIndex index_at(std::size_t offset) const;

    Complex operator[](std::size_t offset) const { return amplitudes_[offset]; }
    Complex at(const MultiIndex& index) const { return amplitudes_[offset(index)]; }

    double squared_norm() const noexcept;
    bool is_normalized(double tolerance = kUnitNormTolerance) const noexcept;

    /// Throws std::domain_error for the zero vector.
    PureState normalized() const;
    PureState scaled(Complex factor) const;

    bool operator==(const PureState&) const = default;

private:
    std::vector<std::size_t> dims_;
    std::vector<Complex> amplitudes_;
};

/// Product of dims; throws std::domain_error on overflow.
std::size_t total_dimension(std::span<const std::size_t> dims);

enum class AngleConvention {
    /// cos(theta/2) in both slots: the literal two-cosine form, kept for reference.
    /// Not normalized for theta outside {0, pi}.
    kPrinted,
    /// cos(theta/2) and sin(theta/2): the usual Bloch parameterization.
    kCorrected,
};

/**
 * One-qubit state from Bloch-type angles:
 *   a_1 = cos(theta/2) e^{i(phi+chi)/2}
 *   a_2 = {cos|sin}(theta/2) e^{i(phi-chi)/2}
 *
 * theta in [0, pi], phi and chi in [0, 2 pi]; otherwise std::domain_error.
 */
PureState state_from_angles(double theta, double phi, double chi,
                            AngleConvention convention = AngleConvention::kCorrected);

} // namespace qsegre
