#include "qsegre/core.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qsegre {

std::string MultiIndex::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(entries[i]);
    }
    return out;
}

std::size_t total_dimension(std::span<const std::size_t> dims) {
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0) throw std::domain_error("factor dimension must be positive");
        if (total > std::numeric_limits<std::size_t>::max() / d)
            throw std::domain_error("total dimension overflows");
        total *= d;
    }
    return total;
}

PureState::PureState(std::vector<std::size_t> dims, std::vector<Complex> amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    if (dims_.empty()) throw std::domain_error("state needs at least one factor");
    if (total_dimension(dims_) != amplitudes_.size())
        throw std::domain_error("amplitude count " + std::to_string(amplitudes_.size()) +
                                " does not match product of dims " +
                                std::to_string(total_dimension(dims_)));
}

PureState PureState::basis(std::vector<std::size_t> dims, const MultiIndex& index) {
    const std::size_t n = total_dimension(dims);
    PureState state(std::move(dims), std::vector<Complex>(n));
    state.amplitudes_[state.offset(index)] = 1.0;
    return state;
}

std::size_t PureState::offset(const MultiIndex& index) const {
    if (index.size() != dims_.size())
        throw std::domain_error("multi-index has " + std::to_string(index.size()) +
                                " entries, state has " + std::to_string(dims_.size()) +
                                " factors");
    std::size_t flat = 0;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        const std::size_t entry = index[j];
        if (entry < 1 || entry > dims_[j])
            throw std::domain_error("multi-index entry " + std::to_string(entry) +
                                    " out of range [1," + std::to_string(dims_[j]) +
                                    "] at position " + std::to_string(j + 1));
        flat = flat * dims_[j] + (entry - 1);
    }
    return flat;
}

MultiIndex PureState::index_at(std::size_t flat) const {
    if (flat >= amplitudes_.size()) throw std::domain_error("offset out of range");
    MultiIndex index{std::vector<std::size_t>(dims_.size())};
    for (std::size_t j = dims_.size(); j-- > 0;) {
        index.entries[j] = flat % dims_[j] + 1;
        flat /= dims_[j];
    }
    return index;
}

double PureState::squared_norm() const noexcept {
    double sum = 0.0;
    for (const Complex& a : amplitudes_) sum += std::norm(a);
    return sum;
}

bool PureState::is_normalized(double tolerance) const noexcept {
    return std::abs(squared_norm() - 1.0) <= tolerance;
}

PureState PureState::normalized() const {
    const double norm = std::sqrt(squared_norm());
    if (norm == 0.0) throw std::domain_error("cannot normalize the zero vector");
    return scaled(1.0 / norm);
}

PureState PureState::scaled(Complex factor) const {
    PureState out = *this;
    for (Complex& a : out.amplitudes_) a *= factor;
    return out;
}

PureState state_from_angles(double theta, double phi, double chi, AngleConvention convention) {
    constexpr double pi = std::numbers::pi;
    if (!(theta >= 0.0 && theta <= pi)) throw std::domain_error("theta outside [0, pi]");
    if (!(phi >= 0.0 && phi <= 2 * pi)) throw std::domain_error("phi outside [0, 2pi]");
    if (!(chi >= 0.0 && chi <= 2 * pi)) throw std::domain_error("chi outside [0, 2pi]");

    const double first = std::cos(theta / 2);
    const double second =
        convention == AngleConvention::kPrinted ? std::cos(theta / 2) : std::sin(theta / 2);
    return PureState({2}, {first * std::polar(1.0, (phi + chi) / 2),
                           second * std::polar(1.0, (phi - chi) / 2)});
}

} // namespace qsegre
