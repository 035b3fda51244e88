#include "qsegre/oracle.hpp"

#include "qsegre/segre.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsegre {

namespace {

std::vector<std::size_t> complement(std::size_t m, std::span<const std::size_t> left) {
    std::vector<std::size_t> right;
    for (std::size_t j = 1; j <= m; ++j)
        if (std::find(left.begin(), left.end(), j) == left.end()) right.push_back(j);
    return right;
}

std::vector<std::size_t> validated_left(const PureState& state, std::span<const std::size_t> left) {
    const std::size_t m = state.factor_count();
    std::vector<std::size_t> sorted(left.begin(), left.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty() || sorted.size() >= m)
        throw std::domain_error("cut must be a nonempty proper subset of the factors");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::domain_error("cut lists a factor twice");
    if (sorted.front() < 1 || sorted.back() > m)
        throw std::domain_error("cut names a factor outside [1," + std::to_string(m) + "]");
    return sorted;
}

} // namespace

Eigen::MatrixXcd reshape_for_cut(const PureState& state, std::span<const std::size_t> left_in) {
    const auto left = validated_left(state, left_in);
    const auto right = complement(state.factor_count(), left);
    const auto& dims = state.dims();

    auto flat_over = [&](const MultiIndex& index, const std::vector<std::size_t>& positions) {
        std::size_t flat = 0;
        for (std::size_t j : positions) flat = flat * dims[j - 1] + (index[j - 1] - 1);
        return flat;
    };
    std::size_t rows = 1, cols = 1;
    for (std::size_t j : left) rows *= dims[j - 1];
    for (std::size_t j : right) cols *= dims[j - 1];

    Eigen::MatrixXcd matrix(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t p = 0; p < state.size(); ++p) {
        const MultiIndex index = state.index_at(p);
        matrix(static_cast<Eigen::Index>(flat_over(index, left)),
               static_cast<Eigen::Index>(flat_over(index, right))) = state[p];
    }
    return matrix;
}

SchmidtDecomposition schmidt_decompose(const PureState& state, std::span<const std::size_t> left) {
    if (state.size() > kMaxOracleDimension)
        throw std::length_error("state has " + std::to_string(state.size()) +
                                " amplitudes; the Schmidt oracle accepts at most " +
                                std::to_string(kMaxOracleDimension));
    SchmidtDecomposition out;
    const Eigen::MatrixXcd matrix = reshape_for_cut(state, left);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);

    // JacobiSVD already sorts singular values in decreasing order.
    const auto& values = svd.singularValues();
    out.spectrum.singular_values.assign(values.data(), values.data() + values.size());
    out.spectrum.left = validated_left(state, left);
    out.spectrum.right = complement(state.factor_count(), out.spectrum.left);
    out.left_vectors = svd.matrixU();
    out.right_vectors = svd.matrixV();
    return out;
}

SchmidtSpectrum schmidt(const PureState& state, std::span<const std::size_t> left) {
    return schmidt_decompose(state, left).spectrum;
}

bool full_separability(const PureState& state, double tol) {
    const std::size_t m = state.factor_count();
    if (m < 2) return true;
    for (std::size_t j = 1; j <= m; ++j) {
        const std::size_t cut[] = {j};
        const auto values = schmidt(state, cut).singular_values;
        if (values.size() > 1 && values[1] >= tol * values[0]) return false;
    }
    return true;
}

double StateRng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double StateRng::gaussian() {
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex StateRng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

PureState random_state(std::span<const std::size_t> dims, StateRng& rng) {
    const std::size_t n = total_dimension(dims);
    std::vector<Complex> amplitudes(n);
    for (Complex& a : amplitudes) a = rng.complex_gaussian();
    return PureState({dims.begin(), dims.end()}, std::move(amplitudes)).normalized();
}

PureState random_state(std::span<const std::size_t> dims, std::uint64_t seed) {
    StateRng rng(seed);
    return random_state(dims, rng);
}

PureState random_product_state(std::span<const std::size_t> dims, StateRng& rng) {
    std::vector<std::vector<Complex>> factors;
    for (std::size_t d : dims) {
        std::vector<Complex> f(d);
        double norm2 = 0.0;
        for (Complex& c : f) {
            c = rng.complex_gaussian();
            norm2 += std::norm(c);
        }
        for (Complex& c : f) c /= std::sqrt(norm2);
        factors.push_back(std::move(f));
    }
    if (factors.size() == 1) return PureState({dims[0]}, std::move(factors[0]));
    return segre_embed(factors);
}

PureState random_product_state(std::span<const std::size_t> dims, std::uint64_t seed) {
    StateRng rng(seed);
    return random_product_state(dims, rng);
}

} // namespace qsegre
