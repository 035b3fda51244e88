#include "qsegre/segre.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace qsegre {

namespace {

// Unordered pair of flat offsets, stored sorted.
using Monomial = std::pair<std::size_t, std::size_t>;

Monomial make_monomial(std::size_t p, std::size_t q) { return p < q ? Monomial{p, q} : Monomial{q, p}; }

std::vector<std::size_t> state_dims(std::span<const std::size_t> dims) {
    return {dims.begin(), dims.end()};
}

void check_descriptor(const PureState& state, const MinorDescriptor& g) {
    const std::size_t m = state.factor_count();
    if (g.coordinate < 1 || g.coordinate > m)
        throw std::domain_error("generator coordinate " + std::to_string(g.coordinate) +
                                " out of range [1," + std::to_string(m) + "]");
    // offset() validates lengths and bounds of both multi-indices.
    (void)state.offset(g.k);
    (void)state.offset(g.l);
}

} // namespace

MultiIndex MinorDescriptor::swapped_k() const {
    MultiIndex out = k;
    out.entries.at(coordinate - 1) = l.entries.at(coordinate - 1);
    return out;
}

MultiIndex MinorDescriptor::swapped_l() const {
    MultiIndex out = l;
    out.entries.at(coordinate - 1) = k.entries.at(coordinate - 1);
    return out;
}

std::optional<std::size_t> ResidualReport::worst() const {
    if (per_generator.empty()) return std::nullopt;
    std::size_t best = 0;
    for (std::size_t i = 1; i < per_generator.size(); ++i)
        if (std::abs(per_generator[i].residual) > std::abs(per_generator[best].residual)) best = i;
    return best;
}

PureState segre_embed(std::span<const std::vector<Complex>> factors) {
    if (factors.size() < 2) throw std::domain_error("segre_embed needs at least two factors");
    std::vector<std::size_t> dims;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        const auto& f = factors[j];
        if (std::none_of(f.begin(), f.end(), [](Complex c) { return c != 0.0; }))
            throw std::domain_error("factor " + std::to_string(j + 1) + " is the zero vector");
        dims.push_back(f.size());
    }

    std::vector<Complex> amplitudes{1.0};
    for (const auto& f : factors) {
        std::vector<Complex> next;
        next.reserve(amplitudes.size() * f.size());
        for (Complex a : amplitudes)
            for (Complex b : f) next.push_back(a * b);
        amplitudes = std::move(next);
    }
    return PureState(std::move(dims), std::move(amplitudes));
}

std::vector<MinorDescriptor> generate_generators(std::span<const std::size_t> dims) {
    if (dims.size() < 2) throw std::domain_error("generators need at least two factors");
    const std::size_t total = total_dimension(dims);
    // Zero amplitudes are enough to index the box.
    const PureState box(state_dims(dims), std::vector<Complex>(total));

    std::vector<MultiIndex> indices;
    indices.reserve(total);
    for (std::size_t p = 0; p < total; ++p) indices.push_back(box.index_at(p));

    // Keyed by (smaller monomial, larger monomial): equal keys are equal up to sign.
    std::map<std::pair<Monomial, Monomial>, MinorDescriptor> classes;
    for (std::size_t j = 1; j <= dims.size(); ++j) {
        if (dims[j - 1] < 2) continue;
        for (std::size_t p = 0; p < total; ++p) {
            for (std::size_t q = p + 1; q < total; ++q) {
                if (indices[p][j - 1] == indices[q][j - 1]) continue;
                MinorDescriptor d{j, indices[p], indices[q]};
                const Monomial first = make_monomial(p, q);
                const Monomial second = make_monomial(box.offset(d.swapped_k()), box.offset(d.swapped_l()));
                if (first == second) continue; // identically zero
                const Monomial lead = std::min(first, second);
                const auto key = std::make_pair(lead, std::max(first, second));
                if (classes.contains(key)) continue; // j only grows, so the first hit is canonical
                classes.emplace(key, MinorDescriptor{j, indices[lead.first], indices[lead.second]});
            }
        }
    }

    std::vector<MinorDescriptor> out;
    out.reserve(classes.size());
    for (auto& [key, d] : classes) out.push_back(std::move(d));
    return out;
}

Complex minor_value(const PureState& state, const MinorDescriptor& g) {
    check_descriptor(state, g);
    return state.at(g.k) * state.at(g.l) - state.at(g.swapped_k()) * state.at(g.swapped_l());
}

ResidualReport evaluate_residuals(const PureState& state, std::span<const MinorDescriptor> generators) {
    ResidualReport report;
    report.per_generator.reserve(generators.size());
    for (const auto& g : generators) {
        const Complex r = minor_value(state, g);
        report.max_modulus = std::max(report.max_modulus, std::abs(r));
        report.per_generator.push_back({g, r});
    }
    report.generator_count = report.per_generator.size();
    return report;
}

double concurrence_bipartite(const PureState& state, double normalization) {
    if (state.factor_count() != 2)
        throw std::domain_error("bipartite concurrence needs exactly two factors, got " +
                                std::to_string(state.factor_count()));
    if (!state.is_normalized()) throw std::domain_error("bipartite concurrence needs a normalized state");
    if (!(normalization > 0.0)) throw std::domain_error("normalization must be positive");

    const std::size_t n1 = state.dims()[0];
    const std::size_t n2 = state.dims()[1];
    auto a = [&](std::size_t row, std::size_t col) { return state[row * n2 + col]; };

    double sum = 0.0;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n2; ++k)
                for (std::size_t l = 0; l < n2; ++l)
                    sum += std::norm(a(i, k) * a(j, l) - a(i, l) * a(j, k));
    return std::sqrt(normalization * sum);
}

SeparabilityVerdict is_separable(const PureState& state, double tol) {
    const double norm2 = state.squared_norm();
    if (norm2 == 0.0) throw std::domain_error("separability is undefined for the zero vector");
    const auto generators = generate_generators(state.dims());
    SeparabilityVerdict verdict;
    verdict.report = evaluate_residuals(state, generators);
    verdict.threshold = tol * norm2;
    verdict.separable = verdict.report.max_modulus < verdict.threshold;
    return verdict;
}

double segre_residual_norm(const PureState& state) {
    const auto generators = generate_generators(state.dims());
    double sum = 0.0;
    for (const auto& g : generators) sum += std::norm(minor_value(state, g));
    return std::sqrt(sum);
}

std::string render_generator(const MinorDescriptor& g) {
    MultiIndex p = g.swapped_k();
    MultiIndex q = g.swapped_l();
    if (q < p) std::swap(p, q);
    return "a[" + g.k.to_string() + "]*a[" + g.l.to_string() + "] - a[" + p.to_string() + "]*a[" +
           q.to_string() + "]";
}

std::string render_generators_text(std::span<const MinorDescriptor> generators) {
    std::string out;
    for (const auto& g : generators) {
        out += render_generator(g);
        out += '\n';
    }
    return out;
}

} // namespace qsegre
