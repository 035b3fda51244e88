#include "qsegre/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qsegre {

namespace {

void require(const PureState& state, const std::vector<std::size_t>& dims, const char* what) {
    if (state.dims() != dims) throw std::domain_error(std::string(what) + ": wrong state dims");
    if (!state.is_normalized()) throw std::domain_error(std::string(what) + ": state is not unit norm");
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

} // namespace

double BasePoint::squared_norm() const noexcept {
    double s = 0.0;
    for (double c : coords) s += c * c;
    return s;
}

std::pair<Quaternion, Quaternion> pack_quaternions(const PureState& s) {
    if (s.dims() != std::vector<std::size_t>{2, 2})
        throw std::domain_error("quaternion packing needs dims (2,2)");
    return {Quaternion::from_complex_pair(s[0], s[1]), Quaternion::from_complex_pair(s[2], s[3])};
}

PureState unpack_quaternions(const Quaternion& q1, const Quaternion& q2) {
    return PureState({2, 2}, {q1.complex_part(), q1.j_part(), q2.complex_part(), q2.j_part()});
}

std::pair<Octonion, Octonion> pack_octonions(const PureState& s) {
    if (s.dims() != std::vector<std::size_t>{2, 2, 2})
        throw std::domain_error("octonion packing needs dims (2,2,2)");
    auto block = [&](std::size_t base) {
        std::array<double, 8> c{};
        for (std::size_t i = 0; i < 4; ++i) {
            c[2 * i] = s[base + i].real();
            c[2 * i + 1] = s[base + i].imag();
        }
        return Octonion::from_components(c);
    };
    return {block(0), block(4)};
}

PureState unpack_octonions(const Octonion& o1, const Octonion& o2) {
    std::vector<Complex> amplitudes;
    for (const Octonion* o : {&o1, &o2}) {
        const auto c = o->components();
        for (std::size_t i = 0; i < 4; ++i) amplitudes.emplace_back(c[2 * i], c[2 * i + 1]);
    }
    return PureState({2, 2, 2}, std::move(amplitudes));
}

BasePoint hopf1(const PureState& s) {
    require(s, {2}, "hopf1");
    const Complex cross = s[0] * std::conj(s[1]);
    return {1, {2 * cross.real(), 2 * cross.imag(), std::norm(s[0]) - std::norm(s[1])}};
}

BasePoint hopf2(const PureState& s) {
    require(s, {2, 2}, "hopf2");
    const auto [q1, q2] = pack_quaternions(s);
    const Quaternion p = q1 * q2.conj();
    return {2, {q1.norm2() - q2.norm2(), 2 * p.w, 2 * p.x, 2 * p.y, 2 * p.z}};
}

BasePoint hopf3(const PureState& s) {
    require(s, {2, 2, 2}, "hopf3");
    const auto [o1, o2] = pack_octonions(s);
    const auto p = (o1 * o2.conj()).components();
    BasePoint out{3, {o1.norm2() - o2.norm2()}};
    for (double c : p) out.coords.push_back(2 * c);
    return out;
}

std::array<double, 2> j_sector(const BasePoint& point) {
    if (point.order != 2 || point.coords.size() != 5)
        throw std::domain_error("j sector is defined for order-2 base points");
    return {point.coords[3], point.coords[4]};
}

bool fiber_equivalent(int order, const PureState& s, const PureState& t, double tol) {
    switch (order) {
    case 1: {
        const BasePoint hs = hopf1(s);
        const BasePoint ht = hopf1(t);
        if (max_abs_diff(hs.coords, ht.coords) >= tol) return false;
        Complex overlap = 0.0;
        for (std::size_t i = 0; i < 2; ++i) overlap += std::conj(s[i]) * t[i];
        if (std::abs(overlap) == 0.0) return false;
        const Complex phase = overlap / std::abs(overlap);
        double residual = 0.0;
        for (std::size_t i = 0; i < 2; ++i) residual += std::norm(t[i] - phase * s[i]);
        return std::sqrt(residual) < tol;
    }
    case 2: {
        const BasePoint hs = hopf2(s);
        const BasePoint ht = hopf2(t);
        if (max_abs_diff(hs.coords, ht.coords) >= tol) return false;
        const auto [q1, q2] = pack_quaternions(s);
        const auto [t1, t2] = pack_quaternions(t);
        // Least squares for u in (q1 u, q2 u) = (t1, t2); |q1|^2 + |q2|^2 = 1.
        const Quaternion u = (1.0 / (q1.norm2() + q2.norm2())) * (q1.conj() * t1 + q2.conj() * t2);
        const double residual = std::sqrt((q1 * u - t1).norm2() + (q2 * u - t2).norm2());
        return residual < tol && std::abs(u.norm() - 1.0) < tol;
    }
    default:
        throw UnsupportedOrder("fiber equivalence is only defined for orders 1 and 2, got " +
                               std::to_string(order));
    }
}

} // namespace qsegre
