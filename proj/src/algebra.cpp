#include "qsegre/algebra.hpp"

#include <cmath>

namespace qsegre {

double Quaternion::norm() const noexcept { return std::sqrt(norm2()); }

Quaternion operator*(const Quaternion& p, const Quaternion& q) noexcept {
    return {
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    };
}

Quaternion operator+(const Quaternion& p, const Quaternion& q) noexcept {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}

Quaternion operator-(const Quaternion& p, const Quaternion& q) noexcept {
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
}

Quaternion operator*(double s, const Quaternion& q) noexcept {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
}

Octonion Octonion::unit(int basis_index) noexcept {
    std::array<double, 8> c{};
    c[static_cast<std::size_t>(basis_index) & 7U] = 1.0;
    return from_components(c);
}

double Octonion::norm() const noexcept { return std::sqrt(norm2()); }

Octonion operator*(const Octonion& p, const Octonion& q) noexcept {
    return {p.a * q.a - q.b.conj() * p.b, q.b * p.a + p.b * q.a.conj()};
}

Octonion operator+(const Octonion& p, const Octonion& q) noexcept {
    return {p.a + q.a, p.b + q.b};
}

Octonion operator-(const Octonion& p, const Octonion& q) noexcept {
    return {p.a - q.a, p.b - q.b};
}

Octonion operator*(double s, const Octonion& q) noexcept { return {s * q.a, s * q.b}; }

} // namespace qsegre
