#pragma once

#include <array>
#include <complex>

namespace qsegre {

/// w + x i + y j + z k with the Hamilton product.
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    /// a + b j for complex a, b; i.e. (Re a, Im a, Re b, Im b).
    static Quaternion from_complex_pair(std::complex<double> a, std::complex<double> b) noexcept {
        return {a.real(), a.imag(), b.real(), b.imag()};
    }
    std::complex<double> complex_part() const noexcept { return {w, x}; }
    /// Coefficient b of j in q = a + b j.
    std::complex<double> j_part() const noexcept { return {y, z}; }

    std::array<double, 4> components() const noexcept { return {w, x, y, z}; }

    Quaternion conj() const noexcept { return {w, -x, -y, -z}; }
    double norm2() const noexcept { return w * w + x * x + y * y + z * z; }
    double norm() const noexcept;

    bool operator==(const Quaternion&) const = default;
};

Quaternion operator*(const Quaternion& p, const Quaternion& q) noexcept;
Quaternion operator+(const Quaternion& p, const Quaternion& q) noexcept;
Quaternion operator-(const Quaternion& p, const Quaternion& q) noexcept;
Quaternion operator*(double s, const Quaternion& q) noexcept;

inline Quaternion quaternion_mul(const Quaternion& p, const Quaternion& q) noexcept { return p * q; }

/**
 * Octonion as a Cayley-Dickson pair (a, b) of quaternions, with
 *
 *   (a, b)(c, d) = (a c - conj(d) b, d a + b conj(c)).
 *
 * Basis e_0..e_7: e_0..e_3 are 1, i, j, k in the first slot and e_4..e_7
 * are 1, i, j, k in the second slot.
 */
struct Octonion {
    Quaternion a, b;

    static Octonion from_components(const std::array<double, 8>& c) noexcept {
        return {{c[0], c[1], c[2], c[3]}, {c[4], c[5], c[6], c[7]}};
    }
    static Octonion unit(int basis_index) noexcept;

    std::array<double, 8> components() const noexcept {
        return {a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z};
    }

    Octonion conj() const noexcept { return {a.conj(), -1.0 * b}; }
    double norm2() const noexcept { return a.norm2() + b.norm2(); }
    double norm() const noexcept;

    bool operator==(const Octonion&) const = default;
};

Octonion operator*(const Octonion& p, const Octonion& q) noexcept;
Octonion operator+(const Octonion& p, const Octonion& q) noexcept;
Octonion operator-(const Octonion& p, const Octonion& q) noexcept;
Octonion operator*(double s, const Octonion& q) noexcept;

inline Octonion octonion_mul(const Octonion& p, const Octonion& q) noexcept { return p * q; }

} // namespace qsegre
