#include "qsegre/algebra.hpp"
#include "qsegre/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>

using namespace qsegre;

namespace {

Quaternion random_quaternion(StateRng& rng) {
    return {rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
}

Octonion random_octonion(StateRng& rng) { return {random_quaternion(rng), random_quaternion(rng)}; }

double distance(const Octonion& p, const Octonion& q) { return (p - q).norm(); }

// e_i e_j = sign(t) e_{|t|-1}. Expanded once from the Cayley-Dickson rule with
// quaternions modeled as 2x2 complex matrices, then frozen.
constexpr int kOctonionTable[8][8] = {
    {1, 2, 3, 4, 5, 6, 7, 8},
    {2, -1, 4, -3, 6, -5, -8, 7},
    {3, -4, -1, 2, 7, 8, -5, -6},
    {4, 3, -2, -1, 8, -7, 6, -5},
    {5, -6, -7, -8, -1, 2, 3, 4},
    {6, 5, -8, 7, -2, -1, -4, 3},
    {7, 8, 5, -6, -3, 4, -1, -2},
    {8, -7, 6, 5, -4, -3, 2, -1},
};

} // namespace

TEST_CASE("quaternion defining relations") {
    const Quaternion one{1, 0, 0, 0}, i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    const Quaternion q{0.3, -1.2, 2.0, 0.5};
    CHECK(one * q == q);
    CHECK(q * one == q);
    CHECK(i * j == k);
    CHECK(j * i == -1.0 * k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(i * i == -1.0 * one);
    CHECK(i * j * k == -1.0 * one);
}

TEST_CASE("quaternion norm is multiplicative and the product associative") {
    StateRng rng(11);
    for (int n = 0; n < 1000; ++n) {
        const Quaternion p = random_quaternion(rng), q = random_quaternion(rng), r = random_quaternion(rng);
        CHECK(std::abs((p * q).norm() - p.norm() * q.norm()) < 1e-12 * (1 + p.norm() * q.norm()));
        CHECK(((p * q) * r - p * (q * r)).norm() < 1e-12 * (1 + p.norm() * q.norm() * r.norm()));
    }
}

TEST_CASE("complex pair packing") {
    const Quaternion q = Quaternion::from_complex_pair({1, 2}, {3, 4});
    CHECK(q == Quaternion{1, 2, 3, 4});
    CHECK(q.complex_part() == std::complex<double>(1, 2));
    CHECK(q.j_part() == std::complex<double>(3, 4));
    // (b j) as a product of the complex number b and j.
    const Quaternion b{3, 4, 0, 0}, j{0, 0, 1, 0};
    CHECK(b * j == Quaternion{0, 0, 3, 4});
}

TEST_CASE("octonion multiplication table matches the frozen golden table") {
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const int entry = kOctonionTable[i][j];
            const Octonion expected = static_cast<double>(entry > 0 ? 1 : -1) * Octonion::unit(std::abs(entry) - 1);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(Octonion::unit(i) * Octonion::unit(j) == expected);
        }
    }
    // The quaternion slot is a subalgebra: e1 e2 = e3.
    CHECK(Octonion::unit(1) * Octonion::unit(2) == Octonion::unit(3));
}

TEST_CASE("octonion identity, norm multiplicativity and alternativity") {
    StateRng rng(12);
    const Octonion one = Octonion::unit(0);
    for (int n = 0; n < 1000; ++n) {
        const Octonion p = random_octonion(rng), q = random_octonion(rng);
        const double scale = 1 + p.norm() * q.norm();
        CHECK(distance(one * q, q) == 0.0);
        CHECK(std::abs((p * q).norm() - p.norm() * q.norm()) < 1e-12 * scale);
        CHECK(distance((p * p) * q, p * (p * q)) < 1e-12 * (1 + p.norm() * p.norm() * q.norm()));
        CHECK(distance((q * p) * p, q * (p * p)) < 1e-12 * (1 + p.norm() * p.norm() * q.norm()));
        CHECK(distance(p * p.conj(), p.norm2() * one) < 1e-12 * (1 + p.norm2()));
    }
}

TEST_CASE("octonions are not associative") {
    StateRng rng(13);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        Octonion p = random_octonion(rng), q = random_octonion(rng), r = random_octonion(rng);
        p = (1 / p.norm()) * p;
        q = (1 / q.norm()) * q;
        r = (1 / r.norm()) * r;
        worst = std::max(worst, distance((p * q) * r, p * (q * r)));
    }
    CHECK(worst > 1e-3);
    // A basis witness: (e1 e2) e4 = -e1 (e2 e4).
    const Octonion e1 = Octonion::unit(1), e2 = Octonion::unit(2), e4 = Octonion::unit(4);
    CHECK((e1 * e2) * e4 == -1.0 * (e1 * (e2 * e4)));
}
