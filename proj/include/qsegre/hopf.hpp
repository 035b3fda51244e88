#pragma once

#include "qsegre/algebra.hpp"
#include "qsegre/core.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsegre {

/**
 * Image of a state under the first, second or third Hopf map.
 *
 * order 1: 3 coordinates (2 Re a1 conj(a2), 2 Im a1 conj(a2), |a1|^2 - |a2|^2),
 *          the Bloch vector.
 * order 2: 5 coordinates (|q1|^2 - |q2|^2, w, x, y, z of 2 q1 conj(q2)).
 * order 3: 9 coordinates (|o1|^2 - |o2|^2, e0..e7 of 2 o1 conj(o2)).
 */
struct BasePoint {
    int order = 1;
    std::vector<double> coords;

    double squared_norm() const noexcept;
};

class UnsupportedOrder : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// q1 = a[1,1] + a[1,2] j, q2 = a[2,1] + a[2,2] j. With this packing the j part
/// of q1 conj(q2) is a[1,2] a[2,1] - a[1,1] a[2,2], the negated Segre minor.
std::pair<Quaternion, Quaternion> pack_quaternions(const PureState& two_qubit);
PureState unpack_quaternions(const Quaternion& q1, const Quaternion& q2);

/// o1 from the i1 = 1 block and o2 from the i1 = 2 block. Within a block the
/// amplitudes a[., 1,1], a[., 1,2], a[., 2,1], a[., 2,2] fill (e0,e1), (e2,e3),
/// (e4,e5), (e6,e7) as (Re, Im) pairs, which extends the quaternion packing.
std::pair<Octonion, Octonion> pack_octonions(const PureState& three_qubit);
PureState unpack_octonions(const Octonion& o1, const Octonion& o2);

BasePoint hopf1(const PureState& qubit);
BasePoint hopf2(const PureState& two_qubit);
BasePoint hopf3(const PureState& three_qubit);

/// The (y, z) coordinates of an order-2 base point: twice the j part of q1 conj(q2).
std::array<double, 2> j_sector(const BasePoint& point);

/**
 * Whether t lies on the same Hopf fiber as s.
 *
 * order 1: t = e^{i chi} s. order 2: (q1, q2)(t) = (q1 u, q2 u)(s) for a unit
 * quaternion u. Both the base points and the recovered fiber element must
 * agree within tol. Order 3 throws UnsupportedOrder.
 */
bool fiber_equivalent(int order, const PureState& s, const PureState& t, double tol = 1e-10);

} // namespace qsegre
