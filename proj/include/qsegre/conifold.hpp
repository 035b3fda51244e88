#pragma once

#include "qsegre/core.hpp"

#include <Eigen/Core>

#include <array>

namespace qsegre {

/// Four complex coordinates in the order (a'[1,1], a'[1,2], a'[2,1], a'[2,2]).
using AlphaCoords = std::array<Complex, 4>;

/// A point z of C^4, measured against the conifold sum z_i^2 = 0.
struct ConifoldPoint {
    std::array<Complex, 4> z{};

    /// sum z_i^2
    Complex quadric() const noexcept;
    bool on_variety(double tol = 1e-12) const noexcept;
    double squared_norm() const noexcept;
};

/**
 * Linear change of coordinates carrying the conifold onto the Segre quadric:
 *
 *   a'11 = z1 + i z2,  a'12 = -z4 + i z3,  a'21 = z4 + i z3,  a'22 = z1 - i z2,
 *
 * so that a'11 a'22 - a'12 a'21 = sum z_i^2.
 */
AlphaCoords alpha_from_z(const ConifoldPoint& point) noexcept;
ConifoldPoint z_from_alpha(const AlphaCoords& alpha) noexcept;

/// a'11 a'22 - a'12 a'21
Complex segre_quadric(const AlphaCoords& alpha) noexcept;

/// f1 = sum (x_i^2 - y_i^2), f2 = sum x_i y_i; for z = x + i y, sum z_i^2 = f1 + 2i f2.
struct RealFormResiduals {
    double f1 = 0.0;
    double f2 = 0.0;
};
RealFormResiduals real_form_residuals(const std::array<double, 4>& x,
                                      const std::array<double, 4>& y) noexcept;

/**
 * Two-qubit state rewritten in the Bell-type basis
 *
 *   Psi+- = (|1,1> +- |2,2>)/sqrt2,  Phi+- = (|1,2> +- |2,1>)/sqrt2,
 *
 * with coefficients (sqrt2 a11, sqrt2 i a12, sqrt2 i a21, -sqrt2 a22) on
 * (Psi+, Psi-, Phi+, Phi-). Note the grouping: Psi pairs |1,1> with |2,2>,
 * the reverse of the usual physics labels.
 *
 * The map is not unitary; the squared norm doubles and is never rescaled.
 */
struct BellRewrite {
    std::array<Complex, 4> coefficients{};
    /// Amplitudes of the rewritten state in the product basis, i.e. a'.
    AlphaCoords reconstructed{};
    /// sum |coefficients|^2 / sum |a|^2; 2 for any nonzero input.
    double norm_ratio = 0.0;
};
BellRewrite bell_coefficients(const PureState& two_qubit);

/// Radial coordinate and T^{1,1} angles. theta_i in [0, pi], phi_i in [0, 2pi],
/// psi in [0, 4pi), r >= 0.
struct T11Coords {
    double r = 1.0;
    double psi = 0.0;
    double theta1 = 0.0;
    double phi1 = 0.0;
    double theta2 = 0.0;
    double phi2 = 0.0;

    /// Throws std::domain_error when an invariant fails.
    void validate() const;
};

struct T11Point {
    AlphaCoords alpha{};
    ConifoldPoint z;
};

/**
 * a'11 = r^{3/2} e^{i(psi - phi1 - phi2)/2} sin(theta1/2) sin(theta2/2)
 * a'12 = r^{3/2} e^{i(psi + phi1 - phi2)/2} cos(theta1/2) sin(theta2/2)
 * a'21 = r^{3/2} e^{i(psi - phi1 + phi2)/2} sin(theta1/2) cos(theta2/2)
 * a'22 = r^{3/2} e^{i(psi + phi1 + phi2)/2} cos(theta1/2) cos(theta2/2)
 *
 * and z = z_from_alpha(a'). The result satisfies sum z_i^2 = 0 and
 * sum |a'|^2 = r^3; note sum |z|^2 = r^3 / 2 under this coordinate change.
 */
T11Point t11_point(const T11Coords& coords);

using AngularMetric = Eigen::Matrix<double, 5, 5>;
using ConeMetric = Eigen::Matrix<double, 6, 6>;

/**
 * Einstein metric on T^{1,1} in the coordinate order (psi, theta1, phi1, theta2, phi2):
 *
 *   (1/9)(dpsi + cos theta1 dphi1 + cos theta2 dphi2)^2
 *     + (1/6) sum_i (dtheta_i^2 + sin^2 theta_i dphi_i^2)
 *
 * and the cone metric dr^2 + r^2 (angular) in the order (r, psi, theta1, phi1, theta2, phi2).
 * The cone metric is the Kahler metric with potential (sum |a'|^2)^{2/3}.
 */
struct T11Metric {
    AngularMetric angular;
    ConeMetric cone;
};
T11Metric t11_metric(const T11Coords& coords);

} // namespace qsegre
