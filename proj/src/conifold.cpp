#include "qsegre/conifold.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsegre {

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
} // namespace

Complex ConifoldPoint::quadric() const noexcept {
    Complex sum = 0.0;
    for (const Complex& c : z) sum += c * c;
    return sum;
}

bool ConifoldPoint::on_variety(double tol) const noexcept { return std::abs(quadric()) < tol; }

double ConifoldPoint::squared_norm() const noexcept {
    double sum = 0.0;
    for (const Complex& c : z) sum += std::norm(c);
    return sum;
}

AlphaCoords alpha_from_z(const ConifoldPoint& p) noexcept {
    const auto& [z1, z2, z3, z4] = p.z;
    return {z1 + kI * z2, -z4 + kI * z3, z4 + kI * z3, z1 - kI * z2};
}

ConifoldPoint z_from_alpha(const AlphaCoords& a) noexcept {
    const auto& [a11, a12, a21, a22] = a;
    return {{(a11 + a22) / 2.0, (a11 - a22) / (2.0 * kI), (a12 + a21) / (2.0 * kI), (a21 - a12) / 2.0}};
}

Complex segre_quadric(const AlphaCoords& a) noexcept { return a[0] * a[3] - a[1] * a[2]; }

RealFormResiduals real_form_residuals(const std::array<double, 4>& x,
                                      const std::array<double, 4>& y) noexcept {
    RealFormResiduals out;
    for (std::size_t i = 0; i < 4; ++i) {
        out.f1 += x[i] * x[i] - y[i] * y[i];
        out.f2 += x[i] * y[i];
    }
    return out;
}

BellRewrite bell_coefficients(const PureState& s) {
    if (s.dims() != std::vector<std::size_t>{2, 2})
        throw std::domain_error("Bell rewrite needs a two-qubit state");
    const double r2 = std::numbers::sqrt2;
    const Complex a11 = s[0], a12 = s[1], a21 = s[2], a22 = s[3];

    BellRewrite out;
    out.coefficients = {r2 * a11, r2 * kI * a12, r2 * kI * a21, -r2 * a22};
    const auto& [psi_p, psi_m, phi_p, phi_m] = out.coefficients;
    // Expand back onto |1,1>, |1,2>, |2,1>, |2,2>.
    out.reconstructed = {(psi_p + psi_m) / r2, (phi_p + phi_m) / r2, (phi_p - phi_m) / r2,
                         (psi_p - psi_m) / r2};

    double coeff_norm = 0.0;
    for (const Complex& c : out.coefficients) coeff_norm += std::norm(c);
    const double input_norm = s.squared_norm();
    out.norm_ratio = input_norm == 0.0 ? 0.0 : coeff_norm / input_norm;
    return out;
}

void T11Coords::validate() const {
    if (!(r >= 0.0)) throw std::domain_error("r must be nonnegative");
    if (!(psi >= 0.0 && psi < 4 * kPi)) throw std::domain_error("psi outside [0, 4pi)");
    if (!(theta1 >= 0.0 && theta1 <= kPi)) throw std::domain_error("theta1 outside [0, pi]");
    if (!(theta2 >= 0.0 && theta2 <= kPi)) throw std::domain_error("theta2 outside [0, pi]");
    if (!(phi1 >= 0.0 && phi1 <= 2 * kPi)) throw std::domain_error("phi1 outside [0, 2pi]");
    if (!(phi2 >= 0.0 && phi2 <= 2 * kPi)) throw std::domain_error("phi2 outside [0, 2pi]");
}

T11Point t11_point(const T11Coords& c) {
    c.validate();
    const double scale = std::pow(c.r, 1.5);
    const double s1 = std::sin(c.theta1 / 2), c1 = std::cos(c.theta1 / 2);
    const double s2 = std::sin(c.theta2 / 2), c2 = std::cos(c.theta2 / 2);
    auto phase = [](double angle) { return std::polar(1.0, angle / 2); };

    T11Point out;
    out.alpha = {
        scale * s1 * s2 * phase(c.psi - c.phi1 - c.phi2),
        scale * c1 * s2 * phase(c.psi + c.phi1 - c.phi2),
        scale * s1 * c2 * phase(c.psi - c.phi1 + c.phi2),
        scale * c1 * c2 * phase(c.psi + c.phi1 + c.phi2),
    };
    out.z = z_from_alpha(out.alpha);
    return out;
}

T11Metric t11_metric(const T11Coords& c) {
    c.validate();
    // One-form dpsi + cos theta1 dphi1 + cos theta2 dphi2 in (psi, theta1, phi1, theta2, phi2).
    Eigen::Matrix<double, 5, 1> fiber;
    fiber << 1.0, 0.0, std::cos(c.theta1), 0.0, std::cos(c.theta2);

    T11Metric out;
    out.angular = fiber * fiber.transpose() / 9.0;
    out.angular(1, 1) += 1.0 / 6.0;
    out.angular(2, 2) += std::sin(c.theta1) * std::sin(c.theta1) / 6.0;
    out.angular(3, 3) += 1.0 / 6.0;
    out.angular(4, 4) += std::sin(c.theta2) * std::sin(c.theta2) / 6.0;

    out.cone.setZero();
    out.cone(0, 0) = 1.0;
    out.cone.bottomRightCorner<5, 5>() = c.r * c.r * out.angular;
    return out;
}

} // namespace qsegre
