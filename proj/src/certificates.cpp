#include "kdv/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace kdv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

double length_limit() { return std::sqrt(3.0) * kPi; }

void require_mu(double mu1, double mu2) {
    if (!(mu1 > 0) || !(mu2 > 0) || !(mu2 < 1)) {
        std::ostringstream msg;
        msg << "need mu1 > 0 and mu2 in (0,1), got mu1 = " << mu1
            << ", mu2 = " << mu2;
        throw InvalidLyapunovParams(msg.str());
    }
}

} // namespace

bool is_admissible(double alpha, double beta) {
    return std::abs(alpha) + std::abs(beta) < 1.0;
}

BoundaryMatrix boundary_matrix_M(double alpha, double beta) {
    BoundaryMatrix m;
    m.kind = BoundaryMatrix::Kind::M;
    m.m11 = alpha * alpha - 1.0 + std::abs(beta);
    m.m12 = alpha * beta;
    m.m21 = m.m12;
    m.m22 = beta * beta - std::abs(beta);
    return m;
}

BoundaryMatrix boundary_matrix_M_tilde(double alpha, double beta) {
    BoundaryMatrix m;
    m.kind = BoundaryMatrix::Kind::M_tilde;
    m.m11 = alpha * alpha + std::abs(beta) - 1.0;
    m.m12 = alpha * std::abs(beta);
    m.m21 = m.m12;
    m.m22 = beta * beta - std::abs(beta);
    return m;
}

BoundaryMatrix boundary_matrix_Mmu(double alpha, double beta, double L,
                                   double mu1, double mu2) {
    require_mu(mu1, mu2);
    if (!(L > 0)) {
        throw InvalidLyapunovParams("need L > 0, got " + std::to_string(L));
    }
    BoundaryMatrix m;
    m.kind = BoundaryMatrix::Kind::M_mu;
    const double grow = 1.0 + L * mu1;
    m.m11 = grow * alpha * alpha - 1.0 + std::abs(beta) + mu2;
    m.m12 = alpha * beta * grow;
    m.m21 = m.m12;
    m.m22 = grow * beta * beta - std::abs(beta);
    return m;
}

bool is_negative_definite(const BoundaryMatrix& m) {
    return m.trace() < 0.0 && m.det() > 0.0;
}

double Remark3Bounds::mu1_max(double mu2) const {
    const double a2 = alpha * alpha;
    const double b2 = beta * beta;
    const double ab = std::abs(beta);

    const double num1 = 1.0 - mu2 - (a2 + b2);
    const double den1 = L * (a2 + b2);
    const double term1 = den1 > 0 ? num1 / den1 : kInf;

    const double num2 = (ab - 1.0) * (ab - 1.0) - a2 - mu2 * (1.0 - ab);
    const double den2 = L * (a2 - b2 + ab * (1.0 - mu2));
    const double term2 = den2 > 0 ? num2 / den2 : kInf;

    return std::min(term1, term2);
}

bool Remark3Bounds::mu1_degenerate(double mu2) const {
    return L * (alpha * alpha - beta * beta + std::abs(beta) * (1.0 - mu2)) <= 0;
}

Remark3Bounds remark3_bounds(double alpha, double beta, double L) {
    if (beta == 0.0) {
        throw BetaZero("mu bounds need beta != 0; with beta = 0 the scalar "
                       "criterion |alpha| < 1 applies");
    }
    if (!is_admissible(alpha, beta)) {
        std::ostringstream msg;
        msg << "pair is not admissible: |" << alpha << "| + |" << beta
            << "| >= 1";
        throw NotAdmissible(msg.str());
    }
    if (!(L > 0)) {
        throw NonPositiveParameter("need L > 0, got " + std::to_string(L));
    }

    const double a2 = alpha * alpha;
    const double b2 = beta * beta;
    const double ab = std::abs(beta);

    Remark3Bounds bounds;
    bounds.alpha = alpha;
    bounds.beta = beta;
    bounds.L = L;
    bounds.mu2_max = std::min({1.0 - a2 - b2,
                               ((ab - 1.0) * (ab - 1.0) - a2) / (1.0 - ab),
                               (a2 - b2 + ab) / ab});
    return bounds;
}

double smallness_radius(double L) {
    if (!(L > 0) || !(L < length_limit())) {
        std::ostringstream msg;
        msg << "need 0 < L < sqrt(3)*pi, got L = " << L;
        throw LengthOutOfRange(msg.str());
    }
    return 3.0 * (3.0 * kPi * kPi - L * L) / (2.0 * std::pow(L, 1.5) * kPi * kPi);
}

double gamma_bound(double L, double r, double mu1, double mu2, double beta,
                   double h, bool nonlinear) {
    if (!(L > 0) || !(L < length_limit())) {
        std::ostringstream msg;
        msg << "need 0 < L < sqrt(3)*pi, got L = " << L;
        throw LengthOutOfRange(msg.str());
    }
    require_mu(mu1, mu2);
    if (!(h > 0)) {
        throw NonPositiveParameter("need h > 0, got " + std::to_string(h));
    }

    double interior;
    if (nonlinear) {
        if (!(r < smallness_radius(L))) {
            std::ostringstream msg;
            msg << "r = " << r << " is not below the smallness radius "
                << smallness_radius(L) << " at L = " << L;
            throw RadiusTooLarge(msg.str());
        }
        interior = (9.0 * kPi * kPi - 3.0 * L * L -
                    2.0 * std::pow(L, 1.5) * r * kPi * kPi) *
                   mu1 / (6.0 * L * L * (1.0 + L * mu1));
    } else {
        interior = (3.0 * kPi * kPi - L * L) * mu1 / (2.0 * L * L * (1.0 + L * mu1));
    }
    const double transport = mu2 / (2.0 * (mu2 + std::abs(beta)) * h);
    return std::min(interior, transport);
}

CriticalLengthHit is_critical_length(double L, double tol, int k_max) {
    if (!(L > 0) || !(tol > 0) || k_max < 1) {
        std::ostringstream msg;
        msg << "need L > 0, tol > 0, k_max >= 1, got L = " << L
            << ", tol = " << tol << ", k_max = " << k_max;
        throw ValidationError(msg.str());
    }
    for (int k = 1; k <= k_max; ++k) {
        // Every value with this k is at least 2*pi*sqrt(k^2/3).
        if (2.0 * kPi * k / std::sqrt(3.0) > L + tol) break;
        for (int l = k; l <= k_max; ++l) {
            const double value =
                2.0 * kPi * std::sqrt((static_cast<double>(k) * k + static_cast<double>(k) * l +
                                       static_cast<double>(l) * l) /
                                      3.0);
            if (value > L + tol) break;
            if (std::abs(L - value) <= tol) return {true, k, l};
        }
    }
    return {false, 0, 0};
}

std::vector<CriticalLength> critical_lengths_below(double L_max, double merge_tol) {
    if (!(L_max > 0)) {
        throw NonPositiveParameter("need L_max > 0, got " + std::to_string(L_max));
    }
    std::vector<CriticalLength> out;
    for (int k = 1;; ++k) {
        if (2.0 * kPi * k / std::sqrt(3.0) >= L_max) break;
        for (int l = k;; ++l) {
            const double value =
                2.0 * kPi * std::sqrt((static_cast<double>(k) * k + static_cast<double>(k) * l +
                                       static_cast<double>(l) * l) /
                                      3.0);
            if (value >= L_max) break;
            out.push_back({value, k, l});
        }
    }
    // Stable so that value collisions (e.g. (1,9) and (5,6) share
    // k^2+kl+l^2 = 91) keep the first-enumerated witness.
    std::stable_sort(out.begin(), out.end(),
                     [](const CriticalLength& a, const CriticalLength& b) {
                         return a.value < b.value;
                     });
    std::vector<CriticalLength> distinct;
    for (const CriticalLength& c : out) {
        if (distinct.empty() || c.value - distinct.back().value > merge_tol) {
            distinct.push_back(c);
        }
    }
    return distinct;
}

CertificateReport certify(double alpha, double beta, double L, double h,
                          bool nonlinear_gamma) {
    if (!(L > 0)) {
        throw NonPositiveParameter("need L > 0, got " + std::to_string(L));
    }
    if (!(h > 0)) {
        throw NonPositiveParameter("need h > 0, got " + std::to_string(h));
    }

    CertificateReport rep;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.L = L;
    rep.h = h;

    rep.admissible = is_admissible(alpha, beta);
    rep.no_delay_stabilizable = std::abs(alpha) < 1.0;

    rep.M = boundary_matrix_M(alpha, beta);
    rep.M_tilde = boundary_matrix_M_tilde(alpha, beta);
    rep.M_negdef = is_negative_definite(rep.M);
    rep.Mtilde_negdef = is_negative_definite(rep.M_tilde);

    const CriticalLengthHit hit = is_critical_length(L);
    rep.critical = hit.critical;
    rep.critical_k = hit.k;
    rep.critical_l = hit.l;

    rep.mu2_max = rep.mu1_max = rep.mu1 = rep.mu2 = kNaN;
    rep.r_max = rep.r = rep.gamma = rep.kappa = kNaN;
    rep.gamma_is_nonlinear = nonlinear_gamma;

    const bool length_ok = L < length_limit();
    if (length_ok) rep.r_max = smallness_radius(L);

    if (rep.admissible && beta != 0.0) {
        const Remark3Bounds bounds = remark3_bounds(alpha, beta, L);
        rep.mu2_max = bounds.mu2_max;
        rep.mu2 = bounds.mu2_max / 2.0;
        rep.mu1_max = bounds.mu1_max(rep.mu2);
        rep.mu1 = rep.mu1_max / 2.0;
        rep.mu1_bound_degenerate = bounds.mu1_degenerate(rep.mu2);
        rep.Mmu_negdef =
            is_negative_definite(boundary_matrix_Mmu(alpha, beta, L, rep.mu1, rep.mu2));
        rep.kappa = 1.0 + std::max(L * rep.mu1, rep.mu2 / std::abs(beta));

        if (length_ok) {
            rep.r = nonlinear_gamma ? rep.r_max / 2.0 : 0.0;
            rep.gamma = gamma_bound(L, rep.r, rep.mu1, rep.mu2, beta, h,
                                    nonlinear_gamma);
        }
    }
    return rep;
}

} // namespace kdv
