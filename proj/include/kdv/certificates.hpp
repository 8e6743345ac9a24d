#pragma once

#include <vector>

#include "kdv/errors.hpp"

namespace kdv {

/// The symmetric 2x2 quadratic form governing boundary dissipation, in one
/// of its three flavors.
struct BoundaryMatrix {
    enum class Kind { M, M_tilde, M_mu };

    double m11 = 0;
    double m12 = 0;
    double m21 = 0;
    double m22 = 0;
    Kind kind = Kind::M;

    double trace() const { return m11 + m22; }
    double det() const { return m11 * m22 - m12 * m21; }
};

/// Strict admissibility of the feedback coefficients: |alpha|+|beta| < 1.
bool is_admissible(double alpha, double beta);

/// M = [alpha^2-1+|beta|, alpha*beta; alpha*beta, beta^2-|beta|].
BoundaryMatrix boundary_matrix_M(double alpha, double beta);

/// Adjoint-side form: same trace and determinant as M, off-diagonal
/// alpha*|beta| instead of alpha*beta.
BoundaryMatrix boundary_matrix_M_tilde(double alpha, double beta);

/// Perturbed form M + mu1*L*[a^2, ab; ab, b^2] + mu2*[1,0;0,0].
/// Requires mu1 > 0, mu2 in (0,1), L > 0, else InvalidLyapunovParams.
BoundaryMatrix boundary_matrix_Mmu(double alpha, double beta, double L,
                                   double mu1, double mu2);

/// 2x2 criterion: trace < 0 and det > 0, both strict.
bool is_negative_definite(const BoundaryMatrix& m);

/// Upper bounds on the Lyapunov weights that keep M_mu negative definite.
/// mu2_max is a fixed three-term minimum; the mu1 bound depends on the
/// chosen mu2. A non-positive denominator in the second mu1 term makes
/// that term vacuous (+infinity); mu1_degenerate reports the case.
struct Remark3Bounds {
    double alpha = 0;
    double beta = 0;
    double L = 0;
    double mu2_max = 0;

    double mu1_max(double mu2) const;
    bool mu1_degenerate(double mu2) const;
};

/// Requires an admissible pair with beta != 0 (NotAdmissible / BetaZero;
/// for beta = 0 the scalar criterion |alpha| < 1 applies instead) and
/// L > 0.
Remark3Bounds remark3_bounds(double alpha, double beta, double L);

/// Radius of the small-data ball for the certified nonlinear decay:
/// 3*(3*pi^2 - L^2) / (2*L^{3/2}*pi^2). Requires 0 < L < sqrt(3)*pi.
double smallness_radius(double L);

/// Certified decay-rate bound. Nonlinear form:
///   min{ (9pi^2 - 3L^2 - 2L^{3/2} r pi^2) mu1 / (6L^2 (1+L mu1)),
///        mu2 / (2 (mu2+|beta|) h) }.
/// Linear form replaces the first term by
///   (3pi^2 - L^2) mu1 / (2L^2 (1+L mu1)) and ignores r.
/// Requires 0 < L < sqrt(3)*pi; r < smallness_radius(L) when nonlinear.
double gamma_bound(double L, double r, double mu1, double mu2, double beta,
                   double h, bool nonlinear);

/// Result of a critical-length query, with the witnessing pair when found.
struct CriticalLengthHit {
    bool critical = false;
    int k = 0;
    int l = 0;
};

/// Membership of L in {2*pi*sqrt((k^2+k*l+l^2)/3)} up to tol, scanning
/// 1 <= k <= l <= k_max with an analytic early exit.
CriticalLengthHit is_critical_length(double L, double tol = 1e-9, int k_max = 200);

struct CriticalLength {
    double value = 0;
    int k = 0;
    int l = 0;
};

/// All distinct critical lengths strictly below L_max, sorted ascending,
/// each with one witnessing pair (values closer than merge_tol collapse).
std::vector<CriticalLength> critical_lengths_below(double L_max,
                                                   double merge_tol = 1e-9);

/// Everything the closed-form theory certifies about one parameter set.
/// Fields that do not apply (beta = 0, inadmissible pair, L out of range)
/// hold NaN and the flags say why.
struct CertificateReport {
    double alpha = 0;
    double beta = 0;
    double L = 0;
    double h = 0;

    bool admissible = false;          ///< |alpha|+|beta| < 1
    bool no_delay_stabilizable = false; ///< |alpha| < 1 (the beta = 0 criterion)

    BoundaryMatrix M;
    BoundaryMatrix M_tilde;
    bool M_negdef = false;
    bool Mtilde_negdef = false;

    double mu2_max = 0;  ///< NaN when unavailable
    double mu1_max = 0;  ///< evaluated at the chosen mu2; NaN when unavailable
    double mu1 = 0;      ///< chosen weights (half the bounds); NaN when unavailable
    double mu2 = 0;
    bool Mmu_negdef = false;
    bool mu1_bound_degenerate = false;

    double r_max = 0;    ///< smallness radius; NaN when L >= sqrt(3)*pi
    double r = 0;        ///< radius used for gamma (r_max/2); NaN when unavailable
    double gamma = 0;    ///< certified rate bound; NaN when unavailable
    bool gamma_is_nonlinear = false;
    double kappa = 0;    ///< 1 + max{L*mu1, mu2/|beta|}; NaN when unavailable

    bool critical = false;
    int critical_k = 0;
    int critical_l = 0;
};

/// Evaluates the full report: admissibility, both boundary matrices, the
/// mu bounds with the halved choice, the smallness radius, the rate bound
/// (nonlinear form at r = r_max/2 when nonlinear_gamma, linear form
/// otherwise), and critical-length membership.
CertificateReport certify(double alpha, double beta, double L, double h,
                          bool nonlinear_gamma);

} // namespace kdv
