#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "kdv/lattice.hpp"

namespace kdv {

/// The implicit-step operator A of size (J-2+K) acting on the packed
/// unknown u = (y_1..y_{J-2}, z_1..z_K), factored once at assembly.
///
/// Block structure:
///   [ L11  L12 ]   L11: dispersion/advection stencil on the y interior,
///   [ L21  L22 ]        with the boundary corner terms from eliminating
///                       y_{J-1} = -alpha*y_1 - beta*dx*z_K;
///                  L12: that same elimination's z_K column;
///                  L21: the trace inflow z_0 = y_1/dx feeding row z_1;
///                  L22: lower-bidiagonal implicit upwind transport.
///
/// Immutable after construction; solves are const.
class SystemMatrix {
public:
    SystemMatrix(const Discretization& disc, const FeedbackLaw& law);

    const Discretization& disc() const { return disc_; }
    const FeedbackLaw& law() const { return law_; }
    const Eigen::SparseMatrix<double>& matrix() const { return A_; }
    Eigen::Index dimension() const { return A_.rows(); }

    /// Solves A*u = rhs with the stored factorization.
    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

private:
    Discretization disc_;
    FeedbackLaw law_;
    Eigen::SparseMatrix<double> A_;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
};

/// Assembles and factors the implicit-step operator.
/// Throws DimensionMismatch if law.h differs from disc.h, SingularMatrix
/// if the factorization fails.
SystemMatrix assemble_system_matrix(const Discretization& disc,
                                    const FeedbackLaw& law);

/// One implicit step of the linear dynamics: solves A*u^{n+1} = u^n and
/// reconstructs the dependent boundary values. The input state is not
/// mutated; the result has t advanced by dt.
State step_linear(const SystemMatrix& sm, const State& s);

/// One semi-implicit step of the nonlinear dynamics: the advection term
/// y*Dy (centered D, lagged at time n) is moved to the right-hand side,
/// then the same factorization as step_linear is reused.
///
/// Guideline for the explicit term: dt <= dx/(4*max|y|). Violations
/// surface as BlowUp once a component of the new y exceeds 1e6 in
/// magnitude or stops being finite.
State step_nonlinear(const SystemMatrix& sm, const State& s);

/// Discrete y_x(0,t): one-sided difference y[1]/dx. Equals s.z[0] by the
/// trace-coupling invariant.
double boundary_trace(const State& s, const Discretization& disc);

/// Packs the interior unknowns (y_1..y_{J-2}, z_1..z_K) of a state.
Eigen::VectorXd pack_unknowns(const State& s, const Discretization& disc);

} // namespace kdv
