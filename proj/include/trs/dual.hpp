#pragma once

#include <vector>

#include "trs/twisted.hpp"

namespace trs {

/// Twisted parameters of the dual code: t' = k - h, h' = n - k - t
/// (entrywise), eta' = -eta, dimension n - k.
struct DualParams {
    int dim = 0;
    std::vector<int> t;
    std::vector<int> h;
    std::vector<FieldElement> eta;
};

bool is_multiplicative_subgroup(const std::vector<FieldElement>& alpha);

/// Closed-form inverse of V_n(alpha)^T for points forming a multiplicative
/// subgroup: J_n * V_n(alpha) * diag(alpha/n).
Matrix vandermonde_inverse_mult_group(const std::vector<FieldElement>& alpha);

/// Coefficient matrix L of the code: row h_mu, column t_mu - 1 holds eta_mu,
/// so that generator_canonical() = [I | L] * V_n(alpha).
Matrix coefficient_matrix_l(const TwistedCode& code);

/// Parity-check / dual generator for a code [I | L] * V_n(alpha) over a
/// multiplicative group: H = [I | -J_{n-k} L^T J_k] * V_n(alpha) * diag(alpha/n).
Matrix dual_parity_check(const Matrix& l, const std::vector<FieldElement>& alpha);

/// Dual of a twisted code whose points form a multiplicative subgroup:
/// returns the dual's twisted parameters together with the explicit H, and
/// verifies internally that H equals the canonical generator of the
/// dual-parameter code column-scaled by diag(alpha/n).
///
/// With allow_zero_point, alpha may additionally contain 0 provided all
/// t_i != n - k or all h_i != 0; the column scaling then becomes
/// (1/(n-1), ..., 1/(n-1), -1) with the -1 on the zero point, and H is
/// verified through the orthogonality contract.
std::pair<DualParams, Matrix> dual_twisted(const TwistedCode& code, bool allow_zero_point = false);

/// Nullspace dual for arbitrary points; the oracle the closed forms are
/// checked against.
Matrix dual_generic(const TwistedCode& code);

/// The code with the dual parameters at the same points.
TwistedCode dual_params_code(const TwistedCode& code, const DualParams& dp);

} // namespace trs
