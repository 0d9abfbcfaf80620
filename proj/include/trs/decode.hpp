#pragma once

#include <cstdint>
#include <vector>

#include "trs/poly.hpp"
#include "trs/twisted.hpp"

namespace trs {

/// The multi-index families driving the key-equation system: all tuples
/// i in Z_{>=0}^ell with sum <= zeta, in graded lexicographic order (total
/// degree first, then lex), so the all-zero tuple comes first and matrix
/// layouts are reproducible. |I_zeta| = C(ell + zeta, ell).
class IndexSet {
public:
    IndexSet(int ell, int zeta);

    int ell() const { return ell_; }
    int zeta() const { return zeta_; }
    int size() const { return int(tuples_.size()); }
    const std::vector<std::vector<int>>& tuples() const { return tuples_; }
    const std::vector<int>& tuple(int i) const { return tuples_[size_t(i)]; }

    /// Position of a tuple, -1 if absent.
    int index_of(const std::vector<int>& t) const;

    static long long count(int ell, int zeta);

private:
    int ell_, zeta_;
    std::vector<std::vector<int>> tuples_;
};

/// A solution of the linearized key-equation problem: polynomials lambda_i
/// (i over I_{zeta+1}) and psi_j (j over I_zeta), lambda_0 monic, satisfying
/// every congruence lambda_i R = psi_i + sum_mu lambda_{i+delta_mu} eta_mu
/// X^{k-1+t_mu} (mod G) together with the degree caps
/// deg lambda_i <= deg lambda_0 and deg psi_j <= deg lambda_0 + k - 1.
struct KeyEqSolution {
    std::vector<Poly> lambda; // indexed by I_{zeta+1}
    std::vector<Poly> psi;    // indexed by I_zeta
    int degree = 0;           // deg lambda_0
};

/// Expected lower bound on the decoding radius, in exact integer arithmetic.
int tau_lb(int n, int k, int ell, int zeta);

/// R = interpolation of the received word at alpha (deg < n), G = prod (X - alpha_i).
std::pair<Poly, Poly> build_key_equations(const TwistedCode& code,
                                          const std::vector<FieldElement>& received);

/// Minimal-degree solution by solving the coefficient linear system for
/// tau = 0, 1, 2, ... until consistent (lambda_0 monic of degree exactly
/// tau, reduced row echelon, free variables zeroed). Hard cap tau <= n.
KeyEqSolution solve_problem1_linear(const Poly& r, const Poly& g, const TwistedCode& code,
                                    int zeta);

/// Square polynomial matrix with a shift; rows of the module basis for the
/// key-equation solution set.
struct PolyMatrix {
    std::vector<std::vector<Poly>> rows;
    std::vector<int> shift;

    int row_count() const { return int(rows.size()); }
    int col_count() const { return rows.empty() ? 0 : int(rows.front().size()); }
};

/// The (|I_{zeta+1}|+|I_zeta|)-square module basis: identity over the lambda
/// block, A on the upper right (R on the diagonal, -eta_mu X^{k-1+t_mu} at
/// (j+delta_mu, j)), G times the identity on the lower right. Shift
/// s = (k, k-1, ..., k-1, 0, ..., 0).
PolyMatrix build_module_matrix(const Poly& r, const Poly& g, const TwistedCode& code, int zeta);

/// s-pivot: rightmost index attaining max(deg m_j + s_j); -1 for a zero row.
int s_pivot(const std::vector<Poly>& row, const std::vector<int>& shift);

/// Mulders-Storjohann simple transformations until all nonzero rows have
/// pairwise distinct s-pivots. Row space (as a module) is preserved; the
/// reduction applies no swaps or scalings, so the determinant is unchanged.
/// Deterministic: of two rows sharing a pivot, the one with larger s-shifted
/// degree (ties: lower row index) is reduced by the other.
PolyMatrix weak_popov_reduce(PolyMatrix m);

/// Minimal solution via the weak-Popov route: reduce the module matrix and
/// read off the unique row with s-pivot at column 0, normalized monic.
KeyEqSolution solve_problem1_popov(const Poly& r, const Poly& g, const TwistedCode& code,
                                   int zeta);

enum class DecodeStatus { Success, Failure };

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::Failure;
    std::vector<FieldElement> codeword;
    std::vector<FieldElement> message; // f_0, ..., f_{k-1}
    int error_weight = -1;

    bool success() const { return status == DecodeStatus::Success; }
    bool operator==(const DecodeOutcome& o) const {
        return status == o.status && codeword == o.codeword && message == o.message &&
               error_weight == o.error_weight;
    }
};

enum class Engine { Linear, Popov, Brute };

/// Key-equation decoder: minimal solution, divisibility check psi_0 / lambda_0,
/// re-encode, and the half-distance guard d(c, r) <= floor((n-k)/2).
/// Failure is a value, not an error.
DecodeOutcome decode(const TwistedCode& code, const std::vector<FieldElement>& received, int zeta,
                     Engine engine = Engine::Popov);

/// Oracle decoder: guesses the hook coefficients (q^ell candidates), strips
/// the twist contribution, decodes in the ambient RS code, keeps candidates
/// whose decoded hooks match the guess, and returns the closest codeword.
/// Equidistant distinct candidates are an ambiguity and decode as Failure.
DecodeOutcome brute_force_decode(const TwistedCode& code,
                                 const std::vector<FieldElement>& received,
                                 double budget = 1e8);

} // namespace trs
