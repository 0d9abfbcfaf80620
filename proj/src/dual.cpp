#include "trs/dual.hpp"

#include <algorithm>
#include <set>

namespace trs {

bool is_multiplicative_subgroup(const std::vector<FieldElement>& alpha) {
    if (alpha.empty()) return false;
    const FieldSpec* f = alpha.front().field();
    std::set<uint32_t> s;
    for (const auto& a : alpha) {
        if (a.is_zero()) return false;
        s.insert(a.value());
    }
    if (s.size() != alpha.size() || s.count(1) == 0) return false;
    for (uint32_t a : s)
        for (uint32_t b : s)
            if (s.count(f->mul(a, b)) == 0) return false;
    return true;
}

Matrix vandermonde_inverse_mult_group(const std::vector<FieldElement>& alpha) {
    require(is_multiplicative_subgroup(alpha), Errc::NotMultiplicativeGroup,
            "points do not form a multiplicative subgroup");
    const FieldSpec* f = alpha.front().field();
    const int n = int(alpha.size());
    // n as a field element; invertible since n | q-1 keeps it off the characteristic
    uint32_t n_fe = 0;
    for (int i = 0; i < n; ++i) n_fe = f->add(n_fe, 1);
    uint32_t ninv = f->inv(n_fe);
    std::vector<FieldElement> d;
    d.reserve(size_t(n));
    for (const auto& a : alpha) d.emplace_back(f, f->mul(a.value(), ninv));
    return Matrix::reversal(f, n) * Matrix::vandermonde(alpha, n).scaled_columns(d);
}

Matrix coefficient_matrix_l(const TwistedCode& code) {
    const int k = code.k(), n = code.n();
    Matrix l(code.field(), k, n - k);
    for (int j = 0; j < code.ell(); ++j)
        l.at(code.h()[size_t(j)], code.t()[size_t(j)] - 1) = code.eta()[size_t(j)].value();
    return l;
}

Matrix dual_parity_check(const Matrix& l, const std::vector<FieldElement>& alpha) {
    require(is_multiplicative_subgroup(alpha), Errc::NotMultiplicativeGroup,
            "points do not form a multiplicative subgroup");
    const FieldSpec* f = l.field();
    const int n = int(alpha.size()), k = l.rows();
    require(l.cols() == n - k, Errc::DegreeMismatch, "L must be k x (n-k)");
    uint32_t n_fe = 0;
    for (int i = 0; i < n; ++i) n_fe = f->add(n_fe, 1);
    uint32_t ninv = f->inv(n_fe);
    std::vector<FieldElement> d;
    d.reserve(size_t(n));
    for (const auto& a : alpha) d.emplace_back(f, f->mul(a.value(), ninv));

    Matrix b = (Matrix::reversal(f, n - k) * l.transpose() * Matrix::reversal(f, k)).negated();
    Matrix h = hstack(Matrix::identity(f, n - k), b) * Matrix::vandermonde(alpha, n);
    return h.scaled_columns(d);
}

Matrix dual_generic(const TwistedCode& code) { return nullspace(code.generator_canonical()); }

TwistedCode dual_params_code(const TwistedCode& code, const DualParams& dp) {
    return TwistedCode(code.spec(), code.alpha(), dp.dim, dp.t, dp.h, dp.eta);
}

std::pair<DualParams, Matrix> dual_twisted(const TwistedCode& code, bool allow_zero_point) {
    require(!code.at_infinity(), Errc::InfeasibleParameters,
            "duality is defined for non-extended codes");
    const FieldSpec* f = code.field();
    const int n = code.n(), k = code.k(), ell = code.ell();

    DualParams dp;
    dp.dim = n - k;
    for (int j = 0; j < ell; ++j) {
        dp.t.push_back(k - code.h()[size_t(j)]);
        dp.h.push_back(n - k - code.t()[size_t(j)]);
        dp.eta.push_back(-code.eta()[size_t(j)]);
    }

    int zero_at = -1;
    for (int i = 0; i < n; ++i)
        if (code.alpha()[size_t(i)].is_zero()) zero_at = i;

    Matrix h(f, n - k, n);
    std::vector<FieldElement> scale;
    if (zero_at < 0) {
        require(is_multiplicative_subgroup(code.alpha()), Errc::NotMultiplicativeGroup,
                "points do not form a multiplicative subgroup");
        h = dual_parity_check(coefficient_matrix_l(code), code.alpha());
        uint32_t n_fe = 0;
        for (int i = 0; i < n; ++i) n_fe = f->add(n_fe, 1);
        uint32_t ninv = f->inv(n_fe);
        for (const auto& a : code.alpha()) scale.emplace_back(f, f->mul(a.value(), ninv));
    } else {
        require(allow_zero_point, Errc::NotMultiplicativeGroup,
                "0 is an evaluation point; pass allow_zero_point to use the bordered form");
        bool no_last_col = true, no_first_row = true;
        for (int j = 0; j < ell; ++j) {
            if (code.t()[size_t(j)] == n - k) no_last_col = false;
            if (code.h()[size_t(j)] == 0) no_first_row = false;
        }
        require(no_last_col || no_first_row, Errc::InfeasibleParameters,
                "zero point needs all t_i != n-k or all h_i != 0");

        // permute the zero point to the end, work there, permute back
        std::vector<int> perm;
        for (int i = 0; i < n; ++i)
            if (i != zero_at) perm.push_back(i);
        perm.push_back(zero_at);
        std::vector<FieldElement> ap;
        for (int i : perm) ap.push_back(code.alpha()[size_t(i)]);
        std::vector<FieldElement> grp(ap.begin(), ap.end() - 1);
        require(is_multiplicative_subgroup(grp), Errc::NotMultiplicativeGroup,
                "nonzero points do not form a multiplicative subgroup");

        const int m = n - 1; // subgroup size
        uint32_t m_fe = 0;
        for (int i = 0; i < m; ++i) m_fe = f->add(m_fe, 1);
        uint32_t minv = f->inv(m_fe);
        std::vector<FieldElement> dperm(size_t(n), FieldElement(f, minv));
        dperm.back() = FieldElement(f, f->neg(1));

        Matrix l = coefficient_matrix_l(code);
        Matrix b = (Matrix::reversal(f, n - k) * l.transpose() * Matrix::reversal(f, k)).negated();
        Matrix hp = hstack(Matrix::identity(f, n - k), b) * Matrix::vandermonde(ap, n);
        hp = hp.scaled_columns(dperm);
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n - k; ++r) h.at(r, perm[size_t(c)]) = hp.at(r, c);
        scale.assign(size_t(n), FieldElement(f, minv));
        scale[size_t(zero_at)] = FieldElement(f, f->neg(1));
    }

    // contract checks: orthogonality, full rank, and equality with the
    // column-scaled generator of the dual-parameter code
    Matrix g = code.generator_canonical();
    Matrix prod = g * h.transpose();
    for (int i = 0; i < prod.rows(); ++i)
        for (int j = 0; j < prod.cols(); ++j)
            require(prod.at(i, j) == 0, Errc::SingularMatrix, "G H^T != 0");
    require(rank(h) == n - k, Errc::SingularMatrix, "dual generator is rank-deficient");
    Matrix gd = dual_params_code(code, dp).generator_canonical().scaled_columns(scale);
    require(gd == h, Errc::SingularMatrix, "dual generator does not match the twisted form");

    return {dp, h};
}

} // namespace trs
