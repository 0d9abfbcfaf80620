#include "trs/matrix.hpp"

namespace trs {

Matrix Matrix::identity(const FieldSpec* f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::reversal(const FieldSpec* f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
    return m;
}

Matrix Matrix::diagonal(const std::vector<FieldElement>& d) {
    require(!d.empty(), Errc::InvalidArgument, "empty diagonal");
    Matrix m(d.front().field(), int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i].value();
    return m;
}

Matrix Matrix::vandermonde(const std::vector<FieldElement>& alpha, int rows) {
    require(!alpha.empty(), Errc::InvalidArgument, "no evaluation points");
    const FieldSpec* f = alpha.front().field();
    Matrix m(f, rows, int(alpha.size()));
    for (int c = 0; c < int(alpha.size()); ++c) {
        uint32_t acc = 1;
        for (int r = 0; r < rows; ++r) {
            m.at(r, c) = acc;
            acc = f->mul(acc, alpha[c].value());
        }
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require(cols_ == o.rows_, Errc::DegreeMismatch, "inner dimensions differ");
    Matrix r(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            uint32_t v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = f_->add(r.at(i, j), f_->mul(v, o.at(k, j)));
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::DegreeMismatch, "shape mismatch");
    Matrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::DegreeMismatch, "shape mismatch");
    Matrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], o.a_[i]);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ &&
           (f_ == o.f_ || (f_ && o.f_ && f_->same(*o.f_)));
}

Matrix Matrix::transpose() const {
    Matrix r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::negated() const {
    Matrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->neg(a_[i]);
    return r;
}

Matrix Matrix::select_columns(const std::vector<int>& cols) const {
    Matrix r(f_, rows_, int(cols.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols.size(); ++j) r.at(i, int(j)) = at(i, cols[j]);
    return r;
}

Matrix Matrix::block(int r0, int c0, int nrows, int ncols) const {
    Matrix r(f_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

Matrix Matrix::scaled_columns(const std::vector<FieldElement>& d) const {
    require(int(d.size()) == cols_, Errc::DegreeMismatch, "diagonal length != column count");
    Matrix r(f_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = f_->mul(at(i, j), d[size_t(j)].value());
    return r;
}

std::vector<FieldElement> Matrix::row(int r) const {
    std::vector<FieldElement> v;
    v.reserve(cols_);
    for (int j = 0; j < cols_; ++j) v.push_back(elem(r, j));
    return v;
}

void Matrix::set_row(int r, const std::vector<FieldElement>& v) {
    require(int(v.size()) == cols_, Errc::LengthMismatch, "row length mismatch");
    for (int j = 0; j < cols_; ++j) at(r, j) = v[size_t(j)].value();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), Errc::DegreeMismatch, "row counts differ");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), Errc::DegreeMismatch, "column counts differ");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

std::vector<int> rref(Matrix& m) {
    const FieldSpec* f = m.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        uint32_t inv = f->inv(m.at(r, c));
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = f->mul(m.at(r, j), inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            uint32_t factor = m.at(i, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) = f->sub(m.at(i, j), f->mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Matrix m) { return int(rref(m).size()); }

FieldElement determinant(Matrix m) {
    require(m.rows() == m.cols(), Errc::DegreeMismatch, "determinant of a non-square matrix");
    const FieldSpec* f = m.field();
    uint32_t det = 1;
    for (int c = 0; c < m.cols(); ++c) {
        int p = -1;
        for (int i = c; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) return FieldElement(f, 0);
        if (p != c) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(c, j));
            det = f->neg(det);
        }
        det = f->mul(det, m.at(c, c));
        uint32_t inv = f->inv(m.at(c, c));
        for (int i = c + 1; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            uint32_t factor = f->mul(m.at(i, c), inv);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) = f->sub(m.at(i, j), f->mul(factor, m.at(c, j)));
        }
    }
    return FieldElement(f, det);
}

Matrix inverse(const Matrix& m) {
    require(m.rows() == m.cols(), Errc::DegreeMismatch, "inverse of a non-square matrix");
    Matrix aug = hstack(m, Matrix::identity(m.field(), m.rows()));
    auto piv = rref(aug);
    require(int(piv.size()) == m.rows() && (piv.empty() || piv.back() < m.cols()),
            Errc::SingularMatrix, "matrix is singular");
    return aug.block(0, m.cols(), m.rows(), m.cols());
}

Matrix nullspace(const Matrix& m) {
    Matrix r = m;
    auto piv = rref(r);
    const FieldSpec* f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : piv) is_pivot[size_t(c)] = true;
    Matrix out(f, m.cols() - int(piv.size()), m.cols());
    int k = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[size_t(c)]) continue;
        out.at(k, c) = 1;
        for (size_t i = 0; i < piv.size(); ++i) out.at(k, piv[i]) = f->neg(r.at(int(i), c));
        ++k;
    }
    return out;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    int ra = rank(a), rb = rank(b);
    return ra == rb && rank(vstack(a, b)) == ra;
}

bool solve_linear(const Matrix& a, const std::vector<FieldElement>& b,
                  std::vector<FieldElement>& x) {
    require(int(b.size()) == a.rows(), Errc::LengthMismatch, "rhs length mismatch");
    const FieldSpec* f = a.field();
    Matrix aug(f, a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[size_t(i)].value();
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == a.cols()) return false; // inconsistent
    x.assign(size_t(a.cols()), FieldElement(f, 0));
    for (size_t i = 0; i < piv.size(); ++i)
        x[size_t(piv[i])] = FieldElement(f, aug.at(int(i), a.cols()));
    return true;
}

std::vector<FieldElement> mat_vec(const Matrix& a, const std::vector<FieldElement>& x) {
    require(int(x.size()) == a.cols(), Errc::LengthMismatch, "vector length mismatch");
    const FieldSpec* f = a.field();
    std::vector<FieldElement> out(size_t(a.rows()), FieldElement(f, 0));
    for (int i = 0; i < a.rows(); ++i) {
        uint32_t acc = 0;
        for (int j = 0; j < a.cols(); ++j) acc = f->add(acc, f->mul(a.at(i, j), x[size_t(j)].value()));
        out[size_t(i)] = FieldElement(f, acc);
    }
    return out;
}

std::vector<FieldElement> vec_mat(const std::vector<FieldElement>& x, const Matrix& a) {
    require(int(x.size()) == a.rows(), Errc::LengthMismatch, "vector length mismatch");
    const FieldSpec* f = a.field();
    std::vector<FieldElement> out(size_t(a.cols()), FieldElement(f, 0));
    for (int j = 0; j < a.cols(); ++j) {
        uint32_t acc = 0;
        for (int i = 0; i < a.rows(); ++i) acc = f->add(acc, f->mul(x[size_t(i)].value(), a.at(i, j)));
        out[size_t(j)] = FieldElement(f, acc);
    }
    return out;
}

} // namespace trs
