#pragma once

#include <vector>

#include "trs/field.hpp"

namespace trs {

/// Dense row-major matrix over one field; all arithmetic is exact.
class Matrix {
public:
    Matrix() : f_(nullptr), rows_(0), cols_(0) {}
    Matrix(const FieldSpec* f, int rows, int cols)
        : f_(f), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}
    Matrix(const FieldPtr& f, int rows, int cols) : Matrix(f.get(), rows, cols) {}

    static Matrix identity(const FieldSpec* f, int n);
    static Matrix reversal(const FieldSpec* f, int n); // ones on the anti-diagonal
    static Matrix diagonal(const std::vector<FieldElement>& d);
    // rows x |alpha| matrix with entry (r, c) = alpha_c^r
    static Matrix vandermonde(const std::vector<FieldElement>& alpha, int rows);

    const FieldSpec* field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint32_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
    uint32_t& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    FieldElement elem(int r, int c) const { return FieldElement(f_, at(r, c)); }
    void set(int r, int c, FieldElement v) { at(r, c) = v.value(); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix negated() const;
    Matrix select_columns(const std::vector<int>& cols) const;
    Matrix block(int r0, int c0, int nrows, int ncols) const;
    Matrix scaled_columns(const std::vector<FieldElement>& d) const;

    std::vector<FieldElement> row(int r) const;
    void set_row(int r, const std::vector<FieldElement>& v);

private:
    const FieldSpec* f_;
    int rows_, cols_;
    std::vector<uint32_t> a_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// In-place reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);
FieldElement determinant(Matrix m);
Matrix inverse(const Matrix& m); // throws SingularMatrix

/// Basis of the right nullspace {x : m x^T = 0}, one vector per row
/// ((cols - rank) x cols). Deterministic: free variables set from RREF.
Matrix nullspace(const Matrix& m);

bool row_space_equal(const Matrix& a, const Matrix& b);

/// Solve a x = b for a single consistent solution (free variables zeroed);
/// returns false if the system is inconsistent.
bool solve_linear(const Matrix& a, const std::vector<FieldElement>& b,
                  std::vector<FieldElement>& x);

std::vector<FieldElement> mat_vec(const Matrix& a, const std::vector<FieldElement>& x);
std::vector<FieldElement> vec_mat(const std::vector<FieldElement>& x, const Matrix& a);

} // namespace trs
