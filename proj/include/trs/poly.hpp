#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "trs/field.hpp"

namespace trs {

/// Dense univariate polynomial over one field, coefficients low-to-high,
/// always normalized (no trailing zero coefficient). The zero polynomial has
/// an empty coefficient list; its degree is the sentinel Poly::kNegInf,
/// ordered below every attainable degree, so degree inequalities hold
/// vacuously for zero entries. Immutable value semantics; all operations are
/// pure and safe for concurrent use.
class Poly {
public:
    // Halved to keep sums of two degrees overflow-free.
    static constexpr int kNegInf = std::numeric_limits<int>::min() / 2;

    Poly() : f_(nullptr) {}
    explicit Poly(const FieldSpec* f) : f_(f) {}
    Poly(const FieldSpec* f, std::vector<uint32_t> coeffs) : f_(f), c_(std::move(coeffs)) {
        normalize();
    }
    Poly(const FieldPtr& f, std::vector<uint32_t> coeffs) : Poly(f.get(), std::move(coeffs)) {}

    static Poly zero(const FieldSpec* f) { return Poly(f); }
    static Poly constant(const FieldSpec* f, uint32_t v) { return Poly(f, {v}); }
    static Poly monomial(const FieldSpec* f, uint32_t v, int degree);

    const FieldSpec* field() const { return f_; }
    int deg() const { return c_.empty() ? kNegInf : int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    uint32_t coeff_value(int i) const {
        return (i >= 0 && size_t(i) < c_.size()) ? c_[size_t(i)] : 0;
    }
    FieldElement coeff(int i) const { return FieldElement(f_, coeff_value(i)); }
    FieldElement leading() const { return coeff(deg()); }
    const std::vector<uint32_t>& coeff_values() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const; // schoolbook
    Poly operator-() const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(FieldElement c) const;
    Poly shifted(int k) const; // multiply by X^k
    Poly monic() const;

    FieldElement eval(FieldElement x) const; // Horner

    // In-place this -= c * X^shift * o; the workhorse of row reduction.
    void sub_scaled_shifted(const Poly& o, uint32_t c, int shift);

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check_field(const Poly& o) const {
        require(f_ == o.f_ || (f_ && o.f_ && f_->same(*o.f_)), Errc::FieldMismatch,
                "polynomials over different fields");
    }

    const FieldSpec* f_;
    std::vector<uint32_t> c_;
};

/// Division with remainder: a = q*b + r with deg r < deg b. Exact.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

Poly poly_mod(const Poly& a, const Poly& b);

/// True iff b divides a exactly.
bool divides(const Poly& b, const Poly& a);

std::vector<FieldElement> eval_many(const Poly& f, const std::vector<FieldElement>& points);

/// Unique polynomial of degree < n through n points with pairwise distinct
/// x-coordinates (Lagrange).
Poly interpolate(const std::vector<std::pair<FieldElement, FieldElement>>& points);
Poly interpolate(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys);

/// Monic product of the linear factors (X - r) over the given roots;
/// the empty product is the constant 1.
Poly from_roots(const FieldSpec* f, const std::vector<FieldElement>& roots);
Poly from_roots(const std::vector<FieldElement>& roots);

} // namespace trs
