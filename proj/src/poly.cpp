#include "trs/poly.hpp"

#include <algorithm>

namespace trs {

Poly Poly::monomial(const FieldSpec* f, uint32_t v, int degree) {
    if (v == 0) return Poly(f);
    std::vector<uint32_t> c(size_t(degree) + 1, 0);
    c.back() = v;
    return Poly(f, std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    check_field(o);
    const FieldSpec* f = f_ ? f_ : o.f_;
    std::vector<uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = f->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return Poly(f, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    check_field(o);
    const FieldSpec* f = f_ ? f_ : o.f_;
    std::vector<uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = f->sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return Poly(f, std::move(c));
}

Poly Poly::operator-() const {
    std::vector<uint32_t> c(c_);
    for (auto& x : c) x = f_->neg(x);
    return Poly(f_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    check_field(o);
    const FieldSpec* f = f_ ? f_ : o.f_;
    if (is_zero() || o.is_zero()) return Poly(f);
    std::vector<uint32_t> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = f->add(c[i + j], f->mul(c_[i], o.c_[j]));
    }
    return Poly(f, std::move(c));
}

bool Poly::operator==(const Poly& o) const {
    if (c_ != o.c_) return false;
    if (f_ == o.f_ || c_.empty()) return true;
    return f_ && o.f_ && f_->same(*o.f_);
}

Poly Poly::scaled(FieldElement s) const {
    if (s.is_zero()) return Poly(f_);
    std::vector<uint32_t> c(c_);
    for (auto& x : c) x = f_->mul(x, s.value());
    return Poly(f_, std::move(c));
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    require(k > 0, Errc::InvalidArgument, "negative shift");
    std::vector<uint32_t> c(c_.size() + size_t(k), 0);
    std::copy(c_.begin(), c_.end(), c.begin() + k);
    return Poly(f_, std::move(c));
}

Poly Poly::monic() const {
    require(!is_zero(), Errc::DivisionByZero, "zero polynomial has no monic form");
    if (c_.back() == 1) return *this;
    return scaled(leading().inv());
}

FieldElement Poly::eval(FieldElement x) const {
    const FieldSpec* f = f_ ? f_ : x.field();
    uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = f->add(f->mul(acc, x.value()), c_[i]);
    return FieldElement(f, acc);
}

void Poly::sub_scaled_shifted(const Poly& o, uint32_t c, int shift) {
    if (o.is_zero() || c == 0) return;
    size_t need = o.c_.size() + size_t(shift);
    if (c_.size() < need) c_.resize(need, 0);
    for (size_t i = 0; i < o.c_.size(); ++i) {
        uint32_t t = f_->mul(c, o.c_[i]);
        c_[i + shift] = f_->sub(c_[i + shift], t);
    }
    normalize();
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    require(!b.is_zero(), Errc::DivisionByZero, "division by the zero polynomial");
    const FieldSpec* f = a.field() ? a.field() : b.field();
    if (a.deg() < b.deg()) return {Poly(f), a};
    const auto& bc = b.coeff_values();
    const size_t bn = bc.size();
    uint32_t lead_inv = f->inv(bc.back());
    std::vector<uint32_t> rem(a.coeff_values());
    std::vector<uint32_t> quo(rem.size() - bn + 1, 0);
    for (size_t shift = quo.size(); shift-- > 0;) {
        uint32_t c = f->mul(rem[shift + bn - 1], lead_inv);
        if (c != 0) {
            quo[shift] = c;
            for (size_t j = 0; j < bn; ++j)
                rem[shift + j] = f->sub(rem[shift + j], f->mul(c, bc[j]));
        }
    }
    rem.resize(bn - 1);
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divrem(a, b).second; }

bool divides(const Poly& b, const Poly& a) { return poly_divrem(a, b).second.is_zero(); }

std::vector<FieldElement> eval_many(const Poly& f, const std::vector<FieldElement>& points) {
    std::vector<FieldElement> out;
    out.reserve(points.size());
    for (const auto& x : points) out.push_back(f.eval(x));
    return out;
}

Poly from_roots(const FieldSpec* f, const std::vector<FieldElement>& roots) {
    std::vector<uint32_t> c{1};
    for (const auto& r : roots) {
        // multiply by (X - r), in place, top down
        c.push_back(0);
        for (size_t i = c.size(); i-- > 1;)
            c[i] = f->sub(c[i - 1], f->mul(c[i], r.value()));
        c[0] = f->mul(c[0], f->neg(r.value()));
    }
    return Poly(f, std::move(c));
}

Poly from_roots(const std::vector<FieldElement>& roots) {
    require(!roots.empty(), Errc::InvalidArgument,
            "empty root list needs the explicit-field overload");
    return from_roots(roots.front().field(), roots);
}

Poly interpolate(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys) {
    require(xs.size() == ys.size(), Errc::LengthMismatch, "point coordinate counts differ");
    require(!xs.empty(), Errc::InvalidArgument, "no points to interpolate");
    const FieldSpec* f = xs.front().field();
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            require(xs[i] != xs[j], Errc::DuplicatePoint, "repeated x-coordinate");

    Poly g = from_roots(f, xs);
    std::vector<uint32_t> acc(xs.size(), 0);
    std::vector<uint32_t> num(xs.size(), 0);
    for (size_t i = 0; i < xs.size(); ++i) {
        if (ys[i].is_zero()) continue;
        // num = g / (X - x_i) by synthetic division, top down
        uint32_t carry = g.coeff_value(int(xs.size()));
        for (size_t d = xs.size(); d-- > 0;) {
            num[d] = carry;
            carry = f->add(g.coeff_value(int(d)), f->mul(carry, xs[i].value()));
        }
        uint32_t den = 0; // num(x_i)
        for (size_t d = num.size(); d-- > 0;) den = f->add(f->mul(den, xs[i].value()), num[d]);
        uint32_t s = f->div(ys[i].value(), den);
        for (size_t d = 0; d < num.size(); ++d) acc[d] = f->add(acc[d], f->mul(s, num[d]));
    }
    return Poly(f, std::move(acc));
}

Poly interpolate(const std::vector<std::pair<FieldElement, FieldElement>>& points) {
    std::vector<FieldElement> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& [x, y] : points) {
        xs.push_back(x);
        ys.push_back(y);
    }
    return interpolate(xs, ys);
}

} // namespace trs
