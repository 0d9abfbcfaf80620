#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "trs/errors.hpp"

namespace trs {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Description of GF(p^m): prime p, extension degree m >= 1, and a monic
/// irreducible modulus of degree m over GF(p) (coefficients low-to-high,
/// m+1 entries). Prime fields use m = 1 with modulus X so all code paths
/// are uniform. Immutable after construction and freely shareable.
///
/// Elements are handled as packed integer encodings v = sum coeffs[i] * p^i
/// in [0, q); the encoding doubles as the wire format.
class FieldSpec {
public:
    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const; // extended Euclid on the residue representation
    uint32_t div(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, int64_t e) const; // square-and-multiply

    // Residue digits of the packed encoding, low-to-high base p.
    std::vector<uint32_t> unpack(uint32_t v) const;
    uint32_t pack(const std::vector<uint32_t>& digits) const;

    // int_codec: the packed encoding already is the integer code; these
    // validate range and exist as the named (de)serialization surface.
    uint32_t encode_int(uint32_t v) const;
    uint32_t decode_int(uint32_t n) const;

    bool same(const FieldSpec& other) const {
        return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
    }

    // A fixed generator of the multiplicative group (smallest by encoding).
    uint32_t generator() const { return generator_; }

    uint32_t mul_poly(uint32_t a, uint32_t b) const; // table-free reference path

    ~FieldSpec();

private:
    friend FieldPtr make_field(uint32_t p, uint32_t m, const std::vector<uint32_t>* modulus);

    FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t p_ = 0;
    uint32_t m_ = 0;
    uint32_t q_ = 0;
    std::vector<uint32_t> modulus_;
    uint32_t generator_ = 0;
    // exp/log tables drive mul for m > 1; exp_ has 2(q-1) entries so that
    // exp_[log a + log b] needs no reduction mod q-1.
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> log_;
};

/// Creates (or returns the interned copy of) a field description. When the
/// modulus is omitted, picks the lexicographically smallest monic irreducible
/// of degree m by coefficient tuple (c_0, ..., c_{m-1}) -- deterministic
/// across runs and machines.
FieldPtr make_field(uint32_t p, uint32_t m, const std::vector<uint32_t>* modulus = nullptr);
FieldPtr make_field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus);

/// A residue-class element of one field. Value type; two elements are equal
/// iff they live in the same field and all residues match (encodings are
/// canonical, nothing is lazily reduced). The FieldSpec handle is a raw
/// pointer: specs are interned and live for the program's lifetime.
class FieldElement {
public:
    FieldElement() : f_(nullptr), v_(0) {}
    FieldElement(const FieldSpec* f, uint32_t v) : f_(f), v_(v) {}
    FieldElement(const FieldPtr& f, uint32_t v) : f_(f.get()), v_(v) {}

    const FieldSpec* field() const { return f_; }
    uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(FieldElement o) const { return with(f_->add(v_, check(o))); }
    FieldElement operator-(FieldElement o) const { return with(f_->sub(v_, check(o))); }
    FieldElement operator*(FieldElement o) const { return with(f_->mul(v_, check(o))); }
    FieldElement operator/(FieldElement o) const { return with(f_->div(v_, check(o))); }
    FieldElement operator-() const { return with(f_->neg(v_)); }
    FieldElement inv() const { return with(f_->inv(v_)); }
    FieldElement pow(int64_t e) const { return with(f_->pow(v_, e)); }

    FieldElement& operator+=(FieldElement o) { return *this = *this + o; }
    FieldElement& operator-=(FieldElement o) { return *this = *this - o; }
    FieldElement& operator*=(FieldElement o) { return *this = *this * o; }
    FieldElement& operator/=(FieldElement o) { return *this = *this / o; }

    bool operator==(const FieldElement& o) const {
        return v_ == o.v_ && (f_ == o.f_ || (f_ && o.f_ && f_->same(*o.f_)));
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    FieldElement with(uint32_t v) const { return FieldElement(f_, v); }
    uint32_t check(const FieldElement& o) const {
        require(f_ == o.f_ || (f_ && o.f_ && f_->same(*o.f_)), Errc::FieldMismatch,
                "operands live in different fields");
        return o.v_;
    }

    const FieldSpec* f_;
    uint32_t v_;
};

inline FieldElement element(const FieldPtr& f, uint32_t v) {
    return FieldElement(f.get(), f->decode_int(v));
}

/// Field homomorphism F_sub -> F_sup induced by sending the class of X in
/// F_sub to a root of sub's modulus inside F_sup (the root with smallest
/// integer encoding, so embeddings are deterministic).
class SubfieldEmbedding {
public:
    SubfieldEmbedding(FieldPtr sub, FieldPtr sup);

    const FieldPtr& sub() const { return sub_; }
    const FieldPtr& sup() const { return sup_; }
    FieldElement generator_image() const { return FieldElement(sup_.get(), gen_image_); }

    FieldElement map(FieldElement e) const;
    uint32_t map_value(uint32_t sub_value) const;

    // Membership of a sup-element in the embedded subfield.
    bool contains(FieldElement e) const;
    std::vector<uint32_t> image_values() const; // sorted, size q_sub

private:
    FieldPtr sub_;
    FieldPtr sup_;
    uint32_t gen_image_;
    std::vector<uint32_t> image_sorted_;
};

// GF(p) helpers on plain digit vectors (also used for modulus validation).
bool is_prime_u32(uint32_t n);
bool is_irreducible_mod_p(const std::vector<uint32_t>& poly, uint32_t p);

} // namespace trs
