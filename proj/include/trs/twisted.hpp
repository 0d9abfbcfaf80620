#pragma once

#include <cstdint>
#include <vector>

#include "trs/matrix.hpp"
#include "trs/poly.hpp"
#include "trs/rng.hpp"

namespace trs {

/// A twisted Reed-Solomon code: evaluations at n distinct points alpha of the
/// polynomials  sum_{i<k} f_i X^i + sum_j eta_j f_{h_j} X^{k-1+t_j}.
///
/// ell = 0 gives the plain Reed-Solomon code. With at_infinity set (only for
/// ell = 1) codewords carry one extra coordinate f(inf) := f_{k-1+t_1},
/// making the length n+1.
///
/// Messages are the coefficient vectors (f_0, ..., f_{k-1}); with that
/// convention encode(msg) = msg * generator_canonical().
///
/// Immutable after validation; all member operations are pure.
class TwistedCode {
public:
    TwistedCode(FieldPtr spec, std::vector<FieldElement> alpha, int k, std::vector<int> t,
                std::vector<int> h, std::vector<FieldElement> eta, bool at_infinity = false);

    const FieldPtr& spec() const { return spec_; }
    const FieldSpec* field() const { return spec_.get(); }
    int n() const { return int(alpha_.size()); }
    int k() const { return k_; }
    int ell() const { return int(t_.size()); }
    int length() const { return n() + (at_infinity_ ? 1 : 0); }
    const std::vector<FieldElement>& alpha() const { return alpha_; }
    const std::vector<int>& t() const { return t_; }
    const std::vector<int>& h() const { return h_; }
    const std::vector<FieldElement>& eta() const { return eta_; }
    bool at_infinity() const { return at_infinity_; }

    bool is_rs() const; // every eta_i zero

    /// Basis g_i = X^i + sum_{j : h_j = i} eta_j X^{k-1+t_j}, i = 0..k-1.
    std::vector<Poly> basis_polys() const;

    /// k x length() matrix whose row i evaluates g_i at alpha (plus the
    /// infinity column when extended). Rank k.
    Matrix generator_canonical() const;

    /// The twisted polynomial with message coefficients msg.
    Poly message_poly(const std::vector<FieldElement>& msg) const;

    std::vector<FieldElement> encode(const std::vector<FieldElement>& msg) const;

    /// A with [I | A] spanning the code; throws SingularLeftBlock when the
    /// first k positions are not an information set.
    Matrix systematic_form() const;

    /// Same code with the twists dropped (the ell = 0 ambient RS code).
    TwistedCode rs_subcode_frame() const;

private:
    FieldPtr spec_;
    std::vector<FieldElement> alpha_;
    int k_;
    std::vector<int> t_;
    std::vector<int> h_;
    std::vector<FieldElement> eta_;
    bool at_infinity_;
};

/// Uniform random code for the simulator: alpha is a uniformly random
/// n-subset of F_q^* (sorted list, then a seeded partial shuffle), (t, h)
/// uniform over vectors with pairwise-distinct (h_i, t_i) pairs (rejection
/// sampling over the product space), eta entrywise uniform over F_q^*.
/// Deterministic for a given seed; draw order: alpha, (t, h), eta.
TwistedCode sample_random_code(const FieldPtr& spec, int n, int k, int ell, uint64_t rng_seed);

int hamming_distance(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b);
int hamming_weight(const std::vector<FieldElement>& a);

} // namespace trs
