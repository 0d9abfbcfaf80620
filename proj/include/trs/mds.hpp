#pragma once

#include <optional>
#include <vector>

#include "trs/twisted.hpp"

namespace trs {

/// Ground truth: true iff every maximal minor of the canonical generator is
/// nonzero (equivalently the minimum distance meets the Singleton bound).
/// Minors are scanned in lexicographic column order with early exit.
bool is_mds_exhaustive(const TwistedCode& code);

/// First column subset whose maximal minor vanishes, if any.
std::optional<std::vector<int>> mds_violation_exhaustive(const TwistedCode& code);

/// Minimum distance by full codeword enumeration; guard q^k <= 10^6.
int min_distance_enumerate(const TwistedCode& code);

/// True iff no nonempty-subset sum-product of eta with coefficients from the
/// embedded subfield lands in a nonzero subfield element. Brute force over
/// all q_0^(2^ell - 1) coefficient assignments; guard <= 10^7.
bool sum_product_free_check(const std::vector<FieldElement>& eta, const SubfieldEmbedding& sub);

/// Proper chain of subfields F_{q_0} < F_{q_1} < ... < F_{q_ell} with one
/// coefficient choice eta_i in F_{q_i} \ F_{q_{i-1}} per step.
struct ChainSpec {
    std::vector<FieldPtr> fields;
    std::vector<SubfieldEmbedding> steps; // fields[i] -> fields[i+1]
    std::vector<FieldElement> eta_choices; // eta_i lives in fields[i+1]
};

/// Builds the chain; when eta choices are omitted each eta_i defaults to the
/// smallest-encoding element outside the previous field's image.
ChainSpec make_chain(const std::vector<FieldPtr>& fields);
ChainSpec make_chain(const std::vector<FieldPtr>& fields,
                     const std::vector<FieldElement>& eta_choices);

/// The chain's eta vector mapped into the top field. Codes with evaluation
/// points inside the bottom field and this eta are MDS.
std::vector<FieldElement> make_chain_eta(const ChainSpec& cs);

/// Image of an element of fields[level] in the top field.
FieldElement chain_to_top(const ChainSpec& cs, size_t level, FieldElement e);

/// psi generating a power basis of F_q over F_{q_0} (extension degree at
/// least ell+1) together with nonzero subfield scalars a_1..a_ell.
struct PowerBasisSpec {
    FieldPtr sub;
    FieldPtr sup;
    SubfieldEmbedding emb;
    FieldElement psi;
    std::vector<FieldElement> scalars; // in sub, nonzero
};

PowerBasisSpec make_power_basis(const FieldPtr& sub, const FieldPtr& sup, int ell);
PowerBasisSpec make_power_basis(const FieldPtr& sub, const FieldPtr& sup, FieldElement psi,
                                std::vector<FieldElement> scalars);

/// eta_i = a_i * psi; sum-product free by construction.
std::vector<FieldElement> make_power_basis_eta(const PowerBasisSpec& pb);

/// Exact MDS test for one twist with (t, h) = (1, 0): MDS iff
/// eta * (-1)^k * prod_{i in I} alpha_i != 1 for every k-subset I.
bool star_mds_condition(const std::vector<FieldElement>& alpha, int k, FieldElement eta1);
std::optional<std::vector<int>> star_mds_violation(const std::vector<FieldElement>& alpha, int k,
                                                   FieldElement eta1);

/// Exact MDS test for one twist with (t, h) = (1, k-1): MDS iff
/// eta * sum_{i in I} alpha_i != -1 for every k-subset I. Decided by dynamic
/// programming over (chosen count, achieved sum).
bool plus_mds_condition(const std::vector<FieldElement>& alpha, int k, FieldElement eta1);
std::optional<std::vector<int>> plus_mds_violation(const std::vector<FieldElement>& alpha, int k,
                                                   FieldElement eta1);

/// The multiplicative subgroup of F_q^* of the given order (must divide q-1),
/// sorted by encoding.
std::vector<FieldElement> multiplicative_subgroup(const FieldPtr& spec, int order);

/// F_p-span of the given elements, sorted by encoding.
std::vector<FieldElement> additive_subgroup_span(const FieldPtr& spec,
                                                 const std::vector<FieldElement>& basis);

/// MDS-by-construction code over a proper multiplicative subgroup G (plus the
/// point 0 when include_zero): t = (1), h = (0), (-1)^k eta^{-1} outside G.
TwistedCode make_star_twisted(const FieldPtr& spec, int subgroup_order, int k, FieldElement eta1,
                              bool include_zero = true);

/// MDS-by-construction code over n points of a proper additive subgroup:
/// t = (1), h = (k-1), eta^{-1} outside the subgroup. With at_infinity the
/// length grows by one and the code stays MDS.
TwistedCode make_plus_twisted(const FieldPtr& spec, const std::vector<FieldElement>& subgroup,
                              int n, int k, FieldElement eta1, bool at_infinity = false);

enum class GroupOp { Add, Mul };

/// True iff every element of the ambient group (F_q under +, F_q^* under *)
/// is a sum/product of k distinct elements of S. Brute force over k-subsets;
/// guard C(|S|, k) * |group| <= 10^7.
bool is_k_sum_generator(const std::vector<FieldElement>& s, int k, GroupOp op);

} // namespace trs
