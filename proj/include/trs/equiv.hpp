#pragma once

#include <vector>

#include "trs/twisted.hpp"

namespace trs {

/// Dimension of the span of all coordinatewise products of codeword pairs,
/// computed as the rank of the k(k+1)/2 products of unordered generator row
/// pairs. Invariant under the choice of generator.
int schur_square_dim(const Matrix& generator);

/// Sorted set of basis-polynomial degrees {deg g_0, ..., deg g_{k-1}}.
/// Stored deduplicated: hooks sharing the same top twist degree collapse.
std::vector<int> degree_set(const TwistedCode& code);

/// |{d1 + d2 : d1, d2 in degree_set, d1 + d2 < n}| -- a lower bound on the
/// Schur square dimension.
int sumset_lower_bound(const TwistedCode& code);

/// GRS test via the minor characterization of the systematic block: an MDS
/// code [I | A] is GRS iff all entries of A are nonzero, all 2x2 minors of
/// the entrywise inverse A' are nonzero, and all 3x3 minors of A' vanish.
/// Non-MDS codes return false; MDS codes with min(k, n-k) < 3 return true.
bool is_grs(const TwistedCode& code);

enum class EtaClass { NonMds, MdsGrs, MdsNonGrs };

struct EtaCensus {
    std::vector<std::vector<FieldElement>> etas;
    std::vector<EtaClass> classes;
    long long non_mds = 0;
    long long mds_grs = 0;
    long long mds_non_grs = 0;
    double grs_fraction_among_mds() const {
        long long mds = mds_grs + mds_non_grs;
        return mds == 0 ? 0.0 : double(mds_grs) / double(mds);
    }
};

/// Classifies every eta vector in the domain for fixed (alpha, t, h).
EtaCensus grs_eta_census(const FieldPtr& spec, const std::vector<FieldElement>& alpha, int k,
                         const std::vector<int>& t, const std::vector<int>& h,
                         const std::vector<std::vector<FieldElement>>& eta_domain);

/// All q vectors (eta_1) for a single twist.
std::vector<std::vector<FieldElement>> full_eta_domain_single_twist(const FieldPtr& spec);

/// Generator of a generalized Reed-Solomon code: Vandermonde rows scaled by
/// per-column nonzero multipliers. Test helper for the GRS side of the fence.
Matrix grs_generator(const std::vector<FieldElement>& alpha,
                     const std::vector<FieldElement>& multipliers, int k);

} // namespace trs
