#include "trs/equiv.hpp"

#include <algorithm>

#include "trs/combi.hpp"
#include "trs/mds.hpp"

namespace trs {

int schur_square_dim(const Matrix& generator) {
    const FieldSpec* f = generator.field();
    const int k = generator.rows(), n = generator.cols();
    Matrix products(f, k * (k + 1) / 2, n);
    int r = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            for (int c = 0; c < n; ++c)
                products.at(r, c) = f->mul(generator.at(i, c), generator.at(j, c));
            ++r;
        }
    return rank(products);
}

std::vector<int> degree_set(const TwistedCode& code) {
    std::vector<int> s;
    for (const auto& g : code.basis_polys()) s.push_back(g.deg());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

int sumset_lower_bound(const TwistedCode& code) {
    auto s = degree_set(code);
    std::vector<int> sums;
    for (int d1 : s)
        for (int d2 : s)
            if (d1 + d2 < code.n()) sums.push_back(d1 + d2);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return int(sums.size());
}

bool is_grs(const TwistedCode& code) {
    if (!is_mds_exhaustive(code)) return false; // GRS codes are MDS
    const int k = code.k(), len = code.length();
    if (std::min(k, len - k) < 3) return true; // no 3x3 minors: every such MDS code is GRS

    const FieldSpec* f = code.field();
    Matrix a = code.systematic_form(); // cannot throw for MDS codes
    Matrix ainv(f, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) return false;
            ainv.at(i, j) = f->inv(a.at(i, j));
        }

    auto rows2 = first_k_subset(2);
    do {
        auto cols2 = first_k_subset(2);
        do {
            uint32_t det = f->sub(f->mul(ainv.at(rows2[0], cols2[0]), ainv.at(rows2[1], cols2[1])),
                                  f->mul(ainv.at(rows2[0], cols2[1]), ainv.at(rows2[1], cols2[0])));
            if (det == 0) return false;
        } while (next_k_subset(cols2, a.cols()));
    } while (next_k_subset(rows2, a.rows()));

    auto rows3 = first_k_subset(3);
    do {
        auto cols3 = first_k_subset(3);
        do {
            Matrix sub(f, 3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) sub.at(i, j) = ainv.at(rows3[size_t(i)], cols3[size_t(j)]);
            if (!determinant(sub).is_zero()) return false;
        } while (next_k_subset(cols3, a.cols()));
    } while (next_k_subset(rows3, a.rows()));
    return true;
}

EtaCensus grs_eta_census(const FieldPtr& spec, const std::vector<FieldElement>& alpha, int k,
                         const std::vector<int>& t, const std::vector<int>& h,
                         const std::vector<std::vector<FieldElement>>& eta_domain) {
    require(eta_domain.size() <= 1000000, Errc::TooLarge, "eta domain too large to sweep");
    EtaCensus census;
    for (const auto& eta : eta_domain) {
        require(eta.size() == t.size(), Errc::LengthMismatch, "eta arity != number of twists");
        TwistedCode code(spec, alpha, k, t, h, eta);
        EtaClass cls;
        if (!is_mds_exhaustive(code)) {
            cls = EtaClass::NonMds;
            ++census.non_mds;
        } else if (is_grs(code)) {
            cls = EtaClass::MdsGrs;
            ++census.mds_grs;
        } else {
            cls = EtaClass::MdsNonGrs;
            ++census.mds_non_grs;
        }
        census.etas.push_back(eta);
        census.classes.push_back(cls);
    }
    return census;
}

std::vector<std::vector<FieldElement>> full_eta_domain_single_twist(const FieldPtr& spec) {
    std::vector<std::vector<FieldElement>> domain;
    for (uint32_t v = 0; v < spec->q(); ++v)
        domain.push_back({FieldElement(spec.get(), v)});
    return domain;
}

Matrix grs_generator(const std::vector<FieldElement>& alpha,
                     const std::vector<FieldElement>& multipliers, int k) {
    require(alpha.size() == multipliers.size(), Errc::LengthMismatch,
            "one multiplier per evaluation point");
    for (const auto& v : multipliers)
        require(!v.is_zero(), Errc::InvalidArgument, "column multipliers must be nonzero");
    return Matrix::vandermonde(alpha, k).scaled_columns(multipliers);
}

} // namespace trs
