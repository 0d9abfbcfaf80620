#include "trs/mds.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "trs/combi.hpp"

namespace trs {

std::optional<std::vector<int>> mds_violation_exhaustive(const TwistedCode& code) {
    Matrix g = code.generator_canonical();
    const int k = code.k(), n = g.cols();
    auto idx = first_k_subset(k);
    do {
        if (determinant(g.select_columns(idx)).is_zero()) return idx;
    } while (next_k_subset(idx, n));
    return std::nullopt;
}

bool is_mds_exhaustive(const TwistedCode& code) {
    return !mds_violation_exhaustive(code).has_value();
}

int min_distance_enumerate(const TwistedCode& code) {
    const FieldSpec* f = code.field();
    const uint32_t q = f->q();
    uint64_t total = 1;
    for (int i = 0; i < code.k(); ++i) {
        total *= q;
        require(total <= 1000000, Errc::TooLarge, "q^k exceeds the enumeration guard");
    }
    int best = code.length() + 1;
    std::vector<FieldElement> msg(size_t(code.k()), FieldElement(f, 0));
    for (uint64_t m = 1; m < total; ++m) {
        uint64_t v = m;
        for (int i = 0; i < code.k(); ++i) {
            msg[size_t(i)] = FieldElement(f, uint32_t(v % q));
            v /= q;
        }
        best = std::min(best, hamming_weight(code.encode(msg)));
    }
    return best;
}

bool sum_product_free_check(const std::vector<FieldElement>& eta, const SubfieldEmbedding& sub) {
    const FieldSpec* f = sub.sup().get();
    const int ell = int(eta.size());
    require(ell >= 1 && ell < 30, Errc::InvalidArgument, "eta must be nonempty");
    for (const auto& e : eta)
        require(e.field() && e.field()->same(*f), Errc::FieldMismatch, "eta in the wrong field");
    const uint32_t masks = (1u << ell) - 1;
    double cost = 1;
    for (uint32_t i = 0; i < masks && cost <= 1e7; ++i) cost *= double(sub.sub()->q());
    require(cost <= 1e7, Errc::TooLarge, "assignment sweep exceeds the brute-force guard");

    std::vector<uint32_t> prod(masks + 1, 1);
    for (uint32_t mask = 1; mask <= masks; ++mask) {
        uint32_t low = mask & (mask - 1);
        uint32_t bit = mask ^ low;
        int j = __builtin_ctz(bit);
        prod[mask] = f->mul(prod[low], eta[size_t(j)].value());
    }
    auto image = sub.image_values();

    // assignment odometer over all nonempty subsets, depth-first running sum
    bool free_of_hits = true;
    std::function<void(uint32_t, uint32_t)> walk = [&](uint32_t mask, uint32_t sum) {
        if (!free_of_hits) return;
        if (mask > masks) {
            if (sum != 0 && std::binary_search(image.begin(), image.end(), sum))
                free_of_hits = false;
            return;
        }
        for (uint32_t a : image) walk(mask + 1, f->add(sum, f->mul(a, prod[mask])));
    };
    walk(1, 0);
    return free_of_hits;
}

ChainSpec make_chain(const std::vector<FieldPtr>& fields,
                     const std::vector<FieldElement>& eta_choices) {
    require(fields.size() >= 1, Errc::InvalidArgument, "empty chain");
    ChainSpec cs;
    cs.fields = fields;
    for (size_t i = 0; i + 1 < fields.size(); ++i) {
        require(fields[i]->q() < fields[i + 1]->q(), Errc::EmptyDifference,
                "chain containments must be proper");
        cs.steps.emplace_back(fields[i], fields[i + 1]);
    }
    if (eta_choices.empty() && fields.size() > 1) {
        for (size_t i = 0; i + 1 < fields.size(); ++i) {
            auto img = cs.steps[i].image_values();
            uint32_t pick = 0;
            bool found = false;
            for (uint32_t v = 0; v < fields[i + 1]->q() && !found; ++v)
                if (!std::binary_search(img.begin(), img.end(), v)) {
                    pick = v;
                    found = true;
                }
            require(found, Errc::EmptyDifference, "no element outside the subfield");
            cs.eta_choices.emplace_back(fields[i + 1].get(), pick);
        }
    } else {
        require(eta_choices.size() + 1 == fields.size() || fields.size() == 1,
                Errc::LengthMismatch, "one eta per chain step");
        cs.eta_choices = eta_choices;
        for (size_t i = 0; i < cs.eta_choices.size(); ++i) {
            const auto& e = cs.eta_choices[i];
            require(e.field() && e.field()->same(*fields[i + 1]), Errc::FieldMismatch,
                    "eta_i must live in F_{q_i}");
            auto img = cs.steps[i].image_values();
            require(!std::binary_search(img.begin(), img.end(), e.value()), Errc::EmptyDifference,
                    "eta_i must lie outside F_{q_{i-1}}");
        }
    }
    return cs;
}

ChainSpec make_chain(const std::vector<FieldPtr>& fields) { return make_chain(fields, {}); }

FieldElement chain_to_top(const ChainSpec& cs, size_t level, FieldElement e) {
    for (size_t j = level; j + 1 < cs.fields.size(); ++j) e = cs.steps[j].map(e);
    return e;
}

std::vector<FieldElement> make_chain_eta(const ChainSpec& cs) {
    std::vector<FieldElement> eta;
    for (size_t i = 0; i < cs.eta_choices.size(); ++i)
        eta.push_back(chain_to_top(cs, i + 1, cs.eta_choices[i]));
    return eta;
}

namespace {
// Degree of x over the subfield = size of its orbit under the q_0-power map.
int subfield_degree(const FieldSpec* f, uint32_t q0, uint32_t x) {
    uint32_t y = f->pow(x, int64_t(q0));
    int d = 1;
    while (y != x) {
        y = f->pow(y, int64_t(q0));
        ++d;
    }
    return d;
}
} // namespace

PowerBasisSpec make_power_basis(const FieldPtr& sub, const FieldPtr& sup, FieldElement psi,
                                std::vector<FieldElement> scalars) {
    SubfieldEmbedding emb(sub, sup);
    int degree = int(sup->m() / sub->m());
    require(int(scalars.size()) + 1 <= degree, Errc::InfeasibleParameters,
            "extension degree must be at least ell+1");
    require(psi.field() && psi.field()->same(*sup), Errc::FieldMismatch, "psi in the wrong field");
    require(!psi.is_zero() && subfield_degree(sup.get(), sub->q(), psi.value()) == degree,
            Errc::InfeasibleParameters, "psi does not generate a power basis");
    for (const auto& a : scalars) {
        require(a.field() && a.field()->same(*sub), Errc::FieldMismatch,
                "scalars must live in the subfield");
        require(!a.is_zero(), Errc::InvalidArgument, "scalars must be nonzero");
    }
    return PowerBasisSpec{sub, sup, std::move(emb), psi, std::move(scalars)};
}

PowerBasisSpec make_power_basis(const FieldPtr& sub, const FieldPtr& sup, int ell) {
    require(ell >= 1, Errc::InvalidArgument, "need at least one twist");
    int degree = int(sup->m() / sub->m());
    uint32_t pick = 0;
    bool found = false;
    for (uint32_t v = 2; v < sup->q() && !found; ++v)
        if (subfield_degree(sup.get(), sub->q(), v) == degree) {
            pick = v;
            found = true;
        }
    require(found, Errc::InfeasibleParameters, "no power-basis generator found");
    std::vector<FieldElement> ones(size_t(ell), FieldElement(sub.get(), 1));
    return make_power_basis(sub, sup, FieldElement(sup.get(), pick), std::move(ones));
}

std::vector<FieldElement> make_power_basis_eta(const PowerBasisSpec& pb) {
    std::vector<FieldElement> eta;
    eta.reserve(pb.scalars.size());
    for (const auto& a : pb.scalars) eta.push_back(pb.emb.map(a) * pb.psi);
    return eta;
}

std::optional<std::vector<int>> star_mds_violation(const std::vector<FieldElement>& alpha, int k,
                                                   FieldElement eta1) {
    if (eta1.is_zero()) return std::nullopt; // products never reach eta^{-1}
    const FieldSpec* f = eta1.field();
    // Subsets containing a zero point have product 0 and cannot violate, so
    // enumerate k-subsets of the nonzero points only.
    std::vector<int> nz;
    for (size_t i = 0; i < alpha.size(); ++i)
        if (!alpha[i].is_zero()) nz.push_back(int(i));
    if (int(nz.size()) < k) return std::nullopt;

    uint32_t target = f->div(f->pow(f->neg(1), k), eta1.value()); // (-1)^k / eta
    std::vector<int> chosen;
    std::function<bool(size_t, uint32_t)> dfs = [&](size_t pos, uint32_t prodv) -> bool {
        if (int(chosen.size()) == k) return prodv == target;
        if (nz.size() - pos < size_t(k) - chosen.size()) return false;
        for (size_t i = pos; i < nz.size(); ++i) {
            chosen.push_back(nz[i]);
            if (dfs(i + 1, f->mul(prodv, alpha[size_t(nz[i])].value()))) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (dfs(0, 1)) return chosen;
    return std::nullopt;
}

bool star_mds_condition(const std::vector<FieldElement>& alpha, int k, FieldElement eta1) {
    return !star_mds_violation(alpha, k, eta1).has_value();
}

std::optional<std::vector<int>> plus_mds_violation(const std::vector<FieldElement>& alpha, int k,
                                                   FieldElement eta1) {
    if (eta1.is_zero()) return std::nullopt;
    const FieldSpec* f = eta1.field();
    const uint32_t q = f->q();
    const int n = int(alpha.size());
    uint32_t target = f->neg(f->inv(eta1.value())); // sum must hit -eta^{-1}

    // layer[i][c*q + s]: subsets of the first i points, size c, sum s
    std::vector<std::vector<char>> layer(size_t(n) + 1,
                                         std::vector<char>(size_t(k + 1) * q, 0));
    layer[0][0] = 1;
    for (int i = 0; i < n; ++i) {
        uint32_t a = alpha[size_t(i)].value();
        auto& prev = layer[size_t(i)];
        auto& next = layer[size_t(i) + 1];
        next = prev;
        for (int c = 0; c < k; ++c)
            for (uint32_t s = 0; s < q; ++s)
                if (prev[size_t(c) * q + s]) next[size_t(c + 1) * q + f->add(s, a)] = 1;
    }
    if (!layer[size_t(n)][size_t(k) * q + target]) return std::nullopt;

    // walk the layers back to recover one witness subset
    std::vector<int> witness;
    int c = k;
    uint32_t s = target;
    for (int i = n; i-- > 0;) {
        uint32_t a = alpha[size_t(i)].value();
        if (c > 0 && layer[size_t(i)][size_t(c - 1) * q + f->sub(s, a)]) {
            witness.push_back(i);
            --c;
            s = f->sub(s, a);
        }
    }
    std::reverse(witness.begin(), witness.end());
    return witness;
}

bool plus_mds_condition(const std::vector<FieldElement>& alpha, int k, FieldElement eta1) {
    return !plus_mds_violation(alpha, k, eta1).has_value();
}

std::vector<FieldElement> multiplicative_subgroup(const FieldPtr& spec, int order) {
    const uint32_t q = spec->q();
    require(order >= 1 && (q - 1) % uint32_t(order) == 0, Errc::NotASubgroupOrder,
            "order must divide q-1");
    uint32_t w = spec->pow(spec->generator(), int64_t((q - 1) / uint32_t(order)));
    std::vector<FieldElement> g;
    uint32_t x = 1;
    for (int i = 0; i < order; ++i) {
        g.emplace_back(spec.get(), x);
        x = spec->mul(x, w);
    }
    std::sort(g.begin(), g.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.value() < b.value(); });
    return g;
}

std::vector<FieldElement> additive_subgroup_span(const FieldPtr& spec,
                                                 const std::vector<FieldElement>& basis) {
    const FieldSpec* f = spec.get();
    std::set<uint32_t> span{0};
    for (const auto& b : basis) {
        std::set<uint32_t> next;
        for (uint32_t s : span) {
            uint32_t x = s;
            for (uint32_t c = 0; c < f->p(); ++c) {
                next.insert(x);
                x = f->add(x, b.value());
            }
        }
        span = std::move(next);
    }
    std::vector<FieldElement> out;
    out.reserve(span.size());
    for (uint32_t v : span) out.emplace_back(f, v);
    return out;
}

TwistedCode make_star_twisted(const FieldPtr& spec, int subgroup_order, int k, FieldElement eta1,
                              bool include_zero) {
    const uint32_t q = spec->q();
    require(subgroup_order >= 1 && uint32_t(subgroup_order) < q - 1 &&
                (q - 1) % uint32_t(subgroup_order) == 0,
            Errc::NotASubgroupOrder, "subgroup must be proper and its order divide q-1");
    require(!eta1.is_zero(), Errc::InvalidArgument, "eta must be nonzero");
    const FieldSpec* f = spec.get();
    uint32_t e = f->div(f->pow(f->neg(1), k), eta1.value());
    require(f->pow(e, subgroup_order) != 1, Errc::EtaInGroup,
            "(-1)^k / eta must lie outside the subgroup");

    std::vector<FieldElement> alpha = multiplicative_subgroup(spec, subgroup_order);
    if (include_zero) alpha.insert(alpha.begin(), FieldElement(f, 0));
    return TwistedCode(spec, std::move(alpha), k, {1}, {0}, {eta1});
}

TwistedCode make_plus_twisted(const FieldPtr& spec, const std::vector<FieldElement>& subgroup,
                              int n, int k, FieldElement eta1, bool at_infinity) {
    const FieldSpec* f = spec.get();
    std::set<uint32_t> vs;
    for (const auto& v : subgroup) vs.insert(v.value());
    require(vs.size() == subgroup.size(), Errc::NotAdditiveSubgroup, "repeated elements");
    require(vs.count(0) == 1, Errc::NotAdditiveSubgroup, "an additive subgroup contains 0");
    require(vs.size() < f->q(), Errc::NotAdditiveSubgroup, "subgroup must be proper");
    for (uint32_t a : vs)
        for (uint32_t b : vs)
            require(vs.count(f->add(a, b)) == 1, Errc::NotAdditiveSubgroup,
                    "set is not closed under addition");
    require(!eta1.is_zero(), Errc::InvalidArgument, "eta must be nonzero");
    require(vs.count(f->inv(eta1.value())) == 0, Errc::EtaInverseInGroup,
            "1/eta must lie outside the subgroup");
    require(n >= 2 && size_t(n) <= vs.size(), Errc::InfeasibleParameters,
            "n must fit inside the subgroup");

    std::vector<FieldElement> alpha;
    for (uint32_t v : vs) {
        if (int(alpha.size()) == n) break;
        alpha.emplace_back(f, v);
    }
    return TwistedCode(spec, std::move(alpha), k, {1}, {k - 1}, {eta1}, at_infinity);
}

bool is_k_sum_generator(const std::vector<FieldElement>& s, int k, GroupOp op) {
    require(!s.empty(), Errc::InvalidArgument, "empty set");
    const FieldSpec* f = s.front().field();
    require(int(s.size()) >= k && k >= 1, Errc::InvalidArgument, "need |S| >= k >= 1");
    const uint32_t q = f->q();
    uint32_t group_size = op == GroupOp::Mul ? q - 1 : q;
    if (op == GroupOp::Mul)
        for (const auto& x : s)
            require(!x.is_zero(), Errc::InvalidArgument, "0 is not in the multiplicative group");
    require(binomial(int(s.size()), k) * group_size <= 10000000, Errc::TooLarge,
            "k-subset sweep exceeds the brute-force guard");

    std::vector<char> hit(q, 0);
    uint32_t remaining = group_size;
    auto idx = first_k_subset(k);
    do {
        uint32_t acc = op == GroupOp::Mul ? 1u : 0u;
        for (int i : idx)
            acc = op == GroupOp::Mul ? f->mul(acc, s[size_t(i)].value())
                                     : f->add(acc, s[size_t(i)].value());
        if (!hit[acc]) {
            hit[acc] = 1;
            if (--remaining == 0) return true;
        }
    } while (next_k_subset(idx, int(s.size())));
    return false;
}

} // namespace trs
