#include "trs/twisted.hpp"

#include <algorithm>
#include <set>

namespace trs {

TwistedCode::TwistedCode(FieldPtr spec, std::vector<FieldElement> alpha, int k,
                         std::vector<int> t, std::vector<int> h, std::vector<FieldElement> eta,
                         bool at_infinity)
    : spec_(std::move(spec)),
      alpha_(std::move(alpha)),
      k_(k),
      t_(std::move(t)),
      h_(std::move(h)),
      eta_(std::move(eta)),
      at_infinity_(at_infinity) {
    const int n = int(alpha_.size());
    require(k_ >= 1 && k_ < n, Errc::InfeasibleParameters, "need 1 <= k < n");
    require(n <= int(spec_->q()), Errc::InfeasibleParameters, "more points than field elements");
    for (const auto& a : alpha_)
        require(a.field() && a.field()->same(*spec_), Errc::FieldMismatch,
                "evaluation point in the wrong field");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            require(alpha_[size_t(i)] != alpha_[size_t(j)], Errc::DuplicatePoint,
                    "evaluation points must be pairwise distinct");
    require(t_.size() == h_.size() && h_.size() == eta_.size(), Errc::LengthMismatch,
            "t, h, eta must have equal length");
    std::set<std::pair<int, int>> pairs;
    for (size_t i = 0; i < t_.size(); ++i) {
        require(t_[i] >= 1 && t_[i] <= n - k_, Errc::InfeasibleParameters,
                "twist out of {1,...,n-k}");
        require(h_[i] >= 0 && h_[i] <= k_ - 1, Errc::InfeasibleParameters,
                "hook out of {0,...,k-1}");
        require(pairs.insert({h_[i], t_[i]}).second, Errc::InfeasibleParameters,
                "(hook, twist) pairs must be pairwise distinct");
        require(eta_[i].field() && eta_[i].field()->same(*spec_), Errc::FieldMismatch,
                "eta in the wrong field");
    }
    require(!at_infinity_ || ell() == 1, Errc::InfeasibleParameters,
            "infinity extension is defined for exactly one twist");
}

bool TwistedCode::is_rs() const {
    for (const auto& e : eta_)
        if (!e.is_zero()) return false;
    return true;
}

std::vector<Poly> TwistedCode::basis_polys() const {
    const FieldSpec* f = field();
    std::vector<Poly> g;
    g.reserve(size_t(k_));
    for (int i = 0; i < k_; ++i) {
        std::vector<uint32_t> c(size_t(k_), 0);
        c[size_t(i)] = 1;
        for (size_t j = 0; j < t_.size(); ++j) {
            if (h_[j] != i) continue;
            size_t d = size_t(k_ - 1 + t_[j]);
            if (c.size() <= d) c.resize(d + 1, 0);
            c[d] = eta_[j].value();
        }
        g.emplace_back(f, std::move(c));
    }
    return g;
}

Matrix TwistedCode::generator_canonical() const {
    const FieldSpec* f = field();
    auto g = basis_polys();
    Matrix m(f, k_, length());
    for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < n(); ++j) m.at(i, j) = g[size_t(i)].eval(alpha_[size_t(j)]).value();
        if (at_infinity_) m.at(i, n()) = g[size_t(i)].coeff_value(k_ - 1 + t_[0]);
    }
    return m;
}

Poly TwistedCode::message_poly(const std::vector<FieldElement>& msg) const {
    require(int(msg.size()) == k_, Errc::LengthMismatch, "message length != k");
    const FieldSpec* f = field();
    std::vector<uint32_t> c(size_t(k_), 0);
    for (int i = 0; i < k_; ++i) c[size_t(i)] = msg[size_t(i)].value();
    for (size_t j = 0; j < t_.size(); ++j) {
        size_t d = size_t(k_ - 1 + t_[j]);
        if (c.size() <= d) c.resize(d + 1, 0);
        c[d] = f->add(c[d], f->mul(eta_[j].value(), msg[size_t(h_[j])].value()));
    }
    return Poly(f, std::move(c));
}

std::vector<FieldElement> TwistedCode::encode(const std::vector<FieldElement>& msg) const {
    Poly fpoly = message_poly(msg);
    std::vector<FieldElement> cw = eval_many(fpoly, alpha_);
    if (at_infinity_) cw.push_back(fpoly.coeff(k_ - 1 + t_[0]));
    return cw;
}

Matrix TwistedCode::systematic_form() const {
    Matrix g = generator_canonical();
    Matrix r = g;
    auto piv = rref(r);
    bool left_block_ok = int(piv.size()) == k_;
    for (int i = 0; i < k_ && left_block_ok; ++i) left_block_ok = piv[size_t(i)] == i;
    require(left_block_ok, Errc::SingularLeftBlock,
            "first k coordinates are not an information set");
    return r.block(0, k_, k_, length() - k_);
}

TwistedCode TwistedCode::rs_subcode_frame() const {
    return TwistedCode(spec_, alpha_, k_, {}, {}, {}, false);
}

TwistedCode sample_random_code(const FieldPtr& spec, int n, int k, int ell, uint64_t rng_seed) {
    const uint32_t q = spec->q();
    require(k >= 1 && k < n && n <= int(q) - 1, Errc::InfeasibleParameters,
            "need 1 <= k < n <= q-1");
    require(ell >= 0 && int64_t(ell) <= int64_t(n - k) * k, Errc::InfeasibleParameters,
            "not enough distinct (hook, twist) pairs");
    SplitMix64 rng(rng_seed);

    std::vector<FieldElement> pool;
    pool.reserve(q - 1);
    for (uint32_t v = 1; v < q; ++v) pool.emplace_back(spec.get(), v);
    rng.partial_shuffle(pool, size_t(n));
    std::vector<FieldElement> alpha(pool.begin(), pool.begin() + n);

    std::vector<int> t(static_cast<size_t>(ell), 0);
    std::vector<int> h(static_cast<size_t>(ell), 0);
    for (;;) {
        std::set<std::pair<int, int>> pairs;
        bool ok = true;
        for (int i = 0; i < ell; ++i) {
            t[size_t(i)] = 1 + int(rng.below(uint64_t(n - k)));
            h[size_t(i)] = int(rng.below(uint64_t(k)));
        }
        for (int i = 0; i < ell && ok; ++i)
            ok = pairs.insert(std::make_pair(h[size_t(i)], t[size_t(i)])).second;
        if (ok) break;
    }

    std::vector<FieldElement> eta;
    eta.reserve(size_t(ell));
    for (int i = 0; i < ell; ++i) eta.emplace_back(spec.get(), 1 + uint32_t(rng.below(q - 1)));

    return TwistedCode(spec, std::move(alpha), k, std::move(t), std::move(h), std::move(eta));
}

int hamming_distance(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    require(a.size() == b.size(), Errc::LengthMismatch, "vectors of different length");
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

int hamming_weight(const std::vector<FieldElement>& a) {
    int w = 0;
    for (const auto& x : a) w += !x.is_zero();
    return w;
}

} // namespace trs
