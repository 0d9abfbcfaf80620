#include "trs/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace trs {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::DuplicatePoint: return "DuplicatePoint";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::SingularLeftBlock: return "SingularLeftBlock";
        case Errc::InfeasibleParameters: return "InfeasibleParameters";
        case Errc::EmptyDifference: return "EmptyDifference";
        case Errc::TooLarge: return "TooLarge";
        case Errc::NotASubgroupOrder: return "NotASubgroupOrder";
        case Errc::EtaInGroup: return "EtaInGroup";
        case Errc::NotAdditiveSubgroup: return "NotAdditiveSubgroup";
        case Errc::EtaInverseInGroup: return "EtaInverseInGroup";
        case Errc::NotMultiplicativeGroup: return "NotMultiplicativeGroup";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::NoPivotOneRow: return "NoPivotOneRow";
        case Errc::NoSolution: return "NoSolution";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::NotASubfield: return "NotASubfield";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// ---- GF(p)[X] arithmetic on plain digit vectors (low-to-high, normalized) ----

void norm_poly(std::vector<uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<uint32_t> polymod(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p) {
    // b monic-izable, nonzero
    uint32_t lead = b.back();
    uint32_t lead_inv = 1;
    // invert lead mod p
    for (uint32_t x = 1; x < p; ++x)
        if (uint64_t(x) * lead % p == 1) { lead_inv = x; break; }
    while (a.size() >= b.size() && !a.empty()) {
        uint32_t c = uint64_t(a.back()) * lead_inv % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t t = uint64_t(c) * b[i] % p;
            a[shift + i] = uint32_t((a[shift + i] + p - t) % p);
        }
        norm_poly(a);
    }
    return a;
}

std::vector<uint32_t> polymul_mod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                  const std::vector<uint32_t>& modulus, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = uint32_t((c[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    norm_poly(c);
    return polymod(std::move(c), modulus, p);
}

} // namespace

bool is_irreducible_mod_p(const std::vector<uint32_t>& poly, uint32_t p) {
    // Trial division against all monic polynomials of degree <= deg/2.
    std::vector<uint32_t> f = poly;
    norm_poly(f);
    if (f.size() < 2) return false; // constants are not irreducible
    size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        // enumerate monic g of degree d: d free digits
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        std::vector<uint32_t> g(d + 1, 0);
        g[d] = 1;
        for (uint64_t idx = 0; idx < count; ++idx) {
            uint64_t t = idx;
            for (size_t i = 0; i < d; ++i) {
                g[i] = uint32_t(t % p);
                t /= p;
            }
            if (polymod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

FieldSpec::FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        q *= p_;
        require(q <= (1u << 20), Errc::OutOfRange, "field size exceeds 2^20");
    }
    q_ = uint32_t(q);

    if (m_ > 1) {
        // Find the generator with smallest encoding, then build exp/log tables.
        std::vector<uint32_t> factors;
        uint32_t o = q_ - 1;
        for (uint32_t d = 2; uint64_t(d) * d <= o; ++d)
            if (o % d == 0) {
                factors.push_back(d);
                while (o % d == 0) o /= d;
            }
        if (o > 1) factors.push_back(o);

        auto pow_ref = [&](uint32_t a, uint32_t e) {
            std::vector<uint32_t> r{1};
            std::vector<uint32_t> base = unpack(a);
            norm_poly(base);
            while (e) {
                if (e & 1) r = polymul_mod(r, base, modulus_, p_);
                base = polymul_mod(base, base, modulus_, p_);
                e >>= 1;
            }
            return pack(r);
        };
        for (uint32_t g = 2; g < q_; ++g) {
            bool primitive = true;
            for (uint32_t r : factors)
                if (pow_ref(g, (q_ - 1) / r) == 1) { primitive = false; break; }
            if (primitive) { generator_ = g; break; }
        }

        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, 0);
        std::vector<uint32_t> acc{1};
        std::vector<uint32_t> gv = unpack(generator_);
        norm_poly(gv);
        for (uint32_t i = 0; i < q_ - 1; ++i) {
            uint32_t v = pack(acc);
            exp_[i] = v;
            exp_[i + q_ - 1] = v;
            log_[v] = i;
            acc = polymul_mod(acc, gv, modulus_, p_);
        }
        require(pack(acc) == 1, Errc::NotIrreducible, "generator order check failed");
    } else {
        // smallest primitive root mod p
        std::vector<uint32_t> factors;
        uint32_t o = q_ - 1;
        for (uint32_t d = 2; uint64_t(d) * d <= o; ++d)
            if (o % d == 0) {
                factors.push_back(d);
                while (o % d == 0) o /= d;
            }
        if (o > 1) factors.push_back(o);
        for (uint32_t g = (q_ == 2 ? 1 : 2); g < q_; ++g) {
            bool primitive = true;
            for (uint32_t r : factors)
                if (pow(g, (q_ - 1) / r) == 1) { primitive = false; break; }
            if (primitive) { generator_ = g; break; }
        }
    }
}

FieldSpec::~FieldSpec() = default;

std::vector<uint32_t> FieldSpec::unpack(uint32_t v) const {
    std::vector<uint32_t> d(m_);
    for (uint32_t i = 0; i < m_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
    return d;
}

uint32_t FieldSpec::pack(const std::vector<uint32_t>& digits) const {
    uint32_t v = 0;
    for (size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i] % p_;
    return v;
}

uint32_t FieldSpec::add(uint32_t a, uint32_t b) const {
    if (m_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        r += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

uint32_t FieldSpec::neg(uint32_t a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

uint32_t FieldSpec::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldSpec::mul(uint32_t a, uint32_t b) const {
    if (m_ == 1) return uint32_t(uint64_t(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

uint32_t FieldSpec::mul_poly(uint32_t a, uint32_t b) const {
    auto av = unpack(a), bv = unpack(b);
    norm_poly(av);
    norm_poly(bv);
    return pack(polymul_mod(av, bv, modulus_, p_));
}

uint32_t FieldSpec::inv(uint32_t a) const {
    require(a != 0, Errc::DivisionByZero, "inverse of zero");
    if (m_ == 1) {
        // integer xgcd mod p
        int64_t t = 0, newt = 1, r = p_, newr = a;
        while (newr != 0) {
            int64_t qt = r / newr;
            int64_t tmp = t - qt * newt;
            t = newt;
            newt = tmp;
            tmp = r - qt * newr;
            r = newr;
            newr = tmp;
        }
        return uint32_t(t < 0 ? t + p_ : t);
    }
    // polynomial xgcd of (residue, modulus) over GF(p)
    auto inv_mod_p = [&](uint32_t x) {
        int64_t t = 0, newt = 1, r = p_, newr = x;
        while (newr != 0) {
            int64_t qt = r / newr;
            int64_t tmp = t - qt * newt;
            t = newt;
            newt = tmp;
            tmp = r - qt * newr;
            r = newr;
            newr = tmp;
        }
        return uint32_t(t < 0 ? t + p_ : t);
    };
    std::vector<uint32_t> r0 = modulus_, r1 = unpack(a);
    norm_poly(r1);
    std::vector<uint32_t> t0, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<uint32_t> quo(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
        std::vector<uint32_t> rem = r0;
        uint32_t li = inv_mod_p(r1.back());
        while (rem.size() >= r1.size() && !rem.empty()) {
            uint32_t c = uint32_t(uint64_t(rem.back()) * li % p_);
            size_t shift = rem.size() - r1.size();
            quo[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) {
                uint64_t t = uint64_t(c) * r1[i] % p_;
                rem[shift + i] = uint32_t((rem[shift + i] + p_ - t) % p_);
            }
            norm_poly(rem);
        }
        norm_poly(quo);
        // (r0, r1) = (r1, rem); (t0, t1) = (t1, t0 - quo*t1)
        std::vector<uint32_t> qt1(quo.size() + t1.size(), 0);
        if (!quo.empty() && !t1.empty()) {
            qt1.assign(quo.size() + t1.size() - 1, 0);
            for (size_t i = 0; i < quo.size(); ++i)
                for (size_t j = 0; j < t1.size(); ++j)
                    qt1[i + j] = uint32_t((qt1[i + j] + uint64_t(quo[i]) * t1[j]) % p_);
        } else {
            qt1.clear();
        }
        std::vector<uint32_t> tn(std::max(t0.size(), qt1.size()), 0);
        for (size_t i = 0; i < tn.size(); ++i) {
            uint32_t x = i < t0.size() ? t0[i] : 0;
            uint32_t y = i < qt1.size() ? qt1[i] : 0;
            tn[i] = (x + p_ - y % p_) % p_;
        }
        norm_poly(tn);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    // r0 = gcd, a nonzero constant; scale t0 by its inverse
    uint32_t c = inv_mod_p(r0[0]);
    for (auto& x : t0) x = uint32_t(uint64_t(x) * c % p_);
    return pack(t0);
}

uint32_t FieldSpec::div(uint32_t a, uint32_t b) const {
    require(b != 0, Errc::DivisionByZero, "division by zero");
    return mul(a, inv(b));
}

uint32_t FieldSpec::pow(uint32_t a, int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t FieldSpec::encode_int(uint32_t v) const {
    require(v < q_, Errc::OutOfRange, "element encoding out of [0, q)");
    return v;
}

uint32_t FieldSpec::decode_int(uint32_t n) const {
    require(n < q_, Errc::OutOfRange, "integer code out of [0, q)");
    return n;
}

// ---------------------------------------------------------------------------

namespace {
std::vector<uint32_t> smallest_irreducible(uint32_t p, uint32_t m) {
    if (m == 1) return {0, 1}; // X
    // lexicographic by (c_0, ..., c_{m-1}); leading coefficient fixed to 1
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    std::vector<uint32_t> f(m + 1, 0);
    f[m] = 1;
    for (uint64_t idx = 0; idx < count; ++idx) {
        uint64_t t = idx;
        for (uint32_t i = m; i-- > 0;) { // c_{m-1} varies fastest => c_0 is most significant
            f[i] = uint32_t(t % p);
            t /= p;
        }
        if (is_irreducible_mod_p(f, p)) return f;
    }
    fail(Errc::NotIrreducible, "no irreducible polynomial found"); // unreachable for prime p
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<uint32_t, std::vector<uint32_t>>, FieldPtr> by_key;
};
Registry& registry() {
    static Registry* r = new Registry;
    return *r;
}
} // namespace

FieldPtr make_field(uint32_t p, uint32_t m, const std::vector<uint32_t>* modulus) {
    require(is_prime_u32(p), Errc::NotPrime, "p = " + std::to_string(p));
    require(m >= 1, Errc::DegreeMismatch, "extension degree must be >= 1");

    std::vector<uint32_t> mod;
    if (modulus) {
        mod = *modulus;
        for (auto& c : mod) require(c < p, Errc::OutOfRange, "modulus coefficient out of [0, p)");
        require(mod.size() == size_t(m) + 1 && mod.back() == 1, Errc::DegreeMismatch,
                "modulus must be monic of degree m");
        if (m > 1)
            require(is_irreducible_mod_p(mod, p), Errc::NotIrreducible, "modulus is reducible");
    } else {
        mod = smallest_irreducible(p, m);
    }

    auto key = std::make_pair(p, mod);
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.by_key.find(key);
    if (it != reg.by_key.end()) return it->second;
    FieldPtr f(new FieldSpec(p, m, mod));
    reg.by_key.emplace(std::move(key), f);
    return f;
}

FieldPtr make_field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
    return make_field(p, m, &modulus);
}

// ---------------------------------------------------------------------------

SubfieldEmbedding::SubfieldEmbedding(FieldPtr sub, FieldPtr sup)
    : sub_(std::move(sub)), sup_(std::move(sup)), gen_image_(0) {
    require(sub_->p() == sup_->p(), Errc::NotASubfield, "different characteristic");
    require(sup_->m() % sub_->m() == 0, Errc::NotASubfield,
            "degree of the subfield does not divide the extension degree");

    // Root of sub's modulus in sup, smallest encoding first. GF(p) constants
    // embed as themselves (digit c encodes the constant c in every field).
    const auto& mod = sub_->modulus();
    bool found = false;
    for (uint32_t x = 0; x < sup_->q(); ++x) {
        uint32_t acc = 0;
        for (size_t i = mod.size(); i-- > 0;) acc = sup_->add(sup_->mul(acc, x), mod[i]);
        if (acc == 0) {
            gen_image_ = x;
            found = true;
            break;
        }
    }
    require(found, Errc::NotASubfield, "subfield modulus has no root in the extension");

    image_sorted_.reserve(sub_->q());
    for (uint32_t v = 0; v < sub_->q(); ++v) image_sorted_.push_back(map_value(v));
    std::sort(image_sorted_.begin(), image_sorted_.end());
    for (size_t i = 1; i < image_sorted_.size(); ++i)
        require(image_sorted_[i] != image_sorted_[i - 1], Errc::NotASubfield,
                "embedding is not injective");

    // Homomorphism check, exhaustive for small subfields.
    if (sub_->q() <= 1024) {
        require(map_value(0) == 0 && map_value(1) == 1, Errc::NotASubfield, "unit map broken");
        for (uint32_t a = 0; a < sub_->q(); ++a)
            for (uint32_t b = 0; b < sub_->q(); ++b) {
                require(map_value(sub_->add(a, b)) == sup_->add(map_value(a), map_value(b)),
                        Errc::NotASubfield, "embedding does not preserve +");
                require(map_value(sub_->mul(a, b)) == sup_->mul(map_value(a), map_value(b)),
                        Errc::NotASubfield, "embedding does not preserve *");
            }
    }
}

uint32_t SubfieldEmbedding::map_value(uint32_t sub_value) const {
    auto digits = sub_->unpack(sub_value);
    uint32_t acc = 0;
    for (size_t i = digits.size(); i-- > 0;)
        acc = sup_->add(sup_->mul(acc, gen_image_), digits[i]);
    return acc;
}

FieldElement SubfieldEmbedding::map(FieldElement e) const {
    require(e.field() && e.field()->same(*sub_), Errc::FieldMismatch,
            "element is not in the embedding's subfield");
    return FieldElement(sup_.get(), map_value(e.value()));
}

bool SubfieldEmbedding::contains(FieldElement e) const {
    require(e.field() && e.field()->same(*sup_), Errc::FieldMismatch,
            "element is not in the embedding's extension field");
    return std::binary_search(image_sorted_.begin(), image_sorted_.end(), e.value());
}

std::vector<uint32_t> SubfieldEmbedding::image_values() const { return image_sorted_; }

} // namespace trs
