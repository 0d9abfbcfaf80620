#include "trs/decode.hpp"

#include <algorithm>
#include <map>

#include "trs/combi.hpp"
#include "trs/matrix.hpp"

namespace trs {

IndexSet::IndexSet(int ell, int zeta) : ell_(ell), zeta_(zeta) {
    require(ell >= 0 && zeta >= 0, Errc::InvalidArgument, "need ell, zeta >= 0");
    if (ell == 0) {
        tuples_.push_back({});
    } else {
        std::vector<int> cur(size_t(ell), 0);
        // odometer over [0, zeta]^ell, keep the simplex sum <= zeta
        for (;;) {
            int total = 0;
            for (int x : cur) total += x;
            if (total <= zeta) tuples_.push_back(cur);
            int pos = ell - 1;
            while (pos >= 0 && cur[size_t(pos)] == zeta) cur[size_t(pos--)] = 0;
            if (pos < 0) break;
            ++cur[size_t(pos)];
        }
        std::stable_sort(tuples_.begin(), tuples_.end(),
                         [](const std::vector<int>& a, const std::vector<int>& b) {
                             int sa = 0, sb = 0;
                             for (int x : a) sa += x;
                             for (int x : b) sb += x;
                             if (sa != sb) return sa < sb;
                             return a < b;
                         });
    }
    require(int64_t(tuples_.size()) == count(ell, zeta), Errc::InvalidArgument,
            "index set size mismatch");
}

int IndexSet::index_of(const std::vector<int>& t) const {
    for (size_t i = 0; i < tuples_.size(); ++i)
        if (tuples_[i] == t) return int(i);
    return -1;
}

long long IndexSet::count(int ell, int zeta) { return binomial(ell + zeta, ell); }

int tau_lb(int n, int k, int ell, int zeta) {
    long long b = binomial(ell + zeta, ell);
    long long num = b * (zeta + 1) * (n - k) - (b * (zeta + ell + 1) - 3 * (zeta + 1));
    long long den = b * (2 * (zeta + 1) + ell);
    long long ceil_q = num / den + (num % den > 0 ? 1 : 0);
    return int(ceil_q - 1);
}

std::pair<Poly, Poly> build_key_equations(const TwistedCode& code,
                                          const std::vector<FieldElement>& received) {
    require(int(received.size()) == code.n(), Errc::LengthMismatch,
            "received word length != n");
    Poly r = interpolate(code.alpha(), received);
    Poly g = from_roots(code.field(), code.alpha());
    return {r, g};
}

namespace {

// X * p mod g for deg p < deg g: shift once, cancel the top coefficient.
Poly mul_x_mod(const Poly& p, const Poly& g) {
    if (p.is_zero()) return p;
    Poly s = p.shifted(1);
    if (s.deg() < g.deg()) return s;
    uint32_t c = s.coeff_value(g.deg()); // g monic
    s.sub_scaled_shifted(g, c, 0);
    return s;
}

} // namespace

KeyEqSolution solve_problem1_linear(const Poly& r, const Poly& g, const TwistedCode& code,
                                    int zeta) {
    const FieldSpec* f = code.field();
    const int n = code.n(), k = code.k(), ell = code.ell();
    IndexSet i1(ell, zeta + 1), i0(ell, zeta);
    const int l1 = i1.size(), l0 = i0.size();

    // block row of each lambda index under every unit-step map i -> i - delta_mu
    std::vector<int> self_block(size_t(l1), -1);
    std::vector<std::vector<std::pair<int, int>>> step_blocks(static_cast<size_t>(l1)); // (mu, block)
    for (int i = 0; i < l1; ++i) {
        self_block[size_t(i)] = i0.index_of(i1.tuple(i));
        for (int mu = 0; mu < ell; ++mu) {
            std::vector<int> t = i1.tuple(i);
            if (t[size_t(mu)] == 0) continue;
            --t[size_t(mu)];
            int b = i0.index_of(t);
            if (b >= 0) step_blocks[size_t(i)].push_back({mu, b});
        }
    }

    Poly rr = poly_mod(r, g);
    for (int tau = 0; tau <= n; ++tau) {
        // powers of X times R mod G, and X^d mod G, up to the degrees used
        std::vector<Poly> xr(size_t(tau) + 1);
        xr[0] = rr;
        for (int c = 1; c <= tau; ++c) xr[size_t(c)] = mul_x_mod(xr[size_t(c) - 1], g);
        const int max_mono = tau + n;
        std::vector<Poly> xm(size_t(max_mono) + 1);
        xm[0] = Poly::constant(f, 1);
        for (int d = 1; d <= max_mono; ++d) xm[size_t(d)] = mul_x_mod(xm[size_t(d) - 1], g);

        // columns: lambda_0 coeffs 0..tau-1, then lambda_i (i>0) coeffs 0..tau,
        // then psi_j coeffs 0..tau+k-1
        const int nv = tau + (l1 - 1) * (tau + 1) + l0 * (tau + k);
        const int ne = l0 * n;
        Matrix a(f, ne, nv);
        std::vector<FieldElement> rhs(size_t(ne), FieldElement(f, 0));

        auto add_poly = [&](int block, int col, const Poly& p, bool negate) {
            for (int d = 0; d <= p.deg(); ++d) {
                uint32_t v = p.coeff_value(d);
                if (v == 0) continue;
                if (negate) v = f->neg(v);
                int row = block * n + d;
                a.at(row, col) = f->add(a.at(row, col), v);
            }
        };

        int col = 0;
        for (int i = 0; i < l1; ++i) {
            int coeffs = (i == 0) ? tau : tau + 1;
            for (int c = 0; c < coeffs; ++c, ++col) {
                if (self_block[size_t(i)] >= 0) add_poly(self_block[size_t(i)], col, xr[size_t(c)], false);
                for (auto [mu, b] : step_blocks[size_t(i)]) {
                    int d = c + k - 1 + code.t()[size_t(mu)];
                    Poly contrib = xm[size_t(d)].scaled(code.eta()[size_t(mu)]);
                    add_poly(b, col, contrib, true);
                }
            }
        }
        for (int j = 0; j < l0; ++j)
            for (int c = 0; c < tau + k; ++c, ++col) add_poly(j, col, xm[size_t(c)], true);

        // monic X^tau term of lambda_0 goes to the right-hand side
        {
            Poly lead = xr[size_t(tau)];
            for (int d = 0; d <= lead.deg(); ++d) {
                uint32_t v = lead.coeff_value(d);
                if (v != 0) rhs[size_t(d)] = FieldElement(f, f->neg(v)); // block 0 rows
            }
            // lambda_0 never feeds other blocks: 0 - delta_mu is out of range
        }

        std::vector<FieldElement> x;
        if (!solve_linear(a, rhs, x)) continue;

        KeyEqSolution sol;
        sol.degree = tau;
        int pos = 0;
        for (int i = 0; i < l1; ++i) {
            int coeffs = (i == 0) ? tau : tau + 1;
            std::vector<uint32_t> c(size_t(coeffs) + (i == 0 ? 1 : 0), 0);
            for (int d = 0; d < coeffs; ++d) c[size_t(d)] = x[size_t(pos++)].value();
            if (i == 0) c[size_t(tau)] = 1;
            sol.lambda.emplace_back(f, std::move(c));
        }
        for (int j = 0; j < l0; ++j) {
            std::vector<uint32_t> c(size_t(tau + k), 0);
            for (int d = 0; d < tau + k; ++d) c[size_t(d)] = x[size_t(pos++)].value();
            sol.psi.emplace_back(f, std::move(c));
        }
        return sol;
    }
    fail(Errc::NoSolution, "no solution up to the tau cap"); // defensive; unreachable in practice
}

PolyMatrix build_module_matrix(const Poly& r, const Poly& g, const TwistedCode& code, int zeta) {
    const FieldSpec* f = code.field();
    const int k = code.k(), ell = code.ell();
    IndexSet i1(ell, zeta + 1), i0(ell, zeta);
    const int l1 = i1.size(), l0 = i0.size(), nn = l1 + l0;

    PolyMatrix m;
    m.rows.assign(size_t(nn), std::vector<Poly>(size_t(nn), Poly(f)));
    m.shift.assign(size_t(nn), 0);
    m.shift[0] = k;
    for (int i = 1; i < l1; ++i) m.shift[size_t(i)] = k - 1;

    Poly rr = poly_mod(r, g);
    for (int i = 0; i < l1; ++i) {
        m.rows[size_t(i)][size_t(i)] = Poly::constant(f, 1);
        int self = i0.index_of(i1.tuple(i));
        if (self >= 0) m.rows[size_t(i)][size_t(l1 + self)] = rr;
        for (int mu = 0; mu < ell; ++mu) {
            std::vector<int> t = i1.tuple(i);
            if (t[size_t(mu)] == 0) continue;
            --t[size_t(mu)];
            int b = i0.index_of(t);
            if (b >= 0)
                m.rows[size_t(i)][size_t(l1 + b)] = Poly::monomial(
                    f, f->neg(code.eta()[size_t(mu)].value()), k - 1 + code.t()[size_t(mu)]);
        }
    }
    for (int j = 0; j < l0; ++j) m.rows[size_t(l1 + j)][size_t(l1 + j)] = g;
    return m;
}

int s_pivot(const std::vector<Poly>& row, const std::vector<int>& shift) {
    int best = -1;
    int64_t best_deg = 0;
    for (size_t j = 0; j < row.size(); ++j) {
        if (row[j].is_zero()) continue;
        int64_t d = int64_t(row[j].deg()) + shift[j];
        if (best < 0 || d >= best_deg) {
            best = int(j);
            best_deg = d;
        }
    }
    return best;
}

PolyMatrix weak_popov_reduce(PolyMatrix m) {
    const int nn = m.row_count();
    require(nn == m.col_count(), Errc::SingularMatrix, "matrix must be square");
    if (nn == 0) return m;
    const FieldSpec* f = nullptr;
    for (const auto& row : m.rows)
        for (const auto& p : row)
            if (p.field()) { f = p.field(); break; }

    auto sdeg_at = [&](int row, int col) {
        return int64_t(m.rows[size_t(row)][size_t(col)].deg()) + m.shift[size_t(col)];
    };

    std::vector<int> slot(size_t(nn), -1);
    std::vector<int> pending;
    for (int i = nn; i-- > 0;) pending.push_back(i);
    while (!pending.empty()) {
        int i = pending.back();
        pending.pop_back();
        int p = s_pivot(m.rows[size_t(i)], m.shift);
        if (p < 0) continue; // zero row; exempt from the distinct-pivot predicate
        if (slot[size_t(p)] == -1 || slot[size_t(p)] == i) {
            slot[size_t(p)] = i;
            continue;
        }
        int j = slot[size_t(p)];
        // reduce the row of larger s-shifted degree; ties pick the lower index
        int target, reducer;
        int64_t di = sdeg_at(i, p), dj = sdeg_at(j, p);
        if (di > dj || (di == dj && i < j)) {
            target = i;
            reducer = j;
        } else {
            target = j;
            reducer = i;
            slot[size_t(p)] = i;
        }
        const Poly& tp = m.rows[size_t(target)][size_t(p)];
        const Poly& rp = m.rows[size_t(reducer)][size_t(p)];
        uint32_t c = f->div(tp.leading().value(), rp.leading().value());
        int d = tp.deg() - rp.deg();
        for (int col = 0; col < nn; ++col)
            m.rows[size_t(target)][size_t(col)].sub_scaled_shifted(m.rows[size_t(reducer)][size_t(col)],
                                                                   c, d);
        pending.push_back(target);
    }
    return m;
}

KeyEqSolution solve_problem1_popov(const Poly& r, const Poly& g, const TwistedCode& code,
                                   int zeta) {
    const int l1 = int(IndexSet::count(code.ell(), zeta + 1));
    const int l0 = int(IndexSet::count(code.ell(), zeta));

    PolyMatrix reduced = weak_popov_reduce(build_module_matrix(r, g, code, zeta));
    int found = -1;
    for (int i = 0; i < reduced.row_count(); ++i)
        if (s_pivot(reduced.rows[size_t(i)], reduced.shift) == 0) {
            found = i;
            break;
        }
    require(found >= 0, Errc::NoPivotOneRow, "no row with s-pivot at the lambda_0 column");

    const auto& row = reduced.rows[size_t(found)];
    FieldElement scale = row[0].leading().inv();
    KeyEqSolution sol;
    sol.degree = row[0].deg();
    for (int i = 0; i < l1; ++i) sol.lambda.push_back(row[size_t(i)].scaled(scale));
    for (int j = 0; j < l0; ++j) sol.psi.push_back(row[size_t(l1 + j)].scaled(scale));
    return sol;
}

DecodeOutcome decode(const TwistedCode& code, const std::vector<FieldElement>& received, int zeta,
                     Engine engine) {
    if (engine == Engine::Brute) return brute_force_decode(code, received);
    require(!code.at_infinity(), Errc::InfeasibleParameters,
            "the key-equation decoder handles non-extended codes");
    const int n = code.n(), k = code.k();
    auto [r, g] = build_key_equations(code, received);
    KeyEqSolution sol = engine == Engine::Linear ? solve_problem1_linear(r, g, code, zeta)
                                                 : solve_problem1_popov(r, g, code, zeta);

    DecodeOutcome out;
    auto [quot, rem] = poly_divrem(sol.psi[0], sol.lambda[0]);
    if (!rem.is_zero()) return out;
    if (quot.deg() >= k) return out; // no valid message reaches degree k
    std::vector<FieldElement> msg;
    msg.reserve(size_t(k));
    for (int i = 0; i < k; ++i) msg.push_back(quot.coeff(i));
    std::vector<FieldElement> cw = code.encode(msg);
    int dist = hamming_distance(cw, received);
    if (dist > (n - k) / 2) return out;
    out.status = DecodeStatus::Success;
    out.codeword = std::move(cw);
    out.message = std::move(msg);
    out.error_weight = dist;
    return out;
}

DecodeOutcome brute_force_decode(const TwistedCode& code,
                                 const std::vector<FieldElement>& received, double budget) {
    require(!code.at_infinity(), Errc::InfeasibleParameters,
            "the brute-force decoder handles non-extended codes");
    const FieldSpec* f = code.field();
    const int n = code.n(), k = code.k(), ell = code.ell();
    const uint32_t q = f->q();
    double cost = double(n) * n;
    for (int i = 0; i < ell; ++i) cost *= q;
    require(cost <= budget, Errc::BudgetExceeded, "q^ell sweep exceeds the budget");

    TwistedCode ambient = code.rs_subcode_frame();
    DecodeOutcome best;
    bool tie = false;

    std::vector<uint32_t> guess(size_t(ell), 0);
    for (;;) {
        // subtract the guessed twist contribution from the received word
        std::vector<uint32_t> shift_c;
        for (int j = 0; j < ell; ++j) {
            size_t d = size_t(k - 1 + code.t()[size_t(j)]);
            if (shift_c.size() <= d) shift_c.resize(d + 1, 0);
            shift_c[d] = f->add(shift_c[d], f->mul(code.eta()[size_t(j)].value(), guess[size_t(j)]));
        }
        Poly shift_poly(f, shift_c);
        std::vector<FieldElement> rr(received);
        for (int i = 0; i < n; ++i) rr[size_t(i)] -= shift_poly.eval(code.alpha()[size_t(i)]);

        DecodeOutcome rs = decode(ambient, rr, 0, Engine::Popov);
        if (rs.success()) {
            bool hooks_match = true;
            for (int j = 0; j < ell && hooks_match; ++j)
                hooks_match = rs.message[size_t(code.h()[size_t(j)])].value() == guess[size_t(j)];
            if (hooks_match) {
                std::vector<FieldElement> cw = code.encode(rs.message);
                int dist = hamming_distance(cw, received);
                if (!best.success() || dist < best.error_weight) {
                    best.status = DecodeStatus::Success;
                    best.codeword = cw;
                    best.message = rs.message;
                    best.error_weight = dist;
                    tie = false;
                } else if (dist == best.error_weight && cw != best.codeword) {
                    tie = true;
                }
            }
        }

        int pos = ell - 1;
        while (pos >= 0 && guess[size_t(pos)] == q - 1) guess[size_t(pos--)] = 0;
        if (pos < 0) break;
        ++guess[size_t(pos)];
    }
    if (!best.success() || tie) return DecodeOutcome{};
    return best;
}

} // namespace trs
