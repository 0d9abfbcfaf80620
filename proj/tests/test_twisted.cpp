#include <set>

#include "doctest.h"
#include "trs/io.hpp"
#include "trs/rng.hpp"
#include "trs/twisted.hpp"

using namespace trs;

namespace {

std::vector<FieldElement> points(const FieldPtr& f, std::initializer_list<uint32_t> vs) {
    std::vector<FieldElement> out;
    for (uint32_t v : vs) out.push_back(element(f, v));
    return out;
}

std::vector<FieldElement> random_message(const TwistedCode& code, SplitMix64& rng) {
    std::vector<FieldElement> msg;
    for (int i = 0; i < code.k(); ++i)
        msg.push_back(FieldElement(code.field(), uint32_t(rng.below(code.field()->q()))));
    return msg;
}

} // namespace

TEST_SUITE_BEGIN("twisted");

TEST_CASE("validation") {
    auto f13 = make_field(13, 1);
    auto alpha = points(f13, {1, 2, 3, 4, 5, 6});
    CHECK_NOTHROW(TwistedCode(f13, alpha, 3, {1}, {0}, {element(f13, 1)}));
    // twist out of range
    CHECK_THROWS_AS(TwistedCode(f13, alpha, 3, {4}, {0}, {element(f13, 1)}), Error);
    // hook out of range
    CHECK_THROWS_AS(TwistedCode(f13, alpha, 3, {1}, {3}, {element(f13, 1)}), Error);
    // repeated (h, t) pair
    CHECK_THROWS_AS(
        TwistedCode(f13, alpha, 3, {1, 1}, {0, 0}, {element(f13, 1), element(f13, 2)}), Error);
    // repeated evaluation point
    CHECK_THROWS_AS(TwistedCode(f13, points(f13, {1, 1, 2}), 2, {}, {}, {}), Error);
    // infinity extension needs exactly one twist
    CHECK_THROWS_AS(TwistedCode(f13, alpha, 3, {1, 2}, {0, 0},
                                {element(f13, 1), element(f13, 2)}, true),
                    Error);
    CHECK_NOTHROW(TwistedCode(f13, alpha, 3, {1}, {2}, {element(f13, 1)}, true));
}

TEST_CASE("basis polynomials") {
    SUBCASE("no twists gives monomials") {
        auto f13 = make_field(13, 1);
        TwistedCode code(f13, points(f13, {1, 2, 3, 4, 5, 6}), 3, {}, {}, {});
        auto g = code.basis_polys();
        for (int i = 0; i < 3; ++i) CHECK(g[size_t(i)] == Poly::monomial(f13.get(), 1, i));
    }
    SUBCASE("punctured Glynn parameters") {
        auto f9 = make_field(3, 2);
        // a non-square of GF(9)
        std::set<uint32_t> squares;
        for (uint32_t v = 1; v < 9; ++v) squares.insert(f9->mul(v, v));
        uint32_t nu = 0;
        for (uint32_t v = 1; v < 9; ++v)
            if (!squares.count(v)) { nu = v; break; }
        REQUIRE(nu != 0);

        std::vector<FieldElement> alpha;
        for (uint32_t v = 0; v < 9; ++v) alpha.push_back(element(f9, v));
        TwistedCode code(f9, alpha, 5, {2}, {2}, {element(f9, nu)});
        auto g = code.basis_polys();
        for (int i : {0, 1, 3, 4}) CHECK(g[size_t(i)] == Poly::monomial(f9.get(), 1, i));
        Poly expect = Poly::monomial(f9.get(), 1, 2) + Poly::monomial(f9.get(), nu, 6);
        CHECK(g[2] == expect); // X^2 + nu X^6
    }
    SUBCASE("three twists, two hooked on the same row") {
        auto f13 = make_field(13, 1);
        auto alpha = points(f13, {1, 2, 3, 4, 5, 6, 7, 8});
        FieldElement e1 = element(f13, 3), e2 = element(f13, 5), e3 = element(f13, 7);
        TwistedCode code(f13, alpha, 5, {1, 3, 3}, {4, 4, 2}, {e1, e2, e3});
        auto g = code.basis_polys();
        CHECK(g[2] == Poly::monomial(f13.get(), 1, 2) + Poly::monomial(f13.get(), 7, 7));
        CHECK(g[4] == Poly::monomial(f13.get(), 1, 4) + Poly::monomial(f13.get(), 3, 5) +
                          Poly::monomial(f13.get(), 5, 7));
        for (int i : {0, 1, 3}) CHECK(g[size_t(i)] == Poly::monomial(f13.get(), 1, i));

        // coefficients of the basis reproduce (t, h, eta) exactly
        for (int j = 0; j < code.ell(); ++j) {
            int hook = code.h()[size_t(j)];
            int degree = code.k() - 1 + code.t()[size_t(j)];
            CHECK(g[size_t(hook)].coeff(degree) == code.eta()[size_t(j)]);
        }
    }
}

TEST_CASE("canonical generator") {
    SUBCASE("eta = 0 gives the Vandermonde matrix") {
        auto f13 = make_field(13, 1);
        auto alpha = points(f13, {2, 5, 6, 7, 11});
        TwistedCode code(f13, alpha, 3, {}, {}, {});
        CHECK(code.generator_canonical() == Matrix::vandermonde(alpha, 3));
    }
    SUBCASE("frozen GF(5) twisted example") {
        auto f5 = make_field(5, 1);
        TwistedCode code(f5, points(f5, {1, 2, 3, 4}), 2, {1}, {0}, {element(f5, 1)});
        Matrix g = code.generator_canonical();
        // rows evaluate {1 + X^2, X}
        uint32_t row0[] = {2, 0, 0, 2}, row1[] = {1, 2, 3, 4};
        for (int j = 0; j < 4; ++j) {
            CHECK(g.at(0, j) == row0[j]);
            CHECK(g.at(1, j) == row1[j]);
        }
        CHECK(rank(g) == 2);
    }
    SUBCASE("rank k on random codes") {
        auto f17 = make_field(17, 1);
        for (uint64_t s = 0; s < 200; ++s) {
            SplitMix64 rng(derive_seed(99, s));
            int k = 2 + int(rng.below(8));
            int ell = int(rng.below(3));
            TwistedCode code = sample_random_code(f17, 12, k, ell, rng.next());
            CHECK(rank(code.generator_canonical()) == k);
        }
    }
}

TEST_CASE("encode") {
    auto f13 = make_field(13, 1);
    auto alpha = points(f13, {1, 2, 3, 4, 5, 6, 7, 9});
    TwistedCode code(f13, alpha, 4, {1, 2}, {0, 2}, {element(f13, 5), element(f13, 11)});
    Matrix g = code.generator_canonical();

    std::vector<FieldElement> zero(4, element(f13, 0));
    for (const auto& c : code.encode(zero)) CHECK(c.is_zero());

    for (int i = 0; i < 4; ++i) {
        std::vector<FieldElement> e(4, element(f13, 0));
        e[size_t(i)] = element(f13, 1);
        CHECK(code.encode(e) == g.row(i));
    }

    SplitMix64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto msg = random_message(code, rng);
        CHECK(code.encode(msg) == vec_mat(msg, g)); // matrix oracle

        // linearity
        auto msg2 = random_message(code, rng);
        FieldElement a(f13.get(), uint32_t(rng.below(13))), b(f13.get(), uint32_t(rng.below(13)));
        std::vector<FieldElement> combo;
        for (int i = 0; i < 4; ++i) combo.push_back(a * msg[size_t(i)] + b * msg2[size_t(i)]);
        auto c1 = code.encode(msg), c2 = code.encode(msg2), cc = code.encode(combo);
        for (int j = 0; j < code.length(); ++j)
            CHECK(cc[size_t(j)] == a * c1[size_t(j)] + b * c2[size_t(j)]);
    }

    std::vector<FieldElement> short_msg(3, element(f13, 0));
    CHECK_THROWS_AS(code.encode(short_msg), Error);
}

TEST_CASE("eta = 0 collapses to the RS code") {
    auto f9 = make_field(3, 2);
    std::vector<FieldElement> alpha;
    for (uint32_t v = 0; v < 9; ++v) alpha.push_back(element(f9, v));
    TwistedCode code(f9, alpha, 3, {1}, {0}, {element(f9, 0)});

    std::set<std::vector<uint32_t>> codewords, rs_words;
    std::vector<FieldElement> msg(3, element(f9, 0));
    for (uint32_t a = 0; a < 9; ++a)
        for (uint32_t b = 0; b < 9; ++b)
            for (uint32_t c = 0; c < 9; ++c) {
                msg[0] = element(f9, a);
                msg[1] = element(f9, b);
                msg[2] = element(f9, c);
                std::vector<uint32_t> w;
                for (const auto& x : code.encode(msg)) w.push_back(x.value());
                codewords.insert(w);
                Poly p(f9, {a, b, c});
                std::vector<uint32_t> rs;
                for (const auto& x : eval_many(p, alpha)) rs.push_back(x.value());
                rs_words.insert(rs);
            }
    CHECK(codewords == rs_words);
}

TEST_CASE("evaluation at infinity") {
    auto f16 = make_field(2, 4);
    std::vector<FieldElement> alpha;
    for (uint32_t v = 0; v < 8; ++v) alpha.push_back(element(f16, v));
    int k = 3;
    TwistedCode code(f16, alpha, k, {1}, {k - 1}, {element(f16, 9)}, true);
    CHECK(code.length() == 9);

    SplitMix64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        auto msg = random_message(code, rng);
        Poly f = code.message_poly(msg);
        auto cw = code.encode(msg);
        // extended coordinate vanishes exactly when deg f < k-1
        CHECK(cw.back().is_zero() == (f.deg() < k - 1));
        CHECK(cw == vec_mat(msg, code.generator_canonical()));
    }
}

TEST_CASE("random code sampler") {
    auto f23 = make_field(23, 1);
    TwistedCode a = sample_random_code(f23, 22, 7, 1, 12345);
    TwistedCode b = sample_random_code(f23, 22, 7, 1, 12345);
    CHECK(a.alpha() == b.alpha());
    CHECK(a.t() == b.t());
    CHECK(a.h() == b.h());
    CHECK(a.eta() == b.eta());

    for (uint64_t s = 0; s < 10000; ++s) {
        TwistedCode code = sample_random_code(f23, 22, 7, 1, derive_seed(7, s));
        std::set<uint32_t> seen;
        for (const auto& x : code.alpha()) {
            CHECK(!x.is_zero());
            seen.insert(x.value());
        }
        CHECK(seen.size() == 22);
        CHECK(!code.eta()[0].is_zero());
    }

    for (uint64_t s = 0; s < 500; ++s) {
        TwistedCode code = sample_random_code(f23, 12, 5, 2, derive_seed(8, s));
        std::set<std::pair<int, int>> pairs;
        for (int j = 0; j < 2; ++j) pairs.insert({code.h()[size_t(j)], code.t()[size_t(j)]});
        CHECK(pairs.size() == 2);
    }

    CHECK_THROWS_AS(sample_random_code(f23, 23, 7, 1, 1), Error); // n > q-1
    CHECK_THROWS_AS(sample_random_code(f23, 3, 2, 3, 1), Error);  // too few (h,t) pairs
}

TEST_CASE("systematic form") {
    auto f5 = make_field(5, 1);
    TwistedCode rs(f5, points(f5, {1, 2}), 1, {}, {}, {});
    Matrix a = rs.systematic_form();
    CHECK(a.rows() == 1);
    CHECK(a.cols() == 1);
    CHECK(a.at(0, 0) == 1); // row (1, 1) normalized

    auto f13 = make_field(13, 1);
    int found = 0;
    for (uint64_t s = 0; found < 20 && s < 200; ++s) {
        TwistedCode code = sample_random_code(f13, 9, 4, 1, derive_seed(13, s));
        Matrix g = code.generator_canonical();
        Matrix left = g.block(0, 0, 4, 4);
        if (determinant(left).is_zero()) {
            CHECK_THROWS_AS(code.systematic_form(), Error);
            continue;
        }
        ++found;
        Matrix sys = hstack(Matrix::identity(f13.get(), 4), code.systematic_form());
        CHECK(row_space_equal(sys, g));
    }
    CHECK(found >= 10);
}

TEST_CASE("params JSON round-trip") {
    auto f16 = make_field(2, 4);
    std::vector<FieldElement> alpha;
    for (uint32_t v = 1; v < 9; ++v) alpha.push_back(element(f16, v));
    TwistedCode code(f16, alpha, 3, {1, 2}, {0, 1}, {element(f16, 7), element(f16, 9)});
    TwistedCode back = code_from_json(code_to_json(code));
    CHECK(back.alpha() == code.alpha());
    CHECK(back.t() == code.t());
    CHECK(back.h() == code.h());
    CHECK(back.eta() == code.eta());
    CHECK(back.k() == code.k());
    CHECK(back.at_infinity() == code.at_infinity());
}

TEST_SUITE_END();
