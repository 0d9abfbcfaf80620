#include "doctest.h"
#include "trs/poly.hpp"
#include "trs/rng.hpp"

using namespace trs;

namespace {

Poly random_poly(const FieldPtr& f, int deg, SplitMix64& rng) {
    std::vector<uint32_t> c(size_t(deg) + 1);
    for (auto& x : c) x = uint32_t(rng.below(f->q()));
    if (c.back() == 0) c.back() = 1;
    return Poly(f, c);
}

} // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("divrem") {
    auto f5 = make_field(5, 1);
    Poly x2m1(f5, {4, 0, 1}); // X^2 - 1
    Poly xm1(f5, {4, 1});     // X - 1
    auto [q1, r1] = poly_divrem(x2m1, xm1);
    CHECK(q1 == Poly(f5, {1, 1})); // X + 1
    CHECK(r1.is_zero());

    auto [q2, r2] = poly_divrem(Poly(f5, {0, 0, 1}), xm1);
    CHECK(q2 == Poly(f5, {1, 1}));
    CHECK(r2 == Poly::constant(f5.get(), 1));

    CHECK_THROWS_AS(poly_divrem(x2m1, Poly(f5.get())), Error);

    auto f13 = make_field(13, 1);
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = random_poly(f13, 7, rng);
        Poly b = random_poly(f13, 3, rng);
        auto [q, r] = poly_divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.deg() < b.deg());
    }
}

TEST_CASE("eval_many") {
    auto f5 = make_field(5, 1);
    Poly x2(f5, {0, 0, 1});
    std::vector<FieldElement> pts{element(f5, 0), element(f5, 1), element(f5, 2)};
    auto vals = eval_many(x2, pts);
    CHECK(vals == std::vector<FieldElement>{element(f5, 0), element(f5, 1), element(f5, 4)});

    auto zeros = eval_many(Poly(f5.get()), pts);
    for (const auto& v : zeros) CHECK(v.is_zero());

    Poly x4m1(f5, {4, 0, 0, 0, 1});
    std::vector<FieldElement> units{element(f5, 1), element(f5, 2), element(f5, 3), element(f5, 4)};
    for (const auto& v : eval_many(x4m1, units)) CHECK(v.is_zero());
}

TEST_CASE("interpolate") {
    auto f5 = make_field(5, 1);
    Poly c3 = interpolate({{element(f5, 0), element(f5, 3)}, {element(f5, 1), element(f5, 3)}});
    CHECK(c3 == Poly::constant(f5.get(), 3));

    auto f13 = make_field(13, 1);
    Poly f(f13, {0, 2, 0, 1}); // X^3 + 2X
    std::vector<FieldElement> xs{element(f13, 1), element(f13, 3), element(f13, 5),
                                 element(f13, 7), element(f13, 11)};
    CHECK(interpolate(xs, eval_many(f, xs)) == f);

    Poly x4m1 = interpolate({{element(f5, 1), element(f5, 0)},
                             {element(f5, 2), element(f5, 0)},
                             {element(f5, 3), element(f5, 0)},
                             {element(f5, 4), element(f5, 0)},
                             {element(f5, 0), element(f5, 4)}});
    CHECK(x4m1 == Poly(f5, {4, 0, 0, 0, 1}));

    CHECK_THROWS_AS(interpolate({{element(f5, 1), element(f5, 0)}, {element(f5, 1), element(f5, 2)}}),
                    Error);
}

TEST_CASE("from_roots") {
    auto f5 = make_field(5, 1);
    CHECK(from_roots(f5.get(), {}) == Poly::constant(f5.get(), 1));

    std::vector<FieldElement> units{element(f5, 1), element(f5, 2), element(f5, 3), element(f5, 4)};
    CHECK(from_roots(units) == Poly(f5, {4, 0, 0, 0, 1})); // X^4 - 1

    CHECK(from_roots({element(f5, 1), element(f5, 2)}) == Poly(f5, {2, 2, 1})); // X^2+2X+2

    SplitMix64 rng(11);
    auto f13 = make_field(13, 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<FieldElement> roots;
        std::vector<uint32_t> pool;
        for (uint32_t v = 0; v < 13; ++v) pool.push_back(v);
        SplitMix64 r2(rng.next());
        r2.partial_shuffle(pool, 4);
        for (int i = 0; i < 4; ++i) roots.push_back(element(f13, pool[size_t(i)]));
        Poly p = from_roots(roots);
        CHECK(p.is_monic());
        CHECK(p.deg() == 4);
        for (uint32_t v = 0; v < 13; ++v) {
            bool is_root = false;
            for (const auto& r : roots) is_root |= r.value() == v;
            CHECK(p.eval(element(f13, v)).is_zero() == is_root);
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    SplitMix64 rng(3);
    for (const auto& f : {make_field(5, 1), make_field(13, 1), make_field(2, 4)}) {
        for (int trial = 0; trial < 1000; ++trial) {
            Poly a = random_poly(f, int(rng.below(6)), rng);
            Poly b = random_poly(f, int(rng.below(6)), rng);
            Poly c = random_poly(f, int(rng.below(6)), rng);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            auto [q, r] = poly_divrem(a, c);
            CHECK(q * c + r == a);
        }
    }
}

TEST_CASE("interpolate inverts eval_many") {
    SplitMix64 rng(5);
    auto f13 = make_field(13, 1);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + int(rng.below(10));
        std::vector<uint32_t> pool;
        for (uint32_t v = 0; v < 13; ++v) pool.push_back(v);
        rng.partial_shuffle(pool, size_t(n));
        std::vector<FieldElement> xs;
        for (int i = 0; i < n; ++i) xs.push_back(element(f13, pool[size_t(i)]));
        Poly f = random_poly(f13, int(rng.below(uint64_t(n))), rng);
        CHECK(interpolate(xs, eval_many(f, xs)) == f);
    }
}

TEST_CASE("degree bookkeeping") {
    auto f5 = make_field(5, 1);
    Poly z(f5.get());
    CHECK(z.deg() == Poly::kNegInf);
    CHECK(Poly::kNegInf < -1000000);
    Poly a(f5, {1, 2});
    Poly b(f5, {3, 0, 4});
    CHECK((a * b).deg() == a.deg() + b.deg());
    CHECK((z * a).is_zero());
    // trailing zeros are stripped on construction
    CHECK(Poly(f5, {1, 2, 0, 0}).deg() == 1);
}

TEST_SUITE_END();
