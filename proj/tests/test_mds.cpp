#include <set>

#include "doctest.h"
#include "trs/combi.hpp"
#include "trs/mds.hpp"
#include "trs/rng.hpp"

using namespace trs;

namespace {

std::vector<FieldElement> distinct_points(const FieldPtr& f, int n, bool allow_zero,
                                          SplitMix64& rng) {
    std::vector<FieldElement> pool;
    for (uint32_t v = allow_zero ? 0 : 1; v < f->q(); ++v) pool.push_back(element(f, v));
    rng.partial_shuffle(pool, size_t(n));
    return {pool.begin(), pool.begin() + n};
}

} // namespace

TEST_SUITE_BEGIN("mds");

TEST_CASE("exhaustive MDS check") {
    auto f13 = make_field(13, 1);
    SplitMix64 rng(61);

    SUBCASE("RS codes are MDS") {
        for (int trial = 0; trial < 20; ++trial) {
            auto alpha = distinct_points(f13, 7, true, rng);
            TwistedCode code(f13, alpha, 3, {}, {}, {});
            CHECK(is_mds_exhaustive(code));
        }
    }
    SUBCASE("k = 1 is MDS iff all generator entries are nonzero") {
        for (int trial = 0; trial < 40; ++trial) {
            auto alpha = distinct_points(f13, 5, true, rng);
            TwistedCode code(f13, alpha, 1, {1}, {0},
                             {element(f13, uint32_t(rng.below(13)))});
            Matrix g = code.generator_canonical();
            bool all_nonzero = true;
            for (int j = 0; j < g.cols(); ++j) all_nonzero &= g.at(0, j) != 0;
            CHECK(is_mds_exhaustive(code) == all_nonzero);
        }
    }
    SUBCASE("eta built from a violating subset product kills MDS") {
        auto alpha = multiplicative_subgroup(f13, 6);
        alpha.insert(alpha.begin(), element(f13, 0)); // subgroup plus zero, n = 7
        int k = 3;
        // pick I = three nonzero points, force eta * (-1)^k * prod = 1
        uint32_t prod = f13->mul(alpha[1].value(), f13->mul(alpha[2].value(), alpha[3].value()));
        uint32_t eta = f13->div(f13->pow(f13->neg(1), k), prod);
        TwistedCode code(f13, alpha, k, {1}, {0}, {element(f13, eta)});
        auto witness = mds_violation_exhaustive(code);
        REQUIRE(witness.has_value());
        CHECK(!is_mds_exhaustive(code));
        CHECK(!star_mds_condition(code.alpha(), k, code.eta()[0]));
    }
    SUBCASE("agrees with codeword enumeration") {
        for (int trial = 0; trial < 25; ++trial) {
            TwistedCode code = sample_random_code(f13, 7, 3, 1, derive_seed(62, trial));
            int d = min_distance_enumerate(code);
            CHECK(is_mds_exhaustive(code) == (d == code.n() - code.k() + 1));
        }
        auto f17 = make_field(17, 1);
        TwistedCode big(f17, distinct_points(f17, 12, true, rng), 6, {1}, {0}, {element(f17, 3)});
        CHECK_THROWS_AS(min_distance_enumerate(big), Error); // q^k over the guard
    }
}

TEST_CASE("sum-product free") {
    SUBCASE("single twist") {
        auto f4 = make_field(2, 2);
        auto f16 = make_field(2, 4);
        SubfieldEmbedding emb(f4, f16);
        auto img = emb.image_values();
        // element outside the subfield
        uint32_t out = 0;
        for (uint32_t v = 1; v < 16; ++v)
            if (!std::binary_search(img.begin(), img.end(), v)) { out = v; break; }
        CHECK(sum_product_free_check({element(f16, out)}, emb));
        // nonzero subfield element: a_S = eta^{-1} lands in F_{q_0}^*
        CHECK_FALSE(sum_product_free_check({element(f16, img[2])}, emb));
        // 0 is sum-product free (all sum-products are 0)
        CHECK(sum_product_free_check({element(f16, 0)}, emb));
    }
    SUBCASE("power-basis eta over GF(16)/GF(4) is free, exhaustively") {
        auto f4 = make_field(2, 2);
        auto f16 = make_field(2, 4);
        // degree 2 extension only supports ell = 1 via the proposition
        CHECK_THROWS_AS(make_power_basis(f4, f16, 2), Error);
        auto pb = make_power_basis(f4, f16, 1);
        auto eta = make_power_basis_eta(pb);
        CHECK(sum_product_free_check(eta, pb.emb));
    }
    SUBCASE("guard") {
        auto f2 = make_field(2, 1);
        auto f1024 = make_field(2, 10);
        SubfieldEmbedding emb(f2, f1024);
        std::vector<FieldElement> eta(25, element(f1024, 2));
        CHECK_THROWS_AS(sum_product_free_check(eta, emb), Error);
    }
}

TEST_CASE("chain construction") {
    SUBCASE("GF(2) in GF(4)") {
        ChainSpec cs = make_chain({make_field(2, 1), make_field(2, 2)});
        auto eta = make_chain_eta(cs);
        REQUIRE(eta.size() == 1);
        SubfieldEmbedding emb(make_field(2, 1), make_field(2, 2));
        CHECK(sum_product_free_check(eta, emb));
    }
    SUBCASE("GF(3) in GF(9) in GF(81), codes over GF(3) points") {
        std::vector<FieldPtr> chain{make_field(3, 1), make_field(3, 2), make_field(3, 4)};
        ChainSpec cs = make_chain(chain);
        auto eta = make_chain_eta(cs);
        REQUIRE(eta.size() == 2);

        auto top = chain.back();
        std::vector<FieldElement> alpha;
        for (uint32_t v = 0; v < 3; ++v)
            alpha.push_back(chain_to_top(cs, 0, element(chain[0], v)));
        for (int k = 1; k <= 2; ++k) {
            // every (t, h) shape with distinct pairs
            for (int t1 = 1; t1 <= 3 - k; ++t1)
                for (int h1 = 0; h1 < k; ++h1) {
                    TwistedCode one(top, alpha, k, {t1}, {h1}, {eta[0]});
                    CHECK(is_mds_exhaustive(one));
                    for (int t2 = 1; t2 <= 3 - k; ++t2)
                        for (int h2 = 0; h2 < k; ++h2) {
                            if (t1 == t2 && h1 == h2) continue;
                            TwistedCode two(top, alpha, k, {t1, t2}, {h1, h2}, {eta[0], eta[1]});
                            CHECK(is_mds_exhaustive(two));
                        }
                }
        }
    }
    SUBCASE("degenerate chain") {
        ChainSpec cs = make_chain({make_field(5, 1)});
        CHECK(make_chain_eta(cs).empty());
    }
    SUBCASE("improper chain rejected") {
        CHECK_THROWS_AS(make_chain({make_field(2, 2), make_field(2, 2)}), Error);
    }
}

TEST_CASE("power-basis construction") {
    SUBCASE("ell = 1 with unit scalar gives psi itself") {
        auto pb = make_power_basis(make_field(2, 1), make_field(2, 2), 1);
        auto eta = make_power_basis_eta(pb);
        REQUIRE(eta.size() == 1);
        CHECK(eta[0] == pb.psi);
    }
    SUBCASE("GF(2) in GF(8), ell = 2: eta is free; the feasible codes are MDS") {
        auto f2 = make_field(2, 1);
        auto f8 = make_field(2, 3);
        auto pb = make_power_basis(f2, f8, 2);
        auto eta = make_power_basis_eta(pb);
        REQUIRE(eta.size() == 2);
        CHECK(sum_product_free_check(eta, pb.emb));
        // points inside GF(2) admit only n = 2, k = 1, single-pair codes
        std::vector<FieldElement> alpha{element(f8, 0), element(f8, 1)};
        for (const auto& e : eta) {
            TwistedCode code(f8, alpha, 1, {1}, {0}, {e});
            CHECK(is_mds_exhaustive(code));
        }
    }
    SUBCASE("GF(4) in GF(64), ell = 2: real two-twist codes are MDS") {
        auto f4 = make_field(2, 2);
        auto f64 = make_field(2, 6);
        auto pb = make_power_basis(f4, f64, 2);
        auto eta = make_power_basis_eta(pb);
        SubfieldEmbedding emb(f4, f64);
        std::vector<FieldElement> alpha;
        for (uint32_t v = 0; v < 4; ++v) alpha.push_back(emb.map(element(f4, v)));
        for (int k = 1; k <= 3; ++k)
            for (int t1 = 1; t1 <= 4 - k; ++t1)
                for (int h1 = 0; h1 < k; ++h1)
                    for (int t2 = 1; t2 <= 4 - k; ++t2)
                        for (int h2 = 0; h2 < k; ++h2) {
                            if (t1 == t2 && h1 == h2) continue;
                            TwistedCode code(f64, alpha, k, {t1, t2}, {h1, h2}, {eta[0], eta[1]});
                            CHECK(is_mds_exhaustive(code));
                        }
    }
    SUBCASE("minimal extension degree accepted, smaller rejected") {
        CHECK_NOTHROW(make_power_basis(make_field(2, 1), make_field(2, 3), 2));  // degree 3 = ell+1
        CHECK_THROWS_AS(make_power_basis(make_field(2, 1), make_field(2, 2), 2), Error);
    }
}

TEST_CASE("star condition") {
    auto f13 = make_field(13, 1);
    SplitMix64 rng(71);

    SUBCASE("eta = 0 is always fine") {
        auto alpha = distinct_points(f13, 6, true, rng);
        CHECK(star_mds_condition(alpha, 3, element(f13, 0)));
    }
    SUBCASE("iff-equivalence with the exhaustive check, eta sweeping F_q") {
        for (int trial = 0; trial < 100; ++trial) {
            int k = 2 + int(rng.below(3));
            auto alpha = distinct_points(f13, 7, true, rng);
            uint32_t eta = uint32_t(rng.below(13));
            TwistedCode code(f13, alpha, k, {1}, {0}, {element(f13, eta)});
            CHECK(star_mds_condition(alpha, k, element(f13, eta)) == is_mds_exhaustive(code));
        }
    }
}

TEST_CASE("star-twisted construction") {
    auto f13 = make_field(13, 1);
    SUBCASE("squares of GF(13), n = 7") {
        auto g = multiplicative_subgroup(f13, 6);
        std::set<uint32_t> gs;
        for (const auto& x : g) gs.insert(x.value());
        CHECK(gs == std::set<uint32_t>{1, 3, 4, 9, 10, 12});
        for (uint32_t a : gs)
            for (uint32_t b : gs) CHECK(gs.count(f13->mul(a, b)) == 1);

        for (int k = 2; k <= 4; ++k) {
            // smallest eta with (-1)^k / eta outside the squares
            for (uint32_t e = 1; e < 13; ++e) {
                uint32_t probe = f13->div(f13->pow(f13->neg(1), k), e);
                if (gs.count(probe)) continue;
                TwistedCode code = make_star_twisted(f13, 6, k, element(f13, e));
                CHECK(code.n() == 7); // (q+1)/2 with the index-2 subgroup
                CHECK(is_mds_exhaustive(code));
                CHECK(star_mds_condition(code.alpha(), k, code.eta()[0]));
                break;
            }
        }
    }
    SUBCASE("eta with (-1)^k/eta inside the subgroup is rejected") {
        // k = 2: need 1/eta in G, i.e. eta in G
        CHECK_THROWS_AS(make_star_twisted(f13, 6, 2, element(f13, 3)), Error);
        CHECK_THROWS_AS(make_star_twisted(f13, 12, 2, element(f13, 2)), Error); // not proper
        CHECK_THROWS_AS(make_star_twisted(f13, 5, 2, element(f13, 2)), Error);  // 5 does not divide 12
    }
}

TEST_CASE("plus condition") {
    auto f16 = make_field(2, 4);
    SplitMix64 rng(73);

    SUBCASE("eta = 0 is always fine") {
        auto alpha = distinct_points(f16, 8, true, rng);
        CHECK(plus_mds_condition(alpha, 3, element(f16, 0)));
    }
    SUBCASE("iff-equivalence with the exhaustive check") {
        for (int trial = 0; trial < 100; ++trial) {
            int k = 2 + int(rng.below(3));
            auto alpha = distinct_points(f16, 7, true, rng);
            uint32_t eta = uint32_t(rng.below(16));
            TwistedCode code(f16, alpha, k, {1}, {k - 1}, {element(f16, eta)});
            CHECK(plus_mds_condition(alpha, k, element(f16, eta)) == is_mds_exhaustive(code));
        }
    }
    SUBCASE("witness really violates") {
        for (int trial = 0; trial < 200; ++trial) {
            int k = 2 + int(rng.below(3));
            auto alpha = distinct_points(f16, 7, true, rng);
            uint32_t eta = 1 + uint32_t(rng.below(15));
            auto witness = plus_mds_violation(alpha, k, element(f16, eta));
            if (!witness) continue;
            CHECK(int(witness->size()) == k);
            uint32_t sum = 0;
            for (int i : *witness) sum = f16->add(sum, alpha[size_t(i)].value());
            CHECK(f16->mul(eta, sum) == f16->neg(1));
        }
    }
}

TEST_CASE("plus-twisted construction") {
    auto f16 = make_field(2, 4);
    SUBCASE("index-2 additive subgroup of GF(16)") {
        auto v = additive_subgroup_span(f16, {element(f16, 1), element(f16, 2), element(f16, 4)});
        REQUIRE(v.size() == 8);
        // eta with 1/eta outside V
        uint32_t eta = 0;
        for (uint32_t e = 1; e < 16; ++e)
            if (f16->inv(e) >= 8) { eta = e; break; }
        REQUIRE(eta != 0);

        TwistedCode code = make_plus_twisted(f16, v, 8, 3, element(f16, eta));
        CHECK(code.n() == 8); // q/2 for characteristic 2
        CHECK(is_mds_exhaustive(code));

        TwistedCode ext = make_plus_twisted(f16, v, 8, 3, element(f16, eta), true);
        CHECK(ext.length() == 9); // q/2 + 1
        CHECK(is_mds_exhaustive(ext));

        // 1/eta inside V is rejected
        uint32_t bad = 0;
        for (uint32_t e = 1; e < 16; ++e)
            if (f16->inv(e) < 8 && f16->inv(e) != 0) { bad = e; break; }
        CHECK_THROWS_AS(make_plus_twisted(f16, v, 8, 3, element(f16, bad)), Error);
        // a non-closed set is rejected
        std::vector<FieldElement> not_group{element(f16, 0), element(f16, 1), element(f16, 3)};
        CHECK_THROWS_AS(make_plus_twisted(f16, not_group, 3, 2, element(f16, eta)), Error);
    }
    SUBCASE("GF(9) with the prime subfield as subgroup") {
        auto f9 = make_field(3, 2);
        auto v = additive_subgroup_span(f9, {element(f9, 1)});
        REQUIRE(v.size() == 3);
        uint32_t eta = 0;
        for (uint32_t e = 1; e < 9; ++e)
            if (f9->inv(e) >= 3) { eta = e; break; }
        TwistedCode code = make_plus_twisted(f9, v, 3, 1, element(f9, eta));
        CHECK(is_mds_exhaustive(code));
    }
}

TEST_CASE("k-sum generators") {
    auto f11 = make_field(11, 1);
    SUBCASE("the whole group with k = 1") {
        std::vector<FieldElement> s;
        for (uint32_t v = 1; v < 11; ++v) s.push_back(element(f11, v));
        CHECK(is_k_sum_generator(s, 1, GroupOp::Mul));
        std::vector<FieldElement> sa;
        for (uint32_t v = 0; v < 11; ++v) sa.push_back(element(f11, v));
        CHECK(is_k_sum_generator(sa, 1, GroupOp::Add));
    }
    SUBCASE("six of ten nonzero elements generate multiplicatively with k = 3") {
        // any |S| > (q-1)/2 = 5 must be a 3-sum generator; spot check one
        std::vector<FieldElement> s;
        for (uint32_t v : {1, 2, 3, 5, 7, 8}) s.push_back(element(f11, v));
        CHECK(is_k_sum_generator(s, 3, GroupOp::Mul));
        // ... and the matching (t, h) = (1, 0) twisted code cannot be MDS
        for (uint32_t eta = 1; eta <= 3; ++eta) {
            TwistedCode code(f11, s, 3, {1}, {0}, {element(f11, eta)});
            CHECK(!is_mds_exhaustive(code));
        }
    }
    SUBCASE("a coset is never a 3-sum generator") {
        // 2 * {1,3,9,5,4}: products of 3 distinct elements stay in one coset
        std::vector<FieldElement> s;
        for (uint32_t v : {2, 6, 7, 10, 8}) s.push_back(element(f11, v));
        CHECK_FALSE(is_k_sum_generator(s, 3, GroupOp::Mul));
    }
}

TEST_CASE("no MDS codes beyond the extremal length") {
    SUBCASE("odd q, multiplicative case: exhaustive at q = 13") {
        // The k-sum-generator argument needs |F_q^*| = 2r with r >= 6, so 13
        // is the smallest odd field it covers: n = 8 > (q+1)/2, k in {3, 4}.
        auto f13 = make_field(13, 1);
        SplitMix64 rng(79);
        for (int trial = 0; trial < 50; ++trial) {
            auto alpha = distinct_points(f13, 8, true, rng);
            uint32_t eta = 1 + uint32_t(rng.below(12));
            int k = 3 + int(rng.below(2));
            TwistedCode code(f13, alpha, k, {1}, {0}, {element(f13, eta)});
            CHECK(!is_mds_exhaustive(code));
        }
    }
    SUBCASE("q = 11 sits below the k-sum-generator threshold") {
        // |F_11^*| = 10 = 2r with r = 5: exactly 20 six-element subsets are
        // not 3-sum generators, and they induce exactly 20 MDS pairs among
        // all C(11,7) * 10 = 3300 (alpha, eta != 0) choices at [n,k] = [7,3].
        auto f11 = make_field(11, 1);
        long long mds = 0, total = 0;
        auto idx = first_k_subset(7);
        do {
            std::vector<FieldElement> alpha;
            for (int i : idx) alpha.push_back(element(f11, uint32_t(i)));
            for (uint32_t eta = 1; eta < 11; ++eta) {
                ++total;
                if (star_mds_condition(alpha, 3, element(f11, eta))) ++mds;
            }
        } while (next_k_subset(idx, 11));
        CHECK(total == 3300);
        CHECK(mds == 20);
    }
    SUBCASE("even q, additive case") {
        auto f16 = make_field(2, 4);
        SplitMix64 rng(83);
        for (int trial = 0; trial < 30; ++trial) {
            // 3 < k < q/2 - 3 needs n > q/2 = 8
            auto alpha = distinct_points(f16, 9, true, rng);
            uint32_t eta = 1 + uint32_t(rng.below(15));
            TwistedCode code(f16, alpha, 4, {1}, {3}, {element(f16, eta)});
            CHECK(!is_mds_exhaustive(code));
        }
    }
}

TEST_SUITE_END();
