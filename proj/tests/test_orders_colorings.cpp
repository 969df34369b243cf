#include <catch2/catch_amalgamated.hpp>

#include "schemeforge/capture.hpp"
#include "schemeforge/derived/colorings.hpp"
#include "schemeforge/derived/orders.hpp"
#include "schemeforge/derived/sspace.hpp"

using namespace schemeforge;

namespace {
Ord O(std::uint64_t v) { return Ord::fin(v); }
}

TEST_CASE("recursive order on the reference pairs") {
    CountrymanOrder co(omega_scheme(preset_tau2()));

    CountrymanTrace tr;
    CHECK(co.cmp(O(4), O(5), &tr) == CmpResult::Less);
    REQUIRE(tr.steps.size() == 1);
    CHECK(tr.steps[0].boundary_case);  // decided by piece indices directly

    CHECK(co.cmp(O(2), O(4), &tr) == CmpResult::Less);
    REQUIRE(tr.steps.size() == 2);
    CHECK_FALSE(tr.steps[1].boundary_case);           // recursed
    CHECK((tr.steps[0].a == O(0) && tr.steps[0].b == O(3)));  // to the separating points

    CHECK(co.cmp(O(4), O(4)) == CmpResult::Equal);
    CHECK(co.cmp(O(5), O(4)) == CmpResult::Greater);
}

TEST_CASE("recursive order is total and transitive on the small fragment") {
    CountrymanOrder co(omega_scheme(preset_tau2()));
    for (std::uint64_t a = 0; a < 6; ++a)
        for (std::uint64_t b = 0; b < 6; ++b) {
            if (a == b) continue;
            CHECK(co.less(O(a), O(b)) != co.less(O(b), O(a)));
        }
    for (std::uint64_t a = 0; a < 6; ++a)
        for (std::uint64_t b = 0; b < 6; ++b)
            for (std::uint64_t c = 0; c < 6; ++c) {
                if (a == b || b == c || a == c) continue;
                if (co.less(O(a), O(b)) && co.less(O(b), O(c))) CHECK(co.less(O(a), O(c)));
            }
}

TEST_CASE("chain-class keys travel with the comparison") {
    Scheme h = omega_scheme(preset_tau2());
    CountrymanOrder co(h);
    CountrymanTrace tr;
    co.cmp(O(2), O(4), &tr);
    CHECK(tr.rho_level == rho(h, O(2), O(4)));
    CHECK(tr.card_a == kcard(h, O(2), tr.rho_level));
    CHECK(tr.card_b == kcard(h, O(4), tr.rho_level));
}

TEST_CASE("profile nodes classify and bucket into antichains") {
    Scheme h = omega_scheme(preset_tau2());

    TreeNode plain = aronszajn_node(h, O(5), {});
    CHECK(plain.kf == 0);
    CHECK(plain.s == 0);

    TreeNode patched = aronszajn_node(h, O(5), {{O(0), 7}});
    CHECK(patched.kf == 7);
    CHECK(patched.s == 5);

    // two distinct plain nodes never extend one another
    TreeNode p3 = aronszajn_node(h, O(3), {});
    CHECK_FALSE(node_extends(h, p3, plain));
    CHECK_FALSE(node_extends(h, plain, p3));
    CHECK(node_extends(h, plain, plain));

    CHECK_THROWS_AS(aronszajn_node(h, O(3), {{O(9), 1}}), SchemeError);  // support above the domain
}

TEST_CASE("oscillation of reference pairs and the window law") {
    Scheme h = omega_scheme(preset_tau2());
    OscRecord r24 = osc(h, O(2), O(4));
    CHECK(r24.count == 1);
    CHECK(r24.points == std::vector<Level>{1});
    CHECK(osc_count(h, O(2), O(5)) == 0);
    CHECK(osc_count(h, O(4), O(4)) == 0);
    for (std::uint64_t a = 0; a < 10; ++a)
        for (std::uint64_t b = a + 1; b < 10; ++b)
            for (Level k = 0; k <= 3; ++k)
                for (Level p : osc(h, O(a), O(b), k).points) {
                    CHECK(p >= k);
                    CHECK(p < rho(h, O(a), O(b)));
                }
}

TEST_CASE("frontier partition blocks") {
    CHECK(partition_lookup(0) == 0);
    CHECK(partition_lookup(1) == 0);
    CHECK(partition_lookup(4) == 1);
    CHECK(partition_lookup(9) == 0);
    CHECK(partition_lookup(21) == 1);
    CHECK(partition_lookup(44) == 2);
    CHECK(partition_lookup(88) == 2);
    CHECK(partition_lookup(89) == 0);  // the next interval belongs to the (0,3) pair
}

TEST_CASE("pair color is the oscillation block") {
    Scheme h = omega_scheme(preset_tau2());
    CHECK(color_o(h, O(2), O(4)) == 0);
    CHECK_THROWS_AS(color_o(h, O(4), O(4)), SchemeError);
    for (std::uint64_t a = 0; a < 10; ++a)
        for (std::uint64_t b = a + 1; b < 10; ++b)
            CHECK(color_o(h, O(a), O(b)) == partition_lookup(osc_count(h, O(a), O(b))));
}

TEST_CASE("rainbow color: realized values and the default") {
    Scheme h = omega_scheme(preset_tau2());

    SigmaMap m0 = decode_sigma_map(0);
    REQUIRE(m0.domain.size() == 1);
    CHECK(m0.domain[0] == std::vector<std::uint64_t>{0, 0});
    CHECK(m0.values[0][0] == 0);

    // {0,3} is captured and both profiles start (0,0): the map value comes back
    CHECK(captured(is_captured_set(h, FinOrdSet{O(0), O(3)}, 3)));
    CHECK(color_o(h, O(0), O(3)) == 0);
    CHECK(color_o_star(h, O(0), O(3)) == 0);

    // profiles starting (0,1) match nothing: the default value
    CHECK(color_o_star(h, O(1), O(2)) == kNoExtensionColor);

    // the default appears exactly when no prefix matches
    for (std::uint64_t a = 0; a < 10; ++a)
        for (std::uint64_t b = a + 1; b < 10; ++b) {
            SigmaMap m = decode_sigma_map(color_o(h, O(a), O(b)));
            bool has = sigma_match(h, m, O(a)) && sigma_match(h, m, O(b));
            CHECK((color_o_star(h, O(a), O(b)) == kNoExtensionColor) == !has);
        }

    // a decoded domain never holds comparable prefixes
    for (std::uint64_t n = 0; n < 200; ++n) {
        SigmaMap m = decode_sigma_map(n);
        for (std::size_t i = 0; i < m.domain.size(); ++i)
            for (std::size_t j = i + 1; j < m.domain.size(); ++j) {
                auto &x = m.domain[i], &y = m.domain[j];
                std::size_t l = std::min(x.size(), y.size());
                CHECK_FALSE(std::equal(x.begin(), x.begin() + long(l), y.begin()));
            }
    }
}

TEST_CASE("packed coloring on the wide fragment") {
    Scheme h = omega_scheme(preset_tau4());

    BoundedColor c1 = bounded_color_c(h, O(1), O(10));
    CHECK(xi(h, O(10), 2) == 3);  // past piece 2: profile taken at the separation level
    CHECK(c1.beta == O(10));
    CHECK(c1.rho_level == 2);
    CHECK(c1.a == 1);

    BoundedColor c2 = bounded_color_c(h, O(1), O(7));
    CHECK(xi(h, O(7), 2) == 2);  // at piece 2: profile taken one level lower
    CHECK(c2.beta == O(7));
    CHECK(c2.rho_level == 2);
    CHECK(c2.a == 1);
    CHECK(c1.code != c2.code);

    CHECK_THROWS_AS(bounded_color_c(h, O(10), O(1)), SchemeError);

    std::map<std::uint64_t, int> counts;
    for (std::uint64_t a = 0; a < 13; ++a)
        for (std::uint64_t b = a + 1; b < 13; ++b) ++counts[bounded_color_c(h, O(a), O(b)).code];
    for (auto& [code, n] : counts) CHECK(n <= 2);
}

TEST_CASE("signed profiles on the wide-fan-out type") {
    Scheme h = omega_scheme(preset_tauE());
    CHECK(entangled_eval(h, O(2), 1) == 2);
    CHECK(entangled_eval(h, O(1), 1) == -1);
    for (std::uint64_t a = 0; a < 5; ++a) CHECK(entangled_eval(h, O(a), 0) == 0);
    CHECK_THROWS_AS(entangled_eval(omega_scheme(preset_tau2()), O(1), 1), SchemeError);

    CHECK(entangled_lex_less(h, O(1), O(0), 2));
    CHECK(entangled_lex_less(h, O(0), O(2), 2));

    // both order types against the first member of the captured triple
    REQUIRE(captured(is_captured_set(h, FinOrdSet{O(0), O(1), O(2)}, 1)));
    bool lt = false, gt = false;
    for (std::uint64_t i = 1; i < 3; ++i) {
        lt = lt || entangled_lex_less(h, O(0), O(i), 2);
        gt = gt || entangled_lex_less(h, O(i), O(0), 2);
    }
    CHECK((lt && gt));
}

TEST_CASE("tree bit function on the growth type") {
    Scheme h = omega_scheme(preset_tauS());
    PartitionSpec part = PartitionSpec::mod(2);

    CHECK(coherent_tree_eval(h, O(1), O(0), part) == 0);  // level 1 is an antichain floor
    CHECK_THROWS_AS(coherent_tree_eval(h, O(0), O(1), part), SchemeError);
    CHECK_THROWS_AS(coherent_tree_eval(omega_scheme(preset_tau2()), O(1), O(0), part), SchemeError);

    // chain floor with pieces (0, 1) answers 1; the root answers 0
    bool chain_case = false;
    for (std::uint64_t x = 0; x < 27 && !chain_case; ++x)
        for (std::uint64_t b = x + 1; b < 27 && !chain_case; ++b) {
            Level l = rho(h, O(x), O(b));
            if (l % 2 == 0 && xi(h, O(x), l) == 0 && xi(h, O(b), l) == 1) {
                CHECK(coherent_tree_eval(h, O(b), O(x), part) == 1);
                chain_case = true;
            }
        }
    CHECK(chain_case);
    for (std::uint64_t x = 0; x < 27; ++x)
        for (std::uint64_t b = x + 1; b < 27; ++b)
            if (xi(h, O(x), rho(h, O(x), O(b))) == -1)
                CHECK(coherent_tree_eval(h, O(b), O(x), part) == 0);
}

TEST_CASE("neighbourhood sets of the profile space") {
    Scheme h = omega_scheme(preset_tau2());
    SSpaceSets ss(h);

    CHECK(ss.H(O(5)) == FinOrdSet{O(2), O(3), O(4)});
    CHECK(ss.H(O(1)) == FinOrdSet{O(0)});
    CHECK(ss.C(O(1)) == FinOrdSet{O(0), O(1)});
    CHECK(ss.C(O(0)) == FinOrdSet{O(0)});

    for (std::uint64_t b = 0; b < 10; ++b)
        for (Level k = 0; k < 4; ++k) CHECK(ss.Ck(O(b), k + 1).subset_of(ss.Ck(O(b), k)));

    for (std::uint64_t b = 0; b < 10; ++b)
        for (Ord g : ss.H(O(b))) {
            Level l = delta(h, g, O(b)) + 1;
            CHECK(ss.Ck(g, l).subset_of(ss.C(O(b))));
        }
}
