#include <catch2/catch_amalgamated.hpp>

#include "schemeforge/derived/gaps.hpp"
#include "schemeforge/derived/luzin.hpp"
#include "schemeforge/extension.hpp"

using namespace schemeforge;

namespace {
Ord O(std::uint64_t v) { return Ord::fin(v); }
FinOrdSet S(std::initializer_list<std::uint64_t> xs) {
    FinOrdSet s;
    for (auto x : xs) s.insert(O(x));
    return s;
}
}  // namespace

TEST_CASE("tower fragments of the reference ordinals") {
    Scheme h = omega_scheme(preset_tau2());

    GapFragment g5 = hausdorff_gap(h, O(5), 3);
    CHECK(g5.L == S({3, 5, 7}));
    CHECK(g5.R == S({2, 4, 6}));

    GapFragment g2 = hausdorff_gap(h, O(2), 3);
    CHECK(g2.L == S({3, 5, 6}));
    CHECK(g2.R == S({2, 4, 7}));

    for (std::uint64_t a = 0; a < 10; ++a) {
        GapFragment g = hausdorff_gap(h, O(a), 6);
        CHECK(g.L.set_intersection(g.R).empty());
    }

    CHECK_THROWS_AS(hausdorff_gap(omega_scheme(preset_tau4()), O(1), 3), SchemeError);
}

TEST_CASE("masked towers restrict to the chosen floors") {
    Scheme h = omega_scheme(preset_tau2());
    std::set<Level> mask{1, 3};
    GapFragment g = hausdorff_gap(h, O(5), 3, &mask);
    CHECK(g.L == S({3, 7}));
    CHECK(g.R == S({2, 6}));
}

TEST_CASE("pair data of the towers") {
    Scheme h = omega_scheme(preset_tau2());
    GapPairData d = gap_pair_data(h, O(2), O(5), 3);
    CHECK(d.rho_level == 3);
    CHECK(d.exact);
    CHECK(d.la_rb == S({6}));
    CHECK(d.lb_ra == S({7}));
    CHECK(d.lb_ra.contains(O(2 * 3 + 1)));
    CHECK(d.chi1_compatible);
    CHECK_FALSE(d.chi0_compatible);
    CHECK_THROWS_AS(gap_pair_data(h, O(2), O(2), 3), SchemeError);

    // the window flag reports inexact fragments honestly
    CHECK_FALSE(gap_pair_data(h, O(2), O(5), 2).exact);

    for (std::uint64_t a = 0; a < 10; ++a)
        for (std::uint64_t b = a + 1; b < 10; ++b) {
            GapPairData p = gap_pair_data(h, O(a), O(b), 6);
            std::uint64_t lim = 2 * std::uint64_t(p.rho_level) + 2;
            for (Ord x : p.la_minus_lb) CHECK(x.offset < lim);
            for (Ord x : p.ra_minus_rb) CHECK(x.offset < lim);
        }
}

TEST_CASE("almost disjoint floor sets") {
    Scheme h = omega_scheme(preset_tau2());

    auto a35 = luzin_level_set(h, O(5), 3);
    std::vector<LuzinTriple> expect35;
    for (std::uint64_t a = 0; a < 3; ++a)
        for (std::uint64_t b = 15; b < 18; ++b) expect35.push_back({3, a, b});
    CHECK(a35 == expect35);

    auto a32 = luzin_level_set(h, O(2), 3);
    std::vector<LuzinTriple> expect32;
    for (std::uint64_t b = 9; b < 18; ++b) expect32.push_back({3, 2, b});
    CHECK(a32 == expect32);

    // 2 sits in the level-3 closure of 5, so its next floor block joins the separator
    LuzinFragment c5 = jones_separator(h, O(5), 4);
    for (auto& p : luzin_level_set(h, O(2), 4))
        CHECK(std::binary_search(c5.points.begin(), c5.points.end(), p));
}

TEST_CASE("meet laws of the almost disjoint family") {
    Scheme h = omega_scheme(preset_tau2());
    for (std::uint64_t a = 0; a < 10; ++a)
        for (std::uint64_t b = a + 1; b < 10; ++b) {
            auto fa = luzin_family(h, O(a), 6).points;
            auto fb = luzin_family(h, O(b), 6).points;
            std::vector<LuzinTriple> meet;
            std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(),
                                  std::back_inserter(meet));
            Level r = rho(h, O(a), O(b));
            CHECK(meet.size() >= std::size_t(r));
            for (auto& p : meet) CHECK(p.k <= std::uint64_t(r));
        }
}

TEST_CASE("representations of small orders") {
    Scheme h = omega_scheme(preset_tau2());
    Level K = 5;

    // an antichain: each node keeps exactly its own blocks
    {
        FinitePoset pos = FinitePoset::antichain(2);
        std::vector<Ord> phi{O(1), O(2)};
        LuzinRep rep = luzin_representation(h, pos, phi, K);
        for (std::size_t x = 0; x < 2; ++x) {
            std::vector<LuzinTriple> direct;
            for (Level k = 1; k <= K; ++k)
                for (auto& p : luzin_level_set(h, phi[x], k)) direct.push_back(p);
            std::sort(direct.begin(), direct.end());
            CHECK(rep.T[x] == direct);
        }
        // large floors of incomparable nodes are disjoint
        Level r = rho(h, O(1), O(2));
        for (Level k = r + 1; k < K; ++k) {
            auto sx = floor_slice(rep.T[0], std::uint64_t(k + 1));
            auto sy = floor_slice(rep.T[1], std::uint64_t(k + 1));
            std::vector<LuzinTriple> meet;
            std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                                  std::back_inserter(meet));
            CHECK(meet.empty());
        }
    }

    // a chain: beyond the separation level the lower node's floors embed upward
    {
        FinitePoset pos = FinitePoset::chain(2);
        std::vector<Ord> phi{O(1), O(4)};
        LuzinRep rep = luzin_representation(h, pos, phi, K);
        Level r = rho(h, O(1), O(4));
        for (Level k = r + 1; k < K; ++k) {
            auto lo = floor_slice(rep.T[0], std::uint64_t(k + 1));
            auto hi = floor_slice(rep.T[1], std::uint64_t(k + 1));
            for (auto& p : lo) CHECK(std::binary_search(hi.begin(), hi.end(), p));
        }
    }

    // a non-increasing image list is rejected
    FinitePoset pos = FinitePoset::chain(2);
    std::vector<Ord> bad{O(4), O(1)};
    CHECK_THROWS_AS(luzin_representation(h, pos, bad, K), SchemeError);
}

TEST_CASE("coherent family values over the tower") {
    Extension ext(omega_scheme(preset_tau2()), 2000);
    Scheme e = ext.scheme();
    Ord w{1, 0};

    REQUIRE(xi(e, w, 2) == 0);
    auto v = coherent_family_eval(e, w, {2, 1, 0, 0});
    REQUIRE(v.has_value());
    CHECK(*v == e.closure(w, 2)(0));
    CHECK(*v == O(0));

    // points outside the tower
    CHECK_FALSE(coherent_family_eval(e, w, {2, 2, 0, 0}).has_value());  // s = k
    for (Level k = 1; k <= 6; ++k)
        if (xi(e, w, k) == -1) CHECK_FALSE(coherent_family_eval(e, w, {k, 0, 0, 0}).has_value());

    CHECK_THROWS_AS(coherent_family_eval(e, O(3), {2, 1, 0, 0}), SchemeError);

    // coherence past the separation level
    for (std::uint64_t i = 0; i < 6; ++i)
        for (std::uint64_t j = i + 1; j < 6; ++j) {
            Ord a{1, i}, b{1, j};
            Level r = rho(e, a, b);
            for (Level k = r + 1; k <= r + 2; ++k) {
                std::uint64_t rk = e.type().r_u64(k);
                if (rk == 0) continue;
                auto va = coherent_family_eval(e, a, {k, 0, 0, 0});
                auto vb = coherent_family_eval(e, b, {k, 0, 0, 0});
                if (va && vb) CHECK(*va == *vb);
            }
        }
}
