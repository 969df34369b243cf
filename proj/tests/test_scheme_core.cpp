#include <catch2/catch_amalgamated.hpp>

#include <future>

#include "schemeforge/scheme_core.hpp"

#include "oracle.hpp"

using namespace schemeforge;

namespace {
Ord O(std::uint64_t v) { return Ord::fin(v); }
FinOrdSet iv(std::uint64_t lo, std::uint64_t hi) { return FinOrdSet::interval(lo, hi); }
}  // namespace

TEST_CASE("canonical decomposition of the reference sets") {
    TypeSpec t = preset_tau2();

    DecompRecord d6 = canonical_decomposition(iv(0, 6), t);
    CHECK(d6.level == 3);
    CHECK(d6.root.empty());
    REQUIRE(d6.pieces.size() == 2);
    CHECK(d6.pieces[0] == iv(0, 3));
    CHECK(d6.pieces[1] == iv(3, 6));

    DecompRecord d3 = canonical_decomposition(iv(0, 3), t);
    CHECK(d3.level == 2);
    CHECK(d3.root == FinOrdSet{O(0)});
    CHECK(d3.pieces[0] == FinOrdSet{O(0), O(1)});
    CHECK(d3.pieces[1] == FinOrdSet{O(0), O(2)});

    CHECK_THROWS_AS(canonical_decomposition(iv(0, 4), t), SchemeError);
    CHECK_THROWS_AS(canonical_decomposition(FinOrdSet{O(7)}, t), SchemeError);
}

TEST_CASE("the finite scheme enumerates recursively in a fixed order") {
    TypeSpec t = preset_tau2();
    auto fam = unique_finite_scheme(iv(0, 3), t);
    std::vector<FinOrdSet> expect = {iv(0, 3),         FinOrdSet{O(0), O(1)}, FinOrdSet{O(0), O(2)},
                                     FinOrdSet{O(0)},  FinOrdSet{O(1)},       FinOrdSet{O(2)}};
    CHECK(fam == expect);

    CHECK(unique_finite_scheme(FinOrdSet{O(7)}, t) == std::vector<FinOrdSet>{FinOrdSet{O(7)}});
    CHECK_THROWS_AS(unique_finite_scheme(iv(0, 4), t), SchemeError);
}

TEST_CASE("membership over omega") {
    Scheme h = omega_scheme(preset_tau2());
    CHECK(h.is_member(iv(0, 3)));
    CHECK(h.is_member(FinOrdSet{O(3), O(5)}));
    CHECK_FALSE(h.is_member(FinOrdSet{O(1), O(2)}));
    CHECK(h.is_member(FinOrdSet{O(0)}));
    CHECK_FALSE(h.is_member(FinOrdSet{O(2), O(3)}));
    CHECK(h.is_member(FinOrdSet{O(3), O(4), O(5)}));
    CHECK_FALSE(h.is_member(FinOrdSet{}));
}

TEST_CASE("level enumeration below a bound") {
    Scheme h = omega_scheme(preset_tau2());
    auto l1 = h.level_sets(1, O(6));
    std::vector<FinOrdSet> expect1 = {FinOrdSet{O(0), O(1)}, FinOrdSet{O(0), O(2)},
                                      FinOrdSet{O(3), O(4)}, FinOrdSet{O(3), O(5)}};
    CHECK(l1 == expect1);
    CHECK(h.level_sets(3, O(6)) == std::vector<FinOrdSet>{iv(0, 6)});
    CHECK(h.level_sets(5, O(6)).empty());
}

TEST_CASE("closure descent agrees with the enumerated family") {
    TypeSpec t = preset_tau2();
    Scheme h = omega_scheme(t);
    auto tab = oracle::tau2_table();
    auto fam = oracle::family_over(tab, tab.m[3]);

    // every enumerated member is a member; nothing else below m_3 is
    std::set<FinOrdSet> members;
    for (auto& F : fam) {
        std::vector<Ord> v;
        for (auto x : F) v.push_back(O(x));
        members.insert(FinOrdSet::from_sorted(std::move(v)));
    }
    std::uint64_t m3 = tab.m[3];
    for (std::uint64_t mask = 1; mask < (1ull << m3); ++mask) {
        FinOrdSet F;
        for (std::uint64_t i = 0; i < m3; ++i)
            if (mask & (1ull << i)) F.insert(O(i));
        CHECK(h.is_member(F) == (members.count(F) > 0));
    }
}

TEST_CASE("closure oracle laws on the fragment") {
    Scheme h = omega_scheme(preset_tau2());
    for (std::uint64_t a = 0; a < 10; ++a)
        for (Level k = 0; k <= 4; ++k) {
            FinOrdSet cl = h.closure(O(a), k);
            CHECK(cl.max() == O(a));
            CHECK(cl.size() <= h.type().m_u64(k));
            CHECK(cl.subset_of(h.closure(O(a), k + 1)));
            for (Ord b : cl) CHECK(h.closure(b, k) == cl.upto(b));
        }
}

TEST_CASE("every level splits into stacked pieces below m_4") {
    TypeSpec t = preset_tau2();
    Scheme h = omega_scheme(t);
    for (Level k = 1; k <= 4; ++k)
        for (const FinOrdSet& F : h.level_sets(k, O(10))) {
            DecompRecord d = canonical_decomposition(F, t);
            FinOrdSet un;
            for (std::size_t i = 0; i < d.pieces.size(); ++i) {
                CHECK(h.is_member(d.pieces[i]));
                CHECK(d.root.initial_segment_of(d.pieces[i]));
                un = un.set_union(d.pieces[i]);
                if (i + 1 < d.pieces.size()) {
                    FinOrdSet ti = d.pieces[i].set_minus(d.root);
                    FinOrdSet tj = d.pieces[i + 1].set_minus(d.root);
                    CHECK(ti.max() < tj.min());
                }
            }
            CHECK(un == F);
        }
}

TEST_CASE("same-level members intersect in initial segments") {
    Scheme h = omega_scheme(preset_tau2());
    for (Level k = 0; k <= 3; ++k) {
        auto sets = h.level_sets(k, O(10));
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                FinOrdSet I = sets[i].set_intersection(sets[j]);
                CHECK(I.initial_segment_of(sets[i]));
                CHECK(I.initial_segment_of(sets[j]));
            }
    }
}

TEST_CASE("fragment cofinality: the initial member swallows the interval") {
    Scheme h = omega_scheme(preset_tau2());
    CHECK(h.closure(O(5), 3) == iv(0, 6));
    CHECK(h.closure(O(9), 4) == iv(0, 10));
}

TEST_CASE("frozen handles serve concurrent readers") {
    Scheme h = omega_scheme(preset_tau2());
    auto worker = [h]() {
        std::uint64_t acc = 0;
        for (std::uint64_t a = 0; a < 20; ++a)
            for (Level k = 0; k <= 5; ++k) acc += h.closure(Ord::fin(a), k).size();
        return acc;
    };
    auto f1 = std::async(std::launch::async, worker);
    auto f2 = std::async(std::launch::async, worker);
    CHECK(f1.get() == f2.get());
}
