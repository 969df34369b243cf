#include <catch2/catch_amalgamated.hpp>

#include "schemeforge/harness.hpp"

using namespace schemeforge;

namespace {
Ord O(std::uint64_t v) { return Ord::fin(v); }
}

TEST_CASE("fragment export and import answer identically") {
    Scheme h = omega_scheme(preset_tau2());
    json j = fragment_export(h, O(10), 4);
    CHECK(j.dump() == fragment_export(h, O(10), 4).dump());  // byte-stable

    FragmentView v = FragmentView::from_json(json::parse(j.dump()));
    CHECK(v.bound() == O(10));
    for (Level k = 0; k <= 4; ++k) {
        auto live = h.level_sets(k, O(10));
        CHECK(v.level_sets(k) == live);
        for (auto& F : live) {
            CHECK(v.is_member(F));
            for (Ord a : F) CHECK(v.closure(a, k) == h.closure(a, k));
        }
    }
    for (std::uint64_t a = 0; a < 6; ++a)
        for (std::uint64_t b = a + 1; b < 6; ++b) {
            CHECK(v.rho(O(a), O(b)) == rho(h, O(a), O(b)));
            CHECK(v.delta(O(a), O(b)) == delta(h, O(a), O(b)));
        }
    CHECK_FALSE(v.is_member(FinOrdSet{O(1), O(2)}));
}

TEST_CASE("type serialization round trips") {
    for (auto& name : preset_names()) {
        TypeSpec t = *preset_by_name(name);
        json j = type_to_json(t);
        TypeSpec back = type_from_json(j);
        for (Level k = 0; k <= 2; ++k) CHECK(back.m(k) == t.m(k));
    }
    TypeSpec custom = TypeSpec::make({{4, 0}}, TailRule::constant(2, 1));
    TypeSpec back = type_from_json(type_to_json(custom));
    for (Level k = 0; k <= 6; ++k) CHECK(back.m(k) == custom.m(k));
}

TEST_CASE("ordinal serialization covers both blocks") {
    CHECK(ord_from_json(ord_to_json(O(7))) == O(7));
    Ord w5{1, 5};
    CHECK(ord_from_json(ord_to_json(w5)) == w5);
    CHECK(ord_to_json(O(7)).is_number());
    CHECK(ord_to_json(w5).is_array());
}

TEST_CASE("csv tables carry the advertised columns") {
    Scheme h = omega_scheme(preset_tau2());
    std::string pairs = metric_pairs_csv(h, 4);
    CHECK(pairs.rfind("alpha,beta,rho,delta\n", 0) == 0);
    CHECK(pairs.find("\n1,2,2,2\n") != std::string::npos);

    std::string prof = metric_profile_csv(h, 3, 2);
    CHECK(prof.rfind("alpha,k,card,xi\n", 0) == 0);

    std::string colors = coloring_csv(h, 5);
    CHECK(colors.rfind("alpha,beta,o,o_star,c\n", 0) == 0);
}

TEST_CASE("the empty suite reports nothing") {
    CHECK(run_suite({}, "tau2").empty());
}

TEST_CASE("unknown checks are rejected") {
    CHECK_THROWS_AS(run_suite({"no-such-check"}, "tau2"), SchemeError);
}

TEST_CASE("reports carry their parameters and seed") {
    auto reports = run_suite({"type-recurrence"}, "tau2", 10, 10000, 42);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].pass);
    CHECK(reports[0].params.find("seed=42") != std::string::npos);
}

TEST_CASE("a planted wrong closure is caught with a counterexample") {
    CheckContext ctx = CheckContext::make("tau2");
    auto clean = run_checks({"closure-coherence"}, ctx);
    REQUIRE(clean.size() == 1);
    CHECK(clean[0].pass);

    // swap one closure answer: the oracle now reports {1,2} instead of {0,2}
    ctx.scheme.inject_fault(O(2), 1, FinOrdSet{O(1), O(2)});
    auto faulty = run_checks({"closure-coherence"}, ctx);
    REQUIRE(faulty.size() == 1);
    CHECK_FALSE(faulty[0].pass);
    CHECK(faulty[0].failures > 0);
    CHECK_FALSE(faulty[0].counterexamples.empty());
}

TEST_CASE("suite reports merge deterministically by name") {
    auto reports = run_suite({"xi-laws", "delta-card", "closure-coherence"}, "tau2");
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].name == "closure-coherence");
    CHECK(reports[1].name == "delta-card");
    CHECK(reports[2].name == "xi-laws");
    for (auto& r : reports) CHECK(r.pass);
}
