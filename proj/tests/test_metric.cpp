#include <catch2/catch_amalgamated.hpp>

#include "schemeforge/metric.hpp"

using namespace schemeforge;

namespace {
Ord O(std::uint64_t v) { return Ord::fin(v); }
}

TEST_CASE("separation level of reference pairs") {
    Scheme h = omega_scheme(preset_tau2());
    CHECK(rho(h, O(1), O(2)) == 2);
    CHECK(rho(h, O(2), O(3)) == 3);
    CHECK(rho(h, O(5), O(5)) == 0);
    CHECK(rho(h, O(2), O(5)) == 3);
    CHECK(rho(h, O(3), O(5)) == 1);
}

TEST_CASE("alignment level of reference pairs") {
    Scheme h = omega_scheme(preset_tau2());
    CHECK(delta(h, O(1), O(5)) == 2);
    CHECK(delta(h, O(2), O(5)) == 3);
    CHECK(delta(h, O(4), O(4)) == kLevelInf);
    for (std::uint64_t a = 0; a < 10; ++a)
        for (std::uint64_t b = a + 1; b < 10; ++b)
            CHECK(delta(h, O(a), O(b)) <= rho(h, O(a), O(b)));
}

TEST_CASE("ball records carry the closure, profile and piece index") {
    Scheme h = omega_scheme(preset_tau2());

    BallRecord b51 = ball(h, O(5), 1);
    CHECK(b51.set == FinOrdSet{O(3), O(5)});
    CHECK(b51.card == 1);
    CHECK(b51.piece == 1);
    CHECK(b51(b51.card) == O(5));  // the top index points back at the centre

    BallRecord b01 = ball(h, O(0), 1);
    CHECK(b01.set == FinOrdSet{O(0)});
    CHECK(b01.card == 0);
    CHECK(b01.piece == 0);  // empty root puts the minimum into the first piece

    BallRecord b23 = ball(h, O(2), 3);
    CHECK(b23.set == FinOrdSet{O(0), O(1), O(2)});
    CHECK(b23.card == 2);
    CHECK(b23.piece == 0);

    CHECK(xi(h, O(4), 0) == 0);
}

TEST_CASE("set profiles and set-valued piece indices") {
    Scheme h = omega_scheme(preset_tau2());

    SetProfile p = set_profile(h, FinOrdSet{O(3), O(4)}, 2);
    CHECK(p.diameter == 1);
    CHECK(p.closure_k == FinOrdSet{O(3), O(4)});
    CHECK(p.closed);
    CHECK(p.maximally_closed);  // size m_1 at diameter 1
    CHECK_FALSE(set_profile(h, FinOrdSet{O(0), O(2), O(5)}, 3).closed);  // misses 1,3,4

    SetProfile q = set_profile(h, FinOrdSet{O(2), O(5)}, 4);
    CHECK(q.diameter == 3);
    REQUIRE(q.piece.has_value());
    CHECK(*q.piece == xi(h, O(5), 4));

    CHECK_THROWS_AS(xi_set(h, FinOrdSet{O(1), O(2)}, 2), SchemeError);  // at the diameter
    CHECK(xi_set(h, FinOrdSet{O(2), O(5)}, 4) == xi(h, O(5), 4));
}

TEST_CASE("piece index laws across a fragment") {
    Scheme h = omega_scheme(preset_tau2());
    for (std::uint64_t a = 0; a < 10; ++a)
        for (std::uint64_t b = a + 1; b < 10; ++b) {
            Level r = rho(h, O(a), O(b)), d = delta(h, O(a), O(b));
            for (Level k = 1; k <= 4; ++k) {
                std::int64_t xa = xi(h, O(a), k), xb = xi(h, O(b), k);
                if (k < d) CHECK(xa == xb);
                if (k == r) CHECK((0 <= xa && xa < xb));
                if (k > r) CHECK((xa == -1 || xa == xb));
                if (k == d) CHECK((xa >= 0 && xb >= 0 && xa != xb));
            }
        }
}

TEST_CASE("xi derives from the decomposition position, not the root bound") {
    // the least element beyond the root has profile r_k yet sits in piece 0
    Scheme h = omega_scheme(preset_tau2());
    // level 2 member {0,1,2}: root {0}, piece 0 = {0,1}; the profile of 1 is r_2
    CHECK(kcard(h, O(1), 2) == h.type().r_u64(2));
    CHECK(xi(h, O(1), 2) == 0);
}
