#include <catch2/catch_amalgamated.hpp>

#include "schemeforge/type_system.hpp"

#include "oracle.hpp"

using namespace schemeforge;

TEST_CASE("size recurrence on explicit triples") {
    CHECK(TypeSpec::next_m(1, 2, 0) == 2);
    CHECK(TypeSpec::next_m(5, 3, 2) == 11);
    CHECK_THROWS_AS(TypeSpec::next_m(5, 3, 5), SchemeError);  // root must stay below the size
    CHECK_THROWS_AS(TypeSpec::next_m(5, 1, 0), SchemeError);  // fan-out at least 2
}

TEST_CASE("tau2 sizes and root schedule") {
    TypeSpec t = preset_tau2();
    std::uint64_t expect_m[] = {1, 2, 3, 6, 10, 20, 39, 76};
    for (Level k = 0; k <= 7; ++k) CHECK(t.m_u64(k) == expect_m[k]);
    std::uint64_t expect_r[] = {0, 1, 0, 2, 0, 1, 2};
    for (Level k = 1; k <= 7; ++k) {
        CHECK(t.r_u64(k) == expect_r[k - 1]);
        CHECK(t.n_u64(k) == 2);
    }
    // against the independent fold
    auto tab = oracle::tau2_table();
    for (Level k = 0; k <= 7; ++k) CHECK(t.m_u64(k) == tab.m[std::size_t(k)]);
}

TEST_CASE("level cardinalities of the presets") {
    TypeSpec t2 = preset_tau2();
    CHECK(t2.m_u64(3) == 6);
    CHECK(t2.m_u64(0) == 1);
    CHECK(t2.m_u64(4) == 10);

    TypeSpec t4 = preset_tau4();
    std::uint64_t expect4[] = {1, 4, 13, 25, 49};
    for (Level k = 0; k <= 4; ++k) CHECK(t4.m_u64(k) == expect4[k]);

    TypeSpec tE = preset_tauE();
    CHECK(tE.m_u64(1) == 3);
    CHECK(tE.m_u64(2) == 27);
    CHECK(tE.n(2) == 9);  // 2^{m_1} + 1

    TypeSpec tS = preset_tauS();
    CHECK(tS.m_u64(2) == 27);
    CHECK(tS.n(3) >= mpz_class(1) << 27);  // tail keeps growing past the power set
}

TEST_CASE("recurrence and monotonicity hold along the lazy tail") {
    for (const auto& name : preset_names()) {
        TypeSpec t = *preset_by_name(name);
        Level depth = (name == "tauE" || name == "tauS") ? 3 : 12;
        for (Level k = 0; k < depth; ++k) {
            CHECK(t.m(k + 1) == t.r(k + 1) + (t.m(k) - t.r(k + 1)) * t.n(k + 1));
            CHECK(t.m(k + 1) > t.m(k));
        }
    }
}

TEST_CASE("validation accepts and rejects as specified") {
    // acceptance is idempotent: revalidating the same data succeeds
    std::vector<TypeSpec::LevelRule> prefix = {{4, 0}, {4, 1}};
    TypeSpec a = TypeSpec::make(prefix, TailRule::constant(2, 1));
    TypeSpec b = TypeSpec::make(prefix, TailRule::constant(2, 1));
    CHECK(a.m_u64(4) == b.m_u64(4));

    CHECK_THROWS_AS(TypeSpec::make({{1, 0}}, TailRule::none()), SchemeError);
    CHECK_THROWS_AS(TypeSpec::make({{2, 0}, {2, 2}}, TailRule::none()), SchemeError);  // r = m
    CHECK_THROWS_AS(TypeSpec::make({}, TailRule::none()), SchemeError);
}

TEST_CASE("raw prefixes stop at their last level") {
    TypeSpec t = TypeSpec::make({{2, 0}, {2, 1}, {2, 0}, {2, 2}, {2, 0}}, TailRule::none());
    CHECK(t.m_u64(5) == 20);
    CHECK_THROWS_AS(t.m(6), SchemeError);
}

TEST_CASE("goodness decisions") {
    GoodnessReport fair = is_good(preset_tau2());
    CHECK(fair.verdict == Verdict3::Yes);

    GoodnessReport constant = is_good(TypeSpec::make({}, TailRule::constant(2, 0)));
    CHECK(constant.verdict == Verdict3::No);
    REQUIRE(constant.witness_r.has_value());
    CHECK(*constant.witness_r == 1);  // root size 1 never occurs

    GoodnessReport raw =
        is_good(TypeSpec::make({{2, 0}, {2, 1}, {2, 0}, {2, 2}, {2, 0}}, TailRule::none()));
    CHECK(raw.verdict == Verdict3::Undetermined);
    CHECK(raw.seen_r == std::vector<std::uint64_t>{0, 1, 0, 2, 0});
}

TEST_CASE("partition compatibility decisions") {
    TypeSpec blocked = TypeSpec::make({}, TailRule::fair(2, PartitionSpec::mod(2)));
    CHECK(partition_compatible(blocked, PartitionSpec::mod(2)).verdict == Verdict3::Yes);
    CHECK(partition_compatible(blocked, PartitionSpec::trivial()).verdict == Verdict3::Yes);

    CHECK(partition_compatible(preset_tau2(), PartitionSpec::prefix_split(3)).verdict ==
          Verdict3::No);  // a finite block cannot host recurrences

    TypeSpec raw = TypeSpec::make({{2, 0}}, TailRule::none());
    CHECK(partition_compatible(raw, PartitionSpec::mod(2)).verdict == Verdict3::Undetermined);

    // fair for a different partition: honestly undecided
    CHECK(partition_compatible(blocked, PartitionSpec::mod(3)).verdict == Verdict3::Undetermined);
}

TEST_CASE("blocked fair schedules stay legal") {
    TypeSpec t = TypeSpec::make({}, TailRule::fair(2, PartitionSpec::mod(2)));
    for (Level k = 1; k <= 16; ++k) CHECK(t.r(k) < t.m(k - 1));
}
