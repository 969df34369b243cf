#pragma once

#include <gmpxx.h>

#include <bit>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "schemeforge/ord.hpp"

namespace schemeforge {

// Partition of the level indices omega into blocks.
struct PartitionSpec {
    enum class Kind { Trivial, Mod, PrefixSplit };
    Kind kind = Kind::Trivial;
    std::uint32_t modulus = 1;    // Mod: block = level % modulus
    std::uint64_t prefix_end = 0; // PrefixSplit: block 0 = [0, prefix_end) (finite), block 1 = rest

    static PartitionSpec trivial() { return {}; }
    static PartitionSpec mod(std::uint32_t m) {
        PartitionSpec p;
        p.kind = Kind::Mod;
        p.modulus = m;
        return p;
    }
    static PartitionSpec prefix_split(std::uint64_t end) {
        PartitionSpec p;
        p.kind = Kind::PrefixSplit;
        p.prefix_end = end;
        return p;
    }

    std::uint32_t block_count() const {
        switch (kind) {
            case Kind::Trivial: return 1;
            case Kind::Mod: return modulus;
            case Kind::PrefixSplit: return 2;
        }
        return 1;
    }
    std::uint64_t classify(std::uint64_t level) const {
        switch (kind) {
            case Kind::Trivial: return 0;
            case Kind::Mod: return level % modulus;
            case Kind::PrefixSplit: return level < prefix_end ? 0 : 1;
        }
        return 0;
    }
    bool has_finite_block() const { return kind == Kind::PrefixSplit; }
    std::string block_name(std::uint64_t b) const {
        if (kind == Kind::Trivial) return "all";
        if (kind == Kind::Mod && modulus == 2) return b == 0 ? "even" : "odd";
        return "block" + std::to_string(b);
    }
    friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

// The fair root-size schedule.  Values are emitted in rounds t = 1, 2, ...;
// round t emits 0 followed by i+1 for every set bit i of t, in increasing
// order.  Every value recurs in infinitely many rounds.  At the point of use a
// value that is not a legal root size for the level is skipped (it recurs later).
struct FairStream {
    std::uint64_t round = 1;
    std::uint32_t pos = 0;  // 0 = leading zero, then the bits of `round`

    std::uint64_t next() {
        std::uint64_t v;
        if (pos == 0) {
            v = 0;
        } else {
            std::uint64_t t = round;
            std::uint32_t seen = 0, bit = 0;
            for (;; ++bit) {
                if (t & (1ull << bit)) {
                    ++seen;
                    if (seen == pos) break;
                }
            }
            v = bit + 1;
        }
        ++pos;
        if (pos == 1u + std::uint32_t(std::popcount(round))) {
            ++round;
            pos = 0;
        }
        return v;
    }
};

// Rule producing the (n_k, r_k) tail of a type beyond its explicit prefix.
struct TailRule {
    enum class Kind {
        None,            // raw prefix, no tail
        FairR,           // r from the fair schedule (per block of `fairness`), n constant
        ConstNR,         // constant n and r
        GrowthPow,       // n_k = 2^{m_{k-1}} + 1, r fair (trivial partition)
        GrowthPowMinusR, // r fair, then n_k = 2^{m_{k-1} - r_k} + 1
    };
    Kind kind = Kind::None;
    mpz_class const_n = 2;
    mpz_class const_r = 0;
    PartitionSpec fairness;  // for FairR

    static TailRule none() { return {}; }
    static TailRule fair(mpz_class n, PartitionSpec part = PartitionSpec::trivial()) {
        TailRule t;
        t.kind = Kind::FairR;
        t.const_n = std::move(n);
        t.fairness = part;
        return t;
    }
    static TailRule constant(mpz_class n, mpz_class r) {
        TailRule t;
        t.kind = Kind::ConstNR;
        t.const_n = std::move(n);
        t.const_r = std::move(r);
        return t;
    }
    static TailRule growth_pow() {
        TailRule t;
        t.kind = Kind::GrowthPow;
        return t;
    }
    static TailRule growth_pow_minus_r() {
        TailRule t;
        t.kind = Kind::GrowthPowMinusR;
        return t;
    }
    bool total() const { return kind != Kind::None; }
    bool fair_r() const {
        return kind == Kind::FairR || kind == Kind::GrowthPow || kind == Kind::GrowthPowMinusR;
    }
};

// A type: the sequence <m_k, n_{k+1}, r_{k+1}> with m_0 = 1, every n >= 2,
// every r_{k+1} < m_k and m_{k+1} = r_{k+1} + (m_k - r_{k+1}) * n_{k+1}.
// Values are exact, unbounded integers, extended lazily along the tail rule.
class TypeSpec {
public:
    struct LevelRule {
        mpz_class n, r;  // for some level k >= 1
    };

    TypeSpec() : TypeSpec(make({}, TailRule::fair(2))) {}

    static TypeSpec make(std::vector<LevelRule> prefix, TailRule tail, std::string name = "") {
        if (prefix.empty() && !tail.total())
            raise(Errc::InvalidType, "empty prefix with no total tail rule");
        auto st = std::make_shared<State>();
        st->tail = tail;
        st->prefix_levels = Level(prefix.size());
        st->name = std::move(name);
        st->m.push_back(1);
        for (std::size_t i = 0; i < prefix.size(); ++i)
            append_level(*st, prefix[i].n, prefix[i].r);
        return TypeSpec(std::move(st));
    }

    static mpz_class next_m(const mpz_class& m, const mpz_class& n, const mpz_class& r) {
        check_level_values(m, n, r);
        return r + (m - r) * n;
    }

    const std::string& name() const { return state_->name; }
    Level prefix_levels() const { return state_->prefix_levels; }
    const TailRule& tail() const { return state_->tail; }

    // Values are returned by copy: the backing cache grows lazily, so
    // references into it would not survive later queries.
    mpz_class m(Level k) const {
        if (k < 0) raise(Errc::DomainExceeded, "negative level");
        ensure(k);
        std::lock_guard<std::mutex> lock(state_->mu);
        return state_->m[std::size_t(k)];
    }
    mpz_class n(Level k) const {
        if (k < 1) raise(Errc::DomainExceeded, "n is defined from level 1");
        ensure(k);
        std::lock_guard<std::mutex> lock(state_->mu);
        return state_->n[std::size_t(k - 1)];
    }
    mpz_class r(Level k) const {
        if (k < 1) raise(Errc::DomainExceeded, "r is defined from level 1");
        ensure(k);
        std::lock_guard<std::mutex> lock(state_->mu);
        return state_->r[std::size_t(k - 1)];
    }

    bool level_fits(Level k) const { return m(k).fits_ulong_p() || m(k) <= mpz_class("18446744073709551615"); }
    std::uint64_t m_u64(Level k) const { return to_u64(m(k), "m"); }
    std::uint64_t n_u64(Level k) const { return to_u64(n(k), "n"); }
    std::uint64_t r_u64(Level k) const { return to_u64(r(k), "r"); }

    // Least level k with m_k > v, if it is reachable within `cap` levels.
    std::optional<Level> level_above(std::uint64_t v, Level cap = 512) const {
        mpz_class target(std::to_string(v));
        for (Level k = 0; k <= cap; ++k) {
            if (!tail().total() && k > prefix_levels()) return std::nullopt;
            if (m(k) > target) return k;
        }
        return std::nullopt;
    }

    bool is_two_type(Level upto) const {
        for (Level k = 1; k <= upto; ++k)
            if (n(k) != 2) return false;
        return true;
    }

    friend bool operator==(const TypeSpec& a, const TypeSpec& b) { return a.state_ == b.state_; }

private:
    struct State {
        std::vector<mpz_class> m;         // m[k]
        std::vector<mpz_class> n, r;      // n[k-1], r[k-1] for level k
        TailRule tail;
        Level prefix_levels = 0;
        std::string name;
        std::vector<FairStream> streams;  // one fair stream per partition block
        mutable std::mutex mu;
    };

    static void check_level_values(const mpz_class& m_prev, const mpz_class& n, const mpz_class& r) {
        if (n < 2) raise(Errc::InvalidType, "fan-out n must be at least 2, got " + n.get_str());
        if (r < 0) raise(Errc::InvalidType, "root size r must be non-negative");
        if (r >= m_prev)
            raise(Errc::InvalidType,
                  "root size r=" + r.get_str() + " must be below m=" + m_prev.get_str());
    }

    static void append_level(State& st, const mpz_class& n, const mpz_class& r) {
        const mpz_class& m_prev = st.m.back();
        check_level_values(m_prev, n, r);
        st.n.push_back(n);
        st.r.push_back(r);
        st.m.push_back(r + (m_prev - r) * n);
    }

    static std::uint64_t to_u64(const mpz_class& v, const char* what) {
        if (v < 0 || v > mpz_class("18446744073709551615"))
            raise(Errc::DomainExceeded, std::string(what) + " does not fit in 64 bits");
        std::uint64_t out = 0;
        mpz_class rest = v;
        for (int sh = 0; sh < 64 && rest != 0; sh += 32) {
            out |= std::uint64_t(mpz_class(rest % 4294967296).get_ui()) << sh;
            rest /= 4294967296;
        }
        return out;
    }

    explicit TypeSpec(std::shared_ptr<State> st) : state_(std::move(st)) {}

    void ensure(Level k) const {
        State& st = *state_;
        std::lock_guard<std::mutex> lock(st.mu);
        while (Level(st.m.size()) <= k) {
            Level level = Level(st.m.size());  // the level being created
            const TailRule& t = st.tail;
            if (!t.total())
                raise(Errc::DomainExceeded,
                      "level " + std::to_string(level) + " beyond the finite prefix");
            const mpz_class& m_prev = st.m.back();
            mpz_class n, r;
            switch (t.kind) {
                case TailRule::Kind::None: break;  // unreachable
                case TailRule::Kind::ConstNR:
                    n = t.const_n;
                    r = t.const_r;
                    break;
                case TailRule::Kind::FairR: {
                    n = t.const_n;
                    r = next_fair_r(st, t.fairness, std::uint64_t(level), m_prev);
                    break;
                }
                case TailRule::Kind::GrowthPow: {
                    r = next_fair_r(st, PartitionSpec::trivial(), std::uint64_t(level), m_prev);
                    n = pow2_plus_one(m_prev);
                    break;
                }
                case TailRule::Kind::GrowthPowMinusR: {
                    r = next_fair_r(st, PartitionSpec::trivial(), std::uint64_t(level), m_prev);
                    n = pow2_plus_one(m_prev - r);
                    break;
                }
            }
            append_level(st, n, r);
        }
    }

    static mpz_class next_fair_r(State& st, const PartitionSpec& part, std::uint64_t level,
                                 const mpz_class& m_prev) {
        std::uint64_t b = part.classify(level);
        if (st.streams.size() <= b) st.streams.resize(std::size_t(b) + 1);
        FairStream& fs = st.streams[std::size_t(b)];
        for (;;) {
            std::uint64_t v = fs.next();
            mpz_class r(std::to_string(v));
            if (r < m_prev) return r;  // skip illegal root sizes at the point of use
        }
    }

    static mpz_class pow2_plus_one(const mpz_class& e) {
        // operational cap: beyond ~4 MB of bits the exact value is not worth
        // materializing; the level stays queryable up to here
        if (!e.fits_ulong_p() || e > (1 << 25))
            raise(Errc::DomainExceeded, "fan-out exponent too large to materialize");
        mpz_class out;
        mpz_ui_pow_ui(out.get_mpz_t(), 2, e.get_ui());
        return out + 1;
    }

    std::shared_ptr<State> state_;
};

// ---- goodness / partition compatibility -----------------------------------

enum class Verdict3 { Yes, No, Undetermined };

struct GoodnessReport {
    Verdict3 verdict = Verdict3::Undetermined;
    std::string detail;
    std::optional<std::uint64_t> witness_r;   // a root size that never recurs (No)
    std::vector<std::uint64_t> seen_r;        // evidence for Undetermined
    bool good() const { return verdict == Verdict3::Yes; }
};

// Decides whether every root size recurs infinitely often.  Rule-based tails
// are decided from the rule; raw prefixes are reported Undetermined with the
// evidence seen, never guessed.
inline GoodnessReport is_good(const TypeSpec& t, Level evidence_depth = 16) {
    GoodnessReport rep;
    const TailRule& tail = t.tail();
    if (tail.fair_r()) {
        rep.verdict = Verdict3::Yes;
        rep.detail = "fair schedule emits every root size in infinitely many rounds";
        return rep;
    }
    if (tail.kind == TailRule::Kind::ConstNR) {
        rep.verdict = Verdict3::No;
        std::uint64_t c = tail.const_r.fits_ulong_p() ? tail.const_r.get_ui() : 0;
        rep.witness_r = (c == 0) ? 1 : 0;
        rep.detail = "constant tail: root size " + std::to_string(*rep.witness_r) +
                     " occurs at most finitely often";
        return rep;
    }
    rep.verdict = Verdict3::Undetermined;
    Level depth = std::min(evidence_depth, t.prefix_levels());
    for (Level k = 1; k <= depth; ++k)
        rep.seen_r.push_back(t.level_fits(k) ? t.r_u64(k) : 0);
    rep.detail = "finite prefix only; recurrence quantifies beyond it";
    return rep;
}

struct CompatibilityReport {
    Verdict3 verdict = Verdict3::Undetermined;
    std::string detail;
    std::optional<std::uint64_t> witness_block;
    std::optional<std::uint64_t> witness_r;
    bool compatible() const { return verdict == Verdict3::Yes; }
};

// Same decidability contract as is_good, per block of the partition.
inline CompatibilityReport partition_compatible(const TypeSpec& t, const PartitionSpec& p,
                                                Level evidence_depth = 16) {
    CompatibilityReport rep;
    if (p.has_finite_block()) {
        rep.verdict = Verdict3::No;
        rep.witness_block = 0;
        rep.detail = "block '" + p.block_name(0) + "' is finite and cannot host recurrences";
        return rep;
    }
    const TailRule& tail = t.tail();
    if (tail.kind == TailRule::Kind::ConstNR) {
        rep.verdict = Verdict3::No;
        rep.witness_block = 0;
        std::uint64_t c = tail.const_r.fits_ulong_p() ? tail.const_r.get_ui() : 0;
        rep.witness_r = (c == 0) ? 1 : 0;
        rep.detail = "constant tail: root size " + std::to_string(*rep.witness_r) +
                     " never occurs in any block";
        return rep;
    }
    if (tail.fair_r()) {
        PartitionSpec fairness =
            tail.kind == TailRule::Kind::FairR ? tail.fairness : PartitionSpec::trivial();
        if (p == fairness || p.kind == PartitionSpec::Kind::Trivial) {
            rep.verdict = Verdict3::Yes;
            rep.detail = p.kind == PartitionSpec::Kind::Trivial
                             ? "trivial partition: goodness suffices"
                             : "schedule enumerates (block, root size) pairs fairly";
            return rep;
        }
        rep.verdict = Verdict3::Undetermined;
        rep.detail = "schedule is fair for a different partition; not decided";
        return rep;
    }
    rep.verdict = Verdict3::Undetermined;
    (void)evidence_depth;
    rep.detail = "finite prefix only";
    return rep;
}

// ---- reference presets ------------------------------------------------------

inline TypeSpec preset_tau2() {
    return TypeSpec::make({}, TailRule::fair(2), "tau2");
}
inline TypeSpec preset_tau4() {
    return TypeSpec::make({{4, 0}, {4, 1}}, TailRule::constant(2, 1), "tau4");
}
inline TypeSpec preset_tauE() {
    return TypeSpec::make({{3, 0}, {9, 0}}, TailRule::growth_pow(), "tauE");
}
inline TypeSpec preset_tauS() {
    return TypeSpec::make({{3, 0}, {9, 0}}, TailRule::growth_pow_minus_r(), "tauS");
}

inline std::optional<TypeSpec> preset_by_name(const std::string& name) {
    if (name == "tau2") return preset_tau2();
    if (name == "tau4") return preset_tau4();
    if (name == "tauE") return preset_tauE();
    if (name == "tauS") return preset_tauS();
    return std::nullopt;
}

inline std::vector<std::string> preset_names() { return {"tau2", "tau4", "tauE", "tauS"}; }

}  // namespace schemeforge
