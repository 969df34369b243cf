#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "schemeforge/ord.hpp"
#include "schemeforge/type_system.hpp"

namespace schemeforge {

// ---- canonical decomposition ------------------------------------------------

struct DecompRecord {
    Level level = 0;                 // k with |F| = m_k
    FinOrdSet root;                  // first r_k elements of F
    std::vector<FinOrdSet> pieces;   // piece i = root + block i, each of size m_{k-1}
};

// Level whose cardinality is |F|, or nullopt.
inline std::optional<Level> level_of_size(const TypeSpec& t, std::size_t size) {
    mpz_class target(std::to_string(size));
    for (Level k = 0;; ++k) {
        if (!t.tail().total() && k > t.prefix_levels()) return std::nullopt;
        const mpz_class& mk = t.m(k);
        if (mk == target) return k;
        if (mk > target) return std::nullopt;
    }
}

// Splits a set of size m_k (k >= 1) into its root-tail-tail pieces:
// piece i = F[r_k] + F[[a_i, a_{i+1})] with a_i = r_k + i*(m_{k-1} - r_k).
inline DecompRecord canonical_decomposition(const FinOrdSet& F, const TypeSpec& t) {
    auto k = level_of_size(t, F.size());
    if (!k || *k < 1)
        raise(Errc::NotALevelCardinality,
              "set of size " + std::to_string(F.size()) + " is not a level above 0");
    DecompRecord d;
    d.level = *k;
    std::uint64_t r = t.r_u64(*k);
    std::uint64_t w = t.m_u64(*k - 1) - r;
    std::uint64_t n = t.n_u64(*k);
    d.root = F.first(std::size_t(r));
    d.pieces.reserve(std::size_t(n));
    for (std::uint64_t i = 0; i < n; ++i)
        d.pieces.push_back(d.root.set_union(F.slice(std::size_t(r + i * w), std::size_t(r + (i + 1) * w))));
    return d;
}

// ---- interval-based piece descent over omega ---------------------------------

namespace detail {

// Sorted disjoint half-open intervals of finite ordinals; supports rank-based
// slicing, which is all the piece descent needs.
struct Ivs {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> iv;

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (auto& [a, b] : iv) c += b - a;
        return c;
    }
    std::uint64_t pos_of(std::uint64_t x) const {
        std::uint64_t before = 0;
        for (auto& [a, b] : iv) {
            if (x < a) break;
            if (x < b) return before + (x - a);
            before += b - a;
        }
        raise(Errc::NotAMember, "ordinal not in descent set");
    }
    Ivs take(std::uint64_t p1, std::uint64_t p2) const {  // by rank, [p1, p2)
        Ivs out;
        std::uint64_t before = 0;
        for (auto& [a, b] : iv) {
            std::uint64_t len = b - a;
            std::uint64_t lo = std::max(p1, before), hi = std::min(p2, before + len);
            if (lo < hi) out.push(a + (lo - before), a + (hi - before));
            before += len;
            if (before >= p2) break;
        }
        return out;
    }
    Ivs unite_disjoint(const Ivs& o) const {
        Ivs out;
        std::size_t i = 0, j = 0;
        while (i < iv.size() || j < o.iv.size()) {
            bool mine = j >= o.iv.size() || (i < iv.size() && iv[i].first <= o.iv[j].first);
            auto [a, b] = mine ? iv[i++] : o.iv[j++];
            out.push(a, b);
        }
        return out;
    }
    void push(std::uint64_t a, std::uint64_t b) {
        if (!iv.empty() && iv.back().second == a)
            iv.back().second = b;  // merge adjacent
        else
            iv.emplace_back(a, b);
    }
    FinOrdSet materialize_upto(std::uint64_t x) const {  // elements <= x
        std::vector<Ord> out;
        for (auto& [a, b] : iv) {
            for (std::uint64_t v = a; v < b && v <= x; ++v) out.push_back(Ord::fin(v));
            if (b > x) break;
        }
        return FinOrdSet::from_sorted(std::move(out));
    }
};

}  // namespace detail

// The k-closure (a)_k inside the unique scheme over omega, computed top-down:
// start from the least [0, m_K) containing a and repeatedly step into the piece
// of the canonical decomposition that contains a.
inline FinOrdSet omega_closure(const TypeSpec& t, std::uint64_t a, Level k) {
    if (k < 0) raise(Errc::DomainExceeded, "negative level");
    auto Kopt = t.level_above(a);
    if (!Kopt) raise(Errc::DomainExceeded, "no scheme level covers the ordinal");
    Level K = *Kopt;
    if (k >= K) return FinOrdSet::interval(0, a + 1);
    if (!t.level_fits(K)) raise(Errc::DomainExceeded, "fragment too large to materialize");
    detail::Ivs F;
    F.push(0, t.m_u64(K));
    for (Level j = K; j > k; --j) {
        std::uint64_t r = t.r_u64(j);
        std::uint64_t w = t.m_u64(j - 1) - r;
        std::uint64_t pos = F.pos_of(a);
        std::uint64_t i = pos < r ? 0 : (pos - r) / w;  // root members sit in every piece
        F = F.take(0, r).unite_disjoint(F.take(r + i * w, r + (i + 1) * w));
    }
    return F.materialize_upto(a);
}

// ---- scheme handles -----------------------------------------------------------

// Backend of a scheme handle: a closure oracle over its domain plus the
// extendability witness used by the forcing layer.
struct SchemeBackend {
    virtual ~SchemeBackend() = default;
    virtual const TypeSpec& type() const = 0;
    // Domain is [0, omega * domain_blocks()).
    virtual std::uint32_t domain_blocks() const = 0;
    virtual FinOrdSet closure_raw(Ord a, Level k) = 0;
    // A member F with A inside its first piece and root(F) = F intersect alpha.
    virtual FinOrdSet ih1(Ord alpha, const FinOrdSet& A) = 0;
    virtual std::string kind() const = 0;
};

class OmegaBackend final : public SchemeBackend {
public:
    explicit OmegaBackend(TypeSpec t) : type_(std::move(t)) {}
    const TypeSpec& type() const override { return type_; }
    std::uint32_t domain_blocks() const override { return 1; }
    FinOrdSet closure_raw(Ord a, Level k) override {
        if (!a.finite()) raise(Errc::DomainExceeded, "ordinal beyond omega");
        return omega_closure(type_, a.offset, k);
    }
    FinOrdSet ih1(Ord alpha, const FinOrdSet& A) override {
        if (!alpha.finite()) raise(Errc::RequestOutOfDomain, "witness target beyond omega");
        for (Ord x : A)
            if (!x.finite()) raise(Errc::RequestOutOfDomain, "witness support beyond omega");
        // Least k above max(A) whose successor level has root size alpha; the
        // witness is then [0, m_{k+1}) with root [0, alpha) and first piece m_k.
        Level k0 = 0;
        if (!A.empty()) {
            if (A.max().offset > (1u << 20)) raise(Errc::DomainExceeded, "witness support too large");
            k0 = Level(A.max().offset) + 1;
        }
        mpz_class target(std::to_string(alpha.offset));
        constexpr Level kSearchCap = 4096;
        for (Level k = k0; k < k0 + kSearchCap; ++k) {
            if (!type_.tail().total() && k + 1 > type_.prefix_levels()) break;
            if (type_.r(k + 1) == target) {
                if (!type_.level_fits(k + 1))
                    raise(Errc::DomainExceeded, "witness member too large to materialize");
                return FinOrdSet::interval(0, type_.m_u64(k + 1));
            }
        }
        raise(Errc::NoWitnessInSchedule,
              "no level with root size " + std::to_string(alpha.offset) + " within the search cap");
    }
    std::string kind() const override { return "omega"; }

private:
    TypeSpec type_;
};

// Value-copyable snapshot of a scheme: a memoized closure oracle.  Reads of a
// frozen handle are safe from any thread; memo population is serialized.
class Scheme {
public:
    Scheme() = default;
    explicit Scheme(std::shared_ptr<SchemeBackend> be)
        : be_(std::move(be)), memo_(std::make_shared<Memo>()) {}

    static Scheme omega(TypeSpec t) { return Scheme(std::make_shared<OmegaBackend>(std::move(t))); }

    const TypeSpec& type() const { return be_->type(); }
    std::uint32_t domain_blocks() const { return be_->domain_blocks(); }
    bool in_domain(Ord a) const { return a.block < domain_blocks(); }
    const std::shared_ptr<SchemeBackend>& backend() const { return be_; }

    FinOrdSet closure(Ord a, Level k) const {
        if (!in_domain(a)) raise(Errc::DomainExceeded, "ordinal " + a.str() + " outside domain");
        {
            std::lock_guard<std::mutex> lock(memo_->mu);
            auto it = memo_->m.find({a, k});
            if (it != memo_->m.end()) return it->second;
        }
        FinOrdSet v = be_->closure_raw(a, k);
        std::lock_guard<std::mutex> lock(memo_->mu);
        return memo_->m.emplace(std::make_pair(a, k), std::move(v)).first->second;
    }

    // Membership: F is a level-k member iff |F| = m_k and F is the k-closure of
    // its maximum.
    bool is_member(const FinOrdSet& F) const {
        if (F.empty()) return false;
        if (!in_domain(F.max())) raise(Errc::DomainExceeded, "set reaches outside domain");
        auto k = level_of_size(type(), F.size());
        if (!k) return false;
        return closure(F.max(), *k) == F;
    }

    // All level-k members inside [0, bound), each exactly once, ascending by max.
    std::vector<FinOrdSet> level_sets(Level k, Ord bound) const {
        if (!bound.finite())
            raise(Errc::DomainExceeded, "level enumeration needs a finite bound");
        std::vector<FinOrdSet> out;
        if (!type().level_fits(k)) return out;
        std::uint64_t mk = type().m_u64(k);
        for (std::uint64_t a = 0; a < bound.offset; ++a) {
            FinOrdSet c = closure(Ord::fin(a), k);
            if (c.size() == mk) out.push_back(std::move(c));
        }
        return out;
    }

    // Harness hook: plants a wrong closure answer so invariant suites can
    // demonstrate counterexample reporting.
    void inject_fault(Ord a, Level k, FinOrdSet v) const {
        std::lock_guard<std::mutex> lock(memo_->mu);
        memo_->m[{a, k}] = std::move(v);
    }

private:
    struct Memo {
        std::map<std::pair<Ord, Level>, FinOrdSet> m;
        std::mutex mu;
    };
    std::shared_ptr<SchemeBackend> be_;
    std::shared_ptr<Memo> memo_;
};

inline Scheme omega_scheme(const TypeSpec& t) { return Scheme::omega(t); }

// ---- the unique finite scheme -------------------------------------------------

// F(X) for |X| = m_k: X together with the schemes of the canonical pieces.
// Enumeration order is level-descending, then lexicographic, so exports are
// byte-stable.
inline std::vector<FinOrdSet> unique_finite_scheme(const FinOrdSet& X, const TypeSpec& t) {
    auto k = level_of_size(t, X.size());
    if (!k)
        raise(Errc::NotALevelCardinality,
              "set of size " + std::to_string(X.size()) + " is not a level cardinality");
    std::vector<std::set<FinOrdSet>> levels(std::size_t(*k) + 1);
    levels[std::size_t(*k)].insert(X);
    for (Level j = *k; j >= 1; --j)
        for (const FinOrdSet& F : levels[std::size_t(j)]) {
            DecompRecord d = canonical_decomposition(F, t);
            for (auto& piece : d.pieces) levels[std::size_t(j - 1)].insert(piece);
        }
    std::vector<FinOrdSet> out;
    for (Level j = *k; j >= 0; --j)
        for (const FinOrdSet& F : levels[std::size_t(j)]) out.push_back(F);
    return out;
}

}  // namespace schemeforge
