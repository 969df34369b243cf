#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "schemeforge/metric.hpp"
#include "schemeforge/scheme_core.hpp"

namespace schemeforge {

// ---- reduction and cut --------------------------------------------------------

// red_delta(p): p below delta, padded upward into a contiguous block; the
// ordinal |p| itself (as a set) when p lives entirely above delta.
inline FinOrdSet reduce(const FinOrdSet& p, Ord delta) {
    FinOrdSet lower = p.below(delta);
    std::uint64_t upper = p.size() - lower.size();
    if (lower.empty()) return FinOrdSet::interval(0, p.size());
    return lower.set_union(FinOrdSet::interval_at(lower.max().succ(), upper));
}

// Cut_alpha(F) relative to gamma: keep F below alpha, move the rest to the
// fresh block starting at gamma.
inline FinOrdSet cut_at(const FinOrdSet& F, Ord alpha, Ord gamma) {
    FinOrdSet lower = F.below(alpha);
    return lower.set_union(FinOrdSet::interval_at(gamma, F.size() - lower.size()));
}

// Membership of q in the unique finite scheme over the set p (any |p| = m_k):
// translate to positions and test inside the scheme over omega.
inline bool member_of_finite(const TypeSpec& t, const FinOrdSet& p, const FinOrdSet& q) {
    if (q.empty() || !q.subset_of(p)) return false;
    auto kq = level_of_size(t, q.size());
    if (!kq) return false;
    std::vector<Ord> idx;
    idx.reserve(q.size());
    for (Ord x : q) idx.push_back(Ord::fin(p.rank(x)));
    FinOrdSet I = FinOrdSet::from_sorted(std::move(idx));
    return omega_closure(t, I.max().offset, *kq) == I;
}

struct Condition {
    FinOrdSet set;
    Level level = 0;           // |set| = m_level when nonempty
    std::optional<Ord> alpha;  // max(set below gamma), when defined
    bool empty() const { return set.empty(); }
};

// Conditions over gamma+omega: level-sized, trace below gamma is a ground
// member after reduction, upper part an initial segment of [gamma, gamma+omega).
inline bool is_condition(const Scheme& ground, Ord gamma, const FinOrdSet& p) {
    if (p.empty()) return true;
    Ord top{gamma.block + 1, 0};
    if (!(p.max() < top)) raise(Errc::DomainExceeded, "condition reaches beyond gamma+omega");
    FinOrdSet upper = p.at_least(gamma);
    for (std::size_t i = 0; i < upper.size(); ++i)
        if (upper(i) != Ord{gamma.block, i}) return false;
    if (!level_of_size(ground.type(), p.size())) return false;
    return ground.is_member(reduce(p, gamma));
}

inline Condition make_condition(const Scheme& ground, Ord gamma, FinOrdSet p) {
    if (!is_condition(ground, gamma, p)) raise(Errc::NotAMember, "not a forcing condition");
    Condition c;
    if (!p.empty()) {
        c.level = *level_of_size(ground.type(), p.size());
        FinOrdSet lower = p.below(gamma);
        if (!lower.empty()) c.alpha = lower.max();
    }
    c.set = std::move(p);
    return c;
}

// p <= q iff q is a member of the finite scheme over p, or q is empty.
inline bool cond_leq(const Scheme& ground, Ord gamma, const FinOrdSet& p, const FinOrdSet& q) {
    (void)ground;
    (void)gamma;
    if (q.empty()) return true;
    if (p.empty()) return false;
    return member_of_finite(ground.type(), p, q);
}

// The member Cut_alpha(F): always a condition when F is a ground member.
inline Condition cut(const Scheme& ground, Ord gamma, const FinOrdSet& F, Ord alpha) {
    if (!ground.is_member(F)) raise(Errc::NotAMember, "cut of a non-member");
    return make_condition(ground, gamma, cut_at(F, alpha, gamma));
}

// Ground witness for extendability: a member F with A in its first piece and
// root(F) = F below alpha.  For the scheme over omega this is the initial
// segment [0, m_{k+1}) of the least k above max(A) whose next root size is
// alpha (matching the published recipe); extension grounds produce witnesses
// by serving a request on their own chain.
inline FinOrdSet ih1_witness(const Scheme& h, Ord alpha, const FinOrdSet& A) {
    if (!h.in_domain(alpha)) raise(Errc::RequestOutOfDomain, "witness target outside the ground");
    for (Ord x : A)
        if (!h.in_domain(x)) raise(Errc::RequestOutOfDomain, "witness support outside the ground");
    return h.backend()->ih1(alpha, A);
}

// ---- the deterministic chain ----------------------------------------------------

struct Request {
    enum class Kind { Contain, IncludeF, IH1 };
    Kind kind = Kind::Contain;
    Ord alpha;      // Contain, IH1
    FinOrdSet set;  // IncludeF: the member; IH1: the support A

    static Request contain(Ord a) { return {Kind::Contain, a, {}}; }
    static Request include(FinOrdSet F) { return {Kind::IncludeF, Ord{}, std::move(F)}; }
    static Request ih1(Ord a, FinOrdSet A) { return {Kind::IH1, a, std::move(A)}; }
};

inline const char* request_kind_name(Request::Kind k) {
    switch (k) {
        case Request::Kind::Contain: return "contain";
        case Request::Kind::IncludeF: return "include";
        case Request::Kind::IH1: return "ih1";
    }
    return "?";
}

// A decreasing chain of conditions serving dense-set requests.  Every
// existential choice is resolved by the least witness, so a request log replays
// to a byte-identical chain.
class ChainState {
public:
    ChainState(Scheme ground, std::uint64_t fuel)
        : ground_(std::move(ground)), gamma_{ground_.domain_blocks(), 0}, fuel_left_(fuel) {}

    const Scheme& ground() const { return ground_; }
    Ord gamma() const { return gamma_; }
    std::uint64_t fuel_left() const { return fuel_left_; }
    const std::vector<Request>& log() const { return log_; }
    const std::vector<Condition>& conditions() const { return conds_; }

    const FinOrdSet& tip() const {
        static const FinOrdSet empty;
        return conds_.empty() ? empty : conds_.back().set;
    }
    Level tip_level() const { return conds_.empty() ? -1 : conds_.back().level; }

    Condition serve(const Request& rq) {
        log_.push_back(rq);
        switch (rq.kind) {
            case Request::Kind::Contain: do_contain(rq.alpha); break;
            case Request::Kind::IncludeF: do_include(rq.set); break;
            case Request::Kind::IH1: do_ih1(rq.alpha, rq.set); break;
        }
        return conds_.empty() ? Condition{} : conds_.back();
    }

private:
    void check(bool ok, const char* what) {
        if (!ok) raise(Errc::NotAMember, std::string("chain invariant broke: ") + what);
    }

    void push(FinOrdSet p) {
        if (fuel_left_ == 0) raise(Errc::FuelExhausted, "extension fuel spent");
        --fuel_left_;
        if (p.size() > (1u << 20)) raise(Errc::DomainExceeded, "condition too large to materialize");
        check(cond_leq(ground_, gamma_, p, tip()), "appended condition does not extend the tip");
        conds_.push_back(make_condition(ground_, gamma_, std::move(p)));
    }

    bool in_ext_domain(Ord a) const { return a < Ord{gamma_.block + 1, 0}; }

    FinOrdSet ground_ih1_minimal(Ord alpha, const FinOrdSet& A) {
        // Least witness: for an omega ground the least k with A inside m_k and
        // next root size alpha; extension grounds delegate to their chain.
        if (ground_.backend()->kind() == "omega") {
            const TypeSpec& t = ground_.type();
            mpz_class maxa = A.empty() ? mpz_class(-1) : mpz_class(std::to_string(A.max().offset));
            mpz_class target(std::to_string(alpha.offset));
            constexpr Level kSearchCap = 4096;
            for (Level k = 0; k < kSearchCap; ++k) {
                if (t.m(k) <= maxa) continue;  // A must fit in the first piece
                if (t.r(k + 1) == target) {
                    if (!t.level_fits(k + 1))
                        raise(Errc::DomainExceeded, "witness member too large");
                    return FinOrdSet::interval(0, t.m_u64(k + 1));
                }
            }
            raise(Errc::NoWitnessInSchedule, "no root size " + std::to_string(alpha.offset) +
                                                 " within the search cap");
        }
        return ground_.backend()->ih1(alpha, A);
    }

    // First element of the second canonical piece beyond the root: the cut
    // point that turns a witness into a condition extending the tip.
    Ord second_piece_entry(const FinOrdSet& G) {
        DecompRecord d = canonical_decomposition(G, ground_.type());
        std::uint64_t r = ground_.type().r_u64(d.level);
        std::uint64_t w = ground_.type().m_u64(d.level - 1) - r;
        return G(std::size_t(r + w));
    }

    void bootstrap_lower() {
        // Tip empty or purely upper: drop to Cut_{m_k}([0, m_{k+1})) for the
        // least k at or above the tip level with next root size 0.
        const TypeSpec& t = ground_.type();
        Level j = conds_.empty() ? 0 : tip_level();
        constexpr Level kSearchCap = 4096;
        for (Level k = j; k < j + kSearchCap; ++k) {
            if (t.r(k + 1) == 0) {
                FinOrdSet G = FinOrdSet::interval(0, t.m_u64(k + 1));
                push(cut_at(G, Ord::fin(t.m_u64(k)), gamma_));
                return;
            }
        }
        raise(Errc::NoWitnessInSchedule, "no zero root size within the search cap");
    }

    void bootstrap_upper() {
        // Tip lives below gamma, hence is a ground member; extend it across.
        FinOrdSet q = tip();
        Ord a2 = q.max().succ();
        FinOrdSet A = q;
        A.insert(a2);
        FinOrdSet G = ground_ih1_minimal(a2, A);
        push(cut_at(G, a2, gamma_));
    }

    // One rewrite step towards a tip containing a; at most a handful of steps
    // are ever needed.
    void do_contain(Ord a) {
        if (!in_ext_domain(a)) raise(Errc::RequestOutOfDomain, "ordinal beyond gamma+omega");
        for (int guard = 0; guard < 8; ++guard) {
            if (tip().contains(a)) return;
            if (conds_.empty() || tip().below(gamma_).empty()) {
                bootstrap_lower();
                continue;
            }
            if (tip().at_least(gamma_).empty()) {
                bootstrap_upper();
                continue;
            }
            const FinOrdSet& q = tip();
            Ord aq = q.below(gamma_).max();
            FinOrdSet red = reduce(q, gamma_);
            if (a < gamma_) {
                FinOrdSet A = red;
                A.insert(a);
                FinOrdSet G = ground_ih1_minimal(aq.succ(), A);
                push(cut_at(G, second_piece_entry(G), gamma_));
            } else {
                std::uint64_t n = a.offset + 1;  // |[gamma, a]|
                FinOrdSet A = red.set_union(FinOrdSet::interval_at(aq, n + 1));
                FinOrdSet G = ground_ih1_minimal(aq.succ(), A);
                push(cut_at(G, second_piece_entry(G), gamma_));
            }
        }
        raise(Errc::NoWitnessInSchedule, "containment request did not settle");
    }

    void do_include(const FinOrdSet& F) {
        if (!ground_.is_member(F)) raise(Errc::RequestOutOfDomain, "not a ground member");
        for (Ord x : F) do_contain(x);
        check(member_of_finite(ground_.type(), tip(), F), "member absorption failed");
    }

    bool ih1_holds(Ord a, const FinOrdSet& A) const {
        const FinOrdSet& p = tip();
        if (p.size() < 2 || !p.contains(a)) return false;
        DecompRecord d = canonical_decomposition(p, ground_.type());
        return A.subset_of(d.pieces[0]) && p.below(a) == d.root;
    }

    void do_ih1(Ord a, const FinOrdSet& A) {
        if (!in_ext_domain(a)) raise(Errc::RequestOutOfDomain, "ordinal beyond gamma+omega");
        for (Ord x : A)
            if (!in_ext_domain(x)) raise(Errc::RequestOutOfDomain, "support beyond gamma+omega");
        if (ih1_holds(a, A)) return;
        do_contain(a);
        for (Ord x : A) do_contain(x);
        if (tip().at_least(gamma_).empty()) bootstrap_upper();
        if (ih1_holds(a, A)) return;
        const FinOrdSet& q = tip();
        Ord aq = q.below(gamma_).max();
        FinOrdSet red = reduce(q, gamma_);
        Ord a2 = red(q.rank(a));  // the reduction element matching a
        FinOrdSet G = ground_ih1_minimal(a2, red);
        push(cut_at(G, aq.succ(), gamma_));
        check(ih1_holds(a, A), "extendability postcondition failed");
    }

    Scheme ground_;
    Ord gamma_;
    std::vector<Condition> conds_;
    std::vector<Request> log_;
    std::uint64_t fuel_left_;
};

// ---- the extension backend -------------------------------------------------------

// Scheme over gamma+omega determined by the deterministic chain: delegation
// below gamma, answers inside the finite scheme of the tip above it.  Queries
// auto-issue containment requests; the request log makes them replayable.
class ExtensionBackend final : public SchemeBackend {
public:
    ExtensionBackend(Scheme ground, std::uint64_t fuel)
        : chain_(std::move(ground), fuel) {}

    const TypeSpec& type() const override { return chain_.ground().type(); }
    std::uint32_t domain_blocks() const override { return chain_.ground().domain_blocks() + 1; }
    std::string kind() const override { return "extension"; }

    FinOrdSet closure_raw(Ord a, Level k) override {
        std::lock_guard<std::mutex> lock(mu_);
        if (a < chain_.gamma()) return chain_.ground().closure(a, k);
        ensure(a, k);
        const FinOrdSet& q = chain_.tip();
        FinOrdSet I = omega_closure(type(), q.rank(a), k);
        std::vector<Ord> out;
        out.reserve(I.size());
        for (Ord i : I) out.push_back(q(std::size_t(i.offset)));
        return FinOrdSet::from_sorted(std::move(out));
    }

    FinOrdSet ih1(Ord alpha, const FinOrdSet& A) override {
        std::lock_guard<std::mutex> lock(mu_);
        chain_.serve(Request::ih1(alpha, A));
        return chain_.tip();
    }

    Condition request(const Request& rq) {
        std::lock_guard<std::mutex> lock(mu_);
        return chain_.serve(rq);
    }

    template <typename Fn>
    auto with_chain(Fn&& fn) const {
        std::lock_guard<std::mutex> lock(mu_);
        return fn(chain_);
    }

private:
    void ensure(Ord a, Level k) {
        if (!chain_.tip().contains(a)) chain_.serve(Request::contain(a));
        while (chain_.tip_level() < k) {
            // Contain the least upper ordinal outside the tip; any append
            // strictly enlarges the tip, hence its level.
            std::uint64_t j = chain_.tip().at_least(chain_.gamma()).size();
            chain_.serve(Request::contain(Ord{chain_.gamma().block, j}));
        }
    }

    mutable std::mutex mu_;
    ChainState chain_;
};

// Owner handle for one extension step gamma -> gamma+omega.
class Extension {
public:
    explicit Extension(Scheme ground, std::uint64_t fuel = 10000)
        : be_(std::make_shared<ExtensionBackend>(std::move(ground), fuel)) {}

    Scheme scheme() const { return Scheme(be_); }
    Ord gamma() const { return be_->with_chain([](const ChainState& c) { return c.gamma(); }); }

    Condition request(const Request& rq) { return be_->request(rq); }

    std::vector<Request> log() const {
        return be_->with_chain([](const ChainState& c) { return c.log(); });
    }
    std::vector<Condition> conditions() const {
        return be_->with_chain([](const ChainState& c) { return c.conditions(); });
    }
    std::uint64_t fuel_left() const {
        return be_->with_chain([](const ChainState& c) { return c.fuel_left(); });
    }

    // The produced family restricted to one logged condition: the members of
    // its finite scheme.
    std::vector<FinOrdSet> members_of(const FinOrdSet& cond) const {
        if (cond.empty()) return {};
        const TypeSpec& t = be_->type();
        std::vector<FinOrdSet> out;
        for (const FinOrdSet& I : unique_finite_scheme(FinOrdSet::interval(0, cond.size()), t)) {
            std::vector<Ord> mem;
            mem.reserve(I.size());
            for (Ord i : I) mem.push_back(cond(std::size_t(i.offset)));
            out.push_back(FinOrdSet::from_sorted(std::move(mem)));
        }
        return out;
    }

private:
    std::shared_ptr<ExtensionBackend> be_;
};

inline Extension extend_scheme(Scheme ground, std::uint64_t fuel = 10000) {
    return Extension(std::move(ground), fuel);
}

}  // namespace schemeforge
