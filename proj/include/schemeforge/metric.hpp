#pragma once

#include <cstdint>
#include <optional>

#include "schemeforge/scheme_core.hpp"

namespace schemeforge {

// rho(a,b): least level whose members join a and b; 0 iff a = b.
inline Level rho(const Scheme& h, Ord a, Ord b) {
    if (!h.in_domain(a) || !h.in_domain(b)) raise(Errc::DomainExceeded, "rho outside domain");
    if (a == b) return 0;
    Ord lo = std::min(a, b), hi = std::max(a, b);
    for (Level k = 1;; ++k)
        if (h.closure(hi, k).contains(lo)) return k;
}

// Diameter of a nonempty set: max distance to its maximum.
inline Level diameter(const Scheme& h, const FinOrdSet& A) {
    if (A.empty()) raise(Errc::DomainExceeded, "diameter of the empty set");
    Level d = 0;
    for (Ord x : A) d = std::max(d, rho(h, x, A.max()));
    return d;
}

inline std::uint64_t kcard(const Scheme& h, Ord a, Level k) {
    return std::uint64_t(h.closure(a, k).size()) - 1;
}

// delta(a,b): least level where the k-cardinalities differ; the sentinel
// kLevelInf when a = b.  Always <= rho(a,b).
inline Level delta(const Scheme& h, Ord a, Ord b) {
    if (a == b) {
        if (!h.in_domain(a)) raise(Errc::DomainExceeded, "delta outside domain");
        return kLevelInf;
    }
    Level cap = rho(h, a, b);
    for (Level k = 0; k <= cap; ++k)
        if (kcard(h, a, k) != kcard(h, b, k)) return k;
    raise(Errc::DomainExceeded, "delta exceeded rho; broken oracle");
}

// Xi_a(k): index of the decomposition piece holding a inside any level-k
// member, -1 inside the root.  Computed from the position |(a)_k| - 1: the
// root occupies the first r_k slots and each piece tail w = m_{k-1} - r_k more.
inline std::int64_t xi(const Scheme& h, Ord a, Level k) {
    if (k == 0) return 0;
    const TypeSpec& t = h.type();
    std::uint64_t p = kcard(h, a, k);
    std::uint64_t r = t.r_u64(k);
    if (p < r) return -1;
    std::uint64_t w = t.m_u64(k - 1) - r;
    return std::int64_t((p - r) / w);
}

struct BallRecord {
    Ord alpha;
    Level k = 0;
    FinOrdSet set;            // (alpha)_k
    std::uint64_t card = 0;   // |(alpha)_k| - 1
    std::int64_t piece = 0;   // Xi_alpha(k)

    Ord operator()(std::size_t i) const { return set(i); }
};

inline BallRecord ball(const Scheme& h, Ord a, Level k) {
    BallRecord b;
    b.alpha = a;
    b.k = k;
    b.set = h.closure(a, k);
    b.card = std::uint64_t(b.set.size()) - 1;
    b.piece = xi(h, a, k);
    return b;
}

// Set-valued Xi: defined only strictly above the diameter, where it agrees
// with Xi of the maximum.
inline std::int64_t xi_set(const Scheme& h, const FinOrdSet& A, Level k) {
    Level d = diameter(h, A);
    if (k <= d)
        raise(Errc::XiUndefined, "set-valued Xi needs a level above the diameter " + std::to_string(d));
    return xi(h, A.max(), k);
}

struct SetProfile {
    FinOrdSet A;
    Level diameter = 0;                 // rho^A
    Level k = 0;
    FinOrdSet closure_k;                // (A)_k
    std::optional<std::int64_t> piece;  // Xi_A(k), present iff k > rho^A
    bool closed = false;
    bool maximally_closed = false;
};

inline SetProfile set_profile(const Scheme& h, const FinOrdSet& A, Level k) {
    if (A.empty()) raise(Errc::DomainExceeded, "profile of the empty set");
    SetProfile p;
    p.A = A;
    p.k = k;
    p.diameter = diameter(h, A);
    if (k >= p.diameter) {
        p.closure_k = h.closure(A.max(), k);
    } else {
        for (Ord x : A) p.closure_k = p.closure_k.set_union(h.closure(x, k));
    }
    if (k > p.diameter) p.piece = xi(h, A.max(), k);
    p.closed = (A == h.closure(A.max(), p.diameter));
    p.maximally_closed =
        p.closed && h.type().level_fits(p.diameter) && A.size() == h.type().m_u64(p.diameter);
    return p;
}

}  // namespace schemeforge
