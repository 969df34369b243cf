#pragma once

#include <optional>
#include <vector>

#include "schemeforge/derived/gaps.hpp"
#include "schemeforge/metric.hpp"

namespace schemeforge {

// A point of the almost-disjoint family's ambient set: the k-th floor is
// N_k = {k} x (m_{k-1} \ r_k) x [k*m_{k-1}, k*m_k).
struct LuzinTriple {
    std::uint64_t k = 0, a = 0, b = 0;
    friend auto operator<=>(const LuzinTriple&, const LuzinTriple&) = default;
};

struct NkDescriptor {
    std::uint64_t k = 0, a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0;
};

inline NkDescriptor luzin_Nk(const TypeSpec& t, Level k) {
    if (k < 1) raise(Errc::BadOrder, "floors start at 1");
    NkDescriptor d;
    d.k = std::uint64_t(k);
    d.a_lo = t.r_u64(k);
    d.a_hi = t.m_u64(k - 1);
    d.b_lo = d.k * t.m_u64(k - 1);
    d.b_hi = d.k * t.m_u64(k);
    return d;
}

// A^k_alpha: empty inside the root; a full column at Xi = 0; a full row slice
// at Xi = 1.
inline std::vector<LuzinTriple> luzin_level_set(const Scheme& h, Ord alpha, Level k) {
    require_two_type(h, k);
    NkDescriptor N = luzin_Nk(h.type(), k);
    std::vector<LuzinTriple> out;
    std::int64_t x = xi(h, alpha, k);
    if (x < 0) return out;
    std::uint64_t card = kcard(h, alpha, k);
    if (x == 0) {
        for (std::uint64_t b = N.b_lo; b < N.b_hi; ++b) out.push_back({N.k, card, b});
    } else {
        for (std::uint64_t a = N.a_lo; a < N.a_hi; ++a)
            for (std::uint64_t b = N.k * card; b < N.k * (card + 1); ++b)
                out.push_back({N.k, a, b});
    }
    return out;
}

struct LuzinFragment {
    Ord alpha;
    Level K = 0;
    std::vector<LuzinTriple> points;  // sorted; the part of A_alpha on floors <= K
};

inline LuzinFragment luzin_family(const Scheme& h, Ord alpha, Level K) {
    LuzinFragment f;
    f.alpha = alpha;
    f.K = K;
    for (Level k = 1; k <= K; ++k)
        for (auto& p : luzin_level_set(h, alpha, k)) f.points.push_back(p);
    std::sort(f.points.begin(), f.points.end());
    return f;
}

// Separator for the countable initial part at beta:
// C_beta = union over k of A^{k+1}_xi for xi in (beta)_k.
inline LuzinFragment jones_separator(const Scheme& h, Ord beta, Level K) {
    LuzinFragment f;
    f.alpha = beta;
    f.K = K;
    for (Level k = 0; k + 1 <= K; ++k)
        for (Ord x : h.closure(beta, k))
            for (auto& p : luzin_level_set(h, x, k + 1)) f.points.push_back(p);
    std::sort(f.points.begin(), f.points.end());
    f.points.erase(std::unique(f.points.begin(), f.points.end()), f.points.end());
    return f;
}

// ---- Luzin representations of finite well-founded orders ---------------------

struct FinitePoset {
    std::size_t n = 0;
    std::vector<std::vector<bool>> leq;  // leq[i][j]: i <= j

    static FinitePoset chain(std::size_t n) {
        FinitePoset p = discrete(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) p.leq[i][j] = true;
        return p;
    }
    static FinitePoset antichain(std::size_t n) { return discrete(n); }
    static FinitePoset discrete(std::size_t n) {
        FinitePoset p;
        p.n = n;
        p.leq.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) p.leq[i][i] = true;
        return p;
    }
    bool valid() const {
        for (std::size_t i = 0; i < n; ++i)
            if (!leq[i][i]) return false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j && leq[i][j] && leq[j][i]) return false;
                for (std::size_t k = 0; k < n; ++k)
                    if (leq[i][j] && leq[j][k] && !leq[i][k]) return false;
            }
        return true;
    }
    bool incomparable(std::size_t x, std::size_t y) const { return !leq[x][y] && !leq[y][x]; }
    bool has_lower_bound(std::size_t x, std::size_t y) const {
        for (std::size_t z = 0; z < n; ++z)
            if (leq[z][x] && leq[z][y]) return true;
        return false;
    }
};

struct LuzinRep {
    Level K = 0;
    std::vector<std::vector<LuzinTriple>> T;  // per node: T_x on floors <= K
};

// M^k_x: the predecessors of x whose image sits in the k-closure of phi(x).
inline std::vector<std::size_t> rep_Mk(const Scheme& h, const FinitePoset& poset,
                                       const std::vector<Ord>& phi, std::size_t x, Level k) {
    FinOrdSet cl = h.closure(phi[x], k);
    std::vector<std::size_t> out;
    for (std::size_t z = 0; z < poset.n; ++z)
        if (poset.leq[z][x] && cl.contains(phi[z])) out.push_back(z);
    return out;
}

inline LuzinRep luzin_representation(const Scheme& h, const FinitePoset& poset,
                                     const std::vector<Ord>& phi, Level K) {
    if (!poset.valid() || phi.size() != poset.n)
        raise(Errc::NotAnEmbedding, "order data is not a poset with matching image list");
    for (std::size_t x = 0; x < poset.n; ++x)
        for (std::size_t y = 0; y < poset.n; ++y) {
            if (x != y && phi[x] == phi[y]) raise(Errc::NotAnEmbedding, "image list not injective");
            if (x != y && poset.leq[x][y] && !(phi[x] < phi[y]))
                raise(Errc::NotAnEmbedding, "image list does not preserve the order");
        }
    LuzinRep rep;
    rep.K = K;
    rep.T.resize(poset.n);
    for (std::size_t x = 0; x < poset.n; ++x) {
        for (Level k = 0; k + 1 <= K; ++k)
            for (std::size_t z : rep_Mk(h, poset, phi, x, k))
                for (auto& p : luzin_level_set(h, phi[z], k + 1)) rep.T[x].push_back(p);
        std::sort(rep.T[x].begin(), rep.T[x].end());
        rep.T[x].erase(std::unique(rep.T[x].begin(), rep.T[x].end()), rep.T[x].end());
    }
    return rep;
}

// Floor-k slice of a triple list.
inline std::vector<LuzinTriple> floor_slice(const std::vector<LuzinTriple>& v, std::uint64_t k) {
    std::vector<LuzinTriple> out;
    for (auto& p : v)
        if (p.k == k) out.push_back(p);
    return out;
}

// ---- the coherent family over the tower -------------------------------------

// Point of the coherent-family tower: floor k holds {k} x k x r_k x r_k.
struct CoherentPoint {
    Level k = 0;
    std::uint64_t s = 0, i = 0, j = 0;
};

// f_alpha at a tower point: the i-th (piece 0) or j-th (piece 1) element of
// the k-closure.  Exposed for ordinals at or above omega only; nullopt means
// the point lies outside T_alpha.
inline std::optional<Ord> coherent_family_eval(const Scheme& h, Ord alpha, CoherentPoint pt) {
    require_two_type(h, pt.k);
    if (alpha.finite())
        raise(Errc::DomainExceeded, "coherent family is indexed by ordinals at or above omega");
    if (pt.k < 1) return std::nullopt;
    std::uint64_t rk = h.type().r_u64(pt.k);
    if (pt.s >= std::uint64_t(pt.k) || pt.i >= rk || pt.j >= rk) return std::nullopt;
    std::int64_t x = xi(h, alpha, pt.k);
    if (x < 0) return std::nullopt;
    FinOrdSet cl = h.closure(alpha, pt.k);
    return x == 0 ? cl(std::size_t(pt.i)) : cl(std::size_t(pt.j));
}

}  // namespace schemeforge
