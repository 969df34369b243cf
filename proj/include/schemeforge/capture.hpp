#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "schemeforge/metric.hpp"

namespace schemeforge {

struct CaptureRecord {
    std::vector<FinOrdSet> family;  // ordered so that Xi(family[i]) = i at `level`
    Level level = 0;
    FinOrdSet witness;              // S below m_{level-1}: family[i] = piece_i[S]
    bool fully_captured = false;
};

struct NotCaptured {
    std::string reason;
};

using CaptureResult = std::variant<CaptureRecord, NotCaptured>;

inline bool captured(const CaptureResult& r) { return std::holds_alternative<CaptureRecord>(r); }

// Strongly rho-isomorphic: the closures one level below the joint diameter
// have equal size and the increasing bijection between them matches A to B.
inline bool strongly_iso(const Scheme& h, const FinOrdSet& A, const FinOrdSet& B, Level l) {
    FinOrdSet ca = h.closure(A.max(), l - 1);
    FinOrdSet cb = h.closure(B.max(), l - 1);
    if (ca.size() != cb.size()) return false;
    return A.image(ca, cb) == B;
}

// Checks the three capturing conditions: the family joins exactly at level l,
// its piece indices there are 0..n-1, and the members are pairwise strongly
// rho-isomorphic.  On success the canonical witness S (positions of family[0]
// inside its piece) is returned.
inline CaptureResult is_captured(const Scheme& h, std::vector<FinOrdSet> family, Level l) {
    std::size_t n = family.size();
    if (n < 2) return NotCaptured{"family needs at least two members"};
    if (l < 1) return NotCaptured{"capturing levels start at 1"};
    for (auto& D : family)
        if (D.empty()) return NotCaptured{"family members must be nonempty"};
    if (!h.type().level_fits(l) || n > h.type().n_u64(l))
        return NotCaptured{"family larger than the fan-out at the level"};

    FinOrdSet all;
    for (auto& D : family) all = all.set_union(D);
    if (diameter(h, all) != l)
        return NotCaptured{"union diameter is " + std::to_string(diameter(h, all)) +
                           ", not the level"};
    for (auto& D : family)
        if (diameter(h, D) >= l) return NotCaptured{"member diameter reaches the level"};

    std::vector<FinOrdSet> ordered(n);
    std::vector<bool> seen(n, false);
    for (auto& D : family) {
        std::int64_t x = xi(h, D.max(), l);
        if (x < 0 || std::size_t(x) >= n || seen[std::size_t(x)])
            return NotCaptured{"piece indices at the level are not 0..n-1"};
        seen[std::size_t(x)] = true;
        ordered[std::size_t(x)] = std::move(D);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!strongly_iso(h, ordered[i], ordered[j], l))
                return NotCaptured{"members " + std::to_string(i) + "," + std::to_string(j) +
                                   " are not strongly rho-isomorphic"};

    CaptureRecord rec;
    rec.level = l;
    rec.fully_captured = (n == h.type().n_u64(l));
    std::vector<Ord> w;
    for (Ord a : ordered[0]) w.push_back(Ord::fin(kcard(h, a, l - 1)));
    rec.witness = FinOrdSet::from(std::move(w));
    rec.family = std::move(ordered);
    return rec;
}

// A set of ordinals treated as a family of singletons.
inline CaptureResult is_captured_set(const Scheme& h, const FinOrdSet& D, Level l) {
    std::vector<FinOrdSet> fam;
    for (Ord a : D) fam.push_back(FinOrdSet{a});
    return is_captured(h, std::move(fam), l);
}

namespace detail {
template <typename Fn>
void for_each_combination(std::size_t total, std::size_t n, Fn&& fn) {
    if (n == 0 || n > total) return;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        std::size_t i = n;
        bool advanced = false;
        while (i-- > 0) {
            if (idx[i] < total - n + i) {
                ++idx[i];
                for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}
}  // namespace detail

struct LevelWindow {
    Level lo = 0;
    Level hi = kLevelInf;
    bool contains(Level l) const { return lo <= l && l <= hi; }
};

// All n-element subsets of S captured at a level inside the window, ordered
// by level then lexicographically.
inline std::vector<CaptureRecord> captured_scan(const Scheme& h, const FinOrdSet& S, std::size_t n,
                                                LevelWindow window = {}) {
    if (n < 2) raise(Errc::BadOrder, "capturing needs families of size at least 2");
    std::vector<CaptureRecord> out;
    detail::for_each_combination(S.size(), n, [&](const std::vector<std::size_t>& idx) {
        std::vector<Ord> d;
        for (std::size_t i : idx) d.push_back(S(i));
        FinOrdSet D = FinOrdSet::from_sorted(std::move(d));
        Level l = diameter(h, D);
        if (!window.contains(l)) return;
        CaptureResult r = is_captured_set(h, D, l);
        if (captured(r)) out.push_back(std::get<CaptureRecord>(std::move(r)));
    });
    std::stable_sort(out.begin(), out.end(), [](const CaptureRecord& a, const CaptureRecord& b) {
        return a.level != b.level ? a.level < b.level : a.family < b.family;
    });
    return out;
}

// Generates captured families of the given size at level l directly from the
// members below `bound`: pick F, a position set S below m_{l-1} not inside the
// root, and read off {piece_i[S] : i < size}.
inline std::vector<CaptureRecord> enumerate_captured(const Scheme& h, Level l, std::size_t size,
                                                     Ord bound) {
    const TypeSpec& t = h.type();
    if (l < 1) raise(Errc::BadOrder, "capturing levels start at 1");
    if (size < 2 || size > t.n_u64(l)) raise(Errc::BadOrder, "family size out of range");
    std::uint64_t w = t.m_u64(l - 1);
    if (w > 16) raise(Errc::DomainExceeded, "piece cardinality too large to enumerate witnesses");
    std::uint64_t r = t.r_u64(l);
    std::map<std::vector<FinOrdSet>, CaptureRecord> dedup;
    for (const FinOrdSet& F : h.level_sets(l, bound)) {
        DecompRecord d = canonical_decomposition(F, t);
        for (std::uint64_t mask = 1; mask < (1ull << w); ++mask) {
            if ((mask >> r) == 0) continue;  // S inside the root: pieces coincide
            FinOrdSet S;
            for (std::uint64_t j = 0; j < w; ++j)
                if (mask & (1ull << j)) S.insert(Ord::fin(j));
            CaptureRecord rec;
            rec.level = l;
            rec.witness = S;
            rec.fully_captured = (size == t.n_u64(l));
            for (std::size_t i = 0; i < size; ++i) {
                std::vector<Ord> mem;
                for (Ord s : S) mem.push_back(d.pieces[i](std::size_t(s.offset)));
                rec.family.push_back(FinOrdSet::from(std::move(mem)));
            }
            dedup.emplace(rec.family, std::move(rec));
        }
    }
    std::vector<CaptureRecord> out;
    for (auto& [k, v] : dedup) out.push_back(std::move(v));
    return out;
}

// n-projection: the levels at which some n-element subset of S is captured.
inline std::set<Level> pi_n(const Scheme& h, const FinOrdSet& S, std::size_t n) {
    if (n < 2) raise(Errc::BadOrder, "projection needs n >= 2");
    std::set<Level> out;
    for (const CaptureRecord& r : captured_scan(h, S, n)) out.insert(r.level);
    return out;
}

// Square bracket: the least element of (b)_{rho(a,b)-1} at or above a.
inline Ord square_bracket(const Scheme& h, Ord a, Ord b) {
    if (!(a < b)) raise(Errc::BadOrder, "square bracket needs a < b");
    Level l = rho(h, a, b);
    FinOrdSet tailpart = h.closure(b, l - 1).at_least(a);
    return tailpart.min();
}

// Image of the captured pairs of S under the square bracket.
inline FinOrdSet bracket_projection(const Scheme& h, const FinOrdSet& S) {
    FinOrdSet out;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            FinOrdSet D{S(i), S(j)};
            if (captured(is_captured_set(h, D, diameter(h, D))))
                out.insert(square_bracket(h, S(i), S(j)));
        }
    return out;
}

// True iff no n-element subset of p is captured at a level in A.
inline bool dn_condition(const Scheme& h, const FinOrdSet& p, const std::set<Level>& A,
                         std::size_t n) {
    if (n < 2) raise(Errc::BadOrder, "condition needs n >= 2");
    bool ok = true;
    detail::for_each_combination(p.size(), n, [&](const std::vector<std::size_t>& idx) {
        if (!ok) return;
        std::vector<Ord> d;
        for (std::size_t i : idx) d.push_back(p(i));
        FinOrdSet D = FinOrdSet::from_sorted(std::move(d));
        Level l = diameter(h, D);
        if (A.count(l) && captured(is_captured_set(h, D, l))) ok = false;
    });
    return ok;
}

// Membership in the ideal generator H_n(alpha): beyond rho(x, alpha) the
// condition holds automatically, so only the window (n, rho] is checked.
inline bool h_ideal_member(const Scheme& h, Ord x, Ord alpha, Level n) {
    if (!(x < alpha)) raise(Errc::BadOrder, "ideal membership needs x < alpha");
    Level r = rho(h, x, alpha);
    for (Level m = n + 1; m <= r; ++m) {
        std::int64_t xa = xi(h, alpha, m);
        if (xa == -1) continue;
        if (xi(h, x, m) > xa) return false;
    }
    return true;
}

}  // namespace schemeforge
