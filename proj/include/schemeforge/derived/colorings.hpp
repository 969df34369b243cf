#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "schemeforge/metric.hpp"

namespace schemeforge {

// ---- oscillation ---------------------------------------------------------------

// f_a(l) = |(a)_l| - 1, the bounded profile whose oscillation drives the pair
// colorings.
inline std::uint64_t profile_at(const Scheme& h, Ord a, Level l) { return kcard(h, a, l); }

struct OscRecord {
    Ord alpha, beta;
    Level k = 0;
    std::vector<Level> points;  // up-crossings of the profiles
    std::size_t count = 0;
    Level window_lo = 0, window_hi = 0;  // exact within [k, rho)
};

// Up-crossings of f_beta by f_alpha at or above k.  Above rho(a,b) the lower
// profile stays strictly below, so the record is exact on [k, rho).
inline OscRecord osc(const Scheme& h, Ord a, Ord b, Level k = 0) {
    OscRecord r;
    r.alpha = a;
    r.beta = b;
    r.k = k;
    r.window_lo = k;
    if (a == b) {
        r.window_hi = k;
        return r;
    }
    Level top = rho(h, a, b);
    r.window_hi = top;
    for (Level s = k; s + 1 <= top; ++s)
        if (profile_at(h, a, s) <= profile_at(h, b, s) &&
            profile_at(h, a, s + 1) > profile_at(h, b, s + 1))
            r.points.push_back(s);
    r.count = r.points.size();
    return r;
}

inline std::uint64_t osc_count(const Scheme& h, Ord a, Ord b, Level k = 0) {
    return osc(h, a, b, k).count;
}

// ---- the frontier partition ------------------------------------------------------

// Deterministic partition of omega placing an interval [l, 2l+k] into P_n for
// every pair (n, k): pairs are enumerated by n+k then n, each taking the
// interval starting at the current frontier.
inline std::uint64_t partition_lookup(std::uint64_t t) {
    std::uint64_t frontier = 0;
    for (std::uint64_t sum = 0;; ++sum)
        for (std::uint64_t n = 0; n <= sum; ++n) {
            std::uint64_t k = sum - n;
            std::uint64_t hi = 2 * frontier + k;  // interval [frontier, hi]
            if (t <= hi) return n;
            frontier = hi + 1;
        }
}

inline std::uint64_t color_o(const Scheme& h, Ord a, Ord b) {
    if (a == b) raise(Errc::BadOrder, "pair coloring needs distinct ordinals");
    return partition_lookup(osc_count(h, std::min(a, b), std::max(a, b)));
}

// ---- the rainbow refinement o* ------------------------------------------------------

// Finite map on a pairwise-incomparable domain of profile prefixes.  Decoded
// from an index by a self-delimiting code: read the base-16 digits of n (most
// significant first, empty for 0, missing digits read as 0); the first digit
// plus 1 is the domain size, then every sequence is a length (digit plus 2)
// followed by that many entries, then the value table row-major.  Prefixes of
// length below 2 are degenerate (every profile starts at 0), hence the offset.
struct SigmaMap {
    std::vector<std::vector<std::uint64_t>> domain;
    std::vector<std::vector<std::uint64_t>> values;  // values[i][j]
};

inline SigmaMap decode_sigma_map(std::uint64_t n) {
    std::vector<unsigned> digits;
    for (std::uint64_t v = n; v > 0; v /= 16) digits.push_back(unsigned(v % 16));
    std::reverse(digits.begin(), digits.end());
    std::size_t pos = 0;
    auto read = [&]() -> std::uint64_t { return pos < digits.size() ? digits[pos++] : 0; };

    std::size_t d = std::size_t(1 + read());
    std::vector<std::vector<std::uint64_t>> parsed;
    for (std::size_t e = 0; e < d; ++e) {
        std::size_t len = std::size_t(2 + read());
        std::vector<std::uint64_t> sigma(len);
        for (auto& v : sigma) v = read();
        parsed.push_back(std::move(sigma));
    }
    SigmaMap m;
    for (auto& sigma : parsed) {
        bool keep = true;
        for (auto& prev : m.domain) {
            std::size_t l = std::min(prev.size(), sigma.size());
            if (std::equal(prev.begin(), prev.begin() + long(l), sigma.begin())) {
                keep = false;  // comparable with an earlier entry: first wins
                break;
            }
        }
        if (keep) m.domain.push_back(sigma);
    }
    m.values.assign(m.domain.size(), std::vector<std::uint64_t>(m.domain.size(), 0));
    for (auto& row : m.values)
        for (auto& v : row) v = read();
    return m;
}

// The unique domain element extended by the profile of a, if any.
inline std::optional<std::size_t> sigma_match(const Scheme& h, const SigmaMap& m, Ord a) {
    for (std::size_t i = 0; i < m.domain.size(); ++i) {
        bool ok = true;
        for (std::size_t l = 0; l < m.domain[i].size(); ++l)
            if (profile_at(h, a, Level(l)) != m.domain[i][l]) {
                ok = false;
                break;
            }
        if (ok) return i;
    }
    return std::nullopt;
}

inline constexpr std::uint64_t kNoExtensionColor = 17;

inline std::uint64_t color_o_star(const Scheme& h, Ord a, Ord b) {
    if (a == b) raise(Errc::BadOrder, "pair coloring needs distinct ordinals");
    Ord lo = std::min(a, b), hi = std::max(a, b);
    SigmaMap m = decode_sigma_map(color_o(h, lo, hi));
    auto sa = sigma_match(h, m, lo);
    auto sb = sigma_match(h, m, hi);
    if (!sa || !sb) return kNoExtensionColor;
    return m.values[*sa][*sb];
}

// ---- the 2-bounded coloring -----------------------------------------------------

inline std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
    unsigned __int128 s = (unsigned __int128)x + y;
    unsigned __int128 v = s * (s + 1) / 2 + y;
    if (v > (unsigned __int128)UINT64_MAX) raise(Errc::DomainExceeded, "pairing overflow");
    return std::uint64_t(v);
}

struct BoundedColor {
    Ord beta;
    Level rho_level = 0;
    std::uint64_t a = 0;     // a profile value of the lower ordinal
    std::uint64_t code = 0;  // packed triple
};

// c(a,b) = psi(b, rho, |(a)_rho|-1) when the upper ordinal sits past piece 2,
// else psi(b, rho, |(a)_{rho-1}|-1); psi is the iterated Cantor pairing over
// (block/offset code of b, rho, a).
inline BoundedColor bounded_color_c(const Scheme& h, Ord a, Ord b) {
    if (!(a < b)) raise(Errc::BadOrder, "bounded coloring needs a < b");
    BoundedColor c;
    c.beta = b;
    c.rho_level = rho(h, a, b);
    c.a = xi(h, b, c.rho_level) > 2 ? kcard(h, a, c.rho_level) : kcard(h, a, c.rho_level - 1);
    c.code = cantor_pair(cantor_pair(cantor_pair(b.block, b.offset), std::uint64_t(c.rho_level)), c.a);
    return c;
}

// ---- entangled profile functions -------------------------------------------------

// Subset C^{k-1}_i of m_{k-1} \ r_k, encoded by the bits of i-1; position p of
// the base set is member iff bit p is set.  Indices past the power set wrap
// (only low bits matter for positions inside the base).
inline bool subset_code_member(std::int64_t index, std::uint64_t position) {
    mpz_class code(std::to_string(index - 1));
    return mpz_tstbit(code.get_mpz_t(), position) != 0;
}

inline void require_entangled_type(const TypeSpec& t, Level upto) {
    for (Level j = 1; j <= upto; ++j) {
        // n_j >= 2^{m_{j-1}} + 1, compared via bit length
        mpz_class nm1 = t.n(j) - 1;
        if (!t.level_fits(j - 1) ||
            mpz_sizeinbase(nm1.get_mpz_t(), 2) < t.m_u64(j - 1) + 1)
            raise(Errc::TypeTooSmall, "fan-out below the power set of the previous level");
    }
}

// f_a(k): zero at level 0, inside the root, and at piece 0; otherwise the
// piece index signed by membership of |(a)_{k-1}|-1 in the coded subset.
inline std::int64_t entangled_eval(const Scheme& h, Ord a, Level k) {
    require_entangled_type(h.type(), k);
    if (k == 0) return 0;
    std::int64_t x = xi(h, a, k);
    if (x <= 0) return 0;
    std::uint64_t prev = kcard(h, a, k - 1);
    std::uint64_t rk = h.type().r_u64(k);
    if (prev < rk) return -x;  // below the base set: in no coded subset
    return subset_code_member(x, prev - rk) ? x : -x;
}

// Lexicographic comparison of entangled profiles on levels [0, depth].
inline bool entangled_lex_less(const Scheme& h, Ord a, Ord b, Level depth) {
    for (Level k = 0; k <= depth; ++k) {
        std::int64_t va = entangled_eval(h, a, k), vb = entangled_eval(h, b, k);
        if (va != vb) return va < vb;
    }
    return false;
}

// ---- the coherent-tree bit function ----------------------------------------------

inline void require_suslin_type(const TypeSpec& t, Level upto) {
    for (Level j = 1; j <= upto; ++j) {
        mpz_class nm1 = t.n(j) - 1;
        mpz_class need = t.m(j - 1) - t.r(j);
        if (!need.fits_ulong_p() ||
            mpz_sizeinbase(nm1.get_mpz_t(), 2) < need.get_ui() + 1)
            raise(Errc::TypeTooSmall, "fan-out below the required function count");
    }
}

// f_beta(x) for x < beta: 1 on the chain block when the pieces at rho are
// (0, 1); a coded bit on the antichain block; 0 otherwise.  The partition's
// block 0 is the chain block.
inline int coherent_tree_eval(const Scheme& h, Ord beta, Ord x, const PartitionSpec& part) {
    if (!(x < beta)) raise(Errc::BadOrder, "tree functions evaluate below their index");
    Level l = rho(h, x, beta);
    require_suslin_type(h.type(), l);
    std::int64_t xx = xi(h, x, l);
    bool chain_block = part.classify(std::uint64_t(l)) == 0;
    if (xx != 0) return 0;
    if (chain_block) return xi(h, beta, l) == 1 ? 1 : 0;
    std::uint64_t pos = kcard(h, x, l) - h.type().r_u64(l);
    return subset_code_member(xi(h, beta, l), pos) ? 1 : 0;
}

}  // namespace schemeforge
