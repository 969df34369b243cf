#pragma once

#include <optional>
#include <set>

#include "schemeforge/metric.hpp"

namespace schemeforge {

// Left/right tower sets of the pair-of-towers construction for 2-types:
// L_a = {2k + Xi_a(k)}, R_a = {2k + 1 - Xi_a(k)} over levels with Xi >= 0.
// A fragment lists the part below 2K+2; an optional level mask restricts to
// the sub-towers L^C/R^C.
struct GapFragment {
    Ord alpha;
    Level K = 0;
    FinOrdSet L, R;  // finite ordinals below 2K+2
    bool exact = true;
};

inline void require_two_type(const Scheme& h, Level upto) {
    if (!h.type().is_two_type(upto))
        raise(Errc::NotATwoType, "construction needs fan-out 2 through level " + std::to_string(upto));
}

inline GapFragment hausdorff_gap(const Scheme& h, Ord a, Level K,
                                 const std::set<Level>* level_mask = nullptr) {
    require_two_type(h, K);
    GapFragment g;
    g.alpha = a;
    g.K = K;
    for (Level k = 1; k <= K; ++k) {
        if (level_mask && !level_mask->count(k)) continue;
        std::int64_t x = xi(h, a, k);
        if (x < 0) continue;
        g.L.insert(Ord::fin(2 * std::uint64_t(k) + std::uint64_t(x)));
        g.R.insert(Ord::fin(2 * std::uint64_t(k) + 1 - std::uint64_t(x)));
    }
    return g;
}

// Pairwise intersection data of two tower pairs.  All four sets live below
// 2*rho(a,b)+2, so the fragment is provably complete once K reaches rho.
struct GapPairData {
    Ord alpha, beta;
    Level K = 0, rho_level = 0;
    FinOrdSet la_rb, lb_ra, la_minus_lb, ra_minus_rb;
    bool chi0_compatible = false;  // the four tower sets stay disjoint
    bool chi1_compatible = false;  // the pair meets crosswise
    bool exact = false;
};

inline GapPairData gap_pair_data(const Scheme& h, Ord a, Ord b, Level K) {
    if (!(a < b)) raise(Errc::BadOrder, "pair data needs a < b");
    GapPairData d;
    d.alpha = a;
    d.beta = b;
    d.K = K;
    d.rho_level = rho(h, a, b);
    d.exact = K >= d.rho_level;
    GapFragment ga = hausdorff_gap(h, a, K), gb = hausdorff_gap(h, b, K);
    d.la_rb = ga.L.set_intersection(gb.R);
    d.lb_ra = gb.L.set_intersection(ga.R);
    d.la_minus_lb = ga.L.set_minus(gb.L);
    d.ra_minus_rb = ga.R.set_minus(gb.R);
    d.chi0_compatible = ga.L.set_union(gb.L).set_intersection(ga.R.set_union(gb.R)).empty();
    d.chi1_compatible = !d.la_rb.empty() || !d.lb_ra.empty();
    return d;
}

}  // namespace schemeforge
