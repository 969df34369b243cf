#pragma once

#include <map>

#include "schemeforge/metric.hpp"

namespace schemeforge {

// The neighbourhood sets H(beta), C(beta), C_k(beta) used for the
// profile-space topology.  The recursion defining C is well-founded, so the
// sets are computed exactly on finite fragments.
class SSpaceSets {
public:
    explicit SSpaceSets(Scheme h) : h_(std::move(h)) {}

    // H(beta): the ordinals below beta whose separation and alignment levels
    // coincide.
    FinOrdSet H(Ord beta) {
        require_finite(beta);
        FinOrdSet out;
        for (std::uint64_t v = 0; v < beta.offset; ++v) {
            Ord a = Ord::fin(v);
            if (rho(h_, a, beta) == delta(h_, a, beta)) out.insert(a);
        }
        return out;
    }

    // C(beta): beta together with every a < beta reached through a member of
    // H(beta) that aligns with a strictly later than every other candidate.
    FinOrdSet C(Ord beta) {
        require_finite(beta);
        auto it = memo_.find(beta);
        if (it != memo_.end()) return it->second;
        FinOrdSet out{beta};
        FinOrdSet hb = H(beta);
        for (std::uint64_t v = 0; v < beta.offset; ++v) {
            Ord a = Ord::fin(v);
            for (Ord g : hb) {
                if (!C(g).contains(a)) continue;
                bool best = true;
                for (Ord x : hb)
                    if (x != g && delta(h_, a, g) <= delta(h_, a, x)) {
                        best = false;
                        break;
                    }
                if (best && delta(h_, a, g) <= delta(h_, a, beta)) best = false;
                if (best) {
                    out.insert(a);
                    break;
                }
            }
        }
        memo_[beta] = out;
        return out;
    }

    FinOrdSet Ck(Ord beta, Level k) {
        FinOrdSet out;
        for (Ord a : C(beta))
            if (delta(h_, a, beta) >= k) out.insert(a);
        return out;
    }

private:
    void require_finite(Ord beta) {
        if (!beta.finite()) raise(Errc::DomainExceeded, "neighbourhood sets need finite indices");
    }
    Scheme h_;
    std::map<Ord, FinOrdSet> memo_;
};

}  // namespace schemeforge
