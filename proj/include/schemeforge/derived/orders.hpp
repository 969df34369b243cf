#pragma once

#include <map>
#include <vector>

#include "schemeforge/metric.hpp"

namespace schemeforge {

// ---- the recursive linear order ----------------------------------------------

enum class CmpResult { Less, Greater, Equal };

struct CountrymanStep {
    Ord a, b;
    Level k = 0;        // Delta(a,b) - 1
    bool boundary_case; // compared piece indices at k+1 (versus recursing)
};

struct CountrymanTrace {
    std::vector<CountrymanStep> steps;
    Level rho_level = 0;            // z
    std::uint64_t card_a = 0;       // |(a)_z| - 1
    std::uint64_t card_b = 0;       // chain class key (card_a, card_b, z)
};

// a <_F b decided by comparing the least points where the Delta-1 closures
// separate; when the shared trace fills the next root the piece indices at
// Delta decide directly.  Memoized; the recursion strictly descends.
class CountrymanOrder {
public:
    explicit CountrymanOrder(Scheme h) : h_(std::move(h)) {}

    CmpResult cmp(Ord a, Ord b, CountrymanTrace* trace = nullptr) {
        if (trace) {
            trace->steps.clear();
            if (a != b) {
                trace->rho_level = rho(h_, a, b);
                trace->card_a = kcard(h_, a, trace->rho_level);
                trace->card_b = kcard(h_, b, trace->rho_level);
            }
        }
        if (a == b) return CmpResult::Equal;
        return less(a, b, trace) ? CmpResult::Less : CmpResult::Greater;
    }

    bool less(Ord a, Ord b, CountrymanTrace* trace = nullptr) {
        if (a == b) return false;
        auto it = memo_.find({a, b});
        if (it != memo_.end() && !trace) return it->second;
        Level k = delta(h_, a, b) - 1;
        FinOrdSet ca = h_.closure(a, k), cb = h_.closure(b, k);
        Ord sep_a = ca.set_minus(cb).min();
        Ord sep_b = cb.set_minus(ca).min();
        std::uint64_t shared = kcard(h_, sep_a, k);
        bool result;
        bool boundary = (shared == h_.type().r_u64(k + 1));
        if (boundary)
            result = xi(h_, a, k + 1) < xi(h_, b, k + 1);
        else
            result = less(sep_a, sep_b, trace);
        if (trace) trace->steps.push_back({a, b, k, boundary});
        memo_[{a, b}] = result;
        memo_[{b, a}] = !result;
        return result;
    }

private:
    Scheme h_;
    std::map<std::pair<Ord, Ord>, bool> memo_;
};

// ---- the special tree ----------------------------------------------------------

// A node is the distance profile of beta patched at finitely many points:
// f(x) = patch[x] if present, rho(x, beta) otherwise, with domain [0, beta].
struct TreeNode {
    Ord beta;
    std::map<Ord, std::uint64_t> patch;  // support below beta+1
    Level kf = 0;                        // bucket level
    std::uint64_t s = 0;                 // |(beta)_kf| - 1
};

inline std::uint64_t node_value(const Scheme& h, const TreeNode& node, Ord x) {
    auto it = node.patch.find(x);
    if (it != node.patch.end()) return it->second;
    return std::uint64_t(rho(h, x, node.beta));
}

// Bucket class: the least level whose closure swallows the patch support and
// dominates every value the node takes there.
inline std::pair<Level, std::uint64_t> aronszajn_classify(const Scheme& h, const TreeNode& node) {
    for (Level k = 0;; ++k) {
        FinOrdSet cl = h.closure(node.beta, k);
        bool ok = true;
        for (auto& [x, v] : node.patch)
            if (!cl.contains(x)) {
                ok = false;
                break;
            }
        if (ok)
            for (Ord x : cl)
                if (node_value(h, node, x) > std::uint64_t(k)) {
                    ok = false;
                    break;
                }
        if (ok) return {k, std::uint64_t(cl.size()) - 1};
    }
}

inline TreeNode aronszajn_node(const Scheme& h, Ord beta, std::map<Ord, std::uint64_t> patch) {
    for (auto& [x, v] : patch)
        if (beta < x) raise(Errc::BadOrder, "patch support must sit below the node domain");
    TreeNode node;
    node.beta = beta;
    node.patch = std::move(patch);
    auto [kf, s] = aronszajn_classify(h, node);
    node.kf = kf;
    node.s = s;
    return node;
}

// Tree order: one profile extends another when its domain is at least as long
// and they agree on the shorter domain.
inline bool node_extends(const Scheme& h, const TreeNode& lo, const TreeNode& hi) {
    if (hi.beta < lo.beta) return false;
    if (!lo.beta.finite()) raise(Errc::DomainExceeded, "node comparison needs finite domains");
    for (std::uint64_t v = 0; v <= lo.beta.offset; ++v) {
        Ord x = Ord::fin(v);
        if (node_value(h, lo, x) != node_value(h, hi, x)) return false;
    }
    return true;
}

}  // namespace schemeforge
