#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "schemeforge/capture.hpp"
#include "schemeforge/derived/colorings.hpp"
#include "schemeforge/derived/gaps.hpp"
#include "schemeforge/derived/luzin.hpp"
#include "schemeforge/extension.hpp"

namespace schemeforge {

using nlohmann::json;

// ---- ordinals -----------------------------------------------------------------

inline json ord_to_json(Ord a) {
    if (a.finite()) return json(a.offset);
    return json::array({a.block, a.offset});
}

inline Ord ord_from_json(const json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) return Ord::fin(j.get<std::uint64_t>());
    if (j.is_array() && j.size() == 2)
        return Ord{j[0].get<std::uint32_t>(), j[1].get<std::uint64_t>()};
    raise(Errc::IoError, "ordinal must be an integer or a [block, offset] pair");
}

inline json set_to_json(const FinOrdSet& s) {
    json out = json::array();
    for (Ord a : s) out.push_back(ord_to_json(a));
    return out;
}

inline FinOrdSet set_from_json(const json& j) {
    if (!j.is_array()) raise(Errc::IoError, "set must be an array");
    std::vector<Ord> v;
    for (auto& e : j) v.push_back(ord_from_json(e));
    return FinOrdSet::from(std::move(v));
}

// ---- types and partitions --------------------------------------------------------

inline json partition_to_json(const PartitionSpec& p) {
    switch (p.kind) {
        case PartitionSpec::Kind::Trivial: return json{{"kind", "trivial"}};
        case PartitionSpec::Kind::Mod: return json{{"kind", "mod"}, {"m", p.modulus}};
        case PartitionSpec::Kind::PrefixSplit:
            return json{{"kind", "prefix-split"}, {"end", p.prefix_end}};
    }
    return json{{"kind", "trivial"}};
}

inline PartitionSpec partition_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "trivial") return PartitionSpec::trivial();
    if (kind == "mod") return PartitionSpec::mod(j.at("m").get<std::uint32_t>());
    if (kind == "prefix-split") return PartitionSpec::prefix_split(j.at("end").get<std::uint64_t>());
    raise(Errc::IoError, "unknown partition kind " + kind);
}

inline json type_to_json(const TypeSpec& t) {
    if (!t.name().empty()) return json{{"preset", t.name()}};
    json prefix = json::array();
    for (Level k = 1; k <= t.prefix_levels(); ++k)
        prefix.push_back(json::array({t.n(k).get_str(), t.r(k).get_str()}));
    json tail;
    switch (t.tail().kind) {
        case TailRule::Kind::None: tail = json{{"kind", "none"}}; break;
        case TailRule::Kind::FairR:
            tail = json{{"kind", "fair"},
                        {"n", t.tail().const_n.get_str()},
                        {"partition", partition_to_json(t.tail().fairness)}};
            break;
        case TailRule::Kind::ConstNR:
            tail = json{{"kind", "const"},
                        {"n", t.tail().const_n.get_str()},
                        {"r", t.tail().const_r.get_str()}};
            break;
        case TailRule::Kind::GrowthPow: tail = json{{"kind", "growth-pow"}}; break;
        case TailRule::Kind::GrowthPowMinusR: tail = json{{"kind", "growth-pow-minus-r"}}; break;
    }
    return json{{"prefix", prefix}, {"tail", tail}};
}

inline TypeSpec type_from_json(const json& j) {
    if (j.is_string()) {
        auto p = preset_by_name(j.get<std::string>());
        if (!p) raise(Errc::IoError, "unknown preset " + j.get<std::string>());
        return *p;
    }
    if (j.contains("preset")) {
        auto p = preset_by_name(j.at("preset").get<std::string>());
        if (!p) raise(Errc::IoError, "unknown preset " + j.at("preset").get<std::string>());
        return *p;
    }
    std::vector<TypeSpec::LevelRule> prefix;
    if (j.contains("prefix"))
        for (auto& e : j.at("prefix"))
            prefix.push_back({mpz_class(e.at(0).get<std::string>()),
                              mpz_class(e.at(1).get<std::string>())});
    TailRule tail = TailRule::none();
    if (j.contains("tail")) {
        const json& tj = j.at("tail");
        std::string kind = tj.at("kind").get<std::string>();
        if (kind == "none") {
            tail = TailRule::none();
        } else if (kind == "fair") {
            PartitionSpec part = tj.contains("partition") ? partition_from_json(tj.at("partition"))
                                                          : PartitionSpec::trivial();
            tail = TailRule::fair(mpz_class(tj.at("n").get<std::string>()), part);
        } else if (kind == "const") {
            tail = TailRule::constant(mpz_class(tj.at("n").get<std::string>()),
                                      mpz_class(tj.at("r").get<std::string>()));
        } else if (kind == "growth-pow") {
            tail = TailRule::growth_pow();
        } else if (kind == "growth-pow-minus-r") {
            tail = TailRule::growth_pow_minus_r();
        } else {
            raise(Errc::IoError, "unknown tail kind " + kind);
        }
    }
    return TypeSpec::make(std::move(prefix), tail);
}

// ---- scheme fragments ----------------------------------------------------------------

inline json fragment_export(const Scheme& h, Ord bound, Level max_level) {
    json levels = json::object();
    for (Level k = 0; k <= max_level; ++k) {
        json arr = json::array();
        for (const FinOrdSet& F : h.level_sets(k, bound)) arr.push_back(set_to_json(F));
        levels[std::to_string(k)] = std::move(arr);
    }
    return json{{"type", type_to_json(h.type())},
                {"bound", ord_to_json(bound)},
                {"levels", std::move(levels)}};
}

// Answers queries from exported data alone, inside the window it covers.
class FragmentView {
public:
    static FragmentView from_json(const json& j) {
        FragmentView v;
        v.bound_ = ord_from_json(j.at("bound"));
        for (auto& [key, arr] : j.at("levels").items()) {
            Level k = Level(std::stol(key));
            for (auto& e : arr) v.levels_[k].push_back(set_from_json(e));
            v.max_level_ = std::max(v.max_level_, k);
        }
        return v;
    }

    Ord bound() const { return bound_; }
    Level max_level() const { return max_level_; }

    std::vector<FinOrdSet> level_sets(Level k) const {
        auto it = levels_.find(k);
        return it == levels_.end() ? std::vector<FinOrdSet>{} : it->second;
    }

    bool is_member(const FinOrdSet& F) const {
        for (auto& [k, sets] : levels_)
            for (auto& G : sets)
                if (F == G) return true;
        return false;
    }

    FinOrdSet closure(Ord a, Level k) const {
        for (const FinOrdSet& F : level_sets(k))
            if (F.contains(a)) return F.upto(a);
        raise(Errc::DomainExceeded, "ordinal not covered by the fragment at that level");
    }

    Level rho(Ord a, Ord b) const {
        if (a == b) return 0;
        for (Level k = 1; k <= max_level_; ++k)
            for (const FinOrdSet& F : level_sets(k))
                if (F.contains(a) && F.contains(b)) return k;
        raise(Errc::DomainExceeded, "pair not joined inside the fragment");
    }

    Level delta(Ord a, Ord b) const {
        if (a == b) return kLevelInf;
        Level cap = rho(a, b);
        for (Level k = 0; k <= cap; ++k)
            if (closure(a, k).size() != closure(b, k).size()) return k;
        raise(Errc::DomainExceeded, "profiles agree through the fragment window");
    }

private:
    Ord bound_;
    Level max_level_ = 0;
    std::map<Level, std::vector<FinOrdSet>> levels_;
};

// ---- chain logs -------------------------------------------------------------------

inline json request_to_json(const Request& r) {
    json j{{"op", request_kind_name(r.kind)}};
    if (r.kind != Request::Kind::IncludeF) j["alpha"] = ord_to_json(r.alpha);
    if (r.kind != Request::Kind::Contain) j["set"] = set_to_json(r.set);
    return j;
}

inline Request request_from_json(const json& j) {
    std::string op = j.at("op").get<std::string>();
    if (op == "contain") return Request::contain(ord_from_json(j.at("alpha")));
    if (op == "include") return Request::include(set_from_json(j.at("set")));
    if (op == "ih1")
        return Request::ih1(ord_from_json(j.at("alpha")), set_from_json(j.at("set")));
    raise(Errc::IoError, "unknown request op " + op);
}

inline json chain_log_export(const Extension& ext, const TypeSpec& type) {
    json reqs = json::array();
    for (const Request& r : ext.log()) reqs.push_back(request_to_json(r));
    json conds = json::array();
    for (const Condition& c : ext.conditions()) conds.push_back(set_to_json(c.set));
    return json{{"type", type_to_json(type)},
                {"gamma_blocks", ext.gamma().block},
                {"requests", std::move(reqs)},
                {"conditions", std::move(conds)}};
}

// Re-runs the logged requests on a fresh chain tower of the same type.
inline Extension chain_replay(const json& log, std::uint64_t fuel) {
    TypeSpec t = type_from_json(log.at("type"));
    std::uint32_t blocks = log.at("gamma_blocks").get<std::uint32_t>();
    if (blocks < 1) raise(Errc::IoError, "chain log must extend at least omega");
    Scheme ground = omega_scheme(t);
    std::vector<Extension> tower;
    for (std::uint32_t b = 1; b < blocks; ++b) {
        tower.emplace_back(ground, fuel);
        ground = tower.back().scheme();
    }
    Extension ext(ground, fuel);
    for (auto& e : log.at("requests")) ext.request(request_from_json(e));
    return ext;
}

// ---- CSV tables --------------------------------------------------------------------

inline std::string metric_pairs_csv(const Scheme& h, std::uint64_t bound) {
    std::ostringstream os;
    os << "alpha,beta,rho,delta\n";
    for (std::uint64_t a = 0; a < bound; ++a)
        for (std::uint64_t b = a + 1; b < bound; ++b)
            os << a << "," << b << "," << rho(h, Ord::fin(a), Ord::fin(b)) << ","
               << delta(h, Ord::fin(a), Ord::fin(b)) << "\n";
    return os.str();
}

inline std::string metric_profile_csv(const Scheme& h, std::uint64_t bound, Level max_level) {
    std::ostringstream os;
    os << "alpha,k,card,xi\n";
    for (std::uint64_t a = 0; a < bound; ++a)
        for (Level k = 0; k <= max_level; ++k)
            os << a << "," << k << "," << kcard(h, Ord::fin(a), k) << "," << xi(h, Ord::fin(a), k)
               << "\n";
    return os.str();
}

inline std::string coloring_csv(const Scheme& h, std::uint64_t bound) {
    std::ostringstream os;
    os << "alpha,beta,o,o_star,c\n";
    for (std::uint64_t a = 0; a < bound; ++a)
        for (std::uint64_t b = a + 1; b < bound; ++b)
            os << a << "," << b << "," << color_o(h, Ord::fin(a), Ord::fin(b)) << ","
               << color_o_star(h, Ord::fin(a), Ord::fin(b)) << ","
               << bounded_color_c(h, Ord::fin(a), Ord::fin(b)).code << "\n";
    return os.str();
}

// ---- misc records ---------------------------------------------------------------------

inline json capture_records_json(const std::vector<CaptureRecord>& recs) {
    json out = json::array();
    for (auto& r : recs) {
        json fam = json::array();
        for (auto& F : r.family) fam.push_back(set_to_json(F));
        out.push_back(json{{"family", std::move(fam)},
                           {"level", r.level},
                           {"witness", set_to_json(r.witness)},
                           {"fully_captured", r.fully_captured}});
    }
    return out;
}

inline json gap_fragment_json(const GapFragment& g) {
    return json{{"alpha", ord_to_json(g.alpha)},
                {"levels", g.K},
                {"L", set_to_json(g.L)},
                {"R", set_to_json(g.R)},
                {"exact", g.exact}};
}

inline json luzin_fragment_json(const LuzinFragment& f) {
    json pts = json::array();
    for (auto& p : f.points) pts.push_back(json::array({p.k, p.a, p.b}));
    return json{{"alpha", ord_to_json(f.alpha)}, {"levels", f.K}, {"points", std::move(pts)}};
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::IoError, "cannot open " + path);
    out << text;
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::IoError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace schemeforge
