// Command-line front end: query schemes, export fragments, run the
// deterministic extension, derive the combinatorial structures, verify the
// invariant suites.  Exit codes: 0 ok, 1 check failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "schemeforge/harness.hpp"

using namespace schemeforge;

namespace {

struct GlobalOpts {
    std::string type_arg = "tau2";
    bool type_given = false;
    std::uint64_t bound = 0;  // 0: m_4 of the type
    std::uint64_t fuel = 10000;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out;
    std::string config;
};

Ord parse_ord(const std::string& s) {
    if (s.empty()) raise(Errc::IoError, "empty ordinal");
    if (s[0] != 'w') return Ord::fin(std::stoull(s));
    std::uint32_t block = 1;
    std::size_t pos = 1;
    if (pos < s.size() && s[pos] == '*') {
        std::size_t used = 0;
        block = std::uint32_t(std::stoul(s.substr(pos + 1), &used));
        pos += 1 + used;
    }
    std::uint64_t off = 0;
    if (pos < s.size()) {
        if (s[pos] != '+') raise(Errc::IoError, "bad ordinal syntax " + s);
        off = std::stoull(s.substr(pos + 1));
    }
    return Ord{block, off};
}

FinOrdSet parse_set(const std::string& csv) {
    std::vector<Ord> v;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) v.push_back(parse_ord(cur));
            cur.clear();
        } else if (!isspace(c)) {
            cur += c;
        }
    }
    return FinOrdSet::from(std::move(v));
}

PartitionSpec parse_partition(const std::string& s) {
    if (s == "trivial") return PartitionSpec::trivial();
    if (s.rfind("mod", 0) == 0) return PartitionSpec::mod(std::uint32_t(std::stoul(s.substr(3))));
    if (s.rfind("prefix", 0) == 0)
        return PartitionSpec::prefix_split(std::stoull(s.substr(6)));
    raise(Errc::IoError, "unknown partition " + s + " (trivial, modN, prefixN)");
}

void load_config(GlobalOpts& g) {
    if (g.config.empty()) return;
    json j = json::parse(read_text(g.config));
    if (j.contains("type") && !g.type_given) {
        if (j["type"].is_string())
            g.type_arg = j["type"].get<std::string>();
        else if (j["type"].contains("preset"))
            g.type_arg = j["type"]["preset"].get<std::string>();
        else {
            g.type_arg = g.config + "#type";  // structural: resolved from the config itself
        }
    }
    if (j.contains("bound") && g.bound == 0) g.bound = j["bound"].get<std::uint64_t>();
    if (j.contains("fuel")) g.fuel = j["fuel"].get<std::uint64_t>();
    if (j.contains("seed")) g.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("format")) g.format = j["format"].get<std::string>();
}

TypeSpec resolve_type(const GlobalOpts& g) {
    if (auto p = preset_by_name(g.type_arg)) return *p;
    std::string path = g.type_arg;
    std::string anchor;
    if (auto hash = path.find('#'); hash != std::string::npos) {
        anchor = path.substr(hash + 1);
        path = path.substr(0, hash);
    }
    json j = json::parse(read_text(path));
    return type_from_json(anchor.empty() ? j : j.at(anchor));
}

std::string cache_dir() {
    const char* env = std::getenv("SCHEME_FORGE_CACHE");
    return env ? std::string(env) : std::string();
}

// Writes to --out, else to the cache directory under a default name, else stdout.
void emit(const GlobalOpts& g, const std::string& text, const std::string& default_name) {
    if (!g.out.empty()) {
        write_text(g.out, text);
        std::cout << "wrote " << g.out << "\n";
        return;
    }
    std::string dir = cache_dir();
    if (!dir.empty() && !default_name.empty()) {
        std::filesystem::create_directories(dir);
        std::string path = dir + "/" + default_name;
        write_text(path, text);
        std::cout << "wrote " << path << "\n";
        return;
    }
    std::cout << text << "\n";
}

std::uint64_t effective_bound(const GlobalOpts& g, const TypeSpec& t) {
    return g.bound ? g.bound : t.m_u64(4);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scheme-forge: construction schemes over omega, their metric, "
                 "capturing structure, forcing extension and derived objects"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--type", g.type_arg, "type preset (tau2 tau4 tauE tauS) or a JSON file");
    app.add_option("--bound", g.bound, "fragment bound (default: m_4 of the type)");
    app.add_option("--fuel", g.fuel, "extension fuel (conditions)");
    app.add_option("--seed", g.seed, "seed for sampled checks");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out, "output path (default: cache dir or stdout)");
    app.add_option("--config", g.config, "JSON config with the same keys");

    // ---- type ----
    auto* type_cmd = app.add_subcommand("type", "validate or show a type");
    auto* type_validate = type_cmd->add_subcommand("validate", "check the type laws");
    auto* type_show = type_cmd->add_subcommand("show", "print the size/fan-out/root table");
    Level show_depth = 8;
    std::string show_partition;
    type_show->add_option("--depth", show_depth, "levels to print");
    type_show->add_option("--partition", show_partition, "report compatibility (trivial, modN, prefixN)");

    // ---- scheme ----
    auto* scheme_cmd = app.add_subcommand("scheme", "membership, levels, fragment export/import");
    std::string member_set;
    auto* scheme_member = scheme_cmd->add_subcommand("member", "is the set a member");
    scheme_member->add_option("--set", member_set, "comma list, e.g. 3,5")->required();
    Level levels_k = 1;
    auto* scheme_levels = scheme_cmd->add_subcommand("levels", "level sets below the bound");
    scheme_levels->add_option("--level", levels_k, "level k")->required();
    Level export_levels = 4;
    auto* scheme_export = scheme_cmd->add_subcommand("export", "fragment JSON");
    scheme_export->add_option("--levels", export_levels, "maximum level");
    std::string import_in;
    bool import_check = false;
    auto* scheme_import = scheme_cmd->add_subcommand("import", "load a fragment and summarize");
    scheme_import->add_option("--in", import_in, "fragment JSON path")->required();
    scheme_import->add_flag("--check", import_check, "compare all window queries against a live handle");

    // ---- metric ----
    auto* metric_cmd = app.add_subcommand("metric", "rho, delta, balls, CSV tables");
    std::string m_a, m_b;
    auto* metric_rho = metric_cmd->add_subcommand("rho", "separation level of a pair");
    metric_rho->add_option("a", m_a)->required();
    metric_rho->add_option("b", m_b)->required();
    auto* metric_delta = metric_cmd->add_subcommand("delta", "alignment level of a pair");
    metric_delta->add_option("a", m_a)->required();
    metric_delta->add_option("b", m_b)->required();
    Level ball_k = 0;
    auto* metric_ball = metric_cmd->add_subcommand("ball", "closure, profile and piece index");
    metric_ball->add_option("a", m_a)->required();
    metric_ball->add_option("k", ball_k)->required();
    auto* metric_table = metric_cmd->add_subcommand("table", "CSV tables (pairs and profiles)");

    // ---- capture ----
    auto* capture_cmd = app.add_subcommand("capture", "captured families, projections, brackets");
    std::string cap_set;
    std::size_t cap_n = 2;
    auto* capture_scan_cmd = capture_cmd->add_subcommand("scan", "captured n-subsets of a set");
    capture_scan_cmd->add_option("--set", cap_set)->required();
    capture_scan_cmd->add_option("--n", cap_n);
    auto* capture_pi = capture_cmd->add_subcommand("pi", "projection: captured levels");
    capture_pi->add_option("--set", cap_set)->required();
    capture_pi->add_option("--n", cap_n);
    auto* capture_bracket = capture_cmd->add_subcommand("bracket", "bracket image of captured pairs");
    capture_bracket->add_option("--set", cap_set)->required();

    // ---- extend ----
    auto* extend_cmd = app.add_subcommand("extend", "deterministic extension runs");
    std::string ext_requests;
    std::uint64_t ext_auto = 0;
    auto* extend_run = extend_cmd->add_subcommand("run", "serve requests, export the chain log");
    extend_run->add_option("--requests", ext_requests, "JSON array of requests");
    extend_run->add_option("--auto", ext_auto, "serve containments for the first N upper ordinals");
    std::string replay_log;
    auto* extend_replay = extend_cmd->add_subcommand("replay", "re-run a chain log, compare bytes");
    extend_replay->add_option("--log", replay_log)->required();

    // ---- derive ----
    auto* derive_cmd = app.add_subcommand("derive", "derived structures");
    std::string d_alpha, d_beta, d_xi;
    Level d_levels = 4;
    auto* derive_gap = derive_cmd->add_subcommand("gap", "tower fragment / pair data");
    derive_gap->add_option("--alpha", d_alpha)->required();
    derive_gap->add_option("--beta", d_beta);
    derive_gap->add_option("--levels", d_levels);
    bool d_jones = false;
    auto* derive_luzin = derive_cmd->add_subcommand("luzin", "almost-disjoint fragment / separator");
    derive_luzin->add_option("--alpha", d_alpha)->required();
    derive_luzin->add_option("--levels", d_levels);
    derive_luzin->add_flag("--jones", d_jones, "emit the separator of the initial part");
    std::string rep_poset = "chain", rep_embed;
    auto* derive_rep = derive_cmd->add_subcommand("rep", "representation of a finite order");
    derive_rep->add_option("--poset", rep_poset, "chain|antichain");
    derive_rep->add_option("--embed", rep_embed, "comma list of image ordinals")->required();
    derive_rep->add_option("--levels", d_levels);
    auto* derive_countryman = derive_cmd->add_subcommand("countryman", "pair comparison table");
    auto* derive_tree = derive_cmd->add_subcommand("tree", "profile node classifications");
    auto* derive_osc = derive_cmd->add_subcommand("osc", "oscillation of a pair or table");
    derive_osc->add_option("--alpha", d_alpha);
    derive_osc->add_option("--beta", d_beta);
    auto* derive_color = derive_cmd->add_subcommand("color", "pair coloring table (o, o*, c)");
    Level ent_depth = 2;
    auto* derive_entangled = derive_cmd->add_subcommand("entangled", "signed profile values");
    derive_entangled->add_option("--alpha", d_alpha)->required();
    derive_entangled->add_option("--depth", ent_depth);
    std::string sus_partition = "mod2";
    auto* derive_suslin = derive_cmd->add_subcommand("suslin-fn", "coherent tree bit");
    derive_suslin->add_option("--beta", d_beta)->required();
    derive_suslin->add_option("--xi", d_xi)->required();
    derive_suslin->add_option("--partition", sus_partition);
    Level ss_k = 0;
    auto* derive_sspace = derive_cmd->add_subcommand("sspace", "neighbourhood sets H, C, C_k");
    derive_sspace->add_option("--beta", d_beta)->required();
    derive_sspace->add_option("--k", ss_k);

    // ---- verify ----
    std::string verify_checks;
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    verify_cmd->add_option("--checks", verify_checks, "comma list (default: all)");

    // let --type/--bound/... appear after the subcommand as well
    std::function<void(CLI::App*)> allow_globals = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; }))
            allow_globals(sub);
        for (CLI::App* sub : a->get_subcommands(nullptr)) allow_globals(sub);
    };
    allow_globals(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        load_config(g);
        g.type_given = app.count("--type") > 0;

        // subcommand-specific default presets
        if (derive_entangled->parsed() && !g.type_given && g.config.empty()) g.type_arg = "tauE";
        if (derive_suslin->parsed() && !g.type_given && g.config.empty()) g.type_arg = "tauS";

        if (type_validate->parsed()) {
            try {
                TypeSpec t = resolve_type(g);
                for (Level k = 0; k <= 8; ++k) {  // touch the tail
                    try {
                        (void)t.m(k);
                    } catch (const SchemeError& e) {
                        if (e.code() == Errc::DomainExceeded) break;  // materialization cap
                        throw;
                    }
                }
                GoodnessReport rep = is_good(t);
                json out{{"valid", true},
                         {"good", rep.verdict == Verdict3::Yes
                                      ? "yes"
                                      : rep.verdict == Verdict3::No ? "no" : "undetermined"},
                         {"detail", rep.detail}};
                std::cout << out.dump(2) << "\n";
                return 0;
            } catch (const SchemeError& e) {
                std::cout << json{{"valid", false}, {"reason", e.what()}}.dump(2) << "\n";
                return 1;
            }
        }
        if (type_show->parsed()) {
            TypeSpec t = resolve_type(g);
            std::cout << "k\tm_k\tn_k\tr_k\n";
            for (Level k = 0; k <= show_depth; ++k) {
                std::cout << k << "\t" << t.m(k).get_str() << "\t"
                          << (k >= 1 ? t.n(k).get_str() : "-") << "\t"
                          << (k >= 1 ? t.r(k).get_str() : "-") << "\n";
            }
            GoodnessReport rep = is_good(t);
            std::cout << "good: "
                      << (rep.verdict == Verdict3::Yes ? "yes"
                                                       : rep.verdict == Verdict3::No ? "no" : "undetermined")
                      << " (" << rep.detail << ")\n";
            if (!show_partition.empty()) {
                CompatibilityReport c = partition_compatible(t, parse_partition(show_partition));
                std::cout << "partition " << show_partition << ": "
                          << (c.verdict == Verdict3::Yes
                                  ? "compatible"
                                  : c.verdict == Verdict3::No ? "incompatible" : "undetermined")
                          << " (" << c.detail << ")\n";
            }
            return 0;
        }

        TypeSpec t = resolve_type(g);
        Scheme h = omega_scheme(t);
        auto bound_of = [&]() { return effective_bound(g, t); };

        if (scheme_member->parsed()) {
            std::cout << (h.is_member(parse_set(member_set)) ? "true" : "false") << "\n";
            return 0;
        }
        if (scheme_levels->parsed()) {
            for (auto& F : h.level_sets(levels_k, Ord::fin(bound_of()))) std::cout << F.str() << "\n";
            return 0;
        }
        if (scheme_export->parsed()) {
            emit(g, fragment_export(h, Ord::fin(bound_of()), export_levels).dump(2),
                 "fragment-" + g.type_arg + "-" + std::to_string(bound_of()) + ".json");
            return 0;
        }
        if (scheme_import->parsed()) {
            std::string path = import_in;
            if (!std::filesystem::exists(path) && !cache_dir().empty())
                path = cache_dir() + "/" + import_in;
            json j = json::parse(read_text(path));
            FragmentView v = FragmentView::from_json(j);
            std::cout << "bound " << v.bound().str() << ", levels 0.." << v.max_level() << "\n";
            for (Level k = 0; k <= v.max_level(); ++k)
                std::cout << "level " << k << ": " << v.level_sets(k).size() << " member(s)\n";
            if (import_check) {
                TypeSpec ft = type_from_json(j.at("type"));
                Scheme live = omega_scheme(ft);
                for (Level k = 0; k <= v.max_level(); ++k)
                    if (v.level_sets(k) != live.level_sets(k, v.bound())) {
                        std::cout << "MISMATCH at level " << k << "\n";
                        return 1;
                    }
                std::cout << "fragment matches the live oracle\n";
            }
            return 0;
        }

        if (metric_rho->parsed()) {
            std::cout << rho(h, parse_ord(m_a), parse_ord(m_b)) << "\n";
            return 0;
        }
        if (metric_delta->parsed()) {
            Level d = delta(h, parse_ord(m_a), parse_ord(m_b));
            if (d == kLevelInf)
                std::cout << "inf\n";
            else
                std::cout << d << "\n";
            return 0;
        }
        if (metric_ball->parsed()) {
            BallRecord b = ball(h, parse_ord(m_a), ball_k);
            std::cout << json{{"set", set_to_json(b.set)}, {"card", b.card}, {"piece", b.piece}}.dump()
                      << "\n";
            return 0;
        }
        if (metric_table->parsed()) {
            emit(g, metric_pairs_csv(h, bound_of()), "metric-pairs-" + g.type_arg + ".csv");
            emit(g, metric_profile_csv(h, bound_of(), 4), "metric-profile-" + g.type_arg + ".csv");
            return 0;
        }

        if (capture_scan_cmd->parsed()) {
            std::cout << capture_records_json(captured_scan(h, parse_set(cap_set), cap_n)).dump(2)
                      << "\n";
            return 0;
        }
        if (capture_pi->parsed()) {
            json arr = json::array();
            for (Level l : pi_n(h, parse_set(cap_set), cap_n)) arr.push_back(l);
            std::cout << arr.dump() << "\n";
            return 0;
        }
        if (capture_bracket->parsed()) {
            std::cout << set_to_json(bracket_projection(h, parse_set(cap_set))).dump() << "\n";
            return 0;
        }

        if (extend_run->parsed()) {
            Extension ext(h, g.fuel);
            if (!ext_requests.empty()) {
                json arr = json::parse(read_text(ext_requests));
                for (auto& e : arr) ext.request(request_from_json(e));
            }
            for (std::uint64_t j = 0; j < ext_auto; ++j) ext.request(Request::contain(Ord{1, j}));
            json log = chain_log_export(ext, t);
            std::cout << "served " << ext.log().size() << " request(s), "
                      << ext.conditions().size() << " condition(s), fuel left " << ext.fuel_left()
                      << "\n";
            emit(g, log.dump(2), "chain-" + g.type_arg + ".json");
            return 0;
        }
        if (extend_replay->parsed()) {
            std::string original = read_text(replay_log);
            json log = json::parse(original);
            Extension ext = chain_replay(log, g.fuel);
            std::string replayed = chain_log_export(ext, type_from_json(log.at("type"))).dump(2);
            if (json::parse(original).dump(2) == replayed) {
                std::cout << "replay is byte-identical (" << ext.conditions().size()
                          << " conditions)\n";
                return 0;
            }
            std::cout << "replay DIVERGED\n";
            return 1;
        }

        if (derive_gap->parsed()) {
            if (!d_beta.empty()) {
                GapPairData d = gap_pair_data(h, parse_ord(d_alpha), parse_ord(d_beta), d_levels);
                json out{{"alpha", ord_to_json(d.alpha)},     {"beta", ord_to_json(d.beta)},
                         {"rho", d.rho_level},                {"L_a*R_b", set_to_json(d.la_rb)},
                         {"L_b*R_a", set_to_json(d.lb_ra)},   {"L_a-L_b", set_to_json(d.la_minus_lb)},
                         {"R_a-R_b", set_to_json(d.ra_minus_rb)}, {"chi0", d.chi0_compatible},
                         {"chi1", d.chi1_compatible},         {"exact", d.exact}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << gap_fragment_json(hausdorff_gap(h, parse_ord(d_alpha), d_levels)).dump(2)
                          << "\n";
            }
            return 0;
        }
        if (derive_luzin->parsed()) {
            LuzinFragment f = d_jones ? jones_separator(h, parse_ord(d_alpha), d_levels)
                                      : luzin_family(h, parse_ord(d_alpha), d_levels);
            std::cout << luzin_fragment_json(f).dump(2) << "\n";
            return 0;
        }
        if (derive_rep->parsed()) {
            FinOrdSet embed = parse_set(rep_embed);
            std::vector<Ord> phi(embed.begin(), embed.end());
            FinitePoset poset = rep_poset == "chain" ? FinitePoset::chain(phi.size())
                                                     : FinitePoset::antichain(phi.size());
            LuzinRep rep = luzin_representation(h, poset, phi, d_levels);
            json out = json::array();
            for (auto& T : rep.T) {
                json pts = json::array();
                for (auto& p : T) pts.push_back(json::array({p.k, p.a, p.b}));
                out.push_back(std::move(pts));
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (derive_countryman->parsed()) {
            CountrymanOrder co(h);
            std::ostringstream os;
            os << "alpha,beta,cmp,card_a,card_b,z\n";
            std::uint64_t B = bound_of();
            for (std::uint64_t a = 0; a < B; ++a)
                for (std::uint64_t b = a + 1; b < B; ++b) {
                    CountrymanTrace tr;
                    CmpResult c = co.cmp(Ord::fin(a), Ord::fin(b), &tr);
                    os << a << "," << b << "," << (c == CmpResult::Less ? "<" : ">") << ","
                       << tr.card_a << "," << tr.card_b << "," << tr.rho_level << "\n";
                }
            emit(g, os.str(), "countryman-" + g.type_arg + ".csv");
            return 0;
        }
        if (derive_tree->parsed()) {
            json out = json::array();
            for (std::uint64_t b = 0; b < bound_of(); ++b) {
                TreeNode n = aronszajn_node(h, Ord::fin(b), {});
                out.push_back(json{{"beta", b}, {"k", n.kf}, {"s", n.s}});
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (derive_osc->parsed()) {
            if (!d_alpha.empty() && !d_beta.empty()) {
                OscRecord r = osc(h, parse_ord(d_alpha), parse_ord(d_beta));
                json pts = json::array();
                for (Level p : r.points) pts.push_back(p);
                std::cout << json{{"count", r.count}, {"points", pts}}.dump() << "\n";
            } else {
                std::ostringstream os;
                os << "alpha,beta,osc\n";
                std::uint64_t B = bound_of();
                for (std::uint64_t a = 0; a < B; ++a)
                    for (std::uint64_t b = a + 1; b < B; ++b)
                        os << a << "," << b << "," << osc_count(h, Ord::fin(a), Ord::fin(b)) << "\n";
                emit(g, os.str(), "osc-" + g.type_arg + ".csv");
            }
            return 0;
        }
        if (derive_color->parsed()) {
            emit(g, coloring_csv(h, bound_of()), "color-" + g.type_arg + ".csv");
            return 0;
        }
        if (derive_entangled->parsed()) {
            Ord a = parse_ord(d_alpha);
            json vals = json::array();
            for (Level k = 0; k <= ent_depth; ++k) vals.push_back(entangled_eval(h, a, k));
            std::cout << vals.dump() << "\n";
            return 0;
        }
        if (derive_suslin->parsed()) {
            std::cout << coherent_tree_eval(h, parse_ord(d_beta), parse_ord(d_xi),
                                            parse_partition(sus_partition))
                      << "\n";
            return 0;
        }
        if (derive_sspace->parsed()) {
            SSpaceSets ss(h);
            Ord b = parse_ord(d_beta);
            json out{{"H", set_to_json(ss.H(b))},
                     {"C", set_to_json(ss.C(b))},
                     {"C_k", set_to_json(ss.Ck(b, ss_k))},
                     {"k", ss_k}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            std::vector<std::string> names;
            if (verify_checks.empty()) {
                names = check_names();
            } else {
                std::string cur;
                for (char c : verify_checks + ",") {
                    if (c == ',') {
                        if (!cur.empty()) names.push_back(cur);
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
            }
            CheckContext ctx = CheckContext::make(g.type_arg, g.bound, g.fuel, g.seed);
            auto reports = run_checks(names, ctx);
            bool all = true;
            for (auto& r : reports) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << r.params << "]";
                if (!r.pass) {
                    std::cout << " failures=" << r.failures;
                    all = false;
                }
                std::cout << "\n";
                for (auto& c : r.counterexamples) std::cout << "    counterexample: " << c << "\n";
            }
            std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
            return all ? 0 : 1;
        }

        std::cerr << "no action selected\n";
        return 2;
    } catch (const SchemeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
