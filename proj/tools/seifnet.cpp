// seifnet — command-line front end for the Seifert surgery engine.
// All numbers printed here come from library operations; the CLI only
// formats them.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "seifnet/network.hpp"
#include "seifnet/verify.hpp"

using namespace seifnet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

// Exact integer or r/s fraction; floats are rejected.
Fraction parse_fraction(const std::string& text) {
    auto parse_int = [](const std::string& s) -> Int {
        if (s.empty()) throw std::invalid_argument("empty number in '" + s + "'");
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument("'" + s + "' is not an exact integer");
        return Int(v);
    };
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Fraction(parse_int(text));
    return Fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Int parse_integer(const std::string& text) {
    Fraction f = parse_fraction(text);
    if (!f.is_integer()) throw std::invalid_argument("'" + text + "' is not an integer");
    return f.num();
}

// Registered seiferter names: c_mu, s_-3, s_2, c, c^M.
SeiferterDesc parse_seiferter(const std::string& name) {
    if (name == "c_mu") return basic_seiferter_data(trefoil(), BasicSeiferterKind::CMu);
    if (name == "s_-3") return basic_seiferter_data(trefoil(), BasicSeiferterKind::SP);
    if (name == "s_2") return basic_seiferter_data(trefoil(), BasicSeiferterKind::SQ);
    if (name == "c") return seiferter_c();
    if (name.rfind("c^", 0) == 0) return cm_family(parse_integer(name.substr(2)));
    throw std::invalid_argument("unknown seiferter '" + name +
                                "' (expected c_mu, s_-3, s_2, c, or c^M)");
}

void note_m_minus_2(std::ostream& out, Int m) {
    if (m == Int(-2))
        out << "note: no hyperbolic seiferter in this family covers m = -2; whether a\n"
               "      hyperbolic knot with successive surgeries -2,-1,0 arises from the\n"
               "      trefoil line is an open question this tool does not answer.\n";
}

nlohmann::json triple_json(const OrbifoldTriple& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (Int i : t.indices()) arr.push_back(i.value());
    return arr;
}

int cmd_surgery(Int p, Int q, const std::string& slope_text, bool json) {
    TorusKnot k(p, q);
    Fraction slope = parse_fraction(slope_text);
    MoserResult res = moser_classify(k, slope);
    if (json) {
        nlohmann::json j;
        j["knot"] = k.to_string();
        j["slope"] = slope.to_string();
        j["orbifold"] = triple_json(res.triple);
        j["class"] = res.cls.tag();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << k.to_string() << "(" << slope.to_string() << "): orbifold "
                  << res.triple.to_string() << ", " << res.cls.to_string() << "\n";
    }
    return kExitOk;
}

nlohmann::json knm_json(const KnmReport& rep, const std::optional<std::pair<Int, Int>>& witness,
                        Int bound) {
    nlohmann::json j;
    j["m"] = rep.m.value();
    j["n"] = rep.n.value();
    j["surgeries"] = nlohmann::json::array();
    for (int i = 0; i < 3; ++i) {
        nlohmann::json row;
        row["slope"] = rep.slopes[i].value();
        row["orbifold"] = triple_json(rep.triples[i]);
        row["class"] = rep.classes[i].tag();
        j["surgeries"].push_back(row);
    }
    j["hyperbolic"] = rep.hyperbolic;
    j["three_small_sfs"] = three_successive_check(rep);
    if (rep.name) j["name"] = rep.name->to_string();
    j["torus_knot_witness"] =
        witness ? nlohmann::json(witness->first.value()) : nlohmann::json(nullptr);
    j["torus_search_bound"] = bound.value();
    return j;
}

int cmd_knm(Int m, Int n, Int bound, bool json, const std::string& grid) {
    auto run_one = [&](Int mm, Int nn, std::ostream& out) {
        KnmReport rep = knm_report(mm, nn);
        Int d = mm + Int(1) + nn * (mm + Int(1)) * (mm + Int(1));
        std::optional<std::pair<Int, Int>> witness = torus_knot_exclusion(rep.triples, d, bound);
        if (json) {
            std::cout << knm_json(rep, witness, bound).dump(2) << "\n";
            return;
        }
        out << "knot: " << (rep.name ? rep.name->to_string() : "twist(T(-3,2); c^" +
                                                                   to_string(mm) + "; " +
                                                                   to_string(nn) + ")")
            << "\n";
        for (int i = 0; i < 3; ++i)
            out << "  slope " << to_string(rep.slopes[i]) << ": orbifold "
                << rep.triples[i].to_string() << ", " << rep.classes[i].to_string() << "\n";
        out << "  hyperbolic: " << (rep.hyperbolic ? "yes" : "no")
            << "; three small Seifert fibered surgeries: "
            << (three_successive_check(rep) ? "yes" : "no") << "\n";
        if (witness)
            out << "  torus-knot match within bound " << to_string(bound) << ": T("
                << to_string(witness->first) << "," << to_string(witness->second) << ")\n";
        else
            out << "  no torus-knot match up to bound " << to_string(bound) << "\n";
        note_m_minus_2(out, mm);
    };
    if (grid.empty()) {
        run_one(m, n, std::cout);
        return kExitOk;
    }
    // --grid mlo:mhi,nlo:nhi
    std::size_t comma = grid.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--grid expects mlo:mhi,nlo:nhi");
    auto parse_range = [](const std::string& s) {
        std::size_t colon = s.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--grid expects mlo:mhi,nlo:nhi");
        return std::make_pair(parse_integer(s.substr(0, colon)),
                              parse_integer(s.substr(colon + 1)));
    };
    auto [mlo, mhi] = parse_range(grid.substr(0, comma));
    auto [nlo, nhi] = parse_range(grid.substr(comma + 1));
    for (Int mm = mlo; mm <= mhi; mm += 1)
        for (Int nn = nlo; nn <= nhi; nn += 1) {
            if (!json) std::cout << "== (m,n) = (" << to_string(mm) << "," << to_string(nn) << ")\n";
            run_one(mm, nn, std::cout);
        }
    return kExitOk;
}

int cmd_twist(Int slope, const std::string& seiferter, Int n, bool json) {
    SeiferterDesc s = parse_seiferter(seiferter);
    SurgeryVertex v{KnotDesc(trefoil()), Fraction(slope)};
    if (!s.valid_at(v))
        throw std::invalid_argument(s.name + " is not a seiferter for (T(-3,2), " +
                                    to_string(slope) + "); it acts at other slopes");
    SurgeryVertex w = twist(v, s, n);
    std::optional<NamedKnot> name = resolve_name(w);
    if (name) w.knot = KnotDesc(*name);
    OrbifoldTriple triple = s.preserves_knot
                                ? moser_classify(trefoil(), w.slope).triple
                                : triple_after_twist(s, slope, n);
    SfsClass cls = classify_triple(triple);
    if (json) {
        nlohmann::json j;
        j["vertex"] = w.to_string();
        j["knot"] = w.knot.to_string();
        j["slope"] = w.slope.num().value();
        j["orbifold"] = triple_json(triple);
        j["class"] = cls.tag();
        j["identity_known"] = name.has_value() || w.knot.as_torus() != nullptr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << v.to_string() << " --[" << s.name << ", " << to_string(n) << " twists]--> "
                  << w.to_string() << "\n";
        std::cout << "  orbifold " << triple.to_string() << ", " << cls.to_string() << "\n";
        if (!name && !w.knot.as_torus())
            std::cout << "  (knot identity beyond the twist description unknown)\n";
    }
    return kExitOk;
}

int cmd_pairs(Int m, bool json) {
    using P = PairCurve;
    const std::vector<P> curves = {P::T, P::CMu, P::SM3, P::S2, P::C1, P::C2, P::C3};
    nlohmann::json j;
    if (!json) std::cout << "pairwise linking numbers at m = " << to_string(m) << ":\n";
    nlohmann::json jlk = nlohmann::json::array();
    for (std::size_t a = 0; a < curves.size(); ++a)
        for (std::size_t b = a + 1; b < curves.size(); ++b) {
            std::string label =
                "lk(" + to_string(curves[a]) + ", " + to_string(curves[b]) + ")";
            std::string value;
            try {
                value = to_string(pair_lk(m, curves[a], curves[b]));
            } catch (const excluded_pair_error&) {
                value = "excluded";
            } catch (const std::invalid_argument&) {
                continue; // not tabulated
            }
            if (json) {
                nlohmann::json row;
                row["pair"] = label;
                row["value"] = value;
                jlk.push_back(row);
            } else {
                std::cout << "  " << label << " = " << value << "\n";
            }
        }
    j["linking"] = jlk;

    nlohmann::json jfam = nlohmann::json::array();
    if (!json) std::cout << "pair families at m = " << to_string(m) << ":\n";
    for (PairFamily f : all_pair_families) {
        std::string name = family_name(f, m);
        AnnularPairStatus st = annular_pair_status(f, m);
        std::string triple;
        if (family_defined_at(f, m)) {
            auto t = family_lk_triple(f, m);
            triple = "(" + to_string(t[0]) + "," + to_string(t[1]) + "," + to_string(t[2]) + ")";
        }
        if (json) {
            nlohmann::json row;
            row["family"] = name;
            row["status"] = to_string(st);
            if (!triple.empty()) row["lk_triple"] = triple;
            jfam.push_back(row);
        } else {
            std::cout << "  " << name << " lk-triple " << (triple.empty() ? "-" : triple) << ": "
                      << to_string(st) << "\n";
        }
    }
    j["families"] = jfam;

    nlohmann::json jsame = nlohmann::json::array();
    for (PairFamily f : same_lk_filter(m)) jsame.push_back(family_name(f, m));
    j["equal_lk"] = jsame;
    if (!json) {
        std::cout << "equal |lk| with the knot: ";
        if (jsame.empty()) std::cout << "(none)";
        for (const auto& s : jsame) std::cout << s.get<std::string>() << " ";
        std::cout << "\n";
    }

    nlohmann::json jcand = nlohmann::json::array();
    for (const AnnularCandidate& c : basic_annular_candidates(m)) {
        nlohmann::json row;
        row["family"] = family_name(c.family, m);
        row["rejected"] = c.rejected;
        if (c.rejected) row["reason"] = c.reason;
        jcand.push_back(row);
        if (!json)
            std::cout << "basic annular candidate: " << family_name(c.family, m)
                      << (c.rejected ? " (rejected: " + c.reason + ")" : "") << "\n";
    }
    j["basic_candidates"] = jcand;

    std::optional<bool> hs = has_hyperbolic_seiferter(m);
    j["hyperbolic_seiferter"] = hs ? nlohmann::json(*hs) : nlohmann::json("unknown");
    if (!json && !hs)
        std::cout << "no hyperbolic seiferter is known at m = -4; six hyperbolic annular"
                     " pairs exist\n";

    if (m == Int(-5) || m == Int(-7)) {
        std::optional<bool> cmu_c1 = cmu_c1_pair_annular(m);
        j["cmu_c1_annular"] = *cmu_c1;
        if (!json)
            std::cout << "pair {c_mu, c_1^" << to_string(m) << "}: "
                      << (*cmu_c1 ? "annular (the curves form the (2,-4) torus link)"
                                  : "not annular (the curves form a Whitehead link)")
                      << "\n";
        nlohmann::json jtb = nlohmann::json::array();
        if (!json)
            std::cout << "lens-slope pair families (two-bridge links, cable parameter p):\n";
        struct Row {
            const char* label;
            Fraction (*fraction)(Int);
        };
        for (const Row& row : {Row{"{s_-3, c_2^m}", pair_two_bridge_sm3_c2},
                               Row{"{s_2, c_3^m}", pair_two_bridge_s2_c3}}) {
            std::string window;
            for (Int p = -10; p <= 10; p += 1)
                if (two_bridge_is_torus_link(TwoBridge(row.fraction(p))))
                    window += (window.empty() ? "" : ",") + to_string(p);
            if (json) {
                nlohmann::json e;
                e["family"] = row.label;
                e["torus_link_p"] = window;
                jtb.push_back(e);
            } else {
                std::cout << "  " << row.label << ": annular (torus two-bridge link) exactly for p in {"
                          << window << "} within [-10,10]\n";
            }
        }
        j["lens_slope_pairs"] = jtb;
    }

    if (json) std::cout << j.dump(2) << "\n";
    else note_m_minus_2(std::cout, m);
    return kExitOk;
}

int cmd_kp(Int p, bool json) {
    KpReport rep = kp_report(p);
    bool excluded = ps_construction_excluded(p);
    if (json) {
        nlohmann::json j;
        j["vertex"] = rep.vertex.to_string();
        j["orbifold"] = triple_json(rep.triple);
        j["hyperbolic"] = rep.hyperbolic;
        j["genus_one"] = rep.genus_one;
        j["ps_construction_excluded"] = excluded;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.vertex.to_string() << ": orbifold " << rep.triple.to_string() << "\n";
        std::cout << "  hyperbolic: " << (rep.hyperbolic ? "yes" : "no")
                  << "; genus one: " << (rep.genus_one ? "yes" : "no") << "\n";
        std::cout << "  arises from the primitive/Seifert-fibered construction: "
                  << (excluded ? "no" : "possibly (p = 0 gives the torus-knot vertex)") << "\n";
    }
    return kExitOk;
}

int cmd_network(const std::string& preset, Int m, Int radius, bool dot, bool json,
                const std::string& out_path, const std::string& config_path,
                const std::vector<std::string>& seed_args,
                const std::vector<std::string>& seiferter_args) {
    std::string preset_name = preset;
    Int mm = m, rr = radius;
    std::string format = dot ? "dot" : (json ? "json" : "summary");
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot open config file " + config_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config line is not key=value: " + line);
            std::string key = line.substr(0, eq), value = line.substr(eq + 1);
            if (key == "preset") preset_name = value;
            else if (key == "m") mm = parse_integer(value);
            else if (key == "radius") rr = parse_integer(value);
            else if (key == "format") format = value;
            else throw std::invalid_argument("unknown config key: " + key);
        }
    }
    NetworkGraph g;
    if (!seed_args.empty() || !seiferter_args.empty()) {
        // custom subgraph: trefoil seeds at the given slopes
        if (seed_args.empty() || seiferter_args.empty())
            throw std::invalid_argument("custom networks need both --seed and --seiferter");
        std::vector<SurgeryVertex> seeds;
        for (const std::string& s : seed_args)
            seeds.push_back({KnotDesc(trefoil()), Fraction(parse_integer(s))});
        std::vector<SeiferterDesc> seiferters;
        for (const std::string& s : seiferter_args) seiferters.push_back(parse_seiferter(s));
        g = build(seeds, seiferters, rr);
    } else if (preset_name == "trefoil") {
        g = preset_trefoil_neighborhood(rr);
    } else if (preset_name == "cm") {
        g = preset_cm_lines(mm, rr);
    } else {
        throw std::invalid_argument("unknown preset '" + preset_name + "' (trefoil or cm)");
    }

    std::string text;
    if (format == "dot") text = export_dot(g);
    else if (format == "json") text = export_json(g);
    else {
        std::ostringstream os;
        os << "vertices: " << g.vertices.size() << ", edges: " << g.edges.size() << "\n";
        for (const NetworkVertex& v : g.vertices)
            os << "  " << v.label() << "  "
               << (v.orbifold ? v.orbifold->to_string() : std::string("-")) << "  "
               << v.cls.to_string() << (v.frontier ? "  [frontier]" : "")
               << (v.identity_known ? "" : "  [identity unknown]") << "\n";
        for (const std::string& w : g.warnings) os << "warning: " << w << "\n";
        text = os.str();
    }
    if (out_path.empty()) std::cout << text;
    else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << text;
    }
    return kExitOk;
}

int cmd_verify(const std::string& filter, bool json) {
    std::vector<ClaimResult> results = run_claims(filter);
    bool all_pass = true;
    nlohmann::json j = nlohmann::json::array();
    for (const ClaimResult& r : results) {
        all_pass = all_pass && r.pass;
        if (json) {
            nlohmann::json row;
            row["id"] = r.id;
            row["description"] = r.description;
            row["computed"] = r.computed;
            row["expected"] = r.expected;
            row["pass"] = r.pass;
            j.push_back(row);
        } else {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.description
                      << " — computed " << r.computed << ", expected " << r.expected << "\n";
        }
    }
    if (json) std::cout << j.dump(2) << "\n";
    else std::cout << (all_pass ? "all claims pass" : "some claims FAILED") << "\n";
    return all_pass ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seifert surgery calculator for the trefoil twist neighborhood"};
    app.require_subcommand(1);

    std::string arg_p, arg_q, arg_slope, arg_m, arg_n, arg_grid, arg_bound = "100";
    std::string arg_seiferter, arg_filter, arg_preset = "trefoil", arg_radius = "2";
    std::string arg_out, arg_config;
    bool flag_json = false, flag_dot = false;

    CLI::App* surgery = app.add_subcommand("surgery", "classify r/s surgery on a torus knot");
    surgery->add_option("p", arg_p, "torus knot parameter p")->required();
    surgery->add_option("q", arg_q, "torus knot parameter q")->required();
    surgery->add_option("--slope", arg_slope, "surgery slope r or r/s")->required();
    surgery->add_flag("--json", flag_json, "machine-readable output");

    CLI::App* knm = app.add_subcommand(
        "knm", "surgeries on the n-twist of the trefoil along c^m");
    knm->add_option("m", arg_m, "seiferter superscript m (omit with --grid)");
    knm->add_option("n", arg_n, "twist count n (omit with --grid)");
    knm->add_option("--bound", arg_bound, "torus-knot search bound (default 100)");
    knm->add_option("--grid", arg_grid, "sweep mlo:mhi,nlo:nhi instead of a single (m,n)");
    knm->add_flag("--json", flag_json, "machine-readable output");

    CLI::App* twist_cmd = app.add_subcommand("twist", "twist a trefoil vertex along a seiferter");
    twist_cmd->add_option("slope", arg_m, "surgery slope of the trefoil vertex")->required();
    twist_cmd->add_option("seiferter", arg_seiferter, "c_mu, s_-3, s_2, c, or c^M")->required();
    twist_cmd->add_option("n", arg_n, "twist count")->required();
    twist_cmd->add_flag("--json", flag_json, "machine-readable output");

    CLI::App* pairs = app.add_subcommand("pairs", "linking tables and annular-pair filters at m");
    pairs->add_option("m", arg_m, "surgery slope m")->required();
    pairs->add_flag("--json", flag_json, "machine-readable output");

    CLI::App* kp = app.add_subcommand("kp", "the genus-one family vertex (K_p, -1)");
    kp->add_option("p", arg_p, "twist count p along c")->required();
    kp->add_flag("--json", flag_json, "machine-readable output");

    std::vector<std::string> arg_seeds, arg_seiferters;
    CLI::App* network = app.add_subcommand("network", "build and export a network subgraph");
    network->add_option("--preset", arg_preset, "trefoil (default) or cm");
    network->add_option("--m", arg_m, "base slope for the cm preset (default 0)");
    network->add_option("--radius", arg_radius, "twist radius (default 2)");
    network->add_option("--seed", arg_seeds, "trefoil seed slope (repeatable; overrides preset)");
    network->add_option("--seiferter", arg_seiferters,
                        "seiferter to register for custom seeds (repeatable)");
    network->add_flag("--dot", flag_dot, "graphviz output");
    network->add_flag("--json", flag_json, "canonical JSON output");
    network->add_option("--out", arg_out, "write output to a file instead of stdout");
    network->add_option("--config", arg_config, "key=value config file for preset/m/radius/format");

    CLI::App* verify = app.add_subcommand("verify", "run the built-in claim suite");
    verify->add_option("--filter", arg_filter, "run a single claim by id");
    verify->add_flag("--json", flag_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints message or help text
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (surgery->parsed())
            return cmd_surgery(parse_integer(arg_p), parse_integer(arg_q), arg_slope, flag_json);
        if (knm->parsed()) {
            if (arg_grid.empty() && (arg_m.empty() || arg_n.empty()))
                throw std::invalid_argument("knm needs m and n (or --grid)");
            return cmd_knm(arg_grid.empty() ? parse_integer(arg_m) : Int(0),
                           arg_grid.empty() ? parse_integer(arg_n) : Int(0),
                           parse_integer(arg_bound), flag_json, arg_grid);
        }
        if (twist_cmd->parsed())
            return cmd_twist(parse_integer(arg_m), arg_seiferter, parse_integer(arg_n), flag_json);
        if (pairs->parsed()) return cmd_pairs(parse_integer(arg_m), flag_json);
        if (kp->parsed()) return cmd_kp(parse_integer(arg_p), flag_json);
        if (network->parsed())
            return cmd_network(arg_preset, arg_m.empty() ? Int(0) : parse_integer(arg_m),
                               parse_integer(arg_radius), flag_dot, flag_json, arg_out,
                               arg_config, arg_seeds, arg_seiferters);
        if (verify->parsed()) return cmd_verify(arg_filter, flag_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
