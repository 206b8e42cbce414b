#include "bireg/cli.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bireg/errors.hpp"
#include "bireg/io.hpp"
#include "bireg/sheaf.hpp"
#include "bireg/verify.hpp"

namespace bireg {

namespace {

Window parse_window(const std::string& s) {
    static const std::regex re(R"(\s*(-?\d+):(-?\d+),(-?\d+):(-?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw CLI::ValidationError("--window", "expected k0:k1,l0:l1, got '" + s + "'");
    return {std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])};
}

Bidegree parse_pair(const std::string& s, const std::string& opt) {
    static const std::regex re(R"(\s*\(?(-?\d+),(-?\d+)\)?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw CLI::ValidationError(opt, "expected a,b, got '" + s + "'");
    return {std::stoi(m[1]), std::stoi(m[2])};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "--window -4:1,..." would be read as a short option; glue such values to their option.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
    static const std::set<std::string> valued{"--window", "--from", "--step", "--p", "--pp", "--i",
                                              "--a",      "--b",    "--m",    "--n", "--nu-max", "--seed"};
    std::vector<std::string> out;
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (valued.count(args[k]) && k + 1 < args.size() && args[k + 1].size() > 1 && args[k + 1][0] == '-' &&
            (std::isdigit(static_cast<unsigned char>(args[k + 1][1])) || args[k + 1][1] == '(')) {
            out.push_back(args[k] + "=" + args[k + 1]);
            ++k;
        } else {
            out.push_back(args[k]);
        }
    }
    return out;
}

struct Options {
    bool json = false;
    int nu_max = 8;
    int seed = 0;
    std::string window = "-3:3,-3:3";
    std::string file;
    int p = 0, pp = 0, i = 0;
    std::string ideal = "irr";
    std::string variant = "theorem";
    int m = 1, n = 1, a = 0, b = 0;
    bool i_given = false;
    std::string kind = "St";
    std::string from = "0,0", step = "1,0";
};

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace

CliOutcome run_cli(const std::vector<std::string>& raw_args) {
    CliOutcome res;
    std::ostringstream out, err;
    Options o;

    CLI::App app{"Bigraded Castelnuovo-Mumford regularity toolkit", "bireg"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "JSON output");
    app.add_option("--nu-max", o.nu_max, "largest nu in the Ext colimit")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "reserved");
    app.add_option("--window", o.window, "k0:k1,l0:l1");

    auto with_file = [&](CLI::App* sc) { sc->add_option("file", o.file, "input file")->required(); };
    auto* betti = app.add_subcommand("betti", "minimal free resolution Betti table");
    with_file(betti);
    auto* frontier = app.add_subcommand("frontier", "minimal points of strong regularity");
    with_file(frontier);
    auto* rs = app.add_subcommand("reg-strong", "strong (p,p')-regularity");
    auto* rw = app.add_subcommand("reg-weak", "weak (p,p')-regularity");
    for (auto* sc : {rs, rw}) {
        with_file(sc);
        sc->add_option("--p", o.p)->required();
        sc->add_option("--pp", o.pp)->required();
    }
    rw->add_option("--variant", o.variant, "definition|theorem")->check(CLI::IsMember({"definition", "theorem"}));
    auto* lc = app.add_subcommand("lc", "local cohomology grid");
    with_file(lc);
    lc->add_option("--ideal", o.ideal, "x|y|sum|irr")->check(CLI::IsMember({"x", "y", "sum", "irr"}));
    lc->add_option("--i", o.i)->required();
    auto* sheaf = app.add_subcommand("sheaf", "line bundle cohomology grid");
    sheaf->add_option("--m", o.m);
    sheaf->add_option("--n", o.n);
    sheaf->add_option("--a", o.a);
    sheaf->add_option("--b", o.b);
    sheaf->add_option("--i", o.i)->each([&](const std::string&) { o.i_given = true; });
    auto* region = app.add_subcommand("region", "lattice region picture");
    region->add_option("--kind", o.kind, "St|Reg|Reg'|Reg''|DReg")->required();
    region->add_option("--i", o.i)->required();
    region->add_option("--p", o.p)->required();
    region->add_option("--pp", o.pp)->required();
    auto* mult = app.add_subcommand("mult", "multiplication surjectivity R_step M_from -> M_{from+step}");
    with_file(mult);
    mult->add_option("--from", o.from)->required();
    mult->add_option("--step", o.step)->required();
    auto* verify = app.add_subcommand("verify", "cross-validation suite");
    with_file(verify);

    std::vector<std::string> args = glue_negative_values(raw_args);
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        res.out = out.str();
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string(e.what()) + "\n" + app.help();
        res.code = kExitInputError;
        return res;
    }

    try {
        const Window w = parse_window(o.window);

        if (*region) {
            const Region r(region_kind_from_string(o.kind), o.i, o.p, o.pp);
            if (o.json) {
                nlohmann::json pts = nlohmann::json::array();
                for (Bidegree q : r.points(w)) pts.push_back({q.a, q.b});
                out << dump({{"region", {{"kind", to_string(r.kind())}, {"i", o.i}, {"p", o.p}, {"pp", o.pp},
                                         {"window", {w.k0, w.k1, w.l0, w.l1}}, {"points", pts}}}});
            } else {
                out << r.name() << " on [" << w.k0 << "," << w.k1 << "]x[" << w.l0 << "," << w.l1 << "]\n";
                out << render_region(r, w);
            }
            res.out = out.str();
            return res;
        }
        if (*sheaf) {
            const LineBundleSum F{o.m, o.n, {{o.a, o.b}}};
            std::vector<int> levels;
            if (o.i_given) levels.push_back(o.i);
            else
                for (int i = 0; i <= F.top(); ++i) levels.push_back(i);
            nlohmann::json grids = nlohmann::json::array();
            for (int i : levels) {
                if (o.json) {
                    nlohmann::json dims = nlohmann::json::array();
                    for (int k = w.k0; k <= w.k1; ++k) {
                        nlohmann::json row = nlohmann::json::array();
                        for (int kp = w.l0; kp <= w.l1; ++kp) row.push_back(F.h(i, k, kp));
                        dims.push_back(row);
                    }
                    grids.push_back({{"i", i}, {"window", {w.k0, w.k1, w.l0, w.l1}}, {"dims", dims}});
                } else {
                    out << "h^" << i << " O(" << o.a << "," << o.b << ") on P^" << o.m << " x P^" << o.n
                        << ", rows k' = " << w.l1 << ".." << w.l0 << ", columns k = " << w.k0 << ".." << w.k1 << "\n";
                    out << render_sheaf_grid(F, i, w);
                }
            }
            if (o.json)
                out << dump({{"sheaf", {{"m", o.m}, {"n", o.n}, {"twists", {{o.a, o.b}}}, {"grids", grids}}}});
            res.out = out.str();
            return res;
        }

        const InputDocument doc = parse_input(read_file(o.file));
        const BigradedModule M(doc.module, o.nu_max);
        nlohmann::json j;
        j["ring"] = ring_json(doc.ring);

        if (*betti) {
            if (o.json) {
                j["betti"] = betti_json(M.betti());
                out << dump(j);
            } else {
                out << M.betti().to_string();
            }
        } else if (*frontier) {
            const Frontier f = strong_regularity_frontier(M);
            if (o.json) {
                j["frontier"] = frontier_json(f);
                out << dump(j);
            } else {
                out << render_frontier(f);
            }
        } else if (*rs || *rw) {
            const RegularityVerdict v =
                *rs ? strong_regularity_check(M, o.p, o.pp)
                    : weak_regularity_check(M, o.p, o.pp,
                                            o.variant == "definition" ? HypothesisVariant::DefinitionOnly
                                                                      : HypothesisVariant::TheoremThreeFiveThree);
            if (o.json) {
                j["verdict"] = verdict_json(v);
                out << dump(j);
            } else {
                out << render_verdict(v);
            }
            res.code = !v.decided ? kExitUndecided : v.value ? kExitOk : kExitNegative;
        } else if (*lc) {
            const LcGrid g = lc_table(M, ideal_kind_from_string(o.ideal), o.i, w);
            if (o.json) {
                j["grid"] = grid_json(g);
                out << dump(j);
            } else {
                out << "H^" << o.i << "_" << o.ideal << " rows k' = " << w.l1 << ".." << w.l0 << ", columns k = " << w.k0
                    << ".." << w.k1 << "\n";
                out << render_lc_grid(g);
            }
            if (!g.all_certified()) res.code = kExitUndecided;
        } else if (*mult) {
            const Bidegree from = parse_pair(o.from, "--from"), step = parse_pair(o.step, "--step");
            const bool v = multiplication_surjectivity(M, from, step);
            if (o.json) {
                j["mult"] = {{"from", {from.a, from.b}}, {"step", {step.a, step.b}}, {"value", v}};
                out << dump(j);
            } else {
                out << (v ? "true" : "false") << "\n";
            }
            res.code = v ? kExitOk : kExitNegative;
        } else if (*verify) {
            const auto checks = cross_validate(M, w);
            bool fail = false, undecided = false;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& c : checks) {
                fail |= c.status == CheckStatus::Fail;
                undecided |= c.status == CheckStatus::Undecided;
                arr.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
                if (!o.json)
                    out << to_string(c.status) << "  " << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
                        << "\n";
            }
            if (o.json) {
                j["checks"] = arr;
                out << dump(j);
            }
            res.code = fail ? kExitNegative : undecided ? kExitUndecided : kExitOk;
        }
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        res.code = kExitInputError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        res.code = kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        res.code = kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        res.code = kExitInputError;
    }
    res.out = out.str();
    res.err = err.str();
    return res;
}

} // namespace bireg
