#include "degrowth/cli.hpp"

#include "degrowth/dynamics.hpp"
#include "degrowth/parser.hpp"
#include "degrowth/verify.hpp"
#include "degrowth/zoo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace degrowth {

namespace {

using nlohmann::json;

// Bad flag values found after CLI11 parsing; reported as usage errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MapSource {
    std::string zoo;
    std::string text;
};

struct Resolved {
    std::optional<ZooEntry> entry;
    AffineMapSpec spec;
    ProjectiveMap map = ProjectiveMap::identity(1);
};

ZooParams parse_params(const std::vector<std::string>& kv) {
    ZooParams p;
    for (const auto& s : kv) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects k=v, got '" + s + "'");
        const std::string key = s.substr(0, eq), val = s.substr(eq + 1);
        try {
            std::size_t used = 0;
            long v = std::stol(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
            p[key] = v;
        } catch (const std::logic_error&) {
            throw UsageError("--param " + key + ": '" + val + "' is not an integer");
        }
    }
    return p;
}

Resolved resolve(const MapSource& src, const RunConfig& cfg) {
    if (src.zoo.empty() == src.text.empty()) throw UsageError("give exactly one of --zoo NAME or --map TEXT");
    Resolved r;
    if (!src.zoo.empty()) {
        try {
            zoo_family(src.zoo);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        r.entry = build_entry(src.zoo, parse_params(cfg.params));
        r.spec = r.entry->map;
        r.map = r.entry->projective();
    } else {
        if (!cfg.params.empty()) throw UsageError("--param only applies to --zoo entries");
        auto ast = parse_map_ast(src.text);
        r.map = lower_projective(ast);
        r.spec = lower_affine(ast);
    }
    return r;
}

DegreeSequence degrees_for(const Resolved& r, std::size_t n, const std::string& method, std::uint64_t seed) {
    if (method == "line") return degree_sequence_on_line(r.map, n, seed);
    if (method == "exact" || !r.entry) return degree_sequence(r.map, n);
    return entry_degrees(*r.entry, n, false, seed).sequence;
}

json degrees_json(const DegreeSequence& s) { return json(s.degrees); }

std::string degrees_csv(const DegreeSequence& s) {
    std::ostringstream out;
    out << "n,deg\n";
    for (std::size_t n = 1; n <= s.horizon(); ++n) out << n << "," << s[n] << "\n";
    return out.str();
}

std::string format_name(OutputFormat f) {
    return f == OutputFormat::json ? "json" : f == OutputFormat::csv ? "csv" : "text";
}

void require_format(const RunConfig& cfg, std::initializer_list<OutputFormat> allowed, const std::string& cmd) {
    if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end())
        throw UsageError(cmd + ": format " + format_name(cfg.format) + " is not supported");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Point parse_point(const std::string& s, std::size_t k) {
    Point p;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, s.find(':') != std::string::npos ? ':' : ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        item.erase(std::remove(item.begin(), item.end(), '('), item.end());
        item.erase(std::remove(item.begin(), item.end(), ')'), item.end());
        Rat v;
        try {
            v = Rat(item);
            v.canonicalize();
        } catch (const std::invalid_argument&) {
            throw UsageError("--point: '" + item + "' is not a rational number");
        }
        p.push_back(v);
    }
    if (p.size() != k + 1) throw UsageError("--point needs " + std::to_string(k + 1) + " coordinates");
    if (std::all_of(p.begin(), p.end(), [](const Rat& x) { return x == 0; }))
        throw UsageError("--point: all coordinates are zero");
    return p;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degree growth of polynomial automorphisms and birational maps"};
    app.require_subcommand(1);
    RunConfig cfg;
    MapSource src;
    std::string format, output_file, method = "auto", point_text, parse_text;
    std::size_t hyperplane = 0;
    bool hyperplane_set = false;
    std::vector<std::string> mutate;
    std::string show_name;

    std::function<void(CLI::App*, bool)> map_opts = [&](CLI::App* sc, bool classify) {
        sc->add_option("--zoo", src.zoo, "zoo entry name");
        sc->add_option("--map", src.text, "map text, e.g. \"(z1 + z0*z2^2, z0, z2)\"");
        sc->add_option("--param", cfg.params, "entry parameter k=v (repeatable)");
        sc->add_option("-N,--horizon", cfg.horizon, "number of iterates");
        sc->add_option("--seed", cfg.seed, "random seed for line restrictions and spot checks");
        if (classify) sc->add_option("--window", cfg.window, "classifier window");
    };
    auto common_out = [&](CLI::App* sc) {
        sc->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sc->add_option("-o,--output", output_file, "write the result to this file");
    };

    auto* parse = app.add_subcommand("parse", "parse a map and print its canonical forms");
    parse->add_option("text", parse_text, "map text")->required();
    common_out(parse);

    auto* degrees = app.add_subcommand("degrees", "degree sequence deg f^1..f^N");
    map_opts(degrees, false);
    degrees->add_option("--method", method, "exact, line or auto")->check(CLI::IsMember({"exact", "line", "auto"}));
    common_out(degrees);

    auto* classify = app.add_subcommand("classify", "growth class of the degree sequence");
    map_opts(classify, true);
    classify->add_option("--method", method, "exact, line or auto")->check(CLI::IsMember({"exact", "line", "auto"}));
    common_out(classify);

    auto* stability = app.add_subcommand("stability", "algebraic stability of an automorphism");
    map_opts(stability, false);
    common_out(stability);

    auto* orbit = app.add_subcommand("orbit", "orbit of a projective point");
    map_opts(orbit, false);
    orbit->add_option("--point", point_text, "coordinates, e.g. 0:1:0:0")->required();
    common_out(orbit);

    auto* blowdown = app.add_subcommand("blowdown", "image of a coordinate hyperplane");
    map_opts(blowdown, false);
    blowdown->add_option("--hyperplane", hyperplane, "index h of {z_h = 0} (default: the last)");
    common_out(blowdown);

    auto* bideg = app.add_subcommand("bidegree", "forward and backward degrees");
    map_opts(bideg, false);
    common_out(bideg);

    auto* zoo = app.add_subcommand("zoo", "catalog of named maps");
    zoo->require_subcommand(1);
    auto* zoo_list = zoo->add_subcommand("list", "list the catalog");
    common_out(zoo_list);
    auto* zoo_show = zoo->add_subcommand("show", "show one entry");
    zoo_show->add_option("name", show_name, "entry name")->required();
    zoo_show->add_option("--param", cfg.params, "entry parameter k=v (repeatable)");
    common_out(zoo_show);

    auto* verify = app.add_subcommand("verify-paper", "check every catalog degree law");
    verify->add_option("--inject-off-by-one", mutate, "shift the laws of this entry by one (harness check)");
    verify->add_option("--seed", cfg.seed, "random seed for line restrictions");
    common_out(verify);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    hyperplane_set = blowdown->count("--hyperplane") > 0;
    auto default_format = [&](OutputFormat f) {
        cfg.format = format.empty() ? f : format == "json" ? OutputFormat::json
                                      : format == "csv"    ? OutputFormat::csv
                                                           : OutputFormat::text;
    };

    std::string result;
    int code = exit_code::ok;
    try {
        if (*parse) {
            default_format(OutputFormat::text);
            require_format(cfg, {OutputFormat::text, OutputFormat::json}, "parse");
            auto ast = parse_map_ast(parse_text);
            auto spec = lower_affine(ast);
            auto pm = lower_projective(ast);
            if (cfg.format == OutputFormat::text) {
                result = render(spec) + "\n" + render(pm) + "\n";
            } else {
                result = dump({{"dimension", ast.dimension},
                               {"chart", ast.chart == Chart::affine ? "affine" : "projective"},
                               {"kind", spec.kind == MapKind::polynomial ? "polynomial" : "rational"},
                               {"affine", render(spec)},
                               {"projective", render(pm)},
                               {"degree", pm.degree()}});
            }
        } else if (*degrees) {
            default_format(OutputFormat::csv);
            auto r = resolve(src, cfg);
            if (cfg.horizon < 1) throw UsageError("-N must be >= 1");
            auto s = degrees_for(r, cfg.horizon, method, cfg.seed);
            if (cfg.format == OutputFormat::csv) result = degrees_csv(s);
            else if (cfg.format == OutputFormat::json) result = dump({{"degrees", degrees_json(s)}});
            else {
                for (std::size_t n = 1; n <= s.horizon(); ++n) result += "deg f^" + std::to_string(n) + " = " + std::to_string(s[n]) + "\n";
            }
        } else if (*classify) {
            default_format(OutputFormat::json);
            require_format(cfg, {OutputFormat::json, OutputFormat::text}, "classify");
            auto r = resolve(src, cfg);
            if (cfg.horizon < min_classify_horizon)
                throw UsageError("classify needs -N >= " + std::to_string(min_classify_horizon));
            auto s = degrees_for(r, cfg.horizon, method, cfg.seed);
            auto g = classify_growth(s, cfg.window);
            json j = to_json(g);
            j["degrees"] = degrees_json(s);
            j["dynamical_degree"] = to_json(dynamical_degree_estimate(s, cfg.window));
            if (cfg.format == OutputFormat::json) result = dump(j);
            else result = g.tag_name() + "\n";
        } else if (*stability) {
            default_format(OutputFormat::json);
            require_format(cfg, {OutputFormat::json}, "stability");
            auto r = resolve(src, cfg);
            result = dump(to_json(stability_check(r.map)));
        } else if (*orbit) {
            default_format(OutputFormat::json);
            require_format(cfg, {OutputFormat::json, OutputFormat::csv}, "orbit");
            auto r = resolve(src, cfg);
            auto o = orbit_point(r.map, parse_point(point_text, r.map.dimension()), cfg.horizon);
            if (cfg.format == OutputFormat::json) result = dump(to_json(o));
            else {
                result = "n,point\n";
                for (std::size_t i = 0; i < o.points.size(); ++i)
                    result += std::to_string(i + 1) + "," + point_to_string(o.points[i]) + "\n";
            }
        } else if (*blowdown) {
            default_format(OutputFormat::json);
            require_format(cfg, {OutputFormat::json}, "blowdown");
            auto r = resolve(src, cfg);
            const std::size_t h = hyperplane_set ? hyperplane : r.map.dimension();
            if (h > r.map.dimension()) throw UsageError("--hyperplane out of range");
            auto p = blow_down_image(r.map, h);
            json j{{"hyperplane", h}};
            j["point"] = p ? json(point_to_string(*p)) : json();
            j["in_indeterminacy"] = p ? json(in_indeterminacy(r.map, *p)) : json();
            result = dump(j);
        } else if (*bideg) {
            default_format(OutputFormat::json);
            require_format(cfg, {OutputFormat::json, OutputFormat::csv}, "bidegree");
            auto r = resolve(src, cfg);
            auto b = bidegree(r.spec);
            const std::size_t k = r.spec.k;
            Int fwd_pow, bwd_pow;
            mpz_ui_pow_ui(fwd_pow.get_mpz_t(), b.fwd, k - 1);
            mpz_ui_pow_ui(bwd_pow.get_mpz_t(), b.bwd, k - 1);
            const bool bass_bwd = Int(static_cast<unsigned long>(b.bwd)) <= fwd_pow;
            const bool bass_fwd = Int(static_cast<unsigned long>(b.fwd)) <= bwd_pow;
            // Sequences of deg f^n and deg f^-n.
            DegreeSequence fs, bs;
            if (r.entry) {
                fs = entry_degrees(*r.entry, cfg.horizon, false, cfg.seed).sequence;
                bs = entry_degrees(*r.entry, cfg.horizon, true, cfg.seed).sequence;
            } else {
                fs = degree_sequence(r.map, cfg.horizon);
                bs = degree_sequence(homogenize_map(inverse(r.spec)), cfg.horizon);
            }
            if (cfg.format == OutputFormat::csv) {
                result = "n,fwd,bwd\n";
                for (std::size_t n = 1; n <= cfg.horizon; ++n)
                    result += std::to_string(n) + "," + std::to_string(fs[n]) + "," + std::to_string(bs[n]) + "\n";
            } else {
                json j{{"bidegree", {b.fwd, b.bwd}},
                       {"bass", {{"inverse_bound", bass_bwd}, {"forward_bound", bass_fwd}}},
                       {"forward", degrees_json(fs)},
                       {"backward", degrees_json(bs)}};
                if (cfg.horizon >= min_classify_horizon) {
                    j["forward_class"] = to_json(classify_growth(fs, cfg.window));
                    j["backward_class"] = to_json(classify_growth(bs, cfg.window));
                }
                result = dump(j);
            }
        } else if (*zoo_list) {
            default_format(OutputFormat::json);
            require_format(cfg, {OutputFormat::json, OutputFormat::text}, "zoo list");
            if (cfg.format == OutputFormat::json) result = dump(catalog_json());
            else
                for (const auto& f : zoo_catalog()) {
                    std::string defaults = params_string(f.defaults);
                    result += f.name + std::string(f.name.size() < 18 ? 18 - f.name.size() : 1, ' ') + f.summary +
                              (defaults.empty() ? "" : "  [" + defaults + "]") + "\n";
                }
        } else if (*zoo_show) {
            default_format(OutputFormat::json);
            require_format(cfg, {OutputFormat::json}, "zoo show");
            try {
                zoo_family(show_name);
            } catch (const DomainError& e) {
                throw UsageError(e.what());
            }
            result = dump(to_json(build_entry(show_name, parse_params(cfg.params))));
        } else if (*verify) {
            default_format(OutputFormat::text);
            VerifyOptions opts;
            opts.off_by_one = mutate;
            opts.seed = cfg.seed;
            auto rep = verify_paper(opts);
            result = cfg.format == OutputFormat::json  ? dump(to_json(rep))
                     : cfg.format == OutputFormat::csv ? to_csv(rep)
                                                       : to_text(rep);
            if (rep.failed()) code = exit_code::verification_mismatch;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_code::parse_error;
    } catch (const Error& e) {
        err << "analysis aborted: " << e.what() << "\n";
        return exit_code::analysis_abort;
    }

    if (!output_file.empty()) {
        std::ofstream f(output_file, std::ios::binary);
        if (!f) {
            err << "cannot write " << output_file << "\n";
            return exit_code::usage;
        }
        f << result;
    } else {
        out << result;
    }
    return code;
}

}  // namespace degrowth
