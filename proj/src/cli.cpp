#include "curvecliff/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "curvecliff/analysis.hpp"
#include "curvecliff/generators.hpp"
#include "curvecliff/io.hpp"

namespace curvecliff::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CurveError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonFlags {
    std::string format = "text";
    int max_enum = 0;  // 0 = keep defaults
    bool heuristic = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--max-enum", flags.max_enum,
                    "Override the enumeration guards (bipartitions and set partitions)");
    cmd->add_flag("--heuristic", flags.heuristic,
                  "Allow the non-certified greedy split search beyond the guard");
}

AnalyzeOptions make_options(const CommonFlags& flags) {
    AnalyzeOptions opts;
    if (flags.max_enum > 0) {
        opts.connectivity.enumeration_guard = flags.max_enum;
        opts.search.partition_guard = flags.max_enum;
    }
    opts.search.allow_heuristic = flags.heuristic;
    return opts;
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact combinatorial analyzer for genus-weighted dual graphs of nodal curves"};
    app.require_subcommand(1);

    // analyze
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze a curve file");
    std::string analyze_path;
    bool betti = false;
    CommonFlags analyze_flags;
    analyze_cmd->add_option("file", analyze_path, "Curve file")->required();
    analyze_cmd->add_flag("--betti", betti, "Predict the Betti vanishing shape");
    add_common(analyze_cmd, analyze_flags);

    // gen
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a curve file");
    std::string kind;
    std::vector<Int> genera;
    Int g1 = 0, g2 = 0, gm = 1;
    bool general = false;
    std::uint64_t seed = 0;
    int n_components = 0;
    Int edge_budget = -1, genus_min = 1, genus_max = 1;
    std::string out_path;
    gen_cmd->add_option("kind", kind, "chain | threecon | two-component | random")->required();
    gen_cmd->add_option("--genera", genera, "Component genera (chain, threecon)")->delimiter(',');
    gen_cmd->add_option("--g1", g1, "Genus of component 0 (two-component)");
    gen_cmd->add_option("--g2", g2, "Genus of component 1 (two-component)");
    gen_cmd->add_option("--m", gm, "Number of nodes (two-component)");
    gen_cmd->add_flag("--general", general, "Mark component 0 Brill-Noether general");
    gen_cmd->add_option("--seed", seed, "Seed (random)");
    gen_cmd->add_option("--components", n_components, "Component count (random)");
    gen_cmd->add_option("--edge-budget", edge_budget, "Total node count (random)");
    gen_cmd->add_option("--genus-min", genus_min, "Genus range lower end (random)");
    gen_cmd->add_option("--genus-max", genus_max, "Genus range upper end (random)");
    gen_cmd->add_option("--out", out_path, "Write the curve file here instead of stdout");

    // green2
    CLI::App* green_cmd = app.add_subcommand(
        "green2", "Vanishing certificate for a two-component curve");
    Int w_g1 = 0, w_g2 = 0, w_m = 0;
    CommonFlags green_flags;
    green_cmd->add_option("--g1", w_g1, "Genus of the Brill-Noether-general component")->required();
    green_cmd->add_option("--g2", w_g2, "Genus of the second component")->required();
    green_cmd->add_option("--m", w_m, "Number of nodes")->required();
    add_common(green_cmd, green_flags);

    // validate-sheaf
    CLI::App* sheaf_cmd = app.add_subcommand("validate-sheaf", "Check a sheaf profile against a curve");
    std::string sheaf_curve_path, sheaf_profile_path;
    CommonFlags sheaf_flags;
    sheaf_cmd->add_option("curve", sheaf_curve_path, "Curve file")->required();
    sheaf_cmd->add_option("profile", sheaf_profile_path, "Profile file")->required();
    add_common(sheaf_cmd, sheaf_flags);

    std::vector<const char*> argv;
    argv.push_back("curvecliff");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    if (analyze_cmd->parsed()) {
        CurveGraph g = parse_curve(read_file(analyze_path));
        AnalyzeOptions opts = make_options(analyze_flags);
        opts.betti = betti;
        AnalysisReport report = analyze(g, opts);
        out << (analyze_flags.format == "structured" ? render_structured(report) : render_text(report));
        return kExitOk;
    }

    if (gen_cmd->parsed()) {
        CurveGraph g;
        std::vector<std::string> warnings;
        if (kind == "chain") {
            GeneratedCurve gc = gen_chain(genera);
            g = gc.graph;
            warnings = gc.warnings;
        } else if (kind == "threecon") {
            g = gen_threecon(genera);
        } else if (kind == "two-component") {
            g = gen_two_component(g1, g2, gm, general);
        } else if (kind == "random") {
            if (edge_budget < 0) edge_budget = n_components - 1;
            g = gen_random(seed, n_components, edge_budget, genus_min, genus_max);
            err << "seed: " << seed << " (mt19937_64, modulo draws, v1)\n";
        } else {
            err << "error: unknown generator kind \"" << kind << "\"\n";
            return kExitInput;
        }
        for (const std::string& w : warnings) err << "warning: " << w << "\n";
        std::string text = serialize_curve(g);
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw CurveError("cannot write file: " + out_path);
            f << text;
        }
        ConnectivityReport conn = connectivity_number(g);
        err << "pa: " << g.pa() << "\n";
        if (conn.infinite) err << "m: infinite\n";
        else err << "m: " << conn.m << "\n";
        return kExitOk;
    }

    if (green_cmd->parsed()) {
        Green2Result res = green2_certificate(w_g1, w_g2, w_m);
        if (green_flags.format == "structured") {
            out << render_structured(res);
        } else {
            out << render_text(res.trace);
            out << "betti shape (pa=" << res.shape.genus() << "):\n" << res.shape.render();
        }
        return kExitOk;
    }

    if (sheaf_cmd->parsed()) {
        CurveGraph g = parse_curve(read_file(sheaf_curve_path));
        ValidationReport vr = validate_curve(g);
        if (!vr.valid) throw CurveError("invalid curve: " + vr.errors.front());
        SheafProfile p = parse_profile(read_file(sheaf_profile_path));
        ProfileValidation pv = validate_sheaf_profile(g, p);
        out << (sheaf_flags.format == "structured" ? render_structured(pv) : render_text(pv));
        return pv.valid ? kExitOk : kExitInput;
    }

    err << "error: no subcommand\n";
    return kExitInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_parsed(args, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ContradictionError& e) {
        err << "contradiction: " << e.what() << "\n";
        return kExitContradiction;
    } catch (const GuardError& e) {
        err << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const CurveError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace curvecliff::cli
