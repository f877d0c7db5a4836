// logder: exact invariants of line arrangements (mdr, Tjurina numbers,
// freeness classification) plus mechanical verification suites for the
// addition-deletion theorems behind them.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "logder/logder.hpp"

namespace {

using namespace logder;

Arrangement load_input(const std::string& spec, std::string& id) {
    if (spec.rfind("family:", 0) == 0) {
        id = spec;
        return arrangement_from_family_spec(spec.substr(7));
    }
    std::ifstream in(spec);
    if (!in) throw InputError("cannot read arrangement file '" + spec + "'");
    id = spec;
    return parse_arrangement(in);
}

int cmd_analyze(const std::string& input, bool json, int max_degree, int mingen_bound, bool skip_mingens) {
    std::string id;
    Arrangement a = load_input(input, id);
    AnalyzeOptions opts;
    opts.dim_cap = max_degree;
    opts.mingen_bound = mingen_bound;
    opts.skip_mingens = skip_mingens;
    AnalysisDocument doc = analyze_arrangement(a, id, opts);
    if (json) {
        std::cout << to_json(doc).dump(2) << "\n";
    } else {
        std::cout << to_text(doc);
    }
    return doc.consistent() ? 0 : 3;
}

int cmd_family(const std::string& name, const std::map<std::string, long>& params, const std::string& out_path) {
    Arrangement a = generate_family(name, params);
    if (out_path.empty()) {
        write_arrangement(a, std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write '" + out_path + "'");
        write_arrangement(a, out);
    }
    return 0;
}

int cmd_verify(const std::string& suite, unsigned long seed, bool json) {
    SuiteReport report = run_suite(suite, seed);
    if (json) {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        std::cout << to_text(report);
    }
    return report.ok() ? 0 : 1;
}

int cmd_compare(const std::string& spec_a, const std::string& spec_b, bool json) {
    std::string id_a, id_b;
    Arrangement a = load_input(spec_a, id_a);
    Arrangement b = load_input(spec_b, id_b);
    if (a.nvars() != 3 || b.nvars() != 3) throw InputError("compare needs line arrangements");
    bool lattice = same_lattice(a, b);
    bool weak = weak_combinatorics_equal(a, b);
    int ra = mdr(a), rb = mdr(b);
    bool flagged = lattice && ra != rb;
    if (json) {
        Json j;
        j["schema"] = "logder/1";
        j["a"] = id_a;
        j["b"] = id_b;
        j["same_lattice"] = lattice;
        j["weak_combinatorics_equal"] = weak;
        j["mdr_a"] = ra;
        j["mdr_b"] = rb;
        j["same_lattice_different_mdr"] = flagged;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "a:                        " << id_a << " (d=" << a.size() << ")\n";
        std::cout << "b:                        " << id_b << " (d=" << b.size() << ")\n";
        std::cout << "same lattice:             " << (lattice ? "yes" : "no") << "\n";
        std::cout << "weak combinatorics equal: " << (weak ? "yes" : "no") << "\n";
        std::cout << "mdr:                      " << ra << " vs " << rb << "\n";
        if (flagged) std::cout << "verdict:                  same-lattice-different-mdr\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of hyperplane and line arrangements"};
    app.require_subcommand(1);

    std::string input, out_path, family_name, suite, compare_a, compare_b;
    bool json = false;
    int max_degree = -1, mingen_bound = -1;
    bool skip_mingens = false;
    long k = -1, j = -1, d = -1, seed_param = -1;
    unsigned long seed = 0;

    CLI::App* analyze = app.add_subcommand("analyze", "compute the invariant report of one arrangement");
    analyze->add_option("input", input, "arrangement file or family:NAME[:params][+suffix] spec")->required();
    analyze->add_flag("--json", json, "machine-readable output");
    analyze->add_option("--max-degree", max_degree, "cap for the dim D0_r table (default d-1)");
    analyze->add_option("--mingen-bound", mingen_bound, "truncation bound for generator degrees (default 2d)");
    analyze->add_flag("--skip-mingens", skip_mingens, "skip the minimal-generator computation");

    CLI::App* family = app.add_subcommand("family", "emit a named arrangement in the canonical file format");
    family->add_option("name", family_name, "family name (triangle, ziegler:1, thm100, dminus4, ...)")->required();
    family->add_option("--k", k, "parameter k");
    family->add_option("--j", j, "parameter j");
    family->add_option("--d", d, "parameter d");
    family->add_option("--seed", seed_param, "seed for generic families");
    family->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "families | addition_deletion | predictor | freeness | all")->required();
    verify->add_option("--seed", seed, "seed for generic-line choices (verdicts are seed-independent)");
    verify->add_flag("--json", json, "machine-readable output");

    CLI::App* compare = app.add_subcommand("compare", "compare two arrangements");
    compare->add_option("a", compare_a, "first arrangement (file or family spec)")->required();
    compare->add_option("b", compare_b, "second arrangement (file or family spec)")->required();
    compare->add_flag("--json", json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(input, json, max_degree, mingen_bound, skip_mingens);
        if (family->parsed()) {
            std::map<std::string, long> params;
            if (k >= 0) params["k"] = k;
            if (j >= 0) params["j"] = j;
            if (d >= 0) params["d"] = d;
            if (seed_param >= 0) params["seed"] = seed_param;
            return cmd_family(family_name, params, out_path);
        }
        if (verify->parsed()) return cmd_verify(suite, seed, json);
        if (compare->parsed()) return cmd_compare(compare_a, compare_b, json);
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
