#pragma once

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "logder/incidence.hpp"
#include "logder/invariants.hpp"
#include "logder/syzygy.hpp"
#include "logder/verify.hpp"

namespace logder {

using Json = nlohmann::ordered_json;

// The analyze document: a pure projection of library values. JSON field
// names are part of the stable "logder/1" schema.
struct AnalysisDocument {
    std::string input;
    int nvars = 0;
    int d = 0;
    bool essential = false;
    std::optional<IncidenceData> incidence;
    std::optional<long long> tau;
    int mdr = -1;
    std::map<int, int> d0_dims;
    int dim_cap = 0;
    std::optional<std::map<int, int>> mingen_degrees;
    int mingen_bound = 0;
    std::optional<FreenessClassification> classification;
    std::optional<MultiplicityCase> multiplicity_case;
    std::optional<int> max_mult;
    std::optional<PredictedR> predicted_r;
    std::optional<int> determined_r;
    std::vector<std::pair<std::string, bool>> consistency;

    bool consistent() const {
        for (const auto& [name, ok] : consistency) {
            if (!ok) return false;
        }
        return true;
    }
};

struct AnalyzeOptions {
    int dim_cap = -1;       // default d-1
    int mingen_bound = -1;  // default 2d
    bool skip_mingens = false;
};

inline AnalysisDocument analyze_arrangement(const Arrangement& a, const std::string& input,
                                            AnalyzeOptions opts = {}) {
    AnalysisDocument doc;
    doc.input = input;
    doc.nvars = a.nvars();
    doc.d = a.size();
    doc.essential = a.is_essential();
    if (a.size() < 2) throw InputError("analyze needs at least 2 hyperplanes");

    ProfileOptions popts;
    popts.dim_cap = opts.dim_cap;
    popts.mingen_bound = opts.mingen_bound;
    popts.want_mingens = !opts.skip_mingens;
    SyzygyProfile profile = compute_syzygy_profile(a, popts);
    doc.mdr = profile.mdr;
    doc.d0_dims = profile.dims;
    doc.dim_cap = profile.dim_cap;
    if (!opts.skip_mingens) {
        doc.mingen_degrees = profile.mingen_degrees;
        doc.mingen_bound = profile.mingen_bound;
    }
    bool witness_ok = !profile.basis_at_mdr.empty() &&
                      !profile.basis_at_mdr.front().is_zero() &&
                      profile.basis_at_mdr.front().apply(a.defining_polynomial()).is_zero();
    doc.consistency.emplace_back("mdr_witness_annihilates_q", witness_ok);

    if (a.nvars() == 3) {
        doc.incidence = intersection_points(a);
        doc.tau = tjurina(doc.incidence->n);
        doc.consistency.emplace_back("tau_two_paths", *doc.tau == tjurina_from_points(*doc.incidence));
        if (doc.mdr >= 1 && doc.mdr <= doc.d - 1) {  // mdr 0 only on non-essential input
            doc.consistency.emplace_back("dpw_inequality", *doc.tau <= tau_max(doc.d, doc.mdr));
        }
        doc.max_mult = max_multiplicity(a).first;
        if (doc.essential) {
            JacobianSystem sys(a);
            doc.classification = classify_freeness(sys, *doc.incidence);
            doc.consistency.emplace_back("freeness_cross_check", true);  // classify throws otherwise
            if (doc.d >= 3) {
                doc.multiplicity_case = classify_multiplicity_case(a);
            }
            doc.predicted_r = predict_r_from_combinatorics(a);
            if (doc.predicted_r->r) {
                doc.consistency.emplace_back("predictor_matches_mdr", *doc.predicted_r->r == doc.mdr);
            }
            doc.determined_r = determined_by_weak_combinatorics(a);
            if (doc.determined_r) {
                doc.consistency.emplace_back("weak_determination_matches_mdr", *doc.determined_r == doc.mdr);
            }
        }
    }
    return doc;
}

namespace detail {

inline Json int_map_to_json(const std::map<int, int>& m) {
    Json out = Json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = v;
    return out;
}

}  // namespace detail

inline Json to_json(const AnalysisDocument& doc) {
    Json j;
    j["schema"] = "logder/1";
    j["input"] = doc.input;
    j["nvars"] = doc.nvars;
    j["d"] = doc.d;
    j["essential"] = doc.essential;
    if (doc.incidence) {
        j["n"] = detail::int_map_to_json(doc.incidence->n);
        j["points"] = doc.incidence->points.size();
        j["b2"] = doc.incidence->b2;
        j["b2_zero"] = doc.incidence->b2_zero;
        j["char_poly"] = doc.incidence->char_poly;  // descending powers of t
        j["max_multiplicity"] = *doc.max_mult;
    }
    if (doc.tau) j["tau"] = *doc.tau;
    j["mdr"] = doc.mdr;
    j["d0_dims"] = detail::int_map_to_json(doc.d0_dims);
    j["d0_dim_cap"] = doc.dim_cap;
    if (doc.mingen_degrees) {
        j["mingen_degrees"] = detail::int_map_to_json(*doc.mingen_degrees);
        j["mingen_bound"] = doc.mingen_bound;
    }
    if (doc.classification) {
        Json c;
        c["labels"] = doc.classification->labels;
        c["primary"] = doc.classification->primary();
        if (!doc.classification->exponents.empty()) c["exponents"] = doc.classification->exponents;
        c["tau_max_at_mdr"] = doc.classification->tau_max_at_mdr;
        j["classification"] = c;
    }
    if (doc.multiplicity_case) j["multiplicity_case"] = to_string(*doc.multiplicity_case);
    if (doc.predicted_r) {
        if (doc.predicted_r->r) {
            j["predicted_r"] = *doc.predicted_r->r;
        } else {
            j["predicted_r"] = nullptr;
            j["predictor_note"] = doc.predicted_r->reason;
        }
    }
    if (doc.determined_r) j["determined_by_weak_combinatorics"] = *doc.determined_r;
    Json checks = Json::array();
    for (const auto& [name, ok] : doc.consistency) {
        checks.push_back(Json{{"name", name}, {"ok", ok}});
    }
    j["consistency"] = checks;
    return j;
}

inline std::string to_text(const AnalysisDocument& doc) {
    std::ostringstream os;
    os << "input:            " << doc.input << "\n";
    os << "nvars:            " << doc.nvars << "\n";
    os << "d:                " << doc.d << "\n";
    os << "essential:        " << (doc.essential ? "yes" : "no") << "\n";
    if (doc.incidence) {
        os << "n_j:              ";
        for (const auto& [k, v] : doc.incidence->n) os << "n" << k << "=" << v << " ";
        os << "\n";
        os << "b2_zero:          " << doc.incidence->b2_zero << "\n";
        os << "chi(A;t):         ";
        const auto& cp = doc.incidence->char_poly;
        os << cp[0] << " t^3 + " << cp[1] << " t^2 + " << cp[2] << " t + " << cp[3] << "\n";
        os << "max multiplicity: " << *doc.max_mult << "\n";
    }
    if (doc.tau) os << "tau:              " << *doc.tau << "\n";
    os << "mdr:              " << doc.mdr << "\n";
    os << "dim D0_r:         ";
    for (const auto& [r, dim] : doc.d0_dims) os << r << ":" << dim << " ";
    os << "(r <= " << doc.dim_cap << ")\n";
    if (doc.mingen_degrees) {
        os << "mingen degrees:   ";
        if (doc.mingen_degrees->empty()) os << "(none)";
        for (const auto& [deg, cnt] : *doc.mingen_degrees) os << deg << "x" << cnt << " ";
        os << "(truncated at " << doc.mingen_bound << ")\n";
    }
    if (doc.classification) {
        os << "classification:   ";
        for (const auto& l : doc.classification->labels) os << l << " ";
        if (!doc.classification->exponents.empty()) {
            os << "exp=(";
            for (size_t i = 0; i < doc.classification->exponents.size(); ++i) {
                os << (i ? "," : "") << doc.classification->exponents[i];
            }
            os << ")";
        }
        os << " tau_max(d,r)=" << doc.classification->tau_max_at_mdr << "\n";
    }
    if (doc.multiplicity_case) os << "multiplicity case:" << " " << to_string(*doc.multiplicity_case) << "\n";
    if (doc.predicted_r) {
        os << "predicted r:      ";
        if (doc.predicted_r->r) {
            os << *doc.predicted_r->r;
        } else {
            os << "undetermined (" << doc.predicted_r->reason << ")";
        }
        os << "\n";
    }
    if (doc.determined_r) os << "weak-comb. r:     " << *doc.determined_r << "\n";
    os << "consistency:      ";
    for (const auto& [name, ok] : doc.consistency) os << name << (ok ? "[ok] " : "[FAIL] ");
    os << "\n";
    return os.str();
}

// --- suite report serialization --------------------------------------------

inline Json to_json(const SuiteReport& report) {
    Json j;
    j["schema"] = "logder/1";
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["counts"] = Json{{"verified", report.count("verified")},
                       {"vacuous", report.count("vacuous")},
                       {"skipped", report.count("skipped")},
                       {"counterexamples", report.count("counterexample")}};
    j["ok"] = report.ok();
    Json results = Json::array();
    for (const auto& r : report.results) {
        Json e;
        e["check"] = r.check_name;
        e["arrangement"] = r.arrangement_id;
        e["status"] = r.status;
        if (!r.note.empty()) e["note"] = r.note;
        if (!r.details.empty()) {
            Json d = Json::object();
            for (const auto& [k, v] : r.details) d[k] = v;
            e["details"] = d;
        }
        results.push_back(std::move(e));
    }
    j["results"] = results;
    return j;
}

inline std::string to_text(const SuiteReport& report) {
    std::ostringstream os;
    os << "suite " << report.suite << " (seed " << report.seed << ")\n";
    os << "  verified:        " << report.count("verified") << "\n";
    os << "  vacuous:         " << report.count("vacuous") << "\n";
    os << "  skipped:         " << report.count("skipped") << "\n";
    os << "  counterexamples: " << report.count("counterexample") << "\n";
    for (const auto& r : report.results) {
        if (r.failed()) {
            os << "  COUNTEREXAMPLE " << r.arrangement_id << " " << r.check_name;
            for (const auto& [k, v] : r.details) os << " " << k << "=" << v;
            os << "\n";
        }
    }
    os << (report.ok() ? "OK" : "FAILED") << "\n";
    return os.str();
}

}  // namespace logder
