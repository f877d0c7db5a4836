#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logder/incidence.hpp"
#include "logder/syzygy.hpp"

namespace logder {

// tau(A) = sum_j n_j (j-1)^2 from the weak combinatorics.
inline long long tjurina(const std::map<int, int>& n) {
    long long tau = 0;
    for (const auto& [j, nj] : n) {
        if (j < 2 || nj < 0) throw InputError("tjurina: invalid weak combinatorics");
        tau += static_cast<long long>(nj) * (j - 1) * (j - 1);
    }
    return tau;
}

// Independent path: sum over singular points of the local Tjurina number of
// an ordinary m-fold point, (m-1)^2.
inline long long tjurina_from_points(const IncidenceData& inc) {
    long long tau = 0;
    for (const auto& p : inc.points) {
        tau += static_cast<long long>(p.multiplicity - 1) * (p.multiplicity - 1);
    }
    return tau;
}

// du Plessis-Wall upper bound for the global Tjurina number of a reduced
// degree-d plane curve with mdr r.
inline long long tau_max(int d, int r) {
    if (r < 1 || r > d - 1) throw InputError("tau_max: need 1 <= r <= d-1");
    long long base = static_cast<long long>(d - 1) * (d - r - 1) + static_cast<long long>(r) * r;
    if (2 * r < d) return base;
    return base - binomial(2 * r - d + 2, 2);
}

// ---------------------------------------------------------------------------
// Freeness classification
// ---------------------------------------------------------------------------

struct FreenessClassification {
    int d = 0;
    int mdr = -1;
    long long tau = 0;
    long long tau_max_at_mdr = 0;
    bool is_free = false;
    bool is_nearly_free = false;
    bool is_maximal_tjurina = false;
    std::vector<int> exponents;       // (1,r,d-1-r) if free, (1,r,d-r,d-r) if nearly free
    std::vector<std::string> labels;  // all applicable, Free > NearlyFree > MaximalTjurina > Other

    std::string primary() const { return labels.front(); }
};

namespace detail {

inline void require_essential_l3(const Arrangement& a, const char* op) {
    if (a.nvars() != 3) throw InputError(std::string(op) + " requires a line arrangement");
    if (!a.is_essential()) throw InputError(std::string(op) + " requires an essential arrangement");
}

}  // namespace detail

// Freeness is decided by the minimal-generator pattern of D0(A) and
// cross-checked against the du Plessis-Wall equality (free iff 2r < d and
// tau = tau_max(d,r)); a mismatch between the two routes is a hard error.
// When 2r >= d a generator of degree d-1-r < r would contradict minimality
// of r, so neither the free nor the nearly-free pattern can occur and the
// generator computation is skipped.
inline FreenessClassification classify_freeness(JacobianSystem& sys, const IncidenceData& inc) {
    const Arrangement& a = sys.arrangement();
    detail::require_essential_l3(a, "classify_freeness");
    FreenessClassification out;
    out.d = sys.d();
    out.mdr = mdr_with_witness(sys).r;
    out.tau = tjurina(inc.n);
    out.tau_max_at_mdr = tau_max(out.d, out.mdr);
    const int d = out.d, r = out.mdr;
    bool tau_free = 2 * r < d && out.tau == out.tau_max_at_mdr;

    bool mingen_free = false, mingen_nearly = false;
    if (2 * r <= d) {
        std::map<int, int> gens = minimal_generator_degrees(sys, d);
        std::map<int, int> free_pattern, nearly_pattern;
        free_pattern[r] += 1;
        free_pattern[d - 1 - r] += 1;
        nearly_pattern[r] += 1;
        nearly_pattern[d - r] += 2;
        mingen_free = gens == free_pattern;
        mingen_nearly = gens == nearly_pattern;
    }
    if (mingen_free != tau_free) {
        throw ConsistencyError(
            "freeness cross-check failed: generator pattern says " +
            std::string(mingen_free ? "free" : "non-free") + ", tau criterion says " +
            std::string(tau_free ? "free" : "non-free") + " (d=" + std::to_string(d) +
            ", r=" + std::to_string(r) + ", tau=" + std::to_string(out.tau) + ")");
    }
    out.is_free = mingen_free;
    out.is_nearly_free = mingen_nearly;
    out.is_maximal_tjurina = out.tau == out.tau_max_at_mdr;
    if (out.is_free) {
        out.exponents = {1, r, d - 1 - r};
        out.labels.push_back("Free");
    }
    if (out.is_nearly_free) {
        out.exponents = {1, r, d - r, d - r};
        out.labels.push_back("NearlyFree");
    }
    if (out.is_maximal_tjurina) out.labels.push_back("MaximalTjurina");
    if (out.labels.empty()) out.labels.push_back("Other");
    return out;
}

inline FreenessClassification classify_freeness(const Arrangement& a) {
    JacobianSystem sys(a);
    return classify_freeness(sys, intersection_points(a));
}

// ---------------------------------------------------------------------------
// Multiplicity case analysis (relative to a point of maximal multiplicity)
// ---------------------------------------------------------------------------

enum class MultiplicityCase { A, B1, B2 };

inline const char* to_string(MultiplicityCase c) {
    switch (c) {
        case MultiplicityCase::A: return "A";
        case MultiplicityCase::B1: return "B1";
        default: return "B2";
    }
}

// Case A: r = d - m; Subcase B1: r = m - 1 (then 2m < d + 1); Subcase B2:
// m <= r <= d - m - 1. The trichotomy is exhaustive; a fall-through is a bug.
inline MultiplicityCase classify_multiplicity_case(const Arrangement& a) {
    detail::require_essential_l3(a, "classify_multiplicity_case");
    if (a.size() < 3) throw InputError("classify_multiplicity_case: d must be >= 3");
    int m = max_multiplicity(a).first;
    int r = mdr(a);
    int d = a.size();
    if (r == d - m) return MultiplicityCase::A;
    if (r == m - 1) {
        if (2 * m >= d + 1) {
            throw ConsistencyError("multiplicity case B1 with 2m >= d+1 (trichotomy violated)");
        }
        return MultiplicityCase::B1;
    }
    if (m <= r && r <= d - m - 1) return MultiplicityCase::B2;
    throw ConsistencyError("multiplicity trichotomy fall-through: d=" + std::to_string(d) +
                           " m=" + std::to_string(m) + " r=" + std::to_string(r));
}

// When 2m >= d the value of r is forced by the weak combinatorics: r = d-m
// when 2m >= d+1; when 2m = d the Tjurina number separates the free subcase
// B1 (tau = (d-1)^2 - (m-1)(d-m)) from case A.
inline std::optional<int> determined_by_weak_combinatorics(const Arrangement& a) {
    detail::require_essential_l3(a, "determined_by_weak_combinatorics");
    IncidenceData inc = intersection_points(a);
    int d = inc.d;
    int m = 0;
    for (const auto& [j, nj] : inc.n) {
        if (nj > 0) m = std::max(m, j);
    }
    if (2 * m >= d + 1) return d - m;
    if (2 * m == d) {
        long long tau = tjurina(inc.n);
        long long b1_tau = static_cast<long long>(d - 1) * (d - 1) -
                           static_cast<long long>(m - 1) * (d - m);
        return tau == b1_tau ? m - 1 : d - m;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Combinatorial prediction of r for arrangements with only double and
// triple points (defined exactly when n_3 <= 5)
// ---------------------------------------------------------------------------

struct PredictedR {
    std::optional<int> r;
    std::string reason;  // set when undetermined
};

namespace detail {

struct TripleIncidence {
    std::vector<int> triple_points;              // indices into inc.points
    std::map<int, std::vector<int>> line_triples;  // line -> triple point indices on it
};

inline TripleIncidence triple_incidence(const IncidenceData& inc) {
    TripleIncidence out;
    for (size_t i = 0; i < inc.points.size(); ++i) {
        if (inc.points[i].multiplicity == 3) {
            out.triple_points.push_back(static_cast<int>(i));
            for (int l : inc.points[i].line_indices) {
                out.line_triples[l].push_back(static_cast<int>(i));
            }
        }
    }
    return out;
}

// every line through a triple point carries a second one
inline bool no_lonely_triple_line(const TripleIncidence& t) {
    for (const auto& [line, pts] : t.line_triples) {
        if (pts.size() < 2) return false;
    }
    return true;
}

// the 4 triple points pairwise joined by 6 distinct arrangement lines,
// each carrying exactly 2 of them: the A(2,2,3) sub-incidence
inline bool k4_pattern(const TripleIncidence& t) {
    if (t.triple_points.size() != 4 || t.line_triples.size() != 6) return false;
    for (const auto& [line, pts] : t.line_triples) {
        if (pts.size() != 2) return false;
    }
    return true;
}

// one line with 3 triple points, six lines with 2, each joining a point on
// the 3-line to a point off it: the B sub-incidence
inline bool b_pattern(const TripleIncidence& t) {
    if (t.triple_points.size() != 5 || t.line_triples.size() != 7) return false;
    const std::vector<int>* axis = nullptr;
    int axis_count = 0, pair_count = 0;
    for (const auto& [line, pts] : t.line_triples) {
        if (pts.size() == 3) {
            ++axis_count;
            axis = &pts;
        } else if (pts.size() == 2) {
            ++pair_count;
        } else {
            return false;
        }
    }
    if (axis_count != 1 || pair_count != 6) return false;
    for (const auto& [line, pts] : t.line_triples) {
        if (pts.size() != 2) continue;
        int on_axis = 0;
        for (int p : pts) {
            if (std::find(axis->begin(), axis->end(), p) != axis->end()) ++on_axis;
        }
        if (on_axis != 1) return false;
    }
    return true;
}

}  // namespace detail

inline PredictedR predict_r_from_combinatorics(const Arrangement& a) {
    detail::require_essential_l3(a, "predict_r_from_combinatorics");
    IncidenceData inc = intersection_points(a);
    const int d = inc.d;
    for (const auto& [j, nj] : inc.n) {
        if (j >= 4 && nj > 0) {
            return {std::nullopt, "point of multiplicity " + std::to_string(j) + " present"};
        }
    }
    auto n3_it = inc.n.find(3);
    int n3 = n3_it == inc.n.end() ? 0 : n3_it->second;
    if (n3 == 0) return {d - 2, ""};
    if (n3 <= 3) return {d - 3, ""};
    detail::TripleIncidence trip = detail::triple_incidence(inc);
    if (n3 == 4) {
        if (!detail::no_lonely_triple_line(trip)) return {d - 3, ""};
        if (detail::k4_pattern(trip)) return {d - 4, ""};
        return {std::nullopt, "n3=4 with connected triples but no A(2,2,3) sub-incidence"};
    }
    if (n3 == 5) {
        if (detail::no_lonely_triple_line(trip)) {
            // case (B)
            if (detail::b_pattern(trip)) return {d - 4, ""};
            return {std::nullopt, "n3=5 without lonely lines but no B sub-incidence"};
        }
        // case (A): delete the smallest-index line carrying exactly one triple point
        int del = -1;
        for (const auto& [line, pts] : trip.line_triples) {
            if (pts.size() == 1) {
                del = line;
                break;
            }
        }
        IncidenceData sub = intersection_points(a.without(del));
        auto sub_n3 = sub.n.find(3);
        if (sub_n3 == sub.n.end() || sub_n3->second != 4) {
            throw ConsistencyError("predict_r: deletion of a lonely line did not leave n3 = 4");
        }
        detail::TripleIncidence sub_trip = detail::triple_incidence(sub);
        bool remainder_is_a223_plus_generic =
            detail::no_lonely_triple_line(sub_trip) && detail::k4_pattern(sub_trip);
        return {remainder_is_a223_plus_generic ? d - 4 : d - 3, ""};
    }
    return {std::nullopt, "n3 = " + std::to_string(n3) + " >= 6: r is not determined by the combinatorics"};
}

// ---------------------------------------------------------------------------
// Ziegler restriction / Yoshinaga criterion
// ---------------------------------------------------------------------------

// Adopted reading of the criterion: A is free with exp (1,d2,d3) exactly
// when b_2^0(A) equals the product of the Ziegler restriction exponents.
inline bool yoshinaga_free_check(const Arrangement& a, int h_index) {
    detail::require_essential_l3(a, "yoshinaga_free_check");
    MultiExponents e = multi_exponents(ziegler_restriction(a, h_index));
    IncidenceData inc = intersection_points(a);
    return inc.b2_zero == static_cast<long long>(e.e1) * e.e2;
}

}  // namespace logder
