#pragma once

#include <map>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/matrix.hpp"

namespace logder {

// Restriction A^H with Ziegler multiplicities. The restricted arrangement
// lives in nvars-1 variables, over the deterministic basis of H given by the
// canonical kernel basis of the 1 x nvars matrix [alpha_H].
struct Restriction {
    int source_index = 0;
    Arrangement restricted;
    std::vector<int> multiplicities;  // parallel to restricted.hyperplanes()

    int size() const { return restricted.size(); }

    int total_multiplicity() const {
        int s = 0;
        for (int m : multiplicities) s += m;
        return s;
    }
};

inline Restriction restrict_arrangement(const Arrangement& a, int h_index) {
    if (h_index < 0 || h_index >= a.size()) throw InputError("restrict: hyperplane index out of range");
    if (a.size() < 2) throw InputError("restrict: need at least 2 hyperplanes");
    const int n = a.nvars();
    IntegerMatrix hm;
    hm.rows = 1;
    hm.cols = n;
    hm.row.push_back(a.line(h_index).coeffs);
    std::vector<std::vector<Int>> basis = kernel_basis(hm).basis;  // n-1 vectors
    if (static_cast<int>(basis.size()) != n - 1) throw ConsistencyError("restrict: hyperplane kernel defect");

    std::map<Hyperplane, int> mult;
    std::vector<Hyperplane> order;
    for (int i = 0; i < a.size(); ++i) {
        if (i == h_index) continue;
        std::vector<Int> pulled(static_cast<size_t>(n - 1));
        for (int t = 0; t < n - 1; ++t) {
            pulled[static_cast<size_t>(t)] = a.line(i).eval(basis[static_cast<size_t>(t)]);
        }
        Hyperplane img(pulled);  // throws only if H subset of line i, impossible for distinct lines
        auto it = mult.find(img);
        if (it == mult.end()) {
            mult.emplace(img, 1);
            order.push_back(img);
        } else {
            ++it->second;
        }
    }
    Restriction out{h_index, Arrangement(n - 1), {}};
    for (const auto& h : order) {
        out.restricted.add(h);
        out.multiplicities.push_back(mult.at(h));
    }
    return out;
}

// Rank-2 multiarrangement: points on the projective line with multiplicities.
struct Multiarrangement1D {
    struct WeightedPoint {
        std::vector<Int> point;  // primitive pair, first nonzero entry positive
        int multiplicity = 1;
    };
    std::vector<WeightedPoint> points;

    int total_multiplicity() const {
        int s = 0;
        for (const auto& p : points) s += p.multiplicity;
        return s;
    }
};

// zero locus of a binary form (u,v) is the point (v : -u)
inline std::vector<Int> binary_form_zero(const std::vector<Int>& form) {
    std::vector<Int> p{form[1], -form[0]};
    normalize_primitive(p);
    return p;
}

inline Multiarrangement1D ziegler_restriction(const Arrangement& a, int h_index) {
    if (a.nvars() != 3) throw InputError("ziegler_restriction requires a line arrangement");
    Restriction r = restrict_arrangement(a, h_index);
    Multiarrangement1D out;
    for (int i = 0; i < r.size(); ++i) {
        out.points.push_back({binary_form_zero(r.restricted.line(i).coeffs),
                              r.multiplicities[static_cast<size_t>(i)]});
    }
    return out;
}

}  // namespace logder
