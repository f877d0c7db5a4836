#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "logder/arrangement.hpp"

namespace logder {

// ---------------------------------------------------------------------------
// Intersection points and weak combinatorics (line arrangements, nvars = 3)
// ---------------------------------------------------------------------------

struct IncidencePoint {
    std::vector<Int> coords;        // primitive, first nonzero entry positive
    std::vector<int> line_indices;  // sorted
    int multiplicity = 0;
};

struct IncidenceData {
    int d = 0;
    std::vector<IncidencePoint> points;   // sorted by coords
    std::map<int, int> n;                 // j -> n_j, only positive entries
    long long b2 = 0;
    long long b2_zero = 0;
    std::array<long long, 4> char_poly{};  // chi(A;t), descending powers t^3..t^0

    const IncidencePoint* find(const std::vector<Int>& coords) const {
        for (const auto& p : points) {
            if (p.coords == coords) return &p;
        }
        return nullptr;
    }
};

inline std::vector<Int> cross_product(const std::vector<Int>& a, const std::vector<Int>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// All pairwise intersection points with incidence lists; every pair of
// distinct projective lines meets in exactly one point, so
// sum_p binom(m_p,2) = binom(d,2) must hold (checked).
inline IncidenceData intersection_points(const Arrangement& a) {
    if (a.nvars() != 3) throw InputError("intersection_points requires a line arrangement (3 vars)");
    if (a.size() < 2) throw InputError("intersection_points requires at least 2 lines");
    const int d = a.size();
    std::map<std::vector<Int>, std::set<int>> merged;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            std::vector<Int> p = cross_product(a.line(i).coeffs, a.line(j).coeffs);
            if (!normalize_primitive(p)) throw ConsistencyError("coincident lines in arrangement");
            auto& s = merged[p];
            s.insert(i);
            s.insert(j);
        }
    }
    IncidenceData out;
    out.d = d;
    long long pair_count = 0;
    for (auto& [coords, lines] : merged) {
        IncidencePoint pt;
        pt.coords = coords;
        pt.line_indices.assign(lines.begin(), lines.end());
        pt.multiplicity = static_cast<int>(pt.line_indices.size());
        pair_count += binomial(pt.multiplicity, 2);
        out.b2 += pt.multiplicity - 1;
        out.n[pt.multiplicity] += 1;
        out.points.push_back(std::move(pt));
    }
    if (pair_count != binomial(d, 2)) {
        throw ConsistencyError("incidence bookkeeping lost a line pair");
    }
    out.b2_zero = out.b2 - d + 1;
    // chi(A;t) = (t-1)(t^2 - (d-1)t + b2_zero)
    out.char_poly = {1, -d, out.b2, -out.b2_zero};
    return out;
}

// m(A) and one witness point; ties broken by smallest canonical coordinates.
inline std::pair<int, std::vector<Int>> max_multiplicity(const Arrangement& a) {
    IncidenceData inc = intersection_points(a);
    int m = 0;
    const IncidencePoint* best = nullptr;
    for (const auto& p : inc.points) {
        if (p.multiplicity > m) {
            m = p.multiplicity;
            best = &p;
        }
    }
    return {m, best->coords};
}

inline std::map<int, int> weak_combinatorics(const Arrangement& a) {
    return intersection_points(a).n;
}

inline bool weak_combinatorics_equal(const Arrangement& a, const Arrangement& b) {
    return weak_combinatorics(a) == weak_combinatorics(b);
}

// ---------------------------------------------------------------------------
// Lattice isomorphism (line-point incidence structures)
// ---------------------------------------------------------------------------

namespace detail {

struct IncidenceGraph {
    int nlines = 0;
    std::vector<std::vector<int>> point_lines;   // per point, sorted line list
    std::vector<std::vector<int>> line_points;   // per line, sorted point list
    std::vector<std::vector<int>> point_of_pair; // nlines x nlines, -1 on diagonal

    explicit IncidenceGraph(const Arrangement& a) {
        IncidenceData inc = intersection_points(a);
        nlines = a.size();
        point_lines.reserve(inc.points.size());
        line_points.resize(static_cast<size_t>(nlines));
        point_of_pair.assign(static_cast<size_t>(nlines),
                             std::vector<int>(static_cast<size_t>(nlines), -1));
        for (size_t pi = 0; pi < inc.points.size(); ++pi) {
            const auto& lid = inc.points[pi].line_indices;
            point_lines.push_back(lid);
            for (int l : lid) line_points[static_cast<size_t>(l)].push_back(static_cast<int>(pi));
            for (size_t x = 0; x < lid.size(); ++x) {
                for (size_t y = x + 1; y < lid.size(); ++y) {
                    point_of_pair[static_cast<size_t>(lid[x])][static_cast<size_t>(lid[y])] = static_cast<int>(pi);
                    point_of_pair[static_cast<size_t>(lid[y])][static_cast<size_t>(lid[x])] = static_cast<int>(pi);
                }
            }
        }
    }

    int npoints() const { return static_cast<int>(point_lines.size()); }
};

// Color refinement on the bipartite incidence graph; returns stable colors.
inline std::pair<std::vector<int>, std::vector<int>> refine_colors(const IncidenceGraph& g) {
    std::vector<int> lc(static_cast<size_t>(g.nlines), 0);
    std::vector<int> pc(static_cast<size_t>(g.npoints()), 0);
    for (int p = 0; p < g.npoints(); ++p) {
        pc[static_cast<size_t>(p)] = static_cast<int>(g.point_lines[static_cast<size_t>(p)].size());
    }
    for (int iter = 0; iter < g.nlines + g.npoints() + 1; ++iter) {
        // line signatures from point colors, then point signatures from line colors
        std::map<std::vector<int>, int> lsig_ids;
        std::vector<int> nlc(static_cast<size_t>(g.nlines));
        for (int l = 0; l < g.nlines; ++l) {
            std::vector<int> sig{lc[static_cast<size_t>(l)]};
            for (int p : g.line_points[static_cast<size_t>(l)]) sig.push_back(pc[static_cast<size_t>(p)]);
            std::sort(sig.begin() + 1, sig.end());
            auto it = lsig_ids.emplace(sig, static_cast<int>(lsig_ids.size()));
            nlc[static_cast<size_t>(l)] = it.first->second;
        }
        std::map<std::vector<int>, int> psig_ids;
        std::vector<int> npc(static_cast<size_t>(g.npoints()));
        for (int p = 0; p < g.npoints(); ++p) {
            std::vector<int> sig{pc[static_cast<size_t>(p)]};
            for (int l : g.point_lines[static_cast<size_t>(p)]) sig.push_back(nlc[static_cast<size_t>(l)]);
            std::sort(sig.begin() + 1, sig.end());
            auto it = psig_ids.emplace(sig, static_cast<int>(psig_ids.size()));
            npc[static_cast<size_t>(p)] = it.first->second;
        }
        bool stable = nlc == lc && npc == pc;
        lc = std::move(nlc);
        pc = std::move(npc);
        if (stable) break;
    }
    return {lc, pc};
}

inline std::multiset<int> color_histogram(const std::vector<int>& colors) {
    return std::multiset<int>(colors.begin(), colors.end());
}

// Backtracking line-map search preserving the point-of-pair structure.
struct IsoSearch {
    const IncidenceGraph& ga;
    const IncidenceGraph& gb;
    const std::vector<int>& la;  // refined line colors
    const std::vector<int>& lb;
    const std::vector<int>& pa;  // refined point colors
    const std::vector<int>& pb_colors;
    std::vector<int> line_map;    // A line -> B line
    std::vector<bool> line_used;  // B side
    std::vector<int> point_map;   // A point -> B point or -1
    std::vector<bool> point_used;
    std::vector<int> order;       // assignment order of A lines

    IsoSearch(const IncidenceGraph& a, const IncidenceGraph& b,
              const std::vector<int>& ca, const std::vector<int>& cb,
              const std::vector<int>& pca, const std::vector<int>& pcb)
        : ga(a), gb(b), la(ca), lb(cb), pa(pca), pb_colors(pcb),
          line_map(static_cast<size_t>(a.nlines), -1),
          line_used(static_cast<size_t>(b.nlines), false),
          point_map(static_cast<size_t>(a.npoints()), -1),
          point_used(static_cast<size_t>(b.npoints()), false) {
        order.resize(static_cast<size_t>(a.nlines));
        for (int i = 0; i < a.nlines; ++i) order[static_cast<size_t>(i)] = i;
        // assign rare colors first
        std::map<int, int> freq;
        for (int c : ca) ++freq[c];
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return freq[ca[static_cast<size_t>(x)]] < freq[ca[static_cast<size_t>(y)]]; });
    }

    bool extend(size_t k) {
        if (k == order.size()) return true;
        int al = order[k];
        for (int bl = 0; bl < gb.nlines; ++bl) {
            if (line_used[static_cast<size_t>(bl)] || lb[static_cast<size_t>(bl)] != la[static_cast<size_t>(al)]) continue;
            std::vector<std::pair<int, int>> new_points;
            bool ok = true;
            for (size_t k2 = 0; k2 < k && ok; ++k2) {
                int al2 = order[k2];
                int pta = ga.point_of_pair[static_cast<size_t>(al)][static_cast<size_t>(al2)];
                int ptb = gb.point_of_pair[static_cast<size_t>(bl)][static_cast<size_t>(line_map[static_cast<size_t>(al2)])];
                int mapped = point_map[static_cast<size_t>(pta)];
                for (const auto& np : new_points) {
                    if (np.first == pta) {
                        mapped = np.second;
                        break;
                    }
                }
                if (mapped != -1) {
                    ok = mapped == ptb;
                    continue;
                }
                bool taken = point_used[static_cast<size_t>(ptb)];
                for (const auto& np : new_points) {
                    if (np.second == ptb) taken = true;
                }
                if (taken || pa[static_cast<size_t>(pta)] != pb_colors[static_cast<size_t>(ptb)]) {
                    ok = false;
                } else {
                    new_points.emplace_back(pta, ptb);
                }
            }
            if (!ok) continue;
            line_map[static_cast<size_t>(al)] = bl;
            line_used[static_cast<size_t>(bl)] = true;
            for (auto& np : new_points) {
                point_map[static_cast<size_t>(np.first)] = np.second;
                point_used[static_cast<size_t>(np.second)] = true;
            }
            if (extend(k + 1)) return true;
            line_map[static_cast<size_t>(al)] = -1;
            line_used[static_cast<size_t>(bl)] = false;
            for (auto& np : new_points) {
                point_map[static_cast<size_t>(np.first)] = -1;
                point_used[static_cast<size_t>(np.second)] = false;
            }
        }
        return false;
    }
};

}  // namespace detail

// Exact test for isomorphism of the line-point incidence structures.
inline bool same_lattice(const Arrangement& a, const Arrangement& b) {
    if (a.nvars() != 3 || b.nvars() != 3) throw InputError("same_lattice requires line arrangements");
    if (a.size() != b.size()) return false;
    detail::IncidenceGraph ga(a), gb(b);
    if (ga.npoints() != gb.npoints()) return false;
    auto [ca, pa] = detail::refine_colors(ga);
    auto [cb, pb] = detail::refine_colors(gb);
    if (detail::color_histogram(ca) != detail::color_histogram(cb) ||
        detail::color_histogram(pa) != detail::color_histogram(pb)) {
        return false;
    }
    detail::IsoSearch search(ga, gb, ca, cb, pa, pb);
    return search.extend(0);
}

// ---------------------------------------------------------------------------
// Adding lines
// ---------------------------------------------------------------------------

inline int restriction_size_of_line(const Arrangement& enlarged, int line_index) {
    IncidenceData inc = intersection_points(enlarged);
    int count = 0;
    for (const auto& p : inc.points) {
        if (std::binary_search(p.line_indices.begin(), p.line_indices.end(), line_index)) ++count;
    }
    return count;
}

inline AdditionResult add_line(const Arrangement& a, const Hyperplane& line) {
    Arrangement enlarged = a;
    enlarged.add(line);  // throws on duplicates
    int idx = enlarged.size() - 1;
    return AdditionResult{enlarged, a.nvars() == 3 ? restriction_size_of_line(enlarged, idx) : -1};
}

// Deterministically samples an integer line until genericity is certified:
// the new line is distinct from all existing lines and contains no existing
// intersection point (exactly the anchor point when one is supplied).
inline AdditionResult add_generic_line(const Arrangement& a, unsigned long seed,
                                       const std::optional<std::vector<Int>>& through = std::nullopt) {
    if (a.nvars() != 3) throw InputError("add_generic_line requires a line arrangement");
    IncidenceData inc = intersection_points(a);
    std::mt19937_64 rng(seed ^ 0x1ec5d4335ull);
    constexpr int kBudget = 20000;

    std::vector<std::vector<Int>> anchor_basis;
    if (through) {
        IntegerMatrix pm;
        pm.rows = 1;
        pm.cols = 3;
        pm.row.push_back(*through);
        anchor_basis = kernel_basis(pm).basis;  // two independent lines through the point
        if (anchor_basis.size() != 2) throw InputError("add_generic_line: invalid anchor point");
    }

    for (int attempt = 0; attempt < kBudget; ++attempt) {
        long bound = 5 + attempt / 200;
        std::uniform_int_distribution<long> dist(-bound, bound);
        std::vector<Int> cand(3);
        if (through) {
            long s = dist(rng), t = dist(rng);
            if (s == 0 && t == 0) continue;
            for (int i = 0; i < 3; ++i) {
                cand[static_cast<size_t>(i)] = Int(s) * anchor_basis[0][static_cast<size_t>(i)] +
                                               Int(t) * anchor_basis[1][static_cast<size_t>(i)];
            }
        } else {
            for (int i = 0; i < 3; ++i) cand[static_cast<size_t>(i)] = Int(dist(rng));
        }
        if (!normalize_primitive(cand)) continue;
        Hyperplane h(cand);
        if (a.contains(h)) continue;
        bool generic = true;
        for (const auto& p : inc.points) {
            bool vanishes = h.eval(p.coords) == 0;
            bool is_anchor = through && p.coords == *through;
            if (vanishes != is_anchor) {
                generic = false;
                break;
            }
        }
        if (!generic) continue;
        return add_line(a, h);
    }
    throw GenericityError("add_generic_line: retry budget exhausted (pathological input?)");
}

// Smallest canonical point of the given multiplicity (helper for the
// family spec grammar "genericthrough:<double|triple|max>").
inline std::vector<Int> point_of_multiplicity(const Arrangement& a, int mult) {
    IncidenceData inc = intersection_points(a);
    for (const auto& p : inc.points) {
        if (p.multiplicity == mult) return p.coords;
    }
    throw InputError("arrangement has no point of multiplicity " + std::to_string(mult));
}

}  // namespace logder
