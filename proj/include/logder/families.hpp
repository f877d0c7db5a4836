#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/incidence.hpp"
#include "logder/rational.hpp"

namespace logder {

namespace detail {

inline long param_or(const std::map<std::string, long>& params, const std::string& key, long fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

inline long require_param(const std::map<std::string, long>& params, const std::string& key,
                          const std::string& family) {
    auto it = params.find(key);
    if (it == params.end()) throw InputError("family '" + family + "' needs parameter '" + key + "'");
    return it->second;
}

// 3^b x + 2^a y - 2^a 3^b z, the integer form of x/2^a + y/3^b - z
inline std::vector<Int> pow23_form(long a, long b) {
    Int two = int_pow(2, static_cast<unsigned long>(a));
    Int three = int_pow(3, static_cast<unsigned long>(b));
    return {three, two, -(two * three)};
}

inline Arrangement triangle() {
    return Arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

inline Arrangement boolean_arrangement(long l) {
    if (l < 2 || l > 8) throw InputError("boolean arrangement: vars out of range [2,8]");
    Arrangement a(static_cast<int>(l));
    for (long i = 0; i < l; ++i) {
        std::vector<Int> form(static_cast<size_t>(l), Int(0));
        form[static_cast<size_t>(i)] = 1;
        a.add(Hyperplane(form));
    }
    return a;
}

inline Arrangement ziegler(long variant) {
    if (variant == 1) {
        return Arrangement(3, {{1, 0, 0},
                               {0, 1, 0},
                               {1, -1, -1},
                               {1, -1, 1},
                               {2, 1, -2},
                               {1, 3, -3},
                               {3, 2, 3},
                               {1, 5, 5},
                               {7, -4, -1}});
    }
    if (variant == 2) {
        return Arrangement(3, {{1, 0, 0},
                               {0, 1, 0},
                               {4, -5, -5},
                               {1, -1, 1},
                               {16, 13, -20},
                               {1, 3, -3},
                               {3, 2, 3},
                               {1, 5, 5},
                               {7, -4, -1}});
    }
    throw InputError("ziegler variant must be 1 or 2");
}

inline Arrangement a223() {
    return Arrangement(3, {{1, -1, 0}, {1, 1, 0}, {1, 0, -1}, {1, 0, 1}, {0, 1, -1}, {0, 1, 1}});
}

// A_j of the Tjurina-maximal chain: x(x-z)...(x-(k-2)z) y(y-z)...(y-(k-2)z) z
// plus the lines x-y+z, ..., x-y+jz.
inline Arrangement thm100(long k, long j) {
    if (k < 2) throw InputError("thm100: k must be >= 2");
    if (j < 0 || j > k - 1) throw InputError("thm100: j must satisfy 0 <= j <= k-1");
    Arrangement a(3);
    for (long i = 0; i <= k - 2; ++i) a.add(Hyperplane({1, 0, -Int(i)}));
    for (long i = 0; i <= k - 2; ++i) a.add(Hyperplane({0, 1, -Int(i)}));
    a.add(Hyperplane({0, 0, 1}));
    for (long i = 1; i <= j; ++i) a.add(Hyperplane({1, -1, Int(i)}));
    return a;
}

// Continuation of the chain for odd k = 2k'+1 by lines x+y-cz, starting at
// c = 3k' and then taking the smallest larger coefficient that makes the new
// line meet the current arrangement in exactly r'+2 points (the addition
// hypothesis the chain needs). The conclusions are re-verified by the suite.
inline Arrangement prop101(long k, long j) {
    if (k < 3 || k % 2 == 0) throw InputError("prop101: k must be odd and >= 3");
    if (j < 0 || j > 2 * k - 2) throw InputError("prop101: j must satisfy 0 <= j <= 2k-2");
    Arrangement a = thm100(k, std::min(j, k - 1));
    long next_c = 3 * (k - 1) / 2;
    for (long t = k; t <= j; ++t) {
        long r_prev = k - 1 + (t - 1);
        bool added = false;
        for (long c = next_c; c <= next_c + 4 * k && !added; ++c) {
            Hyperplane h(std::vector<Int>{1, 1, -Int(c)});
            if (a.contains(h)) continue;
            AdditionResult res = add_line(a, h);
            if (res.restriction_size == static_cast<int>(r_prev) + 2) {
                a = res.arrangement;
                next_c = c + 1;
                added = true;
            }
        }
        if (!added) throw ConsistencyError("prop101: no admissible x+y-cz line found at step " + std::to_string(t));
    }
    return a;
}

inline Arrangement dminus4(long d) {
    if (d < 8) throw InputError("dminus4: d must be >= 8");
    long p;
    int extras;
    switch (d % 3) {
        case 2: p = (d - 2) / 3; extras = 0; break;
        case 0: p = (d - 3) / 3; extras = 1; break;
        default: p = (d - 4) / 3; extras = 2; break;
    }
    Arrangement a(3, {{1, 0, 0}, {0, 1, 0}});
    a.add(Hyperplane(pow23_form(p + 1, p + 1)));
    for (long j = 1; j <= p; ++j) {
        a.add(Hyperplane(pow23_form(j, j)));
        a.add(Hyperplane(pow23_form(j, j + 1)));
    }
    for (long j = 1; j <= p - 1; ++j) a.add(Hyperplane(pow23_form(j, j + 2)));
    if (extras >= 1) a.add(Hyperplane({27, -8, 0}));
    if (extras >= 2) a.add(Hyperplane({1, -1, 0}));
    return a;
}

inline Arrangement dminus3(long d) {
    if (d < 7) throw InputError("dminus3: d must be >= 7");
    Arrangement a(3, {{1, 0, 0}, {0, 1, 0}});
    long p = d / 2;
    if (d % 2 == 1) a.add(Hyperplane(pow23_form(p, p)));
    for (long j = 1; j <= p - 1; ++j) {
        a.add(Hyperplane(pow23_form(j, j)));
        a.add(Hyperplane(pow23_form(j, j + 1)));
    }
    return a;
}

inline Arrangement b7() {
    return Arrangement(3, {{0, 1, 0},
                           {1, 1, 0},
                           {1, -1, 0},
                           {1, 1, -2},
                           {1, -1, 2},
                           {1, 3, -2},
                           {1, -3, 2}});
}

inline Arrangement ex10(bool extended) {
    Arrangement a(3, {{1, 0, 0},
                      {0, 1, 0},
                      {0, 0, 1},
                      {1, 0, 1},
                      {1, 1, -1},
                      {2, -1, 0},
                      {1, 1, 3}});
    if (extended) a.add(Hyperplane({0, 1, 1}));
    return a;
}

inline Arrangement generic_lines(long d, unsigned long seed) {
    if (d < 3) throw InputError("generic: d must be >= 3");
    Arrangement a = triangle();
    for (long i = 3; i < d; ++i) {
        a = add_generic_line(a, seed * 1000003ul + static_cast<unsigned long>(i)).arrangement;
    }
    return a;
}

}  // namespace detail

// Generator for every explicit family in the corpus. Accepted names:
// triangle, boolean:L, ziegler:1, ziegler:2, a223, thm100 (k, j),
// prop101 (k, j), dminus4 (d), dminus3 (d), b7, ex10a, ex10b,
// generic (d, seed).
inline Arrangement generate_family(const std::string& name, const std::map<std::string, long>& params = {}) {
    using namespace detail;
    std::string base = name;
    std::optional<long> positional;
    if (size_t colon = name.find(':'); colon != std::string::npos) {
        base = name.substr(0, colon);
        try {
            positional = std::stol(name.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("malformed family name '" + name + "'");
        }
    }
    if (base == "triangle") return triangle();
    if (base == "boolean") return boolean_arrangement(positional ? *positional : require_param(params, "l", base));
    if (base == "ziegler") return ziegler(positional ? *positional : require_param(params, "variant", base));
    if (base == "a223") return a223();
    if (base == "thm100") return thm100(require_param(params, "k", base), param_or(params, "j", 0));
    if (base == "prop101") return prop101(require_param(params, "k", base), param_or(params, "j", 0));
    if (base == "dminus4") return dminus4(require_param(params, "d", base));
    if (base == "dminus3") return dminus3(require_param(params, "d", base));
    if (base == "b7") return b7();
    if (base == "ex10a") return ex10(false);
    if (base == "ex10b") return ex10(true);
    if (base == "generic") return generic_lines(require_param(params, "d", base), static_cast<unsigned long>(param_or(params, "seed", 1)));
    throw InputError("unknown family '" + name + "'");
}

// ---------------------------------------------------------------------------
// Inline family specs: "NAME[:params][+suffix]*", e.g.
//   "ziegler:1", "thm100:k=4,j=2", "a223+generic:seed3",
//   "ziegler:2+genericthrough:double:seed7"
// ---------------------------------------------------------------------------

struct FamilySpec {
    std::string name;  // possibly with a positional part, e.g. "ziegler:1"
    std::map<std::string, long> params;
    struct Addition {
        bool through = false;
        std::string selector;  // "double" | "triple" | "max"
        unsigned long seed = 1;
    };
    std::vector<Addition> additions;
    std::string id;  // canonical description for reports
};

inline FamilySpec parse_family_spec(const std::string& spec) {
    FamilySpec out;
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t plus = spec.find('+', start);
        parts.push_back(spec.substr(start, plus == std::string::npos ? plus : plus - start));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    const std::string& head = parts[0];
    if (head.empty()) throw InputError("empty family spec");
    size_t colon = head.find(':');
    std::string tail = colon == std::string::npos ? "" : head.substr(colon + 1);
    out.name = head.substr(0, colon);
    if (!tail.empty()) {
        if (tail.find('=') == std::string::npos) {
            out.name += ":" + tail;  // positional form like ziegler:1
        } else {
            size_t pos = 0;
            while (pos < tail.size()) {
                size_t comma = tail.find(',', pos);
                std::string kv = tail.substr(pos, comma == std::string::npos ? comma : comma - pos);
                size_t eq = kv.find('=');
                if (eq == std::string::npos || eq == 0) throw InputError("malformed family parameter '" + kv + "'");
                try {
                    out.params[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
                } catch (const std::exception&) {
                    throw InputError("malformed family parameter '" + kv + "'");
                }
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
    }
    for (size_t i = 1; i < parts.size(); ++i) {
        FamilySpec::Addition add;
        std::vector<std::string> toks;
        size_t pos = 0;
        while (pos <= parts[i].size()) {
            size_t c = parts[i].find(':', pos);
            toks.push_back(parts[i].substr(pos, c == std::string::npos ? c : c - pos));
            if (c == std::string::npos) break;
            pos = c + 1;
        }
        if (toks[0] == "generic") {
            add.through = false;
        } else if (toks[0] == "genericthrough") {
            add.through = true;
            if (toks.size() < 2) throw InputError("genericthrough needs a point selector");
            add.selector = toks[1];
            if (add.selector != "double" && add.selector != "triple" && add.selector != "max") {
                throw InputError("unknown point selector '" + add.selector + "'");
            }
        } else {
            throw InputError("unknown family suffix '" + parts[i] + "'");
        }
        const std::string& last = toks.back();
        if (last.rfind("seed", 0) == 0 && last.size() > 4) {
            try {
                add.seed = std::stoul(last.substr(4));
            } catch (const std::exception&) {
                throw InputError("malformed seed in '" + parts[i] + "'");
            }
        }
        out.additions.push_back(add);
    }
    out.id = "family:" + spec;
    return out;
}

inline Arrangement realize_family_spec(const FamilySpec& spec) {
    Arrangement a = generate_family(spec.name, spec.params);
    for (const auto& add : spec.additions) {
        if (add.through) {
            std::vector<Int> anchor;
            if (add.selector == "max") {
                anchor = max_multiplicity(a).second;
            } else {
                anchor = point_of_multiplicity(a, add.selector == "double" ? 2 : 3);
            }
            a = add_generic_line(a, add.seed, anchor).arrangement;
        } else {
            a = add_generic_line(a, add.seed).arrangement;
        }
    }
    return a;
}

inline Arrangement arrangement_from_family_spec(const std::string& spec) {
    return realize_family_spec(parse_family_spec(spec));
}

}  // namespace logder
