#pragma once

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "logder/matrix.hpp"
#include "logder/polynomial.hpp"
#include "logder/rational.hpp"

namespace logder {

// A linear hyperplane through the origin, stored in canonical form:
// primitive integer coefficients with the first nonzero entry positive.
struct Hyperplane {
    std::vector<Int> coeffs;

    Hyperplane() = default;

    explicit Hyperplane(std::vector<Int> c) : coeffs(std::move(c)) {
        if (!normalize_primitive(coeffs)) throw InputError("zero linear form is not a hyperplane");
    }

    static Hyperplane from_rationals(const std::vector<Rational>& c) {
        Int scale = 1;
        for (const Rational& x : c) scale = int_lcm(scale, x.get_den());
        std::vector<Int> v(c.size());
        for (size_t i = 0; i < c.size(); ++i) v[i] = c[i].get_num() * (scale / c[i].get_den());
        return Hyperplane(std::move(v));
    }

    int nvars() const { return static_cast<int>(coeffs.size()); }

    // value of the form at an integer point
    Int eval(const std::vector<Int>& point) const {
        Int acc = 0;
        for (size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * point[i];
        return acc;
    }

    bool operator==(const Hyperplane& o) const { return coeffs == o.coeffs; }
    bool operator<(const Hyperplane& o) const { return coeffs < o.coeffs; }

    std::string to_string() const {
        std::ostringstream os;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (i) os << ' ';
            os << coeffs[i];
        }
        return os.str();
    }
};

class Arrangement {
public:
    explicit Arrangement(int nvars) : nvars_(nvars) {
        if (nvars < 2) throw InputError("arrangement needs at least 2 variables");
    }

    Arrangement(int nvars, const std::vector<std::vector<Int>>& forms) : Arrangement(nvars) {
        for (const auto& f : forms) add(Hyperplane(f));
    }

    int nvars() const { return nvars_; }
    int size() const { return static_cast<int>(hyperplanes_.size()); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const Hyperplane& line(int i) const { return hyperplanes_[static_cast<size_t>(i)]; }

    void add(Hyperplane h) {
        if (h.nvars() != nvars_) throw InputError("hyperplane arity mismatch");
        if (index_.count(h)) throw InputError("duplicate hyperplane: " + h.to_string());
        index_.insert(h);
        hyperplanes_.push_back(std::move(h));
    }

    bool contains(const Hyperplane& h) const { return index_.count(h) > 0; }

    int find(const Hyperplane& h) const {
        for (size_t i = 0; i < hyperplanes_.size(); ++i) {
            if (hyperplanes_[i] == h) return static_cast<int>(i);
        }
        return -1;
    }

    Arrangement without(int index) const {
        Arrangement out(nvars_);
        for (int i = 0; i < size(); ++i) {
            if (i != index) out.add(hyperplanes_[static_cast<size_t>(i)]);
        }
        return out;
    }

    // rank of the coefficient matrix equals nvars
    bool is_essential() const {
        IntegerMatrix m;
        m.rows = size();
        m.cols = nvars_;
        for (const auto& h : hyperplanes_) m.row.push_back(h.coeffs);
        return exact_rank(m) == nvars_;
    }

    // Q(A), the product of the defining linear forms
    HomogeneousPolynomial defining_polynomial() const {
        std::vector<std::vector<Int>> forms;
        forms.reserve(hyperplanes_.size());
        for (const auto& h : hyperplanes_) forms.push_back(h.coeffs);
        return product_of_linear_forms(nvars_, forms);
    }

    bool operator==(const Arrangement& o) const {
        return nvars_ == o.nvars_ && hyperplanes_ == o.hyperplanes_;
    }

private:
    int nvars_;
    std::vector<Hyperplane> hyperplanes_;
    std::set<Hyperplane> index_;
};

// A = A' + {line}; reports |A^H| for the added line as well.
struct AdditionResult {
    Arrangement arrangement;
    int restriction_size;  // |A^H| of the new line inside the new arrangement
};

// File format: '#' comment lines; optional "vars N" header (default 3);
// then one hyperplane per line as N whitespace-separated rationals.
inline Arrangement parse_arrangement(std::istream& in) {
    std::string line;
    int nvars = 3;
    bool saw_header = false, saw_line = false;
    std::vector<std::vector<Rational>> rows;
    while (std::getline(in, line)) {
        size_t pos = line.find('#');
        if (pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (!saw_header && !saw_line && toks[0] == "vars") {
            if (toks.size() != 2) throw InputError("malformed vars header");
            nvars = std::stoi(toks[1]);
            if (nvars < 2 || nvars > 8) throw InputError("vars out of supported range [2,8]");
            saw_header = true;
            continue;
        }
        saw_line = true;
        if (static_cast<int>(toks.size()) != nvars) {
            throw InputError("expected " + std::to_string(nvars) + " coefficients, got " +
                             std::to_string(toks.size()) + " in line '" + line + "'");
        }
        std::vector<Rational> coeffs;
        coeffs.reserve(toks.size());
        for (const auto& t : toks) coeffs.push_back(parse_rational(t));
        rows.push_back(std::move(coeffs));
    }
    Arrangement a(nvars);
    for (const auto& r : rows) a.add(Hyperplane::from_rationals(r));
    return a;
}

inline Arrangement parse_arrangement(const std::string& text) {
    std::istringstream in(text);
    return parse_arrangement(in);
}

// Canonical writer; re-parsing reproduces the identical arrangement.
inline void write_arrangement(const Arrangement& a, std::ostream& out) {
    out << "vars " << a.nvars() << "\n";
    for (const auto& h : a.hyperplanes()) out << h.to_string() << "\n";
}

inline std::string write_arrangement(const Arrangement& a) {
    std::ostringstream os;
    write_arrangement(a, os);
    return os.str();
}

}  // namespace logder
