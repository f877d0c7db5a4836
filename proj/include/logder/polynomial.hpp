#pragma once

#include <vector>

#include "logder/monomial.hpp"
#include "logder/rational.hpp"

namespace logder {

// Dense homogeneous polynomial: coefficient vector over the graded-lex
// monomial basis of its degree. The zero polynomial exists at every degree.
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial(int nvars, int degree)
        : nvars_(nvars), degree_(degree),
          coeffs_(static_cast<size_t>(monomial_table(degree, nvars).size())) {}

    static HomogeneousPolynomial linear_form(const std::vector<Int>& form) {
        HomogeneousPolynomial p(static_cast<int>(form.size()), 1);
        for (size_t i = 0; i < form.size(); ++i) p.coeffs_[i] = Rational(form[i]);
        return p;
    }

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational& operator[](int i) { return coeffs_[static_cast<size_t>(i)]; }
    const Rational& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }

    const MonomialTable& table() const { return monomial_table(degree_, nvars_); }

    bool is_zero() const {
        for (const Rational& c : coeffs_) {
            if (c != 0) return false;
        }
        return true;
    }

    HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& o) {
        require_same_shape(o);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    HomogeneousPolynomial& operator-=(const HomogeneousPolynomial& o) {
        require_same_shape(o);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    HomogeneousPolynomial& operator*=(const Rational& s) {
        for (Rational& c : coeffs_) c *= s;
        return *this;
    }

    friend HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
        a += b;
        return a;
    }
    friend HomogeneousPolynomial operator-(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
        a -= b;
        return a;
    }
    friend HomogeneousPolynomial operator*(HomogeneousPolynomial a, const Rational& s) {
        a *= s;
        return a;
    }

    friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& a,
                                           const HomogeneousPolynomial& b) {
        if (a.nvars_ != b.nvars_) throw ConsistencyError("polynomial nvars mismatch");
        HomogeneousPolynomial out(a.nvars_, a.degree_ + b.degree_);
        const auto& ta = a.table().basis();
        const auto& tb = b.table().basis();
        const auto& tout = out.table();
        std::vector<int> exps(static_cast<size_t>(a.nvars_));
        for (size_t i = 0; i < ta.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < tb.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                for (size_t v = 0; v < exps.size(); ++v) {
                    exps[v] = ta[i].exps[v] + tb[j].exps[v];
                }
                out.coeffs_[static_cast<size_t>(tout.index_of(exps))] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

private:
    void require_same_shape(const HomogeneousPolynomial& o) const {
        if (nvars_ != o.nvars_ || degree_ != o.degree_) {
            throw ConsistencyError("polynomial shape mismatch");
        }
    }

    int nvars_;
    int degree_;
    std::vector<Rational> coeffs_;
};

// d(p)/d(x_i). Degree drops by one; the derivative of a constant is the zero
// polynomial at degree 0.
inline HomogeneousPolynomial partial_derivative(const HomogeneousPolynomial& p, int var_index) {
    if (var_index < 0 || var_index >= p.nvars()) {
        throw InputError("partial_derivative: variable index out of range");
    }
    int out_degree = p.degree() > 0 ? p.degree() - 1 : 0;
    HomogeneousPolynomial out(p.nvars(), out_degree);
    if (p.degree() == 0) return out;
    const auto& basis = p.table().basis();
    const auto& tout = out.table();
    std::vector<int> exps(static_cast<size_t>(p.nvars()));
    for (size_t i = 0; i < basis.size(); ++i) {
        int e = basis[i].exps[static_cast<size_t>(var_index)];
        if (e == 0 || p[static_cast<int>(i)] == 0) continue;
        exps = basis[i].exps;
        exps[static_cast<size_t>(var_index)] = e - 1;
        out[tout.index_of(exps)] += p[static_cast<int>(i)] * Rational(e);
    }
    return out;
}

inline HomogeneousPolynomial product_of_linear_forms(int nvars,
                                                     const std::vector<std::vector<Int>>& forms) {
    HomogeneousPolynomial q(nvars, 0);
    q[0] = 1;
    for (const auto& f : forms) q = q * HomogeneousPolynomial::linear_form(f);
    return q;
}

}  // namespace logder
