#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/matrix.hpp"
#include "logder/polynomial.hpp"
#include "logder/restriction.hpp"

namespace logder {

// theta = sum_i components[i] d/dx_i with homogeneous components of equal
// degree; theta is in D0(A) iff theta(Q) = 0 exactly.
struct Derivation {
    int nvars = 0;
    int degree = 0;
    std::vector<HomogeneousPolynomial> components;

    HomogeneousPolynomial apply(const HomogeneousPolynomial& f) const {
        HomogeneousPolynomial acc(nvars, degree + (f.degree() > 0 ? f.degree() - 1 : 0));
        for (int i = 0; i < nvars; ++i) {
            acc += components[static_cast<size_t>(i)] * partial_derivative(f, i);
        }
        return acc;
    }

    bool is_zero() const {
        for (const auto& c : components) {
            if (!c.is_zero()) return false;
        }
        return true;
    }
};

inline Derivation euler_derivation(int nvars) {
    Derivation e;
    e.nvars = nvars;
    e.degree = 1;
    for (int i = 0; i < nvars; ++i) {
        std::vector<Int> unit(static_cast<size_t>(nvars), Int(0));
        unit[static_cast<size_t>(i)] = 1;
        e.components.push_back(HomogeneousPolynomial::linear_form(unit));
    }
    return e;
}

// Graded pieces of D0(A), assembled degree by degree as the kernel of
// (a_1,...,a_l) |-> sum_i a_i dQ/dx_i : (S_r)^l -> S_{d-1+r}.
// Columns are variable-major: column (i * dim S_r + m) carries the
// coefficient of the m-th monomial of component a_i.
class JacobianSystem {
public:
    explicit JacobianSystem(const Arrangement& a)
        : arr_(a), d_(a.size()), essential_(a.is_essential()) {
        if (d_ < 1) throw InputError("JacobianSystem: empty arrangement");
        HomogeneousPolynomial q = a.defining_polynomial();
        for (int i = 0; i < a.nvars(); ++i) {
            partials_.push_back(partial_derivative(q, i));
        }
        q_ = std::move(q);
    }

    const Arrangement& arrangement() const { return arr_; }
    int d() const { return d_; }
    bool essential() const { return essential_; }
    const HomogeneousPolynomial& q() const { return q_; }

    IntegerMatrix relation_matrix(int r) const {
        if (r < 0) throw InputError("relation degree must be non-negative");
        const int n = arr_.nvars();
        const MonomialTable& cols_t = monomial_table(r, n);
        const MonomialTable& rows_t = monomial_table(r + d_ - 1, n);
        IntegerMatrix m;
        m.rows = rows_t.size();
        m.cols = n * cols_t.size();
        m.row.assign(static_cast<size_t>(m.rows),
                     std::vector<Int>(static_cast<size_t>(m.cols), Int(0)));
        std::vector<int> exps(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            const HomogeneousPolynomial& dq = partials_[static_cast<size_t>(i)];
            const auto& dq_basis = dq.table().basis();
            for (int c = 0; c < cols_t.size(); ++c) {
                const Monomial& mu = cols_t.basis()[static_cast<size_t>(c)];
                int col = i * cols_t.size() + c;
                for (size_t t = 0; t < dq_basis.size(); ++t) {
                    const Rational& coeff = dq[static_cast<int>(t)];
                    if (coeff == 0) continue;
                    for (int v = 0; v < n; ++v) {
                        exps[static_cast<size_t>(v)] =
                            mu.exps[static_cast<size_t>(v)] + dq_basis[t].exps[static_cast<size_t>(v)];
                    }
                    int row = rows_t.index_of(exps);
                    // Q has integer coefficients, so do its partials
                    m.row[static_cast<size_t>(row)][static_cast<size_t>(col)] += coeff.get_num();
                }
            }
        }
        return m;
    }

    const KernelResult& kernel_at(int r) {
        auto it = kernels_.find(r);
        if (it == kernels_.end()) {
            it = kernels_.emplace(r, kernel_basis(relation_matrix(r))).first;
        }
        return it->second;
    }

    int dimension(int r) { return kernel_at(r).nullity(); }

    Derivation derivation_from_vector(int r, const std::vector<Int>& v) const {
        const int n = arr_.nvars();
        const MonomialTable& cols_t = monomial_table(r, n);
        Derivation theta;
        theta.nvars = n;
        theta.degree = r;
        for (int i = 0; i < n; ++i) {
            HomogeneousPolynomial comp(n, r);
            for (int c = 0; c < cols_t.size(); ++c) {
                comp[c] = Rational(v[static_cast<size_t>(i * cols_t.size() + c)]);
            }
            theta.components.push_back(std::move(comp));
        }
        return theta;
    }

private:
    Arrangement arr_;
    int d_;
    bool essential_;
    HomogeneousPolynomial q_{2, 0};
    std::vector<HomogeneousPolynomial> partials_;
    std::map<int, KernelResult> kernels_;
};

inline int d0_dimension(const Arrangement& a, int r) {
    JacobianSystem sys(a);
    return sys.dimension(r);
}

struct MdrResult {
    int r = -1;
    Derivation witness;
};

// Minimal degree of a Jacobian relation. The search starts at r=1 (r=0 is
// only possible, and is reported, for non-essential input) and is capped at
// r = d-1; hitting the cap with no kernel indicates an assembly bug.
inline MdrResult mdr_with_witness(JacobianSystem& sys) {
    int d = sys.d();
    if (d < 2) throw InputError("mdr requires at least 2 hyperplanes");
    int start = sys.essential() ? 1 : 0;
    for (int r = start; r <= d - 1; ++r) {
        const KernelResult& k = sys.kernel_at(r);
        if (k.nullity() > 0) {
            MdrResult out;
            out.r = r;
            out.witness = sys.derivation_from_vector(r, k.basis.front());
            if (out.witness.is_zero() || !out.witness.apply(sys.q()).is_zero()) {
                throw ConsistencyError("mdr witness fails theta(Q) = 0");
            }
            return out;
        }
    }
    throw ConsistencyError("mdr: no Jacobian relation up to degree d-1 (assembly bug)");
}

inline MdrResult mdr_with_witness(const Arrangement& a) {
    JacobianSystem sys(a);
    return mdr_with_witness(sys);
}

// Memoized mdr values; arrangements are tiny compared to the kernel work.
inline int mdr(const Arrangement& a) {
    static std::mutex mu;
    static std::map<std::string, int> memo;
    std::string key = write_arrangement(a);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    int r = mdr_with_witness(a).r;
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::move(key), r);
    return r;
}

// Degrees of a minimal generating set of the truncation of D0(A) in degrees
// <= bound (graded Nakayama: g_k = dim D0_k - dim S_1 * D0_{k-1}).
// Returns a multiset as degree -> count.
inline std::map<int, int> minimal_generator_degrees(JacobianSystem& sys, int bound) {
    const int n = sys.arrangement().nvars();
    if (bound < sys.d() - 1) throw InputError("minimal_generator_degrees: bound must be >= d-1");
    std::map<int, int> gens;
    for (int k = sys.essential() ? 1 : 0; k <= bound; ++k) {
        const KernelResult& cur = sys.kernel_at(k);
        if (cur.nullity() == 0) continue;
        int span_rank = 0;
        const KernelResult* prev = k > 0 ? &sys.kernel_at(k - 1) : nullptr;
        if (prev && prev->nullity() > 0) {
            // x_v * theta lies in D0_k; since the canonical basis of D0_k is
            // supported on identity-patterned free columns, the coordinates of
            // a kernel vector w in that basis are (up to column scaling) the
            // entries w[f] over free columns f. Rank is invariant under the
            // scaling, so the span dimension is the rank of that coordinate
            // matrix.
            const MonomialTable& prev_t = monomial_table(k - 1, n);
            const MonomialTable& cur_t = monomial_table(k, n);
            IntegerMatrix w;
            w.rows = n * prev->nullity();
            w.cols = cur.nullity();
            w.row.reserve(static_cast<size_t>(w.rows));
            std::vector<int> exps(static_cast<size_t>(n));
            for (const auto& theta : prev->basis) {
                for (int v = 0; v < n; ++v) {
                    // shifted[col(i, mu*x_v)] = theta[col(i, mu)]
                    std::vector<Int> shifted(static_cast<size_t>(n) * static_cast<size_t>(cur_t.size()), Int(0));
                    for (int i = 0; i < n; ++i) {
                        for (int c = 0; c < prev_t.size(); ++c) {
                            const Int& val = theta[static_cast<size_t>(i * prev_t.size() + c)];
                            if (val == 0) continue;
                            exps = prev_t.basis()[static_cast<size_t>(c)].exps;
                            exps[static_cast<size_t>(v)] += 1;
                            shifted[static_cast<size_t>(i * cur_t.size() + cur_t.index_of(exps))] = val;
                        }
                    }
                    std::vector<Int> coords(static_cast<size_t>(cur.nullity()));
                    for (int j = 0; j < cur.nullity(); ++j) {
                        coords[static_cast<size_t>(j)] = shifted[static_cast<size_t>(cur.free_cols[static_cast<size_t>(j)])];
                    }
                    w.row.push_back(std::move(coords));
                }
            }
            span_rank = exact_rank(w);
        }
        int g = cur.nullity() - span_rank;
        if (g < 0) throw ConsistencyError("negative generator count (span exceeds module)");
        if (g > 0) gens[k] = g;
    }
    return gens;
}

inline std::map<int, int> minimal_generator_degrees(const Arrangement& a, int bound = -1) {
    JacobianSystem sys(a);
    if (bound < 0) bound = 2 * sys.d();
    return minimal_generator_degrees(sys, bound);
}

// ---------------------------------------------------------------------------
// Exponents of rank-2 multiarrangements on the projective line
// ---------------------------------------------------------------------------

struct MultiExponents {
    int e1 = 0;
    int e2 = 0;
    bool operator==(const MultiExponents& o) const { return e1 == o.e1 && e2 == o.e2; }
};

namespace detail {

// Conditions for theta = a dx + b dy in D(A,m)_k: for each point q with
// multiplicity mu and defining form alpha, alpha^mu must divide
// theta(alpha) = u a + v b. Writing P(q + t w) as a polynomial in t (w a
// fixed transversal direction), this is the vanishing of the coefficients
// of t^i for i < min(mu, k+1).
inline IntegerMatrix multi_condition_matrix(const Multiarrangement1D& m, int k) {
    const MonomialTable& tab = monomial_table(k, 2);
    IntegerMatrix out;
    out.cols = 2 * tab.size();
    out.rows = 0;
    for (const auto& wp : m.points) {
        const Int& q0 = wp.point[0];
        const Int& q1 = wp.point[1];
        // form vanishing at q
        std::vector<Int> alpha{q1, -q0};
        normalize_primitive(alpha);
        const Int& u = alpha[0];
        const Int& v = alpha[1];
        bool w_is_x = u != 0;  // direction transversal to alpha
        int nrows = std::min(wp.multiplicity, k + 1);
        for (int i = 0; i < nrows; ++i) {
            std::vector<Int> row(static_cast<size_t>(out.cols), Int(0));
            for (int c = 0; c < tab.size(); ++c) {
                int e0 = tab.basis()[static_cast<size_t>(c)].exps[0];
                int e1 = tab.basis()[static_cast<size_t>(c)].exps[1];
                // [t^i] (q0 + t w0)^e0 (q1 + t w1)^e1
                Int coeff = 0;
                if (w_is_x) {
                    if (i <= e0) {
                        Int p0, p1;
                        mpz_pow_ui(p0.get_mpz_t(), q0.get_mpz_t(), static_cast<unsigned long>(e0 - i));
                        mpz_pow_ui(p1.get_mpz_t(), q1.get_mpz_t(), static_cast<unsigned long>(e1));
                        coeff = Int(static_cast<long>(binomial(e0, i))) * p0 * p1;
                    }
                } else {
                    if (i <= e1) {
                        Int p0, p1;
                        mpz_pow_ui(p0.get_mpz_t(), q0.get_mpz_t(), static_cast<unsigned long>(e0));
                        mpz_pow_ui(p1.get_mpz_t(), q1.get_mpz_t(), static_cast<unsigned long>(e1 - i));
                        coeff = Int(static_cast<long>(binomial(e1, i))) * p0 * p1;
                    }
                }
                if (coeff == 0) continue;
                row[static_cast<size_t>(c)] = u * coeff;
                row[static_cast<size_t>(tab.size() + c)] = v * coeff;
            }
            out.row.push_back(std::move(row));
            ++out.rows;
        }
    }
    return out;
}

}  // namespace detail

inline int multiarrangement_dimension(const Multiarrangement1D& m, int k) {
    return nullity(detail::multi_condition_matrix(m, k));
}

// (e1, e2) with e1 <= e2 and e1 + e2 = |m|; rank-2 multiarrangements on the
// projective line are always free.
inline MultiExponents multi_exponents(const Multiarrangement1D& m) {
    if (m.points.empty()) throw InputError("multi_exponents: empty multiarrangement");
    int total = m.total_multiplicity();
    for (int k = 0; 2 * k <= total; ++k) {
        if (multiarrangement_dimension(m, k) > 0) {
            return MultiExponents{k, total - k};
        }
    }
    throw ConsistencyError("multi_exponents: no derivation up to |m|/2");
}

// ---------------------------------------------------------------------------
// Profile: the per-degree dimension table plus mdr and generator data
// ---------------------------------------------------------------------------

struct SyzygyProfile {
    int d = 0;
    bool essential = true;
    std::map<int, int> dims;  // r -> dim D0(A)_r for r <= dim_cap
    int mdr = -1;
    std::vector<Derivation> basis_at_mdr;
    std::map<int, int> mingen_degrees;  // degree -> count, truncation-relative
    int mingen_bound = 0;
    int dim_cap = 0;
};

struct ProfileOptions {
    int dim_cap = -1;       // default: d - 1
    int mingen_bound = -1;  // default: 2d
    bool want_mingens = true;
};

inline SyzygyProfile compute_syzygy_profile(const Arrangement& a, ProfileOptions opts = {}) {
    JacobianSystem sys(a);
    SyzygyProfile out;
    out.d = sys.d();
    out.essential = sys.essential();
    out.dim_cap = opts.dim_cap >= 0 ? opts.dim_cap : sys.d() - 1;
    MdrResult m = mdr_with_witness(sys);
    out.mdr = m.r;
    for (const auto& v : sys.kernel_at(m.r).basis) {
        out.basis_at_mdr.push_back(sys.derivation_from_vector(m.r, v));
    }
    for (int r = 0; r <= out.dim_cap; ++r) out.dims[r] = sys.dimension(r);
    if (opts.want_mingens) {
        out.mingen_bound = opts.mingen_bound >= 0 ? opts.mingen_bound : 2 * sys.d();
        out.mingen_degrees = minimal_generator_degrees(sys, out.mingen_bound);
    }
    return out;
}

}  // namespace logder
