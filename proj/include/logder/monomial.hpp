#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "logder/errors.hpp"

namespace logder {

// Exponent vector of a monomial in `nvars` variables. The global term order
// is graded lexicographic with x_1 > x_2 > ... > x_n.
struct Monomial {
    std::vector<int> exps;

    int degree() const {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }

    // true iff *this precedes o in the basis, i.e. *this is graded-lex greater.
    bool graded_lex_before(const Monomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da > db;
        return exps > o.exps;
    }
};

inline std::uint64_t pack_exponents(const std::vector<int>& exps) {
    // 8 bits per variable is plenty at desk scale (degree <= 255, nvars <= 8)
    std::uint64_t key = 0;
    for (int e : exps) key = (key << 8) | static_cast<std::uint64_t>(e & 0xff);
    return key;
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// All monomials of the given total degree, in decreasing graded-lex order.
inline std::vector<Monomial> monomial_basis(int degree, int nvars) {
    if (degree < 0 || nvars < 1) throw InputError("monomial_basis: bad degree/nvars");
    std::vector<Monomial> out;
    out.reserve(static_cast<size_t>(binomial(degree + nvars - 1, nvars - 1)));
    std::vector<int> cur(static_cast<size_t>(nvars), 0);
    // enumerate exponent vectors in decreasing lex order
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            cur[static_cast<size_t>(var)] = remaining;
            out.push_back(Monomial{cur});
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[static_cast<size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

// Basis of one graded piece with O(1) monomial -> index lookup.
class MonomialTable {
public:
    MonomialTable(int degree, int nvars)
        : degree_(degree), nvars_(nvars), basis_(monomial_basis(degree, nvars)) {
        index_.reserve(basis_.size() * 2);
        for (size_t i = 0; i < basis_.size(); ++i) {
            index_.emplace(pack_exponents(basis_[i].exps), static_cast<int>(i));
        }
    }

    int degree() const { return degree_; }
    int nvars() const { return nvars_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    int size() const { return static_cast<int>(basis_.size()); }

    int index_of(const std::vector<int>& exps) const {
        auto it = index_.find(pack_exponents(exps));
        if (it == index_.end()) throw ConsistencyError("monomial not in table");
        return it->second;
    }

private:
    int degree_;
    int nvars_;
    std::vector<Monomial> basis_;
    std::unordered_map<std::uint64_t, int> index_;
};

// Shared cache; tables are immutable once built.
inline const MonomialTable& monomial_table(int degree, int nvars) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<MonomialTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(degree, nvars);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<MonomialTable>(degree, nvars)).first;
    }
    return *it->second;
}

}  // namespace logder
