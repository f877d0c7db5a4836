#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "logder/errors.hpp"
#include "logder/rational.hpp"

namespace logder {

// ---------------------------------------------------------------------------
// Dense matrices
// ---------------------------------------------------------------------------

class RationalMatrix {
public:
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[idx(i, j)]; }
    const Rational& at(int i, int j) const { return a_[idx(i, j)]; }

private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }
    int rows_, cols_;
    std::vector<Rational> a_;
};

// Integer row matrix; the internal currency of the kernel engines. Row
// scaling does not change the right kernel, so rational inputs are scaled
// row-by-row to primitive integer rows.
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Int>> row;

    static IntegerMatrix from_rational(const RationalMatrix& m) {
        IntegerMatrix out;
        out.rows = m.rows();
        out.cols = m.cols();
        out.row.resize(static_cast<size_t>(out.rows));
        for (int i = 0; i < out.rows; ++i) {
            Int scale = 1;
            for (int j = 0; j < out.cols; ++j) {
                scale = int_lcm(scale, m.at(i, j).get_den());
            }
            auto& r = out.row[static_cast<size_t>(i)];
            r.resize(static_cast<size_t>(out.cols));
            for (int j = 0; j < out.cols; ++j) {
                r[static_cast<size_t>(j)] = m.at(i, j).get_num() * (scale / m.at(i, j).get_den());
            }
            normalize_primitive(r);  // no-op on zero rows
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Configuration and mod-p oracle bookkeeping
// ---------------------------------------------------------------------------

enum class KernelEngine { hybrid, bareiss };

struct ExactAlgConfig {
    std::atomic<KernelEngine> engine{KernelEngine::hybrid};
    std::atomic<bool> oracle{true};
};

inline ExactAlgConfig& exactalg_config() {
    static ExactAlgConfig cfg;
    static std::once_flag once;
    std::call_once(once, [] {
        if (const char* e = std::getenv("LOGDER_ENGINE")) {
            if (std::string(e) == "bareiss") cfg.engine = KernelEngine::bareiss;
        }
        if (const char* o = std::getenv("LOGDER_ORACLE")) {
            std::string s(o);
            if (s == "0" || s == "off") cfg.oracle = false;
        }
    });
    return cfg;
}

struct OracleStats {
    std::atomic<long long> checks{0};
    std::atomic<long long> minority_votes{0};  // 1-of-3 disagreements (tolerated)
    std::atomic<long long> failures{0};        // 2-of-3 disagreements (fatal)
};

inline OracleStats& oracle_stats() {
    static OracleStats s;
    return s;
}

namespace detail {

// ---------------------------------------------------------------------------
// Prime fields with Barrett reduction (p < 2^31)
// ---------------------------------------------------------------------------

struct PrimeField {
    std::uint32_t p;
    std::uint64_t magic;  // floor(2^64 / p)

    explicit PrimeField(std::uint32_t prime) : p(prime), magic(~std::uint64_t(0) / prime) {}

    // x < 2^63
    std::uint32_t reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * magic) >> 64);
        std::uint64_t r = x - q * p;
        while (r >= p) r -= p;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return reduce(static_cast<std::uint64_t>(a) * b);
    }

    std::uint32_t inv(std::uint32_t a) const {
        // extended Euclid
        std::int64_t t = 0, newt = 1, r = p, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (r != 1) throw ConsistencyError("PrimeField::inv of non-unit");
        if (t < 0) t += p;
        return static_cast<std::uint32_t>(t);
    }
};

inline std::uint32_t mpz_mod_u32(const Int& v, std::uint32_t p) {
    // fdiv gives a non-negative remainder for negative operands
    return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
}

// Fixed engine prime sequence (descending 31-bit primes), extended
// deterministically past the table if a computation ever needs more.
inline std::uint32_t engine_prime(size_t index) {
    static const std::uint32_t table[] = {
        2147483647u, 2147483629u, 2147483587u, 2147483579u, 2147483563u, 2147483549u, 2147483543u, 2147483497u,
        2147483489u, 2147483477u, 2147483423u, 2147483399u, 2147483353u, 2147483323u, 2147483269u, 2147483249u,
        2147483237u, 2147483179u, 2147483171u, 2147483137u, 2147483123u, 2147483077u, 2147483069u, 2147483059u,
        2147483053u, 2147483033u, 2147483029u, 2147482951u, 2147482949u, 2147482943u, 2147482937u, 2147482921u,
        2147482877u, 2147482873u, 2147482867u, 2147482859u, 2147482819u, 2147482817u, 2147482811u, 2147482801u,
        2147482763u, 2147482739u, 2147482697u, 2147482693u, 2147482681u, 2147482663u, 2147482661u, 2147482621u,
    };
    constexpr size_t n = sizeof(table) / sizeof(table[0]);
    if (index < n) return table[index];
    // continue the descending chain
    static std::mutex mu;
    static std::vector<std::uint32_t> extra;
    std::lock_guard<std::mutex> lock(mu);
    std::uint32_t last = extra.empty() ? table[n - 1] : extra.back();
    while (extra.size() <= index - n) {
        std::uint32_t c = last - 2;
        for (;; c -= 2) {
            Int z(static_cast<unsigned long>(c));
            if (mpz_probab_prime_p(z.get_mpz_t(), 30) > 0) break;
        }
        extra.push_back(c);
        last = c;
    }
    return extra[index - n];
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// ---------------------------------------------------------------------------
// Mod-p reduced row echelon form
// ---------------------------------------------------------------------------

struct ModpEchelon {
    std::vector<int> pivot_cols;
    // present only when requested: rank x cols RREF rows, pivot entries = 1
    std::vector<std::vector<std::uint32_t>> rref;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

inline ModpEchelon modp_echelon(const IntegerMatrix& m, std::uint32_t p, bool want_rref) {
    PrimeField F(p);
    std::vector<std::vector<std::uint32_t>> a(static_cast<size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) {
        a[static_cast<size_t>(i)].resize(static_cast<size_t>(m.cols));
        for (int j = 0; j < m.cols; ++j) {
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                mpz_mod_u32(m.row[static_cast<size_t>(i)][static_cast<size_t>(j)], p);
        }
    }
    ModpEchelon out;
    int lead = 0;
    for (int c = 0; c < m.cols && lead < m.rows; ++c) {
        int piv = -1;
        for (int i = lead; i < m.rows; ++i) {
            if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(lead)]);
        const auto& prow = a[static_cast<size_t>(lead)];
        std::uint32_t pinv = F.inv(prow[static_cast<size_t>(c)]);
        for (int i = lead + 1; i < m.rows; ++i) {
            auto& r = a[static_cast<size_t>(i)];
            std::uint32_t v = r[static_cast<size_t>(c)];
            if (v == 0) continue;
            // r -= (v / pivot) * prow, from column c on
            std::uint64_t f = p - F.mul(v, pinv);
            r[static_cast<size_t>(c)] = 0;
            for (int j = c + 1; j < m.cols; ++j) {
                r[static_cast<size_t>(j)] = F.reduce(r[static_cast<size_t>(j)] + f * prow[static_cast<size_t>(j)]);
            }
        }
        out.pivot_cols.push_back(c);
        ++lead;
    }
    if (!want_rref) return out;

    int rank = out.rank();
    // normalize pivots to 1, then eliminate above, bottom-up
    for (int i = rank - 1; i >= 0; --i) {
        auto& r = a[static_cast<size_t>(i)];
        int c = out.pivot_cols[static_cast<size_t>(i)];
        std::uint32_t pinv = F.inv(r[static_cast<size_t>(c)]);
        if (pinv != 1) {
            for (int j = c; j < m.cols; ++j) {
                r[static_cast<size_t>(j)] = F.mul(r[static_cast<size_t>(j)], pinv);
            }
        }
        for (int k = 0; k < i; ++k) {
            auto& up = a[static_cast<size_t>(k)];
            std::uint32_t v = up[static_cast<size_t>(c)];
            if (v == 0) continue;
            std::uint64_t f = p - v;
            up[static_cast<size_t>(c)] = 0;
            for (int j = c + 1; j < m.cols; ++j) {
                up[static_cast<size_t>(j)] = F.reduce(up[static_cast<size_t>(j)] + f * r[static_cast<size_t>(j)]);
            }
        }
    }
    a.resize(static_cast<size_t>(rank));
    out.rref = std::move(a);
    return out;
}

inline int modp_rank(const IntegerMatrix& m, std::uint32_t p) {
    return modp_echelon(m, p, false).rank();
}

// Rational reconstruction of a mod M: num/den with |num|, den <= sqrt(M/2).
inline bool rational_reconstruct(const Int& a, const Int& modulus, Rational& out) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(modulus / 2).get_mpz_t());
    Int r0 = modulus, r1 = a % modulus;
    if (r1 < 0) r1 += modulus;
    Int s0 = 0, s1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (s1 == 0) return false;
    Int den = s1, num = r1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound) return false;
    if (int_gcd(num, den) != 1) return false;
    out = Rational(num) / Rational(den);
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Kernel computation
// ---------------------------------------------------------------------------

// Canonical basis of the right kernel. Basis vector k corresponds to free
// column free_cols[k]: it is the unique kernel vector with entry 1 at that
// free column and 0 at every other free column (i.e. the vector read off the
// reduced row echelon form), scaled to primitive integers with the first
// nonzero entry positive. This normal form is algorithm-independent.
struct KernelResult {
    std::vector<int> pivot_cols;
    std::vector<int> free_cols;
    std::vector<std::vector<Int>> basis;

    int nullity() const { return static_cast<int>(free_cols.size()); }
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

namespace detail {

inline std::vector<int> complement_cols(const std::vector<int>& pivot_cols, int cols) {
    std::vector<int> free_cols;
    size_t k = 0;
    for (int c = 0; c < cols; ++c) {
        if (k < pivot_cols.size() && pivot_cols[k] == c) {
            ++k;
        } else {
            free_cols.push_back(c);
        }
    }
    return free_cols;
}

// Builds the canonical integer vector from the rational RREF kernel vector
// (value 1 at free col, -R[i][f] at pivot cols).
inline std::vector<Int> normalize_kernel_vector(int cols, int f,
                                                const std::vector<int>& pivot_cols,
                                                const std::vector<Rational>& pivot_vals) {
    Int denom = 1;
    for (const Rational& v : pivot_vals) denom = int_lcm(denom, v.get_den());
    std::vector<Int> w(static_cast<size_t>(cols), Int(0));
    w[static_cast<size_t>(f)] = denom;
    for (size_t i = 0; i < pivot_cols.size(); ++i) {
        w[static_cast<size_t>(pivot_cols[i])] =
            -pivot_vals[i].get_num() * (denom / pivot_vals[i].get_den());
    }
    normalize_primitive(w);
    return w;
}

inline bool vector_in_kernel(const IntegerMatrix& m, const std::vector<Int>& w) {
    std::vector<int> nz;
    for (int j = 0; j < m.cols; ++j) {
        if (w[static_cast<size_t>(j)] != 0) nz.push_back(j);
    }
    Int acc;
    for (int i = 0; i < m.rows; ++i) {
        acc = 0;
        const auto& r = m.row[static_cast<size_t>(i)];
        for (int j : nz) {
            acc += r[static_cast<size_t>(j)] * w[static_cast<size_t>(j)];
        }
        if (acc != 0) return false;
    }
    return true;
}

// Exact fraction-free (Bareiss) elimination; the reference engine.
inline KernelResult bareiss_kernel(const IntegerMatrix& input) {
    std::vector<std::vector<Int>> a = input.row;
    int rows = input.rows, cols = input.cols;
    std::vector<int> pivot_cols;
    Int prev = 1;
    int lead = 0;
    for (int c = 0; c < cols && lead < rows; ++c) {
        int piv = -1;
        for (int i = lead; i < rows; ++i) {
            if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(lead)]);
        const auto& prow = a[static_cast<size_t>(lead)];
        const Int& pv = prow[static_cast<size_t>(c)];
        for (int i = lead + 1; i < rows; ++i) {
            auto& r = a[static_cast<size_t>(i)];
            if (r[static_cast<size_t>(c)] == 0) {
                for (int j = c + 1; j < cols; ++j) {
                    if (r[static_cast<size_t>(j)] != 0) {
                        r[static_cast<size_t>(j)] = pv * r[static_cast<size_t>(j)] / prev;
                    }
                }
            } else {
                const Int rc = r[static_cast<size_t>(c)];
                for (int j = c + 1; j < cols; ++j) {
                    Int t = pv * r[static_cast<size_t>(j)] - rc * prow[static_cast<size_t>(j)];
                    r[static_cast<size_t>(j)] = t / prev;
                }
                r[static_cast<size_t>(c)] = 0;
            }
        }
        prev = pv;
        pivot_cols.push_back(c);
        ++lead;
    }

    KernelResult out;
    out.pivot_cols = pivot_cols;
    out.free_cols = complement_cols(pivot_cols, cols);
    int rank = static_cast<int>(pivot_cols.size());
    for (int f : out.free_cols) {
        // back-substitute the echelon system with x[f] = 1, other free = 0
        std::vector<Rational> x(static_cast<size_t>(rank));
        for (int i = rank - 1; i >= 0; --i) {
            const auto& r = a[static_cast<size_t>(i)];
            Rational acc(r[static_cast<size_t>(f)]);
            for (int j = i + 1; j < rank; ++j) {
                acc += Rational(r[static_cast<size_t>(pivot_cols[static_cast<size_t>(j)])]) * x[static_cast<size_t>(j)];
            }
            x[static_cast<size_t>(i)] = -acc / Rational(r[static_cast<size_t>(pivot_cols[static_cast<size_t>(i)])]);
        }
        // normalize_kernel_vector expects the RREF values R[i][f] = -x[i]
        std::vector<Rational> pivot_vals(static_cast<size_t>(rank));
        for (int i = 0; i < rank; ++i) pivot_vals[static_cast<size_t>(i)] = -x[static_cast<size_t>(i)];
        out.basis.push_back(normalize_kernel_vector(cols, f, pivot_cols, pivot_vals));
    }
    return out;
}

// Multi-modular kernel with exact certification: the mod-p rank bounds the
// rational nullity from above, and the reconstructed basis vectors are
// verified against the integer matrix, which bounds it from below. On any
// failure (bad primes, reconstruction noise) the computation widens the
// prime set and ultimately falls back to Bareiss.
inline KernelResult hybrid_kernel(const IntegerMatrix& m) {
    constexpr int kMaxPrimes = 96;
    for (size_t attempt = 0, prime_base = 0; attempt < 3; ++attempt, prime_base += 7) {
        std::uint32_t p0 = engine_prime(prime_base);
        ModpEchelon e0 = modp_echelon(m, p0, /*want_rref=*/true);
        if (e0.rank() == m.cols) {
            // full column rank mod p certifies full rank over Q
            KernelResult out;
            out.pivot_cols = e0.pivot_cols;
            return out;
        }
        std::vector<int> free_cols = complement_cols(e0.pivot_cols, m.cols);
        int rank = e0.rank();
        int nfree = static_cast<int>(free_cols.size());

        // CRT state for the needed RREF entries (pivot rows x free cols)
        std::vector<Int> crt(static_cast<size_t>(rank) * static_cast<size_t>(nfree), Int(0));
        Int modulus = 1;
        auto absorb = [&](const ModpEchelon& e, std::uint32_t p) {
            PrimeField F(p);
            std::uint32_t minv = F.inv(mpz_mod_u32(modulus, p));
            Int newmod = modulus * Int(static_cast<unsigned long>(p));
            for (int i = 0; i < rank; ++i) {
                for (int k = 0; k < nfree; ++k) {
                    Int& x = crt[static_cast<size_t>(i) * static_cast<size_t>(nfree) + static_cast<size_t>(k)];
                    std::uint32_t target = e.rref[static_cast<size_t>(i)][static_cast<size_t>(free_cols[static_cast<size_t>(k)])];
                    // x' = x + modulus * ((target - x) / modulus mod p)
                    std::uint32_t xm = mpz_mod_u32(x, p);
                    std::uint32_t diff = target >= xm ? target - xm : p - (xm - target);
                    std::uint32_t lift = F.mul(diff, minv);
                    x += modulus * Int(static_cast<unsigned long>(lift));
                }
            }
            modulus = newmod;
        };
        absorb(e0, p0);

        size_t used = 1;
        int next_target = 1;  // try reconstruction after this many primes
        bool bad_attempt = false;
        while (!bad_attempt && used <= kMaxPrimes) {
            if (static_cast<int>(used) >= next_target) {
                // attempt reconstruction + certification
                std::vector<Rational> vals(crt.size());
                bool recon_ok = true;
                for (size_t i = 0; i < crt.size() && recon_ok; ++i) {
                    recon_ok = rational_reconstruct(crt[i], modulus, vals[i]);
                }
                if (recon_ok) {
                    KernelResult out;
                    out.pivot_cols = e0.pivot_cols;
                    out.free_cols = free_cols;
                    bool verified = true;
                    for (int k = 0; k < nfree && verified; ++k) {
                        std::vector<Rational> pivot_vals(static_cast<size_t>(rank));
                        for (int i = 0; i < rank; ++i) {
                            pivot_vals[static_cast<size_t>(i)] =
                                vals[static_cast<size_t>(i) * static_cast<size_t>(nfree) + static_cast<size_t>(k)];
                        }
                        out.basis.push_back(normalize_kernel_vector(m.cols, free_cols[static_cast<size_t>(k)],
                                                                    e0.pivot_cols, pivot_vals));
                        verified = vector_in_kernel(m, out.basis.back());
                    }
                    if (verified) return out;  // certified: see comment above
                }
                next_target = next_target * 2;
            }
            if (static_cast<int>(used) >= kMaxPrimes) break;
            std::uint32_t p = engine_prime(prime_base + used);
            ModpEchelon e = modp_echelon(m, p, /*want_rref=*/true);
            if (e.pivot_cols != e0.pivot_cols) {
                if (e.rank() > e0.rank() ||
                    (e.rank() == e0.rank() && e.pivot_cols < e0.pivot_cols)) {
                    // p0 was bad (its rank or pivot profile is dominated); restart
                    bad_attempt = true;
                }
                // else: p is bad, skip it
                ++used;
                continue;
            }
            absorb(e, p);
            ++used;
        }
    }
    return bareiss_kernel(m);
}

inline void oracle_check(const IntegerMatrix& m, int exact_nullity) {
    if (!exactalg_config().oracle.load()) return;
    // three primes derived deterministically from the matrix shape/content,
    // independent of the engine's fixed prime sequence
    std::uint64_t h = splitmix64((static_cast<std::uint64_t>(m.rows) << 32) ^ static_cast<std::uint64_t>(m.cols));
    for (int i = 0; i < m.rows; ++i) {
        const auto& r = m.row[static_cast<size_t>(i)];
        for (int j = 0; j < m.cols && j < 4; ++j) {
            h = splitmix64(h ^ mpz_fdiv_ui(r[static_cast<size_t>(j)].get_mpz_t(), 0x7fffffffu));
        }
        if (i > 4) break;
    }
    int agree = 0;
    std::uint32_t primes[3];
    int nullities[3];
    for (int k = 0; k < 3; ++k) {
        h = splitmix64(h + static_cast<std::uint64_t>(k) + 1);
        // odd candidate in [2^21, 2^30]
        Int cand(static_cast<unsigned long>((h % (1ull << 30)) | (1ull << 21) | 1ull));
        Int pz;
        mpz_nextprime(pz.get_mpz_t(), cand.get_mpz_t());
        std::uint32_t p = static_cast<std::uint32_t>(mpz_get_ui(pz.get_mpz_t()));
        primes[k] = p;
        nullities[k] = m.cols - modp_rank(m, p);
        if (nullities[k] == exact_nullity) ++agree;
        if (nullities[k] < exact_nullity) {
            oracle_stats().failures.fetch_add(1);
            throw ConsistencyError("mod-p oracle: nullity mod " + std::to_string(p) +
                                   " is " + std::to_string(nullities[k]) +
                                   " < exact nullity " + std::to_string(exact_nullity));
        }
    }
    oracle_stats().checks.fetch_add(1);
    if (agree >= 2) {
        if (agree == 2) oracle_stats().minority_votes.fetch_add(1);
        return;
    }
    oracle_stats().failures.fetch_add(1);
    throw ConsistencyError(
        "mod-p oracle: exact nullity " + std::to_string(exact_nullity) +
        " confirmed by fewer than 2 of 3 primes (" + std::to_string(primes[0]) + "," +
        std::to_string(primes[1]) + "," + std::to_string(primes[2]) + " gave " +
        std::to_string(nullities[0]) + "," + std::to_string(nullities[1]) + "," +
        std::to_string(nullities[2]) + ") on a " + std::to_string(m.rows) + "x" +
        std::to_string(m.cols) + " matrix");
}

}  // namespace detail

// Exact right-kernel basis in the canonical normal form described on
// KernelResult. Deterministic: the hybrid engine and the Bareiss engine
// produce bit-identical results.
inline KernelResult kernel_basis(const IntegerMatrix& m) {
    KernelResult out;
    if (m.cols == 0) return out;
    if (m.rows == 0) {
        out.free_cols.resize(static_cast<size_t>(m.cols));
        for (int c = 0; c < m.cols; ++c) {
            out.free_cols[static_cast<size_t>(c)] = c;
            std::vector<Int> e(static_cast<size_t>(m.cols), Int(0));
            e[static_cast<size_t>(c)] = 1;
            out.basis.push_back(std::move(e));
        }
        return out;
    }
    IntegerMatrix reduced = m;
    for (auto& r : reduced.row) normalize_primitive(r);
    out = exactalg_config().engine.load() == KernelEngine::bareiss
              ? detail::bareiss_kernel(reduced)
              : detail::hybrid_kernel(reduced);
    detail::oracle_check(reduced, out.nullity());
    return out;
}

inline KernelResult kernel_basis(const RationalMatrix& m) {
    return kernel_basis(IntegerMatrix::from_rational(m));
}

inline int nullity(const IntegerMatrix& m) { return kernel_basis(m).nullity(); }
inline int nullity(const RationalMatrix& m) { return kernel_basis(m).nullity(); }
inline int exact_rank(const IntegerMatrix& m) { return m.cols - nullity(m); }

// Rank of m reduced mod a prime. Returns nullopt (bad prime) when some
// denominator vanishes mod p. For all good primes, rank mod p <= exact rank.
inline std::optional<int> rank_mod_p(const RationalMatrix& m, unsigned long prime) {
    if (prime <= (1ul << 20)) throw InputError("rank_mod_p: prime must exceed 2^20");
    if (prime >= (1ul << 31)) throw InputError("rank_mod_p: prime must be below 2^31");
    std::uint32_t p = static_cast<std::uint32_t>(prime);
    detail::PrimeField F(p);
    IntegerMatrix red;
    red.rows = m.rows();
    red.cols = m.cols();
    red.row.resize(static_cast<size_t>(red.rows));
    for (int i = 0; i < m.rows(); ++i) {
        auto& r = red.row[static_cast<size_t>(i)];
        r.resize(static_cast<size_t>(red.cols));
        for (int j = 0; j < m.cols(); ++j) {
            std::uint32_t den = detail::mpz_mod_u32(m.at(i, j).get_den(), p);
            if (den == 0) return std::nullopt;
            std::uint32_t num = detail::mpz_mod_u32(m.at(i, j).get_num(), p);
            r[static_cast<size_t>(j)] = Int(static_cast<unsigned long>(F.mul(num, F.inv(den))));
        }
    }
    return detail::modp_rank(red, p);
}

}  // namespace logder
