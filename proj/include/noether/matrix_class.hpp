#ifndef NOETHER_MATRIX_CLASS_HPP
#define NOETHER_MATRIX_CLASS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "noether/rational.hpp"

namespace noether {
namespace matrix {

/// A square integer matrix, row-major. Dimensions 2..8 cover the desk-scale
/// classes this module works with.
struct IntegerMatrix {
    int n = 0;
    std::vector<Int> entries;

    static IntegerMatrix make(int n, std::vector<Int> entries) {
        if (n < 2 || n > 8) throw value_error("matrix dimension must be between 2 and 8");
        if (static_cast<int>(entries.size()) != n * n)
            throw value_error("matrix entry count does not match dimension");
        return {n, std::move(entries)};
    }

    static IntegerMatrix identity(int n) {
        IntegerMatrix m{n, std::vector<Int>(static_cast<size_t>(n) * n, Int(0))};
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
    const Int& at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.n != b.n) throw value_error("matrix dimension mismatch");
        IntegerMatrix c{a.n, std::vector<Int>(a.entries.size(), Int(0))};
        for (int i = 0; i < a.n; ++i)
            for (int k = 0; k < a.n; ++k) {
                if (a.at(i, k) == 0) continue;
                for (int j = 0; j < a.n; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

/// Fraction-free determinant (Bareiss); exact over the integers.
inline Int determinant(IntegerMatrix m) {
    Int sign(1), prev(1);
    for (int k = 0; k < m.n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < m.n; ++i)
                if (m.at(i, k) != 0) { swap_row = i; break; }
            if (swap_row < 0) return Int(0);
            for (int j = 0; j < m.n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < m.n; ++i)
            for (int j = k + 1; j < m.n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(m.n - 1, m.n - 1);
}

/// Divisibility with the zero conventions of elementary divisor chains:
/// x | 0 for every x, 0 | 0, and 0 divides nothing else.
inline bool chain_divides(const Int& b, const Int& a) {
    if (b == 0) return a == 0;
    return a % b == 0;
}

/// The invariant chain (a1 | a2 | ... | an) of a two-sided matrix class.
/// Entries are non-negative; zeros are trailing and encode rank deficiency.
struct ElementaryDivisorSystem {
    std::vector<Int> divisors;

    static ElementaryDivisorSystem make(std::vector<Int> divisors) {
        if (divisors.empty()) throw value_error("empty divisor system");
        for (const auto& d : divisors)
            if (d < 0) throw value_error("elementary divisors must be non-negative");
        for (size_t i = 0; i + 1 < divisors.size(); ++i)
            if (!chain_divides(divisors[i], divisors[i + 1]))
                throw value_error("divisor chain violated");
        return {std::move(divisors)};
    }

    int size() const { return static_cast<int>(divisors.size()); }

    int rank() const {
        int r = 0;
        for (const auto& d : divisors)
            if (d != 0) ++r;
        return r;
    }

    bool is_trivial() const {
        return std::all_of(divisors.begin(), divisors.end(),
                           [](const Int& d) { return d == 1; });
    }

    std::string str() const {
        std::string out = "(";
        for (int i = 0; i < size(); ++i) {
            if (i) out += " | ";
            out += divisors[i].get_str();
        }
        return out + ")";
    }

    friend bool operator==(const ElementaryDivisorSystem&,
                           const ElementaryDivisorSystem&) = default;
    friend auto operator<=>(const ElementaryDivisorSystem& a,
                            const ElementaryDivisorSystem& b) {
        return a.divisors <=> b.divisors;
    }
};

/// Unimodular U, V with U*A*V equal to the diagonal of the divisor system.
struct UnimodularCertificate {
    IntegerMatrix u;
    IntegerMatrix v;
};

struct SmithNormalForm {
    ElementaryDivisorSystem divisors;
    UnimodularCertificate certificate;
};

/// Smith normal form by gcd-driven row/column elimination. Pivot selection
/// (smallest absolute value, rows scanned before columns) is deterministic,
/// so certificates are reproducible.
inline SmithNormalForm smith_normal_form(const IntegerMatrix& a) {
    const int n = a.n;
    IntegerMatrix m = a;
    IntegerMatrix u = IntegerMatrix::identity(n);
    IntegerMatrix v = IntegerMatrix::identity(n);

    auto swap_rows = [&](int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < n; ++j) {
            std::swap(m.at(r1, j), m.at(r2, j));
            std::swap(u.at(r1, j), u.at(r2, j));
        }
    };
    auto swap_cols = [&](int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < n; ++i) {
            std::swap(m.at(i, c1), m.at(i, c2));
            std::swap(v.at(i, c1), v.at(i, c2));
        }
    };
    auto add_row_multiple = [&](int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < n; ++j) {
            m.at(dst, j) += q * m.at(src, j);
            u.at(dst, j) += q * u.at(src, j);
        }
    };
    auto add_col_multiple = [&](int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < n; ++i) {
            m.at(i, dst) += q * m.at(i, src);
            v.at(i, dst) += q * v.at(i, src);
        }
    };
    auto negate_row = [&](int r) {
        for (int j = 0; j < n; ++j) {
            m.at(r, j) = -m.at(r, j);
            u.at(r, j) = -u.at(r, j);
        }
    };

    for (int k = 0; k < n; ++k) {
        while (true) {
            // Smallest-absolute-value nonzero pivot in the trailing block.
            int pi = -1, pj = -1;
            Int best(0);
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j) {
                    if (m.at(i, j) == 0) continue;
                    Int mag = abs(m.at(i, j));
                    if (pi < 0 || mag < best) {
                        pi = i; pj = j; best = mag;
                    }
                }
            if (pi < 0) { pi = -1; break; }
            swap_rows(k, pi);
            swap_cols(k, pj);
            if (m.at(k, k) < 0) negate_row(k);

            bool clean = true;
            for (int i = k + 1; i < n; ++i) {
                if (m.at(i, k) == 0) continue;
                Int q = m.at(i, k) / m.at(k, k); // truncated: |remainder| < pivot
                add_row_multiple(i, k, -q);
                if (m.at(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < n; ++j) {
                if (m.at(k, j) == 0) continue;
                Int q = m.at(k, j) / m.at(k, k);
                add_col_multiple(j, k, -q);
                if (m.at(k, j) != 0) clean = false;
            }
            if (!clean) continue; // a smaller pivot has appeared

            // Divisibility of the trailing block by the pivot.
            bool divisible = true;
            for (int i = k + 1; i < n && divisible; ++i)
                for (int j = k + 1; j < n && divisible; ++j)
                    if (m.at(i, j) % m.at(k, k) != 0) {
                        add_row_multiple(k, i, Int(1));
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (m.at(k, k) == 0) break; // trailing block exhausted; zeros remain
    }

    std::vector<Int> divisors;
    divisors.reserve(n);
    for (int k = 0; k < n; ++k) divisors.push_back(m.at(k, k));
    return {ElementaryDivisorSystem::make(std::move(divisors)),
            UnimodularCertificate{std::move(u), std::move(v)}};
}

/// Class divisibility: B divides A iff b_i | a_i componentwise.
inline bool class_divides(const ElementaryDivisorSystem& b, const ElementaryDivisorSystem& a) {
    if (a.size() != b.size()) throw value_error("divisor system dimension mismatch");
    for (int i = 0; i < a.size(); ++i)
        if (!chain_divides(b.divisors[i], a.divisors[i])) return false;
    return true;
}

/// Componentwise least common multiple; lcm(x, 0) = 0.
inline ElementaryDivisorSystem class_lcm(const ElementaryDivisorSystem& a,
                                         const ElementaryDivisorSystem& b) {
    if (a.size() != b.size()) throw value_error("divisor system dimension mismatch");
    std::vector<Int> out(a.divisors.size());
    for (int i = 0; i < a.size(); ++i) {
        if (a.divisors[i] == 0 || b.divisors[i] == 0) out[i] = 0;
        else out[i] = lcm(a.divisors[i], b.divisors[i]);
    }
    return ElementaryDivisorSystem::make(std::move(out));
}

/// Componentwise greatest common divisor; gcd(x, 0) = x.
inline ElementaryDivisorSystem class_gcd(const ElementaryDivisorSystem& a,
                                         const ElementaryDivisorSystem& b) {
    if (a.size() != b.size()) throw value_error("divisor system dimension mismatch");
    std::vector<Int> out(a.divisors.size());
    for (int i = 0; i < a.size(); ++i) out[i] = gcd(a.divisors[i], b.divisors[i]);
    return ElementaryDivisorSystem::make(std::move(out));
}

namespace detail {

inline std::vector<Int> prime_factors(Int n) {
    std::vector<Int> primes;
    for (Int p = 2; p * p <= n;) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
        p += (p == 2 ? 1 : 2);
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

inline int valuation(Int n, const Int& p) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

} // namespace detail

/// Splits a class into one class per prime dividing its largest nonzero
/// divisor: entry i becomes p^{v_p(a_i)}, zeros are carried. The
/// componentwise lcm over the result reconstructs the input. A class whose
/// nonzero divisors are all 1 splits into itself (the zeros carry the rank).
inline std::vector<ElementaryDivisorSystem> prime_split(const ElementaryDivisorSystem& a) {
    if (a.is_trivial()) throw value_error("cannot split the trivial class");
    const int rank = a.rank();
    std::vector<Int> primes;
    if (rank > 0) primes = detail::prime_factors(a.divisors[rank - 1]);
    if (primes.empty()) return {a};
    std::vector<ElementaryDivisorSystem> out;
    for (const auto& p : primes) {
        std::vector<Int> divisors(a.divisors.size(), Int(0));
        for (int i = 0; i < rank; ++i) {
            Int pw(1);
            for (int e = detail::valuation(a.divisors[i], p); e > 0; --e) pw *= p;
            divisors[i] = pw;
        }
        out.push_back(ElementaryDivisorSystem::make(std::move(divisors)));
    }
    return out;
}

/// One irreducible class of a single-prime split, together with the data it
/// encodes: the prime, the exponent, and the position where that exponent
/// first appears; the rank-marker class instead records the rank.
struct IrreducibleClass {
    ElementaryDivisorSystem system;
    Int prime = 0;
    int exponent = 0;
    int position = 0;      // 1-based first-occurrence position
    bool rank_marker = false;
    int rank = 0;          // meaningful for the rank marker
};

/// The unique irredundant decomposition of a single-prime class into
/// irreducible classes (1 | ... | 1 | p^r | ... | p^r), dropping exponent-0
/// candidates and repeated exponents, plus the rank-marker class
/// (1 | ... | 1 | 0 | ... | 0) when the rank is deficient.
inline std::vector<IrreducibleClass> irreducible_split(const ElementaryDivisorSystem& q) {
    if (q.is_trivial()) throw value_error("cannot split the trivial class");
    const int n = q.size();
    const int rank = q.rank();

    Int p(0);
    for (int i = 0; i < rank; ++i) {
        auto primes = detail::prime_factors(q.divisors[i]);
        if (primes.empty()) continue; // divisor 1
        if (primes.size() > 1 || (p != 0 && primes[0] != p))
            throw value_error("irreducible_split requires a single-prime class");
        p = primes[0];
    }

    std::vector<IrreducibleClass> out;
    int prev_exponent = -1;
    for (int nu = 1; nu <= rank; ++nu) {
        int r = (p == 0) ? 0 : detail::valuation(q.divisors[nu - 1], p);
        bool skip = (r == 0) || (r == prev_exponent);
        prev_exponent = r;
        if (skip) continue;
        std::vector<Int> divisors(n, Int(1));
        Int pw(1);
        for (int e = 0; e < r; ++e) pw *= p;
        for (int i = nu - 1; i < n; ++i) divisors[i] = pw;
        out.push_back({ElementaryDivisorSystem::make(std::move(divisors)), p, r, nu, false, 0});
    }
    if (rank < n) {
        std::vector<Int> divisors(n, Int(0));
        for (int i = 0; i < rank; ++i) divisors[i] = 1;
        IrreducibleClass marker{ElementaryDivisorSystem::make(std::move(divisors)),
                                Int(0), 0, rank + 1, true, rank};
        out.push_back(std::move(marker));
    }
    return out;
}

/// prime_split followed by irreducible_split of each part; the flattened
/// list is the unique irreducible-class decomposition of a general class.
inline std::vector<IrreducibleClass> full_irreducible_split(
    const ElementaryDivisorSystem& a) {
    std::vector<IrreducibleClass> out;
    bool rank_marker_seen = false;
    for (const auto& part : prime_split(a)) {
        for (auto& cls : irreducible_split(part)) {
            if (cls.rank_marker) {
                if (rank_marker_seen) continue; // shared by every prime part
                rank_marker_seen = true;
            }
            out.push_back(std::move(cls));
        }
    }
    std::sort(out.begin(), out.end(), [](const IrreducibleClass& x, const IrreducibleClass& y) {
        return x.system < y.system;
    });
    return out;
}

} // namespace matrix
} // namespace noether

#endif
