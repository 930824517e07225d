#ifndef NOETHER_ZRING_HPP
#define NOETHER_ZRING_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "noether/decomp_kind.hpp"
#include "noether/error.hpp"

namespace noether {
namespace zring {

/// Deterministic trial-division factorization. Documented inputs stay at
/// or below 1e9; the hard cap leaves room for lcm results of such inputs
/// while still bounding the scan.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw value_error("factorize requires a positive integer");
    if (n > 1000000000000000LL) throw value_error("input exceeds desk scale");
    std::vector<std::pair<std::int64_t, int>> factors;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        factors.push_back({p, e});
    }
    if (n > 1) factors.push_back({n, 1});
    return factors;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

/// The ring of all integers divisible by a fixed g >= 2. Every ideal is
/// principal of the form (g*a); as a set it is g*a*Z. The ring has no unit,
/// and its trivial ideal O is (g) itself.
struct GRing {
    std::int64_t g;
    std::vector<std::pair<std::int64_t, int>> g_factors; // (p_i, sigma_i)

    explicit GRing(std::int64_t g_) : g(g_) {
        if (g < 2) throw value_error("g must be at least 2");
        g_factors = factorize(g);
    }

    friend bool operator==(const GRing&, const GRing&) = default;
};

/// The ideal (g*a), with the factorization of a split into exponents over
/// the primes of g and the part coprime to g.
struct GIdeal {
    GRing ring;
    std::int64_t a = 1;
    std::vector<int> mu;                                  // aligned with ring.g_factors
    std::vector<std::pair<std::int64_t, int>> coprime;    // (q_j, rho_j), q_j coprime to g

    std::int64_t generator() const { return ring.g * a; }
    bool is_trivial() const { return a == 1; } // the trivial ideal O = (g)
};

inline GIdeal make_gideal(const GRing& ring, std::int64_t a) {
    if (a < 1) throw value_error("ideal multiplier a must be positive");
    GIdeal ideal{ring, a, std::vector<int>(ring.g_factors.size(), 0), {}};
    std::int64_t rest = a;
    for (size_t i = 0; i < ring.g_factors.size(); ++i) {
        while (rest % ring.g_factors[i].first == 0) {
            rest /= ring.g_factors[i].first;
            ++ideal.mu[i];
        }
    }
    ideal.coprime = factorize(rest);
    if (rest == 1) ideal.coprime.clear();
    return ideal;
}

/// Least common multiple of two ideals; lcm(g*a, g*b) = g*lcm(a,b), so the
/// result is again an ideal of the ring.
inline GIdeal ideal_lcm(const GIdeal& lhs, const GIdeal& rhs) {
    if (!(lhs.ring == rhs.ring)) throw value_error("ideals from different rings");
    return make_gideal(lhs.ring, lcm64(lhs.a, rhs.a));
}

/// True iff (g*a) is contained in (g*b), i.e. b | a.
inline bool ideal_contained_in(const GIdeal& inner, const GIdeal& outer) {
    if (!(inner.ring == outer.ring)) throw value_error("ideals from different rings");
    return inner.a % outer.a == 0;
}

struct GComponent {
    std::int64_t generator = 0;      // g*m
    DecompKind kind = DecompKind::Irreducible;
    std::int64_t associated_prime = 0; // generator of the prime: g, or g*p
    bool isolated = true;
};

/// A prime ideal of the ring is P0 = O = (g) or (g*p) with p prime and
/// coprime to g.
inline bool is_prime_ideal(std::int64_t generator, const GRing& ring) {
    if (generator % ring.g != 0) throw value_error("generator not divisible by g");
    std::int64_t m = generator / ring.g;
    if (m == 1) return true;
    return is_prime(m) && ring.g % m != 0 && std::gcd(m, ring.g) == 1;
}

struct GDecomposition {
    bool trivial_ideal = false; // the ideal O = (g); empty decomposition
    std::vector<GComponent> components;
};

/// The four decompositions of (g*a), read off the factorization of a.
/// The components over the primes of g share the associated prime P0 = (g);
/// they are the non-isolated ones whenever other primes coexist.
inline GDecomposition decompose(const GIdeal& ideal, DecompKind kind) {
    const GRing& ring = ideal.ring;
    GDecomposition result;
    if (ideal.is_trivial()) {
        result.trivial_ideal = true;
        return result;
    }

    std::int64_t g_part = 1; // product of p_i^mu_i over the primes of g
    for (size_t i = 0; i < ring.g_factors.size(); ++i)
        for (int e = 0; e < ideal.mu[i]; ++e) g_part *= ring.g_factors[i].first;
    const bool has_g_part = g_part > 1;

    auto g_prime_components = [&](std::vector<GComponent>& out, bool merged) {
        if (!has_g_part) return;
        if (merged) {
            out.push_back({ring.g * g_part, DecompKind::MaximalPrimary, ring.g, true});
        } else {
            for (size_t i = 0; i < ring.g_factors.size(); ++i) {
                if (ideal.mu[i] == 0) continue;
                std::int64_t pw = 1;
                for (int e = 0; e < ideal.mu[i]; ++e) pw *= ring.g_factors[i].first;
                out.push_back({ring.g * pw, DecompKind::Irreducible, ring.g, true});
            }
        }
    };
    auto coprime_components = [&](std::vector<GComponent>& out, DecompKind k) {
        for (const auto& [q, rho] : ideal.coprime) {
            std::int64_t pw = 1;
            for (int e = 0; e < rho; ++e) pw *= q;
            out.push_back({ring.g * pw, k, ring.g * q, true});
        }
    };

    switch (kind) {
        case DecompKind::Irreducible:
            g_prime_components(result.components, false);
            coprime_components(result.components, DecompKind::Irreducible);
            break;
        case DecompKind::MaximalPrimary:
            g_prime_components(result.components, true);
            coprime_components(result.components, DecompKind::MaximalPrimary);
            break;
        case DecompKind::RelativelyPrime:
            // Every prime (g*p) is contained in P0 = (g); if P0 occurs the
            // comparability graph is connected and the ideal is relatively
            // prime irreducible.
            if (has_g_part) {
                result.components.push_back(
                    {ideal.generator(), DecompKind::RelativelyPrime, 0, true});
            } else {
                coprime_components(result.components, DecompKind::RelativelyPrime);
            }
            break;
        case DecompKind::Coprime:
            // The ring has no unit, so every ideal is coprime irreducible.
            result.components.push_back({ideal.generator(), DecompKind::Coprime, 0, true});
            break;
    }

    // P0-components are non-isolated exactly when other primes coexist.
    if ((kind == DecompKind::Irreducible || kind == DecompKind::MaximalPrimary) &&
        has_g_part && !ideal.coprime.empty()) {
        for (auto& c : result.components)
            if (c.associated_prime == ring.g) c.isolated = false;
    }
    return result;
}

} // namespace zring
} // namespace noether

#endif
