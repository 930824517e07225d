#ifndef NOETHER_IDEAL_HPP
#define NOETHER_IDEAL_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "noether/groebner.hpp"

namespace noether {

/// Greatest common divisor of two ideals: generator concatenation,
/// deduplicated.
inline IdealPresentation sum(const IdealPresentation& lhs, const IdealPresentation& rhs) {
    require_same_ring(lhs.ring, rhs.ring);
    std::vector<Polynomial> gens = lhs.generators;
    for (const auto& g : rhs.generators)
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    return IdealPresentation::make(lhs.ring, std::move(gens));
}

/// Ideal product: all pairwise generator products.
inline IdealPresentation product(const IdealPresentation& lhs, const IdealPresentation& rhs) {
    require_same_ring(lhs.ring, rhs.ring);
    std::vector<Polynomial> gens;
    gens.reserve(lhs.generators.size() * rhs.generators.size());
    for (const auto& a : lhs.generators)
        for (const auto& b : rhs.generators) gens.push_back(a * b);
    return IdealPresentation::make(lhs.ring, std::move(gens));
}

namespace detail {

inline std::string fresh_variable_name(const RingContext& ring, std::string base) {
    if (!ring.index_of(base)) return base;
    for (int i = 0;; ++i) {
        std::string candidate = base + std::to_string(i);
        if (!ring.index_of(candidate)) return candidate;
    }
}

struct ExtendedRing {
    RingPtr ring; // auxiliary variable prepended at index 0
};

inline ExtendedRing extend_ring(const RingPtr& ring, const std::string& base) {
    std::vector<std::string> names;
    names.push_back(fresh_variable_name(*ring, base));
    names.insert(names.end(), ring->names().begin(), ring->names().end());
    return {make_ring(std::move(names))};
}

inline Polynomial lift(const Polynomial& p, const RingPtr& extended) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Monomial m{std::vector<int>(t.mono.exps.size() + 1, 0)};
        std::copy(t.mono.exps.begin(), t.mono.exps.end(), m.exps.begin() + 1);
        terms.push_back({t.coeff, std::move(m)});
    }
    return Polynomial::from_terms(extended, std::move(terms));
}

inline Polynomial project(const Polynomial& p, const RingPtr& base) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        if (t.mono.exps[0] != 0)
            throw error("projection of a polynomial involving the auxiliary variable");
        Monomial m{std::vector<int>(t.mono.exps.begin() + 1, t.mono.exps.end())};
        terms.push_back({t.coeff, std::move(m)});
    }
    return Polynomial::from_terms(base, std::move(terms));
}

} // namespace detail

/// Least common multiple of two ideals (their intersection), computed by
/// eliminating an auxiliary variable t from t*I + (1-t)*J.
inline IdealPresentation intersect(const IdealPresentation& lhs, const IdealPresentation& rhs) {
    require_same_ring(lhs.ring, rhs.ring);
    if (lhs.is_zero_ideal() || rhs.is_zero_ideal())
        return IdealPresentation::zero(lhs.ring);
    auto ext = detail::extend_ring(lhs.ring, "t");
    Polynomial t = Polynomial::variable(ext.ring, 0);
    Polynomial one_minus_t = Polynomial::constant(ext.ring, Rat(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : lhs.generators) gens.push_back(t * detail::lift(f, ext.ring));
    for (const auto& g : rhs.generators) gens.push_back(one_minus_t * detail::lift(g, ext.ring));
    IdealPresentation mixed = IdealPresentation::make(ext.ring, std::move(gens));
    IdealPresentation eliminated = eliminate(mixed, 1);
    std::vector<Polynomial> projected;
    for (const auto& p : eliminated.generators)
        projected.push_back(detail::project(p, lhs.ring));
    return IdealPresentation::make(lhs.ring, std::move(projected));
}

inline IdealPresentation intersect_all(const std::vector<IdealPresentation>& ideals) {
    if (ideals.empty()) throw value_error("intersection of an empty family");
    IdealPresentation acc = ideals.front();
    for (size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
    return acc;
}

namespace detail {

/// Exact division by a single polynomial; the dividend must be a multiple.
inline Polynomial divide_exact(const Polynomial& h, const Polynomial& r) {
    const MonomialOrder order = MonomialOrder::lex();
    Term rt = leading_term(r, order);
    TermMap p = to_term_map(h, order);
    std::vector<Term> quotient;
    while (!p.empty()) {
        auto lead = p.begin();
        if (!rt.mono.divides(lead->first))
            throw error("inexact polynomial division");
        Rat c = lead->second / rt.coeff;
        Monomial shift = lead->first.div_exact(rt.mono);
        subtract_multiple(p, r, c, shift);
        quotient.push_back({std::move(c), std::move(shift)});
    }
    return Polynomial::from_terms(h.ring(), std::move(quotient));
}

} // namespace detail

/// Ideal quotient (S : R): the largest ideal T with T*R contained in S.
/// Computed per generator r of R as (S ∩ (r)) / r, then intersected.
inline IdealPresentation quotient(const IdealPresentation& s, const IdealPresentation& r) {
    require_same_ring(s.ring, r.ring);
    if (r.is_zero_ideal()) throw value_error("undefined quotient by zero ideal");
    std::optional<IdealPresentation> acc;
    for (const auto& gen : r.generators) {
        IdealPresentation single = IdealPresentation::make(s.ring, {gen});
        IdealPresentation meet = intersect(s, single);
        std::vector<Polynomial> divided;
        for (const auto& h : meet.generators)
            divided.push_back(detail::divide_exact(h, gen));
        IdealPresentation part = IdealPresentation::make(s.ring, std::move(divided));
        acc = acc ? intersect(*acc, part) : part;
    }
    return *acc;
}

/// Definition of relative primality via the quotient: R is relatively prime
/// to S iff (S : R) = S. The relation is not symmetric.
inline bool is_relatively_prime(const IdealPresentation& r, const IdealPresentation& s) {
    require_same_ring(r.ring, s.ring);
    if (r.is_zero_ideal()) {
        // T*0 = 0 lies in S for every T, so S must already be the whole ring.
        return buchberger(s, MonomialOrder::lex()).is_unit();
    }
    return equal(quotient(s, r), s);
}

/// Coprimality: the sum of the two ideals is the unit ideal.
inline bool is_coprime(const IdealPresentation& r, const IdealPresentation& s) {
    return buchberger(sum(r, s), MonomialOrder::grevlex()).is_unit();
}

/// True iff some power of f lies in I (membership of f in the radical),
/// decided by adjoining 1 - w*f for an auxiliary variable w.
inline bool radical_member(const Polynomial& f, const IdealPresentation& ideal) {
    require_same_ring(f.ring(), ideal.ring);
    if (f.is_zero()) return true;
    auto ext = detail::extend_ring(ideal.ring, "w");
    Polynomial w = Polynomial::variable(ext.ring, 0);
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators) gens.push_back(detail::lift(g, ext.ring));
    gens.push_back(Polynomial::constant(ext.ring, Rat(1)) - w * detail::lift(f, ext.ring));
    return buchberger(IdealPresentation::make(ext.ring, std::move(gens)),
                      MonomialOrder::grevlex())
        .is_unit();
}

/// Intersection of all components except index i.
inline IdealPresentation complement(const std::vector<IdealPresentation>& components,
                                    size_t i) {
    if (components.size() < 2)
        throw value_error("complement requires at least two components");
    if (i >= components.size()) throw value_error("complement index out of range");
    std::optional<IdealPresentation> acc;
    for (size_t j = 0; j < components.size(); ++j) {
        if (j == i) continue;
        acc = acc ? intersect(*acc, components[j]) : components[j];
    }
    return *acc;
}

/// Bounded certificate check for Definition III on a specific pair (a, b):
/// reports whether the pair applies (a*b in I, a not in I), the least
/// exponent x <= bound with b^x in I if one exists, and exact radical
/// membership of b so that a missing power can be classified.
struct PrimaryWitnessReport {
    bool product_in_ideal = false;
    bool a_in_ideal = false;
    std::optional<int> exponent_found;
    bool b_in_radical = false;

    bool pair_applies() const { return product_in_ideal && !a_in_ideal; }
    /// Conclusive witness that the ideal is not primary.
    bool refutes_primary() const { return pair_applies() && !b_in_radical; }
};

inline PrimaryWitnessReport check_primary_witness(const IdealPresentation& ideal,
                                                  const Polynomial& a, const Polynomial& b,
                                                  int bound) {
    require_same_ring(ideal.ring, a.ring());
    require_same_ring(ideal.ring, b.ring());
    if (bound < 1) throw value_error("witness bound must be positive");
    PrimaryWitnessReport report;
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex());
    report.product_in_ideal = normal_form(a * b, gb).is_zero();
    report.a_in_ideal = normal_form(a, gb).is_zero();
    Polynomial power = Polynomial::constant(ideal.ring, Rat(1));
    for (int x = 1; x <= bound; ++x) {
        power = power * b;
        if (normal_form(power, gb).is_zero()) {
            report.exponent_found = x;
            break;
        }
    }
    report.b_in_radical = report.exponent_found.has_value() || radical_member(b, ideal);
    return report;
}

} // namespace noether

#endif
