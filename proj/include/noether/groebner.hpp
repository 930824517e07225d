#ifndef NOETHER_GROEBNER_HPP
#define NOETHER_GROEBNER_HPP

#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "noether/presentation.hpp"

namespace noether {

/// A reduced Groebner basis: members are monic, interreduced, and sorted by
/// leading monomial descending under `order`. For a fixed ideal and order
/// this form is canonical, so basis equality decides ideal equality.
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> polys;

    bool is_zero() const { return polys.empty(); }
    bool is_unit() const { return polys.size() == 1 && polys[0].is_one(); }
};

/// Counters exposed for the termination assertions: every S-pair is
/// processed at most once, and the leading monomials added along the run
/// witness the strictly growing leading-term ideal.
struct BuchbergerStats {
    long pairs_enqueued = 0;
    long pairs_processed = 0;
    long pairs_skipped_coprime = 0;
    long reductions_to_zero = 0;
    std::vector<Monomial> leading_monomials_added;
};

namespace detail {

using TermMap = std::map<Monomial, Rat, MonomialGreater>;

inline TermMap to_term_map(const Polynomial& p, const MonomialOrder& order) {
    TermMap m{MonomialGreater{order}};
    for (const auto& t : p.terms()) m.emplace(t.mono, t.coeff);
    return m;
}

inline Polynomial from_term_map(const RingPtr& ring, const TermMap& m) {
    std::vector<Term> terms;
    terms.reserve(m.size());
    for (const auto& [mono, coeff] : m) terms.push_back({coeff, mono});
    return Polynomial::from_terms(ring, std::move(terms));
}

inline Term leading_term(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw value_error("leading term of zero polynomial");
    if (order.kind == MonomialOrder::Kind::Lex) return p.terms()[0];
    const Term* best = &p.terms()[0];
    for (const auto& t : p.terms().subspan(1))
        if (compare(t.mono, best->mono, order) > 0) best = &t;
    return *best;
}

inline Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) return p;
    Rat lc = leading_term(p, order).coeff;
    return lc == 1 ? p : p.scaled(Rat(1) / lc);
}

// p -= factor * shift * g
inline void subtract_multiple(TermMap& p, const Polynomial& g, const Rat& factor,
                              const Monomial& shift) {
    for (const auto& t : g.terms()) {
        Monomial m = t.mono * shift;
        auto it = p.find(m);
        if (it == p.end()) {
            Rat c = -factor * t.coeff;
            if (c != 0) p.emplace(std::move(m), std::move(c));
        } else {
            it->second -= factor * t.coeff;
            if (it->second == 0) p.erase(it);
        }
    }
}

// Fully reduces p modulo the basis; returns the remainder terms. Divisor
// lookup order follows the basis vector, so results are deterministic.
inline TermMap reduce_full(TermMap p, std::span<const Polynomial> basis,
                           std::span<const Term> basis_lts, const MonomialOrder& order) {
    TermMap remainder{MonomialGreater{order}};
    while (!p.empty()) {
        auto lead = p.begin();
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!basis_lts[i].mono.divides(lead->first)) continue;
            Rat factor = lead->second / basis_lts[i].coeff;
            subtract_multiple(p, basis[i], factor, lead->first.div_exact(basis_lts[i].mono));
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.insert(p.extract(lead));
        }
    }
    return remainder;
}

inline std::vector<Term> leading_terms(std::span<const Polynomial> basis,
                                       const MonomialOrder& order) {
    std::vector<Term> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis) lts.push_back(leading_term(g, order));
    return lts;
}

} // namespace detail

/// Remainder of f on division by `basis` under `order`: no remainder term is
/// divisible by any basis leading monomial, and f minus the remainder lies
/// in the ideal generated by the basis.
inline Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                              const MonomialOrder& order) {
    std::vector<Polynomial> nonzero;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        require_same_ring(f.ring(), g.ring());
        nonzero.push_back(g);
    }
    auto lts = detail::leading_terms(nonzero, order);
    auto rem = detail::reduce_full(detail::to_term_map(f, order), nonzero, lts, order);
    return detail::from_term_map(f.ring(), rem);
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    return normal_form(f, basis.polys, basis.order);
}

namespace detail {

struct SPair {
    Monomial lcm;
    int i, j;
};

struct SPairLess {
    MonomialOrder order;
    // Normal strategy: smallest lcm first, deterministic index tie-break.
    bool operator()(const SPair& a, const SPair& b) const {
        auto c = compare(a.lcm, b.lcm, order);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

inline std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g,
                                            const MonomialOrder& order) {
    // Minimalize: drop members whose leading monomial is divisible by
    // another member's. Safe once every S-pair reduces to zero.
    std::vector<int> idx(g.size());
    for (size_t i = 0; i < g.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        auto c = compare(leading_term(g[a], order).mono, leading_term(g[b], order).mono, order);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<Polynomial> kept;
    std::vector<Monomial> kept_lms;
    for (int i : idx) {
        Monomial lm = leading_term(g[i], order).mono;
        bool redundant = false;
        for (const auto& k : kept_lms)
            if (k.divides(lm)) { redundant = true; break; }
        if (!redundant) {
            kept.push_back(g[i]);
            kept_lms.push_back(std::move(lm));
        }
    }
    // Tail-reduce each member against the others; leading monomials are
    // pairwise non-divisible so they survive unchanged.
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = make_monic(normal_form(kept[i], others, order), order);
    }
    std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(leading_term(a, order).mono, leading_term(b, order).mono, order) > 0;
    });
    return kept;
}

} // namespace detail

/// Buchberger's algorithm. Returns the reduced Groebner basis of the ideal;
/// the output depends only on the ideal and the order, not on the
/// presentation. The zero ideal yields an empty basis, the unit ideal {1}.
inline GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& order,
                                BuchbergerStats* stats = nullptr) {
    BuchbergerStats local;
    BuchbergerStats& st = stats ? *stats : local;

    std::vector<Polynomial> g;
    for (const auto& p : ideal.generators)
        if (!p.is_zero()) g.push_back(detail::make_monic(p, order));

    std::vector<Term> lts = detail::leading_terms(g, order);
    for (const auto& t : lts) st.leading_monomials_added.push_back(t.mono);

    std::set<detail::SPair, detail::SPairLess> queue{detail::SPairLess{order}};
    std::set<std::pair<int, int>> processed;
    auto enqueue = [&](int i, int j) {
        queue.insert({Monomial::lcm(lts[i].mono, lts[j].mono), i, j});
        ++st.pairs_enqueued;
    };
    for (size_t j = 1; j < g.size(); ++j)
        for (size_t i = 0; i < j; ++i) enqueue(static_cast<int>(i), static_cast<int>(j));

    while (!queue.empty()) {
        auto pair = *queue.begin();
        queue.erase(queue.begin());
        if (!processed.insert({pair.i, pair.j}).second)
            throw error("S-pair processed twice; termination invariant violated");
        ++st.pairs_processed;

        // Product criterion: coprime leading monomials reduce to zero.
        if (lts[pair.i].mono.coprime_with(lts[pair.j].mono)) {
            ++st.pairs_skipped_coprime;
            continue;
        }
        detail::TermMap s{MonomialGreater{order}};
        detail::subtract_multiple(s, g[pair.i], Rat(-1) / lts[pair.i].coeff,
                                  pair.lcm.div_exact(lts[pair.i].mono));
        detail::subtract_multiple(s, g[pair.j], Rat(1) / lts[pair.j].coeff,
                                  pair.lcm.div_exact(lts[pair.j].mono));
        auto rem = detail::reduce_full(std::move(s), g, lts, order);
        if (rem.empty()) {
            ++st.reductions_to_zero;
            continue;
        }
        Polynomial h = detail::make_monic(detail::from_term_map(ideal.ring, rem), order);
        g.push_back(h);
        lts.push_back(detail::leading_term(h, order));
        st.leading_monomials_added.push_back(lts.back().mono);
        int newest = static_cast<int>(g.size()) - 1;
        for (int i = 0; i < newest; ++i) enqueue(i, newest);
    }

    return GroebnerBasis{ideal.ring, order, detail::reduce_basis(std::move(g), order)};
}

/// Ideal membership: true iff the normal form of f modulo a Groebner basis
/// of I vanishes.
inline bool member(const Polynomial& f, const IdealPresentation& ideal,
                   const MonomialOrder& order = MonomialOrder::grevlex()) {
    require_same_ring(f.ring(), ideal.ring);
    if (f.is_zero()) return true;
    return normal_form(f, buchberger(ideal, order)).is_zero();
}

/// Ideal equality via canonical reduced bases (computed under lex so that
/// the comparison is order-independent for callers).
inline bool equal(const IdealPresentation& lhs, const IdealPresentation& rhs) {
    require_same_ring(lhs.ring, rhs.ring);
    auto order = MonomialOrder::lex();
    return buchberger(lhs, order).polys == buchberger(rhs, order).polys;
}

/// True iff every generator of `inner` lies in `outer`.
inline bool contains(const IdealPresentation& outer, const IdealPresentation& inner) {
    require_same_ring(outer.ring, inner.ring);
    GroebnerBasis gb = buchberger(outer, MonomialOrder::grevlex());
    for (const auto& f : inner.generators)
        if (!normal_form(f, gb).is_zero()) return false;
    return true;
}

/// Generators of the intersection of I with the subring in the variables
/// after the first k (a lex Groebner basis filtered to members free of the
/// leading variables).
inline IdealPresentation eliminate(const IdealPresentation& ideal, int k) {
    if (k < 1 || k >= ideal.ring->arity())
        throw value_error("eliminate requires 1 <= k < arity");
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::lex());
    std::vector<Polynomial> kept;
    for (const auto& p : gb.polys) {
        bool free = true;
        for (int v = 0; v < k && free; ++v)
            if (p.depends_on(v)) free = false;
        if (free) kept.push_back(p);
    }
    return IdealPresentation::make(ideal.ring, std::move(kept));
}

} // namespace noether

#endif
