#ifndef NOETHER_POLYNOMIAL_HPP
#define NOETHER_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "noether/rational.hpp"
#include "noether/ring.hpp"

namespace noether {

struct Term {
    Rat coeff;
    Monomial mono;

    friend bool operator==(const Term& a, const Term& b) {
        return a.coeff == b.coeff && a.mono == b.mono;
    }
};

/// An exact multivariate polynomial over the rationals. Terms are kept
/// normalized: sorted descending under the internal lexicographic order,
/// no zero coefficients, no repeated monomials. The empty term list is the
/// zero polynomial.
class Polynomial {
  public:
    Polynomial() = default;

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

    static Polynomial constant(RingPtr ring, Rat value) {
        std::vector<Term> terms;
        if (value != 0)
            terms.push_back({canonical(std::move(value)), Monomial::one(ring->arity())});
        return Polynomial(std::move(ring), std::move(terms));
    }

    static Polynomial variable(RingPtr ring, int index) {
        Monomial m = Monomial::one(ring->arity());
        m.exps.at(index) = 1;
        return Polynomial(std::move(ring), {Term{Rat(1), std::move(m)}});
    }

    static Polynomial monomial(RingPtr ring, Monomial m, Rat coeff = Rat(1)) {
        if (m.arity() != ring->arity()) throw ring_mismatch_error("monomial arity mismatch");
        std::vector<Term> terms;
        if (coeff != 0) terms.push_back({canonical(std::move(coeff)), std::move(m)});
        return Polynomial(std::move(ring), std::move(terms));
    }

    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
        for (const auto& t : terms)
            if (t.mono.arity() != ring->arity())
                throw ring_mismatch_error("term arity mismatch");
        normalize(terms);
        return Polynomial(std::move(ring), std::move(terms));
    }

    const RingPtr& ring() const { return ring_; }
    std::span<const Term> terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    /// True for a nonzero constant times a single monomial.
    bool is_term() const { return terms_.size() == 1; }

    bool is_one() const {
        return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
    }

    /// Leading term under the internal lexicographic order; requires nonzero.
    const Term& leading_term_lex() const {
        if (terms_.empty()) throw value_error("leading term of zero polynomial");
        return terms_.front();
    }

    int total_degree() const {
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool depends_on(int var) const {
        for (const auto& t : terms_)
            if (t.mono.exps[var] > 0) return true;
        return false;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        require_same_ring(p.ring_, q.ring_);
        std::vector<Term> merged;
        merged.reserve(p.terms_.size() + q.terms_.size());
        auto a = p.terms_.begin(), b = q.terms_.begin();
        while (a != p.terms_.end() && b != q.terms_.end()) {
            if (a->mono == b->mono) {
                Rat c = a->coeff + b->coeff;
                if (c != 0) merged.push_back({std::move(c), a->mono});
                ++a; ++b;
            } else if (a->mono > b->mono) {
                merged.push_back(*a++);
            } else {
                merged.push_back(*b++);
            }
        }
        merged.insert(merged.end(), a, p.terms_.end());
        merged.insert(merged.end(), b, q.terms_.end());
        return Polynomial(p.ring_, std::move(merged));
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
        return p + (-q);
    }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        require_same_ring(p.ring_, q.ring_);
        std::map<Monomial, Rat, std::greater<Monomial>> acc;
        for (const auto& a : p.terms_)
            for (const auto& b : q.terms_)
                acc[a.mono * b.mono] += a.coeff * b.coeff;
        std::vector<Term> terms;
        terms.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) terms.push_back({std::move(c), m});
        return Polynomial(p.ring_, std::move(terms));
    }

    Polynomial scaled(const Rat& raw) const {
        Rat c = canonical(raw);
        if (c == 0) return zero(ring_);
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    /// Multiplies by a single term c*m.
    Polynomial times_term(const Rat& raw, const Monomial& m) const {
        Rat c = canonical(raw);
        if (c == 0) return zero(ring_);
        Polynomial r = *this;
        for (auto& t : r.terms_) {
            t.coeff *= c;
            t.mono = t.mono * m;
        }
        return r; // multiplying by a fixed monomial preserves the term order
    }

    Polynomial pow(int e) const {
        if (e < 0) throw value_error("negative polynomial power");
        Polynomial r = constant(ring_, Rat(1));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return same_ring(p.ring_, q.ring_) && p.terms_ == q.terms_;
    }

    /// Total order used only for canonical sorting of polynomial lists.
    friend bool poly_less(const Polynomial& p, const Polynomial& q) {
        auto a = p.terms_.begin(), b = q.terms_.begin();
        for (; a != p.terms_.end() && b != q.terms_.end(); ++a, ++b) {
            if (a->mono != b->mono) return a->mono < b->mono;
            if (a->coeff != b->coeff) return a->coeff < b->coeff;
        }
        return p.terms_.size() < q.terms_.size();
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            const bool negative = t.coeff < 0;
            Rat mag = negative ? Rat(-t.coeff) : t.coeff;
            if (first) {
                if (negative) out += "-";
                first = false;
            } else {
                out += negative ? " - " : " + ";
            }
            if (t.mono.is_one()) {
                out += rat_to_string(mag);
            } else if (mag == 1) {
                out += monomial_to_string(t.mono, *ring_);
            } else {
                out += rat_to_string(mag) + "*" + monomial_to_string(t.mono, *ring_);
            }
        }
        return out;
    }

  private:
    Polynomial(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    static void normalize(std::vector<Term>& terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.mono > b.mono; });
        std::vector<Term> out;
        out.reserve(terms.size());
        for (auto& t : terms) {
            t.coeff.canonicalize();
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff += t.coeff;
                if (out.back().coeff == 0) out.pop_back();
            } else if (t.coeff != 0) {
                out.push_back(std::move(t));
            }
        }
        terms = std::move(out);
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

} // namespace noether

#endif
