#ifndef NOETHER_RING_HPP
#define NOETHER_RING_HPP

#include <algorithm>
#include <compare>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noether/error.hpp"

namespace noether {

/// The ambient polynomial ring: an ordered list of variable names.
/// Variable indices are stable; index 0 is the *first* (most significant)
/// variable of every monomial order.
class RingContext {
  public:
    static constexpr int kMaxArity = 16;

    explicit RingContext(std::vector<std::string> variables)
        : vars_(std::move(variables)) {
        // One slot beyond kMaxArity is reserved for the auxiliary variable
        // prepended by intersection and radical-membership constructions;
        // user-facing surfaces (parser, CLI) enforce the documented cap.
        if (vars_.empty() || static_cast<int>(vars_.size()) > kMaxArity + 1)
            throw value_error("ring must have between 1 and 16 variables");
        for (const auto& v : vars_) {
            if (v.empty()) throw value_error("empty variable name");
        }
        auto sorted = vars_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw value_error("duplicate variable name");
    }

    int arity() const { return static_cast<int>(vars_.size()); }
    const std::string& name(int i) const { return vars_.at(i); }
    const std::vector<std::string>& names() const { return vars_; }

    std::optional<int> index_of(std::string_view name) const {
        for (int i = 0; i < arity(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    friend bool operator==(const RingContext&, const RingContext&) = default;

  private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring(std::vector<std::string> variables) {
    return std::make_shared<RingContext>(std::move(variables));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw ring_mismatch_error();
}

/// A power product of the ring variables, stored as an exponent vector of
/// length RingContext::arity(). Comparison via <=> is the canonical internal
/// (lexicographic) order used for storage and hashing-free equality.
struct Monomial {
    std::vector<int> exps;

    static Monomial one(int arity) { return Monomial{std::vector<int>(arity, 0)}; }

    int arity() const { return static_cast<int>(exps.size()); }

    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    }

    bool divides(const Monomial& m) const {
        for (int i = 0; i < arity(); ++i)
            if (exps[i] > m.exps[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r = *this;
        for (int i = 0; i < arity(); ++i) r.exps[i] += m.exps[i];
        return r;
    }

    /// Quotient this / m; requires m.divides(*this).
    Monomial div_exact(const Monomial& m) const {
        Monomial r = *this;
        for (int i = 0; i < arity(); ++i) {
            r.exps[i] -= m.exps[i];
            if (r.exps[i] < 0) throw value_error("inexact monomial division");
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < a.arity(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < a.arity(); ++i) r.exps[i] = std::min(a.exps[i], b.exps[i]);
        return r;
    }

    bool coprime_with(const Monomial& m) const {
        for (int i = 0; i < arity(); ++i)
            if (exps[i] > 0 && m.exps[i] > 0) return false;
        return true;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// A monomial order: lexicographic, graded reverse lexicographic, or a
/// block elimination order whose first `block` variables dominate the rest
/// (graded reverse lexicographic within each block).
struct MonomialOrder {
    enum class Kind { Lex, GrevLex, Block };

    Kind kind = Kind::GrevLex;
    int block = 0; // number of leading variables eliminated (Kind::Block)

    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
    static MonomialOrder block_elim(int k) {
        if (k <= 0) throw value_error("block order needs k >= 1");
        return {Kind::Block, k};
    }

    std::string str() const {
        switch (kind) {
            case Kind::Lex: return "lex";
            case Kind::GrevLex: return "grevlex";
            case Kind::Block: return "block(" + std::to_string(block) + ")";
        }
        return "?";
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

namespace detail {

inline std::strong_ordering grevlex_range(const std::vector<int>& a,
                                          const std::vector<int>& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da <=> db;
    // Equal degree: the monomial with the smaller exponent in the rightmost
    // differing position is the larger one.
    for (int i = hi - 1; i >= lo; --i)
        if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

} // namespace detail

inline std::strong_ordering compare(const Monomial& m1, const Monomial& m2,
                                    const MonomialOrder& order) {
    if (m1.arity() != m2.arity()) throw ring_mismatch_error("monomial arity mismatch");
    const int n = m1.arity();
    switch (order.kind) {
        case MonomialOrder::Kind::Lex:
            return m1.exps <=> m2.exps;
        case MonomialOrder::Kind::GrevLex:
            return detail::grevlex_range(m1.exps, m2.exps, 0, n);
        case MonomialOrder::Kind::Block: {
            const int k = std::min(order.block, n);
            auto head = detail::grevlex_range(m1.exps, m2.exps, 0, k);
            if (head != 0) return head;
            return detail::grevlex_range(m1.exps, m2.exps, k, n);
        }
    }
    return std::strong_ordering::equal;
}

/// Strict "greater" comparator under a monomial order; used to keep term
/// maps sorted leading-term first.
struct MonomialGreater {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare(a, b, order) > 0;
    }
};

inline std::string monomial_to_string(const Monomial& m, const RingContext& ring) {
    std::string out;
    for (int i = 0; i < m.arity(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.name(i);
        if (m.exps[i] != 1) out += "^" + std::to_string(m.exps[i]);
    }
    return out.empty() ? "1" : out;
}

} // namespace noether

#endif
