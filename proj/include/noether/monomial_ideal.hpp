#ifndef NOETHER_MONOMIAL_IDEAL_HPP
#define NOETHER_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "noether/decomp_kind.hpp"
#include "noether/presentation.hpp"

namespace noether {

/// An ideal generated by monomials, stored by its unique minimal generating
/// set (no generator divides another), sorted ascending under the internal
/// lexicographic order.
class MonomialIdeal {
  public:
    MonomialIdeal() = default;

    static MonomialIdeal from_generators(RingPtr ring, std::vector<Monomial> gens) {
        for (const auto& m : gens)
            if (m.arity() != ring->arity())
                throw ring_mismatch_error("monomial arity mismatch");
        MonomialIdeal ideal;
        ideal.ring_ = std::move(ring);
        ideal.gens_ = minimal_subset(std::move(gens));
        return ideal;
    }

    /// Reads a monomial ideal off a presentation whose generators are all
    /// single terms; returns nothing otherwise.
    static std::optional<MonomialIdeal> from_presentation(const IdealPresentation& ideal) {
        std::vector<Monomial> gens;
        for (const auto& g : ideal.generators) {
            if (!g.is_term()) return std::nullopt;
            gens.push_back(g.terms()[0].mono);
        }
        return from_generators(ideal.ring, std::move(gens));
    }

    IdealPresentation to_presentation() const {
        std::vector<Polynomial> gens;
        for (const auto& m : gens_) gens.push_back(Polynomial::monomial(ring_, m));
        return IdealPresentation::make(ring_, std::move(gens));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& min_gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_proper() const { return !is_unit(); }

    bool contains_monomial(const Monomial& m) const {
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    /// Set containment: every generator of `other` lies in this ideal.
    bool contains(const MonomialIdeal& other) const {
        require_same_ring(ring_, other.ring_);
        for (const auto& m : other.gens_)
            if (!contains_monomial(m)) return false;
        return true;
    }

    MonomialIdeal intersect(const MonomialIdeal& other) const {
        require_same_ring(ring_, other.ring_);
        if (is_zero() || other.is_zero()) return from_generators(ring_, {});
        std::vector<Monomial> gens;
        gens.reserve(gens_.size() * other.gens_.size());
        for (const auto& a : gens_)
            for (const auto& b : other.gens_) gens.push_back(Monomial::lcm(a, b));
        return from_generators(ring_, std::move(gens));
    }

    MonomialIdeal sum(const MonomialIdeal& other) const {
        require_same_ring(ring_, other.ring_);
        std::vector<Monomial> gens = gens_;
        gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
        return from_generators(ring_, std::move(gens));
    }

    /// Variables occurring in some minimal generator, sorted.
    std::vector<int> support() const {
        std::vector<int> vars;
        for (int v = 0; v < ring_->arity(); ++v)
            for (const auto& m : gens_)
                if (m.exps[v] > 0) { vars.push_back(v); break; }
        return vars;
    }

    std::string str() const {
        if (gens_.empty()) return "(0)";
        std::string out = "(";
        // Printed descending (x before y) the way the ideals are usually
        // written; storage stays ascending.
        for (size_t i = gens_.size(); i-- > 0;) {
            out += monomial_to_string(gens_[i], *ring_);
            if (i) out += ", ";
        }
        return out + ")";
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
    }

  private:
    static std::vector<Monomial> minimal_subset(std::vector<Monomial> gens) {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> minimal;
        for (size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < gens.size() && !redundant; ++j)
                if (j != i && gens[j].divides(gens[i]) && gens[j] != gens[i])
                    redundant = true;
            if (!redundant) minimal.push_back(gens[i]);
        }
        return minimal;
    }

    RingPtr ring_;
    std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset generating the same ideal.
inline MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens) {
    return MonomialIdeal::from_generators(std::move(ring), std::move(gens));
}

/// An irreducible monomial ideal: generated by pure variable powers,
/// represented as (variable index, exponent) pairs sorted by variable.
struct IrreducibleMonomialComponent {
    std::vector<std::pair<int, int>> powers;

    MonomialIdeal to_ideal(const RingPtr& ring) const {
        std::vector<Monomial> gens;
        for (const auto& [var, exp] : powers) {
            Monomial m = Monomial::one(ring->arity());
            m.exps.at(var) = exp;
            gens.push_back(std::move(m));
        }
        return MonomialIdeal::from_generators(ring, std::move(gens));
    }

    std::vector<int> prime_vars() const {
        std::vector<int> vars;
        for (const auto& [var, exp] : powers) vars.push_back(var);
        return vars;
    }

    friend auto operator<=>(const IrreducibleMonomialComponent&,
                            const IrreducibleMonomialComponent&) = default;
};

namespace detail {

inline void require_decomposable(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) throw value_error("cannot decompose the unit ideal");
    if (ideal.is_zero()) throw value_error("cannot decompose the zero monomial ideal");
}

} // namespace detail

/// A monomial ideal is irreducible exactly when its minimal generators are
/// pure variable powers.
inline bool is_irreducible(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) throw value_error("irreducibility undefined for the unit ideal");
    for (const auto& m : ideal.min_gens()) {
        int positive = 0;
        for (int e : m.exps)
            if (e > 0) ++positive;
        if (positive != 1) return false;
    }
    return true;
}

/// A monomial ideal is primary exactly when every variable occurring in a
/// minimal generator also occurs as a pure power among them.
inline bool is_primary(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) throw value_error("primariness undefined for the unit ideal");
    std::vector<int> support = ideal.support();
    for (int v : support) {
        bool pure = false;
        for (const auto& m : ideal.min_gens()) {
            if (m.exps[v] == 0) continue;
            if (m.exps[v] == m.degree()) { pure = true; break; }
        }
        if (!pure) return false;
    }
    return true;
}

/// The unique prime associated with a primary monomial ideal: the ideal of
/// its support variables.
inline std::vector<int> associated_prime(const MonomialIdeal& ideal) {
    if (!is_primary(ideal)) throw value_error("associated prime of a non-primary ideal");
    return ideal.support();
}

namespace detail {

inline bool all_degree_d_monomials_in(const MonomialIdeal& ideal,
                                      const std::vector<int>& vars, int degree) {
    // Walk all exponent vectors over `vars` summing to `degree`.
    Monomial m = Monomial::one(ideal.ring()->arity());
    auto rec = [&](auto&& self, size_t pos, int remaining) -> bool {
        if (pos + 1 == vars.size()) {
            m.exps[vars[pos]] = remaining;
            bool ok = ideal.contains_monomial(m);
            m.exps[vars[pos]] = 0;
            return ok;
        }
        for (int e = 0; e <= remaining; ++e) {
            m.exps[vars[pos]] = e;
            if (!self(self, pos + 1, remaining - e)) {
                m.exps[vars[pos]] = 0;
                return false;
            }
        }
        m.exps[vars[pos]] = 0;
        return true;
    };
    return rec(rec, 0, degree);
}

} // namespace detail

/// The exponent of a primary monomial ideal: the least power of its
/// associated prime contained in it. The search is bounded by
/// 1 + sum(e_i - 1) over the pure-power generator exponents, which always
/// suffices by pigeonhole.
inline int exponent_of(const MonomialIdeal& ideal) {
    std::vector<int> prime = associated_prime(ideal);
    if (prime.empty()) throw value_error("exponent undefined for the zero ideal");
    int bound = 1;
    for (int v : prime) {
        for (const auto& m : ideal.min_gens()) {
            if (m.exps[v] > 0 && m.exps[v] == m.degree()) {
                bound += m.exps[v] - 1;
                break;
            }
        }
    }
    for (int d = 1; d < bound; ++d)
        if (detail::all_degree_d_monomials_in(ideal, prime, d)) return d;
    return bound;
}

/// Tie-break rule for the irreducible splitting recursion. Both strategies
/// produce the same (unique) irredundant decomposition; having two lets the
/// test suite check exactly that.
enum class SplitStrategy { FirstVariable, LastVariable };

struct MonomialComponent {
    MonomialIdeal ideal;
    std::optional<std::vector<int>> prime;
    std::optional<int> exponent;
    std::optional<bool> isolated;
};

struct MonomialDecomposition {
    DecompKind kind = DecompKind::Irreducible;
    std::vector<MonomialComponent> components;
    bool certified_unique = false;
    int recursion_depth = 0; // splitting depth of the irreducible recursion
};

namespace detail {

struct SplitState {
    std::set<IrreducibleMonomialComponent> found;
    int max_depth = 0;
};

inline IrreducibleMonomialComponent component_from_pure_powers(
    const std::vector<Monomial>& gens) {
    IrreducibleMonomialComponent comp;
    for (const auto& m : gens) {
        for (int v = 0; v < m.arity(); ++v)
            if (m.exps[v] > 0) comp.powers.push_back({v, m.exps[v]});
    }
    std::sort(comp.powers.begin(), comp.powers.end());
    return comp;
}

inline void split_recursive(const MonomialIdeal& ideal, SplitStrategy strategy, int depth,
                            SplitState& state) {
    state.max_depth = std::max(state.max_depth, depth);
    const auto& gens = ideal.min_gens();
    const Monomial* target = nullptr;
    for (const auto& m : gens) {
        int positive = 0;
        for (int e : m.exps)
            if (e > 0) ++positive;
        if (positive > 1) { target = &m; break; }
    }
    if (!target) {
        state.found.insert(component_from_pure_powers(gens));
        return;
    }
    int var = -1;
    if (strategy == SplitStrategy::FirstVariable) {
        for (int v = 0; v < target->arity(); ++v)
            if (target->exps[v] > 0) { var = v; break; }
    } else {
        for (int v = target->arity() - 1; v >= 0; --v)
            if (target->exps[v] > 0) { var = v; break; }
    }
    Monomial u = Monomial::one(target->arity());
    u.exps[var] = target->exps[var];
    Monomial v = target->div_exact(u);
    for (const Monomial& part : {u, v}) {
        std::vector<Monomial> extended = gens;
        extended.push_back(part);
        split_recursive(MonomialIdeal::from_generators(ideal.ring(), std::move(extended)),
                        strategy, depth + 1, state);
    }
}

inline void prune_redundant(std::vector<IrreducibleMonomialComponent>& comps,
                            const RingPtr& ring) {
    std::vector<MonomialIdeal> ideals;
    for (const auto& c : comps) ideals.push_back(c.to_ideal(ring));
    bool changed = true;
    while (changed && comps.size() > 1) {
        changed = false;
        for (size_t i = 0; i < comps.size(); ++i) {
            MonomialIdeal rest;
            bool first = true;
            for (size_t j = 0; j < comps.size(); ++j) {
                if (j == i) continue;
                rest = first ? ideals[j] : rest.intersect(ideals[j]);
                first = false;
            }
            if (ideals[i].contains(rest)) {
                comps.erase(comps.begin() + i);
                ideals.erase(ideals.begin() + i);
                changed = true;
                break;
            }
        }
    }
}

} // namespace detail

/// The unique irredundant decomposition of a proper monomial ideal into
/// irreducible (pure-power) components, by successive splitting of a mixed
/// generator m = u*v into the branches M+(u) and M+(v).
inline std::vector<IrreducibleMonomialComponent> irreducible_components(
    const MonomialIdeal& ideal, SplitStrategy strategy = SplitStrategy::FirstVariable,
    int* recursion_depth = nullptr) {
    detail::require_decomposable(ideal);
    detail::SplitState state;
    detail::split_recursive(ideal, strategy, 0, state);
    std::vector<IrreducibleMonomialComponent> comps(state.found.begin(), state.found.end());
    detail::prune_redundant(comps, ideal.ring());
    std::sort(comps.begin(), comps.end());
    if (recursion_depth) *recursion_depth = state.max_depth;
    return comps;
}

inline MonomialDecomposition irreducible_decompose(
    const MonomialIdeal& ideal, SplitStrategy strategy = SplitStrategy::FirstVariable) {
    MonomialDecomposition report;
    report.kind = DecompKind::Irreducible;
    report.certified_unique = true;
    auto comps = irreducible_components(ideal, strategy, &report.recursion_depth);

    std::vector<std::vector<int>> primes;
    for (const auto& c : comps) primes.push_back(c.prime_vars());
    // Isolated = the prime is minimal among *distinct* primes in the list.
    auto contains_subset = [](const std::vector<int>& big, const std::vector<int>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    for (size_t i = 0; i < comps.size(); ++i) {
        MonomialComponent out;
        out.ideal = comps[i].to_ideal(ideal.ring());
        out.prime = primes[i];
        out.exponent = exponent_of(out.ideal);
        bool isolated = true;
        for (size_t j = 0; j < comps.size() && isolated; ++j)
            if (primes[j] != primes[i] && contains_subset(primes[i], primes[j]))
                isolated = false;
        // A prime occurring more than once marks all its components embedded.
        for (size_t j = 0; j < comps.size() && isolated; ++j)
            if (j != i && primes[j] == primes[i]) isolated = false;
        out.isolated = isolated;
        report.components.push_back(std::move(out));
    }
    return report;
}

/// Flags the set-inclusion-minimal primes: flag i is true iff prime i
/// contains no other prime in the list.
inline std::vector<bool> isolated_flags(const std::vector<std::vector<int>>& primes) {
    for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j])
                throw value_error("isolated_flags requires pairwise distinct primes");
    std::vector<bool> flags(primes.size(), true);
    for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = 0; j < primes.size(); ++j) {
            if (i == j) continue;
            if (std::includes(primes[i].begin(), primes[i].end(), primes[j].begin(),
                              primes[j].end()))
                flags[i] = false;
        }
    return flags;
}

/// Decomposition into maximal primary components: irreducible components
/// grouped by associated prime, each group intersected. Components carry
/// prime, exponent and the isolated flag.
inline MonomialDecomposition primary_decompose(
    const MonomialIdeal& ideal, SplitStrategy strategy = SplitStrategy::FirstVariable) {
    MonomialDecomposition report;
    report.kind = DecompKind::MaximalPrimary;
    report.certified_unique = true;
    auto comps = irreducible_components(ideal, strategy, &report.recursion_depth);

    std::map<std::vector<int>, MonomialIdeal> groups;
    for (const auto& c : comps) {
        MonomialIdeal part = c.to_ideal(ideal.ring());
        auto [it, inserted] = groups.try_emplace(c.prime_vars(), part);
        if (!inserted) it->second = it->second.intersect(part);
    }

    std::vector<std::vector<int>> primes;
    for (const auto& [prime, part] : groups) primes.push_back(prime);
    std::vector<bool> flags = isolated_flags(primes);

    size_t i = 0;
    for (auto& [prime, part] : groups) {
        MonomialComponent out;
        out.ideal = std::move(part);
        out.prime = prime;
        out.exponent = exponent_of(out.ideal);
        out.isolated = flags[i++];
        report.components.push_back(std::move(out));
    }
    std::sort(report.components.begin(), report.components.end(),
              [](const MonomialComponent& a, const MonomialComponent& b) {
                  if (a.prime->size() != b.prime->size())
                      return a.prime->size() < b.prime->size();
                  return *a.prime < *b.prime;
              });
    return report;
}

/// Decomposition into relatively prime irreducible components: primary
/// components grouped by the connected components of the comparability
/// graph on their associated primes.
inline MonomialDecomposition relprime_decompose(
    const MonomialIdeal& ideal, SplitStrategy strategy = SplitStrategy::FirstVariable) {
    MonomialDecomposition primary = primary_decompose(ideal, strategy);
    const size_t n = primary.components.size();

    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto comparable = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
               std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (comparable(*primary.components[i].prime, *primary.components[j].prime))
                parent[find(i)] = find(j);

    std::map<size_t, std::vector<size_t>> groups;
    for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

    MonomialDecomposition report;
    report.kind = DecompKind::RelativelyPrime;
    report.certified_unique = true;
    report.recursion_depth = primary.recursion_depth;
    for (const auto& [root, members] : groups) {
        MonomialComponent out;
        bool first = true;
        for (size_t idx : members) {
            out.ideal = first ? primary.components[idx].ideal
                              : out.ideal.intersect(primary.components[idx].ideal);
            first = false;
        }
        if (members.size() == 1) {
            out.prime = primary.components[members[0]].prime;
            out.exponent = primary.components[members[0]].exponent;
        }
        report.components.push_back(std::move(out));
    }
    std::sort(report.components.begin(), report.components.end(),
              [](const MonomialComponent& a, const MonomialComponent& b) {
                  return a.ideal.min_gens() < b.ideal.min_gens();
              });
    return report;
}

/// Coprime decomposition of a proper monomial ideal. The sum of two proper
/// monomial ideals never contains 1, so the coprimality graph is complete
/// and the ideal itself is the only component.
inline MonomialDecomposition coprime_decompose(const MonomialIdeal& ideal) {
    detail::require_decomposable(ideal);
    MonomialDecomposition report;
    report.kind = DecompKind::Coprime;
    report.certified_unique = true;
    MonomialComponent out;
    out.ideal = ideal;
    if (is_primary(ideal)) {
        out.prime = associated_prime(ideal);
        out.exponent = exponent_of(ideal);
    }
    report.components.push_back(std::move(out));
    return report;
}

inline MonomialDecomposition decompose(const MonomialIdeal& ideal, DecompKind kind,
                                       SplitStrategy strategy = SplitStrategy::FirstVariable) {
    switch (kind) {
        case DecompKind::Irreducible: return irreducible_decompose(ideal, strategy);
        case DecompKind::MaximalPrimary: return primary_decompose(ideal, strategy);
        case DecompKind::RelativelyPrime: return relprime_decompose(ideal, strategy);
        case DecompKind::Coprime: return coprime_decompose(ideal);
    }
    throw value_error("unknown decomposition kind");
}

/// Associated-prime containment criterion for relative primality of proper
/// monomial ideals: R is relatively prime to S iff no associated prime of R
/// is contained in an associated prime of S.
inline bool relatively_prime_by_primes(const MonomialIdeal& r, const MonomialIdeal& s) {
    if (s.is_unit()) return true; // every ideal is relatively prime to (1)
    if (r.is_unit()) return true;
    auto rp = primary_decompose(r);
    auto sp = primary_decompose(s);
    for (const auto& pr : rp.components)
        for (const auto& ps : sp.components)
            if (std::includes(ps.prime->begin(), ps.prime->end(), pr.prime->begin(),
                              pr.prime->end()))
                return false;
    return true;
}

} // namespace noether

#endif
