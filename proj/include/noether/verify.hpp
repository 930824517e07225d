#ifndef NOETHER_VERIFY_HPP
#define NOETHER_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "noether/ideal.hpp"
#include "noether/monomial_ideal.hpp"

namespace noether {

/// A user-supplied decomposition to be checked: target = [components...] of
/// the stated kind, optionally with the primes the user believes belong to
/// the components.
struct DecompositionClaim {
    IdealPresentation target;
    std::vector<IdealPresentation> components;
    DecompKind kind = DecompKind::Irreducible;
    std::vector<IdealPresentation> claimed_primes;
};

enum class CheckStatus { Pass, Fail, NotCheckable };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

inline std::optional<std::vector<MonomialIdeal>> as_monomial_ideals(
    const std::vector<IdealPresentation>& ideals) {
    std::vector<MonomialIdeal> out;
    for (const auto& ideal : ideals) {
        auto m = MonomialIdeal::from_presentation(ideal);
        if (!m) return std::nullopt;
        out.push_back(std::move(*m));
    }
    return out;
}

inline std::string component_list(const std::vector<size_t>& indices) {
    std::string out;
    for (size_t i : indices) {
        if (!out.empty()) out += ", ";
        out += std::to_string(i);
    }
    return out;
}

} // namespace detail

/// Checks a claimed decomposition: (a) the intersection of the components
/// equals the target, (b) the representation is shortest (no component
/// contains the intersection of the others), and (c) the kind-specific
/// conditions. The reduced condition is certified only when the components
/// are monomial and pass the kind predicate; there is no general effective
/// test for it.
inline VerificationReport verify_decomposition(const DecompositionClaim& claim) {
    if (claim.components.empty()) throw value_error("claim with no components");
    for (const auto& c : claim.components) require_same_ring(claim.target.ring, c.ring);

    VerificationReport report;

    IdealPresentation meet = intersect_all(claim.components);
    report.checks.push_back({"intersection-equals-target",
                             equal(meet, claim.target) ? CheckStatus::Pass : CheckStatus::Fail,
                             ""});

    bool shortest = true;
    if (claim.components.size() == 1) {
        report.checks.push_back({"shortest", CheckStatus::Pass, "single component"});
    } else {
        std::vector<size_t> violating;
        for (size_t i = 0; i < claim.components.size(); ++i) {
            if (contains(claim.components[i], complement(claim.components, i)))
                violating.push_back(i);
        }
        shortest = violating.empty();
        report.checks.push_back({"shortest",
                                 shortest ? CheckStatus::Pass : CheckStatus::Fail,
                                 shortest ? ""
                                          : "redundant component(s): " +
                                                detail::component_list(violating)});
    }

    auto monomials = detail::as_monomial_ideals(claim.components);

    switch (claim.kind) {
        case DecompKind::Irreducible: {
            if (!monomials) {
                report.checks.push_back({"components-irreducible", CheckStatus::NotCheckable,
                                         "non-monomial component"});
                report.checks.push_back({"reduced", CheckStatus::NotCheckable,
                                         "no general effective test"});
                break;
            }
            std::vector<size_t> reducible;
            for (size_t i = 0; i < monomials->size(); ++i)
                if (!is_irreducible((*monomials)[i])) reducible.push_back(i);
            report.checks.push_back(
                {"components-irreducible",
                 reducible.empty() ? CheckStatus::Pass : CheckStatus::Fail,
                 reducible.empty() ? ""
                                   : "reducible component(s): " +
                                         detail::component_list(reducible)});
            if (reducible.empty() && shortest) {
                report.checks.push_back({"reduced", CheckStatus::Pass,
                                         "automatic for irredundant monomial "
                                         "irreducible components"});
            } else {
                report.checks.push_back({"reduced", CheckStatus::NotCheckable,
                                         "no general effective test"});
            }
            break;
        }
        case DecompKind::MaximalPrimary: {
            if (!monomials) {
                report.checks.push_back({"components-primary", CheckStatus::NotCheckable,
                                         "non-monomial component"});
                report.checks.push_back({"reduced", CheckStatus::NotCheckable,
                                         "no general effective test"});
                break;
            }
            std::vector<size_t> bad;
            for (size_t i = 0; i < monomials->size(); ++i)
                if (!is_primary((*monomials)[i])) bad.push_back(i);
            report.checks.push_back(
                {"components-primary", bad.empty() ? CheckStatus::Pass : CheckStatus::Fail,
                 bad.empty() ? "" : "non-primary component(s): " + detail::component_list(bad)});
            if (bad.empty()) {
                bool distinct = true;
                for (size_t i = 0; i < monomials->size() && distinct; ++i)
                    for (size_t j = i + 1; j < monomials->size() && distinct; ++j)
                        if (associated_prime((*monomials)[i]) ==
                            associated_prime((*monomials)[j]))
                            distinct = false;
                report.checks.push_back({"primes-pairwise-distinct",
                                         distinct ? CheckStatus::Pass : CheckStatus::Fail, ""});
                report.checks.push_back({"reduced",
                                         distinct && shortest ? CheckStatus::Pass
                                                              : CheckStatus::NotCheckable,
                                         ""});
            } else {
                report.checks.push_back({"reduced", CheckStatus::NotCheckable,
                                         "no general effective test"});
            }
            break;
        }
        case DecompKind::RelativelyPrime: {
            bool pairwise = true;
            for (size_t i = 0; i < claim.components.size() && pairwise; ++i)
                for (size_t j = 0; j < claim.components.size() && pairwise; ++j)
                    if (i != j &&
                        !is_relatively_prime(claim.components[i], claim.components[j]))
                        pairwise = false;
            report.checks.push_back({"pairwise-mutually-relatively-prime",
                                     pairwise ? CheckStatus::Pass : CheckStatus::Fail, ""});
            // Every representation through mutually relatively prime ideals
            // (other than the whole ring) is reduced.
            report.checks.push_back({"reduced",
                                     pairwise ? CheckStatus::Pass : CheckStatus::NotCheckable,
                                     ""});
            break;
        }
        case DecompKind::Coprime: {
            bool pairwise = true;
            for (size_t i = 0; i < claim.components.size() && pairwise; ++i)
                for (size_t j = i + 1; j < claim.components.size() && pairwise; ++j)
                    if (!is_coprime(claim.components[i], claim.components[j]))
                        pairwise = false;
            report.checks.push_back({"pairwise-coprime",
                                     pairwise ? CheckStatus::Pass : CheckStatus::Fail, ""});
            IdealPresentation prod = claim.components.front();
            for (size_t i = 1; i < claim.components.size(); ++i)
                prod = product(prod, claim.components[i]);
            report.checks.push_back({"product-equals-intersection",
                                     equal(prod, meet) ? CheckStatus::Pass : CheckStatus::Fail,
                                     ""});
            report.checks.push_back({"reduced",
                                     pairwise ? CheckStatus::Pass : CheckStatus::NotCheckable,
                                     ""});
            break;
        }
    }

    if (!claim.claimed_primes.empty()) {
        if (claim.claimed_primes.size() != claim.components.size()) {
            report.checks.push_back({"claimed-primes", CheckStatus::Fail,
                                     "prime count differs from component count"});
        } else if (!monomials) {
            report.checks.push_back({"claimed-primes", CheckStatus::NotCheckable,
                                     "non-monomial component"});
        } else {
            bool all = true;
            std::string detail;
            for (size_t i = 0; i < monomials->size(); ++i) {
                if (!is_primary((*monomials)[i])) {
                    all = false;
                    detail = "component " + std::to_string(i) + " is not primary";
                    break;
                }
                std::vector<Polynomial> vars;
                for (int v : associated_prime((*monomials)[i]))
                    vars.push_back(Polynomial::variable(claim.target.ring, v));
                IdealPresentation prime =
                    IdealPresentation::make(claim.target.ring, std::move(vars));
                if (!equal(prime, claim.claimed_primes[i])) {
                    all = false;
                    detail = "component " + std::to_string(i) + " has prime " +
                             buchberger(prime, MonomialOrder::lex()).polys.front().str();
                    break;
                }
            }
            report.checks.push_back(
                {"claimed-primes", all ? CheckStatus::Pass : CheckStatus::Fail, detail});
        }
    }
    return report;
}

inline std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotCheckable: return "not-checkable";
    }
    return "?";
}

} // namespace noether

#endif
