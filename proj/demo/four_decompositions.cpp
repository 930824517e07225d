// Walks one ideal through the whole toolkit: the four decompositions of a
// monomial ideal, the same answers re-derived with the general ideal
// calculus, and the two principal-ideal settings.

#include <iostream>

#include "noether/noether.hpp"

using namespace noether;

int main() {
    auto ring = make_ring({"x", "y", "z"});
    auto ideal = IdealPresentation::make(
        ring, parse_polynomial_list("x^3, x^2*y, x*y^2, z", ring));
    MonomialIdeal mono = *MonomialIdeal::from_presentation(ideal);

    std::cout << "ideal " << mono.str() << "\n\n";
    for (DecompKind kind : {DecompKind::Irreducible, DecompKind::MaximalPrimary,
                            DecompKind::RelativelyPrime, DecompKind::Coprime}) {
        MonomialDecomposition report = decompose(mono, kind);
        std::cout << to_string(kind) << ":\n";
        for (const auto& c : report.components) {
            std::cout << "  " << c.ideal.str();
            if (c.prime) {
                std::cout << "  prime=(";
                for (size_t i = 0; i < c.prime->size(); ++i)
                    std::cout << (i ? ", " : "") << ring->name((*c.prime)[i]);
                std::cout << ")";
            }
            if (c.exponent) std::cout << " exponent=" << *c.exponent;
            if (c.isolated) std::cout << (*c.isolated ? " isolated" : " embedded");
            std::cout << "\n";
        }
    }

    // The components really do intersect back to the ideal, and the two
    // primary components are not relatively prime to each other.
    MonomialDecomposition primary = primary_decompose(mono);
    IdealPresentation meet = primary.components[0].ideal.to_presentation();
    for (size_t i = 1; i < primary.components.size(); ++i)
        meet = intersect(meet, primary.components[i].ideal.to_presentation());
    std::cout << "\ncomponents intersect back to the input: "
              << (equal(meet, ideal) ? "yes" : "no") << "\n";
    std::cout << "Q3 relatively prime to Q4: "
              << (is_relatively_prime(primary.components[0].ideal.to_presentation(),
                                      primary.components[1].ideal.to_presentation())
                      ? "yes"
                      : "no")
              << "\n";

    // Same story in the ring of even integers.
    zring::GRing even(2);
    auto z_report = zring::decompose(zring::make_gideal(even, 12),
                                     DecompKind::MaximalPrimary);
    std::cout << "\n(24) in the even integers:\n";
    for (const auto& c : z_report.components)
        std::cout << "  (" << c.generator << ") prime=(" << c.associated_prime << ")"
                  << (c.isolated ? " isolated" : " embedded") << "\n";

    // And for integer matrix classes.
    auto chain = matrix::ElementaryDivisorSystem::make({Int(2), Int(4), Int(4), Int(0)});
    std::cout << "\nirreducible classes of " << chain.str() << ":\n";
    for (const auto& cls : matrix::full_irreducible_split(chain))
        std::cout << "  " << cls.system.str() << "\n";
    return 0;
}
