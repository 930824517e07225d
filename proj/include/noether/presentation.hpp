#ifndef NOETHER_PRESENTATION_HPP
#define NOETHER_PRESENTATION_HPP

#include <vector>

#include "noether/polynomial.hpp"

namespace noether {

/// A finitely generated ideal, presented by a generator list. Zero
/// generators are stripped; the empty list is the zero ideal.
struct IdealPresentation {
    RingPtr ring;
    std::vector<Polynomial> generators;

    static IdealPresentation make(RingPtr ring, std::vector<Polynomial> gens) {
        IdealPresentation ideal;
        ideal.ring = std::move(ring);
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            require_same_ring(ideal.ring, g.ring());
            ideal.generators.push_back(std::move(g));
        }
        return ideal;
    }

    static IdealPresentation zero(RingPtr ring) { return {std::move(ring), {}}; }

    static IdealPresentation unit(RingPtr ring) {
        auto one = Polynomial::constant(ring, Rat(1));
        return {std::move(ring), {std::move(one)}};
    }

    bool is_zero_ideal() const { return generators.empty(); }
};

} // namespace noether

#endif
