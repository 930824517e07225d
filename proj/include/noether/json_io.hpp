#ifndef NOETHER_JSON_IO_HPP
#define NOETHER_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "noether/ideal.hpp"
#include "noether/matrix_class.hpp"
#include "noether/monomial_ideal.hpp"
#include "noether/verify.hpp"
#include "noether/zring.hpp"

namespace noether {

using json = nlohmann::json;

inline json ideal_to_json(const IdealPresentation& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.generators) gens.push_back(g.str());
    return gens;
}

inline json monomial_ideal_to_json(const MonomialIdeal& ideal) {
    json gens = json::array();
    for (const auto& m : ideal.min_gens())
        gens.push_back(monomial_to_string(m, *ideal.ring()));
    return gens;
}

/// Schema-stable component object: {"generators", "associated_prime",
/// "exponent", "isolated"}; absent metadata is null.
inline json component_to_json(const MonomialComponent& component) {
    json out;
    out["generators"] = monomial_ideal_to_json(component.ideal);
    if (component.prime) {
        json prime = json::array();
        for (int v : *component.prime) prime.push_back(component.ideal.ring()->name(v));
        out["associated_prime"] = prime;
    } else {
        out["associated_prime"] = nullptr;
    }
    out["exponent"] = component.exponent ? json(*component.exponent) : json(nullptr);
    out["isolated"] = component.isolated ? json(*component.isolated) : json(nullptr);
    return out;
}

inline json decomposition_to_json(const MonomialDecomposition& report) {
    json components = json::array();
    for (const auto& c : report.components) components.push_back(component_to_json(c));
    return components;
}

inline json zring_component_to_json(const zring::GComponent& component) {
    json out;
    out["generators"] = json::array({std::to_string(component.generator)});
    out["associated_prime"] =
        component.associated_prime
            ? json(json::array({std::to_string(component.associated_prime)}))
            : json(nullptr);
    out["exponent"] = nullptr;
    out["isolated"] = component.isolated;
    return out;
}

inline json divisor_system_to_json(const matrix::ElementaryDivisorSystem& system) {
    json out = json::array();
    for (const auto& d : system.divisors) out.push_back(d.get_str());
    return out;
}

inline json verification_to_json(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"status", to_string(c.status)},
                          {"detail", c.detail}});
    }
    return {{"ok", report.ok()}, {"checks", checks}};
}

/// Envelope shared by every CLI command.
inline json command_envelope(const std::string& command, json inputs, json result) {
    return {{"command", command},
            {"inputs", std::move(inputs)},
            {"result", std::move(result)},
            {"components", json::array()}};
}

} // namespace noether

#endif
