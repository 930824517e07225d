#ifndef NOETHER_DECOMP_KIND_HPP
#define NOETHER_DECOMP_KIND_HPP

#include <optional>
#include <string>
#include <string_view>

namespace noether {

/// The four decomposition kinds handled by the library.
enum class DecompKind { Irreducible, MaximalPrimary, RelativelyPrime, Coprime };

inline std::string to_string(DecompKind kind) {
    switch (kind) {
        case DecompKind::Irreducible: return "irreducible";
        case DecompKind::MaximalPrimary: return "primary";
        case DecompKind::RelativelyPrime: return "relprime";
        case DecompKind::Coprime: return "coprime";
    }
    return "?";
}

inline std::optional<DecompKind> parse_decomp_kind(std::string_view text) {
    if (text == "irreducible") return DecompKind::Irreducible;
    if (text == "primary" || text == "maximal-primary") return DecompKind::MaximalPrimary;
    if (text == "relprime" || text == "relatively-prime") return DecompKind::RelativelyPrime;
    if (text == "coprime") return DecompKind::Coprime;
    return std::nullopt;
}

} // namespace noether

#endif
