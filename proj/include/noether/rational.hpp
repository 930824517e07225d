#ifndef NOETHER_RATIONAL_HPP
#define NOETHER_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "noether/error.hpp"

namespace noether {

// Exact coefficient arithmetic is delegated to GMP. mpq_class keeps values
// in lowest terms with a positive denominator, which is exactly the
// canonical form the rest of the library relies on.
using Int = mpz_class;
using Rat = mpq_class;

/// GMP canonicalizes results of arithmetic but not values assembled from
/// raw numerator/denominator pairs; boundary code funnels through here.
inline Rat canonical(Rat q) {
    q.canonicalize();
    return q;
}

inline Rat rat_from_parts(const Int& num, const Int& den) {
    if (den == 0) throw value_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "n" or "n/d" with optional sign.
inline Rat rat_from_string(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return rat_from_parts(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw value_error("malformed rational literal: " + s);
    }
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

} // namespace noether

#endif
