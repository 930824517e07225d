#ifndef NOETHER_ERROR_HPP
#define NOETHER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace noether {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values from different ring contexts were combined.
struct ring_mismatch_error : error {
    ring_mismatch_error() : error("ring context mismatch") {}
    explicit ring_mismatch_error(const std::string& what) : error(what) {}
};

/// An argument violated a documented precondition (zero ideal where a
/// nonzero one is required, unit ideal passed to a decomposition, ...).
struct value_error : error {
    using error::error;
};

/// Text input failed to parse; carries a 1-based source position.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : error(msg + " at line " + std::to_string(line_) + ", column " +
                std::to_string(column_)),
          line(line_),
          column(column_) {}
};

} // namespace noether

#endif
