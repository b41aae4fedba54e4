#ifndef EVITA_ERRORS_HPP
#define EVITA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evita {

// Malformed instance files, tables or result CSVs.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

// Invalid experiment configuration (bad bounds, unknown solver names, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A day sub-problem that cannot be served at all (some shop unreachable
// within the vehicle limits even on a dedicated route).
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace evita

#endif
