#ifndef HKML_ERRORS_HPP
#define HKML_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hkml {

// Library errors carry a short machine-checkable kind ("no convergence",
// "nonterminating pole", ...) plus a human message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

namespace errkind {
inline constexpr const char* no_convergence = "no convergence";
inline constexpr const char* nonterminating_pole = "nonterminating pole";
inline constexpr const char* singular_argument = "singular argument";
inline constexpr const char* parameter_pole = "parameter pole";
inline constexpr const char* non_integrable = "non-integrable result";
inline constexpr const char* truncation_cap = "truncation cap exceeded";
inline constexpr const char* domain = "domain error";
} // namespace errkind

} // namespace hkml

#endif
