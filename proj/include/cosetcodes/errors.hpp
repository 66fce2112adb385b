#ifndef COSETCODES_ERRORS_HPP
#define COSETCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cosetcodes {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller passed something outside an operation's precondition.
struct invalid_parameter : error {
    explicit invalid_parameter(const std::string& msg) : error(msg) {}
};

// A configured cap (group order, subgroup count, search nodes) was exceeded.
struct resource_limit : error {
    explicit resource_limit(const std::string& msg) : error(msg) {}
};

// An untrusted multiplication table failed a group axiom. Carries the axiom
// name and a witness so the message pinpoints the offending entries.
struct table_validation_error : error {
    std::string axiom;
    table_validation_error(const std::string& axiom_name, const std::string& msg)
        : error("table validation failed (" + axiom_name + " axiom): " + msg),
          axiom(axiom_name) {}
};

// Internal consistency check failed. Always a bug, never expected input.
struct structural_error : error {
    explicit structural_error(const std::string& msg) : error(msg) {}
};

// Two routes that are provably equivalent returned different answers.
struct disagreement_error : error {
    explicit disagreement_error(const std::string& msg) : error(msg) {}
};

// Group-spec string rejected; position is a 0-based offset into the input.
struct spec_parse_error : invalid_parameter {
    std::size_t position;
    spec_parse_error(std::size_t pos, const std::string& expected, const std::string& text)
        : invalid_parameter("spec parse error at position " + std::to_string(pos) +
                            " in \"" + text + "\": expected " + expected),
          position(pos) {}
};

}  // namespace cosetcodes

#endif
