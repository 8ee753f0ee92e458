#pragma once

#include "condec/generator.hpp"

#include <string>
#include <string_view>

namespace condec {

/// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string &message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct GenFile {
    std::string name;
    Generator generator;
};

struct ParseOptions {
    /// Tilde events ("~x") appear only in files the tool itself writes.
    bool allow_tilde = false;
};

/// Line-oriented format, '#' starts a comment:
///
///     generator NAME
///     alphabet e1 e2 ...
///     states s1 s2 ...
///     initial s
///     marked s1 ...        (may be empty or omitted)
///     trans SRC EVENT DST  (any number)
///
/// State ids follow declaration order.
GenFile parse_gen_file(std::string_view text, ParseOptions options = {});
Generator parse_gen(std::string_view text, ParseOptions options = {});

/// Canonical text: events in canonical order, states in id order,
/// transitions by (source id, event order).
std::string serialize_gen(const Generator &g, const std::string &name = "G");

/// Graphviz rendering: marked states are double circles, the initial state
/// has an entry arrow from an invisible point node.
std::string export_dot(const Generator &g, const std::string &name = "G");

} // namespace condec
