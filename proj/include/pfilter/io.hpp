#pragma once

#include <string>
#include <vector>

#include "pfilter/errors.hpp"
#include "pfilter/filter.hpp"

namespace pfilter {

struct ParseError : Error {
    using Error::Error;
};

// Structurally sound document that fails Def-1-style validation; carries the
// individual violations.
struct ValidationError : Error {
    ValidationError(const std::string& what, std::vector<Violation> v)
        : Error(what), violations(std::move(v)) {}
    std::vector<Violation> violations;
};

/// Parses the normative UTF-8 JSON document
///   {"alphabet": [...], "states": [{"id", "colors"}...],
///    "initial": [...], "edges": [{"from", "to", "symbols"}...]}
/// preserving state/edge order. Throws ParseError (with a field path or byte
/// position) for malformed documents and ValidationError for well-formed
/// documents describing an invalid filter.
Filter parse_filter(const std::string& text);

/// Canonical emission; parse(emit(f)) reproduces f, and emission is
/// byte-stable for a given filter.
std::string emit_filter(const Filter& f);

struct DotOptions {
    std::string graph_name = "filter";
    bool rankdir_lr = true;
};

/// Graphviz DOT rendering: filled states (multi-color states use a wedged
/// fill and list every token in the label), inbound arrows on initial
/// states, comma-joined symbol labels on edges. Byte-stable.
std::string emit_dot(const Filter& f, const DotOptions& opts = {});

}  // namespace pfilter
