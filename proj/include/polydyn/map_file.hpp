#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polydyn/poly_map.hpp"

namespace polydyn {

/// Parsed map definition. Parameters are substituted into exact rational
/// coefficients at parse time; they are kept here only as provenance.
/// Two MapSpecs are equal when they define the same map: same name, same
/// variables, structurally equal components (parameters are parse-time
/// sugar and do not survive rendering).
struct MapSpec {
    std::string name;
    std::vector<std::string> vars;
    std::vector<std::pair<std::string, Rational>> params;
    RationalMap map;

    friend bool operator==(const MapSpec& a, const MapSpec& b) {
        return a.name == b.name && a.vars == b.vars && a.map == b.map;
    }
};

/// Parses a map-definition file:
///
///   file      := mapdef+
///   mapdef    := "map" IDENT "{" "vars:" identlist
///                ("params:" binding ("," binding)*)? rule+ "}"
///   binding   := IDENT "=" RATIONAL
///   rule      := IDENT "->" expr
///   expr      := term (("+"|"-") term)*
///   term      := factor ("*" factor)*
///   factor    := RATIONAL | IDENT | factor "^" NAT | "(" expr ")" | "-" factor
///   RATIONAL  := INT ("/" NAT)?
///
/// Every rule's left side must be a declared variable, each variable gets
/// exactly one rule, and every identifier in an expression must be a
/// declared variable or parameter. Errors carry line/column.
std::vector<MapSpec> parse_map_file(const std::string& text);

/// First map of the file (the common case for the CLI).
MapSpec parse_single_map(const std::string& text);

/// Renders a map back into the map-definition grammar (parameters folded
/// into the coefficients). parse(render(parse(text))) == parse(text).
std::string render_map(const MapSpec& spec);

/// Float-field version of the parsed map: the exactly-parsed components
/// converted coefficient-wise to complex doubles.
ComplexMap to_float_map(const MapSpec& spec);

}  // namespace polydyn
