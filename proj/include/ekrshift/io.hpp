#pragma once

#include <iosfwd>
#include <string>

#include "ekrshift/complex.hpp"

namespace ekrshift {

inline constexpr const char* kVersion = "0.1.0";

/// Facet-list text format: an optional header line `vertices: a b c ...`
/// fixing the ambient order, then one facet per line as whitespace-separated
/// vertex tokens; `#` starts a comment. Without a header the vertex order is
/// the order of first appearance. Malformed input throws with a line number.
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex_file(const std::string& path);

/// Canonical facet-list rendering: header plus facets in (size, lex) order.
std::string to_facet_list(const SimplicialComplex& cx);

/// FNV-1a over the canonical facet list; stable across runs.
std::string digest(const SimplicialComplex& cx);

}  // namespace ekrshift
