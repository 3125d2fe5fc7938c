#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tightcx/simplicial_complex.hpp"

namespace tightcx {

/// Parsed ".cplx" document: one facet per line as whitespace-separated
/// nonnegative integers, '#' to end of line is a comment, blank lines
/// ignored.  A "# name: ..." header comment carries an optional name.
struct ComplexDocument {
    SimplicialComplex complex;
    std::optional<std::string> name;
};

/// Errors name the offending 1-based line.
ComplexDocument parse_complex_text(std::istream& in);
ComplexDocument parse_complex_text(const std::string& text);
ComplexDocument load_complex_file(const std::string& path);

/// Canonical form: optional name header, then one facet per line in
/// canonical order.  parse ∘ serialize ∘ parse = parse.
std::string serialize_complex(const SimplicialComplex& x,
                              const std::optional<std::string>& name = std::nullopt);

} // namespace tightcx
