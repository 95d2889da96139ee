#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quasiadj/bipoly.hpp"

namespace quasiadj {

/// Germ of a plane curve at the origin, given by its branches f_1 ... f_r.
struct GermSpec {
    std::vector<BiPoly> factors;
    std::vector<std::string> labels;  // "f1", "f2", ... unless the caller supplies names

    std::size_t r() const { return factors.size(); }
    friend bool operator==(const GermSpec&, const GermSpec&) = default;
};

/// Parses a germ file: one `fN = <expr>` per line, N = 1..r in order, `#` comments.
/// Throws ParseError (syntax, with line/column) or GermError (empty list, factor not vanishing at 0).
GermSpec parse_germ(std::string_view source);

/// Parses a single polynomial expression in x, y.
BiPoly parse_expression(std::string_view expr);

/// Checks r >= 1 and that each factor is nonzero and vanishes at the origin.
void validate_germ(const GermSpec& g);

/// Text that parse_germ reads back to an equal GermSpec.
std::string render_germ(const GermSpec& g);

/// Builds a germ from factors with default labels, validating it.
GermSpec make_germ(std::vector<BiPoly> factors);

/// Minimal total degree of a term of p (multiplicity at the origin); throws DomainError on zero.
std::uint32_t mult_at_origin(const BiPoly& p);

}  // namespace quasiadj
