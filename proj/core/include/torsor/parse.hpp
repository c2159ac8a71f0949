#ifndef TORSOR_PARSE_HPP
#define TORSOR_PARSE_HPP

#include <set>
#include <string_view>
#include <vector>

#include "torsor/curve_types.hpp"
#include "torsor/poly.hpp"

namespace torsor {

/// Parse an expression over F_{p^d}(var) following the grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' integer)?
///   base   := integer | VAR | 't' | '(' expr ')'
/// Integers reduce mod p; 't' is the extension generator (d > 1 only).
/// `var` selects the admitted variable letter ('x' or 'u'); 0 admits none
/// (constant expressions).  Throws ParseError with the offending position.
RationalFunction parse_rational(std::string_view text, const FieldSpecPtr& spec, char var);

/// Constant expression (no x/u), e.g. a point coordinate.
Fq parse_element(std::string_view text, const FieldSpecPtr& spec);

/// Witt vector literal '[' expr (',' expr)* ']'.
std::vector<RationalFunction> parse_witt_literal(std::string_view text, const FieldSpecPtr& spec,
                                                 char var);
/// Witt vector literal with integer entries (torsion-free domain).
std::vector<BigInt> parse_witt_literal_int(std::string_view text);

/// A point: a field-element expression or "inf".
PointOfP1 parse_point(std::string_view text, const FieldSpecPtr& spec);

/// "pt:mult,pt:mult,..." with positive multiplicities; empty text is the zero modulus.
Modulus parse_modulus(std::string_view text, const FieldSpecPtr& spec);

/// "pt,pt,..."
std::set<PointOfP1> parse_point_set(std::string_view text, const FieldSpecPtr& spec);

}  // namespace torsor

#endif
