#ifndef UNMIX_PARSER_IO_HPP
#define UNMIX_PARSER_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "unmix/errors.hpp"
#include "unmix/polyring.hpp"

namespace unmix::io {

/// A parsed polynomial system file.
struct SystemFile {
  VarOrderPtr order;
  std::vector<Polynomial> polys;
  std::string name;  // from an optional "# name: ..." comment
};

/// Parses one polynomial over `order`.
///
///   expr   := term (('+'|'-') term)*
///   term   := ('+'|'-')* factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := integer | variable | '(' expr ')'
///
/// Whitespace is ignored. There is no implicit multiplication, so "2x1"
/// is rejected. Errors are reported as ParseError with a 1-based column.
Polynomial parse_polynomial(std::string_view text, const VarOrderPtr& order);

/// Parses a system file: '#' starts a comment, the first non-blank line
/// must be "vars v1 v2 ... vn" (leftmost smallest), and each following
/// non-blank line holds one polynomial. CRLF line endings are accepted.
SystemFile parse_system(std::string_view text);

/// Deterministic text form: terms in descending lex order (highest-index
/// variable most significant), variables inside a monomial in ascending
/// index order, explicit '*' and '^'. Non-integer coefficients are
/// written as "a/b" and do not parse back.
std::string render_polynomial(const Polynomial& p);

std::vector<std::string> render_all(std::span<const Polynomial> polys);

}  // namespace unmix::io

#endif  // UNMIX_PARSER_IO_HPP
