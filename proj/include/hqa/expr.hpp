#ifndef HQA_EXPR_HPP
#define HQA_EXPR_HPP

#include "hqa/smash.hpp"
#include "hqa/spec_file.hpp"

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace hqa {

/// Syntax error; `column` is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t column);
  std::size_t column() const { return column_; }

private:
  std::size_t column_;
};

/// Semantic error during evaluation (unknown name, wrong ambient, ...).
class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ArrowLiteral {
  std::string target;
  std::size_t index = 0; // 1-based basis index
  std::string source;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Add, Sub, Mul, Pow, Neg, Number, Name, Vertex, PathLiteral };
  Kind kind;
  std::size_t column = 0;
  std::vector<ExprPtr> args;        // operands
  std::string name;                 // Name, Vertex label
  mpz_class num = 0, den = 1;       // Number
  unsigned long exponent = 0;       // Pow
  std::vector<ArrowLiteral> arrows; // PathLiteral, last arrow first
};

/// Grammar:
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := name | int | int '/' int | '(' expr ')' | 'v(' label ')'
///           | '[' 'e(' label ';' uint ';' label ')' (',' ...)* ']'
/// Juxtaposition is not multiplication.
ExprPtr parse_expr(const std::string& text);

enum class Ambient { Quiver, Smash };

/// Names resolve to generators, then group labels, then `g` (the distinguished
/// element), then parameters.
PathVector eval_quiver(const Expr& e, const SpecFile& spec);
SmashElement eval_smash(const Expr& e, const SpecFile& spec, const SmashAlgebra& algebra);

/// Expressions of a relator file: one per line, `#` starts a comment.
std::vector<std::string> read_expression_lines(const std::string& text);

} // namespace hqa

#endif
