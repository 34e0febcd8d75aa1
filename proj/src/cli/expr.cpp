#include "hqa/expr.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace hqa {

ParseError::ParseError(const std::string& message, std::size_t column)
    : std::runtime_error("column " + std::to_string(column) + ": " + message), column_(column) {}

namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : s_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ < s_.size())
      error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void error(const std::string& message) const { throw ParseError(message, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      error(pos_ < s_.size() ? "expected '" + std::string(1, c) + "' but found '" + s_[pos_] + "'"
                             : "expected '" + std::string(1, c) + "' at end of input");
  }

  static ExprPtr node(Expr::Kind kind, std::size_t column, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->column = column;
    e->args = std::move(args);
    return e;
  }

  ExprPtr expr() {
    skip();
    const std::size_t start = pos_ + 1;
    ExprPtr left;
    if (accept('-'))
      left = node(Expr::Kind::Neg, start, {term()});
    else
      left = term();
    while (true) {
      skip();
      const std::size_t col = pos_ + 1;
      if (accept('+'))
        left = node(Expr::Kind::Add, col, {left, term()});
      else if (accept('-'))
        left = node(Expr::Kind::Sub, col, {left, term()});
      else
        return left;
    }
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (true) {
      skip();
      const std::size_t col = pos_ + 1;
      if (!accept('*'))
        return left;
      left = node(Expr::Kind::Mul, col, {left, factor()});
    }
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    skip();
    const std::size_t col = pos_ + 1;
    if (!accept('^'))
      return base;
    skip();
    const std::string digits = read_digits();
    if (digits.empty())
      error("expected a nonnegative integer exponent");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->column = col;
    e->args = {base};
    try {
      e->exponent = std::stoul(digits);
    } catch (const std::out_of_range&) {
      error("exponent too large");
    }
    if (e->exponent > 4096)
      error("exponent too large");
    return e;
  }

  std::string read_digits() {
    const std::size_t begin = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return s_.substr(begin, pos_ - begin);
  }

  std::string read_name() {
    const std::size_t begin = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(begin, pos_ - begin);
  }

  /// Raw label text up to one of the terminators.
  std::string read_label(const std::string& terminators) {
    skip();
    const std::size_t begin = pos_;
    while (pos_ < s_.size() && terminators.find(s_[pos_]) == std::string::npos)
      ++pos_;
    std::string label = s_.substr(begin, pos_ - begin);
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back())))
      label.pop_back();
    if (label.empty())
      error("expected an element label");
    return label;
  }

  bool peek_call(const std::string& name) {
    std::size_t p = pos_;
    if (s_.compare(p, name.size(), name) != 0)
      return false;
    p += name.size();
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p])))
      ++p;
    return p < s_.size() && s_[p] == '(';
  }

  ArrowLiteral arrow() {
    skip();
    if (!peek_call("e"))
      error("expected an arrow e(target;index;source)");
    ++pos_;
    expect('(');
    ArrowLiteral a;
    a.target = read_label(";)");
    expect(';');
    skip();
    const std::string digits = read_digits();
    if (digits.empty() || std::stoul(digits) == 0)
      error("expected a positive basis index");
    a.index = std::stoul(digits);
    expect(';');
    a.source = read_label(";)");
    expect(')');
    return a;
  }

  ExprPtr atom() {
    skip();
    const std::size_t col = pos_ + 1;
    if (pos_ >= s_.size())
      error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::PathLiteral;
      e->column = col;
      e->arrows.push_back(arrow());
      while (accept(','))
        e->arrows.push_back(arrow());
      expect(']');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->column = col;
      e->num = mpz_class(read_digits());
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        const std::string d = read_digits();
        if (d.empty())
          error("expected a denominator");
        e->den = mpz_class(d);
      }
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      if (peek_call("v")) {
        ++pos_;
        expect('(');
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Vertex;
        e->column = col;
        e->name = read_label(")");
        expect(')');
        return e;
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Name;
      e->column = col;
      e->name = read_name();
      skip();
      if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' ||
                               s_[pos_] == '['))
        error("juxtaposition is not multiplication; use '*'");
      return e;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string where(const Expr& e) { return " (column " + std::to_string(e.column) + ")"; }

Element lookup_element(const SpecFile& spec, const std::string& label, const Expr& e) {
  if (auto x = spec.group().find(label))
    return *x;
  throw EvalError("unknown element label '" + label + "'" + where(e));
}

/// Evaluates with a value type T supplied by the ambient.
template <class T>
T evaluate(const Expr& e, const SpecFile& spec, const std::function<T(const Scalar&)>& scalar,
           const std::function<std::optional<T>(const std::string&)>& name,
           const std::function<T(const T&, const T&)>& mul, const std::function<T(const Expr&)>& literal) {
  auto rec = [&](const Expr& x) { return evaluate<T>(x, spec, scalar, name, mul, literal); };
  switch (e.kind) {
  case Expr::Kind::Add:
    return rec(*e.args[0]) + rec(*e.args[1]);
  case Expr::Kind::Sub:
    return rec(*e.args[0]) - rec(*e.args[1]);
  case Expr::Kind::Neg:
    return rec(*e.args[0]) * (-spec.field.one());
  case Expr::Kind::Mul:
    return mul(rec(*e.args[0]), rec(*e.args[1]));
  case Expr::Kind::Pow: {
    const T base = rec(*e.args[0]);
    T out = scalar(spec.field.one());
    for (unsigned long i = 0; i < e.exponent; ++i)
      out = mul(out, base);
    return out;
  }
  case Expr::Kind::Number:
    try {
      return scalar(spec.field.fraction(e.num, e.den));
    } catch (const FieldError& err) {
      throw FieldError(std::string(err.what()) + where(e));
    }
  case Expr::Kind::Name: {
    if (auto v = name(e.name))
      return *v;
    if (auto it = spec.parameters.find(e.name); it != spec.parameters.end())
      return scalar(it->second);
    if (e.name == "lambda" || e.name == "mu" || e.name == "nu")
      throw EvalError("parameter '" + e.name + "' has no value; set it in the spec or on the command line" +
                      where(e));
    throw EvalError("unknown name '" + e.name + "'" + where(e));
  }
  case Expr::Kind::Vertex:
  case Expr::Kind::PathLiteral:
    return literal(e);
  }
  throw EvalError("unsupported expression");
}

} // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

PathVector eval_quiver(const Expr& e, const SpecFile& spec) {
  const QuiverPtr& q = spec.quiver;
  const FiniteGroup& G = spec.group();
  std::function<PathVector(const Scalar&)> scalar = [&](const Scalar& c) { return PathVector::scalar(q, c); };
  std::function<std::optional<PathVector>(const std::string&)> name =
      [&](const std::string& n) -> std::optional<PathVector> {
    if (auto i = spec.generators.find(n))
      return spec.generators.value(*i);
    if (auto h = G.find(n))
      return PathVector::vertex(q, *h);
    if (n == "g")
      return PathVector::vertex(q, spec.distinguished);
    return std::nullopt;
  };
  std::function<PathVector(const PathVector&, const PathVector&)> mul =
      [](const PathVector& x, const PathVector& y) { return x * y; };
  std::function<PathVector(const Expr&)> literal = [&](const Expr& x) {
    if (x.kind == Expr::Kind::Vertex)
      return PathVector::vertex(q, lookup_element(spec, x.name, x));
    // Arrows are listed last first; rebuild the traversal from the bottom.
    Path p;
    for (std::size_t k = x.arrows.size(); k-- > 0;) {
      const ArrowLiteral& a = x.arrows[k];
      const Element source = lookup_element(spec, a.source, x);
      const Element target = lookup_element(spec, a.target, x);
      if (k + 1 == x.arrows.size())
        p.source = source;
      else if (source != path_target(*q, p))
        throw EvalError("arrows in the path literal are not composable" + where(x));
      if (a.index > q->module().dim())
        throw EvalError("basis index " + std::to_string(a.index) + " exceeds the module dimension" + where(x));
      std::optional<ArrowLabel> label;
      for (std::uint32_t c = 0; c < q->cdata().num_cosets(); ++c) {
        const ArrowLabel l = q->label(c, std::uint32_t(a.index - 1));
        if (q->target(source, l) == target)
          label = l;
      }
      if (!label)
        throw EvalError("no arrow from " + a.source + " to " + a.target + where(x));
      p.labels.push_back(*label);
    }
    return PathVector::path(q, p, spec.field.one());
  };
  return evaluate<PathVector>(e, spec, scalar, name, mul, literal);
}

SmashElement eval_smash(const Expr& e, const SpecFile& spec, const SmashAlgebra& algebra) {
  const FiniteGroup& G = spec.group();
  std::function<SmashElement(const Scalar&)> scalar = [&](const Scalar& c) { return algebra.scalar(c); };
  std::function<std::optional<SmashElement>(const std::string&)> name =
      [&](const std::string& n) -> std::optional<SmashElement> {
    const auto& letters = algebra.letter_names();
    for (std::size_t i = 0; i < letters.size(); ++i)
      if (letters[i] == n)
        return algebra.letter(i);
    if (auto h = G.find(n))
      return algebra.group_element(*h);
    if (n == "g")
      return algebra.group_element(spec.distinguished);
    return std::nullopt;
  };
  std::function<SmashElement(const SmashElement&, const SmashElement&)> mul =
      [&](const SmashElement& x, const SmashElement& y) { return algebra.multiply(x, y); };
  std::function<SmashElement(const Expr&)> literal = [](const Expr& x) -> SmashElement {
    throw EvalError("path literals are only available in the quiver ambient" + where(x));
  };
  return evaluate<SmashElement>(e, spec, scalar, name, mul, literal);
}

std::vector<std::string> read_expression_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

} // namespace hqa
