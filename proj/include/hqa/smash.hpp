#ifndef HQA_SMASH_HPP
#define HQA_SMASH_HPP

#include "hqa/freealg.hpp"
#include "hqa/group.hpp"
#include "hqa/nichols.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hqa {

class SmashError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A product would exceed the truncation degree.
class TruncationError : public SmashError {
public:
  using SmashError::SmashError;
};

/// Basis element h w of T(V)#kG: group part on the left, then a word.
struct SmashMonomial {
  Element group = 0;
  Word word;

  /// Word length, then word, then group element.
  friend bool operator<(const SmashMonomial& a, const SmashMonomial& b) {
    if (a.word.size() != b.word.size())
      return a.word.size() < b.word.size();
    if (a.word != b.word)
      return a.word < b.word;
    return a.group < b.group;
  }
  friend bool operator==(const SmashMonomial& a, const SmashMonomial& b) {
    return a.group == b.group && a.word == b.word;
  }
};

class SmashElement {
public:
  using Terms = std::map<SmashMonomial, Scalar>;

  explicit SmashElement(Field field) : field_(field) {}

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const SmashMonomial& m, const Scalar& c);
  /// Longest word present (0 for zero).
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.word.size(); }

  SmashElement& operator+=(const SmashElement& o);
  SmashElement& operator-=(const SmashElement& o);
  SmashElement& operator*=(const Scalar& c);
  SmashElement operator-() const { return SmashElement(*this) *= -field_.one(); }
  friend SmashElement operator+(SmashElement a, const SmashElement& b) { return a += b; }
  friend SmashElement operator-(SmashElement a, const SmashElement& b) { return a -= b; }
  friend SmashElement operator*(SmashElement a, const Scalar& c) { return a *= c; }
  friend SmashElement operator*(const Scalar& c, SmashElement a) { return a *= c; }
  friend bool operator==(const SmashElement& a, const SmashElement& b) { return a.terms_ == b.terms_; }

private:
  Field field_;
  Terms terms_;
};

/// Element of H (x) H.
class SmashTensor {
public:
  using Key = std::pair<SmashMonomial, SmashMonomial>;
  using Terms = std::map<Key, Scalar>;

  explicit SmashTensor(Field field) : field_(field) {}
  static SmashTensor pure(const SmashElement& x, const SmashElement& y);

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const SmashMonomial& l, const SmashMonomial& r, const Scalar& c);

  SmashTensor& operator+=(const SmashTensor& o);
  SmashTensor& operator-=(const SmashTensor& o);
  friend SmashTensor operator+(SmashTensor a, const SmashTensor& b) { return a += b; }
  friend SmashTensor operator-(SmashTensor a, const SmashTensor& b) { return a -= b; }
  friend bool operator==(const SmashTensor& a, const SmashTensor& b) { return a.terms_ == b.terms_; }

private:
  Field field_;
  Terms terms_;
};

/// T(V)#kG truncated at word length D. V has basis letters v_1..v_m, each
/// homogeneous of group degree deg(v_i), with right G-action
/// v_i . h = sum_j action(h)(i, j) v_j; then (g (x) a)(h (x) b) = gh (x) (a.h) b,
/// Delta(v) = v (x) 1 + deg(v) (x) v and S(v) = -deg(v)^{-1} v.
class SmashAlgebra {
public:
  SmashAlgebra(FiniteGroup group, Field field, std::vector<std::string> letter_names,
               std::vector<Element> letter_degrees, std::vector<Matrix> actions, std::size_t max_degree);

  /// V spanned by the generators inside kQ; h acts by x -> h^{-1} x h.
  static SmashAlgebra from_generators(const GeneratorSet& gens, std::size_t max_degree);
  /// Cyclic group of order n acting on letters a, b by a.g^i = a, b.g^i = i a + b.
  static SmashAlgebra jordan(Field field, std::size_t n, std::size_t max_degree);

  SmashAlgebra with_max_degree(std::size_t max_degree) const;

  const FiniteGroup& group() const { return group_; }
  const Field& field() const { return field_; }
  std::size_t num_letters() const { return names_.size(); }
  const std::vector<std::string>& letter_names() const { return names_; }
  Element letter_degree(std::size_t i) const { return degrees_.at(i); }
  const Matrix& action(Element h) const { return actions_.at(h); }
  std::size_t max_degree() const { return max_degree_; }
  /// dim of the span of all h w with |w| <= d.
  std::size_t dim_up_to(std::size_t d) const;

  SmashElement one() const { return group_element(group_.identity()); }
  SmashElement scalar(const Scalar& c) const;
  SmashElement group_element(Element h) const;
  SmashElement letter(std::size_t i) const;
  SmashElement monomial(Element h, Word w, const Scalar& c) const;
  /// f placed in the group-identity component.
  SmashElement from_free(const FreePoly& f) const;
  /// The word w acted on letterwise by h.
  FreePoly act(const Word& w, Element h) const;
  FreePoly act(const FreePoly& f, Element h) const;

  SmashElement multiply(const SmashElement& x, const SmashElement& y) const;
  SmashElement power(const SmashElement& x, std::size_t k) const;
  SmashTensor multiply(const SmashTensor& x, const SmashTensor& y) const;
  SmashTensor comultiply(const SmashElement& x) const;
  SmashElement antipode(const SmashElement& x) const;
  Scalar counit(const SmashElement& x) const;
  /// m(x (x) y) summed over a tensor.
  SmashElement contract(const SmashTensor& t) const;

  /// `g^2*a*b`; the identity group part is omitted unless the word is empty.
  std::string render(const SmashMonomial& m) const;
  std::string to_string(const SmashElement& x) const;
  std::string to_string(const SmashTensor& t) const;

private:
  void check_degree(std::size_t d) const;
  std::vector<std::pair<SmashMonomial, Scalar>> multiply_monomials(const SmashMonomial& x,
                                                                   const SmashMonomial& y) const;

  FiniteGroup group_;
  Field field_;
  std::vector<std::string> names_;
  std::vector<Element> degrees_;
  std::vector<Matrix> actions_;
  std::size_t max_degree_;
};

enum class IdealStrategy {
  Auto,     // Graded when every relator is h times a homogeneous element of T(V)
  Graded,   // kG (x) J with J the graded ideal of T(V) generated by all conjugates
  Filtered, // span closure under multiplication by letters and group elements
};

/// Two-sided ideal of a truncated smash algebra, with normal forms relative
/// to the largest-monomial pivots (the same for both strategies).
class IdealSpan {
public:
  IdealSpan(const SmashAlgebra& algebra, std::vector<SmashElement> relators,
            IdealStrategy strategy = IdealStrategy::Auto);

  IdealStrategy strategy() const { return strategy_; }
  const SmashAlgebra& algebra() const { return algebra_; }
  const std::vector<SmashElement>& relators() const { return relators_; }

  SmashElement normal_form(const SmashElement& x) const;
  /// (NF (x) NF)(t); zero exactly when t lies in I (x) H + H (x) I.
  SmashTensor normal_form(const SmashTensor& t) const;
  bool contains(const SmashElement& x) const { return normal_form(x).is_zero(); }

  /// dim of the ideal inside the span of monomials with words of length <= d.
  std::size_t dim_up_to(std::size_t d) const;
  std::size_t quotient_dim() const {
    return algebra_.dim_up_to(algebra_.max_degree()) - dim_up_to(algebra_.max_degree());
  }
  /// Elements spanning the ideal as a two-sided ideal (graded) or as a vector space (filtered).
  std::vector<SmashElement> spanning_set() const;

private:
  SmashAlgebra algebra_;
  std::vector<SmashElement> relators_;
  IdealStrategy strategy_;
  // Graded
  std::vector<SmashElement> conjugates_;
  std::optional<GradedIdeal> graded_;
  // Filtered
  SparseEchelon<SmashMonomial> echelon_;
};

struct RelatorCheck {
  std::string relator;
  bool counit_ok = true;
  bool coproduct_ok = true;
  std::optional<bool> antipode_ok;
  std::string witness; // first surviving term on failure
};

struct HopfIdealReport {
  std::vector<RelatorCheck> relators;
  std::size_t quotient_dim = 0;
  std::size_t antipode_checked = 0;
  std::optional<bool> spanning_antipode_ok; // S of every spanning element lies in I
  std::string antipode_witness;
  IdealStrategy strategy = IdealStrategy::Auto;
  bool pass() const;
};

struct HopfIdealOptions {
  bool with_antipode = false;
  IdealStrategy strategy = IdealStrategy::Auto;
};

/// Checks eps(r) = 0 and Delta(r) in I (x) H + H (x) I for each relator,
/// optionally S(I) in I; throws TruncationError when a relator exceeds D.
HopfIdealReport check_hopf_ideal(const SmashAlgebra& algebra, const std::vector<SmashElement>& relators,
                                 HopfIdealOptions options = {});

/// a^p - lambda(1 - g^p), b^p - mu(1 - g^p), ba - ab - 1/2 a^2 on letters a, b.
std::vector<SmashElement> charp_lifting_relators(const SmashAlgebra& algebra, const Scalar& lambda,
                                                 const Scalar& mu);
/// The characteristic-2 family on letters c = a + b, d = b.
std::vector<SmashElement> char2_lifting_relators(const SmashAlgebra& algebra, const Scalar& lambda,
                                                 const Scalar& mu, const Scalar& nu);

struct IdentityCheck {
  std::string name; // "b*a", "b*g", "b*g^-1", "Delta(b)", "S(b)"
  long r = 0, l = 0;
  bool pass = false;
  std::string residual; // normal form of lhs - rhs when nonzero
};

struct IdentityBankReport {
  std::vector<IdentityCheck> checks;
  bool pass() const;
};

/// Commutation, coproduct and antipode formulas for powers of b in
/// (T(V)#kG)/<ba - ab - 1/2 a^2>, p odd and p | n, for 1 <= r <= r_max, 1 <= l <= l_max.
IdentityBankReport verify_identity_bank(std::uint32_t p, std::size_t n, long r_max, long l_max);

/// sum c h w -> sum c vertex(h) w(generators) in kQ.
PathVector evaluate_in_quiver(const SmashElement& x, const GeneratorSet& gens);

} // namespace hqa

#endif
