#ifndef HQA_FREEALG_HPP
#define HQA_FREEALG_HPP

#include "hqa/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hqa {

/// Word over letters 0..m-1 (the generator order).
using Word = std::vector<std::uint16_t>;

/// Degree-lexicographic order: shorter words first, then lexicographic.
struct Deglex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

/// "1" for the empty word; runs collapse to powers: b^2*a.
std::string render_word(const Word& w, const std::vector<std::string>& names);

/// All words of length d over m letters, in deglex order.
std::vector<Word> words_of_length(std::size_t m, std::size_t d);

/// Noncommutative polynomial in k<x_1..x_m>.
class FreePoly {
public:
  using Terms = std::map<Word, Scalar, Deglex>;

  explicit FreePoly(Field field) : field_(field) {}
  static FreePoly monomial(Field field, Word w, const Scalar& c);
  static FreePoly monomial(Field field, Word w) { return monomial(field, std::move(w), field.one()); }

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, const Scalar& c);

  /// Highest word degree present (0 for zero).
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }
  bool is_homogeneous() const;
  FreePoly component(std::size_t degree) const;
  /// Largest word under deglex.
  const Word& leading_word() const { return terms_.rbegin()->first; }

  FreePoly& operator+=(const FreePoly& o);
  FreePoly& operator-=(const FreePoly& o);
  FreePoly& operator*=(const Scalar& c);
  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator*(FreePoly a, const Scalar& c) { return a *= c; }
  /// Concatenation product.
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
  friend bool operator==(const FreePoly& a, const FreePoly& b) { return a.terms_ == b.terms_; }

  /// Replaces letter i by images[i].
  FreePoly substitute(const std::vector<FreePoly>& images) const;

  std::string to_string(const std::vector<std::string>& names) const;

private:
  Field field_;
  Terms terms_;
};

class IdealError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two-sided ideal J of k<x_1..x_m> generated by homogeneous relators,
/// truncated at a maximum degree. Degree d of the quotient A = T/J is
/// computed as the cokernel of the relator rows inside A_{d-1} (x) V, using
///   J_d = J_{d-1} V + sum_r T_{d-deg r} r.
/// Pivots are the deglex-largest candidate words, so the standard words of
/// each degree are the deglex normal words.
class GradedIdeal {
public:
  GradedIdeal(Field field, std::size_t num_letters, std::vector<FreePoly> relators,
              std::size_t max_degree);

  const Field& field() const { return field_; }
  std::size_t num_letters() const { return m_; }
  std::size_t max_degree() const { return max_degree_; }
  const std::vector<FreePoly>& relators() const { return relators_; }

  /// Deglex-sorted standard words spanning A_d.
  const std::vector<Word>& standard_words(std::size_t d) const { return standard_.at(d); }
  std::size_t quotient_dim(std::size_t d) const { return standard_.at(d).size(); }
  /// dim J_d = m^d - dim A_d.
  std::size_t ideal_dim(std::size_t d) const;

  /// Coordinates of the image of a word of length <= max_degree in A_d.
  SparseVec<std::size_t> normal_form_coords(const Word& w) const;
  /// Unique representative supported on standard words.
  FreePoly normal_form(const FreePoly& f) const;
  bool contains(const FreePoly& f) const { return normal_form(f).is_zero(); }

private:
  Field field_;
  std::size_t m_;
  std::vector<FreePoly> relators_;
  std::size_t max_degree_;
  std::vector<std::vector<Word>> standard_;
  /// transition_[d][i * m + y] = image of standard_[d-1][i] * y in A_d.
  std::vector<std::vector<SparseVec<std::size_t>>> transition_;
};

} // namespace hqa

#endif
