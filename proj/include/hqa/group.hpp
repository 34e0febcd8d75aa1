#ifndef HQA_GROUP_HPP
#define HQA_GROUP_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqa {

/// Index of a group element; 0 is always the identity.
using Element = std::uint32_t;

class GroupError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One failed group axiom found by validate_group.
struct GroupViolation {
  enum class Kind { Shape, Range, Identity, Inverse, Associativity };
  Kind kind;
  Element x = 0, y = 0, z = 0;
  std::string describe() const;
};

/// Scans a Cayley table (row x, column y holds xy) for every violated axiom.
/// Index 0 must be a two-sided identity.
std::vector<GroupViolation> validate_group(const std::vector<std::vector<Element>>& table);

/// Finite group stored as a Cayley table.
class FiniteGroup {
public:
  /// Validates the table and throws GroupError listing the first violations.
  FiniteGroup(std::vector<std::string> labels, const std::vector<std::vector<Element>>& table);

  std::size_t order() const { return labels_.size(); }
  Element identity() const { return 0; }
  Element mul(Element x, Element y) const { return table_[x * order() + y]; }
  Element inv(Element x) const { return inverse_[x]; }
  /// x^k for any integer k.
  Element pow(Element x, long long k) const;
  const std::string& label(Element x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(const std::string& label) const;
  bool commute(Element x, Element y) const { return mul(x, y) == mul(y, x); }
  /// Smallest k > 0 with x^k = 1.
  std::size_t element_order(Element x) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

/// Z/nZ with element i standing for g^i; labels are "1", "g", "g^2", ...
FiniteGroup make_cyclic(std::size_t n);

struct Factorization {
  Element center;   // l' in Z(g)
  std::size_t coset; // index into coset_reps
  Element rep;      // k' = coset_reps[coset]
};

/// Centralizer of a distinguished element together with the right cosets
/// Z(g)\G and the factorization x = l'k'.
class CentralizerData {
public:
  CentralizerData(const FiniteGroup& group, Element g);

  Element distinguished() const { return g_; }
  const std::vector<Element>& members() const { return members_; }
  bool contains(Element x) const { return in_center_[x]; }
  /// Least element index of each right coset, in increasing order.
  const std::vector<Element>& coset_reps() const { return reps_; }
  std::size_t num_cosets() const { return reps_.size(); }
  const Factorization& factorize(Element x) const { return factor_.at(x); }
  /// k^{-1} g k for the representative k of coset c.
  Element conjugate(std::size_t c) const { return conj_.at(c); }

private:
  Element g_;
  std::vector<Element> members_;
  std::vector<bool> in_center_;
  std::vector<Element> reps_;
  std::vector<Factorization> factor_;
  std::vector<Element> conj_;
};

inline CentralizerData centralizer(const FiniteGroup& group, Element g) {
  return CentralizerData(group, g);
}

} // namespace hqa

#endif
