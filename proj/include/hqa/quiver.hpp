#ifndef HQA_QUIVER_HPP
#define HQA_QUIVER_HPP

#include "hqa/group.hpp"
#include "hqa/linalg.hpp"

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace hqa {

class ModuleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Action of one centralizer generator: m_i . z = sum_j action(i,j) m_j.
struct ModuleGenerator {
  Element element;
  Matrix action;
};

/// Whether the module closure verifies that the action is a homomorphism.
/// Unchecked closure keeps the first matrix reached for each element; it is
/// only meaningful for computations that never wrap around the group.
enum class Closure { Checked, Unchecked };

/// Right kZ(g)-module M, given on generators and closed over Z(g).
class YDModule {
public:
  YDModule(const FiniteGroup& group, const CentralizerData& cdata, Field field,
           std::vector<std::string> basis_names, const std::vector<ModuleGenerator>& generators,
           Closure closure = Closure::Checked);

  const Field& field() const { return field_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  /// Action matrix of a centralizer element (row convention).
  const Matrix& action(Element z) const;

private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<std::optional<Matrix>> actions_; // indexed by group element
};

/// Arrow h -> h k^{-1} g k labelled by (coset of k, basis vector m_i).
struct Arrow {
  Element source;
  std::uint32_t coset;
  std::uint32_t basis;
  auto operator<=>(const Arrow&) const = default;
};

/// coset * dim(M) + basis; together with a source it determines an arrow.
using ArrowLabel = std::uint32_t;

struct LabelTerm {
  ArrowLabel label;
  Scalar coeff;
};

/// The Hopf quiver Q(G, g, M) with its kG-bimodule structure on arrows.
class HopfQuiver {
public:
  HopfQuiver(FiniteGroup group, Element g, YDModule module);

  const FiniteGroup& group() const { return group_; }
  const CentralizerData& cdata() const { return cdata_; }
  const YDModule& module() const { return module_; }
  const Field& field() const { return module_.field(); }

  std::size_t num_labels() const { return cdata_.num_cosets() * module_.dim(); }
  ArrowLabel label(std::uint32_t coset, std::uint32_t basis) const {
    return ArrowLabel(coset * module_.dim() + basis);
  }
  std::uint32_t coset_of(ArrowLabel l) const { return std::uint32_t(l / module_.dim()); }
  std::uint32_t basis_of(ArrowLabel l) const { return std::uint32_t(l % module_.dim()); }
  Arrow arrow(Element source, ArrowLabel l) const { return {source, coset_of(l), basis_of(l)}; }
  ArrowLabel label_of(const Arrow& a) const { return label(a.coset, a.basis); }

  /// Target of the arrow with this label leaving `source`.
  Element target(Element source, ArrowLabel l) const {
    return group_.mul(source, cdata_.conjugate(coset_of(l)));
  }
  Element target(const Arrow& a) const { return target(a.source, label_of(a)); }

  /// All arrows, ordered by (source, coset, basis).
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::vector<Arrow> out_arrows(Element h) const;
  std::vector<Arrow> in_arrows(Element h) const;

  /// l . a, a single arrow with coefficient 1.
  Arrow act_left(Element l, const Arrow& a) const;
  /// a . l expanded over parallel arrows leaving source(a) l.
  std::vector<std::pair<Arrow, Scalar>> act_right(const Arrow& a, Element l) const;
  /// Label part of the right action; independent of the source vertex.
  const std::vector<LabelTerm>& right_action(ArrowLabel l, Element v) const {
    return right_table_[std::size_t(l) * group_.order() + v];
  }

  /// `e(h';i;h)` with the 1-based basis index i.
  std::string render_arrow(const Arrow& a) const;

private:
  FiniteGroup group_;
  CentralizerData cdata_;
  YDModule module_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<LabelTerm>> right_table_;
};

using QuiverPtr = std::shared_ptr<const HopfQuiver>;

QuiverPtr build_quiver(FiniteGroup group, Element g, YDModule module);

/// The two-dimensional module v1.g = v1, v2.g = v1 + v2 of the cyclic group
/// of order n, with arrows a = 1 (x) v1 and b = 1 (x) v2.
QuiverPtr make_jordan_quiver(Field field, std::size_t n, Closure closure = Closure::Checked);

} // namespace hqa

#endif
