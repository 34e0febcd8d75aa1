#ifndef HQA_NICHOLS_HPP
#define HQA_NICHOLS_HPP

#include "hqa/freealg.hpp"
#include "hqa/path.hpp"

#include <string>
#include <vector>

namespace hqa {

class NicholsError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Named degree-one elements of kQ sourced at the identity vertex.
class GeneratorSet {
public:
  explicit GeneratorSet(QuiverPtr quiver) : quiver_(std::move(quiver)) {}

  /// One generator per arrow leaving the identity, in label order.
  static GeneratorSet arrows(const QuiverPtr& quiver, const std::vector<std::string>& names);

  /// Throws NicholsError unless `value` is a nonzero combination of arrows
  /// leaving the identity with a common target and `name` is a fresh identifier.
  void add(const std::string& name, PathVector value);

  const QuiverPtr& quiver() const { return quiver_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<PathVector>& values() const { return values_; }
  const PathVector& value(std::size_t i) const { return values_.at(i); }
  /// Target vertex of generator i; its coproduct is x (x) 1 + target (x) x.
  Element degree(std::size_t i) const { return degrees_.at(i); }
  std::optional<std::size_t> find(const std::string& name) const;

  /// Product of the generators along the word (the identity vertex for the empty word).
  PathVector evaluate(const Word& w) const;
  PathVector evaluate(const FreePoly& f) const;

private:
  QuiverPtr quiver_;
  std::vector<std::string> names_;
  std::vector<PathVector> values_;
  std::vector<Element> degrees_;
};

struct BasisEntry {
  Element vertex = 0; // left factor vertex(h); the identity for Nichols bases
  Word word;
  PathVector value;   // exact product vertex(h) * word
};

/// Per-degree bases; each degree's values are linearly independent.
struct GradedBasis {
  std::vector<std::vector<BasisEntry>> degrees;

  std::vector<std::size_t> dims() const;
  std::size_t total() const;
};

/// Upper bound on path terms in a single basis value before generation aborts.
inline constexpr std::size_t kMaxTermsPerValue = 1u << 22;
inline constexpr std::size_t kMaxGenerationDegree = 64;

/// Nichols algebra B(V) degree by degree: degree-d candidates are the
/// degree-(d-1) basis times each generator, kept when independent of the
/// earlier candidates. Words come out as deglex-least normal words.
GradedBasis generate(const GeneratorSet& gens, std::size_t max_degree);

/// vertex(h) * w for every h in G and every Nichols basis word w.
GradedBasis biproduct_basis(const GeneratorSet& gens, std::size_t max_degree);

struct RelationDegree {
  std::size_t degree = 0;
  std::size_t kernel_dim = 0; // dim ker(T_d -> kQ)
  std::size_t ideal_dim = 0;  // dim of the ideal generated by lower relations, in degree d
  std::vector<FreePoly> relations;
};

struct RelationReport {
  std::vector<std::string> names;
  std::vector<RelationDegree> degrees; // degrees 1..max_degree
  std::vector<FreePoly> all() const;
};

/// Relations of B(V) found degree by degree: a reduced basis of the kernel of
/// evaluation modulo the ideal generated by all lower-degree relations.
/// Each relation is monic at its deglex-largest word.
RelationReport find_relations(const GeneratorSet& gens, std::size_t max_degree);

struct SkewPrimitiveSpace {
  std::size_t degree = 0;
  Element u = 0, v = 0;               // Delta(x) = x (x) u + v (x) x
  std::vector<PathVector> solutions;   // reduced basis of the solution space
  std::vector<SparseVec<std::size_t>> coordinates; // over the biproduct basis of that degree
};

struct SkewScanOptions {
  bool include_degree_zero = false;
};

struct SkewPrimitiveReport {
  GradedBasis basis;
  std::vector<SkewPrimitiveSpace> spaces; // ordered by degree, then (u, v)
  std::vector<const SkewPrimitiveSpace*> in_degree(std::size_t d) const;
};

/// Solves Delta(x) - x (x) u - v (x) x = 0 over each biproduct component for all (u, v).
SkewPrimitiveReport scan_skew_primitives(const GeneratorSet& gens, std::size_t max_degree,
                                         SkewScanOptions options = {});

} // namespace hqa

#endif
