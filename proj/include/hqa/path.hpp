#ifndef HQA_PATH_HPP
#define HQA_PATH_HPP

#include "hqa/quiver.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hqa {

/// A path a_n ... a_1 stored as its source vertex and the labels of
/// a_1, ..., a_n in traversal order. Length-0 paths are vertices.
struct Path {
  Element source = 0;
  std::vector<ArrowLabel> labels;

  std::size_t length() const { return labels.size(); }

  /// Canonical term order: length, then source, then labels.
  friend bool operator<(const Path& a, const Path& b) {
    if (a.labels.size() != b.labels.size())
      return a.labels.size() < b.labels.size();
    if (a.source != b.source)
      return a.source < b.source;
    return a.labels < b.labels;
  }
  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.labels == b.labels;
  }
};

/// Vertices s(a_1), t(a_1), ..., t(a_n) along the path.
std::vector<Element> path_vertices(const HopfQuiver& q, const Path& p);
Element path_target(const HopfQuiver& q, const Path& p);
std::string render_path(const HopfQuiver& q, const Path& p);

class QuiverMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Element of kQ: a finite linear combination of paths.
class PathVector {
public:
  using Terms = std::map<Path, Scalar>;

  explicit PathVector(QuiverPtr quiver) : quiver_(std::move(quiver)) {}

  static PathVector vertex(const QuiverPtr& q, Element h);
  static PathVector path(const QuiverPtr& q, Path p, const Scalar& coeff);
  static PathVector arrow(const QuiverPtr& q, const Arrow& a);
  static PathVector scalar(const QuiverPtr& q, const Scalar& c);

  const QuiverPtr& quiver() const { return quiver_; }
  const Field& field() const { return quiver_->field(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Path& p) const;

  void add_term(const Path& p, const Scalar& c);

  /// Largest path length present (0 for the zero vector).
  std::size_t max_degree() const;
  std::optional<std::size_t> degree() const;
  PathVector component(std::size_t degree) const;

  PathVector& operator+=(const PathVector& o);
  PathVector& operator-=(const PathVector& o);
  PathVector& operator*=(const Scalar& c);
  PathVector operator-() const;
  friend PathVector operator+(PathVector a, const PathVector& b) { return a += b; }
  friend PathVector operator-(PathVector a, const PathVector& b) { return a -= b; }
  friend PathVector operator*(PathVector a, const Scalar& c) { return a *= c; }
  friend PathVector operator*(const Scalar& c, PathVector a) { return a *= c; }
  /// Hopf quiver product (see multiply()).
  friend PathVector operator*(const PathVector& a, const PathVector& b);
  friend bool operator==(const PathVector& a, const PathVector& b) {
    return a.quiver_ == b.quiver_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const PathVector& a, const PathVector& b) { return !(a == b); }

  /// `c*[e(h';i;h), ...] + v(h)`; "0" for the zero vector.
  std::string to_string() const;

private:
  QuiverPtr quiver_;
  Terms terms_;
};

/// Element of kQ (x) kQ.
class TensorVector {
public:
  using Key = std::pair<Path, Path>;
  using Terms = std::map<Key, Scalar>;

  explicit TensorVector(QuiverPtr quiver) : quiver_(std::move(quiver)) {}

  static TensorVector pure(const PathVector& x, const PathVector& y);

  const QuiverPtr& quiver() const { return quiver_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Path& left, const Path& right, const Scalar& c);

  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  /// Componentwise product (x1 (x) x2)(y1 (x) y2) = x1y1 (x) x2y2.
  friend TensorVector operator*(const TensorVector& a, const TensorVector& b);
  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.quiver_ == b.quiver_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

private:
  QuiverPtr quiver_;
  Terms terms_;
};

/// One p-thin split: slot i (0-based, bottom first) holds a vertex or an arrow.
struct ThinSplit {
  using Slot = std::variant<Element, Arrow>;
  std::vector<std::uint32_t> positions; // 1-based arrow positions, increasing
  std::vector<Slot> slots;
};

/// The width-p thin split of `path` placing its arrows at `positions` (1-based).
ThinSplit thin_split_at(const HopfQuiver& q, const Path& path, std::vector<std::uint32_t> positions,
                        std::size_t width);

/// All C(p, n) p-thin splits of a length-n path, positions in lexicographic order.
std::vector<ThinSplit> thin_splits(const HopfQuiver& q, const Path& path, std::size_t p);

/// Product in the Hopf quiver algebra. Each pair of basis paths is expanded
/// by a dynamic program over interleavings; pairs run in parallel.
PathVector multiply(const PathVector& x, const PathVector& y);

/// Serial product that enumerates complementary thin splits and concatenates
/// the positionwise bimodule products literally. Kept as a test oracle.
PathVector multiply_reference(const PathVector& x, const PathVector& y);

TensorVector comultiply(const PathVector& x);
Scalar counit(const PathVector& x);
/// Antipode by recursion on path length.
PathVector antipode(const PathVector& x);

/// m(x (x) y) = xy summed over the tensor.
PathVector contract(const TensorVector& t);

} // namespace hqa

#endif
