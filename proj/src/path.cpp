#include "hqa/path.hpp"

#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hqa {

std::vector<Element> path_vertices(const HopfQuiver& q, const Path& p) {
  std::vector<Element> v{p.source};
  v.reserve(p.labels.size() + 1);
  for (ArrowLabel l : p.labels)
    v.push_back(q.target(v.back(), l));
  return v;
}

Element path_target(const HopfQuiver& q, const Path& p) {
  Element v = p.source;
  for (ArrowLabel l : p.labels)
    v = q.target(v, l);
  return v;
}

std::string render_path(const HopfQuiver& q, const Path& p) {
  if (p.labels.empty())
    return "v(" + q.group().label(p.source) + ")";
  const auto verts = path_vertices(q, p);
  std::string out = "[";
  for (std::size_t i = p.labels.size(); i-- > 0;) {
    out += q.render_arrow(q.arrow(verts[i], p.labels[i]));
    if (i > 0)
      out += ", ";
  }
  return out + "]";
}

namespace {

template <class Map>
void accumulate(Map& m, const typename Map::key_type& k, const Scalar& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      m.erase(it);
  }
}

void require_same(const QuiverPtr& a, const QuiverPtr& b) {
  if (a != b)
    throw QuiverMismatch("operands live in different quivers");
}

} // namespace

PathVector PathVector::vertex(const QuiverPtr& q, Element h) {
  return path(q, Path{h, {}}, q->field().one());
}

PathVector PathVector::path(const QuiverPtr& q, Path p, const Scalar& coeff) {
  PathVector v(q);
  v.add_term(p, coeff);
  return v;
}

PathVector PathVector::arrow(const QuiverPtr& q, const Arrow& a) {
  return path(q, Path{a.source, {q->label_of(a)}}, q->field().one());
}

PathVector PathVector::scalar(const QuiverPtr& q, const Scalar& c) {
  return path(q, Path{q->group().identity(), {}}, c);
}

Scalar PathVector::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? field().zero() : it->second;
}

void PathVector::add_term(const Path& p, const Scalar& c) {
  if (c.characteristic() != field().characteristic())
    throw FieldError("coefficient from another field");
  accumulate(terms_, p, c);
}

std::size_t PathVector::max_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

std::optional<std::size_t> PathVector::degree() const {
  if (terms_.empty())
    return std::nullopt;
  const std::size_t lo = terms_.begin()->first.length();
  if (lo != terms_.rbegin()->first.length())
    return std::nullopt;
  return lo;
}

PathVector PathVector::component(std::size_t degree) const {
  PathVector out(quiver_);
  for (const auto& [p, c] : terms_)
    if (p.length() == degree)
      out.terms_.emplace(p, c);
  return out;
}

PathVector& PathVector::operator+=(const PathVector& o) {
  require_same(quiver_, o.quiver_);
  for (const auto& [p, c] : o.terms_)
    accumulate(terms_, p, c);
  return *this;
}

PathVector& PathVector::operator-=(const PathVector& o) {
  require_same(quiver_, o.quiver_);
  for (const auto& [p, c] : o.terms_)
    accumulate(terms_, p, -c);
  return *this;
}

PathVector& PathVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_)
    v *= c;
  return *this;
}

PathVector PathVector::operator-() const {
  PathVector out = *this;
  for (auto& [p, v] : out.terms_)
    v = -v;
  return out;
}

PathVector operator*(const PathVector& a, const PathVector& b) { return multiply(a, b); }

std::string PathVector::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    out += coefficient_prefix(c, first) + render_path(*quiver_, p);
    first = false;
  }
  return out;
}

TensorVector TensorVector::pure(const PathVector& x, const PathVector& y) {
  require_same(x.quiver(), y.quiver());
  TensorVector t(x.quiver());
  for (const auto& [p, c] : x.terms())
    for (const auto& [q, d] : y.terms())
      t.add_term(p, q, c * d);
  return t;
}

void TensorVector::add_term(const Path& left, const Path& right, const Scalar& c) {
  accumulate(terms_, Key{left, right}, c);
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  require_same(quiver_, o.quiver_);
  for (const auto& [k, c] : o.terms_)
    accumulate(terms_, k, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  require_same(quiver_, o.quiver_);
  for (const auto& [k, c] : o.terms_)
    accumulate(terms_, k, -c);
  return *this;
}

TensorVector operator*(const TensorVector& a, const TensorVector& b) {
  require_same(a.quiver_, b.quiver_);
  const QuiverPtr& q = a.quiver_;
  TensorVector out(q);
  // Cache leg products: many tensor terms share legs.
  std::map<std::pair<Path, Path>, PathVector> cache;
  auto leg = [&](const Path& x, const Path& y) -> const PathVector& {
    auto key = std::make_pair(x, y);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, multiply(PathVector::path(q, x, q->field().one()),
                                       PathVector::path(q, y, q->field().one())))
               .first;
    return it->second;
  };
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      const PathVector& left = leg(ka.first, kb.first);
      if (left.is_zero())
        continue;
      const PathVector& right = leg(ka.second, kb.second);
      const Scalar c = ca * cb;
      for (const auto& [pl, cl] : left.terms())
        for (const auto& [pr, cr] : right.terms())
          out.add_term(pl, pr, c * cl * cr);
    }
  return out;
}

std::string TensorVector::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    out += coefficient_prefix(c, first) + render_path(*quiver_, k.first) + " ⊗ " +
           render_path(*quiver_, k.second);
    first = false;
  }
  return out;
}

ThinSplit thin_split_at(const HopfQuiver& q, const Path& path, std::vector<std::uint32_t> positions,
                        std::size_t width) {
  if (positions.size() != path.length())
    throw std::invalid_argument("thin split needs one position per arrow");
  if (!positions.empty() && positions.back() > width)
    throw std::invalid_argument("thin split position beyond its width");
  const auto verts = path_vertices(q, path);
  ThinSplit split;
  split.positions = std::move(positions);
  std::size_t placed = 0;
  for (std::uint32_t pos = 1; pos <= width; ++pos) {
    if (placed < split.positions.size() && split.positions[placed] == pos) {
      split.slots.emplace_back(q.arrow(verts[placed], path.labels[placed]));
      ++placed;
    } else {
      split.slots.emplace_back(verts[placed]);
    }
  }
  return split;
}

std::vector<ThinSplit> thin_splits(const HopfQuiver& q, const Path& path, std::size_t p) {
  const std::size_t n = path.length();
  if (p < n)
    throw std::invalid_argument("thin split width " + std::to_string(p) + " below path length " +
                                std::to_string(n));
  std::vector<ThinSplit> out;
  std::vector<std::uint32_t> pos(n);
  std::iota(pos.begin(), pos.end(), 1u);
  while (true) {
    out.push_back(thin_split_at(q, path, pos, p));
    // next n-subset of {1..p} in lexicographic order
    std::size_t i = n;
    while (i > 0 && pos[i - 1] == p - (n - i))
      --i;
    if (i == 0)
      break;
    ++pos[i - 1];
    for (std::size_t j = i; j < n; ++j)
      pos[j] = pos[j - 1] + 1;
  }
  return out;
}

namespace {

using LabelSeq = std::vector<ArrowLabel>;
using SeqMap = std::map<LabelSeq, Scalar>;

/// alpha * beta for basis paths. State (i, j) holds the label sequences
/// after placing i arrows of alpha and j arrows of beta at the bottom
/// i + j positions; an alpha step meets beta's current vertex through the
/// right action, a beta step meets alpha's current vertex through the left
/// action (which keeps the label).
void multiply_paths(const HopfQuiver& q, const Path& alpha, const Path& beta, const Scalar& coeff,
                    std::map<Path, Scalar>& out) {
  const std::size_t n = alpha.length(), m = beta.length();
  const Element source = q.group().mul(alpha.source, beta.source);
  if (n == 0 && m == 0) {
    accumulate(out, Path{source, {}}, coeff);
    return;
  }
  const auto vb = path_vertices(q, beta);
  std::vector<SeqMap> prev(m + 1), cur(m + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      SeqMap& cell = cur[j];
      cell.clear();
      if (i == 0 && j == 0) {
        cell.emplace(LabelSeq{}, coeff);
        continue;
      }
      if (i > 0) {
        const auto& terms = q.right_action(alpha.labels[i - 1], vb[j]);
        for (const auto& [seq, c] : prev[j])
          for (const auto& t : terms) {
            LabelSeq s = seq;
            s.push_back(t.label);
            accumulate(cell, s, c * t.coeff);
          }
      }
      if (j > 0) {
        for (const auto& [seq, c] : cur[j - 1]) {
          LabelSeq s = seq;
          s.push_back(beta.labels[j - 1]);
          accumulate(cell, s, c);
        }
      }
    }
    std::swap(prev, cur);
  }
  for (auto& [seq, c] : prev[m])
    accumulate(out, Path{source, seq}, c);
}

} // namespace

PathVector multiply(const PathVector& x, const PathVector& y) {
  require_same(x.quiver(), y.quiver());
  const HopfQuiver& q = *x.quiver();
  std::vector<std::pair<const Path*, const Scalar*>> xs, ys;
  for (const auto& [p, c] : x.terms())
    xs.emplace_back(&p, &c);
  for (const auto& [p, c] : y.terms())
    ys.emplace_back(&p, &c);
  const long total = static_cast<long>(xs.size() * ys.size());

  PathVector result(x.quiver());
  std::map<Path, Scalar> merged;
#pragma omp parallel if (total > 64)
  {
    std::map<Path, Scalar> local;
#pragma omp for schedule(dynamic, 8)
    for (long k = 0; k < total; ++k) {
      const auto& [pa, ca] = xs[static_cast<std::size_t>(k) / ys.size()];
      const auto& [pb, cb] = ys[static_cast<std::size_t>(k) % ys.size()];
      multiply_paths(q, *pa, *pb, *ca * *cb, local);
    }
    // Exact arithmetic: the merged sum does not depend on the schedule.
#pragma omp critical(hqa_multiply_merge)
    for (const auto& [p, c] : local)
      accumulate(merged, p, c);
  }
  for (const auto& [p, c] : merged)
    result.add_term(p, c);
  return result;
}

PathVector multiply_reference(const PathVector& x, const PathVector& y) {
  require_same(x.quiver(), y.quiver());
  const HopfQuiver& q = *x.quiver();
  const FiniteGroup& G = q.group();
  PathVector result(x.quiver());
  for (const auto& [alpha, ca] : x.terms())
    for (const auto& [beta, cb] : y.terms()) {
      const std::size_t n = alpha.length(), m = beta.length();
      if (n + m == 0) {
        result.add_term(Path{G.mul(alpha.source, beta.source), {}}, ca * cb);
        continue;
      }
      for (const ThinSplit& da : thin_splits(q, alpha, n + m)) {
        std::vector<std::uint32_t> complement;
        for (std::uint32_t pos = 1, k = 0; pos <= n + m; ++pos) {
          if (k < da.positions.size() && da.positions[k] == pos)
            ++k;
          else
            complement.push_back(pos);
        }
        const ThinSplit db = thin_split_at(q, beta, complement, n + m);
        // Positionwise products: each is a combination of arrows.
        std::vector<std::vector<std::pair<Arrow, Scalar>>> factors;
        for (std::size_t i = 0; i < n + m; ++i) {
          const auto& sa = da.slots[i];
          const auto& sb = db.slots[i];
          if (const Arrow* a = std::get_if<Arrow>(&sa))
            factors.push_back(q.act_right(*a, std::get<Element>(sb)));
          else
            factors.push_back({{q.act_left(std::get<Element>(sa), std::get<Arrow>(sb)), q.field().one()}});
        }
        // Concatenate (path algebra product: non-composable words vanish).
        std::vector<std::pair<std::vector<Arrow>, Scalar>> words{{{}, ca * cb}};
        for (const auto& f : factors) {
          std::vector<std::pair<std::vector<Arrow>, Scalar>> next;
          for (const auto& [w, c] : words)
            for (const auto& [a, d] : f) {
              if (!w.empty() && q.target(w.back()) != a.source)
                continue;
              auto w2 = w;
              w2.push_back(a);
              next.emplace_back(std::move(w2), c * d);
            }
          words = std::move(next);
        }
        for (const auto& [w, c] : words) {
          Path p{w.front().source, {}};
          for (const auto& a : w)
            p.labels.push_back(q.label_of(a));
          result.add_term(p, c);
        }
      }
    }
  return result;
}

TensorVector comultiply(const PathVector& x) {
  const HopfQuiver& q = *x.quiver();
  TensorVector out(x.quiver());
  for (const auto& [p, c] : x.terms()) {
    const auto verts = path_vertices(q, p);
    const std::size_t n = p.length();
    for (std::size_t i = 0; i <= n; ++i) {
      Path left{verts[i], LabelSeq(p.labels.begin() + static_cast<long>(i), p.labels.end())};
      Path right{verts[0], LabelSeq(p.labels.begin(), p.labels.begin() + static_cast<long>(i))};
      out.add_term(left, right, c);
    }
  }
  return out;
}

Scalar counit(const PathVector& x) {
  Scalar s = x.field().zero();
  for (const auto& [p, c] : x.terms())
    if (p.length() == 0)
      s += c;
  return s;
}

namespace {

const PathVector& antipode_path(const QuiverPtr& q, const Path& alpha,
                                std::map<Path, PathVector>& memo) {
  auto it = memo.find(alpha);
  if (it != memo.end())
    return it->second;
  const FiniteGroup& G = q->group();
  if (alpha.length() == 0)
    return memo.emplace(alpha, PathVector::vertex(q, G.inv(alpha.source))).first->second;

  const auto verts = path_vertices(*q, alpha);
  const std::size_t n = alpha.length();
  const Scalar one = q->field().one();
  PathVector sum = PathVector::vertex(q, G.inv(verts[n])) * PathVector::path(q, alpha, one);
  for (std::size_t i = 1; i < n; ++i) {
    Path left{verts[i], LabelSeq(alpha.labels.begin() + static_cast<long>(i), alpha.labels.end())};
    Path right{verts[0], LabelSeq(alpha.labels.begin(), alpha.labels.begin() + static_cast<long>(i))};
    PathVector s_left = antipode_path(q, left, memo);
    sum += s_left * PathVector::path(q, right, one);
  }
  PathVector result = -(sum * PathVector::vertex(q, G.inv(verts[0])));
  return memo.emplace(alpha, std::move(result)).first->second;
}

} // namespace

PathVector antipode(const PathVector& x) {
  std::map<Path, PathVector> memo;
  PathVector out(x.quiver());
  for (const auto& [p, c] : x.terms())
    out += antipode_path(x.quiver(), p, memo) * c;
  return out;
}

PathVector contract(const TensorVector& t) {
  const QuiverPtr& q = t.quiver();
  PathVector out(q);
  const Scalar one = q->field().one();
  for (const auto& [k, c] : t.terms())
    out += multiply(PathVector::path(q, k.first, one), PathVector::path(q, k.second, one)) * c;
  return out;
}

} // namespace hqa
