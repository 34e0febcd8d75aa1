#include "hqa/nichols.hpp"

#include <cctype>
#include <exception>

namespace hqa {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

void check_size(const PathVector& v) {
  if (v.size() > kMaxTermsPerValue)
    throw NicholsError("a basis value exceeded " + std::to_string(kMaxTermsPerValue) + " path terms");
}

/// out[i] = f(i), computed in parallel; the first exception is rethrown.
template <class F>
std::vector<PathVector> parallel_products(std::size_t count, const QuiverPtr& q, F f) {
  std::vector<PathVector> out(count, PathVector(q));
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (count > 4)
  for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(count); ++i) {
    try {
      out[std::size_t(i)] = f(std::size_t(i));
    } catch (...) {
#pragma omp critical(hqa_nichols_error)
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);
  return out;
}

} // namespace

GeneratorSet GeneratorSet::arrows(const QuiverPtr& quiver, const std::vector<std::string>& names) {
  const auto out = quiver->out_arrows(quiver->group().identity());
  if (names.size() != out.size())
    throw NicholsError("expected " + std::to_string(out.size()) + " generator names, got " +
                       std::to_string(names.size()));
  GeneratorSet gens(quiver);
  for (std::size_t i = 0; i < out.size(); ++i)
    gens.add(names[i], PathVector::arrow(quiver, out[i]));
  return gens;
}

void GeneratorSet::add(const std::string& name, PathVector value) {
  if (!is_identifier(name))
    throw NicholsError("generator name '" + name + "' is not an identifier");
  if (find(name))
    throw NicholsError("duplicate generator name '" + name + "'");
  if (value.quiver() != quiver_)
    throw QuiverMismatch("generator '" + name + "' lives in a different quiver");
  if (value.is_zero())
    throw NicholsError("generator '" + name + "' is zero");
  std::optional<Element> target;
  for (const auto& [p, c] : value.terms()) {
    if (p.length() != 1 || p.source != quiver_->group().identity())
      throw NicholsError("generator '" + name + "' must be a combination of arrows leaving the identity");
    const Element t = path_target(*quiver_, p);
    if (target && *target != t)
      throw NicholsError("generator '" + name + "' mixes arrows with different targets");
    target = t;
  }
  names_.push_back(name);
  values_.push_back(std::move(value));
  degrees_.push_back(*target);
}

std::optional<std::size_t> GeneratorSet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return i;
  return std::nullopt;
}

PathVector GeneratorSet::evaluate(const Word& w) const {
  PathVector out = PathVector::vertex(quiver_, quiver_->group().identity());
  for (auto letter : w)
    out = out * values_.at(letter);
  return out;
}

PathVector GeneratorSet::evaluate(const FreePoly& f) const {
  PathVector out(quiver_);
  for (const auto& [w, c] : f.terms())
    out += evaluate(w) * c;
  return out;
}

std::vector<std::size_t> GradedBasis::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees)
    out.push_back(d.size());
  return out;
}

std::size_t GradedBasis::total() const {
  std::size_t t = 0;
  for (const auto& d : degrees)
    t += d.size();
  return t;
}

GradedBasis generate(const GeneratorSet& gens, std::size_t max_degree) {
  if (max_degree > kMaxGenerationDegree)
    throw NicholsError("maximum degree " + std::to_string(max_degree) + " exceeds the limit " +
                       std::to_string(kMaxGenerationDegree));
  const QuiverPtr& q = gens.quiver();
  const std::size_t m = gens.size();
  GradedBasis out;
  out.degrees.resize(max_degree + 1);
  out.degrees[0].push_back(BasisEntry{q->group().identity(), {}, PathVector::vertex(q, q->group().identity())});

  for (std::size_t d = 1; d <= max_degree; ++d) {
    const auto& prev = out.degrees[d - 1];
    auto products = parallel_products(prev.size() * m, q, [&](std::size_t i) {
      PathVector v = prev[i / m].value * gens.value(i % m);
      check_size(v);
      return v;
    });
    SparseEchelon<Path> ech;
    for (std::size_t i = 0; i < products.size(); ++i) {
      if (!ech.insert(products[i].terms()))
        continue;
      Word w = prev[i / m].word;
      w.push_back(std::uint16_t(i % m));
      out.degrees[d].push_back(BasisEntry{q->group().identity(), std::move(w), std::move(products[i])});
    }
  }
  return out;
}

GradedBasis biproduct_basis(const GeneratorSet& gens, std::size_t max_degree) {
  const QuiverPtr& q = gens.quiver();
  const GradedBasis nichols = generate(gens, max_degree);
  GradedBasis out;
  out.degrees.resize(nichols.degrees.size());
  for (std::size_t d = 0; d < nichols.degrees.size(); ++d) {
    const auto& layer = nichols.degrees[d];
    const std::size_t count = q->group().order() * layer.size();
    auto values = parallel_products(count, q, [&](std::size_t i) {
      return PathVector::vertex(q, Element(i / layer.size())) * layer[i % layer.size()].value;
    });
    SparseEchelon<Path> ech;
    for (std::size_t i = 0; i < count; ++i) {
      if (!ech.insert(values[i].terms()))
        continue;
      out.degrees[d].push_back(
          BasisEntry{Element(i / layer.size()), layer[i % layer.size()].word, std::move(values[i])});
    }
  }
  return out;
}

std::vector<FreePoly> RelationReport::all() const {
  std::vector<FreePoly> out;
  for (const auto& d : degrees)
    out.insert(out.end(), d.relations.begin(), d.relations.end());
  return out;
}

RelationReport find_relations(const GeneratorSet& gens, std::size_t max_degree) {
  if (max_degree > kMaxGenerationDegree)
    throw NicholsError("maximum degree " + std::to_string(max_degree) + " exceeds the limit " +
                       std::to_string(kMaxGenerationDegree));
  const QuiverPtr& q = gens.quiver();
  const Field& field = q->field();
  const std::size_t m = gens.size();
  RelationReport report;
  report.names = gens.names();

  std::vector<PathVector> values{PathVector::vertex(q, q->group().identity())};
  std::vector<FreePoly> found;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    values = parallel_products(values.size() * m, q, [&](std::size_t i) {
      PathVector v = values[i / m] * gens.value(i % m);
      check_size(v);
      return v;
    });
    const auto words = words_of_length(m, d);
    std::vector<SparseVec<Path>> images;
    images.reserve(values.size());
    for (const auto& v : values)
      images.push_back(v.terms());
    const auto kernel = kernel_of_columns(images, field);

    const GradedIdeal ideal(field, m, found, d);
    SparseEchelon<Word, Deglex> ech;
    for (const auto& combo : kernel) {
      FreePoly f(field);
      for (const auto& [j, c] : combo)
        f.add_term(words[j], c);
      const FreePoly r = ideal.normal_form(f);
      ech.insert(SparseVec<Word, Deglex>(r.terms().begin(), r.terms().end()));
    }

    RelationDegree layer;
    layer.degree = d;
    layer.kernel_dim = kernel.size();
    layer.ideal_dim = ideal.ideal_dim(d);
    if (layer.kernel_dim != layer.ideal_dim + ech.rank())
      throw NicholsError("relations of lower degree do not vanish in degree " + std::to_string(d));
    for (auto& row : ech.rref_rows()) {
      FreePoly f(field);
      for (const auto& [w, c] : row)
        f.add_term(w, c);
      layer.relations.push_back(f);
      found.push_back(std::move(f));
    }
    report.degrees.push_back(std::move(layer));
  }
  return report;
}

std::vector<const SkewPrimitiveSpace*> SkewPrimitiveReport::in_degree(std::size_t d) const {
  std::vector<const SkewPrimitiveSpace*> out;
  for (const auto& s : spaces)
    if (s.degree == d)
      out.push_back(&s);
  return out;
}

SkewPrimitiveReport scan_skew_primitives(const GeneratorSet& gens, std::size_t max_degree,
                                         SkewScanOptions options) {
  const QuiverPtr& q = gens.quiver();
  const Field& field = q->field();
  const std::size_t n = q->group().order();
  SkewPrimitiveReport report;
  report.basis = biproduct_basis(gens, max_degree);

  using Key = TensorVector::Key;
  for (std::size_t d = options.include_degree_zero ? 0 : 1; d <= max_degree; ++d) {
    const auto& layer = report.basis.degrees[d];
    if (layer.empty())
      continue;
    std::vector<TensorVector> coproducts;
    for (const auto& e : layer)
      coproducts.push_back(comultiply(e.value));

    std::vector<std::vector<SkewPrimitiveSpace>> found(n * n);
#pragma omp parallel for schedule(dynamic) if (n * n > 4)
    for (std::ptrdiff_t idx = 0; idx < std::ptrdiff_t(n * n); ++idx) {
      const Element u = Element(std::size_t(idx) / n), v = Element(std::size_t(idx) % n);
      std::vector<SparseVec<Key>> images;
      for (std::size_t j = 0; j < layer.size(); ++j) {
        TensorVector t = coproducts[j];
        t -= TensorVector::pure(layer[j].value, PathVector::vertex(q, u));
        t -= TensorVector::pure(PathVector::vertex(q, v), layer[j].value);
        images.push_back(t.terms());
      }
      const auto kernel = kernel_of_columns(images, field);
      if (kernel.empty())
        continue;
      SparseEchelon<std::size_t> ech;
      for (const auto& k : kernel)
        ech.insert(k);
      SkewPrimitiveSpace space;
      space.degree = d;
      space.u = u;
      space.v = v;
      for (auto& row : ech.rref_rows()) {
        PathVector x(q);
        for (const auto& [j, c] : row)
          x += layer[j].value * c;
        space.solutions.push_back(std::move(x));
        space.coordinates.push_back(std::move(row));
      }
      found[std::size_t(idx)].push_back(std::move(space));
    }
    for (auto& f : found)
      for (auto& s : f)
        report.spaces.push_back(std::move(s));
  }
  return report;
}

} // namespace hqa
