#include "hqa/smash.hpp"

#include <deque>

namespace hqa {

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

std::string render_scalar(const Scalar& c, bool first) {
  std::string out = c.is_negative() ? (first ? "-" : " - ") : (first ? "" : " + ");
  return out + (c.is_negative() ? -c : c).to_string();
}

} // namespace

void SmashElement::add_term(const SmashMonomial& m, const Scalar& c) {
  if (c.characteristic() != field_.characteristic())
    throw FieldError("coefficient from a different field");
  accumulate(terms_, m, c);
}

SmashElement& SmashElement::operator+=(const SmashElement& o) {
  for (const auto& [m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

SmashElement& SmashElement::operator-=(const SmashElement& o) {
  for (const auto& [m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

SmashElement& SmashElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_)
    v *= c;
  return *this;
}

SmashTensor SmashTensor::pure(const SmashElement& x, const SmashElement& y) {
  SmashTensor t(x.field());
  for (const auto& [l, c] : x.terms())
    for (const auto& [r, d] : y.terms())
      t.add_term(l, r, c * d);
  return t;
}

void SmashTensor::add_term(const SmashMonomial& l, const SmashMonomial& r, const Scalar& c) {
  if (c.characteristic() != field_.characteristic())
    throw FieldError("coefficient from a different field");
  accumulate(terms_, Key{l, r}, c);
}

SmashTensor& SmashTensor::operator+=(const SmashTensor& o) {
  for (const auto& [k, c] : o.terms_)
    accumulate(terms_, k, c);
  return *this;
}

SmashTensor& SmashTensor::operator-=(const SmashTensor& o) {
  for (const auto& [k, c] : o.terms_)
    accumulate(terms_, k, -c);
  return *this;
}

SmashAlgebra::SmashAlgebra(FiniteGroup group, Field field, std::vector<std::string> letter_names,
                           std::vector<Element> letter_degrees, std::vector<Matrix> actions,
                           std::size_t max_degree)
    : group_(std::move(group)), field_(field), names_(std::move(letter_names)),
      degrees_(std::move(letter_degrees)), actions_(std::move(actions)), max_degree_(max_degree) {
  const std::size_t m = names_.size();
  const std::size_t n = group_.order();
  if (degrees_.size() != m)
    throw SmashError("every letter needs a group degree");
  for (Element d : degrees_)
    if (d >= n)
      throw SmashError("letter degree out of range");
  if (actions_.size() != n)
    throw SmashError("expected one action matrix per group element");
  for (Element h = 0; h < n; ++h) {
    const Matrix& a = actions_[h];
    if (a.rows() != m || a.cols() != m || a.field() != field_)
      throw SmashError("action matrix of " + group_.label(h) + " has the wrong shape or field");
  }
  if (actions_[0] != Matrix::identity(field_, m))
    throw SmashError("the identity must act trivially");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (actions_[group_.mul(x, y)] != actions_[x] * actions_[y])
        throw SmashError("action(" + group_.label(x) + ")*action(" + group_.label(y) + ") = " +
                         (actions_[x] * actions_[y]).to_string() + " differs from action(" +
                         group_.label(group_.mul(x, y)) + ") = " +
                         actions_[group_.mul(x, y)].to_string());
  for (Element h = 0; h < n; ++h)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (!actions_[h](i, j).is_zero() &&
            degrees_[j] != group_.mul(group_.inv(h), group_.mul(degrees_[i], h)))
          throw SmashError("the action of " + group_.label(h) + " does not conjugate the degree of " +
                           names_[i]);
}

SmashAlgebra SmashAlgebra::from_generators(const GeneratorSet& gens, std::size_t max_degree) {
  const QuiverPtr& q = gens.quiver();
  const Field& field = q->field();
  const FiniteGroup& group = q->group();
  const std::size_t m = gens.size();

  std::vector<SparseVec<Path>> columns;
  for (const auto& v : gens.values())
    columns.push_back(v.terms());
  if (!kernel_of_columns(columns, field).empty())
    throw SmashError("generators are linearly dependent");

  std::vector<Matrix> actions;
  std::vector<Element> degrees;
  for (std::size_t i = 0; i < m; ++i)
    degrees.push_back(gens.degree(i));
  for (Element h = 0; h < group.order(); ++h) {
    Matrix a(field, m, m);
    for (std::size_t i = 0; i < m; ++i) {
      const PathVector image =
          PathVector::vertex(q, group.inv(h)) * (gens.value(i) * PathVector::vertex(q, h));
      auto cols = columns;
      cols.push_back(image.terms());
      const auto kernel = kernel_of_columns(cols, field);
      if (kernel.empty())
        throw SmashError("the span of the generators is not stable under conjugation by " + group.label(h));
      const auto& k = kernel.front();
      const Scalar scale = -k.at(m).inv();
      for (const auto& [j, c] : k)
        if (j < m)
          a(i, j) = c * scale;
    }
    actions.push_back(std::move(a));
  }
  return SmashAlgebra(group, field, gens.names(), degrees, std::move(actions), max_degree);
}

SmashAlgebra SmashAlgebra::jordan(Field field, std::size_t n, std::size_t max_degree) {
  FiniteGroup group = make_cyclic(n);
  std::vector<Matrix> actions;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a = Matrix::identity(field, 2);
    a(1, 0) = field.from_int(static_cast<long long>(i));
    actions.push_back(std::move(a));
  }
  const Element g = n > 1 ? 1 : 0;
  return SmashAlgebra(std::move(group), field, {"a", "b"}, {g, g}, std::move(actions), max_degree);
}

SmashAlgebra SmashAlgebra::with_max_degree(std::size_t max_degree) const {
  SmashAlgebra out = *this;
  out.max_degree_ = max_degree;
  return out;
}

std::size_t SmashAlgebra::dim_up_to(std::size_t d) const {
  std::size_t total = 0, power = 1;
  for (std::size_t k = 0; k <= d; ++k) {
    total += power;
    power *= names_.size();
  }
  return total * group_.order();
}

void SmashAlgebra::check_degree(std::size_t d) const {
  if (d > max_degree_)
    throw TruncationError("degree " + std::to_string(d) + " exceeds the truncation degree " +
                          std::to_string(max_degree_));
}

SmashElement SmashAlgebra::scalar(const Scalar& c) const {
  return monomial(group_.identity(), {}, c);
}

SmashElement SmashAlgebra::group_element(Element h) const {
  return monomial(h, {}, field_.one());
}

SmashElement SmashAlgebra::letter(std::size_t i) const {
  return monomial(group_.identity(), Word{std::uint16_t(i)}, field_.one());
}

SmashElement SmashAlgebra::monomial(Element h, Word w, const Scalar& c) const {
  if (h >= group_.order())
    throw SmashError("group element out of range");
  for (auto l : w)
    if (l >= names_.size())
      throw SmashError("letter out of range");
  check_degree(w.size());
  SmashElement x(field_);
  x.add_term(SmashMonomial{h, std::move(w)}, c);
  return x;
}

SmashElement SmashAlgebra::from_free(const FreePoly& f) const {
  SmashElement x(field_);
  for (const auto& [w, c] : f.terms()) {
    check_degree(w.size());
    x.add_term(SmashMonomial{group_.identity(), w}, c);
  }
  return x;
}

FreePoly SmashAlgebra::act(const Word& w, Element h) const {
  FreePoly out = FreePoly::monomial(field_, {});
  const Matrix& a = actions_.at(h);
  for (auto l : w) {
    FreePoly next(field_);
    for (const auto& [u, c] : out.terms())
      for (std::size_t j = 0; j < names_.size(); ++j) {
        const Scalar& e = a(l, j);
        if (e.is_zero())
          continue;
        Word x = u;
        x.push_back(std::uint16_t(j));
        next.add_term(x, c * e);
      }
    out = std::move(next);
  }
  return out;
}

FreePoly SmashAlgebra::act(const FreePoly& f, Element h) const {
  FreePoly out(field_);
  for (const auto& [w, c] : f.terms())
    out += act(w, h) * c;
  return out;
}

std::vector<std::pair<SmashMonomial, Scalar>> SmashAlgebra::multiply_monomials(const SmashMonomial& x,
                                                                               const SmashMonomial& y) const {
  check_degree(x.word.size() + y.word.size());
  std::vector<std::pair<SmashMonomial, Scalar>> out;
  const Element gh = group_.mul(x.group, y.group);
  if (x.word.empty() || y.group == group_.identity()) {
    Word w = x.word;
    w.insert(w.end(), y.word.begin(), y.word.end());
    out.emplace_back(SmashMonomial{gh, std::move(w)}, field_.one());
    return out;
  }
  const FreePoly acted = act(x.word, y.group);
  for (const auto& [u, c] : acted.terms()) {
    Word w = u;
    w.insert(w.end(), y.word.begin(), y.word.end());
    out.emplace_back(SmashMonomial{gh, std::move(w)}, c);
  }
  return out;
}

SmashElement SmashAlgebra::multiply(const SmashElement& x, const SmashElement& y) const {
  SmashElement out(field_);
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms())
      for (const auto& [m, c] : multiply_monomials(mx, my))
        out.add_term(m, c * cx * cy);
  return out;
}

SmashElement SmashAlgebra::power(const SmashElement& x, std::size_t k) const {
  SmashElement out = one();
  for (std::size_t i = 0; i < k; ++i)
    out = multiply(out, x);
  return out;
}

SmashTensor SmashAlgebra::multiply(const SmashTensor& x, const SmashTensor& y) const {
  SmashTensor out(field_);
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      const auto left = multiply_monomials(kx.first, ky.first);
      const auto right = multiply_monomials(kx.second, ky.second);
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right)
          out.add_term(l, r, cx * cy * cl * cr);
    }
  return out;
}

SmashTensor SmashAlgebra::comultiply(const SmashElement& x) const {
  SmashTensor out(field_);
  std::vector<SmashTensor> letter_coproducts;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    SmashTensor t(field_);
    t.add_term(SmashMonomial{group_.identity(), {std::uint16_t(i)}}, SmashMonomial{group_.identity(), {}},
               field_.one());
    t.add_term(SmashMonomial{degrees_[i], {}}, SmashMonomial{group_.identity(), {std::uint16_t(i)}},
               field_.one());
    letter_coproducts.push_back(std::move(t));
  }
  for (const auto& [m, c] : x.terms()) {
    check_degree(m.word.size());
    SmashTensor t(field_);
    t.add_term(SmashMonomial{m.group, {}}, SmashMonomial{m.group, {}}, c);
    for (auto l : m.word)
      t = multiply(t, letter_coproducts[l]);
    out += t;
  }
  return out;
}

SmashElement SmashAlgebra::antipode(const SmashElement& x) const {
  SmashElement out(field_);
  for (const auto& [m, c] : x.terms()) {
    check_degree(m.word.size());
    SmashElement t = scalar(c);
    for (auto it = m.word.rbegin(); it != m.word.rend(); ++it)
      t = multiply(t, monomial(group_.inv(degrees_[*it]), {*it}, -field_.one()));
    out += multiply(t, group_element(group_.inv(m.group)));
  }
  return out;
}

Scalar SmashAlgebra::counit(const SmashElement& x) const {
  Scalar s = field_.zero();
  for (const auto& [m, c] : x.terms())
    if (m.word.empty())
      s += c;
  return s;
}

SmashElement SmashAlgebra::contract(const SmashTensor& t) const {
  SmashElement out(field_);
  for (const auto& [k, c] : t.terms())
    for (const auto& [m, d] : multiply_monomials(k.first, k.second))
      out.add_term(m, c * d);
  return out;
}

std::string SmashAlgebra::render(const SmashMonomial& m) const {
  if (m.word.empty())
    return m.group == group_.identity() ? "1" : group_.label(m.group);
  const std::string w = render_word(m.word, names_);
  return m.group == group_.identity() ? w : group_.label(m.group) + "*" + w;
}

std::string SmashAlgebra::to_string(const SmashElement& x) const {
  if (x.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (m.word.empty() && m.group == group_.identity())
      out += render_scalar(c, first);
    else
      out += coefficient_prefix(c, first) + render(m);
    first = false;
  }
  return out;
}

std::string SmashAlgebra::to_string(const SmashTensor& t) const {
  if (t.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    out += coefficient_prefix(c, first) + render(k.first) + " ⊗ " + render(k.second);
    first = false;
  }
  return out;
}

namespace {

/// Group element s and homogeneous f with r = s f, when r has that shape.
std::optional<std::pair<Element, FreePoly>> split_homogeneous(const SmashElement& r) {
  if (r.is_zero())
    return std::nullopt;
  const Element s = r.terms().begin()->first.group;
  const std::size_t d = r.terms().begin()->first.word.size();
  FreePoly f(r.field());
  for (const auto& [m, c] : r.terms()) {
    if (m.group != s || m.word.size() != d)
      return std::nullopt;
    f.add_term(m.word, c);
  }
  return std::make_pair(s, std::move(f));
}

} // namespace

IdealSpan::IdealSpan(const SmashAlgebra& algebra, std::vector<SmashElement> relators, IdealStrategy strategy)
    : algebra_(algebra), strategy_(strategy) {
  for (auto& r : relators) {
    if (r.field() != algebra_.field())
      throw FieldError("relator over a different field");
    if (r.degree() > algebra_.max_degree())
      throw TruncationError("relator of degree " + std::to_string(r.degree()) +
                            " exceeds the truncation degree " + std::to_string(algebra_.max_degree()));
    if (!r.is_zero())
      relators_.push_back(std::move(r));
  }

  bool homogeneous = true;
  for (const auto& r : relators_)
    homogeneous = homogeneous && split_homogeneous(r).has_value();
  if (strategy_ == IdealStrategy::Auto)
    strategy_ = homogeneous ? IdealStrategy::Graded : IdealStrategy::Filtered;
  if (strategy_ == IdealStrategy::Graded && !homogeneous)
    throw SmashError("the graded strategy needs relators of the form h*f with f homogeneous in T(V)");

  const FiniteGroup& group = algebra_.group();
  if (strategy_ == IdealStrategy::Graded) {
    std::vector<FreePoly> polys;
    for (const auto& r : relators_) {
      const FreePoly f = split_homogeneous(r)->second;
      for (Element h = 0; h < group.order(); ++h) {
        FreePoly c = algebra_.act(f, h);
        bool seen = false;
        for (const auto& p : polys)
          seen = seen || p == c;
        if (!seen) {
          conjugates_.push_back(algebra_.from_free(c));
          polys.push_back(std::move(c));
        }
      }
    }
    graded_.emplace(algebra_.field(), algebra_.num_letters(), polys, algebra_.max_degree());
    return;
  }

  std::deque<SmashElement> queue;
  for (const auto& r : relators_)
    if (echelon_.insert(r.terms()))
      queue.push_back(r);
  const std::size_t D = algebra_.max_degree();
  while (!queue.empty()) {
    const SmashElement x = std::move(queue.front());
    queue.pop_front();
    std::vector<SmashElement> products;
    if (x.degree() < D)
      for (std::size_t i = 0; i < algebra_.num_letters(); ++i) {
        products.push_back(algebra_.multiply(algebra_.letter(i), x));
        products.push_back(algebra_.multiply(x, algebra_.letter(i)));
      }
    for (Element h = 1; h < group.order(); ++h) {
      products.push_back(algebra_.multiply(algebra_.group_element(h), x));
      products.push_back(algebra_.multiply(x, algebra_.group_element(h)));
    }
    for (auto& p : products)
      if (echelon_.insert(p.terms()))
        queue.push_back(std::move(p));
  }
}

SmashElement IdealSpan::normal_form(const SmashElement& x) const {
  SmashElement out(algebra_.field());
  if (strategy_ == IdealStrategy::Filtered) {
    for (const auto& [m, c] : echelon_.reduced(x.terms()))
      out.add_term(m, c);
    return out;
  }
  for (const auto& [m, c] : x.terms())
    for (const auto& [i, v] : graded_->normal_form_coords(m.word))
      out.add_term(SmashMonomial{m.group, graded_->standard_words(m.word.size())[i]}, c * v);
  return out;
}

SmashTensor IdealSpan::normal_form(const SmashTensor& t) const {
  std::map<SmashMonomial, SmashElement> cache;
  auto nf = [&](const SmashMonomial& m) -> const SmashElement& {
    auto it = cache.find(m);
    if (it == cache.end()) {
      SmashElement x(algebra_.field());
      x.add_term(m, algebra_.field().one());
      it = cache.emplace(m, normal_form(x)).first;
    }
    return it->second;
  };
  SmashTensor out(algebra_.field());
  for (const auto& [k, c] : t.terms()) {
    const SmashElement& l = nf(k.first);
    if (l.is_zero())
      continue;
    const SmashElement& r = nf(k.second);
    for (const auto& [ml, cl] : l.terms())
      for (const auto& [mr, cr] : r.terms())
        out.add_term(ml, mr, c * cl * cr);
  }
  return out;
}

std::size_t IdealSpan::dim_up_to(std::size_t d) const {
  std::size_t total = 0;
  if (strategy_ == IdealStrategy::Filtered) {
    for (const auto& [pivot, row] : echelon_.rows())
      if (pivot.word.size() <= d)
        ++total;
    return total;
  }
  for (std::size_t k = 0; k <= d && k <= algebra_.max_degree(); ++k)
    total += graded_->ideal_dim(k);
  return total * algebra_.group().order();
}

std::vector<SmashElement> IdealSpan::spanning_set() const {
  if (strategy_ == IdealStrategy::Graded)
    return conjugates_;
  std::vector<SmashElement> out;
  for (const auto& [pivot, row] : echelon_.rows()) {
    SmashElement x(algebra_.field());
    for (const auto& [m, c] : row)
      x.add_term(m, c);
    out.push_back(std::move(x));
  }
  return out;
}

bool HopfIdealReport::pass() const {
  for (const auto& r : relators)
    if (!r.counit_ok || !r.coproduct_ok || (r.antipode_ok && !*r.antipode_ok))
      return false;
  return !spanning_antipode_ok || *spanning_antipode_ok;
}

namespace {

std::string first_term(const SmashAlgebra& alg, const SmashTensor& t) {
  SmashTensor single(t.field());
  const auto& [k, c] = *t.terms().rbegin();
  single.add_term(k.first, k.second, c);
  return alg.to_string(single);
}

std::string first_term(const SmashAlgebra& alg, const SmashElement& x) {
  SmashElement single(x.field());
  const auto& [m, c] = *x.terms().rbegin();
  single.add_term(m, c);
  return alg.to_string(single);
}

} // namespace

HopfIdealReport check_hopf_ideal(const SmashAlgebra& algebra, const std::vector<SmashElement>& relators,
                                 HopfIdealOptions options) {
  const IdealSpan ideal(algebra, relators, options.strategy);
  HopfIdealReport report;
  report.strategy = ideal.strategy();
  report.quotient_dim = ideal.quotient_dim();
  std::vector<RelatorCheck> checks(relators.size());

#pragma omp parallel for schedule(dynamic) if (relators.size() > 1)
  for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(relators.size()); ++i) {
    const SmashElement& r = relators[std::size_t(i)];
    RelatorCheck& check = checks[std::size_t(i)];
    check.relator = algebra.to_string(r);
    const Scalar eps = algebra.counit(r);
    check.counit_ok = eps.is_zero();
    if (!check.counit_ok)
      check.witness = "counit " + eps.to_string();
    const SmashTensor residual = ideal.normal_form(algebra.comultiply(r));
    check.coproduct_ok = residual.is_zero();
    if (!check.coproduct_ok && check.witness.empty())
      check.witness = first_term(algebra, residual);
    if (options.with_antipode) {
      const SmashElement s = ideal.normal_form(algebra.antipode(r));
      check.antipode_ok = s.is_zero();
      if (!s.is_zero() && check.witness.empty())
        check.witness = "S: " + first_term(algebra, s);
    }
  }
  report.relators = std::move(checks);

  if (options.with_antipode) {
    const auto span = ideal.spanning_set();
    report.antipode_checked = span.size();
    bool ok = true;
    for (const auto& x : span) {
      const SmashElement s = ideal.normal_form(algebra.antipode(x));
      if (!s.is_zero()) {
        ok = false;
        report.antipode_witness = algebra.to_string(x) + " -> " + first_term(algebra, s);
        break;
      }
    }
    report.spanning_antipode_ok = ok;
  }
  return report;
}

std::vector<SmashElement> charp_lifting_relators(const SmashAlgebra& algebra, const Scalar& lambda,
                                                 const Scalar& mu) {
  const Field& field = algebra.field();
  const std::uint32_t p = field.characteristic();
  if (p < 3)
    throw SmashError("these relators need an odd characteristic");
  if (algebra.num_letters() != 2)
    throw SmashError("these relators need exactly two letters");
  const Element gp = algebra.group().pow(algebra.letter_degree(0), p);
  const SmashElement deformation = algebra.one() - algebra.group_element(gp);
  const Word ap(p, 0), bp(p, 1);
  FreePoly quad(field);
  quad.add_term({1, 0}, field.one());
  quad.add_term({0, 1}, -field.one());
  quad.add_term({0, 0}, -field.fraction(1, 2));
  return {
      algebra.monomial(0, ap, field.one()) - deformation * lambda,
      algebra.monomial(0, bp, field.one()) - deformation * mu,
      algebra.from_free(quad),
  };
}

std::vector<SmashElement> char2_lifting_relators(const SmashAlgebra& algebra, const Scalar& lambda,
                                                 const Scalar& mu, const Scalar& nu) {
  const Field& field = algebra.field();
  if (field.characteristic() != 2)
    throw SmashError("these relators need characteristic 2");
  if (algebra.num_letters() != 2)
    throw SmashError("these relators need exactly two letters");
  const Element g4 = algebra.group().pow(algebra.letter_degree(0), 4);
  const SmashElement deformation = algebra.one() - algebra.group_element(g4);
  auto poly = [&](std::initializer_list<Word> words) {
    FreePoly f(field);
    for (const auto& w : words)
      f.add_term(w, field.one());
    return algebra.from_free(f);
  };
  return {
      poly({{0, 0}, {0, 1}, {1, 0}, {1, 1}}),
      poly({{0, 0, 1}, {0, 1, 1}, {1, 1, 0}, {1, 0, 0}}),
      poly({{0, 0, 0, 0}}) - deformation * lambda,
      poly({{1, 1, 1, 1}}) - deformation * mu,
      poly({{0, 0, 1, 1}, {1, 1, 0, 0}}) - deformation * nu,
  };
}

bool IdentityBankReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass)
      return false;
  return !checks.empty();
}

IdentityBankReport verify_identity_bank(std::uint32_t p, std::size_t n, long r_max, long l_max) {
  if (p == 2)
    throw SmashError("characteristic 2 has no 1/2; the identity bank needs an odd prime");
  const Field field(p);
  if (p == 0 || n % p != 0)
    throw SmashError("the identity bank needs p | n");
  if (r_max < 1 || l_max < 1)
    throw SmashError("r and l bounds must be positive");
  const SmashAlgebra alg = SmashAlgebra::jordan(field, n, std::size_t(r_max + l_max));
  FreePoly quad(field);
  quad.add_term({1, 0}, field.one());
  quad.add_term({0, 1}, -field.one());
  quad.add_term({0, 0}, -field.fraction(1, 2));
  const IdealSpan ideal(alg, {alg.from_free(quad)}, IdealStrategy::Graded);
  const FiniteGroup& G = alg.group();
  const Element g = 1 % Element(n);

  auto word = [](long as, long bs, bool b_first) {
    Word w;
    if (b_first)
      w.insert(w.end(), std::size_t(bs), 1);
    w.insert(w.end(), std::size_t(as), 0);
    if (!b_first)
      w.insert(w.end(), std::size_t(bs), 1);
    return w;
  };
  auto coeff = [&](const mpz_class& num, long two_power) {
    mpz_class den = 1;
    den <<= static_cast<mp_bitcnt_t>(two_power);
    return field.fraction(num, den);
  };
  IdentityBankReport report;
  auto record = [&](std::string name, long r, long l, const SmashElement& diff) {
    const SmashElement nf = ideal.normal_form(diff);
    report.checks.push_back({std::move(name), r, l, nf.is_zero(), nf.is_zero() ? "" : alg.to_string(nf)});
  };
  auto record_tensor = [&](std::string name, long r, long l, const SmashTensor& diff) {
    const SmashTensor nf = ideal.normal_form(diff);
    report.checks.push_back({std::move(name), r, l, nf.is_zero(), nf.is_zero() ? "" : alg.to_string(nf)});
  };

  for (long r = 1; r <= r_max; ++r)
    for (long l = 1; l <= l_max; ++l) {
      // b^r a^l
      SmashElement lhs = alg.monomial(0, word(l, r, true), field.one());
      SmashElement rhs(field);
      for (long k = 0; k <= r; ++k)
        rhs.add_term({0, word(l + k, r - k, false)}, coeff(binomial(r, k) * rising_factorial(l, unsigned(k)), k));
      record("b*a", r, l, lhs - rhs);

      // b^r g^l
      lhs = alg.multiply(alg.monomial(0, Word(std::size_t(r), 1), field.one()),
                         alg.group_element(G.pow(g, l)));
      rhs = SmashElement(field);
      for (long k = 0; k <= r; ++k)
        rhs.add_term({G.pow(g, l), word(k, r - k, false)},
                     coeff(binomial(r, k) * rising_factorial(2 * l, unsigned(k)), k));
      record("b*g", r, l, lhs - rhs);
    }

  for (long r = 1; r <= r_max; ++r) {
    // b^r g^{-1} = g^{-1}(b^r - r a b^{r-1} + r(r-1)/4 a^2 b^{r-2})
    const SmashElement lhs = alg.multiply(alg.monomial(0, Word(std::size_t(r), 1), field.one()),
                                          alg.group_element(G.inv(g)));
    SmashElement rhs(field);
    rhs.add_term({G.inv(g), word(0, r, false)}, field.one());
    rhs.add_term({G.inv(g), word(1, r - 1, false)}, -field.from_int(r));
    if (r >= 2)
      rhs.add_term({G.inv(g), word(2, r - 2, false)}, field.fraction(r * (r - 1), 4));
    record("b*g^-1", r, -1, lhs - rhs);
  }

  for (long l = 1; l <= l_max; ++l) {
    const SmashElement bl = alg.monomial(0, Word(std::size_t(l), 1), field.one());
    SmashTensor rhs(field);
    rhs.add_term({0, Word(std::size_t(l), 1)}, {0, {}}, field.one());
    for (long k = 1; k <= l - 1; ++k)
      for (long i = 0; i <= k; ++i)
        rhs.add_term({G.pow(g, l - k), word(i, k - i, false)}, {0, Word(std::size_t(l - k), 1)},
                     coeff(binomial(l, k) * binomial(k, i) * rising_factorial(l - k, unsigned(i)), i));
    rhs.add_term({G.pow(g, l), {}}, {0, Word(std::size_t(l), 1)}, field.one());
    record_tensor("Delta(b)", 0, l, alg.comultiply(bl) - rhs);

    SmashElement s(field);
    for (long k = 0; k <= l - 1; ++k) {
      mpz_class num = binomial(l, k) * rising_factorial(l - k, unsigned(k));
      if ((l - k) % 2 != 0)
        num = -num;
      s.add_term({G.pow(g, -l), word(k, l - k, false)}, coeff(num, k));
    }
    record("S(b)", 0, l, alg.antipode(bl) - s);
  }
  return report;
}

PathVector evaluate_in_quiver(const SmashElement& x, const GeneratorSet& gens) {
  const QuiverPtr& q = gens.quiver();
  PathVector out(q);
  for (const auto& [m, c] : x.terms())
    out += (PathVector::vertex(q, m.group) * gens.evaluate(m.word)) * c;
  return out;
}

} // namespace hqa
