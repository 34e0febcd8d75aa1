#include "hqa/axioms.hpp"

#include <map>
#include <tuple>

namespace hqa {

namespace {

using Triple = std::map<std::tuple<Path, Path, Path>, Scalar>;

void add(Triple& t, const Path& a, const Path& b, const Path& c, const Scalar& s) {
  if (s.is_zero())
    return;
  auto [it, inserted] = t.try_emplace({a, b, c}, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero())
      t.erase(it);
  }
}

PathVector single(const QuiverPtr& q, const Path& p) { return PathVector::path(q, p, q->field().one()); }

Triple coassoc_left(const QuiverPtr& q, const PathVector& x) {
  Triple t;
  const TensorVector dx = comultiply(x);
  for (const auto& [k, c] : dx.terms()) {
    const TensorVector inner = comultiply(single(q, k.first));
    for (const auto& [k2, c2] : inner.terms())
      add(t, k2.first, k2.second, k.second, c * c2);
  }
  return t;
}

Triple coassoc_right(const QuiverPtr& q, const PathVector& x) {
  Triple t;
  const TensorVector dx = comultiply(x);
  for (const auto& [k, c] : dx.terms()) {
    const TensorVector inner = comultiply(single(q, k.second));
    for (const auto& [k2, c2] : inner.terms())
      add(t, k.first, k2.first, k2.second, c * c2);
  }
  return t;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_prime_field()) {
    std::uniform_int_distribution<long long> d(1, f.characteristic() - 1);
    return f.from_int(d(rng));
  }
  std::uniform_int_distribution<long long> num(-4, 4), den(1, 3);
  long long n = 0;
  while (n == 0)
    n = num(rng);
  return f.fraction(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(den(rng))));
}

} // namespace

PathVector random_element(const QuiverPtr& q, std::size_t max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> terms(1, 3), length(0, max_degree),
      vertex(0, q->group().order() - 1), label(0, q->num_labels() - 1);
  PathVector x(q);
  while (x.is_zero()) {
    const std::size_t count = terms(rng);
    for (std::size_t t = 0; t < count; ++t) {
      Path p;
      p.source = Element(vertex(rng));
      const std::size_t len = length(rng);
      for (std::size_t i = 0; i < len; ++i)
        p.labels.push_back(ArrowLabel(label(rng)));
      x.add_term(p, random_scalar(q->field(), rng));
    }
  }
  return x;
}

bool AxiomReport::pass() const {
  for (const auto& r : results)
    if (r.failures != 0 || r.checked == 0)
      return false;
  return true;
}

AxiomReport check_hopf_axioms(const QuiverPtr& q, std::size_t max_degree, std::size_t samples,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const char* names[] = {"associativity",  "product oracle", "coassociativity", "counit",
                         "bialgebra",      "antipode"};
  AxiomReport report;
  for (const char* n : names)
    report.results.push_back({n, 0, 0, ""});
  const PathVector one = PathVector::vertex(q, q->group().identity());

  for (std::size_t s = 0; s < samples; ++s) {
    const PathVector x = random_element(q, max_degree, rng);
    const PathVector y = random_element(q, max_degree, rng);
    const PathVector z = random_element(q, max_degree, rng);
    const std::string operands = "x = " + x.to_string() + "; y = " + y.to_string() + "; z = " + z.to_string();
    auto record = [&](std::size_t i, bool ok) {
      AxiomResult& r = report.results[i];
      ++r.checked;
      if (!ok && r.failures++ == 0)
        r.first_failure = operands;
    };

    const PathVector xy = x * y, yz = y * z;
    const PathVector left = xy * z, right = x * yz;
    record(0, left == right);

    const bool oracle = multiply_reference(x, y) == xy &&
                        multiply_reference(multiply_reference(x, y), z) == left &&
                        multiply_reference(x, multiply_reference(y, z)) == right;
    record(1, oracle);

    record(2, coassoc_left(q, x) == coassoc_right(q, x));

    const TensorVector dx = comultiply(x);
    PathVector lc(q), rc(q);
    for (const auto& [k, c] : dx.terms()) {
      if (k.first.length() == 0)
        lc.add_term(k.second, c);
      if (k.second.length() == 0)
        rc.add_term(k.first, c);
    }
    record(3, lc == x && rc == x);

    record(4, comultiply(xy) == comultiply(x) * comultiply(y));

    PathVector sl(q), sr(q);
    for (const auto& [k, c] : dx.terms()) {
      sl += (antipode(single(q, k.first)) * single(q, k.second)) * c;
      sr += (single(q, k.first) * antipode(single(q, k.second))) * c;
    }
    const PathVector expected = one * counit(x);
    record(5, sl == expected && sr == expected);
  }
  return report;
}

} // namespace hqa
