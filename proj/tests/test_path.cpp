#include "hqa/axioms.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <omp.h>

using namespace hqa;

namespace {

QuiverPtr s3_sign_quiver() {
  // S3 with labels in next_permutation order; t12 = (1 2) is element 1.
  const std::vector<std::vector<Element>> table = {{0, 1, 2, 3, 4, 5}, {1, 0, 4, 5, 2, 3}, {2, 3, 0, 1, 5, 4},
                                                   {3, 2, 5, 4, 0, 1}, {4, 5, 1, 0, 3, 2}, {5, 4, 3, 2, 1, 0}};
  const FiniteGroup g({"e", "t12", "t01", "r1", "r2", "t02"}, table);
  const CentralizerData cd(g, 1);
  Matrix sign(Field(3), 1, 1);
  sign(0, 0) = Field(3).from_int(-1);
  return build_quiver(g, 1, YDModule(g, cd, Field(3), {"m"}, {{1, sign}}));
}

std::vector<Path> all_paths(const HopfQuiver& q, std::size_t max_len) {
  std::vector<Path> out;
  for (Element s = 0; s < q.group().order(); ++s)
    out.push_back(Path{s, {}});
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].length() < max_len)
      for (ArrowLabel l = 0; l < q.num_labels(); ++l) {
        Path p = out[i];
        p.labels.push_back(l);
        out.push_back(p);
      }
  return out;
}

} // namespace

TEST_CASE("thin splits enumerate C(p, n) placements") {
  const auto q = make_jordan_quiver(Field(3), 3);
  const Path p{1, {0, 1}};
  for (std::size_t width = 2; width <= 5; ++width) {
    const auto splits = thin_splits(*q, p, width);
    CHECK(splits.size() == binomial(long(width), 2).get_ui());
    for (const auto& s : splits) {
      CHECK(s.slots.size() == width);
      std::size_t arrows = 0;
      for (const auto& slot : s.slots)
        arrows += std::holds_alternative<Arrow>(slot);
      CHECK(arrows == 2);
    }
  }
}

TEST_CASE("the parallel product equals the literal reference on all short paths") {
  for (const auto& q : {make_jordan_quiver(Field(3), 3), make_jordan_quiver(Field(2), 2), s3_sign_quiver()}) {
    const auto paths = all_paths(*q, q->group().order() > 3 ? 1 : 2);
    for (const Path& x : paths)
      for (const Path& y : paths) {
        const PathVector px = PathVector::path(q, x, q->field().one());
        const PathVector py = PathVector::path(q, y, q->field().one());
        const PathVector xy = multiply(px, py);
        REQUIRE(xy == multiply_reference(px, py));
        for (const auto& [p, c] : xy.terms())
          CHECK(p.length() == x.length() + y.length());
      }
  }
}

TEST_CASE("vertices multiply as group elements and the identity is the unit") {
  const auto q = make_jordan_quiver(Field(5), 5);
  const FiniteGroup& g = q->group();
  for (Element x = 0; x < 5; ++x)
    for (Element y = 0; y < 5; ++y)
      CHECK(PathVector::vertex(q, x) * PathVector::vertex(q, y) == PathVector::vertex(q, g.mul(x, y)));
  std::mt19937_64 rng(11);
  const PathVector one = PathVector::vertex(q, 0);
  for (int i = 0; i < 20; ++i) {
    const PathVector x = random_element(q, 3, rng);
    CHECK(one * x == x);
    CHECK(x * one == x);
  }
}

TEST_CASE("arrow coproduct, counit and antipode") {
  const auto q = make_jordan_quiver(Field(3), 3);
  const FiniteGroup& g = q->group();
  for (const Arrow& a : q->arrows()) {
    const PathVector x = PathVector::arrow(q, a);
    TensorVector expected(q);
    expected.add_term(Path{a.source, {q->label_of(a)}}, Path{a.source, {}}, q->field().one());
    expected.add_term(Path{q->target(a), {}}, Path{a.source, {q->label_of(a)}}, q->field().one());
    CHECK(comultiply(x) == expected);
    CHECK(counit(x).is_zero());
    const PathVector s = -(PathVector::vertex(q, g.inv(q->target(a))) * x * PathVector::vertex(q, g.inv(a.source)));
    CHECK(antipode(x) == s);
  }
  CHECK(counit(PathVector::vertex(q, 2)).is_one());
  CHECK(antipode(PathVector::vertex(q, 1)) == PathVector::vertex(q, 2));
}

TEST_CASE("power formulas in the Jordan quiver") {
  for (std::uint32_t p : {0u, 5u}) {
    const auto q = p ? make_jordan_quiver(Field(p), p) : make_jordan_quiver(Field(0), 13, Closure::Unchecked);
    const auto gens = GeneratorSet::arrows(q, {"a", "b"});
    PathVector a = PathVector::vertex(q, 0), b = a;
    for (std::size_t l = 1; l <= 6; ++l) {
      a = a * gens.value(0);
      b = b * gens.value(1);
      const Scalar fact = q->field().from_integer(factorial(unsigned(l)));
      CHECK(a.coefficient(Path{0, std::vector<ArrowLabel>(l, 0)}) == fact);
      CHECK(b.coefficient(Path{0, std::vector<ArrowLabel>(l, 1)}) == fact);
    }
  }
}

TEST_CASE("a^2 vanishes in characteristic 2 while b^2 does not") {
  const auto q = make_jordan_quiver(Field(2), 2);
  const auto gens = GeneratorSet::arrows(q, {"a", "b"});
  CHECK((gens.value(0) * gens.value(0)).is_zero());
  CHECK(!(gens.value(1) * gens.value(1)).is_zero());
  CHECK(gens.value(0) * gens.value(1) != gens.value(1) * gens.value(0));
}

TEST_CASE("product is independent of the thread count") {
  const auto q = make_jordan_quiver(Field(5), 5);
  std::mt19937_64 rng(5);
  const PathVector x = random_element(q, 4, rng) + random_element(q, 4, rng);
  const PathVector y = random_element(q, 4, rng) + random_element(q, 4, rng);
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  const PathVector serial = x * y;
  omp_set_num_threads(4);
  CHECK(x * y == serial);
  omp_set_num_threads(threads);
  CHECK(serial == multiply_reference(x, y));
}

TEST_CASE("Hopf axioms hold on random elements") {
  for (const auto& q : {make_jordan_quiver(Field(2), 2), make_jordan_quiver(Field(3), 3), s3_sign_quiver()}) {
    const AxiomReport report = check_hopf_axioms(q, 3, 40, 17);
    for (const auto& r : report.results) {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.checked == 40);
      CHECK(r.failures == 0);
    }
    CHECK(report.pass());
  }
}

TEST_CASE("rendering") {
  const auto q = make_jordan_quiver(Field(3), 3);
  PathVector x = PathVector::path(q, Path{0, {1, 0}}, Field(3).from_int(2));
  x += PathVector::vertex(q, 1);
  CHECK(x.to_string() == "v(g) + 2*[e(g^2;1;g), e(g;2;1)]");
  CHECK(PathVector(q).to_string() == "0");
  CHECK(render_path(*q, Path{2, {}}) == "v(g^2)");
}
