#include "oracles.hpp"

#include <doctest.h>

using namespace hqa;

namespace {

const std::vector<std::string> ab = {"a", "b"};

FreePoly poly(const Field& f, std::initializer_list<std::pair<Word, long long>> terms) {
  FreePoly out(f);
  for (const auto& [w, c] : terms)
    out.add_term(w, f.from_int(c));
  return out;
}

} // namespace

TEST_CASE("words and deglex order") {
  CHECK(words_of_length(2, 0).size() == 1);
  CHECK(words_of_length(3, 4).size() == 81);
  const auto w = words_of_length(2, 3);
  CHECK(std::is_sorted(w.begin(), w.end(), Deglex{}));
  CHECK(Deglex{}(Word{1}, Word{0, 0}));
  CHECK(Deglex{}(Word{0, 1}, Word{1, 0}));
  CHECK(render_word({}, ab) == "1");
  CHECK(render_word({1, 1, 0}, ab) == "b^2*a");
  CHECK(render_word({0, 1, 0, 1}, ab) == "a*b*a*b");
}

TEST_CASE("polynomial arithmetic") {
  const Field f(3);
  const FreePoly a = FreePoly::monomial(f, {0}), b = FreePoly::monomial(f, {1});
  const FreePoly r = b * a - a * b - a * a * f.parse("1/2");
  CHECK(r.to_string(ab) == "b*a + 2*a*b + a^2");
  CHECK(r.is_homogeneous());
  CHECK(r.degree() == 2);
  CHECK(r.leading_word() == Word{1, 0});
  const FreePoly mixed = a * a * a - FreePoly::monomial(f, {});
  CHECK(!mixed.is_homogeneous());
  CHECK(mixed.component(0).to_string(ab) == "2");
  CHECK((r - r).is_zero());
  const FreePoly c = a + b, d = b;
  CHECK(r.substitute({c, d}) == d * c - c * d - c * c * f.parse("1/2"));
}

TEST_CASE("graded ideal of a^2 in characteristic 2") {
  const Field f(2);
  const GradedIdeal ideal(f, 2, {poly(f, {{{0, 0}, 1}})}, 4);
  for (std::size_t d = 0; d <= 4; ++d)
    CHECK(ideal.ideal_dim(d) == oracle::brute_ideal_dim(f, 2, ideal.relators(), d));
  // The degree-3 component contains a^3, a^2 b and b a^2.
  for (const Word& w : {Word{0, 0, 0}, Word{0, 0, 1}, Word{1, 0, 0}})
    CHECK(ideal.contains(FreePoly::monomial(f, w)));
  CHECK(!ideal.contains(FreePoly::monomial(f, {0, 1, 0})));
  CHECK(ideal.standard_words(2) == std::vector<Word>{{0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("ideal dimensions agree with brute-force spans") {
  struct Case {
    unsigned p;
    std::vector<FreePoly> relators;
  };
  const Field f2(2), f3(3), f5(5);
  const std::vector<Case> cases = {
      {2, {poly(f2, {{{0, 0}, 1}}), poly(f2, {{{1, 1, 0}, 1}, {{0, 1, 1}, 1}, {{0, 1, 0}, 1}}),
           poly(f2, {{{0, 1, 0, 1}, 1}, {{1, 0, 1, 0}, 1}}), poly(f2, {{{1, 1, 1, 1}, 1}})}},
      {3, {poly(f3, {{{1, 0}, 1}, {{0, 1}, -1}, {{0, 0}, 1}}), poly(f3, {{{0, 0, 0}, 1}}),
           poly(f3, {{{1, 1, 1}, 1}})}},
      {5, {poly(f5, {{{1, 0}, 1}, {{0, 1}, -1}, {{0, 0}, 2}})}},
  };
  for (const auto& c : cases) {
    const Field f(c.p);
    const GradedIdeal ideal(f, 2, c.relators, 6);
    for (std::size_t d = 0; d <= 6; ++d) {
      INFO("p = " << c.p << ", degree " << d);
      CHECK(ideal.ideal_dim(d) == oracle::brute_ideal_dim(f, 2, c.relators, d));
      CHECK(ideal.quotient_dim(d) + ideal.ideal_dim(d) == (std::size_t(1) << d));
    }
  }
}

TEST_CASE("normal forms are idempotent and linear") {
  const Field f(3);
  const GradedIdeal ideal(f, 2, {poly(f, {{{1, 0}, 1}, {{0, 1}, -1}, {{0, 0}, 1}})}, 5);
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> coeff(0, 2), letter(0, 1), len(0, 5);
  for (int i = 0; i < 50; ++i) {
    FreePoly x(f), y(f);
    for (int t = 0; t < 4; ++t) {
      Word w(len(rng)), v(len(rng));
      for (auto& l : w)
        l = letter(rng);
      for (auto& l : v)
        l = letter(rng);
      x.add_term(w, f.from_int(coeff(rng)));
      y.add_term(v, f.from_int(coeff(rng)));
    }
    const FreePoly nx = ideal.normal_form(x);
    CHECK(ideal.normal_form(nx) == nx);
    CHECK(ideal.normal_form(x + y) == nx + ideal.normal_form(y));
    CHECK(ideal.contains(x - nx));
    for (const auto& [w, c] : nx.terms()) {
      const auto& std_words = ideal.standard_words(w.size());
      CHECK(std::binary_search(std_words.begin(), std_words.end(), w, Deglex{}));
    }
  }
}

TEST_CASE("degenerate ideals") {
  const Field f(5);
  const GradedIdeal empty(f, 2, {}, 3);
  for (std::size_t d = 0; d <= 3; ++d)
    CHECK(empty.ideal_dim(d) == 0);
  const GradedIdeal unit(f, 2, {FreePoly::monomial(f, {})}, 3);
  for (std::size_t d = 0; d <= 3; ++d)
    CHECK(unit.quotient_dim(d) == 0);
  CHECK_THROWS_AS(GradedIdeal(f, 2, {poly(f, {{{0}, 1}, {{0, 0}, 1}})}, 3), IdealError);
}
