#ifndef HQA_AXIOMS_HPP
#define HQA_AXIOMS_HPP

#include "hqa/path.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hqa {

/// Random combination of 1 to 3 paths of length <= max_degree with nonzero coefficients.
PathVector random_element(const QuiverPtr& q, std::size_t max_degree, std::mt19937_64& rng);

struct AxiomResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure; // rendered operands of the first failing sample
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool pass() const;
};

/// Checks associativity, agreement of multiply with multiply_reference under
/// both parenthesizations, coassociativity, the counit laws, Delta(xy) =
/// Delta(x)Delta(y) and both antipode laws on `samples` seeded random triples.
AxiomReport check_hopf_axioms(const QuiverPtr& q, std::size_t max_degree, std::size_t samples,
                              std::uint64_t seed);

} // namespace hqa

#endif
