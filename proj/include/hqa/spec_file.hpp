#ifndef HQA_SPEC_FILE_HPP
#define HQA_SPEC_FILE_HPP

#include "hqa/nichols.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hqa {

/// Validation failure; every entry reads "$.json.path: message".
class SpecError : public std::runtime_error {
public:
  explicit SpecError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

private:
  std::vector<std::string> errors_;
};

/// A validated configuration: field, group, distinguished element, module,
/// the resulting quiver and the named generators.
struct SpecFile {
  Field field;
  QuiverPtr quiver;
  Element distinguished = 0;
  bool cyclic = false;
  GeneratorSet generators;
  /// Optional lifting parameters (lambda, mu, nu) keyed by name.
  std::map<std::string, Scalar> parameters;

  const FiniteGroup& group() const { return quiver->group(); }
};

SpecFile parse_spec(const std::string& text);
SpecFile load_spec(const std::string& path);

} // namespace hqa

#endif
