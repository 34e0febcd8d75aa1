#include "hqa/spec_file.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace hqa {

namespace {

using nlohmann::json;

std::string join_errors(const std::vector<std::string>& errors) {
  std::string out = "invalid spec file";
  for (const auto& e : errors)
    out += "\n  " + e;
  return out;
}

/// Collects errors; `fail` records and returns false so callers can bail out per section.
struct Checker {
  std::vector<std::string> errors;

  bool fail(const std::string& path, const std::string& message) {
    errors.push_back(path + ": " + message);
    return false;
  }

  void raise() const {
    if (!errors.empty())
      throw SpecError(errors);
  }
};

std::optional<Scalar> parse_scalar(const json& j, const Field& field, const std::string& path, Checker& ck) {
  try {
    if (j.is_number_integer())
      return field.from_int(j.get<long long>());
    if (j.is_string())
      return field.parse(j.get<std::string>());
    ck.fail(path, "expected an integer or a string like \"1/2\"");
  } catch (const FieldError& e) {
    ck.fail(path, e.what());
  }
  return std::nullopt;
}

std::optional<Element> parse_element(const json& j, const FiniteGroup& group, const std::string& path,
                                     Checker& ck) {
  if (j.is_string()) {
    if (auto e = group.find(j.get<std::string>()))
      return e;
    ck.fail(path, "unknown element label '" + j.get<std::string>() + "'");
    return std::nullopt;
  }
  if (j.is_number_unsigned() && j.get<std::uint64_t>() < group.order())
    return Element(j.get<std::uint64_t>());
  ck.fail(path, "expected an element label");
  return std::nullopt;
}

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

/// Cyclic labels g^k and the identity "1" are allowed alongside identifiers.
bool is_element_label(const std::string& s) {
  if (s == "1" || is_name(s))
    return true;
  const auto caret = s.find('^');
  if (caret == std::string::npos || !is_name(s.substr(0, caret)) || caret + 1 == s.size())
    return false;
  for (std::size_t i = caret + 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

std::optional<FiniteGroup> parse_group(const json& j, Checker& ck) {
  if (!j.is_object())
    return ck.fail("$.group", "expected an object"), std::nullopt;
  if (j.contains("cyclic")) {
    const json& n = j["cyclic"];
    if (!n.is_number_unsigned() || n.get<std::uint64_t>() == 0 || n.get<std::uint64_t>() > 4096)
      return ck.fail("$.group.cyclic", "expected an integer between 1 and 4096"), std::nullopt;
    return make_cyclic(n.get<std::size_t>());
  }
  if (!j.contains("table"))
    return ck.fail("$.group", "expected \"cyclic\" or \"table\""), std::nullopt;
  const json& labels = j.value("labels", json());
  if (!labels.is_array() || labels.empty())
    return ck.fail("$.group.labels", "expected a nonempty array of element labels"), std::nullopt;
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string path = "$.group.labels[" + std::to_string(i) + "]";
    if (!labels[i].is_string() || !is_element_label(labels[i].get<std::string>()))
      return ck.fail(path, "labels must be identifiers"), std::nullopt;
    if (!seen.insert(labels[i].get<std::string>()).second)
      return ck.fail(path, "duplicate label"), std::nullopt;
    names.push_back(labels[i].get<std::string>());
  }
  const json& table = j["table"];
  if (!table.is_array() || table.size() != names.size())
    return ck.fail("$.group.table", "expected " + std::to_string(names.size()) + " rows"), std::nullopt;
  std::vector<std::vector<Element>> rows;
  bool ok = true;
  for (std::size_t x = 0; x < table.size(); ++x) {
    const std::string path = "$.group.table[" + std::to_string(x) + "]";
    if (!table[x].is_array() || table[x].size() != names.size()) {
      ok = ck.fail(path, "expected " + std::to_string(names.size()) + " entries");
      continue;
    }
    std::vector<Element> row;
    for (std::size_t y = 0; y < names.size(); ++y) {
      const json& v = table[x][y];
      const std::string epath = path + "[" + std::to_string(y) + "]";
      if (v.is_number_unsigned() && v.get<std::uint64_t>() < names.size()) {
        row.push_back(Element(v.get<std::uint64_t>()));
      } else if (v.is_string() && seen.count(v.get<std::string>())) {
        row.push_back(Element(std::find(names.begin(), names.end(), v.get<std::string>()) - names.begin()));
      } else {
        ok = ck.fail(epath, "expected an element index or label");
        row.push_back(0);
      }
    }
    rows.push_back(std::move(row));
  }
  if (!ok)
    return std::nullopt;
  const auto violations = validate_group(rows);
  if (!violations.empty()) {
    for (std::size_t i = 0; i < violations.size() && i < 5; ++i)
      ck.fail("$.group.table", violations[i].describe());
    return std::nullopt;
  }
  return FiniteGroup(names, rows);
}

} // namespace

SpecError::SpecError(std::vector<std::string> errors)
    : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

SpecFile parse_spec(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError({std::string("$: ") + e.what()});
  }
  Checker ck;
  if (!root.is_object())
    throw SpecError({"$: expected an object"});

  // Field
  std::optional<Field> field;
  if (!root.contains("field") || !root["field"].is_object() || !root["field"].contains("characteristic")) {
    ck.fail("$.field.characteristic", "missing");
  } else {
    const json& c = root["field"]["characteristic"];
    if (!c.is_number_unsigned() || c.get<std::uint64_t>() > 0xFFFFFFFFull)
      ck.fail("$.field.characteristic", "expected a nonnegative integer");
    else {
      try {
        field = Field(std::uint32_t(c.get<std::uint64_t>()));
      } catch (const FieldError& e) {
        ck.fail("$.field.characteristic", e.what());
      }
    }
  }

  // Group and distinguished element
  std::optional<FiniteGroup> group;
  if (!root.contains("group"))
    ck.fail("$.group", "missing");
  else
    group = parse_group(root["group"], ck);
  ck.raise();

  const bool cyclic = root["group"].contains("cyclic");
  Element g = group->order() > 1 ? 1 : 0;
  if (root.contains("distinguished")) {
    if (auto e = parse_element(root["distinguished"], *group, "$.distinguished", ck))
      g = *e;
  } else if (!cyclic) {
    ck.fail("$.distinguished", "missing (required for table groups)");
  }
  ck.raise();
  const CentralizerData cdata(*group, g);

  // Module
  if (!root.contains("module") || !root["module"].is_object())
    throw SpecError({"$.module: missing"});
  const json& mod = root["module"];
  std::size_t dim = 0;
  if (!mod.contains("dim") || !mod["dim"].is_number_unsigned() || mod["dim"].get<std::uint64_t>() == 0 ||
      mod["dim"].get<std::uint64_t>() > 64)
    throw SpecError({"$.module.dim: expected an integer between 1 and 64"});
  dim = mod["dim"].get<std::size_t>();
  std::vector<std::string> basis;
  if (mod.contains("basis")) {
    const json& b = mod["basis"];
    if (!b.is_array() || b.size() != dim)
      ck.fail("$.module.basis", "expected " + std::to_string(dim) + " names");
    else
      for (const auto& x : b)
        basis.push_back(x.is_string() ? x.get<std::string>() : "?");
  } else {
    for (std::size_t i = 0; i < dim; ++i)
      basis.push_back("m" + std::to_string(i + 1));
  }
  std::vector<ModuleGenerator> mgens;
  const json& mg = mod.value("generators", json::array());
  if (!mg.is_array())
    ck.fail("$.module.generators", "expected an array");
  for (std::size_t k = 0; mg.is_array() && k < mg.size(); ++k) {
    const std::string path = "$.module.generators[" + std::to_string(k) + "]";
    const json& entry = mg[k];
    if (!entry.is_object() || !entry.contains("element") || !entry.contains("matrix")) {
      ck.fail(path, "expected {\"element\", \"matrix\"}");
      continue;
    }
    auto e = parse_element(entry["element"], *group, path + ".element", ck);
    const json& m = entry["matrix"];
    if (!m.is_array() || m.size() != dim) {
      ck.fail(path + ".matrix", "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
      continue;
    }
    Matrix a(*field, dim, dim);
    bool ok = true;
    for (std::size_t i = 0; i < dim; ++i) {
      if (!m[i].is_array() || m[i].size() != dim) {
        ok = ck.fail(path + ".matrix[" + std::to_string(i) + "]",
                     "expected " + std::to_string(dim) + " entries");
        continue;
      }
      for (std::size_t j = 0; j < dim; ++j) {
        auto s = parse_scalar(m[i][j], *field,
                              path + ".matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]", ck);
        if (s)
          a(i, j) = *s;
        else
          ok = false;
      }
    }
    if (e && ok)
      mgens.push_back({*e, std::move(a)});
  }
  ck.raise();

  std::optional<YDModule> module;
  try {
    module.emplace(*group, cdata, *field, basis, mgens);
  } catch (const ModuleError& e) {
    throw SpecError({std::string("$.module: ") + e.what()});
  }
  QuiverPtr quiver = build_quiver(*group, g, std::move(*module));

  // Generators
  GeneratorSet gens(quiver);
  std::set<std::string> reserved(quiver->group().labels().begin(), quiver->group().labels().end());
  reserved.insert({"g", "lambda", "mu", "nu", "v", "e"});
  auto add_generator = [&](const std::string& path, const std::string& name, PathVector value) {
    if (reserved.count(name))
      return (void)ck.fail(path + ".name", "'" + name + "' is reserved for group elements or parameters");
    try {
      gens.add(name, std::move(value));
    } catch (const NicholsError& e) {
      ck.fail(path, e.what());
    }
  };
  auto arrow_at = [&](const json& entry, const std::string& path) -> std::optional<Arrow> {
    const json coset = entry.value("coset", json(std::uint64_t(0)));
    const json basis_index = entry.value("basis", json());
    if (!coset.is_number_unsigned() || coset.get<std::uint64_t>() >= cdata.num_cosets())
      return ck.fail(path + ".coset", "expected a coset index below " + std::to_string(cdata.num_cosets())),
             std::nullopt;
    if (!basis_index.is_number_unsigned() || basis_index.get<std::uint64_t>() >= dim)
      return ck.fail(path + ".basis", "expected a basis index below " + std::to_string(dim)), std::nullopt;
    return Arrow{group->identity(), std::uint32_t(coset.get<std::uint64_t>()),
                 std::uint32_t(basis_index.get<std::uint64_t>())};
  };

  if (!root.contains("generators")) {
    const auto out = quiver->out_arrows(group->identity());
    for (const auto& a : out) {
      std::string name = basis[a.basis];
      if (cdata.num_cosets() > 1)
        name += "_" + std::to_string(a.coset);
      add_generator("$.module.basis", name, PathVector::arrow(quiver, a));
    }
  } else if (!root["generators"].is_array()) {
    ck.fail("$.generators", "expected an array");
  } else {
    const json& list = root["generators"];
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string path = "$.generators[" + std::to_string(k) + "]";
      const json& entry = list[k];
      if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string()) {
        ck.fail(path, "expected an object with a \"name\"");
        continue;
      }
      const std::string name = entry["name"].get<std::string>();
      if (entry.contains("combination")) {
        const json& combo = entry["combination"];
        if (!combo.is_array() || combo.empty()) {
          ck.fail(path + ".combination", "expected a nonempty array");
          continue;
        }
        PathVector value(quiver);
        bool ok = true;
        for (std::size_t t = 0; t < combo.size(); ++t) {
          const std::string tpath = path + ".combination[" + std::to_string(t) + "]";
          auto a = arrow_at(combo[t], tpath);
          auto c = parse_scalar(combo[t].value("coeff", json(1)), *field, tpath + ".coeff", ck);
          if (!a || !c) {
            ok = false;
            continue;
          }
          value += PathVector::arrow(quiver, *a) * *c;
        }
        if (ok)
          add_generator(path, name, std::move(value));
      } else if (auto a = arrow_at(entry, path)) {
        add_generator(path, name, PathVector::arrow(quiver, *a));
      }
    }
  }
  if (gens.size() == 0)
    ck.fail("$.generators", "at least one generator is required");

  // Lifting parameters
  std::map<std::string, Scalar> params;
  if (root.contains("lifting")) {
    const json& lift = root["lifting"];
    if (!lift.is_object())
      ck.fail("$.lifting", "expected an object");
    else
      for (const auto& [key, value] : lift.items()) {
        if (key != "lambda" && key != "mu" && key != "nu") {
          ck.fail("$.lifting." + key, "unknown parameter (expected lambda, mu or nu)");
          continue;
        }
        if (auto s = parse_scalar(value, *field, "$.lifting." + key, ck))
          params.emplace(key, *s);
      }
  }
  ck.raise();

  return SpecFile{*field, quiver, g, cyclic, std::move(gens), std::move(params)};
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw SpecError({"$: cannot open '" + path + "'"});
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

} // namespace hqa
