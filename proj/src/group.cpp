#include "hqa/group.hpp"

#include <algorithm>
#include <sstream>

namespace hqa {

std::string GroupViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
  case Kind::Shape:
    os << "table is not square (row " << x << ")";
    break;
  case Kind::Range:
    os << "entry (" << x << "," << y << ") out of range";
    break;
  case Kind::Identity:
    os << "index 0 is not an identity for element " << x;
    break;
  case Kind::Inverse:
    os << "element " << x << " has no two-sided inverse";
    break;
  case Kind::Associativity:
    os << "(xy)z != x(yz) for (x,y,z) = (" << x << "," << y << "," << z << ")";
    break;
  }
  return os.str();
}

std::vector<GroupViolation> validate_group(const std::vector<std::vector<Element>>& table) {
  using Kind = GroupViolation::Kind;
  std::vector<GroupViolation> out;
  const std::size_t n = table.size();
  if (n == 0) {
    out.push_back({Kind::Shape, 0, 0, 0});
    return out;
  }
  bool bad_shape = false;
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) {
      out.push_back({Kind::Shape, Element(x), 0, 0});
      bad_shape = true;
      continue;
    }
    for (std::size_t y = 0; y < n; ++y)
      if (table[x][y] >= n) {
        out.push_back({Kind::Range, Element(x), Element(y), 0});
        bad_shape = true;
      }
  }
  if (bad_shape)
    return out;

  for (std::size_t x = 0; x < n; ++x)
    if (table[0][x] != x || table[x][0] != x)
      out.push_back({Kind::Identity, Element(x), 0, 0});
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y)
      found = table[x][y] == 0 && table[y][x] == 0;
    if (!found)
      out.push_back({Kind::Inverse, Element(x), 0, 0});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          out.push_back({Kind::Associativity, Element(x), Element(y), Element(z)});
  return out;
}

FiniteGroup::FiniteGroup(std::vector<std::string> labels,
                         const std::vector<std::vector<Element>>& table)
    : labels_(std::move(labels)) {
  auto violations = validate_group(table);
  if (table.size() != labels_.size())
    throw GroupError("label count " + std::to_string(labels_.size()) +
                     " does not match table size " + std::to_string(table.size()));
  if (!violations.empty()) {
    std::string msg = "invalid group table:";
    for (std::size_t i = 0; i < violations.size() && i < 5; ++i)
      msg += " " + violations[i].describe() + ";";
    throw GroupError(msg);
  }
  const std::size_t n = table.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      table_[x * n + y] = table[x][y];
      if (table[x][y] == 0)
        inverse_[x] = Element(y);
    }
}

Element FiniteGroup::pow(Element x, long long k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Element result = identity();
  Element base = x;
  while (k > 0) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Element> FiniteGroup::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    return std::nullopt;
  return Element(it - labels_.begin());
}

std::size_t FiniteGroup::element_order(Element x) const {
  std::size_t k = 1;
  for (Element y = x; y != identity(); y = mul(y, x))
    ++k;
  return k;
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0)
    throw GroupError("cyclic group of order 0");
  std::vector<std::string> labels(n);
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = Element((i + j) % n);
  }
  return FiniteGroup(std::move(labels), table);
}

CentralizerData::CentralizerData(const FiniteGroup& group, Element g) : g_(g) {
  const std::size_t n = group.order();
  if (g >= n)
    throw GroupError("distinguished element " + std::to_string(g) + " out of range");
  in_center_.assign(n, false);
  for (Element x = 0; x < n; ++x)
    if (group.commute(x, g)) {
      members_.push_back(x);
      in_center_[x] = true;
    }

  // Right cosets Z(g)x; the representative is the least index met.
  std::vector<long> coset_of(n, -1);
  for (Element x = 0; x < n; ++x) {
    if (coset_of[x] >= 0)
      continue;
    const auto c = static_cast<long>(reps_.size());
    reps_.push_back(x);
    for (Element z : members_)
      coset_of[group.mul(z, x)] = c;
  }
  factor_.resize(n);
  for (Element x = 0; x < n; ++x) {
    const auto c = static_cast<std::size_t>(coset_of[x]);
    const Element k = reps_[c];
    factor_[x] = Factorization{group.mul(x, group.inv(k)), c, k};
  }
  for (Element k : reps_)
    conj_.push_back(group.mul(group.mul(group.inv(k), g), k));
}

} // namespace hqa
