#include "hqa/freealg.hpp"

namespace hqa {

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i])
      ++j;
    if (!out.empty())
      out += "*";
    out += names.at(w[i]);
    if (j - i > 1)
      out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<Word> words_of_length(std::size_t m, std::size_t d) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Word> next;
    next.reserve(out.size() * m);
    for (const Word& w : out)
      for (std::size_t y = 0; y < m; ++y) {
        Word x = w;
        x.push_back(std::uint16_t(y));
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

FreePoly FreePoly::monomial(Field field, Word w, const Scalar& c) {
  FreePoly f(field);
  f.add_term(w, c);
  return f;
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
  if (c.characteristic() != field_.characteristic())
    throw FieldError("coefficient from a different field");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

bool FreePoly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

FreePoly FreePoly::component(std::size_t degree) const {
  FreePoly out(field_);
  for (const auto& [w, c] : terms_)
    if (w.size() == degree)
      out.terms_.emplace(w, c);
  return out;
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  for (const auto& [w, c] : o.terms_)
    add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
  for (const auto& [w, c] : o.terms_)
    add_term(w, -c);
  return *this;
}

FreePoly& FreePoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_)
    v *= c;
  return *this;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  FreePoly out(a.field_);
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, c * d);
    }
  return out;
}

FreePoly FreePoly::substitute(const std::vector<FreePoly>& images) const {
  FreePoly out(field_);
  for (const auto& [w, c] : terms_) {
    FreePoly t = monomial(field_, {}, c);
    for (auto letter : w)
      t = t * images.at(letter);
    out += t;
  }
  return out;
}

std::string FreePoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    if (w.empty()) {
      Scalar mag = c.is_negative() ? -c : c;
      out += c.is_negative() ? (first ? "-" : " - ") : (first ? "" : " + ");
      out += mag.to_string();
    } else {
      out += coefficient_prefix(c, first) + render_word(w, names);
    }
    first = false;
  }
  return out;
}

GradedIdeal::GradedIdeal(Field field, std::size_t num_letters, std::vector<FreePoly> relators,
                         std::size_t max_degree)
    : field_(field), m_(num_letters), max_degree_(max_degree) {
  if (m_ == 0)
    throw IdealError("the free algebra needs at least one letter");
  bool unit_relator = false;
  for (auto& r : relators) {
    if (r.field() != field_)
      throw FieldError("relator over a different field");
    if (r.is_zero())
      continue;
    if (!r.is_homogeneous())
      throw IdealError("relator " + r.to_string(std::vector<std::string>(m_, "x")) +
                       " is not homogeneous");
    for (const auto& [w, c] : r.terms())
      for (auto letter : w)
        if (letter >= m_)
          throw IdealError("relator uses letter index " + std::to_string(letter) +
                           " beyond the " + std::to_string(m_) + " generators");
    if (r.degree() == 0)
      unit_relator = true;
    relators_.push_back(std::move(r));
  }

  standard_.resize(max_degree_ + 1);
  transition_.resize(max_degree_ + 1);
  if (unit_relator)
    return;
  standard_[0] = {Word{}};

  for (std::size_t d = 1; d <= max_degree_; ++d) {
    const auto& prev = standard_[d - 1];
    SparseEchelon<std::size_t> ech;
    for (const auto& r : relators_) {
      const std::size_t e = r.degree();
      if (e > d)
        continue;
      for (std::size_t u = 0; u < standard_[d - e].size(); ++u) {
        SparseVec<std::size_t> row;
        for (const auto& [w, c] : r.terms()) {
          // Image of u * w[0..e-1) in A_{d-1}, then tensor with the last letter.
          SparseVec<std::size_t> coords{{u, field_.one()}};
          for (std::size_t k = 0; k + 1 < e; ++k) {
            SparseVec<std::size_t> next;
            for (const auto& [i, v] : coords)
              axpy(next, v, transition_[d - e + k + 1][i * m_ + w[k]]);
            coords = std::move(next);
          }
          for (const auto& [i, v] : coords) {
            SparseVec<std::size_t> single{{i * m_ + w[e - 1], v * c}};
            axpy(row, field_.one(), single);
          }
        }
        ech.insert(std::move(row));
      }
    }

    std::vector<std::size_t> new_index(prev.size() * m_, std::size_t(-1));
    std::vector<Word> words;
    for (std::size_t key = 0; key < prev.size() * m_; ++key) {
      if (ech.is_pivot(key))
        continue;
      new_index[key] = words.size();
      Word w = prev[key / m_];
      w.push_back(std::uint16_t(key % m_));
      words.push_back(std::move(w));
    }
    auto& trans = transition_[d];
    trans.resize(prev.size() * m_);
    for (std::size_t key = 0; key < prev.size() * m_; ++key) {
      SparseVec<std::size_t> unit{{key, field_.one()}};
      ech.reduce(unit);
      for (const auto& [k, v] : unit)
        trans[key].emplace(new_index[k], v);
    }
    standard_[d] = std::move(words);
  }
}

std::size_t GradedIdeal::ideal_dim(std::size_t d) const {
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i)
    total *= m_;
  return total - quotient_dim(d);
}

SparseVec<std::size_t> GradedIdeal::normal_form_coords(const Word& w) const {
  if (w.size() > max_degree_)
    throw IdealError("word of length " + std::to_string(w.size()) + " exceeds the truncation degree " +
                     std::to_string(max_degree_));
  SparseVec<std::size_t> coords;
  if (standard_[0].empty())
    return coords;
  coords.emplace(0, field_.one());
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] >= m_)
      throw IdealError("letter index " + std::to_string(w[k]) + " out of range");
    SparseVec<std::size_t> next;
    for (const auto& [i, v] : coords)
      axpy(next, v, transition_[k + 1][i * m_ + w[k]]);
    coords = std::move(next);
  }
  return coords;
}

FreePoly GradedIdeal::normal_form(const FreePoly& f) const {
  FreePoly out(field_);
  for (const auto& [w, c] : f.terms()) {
    const auto coords = normal_form_coords(w);
    for (const auto& [i, v] : coords)
      out.add_term(standard_[w.size()][i], v * c);
  }
  return out;
}

} // namespace hqa
