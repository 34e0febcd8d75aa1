#include "hqa/quiver.hpp"

#include <deque>

namespace hqa {

YDModule::YDModule(const FiniteGroup& group, const CentralizerData& cdata, Field field,
                   std::vector<std::string> basis_names,
                   const std::vector<ModuleGenerator>& generators, Closure closure)
    : field_(field), names_(std::move(basis_names)), actions_(group.order()) {
  const std::size_t dim = names_.size();
  if (dim == 0)
    throw ModuleError("module must have positive dimension");
  for (const auto& gen : generators) {
    if (gen.element >= group.order())
      throw ModuleError("module generator element out of range");
    if (!cdata.contains(gen.element))
      throw ModuleError("module generator " + group.label(gen.element) +
                        " is not in the centralizer of " + group.label(cdata.distinguished()));
    if (gen.action.rows() != dim || gen.action.cols() != dim)
      throw ModuleError("action matrix of " + group.label(gen.element) + " has shape " +
                        std::to_string(gen.action.rows()) + "x" + std::to_string(gen.action.cols()) +
                        ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
    if (gen.action.field() != field)
      throw ModuleError("action matrix of " + group.label(gen.element) + " uses another field");
    if (closure == Closure::Checked && !gen.action.invertible())
      throw ModuleError("action matrix of " + group.label(gen.element) + " is singular");
  }

  // Breadth-first closure over the Cayley graph of Z(g) on the generators.
  actions_[group.identity()] = Matrix::identity(field, dim);
  std::deque<Element> queue{group.identity()};
  while (!queue.empty()) {
    const Element z = queue.front();
    queue.pop_front();
    for (const auto& gen : generators) {
      const Element zs = group.mul(z, gen.element);
      Matrix product = *actions_[z] * gen.action;
      if (!actions_[zs]) {
        actions_[zs] = std::move(product);
        queue.push_back(zs);
      } else if (closure == Closure::Checked && *actions_[zs] != product) {
        throw ModuleError("closure inconsistency: action(" + group.label(z) + ")*action(" +
                          group.label(gen.element) + ") = " + product.to_string() +
                          " differs from action(" + group.label(zs) + ") = " +
                          actions_[zs]->to_string());
      }
    }
  }
  for (Element z : cdata.members())
    if (!actions_[z])
      throw ModuleError("module generators do not generate the centralizer: no action for " +
                        group.label(z));
}

const Matrix& YDModule::action(Element z) const {
  if (z >= actions_.size() || !actions_[z])
    throw ModuleError("no module action for element " + std::to_string(z));
  return *actions_[z];
}

HopfQuiver::HopfQuiver(FiniteGroup group, Element g, YDModule module)
    : group_(std::move(group)), cdata_(group_, g), module_(std::move(module)) {
  const std::size_t n = group_.order();
  const std::size_t r = cdata_.num_cosets();
  const std::size_t dim = module_.dim();
  for (Element h = 0; h < n; ++h)
    for (std::uint32_t c = 0; c < r; ++c)
      for (std::uint32_t i = 0; i < dim; ++i)
        arrows_.push_back({h, c, i});

  // (h (x) m_i (x) k) . l = hl (x) m_i.l' (x) k' where kl = l'k'.
  right_table_.resize(num_labels() * n);
  for (std::uint32_t c = 0; c < r; ++c) {
    const Element k = cdata_.coset_reps()[c];
    for (Element l = 0; l < n; ++l) {
      const auto& f = cdata_.factorize(group_.mul(k, l));
      const Matrix& m = module_.action(f.center);
      for (std::uint32_t i = 0; i < dim; ++i) {
        auto& terms = right_table_[std::size_t(label(c, i)) * n + l];
        for (std::uint32_t j = 0; j < dim; ++j)
          if (!m(i, j).is_zero())
            terms.push_back({label(std::uint32_t(f.coset), j), m(i, j)});
      }
    }
  }
}

std::vector<Arrow> HopfQuiver::out_arrows(Element h) const {
  std::vector<Arrow> out;
  for (const auto& a : arrows_)
    if (a.source == h)
      out.push_back(a);
  return out;
}

std::vector<Arrow> HopfQuiver::in_arrows(Element h) const {
  std::vector<Arrow> out;
  for (const auto& a : arrows_)
    if (target(a) == h)
      out.push_back(a);
  return out;
}

Arrow HopfQuiver::act_left(Element l, const Arrow& a) const {
  return {group_.mul(l, a.source), a.coset, a.basis};
}

std::vector<std::pair<Arrow, Scalar>> HopfQuiver::act_right(const Arrow& a, Element l) const {
  std::vector<std::pair<Arrow, Scalar>> out;
  const Element src = group_.mul(a.source, l);
  for (const auto& t : right_action(label_of(a), l))
    out.emplace_back(arrow(src, t.label), t.coeff);
  return out;
}

std::string HopfQuiver::render_arrow(const Arrow& a) const {
  return "e(" + group_.label(target(a)) + ";" + std::to_string(a.basis + 1) + ";" +
         group_.label(a.source) + ")";
}

QuiverPtr build_quiver(FiniteGroup group, Element g, YDModule module) {
  return std::make_shared<const HopfQuiver>(std::move(group), g, std::move(module));
}

QuiverPtr make_jordan_quiver(Field field, std::size_t n, Closure closure) {
  FiniteGroup group = make_cyclic(n);
  const Element g = n > 1 ? 1 : 0;
  CentralizerData cdata(group, g);
  Matrix jordan(field, 2, 2);
  jordan(0, 0) = field.one();
  jordan(1, 0) = field.one();
  jordan(1, 1) = field.one();
  YDModule module(group, cdata, field, {"v1", "v2"}, {{g, jordan}}, closure);
  return build_quiver(std::move(group), g, std::move(module));
}

} // namespace hqa
