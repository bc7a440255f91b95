#include "schauder/functions.hpp"

#include "schauder/errors.hpp"

namespace schauder {

Point::Point(std::initializer_list<double> xs) {
  if (xs.size() > kMaxDim) throw InputError("points have at most 3 coordinates");
  std::size_t i = 0;
  for (double x : xs) coords_[i++] = x;
  dim_ = xs.size();
}

const VectorFn* FunctionBundle::partial(const MultiIndex& beta) const {
  bool all_zero = true;
  for (int b : beta) all_zero = all_zero && b == 0;
  if (all_zero) return &value;
  auto it = partials.find(beta);
  return it == partials.end() ? nullptr : &it->second;
}

FunctionBundle lift(const ScalarHandle& f) {
  FunctionBundle out([g = f.value](const Point& x) { return ValueVector{g(x)}; });
  for (std::size_t k = 0; k < f.derivatives.size(); ++k) {
    out.partials[MultiIndex{static_cast<int>(k + 1)}] =
        [g = f.derivatives[k]](const Point& x) { return ValueVector{g(x)}; };
  }
  return out;
}

FunctionBundle coordinate(const FunctionBundle& f, std::size_t i) {
  auto project = [i](const VectorFn& g) -> VectorFn {
    return [g, i](const Point& x) { return ValueVector{coordinate_functional(i, g(x))}; };
  };
  FunctionBundle out(project(f.value));
  for (const auto& [beta, g] : f.partials) out.partials[beta] = project(g);
  return out;
}

FunctionBundle stack(const std::vector<FunctionBundle>& components) {
  if (components.empty()) throw InputError("cannot stack zero components");
  auto stack_fns = [](std::vector<VectorFn> fns) -> VectorFn {
    return [fns = std::move(fns)](const Point& x) {
      ValueVector out(fns.size());
      for (std::size_t i = 0; i < fns.size(); ++i) {
        ValueVector c = fns[i](x);
        if (c.size() != 1) throw InputError("stack expects one-component functions");
        out[i] = c[0];
      }
      return out;
    };
  };
  std::vector<VectorFn> values;
  for (const auto& c : components) values.push_back(c.value);
  FunctionBundle out(stack_fns(values));
  for (const auto& [beta, g] : components.front().partials) {
    std::vector<VectorFn> fns;
    for (const auto& c : components) {
      const VectorFn* d = c.partial(beta);
      if (d == nullptr) break;
      fns.push_back(*d);
    }
    if (fns.size() == components.size()) out.partials[beta] = stack_fns(std::move(fns));
  }
  return out;
}

FunctionBundle combine(Scalar a, const FunctionBundle& f, const FunctionBundle& g) {
  auto mix = [a](const VectorFn& u, const VectorFn& v) -> VectorFn {
    return [a, u, v](const Point& x) { return axpy(a, u(x), v(x)); };
  };
  FunctionBundle out(mix(f.value, g.value));
  for (const auto& [beta, fd] : f.partials) {
    if (const VectorFn* gd = g.partial(beta)) out.partials[beta] = mix(fd, *gd);
  }
  return out;
}

}  // namespace schauder
