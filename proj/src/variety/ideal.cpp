#include "osculum/variety/ideal.hpp"

#include <stdexcept>

#include "osculum/variety/pullback.hpp"

namespace osculum {

namespace {

std::vector<SparseVec> generated_slice(const ParamVariety& v, int d) {
  const std::size_t N1 = v.ambient();
  std::vector<SparseVec> span;
  for (const auto& g : v.graph_equations()) {
    int dg = g.degree();
    if (dg > d) continue;
    for (const auto& e : monomials_of_degree(N1, d - dg))
      span.push_back(form_coords(MPoly::monomial(e, Rat(1)) * g, d));
  }
  return canonical_basis(span, sym_space(N1, d).dim());
}

}  // namespace

std::vector<SparseVec> ideal_slice(const ParamVariety& v, int d) {
  v.validate();
  if (d < 1) throw std::invalid_argument("ideal degree must be positive");
  if (v.is_implicit()) return generated_slice(v, d);
  auto images = pullback_images(v.coords, d, -1);
  return image_kernel(images, pullback_weights(v.coords, d)).basis;
}

std::vector<SparseVec> ideal_times_linear(const std::vector<SparseVec>& ideal_d,
                                          std::size_t nvars, int d) {
  std::vector<SparseVec> out;
  for (const auto& vec : ideal_d) {
    MPoly p = form_from_coords(vec, nvars, d);
    for (std::size_t j = 0; j < nvars; ++j)
      out.push_back(form_coords(p * MPoly::variable(nvars, j), d + 1));
  }
  return out;
}

bool in_ideal(const ParamVariety& v, const MPoly& p) {
  if (p.is_zero()) return true;
  if (p.nvars() != v.ambient()) throw std::invalid_argument("form in the wrong number of variables");
  if (!p.is_homogeneous()) throw std::invalid_argument("membership needs a homogeneous form");
  if (!v.is_implicit()) return p.substitute(v.coords).is_zero();
  int d = p.degree();
  auto slice = generated_slice(v, d);
  std::size_t base = slice.size();
  slice.push_back(form_coords(p, d));
  return span_rank(slice, sym_space(v.ambient(), d).dim()) == base;
}

VecQ conormal_part(const AdaptedChart& c, const MPoly& p) {
  const std::size_t N1 = c.ambient();
  VecQ grad(N1);
  for (std::size_t j = 0; j < N1; ++j) grad[j] = p.derivative(j).evaluate(c.point);
  VecQ out(c.a);
  for (std::size_t mu = 0; mu < c.a; ++mu)
    for (std::size_t j = 0; j < N1; ++j)
      if (grad[j] != 0) out[mu] += grad[j] * c.change_inverse(j, c.n + 1 + mu);
  return out;
}

namespace {

std::vector<VecQ> gradients(const AdaptedChart& c, const std::vector<SparseVec>& basis, int k) {
  std::vector<VecQ> g;
  for (const auto& v : basis) g.push_back(conormal_part(c, form_from_coords(v, c.ambient(), k)));
  return g;
}

void fill_steps(ConormalFiltration& f, std::size_t a) {
  std::size_t prev = 0;
  for (std::size_t k = 1; k <= f.dims.size(); ++k) {
    if (f.dims[k - 1] > prev) {
      f.degrees.push_back(static_cast<int>(k));
      f.increments.push_back(f.dims[k - 1] - prev);
    }
    prev = f.dims[k - 1];
  }
  f.exhausted = prev == a;
}

}  // namespace

ConormalFiltration conormal_filtration(const ParamVariety& v, const AdaptedChart& c, int D) {
  ConormalFiltration f;
  for (int k = 1; k <= D; ++k)
    f.dims.push_back(span_basis(gradients(c, ideal_slice(v, k), k), c.a).size());
  fill_steps(f, c.a);
  return f;
}

ConormalFiltration conormal_filtration(const ParamVariety& v, const std::vector<Rat>& t0, int D) {
  return conormal_filtration(v, adapt_at_point(v, t0, 2), D);
}

CIVerdict ci_verdict(const ParamVariety& v, const std::vector<Rat>& t0, int D) {
  AdaptedChart c = adapt_at_point(v, t0, 2);
  const std::size_t N1 = v.ambient();
  CIVerdict out;
  ConormalFiltration filt;
  std::vector<SparseVec> prev_ideal;
  std::vector<VecQ> prev_conormal;
  bool injective = true;
  for (int k = 1; k <= D; ++k) {
    CIDegree step;
    step.k = k;
    auto ideal = ideal_slice(v, k);
    step.ideal_dim = ideal.size();
    std::vector<SparseVec> products;
    if (k > 1) products = ideal_times_linear(prev_ideal, N1, k - 1);
    const std::size_t dim_k = sym_space(N1, k).dim();
    step.products_dim = products.empty() ? 0 : span_rank(products, dim_k);
    step.essential = step.ideal_dim - step.products_dim;
    auto grads = gradients(c, ideal, k);
    auto conormal = span_basis(grads, v.a);
    step.conormal_increment = conormal.size() - prev_conormal.size();
    step.kernel_dim = step.essential - step.conormal_increment;
    filt.dims.push_back(conormal.size());
    if (step.kernel_dim > 0) {
      injective = false;
      // Combinations of I_k with differential inside N*_{k-1}.
      const std::size_t m = ideal.size();
      MatQ sys(v.a, m + prev_conormal.size());
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t mu = 0; mu < v.a; ++mu) sys(mu, i) = grads[i][mu];
      for (std::size_t j = 0; j < prev_conormal.size(); ++j)
        for (std::size_t mu = 0; mu < v.a; ++mu) sys(mu, m + j) = -prev_conormal[j][mu];
      std::size_t base = step.products_dim;
      for (const auto& z : kernel(sys)) {
        SparseVec cand;
        VecQ dense(dim_k);
        for (std::size_t i = 0; i < m; ++i)
          if (z[i] != 0)
            for (const auto& [j, x] : ideal[i]) dense[j] += z[i] * x;
        cand = to_sparse(dense);
        if (cand.empty()) continue;
        auto trial = products;
        trial.push_back(cand);
        if (span_rank(trial, dim_k) > base) {
          step.witness = form_from_coords(cand, N1, k);
          break;
        }
      }
    }
    out.per_degree.push_back(std::move(step));
    prev_ideal = std::move(ideal);
    prev_conormal = std::move(conormal);
  }
  fill_steps(filt, v.a);
  out.degrees = filt.degrees;
  out.increments = filt.increments;
  out.exhausted = filt.exhausted;
  out.complete_intersection = injective && filt.exhausted;
  return out;
}

}  // namespace osculum
