#include "osculum/osculate/osculate.hpp"

#include <stdexcept>

#include "osculum/quadsys/quadsys.hpp"
#include "osculum/variety/pullback.hpp"

namespace osculum {

namespace {

std::vector<std::size_t> normal_columns(std::size_t n, std::size_t a, int d) {
  const auto& sp = sym_space(n + a + 1, d);
  std::vector<std::size_t> cols;
  for (std::size_t mu = 0; mu < a; ++mu) {
    Exponent e(n + a + 1, 0);
    e[0] = static_cast<std::uint16_t>(d - 1);
    e[n + 1 + mu] += 1;
    cols.push_back(sp.index(e));
  }
  return cols;
}

OscSpace kernel_space(const AdaptedChart& c, int d, int k, const std::vector<std::size_t>& forced) {
  if (d < 1) throw std::invalid_argument("form degree must be positive");
  if (k < 0) throw std::invalid_argument("osculation order must be nonnegative");
  if (k > c.cap) throw std::invalid_argument("chart cap " + std::to_string(c.cap) +
                                             " is below osculation order " + std::to_string(k));
  auto series = c.coordinate_series();
  for (auto& s : series) s = s.truncated(k);
  auto images = pullback_images(series, d, k);
  OscSpace o;
  o.d = d;
  o.k = k;
  o.n = c.n;
  o.a = c.a;
  o.nvars = c.ambient();
  o.basis = image_kernel(images, pullback_weights(series, d), forced).basis;
  o.stabilized = c.coord_degree > 0 && k >= d * c.coord_degree;
  return o;
}

std::vector<SparseVec> rewrite(const std::vector<SparseVec>& b, std::size_t nvars, int d,
                               const MatQ& m) {
  std::vector<SparseVec> out;
  for (const auto& v : b) out.push_back(form_coords(linear_substitute(form_from_coords(v, nvars, d), m), d));
  return canonical_basis(out, sym_space(nvars, d).dim());
}

}  // namespace

OscSpace osculating_space(const AdaptedChart& c, int d, int k) {
  return kernel_space(c, d, k, {});
}

std::vector<SparseVec> to_original_basis(const AdaptedChart& c, const std::vector<SparseVec>& b,
                                         int d) {
  return rewrite(b, c.ambient(), d, c.change_of_coords);
}

std::vector<SparseVec> to_adapted_basis(const AdaptedChart& c, const std::vector<SparseVec>& b,
                                        int d) {
  return rewrite(b, c.ambient(), d, c.change_inverse);
}

std::size_t expected_dim_316(std::size_t n, std::size_t a, int d, int p) {
  if (p > d) throw std::invalid_argument("formula needs p <= d");
  if (p < 0 || d < 0) throw std::invalid_argument("negative degree");
  return binomial(n + a + d, d) - binomial(n + p, p);
}

DimCheck check_316(const AdaptedChart& c, int d, int p) {
  DimCheck r;
  r.d = d;
  r.order = p;
  r.expected = expected_dim_316(c.n, c.a, d, p);
  r.actual = osculating_space(c, d, p).vector_dim();
  r.pass = r.actual == r.expected;
  return r;
}

DimCheck lower_bound_317(const AdaptedChart& c, int d) {
  if (d < 1) throw std::invalid_argument("form degree must be positive");
  DimCheck r;
  r.d = d;
  r.order = 2 * d - 1;
  r.expected = binomial(c.a + d - 1, d);
  r.actual = osculating_space(c, d, r.order).vector_dim();
  r.pass = r.actual >= r.expected;
  return r;
}

OscSpace singular_osculating(const AdaptedChart& c, int d, int k) {
  return kernel_space(c, d, k, normal_columns(c.n, c.a, d));
}

CI2dResult ci_2dd_test(const ParamVariety& v, const std::vector<Rat>& t0, int d) {
  if (d < 1) throw std::invalid_argument("form degree must be positive");
  AdaptedChart c = adapt_at_point(v, t0, 2 * d);
  const std::size_t N1 = c.ambient();
  const std::size_t dim = sym_space(N1, d).dim();
  CI2dResult r;
  r.d = d;
  r.degenerate = !ideal_slice(v, 1).empty();
  OscSpace U = singular_osculating(c, d, 2 * d);
  r.singular_dim = U.vector_dim();

  std::vector<SparseVec> trivial;
  if (d >= 2) {
    auto prev = ideal_slice(v, d - 1);
    auto products = to_adapted_basis(c, ideal_times_linear(prev, N1, d - 1), d);
    auto cols = normal_columns(c.n, c.a, d);
    if (!products.empty()) {
      MatQ m(cols.size(), products.size());
      for (std::size_t j = 0; j < products.size(); ++j)
        for (const auto& [i, x] : products[j])
          for (std::size_t r2 = 0; r2 < cols.size(); ++r2)
            if (cols[r2] == i) m(r2, j) = x;
      for (const auto& z : kernel(m)) {
        VecQ acc(dim);
        for (std::size_t j = 0; j < products.size(); ++j)
          if (z[j] != 0)
            for (const auto& [i, x] : products[j]) acc[i] += z[j] * x;
        trivial.push_back(to_sparse(acc));
      }
    }
  }
  r.trivial_dim = trivial.empty() ? 0 : span_rank(trivial, dim);
  std::size_t cur = r.trivial_dim;
  for (const auto& u : U.basis) {
    trivial.push_back(u);
    std::size_t nr = span_rank(trivial, dim);
    if (nr > cur) {
      r.witness = c.to_original(form_from_coords(u, N1, d));
      break;
    }
  }
  r.pass = !r.witness.has_value();
  return r;
}

MongeProfile monge_profile(const ParamVariety& v, const std::vector<Rat>& t0,
                           const std::vector<int>& degrees,
                           const std::vector<std::size_t>& increments) {
  if (degrees.empty() || degrees.size() != increments.size())
    throw std::invalid_argument("profile needs matching nonempty degree and increment lists");
  std::size_t total = 0;
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    if (degrees[j] < 1 || (j > 0 && degrees[j] <= degrees[j - 1]))
      throw std::invalid_argument("profile degrees must be positive and increasing");
    total += increments[j];
  }
  if (total != v.a) throw std::invalid_argument("profile increments must sum to the codimension");
  AdaptedChart c = adapt_at_point(v, t0, 2 * degrees.back());
  MongeProfile out;
  out.pass = true;
  int prev = 0;
  std::size_t cum = 0;
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    for (int k = prev + 1; k <= degrees[j]; ++k) {
      ProfileRow row;
      row.k = k;
      row.order = 2 * k;
      OscSpace o = osculating_space(c, k, 2 * k);
      auto cols = normal_columns(c.n, c.a, k);
      std::vector<VecQ> proj;
      for (const auto& b : o.basis) {
        VecQ p(c.a);
        for (const auto& [i, x] : b)
          for (std::size_t mu = 0; mu < c.a; ++mu)
            if (cols[mu] == i) p[mu] = x;
        proj.push_back(std::move(p));
      }
      row.conormal_dim = span_basis(proj, c.a).size();
      row.expected = k < degrees[j] ? cum : cum + increments[j];
      row.ci_pass = ci_2dd_test(v, t0, k).pass;
      row.pass = row.ci_pass && row.conormal_dim == row.expected;
      out.pass = out.pass && row.pass;
      if (k == degrees[j]) out.filtration.push_back(row.conormal_dim);
      out.rows.push_back(row);
    }
    cum += increments[j];
    prev = degrees[j];
  }
  return out;
}

GenerationReport quadratic_generation_check(const ParamVariety& v, const std::vector<Rat>& t0,
                                            int D) {
  AdaptedChart c = adapt_at_point(v, t0, 2);
  const std::size_t N1 = v.ambient();
  GenerationReport out;
  auto I2 = ideal_slice(v, 2);
  std::vector<VecQ> grads;
  for (const auto& b : I2) grads.push_back(conormal_part(c, form_from_coords(b, N1, 2)));
  out.conormal_from_quadrics = span_basis(grads, v.a).size() == v.a;
  FundData fd = fundamental_data(c);
  QuadricSystem A{v.n, fd.q};
  std::vector<MPoly> quadrics;
  for (const auto& b : I2) quadrics.push_back(form_from_coords(b, N1, 2));
  out.generated = true;
  for (int e = 3; e <= D; ++e) {
    GenerationDegree g;
    g.e = e;
    auto Ie = ideal_slice(v, e);
    const std::size_t dim = sym_space(N1, e).dim();
    g.ideal_dim = Ie.size();
    std::vector<SparseVec> gens;
    auto mons = monomials_of_degree(N1, e - 2);
    for (const auto& q : quadrics)
      for (const auto& m : mons) gens.push_back(form_coords(q * MPoly::monomial(m, Rat(1)), e));
    g.generated_dim = gens.empty() ? 0 : span_rank(gens, dim);
    g.excess = g.ideal_dim - g.generated_dim;
    if (g.excess > 0) {
      out.generated = false;
      g.relation_excess = relations(A, e).quotient_dim;
      g.accounted = g.excess <= g.relation_excess;
      std::size_t cur = g.generated_dim;
      for (const auto& b : Ie) {
        gens.push_back(b);
        std::size_t r = span_rank(gens, dim);
        if (r > cur) {
          g.excess_reps.push_back(form_from_coords(b, N1, e));
          cur = r;
        } else {
          gens.pop_back();
        }
        if (g.excess_reps.size() == g.excess) break;
      }
    } else {
      g.accounted = true;
    }
    out.per_degree.push_back(std::move(g));
  }
  return out;
}

Jet classical_monge_residual(const Jet& y) {
  if (y.nvars() != 1) throw std::invalid_argument("classical Monge residual needs a curve jet in one variable");
  if (y.cap() < 5) throw std::invalid_argument("classical Monge residual needs jet cap >= 5");
  Jet y2 = y.derivative(0).derivative(0);
  Rat c0 = y2.constant_term();
  if (c0 == 0) throw std::domain_error("apply at a point where y'' != 0");
  Jet z = jet_pow_rational(y2 * Rat(1 / c0), Rat(-2, 3));
  return z.derivative(0).derivative(0).derivative(0);
}

}  // namespace osculum
