#include <stdexcept>

#include "osculum/variety/variety.hpp"

namespace osculum {

std::vector<MPoly> AdaptedChart::coordinate_series() const {
  std::vector<MPoly> s;
  s.push_back(MPoly::constant(n, Rat(1)));
  for (std::size_t i = 0; i < n; ++i) s.push_back(MPoly::variable(n, i));
  for (const auto& j : f) s.push_back(j.poly());
  return s;
}

MPoly AdaptedChart::to_original(const MPoly& p) const {
  return linear_substitute(p, change_of_coords);
}

MPoly AdaptedChart::to_adapted(const MPoly& p) const {
  return linear_substitute(p, change_inverse);
}

namespace {

AdaptedChart graph_chart(const ParamVariety& v, int cap) {
  AdaptedChart c;
  c.n = v.n;
  c.a = v.a;
  c.cap = cap;
  c.base_point = std::vector<Rat>(v.n);
  c.point = std::vector<Rat>(v.ambient());
  c.point[0] = 1;
  c.change_of_coords = MatQ::identity(v.ambient());
  c.change_inverse = c.change_of_coords;
  std::vector<Jet> f(v.a, Jet(v.n, cap));
  // f <- rhs(1, t, f); every pass fixes at least one more order.
  for (int it = 0; it <= cap; ++it) {
    std::vector<Jet> args;
    args.push_back(Jet::constant(v.n, cap, Rat(1)));
    for (std::size_t i = 0; i < v.n; ++i) args.push_back(Jet::variable(v.n, cap, i));
    for (const auto& x : f) args.push_back(x);
    std::vector<Jet> next;
    for (const auto& r : v.graph_rhs) next.push_back(jet_compose(r, args, cap));
    bool same = true;
    for (std::size_t m = 0; m < v.a; ++m)
      if (next[m].poly() != f[m].poly()) same = false;
    f = std::move(next);
    if (same) break;
  }
  c.f = std::move(f);
  return c;
}

}  // namespace

AdaptedChart adapt_at_point(const ParamVariety& v, const std::vector<Rat>& t0_in, int cap) {
  v.validate();
  if (cap < 2) throw std::invalid_argument("chart cap must be at least 2");
  std::vector<Rat> t0 = t0_in.empty() ? std::vector<Rat>(v.n) : t0_in;
  if (t0.size() != v.n) throw std::invalid_argument("parameter point has the wrong length");
  if (v.is_implicit()) {
    for (const auto& x : t0)
      if (x != 0) throw std::domain_error("graph-form varieties are charted at the origin only");
    return graph_chart(v, cap);
  }
  const std::size_t N1 = v.ambient();
  bool at_origin = true;
  for (const auto& x : t0)
    if (x != 0) at_origin = false;
  std::vector<MPoly> cs;
  for (const auto& p : v.coords) cs.push_back(at_origin ? p : p.shifted(t0));

  VecQ pt(N1);
  for (std::size_t i = 0; i < N1; ++i) pt[i] = cs[i].coefficient(Exponent(v.n, 0));
  bool zero = true;
  for (const auto& x : pt)
    if (x != 0) zero = false;
  if (zero) throw std::domain_error("point not on chart: every coordinate vanishes");

  std::vector<VecQ> cols{pt};
  for (std::size_t al = 0; al < v.n; ++al) {
    VecQ j(N1);
    Exponent e(v.n, 0);
    e[al] = 1;
    for (std::size_t i = 0; i < N1; ++i) j[i] = cs[i].coefficient(e);
    cols.push_back(std::move(j));
  }
  if (rank(MatQ::from_rows(cols, N1)) != v.n + 1)
    throw std::domain_error("singular point: differential of the parametrization drops rank");
  for (std::size_t k = 0; k < N1 && cols.size() < N1; ++k) {
    VecQ e(N1);
    e[k] = 1;
    auto trial = cols;
    trial.push_back(e);
    if (rank(MatQ::from_rows(trial, N1)) == trial.size()) cols = std::move(trial);
  }
  MatQ B = MatQ::from_rows(cols, N1).transpose();  // columns are the adapted frame
  MatQ G = inverse(B);

  std::vector<Jet> y;
  for (std::size_t r = 0; r < N1; ++r) {
    MPoly acc(v.n);
    for (std::size_t i = 0; i < N1; ++i)
      if (G(r, i) != 0) acc += cs[i] * G(r, i);
    y.emplace_back(acc, cap);
  }
  Jet inv0 = y[0].inverse();
  std::vector<Jet> u;
  for (std::size_t al = 0; al < v.n; ++al) u.push_back(y[1 + al] * inv0);
  std::vector<Jet> psi = jet_inverse_map(u);
  bool identity = true;
  for (std::size_t al = 0; al < v.n; ++al)
    if (psi[al].poly() != MPoly::variable(v.n, al)) identity = false;

  AdaptedChart c;
  c.n = v.n;
  c.a = v.a;
  c.cap = cap;
  c.base_point = t0;
  c.point = pt;
  c.coord_degree = v.coord_degree();
  c.change_of_coords = G;
  c.change_inverse = B;
  for (std::size_t mu = 0; mu < v.a; ++mu) {
    Jet w = y[1 + v.n + mu] * inv0;
    c.f.push_back(identity ? w : jet_compose(w.poly(), psi, cap));
  }
  for (const auto& j : c.f)
    if (j.order() < 2) throw std::logic_error("chart is not in graph form");
  return c;
}

}  // namespace osculum
