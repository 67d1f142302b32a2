#include "osculum/variety/variety.hpp"

#include <algorithm>
#include <stdexcept>

namespace osculum {

std::vector<Rat> ParamVariety::marked_point() const {
  return point.empty() ? std::vector<Rat>(n) : point;
}

std::vector<MPoly> ParamVariety::graph_equations() const {
  std::vector<MPoly> out;
  const std::size_t N1 = ambient();
  for (std::size_t mu = 0; mu < graph_rhs.size(); ++mu) {
    int d = std::max(2, graph_rhs[mu].degree());
    Exponent e(N1, 0);
    e[0] = static_cast<std::uint16_t>(d - 1);
    e[n + 1 + mu] = 1;
    out.push_back(MPoly::monomial(e, Rat(1)) - graph_rhs[mu]);
  }
  return out;
}

int ParamVariety::coord_degree() const {
  int d = 0;
  for (const auto& c : coords) d = std::max(d, c.degree());
  return d;
}

void ParamVariety::validate() const {
  auto bad = [&](const std::string& what) {
    throw std::invalid_argument((label.empty() ? std::string("variety") : label) + ": " + what);
  };
  if (n == 0) bad("dimension n must be positive");
  if (!point.empty() && point.size() != n) bad("point has the wrong length");
  if (!coord_labels.empty() && coord_labels.size() != ambient()) bad("label count");
  if (is_implicit()) {
    if (!coords.empty()) bad("give either coords or graph equations, not both");
    if (graph_rhs.size() != a) bad("need one graph equation per normal direction");
    for (const auto& r : graph_rhs) {
      if (r.nvars() != ambient()) bad("graph equation in the wrong number of variables");
      if (r.is_zero()) continue;
      if (!r.is_homogeneous() || r.degree() < 2) bad("graph equation must be homogeneous of degree >= 2");
      for (const auto& [e, c] : r.terms())
        if (e[0] + 1 >= total_degree(e)) bad("graph equation must vanish to order 2 at e0");
    }
    for (const auto& x : point)
      if (x != 0) bad("graph-form varieties are charted at the origin only");
    return;
  }
  if (coords.size() != ambient()) bad("expected n + a + 1 coordinates");
  for (const auto& c : coords)
    if (c.nvars() != n) bad("coordinate in the wrong number of parameters");
  if (std::all_of(coords.begin(), coords.end(), [](const MPoly& c) { return c.is_zero(); }))
    bad("all coordinates vanish");
}

MPoly linear_substitute(const MPoly& p, const MatQ& m) {
  const std::size_t N = p.nvars();
  if (m.rows() != N || m.cols() != N) throw std::invalid_argument("substitution matrix shape");
  std::vector<MPoly> args;
  for (std::size_t i = 0; i < N; ++i) {
    MPoly li(N);
    for (std::size_t j = 0; j < N; ++j)
      if (m(i, j) != 0) {
        Exponent e(N, 0);
        e[j] = 1;
        li.add_term(e, m(i, j));
      }
    args.push_back(std::move(li));
  }
  return p.substitute(args);
}

SparseVec form_coords(const MPoly& p, int d) {
  const auto& sp = sym_space(p.nvars(), d);
  SparseVec v;
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) != d) throw std::invalid_argument("form is not homogeneous of degree d");
    v.emplace_back(sp.index(e), c);
  }
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

MPoly form_from_coords(const SparseVec& v, std::size_t nvars, int d) {
  const auto& sp = sym_space(nvars, d);
  MPoly p(nvars);
  for (const auto& [i, c] : v) p.add_term(sp.monomial(i), c);
  return p;
}

std::vector<SparseVec> canonical_basis(const std::vector<SparseVec>& vecs, std::size_t dim) {
  if (vecs.empty()) return {};
  MatQ m(vecs.size(), dim);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (const auto& [j, x] : vecs[i]) m(i, dim - 1 - j) = x;
  Rref r = rref(m);
  std::vector<SparseVec> out;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    SparseVec v;
    for (std::size_t j = dim; j-- > 0;)
      if (r.reduced(i, j) != 0) v.emplace_back(dim - 1 - j, r.reduced(i, j));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(),
            [](const SparseVec& x, const SparseVec& y) { return x.back().first < y.back().first; });
  return out;
}

}  // namespace osculum
