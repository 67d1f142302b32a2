#include "osculum/catalog/catalog.hpp"

#include <random>
#include <stdexcept>

namespace osculum {

namespace {

MPoly one(std::size_t n) { return MPoly::constant(n, Rat(1)); }
MPoly var(std::size_t n, std::size_t i) { return MPoly::variable(n, i); }

std::string xlabel(std::size_t i) { return "x" + std::to_string(i); }

void check_equations(const ParamVariety& v, const std::vector<MPoly>& eqs, const char* what) {
  for (const auto& e : eqs)
    if (!e.substitute(v.coords).is_zero())
      throw std::logic_error(std::string(what) + ": a known equation does not vanish on the parametrization");
}

// Spinor variables: pair (i, j), 1 <= i < j <= 5, at ambient index 1.. in lex order.
std::size_t pair_index(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  std::size_t k = 1;
  for (std::size_t a = 1; a <= 5; ++a)
    for (std::size_t b = a + 1; b <= 5; ++b) {
      if (a == i && b == j) return k;
      ++k;
    }
  throw std::logic_error("bad pair");
}

MPoly pfaff(const std::vector<MPoly>& x, std::size_t i, std::size_t j, std::size_t k,
            std::size_t l) {
  auto p = [&](std::size_t a, std::size_t b) { return x[pair_index(a, b)]; };
  return p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k);
}

// Signed sub-Pfaffians: x_k = eps_k Pf(indices other than k).
std::vector<MPoly> spinor_pfaffians(const std::vector<MPoly>& x) {
  std::vector<MPoly> out;
  const int eps[5] = {1, -1, 1, -1, 1};
  for (std::size_t k = 1; k <= 5; ++k) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 1; i <= 5; ++i)
      if (i != k) rest.push_back(i);
    out.push_back(pfaff(x, rest[0], rest[1], rest[2], rest[3]) * Rat(eps[k - 1]));
  }
  return out;
}

}  // namespace

ParamVariety veronese(std::size_t n) {
  if (n < 1) throw std::invalid_argument("veronese needs n >= 1");
  ParamVariety v;
  v.label = "veronese-" + std::to_string(n);
  v.n = n;
  v.coords.push_back(one(n));
  v.coord_labels.push_back("x0");
  for (std::size_t i = 0; i < n; ++i) {
    v.coords.push_back(var(n, i));
    v.coord_labels.push_back("x" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      v.coords.push_back(var(n, i) * var(n, j));
      v.coord_labels.push_back("x" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  v.a = v.coords.size() - n - 1;
  return v;
}

ParamVariety segre(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("segre needs m, n >= 1");
  const std::size_t N = m + n;
  ParamVariety v;
  v.label = "segre-" + std::to_string(m) + "-" + std::to_string(n);
  v.n = N;
  v.coords.push_back(one(N));
  v.coord_labels.push_back("x0");
  for (std::size_t i = 0; i < m; ++i) {
    v.coords.push_back(var(N, i));
    v.coord_labels.push_back("u" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < n; ++j) {
    v.coords.push_back(var(N, m + j));
    v.coord_labels.push_back("v" + std::to_string(j + 1));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      v.coords.push_back(var(N, i) * var(N, m + j));
      v.coord_labels.push_back("u" + std::to_string(i + 1) + "v" + std::to_string(j + 1));
    }
  v.a = m * n;
  return v;
}

ParamVariety grass2(std::size_t m) {
  if (m < 4) throw std::invalid_argument("grass2 needs m >= 4");
  const std::size_t k = m - 2, N = 2 * k;
  // Row r of the 2 x m matrix [I_2 | t].
  auto entry = [&](std::size_t r, std::size_t c) -> MPoly {
    if (c < 2) return c == r ? one(N) : MPoly(N);
    return var(N, r * k + (c - 2));
  };
  ParamVariety v;
  v.label = "grass2-" + std::to_string(m);
  v.n = N;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      v.coords.push_back(entry(0, i) * entry(1, j) - entry(0, j) * entry(1, i));
      v.coord_labels.push_back("p" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  v.a = v.coords.size() - N - 1;
  return v;
}

ParamVariety spinor10() {
  const std::size_t N = 10;
  ParamVariety v;
  v.label = "spinor10";
  v.n = N;
  v.a = 5;
  std::vector<MPoly> x(11, MPoly(N));
  v.coords.push_back(one(N));
  v.coord_labels.push_back("x0");
  std::size_t t = 0;
  for (std::size_t i = 1; i <= 5; ++i)
    for (std::size_t j = i + 1; j <= 5; ++j) {
      x[pair_index(i, j)] = var(N, t++);
      v.coords.push_back(x[pair_index(i, j)]);
      v.coord_labels.push_back("x" + std::to_string(i) + std::to_string(j));
    }
  auto pf = spinor_pfaffians(x);
  for (std::size_t k = 0; k < 5; ++k) {
    v.coords.push_back(pf[k]);
    v.coord_labels.push_back("x" + std::to_string(k + 1));
  }
  check_equations(v, spinor10_equations(), "spinor10");
  return v;
}

std::vector<MPoly> spinor10_equations() {
  const std::size_t A = 16;
  std::vector<MPoly> x(11, MPoly(A));
  for (std::size_t i = 1; i <= 10; ++i) x[i] = var(A, i);
  auto pp = [&](std::size_t i, std::size_t j) { return x[pair_index(i, j)]; };
  auto s = [&](std::size_t k) { return var(A, 10 + k); };  // x_1..x_5
  auto pf = spinor_pfaffians(x);
  std::vector<MPoly> eqs;
  for (std::size_t k = 1; k <= 5; ++k) eqs.push_back(s(k) * var(A, 0) - pf[k - 1]);
  eqs.push_back(pp(1, 5) * s(5) + pp(1, 4) * s(4) + pp(1, 3) * s(3) + pp(1, 2) * s(2));
  eqs.push_back(pp(2, 5) * s(5) + pp(2, 4) * s(4) + pp(2, 3) * s(3) - pp(1, 2) * s(1));
  eqs.push_back(pp(3, 5) * s(5) + pp(3, 4) * s(4) - pp(2, 3) * s(2) - pp(1, 3) * s(1));
  eqs.push_back(pp(4, 5) * s(5) - pp(3, 4) * s(3) - pp(2, 4) * s(2) - pp(1, 4) * s(1));
  eqs.push_back(pp(4, 5) * s(4) + pp(3, 5) * s(3) + pp(2, 5) * s(2) + pp(1, 5) * s(1));
  return eqs;
}

namespace {

struct SeveriSlots {
  std::size_t dim;
  std::size_t r1() const { return 0; }
  std::size_t u1(std::size_t i) const { return 1 + i; }
  std::size_t u2(std::size_t i) const { return 1 + dim + i; }
  std::size_t r2() const { return 1 + 2 * dim; }
  std::size_t r3() const { return 2 + 2 * dim; }
  std::size_t u3(std::size_t i) const { return 3 + 2 * dim + i; }
  std::size_t ambient() const { return 3 * dim + 3; }
};

}  // namespace

ParamVariety severi(const CompAlgebra& alg) {
  const std::size_t d = alg.dim(), N = 2 * d;
  SeveriSlots s{d};
  std::vector<MPoly> u, w;
  for (std::size_t i = 0; i < d; ++i) {
    u.push_back(var(N, i));
    w.push_back(var(N, d + i));
  }
  ParamVariety v;
  v.label = "severi-" + std::to_string(d);
  v.n = N;
  v.a = d + 2;
  v.coords.assign(s.ambient(), MPoly(N));
  v.coord_labels.assign(s.ambient(), "");
  v.coords[s.r1()] = one(N);
  v.coord_labels[s.r1()] = "r1";
  auto u3 = alg.mul(alg.conj(u), w);
  for (std::size_t i = 0; i < d; ++i) {
    v.coords[s.u1(i)] = u[i];
    v.coords[s.u2(i)] = w[i];
    v.coords[s.u3(i)] = u3[i];
    v.coord_labels[s.u1(i)] = "u1_" + std::to_string(i);
    v.coord_labels[s.u2(i)] = "u2_" + std::to_string(i);
    v.coord_labels[s.u3(i)] = "u3_" + std::to_string(i);
  }
  v.coords[s.r2()] = alg.norm(u);
  v.coords[s.r3()] = alg.norm(w);
  v.coord_labels[s.r2()] = "r2";
  v.coord_labels[s.r3()] = "r3";
  check_equations(v, severi_equations(alg), "severi");
  return v;
}

std::vector<MPoly> severi_equations(const CompAlgebra& alg) {
  const std::size_t d = alg.dim();
  SeveriSlots s{d};
  const std::size_t A = s.ambient();
  std::vector<MPoly> u1, u2, u3;
  for (std::size_t i = 0; i < d; ++i) {
    u1.push_back(var(A, s.u1(i)));
    u2.push_back(var(A, s.u2(i)));
    u3.push_back(var(A, s.u3(i)));
  }
  MPoly r1 = var(A, s.r1()), r2 = var(A, s.r2()), r3 = var(A, s.r3());
  auto scale = [&](const MPoly& c, const std::vector<MPoly>& x) {
    std::vector<MPoly> r;
    for (const auto& xi : x) r.push_back(c * xi);
    return r;
  };
  auto minus = [&](const std::vector<MPoly>& x, const std::vector<MPoly>& y) {
    std::vector<MPoly> r;
    for (std::size_t i = 0; i < x.size(); ++i) r.push_back(x[i] - y[i]);
    return r;
  };
  std::vector<MPoly> eqs;
  eqs.push_back(r1 * r2 - alg.norm(u1));
  eqs.push_back(r1 * r3 - alg.norm(u2));
  for (auto& e : minus(scale(r1, u3), alg.mul(alg.conj(u1), u2))) eqs.push_back(e);
  for (auto& e : minus(scale(r2, u2), alg.mul(u1, u3))) eqs.push_back(e);
  for (auto& e : minus(scale(r3, u1), alg.mul(u2, alg.conj(u3)))) eqs.push_back(e);
  eqs.push_back(r2 * r3 - alg.norm(u3));
  return eqs;
}

ParamVariety six_quadric_fold() {
  const std::size_t N = 6;
  ParamVariety v;
  v.label = "six-quadric";
  v.n = N;
  v.a = 6;
  v.coords.push_back(one(N));
  for (std::size_t i = 0; i < N; ++i) v.coords.push_back(var(N, i));
  const std::size_t pairs[6][2] = {{0, 3}, {1, 4}, {2, 5}, {0, 4}, {1, 5}, {2, 3}};
  for (const auto& p : pairs) v.coords.push_back(var(N, p[0]) * var(N, p[1]));
  for (std::size_t i = 0; i < v.coords.size(); ++i) v.coord_labels.push_back(xlabel(i));
  check_equations(v, six_quadric_equations(), "six-quadric");
  return v;
}

std::vector<MPoly> six_quadric_equations() {
  const std::size_t A = 13;
  auto x = [&](std::size_t i) { return var(A, i); };
  const std::size_t pairs[6][2] = {{1, 4}, {2, 5}, {3, 6}, {1, 5}, {2, 6}, {3, 4}};
  std::vector<MPoly> eqs;
  for (std::size_t k = 0; k < 6; ++k) eqs.push_back(x(0) * x(7 + k) - x(pairs[k][0]) * x(pairs[k][1]));
  eqs.push_back(x(7) * x(8) * x(9) - x(10) * x(11) * x(12));
  return eqs;
}

ParamVariety quadric_pair(std::size_t n, const std::vector<Rat>& lambda, const std::vector<Rat>& b) {
  if (n < 1) throw std::invalid_argument("quadric pair needs n >= 1");
  if (lambda.size() != n) throw std::invalid_argument("quadric pair needs n lambda values");
  if (b.size() != 4) throw std::invalid_argument("quadric pair needs four b values");
  const std::size_t A = n + 3;
  auto x = [&](std::size_t i) { return var(A, i); };
  MPoly r1(A), r2(A);
  for (std::size_t al = 1; al <= n; ++al) {
    r1 += x(al) * x(al);
    r2 += x(al) * x(al) * lambda[al - 1];
  }
  const std::size_t p = n + 1, q = n + 2;
  r1 += x(p) * x(q) * b[0] + x(q) * x(q) * b[1];
  r2 += x(p) * x(p) * b[2] + x(p) * x(q) * b[3];
  ParamVariety v;
  v.label = "quadric-pair";
  v.n = n;
  v.a = 2;
  v.graph_rhs = {r1, r2};
  for (std::size_t i = 0; i < A; ++i) v.coord_labels.push_back(xlabel(i));
  return v;
}

ParamVariety plane_conic() {
  ParamVariety v;
  v.label = "conic";
  v.n = 1;
  v.a = 1;
  v.coords = {one(1), var(1, 0), var(1, 0) * var(1, 0)};
  v.coord_labels = {"x0", "x1", "x2"};
  return v;
}

ParamVariety plane_cubic() {
  ParamVariety v;
  v.label = "plane-cubic";
  v.n = 1;
  v.a = 1;
  v.coords = {one(1), var(1, 0), var(1, 0).pow(3)};
  v.point = {Rat(1)};
  v.coord_labels = {"x0", "x1", "x2"};
  return v;
}

ParamVariety twisted_cubic() {
  ParamVariety v;
  v.label = "twisted-cubic";
  v.n = 1;
  v.a = 2;
  v.coords = {one(1), var(1, 0), var(1, 0).pow(2), var(1, 0).pow(3)};
  v.coord_labels = {"x0", "x1", "x2", "x3"};
  return v;
}

ParamVariety ci_random(std::size_t n, const std::vector<int>& degrees, std::uint64_t seed) {
  if (n < 1 || degrees.empty()) throw std::invalid_argument("ci_random needs n >= 1 and at least one degree");
  const std::size_t a = degrees.size(), A = n + a + 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> diag(1, 3), coef(-2, 2), pick(0, 1 << 20);
  ParamVariety v;
  v.label = "ci-random";
  v.n = n;
  v.a = a;
  for (std::size_t mu = 0; mu < a; ++mu) {
    const int d = degrees[mu];
    if (d < 2) throw std::invalid_argument("ci_random degrees must be >= 2");
    MPoly x0pow = MPoly::variable(A, 0).pow(d - 2);
    MPoly rhs(A);
    for (std::size_t al = 1; al <= n; ++al) {
      Rat c = diag(rng) * (pick(rng) % 2 ? 1 : -1);
      rhs += x0pow * MPoly::variable(A, al) * MPoly::variable(A, al) * c;
    }
    // Perturbation: monomials x0^e0 * m with deg m >= 2.
    std::vector<Exponent> pool;
    for (const auto& e : monomials_of_degree(A, d))
      if (d - e[0] >= 2) pool.push_back(e);
    for (int t = 0; t < 4; ++t) {
      const auto& e = pool[static_cast<std::size_t>(pick(rng)) % pool.size()];
      int c = coef(rng);
      if (c != 0) rhs += MPoly::monomial(e, Rat(c));
    }
    v.graph_rhs.push_back(std::move(rhs));
  }
  for (std::size_t i = 0; i < A; ++i) v.coord_labels.push_back(xlabel(i));
  return v;
}

std::vector<std::string> catalog_names() {
  return {"conic",      "plane-cubic", "twisted-cubic", "veronese-1", "veronese-2",
          "veronese-3", "segre-1-1",   "segre-1-2",     "segre-2-2",  "grass2-4",
          "grass2-5",   "spinor10",    "severi-1",      "severi-2",   "severi-4",
          "severi-8",   "six-quadric", "quadric-pair",  "quadric-pair-b0", "ci-2-3"};
}

namespace {

std::vector<std::size_t> name_numbers(const std::string& name, const std::string& prefix) {
  std::vector<std::size_t> out;
  std::string rest = name.substr(prefix.size());
  std::size_t pos = 0;
  while (pos < rest.size()) {
    std::size_t next = rest.find('-', pos);
    std::string part = rest.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 3)
      throw std::invalid_argument("unknown catalog name: " + name);
    out.push_back(std::stoul(part));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

CatalogEntry catalog_entry(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  if (name == "conic") {
    e.variety = plane_conic();
    e.description = "plane conic [1, t, t^2]";
    e.ideal2_dim = 1;
    e.third_ff_zero = true;
    e.linear_syzygies = 0;
  } else if (name == "plane-cubic") {
    e.variety = plane_cubic();
    e.description = "plane cubic [1, t, t^3], marked at t = 1";
    e.ideal2_dim = 0;
  } else if (name == "twisted-cubic") {
    e.variety = twisted_cubic();
    e.description = "twisted cubic [1, t, t^2, t^3]";
    e.ideal2_dim = 3;
  } else if (starts_with(name, "veronese-")) {
    auto k = name_numbers(name, "veronese-");
    if (k.size() != 1) throw std::invalid_argument("unknown catalog name: " + name);
    e.variety = veronese(k[0]);
    e.variety.label = name;
    e.description = "quadratic Veronese embedding of P^" + std::to_string(k[0]);
    const std::size_t m = k[0] + 1;
    // dim S^2(S^2 W) - dim S^4 W
    e.ideal2_dim = binomial(binomial(m + 1, 2) + 1, 2) - binomial(m + 3, 4);
    e.third_ff_zero = true;
    if (k[0] == 2) e.linear_syzygies = 2;
  } else if (starts_with(name, "segre-")) {
    auto k = name_numbers(name, "segre-");
    if (k.size() != 2) throw std::invalid_argument("unknown catalog name: " + name);
    e.variety = segre(k[0], k[1]);
    e.description = "Segre embedding of P^" + std::to_string(k[0]) + " x P^" + std::to_string(k[1]);
    e.ideal2_dim = binomial(k[0] + 1, 2) * binomial(k[1] + 1, 2);
    e.third_ff_zero = true;
    if (k[0] == 1 && k[1] == 2) e.linear_syzygies = 1;
  } else if (starts_with(name, "grass2-")) {
    auto k = name_numbers(name, "grass2-");
    if (k.size() != 1) throw std::invalid_argument("unknown catalog name: " + name);
    e.variety = grass2(k[0]);
    e.description = "Grassmannian of 2-planes in Q^" + std::to_string(k[0]) + ", Pluecker embedding";
    e.ideal2_dim = binomial(k[0], 4);
    e.third_ff_zero = true;
  } else if (name == "spinor10") {
    e.variety = spinor10();
    e.description = "10-dimensional spinor variety in P^15";
    e.ideal2_dim = 10;
    e.third_ff_zero = true;
    e.known_equations = spinor10_equations();
  } else if (starts_with(name, "severi-")) {
    auto k = name_numbers(name, "severi-");
    if (k.size() != 1) throw std::invalid_argument("unknown catalog name: " + name);
    CompAlgebra alg = CompAlgebra::split(k[0]);
    e.variety = severi(alg);
    e.description = "Severi variety over the split composition algebra of dimension " +
                    std::to_string(k[0]);
    const std::size_t table[9] = {0, 6, 9, 0, 15, 0, 0, 0, 27};
    e.ideal2_dim = table[k[0]];
    e.third_ff_zero = true;
    e.known_equations = severi_equations(alg);
  } else if (name == "six-quadric") {
    e.variety = six_quadric_fold();
    e.description = "X^6 in P^12 from six binomial quadrics; |II| has six linear syzygies and the ideal one cubic beyond I_2 V*";
    // the six syzygies each give a quadric such as x1 x8 - x2 x10
    e.ideal2_dim = 12;
    e.third_ff_zero = true;
    e.linear_syzygies = 6;
    e.known_equations = six_quadric_equations();
  } else if (name == "quadric-pair" || name == "quadric-pair-b0") {
    std::vector<Rat> b = name == "quadric-pair" ? std::vector<Rat>{Rat(1), Rat(2), Rat(-1), Rat(3)}
                                                : std::vector<Rat>(4, Rat(0));
    e.variety = quadric_pair(2, {Rat(1), Rat(2)}, b);
    e.variety.label = name;
    e.description = "graph-form intersection of two quadrics in P^4";
    e.ideal2_dim = 2;
    e.third_ff_zero = true;
    e.linear_syzygies = 0;
    e.known_equations = e.variety.graph_equations();
  } else if (name == "ci-2-3") {
    e.variety = ci_random(3, {2, 3}, 1);
    e.variety.label = name;
    e.description = "random complete intersection of a quadric and a cubic in P^5";
    e.ideal2_dim = 1;
    e.known_equations = e.variety.graph_equations();
  } else {
    throw std::invalid_argument("unknown catalog name: " + name);
  }
  return e;
}

}  // namespace osculum
