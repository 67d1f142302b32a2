#include "osculum/quadsys/quadsys.hpp"

#include <random>
#include <stdexcept>

#include "json.hpp"
#include "osculum/exactalg/parse.hpp"
#include "osculum/variety/pullback.hpp"
#include "osculum/variety/spec_io.hpp"

namespace osculum {

std::vector<SymForm> QuadricSystem::basis() const {
  if (gens.empty()) return {};
  const std::size_t D = sym_space(n, 2).dim();
  MatQ m(D, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < D; ++i) m(i, j) = gens[j].coeffs[i];
  std::vector<SymForm> out;
  for (auto p : rref(m).pivots) out.push_back(gens[p]);
  return out;
}

void QuadricSystem::validate() const {
  if (n == 0) throw std::invalid_argument("quadric system needs n > 0");
  for (const auto& g : gens)
    if (g.n != n || g.k != 2) throw std::invalid_argument("quadric system entries must be quadrics in n variables");
}

QuadricSystem parse_quadric_spec(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("quadric spec is not valid JSON: ") + e.what());
  }
  QuadricSystem A;
  try {
    A.n = j.at("n").get<std::size_t>();
    for (const auto& s : j.at("quadrics")) {
      MPoly p = parse_poly(s.get<std::string>(), VarNames::params(A.n));
      if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != 2))
        throw std::invalid_argument("not a quadratic form: " + s.get<std::string>());
      A.gens.push_back(SymForm::from_poly(p, 2));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("quadric spec needs \"n\" and \"quadrics\": ") + e.what());
  }
  A.validate();
  return A;
}

QuadricSystem load_quadric_spec(const std::string& path) {
  return parse_quadric_spec(read_text_file(path));
}

QuadricSystem random_quadric_system(std::size_t n, std::size_t a, std::uint64_t seed,
                                    bool syzygy_free) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  const std::size_t D = sym_space(n, 2).dim();
  for (int attempt = 0; attempt < 100; ++attempt) {
    QuadricSystem A;
    A.n = n;
    for (std::size_t i = 0; i < a; ++i) {
      SymForm q = SymForm::zero(n, 2);
      for (std::size_t j = 0; j < D; ++j) q.coeffs[j] = coef(rng);
      A.gens.push_back(std::move(q));
    }
    if (A.a() != a) continue;
    if (syzygy_free && !bracket_part(A).empty()) continue;
    return A;
  }
  throw std::runtime_error("could not sample a quadric system with the requested properties");
}

std::vector<SymForm> prolongation(const QuadricSystem& A) {
  const std::size_t n = A.n;
  auto basis = A.basis();
  const auto& s2 = sym_space(n, 2);
  const auto& s3 = sym_space(n, 3);
  // Annihilator of A inside the dual of S^2.
  MatQ am(basis.size(), s2.dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < s2.dim(); ++j) am(i, j) = basis[i].coeffs[j];
  std::vector<VecQ> ann = basis.empty() ? std::vector<VecQ>{} : kernel(am);
  if (basis.empty())
    for (std::size_t j = 0; j < s2.dim(); ++j) {
      VecQ e(s2.dim());
      e[j] = 1;
      ann.push_back(e);
    }
  std::vector<VecQ> rows;
  for (std::size_t i = 0; i < n; ++i) {
    VecQ ei(n);
    ei[i] = 1;
    std::vector<SymForm> images;
    for (std::size_t c = 0; c < s3.dim(); ++c) {
      SymForm mono = SymForm::zero(n, 3);
      mono.coeffs[c] = 1;
      images.push_back(contract(ei, mono));
    }
    for (const auto& w : ann) {
      VecQ row(s3.dim());
      for (std::size_t c = 0; c < s3.dim(); ++c)
        for (std::size_t j = 0; j < s2.dim(); ++j)
          if (w[j] != 0 && images[c].coeffs[j] != 0) row[c] += w[j] * images[c].coeffs[j];
      rows.push_back(std::move(row));
    }
  }
  std::vector<SymForm> out;
  std::vector<VecQ> ker;
  if (rows.empty()) {
    for (std::size_t c = 0; c < s3.dim(); ++c) {
      VecQ e(s3.dim());
      e[c] = 1;
      ker.push_back(e);
    }
  } else {
    ker = kernel(MatQ::from_rows(rows, s3.dim()));
  }
  for (auto& v : ker) out.push_back(SymForm{n, 3, std::move(v)});
  return out;
}

namespace {

std::vector<MPoly> multiplication_images(const std::vector<SymForm>& basis, std::size_t n) {
  std::vector<MPoly> images;
  for (const auto& q : basis) {
    MPoly qp = q.to_poly();
    for (std::size_t g = 0; g < n; ++g) images.push_back(qp * MPoly::variable(n, g));
  }
  return images;
}

}  // namespace

std::vector<LinearSyzygy> bracket_part(const QuadricSystem& A) {
  auto basis = A.basis();
  const std::size_t n = A.n;
  std::vector<LinearSyzygy> out;
  if (basis.empty()) return out;
  for (const auto& v : image_kernel(multiplication_images(basis, n), {}).basis) {
    LinearSyzygy s;
    s.l.assign(basis.size(), VecQ(n));
    for (const auto& [idx, x] : v) s.l[idx / n][idx % n] = x;
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t multiplication_rank(const QuadricSystem& A) {
  auto basis = A.basis();
  if (basis.empty()) return 0;
  return basis.size() * A.n - image_kernel_dim(multiplication_images(basis, A.n), {});
}

namespace {

// Coordinates of bihomogeneous polynomials over y^K w^P monomials.
struct BiSpace {
  std::size_t a, n;
  int k, p;
  std::vector<Exponent> mons;  // concatenated exponents
  std::map<Exponent, std::size_t> index;

  BiSpace(std::size_t a_, std::size_t n_, int k_, int p_) : a(a_), n(n_), k(k_), p(p_) {
    for (const auto& ky : monomials_of_degree(a, k))
      for (const auto& pw : monomials_of_degree(n, p)) {
        Exponent e = ky;
        e.insert(e.end(), pw.begin(), pw.end());
        index.emplace(e, mons.size());
        mons.push_back(std::move(e));
      }
  }

  SparseVec coords(const MPoly& f) const {
    SparseVec v;
    for (const auto& [e, c] : f.terms()) v.emplace_back(index.at(e), c);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  }

  MPoly poly(const SparseVec& v) const {
    MPoly f(a + n);
    for (const auto& [i, c] : v) f.add_term(mons[i], c);
    return f;
  }
};

std::vector<MPoly> bidegree_kernel(const std::vector<SymForm>& basis, std::size_t n, int k, int p,
                                   const BiSpace& sp) {
  std::vector<MPoly> qs;
  for (const auto& q : basis) qs.push_back(q.to_poly());
  std::vector<MPoly> qk = k == 0 ? std::vector<MPoly>{MPoly::constant(n, Rat(1))}
                                 : pullback_images(qs, k, -1);
  std::vector<MPoly> images;
  auto wmons = monomials_of_degree(n, p);
  for (const auto& qi : qk)
    for (const auto& w : wmons) images.push_back(qi * MPoly::monomial(w, Rat(1)));
  std::vector<MPoly> out;
  for (const auto& v : image_kernel(images, {}).basis) out.push_back(sp.poly(v));
  return out;
}

MPoly lift_y(const MPoly& f, std::size_t a, std::size_t n, bool is_y) {
  // Embeds a polynomial in y (a vars) or w (n vars) into a + n variables.
  MPoly out(a + n);
  for (const auto& [e, c] : f.terms()) {
    Exponent g(a + n, 0);
    for (std::size_t i = 0; i < e.size(); ++i) g[(is_y ? 0 : a) + i] = e[i];
    out.add_term(g, c);
  }
  return out;
}

std::vector<MPoly> bi_monomials(std::size_t a, std::size_t n, int k, int p) {
  std::vector<MPoly> out;
  if (k < 0 || p < 0) return out;
  for (const auto& ky : monomials_of_degree(a, k))
    for (const auto& pw : monomials_of_degree(n, p)) {
      Exponent e = ky;
      e.insert(e.end(), pw.begin(), pw.end());
      out.push_back(MPoly::monomial(e, Rat(1)));
    }
  return out;
}

}  // namespace

BidegreeReport syzygy_bidegree(const QuadricSystem& A, int k, int p) {
  if (k < 0 || p < 0) throw std::invalid_argument("bidegree must be nonnegative");
  auto basis = A.basis();
  const std::size_t a = basis.size(), n = A.n;
  BidegreeReport rep;
  rep.k = k;
  rep.p = p;
  BiSpace sp(a, n, k, p);
  auto ker = bidegree_kernel(basis, n, k, p, sp);
  rep.syzygy_dim = ker.size();

  std::vector<SparseVec> gen;
  bool is_generator_degree = (k == 1 && p == 1) || (k == 2 && p == 0);
  if (is_generator_degree) {
    for (const auto& f : ker) gen.push_back(sp.coords(f));
  } else {
    if (k >= 1 && p >= 1) {
      BiSpace s11(a, n, 1, 1);
      auto lin = bidegree_kernel(basis, n, 1, 1, s11);
      auto mult = bi_monomials(a, n, k - 1, p - 1);
      for (const auto& l : lin)
        for (const auto& m : mult) gen.push_back(sp.coords(l * m));
    }
    if (k >= 2) {
      BiSpace s20(a, n, 2, 0);
      auto quad = bidegree_kernel(basis, n, 2, 0, s20);
      auto mult = bi_monomials(a, n, k - 2, p);
      for (const auto& r : quad)
        for (const auto& m : mult) gen.push_back(sp.coords(r * m));
    }
    if (k >= 1 && p >= 2) {
      auto mult = bi_monomials(a, n, k - 1, p - 2);
      for (std::size_t mu = 0; mu < a; ++mu)
        for (std::size_t nu = mu + 1; nu < a; ++nu) {
          MPoly kos = MPoly::variable(a + n, mu) * lift_y(basis[nu].to_poly(), a, n, false) -
                      MPoly::variable(a + n, nu) * lift_y(basis[mu].to_poly(), a, n, false);
          for (const auto& m : mult) gen.push_back(sp.coords(kos * m));
        }
    }
  }
  const std::size_t dim = sp.mons.size();
  rep.generated_dim = gen.empty() ? 0 : span_rank(gen, dim);
  rep.excess = rep.syzygy_dim - rep.generated_dim;
  if (rep.excess > 0) {
    std::size_t cur = rep.generated_dim;
    for (const auto& f : ker) {
      gen.push_back(sp.coords(f));
      std::size_t r = span_rank(gen, dim);
      if (r > cur) {
        rep.excess_reps.push_back(f);
        cur = r;
      } else {
        gen.pop_back();
      }
      if (rep.excess_reps.size() == rep.excess) break;
    }
  }
  return rep;
}

RelationReport relations(const QuadricSystem& A, int e) {
  if (e < 1) throw std::invalid_argument("relation degree must be positive");
  BidegreeReport b = syzygy_bidegree(A, e, 0);
  const std::size_t a = A.basis().size();
  auto strip = [&](const MPoly& f) {
    MPoly out(a);
    for (const auto& [ex, c] : f.terms()) out.add_term(Exponent(ex.begin(), ex.begin() + a), c);
    return out;
  };
  RelationReport r;
  r.degree = e;
  r.relations_dim = b.syzygy_dim;
  r.generated_dim = b.generated_dim;
  r.quotient_dim = b.excess;
  BiSpace sp(a, A.n, e, 0);
  for (const auto& f : bidegree_kernel(A.basis(), A.n, e, 0, sp)) r.relations.push_back(strip(f));
  for (const auto& f : b.excess_reps) r.non_generated.push_back(strip(f));
  return r;
}

SyzygyCert syzygy_from_relation(const QuadricSystem& A, const MPoly& relation) {
  auto basis = A.basis();
  const std::size_t a = basis.size(), n = A.n;
  if (relation.nvars() != a) throw std::invalid_argument("relation must use one variable per basis quadric");
  if (relation.is_zero()) throw std::invalid_argument("trivial relation");
  if (!relation.is_homogeneous() || relation.degree() != 2)
    throw std::invalid_argument("relation must be quadratic");
  SymForm c = SymForm::from_poly(relation, 2);
  std::vector<MPoly> qs;
  for (const auto& q : basis) qs.push_back(q.to_poly());
  if (!relation.substitute(qs).is_zero()) throw std::invalid_argument("not a relation among the quadrics");

  auto attempt = [&](const VecQ& v) -> std::optional<SyzygyCert> {
    std::vector<SymForm> contracted;
    for (const auto& q : basis) contracted.push_back(contract(v, q));
    SyzygyCert cert;
    cert.kind = SyzygyCert::Kind::Linear;
    cert.quadrics = basis;
    cert.direction = v;
    bool nonzero = false;
    for (std::size_t nu = 0; nu < a; ++nu) {
      SymForm l = SymForm::zero(n, 1);
      for (std::size_t mu = 0; mu < a; ++mu) {
        Rat cm = c.entry({mu, nu});
        if (cm != 0) l += contracted[mu] * cm;
      }
      if (!l.is_zero()) nonzero = true;
      cert.l.push_back(l.coeffs);
    }
    if (!nonzero) return std::nullopt;
    MPoly sum(n);
    for (std::size_t nu = 0; nu < a; ++nu)
      sum += SymForm{n, 1, cert.l[nu]}.to_poly() * qs[nu];
    cert.verified = sum.is_zero();
    return cert;
  };
  // Deterministic search: e_i, then e_i + e_j, then e_i - e_j.
  for (std::size_t i = 0; i < n; ++i) {
    VecQ v(n);
    v[i] = 1;
    if (auto c1 = attempt(v)) return *c1;
  }
  for (int sign : {1, -1})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        VecQ v(n);
        v[i] = 1;
        v[j] = sign;
        if (auto c1 = attempt(v)) return *c1;
      }
  throw std::logic_error("no contraction direction produced a nonzero syzygy");
}

RankBoundReport rank_bound_check(const std::vector<VecQ>& l, const std::vector<SymForm>& Q,
                                 std::size_t samples, std::uint64_t seed) {
  const std::size_t p = l.size();
  if (p == 0 || Q.size() != p) throw std::invalid_argument("syzygy needs matching l and Q lists");
  const std::size_t n = Q[0].n;
  if (rank(MatQ::from_rows(l, n)) != p) throw std::invalid_argument("syzygy coefficients l are dependent");
  QuadricSystem qs{n, Q};
  if (qs.a() != p) throw std::invalid_argument("syzygy quadrics Q are dependent");
  MPoly sum(n);
  for (std::size_t i = 0; i < p; ++i) sum += SymForm{n, 1, l[i]}.to_poly() * Q[i].to_poly();
  if (!sum.is_zero()) throw std::invalid_argument("sum l^i Q_i is not zero");

  RankBoundReport rep;
  rep.p = p;
  rep.bound = 2 * (p - 1);
  auto check = [&](const SymForm& f) {
    rep.max_rank = std::max(rep.max_rank, quadric_rank(f));
    ++rep.checked;
  };
  for (const auto& q : Q) check(q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) check(Q[i] + Q[j]);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (std::size_t s = 0; s < samples; ++s) {
    SymForm f = SymForm::zero(n, 2);
    for (const auto& q : Q) f += q * Rat(coef(rng));
    check(f);
  }
  rep.pass = rep.max_rank <= rep.bound;
  return rep;
}

ExtremalSystem extremal_syzygy_system(std::size_t p, std::size_t n, const ExtremalOptions& opts) {
  if (p < 2) throw std::invalid_argument("extremal system needs p >= 2");
  const std::size_t need = p + p * (p - 1) / 2;
  if (opts.include_m && n < need)
    throw std::invalid_argument("extremal system needs n >= p + p(p-1)/2");
  if (n < p) throw std::invalid_argument("extremal system needs n >= p");
  if (!opts.include_m && !opts.random_b)
    throw std::invalid_argument("degenerate extremal system: every quadric vanishes");
  ExtremalSystem out;
  for (std::size_t i = 0; i < p; ++i) {
    VecQ e(n);
    e[i] = 1;
    out.l.push_back(e);
  }
  auto w = [&](std::size_t i) { return MPoly::variable(n, i); };
  std::vector<MPoly> q(p, MPoly(n));
  if (opts.include_m) {
    std::size_t next = p;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) {
        MPoly m = w(next++);
        q[i] += m * w(j);
        q[j] -= m * w(i);
      }
  }
  if (opts.random_b) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j)
        for (std::size_t k = 0; k < p; ++k) {
          Rat beta = coef(rng);
          if (beta == 0) continue;
          q[i] += w(j) * w(k) * beta;
          q[j] -= w(i) * w(k) * beta;
        }
  }
  for (const auto& f : q) out.quadrics.push_back(SymForm::from_poly(f, 2));
  QuadricSystem qs{n, out.quadrics};
  if (qs.a() != p) throw std::invalid_argument("extremal system quadrics are dependent");
  return out;
}

Thresholds thresholds(long n, long a, long b) {
  Thresholds t;
  t.prolongation_forced_zero = 2 * a < n - b;
  t.no_linear_syzygies_forced = 3 * a < n - b + 2;
  t.ci_if_quadric_generated = t.no_linear_syzygies_forced;
  return t;
}

ParamVariety variety_from_quadrics(const QuadricSystem& A, const std::string& label) {
  A.validate();
  auto basis = A.basis();
  if (basis.empty()) throw std::invalid_argument("quadric system is zero");
  ParamVariety v;
  v.label = label.empty() ? "from-quadrics" : label;
  v.n = A.n;
  v.a = basis.size();
  v.coords.push_back(MPoly::constant(A.n, Rat(1)));
  for (std::size_t i = 0; i < A.n; ++i) v.coords.push_back(MPoly::variable(A.n, i));
  for (const auto& q : basis) v.coords.push_back(q.to_poly());
  return v;
}

}  // namespace osculum
