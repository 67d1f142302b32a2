#include "osculum/tensor/sym.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace osculum {

SymSpace::SymSpace(std::size_t n, int k) : n_(n), k_(k), basis_(monomials_of_degree(n, k)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::size_t SymSpace::index(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw std::out_of_range("monomial not in symmetric space");
  return it->second;
}

const SymSpace& sym_space(std::size_t n, int k) {
  static std::map<std::pair<std::size_t, int>, std::unique_ptr<SymSpace>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, k}];
  if (!slot) slot = std::make_unique<SymSpace>(n, k);
  return *slot;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rat multinomial(const Exponent& e) {
  mpz_class num = 1, den = 1;
  unsigned total = 0;
  for (auto v : e) {
    for (unsigned i = 1; i <= v; ++i) {
      num *= ++total;
      den *= i;
    }
  }
  return Rat(num / den);
}

SymForm SymForm::zero(std::size_t n, int k) {
  return SymForm{n, k, VecQ(sym_space(n, k).dim())};
}

SymForm SymForm::from_poly(const MPoly& p, int k) {
  SymForm f = zero(p.nvars(), k);
  const auto& sp = sym_space(p.nvars(), k);
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) != k) throw std::invalid_argument("polynomial is not homogeneous of degree k");
    f.coeffs[sp.index(e)] = c;
  }
  return f;
}

MPoly SymForm::to_poly() const {
  MPoly p(n);
  const auto& sp = sym_space(n, k);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.add_term(sp.monomial(i), coeffs[i]);
  return p;
}

bool SymForm::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

SymForm& SymForm::operator+=(const SymForm& o) {
  if (o.n != n || o.k != k) throw std::invalid_argument("form shape mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

SymForm& SymForm::operator-=(const SymForm& o) {
  if (o.n != n || o.k != k) throw std::invalid_argument("form shape mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

SymForm& SymForm::operator*=(const Rat& c) {
  for (auto& x : coeffs) x *= c;
  return *this;
}

SymForm operator+(SymForm a, const SymForm& b) { return a += b; }
SymForm operator-(SymForm a, const SymForm& b) { return a -= b; }
SymForm operator*(SymForm a, const Rat& c) { return a *= c; }

Rat SymForm::entry(const std::vector<std::size_t>& idx) const {
  if (idx.size() != static_cast<std::size_t>(k)) throw std::invalid_argument("index arity");
  Exponent e(n, 0);
  for (auto i : idx) e.at(i) += 1;
  return coeffs[sym_space(n, k).index(e)] / multinomial(e);
}

SymForm form_from_array(std::size_t n, int k,
                        const std::function<Rat(const std::vector<std::size_t>&)>& arr) {
  SymForm f = SymForm::zero(n, k);
  const auto& sp = sym_space(n, k);
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    const Exponent& e = sp.monomial(i);
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < n; ++v)
      for (unsigned r = 0; r < e[v]; ++r) idx.push_back(v);
    f.coeffs[i] = arr(idx) * multinomial(e);
  }
  return f;
}

SymForm sym_mult(const SymForm& a, const SymForm& b) {
  if (a.n != b.n) throw std::invalid_argument("form dimension mismatch");
  return SymForm::from_poly(a.to_poly() * b.to_poly(), a.k + b.k);
}

SymForm contract(const VecQ& v, const SymForm& f) {
  if (v.size() != f.n) throw std::invalid_argument("vector dimension mismatch");
  if (f.k == 0) throw std::invalid_argument("cannot contract a constant");
  MPoly p = f.to_poly();
  MPoly acc(f.n);
  for (std::size_t i = 0; i < f.n; ++i)
    if (v[i] != 0) acc += p.derivative(i) * v[i];
  acc *= Rat(1, f.k);
  return SymForm::from_poly(acc, f.k - 1);
}

MatQ quadric_matrix(const SymForm& q) {
  if (q.k != 2) throw std::invalid_argument("not a quadric");
  MatQ m(q.n, q.n);
  for (std::size_t i = 0; i < q.n; ++i)
    for (std::size_t j = 0; j < q.n; ++j) m(i, j) = q.entry({i, j});
  return m;
}

std::size_t quadric_rank(const SymForm& q) { return rank(quadric_matrix(q)); }

std::vector<SymForm> polarize_cubic(const SymForm& p) {
  if (p.k != 3) throw std::invalid_argument("not a cubic");
  std::vector<SymForm> out;
  for (std::size_t g = 0; g < p.n; ++g) {
    VecQ e(p.n);
    e[g] = 1;
    out.push_back(contract(e, p));
  }
  return out;
}

S21Split split_s21(const std::vector<SymForm>& t) {
  if (t.empty()) throw std::invalid_argument("empty tensor");
  const std::size_t n = t[0].n;
  if (t.size() != n) throw std::invalid_argument("tensor needs one quadric per index");
  MPoly prod(n);
  for (std::size_t g = 0; g < n; ++g) prod += t[g].to_poly() * MPoly::variable(n, g);
  S21Split out;
  out.sym = SymForm::from_poly(prod, 3);
  auto pol = polarize_cubic(out.sym);
  for (std::size_t g = 0; g < n; ++g) out.s21.push_back(t[g] - pol[g]);
  return out;
}

std::size_t s21_dim(std::size_t n) { return n * binomial(n + 1, 2) - binomial(n + 2, 3); }

}  // namespace osculum
