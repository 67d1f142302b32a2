#include "osculum/exactalg/sparse_kernel.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>

#include "osculum/exactalg/modmat.hpp"

namespace osculum {

SparseVec to_sparse(const VecQ& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

VecQ to_dense(const SparseVec& v, std::size_t dim) {
  VecQ out(dim);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

void ColumnMatrix::add_column(SparseVec v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec clean;
  for (auto& e : v) {
    if (e.first >= rows_) throw std::out_of_range("row index");
    if (!clean.empty() && clean.back().first == e.first) {
      clean.back().second += e.second;
      if (clean.back().second == 0) clean.pop_back();
    } else if (e.second != 0) {
      clean.push_back(std::move(e));
    }
  }
  cols_.push_back(std::move(clean));
}

MatQ ColumnMatrix::to_dense() const {
  MatQ m(rows_, cols_.size());
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [i, x] : cols_[j]) m(i, j) = x;
  return m;
}

namespace {

constexpr std::size_t kMaxPrimes = 12;
constexpr std::size_t kCompressSlack = 8;

struct Compact {
  std::vector<std::size_t> cols;  // nonzero columns of the input
  std::vector<std::size_t> row_of;  // input row -> compact row
  std::size_t nrows = 0;
};

Compact compact(const ColumnMatrix& m) {
  Compact c;
  c.row_of.assign(m.rows(), SIZE_MAX);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m.column(j).empty()) continue;
    c.cols.push_back(j);
    for (const auto& e : m.column(j))
      if (c.row_of[e.first] == SIZE_MAX) c.row_of[e.first] = c.nrows++;
  }
  return c;
}

struct ModImage {
  std::vector<std::size_t> pivots;  // compact column indices
  ModMatrix reduced;
};

// Reduces the compact matrix modulo p, compressing rows when there are many.
std::optional<ModImage> reduce_mod(const ColumnMatrix& m, const Compact& c,
                                   std::uint32_t p, std::uint64_t seed, bool* compressed) {
  const std::size_t ncols = c.cols.size();
  const auto& kern = simd::active_kernels();
  const double pd = p, pinv = 1.0 / pd;
  std::vector<std::vector<std::uint32_t>> colres(ncols);
  for (std::size_t j = 0; j < ncols; ++j) {
    const auto& col = m.column(c.cols[j]);
    colres[j].reserve(col.size());
    for (const auto& e : col) {
      auto r = rat_mod(e.second, p);
      if (!r) return std::nullopt;
      colres[j].push_back(static_cast<std::uint32_t>(*r));
    }
  }
  bool compress = c.nrows > ncols + kCompressSlack;
  *compressed = compress;
  if (!compress) {
    ModMatrix a(c.nrows, ncols, p);
    for (std::size_t j = 0; j < ncols; ++j) {
      const auto& col = m.column(c.cols[j]);
      for (std::size_t k = 0; k < col.size(); ++k) a.set(c.row_of[col[k].first], j, colres[j][k]);
    }
    auto piv = a.rref(kern);
    return ModImage{std::move(piv), std::move(a)};
  }
  // A = R * M with R random (ncols + slack) x nrows; build A^T row by row.
  const std::size_t crows = ncols + kCompressSlack;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  ModMatrix rt(c.nrows, crows, p);  // row i holds column i of R
  for (std::size_t i = 0; i < c.nrows; ++i)
    for (std::size_t k = 0; k < crows; ++k) rt.set(i, k, dist(rng));
  ModMatrix at(ncols, crows, p);
  for (std::size_t j = 0; j < ncols; ++j) {
    const auto& col = m.column(c.cols[j]);
    for (std::size_t k = 0; k < col.size(); ++k) {
      std::uint32_t v = colres[j][k];
      if (v == 0) continue;
      kern.submul(at.row(j), rt.row(c.row_of[col[k].first]), static_cast<double>(p - v), pd,
                  pinv, crows);
    }
  }
  ModMatrix a(crows, ncols, p);
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t k = 0; k < crows; ++k) a.set(k, j, at.at(j, k));
  auto piv = a.rref(kern);
  return ModImage{std::move(piv), std::move(a)};
}

KernelResult exact_kernel(const ColumnMatrix& m) {
  MatQ d = m.to_dense();
  Rref r = rref(d);
  KernelResult out;
  out.rank = r.pivots.size();
  out.pivots = r.pivots;
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : r.pivots) is_piv[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    SparseVec v;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      if (r.reduced(i, f) != 0) v.emplace_back(r.pivots[i], -r.reduced(i, f));
    v.emplace_back(f, Rat(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.basis.push_back(std::move(v));
  }
  return out;
}

bool verify_in_kernel(const ColumnMatrix& m, const SparseVec& v, std::vector<Rat>& acc,
                      std::vector<std::size_t>& touched) {
  touched.clear();
  for (const auto& [j, x] : v)
    for (const auto& [i, y] : m.column(j)) {
      if (acc[i] == 0) touched.push_back(i);
      acc[i] += x * y;
    }
  bool ok = true;
  for (auto i : touched) {
    if (acc[i] != 0) ok = false;
    acc[i] = 0;
  }
  return ok;
}

}  // namespace

KernelResult certified_kernel(const ColumnMatrix& m, SolveStats* stats) {
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  Compact c = compact(m);
  const std::size_t ncols = c.cols.size();
  std::vector<bool> nonzero(m.cols(), false);
  for (auto j : c.cols) nonzero[j] = true;

  auto assemble = [&](const std::vector<std::size_t>& piv_compact,
                      const std::vector<std::vector<Rat>>& entries) {
    // entries[f_index][pivot_row] for compact free columns in order.
    KernelResult out;
    out.rank = piv_compact.size();
    for (auto p : piv_compact) out.pivots.push_back(c.cols[p]);
    std::vector<bool> is_piv(ncols, false);
    for (auto p : piv_compact) is_piv[p] = true;
    std::size_t fi = 0;
    std::size_t next_compact = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!nonzero[j]) {
        out.basis.push_back(SparseVec{{j, Rat(1)}});
        continue;
      }
      std::size_t cj = next_compact++;
      if (is_piv[cj]) continue;
      SparseVec v;
      const auto& e = entries[fi++];
      for (std::size_t i = 0; i < piv_compact.size(); ++i)
        if (e[i] != 0) v.emplace_back(c.cols[piv_compact[i]], -e[i]);
      v.emplace_back(j, Rat(1));
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      out.basis.push_back(std::move(v));
    }
    return out;
  };

  if (ncols == 0) return assemble({}, {});

  std::vector<std::size_t> best_piv;
  std::vector<std::size_t> free_cols;
  std::vector<std::vector<std::uint32_t>> residues;  // per prime, flattened
  std::vector<std::uint32_t> primes;
  std::vector<Rat> acc(m.rows());
  std::vector<std::size_t> touched;

  for (std::size_t attempt = 0; attempt < kMaxPrimes; ++attempt) {
    std::uint32_t p = modular_prime(attempt);
    bool compressed = false;
    auto img = reduce_mod(m, c, p, 0x9e3779b97f4a7c15ULL + attempt, &compressed);
    ++st.primes_used;
    st.compressed = st.compressed || compressed;
    if (!img) continue;
    if (!primes.empty() && img->pivots.size() < best_piv.size()) continue;
    if (primes.empty() || img->pivots != best_piv) {
      best_piv = img->pivots;
      residues.clear();
      primes.clear();
      free_cols.clear();
      std::vector<bool> is_piv(ncols, false);
      for (auto q : best_piv) is_piv[q] = true;
      for (std::size_t j = 0; j < ncols; ++j)
        if (!is_piv[j]) free_cols.push_back(j);
    }
    const std::size_t r = best_piv.size();
    if (r == ncols) return assemble(best_piv, {});
    std::vector<std::uint32_t> flat(free_cols.size() * r);
    for (std::size_t f = 0; f < free_cols.size(); ++f)
      for (std::size_t i = 0; i < r; ++i) flat[f * r + i] = img->reduced.at(i, free_cols[f]);
    residues.push_back(std::move(flat));
    primes.push_back(p);

    // Lift by CRT and rational reconstruction.
    mpz_class modulus = 1;
    for (auto q : primes) modulus *= q;
    std::vector<std::vector<Rat>> entries(free_cols.size(), std::vector<Rat>(r));
    bool lifted = true;
    for (std::size_t f = 0; f < free_cols.size() && lifted; ++f)
      for (std::size_t i = 0; i < r && lifted; ++i) {
        mpz_class u = residues[0][f * r + i];
        mpz_class mod = primes[0];
        for (std::size_t k = 1; k < primes.size(); ++k) {
          mpz_class pk = primes[k];
          mpz_class rk = residues[k][f * r + i];
          mpz_class diff = (rk - u) % pk;
          if (diff < 0) diff += pk;
          mpz_class minv;
          mpz_invert(minv.get_mpz_t(), mpz_class(mod % pk).get_mpz_t(), pk.get_mpz_t());
          mpz_class t = diff * minv % pk;
          u += mod * t;
          mod *= pk;
        }
        if (u == 0) continue;
        auto rec = rational_reconstruct(u, modulus);
        if (!rec) lifted = false;
        else entries[f][i] = *rec;
      }
    if (!lifted) continue;
    KernelResult cand = assemble(best_piv, entries);
    bool ok = true;
    for (const auto& v : cand.basis)
      if (!verify_in_kernel(m, v, acc, touched)) {
        ok = false;
        break;
      }
    if (ok) return cand;
  }
  st.exact_fallback = true;
  return exact_kernel(m);
}

std::size_t certified_rank(const ColumnMatrix& m, SolveStats* stats) {
  Compact c = compact(m);
  const std::size_t ncols = c.cols.size();
  if (ncols == 0) return 0;
  const std::size_t cap = std::min(c.nrows, ncols);
  bool compressed = false;
  for (std::size_t attempt = 0; attempt < 2; ++attempt) {
    auto img = reduce_mod(m, c, modular_prime(attempt), 0x51ed2701f3a5c9b1ULL + attempt,
                          &compressed);
    if (stats) ++stats->primes_used;
    if (img && img->pivots.size() == cap) return cap;
  }
  return certified_kernel(m, stats).rank;
}

std::size_t span_rank(const std::vector<SparseVec>& vecs, std::size_t dim) {
  ColumnMatrix m(dim);
  for (const auto& v : vecs) m.add_column(v);
  return certified_rank(m);
}

std::vector<SparseVec> span_rref(const std::vector<SparseVec>& vecs, std::size_t dim) {
  // Row space of V (vectors as rows) = orthogonal complement of ker V.
  // Cheaper: rref of the dense transpose when small, else via kernel of V^T.
  MatQ d(vecs.size(), dim);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (const auto& [j, x] : vecs[i]) d(i, j) = x;
  Rref r = rref(d);
  std::vector<SparseVec> out;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) out.push_back(to_sparse(r.reduced.row(i)));
  return out;
}

}  // namespace osculum
