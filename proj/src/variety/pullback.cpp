#include "osculum/variety/pullback.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>


namespace osculum {

std::vector<MPoly> pullback_images(const std::vector<MPoly>& series, int d, int cap) {
  const std::size_t m = series.size();
  if (m == 0) throw std::invalid_argument("no series");
  const std::size_t nv = series[0].nvars();
  std::map<Exponent, MPoly> prev;
  prev.emplace(Exponent(m, 0), MPoly::constant(nv, Rat(1)).truncated(cap < 0 ? 1 << 30 : cap));
  for (int k = 1; k <= d; ++k) {
    std::map<Exponent, MPoly> cur;
    for (const auto& e : monomials_of_degree(m, k)) {
      std::size_t j = m;
      while (e[j - 1] == 0) --j;
      --j;
      Exponent parent = e;
      parent[j] -= 1;
      cur.emplace(e, mul_truncated(prev.at(parent), series[j], cap));
    }
    prev = std::move(cur);
  }
  std::vector<MPoly> out;
  out.reserve(prev.size());
  for (const auto& e : monomials_of_degree(m, d)) out.push_back(std::move(prev.at(e)));
  return out;
}

std::vector<int> pullback_weights(const std::vector<MPoly>& series, int d) {
  std::vector<int> w;
  for (const auto& s : series) {
    if (s.is_zero()) {
      w.push_back(0);
      continue;
    }
    if (!s.is_homogeneous()) return {};
    w.push_back(s.degree());
  }
  std::vector<int> out;
  for (const auto& e : monomials_of_degree(series.size(), d)) {
    int total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) total += e[i] * w[i];
    out.push_back(total);
  }
  return out;
}

namespace {

struct Blocks {
  std::vector<std::vector<std::size_t>> cols;  // global column ids per block
};

Blocks make_blocks(std::size_t ncols, const std::vector<int>& weights) {
  Blocks b;
  if (weights.empty()) {
    b.cols.emplace_back();
    for (std::size_t j = 0; j < ncols; ++j) b.cols[0].push_back(j);
    return b;
  }
  if (weights.size() != ncols) throw std::invalid_argument("weight count");
  std::map<int, std::size_t> slot;
  for (std::size_t j = 0; j < ncols; ++j) {
    auto [it, fresh] = slot.try_emplace(weights[j], b.cols.size());
    if (fresh) b.cols.emplace_back();
    b.cols[it->second].push_back(j);
  }
  return b;
}

ColumnMatrix block_matrix(const std::vector<MPoly>& images, const std::vector<std::size_t>& cols,
                          const std::vector<bool>& forced) {
  std::map<Exponent, std::size_t, GradedLexGreater> rows;
  for (auto j : cols)
    for (const auto& kv : images[j].terms()) rows.try_emplace(kv.first, rows.size());
  std::size_t extra = 0;
  for (auto j : cols)
    if (!forced.empty() && forced[j]) ++extra;
  ColumnMatrix m(rows.size() + extra);
  std::size_t next_extra = rows.size();
  for (auto j : cols) {
    SparseVec v;
    for (const auto& [e, c] : images[j].terms()) v.emplace_back(rows.at(e), c);
    if (!forced.empty() && forced[j]) v.emplace_back(next_extra++, Rat(1));
    m.add_column(std::move(v));
  }
  return m;
}

}  // namespace

KernelResult image_kernel(const std::vector<MPoly>& images, const std::vector<int>& weights,
                          const std::vector<std::size_t>& forced_zero) {
  std::vector<bool> forced;
  if (!forced_zero.empty()) {
    forced.assign(images.size(), false);
    for (auto j : forced_zero) forced.at(j) = true;
  }
  Blocks blocks = make_blocks(images.size(), weights);
  KernelResult out;
  for (const auto& cols : blocks.cols) {
    KernelResult kr = certified_kernel(block_matrix(images, cols, forced));
    out.rank += kr.rank;
    for (auto p : kr.pivots) out.pivots.push_back(cols[p]);
    for (auto& v : kr.basis) {
      for (auto& e : v) e.first = cols[e.first];
      out.basis.push_back(std::move(v));
    }
  }
  std::sort(out.pivots.begin(), out.pivots.end());
  std::sort(out.basis.begin(), out.basis.end(),
            [](const SparseVec& x, const SparseVec& y) { return x.back().first < y.back().first; });
  return out;
}

std::size_t image_kernel_dim(const std::vector<MPoly>& images, const std::vector<int>& weights) {
  Blocks blocks = make_blocks(images.size(), weights);
  std::size_t dim = 0;
  for (const auto& cols : blocks.cols) {
    ColumnMatrix m = block_matrix(images, cols, {});
    dim += cols.size() - certified_rank(m);
  }
  return dim;
}

}  // namespace osculum
