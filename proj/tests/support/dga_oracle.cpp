#include "dga_oracle.hpp"

#include <cstdint>

using leglab::Degree;
using leglab::DGA;

namespace oracle {

namespace {

bool eval(const leglab::Polynomial& p, const std::vector<bool>& eps) {
  bool sum = false;
  for (const auto& m : p.terms()) {
    bool prod = true;
    for (int g : m) prod = prod && eps[static_cast<std::size_t>(g)];
    sum ^= prod;
  }
  return sum;
}

int rank(std::vector<std::vector<bool>> rows) {
  int r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = static_cast<std::size_t>(r);
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != static_cast<std::size_t>(r) && rows[i][c])
        for (std::size_t k = 0; k < cols; ++k) rows[i][k] = rows[i][k] ^ rows[static_cast<std::size_t>(r)][k];
    ++r;
  }
  return r;
}

}  // namespace

std::vector<std::vector<bool>> augmentations(const DGA& d) {
  std::vector<int> zero;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.degrees[i] == 0) zero.push_back(static_cast<int>(i));
  std::vector<std::vector<bool>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << zero.size()); ++mask) {
    std::vector<bool> eps(d.size(), false);
    for (std::size_t b = 0; b < zero.size(); ++b) eps[static_cast<std::size_t>(zero[b])] = (mask >> b) & 1U;
    bool ok = true;
    for (const auto& diff : d.diffs) ok = ok && !eval(diff, eps);
    if (ok) out.push_back(eps);
  }
  return out;
}

std::map<Degree, int> linearized_homology(const DGA& d, const std::vector<bool>& eps) {
  const std::size_t n = d.size();
  // lin[i][j]: coefficient of a_j in the twisted linear part of d(a_i)
  std::vector<std::vector<bool>> lin(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& m : d.diffs[i].terms())
      for (std::size_t pos = 0; pos < m.size(); ++pos) {
        bool coeff = true;
        for (std::size_t o = 0; o < m.size(); ++o)
          if (o != pos) coeff = coeff && eps[static_cast<std::size_t>(m[o])];
        if (coeff) lin[i][static_cast<std::size_t>(m[pos])] = !lin[i][static_cast<std::size_t>(m[pos])];
      }
  std::map<Degree, int> count, rank_from;  // rank of d restricted to degree k
  for (std::size_t i = 0; i < n; ++i) count[d.degrees[i]] += 1;
  for (const auto& [k, c] : count) {
    std::vector<std::vector<bool>> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (d.degrees[i] == k) rows.push_back(lin[i]);
    rank_from[k] = rank(rows);
  }
  std::map<Degree, int> out;
  for (const auto& [k, c] : count) {
    const int h = c - rank_from[k] - (rank_from.contains(k + 1) ? rank_from[k + 1] : 0);
    if (h != 0) out[k] = h;
  }
  return out;
}

long euler_characteristic(const DGA& d) {
  long chi = 0;
  for (auto deg : d.degrees) chi += (deg % 2 == 0) ? 1 : -1;
  return chi;
}

}  // namespace oracle
