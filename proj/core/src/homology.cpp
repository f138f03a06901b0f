#include "dualcx/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>

namespace dualcx {

using boost::multiprecision::cpp_rational;

BoundaryMatrix boundary_matrix(const Complex& cx, int k) {
  if (k < 0 || k > cx.dim())
    fail("DegreeOutOfRange", "degree " + std::to_string(k) +
                                 " outside 0.." + std::to_string(cx.dim()));
  BoundaryMatrix m;
  m.degree = k;
  m.rows = cx.cells_of_dim(k - 1);
  m.cols = cx.cells_of_dim(k);
  std::map<CellId, std::size_t> row_of;
  for (std::size_t i = 0; i < m.rows.size(); ++i) row_of[m.rows[i]] = i;
  m.entries.assign(m.rows.size(), std::vector<int>(m.cols.size(), 0));
  for (std::size_t j = 0; j < m.cols.size(); ++j) {
    const Cell& c = cx.cell(m.cols[j]);
    for (std::size_t i = 0; i < c.facets.size(); ++i)
      m.entries[row_of.at(c.facets[i])][j] = (i % 2 == 0) ? 1 : -1;
  }
  return m;
}

std::vector<BigInt> smith_invariant_factors(
    std::vector<std::vector<BigInt>> m) {
  std::vector<BigInt> factors;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t top = 0;

  while (top < rows && top < cols) {
    // smallest-magnitude nonzero pivot in the remaining block
    std::size_t pi = top, pj = top;
    BigInt best = 0;
    for (std::size_t i = top; i < rows; ++i)
      for (std::size_t j = top; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        BigInt mag = abs(m[i][j]);
        if (best == 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    std::swap(m[top], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = top + 1; i < rows; ++i) {
        if (m[i][top] == 0) continue;
        BigInt q = m[i][top] / m[top][top];
        for (std::size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
        if (m[i][top] != 0) {  // remainder smaller than pivot: swap up
          std::swap(m[top], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = top + 1; j < cols; ++j) {
        if (m[top][j] == 0) continue;
        BigInt q = m[top][j] / m[top][top];
        for (std::size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
        if (m[top][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][j]);
          clean = false;
        }
      }
    }
    factors.push_back(abs(m[top][top]));
    ++top;
  }

  // Enforce the divisibility chain; only the multiset matters here, so the
  // pairwise (gcd, lcm) fix suffices.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        if (factors[j] % factors[i] == 0) continue;
        BigInt g = gcd(factors[i], factors[j]);
        BigInt l = factors[i] / g * factors[j];
        factors[i] = g;
        factors[j] = l;
        changed = true;
      }
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

namespace {

std::vector<std::vector<BigInt>> as_big(const BoundaryMatrix& m,
                                        bool augment_with_ones) {
  std::size_t rows = m.entries.size() + (augment_with_ones ? 1 : 0);
  std::vector<std::vector<BigInt>> big(rows,
                                       std::vector<BigInt>(m.cols.size(), 0));
  for (std::size_t i = 0; i < m.entries.size(); ++i)
    for (std::size_t j = 0; j < m.cols.size(); ++j)
      big[i][j] = m.entries[i][j];
  if (augment_with_ones)
    for (std::size_t j = 0; j < m.cols.size(); ++j) big[rows - 1][j] = 1;
  return big;
}

}  // namespace

HomologyResult homology_Z(const Complex& cx, bool reduced) {
  HomologyResult out;
  out.reduced = reduced;
  int d = cx.dim();
  if (d < 0) return out;

  // ranks r[k] of the boundary maps; r[0] is the augmentation rank when
  // reduced, 0 otherwise; invariant factors of degree k+1 give torsion at k.
  std::vector<long long> rank(d + 2, 0);
  std::vector<std::vector<BigInt>> inv(d + 2);
  for (int k = 0; k <= d; ++k) {
    BoundaryMatrix m = boundary_matrix(cx, k);
    auto factors =
        smith_invariant_factors(as_big(m, reduced && k == 0));
    rank[k] = (long long)factors.size();
    inv[k] = std::move(factors);
  }

  for (int k = 0; k <= d; ++k) {
    long long n_k = (long long)cx.count_of_dim(k);
    out.betti.push_back(n_k - rank[k] - rank[k + 1]);
    std::vector<BigInt> tors;
    for (const BigInt& f : inv[k + 1])
      if (f > 1) tors.push_back(f);
    out.torsion.push_back(std::move(tors));
  }
  return out;
}

namespace {

long long rational_rank(const Complex& cx, int k, bool augment) {
  std::vector<CellId> rows = cx.cells_of_dim(k - 1);
  std::vector<CellId> cols = cx.cells_of_dim(k);
  std::map<CellId, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
  std::size_t nr = rows.size() + (augment ? 1 : 0);
  std::vector<std::vector<cpp_rational>> m(
      nr, std::vector<cpp_rational>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Cell& c = cx.cell(cols[j]);
    for (std::size_t i = 0; i < c.facets.size(); ++i)
      m[row_of.at(c.facets[i])][j] = (i % 2 == 0) ? 1 : -1;
    if (augment) m[nr - 1][j] = 1;
  }

  long long rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols.size() && row < nr; ++col) {
    std::size_t piv = row;
    while (piv < nr && m[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(m[row], m[piv]);
    for (std::size_t i = row + 1; i < nr; ++i) {
      if (m[i][col] == 0) continue;
      cpp_rational f = m[i][col] / m[row][col];
      for (std::size_t j = col; j < cols.size(); ++j)
        m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<long long> betti_Q(const Complex& cx, bool reduced) {
  std::vector<long long> out;
  int d = cx.dim();
  if (d < 0) return out;
  std::vector<long long> rank(d + 2, 0);
  for (int k = 0; k <= d; ++k)
    rank[k] = rational_rank(cx, k, reduced && k == 0);
  for (int k = 0; k <= d; ++k)
    out.push_back((long long)cx.count_of_dim(k) - rank[k] - rank[k + 1]);
  return out;
}

bool is_Q_acyclic(const Complex& cx) {
  for (long long b : betti_Q(cx, /*reduced=*/true))
    if (b != 0) return false;
  return true;
}

}  // namespace dualcx
