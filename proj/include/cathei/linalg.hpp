#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <cstdint>
#include <string>
#include <vector>

#include "cathei/rational.hpp"

namespace cathei {

/// Reduced row echelon form with the list of pivot columns; exact when the
/// scalar is a field type.
template <typename Scalar>
struct Echelon {
  DenseMatrix<Scalar> matrix;
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

namespace detail {

template <typename Scalar>
using SparseRow = std::vector<std::pair<Eigen::Index, Scalar>>;

// x - f y over sorted rows
template <typename Scalar>
SparseRow<Scalar> row_axpy(const SparseRow<Scalar>& x, const Scalar& f, const SparseRow<Scalar>& y) {
  SparseRow<Scalar> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(f * y[j].second));
      ++j;
    } else {
      Scalar v = x[i].second - f * y[j].second;
      if (v != Scalar(0)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename Scalar>
const Scalar* row_find(const SparseRow<Scalar>& r, Eigen::Index col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, Eigen::Index c) { return e.first < c; });
  return it != r.end() && it->first == col ? &it->second : nullptr;
}

}  // namespace detail

/// Rows are reduced one at a time against the pivot rows found so far, so
/// only nonzero entries are touched.
template <typename Scalar>
Echelon<Scalar> rref(const DenseMatrix<Scalar>& a) {
  using Row = detail::SparseRow<Scalar>;
  std::map<Eigen::Index, Row> pivot_rows;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    Row row;
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (a(r, c) != Scalar(0)) row.emplace_back(c, a(r, c));
    std::vector<std::pair<Eigen::Index, Scalar>> hits;
    for (const auto& [c, v] : row)
      if (pivot_rows.count(c)) hits.emplace_back(c, v);
    for (const auto& [c, v] : hits) row = detail::row_axpy(row, v, pivot_rows.at(c));
    if (row.empty()) continue;
    Eigen::Index p = row.front().first;
    Scalar inv = Scalar(1) / row.front().second;
    for (auto& e : row) e.second *= inv;
    for (auto& [c, other] : pivot_rows)
      if (const Scalar* v = detail::row_find(other, p)) other = detail::row_axpy(other, Scalar(*v), row);
    pivot_rows.emplace(p, std::move(row));
  }
  Echelon<Scalar> out;
  out.matrix = DenseMatrix<Scalar>::Zero(a.rows(), a.cols());
  Eigen::Index k = 0;
  for (const auto& [p, row] : pivot_rows) {
    out.pivots.push_back(p);
    for (const auto& [c, v] : row) out.matrix(k, c) = v;
    ++k;
  }
  return out;
}

template <typename Scalar>
Eigen::Index rank(const DenseMatrix<Scalar>& a) {
  return rref(a).rank();
}

/// Columns form a basis of the null space, one per free column.
template <typename Scalar>
DenseMatrix<Scalar> kernel_basis(const DenseMatrix<Scalar>& a) {
  Echelon<Scalar> e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  DenseMatrix<Scalar> k = DenseMatrix<Scalar>::Zero(a.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    Eigen::Index fc = free[f];
    k(fc, static_cast<Eigen::Index>(f)) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      k(e.pivots[r], static_cast<Eigen::Index>(f)) = -e.matrix(static_cast<Eigen::Index>(r), fc);
  }
  return k;
}

/// Canonical basis (rows of the RREF of the transpose) of a column space.
template <typename Scalar>
DenseMatrix<Scalar> column_space_basis(const DenseMatrix<Scalar>& a) {
  Echelon<Scalar> e = rref(DenseMatrix<Scalar>(a.transpose()));
  return e.matrix.topRows(e.rank());
}

template <typename Scalar>
bool same_column_space(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> x = column_space_basis(a), y = column_space_basis(b);
  return x.rows() == y.rows() && x.cols() == y.cols() && x == y;
}

template <typename Scalar>
DenseMatrix<Scalar> to_dense(const SparseMatrix<Scalar>& s) {
  DenseMatrix<Scalar> d = DenseMatrix<Scalar>::Zero(s.rows(), s.cols());
  for (Eigen::Index k = 0; k < s.outerSize(); ++k)
    for (typename SparseMatrix<Scalar>::InnerIterator it(s, k); it; ++it) d(it.row(), it.col()) = it.value();
  return d;
}

template <typename Scalar>
SparseMatrix<Scalar> to_sparse(const DenseMatrix<Scalar>& d) {
  std::vector<Eigen::Triplet<Scalar, std::int64_t>> t;
  for (Eigen::Index c = 0; c < d.cols(); ++c)
    for (Eigen::Index r = 0; r < d.rows(); ++r)
      if (d(r, c) != Scalar(0)) t.emplace_back(r, c, d(r, c));
  SparseMatrix<Scalar> s(d.rows(), d.cols());
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

/// Drops stored zeros so that structural comparison is exact equality.
template <typename Scalar>
void prune_zeros(SparseMatrix<Scalar>& s) {
  s.prune([](const Eigen::Index&, const Eigen::Index&, const Scalar& v) { return v != Scalar(0); });
  s.makeCompressed();
}

template <typename Scalar>
bool sparse_equal(const SparseMatrix<Scalar>& a, const SparseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  SparseMatrix<Scalar> d = a - b;
  for (Eigen::Index k = 0; k < d.outerSize(); ++k)
    for (typename SparseMatrix<Scalar>::InnerIterator it(d, k); it; ++it)
      if (it.value() != Scalar(0)) return false;
  return true;
}

template <typename Scalar>
bool sparse_is_zero(const SparseMatrix<Scalar>& a) {
  for (Eigen::Index k = 0; k < a.outerSize(); ++k)
    for (typename SparseMatrix<Scalar>::InnerIterator it(a, k); it; ++it)
      if (it.value() != Scalar(0)) return false;
  return true;
}

template <typename Scalar>
Scalar sparse_trace(const SparseMatrix<Scalar>& a) {
  Scalar t = 0;
  for (Eigen::Index k = 0; k < std::min(a.rows(), a.cols()); ++k) t += a.coeff(k, k);
  return t;
}

template <typename Scalar>
SparseMatrix<Scalar> sparse_identity(Eigen::Index n) {
  SparseMatrix<Scalar> s(n, n);
  s.setIdentity();
  return s;
}

/// Exact rank of a sparse matrix through dense elimination.
template <typename Scalar>
Eigen::Index sparse_rank(const SparseMatrix<Scalar>& a) {
  return rank(to_dense(a));
}

/// Rank over F_p; entries must have denominators prime to p. Never exceeds
/// the rank over ℚ.
inline Eigen::Index rank_mod_prime(const QMatrix& a, std::int64_t p = 2147483647) {
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(a.rows()), std::vector<std::int64_t>(static_cast<std::size_t>(a.cols())));
  auto mod = [p](const Integer& x) {
    Integer r = x % p;
    if (r < 0) r += p;
    return r.convert_to<std::int64_t>();
  };
  auto inverse = [p](std::int64_t x) {
    std::int64_t result = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) result = static_cast<std::int64_t>(static_cast<__int128>(result) * x % p);
      x = static_cast<std::int64_t>(static_cast<__int128>(x) * x % p);
      e >>= 1;
    }
    return result;
  };
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      const Rational& q = a(r, c);
      if (q == 0) continue;
      std::int64_t den = mod(Integer(denominator(q)));
      if (den == 0) throw std::domain_error("rank_mod_prime: denominator divisible by p");
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          static_cast<std::int64_t>(static_cast<__int128>(mod(Integer(numerator(q)))) * inverse(den) % p);
    }
  std::size_t rank = 0, rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    std::int64_t inv = inverse(m[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      std::int64_t f = static_cast<std::int64_t>(static_cast<__int128>(m[r][c]) * inv % p);
      for (std::size_t k = c; k < cols; ++k)
        if (m[rank][k] != 0) m[r][k] = static_cast<std::int64_t>(((m[r][k] - static_cast<__int128>(f) * m[rank][k]) % p + p) % p);
    }
    ++rank;
  }
  return static_cast<Eigen::Index>(rank);
}

/// Canonical digest of an exact sparse matrix: FNV-1a over its sorted
/// "row col value" triplets, hex encoded.
template <typename Scalar>
std::string matrix_digest(const SparseMatrix<Scalar>& a) {
  std::vector<std::tuple<Eigen::Index, Eigen::Index, std::string>> entries;
  for (Eigen::Index k = 0; k < a.outerSize(); ++k)
    for (typename SparseMatrix<Scalar>::InnerIterator it(a, k); it; ++it)
      if (it.value() != Scalar(0)) entries.emplace_back(it.row(), it.col(), it.value().str());
  std::sort(entries.begin(), entries.end());
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  mix(std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ";");
  for (const auto& [r, c, v] : entries) mix(std::to_string(r) + " " + std::to_string(c) + " " + v + ";");
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace cathei
