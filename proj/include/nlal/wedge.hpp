#ifndef NLAL_WEDGE_HPP
#define NLAL_WEDGE_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nlal {

/// Basis indices are 0-based everywhere in memory; the 1-based convention of
/// the file formats and reports is applied at the I/O boundary only.
using IndexTuple = std::vector<int>;

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// All strictly increasing arity-tuples in 0..dim-1, lexicographic order.
/// This order is the canonical basis order of wedge^arity everywhere
/// downstream (serialization depends on it). arity > dim gives the empty
/// list; arity 0 gives the single empty tuple (wedge^0 = ground field).
inline std::vector<IndexTuple> wedge_basis(int dim, int arity) {
  std::vector<IndexTuple> out;
  if (arity < 0 || arity > dim) return out;
  IndexTuple t(arity);
  for (int i = 0; i < arity; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    int i = arity - 1;
    while (i >= 0 && t[i] == dim - arity + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < arity; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

/// Sign of the permutation sorting the tuple (0 on a repeated index) and the
/// sorted tuple. All skew-symmetry signs in the library flow from here.
inline std::pair<int, IndexTuple> normalize_wedge(IndexTuple t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return {0, {}};
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  return {sign, std::move(t)};
}

/// Ranking of increasing tuples in the wedge_basis order (combinadic).
struct WedgeTable {
  int dim = 0;
  int arity = 0;
  std::vector<IndexTuple> basis;

  WedgeTable() = default;
  WedgeTable(int d, int a) : dim(d), arity(a), basis(wedge_basis(d, a)) {}

  long count() const { return static_cast<long>(basis.size()); }

  /// Lexicographic rank of a strictly increasing tuple.
  long rank(const IndexTuple& t) const {
    long r = 0;
    int prev = -1;
    for (int i = 0; i < arity; ++i) {
      for (int j = prev + 1; j < t[i]; ++j) r += binomial(dim - 1 - j, arity - 1 - i);
      prev = t[i];
    }
    return r;
  }
};

/// Mixed-radix odometer; returns false once every tuple has been visited.
/// Tuples start at all-zero.
inline bool next_index(std::vector<int>& t, const std::vector<int>& dims) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < dims[i]) return true;
    t[i] = 0;
  }
  return false;
}

inline bool next_index(std::vector<int>& t, int radix) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < radix) return true;
    t[i] = 0;
  }
  return false;
}

/// Row-major flattening of a fixed-radix tuple.
inline long tuple_rank(const std::vector<int>& t, int radix) {
  long r = 0;
  for (int x : t) r = r * radix + x;
  return r;
}

}  // namespace nlal

#endif
