#ifndef NLAL_TENSOR_HPP
#define NLAL_TENSOR_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "nlal/matrix.hpp"
#include "nlal/wedge.hpp"

namespace nlal {

namespace detail {

/// Indices of the nonzero coordinates of each vector, for sparse multilinear
/// expansion.
inline std::vector<std::vector<int>> supports(std::span<const Vec> vecs) {
  std::vector<std::vector<int>> s(vecs.size());
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (int j = 0; j < static_cast<int>(vecs[i].size()); ++j)
      if (!vecs[i][j].is_zero()) s[i].push_back(j);
  return s;
}

}  // namespace detail

/// Totally skew-symmetric multilinear map wedge^arity(Q^dim) -> Q^target,
/// stored on the increasing-tuple basis. Evaluation on a permuted tuple picks
/// up the sign of the sorting permutation; a repeated index gives zero.
class SkewTensor {
public:
  SkewTensor() = default;
  SkewTensor(int dim, int arity, int target)
      : dim_(dim), arity_(arity), target_(target), wt_(dim, arity),
        a_(static_cast<std::size_t>(wt_.count()) * target) {}

  int dim() const { return dim_; }
  int arity() const { return arity_; }
  int target_dim() const { return target_; }
  const WedgeTable& table() const { return wt_; }

  std::span<const Rational> value(long rank) const {
    return {a_.data() + static_cast<std::size_t>(rank) * target_, static_cast<std::size_t>(target_)};
  }

  /// Adds c to the target coordinate at an arbitrary-order index tuple,
  /// normalizing into storage (no-op on a repeated index).
  void add(const IndexTuple& t, int coord, const Rational& c) {
    auto [sign, sorted] = normalize_wedge(t);
    if (sign == 0) return;
    a_[static_cast<std::size_t>(wt_.rank(sorted)) * target_ + coord] += Rational(sign) * c;
  }

  void set_value(long rank, const Vec& v) {
    if (static_cast<int>(v.size()) != target_) throw std::invalid_argument("SkewTensor::set_value: length");
    for (int k = 0; k < target_; ++k) a_[static_cast<std::size_t>(rank) * target_ + k] = v[k];
  }

  /// Value on basis vectors indexed by an arbitrary-order tuple.
  Vec eval(const IndexTuple& t) const {
    Vec out(target_, Rational(0));
    auto [sign, sorted] = normalize_wedge(t);
    if (sign == 0) return out;
    auto v = value(wt_.rank(sorted));
    for (int k = 0; k < target_; ++k) out[k] = Rational(sign) * v[k];
    return out;
  }

  /// Multilinear extension to general vectors.
  Vec eval_vecs(std::span<const Vec> args) const {
    if (static_cast<int>(args.size()) != arity_) throw std::invalid_argument("SkewTensor::eval_vecs: arity");
    Vec out(target_, Rational(0));
    auto sup = detail::supports(args);
    std::vector<int> pick(arity_, 0);
    std::vector<int> radix(arity_);
    for (int i = 0; i < arity_; ++i) {
      if (sup[i].empty()) return out;
      radix[i] = static_cast<int>(sup[i].size());
    }
    IndexTuple t(arity_);
    do {
      Rational c(1);
      for (int i = 0; i < arity_; ++i) {
        t[i] = sup[i][pick[i]];
        c *= args[i][t[i]];
      }
      auto [sign, sorted] = normalize_wedge(t);
      if (sign == 0) continue;
      auto v = value(wt_.rank(sorted));
      for (int k = 0; k < target_; ++k) out[k] += Rational(sign) * c * v[k];
    } while (next_index(pick, radix));
    return out;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// this += c * other (same shape).
  SkewTensor& axpy(const Rational& c, const SkewTensor& o) {
    if (dim_ != o.dim_ || arity_ != o.arity_ || target_ != o.target_)
      throw std::invalid_argument("SkewTensor::axpy: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += c * o.a_[i];
    return *this;
  }

  friend bool operator==(const SkewTensor& a, const SkewTensor& b) {
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.target_ == b.target_ && a.a_ == b.a_;
  }

private:
  int dim_ = 0, arity_ = 0, target_ = 0;
  WedgeTable wt_;
  std::vector<Rational> a_;
};

/// Multilinear map on blocks x trailing slots: `blocks` wedge factors of the
/// given arity over Q^gdim followed by plain slots of arbitrary dimensions,
/// valued in Q^target. Skew inside each block, no symmetry across blocks or
/// slots. Entry layout: block ranks row-major, then slot indices row-major,
/// then the target coordinate.
class BlockCochain {
public:
  BlockCochain() = default;
  BlockCochain(int gdim, int blocks, int block_arity, std::vector<int> slot_dims, int target)
      : gdim_(gdim), blocks_(blocks), arity_(block_arity), slots_(std::move(slot_dims)),
        target_(target), wt_(gdim, block_arity) {
    long n = 1;
    for (int b = 0; b < blocks_; ++b) n *= wt_.count();
    for (int d : slots_) n *= d;
    a_.assign(static_cast<std::size_t>(n) * target_, Rational(0));
    keys_ = n;
  }

  int gdim() const { return gdim_; }
  int blocks() const { return blocks_; }
  int block_arity() const { return arity_; }
  const std::vector<int>& slot_dims() const { return slots_; }
  int target_dim() const { return target_; }
  long key_count() const { return keys_; }
  const WedgeTable& table() const { return wt_; }

  long position(std::span<const long> block_ranks, std::span<const int> slots) const {
    long p = 0;
    for (int b = 0; b < blocks_; ++b) p = p * wt_.count() + block_ranks[b];
    for (std::size_t s = 0; s < slots_.size(); ++s) p = p * slots_[s] + slots[s];
    return p;
  }

  std::span<Rational> value_at(long pos) {
    return {a_.data() + static_cast<std::size_t>(pos) * target_, static_cast<std::size_t>(target_)};
  }
  std::span<const Rational> value_at(long pos) const {
    return {a_.data() + static_cast<std::size_t>(pos) * target_, static_cast<std::size_t>(target_)};
  }

  /// Value on basis arguments: one index tuple per block (any order), one
  /// index per trailing slot.
  Vec eval(std::span<const IndexTuple> block_args, std::span<const int> slots) const {
    if (static_cast<int>(block_args.size()) != blocks_ || slots.size() != slots_.size())
      throw std::invalid_argument("BlockCochain::eval: shape mismatch");
    Vec out(target_, Rational(0));
    int sign = 1;
    std::vector<long> ranks(blocks_);
    for (int b = 0; b < blocks_; ++b) {
      auto [s, sorted] = normalize_wedge(block_args[b]);
      if (s == 0) return out;
      sign *= s;
      ranks[b] = wt_.rank(sorted);
    }
    auto v = value_at(position(ranks, slots));
    for (int k = 0; k < target_; ++k) out[k] = Rational(sign) * v[k];
    return out;
  }

  /// Multilinear extension: per block, `block_arity` coordinate vectors in
  /// Q^gdim; per slot, one coordinate vector of the slot's dimension.
  Vec eval_vecs(std::span<const Vec> block_vecs, std::span<const Vec> slot_vecs) const {
    if (static_cast<int>(block_vecs.size()) != blocks_ * arity_ || slot_vecs.size() != slots_.size())
      throw std::invalid_argument("BlockCochain::eval_vecs: shape mismatch");
    Vec out(target_, Rational(0));
    std::vector<Vec> all(block_vecs.begin(), block_vecs.end());
    all.insert(all.end(), slot_vecs.begin(), slot_vecs.end());
    auto sup = detail::supports(all);
    std::vector<int> radix(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (sup[i].empty()) return out;
      radix[i] = static_cast<int>(sup[i].size());
    }
    std::vector<int> pick(all.size(), 0);
    std::vector<IndexTuple> blocks(blocks_, IndexTuple(arity_));
    std::vector<int> slots(slots_.size());
    do {
      Rational c(1);
      for (std::size_t i = 0; i < all.size(); ++i) {
        int idx = sup[i][pick[i]];
        c *= all[i][idx];
        if (static_cast<int>(i) < blocks_ * arity_)
          blocks[i / arity_][i % arity_] = idx;
        else
          slots[i - blocks_ * arity_] = idx;
      }
      Vec v = eval(blocks, slots);
      axpy(out, c, v);
    } while (next_index(pick, radix));
    return out;
  }

  void add(std::span<const IndexTuple> block_args, std::span<const int> slots, int coord,
           const Rational& c) {
    int sign = 1;
    std::vector<long> ranks(blocks_);
    for (int b = 0; b < blocks_; ++b) {
      auto [s, sorted] = normalize_wedge(block_args[b]);
      if (s == 0) return;
      sign *= s;
      ranks[b] = wt_.rank(sorted);
    }
    a_[static_cast<std::size_t>(position(ranks, slots)) * target_ + coord] += Rational(sign) * c;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  BlockCochain& axpy(const Rational& c, const BlockCochain& o) {
    if (a_.size() != o.a_.size() || gdim_ != o.gdim_ || blocks_ != o.blocks_ || slots_ != o.slots_)
      throw std::invalid_argument("BlockCochain::axpy: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += c * o.a_[i];
    return *this;
  }

  friend bool operator==(const BlockCochain& a, const BlockCochain& b) {
    return a.gdim_ == b.gdim_ && a.blocks_ == b.blocks_ && a.arity_ == b.arity_ &&
           a.slots_ == b.slots_ && a.target_ == b.target_ && a.a_ == b.a_;
  }

private:
  static void axpy(Vec& v, const Rational& c, const Vec& w) { nlal::axpy(v, c, w); }

  int gdim_ = 0, blocks_ = 0, arity_ = 0;
  std::vector<int> slots_;
  int target_ = 0;
  WedgeTable wt_;
  std::vector<Rational> a_;
  long keys_ = 0;
};

}  // namespace nlal

#endif
