#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <vector>

#include "satake/combinatorics.hpp"
#include "satake/matrix.hpp"

namespace satake {

// Element of the k-th exterior power of a rank-n free module.  Basis keys are
// strictly increasing 1-based index sets; coefficients live in R.
template <class R>
class WedgeVector {
 public:
  WedgeVector(int k, int n) : k_(k), n_(n) {}

  static WedgeVector basis(int k, int n, IndexSet I) {
    WedgeVector w(k, n);
    w.add(I, RingTraits<R>::one());
    return w;
  }

  int k() const { return k_; }
  int n() const { return n_; }
  const std::map<IndexSet, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Accumulate coeff * (e_{idx[0]} ^ ... ^ e_{idx[k-1]}), normalizing by the
  // sort permutation sign; repeated indices contribute nothing.
  void add(std::span<const int> idx, R coeff) {
    if (static_cast<int>(idx.size()) != k_)
      throw DimensionMismatch("wedge monomial has wrong degree");
    for (int i : idx)
      if (i < 1 || i > n_) throw OutOfRange("wedge index out of range");
    IndexSet key(idx.begin(), idx.end());
    int sign = 1;
    for (std::size_t i = 1; i < key.size(); ++i) {
      int val = key[i];
      std::size_t j = i;
      while (j > 0 && key[j - 1] > val) {
        key[j] = key[j - 1];
        --j;
        sign = -sign;
      }
      key[j] = val;
    }
    for (std::size_t a = 1; a < key.size(); ++a)
      if (key[a - 1] == key[a]) return;
    R c = sign > 0 ? coeff : -coeff;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (RingTraits<R>::is_zero(it->second)) terms_.erase(it);
    } else if (RingTraits<R>::is_zero(it->second)) {
      terms_.erase(it);
    }
  }

  WedgeVector operator+(const WedgeVector& o) const {
    check_shape(o);
    WedgeVector out = *this;
    for (const auto& [key, c] : o.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(key, c);
      if (!inserted) {
        it->second += c;
        if (RingTraits<R>::is_zero(it->second)) out.terms_.erase(it);
      }
    }
    return out;
  }

  WedgeVector operator-(const WedgeVector& o) const { return *this + o.scaled_neg(); }

  WedgeVector scaled(const R& c) const {
    WedgeVector out(k_, n_);
    if (RingTraits<R>::is_zero(c)) return out;
    for (const auto& [key, v] : terms_) {
      R cv = v * c;
      if (!RingTraits<R>::is_zero(cv)) out.terms_.emplace(key, std::move(cv));
    }
    return out;
  }

  WedgeVector scaled_neg() const {
    WedgeVector out(k_, n_);
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, -v);
    return out;
  }

  bool operator==(const WedgeVector& o) const {
    return k_ == o.k_ && n_ == o.n_ && terms_ == o.terms_;
  }

 private:
  int k_, n_;
  std::map<IndexSet, R> terms_;

  void check_shape(const WedgeVector& o) const {
    if (k_ != o.k_ || n_ != o.n_) throw DimensionMismatch("wedge vectors have different shapes");
  }
};

// Normalized wedge monomial coeff * e_{idx[0]} ^ ... ^ e_{idx[k-1]}.
template <class R>
WedgeVector<R> wedge_normalize(std::span<const int> idx, R coeff, int n) {
  WedgeVector<R> w(static_cast<int>(idx.size()), n);
  w.add(idx, std::move(coeff));
  return w;
}

// Lie-algebra (derivation) action of an n x n matrix on the k-th exterior
// power: M acts on one slot at a time, Leibniz style.  Column c of M holds the
// image of basis vector e_{c+1}.
template <class R>
WedgeVector<R> derivation_action(const Matrix<R>& M, const WedgeVector<R>& v) {
  if (M.rows() != v.n() || M.cols() != v.n())
    throw DimensionMismatch("matrix size does not match wedge rank");
  WedgeVector<R> out(v.k(), v.n());
  std::vector<int> idx;
  for (const auto& [key, c] : v.terms()) {
    for (std::size_t slot = 0; slot < key.size(); ++slot) {
      for (int r = 0; r < v.n(); ++r) {
        const R& e = M(r, key[slot] - 1);
        if (RingTraits<R>::is_zero(e)) continue;
        idx.assign(key.begin(), key.end());
        idx[slot] = r + 1;
        out.add(idx, c * e);
      }
    }
  }
  return out;
}

}  // namespace satake
