#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "satake/combinatorics.hpp"
#include "satake/matrix.hpp"

namespace satake {

// Clifford algebra Cl(V) for the split form on rank 2n, with the
// normalization v.w + w.v = <v,w>.  Generators are normal-ordered as
//   ybar_{n-1} < ... < ybar_0 < y_0 < ... < y_{n-1},
// encoded as symbols 0..2n-1; symbol p pairs with symbol 2n-1-p.
//
// Element keys are bitmasks over the 2n symbols; coefficients live in R.
template <class R>
struct CliffordElt {
  int n{0};
  std::map<std::uint32_t, R> terms;

  bool is_zero() const { return terms.empty(); }

  void add(std::uint32_t mono, R coeff) {
    auto [it, inserted] = terms.try_emplace(mono, std::move(coeff));
    if (!inserted) {
      it->second += coeff;
      if (RingTraits<R>::is_zero(it->second)) terms.erase(it);
    } else if (RingTraits<R>::is_zero(it->second)) {
      terms.erase(it);
    }
  }

  CliffordElt operator+(const CliffordElt& o) const {
    if (n != o.n) throw RankMismatch("clifford elements of different rank");
    CliffordElt out = *this;
    for (const auto& [m, c] : o.terms) out.add(m, c);
    return out;
  }

  CliffordElt scaled(const R& c) const {
    CliffordElt out{n, {}};
    if (RingTraits<R>::is_zero(c)) return out;
    for (const auto& [m, v] : terms) {
      R cv = v * c;
      if (!RingTraits<R>::is_zero(cv)) out.terms.emplace(m, std::move(cv));
    }
    return out;
  }

  bool operator==(const CliffordElt& o) const { return n == o.n && terms == o.terms; }
};

inline int clifford_partner(int n, int sym) { return 2 * n - 1 - sym; }

inline int ybar_symbol(int n, int i) { return n - 1 - i; }
inline int ypos_symbol(int n, int i) { return n + i; }

namespace detail {

// Left multiplication s * (normal-ordered monomial): move s rightward past
// smaller symbols.  Produces the contraction term (when the partner of s sits
// in the monomial below s) and the placement term (when s is not repeated).
template <class R>
void insert_left(int n, int sym, std::uint32_t mono, const R& coeff, CliffordElt<R>& out) {
  const std::uint32_t below = mono & ((1u << sym) - 1);
  const int partner = clifford_partner(n, sym);
  if (partner < sym && (mono & (1u << partner))) {
    const std::uint32_t below_partner = mono & ((1u << partner) - 1);
    int sign = __builtin_popcount(below_partner) % 2 ? -1 : 1;
    R c = sign > 0 ? coeff : -coeff;
    out.add(mono & ~(1u << partner), std::move(c));
  }
  if (!(mono & (1u << sym))) {
    int sign = __builtin_popcount(below) % 2 ? -1 : 1;
    R c = sign > 0 ? coeff : -coeff;
    out.add(mono | (1u << sym), std::move(c));
  }
}

}  // namespace detail

// Left multiplication by a vector v = sum_p vec[p] * (symbol p).
template <class R>
CliffordElt<R> vector_mul(std::span<const R> vec, const CliffordElt<R>& e) {
  if (static_cast<int>(vec.size()) != 2 * e.n)
    throw RankMismatch("vector has wrong length for this Clifford algebra");
  CliffordElt<R> out{e.n, {}};
  for (int p = 0; p < 2 * e.n; ++p) {
    if (RingTraits<R>::is_zero(vec[p])) continue;
    for (const auto& [m, c] : e.terms) detail::insert_left(e.n, p, m, vec[p] * c, out);
  }
  return out;
}

// Normal-ordered product in Cl(V).
template <class R>
CliffordElt<R> cl_mul(const CliffordElt<R>& a, const CliffordElt<R>& b) {
  if (a.n != b.n) throw RankMismatch("clifford elements of different rank");
  CliffordElt<R> out{a.n, {}};
  for (const auto& [ma, ca] : a.terms) {
    // apply the symbols of ma right-to-left onto b
    CliffordElt<R> cur{a.n, {}};
    for (const auto& [mb, cb] : b.terms) cur.add(mb, ca * cb);
    for (int sym = 2 * a.n - 1; sym >= 0; --sym) {
      if (!(ma & (1u << sym))) continue;
      CliffordElt<R> next{a.n, {}};
      for (const auto& [m, c] : cur.terms) detail::insert_left(a.n, sym, m, c, next);
      cur = std::move(next);
    }
    for (auto& [m, c] : cur.terms) out.add(m, std::move(c));
  }
  return out;
}

template <class R>
CliffordElt<R> basis_vector_elt(int n, int sym) {
  CliffordElt<R> e{n, {}};
  e.add(1u << sym, RingTraits<R>::one());
  return e;
}

// <u, v> for vectors in y-coordinates: sum_p u_p v_{2n-1-p}.
template <class R>
R clifford_pairing(int n, std::span<const R> u, std::span<const R> v) {
  R acc = RingTraits<R>::zero();
  for (int p = 0; p < 2 * n; ++p) acc += u[p] * v[2 * n - 1 - p];
  return acc;
}

// y = y_0 ... y_{n-1}, the generator of the spin representation S = Cl(V).y.
template <class R>
CliffordElt<R> y_top(int n) {
  CliffordElt<R> e{n, {}};
  std::uint32_t mono = 0;
  for (int i = 0; i < n; ++i) mono |= 1u << ypos_symbol(n, i);
  e.add(mono, RingTraits<R>::one());
  return e;
}

// Standard spinor y_I = ybar_{i'_1} ... ybar_{i'_{n-r}} . y, with I' the
// increasing complement of I in {0..n-1}.
template <class R>
CliffordElt<R> standard_spinor(const StrictSubset& I, int n) {
  CliffordElt<R> e = y_top<R>(n);
  std::vector<int> comp;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(I.begin(), I.end(), i)) comp.push_back(i);
  for (auto it = comp.rbegin(); it != comp.rend(); ++it) {
    CliffordElt<R> next{n, {}};
    for (const auto& [m, c] : e.terms) detail::insert_left(n, ybar_symbol(n, *it), m, c, next);
    e = std::move(next);
  }
  return e;
}

// Linear combination of standard spinors y_I (even I) -- the model of S^+.
template <class R>
struct Spinor {
  int n{0};
  std::map<StrictSubset, R> terms;

  bool is_zero() const { return terms.empty(); }

  void add(const StrictSubset& I, R coeff) {
    auto [it, inserted] = terms.try_emplace(I, std::move(coeff));
    if (!inserted) {
      it->second += coeff;
      if (RingTraits<R>::is_zero(it->second)) terms.erase(it);
    } else if (RingTraits<R>::is_zero(it->second)) {
      terms.erase(it);
    }
  }

  Spinor operator+(const Spinor& o) const {
    if (n != o.n) throw RankMismatch("spinors of different rank");
    Spinor out = *this;
    for (const auto& [m, c] : o.terms) out.add(m, c);
    return out;
  }

  Spinor operator-(const Spinor& o) const {
    Spinor neg = o.scaled_neg();
    return *this + neg;
  }

  Spinor scaled(const R& c) const {
    Spinor out{n, {}};
    if (RingTraits<R>::is_zero(c)) return out;
    for (const auto& [m, v] : terms) {
      R cv = v * c;
      if (!RingTraits<R>::is_zero(cv)) out.terms.emplace(m, std::move(cv));
    }
    return out;
  }

  Spinor scaled_neg() const {
    Spinor out{n, {}};
    for (const auto& [m, v] : terms) out.terms.emplace(m, -v);
    return out;
  }

  bool operator==(const Spinor& o) const { return n == o.n && terms == o.terms; }
};

// Sign relating the product expression y_I to its normal-ordered monomial:
// the n-r barred factors of y_I appear in decreasing symbol order.
inline int spinor_norm_sign(int n, int r) {
  int m = n - r;
  return (m * (m - 1) / 2) % 2 ? -1 : 1;
}

// The Spinor basis below is normalized so that the so_2n raising operators
// eps_ibar ^ eps_{i+1} and eps_0 ^ eps_1 both act with coefficient +1 (the
// Schubert-basis normalization).  The product-ordered spinor y_I differs from
// the basis element by this sign.
inline int product_spinor_sign(int r) { return (r / 2) % 2 ? -1 : 1; }

// Crossing number of a subset: pairs (k in S, c not in S) with c < k.
inline int subset_crossing_parity(const StrictSubset& S, int n) {
  int cr = 0;
  for (int k : S)
    for (int c = 0; c < k && c < n; ++c)
      if (!std::binary_search(S.begin(), S.end(), c)) ++cr;
  return cr % 2;
}

namespace detail {

template <class R>
int spinor_basis_sign(int n, int r) {
  return spinor_norm_sign(n, r) * product_spinor_sign(r);
}

}  // namespace detail

template <class R>
Spinor<R> spinor_from_clifford(const CliffordElt<R>& e) {
  const int n = e.n;
  std::uint32_t ymask = 0;
  for (int i = 0; i < n; ++i) ymask |= 1u << ypos_symbol(n, i);
  Spinor<R> out{n, {}};
  for (const auto& [m, c] : e.terms) {
    if ((m & ymask) != ymask)
      throw Error("clifford element does not lie in the spin representation");
    StrictSubset I;
    for (int i = 0; i < n; ++i)
      if (!(m & (1u << ybar_symbol(n, i)))) I.push_back(i);
    int sign = detail::spinor_basis_sign<R>(n, static_cast<int>(I.size()));
    out.add(I, sign > 0 ? c : -c);
  }
  return out;
}

template <class R>
CliffordElt<R> clifford_from_spinor(const Spinor<R>& s) {
  CliffordElt<R> out{s.n, {}};
  std::uint32_t ymask = 0;
  for (int i = 0; i < s.n; ++i) ymask |= 1u << ypos_symbol(s.n, i);
  for (const auto& [I, c] : s.terms) {
    std::uint32_t m = ymask;
    for (int i = 0; i < s.n; ++i)
      if (!std::binary_search(I.begin(), I.end(), i)) m |= 1u << ybar_symbol(s.n, i);
    int sign = detail::spinor_basis_sign<R>(s.n, static_cast<int>(I.size()));
    out.add(m, sign > 0 ? c : -c);
  }
  return out;
}

// so_2n action of v ^ w on a spinor: v.w.s - (1/2)<v,w> s.  The correction is
// computed by exact division by 2 and throws InexactDivision when the weight
// is genuinely half-integral; so_action_doubled below is always exact.
template <class R>
Spinor<R> so_action(std::span<const R> v, std::span<const R> w, const Spinor<R>& s);

template <class R>
Spinor<R> so_action_doubled(std::span<const R> v, std::span<const R> w, const Spinor<R>& s);

// Oracle: expansion of (-1)^{sum I} x_{i_1}...x_{i_r} . x_emptyset in the
// standard spinor basis, by raw Clifford multiplication.  The barred vectors
// are x_ibar = y_ibar + sum_j A(j,i) y_j (their span must be isotropic, i.e. A
// skew); the positive vectors are x_i = y_i + sum_{j>i} B(j,i) y_j.
template <class R>
Spinor<R> spinor_expand_bruteforce(const Matrix<R>& A, const Matrix<R>& B, const StrictSubset& I);

// Closed form via the Pfaffian expansion: x_I = sum_{K even} Pf_K(A(I)) y_K.
template <class R>
Spinor<R> spinor_expand_pfaffian(const Matrix<R>& A, const Matrix<R>& B, const StrictSubset& I);

// Unreduced form: the barred vectors are given by x_ibar = sum_j Cbar(j,i)
// y_jbar + sum_j C(j,i) y_j with Cbar unitriangular; the reduction to skew
// normal form multiplies through Cbar^{-1}.
template <class R>
Spinor<R> spinor_expand_pfaffian(const Matrix<R>& Cbar, const Matrix<R>& C, const Matrix<R>& B,
                                 const StrictSubset& I);

// Assemble the skew matrix A(I) with rows/columns of the first block labelled
// n-1,...,0 top to bottom and the B-block columns labelled by I (ascending).
template <class R>
SkewMatrix<R> assemble_pfaffian_matrix(const Matrix<R>& A, const Matrix<R>& B,
                                       const StrictSubset& I);

// ---- implementation ----

template <class R>
Spinor<R> so_action_doubled(std::span<const R> v, std::span<const R> w, const Spinor<R>& s) {
  const int n = s.n;
  if (static_cast<int>(v.size()) != 2 * n || static_cast<int>(w.size()) != 2 * n)
    throw RankMismatch("vector has wrong length for this spinor rank");
  CliffordElt<R> e = clifford_from_spinor(s);
  CliffordElt<R> vw = vector_mul(v, vector_mul(w, e));
  R pair = clifford_pairing<R>(n, v, w);
  CliffordElt<R> doubled = vw.scaled(RingTraits<R>::one() + RingTraits<R>::one()) +
                           e.scaled(-pair);
  return spinor_from_clifford(doubled);
}

template <class R>
Spinor<R> so_action(std::span<const R> v, std::span<const R> w, const Spinor<R>& s) {
  Spinor<R> d = so_action_doubled(v, w, s);
  Spinor<R> out{s.n, {}};
  for (const auto& [I, c] : d.terms) out.add(I, RingTraits<R>::halve(c));
  return out;
}

namespace detail {

template <class R>
void check_pfaffian_inputs(const Matrix<R>& A, const Matrix<R>& B, const StrictSubset& I) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw RankMismatch("A and B must be square of equal size");
  const int n = A.rows();
  if (!A.is_skew()) throw NotIsotropicBasis("the barred span is not isotropic (A is not skew)");
  for (int j = 0; j < n; ++j) {
    if (!(B(j, j) == RingTraits<R>::one())) throw Error("B must be unitriangular");
    for (int i = j + 1; i < n; ++i)
      if (!RingTraits<R>::is_zero(B(j, i))) throw Error("B must be lower unitriangular");
  }
  if (I.size() % 2) throw ParityViolation("S^+ spinors are indexed by even subsets");
  for (std::size_t a = 0; a < I.size(); ++a) {
    if (I[a] < 0 || I[a] >= n) throw OutOfRange("subset entry out of range");
    if (a > 0 && I[a - 1] >= I[a]) throw OutOfRange("subset entries must increase");
  }
}

}  // namespace detail

template <class R>
Spinor<R> spinor_expand_bruteforce(const Matrix<R>& A, const Matrix<R>& B, const StrictSubset& I) {
  detail::check_pfaffian_inputs(A, B, I);
  const int n = A.rows();
  // barred vectors in y-coordinates
  auto xbar = [&](int i) {
    std::vector<R> v(2 * n, RingTraits<R>::zero());
    v[ybar_symbol(n, i)] = RingTraits<R>::one();
    for (int j = 0; j < n; ++j) v[ypos_symbol(n, j)] = A(j, i);
    return v;
  };
  auto xpos = [&](int i) {
    std::vector<R> v(2 * n, RingTraits<R>::zero());
    for (int j = i; j < n; ++j) v[ypos_symbol(n, j)] = B(j, i);
    return v;
  };
  // isotropy audit of the constructed spans
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto vi = xbar(i), vj = xbar(j);
      if (!RingTraits<R>::is_zero(clifford_pairing<R>(n, vi, vj)))
        throw NotIsotropicBasis("barred span fails isotropy");
    }
  // x_empty = xbar_0 ... xbar_{n-1} . y
  CliffordElt<R> e = y_top<R>(n);
  for (int i = n - 1; i >= 0; --i) {
    auto v = xbar(i);
    e = vector_mul(std::span<const R>(v), e);
  }
  // then (-1)^{sum I} x_{i_1} ... x_{i_r} . x_empty
  for (auto it = I.rbegin(); it != I.rend(); ++it) {
    auto v = xpos(*it);
    e = vector_mul(std::span<const R>(v), e);
  }
  int total = 0;
  for (int i : I) total += i;
  if (total % 2) e = e.scaled(-RingTraits<R>::one());
  return spinor_from_clifford(e);
}

template <class R>
SkewMatrix<R> assemble_pfaffian_matrix(const Matrix<R>& A, const Matrix<R>& B,
                                       const StrictSubset& I) {
  const int n = A.rows();
  const int r = static_cast<int>(I.size());
  Matrix<R> m(n + r, n + r);
  std::vector<int> labels(n + r);
  for (int a = 0; a < n; ++a) labels[a] = n - 1 - a;  // descending block labels
  for (int b = 0; b < r; ++b) labels[n + b] = n + b;  // B columns after the block
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = A(n - 1 - a, n - 1 - b);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < r; ++b) {
      const int row_label = n - 1 - a;
      const R& entry = (row_label >= I[b]) ? B(row_label, I[b]) : RingTraits<R>::zero();
      m(a, n + b) = entry;
      m(n + b, a) = -entry;
    }
  m.set_row_labels(std::move(labels));
  return SkewMatrix<R>(std::move(m));
}

template <class R>
Spinor<R> spinor_expand_pfaffian(const Matrix<R>& Cbar, const Matrix<R>& C, const Matrix<R>& B,
                                 const StrictSubset& I) {
  const int n = Cbar.rows();
  for (int i = 0; i < n; ++i) {
    if (!(Cbar(i, i) == RingTraits<R>::one()))
      throw Error("Cbar must be unitriangular");
    for (int j = i + 1; j < n; ++j)
      if (!RingTraits<R>::is_zero(Cbar(j, i))) throw Error("Cbar must be upper unitriangular");
  }
  return spinor_expand_pfaffian(C * unitriangular_inverse(Cbar), B, I);
}

template <class R>
Spinor<R> spinor_expand_pfaffian(const Matrix<R>& A, const Matrix<R>& B, const StrictSubset& I) {
  detail::check_pfaffian_inputs(A, B, I);
  const int n = A.rows();
  SkewMatrix<R> AI = assemble_pfaffian_matrix(A, B, I);
  Spinor<R> out{n, {}};
  // The sub-Pfaffian on the block rows K carries a normalization sign against
  // the spinor basis: (-1)^{sum K} from the basis ordering and the crossing
  // parity of I from the product ordering of the positive factors.
  const int isign = subset_crossing_parity(I, n);
  for (const auto& K : even_subsets(n)) {
    std::vector<int> sel(K.begin(), K.end());
    for (std::size_t b = 0; b < I.size(); ++b) sel.push_back(n + static_cast<int>(b));
    R coeff = pfaffian_sub(AI, std::span<const int>(sel));
    if (RingTraits<R>::is_zero(coeff)) continue;
    int ksum = 0;
    for (int k : K) ksum += k;
    if ((ksum + isign) % 2) coeff = -coeff;
    out.add(K, std::move(coeff));
  }
  return out;
}

}  // namespace satake
