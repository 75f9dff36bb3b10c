#pragma once

#include <optional>

#include "satake/clifford.hpp"
#include "satake/combinatorics.hpp"
#include "satake/matrix.hpp"

namespace satake {

// Type D geometry on V = C^{2n} with basis eps_{bar(n-1)},...,eps_bar0,
// eps_0,...,eps_{n-1} and form <eps_bar(i), eps_j> = delta_ij.  Rows/columns
// of 2n x 2n matrices follow that display order; t-variables are 0-based
// t0..t_{n-1}.
struct QuadricContext {
  int n{3};
  VarSet tvars;  // t0..t_{n-1}

  explicit QuadricContext(int n_);
};

// Basis label: barred or positive index in {0..n-1}.
struct QLabel {
  bool bar{false};
  int i{0};

  friend constexpr auto operator<=>(const QLabel&, const QLabel&) = default;
};

int qlabel_row(int n, QLabel l);        // row index in the 2n display order
QLabel qlabel_of_row(int n, int row);
std::string qlabel_str(QLabel l);       // "b2" / "2"
std::optional<QLabel> parse_qlabel(const std::string& s, int n);

// Operator matrix of a sum of wedge terms c * (eps_a ^ eps_b), acting by
// (v ^ w) u = <v,u> w - <w,u> v.
Matrix<Poly> wedge_operator_matrix(int n, const std::vector<std::tuple<QLabel, QLabel, Poly>>& terms);

// Principal nilpotent minus Cartan for so_2n (Eq.-(6) shape).
Matrix<Poly> build_xi_t_D(const QuadricContext& ctx);
// The centralizer element completing the odd powers of xi_t.
Matrix<Poly> build_eta_t(const QuadricContext& ctx);
// Closed form for the matrix entries of xi_t^{2j-1}, 1 <= j <= n-1.
Matrix<Poly> quadric_odd_power_closed(const QuadricContext& ctx, int j);

// <u, v> for coordinate vectors in the 2n display order.
Poly quadric_form_pairing(int n, std::span<const Poly> u, std::span<const Poly> v);

// Multiplication by the hyperplane class on H_T* Q in the Schubert basis,
// through the sign identification sigma_bar(i) = (-1)^i eps_bar(i).
std::vector<std::pair<QLabel, Poly>> quadric_chevalley(const QuadricContext& ctx, QLabel l);

// Restrictions sigma|_{p} for all 2n classes and 2n fixed points.
class QuadricRestrictionTable {
 public:
  QuadricRestrictionTable(int n, std::map<std::pair<QLabel, QLabel>, Poly> entries)
      : n_(n), entries_(std::move(entries)) {}

  int n() const { return n_; }
  const Poly& at(QLabel cls, QLabel point) const;
  std::string tsv() const;

 private:
  int n_;
  std::map<std::pair<QLabel, QLabel>, Poly> entries_;
};

QuadricRestrictionTable quadric_restrictions(const QuadricContext& ctx);

// Change of basis between the Schubert classes and the rescaled fixed-point
// basis f on the quadric: eps_bar(i) = Cbar f_bar + C f, eps_i = Bbar f.
struct TransitionData {
  Matrix<RatLin> Cbar;       // (j,i), unitriangular, support j <= i
  Matrix<RatLin> C;          // (j,i)
  Matrix<RatLin> Bbar;       // (j,i), unitriangular, support j >= i
  std::vector<Poly> S;       // diagonal rescaling, S_j = prod_{k<j} (t_k - t_j)
  Matrix<RatLin> CbarInvC;   // C Cbar^{-1}: the skew-symmetric reduced transition data
};

TransitionData transition_data(const QuadricContext& ctx);

// Twisted xi_t action on S^+ realizing multiplication by the divisor class
// sigma_{0,1}; input must be supported on even subsets.
Spinor<Poly> og_chevalley(const QuadricContext& ctx, const Spinor<Poly>& s);

// Diagonal restriction sigma_I|_{p_I} (the normal-space weight product).
Poly og_restriction_diagonal(const StrictSubset& I, const QuadricContext& ctx);

// The reciprocal of Pf_K(Cbar^{-1} C), as an exact polynomial:
// prod_{i<k in K} (-t_i - t_k) * prod_{i not in K, k in K, i<k} (t_i - t_k).
Poly og_idempotent_denominator(const StrictSubset& K, int n);

class OgRestrictionTable {
 public:
  OgRestrictionTable(int n, std::map<std::pair<StrictSubset, StrictSubset>, Poly> entries)
      : n_(n), entries_(std::move(entries)) {}

  int n() const { return n_; }
  const Poly& at(const StrictSubset& I, const StrictSubset& K) const;
  std::string tsv() const;

 private:
  int n_;
  std::map<std::pair<StrictSubset, StrictSubset>, Poly> entries_;
};

// sigma_I|_{p_K} = Pf_K(Abar_I) / Pf_K(Cbar^{-1}C), cleared to exact
// polynomials.
OgRestrictionTable og_restriction_table(const QuadricContext& ctx);

// Ivanov-Nimmo factorial Schur P-function for the even subset I, as an exact
// polynomial in x0..x_{n-1} and t0..t_{n-1}.  When n + |I| is odd the
// Pfaffian ratio is computed with one auxiliary variable pinned to zero
// (stability of the P-functions), keeping both Pfaffians even-dimensional.
Poly factorial_schur_P(const StrictSubset& I, int n);
// Strict-partition entry point; pads lambda with a zero part when needed so
// that the indexing subset has even cardinality.
Poly factorial_schur_P(const Partition& lambda, int n);

// sigma_I|_{p_K} == P_lambda(x|t)|_{x=-t_K}, exact.
bool giambelli_check_D(int n, const StrictSubset& I, const StrictSubset& K);

// Subset with even cardinality attached to a strict partition.
StrictSubset even_subset_of_strict(const Partition& lambda);

}  // namespace satake
