#pragma once

#include <map>
#include <string>
#include <vector>

#include "satake/combinatorics.hpp"
#include "satake/exterior.hpp"

namespace satake {

// Equivariant Schubert calculus of Gr(k,n) through the exterior model.
// Classes are the opposite Schubert classes, so restriction conventions (and
// the reversed t-indexing relative to much of the literature) follow the
// opposite-cell setup throughout.  t-variables are 1-based: t1..tn.
struct GrContext {
  int k{1};
  int n{1};
  VarSet tvars;  // t1..tn

  GrContext(int k_, int n_);
};

// All k-element subsets of {1..n}, ordered by the (size,lex) order of the
// attached partitions.
std::vector<IndexSet> index_subsets(int n, int k);

// xi_t = xi - t: subdiagonal 1's, diagonal -t1..-tn.
Matrix<Poly> build_xi_t(const GrContext& ctx);

// Closed form for the entries of xi_t^j: the (i+j-a, i) entry is
// (-1)^a h_a(t_i,...,t_{i+j-a}).  Equals the j-fold matrix product.
Matrix<Poly> xi_power_entries(const GrContext& ctx, int j);

// Twisted action realizing multiplication by the divisor class sigma_box.
WedgeVector<Poly> chevalley_action(const GrContext& ctx, const WedgeVector<Poly>& v);

// The equivariant Chevalley formula stated combinatorially (sum over added
// boxes plus the weight term); used as an independent cross-check.
WedgeVector<Poly> chevalley_reference(const GrContext& ctx, const Partition& lambda);

// Twisted action of the j-th matrix power (the p_j operator).
WedgeVector<Poly> power_action(const GrContext& ctx, int j, const WedgeVector<Poly>& v);

struct FixedPointVectors {
  std::vector<WedgeVector<RatLin>> f;     // eigenvectors of xi_t, f[i-1] for point i
  std::vector<WedgeVector<RatLin>> fbar;  // idempotent normalization
};

// Eigenbasis of xi_t on the standard representation (k = 1 only).
FixedPointVectors fixed_point_vectors(const GrContext& ctx);

// Restriction values sigma_lambda|_{p_J} for all classes and fixed points.
class RestrictionTable {
 public:
  RestrictionTable(int k, int n, std::vector<Partition> classes, std::vector<IndexSet> points,
                   std::map<std::pair<std::vector<int>, IndexSet>, Poly> entries)
      : k_(k), n_(n), classes_(std::move(classes)), points_(std::move(points)),
        entries_(std::move(entries)) {}

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<Partition>& classes() const { return classes_; }
  const std::vector<IndexSet>& points() const { return points_; }
  const Poly& at(const Partition& lambda, const IndexSet& J) const;

  // Rows lambda, columns J, canonical polynomial strings.
  std::string tsv() const;

 private:
  int k_, n_;
  std::vector<Partition> classes_;
  std::vector<IndexSet> points_;
  std::map<std::pair<std::vector<int>, IndexSet>, Poly> entries_;
};

// sigma_lambda|_{p_J} = det((x_j|t)^{i-1}|_{x_j=-t_j}) / Delta_J over all
// (lambda, J).
RestrictionTable restriction_table(const GrContext& ctx);

// Factorial Schur polynomial in x1..xk and t1..tn: the Cauchy ratio of the
// generalized-power determinant by the Vandermonde, via exact division.
Poly factorial_schur(const Partition& lambda, const GrContext& ctx);

// sigma_lambda|_{p_J} == s_lambda(-t_J | t), exact equality.
bool giambelli_check(const GrContext& ctx, const Partition& lambda, const IndexSet& J);

// Single restriction value sigma_lambda|_{p_J} in Gr(k, N) for any N >= max J
// (the value does not depend on N).  Column-factored determinant over a shared
// varset, memoized; the reference lives in a process-wide cache.
const Poly& restriction_value(int k, const Partition& lambda, const IndexSet& J);

// Closed form of the diagonal value sigma_lambda|_{p_I(lambda)}.
Poly restriction_diagonal(int k, const Partition& lambda);

// Equivariant structure constants of H_T* Gr(k,n) by localization: multiply
// restriction vectors pointwise and solve the triangular system.
std::map<Partition, Poly> classical_product(const GrContext& ctx, const Partition& lambda,
                                            const Partition& mu);

}  // namespace satake
