#pragma once

#include "satake/typea.hpp"

namespace satake {

// Class in QH_T* Gr(k,n): partitions inside the k x (n-k) rectangle with
// coefficients in Z[t1..tn, q].  The cohomological grading gives deg q = n.
struct QClass {
  int k{1};
  int n{1};
  std::map<Partition, Poly> terms;

  void add(const Partition& nu, const Poly& c);
  QClass operator+(const QClass& o) const;
  QClass scaled(const Poly& c) const;
  bool operator==(const QClass& o) const { return k == o.k && n == o.n && terms == o.terms; }
  bool is_zero() const { return terms.empty(); }
};

// Finitely supported class on Gr(k,infinity), truncated to a recorded t-rank.
struct InfiniteClass {
  int k{1};
  int N{1};  // coefficients live in t1..tN
  std::map<Partition, Poly> terms;
};

// t_i -> t_{i mod n}, representatives 1..n.
Poly cyclic_specialize(const Poly& p, int n);

// The rim-hook map psi: sigma_lambda -> (-1)^{(k-1)s + eps(lambda/mu)} q^s
// sigma_mu for mu the n-core (dropped when mu does not fit the rectangle).
// Coefficients must already be cyclically specialized.
QClass psi_map(const InfiniteClass& c, int n);
// Same map read through the wedge dictionary (keys are k-subsets).
QClass psi_map(int n, const WedgeVector<Poly>& w);

// xi_t with corner entry (-1)^{k-1} q at position (1, n).
Matrix<Poly> build_xi_qt(int k, int n);

// Equivariant quantum Chevalley operator: the twisted derivation action of
// xi_{q,t} on the wedge model of QH_T* Gr(k,n).
QClass quantum_chevalley(int k, int n, const QClass& c);

// Quantum product via the rim-hook rule: classical product in Gr(k,N) for
// N = k + |lambda| + |mu|, cyclic specialization, then psi.  Results are
// cached per (k, n, lambda, mu).
QClass quantum_product(int k, int n, const Partition& lambda, const Partition& mu);
QClass quantum_product_truncated(int k, int n, const Partition& lambda, const Partition& mu,
                                 int N);

QClass qclass_mul(const QClass& a, const QClass& b);

// Checked invariant: every monomial of every coefficient satisfies
// |nu| + n * deg_q + deg_t == expected.
void check_q_grading(const QClass& c, int expected_degree);

}  // namespace satake
