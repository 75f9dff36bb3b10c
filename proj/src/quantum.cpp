#include "satake/quantum.hpp"

#include <mutex>

namespace satake {

void QClass::add(const Partition& nu, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

QClass QClass::operator+(const QClass& o) const {
  if (k != o.k || n != o.n) throw DimensionMismatch("QClass contexts differ");
  QClass out = *this;
  for (const auto& [nu, c] : o.terms) out.add(nu, c);
  return out;
}

QClass QClass::scaled(const Poly& c) const {
  QClass out{k, n, {}};
  if (c.is_zero()) return out;
  for (const auto& [nu, v] : terms) out.add(nu, v * c);
  return out;
}

Poly cyclic_specialize(const Poly& p, int n) {
  std::map<Var, Poly> sub;
  for (Var v : p.vars()) {
    if (v.kind != VarKind::T || v.index <= n) continue;
    int r = (v.index - 1) % n + 1;
    sub.emplace(v, Poly::variable(tvar(r)));
  }
  return sub.empty() ? p : p.substitute(sub);
}

QClass psi_map(const InfiniteClass& c, int n) {
  QClass out{c.k, n, {}};
  for (const auto& [lambda, coeff] : c.terms) {
    auto core = n_core(lambda, c.k, n);
    if (!fits_rectangle(core.core, c.k, n - c.k)) continue;
    int sign_exp = (c.k - 1) * core.s + core.epsilon;
    Poly qs = Poly::variable(qvar()).pow(core.s) * Int(sign_exp % 2 ? -1 : 1);
    out.add(core.core, coeff * qs);
  }
  return out;
}

QClass psi_map(int n, const WedgeVector<Poly>& w) {
  InfiniteClass c{w.k(), w.n(), {}};
  for (const auto& [I, coeff] : w.terms()) {
    Partition lambda = subset_to_partition(I, w.k());
    auto [it, inserted] = c.terms.try_emplace(lambda, coeff);
    if (!inserted) it->second += coeff;
  }
  return psi_map(c, n);
}

Matrix<Poly> build_xi_qt(int k, int n) {
  Matrix<Poly> m = build_xi_t(GrContext(std::min(k, n), n));
  Poly corner = Poly::variable(qvar());
  if ((k - 1) % 2) corner = -corner;
  m(0, n - 1) += corner;
  return m;
}

QClass quantum_chevalley(int k, int n, const QClass& c) {
  Matrix<Poly> xi = build_xi_qt(k, n);
  Poly twist;
  for (int a = 1; a <= k; ++a) twist += Poly::variable(tvar(a));
  QClass out{k, n, {}};
  for (const auto& [lambda, coeff] : c.terms) {
    WedgeVector<Poly> v = WedgeVector<Poly>::basis(k, n, partition_to_subset(lambda, k));
    WedgeVector<Poly> image = derivation_action(xi, v) + v.scaled(twist);
    for (const auto& [I, w] : image.terms())
      out.add(subset_to_partition(I, k), coeff * w);
  }
  return out;
}

QClass quantum_product_truncated(int k, int n, const Partition& lambda, const Partition& mu,
                                 int N) {
  GrContext big(k, N);
  auto classical = classical_product(big, lambda, mu);
  InfiniteClass inf{k, N, {}};
  for (const auto& [nu, c] : classical) inf.terms.emplace(nu, cyclic_specialize(c, n));
  QClass out = psi_map(inf, n);
  check_q_grading(out, lambda.size() + mu.size());
  return out;
}

QClass quantum_product(int k, int n, const Partition& lambda, const Partition& mu) {
  struct Key {
    int k, n;
    std::vector<int> a, b;
    auto operator<=>(const Key&) const = default;
  };
  static std::map<Key, QClass> cache;
  static std::mutex mutex;
  Key key{k, n, lambda.parts, mu.parts};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  QClass out = quantum_product_truncated(k, n, lambda, mu, k + lambda.size() + mu.size());
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

QClass qclass_mul(const QClass& a, const QClass& b) {
  if (a.k != b.k || a.n != b.n) throw DimensionMismatch("QClass contexts differ");
  QClass out{a.k, a.n, {}};
  for (const auto& [la, ca] : a.terms)
    for (const auto& [mu, cb] : b.terms) {
      QClass prod = quantum_product(a.k, a.n, la, mu);
      for (const auto& [nu, c] : prod.terms) out.add(nu, c * ca * cb);
    }
  return out;
}

void check_q_grading(const QClass& c, int expected_degree) {
  for (const auto& [nu, coeff] : c.terms) {
    const VarSet& vs = coeff.vars();
    for (const auto& term : coeff.terms()) {
      int tdeg = 0, qdeg = 0;
      for (std::size_t v = 0; v < vs.size(); ++v) {
        if (vs[v].kind == VarKind::Q)
          qdeg += term.mono.e[v];
        else
          tdeg += term.mono.e[v];
      }
      if (nu.size() + c.n * qdeg + tdeg != expected_degree)
        throw Error("quantum grading violation: coefficient of " + nu.str() +
                    " is not homogeneous of the expected degree");
    }
  }
}

}  // namespace satake
