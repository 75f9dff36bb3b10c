#include "satake/typea.hpp"

#include <algorithm>
#include <mutex>

namespace satake {

GrContext::GrContext(int k_, int n_) : k(k_), n(n_), tvars(tvar_range(1, n_)) {
  if (k < 1 || k > n) throw OutOfRange("GrContext requires 1 <= k <= n");
}

std::vector<IndexSet> index_subsets(int n, int k) {
  std::vector<IndexSet> out;
  IndexSet cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = next; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [k](const IndexSet& a, const IndexSet& b) {
    Partition pa = subset_to_partition(a, k), pb = subset_to_partition(b, k);
    if (pa.size() != pb.size()) return pa.size() < pb.size();
    return pa.parts < pb.parts;
  });
  return out;
}

Matrix<Poly> build_xi_t(const GrContext& ctx) {
  Matrix<Poly> m(ctx.n, ctx.n);
  for (int i = 0; i < ctx.n; ++i) {
    m(i, i) = -Poly::variable(tvar(i + 1));
    if (i + 1 < ctx.n) m(i + 1, i) = Poly::constant(1);
  }
  return m;
}

Matrix<Poly> xi_power_entries(const GrContext& ctx, int j) {
  if (j < 0) throw OutOfRange("matrix power exponent must be >= 0");
  Matrix<Poly> m(ctx.n, ctx.n);
  for (int i = 1; i <= ctx.n; ++i) {
    for (int a = 0; a <= j; ++a) {
      int r = i + j - a;
      if (r > ctx.n) continue;
      VarSet window = tvar_range(i, r);
      Poly h = complete_homogeneous(a, window);
      m(r - 1, i - 1) += (a % 2) ? -h : h;
    }
  }
  return m;
}

namespace {

Poly weight_twist(const GrContext& ctx) {
  Poly s;
  for (int a = 1; a <= ctx.k; ++a) s += Poly::variable(tvar(a));
  return s;
}

}  // namespace

WedgeVector<Poly> chevalley_action(const GrContext& ctx, const WedgeVector<Poly>& v) {
  return derivation_action(build_xi_t(ctx), v) + v.scaled(weight_twist(ctx));
}

WedgeVector<Poly> chevalley_reference(const GrContext& ctx, const Partition& lambda) {
  IndexSet I = partition_to_subset(lambda, ctx.k);
  WedgeVector<Poly> out(ctx.k, ctx.n);
  for (std::size_t a = 0; a < I.size(); ++a) {
    if (I[a] + 1 > ctx.n) continue;
    if (std::binary_search(I.begin(), I.end(), I[a] + 1)) continue;
    IndexSet J = I;
    J[a] += 1;
    out.add(J, Poly::constant(1));
  }
  Poly w = weight_twist(ctx);
  for (int i : I) w -= Poly::variable(tvar(i));
  out.add(I, w);
  return out;
}

WedgeVector<Poly> power_action(const GrContext& ctx, int j, const WedgeVector<Poly>& v) {
  if (j < 1) throw OutOfRange("power_action requires j >= 1");
  Poly corr;
  for (int a = 1; a <= ctx.k; ++a) corr += (-Poly::variable(tvar(a))).pow(j);
  return derivation_action(build_xi_t(ctx).pow(j), v) - v.scaled(corr);
}

FixedPointVectors fixed_point_vectors(const GrContext& ctx) {
  if (ctx.k != 1) throw OutOfRange("fixed_point_vectors is defined for k = 1");
  FixedPointVectors out;
  for (int i = 1; i <= ctx.n; ++i) {
    WedgeVector<RatLin> f(1, ctx.n);
    RatLin coeff(Poly::constant(1));
    f.add(IndexSet{i}, coeff);
    for (int m = i + 1; m <= ctx.n; ++m) {
      auto [form, sign] = make_linform(tvar(m), tvar(i), false);
      coeff = coeff * RatLin(Poly::constant(sign), {{form, 1}});
      f.add(IndexSet{m}, coeff);
    }
    RatLin scale(Poly::constant(1));
    for (int l = 1; l < i; ++l) {
      auto [form, sign] = make_linform(tvar(l), tvar(i), false);
      scale = scale * RatLin(Poly::constant(sign), {{form, 1}});
    }
    out.fbar.push_back(f.scaled(scale));
    out.f.push_back(std::move(f));
  }
  return out;
}

namespace {

// Entry of the evaluated generalized-power matrix:
// (x|t)^{i-1} at x = -t_j, i.e. prod_{l<i} (t_l - t_j).
Poly evaluated_power(int i, int j) {
  Poly p = Poly::constant(1);
  for (int l = 1; l < i; ++l) p *= Poly::variable(tvar(l)) - Poly::variable(tvar(j));
  return p;
}

Poly restriction_det(int k, const Partition& lambda, const IndexSet& J) {
  IndexSet I = partition_to_subset(lambda, k);
  Matrix<Poly> m(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) m(a, b) = evaluated_power(I[a], J[b]);
  Poly det = determinant(m);
  // Delta_J with the same row orientation: prod_{a<b} (t_{j_a} - t_{j_b})
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      det = exact_div(det, Poly::variable(tvar(J[a])) - Poly::variable(tvar(J[b])));
  return det;
}

}  // namespace

const Poly& RestrictionTable::at(const Partition& lambda, const IndexSet& J) const {
  auto it = entries_.find({lambda.parts, J});
  if (it == entries_.end()) throw BadIndex("no restriction table entry for " + lambda.str());
  return it->second;
}

std::string RestrictionTable::tsv() const {
  std::string out = "class";
  for (const auto& J : points_) out += "\t" + subset_str(J);
  out += "\n";
  for (const auto& lambda : classes_) {
    out += lambda.str();
    for (const auto& J : points_) out += "\t" + at(lambda, J).str();
    out += "\n";
  }
  return out;
}

RestrictionTable restriction_table(const GrContext& ctx) {
  auto classes = partitions_in_rectangle(ctx.k, ctx.n - ctx.k);
  auto points = index_subsets(ctx.n, ctx.k);
  std::map<std::pair<std::vector<int>, IndexSet>, Poly> entries;
  for (const auto& lambda : classes)
    for (const auto& J : points)
      entries.emplace(std::make_pair(lambda.parts, J), restriction_det(ctx.k, lambda, J));
  return RestrictionTable(ctx.k, ctx.n, std::move(classes), std::move(points),
                          std::move(entries));
}

Poly factorial_schur(const Partition& lambda, const GrContext& ctx) {
  if (!fits_rectangle(lambda, ctx.k, ctx.n - ctx.k))
    throw OutOfRange("partition does not fit the k x (n-k) rectangle");
  IndexSet I = partition_to_subset(lambda, ctx.k);
  Matrix<Poly> m(ctx.k, ctx.k);
  for (int a = 0; a < ctx.k; ++a)
    for (int b = 0; b < ctx.k; ++b)
      m(a, b) = factorial_power(xvar(b + 1), I[a] - 1, ctx.tvars);
  Poly det = determinant(m);
  for (int a = 1; a <= ctx.k; ++a)
    for (int b = a + 1; b <= ctx.k; ++b)
      det = exact_div(det, Poly::variable(xvar(b)) - Poly::variable(xvar(a)));
  return det;
}

bool giambelli_check(const GrContext& ctx, const Partition& lambda, const IndexSet& J) {
  std::map<Var, Poly> sub;
  for (int a = 0; a < ctx.k; ++a) sub.emplace(xvar(a + 1), -Poly::variable(tvar(J[a])));
  return factorial_schur(lambda, ctx).substitute(sub) == restriction_det(ctx.k, lambda, J);
}

namespace {

struct RestrictionKey {
  int k;
  std::vector<int> lambda;
  IndexSet J;
  auto operator<=>(const RestrictionKey&) const = default;
};

// shared varset t1..tN, memoized so aligned polynomial arithmetic stays on the
// pointer-equality fast path
std::shared_ptr<const VarSet> shared_tvars(int N) {
  static std::map<int, std::shared_ptr<const VarSet>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  auto vs = std::make_shared<const VarSet>(tvar_range(1, N));
  return cache.emplace(N, vs).first->second;
}

Poly shared_tvar(const std::shared_ptr<const VarSet>& vs, int i) {
  Monomial m;
  m.e[i - 1] = 1;
  m.total = 1;
  return Poly::make(vs, {{m, Int(1)}});
}

}  // namespace

const Poly& restriction_value(int k, const Partition& lambda, const IndexSet& J) {
  static std::map<RestrictionKey, Poly> cache;
  static std::mutex mu;
  static const Poly zero;
  if (lambda.rows() > k) return zero;
  RestrictionKey key{k, lambda.parts, J};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Column-factored determinant: with I = I(lambda) and M_{ab} =
  // prod_{l<i_a}(t_l - t_{j_b}), pull prod_{l<i_1}(t_l - t_{j_b}) out of
  // column b, take the reduced determinant, then divide by Delta_J.
  IndexSet I = partition_to_subset(lambda, k);
  const int N = std::max(J.back(), I.back() - 1);
  auto vs = shared_tvars(N);
  Poly common = Poly::constant(1);
  for (int b = 0; b < k; ++b)
    for (int l = 1; l < I[0]; ++l)
      common *= shared_tvar(vs, l) - shared_tvar(vs, J[b]);
  Matrix<Poly> reduced(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Poly e = Poly::constant(1);
      for (int l = I[0]; l < I[a]; ++l) e *= shared_tvar(vs, l) - shared_tvar(vs, J[b]);
      reduced(a, b) = std::move(e);
    }
  Poly val = common * determinant(reduced);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      val = exact_div(val, shared_tvar(vs, J[a]) - shared_tvar(vs, J[b]));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(val)).first->second;
}

Poly restriction_diagonal(int k, const Partition& lambda) {
  IndexSet I = partition_to_subset(lambda, k);
  Poly p = Poly::constant(1);
  for (int i : I)
    for (int l = 1; l < i; ++l)
      if (!std::binary_search(I.begin(), I.end(), l))
        p *= Poly::variable(tvar(l)) - Poly::variable(tvar(i));
  return p;
}

namespace {

bool contains(const Partition& big, const Partition& small) {
  if (small.rows() > big.rows()) return false;
  for (int r = 0; r < small.rows(); ++r)
    if (big.parts[r] < small.parts[r]) return false;
  return true;
}

}  // namespace

std::map<Partition, Poly> classical_product(const GrContext& ctx, const Partition& lambda,
                                            const Partition& mu) {
  if (!fits_rectangle(lambda, ctx.k, ctx.n - ctx.k) || !fits_rectangle(mu, ctx.k, ctx.n - ctx.k))
    throw OutOfRange("classical_product arguments must fit the rectangle");
  const int bound = lambda.size() + mu.size();
  // support bound from x-degrees in s_lambda(x|t) s_mu(x|t) = sum c^nu s_nu:
  // nu is dominated by lambda + mu (partial sums)
  std::vector<int> cap(ctx.k, 0);
  for (int r = 0; r < ctx.k; ++r)
    cap[r] = (r ? cap[r - 1] : 0) + lambda.part(r) + mu.part(r);
  auto dominated = [&](const Partition& nu) {
    int sum = 0;
    for (int r = 0; r < nu.rows(); ++r) {
      sum += nu.parts[r];
      if (sum > cap[r]) return false;
    }
    return true;
  };
  auto vs = shared_tvars(ctx.n);
  std::map<Partition, Poly> result;
  std::unordered_map<Monomial, Int, MonomialHash> acc;
  // All values live on pure t1..tN varsets, so monomial slots line up and the
  // localization residual can be accumulated in one hash table per candidate.
  auto add_product = [&](const Poly& a, const Poly& b, bool negate) {
    for (const auto& ta : a.terms())
      for (const auto& tb : b.terms()) {
        Monomial m;
        m.total = static_cast<std::uint16_t>(ta.mono.total + tb.mono.total);
        for (int v = 0; v < kMaxVars; ++v) {
          unsigned s = unsigned(ta.mono.e[v]) + unsigned(tb.mono.e[v]);
          if (s > 255) throw Error("monomial exponent overflow");
          m.e[v] = static_cast<std::uint8_t>(s);
        }
        auto [it, inserted] = acc.try_emplace(m);
        if (inserted)
          it->second = negate ? Int(-ta.coeff * tb.coeff) : Int(ta.coeff * tb.coeff);
        else if (negate)
          it->second -= ta.coeff * tb.coeff;
        else
          it->second += ta.coeff * tb.coeff;
      }
  };
  for (const auto& nu : partitions_in_rectangle(ctx.k, ctx.n - ctx.k)) {
    if (nu.size() > bound) break;  // (size, lex) order
    if (!contains(nu, lambda) || !contains(nu, mu) || !dominated(nu)) continue;
    IndexSet J = partition_to_subset(nu, ctx.k);
    acc.clear();
    add_product(restriction_value(ctx.k, lambda, J), restriction_value(ctx.k, mu, J), false);
    for (const auto& [nup, c] : result) {
      if (!contains(nu, nup)) continue;
      add_product(c, restriction_value(ctx.k, nup, J), true);
    }
    std::vector<Poly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) terms.push_back({m, std::move(c)});
    if (terms.empty()) continue;
    Poly val = Poly::make(vs, std::move(terms));
    // divide by the diagonal value, one linear factor at a time
    for (int i : J)
      for (int l = 1; l < i; ++l)
        if (!std::binary_search(J.begin(), J.end(), l))
          val = exact_div(val, shared_tvar(vs, l) - shared_tvar(vs, i));
    result.emplace(nu, std::move(val));
  }
  return result;
}

}  // namespace satake
