#include "satake/typed.hpp"

#include <algorithm>

namespace satake {

QuadricContext::QuadricContext(int n_) : n(n_), tvars(tvar_range(0, n_ - 1)) {
  if (n < 3) throw RankTooSmall("type D contexts require n >= 3");
}

int qlabel_row(int n, QLabel l) {
  if (l.i < 0 || l.i >= n) throw BadLabel("label index out of range");
  return l.bar ? n - 1 - l.i : n + l.i;
}

QLabel qlabel_of_row(int n, int row) {
  if (row < 0 || row >= 2 * n) throw BadLabel("row out of range");
  return row < n ? QLabel{true, n - 1 - row} : QLabel{false, row - n};
}

std::string qlabel_str(QLabel l) { return (l.bar ? "b" : "") + std::to_string(l.i); }

std::optional<QLabel> parse_qlabel(const std::string& s, int n) {
  if (s.empty()) return std::nullopt;
  QLabel l;
  std::size_t pos = 0;
  if (s[0] == 'b') {
    l.bar = true;
    pos = 1;
  }
  if (pos >= s.size()) return std::nullopt;
  for (std::size_t c = pos; c < s.size(); ++c)
    if (!isdigit(static_cast<unsigned char>(s[c]))) return std::nullopt;
  l.i = std::stoi(s.substr(pos));
  if (l.i < 0 || l.i >= n) return std::nullopt;
  return l;
}

Matrix<Poly> wedge_operator_matrix(int n,
                                   const std::vector<std::tuple<QLabel, QLabel, Poly>>& terms) {
  Matrix<Poly> m(2 * n, 2 * n);
  auto partner_row = [n](QLabel l) { return 2 * n - 1 - qlabel_row(n, l); };
  for (const auto& [a, b, c] : terms) {
    // (v ^ w) u = <v,u> w - <w,u> v
    m(qlabel_row(n, b), partner_row(a)) += c;
    m(qlabel_row(n, a), partner_row(b)) -= c;
  }
  return m;
}

namespace {

Poly tprod(int lo, int hi) {
  Poly p = Poly::constant(1);
  for (int k = lo; k <= hi; ++k) p *= Poly::variable(tvar(k));
  return p;
}

}  // namespace

Matrix<Poly> build_xi_t_D(const QuadricContext& ctx) {
  std::vector<std::tuple<QLabel, QLabel, Poly>> terms;
  terms.emplace_back(QLabel{false, 0}, QLabel{false, 1}, Poly::constant(1));
  for (int i = 1; i < ctx.n; ++i)
    terms.emplace_back(QLabel{true, i - 1}, QLabel{false, i}, Poly::constant(1));
  for (int i = 0; i < ctx.n; ++i)
    terms.emplace_back(QLabel{true, i}, QLabel{false, i}, -Poly::variable(tvar(i)));
  return wedge_operator_matrix(ctx.n, terms);
}

Matrix<Poly> build_eta_t(const QuadricContext& ctx) {
  const int n = ctx.n;
  std::vector<std::tuple<QLabel, QLabel, Poly>> terms;
  for (int j = 1; j < n; ++j)
    terms.emplace_back(QLabel{false, 0}, QLabel{false, j}, -tprod(j + 1, n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      terms.emplace_back(QLabel{true, i}, QLabel{false, j},
                         tprod(0, i - 1) * tprod(j + 1, n - 1));
  return wedge_operator_matrix(ctx.n, terms);
}

Matrix<Poly> quadric_odd_power_closed(const QuadricContext& ctx, int j) {
  const int n = ctx.n;
  if (j < 1 || j > n - 1) throw OutOfRange("odd-power formula needs 1 <= j <= n-1");
  const int d = 2 * j - 1;
  std::vector<std::tuple<QLabel, QLabel, Poly>> terms;
  auto sign_of = [](int e) { return e % 2 ? -1 : 1; };
  for (int k = 0; k <= n - 1; ++k) {
    if (d - k < 0) continue;
    for (int i = 0; i + k <= n - 1; ++i) {
      VarSet window = tvar_range(i, i + k);
      Poly h = complete_homogeneous(d - k, window) * Int(sign_of(d - k));
      if (!h.is_zero()) terms.emplace_back(QLabel{true, i}, QLabel{false, i + k}, h);
    }
  }
  for (int k = 1; k <= n - 1; ++k) {
    if (d - k < 0) continue;
    std::vector<Poly> args;
    args.push_back(-Poly::variable(tvar(0)));
    for (int m = 1; m <= k; ++m) args.push_back(Poly::variable(tvar(m)));
    Poly h = complete_homogeneous(d - k, args) * Int(sign_of(d - k));
    if (!h.is_zero()) terms.emplace_back(QLabel{false, 0}, QLabel{false, k}, h);
  }
  for (int i = 1; i <= n - 2; ++i)
    for (int k = i + 1; k <= n - 1; ++k) {
      if (d - i - k < 0) continue;
      std::vector<Poly> args;
      for (int m = i; m >= 0; --m) args.push_back(-Poly::variable(tvar(m)));
      for (int m = 0; m <= k; ++m) args.push_back(Poly::variable(tvar(m)));
      Poly h = complete_homogeneous(d - i - k, args) * Int(2 * sign_of(d - k));
      if (!h.is_zero()) terms.emplace_back(QLabel{false, i}, QLabel{false, k}, h);
    }
  return wedge_operator_matrix(n, terms);
}

Poly quadric_form_pairing(int n, std::span<const Poly> u, std::span<const Poly> v) {
  Poly acc;
  for (int r = 0; r < 2 * n; ++r) acc += u[r] * v[2 * n - 1 - r];
  return acc;
}

namespace {

int qsign(QLabel l) { return (l.bar && l.i % 2) ? -1 : 1; }  // sigma_bar(i) = (-1)^i eps_bar(i)

}  // namespace

std::vector<std::pair<QLabel, Poly>> quadric_chevalley(const QuadricContext& ctx, QLabel l) {
  const int n = ctx.n;
  Matrix<Poly> xi = build_xi_t_D(ctx);
  const int col = qlabel_row(n, l);
  std::vector<std::pair<QLabel, Poly>> out;
  for (int r = 0; r < 2 * n; ++r) {
    Poly c = xi(r, col);
    if (r == col) c -= Poly::variable(tvar(n - 1));  // twist by t_{n-1}
    if (c.is_zero()) continue;
    QLabel target = qlabel_of_row(n, r);
    out.emplace_back(target, c * Int(qsign(l) * qsign(target)));
  }
  return out;
}

const Poly& QuadricRestrictionTable::at(QLabel cls, QLabel point) const {
  auto it = entries_.find({cls, point});
  if (it == entries_.end()) throw BadLabel("no quadric table entry");
  return it->second;
}

std::string QuadricRestrictionTable::tsv() const {
  std::string out = "class";
  for (int c = 0; c < 2 * n_; ++c) out += "\t" + qlabel_str(qlabel_of_row(n_, c));
  out += "\n";
  for (int r = 0; r < 2 * n_; ++r) {
    QLabel cls = qlabel_of_row(n_, r);
    out += qlabel_str(cls);
    for (int c = 0; c < 2 * n_; ++c) out += "\t" + at(cls, qlabel_of_row(n_, c)).str();
    out += "\n";
  }
  return out;
}

QuadricRestrictionTable quadric_restrictions(const QuadricContext& ctx) {
  const int n = ctx.n;
  auto tval = [](QLabel l) {
    Poly t = Poly::variable(tvar(l.i));
    return l.bar ? -t : t;
  };
  std::map<std::pair<QLabel, QLabel>, Poly> entries;
  for (int r = 0; r < 2 * n; ++r) {
    QLabel cls = qlabel_of_row(n, r);
    for (int c = 0; c < 2 * n; ++c) {
      QLabel pt = qlabel_of_row(n, c);
      Poly tj = tval(pt);
      Poly val;
      if (cls.bar && cls.i > 0) {
        val = Poly::constant(1);
        for (int k = cls.i + 1; k <= n - 1; ++k) val *= -Poly::variable(tvar(k)) - tj;
      } else if (cls.bar && cls.i == 0) {
        if (pt.bar && pt.i == 0) {
          val = Poly::constant(1);
          for (int k = 1; k <= n - 1; ++k) val *= -Poly::variable(tvar(k)) + Poly::variable(tvar(0));
        } else if (!pt.bar && pt.i > 0) {
          val = Poly::variable(tvar(0)) - tj;
          for (int k = 1; k <= n - 1; ++k)
            if (k != pt.i) val *= -Poly::variable(tvar(k)) - tj;
        } else {
          val = Poly();
        }
      } else {  // positive class i >= 0
        if (!pt.bar && pt.i >= cls.i) {
          val = Poly::constant(1);
          for (int k = 0; k <= n - 1; ++k)
            if (k != pt.i) val *= -Poly::variable(tvar(k)) - tj;
          for (int k = 0; k <= cls.i - 1; ++k) val *= Poly::variable(tvar(k)) - tj;
        } else {
          val = Poly();
        }
      }
      entries.emplace(std::make_pair(cls, pt), std::move(val));
    }
  }
  return QuadricRestrictionTable(n, std::move(entries));
}

TransitionData transition_data(const QuadricContext& ctx) {
  const int n = ctx.n;
  auto dif = [](int k, int j) {  // 1/(t_k - t_j)
    auto [form, sign] = make_linform(tvar(k), tvar(j), false);
    return RatLin(Poly::constant(sign), {{form, 1}});
  };
  auto sum_recip = [](int k, int j) {  // 1/(t_k + t_j)
    auto [form, sign] = make_linform(tvar(k), tvar(j), true);
    return RatLin(Poly::constant(sign), {{form, 1}});
  };
  TransitionData td;
  td.Cbar = Matrix<RatLin>(n, n);
  td.C = Matrix<RatLin>(n, n);
  td.Bbar = Matrix<RatLin>(n, n);
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      td.Cbar(0, 0) = RatLin(Poly::constant(1));
      td.C(0, 0) = RatLin();
      for (int j = 1; j < n; ++j) {
        RatLin v = RatLin(Poly::constant(-1)) * sum_recip(0, j);
        for (int k = 1; k <= j - 1; ++k) v = v * dif(k, j);
        td.C(j, 0) = v;
      }
      continue;
    }
    for (int j = 0; j <= i; ++j) {
      RatLin v(Poly::constant(1));
      for (int k = j + 1; k <= i; ++k) v = v * dif(k, j);
      td.Cbar(j, i) = v;
      RatLin w(Poly::constant(1));
      for (int k = 0; k <= j - 1; ++k) w = w * dif(k, j) * sum_recip(k, j);
      for (int k = j + 1; k <= i; ++k) w = w * sum_recip(k, j);
      td.C(j, i) = w;
    }
    for (int j = i + 1; j < n; ++j) {
      RatLin w(Poly::constant(2) * Poly::variable(tvar(j)));
      for (int k = 0; k <= i; ++k) w = w * dif(k, j) * sum_recip(k, j);
      for (int k = i + 1; k <= j - 1; ++k) w = w * dif(k, j);
      td.C(j, i) = w;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      RatLin v(Poly::constant(1));
      for (int k = i; k <= j - 1; ++k) v = v * dif(k, j);
      td.Bbar(j, i) = v;
    }
  td.S.resize(n);
  for (int j = 0; j < n; ++j) {
    Poly s = Poly::constant(1);
    for (int k = 0; k < j; ++k) s *= Poly::variable(tvar(k)) - Poly::variable(tvar(j));
    td.S[j] = s;
  }
  td.CbarInvC = td.C * unitriangular_inverse(td.Cbar);
  return td;
}

Spinor<Poly> og_chevalley(const QuadricContext& ctx, const Spinor<Poly>& s) {
  const int n = ctx.n;
  if (s.n != n) throw RankMismatch("spinor rank does not match context");
  for (const auto& [I, c] : s.terms)
    if (I.size() % 2) throw ParityViolation("S^+ spinors are supported on even subsets");
  CliffordElt<Poly> cl = clifford_from_spinor(s);
  CliffordElt<Poly> acc{n, {}};
  auto apply_pair = [&](int syma, int symb) {
    CliffordElt<Poly> mid{n, {}};
    for (const auto& [m, c] : cl.terms) detail::insert_left(n, symb, m, c, mid);
    for (const auto& [m, c] : mid.terms) detail::insert_left(n, syma, m, c, acc);
  };
  // eps_0 ^ eps_1 + sum eps_bar(i-1) ^ eps_i, acting by Clifford products
  apply_pair(ypos_symbol(n, 0), ypos_symbol(n, 1));
  for (int i = 1; i < n; ++i) apply_pair(ybar_symbol(n, i - 1), ypos_symbol(n, i));
  Spinor<Poly> out = spinor_from_clifford(acc);
  for (const auto& [I, c] : s.terms) {
    Poly w;
    for (int i : I) w += Poly::variable(tvar(i));
    out.add(I, c * w);
  }
  return out;
}

Poly og_restriction_diagonal(const StrictSubset& I, const QuadricContext& ctx) {
  if (I.size() % 2) throw ParityViolation("OG+ classes are indexed by even subsets");
  for (int i : I)
    if (i < 0 || i >= ctx.n) throw OutOfRange("subset entry out of range");
  Poly p = Poly::constant(1);
  for (int i : I) {
    for (int j = 0; j < i; ++j) {
      bool inI = std::binary_search(I.begin(), I.end(), j);
      Poly ti = Poly::variable(tvar(i)), tj = Poly::variable(tvar(j));
      p *= inI ? (-ti - tj) : (-ti + tj);
    }
  }
  return p;
}

Poly og_idempotent_denominator(const StrictSubset& K, int n) {
  Poly p = Poly::constant(1);
  for (std::size_t a = 0; a < K.size(); ++a)
    for (std::size_t b = a + 1; b < K.size(); ++b)
      p *= -Poly::variable(tvar(K[a])) - Poly::variable(tvar(K[b]));
  for (int i = 0; i < n; ++i) {
    if (std::binary_search(K.begin(), K.end(), i)) continue;
    for (int k : K)
      if (i < k) p *= Poly::variable(tvar(i)) - Poly::variable(tvar(k));
  }
  return p;
}

const Poly& OgRestrictionTable::at(const StrictSubset& I, const StrictSubset& K) const {
  auto it = entries_.find({I, K});
  if (it == entries_.end()) throw BadIndex("no OG table entry");
  return it->second;
}

std::string OgRestrictionTable::tsv() const {
  auto subsets = even_subsets(n_);
  std::string out = "class";
  for (const auto& K : subsets) out += "\t" + subset_str(K);
  out += "\n";
  for (const auto& I : subsets) {
    out += subset_str(I);
    for (const auto& K : subsets) out += "\t" + at(I, K).str();
    out += "\n";
  }
  return out;
}

OgRestrictionTable og_restriction_table(const QuadricContext& ctx) {
  const int n = ctx.n;
  TransitionData td = transition_data(ctx);
  std::map<std::pair<StrictSubset, StrictSubset>, Poly> entries;
  auto subsets = even_subsets(n);
  for (const auto& I : subsets) {
    SkewMatrix<RatLin> AI = assemble_pfaffian_matrix(td.CbarInvC, td.Bbar, I);
    for (const auto& K : subsets) {
      std::vector<int> sel(K.begin(), K.end());
      for (std::size_t b = 0; b < I.size(); ++b) sel.push_back(n + static_cast<int>(b));
      RatLin pf = pfaffian_sub(AI, std::span<const int>(sel));
      Poly entry = (pf * RatLin(og_idempotent_denominator(K, n))).to_poly();
      entries.emplace(std::make_pair(I, K), std::move(entry));
    }
  }
  return OgRestrictionTable(n, std::move(entries));
}

StrictSubset even_subset_of_strict(const Partition& lambda) {
  for (int r = 0; r + 1 < lambda.rows(); ++r)
    if (lambda.parts[r] == lambda.parts[r + 1])
      throw OutOfRange("partition must be strict");
  StrictSubset I(lambda.parts.rbegin(), lambda.parts.rend());
  if (I.size() % 2) I.insert(I.begin(), 0);
  return I;
}

Poly factorial_schur_P(const Partition& lambda, int n) {
  return factorial_schur_P(even_subset_of_strict(lambda), n);
}

Poly factorial_schur_P(const StrictSubset& I, int n) {
  const int r = static_cast<int>(I.size());
  if (r % 2) throw ParityViolation("P-functions are indexed by even subsets");
  for (int a = 0; a < r; ++a) {
    if (I[a] < 0 || I[a] >= n) throw OutOfRange("subset entry out of range");
    if (a > 0 && I[a - 1] >= I[a]) throw OutOfRange("subset entries must increase");
  }
  const bool padded = (n + r) % 2;
  const int ne = n + (padded ? 1 : 0);
  // row a carries the variable with label ne-1-a (descending); the padded
  // variable, when present, is the top label and is pinned to zero.
  auto label_of_row = [&](int a) { return ne - 1 - a; };
  auto is_pad = [&](int lab) { return padded && lab == n; };
  Matrix<RatLin> m(ne + r, ne + r);
  std::vector<int> labels(ne + r);
  for (int a = 0; a < ne; ++a) labels[a] = label_of_row(a);
  for (int b = 0; b < r; ++b) labels[ne + b] = ne + b;
  for (int a = 0; a < ne; ++a)
    for (int b = a + 1; b < ne; ++b) {
      const int u = label_of_row(a), v = label_of_row(b);
      RatLin entry;
      if (is_pad(u)) {
        entry = RatLin(Poly::constant(-1));
      } else {
        auto [form, sign] = make_linform(xvar(u), xvar(v), true);
        (void)sign;  // plus forms are symmetric
        entry = RatLin(Poly::variable(xvar(u)) - Poly::variable(xvar(v)), {{form, 1}});
      }
      m(a, b) = entry;
      m(b, a) = -entry;
    }
  VarSet alphabet = tvar_range(0, n - 1);
  for (int b = 0; b < r; ++b)
    for (int a = 0; a < ne; ++a) {
      const int u = label_of_row(a);
      Poly val;
      if (is_pad(u)) {
        val = tprod(0, I[b] - 1);
      } else {
        val = factorial_power(xvar(u), I[b], alphabet);
      }
      m(a, ne + b) = RatLin(val);
      m(ne + b, a) = RatLin(-val);
    }
  m.set_row_labels(std::move(labels));
  RatLin num = pfaffian(SkewMatrix<RatLin>(std::move(m)));
  // reciprocal of Pf(A(x)) on the descending arrangement:
  // Pf = (pad ? (-1)^n : 1) * prod_{i<j} (x_j - x_i)/(x_j + x_i)
  int sign = ((n * (n - 1) / 2) + (padded ? n : 0)) % 2 ? -1 : 1;
  Poly rnum = Poly::constant(sign);
  RatLin::Den rden;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      rnum *= Poly::variable(xvar(i)) + Poly::variable(xvar(j));
      auto [form, s] = make_linform(xvar(i), xvar(j), false);
      (void)s;
      rden.emplace_back(form, 1);
    }
  RatLin recip(std::move(rnum), std::move(rden));
  return (num * recip).to_poly();
}

bool giambelli_check_D(int n, const StrictSubset& I, const StrictSubset& K) {
  QuadricContext ctx(n);
  Poly P = factorial_schur_P(I, n);
  std::map<Var, Poly> sub;
  for (int i = 0; i < n; ++i) {
    bool inK = std::binary_search(K.begin(), K.end(), i);
    sub.emplace(xvar(i), inK ? -Poly::variable(tvar(i)) : Poly());
  }
  Poly evaluated = P.substitute(sub);
  return evaluated == og_restriction_table(ctx).at(I, K);
}

}  // namespace satake
