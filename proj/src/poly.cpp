#include "satake/poly.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

namespace satake {

namespace {

const std::shared_ptr<const VarSet>& empty_varset() {
  static const auto vs = std::make_shared<const VarSet>();
  return vs;
}

bool is_subset(const VarSet& small, const VarSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

VarSet varset_union(const VarSet& a, const VarSet& b) {
  VarSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::string var_name(Var v) {
  switch (v.kind) {
    case VarKind::T:
      return "t" + std::to_string(v.index);
    case VarKind::X:
      return "x" + std::to_string(v.index);
    case VarKind::Q:
      return "q";
  }
  return "?";
}

std::optional<Var> parse_var(std::string_view name) {
  if (name == "q") return qvar();
  if (name.size() < 2) return std::nullopt;
  VarKind kind;
  if (name[0] == 't')
    kind = VarKind::T;
  else if (name[0] == 'x')
    kind = VarKind::X;
  else
    return std::nullopt;
  int idx = 0;
  auto res = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
  if (res.ec != std::errc() || res.ptr != name.data() + name.size()) return std::nullopt;
  return Var{kind, static_cast<std::int16_t>(idx)};
}

VarSet make_varset(std::vector<Var> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (static_cast<int>(vars.size()) > kMaxVars)
    throw Error("varset exceeds the supported variable count");
  return vars;
}

VarSet tvar_range(int lo, int hi) {
  VarSet vs;
  for (int i = lo; i <= hi; ++i) vs.push_back(tvar(i));
  return vs;
}

SignedForm make_linform(Var a, Var b, bool plus) {
  if (a == b && !plus) throw ZeroDenominatorForm("linear form v - v is zero");
  if (a == b) throw ZeroDenominatorForm("linear form v + v is not supported as a denominator");
  if (a < b) return {LinForm{a, b, plus}, 1};
  return {LinForm{b, a, plus}, plus ? 1 : -1};
}

std::string linform_name(const LinForm& f) {
  return "(" + var_name(f.a) + (f.plus ? "+" : "-") + var_name(f.b) + ")";
}

Poly::Poly() : vars_(empty_varset()) {}

Poly Poly::constant(Int c) {
  Poly p;
  if (c != 0) p.terms_.push_back({Monomial{}, std::move(c)});
  return p;
}

Poly Poly::variable(Var v) {
  Poly p;
  p.vars_ = std::make_shared<const VarSet>(VarSet{v});
  Monomial m;
  m.e[0] = 1;
  m.total = 1;
  p.terms_.push_back({m, Int(1)});
  return p;
}

Poly Poly::make(std::shared_ptr<const VarSet> vars, std::vector<Term> terms) {
  Poly p;
  p.vars_ = std::move(vars);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return graded_lex_less(a.mono, b.mono); });
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.total == 0 && terms_[0].coeff == 1;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.back().mono.total;
}

Poly Poly::embedded(const std::shared_ptr<const VarSet>& target) const {
  if (vars_ == target || *vars_ == *target) {
    Poly p = *this;
    p.vars_ = target;
    return p;
  }
  // slot map from our varset into the target
  std::array<int, kMaxVars> slot{};
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = std::lower_bound(target->begin(), target->end(), (*vars_)[i]);
    slot[i] = static_cast<int>(it - target->begin());
  }
  Poly p;
  p.vars_ = target;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    m.total = t.mono.total;
    for (std::size_t i = 0; i < vars_->size(); ++i) m.e[slot[i]] = t.mono.e[i];
    p.terms_.push_back({m, t.coeff});
  }
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return graded_lex_less(a.mono, b.mono); });
  return p;
}

void Poly::align(const Poly& a, const Poly& b, Poly& ea, Poly& eb) {
  if (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) {
    ea = a;
    eb = b;
    eb.vars_ = ea.vars_;
    return;
  }
  if (is_subset(*a.vars_, *b.vars_)) {
    ea = a.embedded(b.vars_);
    eb = b;
    return;
  }
  if (is_subset(*b.vars_, *a.vars_)) {
    ea = a;
    eb = b.embedded(a.vars_);
    return;
  }
  auto u = std::make_shared<const VarSet>(varset_union(*a.vars_, *b.vars_));
  ea = a.embedded(u);
  eb = b.embedded(u);
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly a, b;
  align(*this, o, a, b);
  Poly out;
  out.vars_ = a.vars_;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && graded_lex_less(a.terms_[i].mono, b.terms_[j].mono))) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || graded_lex_less(b.terms_[j].mono, a.terms_[i].mono)) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Int c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (c != 0) out.terms_.push_back({a.terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly a, b;
  align(*this, o, a, b);
  const std::size_t nv = a.vars_->size();
  std::unordered_map<Monomial, Int, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 4);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m;
      m.total = static_cast<std::uint16_t>(ta.mono.total + tb.mono.total);
      for (std::size_t v = 0; v < nv; ++v) {
        unsigned s = unsigned(ta.mono.e[v]) + unsigned(tb.mono.e[v]);
        if (s > 255) throw Error("monomial exponent overflow");
        m.e[v] = static_cast<std::uint8_t>(s);
      }
      auto [it, inserted] = acc.try_emplace(m);
      if (inserted)
        it->second = ta.coeff * tb.coeff;
      else
        it->second += ta.coeff * tb.coeff;
    }
  }
  Poly out;
  out.vars_ = a.vars_;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({m, std::move(c)});
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& x, const Term& y) { return graded_lex_less(x.mono, y.mono); });
  return out;
}

Poly Poly::operator*(const Int& c) const {
  if (c == 0) return Poly();
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly out = Poly::constant(1);
  Poly base = *this;
  while (e) {
    if (e & 1u) out = out * base;
    base = (e >>= 1) ? base * base : base;
  }
  return out;
}

bool Poly::operator==(const Poly& o) const {
  Poly a, b;
  align(*this, o, a, b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

Poly Poly::substitute(const std::map<Var, Poly>& map) const {
  // power cache per variable slot
  std::vector<std::vector<Poly>> powers(vars_->size());
  auto var_power = [&](std::size_t slot, int e) -> const Poly& {
    auto& cache = powers[slot];
    if (cache.empty()) {
      Var v = (*vars_)[slot];
      auto it = map.find(v);
      cache.push_back(Poly::constant(1));
      cache.push_back(it == map.end() ? Poly::variable(v) : it->second);
    }
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  Poly out;
  for (const auto& t : terms_) {
    Poly term = Poly::constant(t.coeff);
    for (std::size_t v = 0; v < vars_->size(); ++v)
      if (t.mono.e[v]) term = term * var_power(v, t.mono.e[v]);
    out = out + term;
  }
  return out;
}

Int Poly::coeff_of(const std::map<Var, int>& mono) const {
  Monomial m;
  unsigned total = 0;
  for (const auto& [v, e] : mono) {
    auto it = std::lower_bound(vars_->begin(), vars_->end(), v);
    if (it == vars_->end() || *it != v) {
      if (e != 0) return Int(0);
      continue;
    }
    m.e[it - vars_->begin()] = static_cast<std::uint8_t>(e);
    total += unsigned(e);
  }
  m.total = static_cast<std::uint16_t>(total);
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Int(0);
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool neg = it->coeff < 0;
    Int mag = neg ? Int(-it->coeff) : it->coeff;
    if (it == terms_.rbegin()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string monos;
    for (std::size_t v = 0; v < vars_->size(); ++v) {
      if (!it->mono.e[v]) continue;
      if (!monos.empty()) monos += "*";
      monos += var_name((*vars_)[v]);
      if (it->mono.e[v] > 1) monos += "^" + std::to_string(int(it->mono.e[v]));
    }
    if (monos.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += monos;
    }
  }
  return out;
}

nlohmann::ordered_json Poly::to_json() const {
  nlohmann::ordered_json j;
  j["vars"] = nlohmann::ordered_json::array();
  for (Var v : *vars_) j["vars"].push_back(var_name(v));
  j["terms"] = nlohmann::ordered_json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    nlohmann::ordered_json t;
    t["exp"] = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < vars_->size(); ++v) t["exp"].push_back(int(it->mono.e[v]));
    t["coeff"] = it->coeff.get_str();
    j["terms"].push_back(std::move(t));
  }
  return j;
}

Poly Poly::from_json(const nlohmann::json& j) {
  std::vector<Var> vars;
  for (const auto& name : j.at("vars")) {
    auto v = parse_var(name.get<std::string>());
    if (!v) throw Error("unknown variable name in polynomial JSON");
    vars.push_back(*v);
  }
  VarSet sorted = make_varset(vars);
  if (sorted.size() != vars.size()) throw Error("polynomial JSON varset not canonical");
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] != sorted[i]) throw Error("polynomial JSON varset not canonical");
  auto vs = std::make_shared<const VarSet>(std::move(sorted));
  std::vector<Term> terms;
  for (const auto& tj : j.at("terms")) {
    Monomial m;
    const auto& exp = tj.at("exp");
    if (exp.size() != vs->size()) throw Error("polynomial JSON exponent length mismatch");
    unsigned total = 0;
    for (std::size_t v = 0; v < exp.size(); ++v) {
      int e = exp[v].get<int>();
      if (e < 0 || e > 255) throw Error("polynomial JSON exponent out of range");
      m.e[v] = static_cast<std::uint8_t>(e);
      total += unsigned(e);
    }
    m.total = static_cast<std::uint16_t>(total);
    terms.push_back({m, Int(tj.at("coeff").get<std::string>())});
  }
  return make(std::move(vs), std::move(terms));
}

namespace {

// Division by v_hi + sign * v_lo (v_hi the graded-lex leading variable), in
// linear time: peel off the top v_hi-degree layer and propagate downward.
std::optional<Poly> try_exact_div_binomial(const Poly& p, std::size_t hi, std::size_t lo,
                                           int sign) {
  // layer = exponent of v_hi; keys have the hi slot zeroed
  int maxe = 0;
  for (const auto& t : p.terms()) maxe = std::max(maxe, int(t.mono.e[hi]));
  std::vector<std::unordered_map<Monomial, Int, MonomialHash>> layers(maxe + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    int e = m.e[hi];
    m.total = static_cast<std::uint16_t>(m.total - e);
    m.e[hi] = 0;
    layers[e].emplace(m, t.coeff);
  }
  if (maxe == 0) return std::nullopt;
  std::vector<Poly::Term> quot;
  std::unordered_map<Monomial, Int, MonomialHash> cur;  // quotient layer
  for (int e = maxe; e >= 1; --e) {
    // Q_{e-1} = P_e - sign * v_lo * Q_e
    std::unordered_map<Monomial, Int, MonomialHash> next = std::move(layers[e]);
    for (const auto& [m, c] : cur) {
      Monomial shifted = m;
      if (shifted.e[lo] == 255) throw Error("monomial exponent overflow");
      shifted.e[lo] += 1;
      shifted.total += 1;
      auto [it, inserted] = next.try_emplace(shifted, c);
      if (!inserted) {
        it->second += sign > 0 ? -c : c;
        if (it->second == 0) next.erase(it);
        continue;
      }
      if (sign > 0) it->second = -c;
      if (it->second == 0) next.erase(it);
    }
    cur = std::move(next);
    for (const auto& [m, c] : cur) {
      Monomial q = m;
      q.e[hi] = static_cast<std::uint8_t>(e - 1);
      q.total = static_cast<std::uint16_t>(q.total + e - 1);
      quot.push_back({q, c});
    }
  }
  // remainder check: P_0 - sign * v_lo * Q_0 must vanish
  auto rem = std::move(layers[0]);
  for (const auto& [m, c] : cur) {
    Monomial shifted = m;
    shifted.e[lo] += 1;
    shifted.total += 1;
    auto [it, inserted] = rem.try_emplace(shifted, sign > 0 ? -c : c);
    if (!inserted) {
      it->second += sign > 0 ? -c : c;
      if (it->second == 0) rem.erase(it);
    } else if (it->second == 0) {
      rem.erase(it);
    }
  }
  if (!rem.empty()) return std::nullopt;
  return Poly::make(p.vars_ptr(), std::move(quot));
}

// Recognize c * (v_a ± v_b) divisors and report the slot data.
bool binomial_divisor(const Poly& den, std::size_t& hi, std::size_t& lo, int& sign, Int& unit) {
  if (den.terms().size() != 2) return false;
  const auto& t0 = den.terms()[0];  // smaller in graded-lex
  const auto& t1 = den.terms()[1];
  if (t0.mono.total != 1 || t1.mono.total != 1) return false;
  auto slot_of = [](const Monomial& m) {
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (m.e[v]) return v;
    return std::size_t(kMaxVars);
  };
  hi = slot_of(t1.mono);
  lo = slot_of(t0.mono);
  if (hi >= kMaxVars || lo >= kMaxVars || hi == lo) return false;
  if (t1.coeff == 1 && t0.coeff == 1) {
    sign = 1;
    unit = 1;
    return true;
  }
  if (t1.coeff == 1 && t0.coeff == -1) {
    sign = -1;
    unit = 1;
    return true;
  }
  if (t1.coeff == -1 && t0.coeff == -1) {
    sign = 1;
    unit = -1;
    return true;
  }
  if (t1.coeff == -1 && t0.coeff == 1) {
    sign = -1;
    unit = -1;
    return true;
  }
  return false;
}

}  // namespace

std::optional<Poly> try_exact_div(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error("division by the zero polynomial");
  if (num.is_zero()) return Poly();
  Poly a, b;
  Poly::align(num, den, a, b);
  {
    std::size_t hi = 0, lo = 0;
    int sign = 0;
    Int unit;
    if (binomial_divisor(b, hi, lo, sign, unit)) {
      auto q = try_exact_div_binomial(a, hi, lo, sign);
      if (q && unit == -1) return -*q;
      return q;
    }
  }
  const std::size_t nv = a.vars_->size();
  const auto& lead_den = b.terms_.back();

  std::map<Monomial, Int, decltype(&graded_lex_less)> rem(&graded_lex_less);
  for (const auto& t : a.terms_) rem.emplace(t.mono, t.coeff);

  std::vector<Poly::Term> quot;
  while (!rem.empty()) {
    auto lead = std::prev(rem.end());
    Monomial qm;
    bool divisible = lead->first.total >= lead_den.mono.total;
    if (divisible) {
      qm.total = static_cast<std::uint16_t>(lead->first.total - lead_den.mono.total);
      for (std::size_t v = 0; v < nv; ++v) {
        if (lead->first.e[v] < lead_den.mono.e[v]) {
          divisible = false;
          break;
        }
        qm.e[v] = static_cast<std::uint8_t>(lead->first.e[v] - lead_den.mono.e[v]);
      }
    }
    if (!divisible || !mpz_divisible_p(lead->second.get_mpz_t(), lead_den.coeff.get_mpz_t()))
      return std::nullopt;
    Int qc = lead->second / lead_den.coeff;
    // rem -= qc * qm * den
    for (const auto& t : b.terms_) {
      Monomial m;
      m.total = static_cast<std::uint16_t>(qm.total + t.mono.total);
      for (std::size_t v = 0; v < nv; ++v)
        m.e[v] = static_cast<std::uint8_t>(qm.e[v] + t.mono.e[v]);
      auto [it, inserted] = rem.try_emplace(m);
      if (inserted)
        it->second = -qc * t.coeff;
      else {
        it->second -= qc * t.coeff;
        if (it->second == 0) rem.erase(it);
      }
      if (inserted && it->second == 0) rem.erase(it);
    }
    quot.push_back({qm, std::move(qc)});
  }
  return Poly::make(a.vars_, std::move(quot));
}

Poly exact_div(const Poly& num, const Poly& den) {
  auto q = try_exact_div(num, den);
  if (!q) throw InexactDivision("polynomial division is not exact");
  return *q;
}

Poly complete_homogeneous(int a, std::span<const Var> window) {
  std::vector<Poly> args;
  args.reserve(window.size());
  for (Var v : window) args.push_back(Poly::variable(v));
  return complete_homogeneous(a, std::span<const Poly>(args));
}

Poly complete_homogeneous(int a, std::span<const Poly> args) {
  if (a < 0) throw Error("complete_homogeneous requires a >= 0");
  if (a == 0) return Poly::constant(1);
  if (args.empty()) throw Error("complete_homogeneous requires a nonempty window");
  // h_a(p_1..p_m) = sum_d p_m^d * h_{a-d}(p_1..p_{m-1})
  std::vector<Poly> h(a + 1);
  h[0] = Poly::constant(1);
  for (std::size_t m = 0; m < args.size(); ++m) {
    std::vector<Poly> next(a + 1);
    std::vector<Poly> powers{Poly::constant(1)};
    for (int d = 1; d <= a; ++d) powers.push_back(powers.back() * args[m]);
    for (int deg = 0; deg <= a; ++deg) {
      Poly s;
      for (int d = 0; d <= deg; ++d)
        if (!h[deg - d].is_zero()) s = s + powers[d] * h[deg - d];
      next[deg] = s;
    }
    h = std::move(next);
  }
  return h[a];
}

Poly factorial_power(Var x, int a, std::span<const Var> alphabet) {
  if (a < 0) throw Error("factorial power requires a >= 0");
  if (static_cast<int>(alphabet.size()) < a)
    throw AlphabetTooShort("factorial power needs at least " + std::to_string(a) +
                           " alphabet entries");
  Poly out = Poly::constant(1);
  Poly xv = Poly::variable(x);
  for (int i = 0; i < a; ++i) out = out * (xv + Poly::variable(alphabet[i]));
  return out;
}

Poly linform_poly(const LinForm& f) {
  Poly pa = Poly::variable(f.a);
  Poly pb = Poly::variable(f.b);
  return f.plus ? pa + pb : pa - pb;
}

}  // namespace satake
