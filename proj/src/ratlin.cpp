#include "satake/ratlin.hpp"

#include <algorithm>
#include <map>

namespace satake {

RatLin::RatLin(Poly num, Den den) : num_(std::move(num)), den_(std::move(den)) {
  std::sort(den_.begin(), den_.end());
  // merge duplicate forms
  Den merged;
  for (auto& [f, m] : den_) {
    if (m <= 0) throw Error("denominator multiplicity must be positive");
    if (!merged.empty() && merged.back().first == f)
      merged.back().second += m;
    else
      merged.emplace_back(f, m);
  }
  den_ = std::move(merged);
  cancel();
}

RatLin RatLin::form_reciprocal(const LinForm& f, int mult) {
  return RatLin(Poly::constant(1), Den{{f, mult}});
}

void RatLin::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& [f, m] : den_) {
    const Poly fp = linform_poly(f);
    while (m > 0) {
      auto q = try_exact_div(num_, fp);
      if (!q) break;
      num_ = std::move(*q);
      --m;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(), [](const auto& e) { return e.second == 0; }),
             den_.end());
}

RatLin RatLin::operator-() const {
  RatLin r = *this;
  r.num_ = -r.num_;
  return r;
}

RatLin RatLin::operator+(const RatLin& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // union denominator: per form, max multiplicity
  Den all;
  std::size_t i = 0, j = 0;
  while (i < den_.size() || j < o.den_.size()) {
    if (j == o.den_.size() || (i < den_.size() && den_[i].first < o.den_[j].first))
      all.push_back(den_[i++]);
    else if (i == den_.size() || o.den_[j].first < den_[i].first)
      all.push_back(o.den_[j++]);
    else {
      all.emplace_back(den_[i].first, std::max(den_[i].second, o.den_[j].second));
      ++i;
      ++j;
    }
  }
  auto cofactor = [&](const Den& own) {
    Poly c = Poly::constant(1);
    for (const auto& [f, m] : all) {
      int have = 0;
      for (const auto& [g, mg] : own)
        if (g == f) have = mg;
      for (int r = have; r < m; ++r) c = c * linform_poly(f);
    }
    return c;
  };
  Poly num = num_ * cofactor(den_) + o.num_ * cofactor(o.den_);
  return RatLin(std::move(num), std::move(all));
}

RatLin RatLin::operator-(const RatLin& o) const { return *this + (-o); }

RatLin RatLin::operator*(const RatLin& o) const {
  if (is_zero() || o.is_zero()) return RatLin();
  Den den = den_;
  den.insert(den.end(), o.den_.begin(), o.den_.end());
  return RatLin(num_ * o.num_, std::move(den));
}

RatLin RatLin::div_form(const LinForm& f) const {
  Den den = den_;
  den.emplace_back(f, 1);
  return RatLin(num_, std::move(den));
}

Poly RatLin::den_product(const Den& d) {
  Poly p = Poly::constant(1);
  for (const auto& [f, m] : d)
    for (int i = 0; i < m; ++i) p = p * linform_poly(f);
  return p;
}

bool RatLin::operator==(const RatLin& o) const {
  return num_ * den_product(o.den_) == o.num_ * den_product(den_);
}

Poly RatLin::to_poly() const {
  if (!den_.empty())
    throw InexactDivision("rational function has a nontrivial denominator: " + str());
  return num_;
}

std::string RatLin::str() const {
  if (den_.empty()) return num_.str();
  std::string d;
  for (const auto& [f, m] : den_) {
    if (!d.empty()) d += "*";
    d += linform_name(f);
    if (m > 1) d += "^" + std::to_string(m);
  }
  return "(" + num_.str() + ")/(" + d + ")";
}

}  // namespace satake
