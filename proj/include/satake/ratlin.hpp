#pragma once

#include <utility>
#include <vector>

#include "satake/poly.hpp"

namespace satake {

// Rational function whose denominator is a product of linear forms
// (v_a - v_b) or (v_a + v_b).  Kept normalized: any denominator factor
// dividing the numerator is cancelled exactly.
class RatLin {
 public:
  using Den = std::vector<std::pair<LinForm, int>>;  // sorted, multiplicities > 0

  RatLin() = default;
  RatLin(Poly num) : num_(std::move(num)) {}  // NOLINT: implicit by design
  RatLin(Poly num, Den den);

  static RatLin form_reciprocal(const LinForm& f, int mult = 1);

  const Poly& num() const { return num_; }
  const Den& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.empty(); }

  RatLin operator-() const;
  RatLin operator+(const RatLin& o) const;
  RatLin operator-(const RatLin& o) const;
  RatLin operator*(const RatLin& o) const;
  RatLin& operator+=(const RatLin& o) { return *this = *this + o; }
  RatLin& operator-=(const RatLin& o) { return *this = *this - o; }
  RatLin& operator*=(const RatLin& o) { return *this = *this * o; }

  // Divide by a single linear form.
  RatLin div_form(const LinForm& f) const;

  // Equality as rational functions, by cross-multiplication.
  bool operator==(const RatLin& o) const;

  // Requires an empty denominator (after cancellation); throws InexactDivision.
  Poly to_poly() const;

  std::string str() const;

 private:
  Poly num_;
  Den den_;

  void cancel();
  static Poly den_product(const Den& d);
};

}  // namespace satake
