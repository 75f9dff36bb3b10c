#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "satake/vars.hpp"

namespace satake {

using Int = mpz_class;

// Hard cap on the number of distinct variables in one polynomial; the largest
// computations here use ~22 (t1..t21 plus q).
inline constexpr int kMaxVars = 30;

// Exponent vector with cached total degree.  Slots follow the owning Poly's
// varset order; unused slots stay zero so hashing and comparison can run over
// the whole array.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t total{0};

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.total == b.total && a.e == b.e;
  }
};

// Graded lexicographic: first by total degree, then lexicographically with
// earlier variables dominating.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
  if (a.total != b.total) return a.total < b.total;
  return std::memcmp(a.e.data(), b.e.data(), kMaxVars) < 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t w[4] = {0, 0, 0, 0};
    std::memcpy(w, m.e.data(), kMaxVars);
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ m.total;
    for (std::uint64_t x : w) {
      h ^= x;
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
  }
};

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients.  Terms are kept sorted ascending in graded-lex order and never
// carry a zero coefficient.  Values are immutable after construction; all
// operations return new polynomials.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Int coeff;
  };

  Poly();  // zero over the empty varset

  static Poly constant(Int c);
  static Poly constant(long c) { return constant(Int(c)); }
  static Poly variable(Var v);
  // `terms` need not be sorted; duplicates are combined, zeros dropped.
  static Poly make(std::shared_ptr<const VarSet> vars, std::vector<Term> terms);

  const VarSet& vars() const { return *vars_; }
  const std::shared_ptr<const VarSet>& vars_ptr() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  int degree() const;  // -1 for the zero polynomial

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const Int& c) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const;

  // Homomorphic substitution; variables absent from `map` stay themselves.
  Poly substitute(const std::map<Var, Poly>& map) const;

  // Coefficient of the monomial given as (variable, exponent) pairs.
  Int coeff_of(const std::map<Var, int>& mono) const;

  // Canonical string, terms in descending graded-lex order.
  std::string str() const;

  nlohmann::ordered_json to_json() const;
  static Poly from_json(const nlohmann::json& j);

  friend std::optional<Poly> try_exact_div(const Poly& num, const Poly& den);

 private:
  std::shared_ptr<const VarSet> vars_;
  std::vector<Term> terms_;  // ascending graded-lex, no zero coefficients

  // Re-express over a superset varset.
  Poly embedded(const std::shared_ptr<const VarSet>& target) const;
  static void align(const Poly& a, const Poly& b, Poly& ea, Poly& eb);
};

inline Poly operator*(const Int& c, const Poly& p) { return p * c; }

// Exact division: returns q with q*den == num, or nullopt.
std::optional<Poly> try_exact_div(const Poly& num, const Poly& den);
// Throws InexactDivision when den does not divide num exactly.
Poly exact_div(const Poly& num, const Poly& den);

// Complete homogeneous symmetric polynomial h_a in the given window.
Poly complete_homogeneous(int a, std::span<const Var> window);
Poly complete_homogeneous(int a, std::span<const Poly> args);

// Generalized factorial power (x|t)^a = (x + t_1)(x + t_2)...(x + t_a), with
// t_i the i-th entry of `alphabet`.  Throws AlphabetTooShort.
Poly factorial_power(Var x, int a, std::span<const Var> alphabet);

Poly linform_poly(const LinForm& f);

}  // namespace satake
