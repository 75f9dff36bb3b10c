#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satake/errors.hpp"

namespace satake {

// Variables come in three alphabets: equivariant parameters t, Chern roots x,
// and the quantum parameter q.  Canonical ordering is (kind, index), which
// fixes the display order t..., x..., q and the graded-lex term order.
enum class VarKind : std::uint8_t { T = 0, X = 1, Q = 2 };

struct Var {
  VarKind kind{VarKind::T};
  std::int16_t index{0};

  friend constexpr auto operator<=>(const Var&, const Var&) = default;
};

inline Var tvar(int i) { return Var{VarKind::T, static_cast<std::int16_t>(i)}; }
inline Var xvar(int i) { return Var{VarKind::X, static_cast<std::int16_t>(i)}; }
inline Var qvar() { return Var{VarKind::Q, 0}; }

std::string var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

// Sorted, duplicate-free list of variables.
using VarSet = std::vector<Var>;

VarSet make_varset(std::vector<Var> vars);
// t-variables with indices lo..hi inclusive.
VarSet tvar_range(int lo, int hi);

// A linear form v_a - v_b or v_a + v_b with a < b.  make_linform canonicalizes
// the variable order and reports the sign picked up by a swap.
struct LinForm {
  Var a;
  Var b;
  bool plus{false};

  friend constexpr auto operator<=>(const LinForm&, const LinForm&) = default;
};

struct SignedForm {
  LinForm form;
  int sign;  // +1 or -1
};

// Throws ZeroDenominatorForm on v - v.
SignedForm make_linform(Var a, Var b, bool plus);

std::string linform_name(const LinForm& f);

}  // namespace satake
