// Command-line front end: restriction tables, Chevalley steps, products,
// Giambelli verification, spinor expansions, and rim-hook data, with
// machine-readable JSON/TSV output.
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "satake/quantum.hpp"
#include "satake/typed.hpp"

using namespace satake;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsageError = 1;
constexpr int kVerificationFailure = 2;

int max_rank() {
  if (const char* env = std::getenv("SATAKE_MAX_RANK")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

Partition parse_partition(const std::string& s) { return Partition(parse_int_list(s)); }

json partition_json(const Partition& p) { return json(p.parts); }

// --set-t handling: "0" sends every t to zero; "c1,c2,..." assigns integers in
// index order starting from `base`.
std::map<Var, Poly> parse_set_t(const std::string& spec, int n, int base) {
  std::map<Var, Poly> sub;
  if (spec.empty()) return sub;
  if (spec == "0") {
    for (int i = 0; i < n; ++i) sub.emplace(tvar(base + i), Poly());
    return sub;
  }
  auto vals = parse_int_list(spec);
  for (std::size_t i = 0; i < vals.size() && static_cast<int>(i) < n; ++i)
    sub.emplace(tvar(base + static_cast<int>(i)), Poly::constant(vals[i]));
  return sub;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  std::string type = "A";
  int k = 1;
  int n = 2;
  std::string lambda, mu, subset, klass, sett, matrix = "Cbar";
  int power = 1;
  bool quantum = false;
  unsigned seed = 1;
};

int run_restrict(const Options& o) {
  if (o.type == "A") {
    GrContext ctx(o.k, o.n);
    std::cout << restriction_table(ctx).tsv();
  } else if (o.type == "Q") {
    std::cout << quadric_restrictions(QuadricContext(o.n)).tsv();
  } else if (o.type == "D") {
    std::cout << og_restriction_table(QuadricContext(o.n)).tsv();
  } else {
    std::cerr << "unknown --type " << o.type << "\n";
    return kUsageError;
  }
  return 0;
}

int run_chevalley(const Options& o) {
  json out;
  out["type"] = o.type;
  if (o.type == "A") {
    Partition lam = parse_partition(o.lambda);
    out["k"] = o.k;
    out["n"] = o.n;
    out["lambda"] = partition_json(lam);
    auto sub = parse_set_t(o.sett, o.n, 1);
    json terms = json::array();
    if (o.quantum) {
      out["quantum"] = true;
      QClass c{o.k, o.n, {}};
      c.add(lam, Poly::constant(1));
      QClass img = quantum_chevalley(o.k, o.n, c);
      for (const auto& [nu, coeff] : img.terms) {
        Poly v = coeff.substitute(sub);
        if (v.is_zero()) continue;
        terms.push_back({{"lambda", partition_json(nu)}, {"coeff", v.str()}});
      }
    } else {
      GrContext ctx(o.k, o.n);
      out["power"] = o.power;
      auto v = WedgeVector<Poly>::basis(o.k, o.n, partition_to_subset(lam, o.k));
      WedgeVector<Poly> img =
          o.power == 1 ? chevalley_action(ctx, v) : power_action(ctx, o.power, v);
      for (const auto& [I, coeff] : img.terms()) {
        Poly val = coeff.substitute(sub);
        if (val.is_zero()) continue;
        terms.push_back(
            {{"lambda", partition_json(subset_to_partition(I, o.k))}, {"coeff", val.str()}});
      }
    }
    out["result"] = std::move(terms);
  } else if (o.type == "Q") {
    QuadricContext ctx(o.n);
    auto label = parse_qlabel(o.klass, o.n);
    if (!label) {
      std::cerr << "bad --class label\n";
      return kUsageError;
    }
    out["n"] = o.n;
    out["class"] = qlabel_str(*label);
    auto sub = parse_set_t(o.sett, o.n, 0);
    json terms = json::array();
    for (const auto& [m, coeff] : quadric_chevalley(ctx, *label)) {
      Poly val = coeff.substitute(sub);
      if (val.is_zero()) continue;
      terms.push_back({{"class", qlabel_str(m)}, {"coeff", val.str()}});
    }
    out["result"] = std::move(terms);
  } else if (o.type == "D") {
    QuadricContext ctx(o.n);
    StrictSubset I = parse_int_list(o.subset);
    out["n"] = o.n;
    out["subset"] = json(I);
    auto sub = parse_set_t(o.sett, o.n, 0);
    Spinor<Poly> s{o.n, {}};
    s.add(I, Poly::constant(1));
    json terms = json::array();
    for (const auto& [J, coeff] : og_chevalley(ctx, s).terms) {
      Poly val = coeff.substitute(sub);
      if (val.is_zero()) continue;
      terms.push_back({{"subset", json(J)}, {"coeff", val.str()}});
    }
    out["result"] = std::move(terms);
  } else {
    std::cerr << "unknown --type " << o.type << "\n";
    return kUsageError;
  }
  emit(out);
  return 0;
}

int run_product(const Options& o) {
  Partition lam = parse_partition(o.lambda), mu = parse_partition(o.mu);
  auto sub = parse_set_t(o.sett, o.n, 1);
  json out;
  out["k"] = o.k;
  out["n"] = o.n;
  out["lambda"] = partition_json(lam);
  out["mu"] = partition_json(mu);
  out["quantum"] = o.quantum;
  json terms = json::array();
  auto push = [&](const Partition& nu, const Poly& c) {
    Poly v = c.substitute(sub);
    if (v.is_zero()) return;
    terms.push_back({{"nu", partition_json(nu)}, {"coeff", v.to_json()}});
  };
  if (o.quantum) {
    QClass prod = quantum_product(o.k, o.n, lam, mu);
    for (const auto& [nu, c] : prod.terms) push(nu, c);
  } else {
    GrContext ctx(o.k, o.n);
    for (const auto& [nu, c] : classical_product(ctx, lam, mu)) push(nu, c);
  }
  out["terms"] = std::move(terms);
  emit(out);
  return 0;
}

int run_schur(const Options& o) {
  Partition lam = parse_partition(o.lambda);
  GrContext ctx(o.k, o.n);
  Poly s = factorial_schur(lam, ctx);
  json out;
  out["k"] = o.k;
  out["n"] = o.n;
  out["lambda"] = partition_json(lam);
  out["poly"] = s.to_json();
  out["string"] = s.str();
  emit(out);
  return 0;
}

int run_schur_p(const Options& o) {
  Partition lam = parse_partition(o.lambda);
  StrictSubset I = even_subset_of_strict(lam);
  Poly p = factorial_schur_P(I, o.n);
  json out;
  out["n"] = o.n;
  out["lambda"] = partition_json(lam);
  out["subset"] = json(I);
  out["poly"] = p.to_json();
  out["string"] = p.str();
  emit(out);
  return 0;
}

int run_giambelli_check(const Options& o) {
  json out;
  out["type"] = o.type;
  json failures = json::array();
  int checked = 0;
  if (o.type == "A") {
    GrContext ctx(o.k, o.n);
    out["k"] = o.k;
    out["n"] = o.n;
    auto table = restriction_table(ctx);
    for (const auto& lam : table.classes()) {
      Poly s = factorial_schur(lam, ctx);
      for (const auto& J : table.points()) {
        std::map<Var, Poly> sub;
        for (int a = 0; a < o.k; ++a) sub.emplace(xvar(a + 1), -Poly::variable(tvar(J[a])));
        ++checked;
        if (!(s.substitute(sub) == table.at(lam, J)))
          failures.push_back({{"lambda", partition_json(lam)}, {"point", json(J)}});
      }
    }
  } else if (o.type == "D") {
    QuadricContext ctx(o.n);
    out["n"] = o.n;
    auto table = og_restriction_table(ctx);
    for (const auto& I : even_subsets(o.n)) {
      Poly P = factorial_schur_P(I, o.n);
      for (const auto& K : even_subsets(o.n)) {
        std::map<Var, Poly> sub;
        for (int i = 0; i < o.n; ++i) {
          bool inK = std::binary_search(K.begin(), K.end(), i);
          sub.emplace(xvar(i), inK ? -Poly::variable(tvar(i)) : Poly());
        }
        ++checked;
        if (!(P.substitute(sub) == table.at(I, K)))
          failures.push_back({{"subset", json(I)}, {"point", json(K)}});
      }
    }
  } else {
    std::cerr << "unknown --type " << o.type << "\n";
    return kUsageError;
  }
  out["checked"] = checked;
  out["ok"] = failures.empty();
  out["failures"] = failures;
  emit(out);
  return failures.empty() ? 0 : kVerificationFailure;
}

int run_spinor_expand(const Options& o) {
  StrictSubset I = parse_int_list(o.subset);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix<Poly> A(o.n, o.n);
  for (int i = 0; i < o.n; ++i)
    for (int j = i + 1; j < o.n; ++j) {
      A(j, i) = Poly::constant(d(rng));
      A(i, j) = -A(j, i);
    }
  Matrix<Poly> B = Matrix<Poly>::identity(o.n);
  for (int i = 0; i < o.n; ++i)
    for (int j = i + 1; j < o.n; ++j) B(j, i) = Poly::constant(d(rng));
  auto pf = spinor_expand_pfaffian(A, B, I);
  auto bf = spinor_expand_bruteforce(A, B, I);
  json out;
  out["n"] = o.n;
  out["subset"] = json(I);
  out["seed"] = o.seed;
  auto matrix_json = [&](const Matrix<Poly>& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
      rows.push_back(std::move(row));
    }
    return rows;
  };
  out["A"] = matrix_json(A);
  out["B"] = matrix_json(B);
  auto spinor_json = [](const Spinor<Poly>& s) {
    json terms = json::array();
    for (const auto& [K, c] : s.terms)
      terms.push_back({{"K", json(K)}, {"coeff", c.str()}});
    return terms;
  };
  out["pfaffian"] = spinor_json(pf);
  out["bruteforce"] = spinor_json(bf);
  bool equal = (pf == bf);
  out["equal"] = equal;
  emit(out);
  return equal ? 0 : kVerificationFailure;
}

int run_rimhook(const Options& o) {
  Partition lam = parse_partition(o.lambda);
  auto core = n_core(lam, o.k, o.n);
  json out;
  out["k"] = o.k;
  out["n"] = o.n;
  out["lambda"] = partition_json(lam);
  out["subset"] = json(partition_to_subset(lam, o.k));
  out["core"] = partition_json(core.core);
  out["s"] = core.s;
  out["sign"] = core.epsilon ? "-1" : "+1";
  out["fits"] = fits_rectangle(core.core, o.k, o.n - o.k);
  emit(out);
  return 0;
}

std::string matrix_tsv(const Matrix<Poly>& m, const std::vector<std::string>& labels) {
  std::string out;
  if (!labels.empty()) {
    out += "row";
    for (const auto& l : labels) out += "\t" + l;
    out += "\n";
  }
  for (int r = 0; r < m.rows(); ++r) {
    if (!labels.empty()) out += labels[r];
    for (int c = 0; c < m.cols(); ++c) {
      if (c || !labels.empty()) out += "\t";
      out += m(r, c).str();
    }
    out += "\n";
  }
  return out;
}

int run_xi(const Options& o) {
  if (o.type == "A") {
    GrContext ctx(o.k, o.n);
    Matrix<Poly> m = o.power == 1 ? build_xi_t(ctx) : xi_power_entries(ctx, o.power);
    std::cout << matrix_tsv(m, {});
    return 0;
  }
  if (o.type == "qt") {
    std::cout << matrix_tsv(build_xi_qt(o.k, o.n), {});
    return 0;
  }
  QuadricContext ctx(o.n);
  std::vector<std::string> labels;
  for (int r = 0; r < 2 * o.n; ++r) labels.push_back(qlabel_str(qlabel_of_row(o.n, r)));
  if (o.type == "D") {
    std::cout << matrix_tsv(build_xi_t_D(ctx), labels);
  } else if (o.type == "eta") {
    std::cout << matrix_tsv(build_eta_t(ctx), labels);
  } else {
    std::cerr << "unknown --type " << o.type << "\n";
    return kUsageError;
  }
  return 0;
}

int run_transition(const Options& o) {
  QuadricContext ctx(o.n);
  TransitionData td = transition_data(ctx);
  if (o.matrix == "S") {
    std::string out;
    for (int j = 0; j < o.n; ++j) out += (j ? "\t" : "") + td.S[j].str();
    std::cout << out << "\n";
    return 0;
  }
  const Matrix<RatLin>* m = nullptr;
  if (o.matrix == "Cbar") m = &td.Cbar;
  else if (o.matrix == "C") m = &td.C;
  else if (o.matrix == "Bbar") m = &td.Bbar;
  else if (o.matrix == "A") m = &td.CbarInvC;
  if (!m) {
    std::cerr << "unknown --matrix (use Cbar, C, Bbar, A, or S)\n";
    return kUsageError;
  }
  std::string out;
  for (int r = 0; r < o.n; ++r) {
    for (int c = 0; c < o.n; ++c) {
      if (c) out += "\t";
      out += (*m)(r, c).str();
    }
    out += "\n";
  }
  std::cout << out;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact equivariant Schubert calculus through the Satake model"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool with_k) {
    cmd->add_option("-n,--n", o.n, "rank");
    if (with_k) cmd->add_option("-k,--k", o.k, "wedge degree k");
  };

  auto* restrict_cmd = app.add_subcommand("restrict", "restriction table (TSV)");
  restrict_cmd->add_option("--type", o.type, "A, Q, or D");
  add_common(restrict_cmd, true);

  auto* chev = app.add_subcommand("chevalley", "one divisor-multiplication step");
  chev->add_option("--type", o.type, "A, Q, or D");
  add_common(chev, true);
  chev->add_option("--lambda", o.lambda, "partition, e.g. 2,1");
  chev->add_option("--subset", o.subset, "type D subset, e.g. 0,2");
  chev->add_option("--class", o.klass, "quadric class label, e.g. b1");
  chev->add_option("--power", o.power, "use the j-th power operator");
  chev->add_flag("--quantum", o.quantum, "quantum Chevalley operator");
  chev->add_option("--set-t", o.sett, "0 or comma-separated integers");

  auto* prod = app.add_subcommand("product", "classical or quantum product");
  add_common(prod, true);
  prod->add_option("--lambda", o.lambda, "first partition");
  prod->add_option("--mu", o.mu, "second partition");
  prod->add_flag("--quantum", o.quantum, "quantum product via the rim-hook rule");
  prod->add_option("--set-t", o.sett, "0 or comma-separated integers");

  auto* schur = app.add_subcommand("schur", "factorial Schur polynomial");
  add_common(schur, true);
  schur->add_option("--lambda", o.lambda, "partition");

  auto* schurp = app.add_subcommand("schur-p", "factorial Schur P-function");
  add_common(schurp, false);
  schurp->add_option("--lambda", o.lambda, "strict partition");

  auto* giam = app.add_subcommand("giambelli-check", "verify the Giambelli theorem");
  giam->add_option("--type", o.type, "A or D");
  add_common(giam, true);

  auto* spinor = app.add_subcommand("spinor-expand",
                                    "pure-spinor expansion: Pfaffian formula vs brute force");
  add_common(spinor, false);
  spinor->add_option("--subset", o.subset, "even subset, e.g. 0,1");
  spinor->add_option("--seed", o.seed, "seed for the random transition data");

  auto* rim = app.add_subcommand("rimhook", "n-core, hook count, and sign");
  add_common(rim, true);
  rim->add_option("--lambda", o.lambda, "partition");

  auto* xi = app.add_subcommand("xi", "matrices: xi_t (A/D), eta_t, xi_{q,t}");
  xi->add_option("--type", o.type, "A, D, eta, or qt");
  add_common(xi, true);
  xi->add_option("--power", o.power, "closed-form power entries (type A)");

  auto* trans = app.add_subcommand("transition", "quadric transition matrices (TSV)");
  add_common(trans, false);
  trans->add_option("--matrix", o.matrix, "Cbar, C, Bbar, A, or S");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (o.n > max_rank()) {
      std::cerr << "rank " << o.n << " exceeds SATAKE_MAX_RANK (" << max_rank() << ")\n";
      return kUsageError;
    }
    if (restrict_cmd->parsed()) return run_restrict(o);
    if (chev->parsed()) return run_chevalley(o);
    if (prod->parsed()) return run_product(o);
    if (schur->parsed()) return run_schur(o);
    if (schurp->parsed()) return run_schur_p(o);
    if (giam->parsed()) return run_giambelli_check(o);
    if (spinor->parsed()) return run_spinor_expand(o);
    if (rim->parsed()) return run_rimhook(o);
    if (xi->parsed()) return run_xi(o);
    if (trans->parsed()) return run_transition(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
