// howe_cli - command-line front end: every module is exposed as a subcommand
// that writes a single JSON document to stdout.  Exit codes: 0 success,
// 1 verification failure, 2 usage / domain error.  All randomized subcommands
// take --seed; identical invocations produce byte-identical output.

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "howe/cocycle_lab.hpp"
#include "howe/intertwining.hpp"
#include "howe/oracles.hpp"
#include "howe/root_data.hpp"
#include "howe/scalar_algebra.hpp"
#include "howe/special_functions.hpp"
#include "howe/symplectic_geometry.hpp"

using json = nlohmann::json;
using namespace howe;

namespace {

constexpr int kExitOk = 0, kExitVerification = 1, kExitUsage = 2;

// Floats are serialized as strings with 17 significant digits so the byte
// stream is pinned; rationals serialize as "p/q" strings.
std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json rat_list(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(rat_to_string(r));
  return a;
}

json poly_json(const UniPoly& p) {
  json a = json::array();
  for (long k = 0; k <= p.degree(); ++k) a.push_back(rat_to_string(p.coeff(k)));
  return a;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(rat_from_string(tok));
  if (v.empty()) throw std::invalid_argument("empty rational list");
  return v;
}

struct PairArgs {
  std::string algebra = "R";
  long d = 1, dprime = 2;
  long p = -1, q = -1;
};

void add_pair_flags(CLI::App* cmd, PairArgs& a) {
  cmd->add_option("--algebra", a.algebra, "division algebra: R, C or H")
      ->check(CLI::IsMember({"R", "C", "H"}));
  cmd->add_option("--d", a.d, "rank parameter of the compact member")->required();
  cmd->add_option("--dprime", a.dprime, "dimension of the other module")->required();
  cmd->add_option("--p", a.p, "signature p (C only; default floor(d'/2))");
  cmd->add_option("--q", a.q, "signature q (C only; default d' - p)");
}

DualPair build_pair(const PairArgs& a) {
  if (a.algebra == "R")
    return make_dual_pair(Algebra::R, a.d % 2 == 0 ? GFamily::O_even : GFamily::O_odd, a.d,
                          a.dprime);
  if (a.algebra == "H") return make_dual_pair(Algebra::H, GFamily::Sp, a.d, a.dprime);
  long p = a.p, q = a.q;
  if (p < 0 && q < 0) {
    p = a.dprime / 2;
    q = a.dprime - p;
  } else if (p < 0) {
    p = a.dprime - q;
  } else if (q < 0) {
    q = a.dprime - p;
  }
  if (p > q) std::swap(p, q);
  return make_dual_pair(Algebra::C, GFamily::U, a.d, a.dprime, p, q);
}

std::string family_name(const DualPair& pr) {
  switch (pr.g_family) {
    case GFamily::O_even: return "O_even";
    case GFamily::O_odd: return "O_odd";
    case GFamily::U: return "U";
    case GFamily::Sp: return "Sp";
  }
  return "?";
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

// ---- subcommand bodies ------------------------------------------------------

int run_pair_info(const PairArgs& a) {
  const DualPair pr = build_pair(a);
  json doc{{"algebra", a.algebra},
           {"family", family_name(pr)},
           {"d", pr.d},
           {"dprime", pr.d_prime},
           {"p", pr.p},
           {"q", pr.q},
           {"l", pr.l},
           {"lprime", pr.l_prime},
           {"r", rat_to_string(pr.r)},
           {"iota", rat_to_string(pr.iota)},
           {"delta", rat_to_string(pr.delta)},
           {"beta_pi_multiple", rat_to_string(pr.beta_pi_multiple)},
           {"dim_g", dim_g(pr)},
           {"dim_gprime", dim_gprime(pr)},
           {"dim_W", dim_W(pr)},
           {"witt_index", witt_index(pr)},
           {"max_orbit_rank", max_orbit_rank(pr)},
           {"stable_range", pr.d <= witt_index(pr)},
           {"rho", rat_list(rho(pr))}};
  emit(doc);
  return kExitOk;
}

int run_poly(long a, long b) {
  const LinePolyDistribution d = fourier_pair({a, b});
  json doc{{"a", a},
           {"b", b},
           {"plus_part", poly_json(d.plus_part)},
           {"minus_part", poly_json(d.minus_part)},
           {"delta_part", poly_json(d.delta_part)},
           {"overall", "2*pi"}};
  emit(doc);
  return kExitOk;
}

int run_fourier_check(long a, long b, const std::string& xi_str) {
  const Rat xi = rat_from_string(xi_str);
  if (a + b < 1) throw std::domain_error("fourier-check: requires a + b >= 1");
  const double got = quad_fourier(a, b, xi);
  const double want = fourier_expected(a, b, xi);
  const double residual = std::abs(got - want) / std::max(1.0, std::abs(want));
  const bool ok = residual <= 1e-6;
  json doc{{"a", a},           {"b", b},
           {"xi", xi_str},     {"quadrature", fmt17(got)},
           {"table", fmt17(want)}, {"residual", fmt17(residual)},
           {"ok", ok}};
  emit(doc);
  return ok ? kExitOk : kExitVerification;
}

int run_orbit_dims(const PairArgs& a) {
  const DualPair pr = build_pair(a);
  json rows = json::array();
  for (long k = 0; k <= max_orbit_rank(pr); ++k)
    rows.push_back(json{{"k", k}, {"dim", orbit_dim(pr, k)}});
  json doc{{"algebra", a.algebra},
           {"d", pr.d},
           {"dprime", pr.d_prime},
           {"witt_index", witt_index(pr)},
           {"orbits", rows}};
  emit(doc);
  return kExitOk;
}

int run_correspond(long l, long lprime, const std::string& mu_str) {
  const HCParam mu(parse_rat_list(mu_str));
  const HCParam mu_p = correspond(mu, l, lprime);
  json doc{{"l", l}, {"lprime", lprime}, {"mu", rat_list(mu.entries)},
           {"mu_prime", rat_list(mu_p.entries)}};
  emit(doc);
  return kExitOk;
}

int run_dim(long l, long lprime, const std::string& mu_str) {
  const HCParam mu(parse_rat_list(mu_str));
  const Rat d = dim_pi_prime(mu, l, lprime);
  // Cross-check through the correspondence and the Weyl dimension formula.
  const DualPair pr = make_dual_pair(Algebra::C, GFamily::U, lprime, lprime, 0, lprime);
  const HCParam mu_p = correspond(mu, l, lprime);
  const std::vector<Rat> rh = rho(pr);
  std::vector<Rat> lam;
  for (long j = 0; j < lprime; ++j) lam.push_back(mu_p.entries[j] - rh[j]);
  const Rat w = weyl_dimension(HighestWeight(lam), pr);
  const bool ok = (d == w);
  json doc{{"l", l},
           {"lprime", lprime},
           {"mu", rat_list(mu.entries)},
           {"dim", rat_to_string(d)},
           {"weyl_dim_of_correspond", rat_to_string(w)},
           {"ok", ok}};
  emit(doc);
  return ok ? kExitOk : kExitVerification;
}

int run_mult_one(long l, long lprime, long mumax) {
  const MultOneReport r = multiplicity_one_check(l, lprime, mumax);
  json doc{{"l", l},
           {"lprime", lprime},
           {"mu_max_offset", mumax},
           {"checked", r.checked},
           {"ratio", rat_to_string(r.ratio)},
           {"ok", r.ok}};
  if (!r.ok) doc["failure"] = r.failure;
  emit(doc);
  return r.ok ? kExitOk : kExitVerification;
}

int run_identities() {
  long cases = 0;
  json failures = json::array();
  auto attempt = [&](const std::string& name, const std::function<void()>& f) {
    ++cases;
    try {
      f();
    } catch (const std::exception& e) {
      failures.push_back(json{{"case", name}, {"error", e.what()}});
    }
  };
  for (long a = -8; a <= 8; ++a)
    for (long b = -8; b <= 8; ++b) {
      attempt("reflection", [&] {
        if (poly_Pm2({a, b}) != poly_P2({b, a}).compose_scaled(Rat(-1)))
          throw std::logic_error("reflection failed");
      });
      attempt("derivative", [&] { derivative_identity_check(a, b); });
    }
  for (long c = 0; c <= 8; ++c)
    for (long a = -8; a <= 8; ++a) {
      const long b = 1 - a - c;
      if (b < -8 || b > 8) continue;
      attempt("shift", [&] { shift_identity_check(a, b, c); });
    }
  for (long l = 1; l <= 5; ++l) attempt("partial_pi_pi", [&] { partial_pi_pi(l); });
  for (long n = 2; n <= 8; ++n) attempt("fan_det", [&] { fan_det(Rat(3, 7), n); });
  for (long l = 1; l <= 3; ++l)
    for (long lp = l; lp <= 6; ++lp)
      attempt("gaussian_selberg", [&] { gaussian_selberg(l, lp); });
  json doc{{"suite", "identities"},
           {"cases", cases},
           {"failures", failures},
           {"ok", failures.empty()}};
  emit(doc);
  return failures.empty() ? kExitOk : kExitVerification;
}

int run_cocycle_check(long nmax, long samples, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  json failures = json::array();
  double max_residual = 0;
  for (long n = 1; n <= nmax; ++n) {
    SymplecticElement m1{-RealMat::Identity(2 * n, 2 * n)};
    const double res =
        std::abs(cocycle_modulus(m1, m1) - std::pow(2.0, 2.0 * n)) / std::pow(2.0, 2.0 * n);
    max_residual = std::max(max_residual, res);
    if (res > 1e-9) failures.push_back(json{{"case", "modulus_minus_one"}, {"n", n}});
  }
  long done = 0;
  while (done < samples) {
    const long n = 1 + done % nmax;
    const auto g1 = random_unitary_element(n, rng);
    const auto g2 = random_unitary_element(n, rng);
    try {
      const auto rep = det_identity_check(g1, g2);
      max_residual = std::max(max_residual, rep.residual);
      if (rep.residual > 1e-8) failures.push_back(json{{"case", "det_identity"}, {"n", n}});
      const auto h = signature_halving_check(g1, g2);
      if (h.sgn_q != 2 * h.sgn_h)
        failures.push_back(json{{"case", "signature_halving"}, {"n", n}});
      const std::complex<double> lhs = unitary_cocycle(g1, g2);
      const std::complex<double> rhs = cocycle_modulus(g1, g2) * cocycle_phase(g1, g2);
      const double res = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
      max_residual = std::max(max_residual, res);
      if (res > 1e-8) failures.push_back(json{{"case", "polar_decomposition"}, {"n", n}});
      ++done;
    } catch (const std::runtime_error&) {
      continue;  // resample degenerate draws
    }
  }
  json doc{{"suite", "cocycle-check"}, {"nmax", nmax},
           {"samples", samples},       {"seed", seed},
           {"max_residual", fmt17(max_residual)},
           {"failures", failures},     {"ok", failures.empty()}};
  emit(doc);
  return failures.empty() ? kExitOk : kExitVerification;
}

int run_toy_o1sp(long n, const std::string& sign) {
  if (sign != "plus" && sign != "minus")
    throw CLI::ValidationError("--sign", "must be plus or minus");
  const ToyDistribution t = o1_sp_toy(n, sign == "plus" ? 1 : -1);
  json doc{{"delta", rat_to_string(t.delta_coeff)},
           {"lebesgue", rat_to_string(t.lebesgue_coeff)}};
  emit(doc);
  return kExitOk;
}

int run_eval_distribution(long l, long lprime, const std::string& mu_str, long samples,
                          unsigned long long seed) {
  const HCParam mu(parse_rat_list(mu_str));
  const auto prof = uu_distribution(mu, l, lprime);
  const DualPair pr = make_dual_pair(Algebra::C, GFamily::U, l, lprime, 0, lprime);
  std::mt19937_64 rng(seed);
  double max_residual = 0;
  json values = json::array();
  for (long rep = 0; rep < samples; ++rep) {
    const auto w = random_W(pr, rng);
    const auto g = random_G(pr, rng);
    const auto gp = random_Gprime(pr, rng);
    MatrixOverD moved(pr.algebra, pr.d_prime, pr.d);
    moved.m = gp.m * w.m * g.m;
    const double base = eval_uu(prof, w);
    const double after = eval_uu(prof, moved);
    max_residual =
        std::max(max_residual, std::abs(base - after) / std::max(1.0, std::abs(base)));
    if (rep < 5) values.push_back(fmt17(base));
  }
  const bool ok = max_residual <= 1e-9;
  json doc{{"l", l},
           {"lprime", lprime},
           {"mu", rat_list(mu.entries)},
           {"samples", samples},
           {"seed", seed},
           {"first_values", values},
           {"max_invariance_residual", fmt17(max_residual)},
           {"ok", ok}};
  emit(doc);
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numerical toolkit for compact dual pairs"};
  app.require_subcommand(1);

  PairArgs info_args;
  auto* cmd_info = app.add_subcommand("pair-info", "derived constants of a dual pair");
  add_pair_flags(cmd_info, info_args);

  long poly_a = 0, poly_b = 0;
  auto* cmd_poly = app.add_subcommand("poly", "polynomial family for one exponent pair");
  cmd_poly->add_option("--a", poly_a)->required();
  cmd_poly->add_option("--b", poly_b)->required();

  long fc_a = 0, fc_b = 0;
  std::string fc_xi = "1";
  auto* cmd_fc = app.add_subcommand("fourier-check", "quadrature vs polynomial table");
  cmd_fc->add_option("--a", fc_a)->required();
  cmd_fc->add_option("--b", fc_b)->required();
  cmd_fc->add_option("--xi", fc_xi, "rational evaluation point");

  PairArgs orbit_args;
  auto* cmd_orbit = app.add_subcommand("orbit-dims", "nilpotent orbit dimensions by rank");
  add_pair_flags(cmd_orbit, orbit_args);

  long co_l = 1, co_lp = 1;
  std::string co_mu;
  auto* cmd_co = app.add_subcommand("correspond", "parameter correspondence mu -> mu'");
  cmd_co->add_option("--l", co_l)->required();
  cmd_co->add_option("--lprime", co_lp)->required();
  cmd_co->add_option("--mu", co_mu, "comma-separated rationals")->required();

  long dim_l = 1, dim_lp = 1;
  std::string dim_mu;
  auto* cmd_dim = app.add_subcommand("dim", "dimension formula with cross-check");
  cmd_dim->add_option("--l", dim_l)->required();
  cmd_dim->add_option("--lprime", dim_lp)->required();
  cmd_dim->add_option("--mu", dim_mu, "comma-separated rationals")->required();

  long mo_l = 1, mo_lp = 2, mo_max = 6;
  auto* cmd_mo = app.add_subcommand("mult-one", "skew-sum / dimension ratio sweep");
  cmd_mo->add_option("--l", mo_l)->required();
  cmd_mo->add_option("--lprime", mo_lp)->required();
  cmd_mo->add_option("--mumax", mo_max, "maximal offset mu_j - delta");

  app.add_subcommand("identities", "exact identity suite");

  long cc_n = 4, cc_samples = 50;
  unsigned long long cc_seed = 1;
  auto* cmd_cc = app.add_subcommand("cocycle-check", "metaplectic cocycle verification");
  cmd_cc->add_option("--nmax", cc_n, "maximal symplectic rank");
  cmd_cc->add_option("--samples", cc_samples);
  cmd_cc->add_option("--seed", cc_seed);

  long toy_n = 1;
  std::string toy_sign = "plus";
  auto* cmd_toy = app.add_subcommand("toy-o1sp", "rank-one toy distribution");
  cmd_toy->add_option("--n", toy_n)->required();
  cmd_toy->add_option("--sign", toy_sign, "plus or minus");

  long ed_l = 1, ed_lp = 1, ed_samples = 20;
  unsigned long long ed_seed = 1;
  std::string ed_mu;
  auto* cmd_ed = app.add_subcommand("eval-distribution", "closed-form invariance check");
  cmd_ed->add_option("--l", ed_l)->required();
  cmd_ed->add_option("--lprime", ed_lp)->required();
  cmd_ed->add_option("--mu", ed_mu, "comma-separated rationals")->required();
  cmd_ed->add_option("--samples", ed_samples);
  cmd_ed->add_option("--seed", ed_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cmd_info->parsed()) return run_pair_info(info_args);
    if (cmd_poly->parsed()) return run_poly(poly_a, poly_b);
    if (cmd_fc->parsed()) return run_fourier_check(fc_a, fc_b, fc_xi);
    if (cmd_orbit->parsed()) return run_orbit_dims(orbit_args);
    if (cmd_co->parsed()) return run_correspond(co_l, co_lp, co_mu);
    if (cmd_dim->parsed()) return run_dim(dim_l, dim_lp, dim_mu);
    if (cmd_mo->parsed()) return run_mult_one(mo_l, mo_lp, mo_max);
    if (app.get_subcommand("identities")->parsed()) return run_identities();
    if (cmd_cc->parsed()) return run_cocycle_check(cc_n, cc_samples, cc_seed);
    if (cmd_toy->parsed()) return run_toy_o1sp(toy_n, toy_sign);
    if (cmd_ed->parsed())
      return run_eval_distribution(ed_l, ed_lp, ed_mu, ed_samples, ed_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
