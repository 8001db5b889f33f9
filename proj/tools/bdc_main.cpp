#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bdc/baa.hpp"
#include "bdc/bounds.hpp"
#include "bdc/channel_matrix.hpp"
#include "bdc/format.hpp"
#include "bdc/markov.hpp"
#include "bdc/openmp.hpp"
#include "bdc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::vector<double> make_grid(double d_min, double d_max, double d_step) {
  std::vector<double> g;
  for (int i = 0;; ++i) {
    const double d = d_min + i * d_step;
    if (d > d_max + 1e-12) break;
    g.push_back(d < d_max ? d : d_max);
  }
  return g;
}

struct BoundsConfig {
  std::vector<std::string> selected;
  double d_min = 0.0, d_max = 1.0, d_step = 0.01;
  double gamma = 0.9;
  int L_max = 6;
  int steps = 4;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::string out;
};

int run_bounds(const BoundsConfig& cfg) {
  if (!(cfg.d_min >= 0.0 && cfg.d_min < cfg.d_max && cfg.d_max <= 1.0 &&
        cfg.d_step > 0.0)) {
    std::cerr << "bounds: need 0 <= d-min < d-max <= 1 and d-step > 0\n";
    return kExitUsage;
  }
  const std::vector<double> d_grid = make_grid(cfg.d_min, cfg.d_max, cfg.d_step);

  bool need_f = false;
  for (const auto& id : cfg.selected) {
    if (id == "tl" || id == "lemma2") need_f = true;
    if (id != "c1" && id != "c2" && id != "c3" && id != "c4" &&
        id != "theorem2" && id != "tl" && id != "lemma2" && id != "erasure" &&
        id != "rahmati_duman" && id != "one_minus_h" && id != "dg_lower" &&
        id != "dm_lower") {
      std::cerr << "bounds: unknown bound identifier '" << id << "'\n";
      return kExitUsage;
    }
  }

  bdc::FTable f;
  if (need_f) {
    std::vector<std::pair<int, int>> jobs;
    for (int L = 1; L <= cfg.L_max; ++L) {
      for (int R = 0; R <= L; ++R) jobs.emplace_back(L, R);
    }
#pragma omp parallel for schedule(dynamic)
    for (long long k = 0; k < static_cast<long long>(jobs.size()); ++k) {
      const auto [L, R] = jobs[static_cast<std::size_t>(k)];
      bdc::f_value(L, R, cfg.tol);
    }
    for (const auto& [L, R] : jobs) f[{L, R}] = bdc::f_value(L, R, cfg.tol);
  }

  const std::size_t np = d_grid.size();
  auto eval = [&](auto&& fn) {
    std::vector<double> v(np);
    for (std::size_t i = 0; i < np; ++i) v[i] = fn(bdc::DeletionProb(d_grid[i]));
    return v;
  };
  auto eval_par = [&](auto&& fn) {
    std::vector<double> v(np);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(np); ++i) {
      v[static_cast<std::size_t>(i)] =
          fn(bdc::DeletionProb(d_grid[static_cast<std::size_t>(i)]));
    }
    return v;
  };

  std::vector<bdc::CurveColumn> cols;
  const auto kU = bdc::CurveKind::upper;
  const auto kL = bdc::CurveKind::lower;
  const auto kR = bdc::CurveKind::reference;
  // partial-domain reference curves carry NA markers and skip curve validation
  const auto checked = [&](bdc::CurveColumn col) {
    bdc::BoundCurve{col.name, d_grid, col.values, col.kind}.validate();
    return col;
  };
  for (const auto& id : cfg.selected) {
    if (id == "c1") {
      cols.push_back(checked({id, kU, "0.5(1-d)^2(1+log2(1+2^(-2d/(1-d))))+d(1-d)",
                              eval(bdc::two_bit_block_bound)}));
    } else if (id == "c2" || id == "c3" || id == "theorem2") {
      const double g = id == "c2" ? 0.51 : id == "c3" ? 0.99 : cfg.gamma;
      std::ostringstream formula;
      formula << "(1-d)(1-H(d(1-g)/(1+d(1-2g)))), g=" << g;
      cols.push_back(checked({id, kU, formula.str(),
                              eval([g](bdc::DeletionProb d) {
                                return bdc::markov_mi_bound(d, g);
                              })}));
    } else if (id == "c4") {
      cols.push_back(checked({id, kU, "(1-d)(1-H(d/(2(1+d))))",
                              eval(bdc::linear_gamma_bound)}));
    } else if (id == "tl") {
      for (int L = 1; L <= cfg.L_max; ++L) {
        std::ostringstream formula;
        formula << "(1/L) sum_i P(i deletions) f(L,L-i), L=" << L;
        cols.push_back(checked({"t" + std::to_string(L), kU, formula.str(),
                                eval([&, L](bdc::DeletionProb d) {
                                  return bdc::t_bound(L, d, f);
                                })}));
      }
    } else if (id == "lemma2") {
      std::vector<std::vector<double>> ext(np);
      for (std::size_t i = 0; i < np; ++i) {
        const bdc::DeletionProb d(d_grid[i]);
        ext[i] = bdc::extend_t_bounds(bdc::t_bound(cfg.L_max, d, f), cfg.L_max, d,
                                      cfg.steps);
      }
      for (int s = 0; s < cfg.steps; ++s) {
        std::vector<double> v(np);
        for (std::size_t i = 0; i < np; ++i) v[i] = ext[i][static_cast<std::size_t>(s)];
        const int k = cfg.L_max + s + 1;
        cols.push_back(checked({"u" + std::to_string(k), kU,
                                "recursion (k U_k + 1 - d)/(k+1) from t" +
                                    std::to_string(cfg.L_max),
                                std::move(v)}));
      }
    } else if (id == "erasure") {
      cols.push_back(checked({id, kU, "1-d", eval([](bdc::DeletionProb d) {
                                return 1.0 - d.value();
                              })}));
    } else if (id == "rahmati_duman") {
      cols.push_back({id, kU, "0.4143(1-d), d>=0.65",
                      eval([](bdc::DeletionProb d) {
                        const auto r = bdc::reference_bounds(d);
                        return r.rahmati_duman
                                   ? *r.rahmati_duman
                                   : std::numeric_limits<double>::quiet_NaN();
                      })});
    } else if (id == "one_minus_h") {
      cols.push_back({id, kR, "1-H(d), d<0.5",
                      eval([](bdc::DeletionProb d) {
                        const auto r = bdc::reference_bounds(d);
                        return r.one_minus_h ? *r.one_minus_h
                                             : std::numeric_limits<double>::quiet_NaN();
                      })});
    } else if (id == "dg_lower") {
      cols.push_back(checked({id, kL,
                              "sup_{t,g} -t log2(e) - (1-d) log2((1-q)A+qB)",
                              eval_par(bdc::dg_lower_bound)}));
    } else if (id == "dm_lower") {
      cols.push_back(checked({id, kL,
                              "sup_{t,g} -t log2(e) - (1-d) log2(A^(1-q) B^q)",
                              eval_par(bdc::dm_lower_bound)}));
    }
  }

  // exported upper curves must dominate exported lower curves pointwise
  for (const auto& up : cols) {
    if (up.kind != bdc::CurveKind::upper) continue;
    for (const auto& low : cols) {
      if (low.kind != bdc::CurveKind::lower) continue;
      for (std::size_t i = 0; i < np; ++i) {
        if (std::isnan(up.values[i]) || std::isnan(low.values[i])) continue;
        if (low.values[i] > up.values[i] + 1e-6) {
          std::cerr << "bounds: lower curve " << low.name << " exceeds upper curve "
                    << up.name << " at d=" << d_grid[i] << '\n';
          return kExitVerifyFail;
        }
      }
    }
  }

  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) {
    std::cerr << "bounds: cannot open '" << cfg.out << "' for writing\n";
    return kExitIo;
  }
  file << "# config: d-min=" << bdc::detail::format_sig(cfg.d_min, 12)
       << " d-max=" << bdc::detail::format_sig(cfg.d_max, 12)
       << " d-step=" << bdc::detail::format_sig(cfg.d_step, 12)
       << " L-max=" << cfg.L_max << " gamma=" << bdc::detail::format_sig(cfg.gamma, 12)
       << " steps=" << cfg.steps << " tol=" << bdc::detail::format_sig(cfg.tol, 6)
       << " seed=" << cfg.seed << '\n';
  bdc::write_curves_csv(file, d_grid, cols);
  if (!file.good()) {
    std::cerr << "bounds: write failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_fibdc(int L, double d_value, double tol, int cap,
              const std::string& f_table_path) {
  const bdc::DeletionProb d(d_value);
  const auto rows = bdc::f_table_rows(L, tol, cap);
  bdc::FTable f;
  for (const auto& r : rows) f[{r.L, r.R}] = r.f;

  const bdc::BaaResult cl =
      bdc::blahut_arimoto(bdc::build_fi_matrix(L, d, cap), tol, 500000);
  const double t = bdc::t_bound(L, d, f);
  double weighted = 0.0;
  for (int i = 0; i <= L; ++i) {
    weighted += bdc::deletion_count_prob(L, i, d) * f.at({L, L - i});
  }
  const double slack = weighted - cl.capacity;

  std::cout << "fixed-input deletion channel report\n"
            << "L = " << L << ", d = " << bdc::detail::format_sig(d_value, 12)
            << ", tol = " << bdc::detail::format_sig(tol, 6) << "\n\n";
  for (const auto& r : rows) {
    std::cout << "f(" << r.L << "," << r.R
              << ") = " << bdc::detail::format_sig(r.f, 12)
              << "   iterations=" << r.iterations
              << " gap=" << bdc::detail::format_sig(r.gap_bound, 6) << '\n';
  }
  std::cout << "\nC_" << L << " = " << bdc::detail::format_sig(cl.capacity, 12)
            << "   " << (cl.converged ? "converged" : "NOT converged")
            << " iterations=" << cl.iterations
            << " gap=" << bdc::detail::format_sig(cl.gap_bound, 6) << '\n'
            << "T_" << L << " = " << bdc::detail::format_sig(t, 12) << '\n'
            << "weighted-f minus C_" << L << " = "
            << bdc::detail::format_sig(slack, 6) << " (must be >= -1e-9)\n";

  if (!f_table_path.empty()) {
    std::ofstream file(f_table_path, std::ios::binary);
    if (!file) {
      std::cerr << "fibdc: cannot open '" << f_table_path << "'\n";
      return kExitIo;
    }
    bdc::write_f_table_csv(file, rows);
  }
  return slack >= -1e-9 ? kExitOk : kExitVerifyFail;
}

int run_simulate(double gamma, double d_value, int n, int trials,
                 std::uint64_t seed) {
  const bdc::markov::MarkovParams params(gamma);
  const bdc::DeletionProb d(d_value);
  const double analytic = bdc::markov::output_q(params, d);
  const auto est = bdc::markov::estimate_q(params, d, n, trials, seed);
  double z = 0.0;
  if (est.std_err > 0.0) {
    z = (est.estimate - analytic) / est.std_err;
  } else if (est.estimate != analytic) {
    z = std::numeric_limits<double>::infinity();
  }
  std::cout << "gamma      = " << bdc::detail::format_sig(gamma, 12) << '\n'
            << "d          = " << bdc::detail::format_sig(d_value, 12) << '\n'
            << "n          = " << n << '\n'
            << "trials     = " << trials << '\n'
            << "q_analytic = " << bdc::detail::format_sig(analytic, 12) << '\n'
            << "q_estimate = " << bdc::detail::format_sig(est.estimate, 12) << '\n'
            << "std_err    = " << bdc::detail::format_sig(est.std_err, 6) << '\n'
            << "z_score    = " << bdc::detail::format_sig(z, 6) << '\n';
  return std::abs(z) <= 4.0 ? kExitOk : kExitVerifyFail;
}

int run_matrix(int L, int R, bool have_R, double d_value, bool have_d,
               const std::string& out, int cap) {
  std::ofstream file(out, std::ios::binary);
  if (!file) {
    std::cerr << "matrix: cannot open '" << out << "' for writing\n";
    return kExitIo;
  }
  if (have_R) {
    bdc::write_matrix_csv(file, bdc::build_fifo_matrix(L, R, cap));
  } else {
    if (!have_d) {
      std::cerr << "matrix: --d is required without --R\n";
      return kExitUsage;
    }
    bdc::write_matrix_csv(file, bdc::build_fi_matrix(L, bdc::DeletionProb(d_value), cap));
  }
  return file.good() ? kExitOk : kExitIo;
}

int run_verify(int L_max, double tol, std::uint64_t seed) {
  bdc::verify::VerifyOptions opt;
  opt.L_max = L_max;
  opt.tol = tol;
  opt.seed = seed;
  const auto results = bdc::verify::run_all_checks(opt);
  int passed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    std::printf("%2zu/%zu %s %-32s %s\n", i + 1, results.size(),
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    if (r.pass) ++passed;
  }
  std::printf("verify: %d/%zu checks passed (L_max=%d)\n", passed,
              results.size(), L_max);
  if (passed != static_cast<int>(results.size())) {
    for (const auto& r : results) {
      if (!r.pass) std::printf("verify: FAILED %s\n", r.name.c_str());
    }
    return kExitVerifyFail;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capacity bounds for the binary deletion channel"};
  app.require_subcommand(1);
  // key=value config file; sections name the subcommand, flags take precedence
  app.set_config("--config");
  int jobs = 0;

  auto* bounds = app.add_subcommand("bounds", "evaluate bound curves over a d grid");
  bounds->fallthrough();
  BoundsConfig bc;
  bounds->add_option("--bounds", bc.selected,
                     "comma-separated ids: c1,c2,c3,c4,theorem2,tl,lemma2,"
                     "erasure,rahmati_duman,one_minus_h,dg_lower,dm_lower")
      ->required()
      ->delimiter(',');
  bounds->add_option("--d-min", bc.d_min);
  bounds->add_option("--d-max", bc.d_max);
  bounds->add_option("--d-step", bc.d_step);
  bounds->add_option("--gamma", bc.gamma);
  bounds->add_option("--L-max", bc.L_max)->check(CLI::Range(1, 12));
  bounds->add_option("--steps", bc.steps)->check(CLI::Range(0, 64));
  bounds->add_option("--tol", bc.tol);
  bounds->add_option("--seed", bc.seed);
  bounds->add_option("--out", bc.out)->required();
  bounds->add_option("--jobs", jobs);

  auto* fibdc = app.add_subcommand("fibdc", "f-values, capacity and weighted bound at one (L, d)");
  fibdc->fallthrough();
  int fb_L = 2;
  double fb_d = 0.5, fb_tol = 1e-9;
  int fb_cap = bdc::kDefaultFiCap;
  std::string fb_ftable;
  fibdc->add_option("--L", fb_L)->required();
  fibdc->add_option("--d", fb_d);
  fibdc->add_option("--tol", fb_tol);
  fibdc->add_option("--cap", fb_cap);
  fibdc->add_option("--f-table", fb_ftable, "also write the f-value CSV here");
  fibdc->add_option("--jobs", jobs);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo check of the output stay probability");
  simulate->fallthrough();
  double sim_gamma = 0.7, sim_d = 0.4;
  int sim_n = 100000, sim_trials = 20;
  std::uint64_t sim_seed = 1;
  simulate->add_option("--gamma", sim_gamma)->required();
  simulate->add_option("--d", sim_d)->required();
  simulate->add_option("--n", sim_n);
  simulate->add_option("--trials", sim_trials);
  simulate->add_option("--seed", sim_seed);
  simulate->add_option("--jobs", jobs);

  auto* matrix = app.add_subcommand("matrix", "export a transition matrix as CSV");
  matrix->fallthrough();
  int mx_L = 2, mx_R = 0;
  double mx_d = 0.5;
  int mx_cap = bdc::kDefaultFiCap;
  std::string mx_out;
  matrix->add_option("--L", mx_L)->required();
  auto* mx_R_opt = matrix->add_option("--R", mx_R, "fixed output length (omit for the full matrix)");
  auto* mx_d_opt = matrix->add_option("--d", mx_d);
  matrix->add_option("--cap", mx_cap);
  matrix->add_option("--out", mx_out)->required();
  matrix->add_option("--jobs", jobs);

  auto* verify = app.add_subcommand("verify", "run the full invariant suite");
  verify->fallthrough();
  int vf_L_max = 6;
  double vf_tol = 1e-9;
  std::uint64_t vf_seed = 20240901;
  verify->add_option("--L-max", vf_L_max)->check(CLI::Range(2, 10));
  verify->add_option("--tol", vf_tol);
  verify->add_option("--seed", vf_seed);
  verify->add_option("--jobs", jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  bdc::set_threads(jobs);
  try {
    if (bounds->parsed()) return run_bounds(bc);
    if (fibdc->parsed()) return run_fibdc(fb_L, fb_d, fb_tol, fb_cap, fb_ftable);
    if (simulate->parsed()) {
      return run_simulate(sim_gamma, sim_d, sim_n, sim_trials, sim_seed);
    }
    if (matrix->parsed()) {
      return run_matrix(mx_L, mx_R, mx_R_opt->count() > 0, mx_d,
                        mx_d_opt->count() > 0, mx_out, mx_cap);
    }
    if (verify->parsed()) return run_verify(vf_L_max, vf_tol, vf_seed);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFail;
  }
  return kExitUsage;
}
