// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <string>
#include <vector>

#include <unistd.h>

#include "oracles.hpp"
#include "rpgauss/distributions.hpp"
#include "rpgauss/epps.hpp"
#include "rpgauss/fdr.hpp"
#include "rpgauss/linalg.hpp"
#include "rpgauss/lobato_velasco.hpp"
#include "rpgauss/projection.hpp"
#include "rpgauss/simulation.hpp"

using namespace rpgauss;

namespace {

constexpr std::uint64_t kSeed = 20240607;

int failures = 0;

void report(bool ok, const std::string& id, const std::string& what) {
  std::printf("[%s] %s %s\n", ok ? "PASS" : "FAIL", id.c_str(), what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

RateResult rate(const ProcessSpec& process, const char* test, std::size_t reps) {
  RateRequest req;
  req.process = process;
  req.test = *parse_test(test);
  req.reps = reps;
  req.alpha = 0.05;
  req.seed = kSeed;
  req.stream = hash_key(process_label(process) + "|" + test + "|n=" + std::to_string(process_length(process)));
  return rejection_rate(req);
}

ArSpec ar(double q, InnovationFamily f, std::size_t n) { return ArSpec{q, f, n, 1000}; }

void criterion_in_range(const std::string& id, const std::string& label, const RateResult& r, double lo,
                        double hi) {
  report(r.rate >= lo && r.rate <= hi, id,
         fmt("%s: rate=%.4f (reps=%zu, errors=%zu) in [%.3f, %.3f]", label.c_str(), r.rate, r.reps, r.errors, lo,
             hi));
}

void criterion_at_least(const std::string& id, const std::string& label, const RateResult& r, double lo) {
  report(r.rate >= lo, id,
         fmt("%s: rate=%.4f (reps=%zu, errors=%zu) >= %.3f", label.c_str(), r.rate, r.reps, r.errors, lo));
}

void fdr_exactness() {
  RngStream rng(kSeed, 8);
  std::size_t mismatches = 0, inconsistent = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t k = 1 + rng.uniform_int(16);
    std::vector<double> p(k);
    for (auto& v : p) v = rng.uniform() < 0.3 ? std::pow(rng.uniform(), 6) : rng.uniform();
    const double got = combined_p(p);
    const double err = std::fabs(got - static_cast<double>(oracle::by_p0(p)));
    worst = std::max(worst, err);
    mismatches += err > 1e-12;
    for (double alpha : {0.01, 0.05, 0.1, rng.uniform()}) {
      if (!(alpha > 0.0 && alpha < 1.0)) continue;
      inconsistent += by_reject(p, alpha).reject != (got <= alpha);
    }
  }
  report(mismatches == 0 && inconsistent == 0, "C8",
         fmt("FDR combined_p vs oracle on 10000 vectors: max err=%.2e, mismatches=%zu, reject/combined "
             "inconsistencies=%zu",
             worst, mismatches, inconsistent));
}

void pseudo_inverse_oracle() {
  RngStream rng(kSeed, 91);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    // Rank 1..4 as a signed sum of outer products.
    const int rank = 1 + trial % 4;
    Matrix a(4, 4);
    for (int r = 0; r < rank; ++r) {
      double v[4];
      for (double& x : v) x = 2 * rng.uniform() - 1;
      const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) += sign * v[i] * v[j];
    }
    const Matrix p = pseudo_inverse(a);
    const Matrix ap = a * p, pa = p * a;
    worst = std::max({worst, (a * p * a - a).max_abs(), (p * a * p - p).max_abs() / std::max(1.0, p.max_abs()),
                      (ap.transpose() - ap).max_abs(), (pa.transpose() - pa).max_abs()});
  }
  report(worst <= 1e-8, "C9a", fmt("pseudo-inverse Penrose identities, 100 matrices: max residual=%.2e <= 1e-8", worst));
}

// Largest q_nm - q_grid over the window mean +- 3 sd by [variance / 4, 4 variance].
double grid_gap(const Series& y, const Lambda& lam) {
  const CfVector g_hat = empirical_cf_vector(y, lam);
  const Matrix g_plus = pseudo_inverse(2.0 * std::numbers::pi * spectral_density_at_zero(y, lam));
  const QMinimum m = minimize_q(g_hat, g_plus, lam, y.mean(), y.variance());
  const double sd = std::sqrt(y.variance());
  double grid = 1e300;
  for (int i = 0; i < 200; ++i)
    for (int j = 0; j < 200; ++j) {
      const double nu = y.mean() - 3 * sd + 6 * sd * i / 199.0;
      const double rho = y.variance() * (0.25 + 3.75 * j / 199.0);
      grid = std::min(grid, q_form(g_hat, gaussian_cf_vector(nu, rho, lam), g_plus));
    }
  return m.q_min - grid;
}

void minimize_q_oracle() {
  double worst = -1e300;
  for (std::uint64_t s = 0; s < 20; ++s) {
    RngStream rng(kSeed, 92 + 1000 * s);
    std::vector<double> v(100 + rng.uniform_int(901));
    for (auto& x : v) x = sample_normal(rng);
    const Series y(v);
    worst = std::max(worst, grid_gap(y, draw_lambda(y.variance(), LambdaMode::Fixed, rng)));
  }
  // Skewed data can put a lower, farther basin inside the grid window; the
  // minimizer keeps the one reached from the start. Reported, not judged.
  std::size_t farther = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    RngStream rng(kSeed, 95 + 1000 * s);
    std::vector<double> v(100 + rng.uniform_int(901));
    for (auto& x : v) x = sample_innovation(InnovationFamily::ChiSq1, rng);
    const Series y(v);
    farther += grid_gap(y, draw_lambda(y.variance(), LambdaMode::Fixed, rng)) > 1e-6;
  }
  report(worst <= 1e-6, "C9b",
         fmt("minimize_q vs 200x200 grid, 20 Gaussian series: max(q_nm - q_grid)=%.2e <= 1e-6 "
             "(info: chisq1 series with a lower farther basin: %zu/20)",
             worst, farther));
}

void spectral_oracle() {
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    RngStream rng(kSeed, 93 + 1000 * s);
    const std::size_t n = 8 + rng.uniform_int(57);
    std::vector<double> v(n);
    for (auto& x : v) x = sample_innovation(InnovationFamily::StudentT10, rng);
    const Lambda lam = draw_lambda(Series(v).variance(), LambdaMode::Random, rng);
    const Matrix f = spectral_density_at_zero(Series(v), lam);
    const auto o = oracle::spectral_matrix(v, lam.values);
    long double scale = 0.0L;
    for (const auto& row : o)
      for (long double x : row) scale = std::max(scale, std::fabs(x));
    for (std::size_t a = 0; a < o.size(); ++a)
      for (std::size_t b = 0; b < o.size(); ++b)
        worst = std::max(worst, static_cast<double>(std::fabs(f(a, b) - o[a][b]) / scale));
  }
  report(worst <= 1e-10, "C9c",
         fmt("spectral_density_at_zero vs brute force, 50 series n<=64: max rel err=%.2e <= 1e-10", worst));
}

void f_hat_oracle() {
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    RngStream rng(kSeed, 94 + 1000 * s);
    const std::size_t n = 8 + rng.uniform_int(300);
    std::vector<double> v(n);
    for (auto& x : v) x = sample_innovation(InnovationFamily::ChiSq1, rng);
    const std::size_t tau = 1 + rng.uniform_int(n - 1);
    for (int k : {3, 4}) {
      const long double want = oracle::f_hat(v, k, tau);
      const double err = static_cast<double>(std::fabs(f_hat_k(Series(v), k, tau) - want) /
                                             std::max(1.0L, std::fabs(want)));
      worst = std::max(worst, err);
    }
  }
  report(worst <= 1e-10, "C9d", fmt("f_hat_k vs brute force, 50 series: max rel err=%.2e <= 1e-10", worst));
}

void projection_construction() {
  double worst_norm = 0.0;
  for (auto [a1, a2] : {std::pair{100.0, 1.0}, std::pair{2.0, 7.0}}) {
    RngStream rng(kSeed, 100 + static_cast<std::uint64_t>(a2));
    for (int i = 0; i < 1000; ++i)
      worst_norm = std::max(worst_norm, std::fabs(draw_projection({a1, a2, 1e-15, 1000}, rng).weighted_norm_sq() - 1.0));
  }

  double worst_z = 0.0;
  const std::size_t runs = 100000;
  for (auto [a1, a2] : {std::pair{100.0, 1.0}, std::pair{2.0, 7.0}}) {
    RngStream rng(kSeed, 110 + static_cast<std::uint64_t>(a2));
    std::vector<double> sum(11, 0.0), sum2(11, 0.0);
    for (std::size_t r = 0; r < runs; ++r) {
      const auto sticks = stick_breaking({a1, a2, 1e-15, 1000}, rng);
      for (std::size_t k = 0; k <= 10; ++k) {
        const double l = k < sticks.size() ? sticks[k] : 0.0;
        sum[k] += l;
        sum2[k] += l * l;
      }
    }
    const double alpha = a1 / (a1 + a2);
    for (std::size_t k = 0; k <= 10; ++k) {
      const double mean = sum[k] / runs;
      const double se = std::sqrt(std::max(0.0, sum2[k] / runs - mean * mean) / runs);
      const double expected = alpha * std::pow(1.0 - alpha, static_cast<double>(k));
      const double diff = std::fabs(mean - expected);
      // Sticks past the truncation point carry less than delta in total.
      worst_z = std::max(worst_z, diff <= 1e-15 ? 0.0 : diff / se);
    }
  }
  report(worst_norm <= 1e-12 && worst_z <= 5.0, "C10",
         fmt("projection: max |norm - 1|=%.2e <= 1e-12; max |E[l_k] - a(1-a)^k| / SE=%.2f <= 5", worst_norm, worst_z));
}

void wstar_structure() {
  std::size_t blocks = 0, bad_blocks = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    RngStream rng(kSeed, 120 + 1000 * s);
    const unsigned p = (s % 3 == 0) ? 5u : (s % 3 == 1 ? 7u : 3u);
    const auto path = simulate_wstar_path({p, 200}, rng);
    if (path.y0 == 0) continue;
    // Complete Z blocks fully inside the observed window W_t = Z_{t+U}.
    for (std::size_t start = (p - path.shift) % p; start + p <= path.w.size(); start += p) {
      unsigned long long sum = 0;
      for (unsigned k = 0; k < p; ++k) sum += path.w[start + k];
      ++blocks;
      bad_blocks += sum != static_cast<unsigned long long>(p) * (p - 1) / 2;
    }
  }

  RngStream rng(kSeed, 121);
  const Series x = simulate_wstar({5, 10000}, rng);
  const std::vector<double> v(x.values().begin(), x.values().end());
  const double d = oracle::ks_distance(v, oracle::standard_normal_cdf);
  const double crit = oracle::ks_critical_1pct(v.size());
  report(blocks > 0 && bad_blocks == 0 && d < crit, "C11",
         fmt("W* block sums: %zu complete blocks, %zu violations; KS n=10000 D=%.4f < %.4f", blocks, bad_blocks, d,
             crit));
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(RPGAUSS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return out + "\n<exit " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1) + ">";
}

void cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("rpgauss_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path data = dir / "series.txt";
  {
    std::ofstream out(data);
    RngStream rng(kSeed, 130);
    out << "x\n";
    double prev = 0.0;
    for (int i = 0; i < 300; ++i) {
      prev = 0.5 * prev + sample_innovation(InnovationFamily::StudentT10, rng);
      out << fmt("%.17g", prev) << '\n';
    }
  }
  const std::vector<std::string> invocations = {
      "test --input " + data.string() + " --test RP --seed 11",
      "test --input " + data.string() + " --test RPmulti:8 --seed 11",
      "test --input " + data.string() + " --test GE --seed 5",
      "test --input " + data.string() + " --test E --epps-lambda random --seed 9",
      "simulate --n 100 --q 0,0.9 --dist normal,beta21 --test E,G,GE,RP --reps 20 --seed 3",
      "simulate --process wstar --p 5 --n 300 --test RP,RPmulti:8 --reps 10 --seed 3 --threads 2",
  };
  std::size_t differing = 0;
  for (const auto& args : invocations) differing += run_cli(args) != run_cli(args);
  fs::remove_all(dir);
  report(differing == 0, "C12",
         fmt("CLI determinism: %zu of %zu invocations differ between repeated runs", differing, invocations.size()));
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  criterion_in_range("C1", "G null, AR(1) q=0 normal n=1000",
                     rate(ar(0.0, InnovationFamily::StdNormal, 1000), "G", 500), 0.025, 0.085);
  criterion_in_range("C2", "E fixed-lambda null, AR(1) q=0 normal n=1000",
                     rate(ar(0.0, InnovationFamily::StdNormal, 1000), "E", 500), 0.02, 0.08);
  criterion_in_range("C3", "RP null, AR(1) q=0 normal n=100",
                     rate(ar(0.0, InnovationFamily::StdNormal, 100), "RP", 500), 0.04, 0.12);
  criterion_at_least("C4", "RP power, q=0 lognormal n=100",
                     rate(ar(0.0, InnovationFamily::StdLogNormal, 100), "RP", 200), 0.95);
  criterion_at_least("C5", "RP power, q=0.9 beta(2,1) n=100",
                     rate(ar(0.9, InnovationFamily::Beta2_1, 100), "RP", 200), 0.85);

  const RateResult rp_w = rate(WstarSpec{5, 1000}, "RP", 200);
  const RateResult e_w = rate(WstarSpec{5, 1000}, "E", 200);
  report(rp_w.rate >= 0.50 && e_w.rate <= 0.08, "C6",
         fmt("W* p=5 n=1000: RP rate=%.4f >= 0.50, E rate=%.4f <= 0.08 (reps=200)", rp_w.rate, e_w.rate));

  const RateResult multi = rate(WstarSpec{5, 1000}, "RPmulti:8", 200);
  report(multi.rate > rp_w.rate && multi.rate >= 0.70, "C7",
         fmt("W* p=5 n=1000: RPmulti:8 rate=%.4f > RP rate=%.4f and >= 0.70 (reps=200)", multi.rate, rp_w.rate));

  fdr_exactness();
  pseudo_inverse_oracle();
  minimize_q_oracle();
  spectral_oracle();
  f_hat_oracle();
  projection_construction();
  wstar_structure();
  cli_determinism();

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s: %d criterion line(s) failed, %.1f s\n", failures ? "FAILED" : "ALL PASSED", failures, secs);
  return failures ? 1 : 0;
}
