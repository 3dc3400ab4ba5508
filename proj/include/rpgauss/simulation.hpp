#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rpgauss/distributions.hpp"
#include "rpgauss/epps.hpp"
#include "rpgauss/lobato_velasco.hpp"
#include "rpgauss/rng.hpp"
#include "rpgauss/series.hpp"

namespace rpgauss {

// X_1 = e_1, X_t = q X_{t-1} + e_t; the first `past` values are discarded.
struct ArSpec {
  double q = 0.0;
  InnovationFamily innovation = InnovationFamily::StdNormal;
  std::size_t n = 100;
  std::size_t past = 1000;
};

// Pairwise-independent process with exact N(0,1) marginal over prime p.
struct WstarSpec {
  unsigned p = 5;
  std::size_t n = 1000;
};

using ProcessSpec = std::variant<ArSpec, WstarSpec>;

std::size_t process_length(const ProcessSpec& spec);
// Row label used in rate tables: "normal", ..., or "wstar:p=5".
std::string process_label(const ProcessSpec& spec);

bool is_prime(unsigned p);

Series simulate_ar1(const ArSpec& spec, RngStream& rng);

// Integer skeleton of a W* path, kept for structural checks.
struct WstarPath {
  unsigned y0 = 0;
  unsigned shift = 0;           // U
  std::vector<unsigned> w;      // W_0 .. W_{n-1}
  Series values;                // W*_0 .. W*_{n-1}
};

WstarPath simulate_wstar_path(const WstarSpec& spec, RngStream& rng);
Series simulate_wstar(const WstarSpec& spec, RngStream& rng);

Series simulate(const ProcessSpec& spec, RngStream& rng);

// E: Epps with fixed frequencies. G: modified Lobato-Velasco.
// GE: FDR combination of Epps (random frequencies) and G on the raw series.
// RP: default four-projection procedure. RPmulti: `projections` total
// projections (an even number) split as in rp_multi_config.
enum class TestKind { E, G, GE, RP, RPmulti };

struct TestSpec {
  TestKind kind = TestKind::RP;
  std::size_t projections = 4;  // RPmulti only
  LvConfig lv{};
  LambdaMode epps_mode = LambdaMode::Fixed;  // E only
};

std::string test_label(const TestSpec& t);
// Accepts "E", "G", "GE", "RP", "RPmulti:<even count>".
std::optional<TestSpec> parse_test(std::string_view text);

// p-value of the chosen test on x; randomness from substreams of rng.
double run_test_p_value(const Series& x, const TestSpec& test, const RngStream& rng);

struct RateResult {
  double rate = 0.0;
  double se = 0.0;
  std::size_t reps = 0;
  std::size_t rejections = 0;
  std::size_t errors = 0;
};

struct RateRequest {
  ProcessSpec process = ArSpec{};
  TestSpec test{};
  std::size_t reps = 500;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  // Stream namespace for this cell; replication i uses
  // RngStream(seed, stream).substream(i).
  std::uint64_t stream = 0;
};

// Replication outcome: 1 reject, 0 accept, -1 error.
int run_replication(const RateRequest& req, std::size_t i);

// Rejections over successful replications. Failed replications are dropped
// from the denominator while they stay at or below 1% of reps; above that the
// run throws NumericalFailure.
RateResult rejection_rate(const RateRequest& req);
// Single-threaded reference; bit-identical to rejection_rate.
RateResult rejection_rate_serial(const RateRequest& req);

}  // namespace rpgauss
