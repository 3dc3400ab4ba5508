#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "rpgauss/epps.hpp"
#include "rpgauss/lobato_velasco.hpp"
#include "rpgauss/projection.hpp"
#include "rpgauss/rng.hpp"
#include "rpgauss/series.hpp"

namespace rpgauss {

enum class MarginalTest { Epps, LobatoVelasco };

std::string_view marginal_test_name(MarginalTest t);

struct ProjectionSpec {
  double alpha1;
  double alpha2;
  MarginalTest test;
};

struct RpConfig {
  std::vector<ProjectionSpec> projections = {
      {100.0, 1.0, MarginalTest::Epps},
      {100.0, 1.0, MarginalTest::LobatoVelasco},
      {2.0, 7.0, MarginalTest::Epps},
      {2.0, 7.0, MarginalTest::LobatoVelasco},
  };
  double delta = 1e-15;
  LambdaMode epps_mode = LambdaMode::Random;
  LvConfig lv{};
};

// 2 * k_pairs projections: the first half Beta(100, 1), the second half
// Beta(2, 7), each half alternating Epps and Lobato-Velasco.
RpConfig rp_multi_config(std::size_t k_pairs);

struct ProjectionRecord {
  ProjectionSpec spec;
  std::uint64_t stream_id = 0;
  ProjectionVector h;
  double statistic = 0.0;
  double p_value = 1.0;
  std::variant<EppsResult, LvResult> detail;
};

struct RpReport {
  std::vector<ProjectionRecord> projections;
  double combined_p = 1.0;
  std::optional<double> reject_at;
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  std::vector<double> p_values() const;
};

// Projection j draws its direction and any Epps frequencies from
// rng.substream(j); rng itself is not advanced. A projection whose projected
// series is degenerate aborts the whole test with DegenerateSeriesError.
RpReport rp_test(const Series& x, const RpConfig& cfg, const RngStream& rng);
RpReport rp_test_multi(const Series& x, std::size_t k_pairs, const RngStream& rng);

}  // namespace rpgauss
