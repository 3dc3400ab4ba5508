#include "rpgauss/simulation.hpp"

#include <cmath>
#include <exception>
#include <string>

#include "rpgauss/errors.hpp"
#include "rpgauss/fdr.hpp"
#include "rpgauss/rp_test.hpp"
#include "rpgauss/special.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rpgauss {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Substream ids inside one replication.
constexpr std::uint64_t kProcessStream = 0;
constexpr std::uint64_t kTestStream = 1;

}  // namespace

std::size_t process_length(const ProcessSpec& spec) {
  return std::visit([](const auto& s) { return s.n; }, spec);
}

std::string process_label(const ProcessSpec& spec) {
  return std::visit(Overloaded{
                        [](const ArSpec& s) { return std::string(family_name(s.innovation)); },
                        [](const WstarSpec& s) { return "wstar:p=" + std::to_string(s.p); },
                    },
                    spec);
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Series simulate_ar1(const ArSpec& spec, RngStream& rng) {
  if (!(std::fabs(spec.q) < 1.0)) throw DomainError("simulate_ar1: |q| must be below 1");
  if (spec.n == 0) throw DomainError("simulate_ar1: n must be positive");
  const std::size_t total = spec.past + spec.n;
  std::vector<double> out;
  out.reserve(spec.n);
  double x = 0.0;
  for (std::size_t t = 0; t < total; ++t) {
    const double e = sample_innovation(spec.innovation, rng);
    x = (t == 0) ? e : spec.q * x + e;
    if (t >= spec.past) out.push_back(x);
  }
  return Series(std::move(out));
}

WstarPath simulate_wstar_path(const WstarSpec& spec, RngStream& rng) {
  if (!is_prime(spec.p)) throw DomainError("simulate_wstar: p must be prime");
  if (spec.n == 0) throw DomainError("simulate_wstar: n must be positive");
  const unsigned p = spec.p;

  WstarPath path;
  path.y0 = static_cast<unsigned>(rng.uniform_int(p));
  path.shift = static_cast<unsigned>(rng.uniform_int(p));

  // Z_0 .. Z_{n-1+U}, built block by block.
  const std::size_t z_len = spec.n + path.shift;
  std::vector<unsigned> z(z_len);
  for (std::size_t block = 0; block * p < z_len; ++block) {
    const auto head = static_cast<unsigned>(rng.uniform_int(p));
    for (unsigned k = 0; k < p && block * p + k < z_len; ++k)
      z[block * p + k] = static_cast<unsigned>((head + static_cast<unsigned long long>(k) * path.y0) % p);
  }

  path.w.assign(z.begin() + path.shift, z.end());
  std::vector<double> values(spec.n);
  const double pd = static_cast<double>(p);
  for (std::size_t t = 0; t < spec.n; ++t)
    values[t] = normal_quantile((static_cast<double>(path.w[t]) + rng.uniform()) / pd);
  path.values = Series(std::move(values));
  return path;
}

Series simulate_wstar(const WstarSpec& spec, RngStream& rng) {
  return simulate_wstar_path(spec, rng).values;
}

Series simulate(const ProcessSpec& spec, RngStream& rng) {
  return std::visit(Overloaded{
                        [&](const ArSpec& s) { return simulate_ar1(s, rng); },
                        [&](const WstarSpec& s) { return simulate_wstar(s, rng); },
                    },
                    spec);
}

std::string test_label(const TestSpec& t) {
  switch (t.kind) {
    case TestKind::E: return "E";
    case TestKind::G: return "G";
    case TestKind::GE: return "GE";
    case TestKind::RP: return "RP";
    case TestKind::RPmulti: return "RPmulti:" + std::to_string(t.projections);
  }
  return "?";
}

std::optional<TestSpec> parse_test(std::string_view text) {
  TestSpec t;
  if (text == "E") {
    t.kind = TestKind::E;
  } else if (text == "G") {
    t.kind = TestKind::G;
  } else if (text == "GE") {
    t.kind = TestKind::GE;
  } else if (text == "RP") {
    t.kind = TestKind::RP;
  } else if (text.starts_with("RPmulti:")) {
    const std::string count(text.substr(8));
    if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    const unsigned long v = std::stoul(count);
    if (v < 2 || v % 2 != 0) return std::nullopt;
    t.kind = TestKind::RPmulti;
    t.projections = v;
  } else {
    return std::nullopt;
  }
  return t;
}

double run_test_p_value(const Series& x, const TestSpec& test, const RngStream& rng) {
  switch (test.kind) {
    case TestKind::E: {
      RngStream sub = rng.substream(0);
      return epps_test(x, test.epps_mode, sub).p_value;
    }
    case TestKind::G: return lv_test(x, test.lv).p_value;
    case TestKind::GE: {
      RngStream sub = rng.substream(0);
      const double ps[] = {epps_test(x, LambdaMode::Random, sub).p_value, lv_test(x, test.lv).p_value};
      return combined_p(ps);
    }
    case TestKind::RP: {
      RpConfig cfg;
      cfg.lv = test.lv;
      return rp_test(x, cfg, rng).combined_p;
    }
    case TestKind::RPmulti: {
      RpConfig cfg = rp_multi_config(test.projections / 2);
      cfg.lv = test.lv;
      return rp_test(x, cfg, rng).combined_p;
    }
  }
  return 1.0;
}

int run_replication(const RateRequest& req, std::size_t i) {
  const RngStream rep = RngStream(req.seed, req.stream).substream(i);
  try {
    RngStream proc = rep.substream(kProcessStream);
    const Series x = simulate(req.process, proc);
    const double p = run_test_p_value(x, req.test, rep.substream(kTestStream));
    return p <= req.alpha ? 1 : 0;
  } catch (const DegenerateSeriesError&) {
    return -1;
  } catch (const NumericalFailure&) {
    return -1;
  }
}

namespace {

void validate(const RateRequest& req) {
  if (req.reps == 0) throw DomainError("rejection_rate: reps must be positive");
  if (!(req.alpha > 0.0 && req.alpha <= 1.0)) throw DomainError("rejection_rate: alpha must lie in (0, 1]");
}

RateResult summarize(const RateRequest& req, const std::vector<int>& outcomes) {
  RateResult r;
  r.reps = req.reps;
  for (int o : outcomes) {
    if (o < 0) ++r.errors;
    else r.rejections += static_cast<std::size_t>(o);
  }
  if (static_cast<double>(r.errors) > 0.01 * static_cast<double>(req.reps))
    throw NumericalFailure("rejection_rate: " + std::to_string(r.errors) + " of " +
                           std::to_string(req.reps) + " replications failed");
  const std::size_t used = req.reps - r.errors;
  if (used == 0) throw NumericalFailure("rejection_rate: every replication failed");
  r.rate = static_cast<double>(r.rejections) / static_cast<double>(used);
  r.se = std::sqrt(r.rate * (1.0 - r.rate) / static_cast<double>(used));
  return r;
}

}  // namespace

RateResult rejection_rate_serial(const RateRequest& req) {
  validate(req);
  std::vector<int> outcomes(req.reps);
  for (std::size_t i = 0; i < req.reps; ++i) outcomes[i] = run_replication(req, i);
  return summarize(req, outcomes);
}

RateResult rejection_rate(const RateRequest& req) {
  validate(req);
  std::vector<int> outcomes(req.reps);
  std::exception_ptr failure;
  const auto reps = static_cast<long long>(req.reps);

#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < reps; ++i) {
    try {
      outcomes[static_cast<std::size_t>(i)] = run_replication(req, static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(rpgauss_rate_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(req, outcomes);
}

}  // namespace rpgauss
