#include "rpgauss/report_json.hpp"

namespace rpgauss {

using nlohmann::json;

json to_json(const ProjectionVector& h) {
  return json{{"alpha1", h.alpha1}, {"alpha2", h.alpha2}, {"m", h.m()}, {"h", h.h}};
}

json to_json(const EppsResult& r) {
  return json{{"statistic", r.statistic},
              {"df", r.df},
              {"p_value", r.p_value},
              {"mu_n", r.mu_n},
              {"gamma_n", r.gamma_n},
              {"lambda", r.lambda.values},
              {"mode", lambda_mode_name(r.lambda.mode)}};
}

json to_json(const LvResult& r) {
  return json{{"statistic", r.statistic},
              {"df", 2},
              {"p_value", r.p_value},
              {"f3_hat", r.f3_hat},
              {"f4_hat", r.f4_hat},
              {"tau", r.tau_used}};
}

json to_json(const RpReport& r) {
  json projections = json::array();
  for (const auto& p : r.projections) {
    json entry{{"alpha1", p.spec.alpha1},
               {"alpha2", p.spec.alpha2},
               {"test", marginal_test_name(p.spec.test)},
               {"stream_id", p.stream_id},
               {"stat", p.statistic},
               {"p", p.p_value},
               {"m", p.h.m()},
               {"h", p.h.h}};
    entry["detail"] = std::visit([](const auto& d) { return to_json(d); }, p.detail);
    projections.push_back(std::move(entry));
  }
  json out{{"projections", std::move(projections)},
           {"combined_p", r.combined_p},
           {"seed", r.master_seed},
           {"stream_id", r.stream_id}};
  if (r.reject_at) out["reject_at"] = *r.reject_at;
  return out;
}

}  // namespace rpgauss
