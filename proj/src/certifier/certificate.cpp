#include "ratiocert/certifier/certificate.hpp"

#include <json.hpp>

#include "ratiocert/errors.hpp"

namespace ratiocert {

using nlohmann::ordered_json;

bool Certificate::all_checks_pass() const {
  if (identity_checks.empty()) return false;
  for (const auto& c : identity_checks)
    if (!c.pass) return false;
  return true;
}

void Certificate::finalize() { status = error.empty() && all_checks_pass() ? "certified" : "failed"; }

std::string certificate_to_json(const Certificate& c) {
  ordered_json j;
  j["tool_version"] = c.tool_version;
  j["family"] = c.family;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : c.parameters) params[k] = v;
  j["parameters"] = params;
  j["status"] = c.status;
  j["error"] = c.error;
  j["error_message"] = c.error_message;
  if (c.spectrum) {
    ordered_json pairs = ordered_json::array();
    for (auto [l, m] : c.spectrum->pairs) pairs.push_back({l, m});
    j["spectrum"] = {{"pairs", pairs}, {"least", c.spectrum->least}};
  } else {
    j["spectrum"] = nullptr;
  }
  if (c.ratio) {
    j["ratio"] = {{"v", c.ratio->v},
                  {"valency", c.ratio->valency},
                  {"least_eigenvalue", c.ratio->least_eigenvalue},
                  {"bound", c.ratio->bound.to_string()},
                  {"tight", c.ratio->tight}};
  } else {
    j["ratio"] = nullptr;
  }
  j["method"] = c.method;
  j["seed_strategy"] = c.seed_strategy;
  j["enumeration"] = {{"seeds", c.enumeration.seeds},
                      {"max_rank_C", c.enumeration.max_rank_C},
                      {"candidates_tested", c.enumeration.candidates_tested},
                      {"zero_one_candidates", c.enumeration.zero_one_candidates},
                      {"valid_hits", c.enumeration.valid_hits}};
  j["max_independent_sets"] = c.max_independent_sets;
  ordered_json checks = ordered_json::array();
  for (const auto& ic : c.identity_checks) checks.push_back({{"name", ic.name}, {"pass", ic.pass}, {"detail", ic.detail}});
  j["identity_checks"] = checks;
  ordered_json timings = ordered_json::object();
  for (const auto& [k, v] : c.timings) timings[k] = v;
  j["timings"] = timings;
  j["notes"] = c.notes;
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  try {
    const auto j = ordered_json::parse(text);
    Certificate c;
    c.tool_version = j.at("tool_version").get<std::string>();
    c.family = j.at("family").get<std::string>();
    for (const auto& [k, v] : j.at("parameters").items()) c.parameters.emplace_back(k, v.get<std::string>());
    c.status = j.at("status").get<std::string>();
    c.error = j.at("error").get<std::string>();
    c.error_message = j.at("error_message").get<std::string>();
    if (!j.at("spectrum").is_null()) {
      SpectrumReport s;
      for (const auto& p : j["spectrum"].at("pairs")) s.pairs.emplace_back(p.at(0).get<std::int64_t>(), p.at(1).get<std::size_t>());
      s.least = j["spectrum"].at("least").get<std::int64_t>();
      c.spectrum = std::move(s);
    }
    if (!j.at("ratio").is_null()) {
      const auto& r = j["ratio"];
      RatioBoundCertificate rb;
      rb.v = r.at("v").get<std::size_t>();
      rb.valency = r.at("valency").get<std::int64_t>();
      rb.least_eigenvalue = r.at("least_eigenvalue").get<std::int64_t>();
      rb.bound = Rational::parse(r.at("bound").get<std::string>());
      rb.tight = r.at("tight").get<bool>();
      c.ratio = rb;
    }
    c.method = j.at("method").get<std::string>();
    c.seed_strategy = j.at("seed_strategy").get<std::string>();
    const auto& e = j.at("enumeration");
    c.enumeration.seeds = e.at("seeds").get<std::size_t>();
    c.enumeration.max_rank_C = e.at("max_rank_C").get<std::size_t>();
    c.enumeration.candidates_tested = e.at("candidates_tested").get<std::uint64_t>();
    c.enumeration.zero_one_candidates = e.at("zero_one_candidates").get<std::uint64_t>();
    c.enumeration.valid_hits = e.at("valid_hits").get<std::uint64_t>();
    c.max_independent_sets = j.at("max_independent_sets").get<std::vector<std::vector<std::string>>>();
    for (const auto& ic : j.at("identity_checks"))
      c.identity_checks.push_back({ic.at("name").get<std::string>(), ic.at("pass").get<bool>(), ic.at("detail").get<std::string>()});
    for (const auto& [k, v] : j.at("timings").items()) c.timings.emplace_back(k, v.get<double>());
    c.notes = j.at("notes").get<std::vector<std::string>>();
    return c;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::kParse, std::string("certificate JSON: ") + ex.what());
  }
}

}  // namespace ratiocert
