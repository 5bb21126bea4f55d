#include "qsuper/report.hpp"

#include <json.hpp>

namespace qsuper {

namespace {

nlohmann::json report_json(const Report& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["datum"] = {{"n", r.n}, {"parity", r.parity}};
  j["mode"] = r.mode;
  j["cases_total"] = r.cases_total;
  j["cases_failed"] = r.cases_failed;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures)
    j["failures"].push_back({{"lhs", f.lhs}, {"rhs", f.rhs}, {"value", f.value}});
  return j;
}

}  // namespace

std::string Report::to_json() const { return report_json(*this).dump(); }

std::string Report::summary() const {
  return suite + " n=" + std::to_string(n) + " parity=" + parity + " mode=" + mode +
         ": " + std::to_string(cases_total - cases_failed) + "/" +
         std::to_string(cases_total) + " cases ok";
}

std::string reports_to_json(const std::vector<Report>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

}  // namespace qsuper
