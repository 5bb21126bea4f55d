#pragma once

#include <string>
#include <vector>

#include "qsuper/supercore.hpp"

namespace qsuper {

struct Failure {
  std::string lhs;
  std::string rhs;
  std::string value;
};

/// Outcome of one verification suite run; serializes to the shared JSON
/// report schema {suite, datum, mode, cases_total, cases_failed, failures}.
struct Report {
  std::string suite;
  int n = 0;
  std::string parity;
  std::string mode;
  long cases_total = 0;
  long cases_failed = 0;
  std::vector<Failure> failures;

  bool passed() const { return cases_failed == 0; }

  void record(bool ok, const std::string& lhs, const std::string& rhs,
              const std::string& value) {
    ++cases_total;
    if (!ok) {
      ++cases_failed;
      if (failures.size() < 64) failures.push_back({lhs, rhs, value});
    }
  }

  void absorb(const Report& other) {
    cases_total += other.cases_total;
    cases_failed += other.cases_failed;
    for (const auto& f : other.failures)
      if (failures.size() < 64) failures.push_back(f);
  }

  std::string to_json() const;
  std::string summary() const;
};

std::string reports_to_json(const std::vector<Report>& reports);

}  // namespace qsuper
