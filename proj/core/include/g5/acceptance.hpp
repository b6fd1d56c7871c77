#pragma once

#include <functional>
#include <string>
#include <vector>

namespace g5 {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  std::string line() const;
};

struct AcceptanceOptions {
  bool quick = false;     // smaller corpora, for smoke runs
  std::vector<int> only;  // empty runs all eleven
  std::function<void(const CriterionResult&)> on_result;
  std::function<void(const std::string&)> log;  // progress notes, may be empty
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

}  // namespace g5
