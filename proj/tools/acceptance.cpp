// Runs the acceptance criteria and prints one line per criterion.
#include <cstdio>
#include <vector>

#include "CLI11.hpp"
#include "necip/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> ids;
  app.add_option("--criterion", ids, "Only these criteria")
      ->check(CLI::Range(1, necip::acceptance::kCriterionCount));
  CLI11_PARSE(app, argc, argv);
  if (ids.empty())
    for (int id = 1; id <= necip::acceptance::kCriterionCount; ++id) ids.push_back(id);

  int failed = 0;
  for (int id : ids) {
    const auto r = necip::acceptance::run_criterion(id);
    std::printf("%s\n", necip::acceptance::format(r).c_str());
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(ids.size()) - failed, ids.size());
  return failed == 0 ? 0 : 1;
}
