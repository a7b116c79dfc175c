// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <iostream>

#include "CLI11.hpp"

#include "tamesym/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"tamesym acceptance criteria"};
  tamesym::AcceptanceOptions opt;
  std::vector<int> only;
  app.add_flag("--quick", opt.quick, "smaller parameter ranges");
  app.add_option("--inject-fault", opt.inject_fault, "plant a known fault (cartan)");
  app.add_option("--only", only, "run just these criteria")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  tamesym::AcceptanceSuite suite(opt);
  if (only.empty())
    for (int i = 1; i <= 9; ++i) only.push_back(i);
  bool ok = true;
  for (int id : only) {
    const auto r = suite.run(id);
    std::cout << tamesym::format_result(r) << std::flush;
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
