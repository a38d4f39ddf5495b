#ifndef POLYDC_TESTS_CLI_GOLDEN_CASES_HPP
#define POLYDC_TESTS_CLI_GOLDEN_CASES_HPP

#include <string>
#include <vector>

// Recorded CLI invocations. Each runs with --deterministic prepended; the
// expected standard output lives in golden/<file>.
namespace cli_golden {

struct GoldenCase {
  std::string file;
  std::vector<std::string> args;
  int code;
};

inline const std::vector<GoldenCase>& cases() {
  static const std::vector<GoldenCase> cases = {
      {"table_euler.json", {"table", "euler", "max_n=5"}, 0},
      {"table_poly_genocchi.json", {"table", "poly-genocchi", "k=2", "max_n=2"}, 0},
      {"table_genocchi.csv", {"--format", "csv", "table", "genocchi", "max_n=6"}, 0},
      {"table_stirling1.csv", {"--format", "csv", "table", "stirling1", "max_n=4"}, 0},
      {"eval_euler_poly.json", {"eval", "euler-poly", "n=1", "x=1/3"}, 0},
      {"eval_bar_euler.json", {"eval", "bar-euler", "n=1", "x=7/3"}, 0},
      {"eval_sawtooth.json", {"eval", "sawtooth", "x=5"}, 0},
      {"eval_bar_poly_euler.csv", {"--format", "csv", "eval", "bar-poly-euler", "k=2", "n=1", "x=-1/4"}, 0},
      {"dcsum_classical.json", {"dcsum", "p=1", "h=1", "m=3"}, 0},
      {"dcsum_poly.json", {"dcsum", "p=1", "h=1", "m=3", "k=2"}, 0},
      {"dcsum_empty.csv", {"--format", "csv", "dcsum", "p=4", "h=7", "m=1"}, 0},
      {"verify_thm14.json", {"verify", "thm14", "k=1", "p=3", "h=1", "m=3"}, 0},
      {"verify_eq4.json", {"verify", "eq4", "n=1", "l=0"}, 0},
      {"verify_thm14_failing.csv", {"--format", "csv", "verify", "thm14", "k=-2", "p=5", "h=3", "m=5"}, 1},
      {"sweep_cor15.json", {"sweep", "cor15", "p=1..2", "h=odd1..3", "m=odd1..3"}, 1},
      {"sweep_k1_collapse.csv", {"--format", "csv", "sweep", "k1_collapse", "p=1,2", "h=1..2", "m=odd1..3"}, 0},
  };
  return cases;
}

}  // namespace cli_golden

#endif  // POLYDC_TESTS_CLI_GOLDEN_CASES_HPP
