// Runs the eight acceptance criteria and prints one line per criterion.
// Exit status is 0 when every outcome is the documented one; with --strict,
// any failing criterion makes it 1.

#include <CLI11.hpp>

#include <iostream>

#include "pielift/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pie-lifter acceptance suite"};
  std::string dir = PIELIFT_CORPUS_DIR;
  bool strict = false, verbose = false;
  app.add_option("--corpus", dir, "Corpus directory");
  app.add_flag("--strict", strict, "Fail on every failing criterion, documented or not");
  app.add_flag("-v,--verbose", verbose, "Print each criterion's detail");
  CLI11_PARSE(app, argc, argv);

  std::vector<pielift::acceptance::Criterion> cs;
  try {
    cs = pielift::acceptance::run_all(dir);
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 2;
  }

  bool all_pass = true, as_documented = true;
  for (const auto& c : cs) {
    std::cout << "criterion " << c.number << ": " << (c.pass ? "PASS" : "FAIL");
    if (c.pass != c.expected) std::cout << " (unexpected)";
    else if (!c.expected) std::cout << " (documented)";
    std::cout << "  " << c.title << "  [" << c.elapsed_ms << " ms, limit " << c.limit_ms
              << " ms" << (c.within_limit ? "" : ", EXCEEDED") << "]\n";
    if (verbose || !c.pass) std::cout << c.detail.dump(2) << "\n";
    all_pass = all_pass && c.pass;
    as_documented = as_documented && c.pass == c.expected;
  }
  std::cout << (all_pass ? "all criteria pass"
                         : as_documented ? "failures are the documented ones"
                                         : "unexpected outcome")
            << "\n";
  if (strict) return all_pass ? 0 : 1;
  return as_documented ? 0 : 1;
}
