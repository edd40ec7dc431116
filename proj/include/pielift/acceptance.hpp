#pragma once

// The eight acceptance criteria, run over a corpus directory.

#include <string>
#include <vector>

#include "pielift/cli.hpp"

namespace pielift::acceptance {

struct Criterion {
  int number = 0;
  std::string title;
  /// The claim held and the run stayed within its time limit.
  bool pass = false;
  /// The documented outcome; false only where the claim is known to fail.
  bool expected = true;
  bool within_limit = false;
  long long elapsed_ms = 0;
  long long limit_ms = 0;
  cli::Json detail;
};

/// Vertices with at most 2 objects and 4 arrows.
const std::vector<Cat>& test_vertices();

/// Every algebra on a test vertex.
std::vector<Algebra> source_algebras(const MonadInstance& t);

/// Runs criteria 1–8 in order. Throws dsl::ParseError or std::runtime_error
/// when the corpus cannot be loaded.
std::vector<Criterion> run_all(const std::string& corpus_dir);

/// Report body without timings, so that it is reproducible.
cli::Json to_json(const std::vector<Criterion>& cs);

}  // namespace pielift::acceptance
