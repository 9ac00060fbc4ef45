#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace fugue {

struct LawOutcome {
  std::string name;
  bool ok = true;
  std::string detail; // counterexample rendering when !ok
};

struct LawsOptions {
  uint64_t seed = 0;
  int len = 5;        // bound for word-quantified laws
  int limit = 100000; // enumeration budget hint
  std::string corpusDir;
};

struct LawsReport {
  std::vector<LawOutcome> outcomes;
  bool all_ok() const {
    for (const auto& o : outcomes) {
      if (!o.ok) return false;
    }
    return true;
  }
};

/// Runs the whole property suite deterministically (fixed seed, fixed
/// iteration orders) and prints one line per law to out.
LawsReport run_laws(const LawsOptions& opts, std::ostream& out);

} // namespace fugue
