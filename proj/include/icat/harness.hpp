#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "icat/io.hpp"

namespace icat {

struct RunOptions {
  int max_size = 0;         // caps every bound; 0 keeps the defaults
  std::uint64_t seed = 1;   // drives randomized renumbering checks
  std::string out_dir;      // witness files are written here when set
  int workers = 0;          // 0 picks the hardware concurrency
};

/// Verdict plus the document printed for it.
struct Outcome {
  bool pass = true;
  Json doc;
};

/// Process exit status for an error: 2 bad input, 3 unsupported
/// construction, 1 for every other failed law or construction.
int exit_code(ErrorCode code);

/// `type` is one of check_types(); "auto" reads the document's "type".
/// Structural errors in the document become a FAIL verdict naming the
/// error; malformed JSON raises kBadInput.
Outcome run_check(const std::string& type, const Json& doc);
std::vector<std::string> check_types();

/// star | product-model | rg-from-h | precat-from-chain | semidirect.
Json run_build(const std::string& what, const Json& doc);
/// additive | group | magma.
Outcome run_classify(const std::string& what, const Json& doc);
/// a2-counterexample | peiffer-failure | joint-epic-failure; pass means
/// a witness was found. `kind` applies to a2-counterexample.
Outcome run_search(const std::string& what, const std::string& kind, const RunOptions& opts);

Json run_enumerate(const std::string& kind, int max_size);

/// Campaign manifest {"name", "checks": [{"id", "family", "params",
/// "expect"}]}, a registration manifest {"kind", "bounds", "models"}, or
/// {"name", "include": [campaign names]}.
Json load_campaign(const std::string& name);
Json run_campaign(const Json& manifest, const RunOptions& opts);
/// Runs one registered check family; `doc` is {"family", "params"}.
Outcome run_family(const Json& doc, const RunOptions& opts);
std::vector<std::string> campaign_names();
std::vector<std::string> family_names();

/// Directory holding data/campaigns; ICAT_DATA_DIR overrides the
/// compiled-in default.
std::string data_dir();

std::string render_report(const Json& report);

}  // namespace icat
