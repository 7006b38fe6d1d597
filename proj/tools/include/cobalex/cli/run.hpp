#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "cobalex/error.hpp"
#include "cobalex/invariants.hpp"

namespace cobalex::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kTransversality = 3,
  kNormalization = 4,
  kMismatch = 5,
};

int exit_code_for(ErrorKind kind);

/// Everything one invocation depends on; no hidden state, no clock.
struct JobSpec {
  std::string command;      // alex | casson | sw | betti | compose | verify
  std::string betti_kind;   // sym | moduli | casson-graded
  std::optional<nlohmann::json> input;
  Route route = Route::Both;
  std::optional<long> d;
  unsigned g = 1;
  unsigned k = 0;
  unsigned g_max = 3;
  unsigned samples = 200;
  std::uint64_t seed = 1;
  bool pretty = false;
};

struct JobResult {
  int exit_code = kOk;
  std::string output;  // stdout payload, newline-terminated
  std::string error;   // diagnostic for stderr, empty on success
};

JobResult run(const JobSpec& job);

Route parse_route(const std::string& s);

}  // namespace cobalex::cli
