#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sk1/relations.hpp"

namespace sk1::cli {

enum class Command { Abelian, Metacyclic, Conjecture, Rank, Basis };
enum class Format { Human, Tsv };
enum class Family { Abelian, Metacyclic };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitTooLarge = 4;

struct RunConfig {
  Command command = Command::Abelian;
  std::int64_t prime = 0;
  std::vector<std::int64_t> orders;
  std::optional<int> n;
  std::optional<Family> family;
  bool verify = false;
  Format format = Format::Human;
  PipelineOptions pipeline;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Parses arguments (program name excluded) and runs the command. Parse
/// errors become exit code 2 with the message on err; --help exits 0.
/// `threads_env` is the raw SK1_THREADS value, if set.
RunResult run_args(const std::vector<std::string>& args,
                   const std::optional<std::string>& threads_env = std::nullopt);

/// Validates and dispatches an already parsed config.
RunResult run(const RunConfig& config);

}  // namespace sk1::cli
