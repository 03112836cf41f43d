#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "skew/monomial.hpp"

namespace skew::cli {

enum class Task { interpolate, verify, independence, eval, derive, vandermonde, minimal_poly };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitNotLeftCapable = 4;
inline constexpr int kExitInternal = 5;

std::optional<Task> task_from_name(std::string_view name);
const char* task_name(Task t);

struct Options {
  // Overrides the task and side named in the file.
  std::optional<Task> task;
  std::optional<Side> side;
  // Replaces problem.polynomial, so that printed interpolants can be checked
  // without editing the file.
  std::optional<std::string> polynomial;
  bool json = false;
  std::uint64_t seed = 0x5eed;
};

struct Outcome {
  int exit_code = kExitOk;
  std::string out;  // report for stdout
  std::string err;  // diagnostics for stderr
};

Outcome run_text(const std::string& text, const Options& opt);
Outcome run_file(const std::string& path, const Options& opt);

}  // namespace skew::cli
