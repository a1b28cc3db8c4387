#pragma once

// Batch commands behind the lzeta executable. Each command returns its report
// as text; identical configurations give byte-identical output.

#include <cstdint>
#include <optional>
#include <string>

#include "lzeta/error.hpp"

namespace lzeta {

enum class OutputFormat { Json, Tsv, Dot };

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct RunConfig {
  std::string command;
  std::uint32_t p = 5;
  unsigned n = 1;
  std::optional<std::string> zeta;   // basic-even | basic-odd | <c>:<v>
  std::optional<std::string> point;  // see naming.hpp
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = kDefaultSeed;
};

struct RunOutput {
  std::string text;
  int exit_code = 0;
};

OutputFormat parse_format(const std::string& name);

// Throws lzeta::Error on bad input; a failed verify sets exit_code = 1.
RunOutput run(const RunConfig& config);

int exit_code(ErrorKind kind);

}  // namespace lzeta
