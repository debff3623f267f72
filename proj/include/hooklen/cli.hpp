#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hooklen/identity.hpp"
#include "hooklen/labeling.hpp"

namespace hooklen::cli {

enum class OutputFormat { tsv, json };

struct RunConfig {
  std::size_t brute_cap = kDefaultBruteCap;
  std::size_t labeling_cap = kDefaultLabelingCap;
  std::size_t fiber_cap = kDefaultFiberCap;
  OutputFormat output_format = OutputFormat::tsv;
  std::uint64_t seed = 0;
};

// Stable across subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name), writing records to `out`
/// and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hooklen::cli
