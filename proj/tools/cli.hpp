#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace heisenhom::cli {

enum ExitStatus : int {
  kOk = 0,
  kDisagree = 1,
  kUsage = 2,
  kResourceCap = 3,
  kIoError = 4,
};

enum class Method { Rank, Morse, Formula, All };
enum class Format { Table, Json, Csv };

struct RunConfig {
  std::size_t n = 1;
  std::uint32_t characteristic = 2;
  Method method = Method::All;
  Format format = Format::Table;
  std::optional<std::string> output;
  /// Largest algebra dimension handled by the rank route.
  std::size_t dim_cap = 29;
  /// Largest n for exhaustive cell scans (Morse paths, pi, d^2).
  std::size_t morse_cap = 6;
};

/// Parses `args` (without the program name), runs the chosen subcommand and
/// returns its exit status. Reads HEISENHOM_CAP from the environment when
/// no --cap flag is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heisenhom::cli
