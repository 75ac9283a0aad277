// Command-line front end: verify-tables, family, det, search.
#pragma once

#include "hilbdim/hilbert_dim.hpp"

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hilbdim::cli {

/// Exit codes.
inline constexpr int kAllPass = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsageError = 2;

struct Context {
  /// Table fixtures checked by verify-tables; replaceable for fault injection.
  std::span<const TableRow> table_rows = builtin_table_rows();
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Context& ctx = {});

}  // namespace hilbdim::cli
