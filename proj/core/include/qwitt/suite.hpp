#pragma once

// Verification suites: named batteries of exact identity checks over one
// twist context, a window of exponents and a seed.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qwitt/report.hpp"
#include "qwitt/twist.hpp"

namespace qwitt {

enum class Format { plain, json, csv };

Format parse_format(std::string_view text);

struct RunConfig {
  int s = 2;
  QMode qmode;
  Window window;
  std::uint64_t seed = 0;
  Format format = Format::plain;
  /// Empty means every suite.
  std::vector<std::string> suites;
};

/// skew, jacobi, three-way, operator, inner, decomp, grading, mod-inner, ssets, ore.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws Error for an unknown name.
Report run_named_suite(const TwistPtr& ctx, std::string_view name, Window window, std::uint64_t seed);

/// Builds the context (throws Error for an invalid configuration, e.g.
/// "sigma is identity") and runs the selected suites in the listed order.
Report run_suite(const RunConfig& cfg);

}  // namespace qwitt
