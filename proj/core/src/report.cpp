#include "qwitt/report.hpp"

#include <algorithm>
#include <charconv>

#include "qwitt/scalars.hpp"

namespace qwitt {

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error("invalid window '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Window Window::parse(std::string_view text) {
  const auto sep = text.find("..");
  if (sep == std::string_view::npos) throw Error("invalid window '" + std::string(text) + "', expected A..B");
  Window w{parse_int(text.substr(0, sep), text), parse_int(text.substr(sep + 2), text)};
  if (w.lo > w.hi) throw Error("empty window '" + std::string(text) + "'");
  return w;
}

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::verified: return "verified";
    case ClaimStatus::refuted: return "refuted";
    case ClaimStatus::skipped: return "skipped";
    case ClaimStatus::deviation: return "deviation";
  }
  return "?";
}

bool Report::any_refuted() const { return count(ClaimStatus::refuted) > 0; }

std::size_t Report::count(ClaimStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [s](const Claim& c) { return c.status == s; }));
}

}  // namespace qwitt
