#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qwitt {

/// Inclusive integer range A..B.
struct Window {
  int lo = -8;
  int hi = 8;

  bool contains(int x) const { return lo <= x && x <= hi; }
  /// Parses "A..B"; throws Error when malformed or empty.
  static Window parse(std::string_view text);
  std::string to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

  friend bool operator==(const Window&, const Window&) = default;
};

/// `deviation` marks a report-mode check whose outcome differs from the
/// stated formula; it never fails a run.
enum class ClaimStatus { verified, refuted, skipped, deviation };

std::string_view to_string(ClaimStatus s);

struct Claim {
  std::string id;
  ClaimStatus status = ClaimStatus::verified;
  std::string evidence;
};

struct Report {
  std::vector<Claim> claims;

  void add(std::string id, ClaimStatus status, std::string evidence) {
    claims.push_back({std::move(id), status, std::move(evidence)});
  }
  void append(const Report& other) { claims.insert(claims.end(), other.claims.begin(), other.claims.end()); }
  bool any_refuted() const;
  std::size_t count(ClaimStatus s) const;
};

}  // namespace qwitt
