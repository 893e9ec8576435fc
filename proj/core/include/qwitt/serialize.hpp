#pragma once

// Deterministic text renderings for the command-line front-end. Scalars and
// Laurent polynomials always appear as canonical strings, never decimals.
// JSON keys are emitted in a fixed order so equal inputs give equal bytes.

#include <string>
#include <string_view>

#include "qwitt/canonical.hpp"
#include "qwitt/suite.hpp"

namespace qwitt {

/// {"s":..,"qmode":..,"window":..,"seed":..,"suites":[..],"claims":[{"id","status","evidence"}]}
/// or one "status id: evidence" line per claim (plain), or id,status,evidence (csv).
std::string render_report(const RunConfig& cfg, const Report& report, Format format);

/// g, d, lambda, T and delta of a context.
std::string render_delta(const TwistContext& ctx, Format format);

/// [d_n, d_m] with its reduction modulo inner derivations when d >= 1.
std::string render_bracket(const TwistPtr& ctx, int n, int m, Format format);

/// Canonical decomposition of coeff*Delta.
std::string render_reduce(const SigmaDerivation& D, Format format);

/// Bracket table over n, m in the window; with `mod_inner` each row is the
/// reduced form over d_0..d_{d-1}, otherwise the exact bracket coefficient.
std::string render_table(const TwistPtr& ctx, Window window, bool mod_inner, Format format);

/// Sorted array of [exponent, coefficient-string].
std::string laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(std::string_view text);

/// Parses a canonical coefficient string such as "(1 - q^2)/(q)".
QRational parse_coefficient(std::string_view text);

struct ParsedReport {
  int s = 0;
  std::string qmode;
  Report report;
};
/// Reads back the JSON form of render_report. Throws Error on schema mismatch.
ParsedReport parse_report_json(std::string_view text);

}  // namespace qwitt
