#include "qwitt/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "qwitt/expr.hpp"

namespace qwitt {

using Json = nlohmann::ordered_json;

namespace {

Json laurent_json(const LaurentPoly& f) {
  Json arr = Json::array();
  for (const auto& [e, c] : f.terms()) arr.push_back(Json::array({e, c.to_string()}));
  return arr;
}

Json reduced_json(const ReducedForm& r) {
  Json arr = Json::array();
  for (const auto& c : r) arr.push_back(c.to_string());
  return arr;
}

Json canonical_json(const CanonicalForm& cf) {
  return Json{{"alphas", reduced_json(cf.alphas)}, {"inner_witness", laurent_json(cf.inner_witness)}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string reduced_text(const ReducedForm& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + r[i].to_string() + ")*d_" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Json context_json(const TwistContext& ctx) {
  return Json{{"s", ctx.s()}, {"qmode", ctx.qmode().to_string()}};
}

}  // namespace

std::string laurent_to_json(const LaurentPoly& f) { return laurent_json(f).dump(); }

QRational parse_coefficient(std::string_view text) {
  const LaurentPoly f = parse_laurent(text);
  if (!f.is_constant()) throw Error("coefficient depends on t: '" + std::string(text) + "'");
  return f.coeff(0);
}

LaurentPoly laurent_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array()) throw Error("Laurent JSON must be an array");
  LaurentPoly f;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string())
      throw Error("Laurent JSON term must be [exponent, coefficient]");
    f.add_term(term[0].get<int>(), parse_coefficient(term[1].get<std::string>()));
  }
  return f;
}

std::string render_report(const RunConfig& cfg, const Report& report, Format format) {
  switch (format) {
    case Format::json: {
      Json suites = Json::array();
      for (const auto& s : cfg.suites.empty() ? suite_names() : cfg.suites) suites.push_back(s);
      Json claims = Json::array();
      for (const auto& c : report.claims)
        claims.push_back(Json{{"id", c.id}, {"status", std::string(to_string(c.status))}, {"evidence", c.evidence}});
      return dump(Json{{"s", cfg.s},
                       {"qmode", cfg.qmode.to_string()},
                       {"window", cfg.window.to_string()},
                       {"seed", cfg.seed},
                       {"suites", suites},
                       {"claims", claims}});
    }
    case Format::csv: {
      std::string out = "id,status,evidence\n";
      for (const auto& c : report.claims)
        out += csv_field(c.id) + "," + std::string(to_string(c.status)) + "," + csv_field(c.evidence) + "\n";
      return out;
    }
    case Format::plain: break;
  }
  std::ostringstream out;
  out << "s=" << cfg.s << " q=" << cfg.qmode.to_string() << " window=" << cfg.window.to_string()
      << " seed=" << cfg.seed << "\n";
  for (const auto& c : report.claims) out << to_string(c.status) << "  " << c.id << ": " << c.evidence << "\n";
  out << report.count(ClaimStatus::verified) << " verified, " << report.count(ClaimStatus::refuted) << " refuted, "
      << report.count(ClaimStatus::skipped) << " skipped, " << report.count(ClaimStatus::deviation)
      << " deviation\n";
  return out.str();
}

std::string render_delta(const TwistContext& ctx, Format format) {
  const std::string g = ctx.image_gcd().to_string();
  const std::string lambda = ctx.gcd_coefficient().to_string();
  const std::string T = ctx.grading_monomial().to_string();
  const std::string delta = ctx.twist_factor().to_string();
  switch (format) {
    case Format::json: {
      Json j = context_json(ctx);
      j["g"] = laurent_json(ctx.image_gcd());
      j["d"] = ctx.free_rank();
      j["lambda"] = lambda;
      j["T"] = laurent_json(ctx.grading_monomial());
      j["delta"] = laurent_json(ctx.twist_factor());
      return dump(j);
    }
    case Format::csv:
      return "s,qmode,g,d,lambda,T,delta\n" + std::to_string(ctx.s()) + "," + csv_field(ctx.qmode().to_string()) +
             "," + csv_field(g) + "," + std::to_string(ctx.free_rank()) + "," + csv_field(lambda) + "," +
             csv_field(T) + "," + csv_field(delta) + "\n";
    case Format::plain: break;
  }
  return "g = " + g + "\nd = " + std::to_string(ctx.free_rank()) + "\nlambda = " + lambda + "\nT = " + T +
         "\ndelta = " + delta + "\n";
}

std::string render_bracket(const TwistPtr& ctx, int n, int m, Format format) {
  const SigmaDerivation br = der_bracket(basis_d(ctx, n), basis_d(ctx, m));
  const bool has_free = ctx->free_rank() > 0;
  const ReducedForm reduced = has_free ? reduce_mod_inner(br) : ReducedForm{};
  switch (format) {
    case Format::json: {
      Json j = context_json(*ctx);
      j["n"] = n;
      j["m"] = m;
      j["coefficient"] = laurent_json(br.coeff);
      j["reduced"] = has_free ? reduced_json(reduced) : Json(nullptr);
      return dump(j);
    }
    case Format::csv: {
      std::string out = "n,m,coefficient";
      for (std::size_t i = 0; i < reduced.size(); ++i) out += ",d" + std::to_string(i);
      out += "\n" + std::to_string(n) + "," + std::to_string(m) + "," + csv_field(br.coeff.to_string());
      for (const auto& c : reduced) out += "," + csv_field(c.to_string());
      return out + "\n";
    }
    case Format::plain: break;
  }
  std::string out = "[d_" + std::to_string(n) + ", d_" + std::to_string(m) + "] = (" + br.coeff.to_string() +
                    ")*Delta\n";
  if (has_free) out += "mod Inn: " + reduced_text(reduced) + "\n";
  return out;
}

std::string render_reduce(const SigmaDerivation& D, Format format) {
  const CanonicalForm cf = canonical_form(D);
  switch (format) {
    case Format::json: {
      Json j = context_json(*D.ctx);
      j["coefficient"] = laurent_json(D.coeff);
      j["canonical"] = canonical_json(cf);
      return dump(j);
    }
    case Format::csv: {
      std::string out;
      for (std::size_t i = 0; i < cf.alphas.size(); ++i) out += "alpha" + std::to_string(i) + ",";
      out += "inner_witness\n";
      for (const auto& a : cf.alphas) out += csv_field(a.to_string()) + ",";
      return out + csv_field(cf.inner_witness.to_string()) + "\n";
    }
    case Format::plain: break;
  }
  std::string out;
  for (std::size_t i = 0; i < cf.alphas.size(); ++i)
    out += "alpha_" + std::to_string(i) + " = " + cf.alphas[i].to_string() + "\n";
  return out + "h = " + cf.inner_witness.to_string() + "\n";
}

std::string render_table(const TwistPtr& ctx, Window window, bool mod_inner, Format format) {
  const int d = ctx->free_rank();
  if (mod_inner && d == 0) throw Error("no free part");
  Json rows = Json::array();
  std::string text;
  if (format == Format::csv) {
    text = "n,m";
    if (mod_inner) {
      for (int i = 0; i < d; ++i) text += ",d" + std::to_string(i);
    } else {
      text += ",coefficient";
    }
    text += "\n";
  }
  for (int n = window.lo; n <= window.hi; ++n)
    for (int m = window.lo; m <= window.hi; ++m) {
      const SigmaDerivation br = der_bracket(basis_d(ctx, n), basis_d(ctx, m));
      if (format == Format::json) {
        Json row{{"n", n}, {"m", m}};
        if (mod_inner) {
          const CanonicalForm cf = canonical_form(br);
          row["reduced"] = reduced_json(reduce_mod_inner(br));
          row["canonical"] = canonical_json(cf);
        } else {
          row["coefficient"] = laurent_json(br.coeff);
        }
        rows.push_back(std::move(row));
        continue;
      }
      std::string line = std::to_string(n) + (format == Format::csv ? "," : " ") + std::to_string(m);
      if (mod_inner) {
        const ReducedForm r = reduce_mod_inner(br);
        if (format == Format::csv) {
          for (const auto& c : r) line += "," + csv_field(c.to_string());
        } else {
          line += "  " + reduced_text(r);
        }
      } else {
        line += format == Format::csv ? "," + csv_field(br.coeff.to_string()) : "  " + br.coeff.to_string();
      }
      text += line + "\n";
    }
  if (format != Format::json) return text;
  Json j = context_json(*ctx);
  j["window"] = window.to_string();
  j["mod_inner"] = mod_inner;
  j["rows"] = std::move(rows);
  return dump(j);
}

ParsedReport parse_report_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  try {
    ParsedReport out;
    out.s = j.at("s").get<int>();
    out.qmode = j.at("qmode").get<std::string>();
    for (const auto& c : j.at("claims")) {
      const std::string status = c.at("status").get<std::string>();
      ClaimStatus st;
      if (status == "verified") st = ClaimStatus::verified;
      else if (status == "refuted") st = ClaimStatus::refuted;
      else if (status == "skipped") st = ClaimStatus::skipped;
      else if (status == "deviation") st = ClaimStatus::deviation;
      else throw Error("unknown claim status '" + status + "'");
      out.report.add(c.at("id").get<std::string>(), st, c.at("evidence").get<std::string>());
    }
    return out;
  } catch (const Json::exception& e) {
    throw Error(std::string("report JSON schema mismatch: ") + e.what());
  }
}

}  // namespace qwitt
