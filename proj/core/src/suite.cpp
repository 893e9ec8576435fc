#include "qwitt/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "qwitt/canonical.hpp"
#include "qwitt/derivation.hpp"
#include "qwitt/ore.hpp"
#include "qwitt/random.hpp"
#include "qwitt/ssets.hpp"

namespace qwitt {

Format parse_format(std::string_view text) {
  if (text == "plain") return Format::plain;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw Error("unknown format '" + std::string(text) + "'");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"skew",    "jacobi",  "three-way", "operator", "inner",
                                                 "decomp",  "grading", "mod-inner", "ssets",    "ore"};
  return names;
}

namespace {

// Counts checks of one claim and remembers the first failure.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++total_;
    if (!ok && !failure_) failure_ = describe();
  }
  bool ok() const { return !failure_; }

  Claim claim(std::string id, const std::string& what) const {
    if (failure_) return {std::move(id), ClaimStatus::refuted, *failure_};
    return {std::move(id), ClaimStatus::verified, std::to_string(total_) + " checks: " + what};
  }

 private:
  std::size_t total_ = 0;
  std::optional<std::string> failure_;
};

std::string pair_text(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

std::string coeff_text(const LaurentPoly& c) { return "(" + c.to_string() + ")*Delta"; }

// --- structure constants --------------------------------------------------

Report suite_skew(const TwistPtr& ctx, Window w, std::uint64_t seed) {
  Report rep;
  Tally basis;
  for (int n = w.lo; n <= w.hi; ++n)
    for (int m = w.lo; m <= w.hi; ++m)
      basis.expect(check_skew(basis_d(ctx, n), basis_d(ctx, m)), [&] { return "d" + pair_text(n, m); });
  rep.claims.push_back(basis.claim("skew.basis", "[d_n,d_m] = -[d_m,d_n] over " + w.to_string()));

  SampleSource src(seed, ctx->q());
  Tally random;
  for (int i = 0; i < 50; ++i) {
    const SigmaDerivation a{ctx, src.laurent(w)};
    const SigmaDerivation b{ctx, src.laurent(w)};
    random.expect(check_skew(a, b), [&] { return "a = " + a.coeff.to_string() + ", b = " + b.coeff.to_string(); });
  }
  rep.claims.push_back(random.claim("skew.random", "seeded random pairs"));
  return rep;
}

Report suite_jacobi(const TwistPtr& ctx, Window w, std::uint64_t) {
  Report rep;
  Tally t;
  for (int i = w.lo; i <= w.hi; ++i)
    for (int j = w.lo; j <= w.hi; ++j)
      for (int k = w.lo; k <= w.hi; ++k) {
        const LaurentPoly sum =
            twisted_jacobi_sum(ctx, LaurentPoly::t_power(i), LaurentPoly::t_power(j), LaurentPoly::t_power(k));
        t.expect(sum.is_zero(), [&] {
          return "(t^" + std::to_string(i) + ", t^" + std::to_string(j) + ", t^" + std::to_string(k) +
                 ") leaves " + coeff_text(sum);
        });
      }
  rep.claims.push_back(t.claim("jacobi.monomial_triples", "six-term twisted Jacobi over " + w.to_string()));
  return rep;
}

Report suite_three_way(const TwistPtr& ctx, Window w, std::uint64_t) {
  Report rep;
  Tally four, closed;
  const bool closed_applies = ctx->s() >= 1;
  for (int n = w.lo; n <= w.hi; ++n)
    for (int m = w.lo; m <= w.hi; ++m) {
      const SigmaDerivation direct = der_bracket(basis_d(ctx, n), basis_d(ctx, m));
      const SigmaDerivation cases = bracket_four_case(ctx, n, m);
      four.expect(direct == cases, [&] {
        return pair_text(n, m) + ": direct " + coeff_text(direct.coeff) + " vs four-case " + coeff_text(cases.coeff);
      });
      if (closed_applies) {
        const SigmaDerivation cf = bracket_closed_form(ctx, n, m);
        closed.expect(direct == cf, [&] {
          return pair_text(n, m) + ": direct " + coeff_text(direct.coeff) + " vs closed form " + coeff_text(cf.coeff);
        });
      }
    }
  rep.claims.push_back(four.claim("three-way.four_case", "direct bracket equals four-case sums"));
  if (closed_applies) {
    rep.claims.push_back(closed.claim("three-way.closed_form", "direct bracket equals ({n}_T - {m}_T) d_{n+m}"));
  } else {
    // Report mode: the T-integer form is only stated for s >= 1.
    std::size_t agree = 0, total = 0;
    for (int n = w.lo; n <= w.hi; ++n)
      for (int m = w.lo; m <= w.hi; ++m) {
        const LaurentPoly factor = ctx->t_integer(n) - ctx->t_integer(m);
        const LaurentPoly stated = factor * LaurentPoly::monomial(QRational(-1), n + m);
        ++total;
        if (der_bracket(basis_d(ctx, n), basis_d(ctx, m)).coeff == stated) ++agree;
      }
    rep.add("three-way.closed_form", ClaimStatus::deviation,
            "T-integer form applies for s >= 1 only; at s=" + std::to_string(ctx->s()) + " it matches " +
                std::to_string(agree) + "/" + std::to_string(total) + " pairs (direct bracket carries an extra factor -T)");
  }
  return rep;
}

// --- generator identities ---------------------------------------------------

Report suite_operator(const TwistPtr& ctx, Window w, std::uint64_t seed) {
  const TwistContext& tc = *ctx;
  Report rep;

  Tally op;
  for (int n = w.lo; n <= w.hi; ++n) {
    const LaurentPoly f = LaurentPoly::t_power(n);
    const LaurentPoly lhs = tc.generator(tc.sigma(f));
    const LaurentPoly rhs = tc.twist_factor() * tc.sigma(tc.generator(f));
    op.expect(lhs == rhs, [&] { return "t^" + std::to_string(n) + ": " + lhs.to_string() + " vs " + rhs.to_string(); });
  }
  rep.claims.push_back(op.claim("operator.twist_factor", "Delta(sigma(f)) = delta*sigma(Delta(f)) on monomials"));

  SampleSource src(seed, ctx->q());
  Tally leibniz, symmetry;
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly f = src.laurent(w);
    const LaurentPoly h = src.laurent(w);
    const LaurentPoly lhs = tc.generator(f * h);
    const LaurentPoly rhs = tc.sigma(f) * tc.generator(h) + tc.generator(f) * h;
    leibniz.expect(lhs == rhs, [&] { return "f = " + f.to_string() + ", h = " + h.to_string(); });
    const LaurentPoly s1 = (f - tc.sigma(f)) * tc.generator(h);
    const LaurentPoly s2 = (h - tc.sigma(h)) * tc.generator(f);
    symmetry.expect(s1 == s2, [&] { return "f = " + f.to_string() + ", h = " + h.to_string(); });
  }
  rep.claims.push_back(leibniz.claim("operator.leibniz", "Delta(fh) = sigma(f)Delta(h) + Delta(f)h"));
  rep.claims.push_back(symmetry.claim("operator.symmetry", "(f - sigma f)Delta(h) = (h - sigma h)Delta(f)"));

  Tally tint;
  for (int n = w.lo; n <= w.hi; ++n) {
    const LaurentPoly tn = tc.t_integer(n);
    const LaurentPoly Tpow = LaurentPoly::monomial(tc.q().pow(n), n * (tc.s() - 1));
    tint.expect(tc.t_integer(n + 1) == tn + Tpow, [&] { return "{n+1} recurrence at n=" + std::to_string(n); });
    tint.expect((tc.grading_monomial() - LaurentPoly(1)) * tn == Tpow - LaurentPoly(1),
                [&] { return "(T-1){n} = T^n - 1 at n=" + std::to_string(n); });
  }
  rep.claims.push_back(tint.claim("operator.t_integers", "T-integer recurrences"));

  // delta = {s}_T for s >= 1 and {s}_{T^-1} = (T^-s - 1)/(T^-1 - 1) for s < 1.
  LaurentPoly closed;
  if (tc.s() >= 1) {
    closed = tc.t_integer(tc.s());
  } else {
    const LaurentPoly inv = LaurentPoly::monomial(tc.q().inverse(), 1 - tc.s());
    const LaurentPoly inv_s = LaurentPoly::monomial(tc.q().pow(-tc.s()), -tc.s() * (tc.s() - 1));
    closed = lp_exact_div(inv_s - LaurentPoly(1), inv - LaurentPoly(1));
  }
  rep.add("operator.delta_closed_form", closed == tc.twist_factor() ? ClaimStatus::verified : ClaimStatus::refuted,
          "delta = " + tc.twist_factor().to_string() + ", T-integer form " + closed.to_string());

  if (tc.free_rank() > 0) {
    std::vector<LaurentPoly> images;
    for (int n = w.lo; n <= w.hi; ++n) {
      const LaurentPoly f = LaurentPoly::t_power(n);
      images.push_back(f - tc.sigma(f));
    }
    const LaurentPoly g = lp_gcd(images);
    rep.add("operator.gcd_window", g == tc.image_gcd() ? ClaimStatus::verified : ClaimStatus::refuted,
            "gcd of (id - sigma)(t^n) over " + w.to_string() + " = " + g.to_string());
  } else {
    rep.add("operator.gcd_window", tc.image_gcd().is_constant() ? ClaimStatus::verified : ClaimStatus::refuted,
            "s = 1: g = " + tc.image_gcd().to_string() + " is a unit");
  }
  return rep;
}

Report suite_inner(const TwistPtr& ctx, Window w, std::uint64_t seed) {
  const TwistContext& tc = *ctx;
  Report rep;
  SampleSource src(seed, ctx->q());
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly p = src.laurent(w);
    const LaurentPoly r = src.laurent(w);
    const auto witness = der_is_inner(der_bracket(der_inner_from(ctx, p), der_inner_from(ctx, r)));
    const LaurentPoly direct = inner_bracket_witness(tc, p, r);
    const LaurentPoly factored = inner_bracket_witness_factored(tc, p, r);
    t.expect(witness && *witness == direct && direct == factored,
             [&] { return "p = " + p.to_string() + ", r = " + r.to_string(); });
  }
  rep.claims.push_back(t.claim("inner.closure_witness", "[Delta_p, Delta_r] = c(id - sigma) with both witness forms"));
  return rep;
}

// --- decomposition and grading ---------------------------------------------

Report suite_decomp(const TwistPtr& ctx, Window w, std::uint64_t seed) {
  const TwistContext& tc = *ctx;
  Report rep;
  SampleSource src(seed, ctx->q());
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const SigmaDerivation D{ctx, src.laurent(w, 4)};
    const CanonicalForm fast = canonical_form(D);
    const CanonicalForm slow = canonical_form_by_division(D);
    t.expect(fast == slow && reassemble(tc, fast) == D.coeff,
             [&] { return "coefficient " + D.coeff.to_string(); });
  }
  const CanonicalForm zero = canonical_form(SigmaDerivation{ctx, LaurentPoly()});
  t.expect(zero.inner_witness.is_zero() &&
               std::all_of(zero.alphas.begin(), zero.alphas.end(), [](const QRational& a) { return a.is_zero(); }),
           [] { return std::string("zero derivation has a nonzero decomposition"); });
  rep.claims.push_back(t.claim("decomp.round_trip", "both decomposition routes agree and reassemble"));

  // Inn = (1 - T) D: inner iff (1 - T) divides the coefficient.
  Tally inn;
  const LaurentPoly one_minus_T = LaurentPoly(1) - tc.grading_monomial();
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly c = i % 2 == 0 ? src.laurent(w) : src.laurent(w) * tc.image_gcd();
    const SigmaDerivation D{ctx, c};
    inn.expect(der_is_inner(D).has_value() == divides(one_minus_T, c),
               [&] { return "coefficient " + c.to_string(); });
  }
  rep.claims.push_back(inn.claim("decomp.inner_is_one_minus_T", "inner iff (1 - T) divides"));
  return rep;
}

Report suite_grading(const TwistPtr& ctx, Window w, std::uint64_t seed) {
  const TwistContext& tc = *ctx;
  Report rep;
  const int d = tc.free_rank();
  if (d == 0) {
    Tally t;
    for (int n = w.lo; n <= w.hi; ++n)
      for (int m = w.lo; m <= w.hi; ++m) {
        const LaurentPoly c = der_bracket(basis_d(ctx, n), basis_d(ctx, m)).coeff;
        t.expect(c.is_zero() || (c.is_monomial() && c.valuation() == n + m), [&] { return pair_text(n, m); });
      }
    rep.claims.push_back(t.claim("grading.homogeneous", "s = 1: Z-grading by t-exponent"));
    return rep;
  }
  SampleSource src(seed, ctx->q());
  Tally split_ok, closure;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int i = 0; i < 20; ++i) {
        const SigmaDerivation Da{ctx, src.homogeneous(w, d, a)};
        const SigmaDerivation Db{ctx, src.homogeneous(w, d, b)};
        for (const auto* D : {&Da, &Db}) {
          const GradedSplit sp = graded_split(*D);
          split_ok.expect(reassemble(tc, sp) == D->coeff && sp.components.size() == 1,
                          [&] { return "coefficient " + D->coeff.to_string(); });
        }
        const SigmaDerivation br = der_bracket(Da, Db);
        const GradedSplit sp = graded_split(br);
        const int want = (a + b) % d;
        closure.expect(reassemble(tc, sp) == br.coeff &&
                           (sp.components.empty() || (sp.components.size() == 1 && sp.components.begin()->first == want)),
                       [&] { return "residues " + pair_text(a, b) + ": bracket " + coeff_text(br.coeff); });
      }
  rep.claims.push_back(split_ok.claim("grading.split", "graded split reassembles"));
  rep.claims.push_back(closure.claim("grading.closure", "bracket of homogeneous elements lies in the sum residue"));
  return rep;
}

// --- congruences modulo inner derivations -----------------------------------

enum class Match { exact, sign_flipped, mismatch };

ReducedForm scaled(int d, const QRational& c, int index) {
  ReducedForm r(static_cast<std::size_t>(d), QRational());
  r[static_cast<std::size_t>(index)] = c;
  return r;
}

Match compare(const ReducedForm& oracle, const ReducedForm& stated) {
  if (oracle == stated) return Match::exact;
  ReducedForm neg = stated;
  for (auto& x : neg) x = -x;
  return oracle == neg ? Match::sign_flipped : Match::mismatch;
}

std::string reduced_text(const ReducedForm& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + r[i].to_string() + ")*d_" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// One family of congruence checks. In assert mode every pair must match the
// stated formula exactly; in report mode sign flips are collected as
// deviations and only magnitude/index mismatches refute.
class CongruenceFamily {
 public:
  CongruenceFamily(std::string id, bool report_mode) : id_(std::move(id)), report_mode_(report_mode) {}

  void check(const std::string& where, const ReducedForm& oracle, const ReducedForm& stated) {
    ++total_;
    const Match m = compare(oracle, stated);
    if (m == Match::exact) return;
    if (m == Match::sign_flipped && report_mode_) {
      flips_.push_back(where);
      return;
    }
    if (!failure_)
      failure_ = where + ": computed " + reduced_text(oracle) + ", stated " + reduced_text(stated);
  }

  void add_to(Report& rep, const std::string& what) const {
    if (failure_) {
      rep.add(id_, ClaimStatus::refuted, *failure_);
    } else if (!flips_.empty()) {
      std::string list;
      for (const auto& f : flips_) list += (list.empty() ? "" : " ") + f;
      rep.add(id_, ClaimStatus::deviation,
              std::to_string(flips_.size()) + "/" + std::to_string(total_) + " sign deviations from " + what +
                  " at " + list);
    } else {
      rep.add(id_, ClaimStatus::verified, std::to_string(total_) + " checks: " + what);
    }
  }

 private:
  std::string id_;
  bool report_mode_;
  std::size_t total_ = 0;
  std::vector<std::string> flips_;
  std::optional<std::string> failure_;
};

Report suite_mod_inner(const TwistPtr& ctx, Window w, std::uint64_t) {
  const TwistContext& tc = *ctx;
  Report rep;
  const int s = tc.s();
  const int d = tc.free_rank();
  if (d == 0) {
    rep.add("mod-inner", ClaimStatus::skipped, "s = 1 has no free part");
    return rep;
  }
  const bool report_mode = s < 1;
  const QRational& q = tc.q();

  // [d_n, d_m] == (n - m) d_{n+m} for n >= 0.
  CongruenceFamily lemma1("mod-inner.lemma_bracket", report_mode);
  for (int n = std::max(0, w.lo); n <= w.hi; ++n)
    for (int m = w.lo; m <= w.hi; ++m) {
      const ScaledBasis b = reduce_basis(tc, n + m);
      lemma1.check(pair_text(n, m), mod_inner_bracket(ctx, n, m), scaled(d, QRational(n - m) * b.factor, b.index));
    }
  lemma1.add_to(rep, "[d_n,d_m] == (n-m) d_{n+m}");

  // d_m == q^-1 d_{m-d} (s >= 1), q d_{m-d} (s < 1).
  Tally lemma2;
  const QRational shift = s >= 1 ? q.inverse() : q;
  for (int m = w.lo; m <= w.hi; ++m) {
    const SigmaDerivation lhs = basis_d(ctx, m);
    const SigmaDerivation rhs = LaurentPoly(shift) * basis_d(ctx, m - d);
    lemma2.expect(congruent_mod_inner(lhs, rhs), [&] { return "m = " + std::to_string(m); });
  }
  rep.claims.push_back(lemma2.claim("mod-inner.lemma_shift", "d_m == lambda^-1 d_{m-d}"));

  CongruenceFamily prop_low("mod-inner.prop_low", report_mode);
  CongruenceFamily prop_high("mod-inner.prop_high", report_mode);
  for (int n = 0; n < d; ++n)
    for (int m = n + 1; m < d; ++m) {
      const ReducedForm oracle = mod_inner_bracket(ctx, n, m);
      if (n + m < d) {
        prop_low.check(pair_text(n, m), oracle, scaled(d, QRational(n - m), n + m));
      } else {
        const QRational c = s >= 1 ? QRational(n - m) / q : q * QRational(n - m);
        prop_high.check(pair_text(n, m), oracle, scaled(d, c, n + m - d));
      }
    }
  prop_low.add_to(rep, "[d_n,d_m] == (n-m) d_{n+m} for n+m < d");
  prop_high.add_to(rep, s >= 1 ? "[d_n,d_m] == (n-m)/q d_{n+m-d}" : "[d_n,d_m] == q(n-m) d_{n+m-d}");

  if (d >= 2 || s >= 2) {
    const SigmaDerivation br = der_bracket(basis_d(ctx, 0), basis_d(ctx, 1));
    const SigmaDerivation want{ctx, -basis_d(ctx, 1).coeff};
    ClaimStatus st = br == want ? ClaimStatus::verified : (report_mode ? ClaimStatus::deviation : ClaimStatus::refuted);
    rep.add("mod-inner.exact_d0_d1", st, "[d_0,d_1] = " + coeff_text(br.coeff) + " (stated -d_1)");
  }

  // [d_n, g d_m] == +-d q^(-eps p) d_{n+m-pd}: magnitude, power and index are
  // asserted; the sign follows the computed reduction.
  const int eps = s > 1 ? 1 : -1;
  CongruenceFamily prop_g("mod-inner.prop_g", report_mode);
  std::size_t stated_flips = 0, total_g = 0;
  for (int n = 0; n < d; ++n)
    for (int m = w.lo; m <= w.hi; ++m) {
      const int p = floor_div(n + m, d);
      const QRational magnitude = QRational(d) * q.pow(-eps * p);
      const ReducedForm oracle = mod_inner_bracket_g(ctx, n, m);
      const ReducedForm stated = scaled(d, -magnitude, n + m - p * d);
      ++total_g;
      if (compare(oracle, stated) == Match::sign_flipped) ++stated_flips;
      if (report_mode) {
        prop_g.check(pair_text(n, m), oracle, stated);
      } else {
        prop_g.check(pair_text(n, m), oracle, scaled(d, magnitude, n + m - p * d));
      }
    }
  prop_g.add_to(rep, report_mode ? "[d_n, g d_m] == -d q^(-eps p) d_{n+m-pd}" : "[d_n, g d_m] == +d q^(-p) d_{n+m-pd}");
  if (!report_mode) {
    rep.add("mod-inner.prop_g_sign", stated_flips > 0 ? ClaimStatus::deviation : ClaimStatus::verified,
            "stated sign '-' differs from the computed sign at " + std::to_string(stated_flips) + "/" +
                std::to_string(total_g) + " pairs; computed sign is '+'");
  }
  return rep;
}

// --- S-sets and Ore extension ----------------------------------------------

Report suite_ssets(const TwistPtr& ctx, Window w, std::uint64_t) {
  Report rep = verify_theorem_ssets(ctx, w).report;
  const bool chain = check_inclusion_chain(ctx, w);
  rep.add("chain.inclusions", chain ? ClaimStatus::verified : ClaimStatus::refuted,
          "S^1 in Inn and [Inn, S^1] within the S^1 bound over " + w.to_string());
  return rep;
}

OrePoly random_ore(SampleSource& src, const SigmaDerivation& twist, Window w) {
  OrePoly::Coeffs coeffs;
  const int deg = src.uniform(0, 2);
  for (int k = 0; k <= deg; ++k) coeffs[k] = src.laurent(w, 2);
  return OrePoly(twist, std::move(coeffs));
}

Report suite_ore(const TwistPtr& ctx, Window w, std::uint64_t seed) {
  const TwistContext& tc = *ctx;
  Report rep;
  SampleSource src(seed, ctx->q());
  const Window small{std::max(w.lo, -2), std::min(w.hi, 2)};
  const Window cw = small.lo <= small.hi ? small : Window{0, 0};

  const std::vector<std::pair<std::string, SigmaDerivation>> twists = {
      {"Delta", SigmaDerivation{ctx, LaurentPoly(1)}},
      {"g*Delta", SigmaDerivation{ctx, tc.image_gcd()}},
      {"t*Delta", SigmaDerivation{ctx, LaurentPoly::t_power(1)}},
  };
  for (const auto& [name, twist] : twists) {
    Tally assoc, degree;
    for (int i = 0; i < 50; ++i) {
      const OrePoly u = random_ore(src, twist, cw);
      const OrePoly v = random_ore(src, twist, cw);
      const OrePoly x = random_ore(src, twist, cw);
      assoc.expect((u * v) * x == u * (v * x), [&] { return "u = " + u.to_string() + ", v = " + v.to_string(); });
      const OrePoly uv = u * v;
      // The top coefficient of uv is lc(u)*sigma^deg(u)(lc(v)); sigma is not
      // injective for s = 0, so it may vanish there.
      bool law = uv.is_zero();
      if (!u.is_zero() && !v.is_zero()) {
        LaurentPoly top = v.coeff(v.degree());
        for (int k = 0; k < u.degree(); ++k) top = tc.sigma(top);
        top = u.coeff(u.degree()) * top;
        law = top.is_zero() ? uv.degree() < u.degree() + v.degree()
                            : uv.degree() == u.degree() + v.degree() && uv.coeff(uv.degree()) == top;
      }
      degree.expect(law, [&] { return "u = " + u.to_string() + ", v = " + v.to_string(); });
    }
    rep.claims.push_back(assoc.claim("ore.associativity[" + name + "]", "(uv)x = u(vx) on seeded triples"));
    rep.claims.push_back(degree.claim("ore.degree_law[" + name + "]", "deg(uv) = deg u + deg v unless sigma kills the top coefficient"));
  }

  Tally untwist;
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly p = i % 5 == 0 ? LaurentPoly::t_power(1) : src.laurent(cw, 2);
    const SigmaDerivation twist = der_inner_from(ctx, p);
    const OrePoly u = random_ore(src, twist, cw);
    const OrePoly v = random_ore(src, twist, cw);
    const OrePoly one = OrePoly::term(twist, LaurentPoly(1), 0);
    untwist.expect(ore_untwist(u * v) == ore_untwist(u) * ore_untwist(v) &&
                       ore_untwist(one) == OrePoly::term(ore_untwist(one).twist(), LaurentPoly(1), 0),
                   [&] { return "p = " + p.to_string() + ", u = " + u.to_string() + ", v = " + v.to_string(); });
  }
  rep.claims.push_back(untwist.claim("ore.untwist_multiplicative", "tau(uv) = tau(u)tau(v), tau(1) = 1"));
  return rep;
}

using SuiteFn = Report (*)(const TwistPtr&, Window, std::uint64_t);

const std::map<std::string, SuiteFn, std::less<>>& suite_table() {
  static const std::map<std::string, SuiteFn, std::less<>> table = {
      {"skew", suite_skew},       {"jacobi", suite_jacobi},   {"three-way", suite_three_way},
      {"operator", suite_operator}, {"inner", suite_inner},   {"decomp", suite_decomp},
      {"grading", suite_grading}, {"mod-inner", suite_mod_inner}, {"ssets", suite_ssets},
      {"ore", suite_ore},
  };
  return table;
}

}  // namespace

Report run_named_suite(const TwistPtr& ctx, std::string_view name, Window window, std::uint64_t seed) {
  const auto& table = suite_table();
  auto it = table.find(name);
  if (it == table.end()) throw Error("unknown suite '" + std::string(name) + "'");
  return it->second(ctx, window, seed);
}

Report run_suite(const RunConfig& cfg) {
  if (cfg.window.lo > cfg.window.hi) throw Error("empty window");
  for (const auto& name : cfg.suites)
    if (!suite_table().contains(name)) throw Error("unknown suite '" + name + "'");
  const TwistPtr ctx = TwistContext::create(cfg.s, cfg.qmode);
  const auto& names = cfg.suites.empty() ? suite_names() : cfg.suites;
  Report all;
  for (const auto& name : names) all.append(run_named_suite(ctx, name, cfg.window, cfg.seed));
  return all;
}

}  // namespace qwitt
