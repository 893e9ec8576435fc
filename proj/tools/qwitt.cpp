#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwitt/expr.hpp"
#include "qwitt/serialize.hpp"
#include "qwitt/suite.hpp"

namespace {

constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

struct Options {
  int s = 2;
  std::string q;
  std::string window = "-8..8";
  std::uint64_t seed = 0;
  std::string format = "plain";
  std::vector<std::string> suites;
  int n = 0;
  int m = 0;
  bool mod_inner = false;
  std::string expr;
};

qwitt::QMode qmode_of(const Options& o) {
  if (o.q.empty() || o.q == "formal") return qwitt::QMode::formal();
  return qwitt::QMode::specialized(qwitt::parse_rational(o.q));
}

// "--window -8..8" would otherwise be read as a short option, so values of
// flags that start with '-' are glued to their flag. The tool has no short
// options, so any other single-dash token is an expression such as "-t" and
// is moved behind "--".
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> args, expressions;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if ((a == "--window" || a == "--range" || a == "--s" || a == "--n" || a == "--m" || a == "--q") && i + 1 < argc &&
        argv[i + 1][0] == '-') {
      args.push_back(a + "=" + argv[++i]);
    } else if (a == "--") {
      for (++i; i < argc; ++i) expressions.emplace_back(argv[i]);
    } else if (a.size() > 1 && a[0] == '-' && a[1] != '-') {
      expressions.push_back(a);
    } else {
      args.push_back(a);
    }
  }
  if (!expressions.empty()) {
    args.emplace_back("--");
    args.insert(args.end(), expressions.begin(), expressions.end());
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with sigma-derivations of Q(q)[t, 1/t] under sigma(t) = q*t^s"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--s", o.s, "exponent s in sigma(t) = q*t^s");
  app.add_option("--q", o.q, "specialize q to a nonzero rational NUM/DEN (default: formal)");
  app.add_option("--window,--range", o.window, "exponent window A..B");
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_option("--format", o.format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));

  auto* delta = app.add_subcommand("delta", "print g, d, lambda, T and delta");
  auto* bracket = app.add_subcommand("bracket", "bracket of two basis derivations d_n, d_m");
  bracket->add_option("--n", o.n)->required();
  bracket->add_option("--m", o.m)->required();
  auto* reduce = app.add_subcommand("reduce", "decompose coeff*Delta modulo inner derivations");
  reduce->add_option("expr", o.expr, "Laurent coefficient, e.g. \"1 - q*t^2\"")->required();
  auto* table = app.add_subcommand("table", "bracket table over the window");
  table->add_flag("--mod-inner", o.mod_inner, "reduce each entry modulo inner derivations");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", o.suites, "suite name (repeatable; default all)");

  std::vector<std::string> args = normalize_args(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    const qwitt::Format format = qwitt::parse_format(o.format);
    const qwitt::QMode mode = qmode_of(o);
    if (*verify) {
      qwitt::RunConfig cfg;
      cfg.s = o.s;
      cfg.qmode = mode;
      cfg.window = qwitt::Window::parse(o.window);
      cfg.seed = o.seed;
      cfg.format = format;
      cfg.suites = o.suites;
      const qwitt::Report report = qwitt::run_suite(cfg);
      std::cout << qwitt::render_report(cfg, report, format);
      return report.any_refuted() ? kExitRefuted : 0;
    }
    const qwitt::TwistPtr ctx = qwitt::TwistContext::create(o.s, mode);
    if (*delta) {
      std::cout << qwitt::render_delta(*ctx, format);
    } else if (*bracket) {
      std::cout << qwitt::render_bracket(ctx, o.n, o.m, format);
    } else if (*reduce) {
      const qwitt::SigmaDerivation D{ctx, qwitt::parse_laurent(o.expr, ctx->q())};
      std::cout << qwitt::render_reduce(D, format);
    } else if (*table) {
      std::cout << qwitt::render_table(ctx, qwitt::Window::parse(o.window), o.mod_inner, format);
    }
    return 0;
  } catch (const qwitt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
