#include "exotic/cli.hpp"

#include <algorithm>
#include <exception>
#include <ostream>

#include <CLI11.hpp>

#include "exotic/json_io.hpp"

namespace exotic::cli {

namespace {

constexpr long kGenerateKMaxCap = 4096;

int run_generate(long count, const std::string& format, std::ostream& out, std::ostream& err) {
  std::vector<ExoticTriple> triples;
  FamilyStats stats;
  long k_max = 1;
  for (;;) {
    triples = generate_family(k_max, &stats);
    if (static_cast<long>(triples.size()) >= count || k_max >= kGenerateKMaxCap) {
      break;
    }
    k_max *= 2;
  }
  if (static_cast<long>(triples.size()) < count) {
    err << "generate: only " << triples.size() << " distinct triples up to k_max " << k_max
        << '\n';
    return 1;
  }
  triples.resize(static_cast<std::size_t>(count));
  err << "generate: k_max " << k_max << ", points " << stats.points_evaluated
      << ", degenerate " << stats.degenerate << ", torsion coincidences "
      << stats.torsion_coincidences << ", cross-coset collisions "
      << stats.cross_coset_collisions << '\n';
  if (format == "csv") {
    write_triples_csv(out, triples);
  } else {
    write_triples_json(out, triples);
  }
  return 0;
}

int run_verify(const std::string& a_text, const std::string& b_text, const std::string& c_text,
               std::ostream& out, std::ostream& err) {
  auto a = try_parse_rat(a_text);
  auto b = try_parse_rat(b_text);
  auto c = try_parse_rat(c_text);
  if (!a || !b || !c) {
    err << "verify: malformed rational argument\n";
    return 2;
  }
  VerifyResult result = verify_exotic(*a, *b, *c);
  write_verify_json(out, *a, *b, *c, result);
  return result.ok() ? 0 : 1;
}

int run_search_int(long c_max, int threads, std::ostream& out, std::ostream& err) {
  SearchOutcome outcome = search_integer_exotic(c_max, threads);
  write_search_stats(err, outcome.stats);
  write_search_outcome_json(out, outcome);
  if (!outcome.exotic_found.empty()) {
    err << "search-int: found " << outcome.exotic_found.size()
        << " integer exotic triples; this contradicts a theorem and almost certainly "
           "signals an implementation bug\n";
    return 1;
  }
  return 0;
}

int run_search_rat(long h_max, int threads, const std::string& format, std::ostream& out,
                   std::ostream& err) {
  std::vector<ExoticTriple> triples = search_rational_exotic(h_max, threads);
  long quadruple_regular = 0;
  for (const ExoticTriple& t : triples) {
    if (regularity_report(t.a, t.b, t.c).quadruple_regular) {
      ++quadruple_regular;
    }
  }
  err << "search-rat: " << triples.size() << " exotic triples, " << quadruple_regular
      << " with {1,a,b,c} regular, " << (static_cast<long>(triples.size()) - quadruple_regular)
      << " without\n";
  if (format == "csv") {
    write_triples_csv(out, triples);
  } else {
    write_triples_json(out, triples);
  }
  return 0;
}

int run_case1(long h_max, std::ostream& out, std::ostream& err) {
  std::vector<Case1Hit> hits = case1_scan(h_max);
  write_case1_json(out, hits);
  const long bad = static_cast<long>(
      std::count_if(hits.begin(), hits.end(), [](const Case1Hit& hit) {
        return hit.classification == Case1Class::nondegenerate_exotic;
      }));
  err << "case1-scan: " << hits.size() << " rational octic points, " << bad
      << " nondegenerate\n";
  return bad == 0 ? 0 : 1;
}

int run_gap_sweep(long c_max, std::ostream& out, std::ostream& err) {
  GapSweepResult result = gap_sweep(c_max);
  write_gap_sweep_json(out, result);
  long violations = 0;
  for (const GapReport& report : result.reports) {
    if (!report.gap_ok || !report.zu_st_bounds_ok || report.abc1_is_square) {
      ++violations;
    }
  }
  err << "gap-sweep: " << result.reports.size() << " reports, " << result.skipped.size()
      << " skipped (c <= 4ab), " << violations << " violations\n";
  return violations == 0 ? 0 : 1;
}

int run_selftest(long trials, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  std::vector<SuiteResult> suites = run_identity_suites(trials, seed);
  write_suites_json(out, suites);
  long failed = 0;
  for (const SuiteResult& suite : suites) {
    if (!suite.ok()) {
      ++failed;
    }
  }
  err << "selftest: " << suites.size() << " suites, " << failed << " failing\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact constructor, verifier and search harness for exotic Diophantine "
               "triples"};
  app.require_subcommand(1);

  long count = 0;
  long c_max = 0;
  long h_max = 0;
  long trials = 1000;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string format = "json";
  std::string a_text, b_text, c_text;

  auto* generate = app.add_subcommand("generate", "emit the first N triples of the family");
  generate->add_option("--count", count, "number of triples")->required()->check(CLI::PositiveNumber);
  generate->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "certify or refute one candidate triple");
  verify->add_option("a", a_text, "first entry")->required();
  verify->add_option("b", b_text, "second entry")->required();
  verify->add_option("c", c_text, "third entry")->required();

  auto* search_int = app.add_subcommand("search-int", "exhaustive integer search");
  search_int->add_option("--max-c", c_max, "upper bound for c")->required()
      ->check(CLI::Range(3L, 2'000'000L));
  search_int->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* search_rat = app.add_subcommand("search-rat", "rational regular-extension search");
  search_rat->add_option("--height", h_max, "height bound for r, s")->required()
      ->check(CLI::PositiveNumber);
  search_rat->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  search_rat->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* case1 = app.add_subcommand("case1-scan", "scan the rs = +-1 octic case");
  case1->add_option("--height", h_max, "height bound for s")->required()
      ->check(CLI::PositiveNumber);

  auto* gap = app.add_subcommand("gap-sweep", "gap reports for integer quadruples {1,a,b,c}");
  gap->add_option("--max-c", c_max, "upper bound for c")->required()
      ->check(CLI::Range(3L, 2'000'000L));

  auto* selftest = app.add_subcommand("selftest", "random-point identity suites");
  selftest->add_option("--trials", trials, "points per suite")->check(CLI::PositiveNumber);
  selftest->add_option("--seed", seed, "generator seed");

  // CLI11's vector overload consumes arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& help) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& parse_error) {
    err << parse_error.what() << '\n';
    return 2;
  }

  try {
    if (generate->parsed()) {
      return run_generate(count, format, out, err);
    }
    if (verify->parsed()) {
      return run_verify(a_text, b_text, c_text, out, err);
    }
    if (search_int->parsed()) {
      return run_search_int(c_max, threads, out, err);
    }
    if (search_rat->parsed()) {
      return run_search_rat(h_max, threads, format, out, err);
    }
    if (case1->parsed()) {
      return run_case1(h_max, out, err);
    }
    if (gap->parsed()) {
      return run_gap_sweep(c_max, out, err);
    }
    if (selftest->parsed()) {
      return run_selftest(trials, seed, out, err);
    }
  } catch (const std::exception& error) {
    err << "error: " << error.what() << '\n';
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace exotic::cli
