#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "revsynth/benchmarks.hpp"

using namespace revsynth;

TEST_CASE("table5 loads its eleven rows") {
  const auto suite = load_suite("table5");
  REQUIRE(suite.size() == 11);
  CHECK(suite.front().spec.name == "c17-204");
  CHECK(suite.back().spec.name == "dc1");
  for (const Benchmark& b : suite) {
    CHECK(b.best_known_qc.has_value());
    CHECK(b.reference_qc.has_value());
    CHECK(b.reference_improvement.has_value());
    CHECK(validate_spec(b.spec).empty());
  }

  const Benchmark& hwb4 = suite[1];
  CHECK(hwb4.spec.n_in == 4);
  CHECK(min_garbage(hwb4.spec) == 0);  // all 16 values distinct
  std::set<std::uint64_t> distinct(hwb4.spec.outputs.begin(), hwb4.spec.outputs.end());
  CHECK(distinct.size() == 16);

  // rows published with missing tail entries carry a warning
  std::set<std::string> truncated;
  for (const Benchmark& b : suite)
    if (!b.warnings.empty()) truncated.insert(b.spec.name);
  CHECK(truncated == std::set<std::string>{"c17-204", "5mod5", "majority", "dc1"});
}

TEST_CASE("table6 loads its fifteen rows") {
  const auto suite = load_suite("table6");
  REQUIRE(suite.size() == 15);
  for (const Benchmark& b : suite) {
    CHECK(b.best_known_gc.has_value());
    CHECK(b.best_known_qc.has_value());
    CHECK(b.reference_improvement_gc.has_value());
    CHECK(b.reference_improvement_qc.has_value());
  }
  CHECK(suite[1].spec.outputs == std::vector<std::uint64_t>{7, 0, 1, 2, 3, 4, 5, 6});
  CHECK(suite[13].spec.n_in == 6);
  CHECK(suite[12].spec.truncated());  // 16 of 32 rows
  CHECK_FALSE(suite[12].warnings.empty());

  CHECK_THROWS_AS(load_suite("table9"), std::invalid_argument);
}

TEST_CASE("improvement arithmetic") {
  CHECK(improvement_rounded2(21, 17) == Catch::Approx(19.05));
  CHECK(improvement_rounded2(38, 23) == Catch::Approx(39.47));
  CHECK(improvement_percent(10, 10) == 0.0);
  CHECK(improvement_truncated(19, 17) == 10);   // 10.53 truncates
  CHECK(improvement_truncated(15, 14) == 6);    // 6.67 truncates
  CHECK_THROWS_AS(improvement_percent(0, 1), std::invalid_argument);
}

TEST_CASE("stored columns reproduce the published percentage math") {
  SECTION("per-row two-decimal percentages and their average") {
    double printed_sum = 0.0;
    for (const Benchmark& b : load_suite("table5")) {
      const double exact = improvement_percent(static_cast<double>(*b.best_known_qc),
                                               static_cast<double>(*b.reference_qc));
      CHECK(std::abs(exact - *b.reference_improvement) <= 0.01);
      printed_sum += *b.reference_improvement;
    }
    CHECK(std::abs(printed_sum / 11.0 - 42.66) <= 0.01);
  }

  SECTION("integer improvements: truncation everywhere except the one rounded row") {
    const auto suite = load_suite("table6");
    const std::vector<int> expected_qc = {0, 0, 53, 0, 0, 10, 6, 10, 14, 22, 7, 0, 84, 0, 10};
    const std::vector<int> expected_gc = {0, 0, 0, 0, 0, 28, 14, 16, 33, 40, 16, 0, 0, 0, 16};
    for (std::size_t i = 0; i < suite.size(); ++i) {
      const Benchmark& b = suite[i];
      CHECK(*b.reference_improvement_qc == expected_qc[i]);
      CHECK(*b.reference_improvement_gc == expected_gc[i]);

      const double exact_qc = improvement_percent(static_cast<double>(*b.best_known_qc),
                                                  static_cast<double>(*b.reference_qc));
      const double exact_gc = improvement_percent(static_cast<double>(*b.best_known_gc),
                                                  static_cast<double>(*b.reference_gc));
      const int printed_qc = *b.reference_improvement_qc;
      const int printed_gc = *b.reference_improvement_gc;
      // each stored integer is the truncated or the rounded exact value
      CHECK((printed_qc == static_cast<int>(exact_qc) ||
             printed_qc == static_cast<int>(std::lround(exact_qc))));
      CHECK((printed_gc == static_cast<int>(exact_gc) ||
             printed_gc == static_cast<int>(std::lround(exact_gc))));
    }
    // the single row whose stored integer is the rounded value
    CHECK(improvement_truncated(static_cast<double>(*suite[12].best_known_qc),
                                static_cast<double>(*suite[12].reference_qc)) == 83);
    CHECK(*suite[12].reference_improvement_qc == 84);
  }
}

TEST_CASE("suite runs verify every claim and are reproducible") {
  auto suite = load_suite("table6");
  suite.resize(3);  // keep the smoke run quick

  EvolConfig cfg;
  cfg.population_size = 40;
  cfg.max_generations = 60;
  cfg.chromosome_length = 8;
  cfg.library = GateLibrary::nct();

  const SuiteReport a = run_suite(suite, cfg, {1, 2});
  REQUIRE(a.rows.size() == 3);
  for (const SuiteRow& row : a.rows) {
    CHECK(row.verified);
    CHECK(row.best.errors >= 0);
    if (row.perfect) {
      CHECK(row.best.errors == 0);
      CHECK(row.improvement_vs_best_known.has_value());
      CHECK(row.qc_gap_vs_reference.has_value());
    }
  }

  const SuiteReport b = run_suite(suite, cfg, {1, 2}, 3);  // parallel workers
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].best == b.rows[i].best);
    CHECK(a.rows[i].best_seed == b.rows[i].best_seed);
    CHECK(a.rows[i].circuit == b.rows[i].circuit);
  }

  const std::string text = render_suite_text(a);
  CHECK(text.find("bench-01") != std::string::npos);
  CHECK(text.find("verified") != std::string::npos);

  CHECK_THROWS_AS(run_suite(suite, cfg, {}), std::invalid_argument);
}

TEST_CASE("improvement is zero when achieved equals best known") {
  // reporting path: feed a fake suite where the reference equals the baseline
  std::vector<Benchmark> fake = load_suite("table6");
  fake.resize(2);
  EvolConfig cfg;
  cfg.population_size = 60;
  cfg.max_generations = 400;
  cfg.chromosome_length = 10;
  cfg.library = GateLibrary::nct();
  const SuiteReport r = run_suite(fake, cfg, {1, 2, 3});
  for (const SuiteRow& row : r.rows)
    if (row.perfect && row.best.quantum_cost == *row.best_known_qc)
      CHECK(*row.improvement_vs_best_known == 0.0);
}
