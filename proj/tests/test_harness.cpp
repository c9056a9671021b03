#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "srfr/harness.hpp"

using namespace srfr;

TEST_CASE("config parsing accepts the documented grammar") {
    const std::string text =
        "# trial campaign\n"
        "mode = srfr\n"
        "q = 101\n"
        "n = 20        # points\n"
        "l = 2\n"
        "deg_f = 2\n"
        "deg_g = 2\n"
        "d_f = 5\n"
        "d_g = 5\n"
        "error_counts = 0, 3, 7\n"
        "trials = 12\n"
        "seed = 9\n";
    CampaignConfig cfg = parse_config_text(text);
    CHECK(cfg.mode == CampaignConfig::Mode::Srfr);
    CHECK(cfg.q == 101);
    CHECK(cfg.n == 20);
    CHECK(cfg.l == 2);
    CHECK(cfg.deg_f == 2);
    CHECK(cfg.d_f == 5);
    CHECK(cfg.error_counts == std::vector<int64_t>{0, 3, 7});
    CHECK(cfg.trials == 12);
    CHECK(cfg.seed == 9);
    CHECK_FALSE(cfg.needs_system());
}

TEST_CASE("config parsing rejects malformed input") {
    const std::string base =
        "mode = srfr\nq = 101\nn = 20\nl = 2\ndeg_f = 2\ndeg_g = 2\n"
        "d_f = 5\nd_g = 5\nerror_counts = 3\ntrials = 12\n";
    CHECK_NOTHROW(parse_config_text(base));

    CHECK_THROWS_AS(parse_config_text(base + "banana = 1\n"), UsageError);       // unknown key
    CHECK_THROWS_AS(parse_config_text(base + "q = 7\n"), UsageError);            // duplicate
    CHECK_THROWS_AS(parse_config_text(base + "trials\n"), UsageError);           // no '='
    CHECK_THROWS_AS(parse_config_text("q = 101\nn = 5\n"), UsageError);          // missing mode
    CHECK_THROWS_AS(parse_config_text(base + "deg_A = x\n"), UsageError);        // non-integer

    std::string evil = base;
    evil.replace(evil.find("q = 101"), 7, "q = 100");  // composite modulus
    CHECK_THROWS_AS(parse_config_text(evil), UsageError);

    std::string tight = base;
    tight.replace(tight.find("error_counts = 3"), 16, "error_counts = 20");  // >= n
    CHECK_THROWS_AS(parse_config_text(tight), UsageError);

    // plswe mode without system caps
    CHECK_THROWS_AS(parse_config_text(
        "mode = plswe\nq = 101\nn = 20\nl = 2\ndeg_f = 2\ndeg_g = 2\n"
        "d_f = 5\nd_g = 5\nerror_counts = 3\ntrials = 2\n"), UsageError);
}

TEST_CASE("radius report composes the per-mode radii") {
    CampaignConfig cfg;
    cfg.mode = CampaignConfig::Mode::Plswe;
    cfg.q = 65537;
    cfg.n = 20;
    cfg.l = 4;
    cfg.deg_f = 2;
    cfg.deg_g = 3;
    cfg.d_f = 2;
    cfg.d_g = 3;
    cfg.deg_A = 1;
    cfg.deg_b = 2;
    cfg.d_A = 1;
    cfg.d_b = 2;
    RadiusReport rep = radius_report(cfg, 4);
    CHECK(rep.eps_bk == radius_bk(20, 2, 3));
    CHECK(rep.eps_glz == radius_glz(20, 2, 3, 4));
    CHECK(rep.has_system);
    CHECK(rep.eps_kps == radius_kps(20, 1, 2, 2, 3));
    CHECK(rep.eps_glz2 == radius_glz2(20, 1, 2, 2, 3, 4));
    CHECK(rep.dfge == d_fge(2, 3, 2, 3, 4, 4));
    PrimedRadii pr = primed_radii(20, 4, 4, 2, 3, 1, 2, 2, 3);
    CHECK(rep.eps_bk_primed == pr.bk);
    CHECK(rep.eps_kps_primed == pr.kps);
    CHECK(rep.eps_glz_primed == pr.glz);
    CHECK(rep.eps_glz2_primed == pr.glz2);

    std::string table = radius_table(cfg);
    CHECK(table.find("eps_glz2") != std::string::npos);
    CHECK(table.find('\n') != std::string::npos);
}

TEST_CASE("campaigns aggregate outcomes and emit one CSV row per error count") {
    CampaignConfig cfg;
    cfg.mode = CampaignConfig::Mode::Srfr;
    cfg.q = 101;
    cfg.n = 15;
    cfg.l = 1;
    cfg.deg_f = 2;
    cfg.deg_g = 2;
    cfg.d_f = 2;
    cfg.d_g = 2;
    cfg.error_counts = {0, radius_bk(15, 2, 2)};  // 0 and 5
    cfg.trials = 8;
    cfg.seed = 3;

    RunOptions opts;
    opts.collect_records = true;
    CampaignResult result = run_campaign(cfg, opts);
    REQUIRE(result.rows.size() == 2);
    for (const auto& row : result.rows) {
        CHECK(row.trials == 8);
        CHECK(row.recovered == 8);  // at or below the unique radius
        CHECK(row.empirical_failure_rate == 0.0);
        CHECK(row.records.size() == 8);
        CHECK(row.span_failures == 0);
    }
    CHECK(result.rows[0].scenario_id == "srfr-0");
    CHECK(result.rows[1].scenario_id == "srfr-1");
    CHECK(result.rows[1].actual_errors == 5);  // zero columns are resampled away

    std::string csv = to_csv(result);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line ==
          "scenario_id,q,l,n,deg_f,deg_g,d_f,d_g,deg_A,deg_b,d_A,d_b,eps,actual_errors,"
          "radius_name,radius_value,trials,recovered,wrong,empty,exceeded_detected,"
          "empirical_failure_rate,theoretical_bound");
    size_t rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 22);
    }
    CHECK(rows == 2);
}

TEST_CASE("campaign trials are independent of execution order") {
    CampaignConfig cfg;
    cfg.mode = CampaignConfig::Mode::Srfr;
    cfg.q = 101;
    cfg.n = 12;
    cfg.l = 2;
    cfg.deg_f = 1;
    cfg.deg_g = 1;
    cfg.d_f = 2;
    cfg.d_g = 2;
    cfg.error_counts = {2};
    cfg.trials = 5;
    cfg.seed = 42;

    CampaignResult a = run_campaign(cfg);
    CampaignResult b = run_campaign(cfg);
    CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("instance files round trip") {
    InstanceFile inst;
    inst.q = 101;
    inst.n = 4;
    inst.l = 2;
    inst.d_f = 1;
    inst.d_g = 1;
    inst.eps = 1;
    inst.alphas = {0, 1, 2, 3};
    inst.y = {7, 8, 9, 10, 11, 12, 13, 14};
    std::string text = write_instance_text(inst);
    InstanceFile back = read_instance_text(text);
    CHECK(back.q == inst.q);
    CHECK(back.n == inst.n);
    CHECK(back.l == inst.l);
    CHECK(back.alphas == inst.alphas);
    CHECK(back.y == inst.y);
    CHECK_FALSE(back.d_A.has_value());

    inst.d_A = 1;
    inst.d_b = 1;
    InstanceFile sys = read_instance_text(write_instance_text(inst));
    REQUIRE(sys.d_A.has_value());
    CHECK(*sys.d_A == 1);
    CHECK_NOTHROW(sys.plswe_params());

    ObservationMatrix obs = back.observations();
    CHECK(obs.at(1, 2).value() == 13);
    CHECK_THROWS_AS(back.plswe_params(), UsageError);
}

TEST_CASE("instance parsing rejects malformed text") {
    CHECK_THROWS_AS(read_instance_text(""), UsageError);
    CHECK_THROWS_AS(read_instance_text("101 2 1 1 1\n0 1\n3 4\n"), UsageError);   // 5 header ints
    CHECK_THROWS_AS(read_instance_text("101 2 1 0 0 1\n0 1\n3 4 5\n"), UsageError);  // row too wide
    CHECK_THROWS_AS(read_instance_text("101 2 1 0 0 1\n0 0\n3 4\n"), UsageError);    // repeated point
    CHECK_THROWS_AS(read_instance_text("100 2 1 0 0 1\n0 1\n3 4\n"), UsageError);    // composite q
    CHECK_THROWS_AS(read_instance_text("101 2 1 0 0 1\n0 1\n3 400\n"), UsageError);  // value >= q
    CHECK_NOTHROW(read_instance_text("101 2 1 0 0 1\n0 1\n3 4\n"));
}

TEST_CASE("uniform error supports are sorted, in range, duplicate free") {
    Rng rng(2024);
    std::set<std::vector<size_t>> seen;
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<size_t> e = sample_error_positions(10, 4, rng);
        REQUIRE(e.size() == 4);
        for (size_t i = 0; i < 4; ++i) {
            CHECK(e[i] < 10);
            if (i) CHECK(e[i - 1] < e[i]);
        }
        seen.insert(e);
    }
    CHECK(seen.size() > 50);  // 210 possible supports; a uniform sampler spreads out
    CHECK(sample_error_positions(5, 0, rng).empty());
    CHECK(sample_error_positions(5, 5, rng) == std::vector<size_t>{0, 1, 2, 3, 4});
}

TEST_CASE("default grid enumerates small residues") {
    FieldParams fp(101);
    EvaluationGrid g = default_grid(5, fp);
    REQUIRE(g.size() == 5);
    for (size_t j = 0; j < 5; ++j) CHECK(g.at(j).value() == j);
}
