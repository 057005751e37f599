#include "qpov/cli.hpp"
#include "qpov/curve.hpp"
#include "qpov/empirical.hpp"
#include "qpov/error.hpp"
#include "qpov/measures.hpp"
#include "qpov/model_json.hpp"

#include "../support/cli_run.hpp"
#include "../support/sampling.hpp"
#include "../support/zoo.hpp"

#include <doctest.h>

#include <cmath>
#include <fstream>

using namespace qpov;
using qpov::testing::run_cli;

namespace {

const std::string fixtures = QPOV_FIXTURE_DIR;

void write_curve(const std::string& path, const std::function<double(double)>& f, int n = 512) {
    std::ofstream out(path);
    write_curve_csv(sample_curve(f, midpoint_grid(n), CurveKind::PGR), out);
}

} // namespace

TEST_CASE("grid and parameter parsing") {
    CHECK(cli::parse_grid("0.25:0.75:0.25") == std::vector<double>{0.25, 0.5, 0.75});
    CHECK(cli::parse_grid("0.5:0.5:0.1") == std::vector<double>{0.5});
    auto g = cli::parse_grid("0:1:0.1");
    CHECK(g.size() == 11);
    CHECK(g.back() == 1.0);
    CHECK(cli::parse_grid("0.1:0.99:0.3").back() == 0.99);
    CHECK(cli::parse_grid("").empty());
    CHECK(cli::parse_grid("0.1, 0.3") == std::vector<double>{0.1, 0.3});
    CHECK_THROWS_AS(cli::parse_grid("1:0:0.1"), ValidationError);
    CHECK_THROWS_AS(cli::parse_grid("0:1:0"), ValidationError);
    CHECK_THROWS_AS(cli::parse_grid("0:1"), ValidationError);
    CHECK_THROWS_AS(cli::parse_grid("a:1:0.1"), ValidationError);

    auto p = cli::parse_params("alpha=1, beta=2.5");
    CHECK(p.at("alpha") == 1.0);
    CHECK(p.at("beta") == 2.5);
    CHECK(cli::parse_params("").empty());
    CHECK_THROWS_AS(cli::parse_params("alpha"), ValidationError);
    CHECK_THROWS_AS(cli::parse_params("alpha=1,alpha=2"), ValidationError);
    CHECK_THROWS_AS(cli::parse_params("=3"), ValidationError);
}

TEST_CASE("model JSON round trip") {
    for (const auto& [name, m] : testing::model_zoo()) {
        CAPTURE(name);
        auto back = model_from_json(model_to_json(m));
        CHECK(back.family_name() == m.family_name());
        for (double u : {0.1, 0.5, 0.9}) CHECK(eval_Q(back, u) == eval_Q(m, u));
    }
    auto tab = QuantileModel::tabulated({0.1, 0.5, 0.9}, {1, 2, 4}, {0.05, 0.3});
    auto back = model_from_json(model_to_json(tab));
    CHECK(eval_Q(back, 0.3) == eval_Q(tab, 0.3));
    CHECK(back.tail_masses().lower == 0.05);
    CHECK(back.tail_masses().upper == 0.3);

    auto j = model_to_json(QuantileModel::create(Family::Power, {{"alpha", 1}, {"beta", 2}}));
    CHECK(j.find("\"family\": \"power\"") != std::string::npos);
    CHECK(j.find("\"u_domain\"") != std::string::npos);
    CHECK(j.find("\"params\"") != std::string::npos);

    CHECK_THROWS_AS(model_from_json("{"), ValidationError);
    CHECK_THROWS_AS(model_from_json("[]"), ValidationError);
    CHECK_THROWS_AS(model_from_json(R"({"family": "nope", "params": {}})"), ValidationError);
    CHECK_THROWS_AS(model_from_json(R"({"family": "power", "params": {"alpha": "x", "beta": 2}})"),
                    ValidationError);
    CHECK_THROWS_AS(model_from_json(R"({"family": "power", "params": {"alpha": 1, "beta": 2}, "u_domain": [0]})"),
                    ValidationError);
    CHECK_THROWS_AS(model_from_json(R"({"family": "power", "params": {"alpha": -1, "beta": 2}})"),
                    ValidationError);
    CHECK_THROWS_AS(model_from_json(R"({"family": "tabulated", "params": {}})"), ValidationError);
    CHECK_THROWS_AS(model_from_json(R"({"family": "lorenz:nope", "params": {}})"), ValidationError);
    CHECK_THROWS_AS(read_model_file("/nonexistent/model.json"), IoError);
}

TEST_CASE("measures command") {
    auto r = run_cli({"measures", "--family", "power", "--params", "alpha=1,beta=2", "--grid", "0.25:0.75:0.25"});
    REQUIRE(r.code == 0);
    auto t = testing::parse_output(r.out);
    CHECK(t.rows.size() == 3);
    auto a1 = t.values("A1");
    CHECK(a1[0] == doctest::Approx(1.0 / 12).epsilon(1e-11));
    CHECK(a1[1] == doctest::Approx(1.0 / 6).epsilon(1e-11));
    CHECK(a1[2] == doctest::Approx(0.25).epsilon(1e-11));
    CHECK(r.out.find("0.0833333333333,") != std::string::npos);

    auto empty = run_cli({"measures", "--family", "power", "--params", "alpha=1,beta=2", "--grid", ""});
    CHECK(empty.code == 0);
    CHECK(empty.out == "u,headcount,A1,A2,watts,igr,mu_poor,gini_poor,lorenz,sen,shorrocks_sen\n");

    auto w = run_cli({"measures", "--family", "wakeby", "--params", "lambda=0,theta=1,phi=0,alpha=0.5,beta=1",
                      "--grid", "0.5:0.5:0.1", "--alphas", "0,2", "--betas", "0.5"});
    REQUIRE(w.code == 0);
    auto wt = testing::parse_output(w.out);
    REQUIRE(wt.rows.size() == 1);
    for (double v : wt.rows[0]) CHECK(std::isfinite(v));
    CHECK(wt.header[4] == "fgt_0");
    CHECK(wt.header[7] == "clark_0.5");

    auto bad = run_cli({"measures", "--family", "wakeby", "--params", "lambda=-5,theta=1,phi=0,alpha=0.5,beta=1",
                        "--grid", "0.5"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("lambda+theta-phi") != std::string::npos);
    CHECK(bad.out.empty());
    CHECK(run_cli({"measures", "--family", "nope", "--grid", "0.5"}).code == 2);
    CHECK(run_cli({"measures", "--family", "power", "--params", "alpha=1", "--grid", "0.5"}).code == 2);
    CHECK(run_cli({"measures", "--family", "power", "--params", "alpha=1,beta=2", "--grid", "1.5"}).code == 0);

    // Byte determinism and the JSON path.
    testing::TempDir dir("measures");
    std::ofstream(dir.file("m.json")) << model_to_json(QuantileModel::lorenz_derived(LorenzKind::Rohde, {{"beta", 2}}));
    std::vector<std::string> args = {"measures", "--model", dir.file("m.json"), "--grid", "0.1:0.9:0.1",
                                     "--alphas", "0.5,3", "--betas", "-1,0.3"};
    auto a = run_cli(args), b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto lor = run_cli({"measures", "--family", "lorenz:rohde", "--params", "beta=2", "--grid", "0.1:0.9:0.1",
                        "--alphas", "0.5,3", "--betas", "-1,0.3"});
    CHECK(lor.out == a.out);
    args.push_back("--output");
    args.push_back(dir.file("p.csv"));
    CHECK(run_cli(args).code == 0);
    CHECK(testing::read_file(dir.file("p.csv")) == a.out);
}

TEST_CASE("invert command") {
    testing::TempDir dir("invert");
    write_curve(dir.file("rohde.csv"), [](double u) { return u * u / 2; });
    auto r = run_cli({"invert", "--from", "pgr", "--input", dir.file("rohde.csv"), "--grid", "0.5,0.6"});
    REQUIRE(r.code == 0);
    auto t = testing::parse_output(r.out);
    CHECK(t.header == std::vector<std::string>{"u", "Q"});
    CHECK(std::abs(t.values("Q")[0] - 0.888889) < 1e-6);
    CHECK(r.err.find("unit mean") != std::string::npos);

    auto scaled = run_cli({"invert", "--from", "pgr", "--input", dir.file("rohde.csv"), "--grid", "0.5,0.6",
                           "--mean", "2", "--formula", "log-derivative"});
    REQUIRE(scaled.code == 0);
    CHECK(std::abs(testing::parse_output(scaled.out).values("Q")[0] - 2 * 0.888889) < 2e-6);

    write_curve(dir.file("zero.csv"), [](double) { return 0.0; });
    auto flat = run_cli({"invert", "--from", "gini-poor", "--input", dir.file("zero.csv")});
    REQUIRE(flat.code == 0);
    auto fq = testing::parse_output(flat.out).values("Q");
    CHECK(fq.size() == 512);
    for (double v : fq) CHECK(v == doctest::Approx(1.0).epsilon(1e-9));

    auto m = QuantileModel::create(Family::Power, {{"alpha", 1}, {"beta", 2}});
    write_curve(dir.file("power.csv"), [&](double u) { return pgr(m, u); });
    auto rt = run_cli({"invert", "--from", "pgr", "--input", dir.file("power.csv"), "--grid", "0.05:0.95:0.01",
                       "--model-out", dir.file("q.json")});
    REQUIRE(rt.code == 0);
    auto rtt = testing::parse_output(rt.out);
    auto us = rtt.values("u"), qs = rtt.values("Q");
    double worst = 0;
    for (std::size_t i = 0; i < us.size(); ++i) worst = std::max(worst, std::abs(qs[i] / (1.5 * std::sqrt(us[i])) - 1));
    CHECK(worst < 1e-4);
    auto saved = read_model_file(dir.file("q.json"));
    CHECK(saved.family() == Family::TabulatedQ);
    CHECK(eval_Q(saved, 0.5) == doctest::Approx(qs[45]).epsilon(1e-11));

    write_curve(dir.file("bad.csv"), [](double u) { return u; });
    auto bad = run_cli({"invert", "--from", "pgr", "--input", dir.file("bad.csv")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("A1 < u") != std::string::npos);
    CHECK(run_cli({"invert", "--from", "q", "--input", dir.file("bad.csv")}).code == 2);
    CHECK(run_cli({"invert", "--from", "pgr", "--input", dir.file("missing.csv")}).code == 3);
    CHECK(run_cli({"invert", "--from", "pgr"}).code == 2);
}

TEST_CASE("empirical command") {
    auto r = run_cli({"empirical", "--dataset", "california", "--mode", "consistent", "--grid", "full"});
    REQUIRE(r.code == 0);
    auto t = testing::parse_estimators(r.out);
    CHECK(t.rows.size() == 57);
    for (const auto& row : t.rows)
        for (double v : row) CHECK(std::isfinite(v));
    CHECK(r.err.find("11547") != std::string::npos);
    CHECK(r.out.find(",consistent\n") != std::string::npos);

    auto lit = run_cli({"empirical", "--dataset", "california", "--mode", "literal"});
    REQUIRE(lit.code == 0);
    CHECK(lit.out == testing::read_file(fixtures + "/california_literal.csv"));

    auto eq = run_cli({"empirical", "--input", fixtures + "/three_equal.csv", "--poverty-u", "0.66"});
    REQUIRE(eq.code == 0);
    CHECK(eq.out == "u,mu_poor,igr,pgr,gini_poor,sen,mode\n0.66,3,0,0,0,0,consistent\n");

    auto pw = run_cli({"empirical", "--input", fixtures + "/power_sample.csv", "--poverty-u", "0.5"});
    REQUIRE(pw.code == 0);
    CHECK(std::abs(testing::parse_estimators(pw.out).values("pgr")[0] - 1.0 / 6) < 0.02);

    auto line = run_cli({"empirical", "--dataset", "california", "--poverty-line", "45000"});
    REQUIRE(line.code == 0);
    // 15 of the 58 incomes are at most 45000.
    CHECK(testing::parse_estimators(line.out).values("u")[0] == doctest::Approx(15.0 / 58));

    CHECK(run_cli({"empirical", "--dataset", "california", "--poverty-u", "0.01"}).code == 2);
    CHECK(run_cli({"empirical", "--dataset", "california", "--mode", "bogus"}).code == 2);
    CHECK(run_cli({"empirical", "--dataset", "nowhere"}).code == 2);
    CHECK(run_cli({"empirical"}).code == 2);
    CHECK(run_cli({"empirical", "--input", "/nonexistent/x.csv"}).code == 3);
    CHECK(run_cli({"empirical", "--dataset", "california", "--output", "/nonexistent/dir/x.csv"}).code == 3);
    CHECK(run_cli({"empirical", "--dataset", "california", "--poverty-u", "0.5", "--grid", "full"}).code == 2);
}

TEST_CASE("fit-mean command") {
    testing::TempDir dir("fit");
    auto r = run_cli({"fit-mean", "--dataset", "california", "--u-max", "0.9311", "--output", dir.file("m.json")});
    REQUIRE(r.code == 0);
    auto m = read_model_file(dir.file("m.json"));
    CHECK(m.family() == Family::LogLinear);
    CHECK(validate(m).ok());
    for (const auto& [k, v] : m.params()) CHECK(std::isfinite(v));

    CHECK(run_cli({"fit-mean", "--input", fixtures + "/three_equal.csv"}).code == 2);

    auto data = testing::draw([](double u) { return 2 * std::log(u) + 4 * u + 55; }, 10000, 3);
    {
        std::ofstream f(dir.file("synthetic.csv"));
        write_income_csv(data, f);
    }
    auto s = run_cli({"fit-mean", "--input", dir.file("synthetic.csv")});
    REQUIRE(s.code == 0);
    auto sm = model_from_json(s.out);
    CHECK(std::abs(sm.params().at("alpha") - 2) < 0.2);
    CHECK(std::abs(sm.params().at("beta") - 2) < 0.2);
}

TEST_CASE("dataset command and general behaviour") {
    auto r = run_cli({"dataset", "california"});
    REQUIRE(r.code == 0);
    auto v = testing::parse_output(r.out).values("income");
    CHECK(v == california_raw());
    auto sorted = testing::parse_output(run_cli({"dataset", "california", "--sorted"}).out).values("income");
    CHECK(sorted.front() == 11547);
    CHECK(run_cli({"dataset", "nowhere"}).code == 2);

    auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("measures") != std::string::npos);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
}
