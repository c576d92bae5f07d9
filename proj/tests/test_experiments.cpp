#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "gfw/experiments.hpp"

using namespace gfw;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("gfw_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("gaussian matrix generation") {
    Eigen::MatrixXd A = gen_gaussian_matrix(500, 50, 1);
    SUBCASE("column norms concentrate at 1") {
        double mean = 0.0;
        for (int j = 0; j < A.cols(); ++j) mean += A.col(j).norm();
        mean /= A.cols();
        CHECK(std::abs(mean - 1.0) < 0.05);
    }
    SUBCASE("seed determinism") {
        CHECK(A == gen_gaussian_matrix(500, 50, 1));
        CHECK(A != gen_gaussian_matrix(500, 50, 2));
    }
    CHECK_THROWS_AS(gen_gaussian_matrix(0, 5, 1), std::invalid_argument);
}

TEST_CASE("measurement generation") {
    Eigen::MatrixXd A = gen_gaussian_matrix(1000, 10, 3);
    Eigen::VectorXd x = Eigen::VectorXd::Ones(10) / std::sqrt(10.0);
    SUBCASE("noiseless is exact") {
        CHECK((gen_measurements(A, x, 0.0, 9) - A * x).norm() == 0.0);
    }
    SUBCASE("noise has the right energy") {
        double sigma = 0.3;
        Eigen::VectorXd e = gen_measurements(A, x, sigma, 9) - A * x;
        CHECK(std::abs(e.squaredNorm() / 1000.0 - sigma * sigma) < 0.1 * sigma * sigma);
    }
    CHECK_THROWS_AS(gen_measurements(A, Eigen::VectorXd::Zero(3), 0.0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(gen_measurements(A, x, -1.0, 1), std::invalid_argument);
}

TEST_CASE("grid signal generation") {
    SUBCASE("one blob on a small grid") {
        GridSignal gs = gen_grid_signal(4, 4, 4, 1, 5);
        CHECK(gs.graph.d == 16);
        CHECK(std::abs(gs.signal.norm() - 1.0) < 1e-12);
        CHECK(gs.components == 1);
        std::vector<int> supp;
        for (int i = 0; i < 16; ++i)
            if (gs.signal[i] != 0.0) {
                supp.push_back(i);
                CHECK(gs.signal[i] > 0.0);
            }
        CHECK(static_cast<int>(supp.size()) == 4);
        CHECK(is_member(Support(std::move(supp)), SubgraphModel(gs.graph, 4, 1, 1.0)));
    }
    SUBCASE("multiple blobs respect the component budget") {
        GridSignal gs = gen_grid_signal(8, 8, 12, 3, 11);
        CHECK(gs.components <= 3);
    }
    SUBCASE("different seeds give different supports") {
        int collisions = 0;
        auto supp_of = [](const GridSignal& gs) {
            std::set<int> s;
            for (int i = 0; i < gs.signal.size(); ++i)
                if (gs.signal[i] != 0.0) s.insert(i);
            return s;
        };
        auto prev = supp_of(gen_grid_signal(8, 8, 6, 1, 0));
        for (std::uint64_t seed = 1; seed < 100; ++seed) {
            auto cur = supp_of(gen_grid_signal(8, 8, 6, 1, seed));
            if (cur == prev) ++collisions;
            prev = std::move(cur);
        }
        CHECK(collisions < 5);
    }
    CHECK_THROWS_AS(gen_grid_signal(2, 2, 5, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_grid_signal(4, 4, 4, 9, 1), std::invalid_argument);
}

TEST_CASE("image loading") {
    fs::path dir = temp_dir("img");
    SUBCASE("all-zero image has no support") {
        std::ofstream(dir / "zero.txt") << "0 0\n0 0\n";
        CHECK_THROWS_AS(load_grid_image((dir / "zero.txt").string(), 0.5),
                        std::invalid_argument);
    }
    SUBCASE("single bright pixel") {
        std::ofstream(dir / "one.txt") << "0 0 0\n0 0.9 0\n";
        GridSignal gs = load_grid_image((dir / "one.txt").string(), 0.5);
        CHECK(gs.width == 3);
        CHECK(gs.height == 2);
        CHECK(gs.signal[4] == doctest::Approx(1.0));
        CHECK(gs.components == 1);
    }
    SUBCASE("checkerboard pixels are isolated") {
        std::ofstream(dir / "check.txt") << "1 0 1\n0 1 0\n1 0 1\n";
        GridSignal gs = load_grid_image((dir / "check.txt").string(), 0.5);
        CHECK(gs.components == 5);
    }
    SUBCASE("ragged rows are rejected") {
        std::ofstream(dir / "ragged.txt") << "1 0\n1\n";
        CHECK_THROWS_AS(load_grid_image((dir / "ragged.txt").string(), 0.5),
                        std::invalid_argument);
    }
    fs::remove_all(dir);
}

TEST_CASE("solver entry parsing") {
    SolverEntry e = SolverEntry::parse("a", "accfw:II:ksupport:0.4");
    CHECK(e.algo == Algo::AccFw);
    CHECK(e.option == StepOption::II);
    CHECK(e.oracle.kind == OracleKind::DegradedKSupport);
    CHECK(e.oracle.delta == doctest::Approx(0.4));

    CHECK(SolverEntry::parse("b", "fw").oracle.kind == OracleKind::Heuristic);
    CHECK(SolverEntry::parse("c", "iht:top-s").oracle.kind == OracleKind::TopS);
    CHECK(SolverEntry::parse("d", "gen-mp").algo == Algo::GenMp);
    CHECK(SolverEntry::parse("e", "cosamp").algo == Algo::CosampLite);
    CHECK_THROWS_AS(SolverEntry::parse("f", "what"), std::invalid_argument);
    CHECK_THROWS_AS(SolverEntry::parse("g", "iht:brute"), std::invalid_argument);
    CHECK_THROWS_AS(SolverEntry::parse("h", "cosamp:x"), std::invalid_argument);
}

TEST_CASE("delta resolution") {
    SubgraphModel model(Graph::grid(4, 4), 8, 2, 1.0);
    OracleSpec heur;
    CHECK(resolve_delta(heur, model) == doctest::Approx(0.5));  // sqrt(1/ceil(8/2))
    OracleSpec tops;
    tops.kind = OracleKind::TopS;
    CHECK(resolve_delta(tops, model) == 1.0);
    OracleSpec ks = OracleSpec::parse("ksupport:0.3");
    CHECK(resolve_delta(ks, model) == doctest::Approx(0.3));
}

TEST_CASE("experiment config recipes and files") {
    ExperimentConfig fig4 = ExperimentConfig::recipe("fig4-desk");
    CHECK(fig4.solvers.size() == 5);
    CHECK(fig4.grid_width == 32);
    ExperimentConfig fig3 = ExperimentConfig::recipe("fig3-desk");
    CHECK(fig3.grid_width == 16);
    CHECK(fig3.sampling_ratio == doctest::Approx(5.0));
    CHECK_THROWS_AS(ExperimentConfig::recipe("nope"), std::invalid_argument);

    fs::path dir = temp_dir("cfg");
    std::ofstream(dir / "exp.cfg") << "# comment\n[problem]\nwidth=6\nheight=5\nsupport=4\n"
                                      "ratio=3.5\n[run]\ntrials=2\nseed=9\nmax_iter=10\n"
                                      "[solvers]\nmain=fw:I:heuristic\n";
    ExperimentConfig cfg = ExperimentConfig::load((dir / "exp.cfg").string());
    CHECK(cfg.grid_width == 6);
    CHECK(cfg.grid_height == 5);
    CHECK(cfg.support_size == 4);
    CHECK(cfg.sampling_ratio == doctest::Approx(3.5));
    CHECK(cfg.trials == 2);
    CHECK(cfg.seed == 9);
    REQUIRE(cfg.solvers.size() == 1);
    CHECK(cfg.solvers[0].name == "main");

    std::ofstream(dir / "bad.cfg") << "[problem]\nbogus=1\n";
    CHECK_THROWS_AS(ExperimentConfig::load((dir / "bad.cfg").string()), std::invalid_argument);
    fs::remove_all(dir);
}

TEST_CASE("experiment run writes traces and is reproducible") {
    fs::path dir = temp_dir("run");
    ExperimentConfig cfg;
    cfg.grid_width = 6;
    cfg.grid_height = 6;
    cfg.support_size = 5;
    cfg.trials = 2;
    cfg.seed = 4;
    cfg.max_iter = 25;
    cfg.out_dir = (dir / "a").string();
    cfg.solvers = {SolverEntry::parse("fw", "fw:I:heuristic"),
                   SolverEntry::parse("mp", "gen-mp:heuristic")};
    ExperimentResult res = run_experiment(cfg);

    CHECK(res.summary.size() == 2);
    CHECK(res.records[0].size() == 2);
    CHECK(!res.records[0][0].failed);
    CHECK(std::isfinite(res.summary[0].median_h));
    CHECK(fs::exists(dir / "a" / "trace_fw_trial0.csv"));
    CHECK(fs::exists(dir / "a" / "summary.csv"));
    CHECK(fs::exists(dir / "a" / "meta.txt"));
    REQUIRE(res.verdicts.size() == 1);
    CHECK(res.verdicts[0].first == "fw_final_f_leq_mp");

    cfg.out_dir = (dir / "b").string();
    run_experiment(cfg);
    CHECK(slurp(dir / "a" / "trace_fw_trial0.csv") == slurp(dir / "b" / "trace_fw_trial0.csv"));
    CHECK(slurp(dir / "a" / "summary.csv") == slurp(dir / "b" / "summary.csv"));
    fs::remove_all(dir);
}

TEST_CASE("sampling-ratio sweep improves recovery") {
    // Median final estimation error should not increase with more
    // measurements, allowing one inversion.
    std::vector<double> medians;
    for (double ratio : {2.0, 4.0, 6.0}) {
        ExperimentConfig cfg;
        cfg.grid_width = 16;
        cfg.grid_height = 16;
        cfg.support_size = 20;
        cfg.sampling_ratio = ratio;
        cfg.trials = 5;
        cfg.seed = 3;
        cfg.max_iter = 150;
        cfg.solvers = {SolverEntry::parse("accfw", "accfw:I:top-s")};
        medians.push_back(run_experiment(cfg).summary[0].median_err);
    }
    int inversions = 0;
    for (std::size_t i = 1; i < medians.size(); ++i)
        if (medians[i] > medians[i - 1] + 1e-12) ++inversions;
    CHECK(inversions <= 1);
}

TEST_CASE("statistics helpers") {
    std::vector<double> v = {4.0, 1.0, 3.0, 2.0};
    CHECK(median_of(v) == doctest::Approx(2.5));
    CHECK(quantile(v, 0.0) == doctest::Approx(1.0));
    CHECK(quantile(v, 1.0) == doctest::Approx(4.0));
    CHECK(iqr_of(v) == doctest::Approx(1.5));
    CHECK(std::isnan(median_of({})));
    std::vector<double> with_nan = {1.0, std::nan(""), 3.0};
    CHECK(median_of(with_nan) == doctest::Approx(2.0));
}

TEST_CASE("log-log slope fit") {
    IterateTrace trace;
    for (int t = 0; t <= 100; ++t) {
        TraceRow row;
        row.t = t;
        row.h = 5.0 / ((t + 1.0) * (t + 1.0));
        trace.rows.push_back(row);
    }
    double slope = fitted_loglog_slope(trace, 20, 100);
    CHECK(slope == doctest::Approx(-2.0).epsilon(0.02));
    IterateTrace empty;
    CHECK(std::isnan(fitted_loglog_slope(empty, 1, 10)));
}
