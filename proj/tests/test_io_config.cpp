#include <doctest.h>

#include <sstream>

#include "dadqc/config.hpp"
#include "dadqc/error.hpp"
#include "dadqc/io.hpp"
#include "test_util.hpp"

using namespace dadqc;
using dadqc::testutil::make_graph;
using doctest::Approx;

TEST_SUITE_BEGIN("io");

TEST_CASE("bitstring round trip, qubit 0 first") {
    CHECK(bitstring(0b101, 4) == "1010");
    CHECK(parse_bitstring("1010") == 0b101);
    CHECK(parse_bitstring(bitstring(0b0110, 4)) == 0b0110);
    CHECK_THROWS_AS(parse_bitstring("10x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bitstring(""), std::invalid_argument);
}

TEST_CASE("graph file round trip") {
    const auto g = sample_d_factor(build_complete(6), 3, RandomSeed{1}, 0);
    std::stringstream ss;
    Provenance prov;
    prov.add("seed", std::uint64_t{1}).add("d", std::uint64_t{3});
    write_graph(ss, g, prov);

    const std::string text = ss.str();
    CHECK(text.starts_with("# {\"seed\":1,\"d\":3}\n6 9\n"));
    std::stringstream in(text);
    const auto back = read_interaction_graph(in);
    CHECK(back.n == g.n);
    CHECK(back.degree == g.degree);
    CHECK(back.edges == g.edges);
}

TEST_CASE("graph reader rejects malformed input") {
    std::stringstream bad1("3 1\n2 1\n");  // u >= v
    CHECK_THROWS_AS(read_interaction_graph(bad1), std::invalid_argument);
    std::stringstream bad2("3 2\n0 1\n");  // missing edge line
    CHECK_THROWS_AS(read_interaction_graph(bad2), std::invalid_argument);
    std::stringstream bad3("2 1\n0 1\nnot an edge\n");
    CHECK_NOTHROW(read_interaction_graph(bad3));  // trailing junk is not graph data
}

TEST_CASE("ising instance file round trip with theta and beta") {
    const auto g = sample_d_factor(build_complete(4), 3, RandomSeed{2}, 0);
    std::vector<double> h{0.1, -0.2, 0.3, 0.0};
    std::vector<double> J(g.edges.size(), 0.5);
    const auto params = IsingParams::create(g, h, J);
    MeasurementAngles theta{{0.5, 1.5, 2.5, 3.5}};

    std::stringstream ss;
    write_ising(ss, params, Provenance{}, &theta, 1.25);
    const auto file = read_ising(ss);
    CHECK(file.params.graph.edges == g.edges);
    for (std::size_t i = 0; i < h.size(); ++i) {
        CHECK(file.params.h[i] == Approx(h[i]).scale(1).epsilon(1e-15));
    }
    for (std::size_t k = 0; k < J.size(); ++k) {
        CHECK(file.params.J[k] == Approx(J[k]).epsilon(1e-15));
    }
    REQUIRE(file.theta.has_value());
    CHECK(file.theta->theta == theta.theta);
    REQUIRE(file.beta.has_value());
    CHECK(*file.beta == Approx(1.25));
}

TEST_CASE("ising reader rejects J on a non-edge") {
    std::stringstream ss("2 1\n0 1\nJ 0 2 1.0\n");
    CHECK_THROWS_AS(read_ising(ss), std::invalid_argument);
}

TEST_CASE("distribution csv and samples writers") {
    Distribution d{1, {0.25, 0.75}};
    std::stringstream ss;
    write_distribution_csv(ss, d, Provenance{});
    CHECK(ss.str() == "# {}\nindex,probability\n0,0.25\n1,0.75\n");

    std::stringstream s2;
    write_samples(s2, {0, 3, 1}, 2, Provenance{});
    CHECK(s2.str() == "# {}\n00\n11\n10\n");
}

TEST_CASE("fnv1a is stable") {
    CHECK(fnv1a("") == 14695981039346656037ull);
    CHECK(fnv1a("a") == fnv1a("a"));
    CHECK(fnv1a("a") != fnv1a("b"));
}

TEST_CASE("config parsing and strict key checking") {
    const auto cfg = ExperimentConfig::parse(
        "# comment\n"
        "host: complete\n"
        "n: 6\n"
        "T: 4.5\n"
        "adaptive: true\n"
        "n_grid: 4, 6, 8\n");
    CHECK(cfg.get_string("host") == "complete");
    CHECK(cfg.get_int("n") == 6);
    CHECK(cfg.get_double("T") == Approx(4.5));
    CHECK(cfg.get_bool("adaptive", false));
    CHECK(cfg.get_int_list("n_grid") == std::vector<std::int64_t>{4, 6, 8});
    CHECK(cfg.get_double("mu", 0.25) == Approx(0.25));
    CHECK(cfg.line_of("T") == 4);

    CHECK_THROWS_WITH_AS(ExperimentConfig::parse("nonsense: 1\n"),
                         doctest::Contains("unknown key"), ConfigError);
    try {
        ExperimentConfig::parse("host: complete\nbogus_key: 2\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(ExperimentConfig::parse("n: 1\nn: 2\n"), ConfigError);
    CHECK_THROWS_AS(ExperimentConfig::parse("n:\n"), ConfigError);
    CHECK_THROWS_AS(ExperimentConfig::parse("n: abc\n").get_int("n"), ConfigError);
    CHECK_THROWS_AS(ExperimentConfig::parse("").get_double("T"), ConfigError);
}

TEST_CASE("config hash tracks content") {
    const auto a = ExperimentConfig::parse("n: 4\n");
    const auto b = ExperimentConfig::parse("n: 4\n");
    const auto c = ExperimentConfig::parse("n: 5\n");
    CHECK(a.hash() == b.hash());
    CHECK(a.hash() != c.hash());
}

TEST_SUITE_END();
