#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "simplicity/ising.hpp"
#include "simplicity/machine.hpp"
#include "support/oracles.hpp"

using namespace simplicity;
using simplicity::testing::pi1_closed;

namespace {

std::filesystem::path data(const char* name) {
    return std::filesystem::path(SIMPLICITY_TEST_DATA) / name;
}

}  // namespace

TEST_CASE("two-state machine validates") {
    CHECK(validate_machine(two_state_machine(0.7, 0.6)).ok());
}

TEST_CASE("row sum below one is reported") {
    EpsilonMachine m({"a"}, {"0", "1"});
    m.set_transition(0, 0, 0, 0.5);
    m.set_transition(0, 1, 0, 0.4);
    const auto report = validate_machine(m);
    CHECK(report.has(Violation::Kind::row_sum));
    CHECK(to_string(Violation::Kind::row_sum) == "row-sum");
}

TEST_CASE("disconnected components are reported") {
    EpsilonMachine m({"a", "b"}, {"0"});
    m.set_transition(0, 0, 0, 1.0);
    m.set_transition(1, 0, 1, 1.0);
    const auto report = validate_machine(m);
    CHECK(report.has(Violation::Kind::not_strongly_connected));
    CHECK(to_string(Violation::Kind::not_strongly_connected) == "not strongly connected");
}

TEST_CASE("one-way reachability is not strong connectivity") {
    EpsilonMachine m({"a", "b"}, {"0", "1"});
    m.set_transition(0, 0, 0, 0.5);
    m.set_transition(0, 1, 1, 0.5);
    m.set_transition(1, 0, 1, 1.0);
    CHECK(validate_machine(m).has(Violation::Kind::not_strongly_connected));
}

TEST_CASE("zero-probability edges do not count for connectivity") {
    EpsilonMachine m({"a", "b"}, {"0", "1"});
    m.set_transition(0, 0, 0, 1.0);
    m.set_transition(0, 1, 1, 0.0);
    m.set_transition(1, 0, 0, 1.0);
    CHECK(validate_machine(m).has(Violation::Kind::not_strongly_connected));
}

TEST_CASE("negative or non-finite probabilities are reported") {
    EpsilonMachine m({"a"}, {"0", "1"});
    m.set_transition(0, 0, 0, 1.5);
    m.set_transition(0, 1, 0, -0.5);
    CHECK(validate_machine(m).has(Violation::Kind::probability));

    EpsilonMachine n({"a"}, {"0"});
    n.set_transition(0, 0, 0, std::nan(""));
    CHECK(validate_machine(n).has(Violation::Kind::probability));
}

TEST_CASE("set_transition rejects duplicates and bad indices") {
    EpsilonMachine m({"a"}, {"0"});
    m.set_transition(0, 0, 0, 1.0);
    CHECK_THROWS_AS(m.set_transition(0, 0, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(m.set_transition(1, 0, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(m.set_transition(0, 1, 0, 1.0), std::invalid_argument);
}

TEST_CASE("empty machine is rejected") {
    EpsilonMachine m({}, {});
    CHECK(validate_machine(m).has(Violation::Kind::empty));
}

TEST_CASE("JSON loading") {
    SUBCASE("valid file") {
        const auto m = load_machine(data("two_state_p09_q09.json"));
        CHECK(m.num_states() == 2);
        CHECK(m.num_symbols() == 2);
        REQUIRE(m.transition(0, 0));
        CHECK(m.transition(0, 0)->probability == doctest::Approx(0.9));
    }
    SUBCASE("row sum 0.9") {
        try {
            load_machine(data("row_sum_short.json"));
            FAIL("expected InvalidMachine");
        } catch (const InvalidMachine& e) {
            CHECK(e.report.has(Violation::Kind::row_sum));
        }
    }
    SUBCASE("duplicate (state, symbol)") {
        try {
            load_machine(data("duplicate_edge.json"));
            FAIL("expected InvalidMachine");
        } catch (const InvalidMachine& e) {
            CHECK(e.report.has(Violation::Kind::unifilarity));
        }
    }
    SUBCASE("truncated document") {
        CHECK_THROWS_AS(load_machine(data("truncated.json")), InvalidMachine);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_machine(data("does_not_exist.json")), InvalidMachine);
    }
    SUBCASE("unknown state name") {
        const char* text = R"({"states":["a"],"alphabet":["0"],"transitions":[{"from":"a","symbol":"0","to":"z","p":1}]})";
        try {
            parse_machine(text);
            FAIL("expected InvalidMachine");
        } catch (const InvalidMachine& e) {
            CHECK(e.report.has(Violation::Kind::unknown_name));
        }
    }
}

TEST_CASE("JSON round trip") {
    const auto m = two_state_machine(0.7, 0.6);
    const auto back = parse_machine(machine_to_json(m));
    CHECK(back.states() == m.states());
    CHECK(back.alphabet() == m.alphabet());
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t x = 0; x < 2; ++x) {
            REQUIRE(back.transition(s, x).has_value() == m.transition(s, x).has_value());
            if (m.transition(s, x)) {
                CHECK(back.transition(s, x)->to == m.transition(s, x)->to);
                CHECK(back.transition(s, x)->probability == m.transition(s, x)->probability);
            }
        }
}

TEST_CASE("stationary distribution") {
    SUBCASE("p = q gives uniform") {
        const auto pi = stationary_distribution(two_state_machine(0.8, 0.8));
        CHECK(pi.probs[0] == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(pi.probs[1] == doctest::Approx(0.5).epsilon(1e-13));
    }
    SUBCASE("closed form") {
        for (double p : {0.1, 0.35, 0.7, 0.95})
            for (double q : {0.2, 0.6, 0.99}) {
                const auto pi = stationary_distribution(two_state_machine(p, q));
                CHECK(std::abs(pi.probs[0] - pi1_closed(p, q)) < 1e-12);
                CHECK(std::abs(pi.probs[0] + pi.probs[1] - 1.0) < 1e-14);
            }
    }
    SUBCASE("single state") {
        const auto pi = stationary_distribution(simplicity::testing::fair_coin());
        REQUIRE(pi.probs.size() == 1);
        CHECK(pi.probs[0] == 1.0);
    }
    SUBCASE("periodic chain converges") {
        const auto pi = stationary_distribution(simplicity::testing::cycle(3));
        for (double v : pi.probs) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    }
}

TEST_CASE("entropy rate") {
    using simplicity::testing::entropy_rate_closed;
    CHECK(entropy_rate(simplicity::testing::cycle(4)) == 0.0);
    CHECK(entropy_rate(simplicity::testing::fair_coin()) == doctest::Approx(1.0).epsilon(1e-15));
    for (double p : {0.15, 0.5, 0.9})
        for (double q : {0.3, 0.75})
            CHECK(std::abs(entropy_rate(two_state_machine(p, q)) - entropy_rate_closed(p, q)) < 1e-12);
}
