#include <doctest.h>

#include <cmath>
#include <vector>

#include "simplicity/classical.hpp"
#include "simplicity/ising.hpp"
#include "support/oracles.hpp"

using namespace simplicity;
namespace oracle = simplicity::testing;

namespace {

const std::vector<double> kTemperatures = {0.05, 0.08, 0.1, 0.2, 0.5, 1.0, 1.63, 2.0, 3.7, 5.0, 10.0, 50.0, 500.0};

double rel(double x, long double ref) {
    return static_cast<double>(std::abs((static_cast<long double>(x) - ref) / ref));
}

}  // namespace

TEST_CASE("infinite temperature") {
    const IsingParams params{1.0, 0.3, 0.0};
    const auto pq = ising_transition_probs(params);
    CHECK(pq.p == 0.5);
    CHECK(pq.q == 0.5);
    CHECK(ising_machine(params).num_states() == 1);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(IsingParams::at_temperature(1.0, 0.3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(IsingParams::at_temperature(1.0, 0.3, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(IsingParams::at_temperature(1.0, std::nan(""), 1.0), std::invalid_argument);
    CHECK(IsingParams::at_temperature(1.0, 0.3, 4.0).temperature() == 4.0);
}

TEST_CASE("zero field gives p = q") {
    for (double T : kTemperatures) {
        const auto pq = ising_transition_probs(IsingParams::at_temperature(1.0, 0.0, T));
        CHECK(pq.p == pq.q);
    }
}

TEST_CASE("extended-precision closed form") {
    const auto pq = ising_transition_probs(IsingParams::at_temperature(1.0, 0.3, 2.0));
    const auto ref = oracle::ising_closed_long(1.0L, 0.3L, 2.0L);
    CHECK(rel(pq.p, ref.p) < 1e-12);
    CHECK(rel(pq.q, ref.q) < 1e-12);

    for (double b : {-1.0, -0.3, 0.0, 0.3, 1.0})
        for (double J : {-1.0, 0.5, 1.0})
            for (double T : kTemperatures) {
                CAPTURE(J);
                CAPTURE(b);
                CAPTURE(T);
                const auto got = ising_transition_probs(IsingParams::at_temperature(J, b, T));
                const auto want = oracle::ising_closed_long(J, b, T);
                CHECK(rel(got.p, want.p) < 1e-12);
                CHECK(rel(got.q, want.q) < 1e-12);
                // Complements in absolute terms; the unstabilised 1 - p loses relative accuracy.
                CHECK(std::abs(got.p_complement - static_cast<double>(1.0L - want.p)) < 1e-15);
                CHECK(std::abs(got.q_complement - static_cast<double>(1.0L - want.q)) < 1e-15);
            }
}

TEST_CASE("rows sum to one exactly") {
    for (double b : {-0.3, 0.0, 0.3, 1.0})
        for (double T : kTemperatures) {
            const auto pq = ising_transition_probs(IsingParams::at_temperature(1.0, b, T));
            CHECK(pq.p + pq.p_complement == 1.0);
            CHECK(pq.q + pq.q_complement == 1.0);
        }
}

TEST_CASE("low temperature aligns with the field") {
    const auto pq = ising_transition_probs(IsingParams::at_temperature(1.0, 0.3, 0.05));
    CHECK(pq.p > 1.0 - 1e-9);
    CHECK(pq.q < 1e-4);
    CHECK(pq.p_complement > 0.0);

    const auto m = ising_machine(IsingParams::at_temperature(1.0, 0.3, 0.1));
    CHECK(statistical_complexity(m) < 1e-2);
}

TEST_CASE("very low temperature underflows to a range error") {
    CHECK_THROWS_AS(ising_transition_probs(IsingParams::at_temperature(1.0, 0.3, 0.001)), RangeError);
}

TEST_CASE("field-free chain carries one bit") {
    for (double T : {0.5, 1.0, 2.0, 10.0}) {
        const auto m = ising_machine(IsingParams::at_temperature(1.0, 0.0, T));
        REQUIRE(m.num_states() == 2);
        CHECK(statistical_complexity(m) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("spin-flip symmetry is exact") {
    for (double b : {0.1, 0.3, 0.8})
        for (double T : kTemperatures) {
            const auto up = ising_transition_probs(IsingParams::at_temperature(1.0, b, T));
            const auto down = ising_transition_probs(IsingParams::at_temperature(1.0, -b, T));
            CHECK(up.p == down.q);
            CHECK(up.q == down.p);
            CHECK(up.p_complement == down.q_complement);
            CHECK(up.q_complement == down.p_complement);

            const auto a = complexity_profile(ising_machine(IsingParams::at_temperature(1.0, b, T)), 1);
            const auto c = complexity_profile(ising_machine(IsingParams::at_temperature(1.0, -b, T)), 1);
            CHECK(a.h_mu == c.h_mu);
            CHECK(a.C_mu == c.C_mu);
            CHECK(*a.C_q == *c.C_q);
            CHECK(*a.E == *c.E);
        }
}

TEST_CASE("sweep validation and failure isolation") {
    CHECK_THROWS_AS(temperature_sweep(1.0, 0.3, 0.0, 5.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(temperature_sweep(1.0, 0.3, 2.0, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(temperature_sweep(1.0, 0.3, 0.05, 5.0, 1), std::invalid_argument);

    const auto sweep = temperature_sweep(1.0, 0.3, 0.001, 1.0, 5);
    REQUIRE(sweep.size() == 5);
    CHECK_FALSE(sweep.front().error.empty());
    CHECK_FALSE(sweep.front().profile.has_value());
    CHECK(sweep.back().profile.has_value());
    CHECK(sweep.back().T == 1.0);
}

TEST_CASE("sweep over [0.05, 5]") {
    const auto sweep = temperature_sweep(1.0, 0.3, 0.05, 5.0, 991);
    REQUIRE(sweep.size() == 991);
    CHECK(sweep[1].T - sweep[0].T == doctest::Approx(0.005));

    for (std::size_t i = 0; i < sweep.size(); ++i) {
        REQUIRE(sweep[i].profile);
        CHECK(sweep[i].sandwich_ok);
        if (i > 0) CHECK(sweep[i].profile->C_mu >= sweep[i - 1].profile->C_mu - 1e-9);
    }

    const auto cq = find_extremum(sweep, Measure::C_q);
    CHECK_FALSE(cq.boundary);
    CHECK(cq.T == doctest::Approx(1.63).epsilon(0.02 / 1.63));
    const auto e = find_extremum(sweep, Measure::E);
    CHECK_FALSE(e.boundary);
    CHECK(e.T == doctest::Approx(1.53).epsilon(0.02 / 1.53));
    const auto cmu = find_extremum(sweep, Measure::C_mu);
    CHECK(cmu.boundary);
    CHECK(cmu.index == sweep.size() - 1);

    SUBCASE("marked temperatures alpha < gamma < delta") {
        // delta at the top of the grid, gamma just past the C_q peak, alpha below the peak
        // with C_q(alpha) < C_q(delta).
        const std::size_t d = sweep.size() - 1;
        std::size_t g = cq.index + 20;
        std::optional<std::size_t> a;
        for (std::size_t i = 0; i < cq.index; ++i)
            if (*sweep[i].profile->C_q < *sweep[d].profile->C_q && sweep[i].profile->C_mu > 0.1) a = i;
        REQUIRE(a);
        const auto& pa = *sweep[*a].profile;
        const auto& pg = *sweep[g].profile;
        const auto& pd = *sweep[d].profile;
        CHECK(sweep[*a].T < sweep[g].T);
        CHECK(pa.C_mu < pg.C_mu);
        CHECK(pg.C_mu < pd.C_mu);
        CHECK(*pa.C_q < *pd.C_q);
        CHECK(*pd.C_q < *pg.C_q);
    }
}

TEST_CASE("high-temperature tail of 1 - C_mu") {
    std::vector<double> xs, ys;
    for (int k = 0; k <= 40; ++k) {
        const double T = 50.0 * std::pow(10.0, k / 40.0);
        const auto m = ising_machine(IsingParams::at_temperature(1.0, 0.3, T));
        xs.push_back(std::log(T));
        ys.push_back(std::log(1.0 - statistical_complexity(m)));
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope == doctest::Approx(-2.0).epsilon(0.025));
}

TEST_CASE("find_extremum needs three points") {
    const auto sweep = temperature_sweep(1.0, 0.3, 1.0, 2.0, 2);
    CHECK_THROWS_AS(find_extremum(sweep, Measure::C_q), std::invalid_argument);
}
