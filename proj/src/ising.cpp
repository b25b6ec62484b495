#include "simplicity/ising.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "simplicity/classical.hpp"

namespace simplicity {

IsingParams IsingParams::at_temperature(double J, double b, double T) {
    if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("temperature must be finite and positive");
    if (!std::isfinite(J) || !std::isfinite(b)) throw std::invalid_argument("J and b must be finite");
    return {J, b, 1.0 / T};
}

namespace {

double log_add_exp(double x, double y) {
    if (x == -std::numeric_limits<double>::infinity()) return y;
    if (y == -std::numeric_limits<double>::infinity()) return x;
    const double hi = std::max(x, y);
    return hi + std::log1p(std::exp(-std::abs(x - y)));
}

}  // namespace

TransitionPair ising_transition_probs(const IsingParams& params) {
    if (!std::isfinite(params.J) || !std::isfinite(params.b) || !std::isfinite(params.beta) || params.beta < 0.0)
        throw std::invalid_argument("ising_transition_probs: parameters must be finite with beta >= 0");

    const double a = params.beta * params.J;
    const double x = std::abs(params.beta * params.b);
    constexpr double ln2 = std::numbers::ln2;
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();

    // log cosh x and log sinh x for x >= 0.
    const double log_cosh = x + std::log1p(std::exp(-2.0 * x)) - ln2;
    const double log_sinh = x > 0.0 ? x + std::log(-std::expm1(-2.0 * x)) - ln2 : neg_inf;

    const double log_r = -2.0 * a;                 // exp(-2 beta J)
    const double log_s = a + log_sinh;             // |exp(beta J) sinh(beta b)|
    const double log_root = 0.5 * log_add_exp(log_r, 2.0 * log_s);
    const double log_d = log_add_exp(a + log_cosh, log_root);

    // D - N+ = root - s and D - N- = root + s with s = exp(beta J) sinh(beta b);
    // the difference of the two positive terms is rewritten as r / (root + |s|).
    const double log_sum = log_add_exp(log_root, log_s);
    const double log_far = log_sum - log_d;           // complement on the field-opposed side
    const double log_near = log_r - log_sum - log_d;  // complement on the field-aligned side

    const double sign = params.b >= 0.0 ? 1.0 : -1.0;
    double p = std::exp(a + sign * x - log_d);
    double q = std::exp(a - sign * x - log_d);
    double p_bar = std::exp(params.b >= 0.0 ? log_near : log_far);
    double q_bar = std::exp(params.b >= 0.0 ? log_far : log_near);

    auto normalise = [](double& stay, double& flip) {
        const double total = stay + flip;
        stay /= total;
        flip /= total;
        if (flip < stay)
            stay = 1.0 - flip;
        else
            flip = 1.0 - stay;
    };
    normalise(p, p_bar);
    normalise(q, q_bar);

    for (double v : {p, q, p_bar, q_bar})
        if (!std::isfinite(v) || !(v > 0.0))
            throw RangeError("ising_transition_probs: probability underflow at T = " +
                             std::to_string(params.temperature()));
    return {p, q, p_bar, q_bar};
}

EpsilonMachine two_state_machine(const TransitionPair& pq) {
    EpsilonMachine m({"s1", "s2"}, {"up", "down"});
    m.set_transition(0, 0, 0, pq.p);
    m.set_transition(0, 1, 1, pq.p_complement);
    m.set_transition(1, 1, 1, pq.q);
    m.set_transition(1, 0, 0, pq.q_complement);
    return m;
}

EpsilonMachine two_state_machine(double p, double q) {
    return two_state_machine(TransitionPair{p, q, 1.0 - p, 1.0 - q});
}

EpsilonMachine ising_machine(const IsingParams& params) {
    return merge_iid_degenerate(two_state_machine(ising_transition_probs(params)));
}

std::vector<SweepPoint> temperature_sweep(double J, double b, double T_min, double T_max, std::size_t steps,
                                          std::size_t L) {
    if (!(T_min > 0.0) || !(T_max > T_min) || !std::isfinite(T_max))
        throw std::invalid_argument("temperature_sweep: need 0 < T_min < T_max");
    if (steps < 2) throw std::invalid_argument("temperature_sweep: need at least 2 steps");

    std::vector<SweepPoint> out(steps);
    const double dt = (T_max - T_min) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        auto& pt = out[i];
        pt.T = i + 1 == steps ? T_max : T_min + static_cast<double>(i) * dt;
        try {
            const auto params = IsingParams::at_temperature(J, b, pt.T);
            pt.probs = ising_transition_probs(params);
            pt.profile = complexity_profile(merge_iid_degenerate(two_state_machine(*pt.probs)), L);
            pt.sandwich_ok = satisfies_sandwich(*pt.profile);
        } catch (const std::exception& e) {
            pt.error = e.what();
        }
    }
    return out;
}

Extremum find_extremum(std::span<const SweepPoint> sweep, Measure field) {
    std::vector<std::size_t> valid;
    for (std::size_t i = 0; i < sweep.size(); ++i)
        if (sweep[i].profile) valid.push_back(i);
    if (valid.size() < 3) throw std::invalid_argument("find_extremum: need at least 3 evaluated points");

    auto value = [&](std::size_t k) { return measure_value(*sweep[valid[k]].profile, field); };
    std::size_t best = 0;
    for (std::size_t k = 1; k < valid.size(); ++k)
        if (value(k) > value(best)) best = k;

    Extremum ext;
    ext.index = valid[best];
    ext.T = sweep[valid[best]].T;
    ext.value = value(best);
    if (best == 0 || best + 1 == valid.size()) {
        ext.boundary = true;
        return ext;
    }

    const double x0 = sweep[valid[best - 1]].T, x1 = ext.T, x2 = sweep[valid[best + 1]].T;
    const double y0 = value(best - 1), y1 = ext.value, y2 = value(best + 1);
    // Divided differences of the interpolating parabola.
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double curvature = (d12 - d01) / (x2 - x0);
    if (curvature >= 0.0) return ext;  // flat or degenerate bracket
    const double vertex = 0.5 * (x0 + x1) - d01 / (2.0 * curvature);
    ext.T = vertex;
    ext.value = y1 + d01 * (vertex - x1) + curvature * (vertex - x0) * (vertex - x1);
    return ext;
}

}  // namespace simplicity
