#include "simplicity/machine.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "simplicity/entropy.hpp"

namespace simplicity {

namespace {

std::optional<std::size_t> find_name(const std::vector<std::string>& names, std::string_view name) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
}

// Every state reachable from state 0 along positive edges, forward and reversed.
bool strongly_connected(const EpsilonMachine& m) {
    const std::size_t n = m.num_states();
    std::vector<std::vector<std::size_t>> forward(n), backward(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t x = 0; x < m.num_symbols(); ++x)
            if (const auto& e = m.transition(s, x); e && e->probability > 0.0) {
                forward[s].push_back(e->to);
                backward[e->to].push_back(s);
            }
    auto reaches_all = [n](const std::vector<std::vector<std::size_t>>& adj) {
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const std::size_t s = stack.back();
            stack.pop_back();
            for (std::size_t t : adj[s])
                if (!seen[t]) {
                    seen[t] = 1;
                    stack.push_back(t);
                }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    };
    return reaches_all(forward) && reaches_all(backward);
}

}  // namespace

EpsilonMachine::EpsilonMachine(std::vector<std::string> states, std::vector<std::string> alphabet)
    : states_(std::move(states)), alphabet_(std::move(alphabet)), table_(states_.size() * alphabet_.size()) {}

void EpsilonMachine::set_transition(std::size_t from, std::size_t symbol, std::size_t to, double probability) {
    if (from >= states_.size() || to >= states_.size() || symbol >= alphabet_.size())
        throw std::invalid_argument("transition index out of range");
    auto& slot = table_[from * alphabet_.size() + symbol];
    if (slot)
        throw std::invalid_argument("duplicate transition for (" + states_[from] + ", " + alphabet_[symbol] + ")");
    slot = Edge{to, probability};
}

std::optional<std::size_t> EpsilonMachine::state_index(std::string_view name) const {
    return find_name(states_, name);
}

std::optional<std::size_t> EpsilonMachine::symbol_index(std::string_view name) const {
    return find_name(alphabet_, name);
}

std::vector<double> EpsilonMachine::state_transition_matrix() const {
    const std::size_t n = num_states();
    std::vector<std::vector<double>> parts(n * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t x = 0; x < num_symbols(); ++x)
            if (const auto& e = transition(s, x)) parts[s * n + e->to].push_back(e->probability);
    std::vector<double> t(n * n, 0.0);
    for (std::size_t k = 0; k < n * n; ++k) t[k] = canonical_sum(std::move(parts[k]));
    return t;
}

std::vector<double> EpsilonMachine::symbol_distribution(std::size_t state) const {
    std::vector<double> d(num_symbols(), 0.0);
    for (std::size_t x = 0; x < num_symbols(); ++x)
        if (const auto& e = transition(state, x)) d[x] = e->probability;
    return d;
}

std::string_view to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::empty: return "empty";
        case Violation::Kind::probability: return "probability";
        case Violation::Kind::row_sum: return "row-sum";
        case Violation::Kind::unifilarity: return "unifilarity";
        case Violation::Kind::unknown_name: return "unknown-name";
        case Violation::Kind::not_strongly_connected: return "not strongly connected";
        case Violation::Kind::parse: return "parse";
    }
    return "unknown";
}

bool ValidationReport::has(Violation::Kind kind) const {
    return std::any_of(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate_machine(const EpsilonMachine& m) {
    ValidationReport report;
    if (m.num_states() == 0 || m.num_symbols() == 0) {
        report.violations.push_back({Violation::Kind::empty, "machine needs at least one state and one symbol"});
        return report;
    }
    for (std::size_t s = 0; s < m.num_states(); ++s) {
        std::vector<double> row;
        for (std::size_t x = 0; x < m.num_symbols(); ++x) {
            const auto& e = m.transition(s, x);
            if (!e) continue;
            if (!std::isfinite(e->probability) || e->probability < 0.0) {
                report.violations.push_back({Violation::Kind::probability, "state " + m.states()[s] + ", symbol " +
                                                                               m.alphabet()[x] +
                                                                               ": probability must be finite and >= 0"});
                continue;
            }
            row.push_back(e->probability);
        }
        const double sum = canonical_sum(std::move(row));
        if (std::abs(sum - 1.0) > kProbabilityTolerance) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "state " << m.states()[s] << ": outgoing probabilities sum to " << sum;
            report.violations.push_back({Violation::Kind::row_sum, msg.str()});
        }
    }
    if (!strongly_connected(m))
        report.violations.push_back(
            {Violation::Kind::not_strongly_connected, "positive-probability transition graph is not strongly connected"});
    return report;
}

InvalidMachine::InvalidMachine(ValidationReport r)
    : Error([&] {
          std::string msg = "invalid machine";
          for (const auto& v : r.violations) msg += "\n  " + std::string(to_string(v.kind)) + ": " + v.message;
          return msg;
      }()),
      report(std::move(r)) {}

EpsilonMachine parse_machine(std::string_view json_text) {
    using nlohmann::json;
    auto fail = [](Violation::Kind kind, std::string msg) {
        throw InvalidMachine(ValidationReport{{Violation{kind, std::move(msg)}}});
    };

    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(Violation::Kind::parse, e.what());
    }

    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    try {
        states = doc.at("states").get<std::vector<std::string>>();
        alphabet = doc.at("alphabet").get<std::vector<std::string>>();
        if (!doc.at("transitions").is_array()) fail(Violation::Kind::parse, "\"transitions\" must be an array");
    } catch (const json::exception& e) {
        fail(Violation::Kind::parse, e.what());
    }

    ValidationReport report;
    auto check_unique = [&](const std::vector<std::string>& names, const char* what) {
        std::vector<std::string> sorted = names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            report.violations.push_back({Violation::Kind::parse, std::string("duplicate name in ") + what});
    };
    check_unique(states, "states");
    check_unique(alphabet, "alphabet");

    EpsilonMachine m(states, alphabet);
    for (const auto& t : doc.at("transitions")) {
        std::string from, symbol, to;
        double p = 0.0;
        try {
            from = t.at("from").get<std::string>();
            symbol = t.at("symbol").get<std::string>();
            to = t.at("to").get<std::string>();
            p = t.at("p").get<double>();
        } catch (const json::exception& e) {
            report.violations.push_back({Violation::Kind::parse, e.what()});
            continue;
        }
        const auto fi = m.state_index(from);
        const auto ti = m.state_index(to);
        const auto xi = m.symbol_index(symbol);
        if (!fi || !ti || !xi) {
            report.violations.push_back(
                {Violation::Kind::unknown_name, "transition " + from + " -" + symbol + "-> " + to + " names an unknown state or symbol"});
            continue;
        }
        if (m.transition(*fi, *xi)) {
            report.violations.push_back(
                {Violation::Kind::unifilarity, "duplicate transition for (" + from + ", " + symbol + ")"});
            continue;
        }
        m.set_transition(*fi, *xi, *ti, p);
    }
    if (!report.ok()) throw InvalidMachine(std::move(report));

    report = validate_machine(m);
    if (!report.ok()) throw InvalidMachine(std::move(report));
    return m;
}

EpsilonMachine load_machine(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidMachine(ValidationReport{{Violation{Violation::Kind::parse, "cannot open " + path.string()}}});
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_machine(buf.str());
}

std::string machine_to_json(const EpsilonMachine& m) {
    nlohmann::json doc;
    doc["states"] = m.states();
    doc["alphabet"] = m.alphabet();
    doc["transitions"] = nlohmann::json::array();
    for (std::size_t s = 0; s < m.num_states(); ++s)
        for (std::size_t x = 0; x < m.num_symbols(); ++x)
            if (const auto& e = m.transition(s, x))
                doc["transitions"].push_back(
                    {{"from", m.states()[s]}, {"symbol", m.alphabet()[x]}, {"to", m.states()[e->to]}, {"p", e->probability}});
    return doc.dump(2);
}

StationaryDistribution stationary_distribution(const EpsilonMachine& m) {
    const std::size_t n = m.num_states();
    if (n == 0) throw std::invalid_argument("stationary_distribution: empty machine");

    // Incoming edges per target; lazy step pi' = (pi + pi T) / 2 keeps periodic
    // chains from oscillating without moving the fixed point.
    struct Incoming {
        std::size_t from;
        double weight;
    };
    std::vector<std::vector<Incoming>> incoming(n);
    const auto t = m.state_transition_matrix();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (t[i * n + j] != 0.0) incoming[j].push_back({i, t[i * n + j]});

    StationaryDistribution out;
    std::vector<double> pi(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    std::vector<double> terms;
    for (std::size_t iter = 1; iter <= kStationaryMaxIterations; ++iter) {
        for (std::size_t j = 0; j < n; ++j) {
            terms.clear();
            for (const auto& in : incoming[j]) terms.push_back(pi[in.from] * in.weight);
            next[j] = 0.5 * (pi[j] + canonical_sum(terms));
        }
        const double norm = canonical_sum(next);
        for (double& v : next) v /= norm;

        terms.clear();
        for (std::size_t j = 0; j < n; ++j) terms.push_back(std::abs(next[j] - pi[j]));
        const double change = canonical_sum(terms);
        pi.swap(next);
        if (change < kStationaryTolerance) {
            out.probs = std::move(pi);
            out.iterations = iter;
            return out;
        }
    }
    throw ConvergenceError("stationary_distribution: no convergence within iteration cap");
}

double entropy_rate(const EpsilonMachine& m, const StationaryDistribution& pi) {
    std::vector<double> terms;
    for (std::size_t s = 0; s < m.num_states(); ++s) {
        const auto row = m.symbol_distribution(s);
        terms.push_back(pi.probs[s] * shannon_entropy(row));
    }
    return canonical_sum(std::move(terms));
}

double entropy_rate(const EpsilonMachine& m) {
    return entropy_rate(m, stationary_distribution(m));
}

}  // namespace simplicity
