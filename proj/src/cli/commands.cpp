#include "simplicity/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplicity/cli/report.hpp"
#include "simplicity/classical.hpp"
#include "simplicity/ising.hpp"

namespace simplicity::cli {

namespace {

// Usage problems detected after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string resolve_format(const RunConfig& config, const char* fallback) {
    return config.format.empty() ? fallback : config.format;
}

// Renders into a buffer so that a failed file open does not leave partial output.
int emit(const RunConfig& config, const std::string& text, std::ostream& out, std::ostream& err) {
    if (!config.out) {
        out << text;
        return kOk;
    }
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << config.out->string() << '\n';
        return kInvalidInput;
    }
    file << text;
    return kOk;
}

void require_single_source(const RunConfig& config) {
    const bool has_file = !config.machines.empty();
    const bool has_ising = config.ising.has_value();
    if (has_file == has_ising) throw UsageError("exactly one of --machine or --ising is required");
}

ComplexityProfile profile_of_file(const std::filesystem::path& path, std::size_t L) {
    return complexity_profile(merge_iid_degenerate(load_machine(path)), L);
}

void warn_sandwich(const ComplexityProfile& p, const std::string& where, std::ostream& err) {
    if (!satisfies_sandwich(p)) err << "warning: " << where << ": E <= C_q <= C_mu violated beyond tolerance\n";
}

nlohmann::json witness_member(const std::string& label, const ComplexityProfile& p) {
    return {{"label", label},
            {"h_mu", p.h_mu},
            {"C_mu", p.C_mu},
            {"C_q", p.C_q.value_or(std::nan(""))},
            {"E", p.E.value_or(std::nan(""))}};
}

}  // namespace

std::optional<IsingSource> parse_ising(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return std::nullopt;
    try {
        std::size_t used = 0;
        const std::string j_text = text.substr(0, comma);
        const std::string b_text = text.substr(comma + 1);
        const double J = std::stod(j_text, &used);
        if (used != j_text.size()) return std::nullopt;
        const double b = std::stod(b_text, &used);
        if (used != b_text.size()) return std::nullopt;
        if (!std::isfinite(J) || !std::isfinite(b)) return std::nullopt;
        return IsingSource{J, b};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
    require_single_source(config);
    if (config.machines.size() > 1) throw UsageError("analyze takes a single --machine");
    const std::string format = resolve_format(config, "json");
    if (format != "json" && format != "csv") throw UsageError("analyze supports --format json or csv");

    ComplexityProfile profile;
    if (config.ising) {
        if (!config.T) throw UsageError("analyze with --ising needs --T");
        const auto params = IsingParams::at_temperature(config.ising->J, config.ising->b, *config.T);
        profile = complexity_profile(ising_machine(params), config.L);
    } else {
        profile = profile_of_file(config.machines.front(), config.L);
    }
    warn_sandwich(profile, "profile", err);

    std::ostringstream text;
    if (format == "json")
        text << profile_json(profile) << '\n';
    else
        write_profile_csv(text, profile);
    return emit(config, text.str(), out, err);
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.ising) throw UsageError("sweep needs --ising J,b");
    if (!config.machines.empty()) throw UsageError("sweep does not take --machine");
    if (config.steps < 2) throw UsageError("--steps must be at least 2");
    const std::string format = resolve_format(config, "csv");
    if (format != "csv" && format != "json" && format != "svg") throw UsageError("unknown --format " + format);
    if (!(config.t_min > 0.0) || !(config.t_max > config.t_min) || !std::isfinite(config.t_max)) {
        err << "error: T range unsupported; need 0 < t-min < t-max\n";
        return kNumericRange;
    }

    const auto sweep = temperature_sweep(config.ising->J, config.ising->b, config.t_min, config.t_max, config.steps,
                                         config.L);
    bool failed = false;
    for (const auto& pt : sweep) {
        if (!pt.error.empty()) {
            failed = true;
            err << "error: T=" << format_number(pt.T) << ": " << pt.error << '\n';
        } else {
            warn_sandwich(*pt.profile, "T=" + format_number(pt.T), err);
        }
    }

    std::ostringstream text;
    if (format == "csv")
        write_sweep_csv(text, sweep);
    else if (format == "json")
        write_sweep_json(text, sweep);
    else
        write_sweep_svg(text, sweep);
    const int rc = emit(config, text.str(), out, err);
    if (rc != kOk) return rc;
    return failed ? kNumericRange : kOk;
}

int run_diagram(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.ising) throw UsageError("diagram needs --ising J,b");
    if (!config.machines.empty()) throw UsageError("diagram does not take --machine");
    if (config.resolution < kMinGridResolution)
        throw UsageError("--resolution must be at least " + std::to_string(kMinGridResolution));
    const std::string format = resolve_format(config, "csv");
    if (format != "csv" && format != "json" && format != "svg") throw UsageError("unknown --format " + format);
    if (!(config.t_max > 0.0) || !std::isfinite(config.t_max)) {
        err << "error: T range unsupported; need t-max > 0\n";
        return kNumericRange;
    }

    const auto grid = ambiguity_grid(config.ising->J, config.ising->b, config.t_max, config.resolution, config.mode,
                                     config.L, config.tol);
    std::ostringstream text;
    if (format == "csv")
        write_grid_csv(text, grid);
    else if (format == "json")
        write_grid_json(text, grid);
    else
        write_grid_svg(text, grid);
    return emit(config, text.str(), out, err);
}

int run_witness(const RunConfig& config, std::ostream& out, std::ostream& err) {
    require_single_source(config);
    const std::string format = resolve_format(config, "json");
    if (format != "json") throw UsageError("witness supports --format json only");

    std::vector<std::string> labels;
    std::vector<ComplexityProfile> family;
    if (config.ising) {
        if (config.steps < 2) throw UsageError("--steps must be at least 2");
        if (!(config.t_min > 0.0) || !(config.t_max > config.t_min)) {
            err << "error: T range unsupported; need 0 < t-min < t-max\n";
            return kNumericRange;
        }
        for (const auto& pt : temperature_sweep(config.ising->J, config.ising->b, config.t_min, config.t_max,
                                                config.steps, config.L)) {
            if (!pt.profile) {
                err << "error: T=" << format_number(pt.T) << ": " << pt.error << '\n';
                return kNumericRange;
            }
            labels.push_back("T=" + format_number(pt.T));
            family.push_back(*pt.profile);
        }
    } else {
        for (const auto& path : config.machines) {
            labels.push_back(path.string());
            family.push_back(profile_of_file(path, config.L));
        }
    }

    nlohmann::json doc;
    doc["F1"] = to_string(config.f1);
    doc["F2"] = to_string(config.f2);
    doc["family_size"] = family.size();
    const auto pair = find_ambiguous_pair(std::span<const ComplexityProfile>(family), config.f1, config.f2, config.tol);
    if (pair) {
        doc["witness"] = {{"s1", witness_member(labels[pair->first], family[pair->first])},
                          {"s2", witness_member(labels[pair->second], family[pair->second])}};
    } else {
        doc["witness"] = "none";
    }
    return emit(config, doc.dump(2) + "\n", out, err);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.subcommand == "analyze") return run_analyze(config, out, err);
        if (config.subcommand == "sweep") return run_sweep(config, out, err);
        if (config.subcommand == "diagram") return run_diagram(config, out, err);
        if (config.subcommand == "witness") return run_witness(config, out, err);
        throw UsageError("unknown subcommand '" + config.subcommand + "'");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidMachine& e) {
        err << "error: invalid machine\n";
        for (const auto& v : e.report.violations) err << "  " << to_string(v.kind) << ": " << v.message << '\n';
        return kInvalidInput;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return kNumericRange;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kNumericRange;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kNumericRange;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classical and quantum simplicity of unifilar hidden Markov models"};
    app.require_subcommand(1);

    RunConfig config;
    std::vector<std::string> machines;
    std::string ising_text;
    std::string mode_text = "plain";
    std::string out_path;
    std::string f1_text = "C_mu";
    std::string f2_text = "C_q";
    double T = 0.0;

    auto add_source = [&](CLI::App* sub) {
        sub->add_option("--machine", machines, "machine JSON file")->check(CLI::ExistingFile);
        sub->add_option("--ising", ising_text, "Ising coupling and field as J,b");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--L", config.L, "signal-state word length")->check(CLI::Range(0, 64));
        sub->add_option("--out", out_path, "output path (default: stdout)");
        sub->add_option("--format", config.format, "csv | json | svg")
            ->check(CLI::IsMember({"csv", "json", "svg"}));
        sub->add_option("--tol", config.tol, "tie tolerance for verdicts")->check(CLI::NonNegativeNumber);
    };
    auto add_range = [&](CLI::App* sub) {
        sub->add_option("--t-min", config.t_min, "lowest temperature");
        sub->add_option("--t-max", config.t_max, "highest temperature");
        sub->add_option("--steps", config.steps, "number of grid temperatures");
    };

    auto* analyze = app.add_subcommand("analyze", "profile of one machine or one Ising temperature");
    add_source(analyze);
    add_common(analyze);
    analyze->add_option("--T", T, "temperature for --ising");

    auto* sweep = app.add_subcommand("sweep", "temperature sweep of the Ising chain");
    add_source(sweep);
    add_common(sweep);
    add_range(sweep);

    auto* diagram = app.add_subcommand("diagram", "(T1, T2) ambiguity diagram");
    add_source(diagram);
    add_common(diagram);
    diagram->add_option("--t-max", config.t_max, "upper temperature of both axes");
    diagram->add_option("--resolution", config.resolution, "cells per axis");
    diagram->add_option("--mode", mode_text, "plain | certain")->check(CLI::IsMember({"plain", "certain"}));

    auto* witness = app.add_subcommand("witness", "search a family for an ambiguous pair");
    add_source(witness);
    add_common(witness);
    add_range(witness);
    witness->add_option("--f1", f1_text, "first measure (h_mu, C_mu, C_q, E)");
    witness->add_option("--f2", f2_text, "second measure (h_mu, C_mu, C_q, E)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    config.subcommand = app.get_subcommands().front()->get_name();
    for (const auto& m : machines) config.machines.emplace_back(m);
    if (!ising_text.empty()) {
        config.ising = parse_ising(ising_text);
        if (!config.ising) {
            err << "usage error: --ising expects J,b\n";
            return kUsage;
        }
    }
    if (analyze->count("--T") > 0) config.T = T;
    if (!out_path.empty()) config.out = out_path;
    config.mode = *parse_diagram_mode(mode_text);
    const auto f1 = parse_measure(f1_text);
    const auto f2 = parse_measure(f2_text);
    if (!f1 || !f2) {
        err << "usage error: unknown measure name\n";
        return kUsage;
    }
    config.f1 = *f1;
    config.f2 = *f2;
    return run(config, out, err);
}

}  // namespace simplicity::cli
