#include "qdirac/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qdirac/bag_model.hpp"
#include "qdirac/nonrel_limit.hpp"
#include "qdirac/verification.hpp"

namespace qdirac::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<Branch> selected_branches(const RunConfig& cfg) {
    if (cfg.branch) return {*cfg.branch};
    return {Branch::Minus, Branch::Plus};
}

PotentialStep potential(const RunConfig& cfg) { return {cfg.v0, cfg.w_abs, cfg.w_phase}; }

json parameters_json(const RunConfig& cfg) {
    json p;
    p["mass"] = cfg.mass;
    p["v0"] = cfg.v0;
    p["w0_abs"] = cfg.w_abs;
    p["w0_phase"] = cfg.w_phase;
    p["length"] = cfg.length;
    p["levels"] = cfg.levels;
    return p;
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_{out} {}

    void header(std::initializer_list<std::string_view> cols) {
        bool first = true;
        for (auto c : cols) {
            if (!first) out_ << ',';
            out_ << c;
            first = false;
        }
        out_ << '\n';
    }

    template <typename... Ts>
    void row(const Ts&... fields) {
        bool first = true;
        ((emit(fields, first)), ...);
        out_ << '\n';
    }

private:
    void emit(double x, bool& first) {
        sep(first);
        out_ << format_number(x);
    }
    void emit(int x, bool& first) {
        sep(first);
        out_ << x;
    }
    void emit(bool x, bool& first) {
        sep(first);
        out_ << (x ? "true" : "false");
    }
    void emit(std::string_view s, bool& first) {
        sep(first);
        out_ << s;
    }

    void sep(bool& first) {
        if (!first) out_ << ',';
        first = false;
    }

    std::ostream& out_;
};

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

std::optional<std::string> validate(const RunConfig& cfg) {
    if (!(cfg.mass >= 0.0)) return "--mass must be non-negative";
    if (!(cfg.w_abs >= 0.0)) return "--w0-abs must be non-negative";
    if (!(cfg.length > 0.0)) return "--length must be positive";
    if (cfg.levels < 1) return "--levels must be at least 1";
    if (cfg.level < 1) return "--level must be at least 1";
    if (cfg.grid < 2) return "--grid must be at least 2";
    if (!(cfg.e_step > 0.0)) return "--e-step must be positive";
    if (!std::isfinite(cfg.v0) || !std::isfinite(cfg.w_phase)) return "--v0 and --w0-phase must be finite";
    return std::nullopt;
}

int cmd_zones(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const double e_min = cfg.e_min.value_or(cfg.mass);
    const double e_max = cfg.e_max.value_or(cfg.mass + 4.0);
    if (!(e_min >= cfg.mass) || !(e_max >= e_min)) {
        err << "zones: energy range must satisfy mass <= e-min <= e-max\n";
        return kInvalidArguments;
    }
    const PotentialStep pot = potential(cfg);
    const EvanescentWindow win = evanescent_width(cfg.mass, cfg.v0, cfg.w_abs);
    const auto count = static_cast<long>(std::floor((e_max - e_min) / cfg.e_step + 1e-9)) + 1;

    if (cfg.format == Format::Csv) {
        CsvWriter csv{out};
        csv.header({"E", "Q2_minus", "Q2_plus", "zone_minus", "zone_plus", "E_low", "E_up", "delta_E"});
        for (long i = 0; i < count; ++i) {
            const double e = e_min + static_cast<double>(i) * cfg.e_step;
            const BranchKinematics k = kinematics(e, cfg.mass, pot);
            csv.row(e, k.Q2_minus, k.Q2_plus, to_string(k.zone_minus), to_string(k.zone_plus), win.e_low,
                    win.e_up, win.width);
        }
        return kSuccess;
    }

    json j;
    j["command"] = "zones";
    j["parameters"] = parameters_json(cfg);
    j["window"] = {{"E_low", win.e_low}, {"E_up", win.e_up}, {"delta_E", win.width}};
    json rows = json::array();
    for (long i = 0; i < count; ++i) {
        const double e = e_min + static_cast<double>(i) * cfg.e_step;
        const BranchKinematics k = kinematics(e, cfg.mass, pot);
        rows.push_back({{"E", e},
                        {"Q2_minus", k.Q2_minus},
                        {"Q2_plus", k.Q2_plus},
                        {"zone_minus", to_string(k.zone_minus)},
                        {"zone_plus", to_string(k.zone_plus)}});
    }
    j["rows"] = std::move(rows);
    write_json(out, j);
    return kSuccess;
}

int cmd_bag_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const PotentialStep pot = potential(cfg);
    std::vector<BagLevel> all;
    for (Branch b : selected_branches(cfg)) {
        auto lv = solve_spectrum(cfg.mass, pot, cfg.length, cfg.levels, b);
        all.insert(all.end(), lv.begin(), lv.end());
    }

    if (cfg.format == Format::Csv) {
        CsvWriter csv{out};
        csv.header({"branch", "n", "Q_n", "eff_momentum", "E_n", "theta", "norm_const", "A", "E_closed_form",
                    "sign_regime_flag"});
        for (const auto& l : all) {
            csv.row(to_string(l.branch), l.n, l.q_n, l.eff_momentum, l.energy, l.theta, l.norm_const,
                    l.amplitude, l.closed_form_energy, l.sign_regime_flag);
        }
        return kSuccess;
    }

    json j;
    j["command"] = "bag-spectrum";
    j["parameters"] = parameters_json(cfg);
    json rows = json::array();
    for (const auto& l : all) {
        rows.push_back({{"branch", to_string(l.branch)},
                        {"n", l.n},
                        {"Q_n", l.q_n},
                        {"eff_momentum", l.eff_momentum},
                        {"E_n", l.energy},
                        {"theta", l.theta},
                        {"norm_const", l.norm_const},
                        {"A", l.amplitude},
                        {"E_closed_form", l.closed_form_energy},
                        {"sign_regime_flag", l.sign_regime_flag}});
    }
    j["levels"] = std::move(rows);
    write_json(out, j);
    return kSuccess;
}

int cmd_density(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.level > cfg.levels) {
        err << "density: --level " << cfg.level << " exceeds the " << cfg.levels << " computed levels\n";
        return kInvalidArguments;
    }
    const PotentialStep pot = potential(cfg);
    const Branch branch = cfg.branch.value_or(Branch::Minus);
    const auto levels = solve_spectrum(cfg.mass, pot, cfg.length, cfg.levels, branch);
    const BagLevel& lv = levels[static_cast<std::size_t>(cfg.level - 1)];
    const StationaryWavefunction psi = stationary_wavefunction(lv, cfg.mass, pot, cfg.length, cfg.spin);
    const auto samples = density_profile(psi, cfg.grid);

    if (cfg.format == Format::Csv) {
        CsvWriter csv{out};
        csv.header({"z", "rho", "rho_complex_part", "rho_quaternionic_part"});
        for (const auto& s : samples) csv.row(s.z, s.rho, s.rho_complex, s.rho_quaternionic);
        return kSuccess;
    }

    json j;
    j["command"] = "density";
    j["parameters"] = parameters_json(cfg);
    j["level"] = {{"branch", to_string(branch)}, {"spin", to_string(cfg.spin)}, {"n", lv.n}, {"E_n", lv.energy}};
    json rows = json::array();
    for (const auto& s : samples) {
        rows.push_back({{"z", s.z},
                        {"rho", s.rho},
                        {"rho_complex_part", s.rho_complex},
                        {"rho_quaternionic_part", s.rho_quaternionic}});
    }
    j["samples"] = std::move(rows);
    write_json(out, j);
    return kSuccess;
}

int cmd_nr_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    std::vector<NonRelLevel> all;
    for (Branch b : selected_branches(cfg)) {
        auto lv = nr_quantize(cfg.length, cfg.levels, cfg.mass, cfg.w_abs, b);
        all.insert(all.end(), lv.begin(), lv.end());
    }

    if (cfg.format == Format::Csv) {
        CsvWriter csv{out};
        csv.header({"branch", "n", "Q_n", "eff_momentum", "E_n"});
        for (const auto& l : all) csv.row(to_string(l.branch), l.n, l.q_n, l.eff_momentum, l.energy);
        return kSuccess;
    }

    json j;
    j["command"] = "nr-spectrum";
    j["parameters"] = parameters_json(cfg);
    json rows = json::array();
    for (const auto& l : all) {
        rows.push_back({{"branch", to_string(l.branch)},
                        {"n", l.n},
                        {"Q_n", l.q_n},
                        {"eff_momentum", l.eff_momentum},
                        {"E_n", l.energy}});
    }
    j["levels"] = std::move(rows);
    write_json(out, j);
    return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const VerificationReport report = build_verification_report(cfg);
    out << report.json_text << '\n';
    return report.all_asserted_passed ? kSuccess : kVerificationFailure;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (auto why = validate(cfg)) {
        err << "invalid arguments: " << *why << '\n';
        return kInvalidArguments;
    }

    std::ostringstream buffer;
    int code = kSuccess;
    try {
        if (cfg.command == "zones") {
            code = cmd_zones(cfg, buffer, err);
        } else if (cfg.command == "bag-spectrum") {
            code = cmd_bag_spectrum(cfg, buffer, err);
        } else if (cfg.command == "density") {
            code = cmd_density(cfg, buffer, err);
        } else if (cfg.command == "nr-spectrum") {
            code = cmd_nr_spectrum(cfg, buffer, err);
        } else if (cfg.command == "verify") {
            code = cmd_verify(cfg, buffer, err);
        } else {
            err << "unknown command '" << cfg.command << "'\n";
            return kInvalidArguments;
        }
    } catch (const NoSolutionError& e) {
        err << "no solution: " << e.what() << '\n';
        return kNoSolution;
    } catch (const std::domain_error& e) {
        err << "invalid arguments: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const std::invalid_argument& e) {
        err << "invalid arguments: " << e.what() << '\n';
        return kInvalidArguments;
    }
    if (code == kInvalidArguments || code == kNoSolution) return code;

    if (cfg.output.empty() || cfg.output == "-") {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) {
            err << "cannot open output file '" << cfg.output << "'\n";
            return kInvalidArguments;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace qdirac::cli
