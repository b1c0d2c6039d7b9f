#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "qdirac/cli.hpp"

namespace qdirac::cli {

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quaternionic Dirac step and bag-model calculator"};
    app.require_subcommand(1, 1);

    RunConfig cfg;
    std::string branch;
    std::string spin = "up";
    std::string format = "csv";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--mass", cfg.mass, "particle mass m (natural units)");
        sub->add_option("--v0", cfg.v0, "time-component potential V0");
        sub->add_option("--w0-abs", cfg.w_abs, "modulus of the quaternionic potential |W0|");
        sub->add_option("--w0-phase", cfg.w_phase, "phase of W0 in radians");
        sub->add_option("--length", cfg.length, "well width L");
        sub->add_option("--levels", cfg.levels, "number of levels n_max");
        sub->add_option("--level", cfg.level, "level sampled by density");
        sub->add_option("--branch", branch, "plus or minus (default: both)")
            ->check(CLI::IsMember({"plus", "minus"}));
        sub->add_option("--spin", spin, "up or down")->check(CLI::IsMember({"up", "down"}));
        sub->add_option("--e-min", cfg.e_min, "zones: lowest energy (default m)");
        sub->add_option("--e-max", cfg.e_max, "zones: highest energy (default m + 4)");
        sub->add_option("--e-step", cfg.e_step, "zones: energy step");
        sub->add_option("--grid", cfg.grid, "density: number of sample points");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output,-o", cfg.output, "output file (default stdout)");
    };

    const std::map<std::string, std::string> commands{
        {"zones", "Q±² and zone labels over an energy grid"},
        {"bag-spectrum", "quantized bag levels"},
        {"density", "probability density of one bag level"},
        {"nr-spectrum", "non-relativistic infinite-well levels"},
        {"verify", "run every check and emit a JSON report"},
    };
    for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kInvalidArguments;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (!branch.empty()) cfg.branch = branch == "plus" ? Branch::Plus : Branch::Minus;
    cfg.spin = spin == "down" ? Spin::Down : Spin::Up;
    cfg.format = format == "json" ? Format::Json : Format::Csv;
    return run(cfg, out, err);
}

}  // namespace qdirac::cli
