// Command-line front end: generate point sets, analyze them, run the
// verification battery, and sweep families into plot-ready CSV.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppclab/analysis.hpp"
#include "ppclab/pair_correlation.hpp"
#include "ppclab/points.hpp"
#include "ppclab/spectral.hpp"
#include "ppclab/verification.hpp"

namespace {

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") {
        return std::cout;
    }
    file.open(path);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    return file;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pair correlation, discrepancy and diaphony statistics on the torus"};
    app.require_subcommand(1);

    ppclab::AnalysisConfig config;
    std::string family;
    std::string input;
    std::string out_path;
    std::string format = "json";
    std::string ppc_out;
    std::string profile_out;
    std::size_t max_freq = 0;
    double delta = 0.0;
    std::size_t cap_n = 64;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "point-set file (one value per line)");
        cmd->add_option("--family", family,
                        "family spec, e.g. kronecker:N=100,alpha=0.618034");
        cmd->add_option("--K", max_freq, "spectral truncation (0 = default rule)");
        cmd->add_option("--delta", delta, "level for the local-statistic checks")
            ->check(CLI::Range(1e-9, 0.4999999));
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "output file ('-' = stdout)");
        cmd->add_option("--cap-n", cap_n, "difference-set cap for corollary1");
    };

    auto* gen = app.add_subcommand("generate", "write a generated point set");
    std::string gen_spec;
    gen->add_option("spec", gen_spec, "family spec")->required();
    gen->add_option("--out", out_path, "output file ('-' = stdout)");

    auto* ana = app.add_subcommand("analyze", "summary statistics for one set");
    add_common(ana);
    ana->add_option("--s-grid", config.s_grid, "s values for the PPC export");
    ana->add_option("--ppc-out", ppc_out, "write the PPC curve CSV here");
    ana->add_option("--profile-out", profile_out, "write the exponential-sum CSV here");

    auto* ver = app.add_subcommand("verify", "run every inequality/identity check");
    add_common(ver);

    auto* swp = app.add_subcommand("sweep", "one CSV row per family instance");
    std::string sweep_spec;
    swp->add_option("spec", sweep_spec, "family spec with '|' value lists")->required();
    add_common(swp);

    CLI11_PARSE(app, argc, argv);

    try {
        config.max_freq = max_freq;
        if (delta > 0.0) {
            config.delta = delta;
        }
        config.cap_n = cap_n;
        config.format =
            format == "csv" ? ppclab::OutputFormat::Csv : ppclab::OutputFormat::Json;
        if (!input.empty()) {
            config.input_file = input;
        }
        if (!family.empty()) {
            config.family = family;
        }

        std::ofstream file;
        if (gen->parsed()) {
            const ppclab::PointSet p = ppclab::make_family(gen_spec);
            ppclab::save_points(open_out(file, out_path), p);
            std::cerr << "N=" << p.size() << " label=" << p.label() << "\n";
            return 0;
        }

        if (ana->parsed()) {
            const ppclab::PointSet p = ppclab::load_input(config);
            const nlohmann::ordered_json report = ppclab::analyze(p, config);
            std::ostream& out = open_out(file, out_path);
            if (config.format == ppclab::OutputFormat::Csv) {
                out << ppclab::analyze_csv(report);
            } else {
                out << report.dump(2) << "\n";
            }
            if (!ppc_out.empty() && p.size() >= 2) {
                std::ofstream pf(ppc_out);
                if (!pf) {
                    throw std::runtime_error("cannot open '" + ppc_out + "'");
                }
                ppclab::write_ppc_csv(pf, ppclab::PPCCurve::from_points(p), config.s_grid);
            }
            if (!profile_out.empty()) {
                std::ofstream sf(profile_out);
                if (!sf) {
                    throw std::runtime_error("cannot open '" + profile_out + "'");
                }
                ppclab::write_profile_csv(
                    sf, ppclab::build_profile(p, config.effective_freq(p.size())));
            }
            return 0;
        }

        if (ver->parsed()) {
            const ppclab::PointSet p = ppclab::load_input(config);
            const auto records = ppclab::verify_suite(p, config);
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& rec : records) {
                arr.push_back(ppclab::to_json(rec));
            }
            open_out(file, out_path) << arr.dump(2) << "\n";
            return ppclab::verify_exit_code(records);
        }

        if (swp->parsed()) {
            open_out(file, out_path) << ppclab::sweep_csv(sweep_spec, config);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
