// Command-line front end: simulate scheme files, emit catalog schemes,
// verify the catalog against its expected values, sample fidelity/probability
// trade-off curves, and list perfect matchings for a spin readout.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 vanishing post-selected state (a physical outcome, not a fault).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <entangle/entangle.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_vanishing = 3;

// All floating output uses 12 significant digits.
std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string fmt_complex(const entangle::amplitude& z) {
    return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

// State dump as JSON text with the 12-digit convention (the library's JSON
// writer keeps full precision; the CLI report is for reading).
void print_state_json(const entangle::post_selected_state& st) {
    std::cout << "{\n  \"n\": " << st.n << ",\n  \"amplitudes\": [\n";
    bool first = true;
    for (const auto& [config, amp] : st.amps) {
        if (!first) std::cout << ",\n";
        first = false;
        std::cout << "    {\"config\": \"" << entangle::config_to_string(config, st.n)
                  << "\", \"re\": " << fmt(amp.real()) << ", \"im\": " << fmt(amp.imag())
                  << "}";
    }
    std::cout << "\n  ],\n  \"n_g\": " << fmt(st.n_g) << ",\n  \"nu\": " << fmt(st.nu)
              << ",\n  \"probability\": " << fmt(st.probability) << "\n}\n";
}

int run_simulate(const std::string& path, const std::vector<std::string>& target_names) {
    const auto started = std::chrono::steady_clock::now();
    const entangle::scheme s = entangle::load_scheme(path);

    std::vector<std::pair<std::string, entangle::target_state>> targets;
    for (const std::string& name : target_names) {
        const entangle::target_class cls = entangle::parse_target_class(name);
        targets.emplace_back(name, entangle::make_target(cls, s.n));
    }

    std::cout << "scheme: " << s.label << "\n";
    std::cout << "statistics: " << entangle::statistics_name(s.stats) << "\n";
    std::cout << "n: " << s.n << "\n";
    try {
        const entangle::post_selected_state st = entangle::post_select(s);
        std::cout << "probability: " << fmt(st.probability) << "\n";
        for (const auto& [name, target] : targets)
            std::cout << "fidelity[" << name << "]: " << fmt(entangle::fidelity(st, target))
                      << "\n";
        std::cout << "state:\n";
        print_state_json(st);
        const std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - started;
        std::cout << "duration_ms: " << fmt(elapsed.count()) << "\n";
        return exit_ok;
    } catch (const entangle::vanishing_state_error&) {
        std::cout << "probability: 0\n";
        for (const auto& [name, target] : targets) {
            (void)target;
            std::cout << "fidelity[" << name << "]: undefined (vanishing state)\n";
        }
        std::cout << "state: vanishing (no sLOCC outcome with one particle per region)\n";
        return exit_vanishing;
    }
}

int run_catalog(const std::string& name, int n, const std::string& stats_name,
                const std::string& out_path) {
    const entangle::statistics stats = entangle::parse_statistics(stats_name);
    const entangle::scheme s = entangle::build_catalog_scheme(name, n, stats);
    entangle::save_scheme(s, out_path);
    std::cout << "wrote " << out_path << " (" << s.label << ", "
              << entangle::statistics_name(s.stats) << ", n=" << s.n << ")\n";
    return exit_ok;
}

struct verify_row {
    std::string name;
    std::string stats;
    std::string expected_f;
    std::string computed_f;
    std::string expected_p;
    std::string computed_p;
    std::string status;
    std::string note;
};

int run_verify(bool tamper) {
    const auto started = std::chrono::steady_clock::now();
    std::vector<entangle::catalog_entry> entries = entangle::verification_table();
    if (tamper && !entries.empty() && entries.front().expected_probability) {
        // Corrupts one expected value so the FAIL path is exercised end to end.
        *entries.front().expected_probability += 0.01;
    }

    std::vector<verify_row> rows;
    int failures = 0;
    for (const entangle::catalog_entry& entry : entries) {
        verify_row row;
        row.name = entry.name;
        row.stats = entangle::statistics_name(entry.scm.stats);
        row.note = entry.info;
        bool ok = true;
        try {
            const entangle::post_selected_state st = entangle::post_select(entry.scm);
            if (entry.expect_vanishing) {
                row.expected_p = "vanishes";
                row.expected_f = "-";
                row.computed_p = fmt(st.probability);
                row.computed_f = "-";
                ok = false;
            } else {
                const double expected_f = entry.expected_fidelity.value_or(0.0);
                const double expected_p = entry.expected_probability.value_or(0.0);
                const double f = entry.target ? entangle::fidelity(st, *entry.target) : 0.0;
                row.expected_f = fmt(expected_f);
                row.computed_f = fmt(f);
                row.expected_p = fmt(expected_p);
                row.computed_p = fmt(st.probability);
                ok = std::abs(f - expected_f) <= entry.tolerance &&
                     std::abs(st.probability - expected_p) <= entry.tolerance;
            }
        } catch (const entangle::vanishing_state_error&) {
            row.expected_f = "-";
            row.computed_f = "-";
            if (entry.expect_vanishing) {
                row.expected_p = "vanishes";
                row.computed_p = "vanishes";
                ok = true;
            } else {
                row.expected_p = fmt(entry.expected_probability.value_or(0.0));
                row.computed_p = "vanishes";
                ok = false;
            }
        }
        if (!ok) ++failures;
        row.status = !ok ? "FAIL" : (entry.info.empty() ? "PASS" : "INFO");
        rows.push_back(row);
    }

    std::printf("%-16s %-8s %-14s %-14s %-14s %-14s %s\n", "name", "stats", "expected_F",
                "computed_F", "expected_P", "computed_P", "status");
    for (const verify_row& row : rows) {
        std::printf("%-16s %-8s %-14s %-14s %-14s %-14s %s\n", row.name.c_str(),
                    row.stats.c_str(), row.expected_f.c_str(), row.computed_f.c_str(),
                    row.expected_p.c_str(), row.computed_p.c_str(), row.status.c_str());
        if (!row.note.empty()) std::printf("    note: %s\n", row.note.c_str());
    }
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - started;
    std::printf("%zu rows, %d failures, %s ms\n", rows.size(), failures,
                fmt(elapsed.count()).c_str());
    return failures == 0 ? exit_ok : exit_verify_failed;
}

int run_tradeoff(const std::string& class_name, int n, const std::string& stats_name,
                 double threshold, long long samples, std::uint64_t seed,
                 const std::string& out_path, int workers) {
    if (samples < 1) {
        std::cerr << "error: sample count must be at least 1\n";
        return exit_usage;
    }
    const entangle::statistics stats = entangle::parse_statistics(stats_name);
    const entangle::target_class cls = entangle::parse_target_class(class_name);
    const entangle::search_template tmpl = entangle::templates_for(cls, n, stats);
    const entangle::target_state target = entangle::make_target(cls, n);

    entangle::search_config cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.workers = workers;
    const entangle::tradeoff_result result =
        entangle::sample_tradeoff(tmpl, target, threshold, cfg);

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return exit_usage;
    }
    entangle::write_tradeoff_csv(out, tmpl, result, fmt);
    out.close();

    if (result.empty()) {
        std::cout << "warning: no sample reached fidelity >= " << fmt(threshold)
                  << "; wrote header-only CSV to " << out_path << "\n";
        return exit_ok;
    }
    const entangle::tradeoff_point& best = result.points.front();
    std::cout << "samples: " << samples << " (cleared threshold: " << result.cleared << ")\n";
    std::cout << "global max probability: " << fmt(best.max_probability) << "\n";
    std::cout << "fidelity bin: [" << fmt(best.fidelity_bin_low) << ", "
              << fmt(best.fidelity_bin_high) << ")\n";
    std::cout << "achieved fidelity: " << fmt(best.achieved_fidelity) << "\n";
    std::cout << "csv: " << out_path << "\n";
    return exit_ok;
}

int run_matchings(const std::string& path, const std::string& sigma) {
    const entangle::scheme s = entangle::load_scheme(path);
    const entangle::spin_config k = entangle::config_from_string(sigma);
    if (static_cast<int>(sigma.size()) != s.n) {
        throw std::invalid_argument("spin string has " + std::to_string(sigma.size()) +
                                    " characters but the scheme has n=" + std::to_string(s.n));
    }
    const std::vector<entangle::spin_label> readout = entangle::config_spins(k, s.n);
    const std::vector<entangle::matching> ms = entangle::perfect_matchings(s, readout);
    std::cout << "scheme: " << s.label << " (" << entangle::statistics_name(s.stats) << ")\n";
    std::cout << "sigma: " << sigma << "\n";
    entangle::amplitude total(0.0, 0.0);
    for (const entangle::matching& m : ms) {
        const int sign = s.stats == entangle::statistics::fermion
                             ? entangle::permutation_sign(m.qubit_at_region)
                             : 1;
        std::cout << "matching: qubits (";
        for (std::size_t i = 0; i < m.qubit_at_region.size(); ++i)
            std::cout << (i ? " " : "") << m.qubit_at_region[i];
        std::cout << ")  product " << fmt_complex(m.product) << "  sign "
                  << (sign > 0 ? "+1" : "-1") << "\n";
        total += static_cast<double>(sign) * m.product;
    }
    std::cout << "matchings: " << ms.size() << "\n";
    std::cout << "total: " << fmt_complex(total) << "\n";
    const entangle::amplitude check =
        entangle::eta_det(entangle::weight_matrix(s, readout), s.stats);
    std::cout << "weight-matrix eta_det: " << fmt_complex(check) << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator for entangled-state generation from identical particles"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "simulate a scheme file through post-selection");
    std::string sim_file;
    std::vector<std::string> sim_targets;
    sim->add_option("file", sim_file, "scheme JSON file")->required();
    sim->add_option("--target", sim_targets, "fidelity target class (repeatable)")
        ->check(CLI::IsMember({"w", "dicke", "ghz", "cluster", "bell"}));

    auto* cat = app.add_subcommand("catalog", "write a named catalog scheme to a file");
    std::string cat_name, cat_stats, cat_out;
    int cat_n = 0;
    cat->add_option("name", cat_name, "catalog scheme name")->required();
    cat->add_option("--n", cat_n, "number of qubits/regions")->required();
    cat->add_option("--stats", cat_stats, "particle statistics")
        ->required()
        ->check(CLI::IsMember({"boson", "fermion"}));
    cat->add_option("--out", cat_out, "output scheme file")->required();

    auto* ver = app.add_subcommand("verify", "run the catalog against its expected values");
    bool tamper = false;
    ver->add_flag("--tamper", tamper)->group("");  // test hook, hidden from help

    auto* tra = app.add_subcommand("tradeoff", "sample a fidelity/probability trade-off curve");
    std::string tra_class, tra_stats, tra_out;
    int tra_n = 0, tra_workers = 1;
    double tra_threshold = 0.0;
    long long tra_samples = 0;
    std::uint64_t tra_seed = 0;
    tra->add_option("--class", tra_class, "target class")
        ->required()
        ->check(CLI::IsMember({"w", "dicke", "ghz", "cluster", "bell"}));
    tra->add_option("--n", tra_n, "number of qubits/regions")->required();
    tra->add_option("--stats", tra_stats, "particle statistics")
        ->required()
        ->check(CLI::IsMember({"boson", "fermion"}));
    tra->add_option("--threshold", tra_threshold, "fidelity threshold")->required();
    tra->add_option("--samples", tra_samples, "number of random samples")->required();
    tra->add_option("--seed", tra_seed, "random seed")->required();
    tra->add_option("--out", tra_out, "output CSV file")->required();
    tra->add_option("--workers", tra_workers, "worker threads (result is worker-independent)")
        ->default_val(1);

    auto* mat = app.add_subcommand("matchings", "list perfect matchings for a spin readout");
    std::string mat_file, mat_sigma;
    mat->add_option("file", mat_file, "scheme JSON file")->required();
    mat->add_option("--sigma", mat_sigma, "spin readout, 'u'/'d' per region, region 0 first")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (sim->parsed()) return run_simulate(sim_file, sim_targets);
        if (cat->parsed()) return run_catalog(cat_name, cat_n, cat_stats, cat_out);
        if (ver->parsed()) return run_verify(tamper);
        if (tra->parsed())
            return run_tradeoff(tra_class, tra_n, tra_stats, tra_threshold, tra_samples,
                                tra_seed, tra_out, tra_workers);
        if (mat->parsed()) return run_matchings(mat_file, mat_sigma);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
