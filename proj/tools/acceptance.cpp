// Acceptance gate: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion plus explanatory notes.
//
// Known state: criterion 2 fails on the published chain-fermion Dicke pair
// (F 0.75, P 0.1429). No weight assignment on that chain topology reproduces
// the pair; the computed values (F 5/6, P 1/5) are adjudicated against the
// brute-force oracle and frozen in the catalog. The check still compares
// against the published numbers, so the line reports FAIL by design.
//
// Exit code: the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <entangle/entangle.hpp>

namespace {

using namespace entangle;

struct criterion_outcome {
    bool pass = true;
    double seconds = 0.0;
    std::vector<std::string> notes;

    void fail(const std::string& note) {
        pass = false;
        notes.push_back(note);
    }
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Post-selection probability with a fully vanishing state read as zero; the
// discrete-Fourier layout has structural zeros (bosons at n = 6).
double probability_or_zero(const scheme& s) {
    try {
        return post_select(s).probability;
    } catch (const vanishing_state_error&) {
        return 0.0;
    }
}

// ---------------------------------------------------------------------------
// Criteria 1 and 2: frozen catalog rows
// ---------------------------------------------------------------------------

struct row_spec {
    std::string name;
    scheme scm;
    std::optional<target_state> target;
    std::optional<double> f_expected;       // exact closed form, 1e-9
    std::optional<double> p_expected;       // exact closed form, 1e-9
    std::optional<double> f_published;      // four-decimal published value, 5e-5
    std::optional<double> p_published;      // four-decimal published value, 5e-5
    bool vanishes = false;
};

void check_rows(const std::vector<row_spec>& rows, criterion_outcome& out) {
    for (const row_spec& row : rows) {
        try {
            const post_selected_state st = post_select(row.scm);
            if (row.vanishes) {
                out.fail(row.name + ": expected a vanishing state, got probability " +
                         fmt(st.probability));
                continue;
            }
            const double f = row.target ? fidelity(st, *row.target) : 0.0;
            if (row.f_expected && !close(f, *row.f_expected, 1e-9))
                out.fail(row.name + ": fidelity " + fmt(f) + " != " + fmt(*row.f_expected));
            if (row.p_expected && !close(st.probability, *row.p_expected, 1e-9))
                out.fail(row.name + ": probability " + fmt(st.probability) +
                         " != " + fmt(*row.p_expected));
            if (row.f_published && !close(f, *row.f_published, 5e-5))
                out.fail(row.name + ": fidelity " + fmt(f) + " vs published " +
                         fmt(*row.f_published) + " (|diff| > 5e-5)");
            if (row.p_published && !close(st.probability, *row.p_published, 5e-5))
                out.fail(row.name + ": probability " + fmt(st.probability) + " vs published " +
                         fmt(*row.p_published) + " (|diff| > 5e-5)");
        } catch (const vanishing_state_error&) {
            if (!row.vanishes) out.fail(row.name + ": unexpected vanishing state");
        }
    }
}

criterion_outcome criterion_1() {
    criterion_outcome out;
    std::vector<row_spec> rows;
    for (statistics st : {statistics::boson, statistics::fermion}) {
        const bool boson = st == statistics::boson;
        const std::string tag = std::string(" ") + statistics_name(st);
        if (boson) {
            rows.push_back({"w-complete n=3" + tag, w_complete(3, st),
                            make_target(target_class::w, 3), 1.0, 2.0 / 9.0});
            rows.push_back({"w-complete n=4" + tag, w_complete(4, st),
                            make_target(target_class::w, 4), 1.0, 3.0 / 32.0});
        } else {
            rows.push_back({"w-complete n=3" + tag, w_complete(3, st), std::nullopt, std::nullopt,
                            std::nullopt, std::nullopt, std::nullopt, true});
            rows.push_back({"w-complete n=4" + tag, w_complete(4, st), std::nullopt, std::nullopt,
                            std::nullopt, std::nullopt, std::nullopt, true});
        }
        rows.push_back({"w-star n=3" + tag, w_star(3, st), make_target(target_class::w, 3), 1.0,
                        boson ? 1.0 / 5.0 : 1.0 / 3.0});
        rows.push_back({"w-star n=4" + tag, w_star(4, st), make_target(target_class::w, 4), 1.0,
                        boson ? 1.0 / 16.0 : 1.0 / 4.0});
        rows.push_back({"w-qft n=3" + tag, qft_scheme(3, w_spins(3), st),
                        make_target(target_class::w, 3), 1.0, boson ? 1.0 / 9.0 : 1.0 / 3.0});
        rows.push_back({"w-qft n=4" + tag, qft_scheme(4, w_spins(4), st),
                        make_target(target_class::w, 4), boson ? 0.0 : 1.0,
                        boson ? 1.0 / 16.0 : 1.0 / 4.0});
        rows.push_back({"w-chain4" + tag, w_chain4(st), make_target(target_class::w, 4),
                        3.0 / 4.0, boson ? 9.0 / 79.0 : 1.0 / 7.0, std::nullopt,
                        boson ? std::optional<double>(0.1139) : std::optional<double>(0.1429)});
    }
    check_rows(rows, out);
    return out;
}

criterion_outcome criterion_2() {
    criterion_outcome out;
    std::vector<row_spec> rows;
    for (statistics st : {statistics::boson, statistics::fermion}) {
        const bool boson = st == statistics::boson;
        const std::string tag = std::string(" ") + statistics_name(st);
        const auto d4 = make_target(target_class::dicke, 4);
        if (boson) {
            rows.push_back({"dicke-complete n=4" + tag, dicke_complete(4, st), d4, 1.0,
                            3.0 / 32.0, std::nullopt, 0.0938});
        } else {
            rows.push_back({"dicke-complete n=4" + tag, dicke_complete(4, st), std::nullopt,
                            std::nullopt, std::nullopt, std::nullopt, std::nullopt, true});
        }
        rows.push_back({"dicke-star4" + tag, dicke_star4(st), d4, 4.0 / 9.0,
                        boson ? 1.0 / 10.0 : 1.0 / 4.0, std::nullopt,
                        boson ? std::optional<double>(0.1) : std::nullopt});
        rows.push_back({"dicke-qft n=4" + tag, qft_scheme(4, alternating_spins(4), st), d4,
                        boson ? 0.0 : 2.0 / 3.0, boson ? 1.0 / 8.0 : 1.0 / 4.0});
        if (boson) {
            rows.push_back({"dicke-chain4" + tag, dicke_chain4(st), d4, 9.0 / 14.0, 21.0 / 169.0,
                            0.6429, 0.1243});
        } else {
            // Published pair for this row: F 0.75, P 0.1429. The comparison is
            // kept as stated even though no chain-topology weight assignment
            // reaches it (see the note printed below).
            rows.push_back({"dicke-chain4" + tag, dicke_chain4(st), d4, std::nullopt,
                            std::nullopt, 0.75, 0.1429});
        }
    }
    check_rows(rows, out);

    // Chain-boson probability: the two published decimals disagree (0.1234 in
    // the summary table, 0.1243 in the text); the brute-force oracle
    // adjudicates the value.
    const scheme chain_b = dicke_chain4(statistics::boson);
    const double p_gate = post_select(chain_b).probability;
    const double p_oracle = post_select_bruteforce(chain_b).probability;
    if (!close(p_gate, p_oracle, 1e-10))
        out.fail("dicke-chain4 boson: gate probability " + fmt(p_gate) +
                 " disagrees with oracle " + fmt(p_oracle));
    out.notes.push_back("dicke-chain4 boson probability: published 0.1234 vs 0.1243; oracle "
                        "gives 21/169 = " +
                        fmt(p_oracle) + ", matching 0.1243 within 5e-5 (resolved)");
    const scheme chain_f = dicke_chain4(statistics::fermion);
    const post_selected_state st_f = post_select(chain_f);
    out.notes.push_back(
        "dicke-chain4 fermion: computed F = " +
        fmt(fidelity(st_f, make_target(target_class::dicke, 4))) + ", P = " +
        fmt(st_f.probability) +
        " (oracle-confirmed); no +-1-signed uniform chain assignment reaches the published "
        "pair (0.75, 0.1429), so this comparison fails by design");
    return out;
}

// ---------------------------------------------------------------------------
// Criterion 3: closed-form scaling
// ---------------------------------------------------------------------------

criterion_outcome criterion_3() {
    criterion_outcome out;
    for (int n = 2; n <= 8; ++n) {
        double fact = 1.0;
        for (int k = 2; k < n; ++k) fact *= k;
        const double expected = fact / std::pow(n, n - 1);
        const double p = post_select(w_complete(n, statistics::boson)).probability;
        if (!close(p, expected, 1e-9))
            out.fail("w-complete boson n=" + std::to_string(n) + ": P " + fmt(p) +
                     " != (n-1)!/n^(n-1) = " + fmt(expected));
    }
    for (int n = 2; n <= 8; ++n) {
        const double p_star = post_select(w_star(n, statistics::fermion)).probability;
        const double p_qft =
            post_select(qft_scheme(n, w_spins(n), statistics::fermion)).probability;
        if (!close(p_star, 1.0 / n, 1e-9))
            out.fail("w-star fermion n=" + std::to_string(n) + ": P " + fmt(p_star) +
                     " != 1/n");
        if (!close(p_qft, 1.0 / n, 1e-9))
            out.fail("w-qft fermion n=" + std::to_string(n) + ": P " + fmt(p_qft) + " != 1/n");
    }
    for (int n = 2; n <= 10; ++n) {
        for (statistics st : {statistics::boson, statistics::fermion}) {
            const double p = post_select(ghz_scheme(n, st)).probability;
            if (!close(p, std::pow(2.0, 1 - n), 1e-9))
                out.fail("ghz " + std::string(statistics_name(st)) + " n=" + std::to_string(n) +
                         ": P " + fmt(p) + " != 2^(1-n)");
        }
    }
    for (int n : {6, 8, 10}) {
        for (statistics st : {statistics::boson, statistics::fermion}) {
            const double p = post_select(cluster_scheme(n, st)).probability;
            if (!close(p, 1.0 / (9.0 * std::pow(2.0, n - 4)), 1e-9))
                out.fail("cluster " + std::string(statistics_name(st)) +
                         " n=" + std::to_string(n) + ": P " + fmt(p) + " != 1/(9*2^(n-4))");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Criterion 4: oracle equivalence on random schemes
// ---------------------------------------------------------------------------

scheme random_scheme(std::mt19937_64& rng, int n, statistics stats, bool dense) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> coin(0, 1);
    scheme s;
    s.n = n;
    s.stats = stats;
    s.label = "random";
    s.qubits.assign(static_cast<std::size_t>(n), deformed_qubit{});
    for (int q = 0; q < n; ++q) {
        deformed_qubit& dq = s.qubits[static_cast<std::size_t>(q)];
        dq.source_id = q;
        for (int r = 0; r < n; ++r) {
            for (spin_label sp : {spin_label::up, spin_label::down}) {
                if (!dense && coin(rng) == 0) continue;
                dq.amps[{r, sp}] = amplitude(unit(rng), unit(rng));
            }
        }
        if (dq.amps.empty()) dq.amps[{q, spin_label::up}] = amplitude(1.0, 0.0);
        const double scale = 1.0 / std::sqrt(dq.norm_squared());
        for (auto& [slot, a] : dq.amps) a *= scale;
    }
    validate_scheme(s);
    return s;
}

criterion_outcome criterion_4() {
    criterion_outcome out;
    std::mt19937_64 rng(20260816ull);
    int compared = 0;
    for (int n : {2, 3, 4}) {
        for (statistics st : {statistics::boson, statistics::fermion}) {
            for (int trial = 0; trial < 200; ++trial) {
                const scheme s = random_scheme(rng, n, st, trial % 2 == 0);
                bool vanished_gate = false, vanished_oracle = false;
                post_selected_state gate, oracle;
                try {
                    gate = post_select(s);
                } catch (const vanishing_state_error&) {
                    vanished_gate = true;
                }
                try {
                    oracle = post_select_bruteforce(s);
                } catch (const vanishing_state_error&) {
                    vanished_oracle = true;
                }
                const std::string id = "n=" + std::to_string(n) + " " + statistics_name(st) +
                                       " trial " + std::to_string(trial);
                if (vanished_gate != vanished_oracle) {
                    out.fail(id + ": one pipeline vanished, the other did not");
                    continue;
                }
                if (vanished_gate) continue;
                ++compared;
                if (!close(gate.probability, oracle.probability, 1e-10))
                    out.fail(id + ": probability " + fmt(gate.probability) + " vs oracle " +
                             fmt(oracle.probability));
                align_global_phase(gate.amps, oracle.amps);
                for (const auto& [k, a] : gate.amps) {
                    const auto it = oracle.amps.find(k);
                    const amplitude b = it == oracle.amps.end() ? amplitude(0, 0) : it->second;
                    if (std::abs(a - b) > 1e-10) {
                        out.fail(id + ": amplitude mismatch at " + config_to_string(k, n));
                        break;
                    }
                }
                for (const auto& [k, b] : oracle.amps)
                    if (!gate.amps.count(k) && std::abs(b) > 1e-10) {
                        out.fail(id + ": oracle-only amplitude at " + config_to_string(k, n));
                        break;
                    }
            }
        }
    }
    out.notes.push_back(std::to_string(compared) + " non-vanishing schemes compared");
    return out;
}

// ---------------------------------------------------------------------------
// Criterion 5: kernel identities
// ---------------------------------------------------------------------------

criterion_outcome criterion_5() {
    criterion_outcome out;
    std::mt19937_64 rng(424242ull);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const int order = 2 + trial % 5;
        complex_matrix m(order);
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) m.at(i, j) = amplitude(unit(rng), unit(rng));
        for (statistics st : {statistics::boson, statistics::fermion}) {
            const amplitude fast = eta_det(m, st);
            const amplitude slow = eta_det_naive(m, st);
            if (std::abs(fast - slow) > 1e-10 * std::max(1.0, std::abs(slow))) {
                out.fail("eta_det mismatch on random matrix, order " + std::to_string(order) +
                         ", " + statistics_name(st));
                break;
            }
        }
    }
    auto matching_identity = [&](const scheme& s, const std::string& id) {
        const spin_config count = spin_config{1} << s.n;
        for (spin_config k = 0; k < count; ++k) {
            const auto sigma = config_spins(k, s.n);
            const amplitude total = matching_sum(perfect_matchings(s, sigma), s.stats);
            const amplitude direct = eta_det(weight_matrix(s, sigma), s.stats);
            if (std::abs(total - direct) > 1e-10) {
                out.fail(id + ": matching sum != eta_det at sigma " +
                         config_to_string(k, s.n));
                return;
            }
        }
    };
    for (const catalog_entry& entry : verification_table())
        matching_identity(entry.scm, entry.name);
    std::mt19937_64 rng2(99991ull);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 3;
        const scheme s = random_scheme(rng2, n, trial % 2 ? statistics::boson
                                                          : statistics::fermion,
                                       trial % 4 < 2);
        matching_identity(s, "random scheme " + std::to_string(trial));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Criteria 6 and 8: sampled trade-off curves and curve shape
// ---------------------------------------------------------------------------

struct curve_spec {
    std::string label;
    target_class cls;
    int n;
    statistics stats;
    std::uint64_t seed;
    double published_max;
};

struct curve_run {
    curve_spec spec;
    tradeoff_result result;
    double seconds = 0.0;
};

std::vector<curve_run> run_curves() {
    const std::vector<curve_spec> specs = {
        {"w n=3 boson", target_class::w, 3, statistics::boson, 42, 0.47},
        {"w n=4 boson", target_class::w, 4, statistics::boson, 42, 0.20},
        {"dicke n=4 boson", target_class::dicke, 4, statistics::boson, 42, 0.19},
        {"dicke n=6 boson", target_class::dicke, 6, statistics::boson, 42, 0.03},
        {"cluster n=4 fermion", target_class::cluster, 4, statistics::fermion, 7, 0.48},
        {"cluster n=6 fermion", target_class::cluster, 6, statistics::fermion, 7, 0.20},
        {"cluster n=8 fermion", target_class::cluster, 8, statistics::fermion, 7, 0.07},
    };
    std::vector<curve_run> runs;
    for (const curve_spec& spec : specs) {
        const auto started = std::chrono::steady_clock::now();
        const search_template tmpl = templates_for(spec.cls, spec.n, spec.stats);
        const target_state target = make_target(spec.cls, spec.n);
        const double threshold = genuine_threshold(spec.cls, spec.n);
        search_config cfg;
        cfg.samples = 1'000'000;
        cfg.seed = spec.seed;
        cfg.workers = 4;
        curve_run run{spec, sample_tradeoff(tmpl, target, threshold, cfg), 0.0};
        run.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        runs.push_back(std::move(run));
    }
    return runs;
}

criterion_outcome criterion_6(const std::vector<curve_run>& runs) {
    criterion_outcome out;
    if (runs.empty()) {
        out.fail("no trade-off curves were produced");
        return out;
    }
    for (const curve_run& run : runs) {
        if (run.result.empty()) {
            out.fail(run.spec.label + ": no sample cleared the genuine-entanglement threshold");
            continue;
        }
        const double got = run.result.points.front().max_probability;
        const double need = 0.92 * run.spec.published_max;
        if (got < need)
            out.fail(run.spec.label + ": max P " + fmt(got) + " < 92% of published " +
                     fmt(run.spec.published_max));
        else
            out.notes.push_back(run.spec.label + ": max P " + fmt(got) + " >= " + fmt(need) +
                                " (92% of published " + fmt(run.spec.published_max) + "), " +
                                fmt(run.seconds) + " s");
        if (run.seconds >= 600.0)
            out.fail(run.spec.label + ": curve took " + fmt(run.seconds) + " s (limit 600)");
    }

    // Determinism: repeating the first curve with the same seed must
    // reproduce every point bit for bit.
    const curve_spec& spec = runs.front().spec;
    const search_template tmpl = templates_for(spec.cls, spec.n, spec.stats);
    const target_state target = make_target(spec.cls, spec.n);
    search_config cfg;
    cfg.samples = 1'000'000;
    cfg.seed = spec.seed;
    cfg.workers = 4;
    const tradeoff_result repeat =
        sample_tradeoff(tmpl, target, genuine_threshold(spec.cls, spec.n), cfg);
    const tradeoff_result& first = runs.front().result;
    bool identical = repeat.points.size() == first.points.size();
    for (std::size_t i = 0; identical && i < repeat.points.size(); ++i) {
        identical = repeat.points[i].fidelity_bin_low == first.points[i].fidelity_bin_low &&
                    repeat.points[i].max_probability == first.points[i].max_probability &&
                    repeat.points[i].achieved_fidelity == first.points[i].achieved_fidelity &&
                    repeat.points[i].weights == first.points[i].weights;
    }
    if (!identical)
        out.fail(spec.label + ": repeated run with the same seed differed");
    else
        out.notes.push_back("repeated-seed determinism confirmed on " + spec.label);
    return out;
}

// ---------------------------------------------------------------------------
// Criterion 7: cluster stabilizer expectations
// ---------------------------------------------------------------------------

criterion_outcome criterion_7() {
    criterion_outcome out;
    const std::vector<std::vector<double>> expected_patterns = {
        {1, -1, 1, -1}, {1, 1, -1, 1, 1, -1}};
    int pattern_index = 0;
    for (int n : {4, 6}) {
        for (statistics st : {statistics::boson, statistics::fermion}) {
            const post_selected_state state = post_select(cluster_scheme(n, st));
            const std::vector<double> e = cluster_stabilizer_check(state);
            const std::vector<double>& want = expected_patterns[pattern_index];
            for (int i = 0; i < n; ++i) {
                if (std::abs(std::abs(e[static_cast<std::size_t>(i)]) - 1.0) > 1e-10)
                    out.fail("cluster n=" + std::to_string(n) + " " + statistics_name(st) +
                             ": |<K_" + std::to_string(i) + ">| = " +
                             fmt(std::abs(e[static_cast<std::size_t>(i)])) + " != 1");
                else if (std::abs(e[static_cast<std::size_t>(i)] -
                                  want[static_cast<std::size_t>(i)]) > 1e-10)
                    out.fail("cluster n=" + std::to_string(n) + " " + statistics_name(st) +
                             ": <K_" + std::to_string(i) + "> = " +
                             fmt(e[static_cast<std::size_t>(i)]) + " != " +
                             fmt(want[static_cast<std::size_t>(i)]));
            }
        }
        ++pattern_index;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Criterion 8: curve shape and statistics ordering
// ---------------------------------------------------------------------------

criterion_outcome criterion_8(const std::vector<curve_run>& runs) {
    criterion_outcome out;
    for (const curve_run& run : runs) {
        const auto& points = run.result.points;
        for (std::size_t i = 0; i + 1 < points.size(); ++i) {
            if (points[i].max_probability < points[i + 1].max_probability) {
                out.fail(run.spec.label + ": curve increases between bins " +
                         fmt(points[i].fidelity_bin_low) + " and " +
                         fmt(points[i + 1].fidelity_bin_low));
                break;
            }
        }
    }
    for (int n = 3; n <= 8; ++n) {
        const double star_b = probability_or_zero(w_star(n, statistics::boson));
        const double star_f = probability_or_zero(w_star(n, statistics::fermion));
        const double qft_b = probability_or_zero(qft_scheme(n, w_spins(n), statistics::boson));
        const double qft_f = probability_or_zero(qft_scheme(n, w_spins(n), statistics::fermion));
        if (!(star_f > star_b))
            out.fail("w-star n=" + std::to_string(n) + ": fermion P " + fmt(star_f) +
                     " does not exceed boson P " + fmt(star_b));
        if (!(qft_f > qft_b))
            out.fail("w-qft n=" + std::to_string(n) + ": fermion P " + fmt(qft_f) +
                     " does not exceed boson P " + fmt(qft_b));
    }
    return out;
}

}  // namespace

int main() {
    struct named_criterion {
        int id;
        std::string name;
        double time_limit_s;
        criterion_outcome outcome;
    };
    std::vector<named_criterion> results;

    std::vector<curve_run> curves;
    auto timed = [](auto&& fn) {
        const auto started = std::chrono::steady_clock::now();
        criterion_outcome out;
        try {
            out = fn();
        } catch (const std::exception& e) {
            out.fail(std::string("unexpected exception: ") + e.what());
        }
        out.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return out;
    };

    results.push_back({1, "W rows (complete/star/qft x {3,4} + chain-4), both statistics", 1.0,
                       timed(criterion_1)});
    results.push_back({2, "four-qubit Dicke rows, both statistics", 1.0, timed(criterion_2)});
    results.push_back({3, "closed-form probability scaling", 30.0, timed(criterion_3)});
    results.push_back({4, "oracle equivalence on 1200 random schemes", 60.0, timed(criterion_4)});
    results.push_back({5, "kernel and matching-sum identities", 0.0, timed(criterion_5)});
    try {
        curves = run_curves();
    } catch (const std::exception& e) {
        std::printf("curve sampling failed: %s\n", e.what());
    }
    results.push_back(
        {6, "trade-off maxima, 1e6 samples at fixed seeds", 0.0,
         timed([&] { return criterion_6(curves); })});
    results.push_back({7, "cluster stabilizer expectations, n = 4 and 6", 0.0,
                       timed(criterion_7)});
    results.push_back(
        {8, "curve monotonicity and fermion-over-boson star/qft ordering", 0.0,
         timed([&] { return criterion_8(curves); })});

    int failures = 0;
    std::string failed_ids;
    for (named_criterion& c : results) {
        if (c.time_limit_s > 0.0 && c.outcome.seconds > c.time_limit_s)
            c.outcome.fail("runtime " + fmt(c.outcome.seconds) + " s exceeds limit " +
                           fmt(c.time_limit_s) + " s");
        std::printf("criterion %d: %s: %s (%.2f s)\n", c.id, c.name.c_str(),
                    c.outcome.pass ? "PASS" : "FAIL", c.outcome.seconds);
        for (const std::string& note : c.outcome.notes)
            std::printf("    note: %s\n", note.c_str());
        if (!c.outcome.pass) {
            ++failures;
            if (!failed_ids.empty()) failed_ids += ", ";
            failed_ids += "criterion " + std::to_string(c.id);
        }
    }
    std::printf("summary: %d passed, %d failed%s%s%s\n",
                static_cast<int>(results.size()) - failures, failures,
                failures ? " (" : "", failed_ids.c_str(), failures ? ")" : "");
    return failures;
}
