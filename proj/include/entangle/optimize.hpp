#pragma once

// Randomized search over deformation weights. A search template fixes which
// (qubit, region, spin) slots carry free weights (optionally with a frozen
// unit phase so only the magnitude is sampled) and which slots are pinned to
// literal amplitudes. Sampling draws every free weight uniformly on its
// domain, renormalizes each qubit, evaluates fidelity against a target and
// the post-selection probability, and keeps per-fidelity-bin records.
//
// A bin's reported maximum is the best probability among samples whose
// fidelity is at least the bin's lower edge (the trade-off frontier), so
// the curve is weakly non-increasing toward F = 1 by construction; raw
// per-bin maxima fluctuate between adjacent bins under random sampling.
//
// Random numbers are drawn from counter-based per-sample streams derived
// from (seed, sample index), so results are bit-identical for a given seed
// no matter how samples are partitioned across workers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>
#include <tuple>

#include "catalog.hpp"

namespace entangle {

enum class weight_domain { nonnegative_real, complex_full };

struct weight_slot {
    int qubit = 0;
    int region = 0;
    spin_label spin = spin_label::up;
    amplitude phase{1.0, 0.0};  // frozen unit factor multiplying the sampled magnitude

    friend bool operator==(const weight_slot& a, const weight_slot& b) {
        return a.qubit == b.qubit && a.region == b.region && a.spin == b.spin &&
               a.phase == b.phase;
    }
};

struct search_template {
    int n = 0;
    statistics stats = statistics::boson;
    weight_domain domain = weight_domain::nonnegative_real;
    std::vector<weight_slot> free_slots;
    std::vector<std::pair<weight_slot, amplitude>> fixed_edges;
};

struct anneal_config {
    int steps = 20000;
    double initial_temperature = 0.02;
    double cooling = 0.9995;
    double step_size = 0.08;
};

struct search_config {
    long long samples = 0;
    std::uint64_t seed = 0;
    double bin_width = 0.01;
    int workers = 1;
    std::optional<anneal_config> anneal;
};

struct tradeoff_point {
    double fidelity_bin_low = 0.0;
    double fidelity_bin_high = 0.0;
    double max_probability = 0.0;
    double achieved_fidelity = 0.0;          // fidelity of the achieving sample
    std::vector<amplitude> weights;          // free-slot weights after normalization
};

struct tradeoff_result {
    std::vector<tradeoff_point> points;
    long long cleared = 0;  // samples with fidelity >= threshold
    bool empty() const { return points.empty(); }
};

struct optimum {
    double probability = 0.0;
    double fidelity = 0.0;
    std::vector<amplitude> weights;
};

// ---------------------------------------------------------------------------
// Counter-based random streams
// ---------------------------------------------------------------------------

namespace detail {

constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// SplitMix-style generator whose initial state depends only on (seed,
// stream); stream ids index samples, so any worker can reproduce any
// sample's draws.
class rng_stream {
public:
    rng_stream(std::uint64_t seed, std::uint64_t stream)
        : state_(mix64(seed ^ mix64(stream * golden_gamma + 0xbf58476d1ce4e5b9ull))) {}

    std::uint64_t next() {
        state_ += golden_gamma;
        return mix64(state_);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Template evaluation engine
// ---------------------------------------------------------------------------

namespace detail {

// Precomputes, per spin readout with at least one perfect matching, the
// matching list as (sign, slot indices); evaluation is then a handful of
// products per sample instead of a fresh determinant expansion.
class template_engine {
public:
    template_engine(const search_template& t, const target_state& target) : t_(t) {
        if (t.n < 2) throw std::invalid_argument("search template needs n >= 2");
        if (t.n > 12) throw order_too_large_error("search templates support n <= 12");
        if (target.n != t.n)
            throw dimension_mismatch_error("template has n=" + std::to_string(t.n) +
                                           " but target has n=" + std::to_string(target.n));
        n_free_ = static_cast<int>(t.free_slots.size());
        std::map<std::tuple<int, int, int>, int> slot_index;
        auto add_slot = [&](const weight_slot& s) {
            if (s.qubit < 0 || s.qubit >= t.n || s.region < 0 || s.region >= t.n)
                throw std::out_of_range("template slot outside the scheme");
            auto key = std::make_tuple(s.qubit, s.region, static_cast<int>(s.spin));
            if (slot_index.count(key))
                throw std::invalid_argument("template lists a (qubit, region, spin) slot twice");
            const int idx = static_cast<int>(slots_.size());
            slot_index[key] = idx;
            slots_.push_back(s);
            return idx;
        };
        for (const weight_slot& s : t.free_slots) add_slot(s);
        fixed_values_.clear();
        for (const auto& [slot, value] : t.fixed_edges) {
            add_slot(slot);
            fixed_values_.push_back(value);
        }
        slots_by_qubit_.assign(static_cast<std::size_t>(t.n), {});
        for (int i = 0; i < static_cast<int>(slots_.size()); ++i)
            slots_by_qubit_[static_cast<std::size_t>(slots_[i].qubit)].push_back(i);
        for (int q = 0; q < t.n; ++q)
            if (slots_by_qubit_[static_cast<std::size_t>(q)].empty())
                throw std::invalid_argument("template leaves qubit " + std::to_string(q) +
                                            " without any slot");

        // Enumerate matchings per readout over the template's slots.
        const spin_config count = spin_config{1} << t.n;
        for (spin_config k = 0; k < count; ++k) {
            const int config_index = static_cast<int>(configs_.size());
            bool any = false;
            std::vector<int> chosen(static_cast<std::size_t>(t.n), -1);
            std::vector<bool> used(static_cast<std::size_t>(t.n), false);
            auto extend = [&](auto&& self, int region) -> void {
                if (region == t.n) {
                    std::vector<int> perm(static_cast<std::size_t>(t.n));
                    std::vector<int> slot_list(static_cast<std::size_t>(t.n));
                    for (int r = 0; r < t.n; ++r) {
                        slot_list[r] = chosen[r];
                        perm[r] = slots_[static_cast<std::size_t>(chosen[r])].qubit;
                    }
                    const double sign = (t_.stats == statistics::fermion &&
                                         permutation_sign(perm) < 0)
                                            ? -1.0
                                            : 1.0;
                    matchings_.push_back({config_index, sign, std::move(slot_list)});
                    any = true;
                    return;
                }
                const spin_label want =
                    ((k >> region) & 1u) ? spin_label::down : spin_label::up;
                for (int q = 0; q < t.n; ++q) {
                    if (used[q]) continue;
                    auto it = slot_index.find(std::make_tuple(q, region, static_cast<int>(want)));
                    if (it == slot_index.end()) continue;
                    used[q] = true;
                    chosen[region] = it->second;
                    self(self, region + 1);
                    chosen[region] = -1;
                    used[q] = false;
                }
            };
            extend(extend, 0);
            if (any) {
                configs_.push_back(k);
                auto it = target.amps.find(k);
                target_on_support_.push_back(it == target.amps.end() ? amplitude(0.0, 0.0)
                                                                     : it->second);
            }
        }
    }

    int free_count() const { return n_free_; }
    const std::vector<weight_slot>& slots() const { return slots_; }
    const search_template& tmpl() const { return t_; }

    struct evaluation {
        double fidelity = 0.0;
        double probability = 0.0;
        bool feasible = false;  // normalizable qubits, nonvanishing output, positive Gram
    };

    // Reusable evaluation buffers. Each thread owns its own scratch; the
    // engine itself stays immutable after construction and can be shared.
    struct scratch {
        std::vector<amplitude> values;
        std::vector<amplitude> s;
    };

    // Normalizes the free weights in place (per qubit, together with the
    // fixed edges) and evaluates fidelity; the probability is computed only
    // when want_probability or the fidelity clears skip_probability_below.
    evaluation evaluate(std::vector<amplitude>& free_values, double skip_probability_below,
                        bool want_probability, scratch& sc) const {
        evaluation ev;
        auto& values = sc.values;
        auto& s = sc.s;
        values.assign(slots_.size(), amplitude(0.0, 0.0));
        for (int i = 0; i < n_free_; ++i) values[static_cast<std::size_t>(i)] = free_values[i];
        for (std::size_t i = 0; i < fixed_values_.size(); ++i)
            values[static_cast<std::size_t>(n_free_) + i] = fixed_values_[i];
        for (int q = 0; q < t_.n; ++q) {
            double norm2 = 0.0;
            for (int i : slots_by_qubit_[static_cast<std::size_t>(q)])
                norm2 += std::norm(values[static_cast<std::size_t>(i)]);
            if (norm2 < 1e-24) return ev;
            const double scale = 1.0 / std::sqrt(norm2);
            for (int i : slots_by_qubit_[static_cast<std::size_t>(q)])
                values[static_cast<std::size_t>(i)] *= scale;
        }
        for (int i = 0; i < n_free_; ++i) free_values[i] = values[static_cast<std::size_t>(i)];

        s.assign(configs_.size(), amplitude(0.0, 0.0));
        for (const prepared_matching& m : matchings_) {
            amplitude product(m.sign, 0.0);
            for (int i : m.slot_list) product *= values[static_cast<std::size_t>(i)];
            s[static_cast<std::size_t>(m.config_index)] += product;
        }
        double n_g = 0.0;
        amplitude overlap(0.0, 0.0);
        for (std::size_t c = 0; c < s.size(); ++c) {
            n_g += std::norm(s[c]);
            overlap += std::conj(target_on_support_[c]) * s[c];
        }
        if (n_g < 1e-24) return ev;
        ev.fidelity = std::norm(overlap) / n_g;
        if (!want_probability && ev.fidelity < skip_probability_below) {
            ev.feasible = true;
            ev.probability = -1.0;
            return ev;
        }

        complex_matrix g(t_.n);
        for (int qi = 0; qi < t_.n; ++qi) {
            for (int qj = qi; qj < t_.n; ++qj) {
                amplitude overlap_ij(0.0, 0.0);
                for (int a : slots_by_qubit_[static_cast<std::size_t>(qi)]) {
                    for (int b : slots_by_qubit_[static_cast<std::size_t>(qj)]) {
                        if (slots_[static_cast<std::size_t>(a)].region ==
                                slots_[static_cast<std::size_t>(b)].region &&
                            slots_[static_cast<std::size_t>(a)].spin ==
                                slots_[static_cast<std::size_t>(b)].spin)
                            overlap_ij += std::conj(values[static_cast<std::size_t>(a)]) *
                                          values[static_cast<std::size_t>(b)];
                    }
                }
                g.at(qi, qj) = overlap_ij;
                g.at(qj, qi) = std::conj(overlap_ij);
            }
        }
        const amplitude nu = eta_det(g, t_.stats);
        if (std::abs(nu.imag()) > 1e-9 || nu.real() <= 1e-12) return ev;
        ev.probability = n_g / nu.real();
        ev.feasible = true;
        return ev;
    }

    evaluation evaluate(std::vector<amplitude>& free_values, double skip_probability_below,
                        bool want_probability) const {
        scratch sc;
        return evaluate(free_values, skip_probability_below, want_probability, sc);
    }

private:
    struct prepared_matching {
        int config_index;
        double sign;
        std::vector<int> slot_list;
    };

    search_template t_;
    int n_free_ = 0;
    std::vector<weight_slot> slots_;        // free slots first, then fixed
    std::vector<amplitude> fixed_values_;
    std::vector<std::vector<int>> slots_by_qubit_;
    std::vector<spin_config> configs_;
    std::vector<amplitude> target_on_support_;
    std::vector<prepared_matching> matchings_;
};

inline void draw_free_weights(const search_template& t, rng_stream& rng,
                              std::vector<amplitude>& out) {
    out.resize(t.free_slots.size());
    for (std::size_t i = 0; i < t.free_slots.size(); ++i) {
        if (t.domain == weight_domain::nonnegative_real) {
            out[i] = t.free_slots[i].phase * rng.uniform();
        } else {
            out[i] = amplitude(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
        }
    }
}

}  // namespace detail

// Builds a scheme from a template and concrete free-slot weights (per-qubit
// normalization applied). With zero free slots this reproduces the fixed
// edges unchanged.
inline scheme instantiate(const search_template& t, const std::vector<amplitude>& free_weights) {
    if (free_weights.size() != t.free_slots.size())
        throw dimension_mismatch_error("expected " + std::to_string(t.free_slots.size()) +
                                       " free weights, got " +
                                       std::to_string(free_weights.size()));
    scheme s;
    s.n = t.n;
    s.stats = t.stats;
    s.label = "template-instance";
    s.qubits.assign(static_cast<std::size_t>(t.n), deformed_qubit{});
    for (int q = 0; q < t.n; ++q) s.qubits[static_cast<std::size_t>(q)].source_id = q;
    for (std::size_t i = 0; i < t.free_slots.size(); ++i) {
        const weight_slot& ws = t.free_slots[i];
        s.qubits[static_cast<std::size_t>(ws.qubit)].amps[{ws.region, ws.spin}] +=
            free_weights[i];
    }
    for (const auto& [slot, value] : t.fixed_edges)
        s.qubits[static_cast<std::size_t>(slot.qubit)].amps[{slot.region, slot.spin}] += value;
    for (auto& q : s.qubits) {
        const double norm2 = q.norm_squared();
        if (norm2 < 1e-24)
            throw std::invalid_argument("instantiated qubit has zero norm");
        const double scale = 1.0 / std::sqrt(norm2);
        for (auto& [slot, a] : q.amps) a *= scale;
    }
    validate_scheme(s);
    return s;
}

// Uniform random search recording the trade-off frontier between fidelity
// and post-selection probability. Deterministic for a given seed and
// independent of the worker count. An empty result (no sample at or above
// the threshold) is reported through the result, not as an error.
inline tradeoff_result sample_tradeoff(const search_template& t, const target_state& target,
                                       double threshold, const search_config& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("sample count must be at least 1");
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw std::invalid_argument("fidelity threshold must lie in [0, 1]");
    if (!(cfg.bin_width > 0.0)) throw std::invalid_argument("bin width must be positive");
    const detail::template_engine engine(t, target);

    const int nbins =
        std::max(1, static_cast<int>(std::ceil((1.0 - threshold) / cfg.bin_width - 1e-12)));
    struct bin_record {
        double probability = -1.0;
        double fidelity = 0.0;
        long long sample_index = -1;
        std::vector<amplitude> weights;
    };

    const int workers = std::max(1, cfg.workers);
    std::vector<std::vector<bin_record>> partials(
        static_cast<std::size_t>(workers),
        std::vector<bin_record>(static_cast<std::size_t>(nbins)));
    std::vector<long long> cleared(static_cast<std::size_t>(workers), 0);

    auto run_range = [&](int worker, long long begin, long long end) {
        std::vector<bin_record>& bins = partials[static_cast<std::size_t>(worker)];
        std::vector<amplitude> weights;
        detail::template_engine::scratch sc;
        for (long long i = begin; i < end; ++i) {
            detail::rng_stream rng(cfg.seed, static_cast<std::uint64_t>(i));
            detail::draw_free_weights(t, rng, weights);
            auto ev = engine.evaluate(weights, threshold, false, sc);
            if (!ev.feasible || ev.fidelity < threshold) continue;
            if (ev.probability < 0.0) continue;  // degenerate Gram under the threshold check
            ++cleared[static_cast<std::size_t>(worker)];
            int bin = static_cast<int>((ev.fidelity - threshold) / cfg.bin_width);
            bin = std::clamp(bin, 0, nbins - 1);
            bin_record& rec = bins[static_cast<std::size_t>(bin)];
            if (ev.probability > rec.probability ||
                (ev.probability == rec.probability && rec.sample_index >= 0 &&
                 i < rec.sample_index)) {
                rec.probability = ev.probability;
                rec.fidelity = ev.fidelity;
                rec.sample_index = i;
                rec.weights = weights;
            }
        }
    };

    if (workers == 1) {
        run_range(0, 0, cfg.samples);
    } else {
        std::vector<std::thread> pool;
        const long long chunk = (cfg.samples + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long long begin = static_cast<long long>(w) * chunk;
            const long long end = std::min(cfg.samples, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run_range, w, begin, end);
        }
        for (std::thread& th : pool) th.join();
    }

    // Merge workers; ties break toward the lower sample index so the outcome
    // never depends on the partitioning.
    std::vector<bin_record> bins(static_cast<std::size_t>(nbins));
    for (const auto& part : partials) {
        for (int b = 0; b < nbins; ++b) {
            const bin_record& rec = part[static_cast<std::size_t>(b)];
            if (rec.sample_index < 0) continue;
            bin_record& dst = bins[static_cast<std::size_t>(b)];
            if (rec.probability > dst.probability ||
                (rec.probability == dst.probability && dst.sample_index >= 0 &&
                 rec.sample_index < dst.sample_index)) {
                dst = rec;
            }
        }
    }

    tradeoff_result result;
    for (long long c : cleared) result.cleared += c;

    // Frontier pass: each bin reports the best probability achieved at its
    // fidelity level or above.
    int top = -1;
    for (int b = nbins - 1; b >= 0; --b) {
        if (bins[static_cast<std::size_t>(b)].sample_index >= 0) {
            top = b;
            break;
        }
    }
    bin_record carried;
    for (int b = top; b >= 0; --b) {
        const bin_record& rec = bins[static_cast<std::size_t>(b)];
        if (rec.sample_index >= 0 &&
            (carried.sample_index < 0 || rec.probability > carried.probability ||
             (rec.probability == carried.probability && rec.sample_index < carried.sample_index)))
            carried = rec;
        tradeoff_point p;
        p.fidelity_bin_low = threshold + b * cfg.bin_width;
        p.fidelity_bin_high = std::min(1.0, threshold + (b + 1) * cfg.bin_width);
        p.max_probability = carried.probability;
        p.achieved_fidelity = carried.fidelity;
        p.weights = carried.weights;
        result.points.push_back(p);
    }
    std::reverse(result.points.begin(), result.points.end());
    return result;
}

// Best-of-samples refined by an optional annealing walk over the free
// weights; the walk starts from the best sample and only feasible moves
// (fidelity still at or above the threshold) are accepted, so the returned
// probability is never below the pure-sampling optimum for the same seed
// and budget.
inline std::optional<optimum> optimize_max_prob(const search_template& t,
                                                const target_state& target, double threshold,
                                                const search_config& cfg) {
    tradeoff_result base = sample_tradeoff(t, target, threshold, cfg);
    if (base.empty()) return std::nullopt;
    optimum best;
    best.probability = base.points.front().max_probability;
    best.fidelity = base.points.front().achieved_fidelity;
    best.weights = base.points.front().weights;
    if (!cfg.anneal || t.free_slots.empty()) return best;

    const detail::template_engine engine(t, target);
    const anneal_config& ac = *cfg.anneal;
    detail::rng_stream rng(cfg.seed, static_cast<std::uint64_t>(cfg.samples) + 0x5deece66dull);
    std::vector<amplitude> current = best.weights;
    double current_p = best.probability;
    double temperature = ac.initial_temperature;
    std::vector<amplitude> proposal;
    detail::template_engine::scratch sc;
    for (int step = 0; step < ac.steps; ++step) {
        proposal = current;
        const std::size_t pick =
            static_cast<std::size_t>(rng.next() % proposal.size());
        if (t.domain == weight_domain::nonnegative_real) {
            const double delta = ac.step_size * (2.0 * rng.uniform() - 1.0);
            const double magnitude = std::abs(proposal[pick]) + delta;
            proposal[pick] = t.free_slots[pick].phase * std::abs(magnitude);
        } else {
            proposal[pick] += amplitude(ac.step_size * (2.0 * rng.uniform() - 1.0),
                                        ac.step_size * (2.0 * rng.uniform() - 1.0));
        }
        auto ev = engine.evaluate(proposal, 0.0, true, sc);
        temperature *= ac.cooling;
        if (!ev.feasible || ev.fidelity < threshold) continue;
        const double gain = ev.probability - current_p;
        if (gain >= 0.0 ||
            rng.uniform() < std::exp(gain / std::max(temperature, 1e-12))) {
            current = proposal;
            current_p = ev.probability;
            if (ev.probability > best.probability) {
                best.probability = ev.probability;
                best.fidelity = ev.fidelity;
                best.weights = proposal;
            }
        }
    }
    return best;
}

// Canonical search templates per class. W and Dicke search the complete
// overlap digraph with nonnegative weights; GHZ and cluster search the
// catalog topology with free magnitudes on the catalog sign pattern.
inline search_template templates_for(target_class cls, int n, statistics stats) {
    search_template t;
    t.n = n;
    t.stats = stats;
    t.domain = weight_domain::nonnegative_real;
    auto from_scheme = [&](const scheme& s) {
        for (int q = 0; q < s.n; ++q) {
            for (const auto& [slot, a] : s.qubits[static_cast<std::size_t>(q)].amps) {
                weight_slot ws{q, slot.region, slot.spin, a / std::abs(a)};
                t.free_slots.push_back(ws);
            }
        }
    };
    switch (cls) {
        case target_class::w: {
            if (n < 2) throw too_small_error("W template needs n >= 2");
            const auto spins = w_spins(n);
            for (int q = 0; q < n; ++q)
                for (int r = 0; r < n; ++r)
                    t.free_slots.push_back(weight_slot{q, r, spins[static_cast<std::size_t>(q)]});
            break;
        }
        case target_class::dicke: {
            if (n % 2 != 0) throw odd_n_error("Dicke template needs even n");
            for (int q = 0; q < n; ++q) {
                const spin_label sp = (q < n / 2) ? spin_label::up : spin_label::down;
                for (int r = 0; r < n; ++r) t.free_slots.push_back(weight_slot{q, r, sp});
            }
            break;
        }
        case target_class::ghz: from_scheme(ghz_scheme(n, stats)); break;
        case target_class::cluster: from_scheme(cluster_scheme(n, stats)); break;
        case target_class::bell:
            throw unsupported_class_error("no search template for the bell class; use ghz");
    }
    return t;
}

// CSV rendering: header row then one row per frontier point. Weight columns
// are named w{qubit}_r{region}{u|d} in free-slot order.
inline void write_tradeoff_csv(std::ostream& out, const search_template& t,
                               const tradeoff_result& result,
                               const std::function<std::string(double)>& fmt) {
    out << "fidelity_bin_low,fidelity_bin_high,max_probability";
    for (const weight_slot& s : t.free_slots)
        out << ",w" << s.qubit << "_r" << s.region << spin_char(s.spin);
    out << "\n";
    for (const tradeoff_point& p : result.points) {
        out << fmt(p.fidelity_bin_low) << "," << fmt(p.fidelity_bin_high) << ","
            << fmt(p.max_probability);
        for (const amplitude& w : p.weights) {
            if (t.domain == weight_domain::nonnegative_real) {
                out << "," << fmt(w.real());
            } else {
                out << "," << fmt(w.real()) << (w.imag() < 0 ? "-" : "+")
                    << fmt(std::abs(w.imag())) << "i";
            }
        }
        out << "\n";
    }
}

}  // namespace entangle
