#pragma once

// sLOCC post-selection: keep the runs where every detection region fires
// exactly once, blind to pseudospin. For each spin readout sigma the
// coincidence amplitude is eta_det of the readout's weight matrix; the
// normalization nu = eta_det(Gram) accounts for the non-orthogonality of
// the deformed single-particle states, and the success probability is
// P = N_g / nu with N_g the sum of squared readout amplitudes.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scheme.hpp"

namespace entangle {

class vanishing_state_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class degenerate_norm_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dimension_mismatch_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class unsupported_class_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class odd_n_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// One joint pseudospin readout of the n regions, packed into bits:
// bit i = 0 means region i read Up, bit i = 1 means Down. Region 0 is the
// least significant bit; rendered strings put region 0 leftmost.
using spin_config = std::uint32_t;

inline std::vector<spin_label> config_spins(spin_config k, int n) {
    std::vector<spin_label> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        sigma[i] = ((k >> i) & 1u) ? spin_label::down : spin_label::up;
    return sigma;
}

inline std::string config_to_string(spin_config k, int n) {
    std::string s(static_cast<std::size_t>(n), 'u');
    for (int i = 0; i < n; ++i)
        if ((k >> i) & 1u) s[static_cast<std::size_t>(i)] = 'd';
    return s;
}

inline spin_config config_from_string(const std::string& s) {
    if (s.empty() || s.size() > 12)
        throw std::invalid_argument("spin string must have 1..12 characters, got \"" + s + "\"");
    spin_config k = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (parse_spin_char(s[i]) == spin_label::down) k |= spin_config{1} << i;
    return k;
}

struct post_selected_state {
    int n = 0;
    std::map<spin_config, amplitude> amps;  // unit-normalized readout amplitudes
    double n_g = 0.0;                       // sum of squared readout amplitudes
    double nu = 0.0;                        // eta_det of the Gram matrix
    double probability = 0.0;               // n_g / nu
};

enum class target_class { bell, w, dicke, ghz, cluster };

inline const char* target_class_name(target_class c) {
    switch (c) {
        case target_class::bell: return "bell";
        case target_class::w: return "w";
        case target_class::dicke: return "dicke";
        case target_class::ghz: return "ghz";
        case target_class::cluster: return "cluster";
    }
    return "?";
}

inline target_class parse_target_class(const std::string& name) {
    if (name == "bell") return target_class::bell;
    if (name == "w") return target_class::w;
    if (name == "dicke") return target_class::dicke;
    if (name == "ghz") return target_class::ghz;
    if (name == "cluster") return target_class::cluster;
    throw unsupported_class_error("unknown target class \"" + name + "\"");
}

struct target_state {
    int n = 0;
    target_class cls = target_class::w;
    std::map<spin_config, amplitude> amps;
};

// Amplitudes below this magnitude are treated as structural zeros of the
// readout distribution (they are elimination residue, orders of magnitude
// below any physical amplitude at the supported sizes).
inline constexpr double readout_zero_cutoff = 1e-13;

// Runs the three-step gate on a scheme with 2 <= n <= 12 qubits. Throws
// vanishing_state_error when every readout amplitude is zero (the checked
// failure comes before the Gram normalization, so schemes that vanish by
// exchange antisymmetry report as vanishing, not as degenerate) and
// degenerate_norm_error when nu <= 1e-12.
inline post_selected_state post_select(const scheme& s) {
    if (s.n < 2 || s.n > 12)
        throw order_too_large_error("post_select supports 2 <= n <= 12, got " +
                                    std::to_string(s.n));
    const spin_config count = spin_config{1} << s.n;
    std::map<spin_config, amplitude> raw;
    double n_g = 0.0;
    for (spin_config k = 0; k < count; ++k) {
        const amplitude sk = eta_det(weight_matrix(s, config_spins(k, s.n)), s.stats);
        if (std::abs(sk) > readout_zero_cutoff) {
            raw[k] = sk;
            n_g += std::norm(sk);
        }
    }
    if (raw.empty())
        throw vanishing_state_error("scheme \"" + s.label +
                                    "\": every readout amplitude vanishes");
    const amplitude nu_full = eta_det(gram(s), s.stats);
    if (std::abs(nu_full.imag()) >= 1e-10)
        throw std::domain_error("Gram eta_det has non-negligible imaginary part " +
                                std::to_string(nu_full.imag()));
    const double nu = nu_full.real();
    if (nu <= 1e-12)
        throw degenerate_norm_error("scheme \"" + s.label + "\": Gram normalization " +
                                    std::to_string(nu) + " is not positive");
    post_selected_state out;
    out.n = s.n;
    out.n_g = n_g;
    out.nu = nu;
    out.probability = n_g / nu;
    const double scale = 1.0 / std::sqrt(n_g);
    for (const auto& [k, a] : raw) out.amps[k] = a * scale;
    return out;
}

// Squared overlap |<target|state>|^2 of two unit-normalized states.
inline double fidelity(const post_selected_state& state, const target_state& target) {
    if (state.n != target.n)
        throw dimension_mismatch_error("state has n=" + std::to_string(state.n) +
                                       " but target has n=" + std::to_string(target.n));
    amplitude overlap(0.0, 0.0);
    for (const auto& [k, a] : state.amps) {
        auto it = target.amps.find(k);
        if (it != target.amps.end()) overlap += std::conj(it->second) * a;
    }
    return std::norm(overlap);
}

// Fidelity above which genuine multipartite entanglement of the class is
// certified: W needs (n-1)/n, the half-filled Dicke state n/(2(n-1)),
// GHZ-type and cluster-type states 1/2. The Bell pair is the n=2 GHZ case.
inline double genuine_threshold(target_class c, int n) {
    if (n < 2) throw std::invalid_argument("threshold needs n >= 2");
    switch (c) {
        case target_class::w: return static_cast<double>(n - 1) / n;
        case target_class::dicke:
            if (n % 2 != 0) throw odd_n_error("Dicke threshold needs even n");
            return static_cast<double>(n) / (2.0 * (n - 1));
        case target_class::bell:
        case target_class::ghz:
        case target_class::cluster: return 0.5;
    }
    throw unsupported_class_error("unknown target class");
}

// Canonical target states over region readouts. W: uniform over the n
// single-Up readouts. Dicke: uniform over the half-Up readouts (even n).
// GHZ: (|all Up> + |all Down>)/sqrt(2); at n=2 this is the Bell pair.
// Cluster: (|all Up> - |all Down> + |Up^h Down^h> + |Down^h Up^h>)/2 with
// h = n/2 (even n).
inline target_state make_target(target_class c, int n) {
    if (n < 2) throw std::invalid_argument("targets need n >= 2");
    if (n > 12) throw order_too_large_error("targets support n <= 12");
    target_state t;
    t.n = n;
    t.cls = c;
    const spin_config full = (spin_config{1} << n) - 1;
    switch (c) {
        case target_class::bell:
            if (n != 2) throw dimension_mismatch_error("Bell target needs n = 2");
            t.amps[0] = 1.0 / std::sqrt(2.0);
            t.amps[full] = 1.0 / std::sqrt(2.0);
            break;
        case target_class::ghz:
            t.amps[0] = 1.0 / std::sqrt(2.0);
            t.amps[full] = 1.0 / std::sqrt(2.0);
            break;
        case target_class::w: {
            const double a = 1.0 / std::sqrt(static_cast<double>(n));
            for (int i = 0; i < n; ++i) t.amps[full ^ (spin_config{1} << i)] = a;
            break;
        }
        case target_class::dicke: {
            if (n % 2 != 0) throw odd_n_error("Dicke target needs even n");
            std::vector<spin_config> configs;
            for (spin_config k = 0; k <= full; ++k)
                if (std::popcount(k) == n / 2) configs.push_back(k);
            const double a = 1.0 / std::sqrt(static_cast<double>(configs.size()));
            for (spin_config k : configs) t.amps[k] = a;
            break;
        }
        case target_class::cluster: {
            if (n % 2 != 0) throw odd_n_error("cluster target needs even n");
            const int h = n / 2;
            const spin_config first_half = (spin_config{1} << h) - 1;
            t.amps[0] = 0.5;
            t.amps[full] = -0.5;
            t.amps[full ^ first_half] = 0.5;  // first half Up, second half Down
            t.amps[first_half] = 0.5;         // first half Down, second half Up
            break;
        }
    }
    return t;
}

// Stabilizer expectations of the two-block cluster form with h = n/2:
// generic position i measures Z_i Z_{i+1}; position h-1 measures
// Z_{h-1} X_h..X_{n-1} (flip the second block); position n-1 measures
// X_0..X_{h-1} Z_h (flip the first block). Z reads +1 on Down and -1 on Up.
// The four-term cluster target is a simultaneous +-1 eigenstate of all n
// operators; GHZ-type states score 0 at the two block positions.
inline std::vector<double> stabilizer_expectations(const std::map<spin_config, amplitude>& amps,
                                                   int n) {
    const int h = n / 2;
    const spin_config full = (spin_config{1} << n) - 1;
    std::vector<double> result;
    result.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        spin_config flip_mask = 0;
        std::vector<int> z_positions;
        if (i == h - 1) {
            flip_mask = full ^ ((spin_config{1} << h) - 1);  // flip second block
            z_positions = {i};
        } else if (i == n - 1) {
            flip_mask = (spin_config{1} << h) - 1;  // flip first block
            z_positions = {h};
        } else {
            z_positions = {i, (i + 1) % n};
        }
        amplitude expectation(0.0, 0.0);
        for (const auto& [k, a] : amps) {
            auto it = amps.find(k ^ flip_mask);
            if (it == amps.end()) continue;
            int z = 1;
            for (int p : z_positions) z *= ((k >> p) & 1u) ? +1 : -1;
            expectation += std::conj(it->second) * (static_cast<double>(z) * a);
        }
        result.push_back(expectation.real());
    }
    return result;
}

inline std::vector<double> cluster_stabilizer_check(const post_selected_state& state) {
    return stabilizer_expectations(state.amps, state.n);
}

inline std::vector<double> cluster_stabilizer_check(const target_state& target) {
    return stabilizer_expectations(target.amps, target.n);
}

// Rotates a state by a global phase so its largest-magnitude amplitude is
// real and positive; used to compare states produced by different pipelines.
inline void align_global_phase(std::map<spin_config, amplitude>& amps) {
    double best = 0.0;
    amplitude anchor(1.0, 0.0);
    for (const auto& [k, a] : amps) {
        if (std::abs(a) > best) {
            best = std::abs(a);
            anchor = a;
        }
    }
    if (best == 0.0) return;
    const amplitude rotation = std::conj(anchor) / std::abs(anchor);
    for (auto& [k, a] : amps) a *= rotation;
}

// Rotates amps by the global phase that best matches the reference state;
// robust when several amplitudes tie in magnitude (anchor choice would be
// arbitrary there).
inline void align_global_phase(const std::map<spin_config, amplitude>& reference,
                               std::map<spin_config, amplitude>& amps) {
    amplitude overlap(0.0, 0.0);
    for (const auto& [k, a] : amps) {
        auto it = reference.find(k);
        if (it != reference.end()) overlap += std::conj(a) * it->second;
    }
    if (std::abs(overlap) == 0.0) return;
    const amplitude rotation = overlap / std::abs(overlap);
    for (auto& [k, a] : amps) a *= rotation;
}

inline nlohmann::ordered_json state_to_json(const post_selected_state& s) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["amplitudes"] = nlohmann::ordered_json::array();
    for (const auto& [k, a] : s.amps) {
        nlohmann::ordered_json ja;
        ja["config"] = config_to_string(k, s.n);
        ja["re"] = a.real();
        ja["im"] = a.imag();
        j["amplitudes"].push_back(ja);
    }
    j["n_g"] = s.n_g;
    j["nu"] = s.nu;
    j["probability"] = s.probability;
    return j;
}

}  // namespace entangle
