#pragma once

// A preparation scheme deforms n independent identical qubits over n
// detection regions: qubit j becomes a single-particle wavefunction with a
// complex amplitude on each occupied (region, pseudospin) slot. The same
// data reads as a complex-weighted colored digraph: node i is both source
// qubit i and region i, and an edge i -> j with spin s and weight w means
// qubit i carries amplitude w on slot (region j, spin s).

#include <map>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace entangle {

class not_normalized_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct region_spin {
    int region;
    spin_label spin;

    friend bool operator<(const region_spin& a, const region_spin& b) {
        if (a.region != b.region) return a.region < b.region;
        return static_cast<int>(a.spin) < static_cast<int>(b.spin);
    }
    friend bool operator==(const region_spin& a, const region_spin& b) {
        return a.region == b.region && a.spin == b.spin;
    }
};

struct deformed_qubit {
    int source_id = 0;
    // Wavefunction over (region, pseudospin) slots; absent slots are zero.
    std::map<region_spin, amplitude> amps;

    amplitude amp(int region, spin_label s) const {
        auto it = amps.find(region_spin{region, s});
        return it == amps.end() ? amplitude(0.0, 0.0) : it->second;
    }

    double norm_squared() const {
        double total = 0.0;
        for (const auto& [slot, a] : amps) total += std::norm(a);
        return total;
    }

    friend bool operator==(const deformed_qubit& a, const deformed_qubit& b) {
        return a.source_id == b.source_id && a.amps == b.amps;
    }
};

struct scheme {
    int n = 0;
    std::vector<deformed_qubit> qubits;
    statistics stats = statistics::boson;
    std::string label;

    friend bool operator==(const scheme& a, const scheme& b) {
        return a.n == b.n && a.stats == b.stats && a.label == b.label && a.qubits == b.qubits;
    }
};

// Checks the structural invariants: one deformed state per qubit, regions
// inside [0, n), at least one nonzero amplitude, and unit norm per qubit
// within 1e-9. Error messages name the offending qubit index.
inline void validate_scheme(const scheme& s) {
    if (s.n < 1) throw std::invalid_argument("scheme must have at least 1 qubit");
    if (static_cast<int>(s.qubits.size()) != s.n)
        throw std::invalid_argument("scheme declares n=" + std::to_string(s.n) + " but has " +
                                    std::to_string(s.qubits.size()) + " qubits");
    for (int j = 0; j < s.n; ++j) {
        const deformed_qubit& q = s.qubits[j];
        bool any_nonzero = false;
        for (const auto& [slot, a] : q.amps) {
            if (slot.region < 0 || slot.region >= s.n)
                throw std::out_of_range("qubit " + std::to_string(j) + " references region " +
                                        std::to_string(slot.region) + " outside [0, " +
                                        std::to_string(s.n) + ")");
            if (a != amplitude(0.0, 0.0)) any_nonzero = true;
        }
        if (!any_nonzero)
            throw std::invalid_argument("qubit " + std::to_string(j) +
                                        " has no nonzero amplitude");
        const double norm2 = q.norm_squared();
        if (std::abs(norm2 - 1.0) > 1e-9)
            throw not_normalized_error("qubit " + std::to_string(j) +
                                       " has squared norm " + std::to_string(norm2) +
                                       ", expected 1 within 1e-9");
    }
}

inline scheme make_scheme(int n, std::vector<deformed_qubit> qubits, statistics stats,
                          std::string label = "") {
    scheme s{n, std::move(qubits), stats, std::move(label)};
    validate_scheme(s);
    return s;
}

// ---------------------------------------------------------------------------
// Digraph view
// ---------------------------------------------------------------------------

struct digraph_edge {
    int from = 0;            // source qubit
    int to = 0;              // target region
    spin_label spin = spin_label::up;
    amplitude weight;

    friend bool operator==(const digraph_edge& a, const digraph_edge& b) {
        return a.from == b.from && a.to == b.to && a.spin == b.spin && a.weight == b.weight;
    }
};

struct digraph {
    int n = 0;
    statistics stats = statistics::boson;
    std::string label;
    std::vector<digraph_edge> edges;
};

inline digraph scheme_to_digraph(const scheme& s) {
    digraph g{s.n, s.stats, s.label, {}};
    for (int j = 0; j < s.n; ++j)
        for (const auto& [slot, a] : s.qubits[j].amps)
            g.edges.push_back(digraph_edge{j, slot.region, slot.spin, a});
    return g;
}

// Rebuilds the scheme from its digraph; node ids become both qubit indices
// and source ids. Validation applies, so non-normalized node weights throw.
inline scheme digraph_to_scheme(const digraph& g) {
    scheme s{g.n, std::vector<deformed_qubit>(static_cast<std::size_t>(std::max(g.n, 0))),
             g.stats, g.label};
    for (int j = 0; j < g.n; ++j) s.qubits[j].source_id = j;
    for (const digraph_edge& e : g.edges) {
        if (e.from < 0 || e.from >= g.n)
            throw std::out_of_range("edge source " + std::to_string(e.from) +
                                    " outside [0, " + std::to_string(g.n) + ")");
        s.qubits[e.from].amps[region_spin{e.to, e.spin}] += e.weight;
    }
    validate_scheme(s);
    return s;
}

// ---------------------------------------------------------------------------
// Measurement kernel inputs
// ---------------------------------------------------------------------------

// Weight matrix of a spin readout sigma: entry (i, j) is qubit j's amplitude
// on (region i, sigma_i). Rows are detectors, columns are qubits; eta_det of
// this matrix is the coincidence amplitude for that readout.
inline complex_matrix weight_matrix(const scheme& s, const std::vector<spin_label>& sigma) {
    if (static_cast<int>(sigma.size()) != s.n)
        throw std::invalid_argument("spin readout has " + std::to_string(sigma.size()) +
                                    " entries, expected " + std::to_string(s.n));
    complex_matrix m(s.n);
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) m.at(i, j) = s.qubits[j].amp(i, sigma[i]);
    return m;
}

// Gram matrix of the deformed single-particle states: entry (i, j) is
// <phi_i|phi_j> summed over all (region, spin) slots. Hermitian with unit
// diagonal for normalized qubits.
inline complex_matrix gram(const scheme& s) {
    complex_matrix g(s.n);
    for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.n; ++j) {
            amplitude overlap(0.0, 0.0);
            for (const auto& [slot, a] : s.qubits[i].amps)
                overlap += std::conj(a) * s.qubits[j].amp(slot.region, slot.spin);
            g.at(i, j) = overlap;
        }
    }
    return g;
}

// One perfect matching of qubits onto regions compatible with a readout:
// qubit_at_region[i] is the qubit detected in region i, and product is the
// product of the matched amplitudes (sign not included).
struct matching {
    std::vector<int> qubit_at_region;
    amplitude product;
};

// Enumerates all perfect matchings contributing to the readout sigma, i.e.
// all ways to place every qubit in a distinct region using only nonzero
// amplitudes. The eta-weighted sum over matchings reproduces
// eta_det(weight_matrix(s, sigma)). Supports n <= 8.
inline std::vector<matching> perfect_matchings(const scheme& s,
                                               const std::vector<spin_label>& sigma) {
    if (s.n > 8)
        throw order_too_large_error("perfect matching enumeration supports n <= 8, got " +
                                    std::to_string(s.n));
    if (static_cast<int>(sigma.size()) != s.n)
        throw std::invalid_argument("spin readout has " + std::to_string(sigma.size()) +
                                    " entries, expected " + std::to_string(s.n));
    std::vector<matching> result;
    std::vector<int> placement(static_cast<std::size_t>(s.n), -1);
    std::vector<bool> used(static_cast<std::size_t>(s.n), false);

    auto extend = [&](auto&& self, int region, amplitude product) -> void {
        if (region == s.n) {
            result.push_back(matching{placement, product});
            return;
        }
        for (int q = 0; q < s.n; ++q) {
            if (used[q]) continue;
            const amplitude a = s.qubits[q].amp(region, sigma[region]);
            if (a == amplitude(0.0, 0.0)) continue;
            used[q] = true;
            placement[region] = q;
            self(self, region + 1, product * a);
            placement[region] = -1;
            used[q] = false;
        }
    };
    extend(extend, 0, amplitude(1.0, 0.0));
    return result;
}

// eta-weighted sum over an enumerated matching list; agrees with eta_det of
// the corresponding weight matrix.
inline amplitude matching_sum(const std::vector<matching>& ms, statistics stats) {
    amplitude total(0.0, 0.0);
    for (const matching& m : ms) {
        if (stats == statistics::fermion && permutation_sign(m.qubit_at_region) < 0)
            total -= m.product;
        else
            total += m.product;
    }
    return total;
}

}  // namespace entangle
