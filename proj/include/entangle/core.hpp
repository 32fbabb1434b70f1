#pragma once

// Shared vocabulary for identical-particle entanglement schemes: complex
// amplitudes, particle exchange statistics, and the two pseudospin labels
// measured behind each detection region.

#include <complex>
#include <stdexcept>
#include <string>

namespace entangle {

using amplitude = std::complex<double>;

// Exchange statistics of the identical particles carrying the qubits.
// Bosonic amplitudes add under particle exchange (sign +1), fermionic
// amplitudes acquire the permutation sign (-1).
enum class statistics { boson, fermion };

constexpr int exchange_sign(statistics s) {
    return s == statistics::boson ? +1 : -1;
}

inline const char* statistics_name(statistics s) {
    return s == statistics::boson ? "boson" : "fermion";
}

inline statistics parse_statistics(const std::string& name) {
    if (name == "boson") return statistics::boson;
    if (name == "fermion") return statistics::fermion;
    throw std::invalid_argument("unknown statistics \"" + name +
                                "\" (expected \"boson\" or \"fermion\")");
}

// Pseudospin measured by the sLOCC detectors. Region spin strings use
// 'u' / 'd' with region 0 leftmost.
enum class spin_label : int { up = 0, down = 1 };

constexpr char spin_char(spin_label s) {
    return s == spin_label::up ? 'u' : 'd';
}

inline spin_label parse_spin_char(char c) {
    if (c == 'u') return spin_label::up;
    if (c == 'd') return spin_label::down;
    throw std::invalid_argument(std::string("unknown spin character '") + c +
                                "' (expected 'u' or 'd')");
}

inline const char* spin_name(spin_label s) {
    return s == spin_label::up ? "up" : "down";
}

inline spin_label parse_spin_name(const std::string& name) {
    if (name == "up") return spin_label::up;
    if (name == "down") return spin_label::down;
    throw std::invalid_argument("unknown spin label \"" + name +
                                "\" (expected \"up\" or \"down\")");
}

}  // namespace entangle
