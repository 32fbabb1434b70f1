#pragma once

// JSON serialization of schemes. Format:
//
// {
//   "n": int,
//   "statistics": "boson" | "fermion",
//   "label": string,
//   "qubits": [
//     { "source_id": int,
//       "amplitudes": [ { "region": int, "spin": "up" | "down",
//                         "re": float, "im": float } ] }
//   ]
// }
//
// Parsing is strict: unknown spin strings, out-of-range regions, duplicate
// slots, and non-normalized qubits are rejected with messages naming the
// offending qubit.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scheme.hpp"

namespace entangle {

inline nlohmann::ordered_json scheme_to_json(const scheme& s) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["statistics"] = statistics_name(s.stats);
    j["label"] = s.label;
    j["qubits"] = nlohmann::ordered_json::array();
    for (const deformed_qubit& q : s.qubits) {
        nlohmann::ordered_json jq;
        jq["source_id"] = q.source_id;
        jq["amplitudes"] = nlohmann::ordered_json::array();
        for (const auto& [slot, a] : q.amps) {
            nlohmann::ordered_json ja;
            ja["region"] = slot.region;
            ja["spin"] = spin_name(slot.spin);
            ja["re"] = a.real();
            ja["im"] = a.imag();
            jq["amplitudes"].push_back(ja);
        }
        j["qubits"].push_back(jq);
    }
    return j;
}

inline scheme scheme_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("scheme JSON must be an object");
    for (const char* key : {"n", "statistics", "label", "qubits"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("scheme JSON missing field \"") + key + "\"");
    scheme s;
    s.n = j.at("n").get<int>();
    s.stats = parse_statistics(j.at("statistics").get<std::string>());
    s.label = j.at("label").get<std::string>();
    const auto& jqubits = j.at("qubits");
    if (!jqubits.is_array())
        throw std::invalid_argument("scheme JSON field \"qubits\" must be an array");
    int index = 0;
    for (const auto& jq : jqubits) {
        deformed_qubit q;
        if (!jq.contains("source_id") || !jq.contains("amplitudes"))
            throw std::invalid_argument("qubit " + std::to_string(index) +
                                        " must have \"source_id\" and \"amplitudes\"");
        q.source_id = jq.at("source_id").get<int>();
        for (const auto& ja : jq.at("amplitudes")) {
            for (const char* key : {"region", "spin", "re", "im"})
                if (!ja.contains(key))
                    throw std::invalid_argument("qubit " + std::to_string(index) +
                                                " amplitude missing field \"" + key + "\"");
            region_spin slot{ja.at("region").get<int>(),
                             parse_spin_name(ja.at("spin").get<std::string>())};
            if (q.amps.count(slot))
                throw std::invalid_argument("qubit " + std::to_string(index) +
                                            " lists slot (region " + std::to_string(slot.region) +
                                            ", " + spin_name(slot.spin) + ") twice");
            q.amps[slot] = amplitude(ja.at("re").get<double>(), ja.at("im").get<double>());
        }
        s.qubits.push_back(std::move(q));
        ++index;
    }
    validate_scheme(s);
    return s;
}

inline scheme load_scheme(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scheme file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return scheme_from_json(j);
}

inline void save_scheme(const scheme& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << scheme_to_json(s).dump(2) << "\n";
}

}  // namespace entangle
