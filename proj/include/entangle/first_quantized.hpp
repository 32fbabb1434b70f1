#pragma once

// Brute-force reference pipeline in first quantization. The n-particle
// state is built as an explicit dense tensor over (2n)^n single-particle
// slots (slot = region * 2 + spin), (anti)symmetrized by summing all n!
// qubit-to-position permutations with their exchange signs. Post-selection
// projects onto the tuples whose regions are a permutation of 0..n-1 and
// reads the readout amplitudes from the identity region ordering.
//
// This module deliberately shares no machinery with the production gate:
// no weight matrices, no eta_det, no Gram matrix. It exists to certify the
// production results independently.

#include <numeric>

#include "slocc.hpp"

namespace entangle {

struct dense_state {
    int n = 0;
    // amp[idx] with idx = sum_i slot_i * (2n)^i, slot_i = region * 2 + spin
    // of tensor position i.
    std::vector<amplitude> amp;
};

// Explicitly (anti)symmetrized n-particle wavefunction. Dense storage grows
// as (2n)^n, so n <= 5.
inline dense_state symmetrize(const scheme& s) {
    if (s.n > 5)
        throw order_too_large_error("symmetrize supports n <= 5, got " + std::to_string(s.n));
    validate_scheme(s);
    const int n = s.n;
    const int d = 2 * n;
    std::size_t size = 1;
    for (int i = 0; i < n; ++i) size *= static_cast<std::size_t>(d);

    // Dense single-particle vectors, one per qubit.
    std::vector<std::vector<amplitude>> qv(static_cast<std::size_t>(n),
                                           std::vector<amplitude>(static_cast<std::size_t>(d)));
    for (int j = 0; j < n; ++j)
        for (const auto& [slot, a] : s.qubits[j].amps)
            qv[j][static_cast<std::size_t>(slot.region * 2 + static_cast<int>(slot.spin))] = a;

    dense_state out;
    out.n = n;
    out.amp.assign(size, amplitude(0.0, 0.0));

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> slots(static_cast<std::size_t>(n));
    do {
        const double sign =
            (s.stats == statistics::fermion && permutation_sign(perm) < 0) ? -1.0 : 1.0;
        // Walk all slot tuples; position i carries qubit perm[i].
        std::size_t idx = 0;
        std::fill(slots.begin(), slots.end(), 0);
        while (true) {
            amplitude term(sign, 0.0);
            for (int i = 0; i < n && term != amplitude(0.0, 0.0); ++i)
                term *= qv[static_cast<std::size_t>(perm[i])][static_cast<std::size_t>(slots[i])];
            out.amp[idx] += term;
            int pos = 0;
            while (pos < n) {
                if (++slots[pos] < d) break;
                slots[pos] = 0;
                ++pos;
            }
            if (pos == n) break;
            idx = 0;
            for (int i = n - 1; i >= 0; --i) idx = idx * static_cast<std::size_t>(d) +
                                                   static_cast<std::size_t>(slots[i]);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Post-selection by direct projection of the symmetrized tensor: keep the
// tuples whose regions exhaust 0..n-1, take the success probability as
// projected-norm^2 / total-norm^2, and read one amplitude per spin readout
// from the identity region ordering. In the returned state n_g holds the
// projected squared norm and nu the total squared norm, so probability is
// still n_g / nu.
inline post_selected_state post_select_bruteforce(const scheme& s) {
    const dense_state psi = symmetrize(s);
    const int n = psi.n;
    const int d = 2 * n;

    double total2 = 0.0;
    double projected2 = 0.0;
    std::map<spin_config, amplitude> raw;

    std::vector<int> slots(static_cast<std::size_t>(n), 0);
    std::size_t idx = 0;
    for (;;) {
        const amplitude a = psi.amp[idx];
        total2 += std::norm(a);
        // Regions of this tuple, position i in region slots[i]/2.
        unsigned region_mask = 0;
        bool distinct = true;
        for (int i = 0; i < n; ++i) {
            const unsigned bit = 1u << (slots[i] / 2);
            if (region_mask & bit) {
                distinct = false;
                break;
            }
            region_mask |= bit;
        }
        if (distinct && region_mask == (1u << n) - 1) {
            projected2 += std::norm(a);
            bool identity_order = true;
            for (int i = 0; i < n; ++i)
                if (slots[i] / 2 != i) {
                    identity_order = false;
                    break;
                }
            if (identity_order) {
                spin_config k = 0;
                for (int i = 0; i < n; ++i)
                    if (slots[i] % 2 == 1) k |= spin_config{1} << i;
                raw[k] = a;
            }
        }
        int pos = 0;
        while (pos < n) {
            if (++slots[pos] < d) break;
            slots[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
        idx = 0;
        for (int i = n - 1; i >= 0; --i)
            idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(slots[i]);
    }

    if (projected2 < 1e-24 || total2 < 1e-24)
        throw vanishing_state_error("scheme \"" + s.label +
                                    "\": brute-force projection vanishes");

    post_selected_state out;
    out.n = n;
    out.n_g = projected2;
    out.nu = total2;
    out.probability = projected2 / total2;
    double kept2 = 0.0;
    for (const auto& [k, a] : raw) kept2 += std::norm(a);
    const double scale = 1.0 / std::sqrt(kept2);
    for (const auto& [k, a] : raw)
        if (std::abs(a) > readout_zero_cutoff) out.amps[k] = a * scale;
    return out;
}

}  // namespace entangle
