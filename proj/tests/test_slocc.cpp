#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

#include <entangle/catalog.hpp>
#include <entangle/slocc.hpp>

using namespace entangle;

namespace {

scheme random_scheme(std::mt19937_64& rng, int n, statistics stats) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    scheme s;
    s.n = n;
    s.stats = stats;
    s.label = "random";
    s.qubits.assign(n, {});
    for (int q = 0; q < n; ++q) {
        s.qubits[q].source_id = q;
        for (int r = 0; r < n; ++r)
            for (spin_label sp : {spin_label::up, spin_label::down})
                s.qubits[q].amps[{r, sp}] = amplitude(unit(rng), unit(rng));
        const double scale = 1.0 / std::sqrt(s.qubits[q].norm_squared());
        for (auto& [slot, a] : s.qubits[q].amps) a *= scale;
    }
    validate_scheme(s);
    return s;
}

}  // namespace

TEST(spin_config, string_round_trip) {
    EXPECT_EQ(config_from_string("ud"), 2u);
    EXPECT_EQ(config_from_string("du"), 1u);
    EXPECT_EQ(config_to_string(2u, 2), "ud");
    EXPECT_EQ(config_to_string(0u, 3), "uuu");
    for (spin_config k = 0; k < 16; ++k)
        EXPECT_EQ(config_from_string(config_to_string(k, 4)), k);
}

TEST(spin_config, rejects_bad_strings) {
    EXPECT_THROW(config_from_string(""), std::invalid_argument);
    EXPECT_THROW(config_from_string("ux"), std::invalid_argument);
    EXPECT_THROW(config_from_string("uuuuuuuuuuuuu"), std::invalid_argument);
}

TEST(spin_config, region_zero_is_leftmost) {
    const auto spins = config_spins(config_from_string("udd"), 3);
    EXPECT_EQ(spins[0], spin_label::up);
    EXPECT_EQ(spins[1], spin_label::down);
    EXPECT_EQ(spins[2], spin_label::down);
}

TEST(make_target, w_state_has_one_up_per_term) {
    const target_state t = make_target(target_class::w, 3);
    ASSERT_EQ(t.amps.size(), 3u);
    for (const auto& [k, a] : t.amps) {
        int ups = 0;
        for (int i = 0; i < 3; ++i)
            if (((k >> i) & 1u) == 0) ++ups;
        EXPECT_EQ(ups, 1);
        EXPECT_NEAR(std::abs(a - amplitude(1.0 / std::sqrt(3.0), 0.0)), 0.0, 1e-15);
    }
}

TEST(make_target, dicke_state_is_half_filled) {
    const target_state t = make_target(target_class::dicke, 4);
    ASSERT_EQ(t.amps.size(), 6u);
    for (const auto& [k, a] : t.amps) {
        EXPECT_EQ(std::popcount(k), 2);
        EXPECT_NEAR(std::abs(a - amplitude(1.0 / std::sqrt(6.0), 0.0)), 0.0, 1e-15);
    }
    EXPECT_THROW(make_target(target_class::dicke, 3), odd_n_error);
}

TEST(make_target, ghz_state_is_two_terms) {
    const target_state t = make_target(target_class::ghz, 4);
    ASSERT_EQ(t.amps.size(), 2u);
    EXPECT_NEAR(std::abs(t.amps.at(0u) - amplitude(1.0 / std::sqrt(2.0), 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t.amps.at(15u) - amplitude(1.0 / std::sqrt(2.0), 0.0)), 0.0, 1e-15);
}

TEST(make_target, cluster_state_is_four_terms_with_one_sign) {
    const target_state t = make_target(target_class::cluster, 4);
    ASSERT_EQ(t.amps.size(), 4u);
    EXPECT_NEAR(std::abs(t.amps.at(0u) - amplitude(0.5, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t.amps.at(3u) - amplitude(0.5, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t.amps.at(12u) - amplitude(0.5, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t.amps.at(15u) - amplitude(-0.5, 0.0)), 0.0, 1e-15);
    EXPECT_THROW(make_target(target_class::cluster, 5), odd_n_error);
    const auto e = cluster_stabilizer_check(t);
    for (double v : e) EXPECT_NEAR(std::abs(v), 1.0, 1e-12);
}

TEST(make_target, bell_requires_two_regions) {
    EXPECT_THROW(make_target(target_class::bell, 3), dimension_mismatch_error);
    const target_state t = make_target(target_class::bell, 2);
    EXPECT_EQ(t.amps.size(), 2u);
}

TEST(genuine_threshold, published_values) {
    EXPECT_NEAR(genuine_threshold(target_class::w, 3), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(genuine_threshold(target_class::w, 4), 3.0 / 4.0, 1e-15);
    EXPECT_NEAR(genuine_threshold(target_class::dicke, 4), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(genuine_threshold(target_class::dicke, 6), 0.6, 1e-15);
    EXPECT_NEAR(genuine_threshold(target_class::ghz, 5), 0.5, 1e-15);
    EXPECT_NEAR(genuine_threshold(target_class::cluster, 6), 0.5, 1e-15);
    EXPECT_NEAR(genuine_threshold(target_class::bell, 2), 0.5, 1e-15);
    EXPECT_THROW(genuine_threshold(target_class::dicke, 5), odd_n_error);
}

TEST(post_select, bell_remote_gives_half_probability) {
    const post_selected_state st = post_select(bell_remote(statistics::boson));
    EXPECT_NEAR(st.probability, 0.5, 1e-12);
    EXPECT_NEAR(st.nu, 1.0, 1e-12);
    ASSERT_EQ(st.amps.size(), 2u);
    EXPECT_NEAR(std::abs(st.amps.at(config_from_string("ud"))), 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(post_select, w_complete_boson_reference_values) {
    const post_selected_state st = post_select(w_complete(3, statistics::boson));
    EXPECT_NEAR(st.probability, 2.0 / 9.0, 1e-12);
    EXPECT_NEAR(fidelity(st, make_target(target_class::w, 3)), 1.0, 1e-12);
}

TEST(post_select, w_complete_fermion_vanishes) {
    EXPECT_THROW(post_select(w_complete(3, statistics::fermion)), vanishing_state_error);
    EXPECT_THROW(post_select(w_complete(4, statistics::fermion)), vanishing_state_error);
}

TEST(post_select, ghz_gram_is_identity_so_nu_is_one) {
    for (statistics st : {statistics::boson, statistics::fermion}) {
        const post_selected_state state = post_select(ghz_scheme(5, st));
        EXPECT_NEAR(state.nu, 1.0, 1e-12);
        EXPECT_NEAR(state.probability, state.n_g, 1e-12);
    }
}

TEST(post_select, probability_is_a_probability_on_random_schemes) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 3;
        const statistics st = trial % 2 ? statistics::fermion : statistics::boson;
        const scheme s = random_scheme(rng, n, st);
        try {
            const post_selected_state state = post_select(s);
            ASSERT_GE(state.probability, 0.0) << "trial " << trial;
            ASSERT_LE(state.probability, 1.0 + 1e-12) << "trial " << trial;
            ASSERT_GT(state.nu, 0.0) << "trial " << trial;
            double norm2 = 0.0;
            for (const auto& [k, a] : state.amps) norm2 += std::norm(a);
            ASSERT_NEAR(norm2, 1.0, 1e-9) << "trial " << trial;
        } catch (const vanishing_state_error&) {
        }
    }
}

TEST(post_select, qubit_relabeling_is_unphysical) {
    std::mt19937_64 rng(5150);
    for (statistics st : {statistics::boson, statistics::fermion}) {
        const scheme s = random_scheme(rng, 3, st);
        scheme swapped = s;
        std::swap(swapped.qubits[0], swapped.qubits[1]);
        const post_selected_state a = post_select(s);
        const post_selected_state b = post_select(swapped);
        EXPECT_NEAR(a.probability, b.probability, 1e-12);
        EXPECT_NEAR(a.nu, b.nu, 1e-12);
        const target_state t = make_target(target_class::w, 3);
        EXPECT_NEAR(fidelity(a, t), fidelity(b, t), 1e-12);
    }
}

TEST(post_select, single_qubit_phase_is_unphysical) {
    std::mt19937_64 rng(6021);
    const scheme s = random_scheme(rng, 3, statistics::fermion);
    scheme rotated = s;
    const amplitude phase = std::polar(1.0, 1.234);
    for (auto& [slot, a] : rotated.qubits[1].amps) a *= phase;
    const post_selected_state a = post_select(s);
    const post_selected_state b = post_select(rotated);
    EXPECT_NEAR(a.probability, b.probability, 1e-12);
    const target_state t = make_target(target_class::w, 3);
    EXPECT_NEAR(fidelity(a, t), fidelity(b, t), 1e-12);
}

TEST(post_select, rejects_n_out_of_range) {
    scheme s;
    s.n = 13;
    s.stats = statistics::boson;
    s.label = "too-big";
    s.qubits.assign(13, {});
    for (int q = 0; q < 13; ++q) {
        s.qubits[q].source_id = q;
        s.qubits[q].amps[{q, spin_label::up}] = 1.0;
    }
    EXPECT_THROW(post_select(s), order_too_large_error);
}

TEST(fidelity, rejects_dimension_mismatch) {
    const post_selected_state st = post_select(bell_remote(statistics::boson));
    EXPECT_THROW(fidelity(st, make_target(target_class::w, 3)), dimension_mismatch_error);
}

TEST(fidelity, detects_the_orthogonal_state) {
    const post_selected_state st = post_select(bell_active(statistics::boson));
    // bell-active yields (|uu> + |dd>)/sqrt(2); the |ud>/|du> pair scores 0.
    target_state t;
    t.n = 2;
    t.cls = target_class::bell;
    t.amps[config_from_string("ud")] = 1.0 / std::sqrt(2.0);
    t.amps[config_from_string("du")] = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(fidelity(st, t), 0.0, 1e-12);
}

TEST(align_global_phase, undoes_a_global_rotation) {
    const post_selected_state st = post_select(w_star(3, statistics::fermion));
    std::map<spin_config, amplitude> rotated = st.amps;
    const amplitude phase = std::polar(1.0, -0.77);
    for (auto& [k, a] : rotated) a *= phase;
    align_global_phase(st.amps, rotated);
    for (const auto& [k, a] : st.amps)
        EXPECT_NEAR(std::abs(a - rotated.at(k)), 0.0, 1e-12);
}

TEST(stabilizer_expectations, ghz_scores_zero_at_the_block_positions) {
    for (int n : {4, 6}) {
        const post_selected_state st = post_select(ghz_scheme(n, statistics::boson));
        const auto e = stabilizer_expectations(st.amps, n);
        const int h = n / 2;
        for (int i = 0; i < n; ++i) {
            if (i == h - 1 || i == n - 1)
                EXPECT_NEAR(e[i], 0.0, 1e-12) << "n " << n << " i " << i;
            else
                EXPECT_NEAR(e[i], 1.0, 1e-12) << "n " << n << " i " << i;
        }
    }
}

TEST(state_to_json, emits_the_declared_schema) {
    const post_selected_state st = post_select(ghz_scheme(3, statistics::boson));
    const nlohmann::ordered_json j = state_to_json(st);
    EXPECT_EQ(j.at("n").get<int>(), 3);
    EXPECT_TRUE(j.at("amplitudes").is_array());
    EXPECT_EQ(j.at("amplitudes").size(), 2u);
    for (const auto& ja : j.at("amplitudes")) {
        EXPECT_TRUE(ja.contains("config"));
        EXPECT_TRUE(ja.contains("re"));
        EXPECT_TRUE(ja.contains("im"));
    }
    EXPECT_NEAR(j.at("probability").get<double>(), 0.25, 1e-12);
}
