#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <entangle/catalog.hpp>
#include <entangle/first_quantized.hpp>

using namespace entangle;

namespace {

scheme random_scheme(std::mt19937_64& rng, int n, statistics stats, bool dense) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    scheme s;
    s.n = n;
    s.stats = stats;
    s.label = "random";
    s.qubits.assign(n, {});
    for (int q = 0; q < n; ++q) {
        s.qubits[q].source_id = q;
        for (int r = 0; r < n; ++r)
            for (spin_label sp : {spin_label::up, spin_label::down}) {
                if (!dense && (rng() & 3u) != 0) continue;
                s.qubits[q].amps[{r, sp}] = amplitude(unit(rng), unit(rng));
            }
        if (s.qubits[q].amps.empty()) s.qubits[q].amps[{q, spin_label::up}] = 1.0;
        const double scale = 1.0 / std::sqrt(s.qubits[q].norm_squared());
        for (auto& [slot, a] : s.qubits[q].amps) a *= scale;
    }
    validate_scheme(s);
    return s;
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TEST(oracle, bell_remote_states_by_hand) {
    const post_selected_state b = post_select_bruteforce(bell_remote(statistics::boson));
    EXPECT_NEAR(b.probability, 0.5, 1e-12);
    ASSERT_EQ(b.amps.size(), 2u);
    const amplitude ud = b.amps.at(config_from_string("ud"));
    const amplitude du = b.amps.at(config_from_string("du"));
    EXPECT_NEAR(std::abs(ud - du), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(ud), 1.0 / std::sqrt(2.0), 1e-12);

    const post_selected_state f = post_select_bruteforce(bell_remote(statistics::fermion));
    EXPECT_NEAR(f.probability, 0.5, 1e-12);
    EXPECT_NEAR(std::abs(f.amps.at(config_from_string("ud")) +
                         f.amps.at(config_from_string("du"))),
                0.0, 1e-12);
}

TEST(oracle, symmetrized_norm_reproduces_the_gram_normalization) {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 3;
        const statistics st = trial % 2 ? statistics::fermion : statistics::boson;
        const scheme s = random_scheme(rng, n, st, true);
        const amplitude nu_gram = eta_det(gram(s), st);
        try {
            const post_selected_state slow = post_select_bruteforce(s);
            // The explicit permutation sum carries an n! multiplicity that a
            // normalized Gram form does not.
            EXPECT_NEAR(slow.nu / factorial(n), nu_gram.real(),
                        1e-10 * (1.0 + std::abs(nu_gram)))
                << "trial " << trial;
        } catch (const vanishing_state_error&) {
        }
    }
}

TEST(oracle, matches_the_production_gate_on_random_schemes) {
    std::mt19937_64 rng(31415);
    for (int n = 2; n <= 4; ++n) {
        for (statistics st : {statistics::boson, statistics::fermion}) {
            int compared = 0;
            for (int trial = 0; trial < 50; ++trial) {
                const scheme s = random_scheme(rng, n, st, true);
                post_selected_state fast, slow;
                bool fast_vanished = false, slow_vanished = false;
                try {
                    fast = post_select(s);
                } catch (const vanishing_state_error&) {
                    fast_vanished = true;
                }
                try {
                    slow = post_select_bruteforce(s);
                } catch (const vanishing_state_error&) {
                    slow_vanished = true;
                }
                ASSERT_EQ(fast_vanished, slow_vanished)
                    << statistics_name(st) << " n " << n << " trial " << trial;
                if (fast_vanished) continue;
                ++compared;
                ASSERT_NEAR(fast.probability, slow.probability, 1e-10)
                    << statistics_name(st) << " n " << n << " trial " << trial;
                ASSERT_EQ(fast.amps.size(), slow.amps.size())
                    << statistics_name(st) << " n " << n << " trial " << trial;
                std::map<spin_config, amplitude> aligned = slow.amps;
                align_global_phase(fast.amps, aligned);
                for (const auto& [k, a] : fast.amps) {
                    ASSERT_TRUE(aligned.count(k)) << statistics_name(st) << " n " << n;
                    ASSERT_NEAR(std::abs(a - aligned.at(k)), 0.0, 1e-10)
                        << statistics_name(st) << " n " << n << " trial " << trial << " config "
                        << config_to_string(k, n);
                }
            }
            EXPECT_GT(compared, 0) << statistics_name(st) << " n " << n;
        }
    }
}

TEST(oracle, agrees_on_which_sparse_schemes_vanish) {
    std::mt19937_64 rng(9090);
    int vanished = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const statistics st = trial % 2 ? statistics::fermion : statistics::boson;
        const scheme s = random_scheme(rng, 3, st, false);
        bool fast_vanished = false, slow_vanished = false;
        double fast_p = -1.0, slow_p = -2.0;
        try {
            fast_p = post_select(s).probability;
        } catch (const vanishing_state_error&) {
            fast_vanished = true;
        }
        try {
            slow_p = post_select_bruteforce(s).probability;
        } catch (const vanishing_state_error&) {
            slow_vanished = true;
        }
        ASSERT_EQ(fast_vanished, slow_vanished) << "trial " << trial;
        if (fast_vanished)
            ++vanished;
        else
            ASSERT_NEAR(fast_p, slow_p, 1e-10) << "trial " << trial;
    }
    EXPECT_GT(vanished, 0);
    EXPECT_LT(vanished, 200);
}

TEST(oracle, fermionic_complete_overlap_vanishes_in_both_pipelines) {
    EXPECT_THROW(post_select(w_complete(3, statistics::fermion)), vanishing_state_error);
    EXPECT_THROW(post_select_bruteforce(w_complete(3, statistics::fermion)),
                 vanishing_state_error);
    EXPECT_THROW(post_select(dicke_complete(4, statistics::fermion)), vanishing_state_error);
    EXPECT_THROW(post_select_bruteforce(dicke_complete(4, statistics::fermion)),
                 vanishing_state_error);
}

TEST(oracle, rejects_sizes_beyond_the_dense_tensor_limit) {
    scheme s;
    s.n = 6;
    s.stats = statistics::boson;
    s.label = "too-big";
    s.qubits.assign(6, {});
    for (int q = 0; q < 6; ++q) {
        s.qubits[q].source_id = q;
        s.qubits[q].amps[{q, spin_label::up}] = 1.0;
    }
    EXPECT_THROW(symmetrize(s), order_too_large_error);
    EXPECT_THROW(post_select_bruteforce(s), order_too_large_error);
}

TEST(oracle, five_qubit_ghz_still_fits) {
    const post_selected_state slow = post_select_bruteforce(ghz_scheme(5, statistics::fermion));
    EXPECT_NEAR(slow.probability, 1.0 / 16.0, 1e-10);
    EXPECT_NEAR(fidelity(slow, make_target(target_class::ghz, 5)), 1.0, 1e-10);
}
