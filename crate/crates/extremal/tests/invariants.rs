//! Spectral invariants of the structured families, checked over parameter
//! grids via quotient matrices (with power-iteration spot checks at small n).

use extremal::{
    build_factor_extremal, build_g_double_prime, build_id_extremal, factor_extremal_partition,
    g_double_prime_partition, id_extremal_partition,
};
use spectra::{quotient_matrix, quotient_perron, quotient_spectral_radius, spectral_radius};

fn quotient_radius(g: &graph_core::Graph, classes: &[Vec<usize>]) -> f64 {
    quotient_spectral_radius(&quotient_matrix(g, classes).unwrap())
}

#[test]
fn factor_extremal_radius_at_a_equals_1_is_n_minus_2() {
    for n in 5..=60 {
        let g = build_factor_extremal(n, 1).unwrap();
        let rho = quotient_radius(&g, &factor_extremal_partition(n, 1).unwrap());
        assert!((rho - (n as f64 - 2.0)).abs() < 1e-9, "n={n}: rho={rho}");
    }
}

#[test]
fn factor_extremal_radius_exceeds_n_minus_2_for_larger_a() {
    for a in 2..=5usize {
        for n in (a + 2)..=(a + 40) {
            let g = build_factor_extremal(n, a).unwrap();
            let rho = quotient_radius(&g, &factor_extremal_partition(n, a).unwrap());
            assert!(rho > n as f64 - 2.0, "n={n}, a={a}: rho={rho}");
        }
    }
}

#[test]
fn quotient_agrees_with_power_iteration_at_small_n() {
    for (n, a) in [(6usize, 1usize), (7, 2), (9, 3), (12, 4)] {
        let g = build_factor_extremal(n, a).unwrap();
        let direct = spectral_radius(&g, 1e-10).unwrap().value;
        let quot = quotient_radius(&g, &factor_extremal_partition(n, a).unwrap());
        assert!((direct - quot).abs() < 1e-8, "n={n}, a={a}");
    }
    for (n, delta, r) in [(12usize, 4usize, 1usize), (14, 4, 2), (16, 5, 1)] {
        let g = build_id_extremal(n, delta, r).unwrap();
        let direct = spectral_radius(&g, 1e-10).unwrap().value;
        let quot = quotient_radius(&g, &id_extremal_partition(n, delta, r).unwrap());
        assert!((direct - quot).abs() < 1e-8, "n={n}, delta={delta}, r={r}");
    }
}

#[test]
fn id_extremal_radius_exceeds_clique_bound() {
    // ρ(G*) > ρ(K_{n−δ−r}) = n−δ−r−1 on the sweep grid.
    for r in 1..=2usize {
        for delta in (3 * r + 1)..=(3 * r + 4) {
            for n in (2 * delta + r + 2..=2 * delta + r + 60).step_by(7) {
                let g = build_id_extremal(n, delta, r).unwrap();
                let rho = quotient_radius(&g, &id_extremal_partition(n, delta, r).unwrap());
                assert!(
                    rho > (n - delta - r - 1) as f64,
                    "n={n}, delta={delta}, r={r}: rho={rho}"
                );
            }
        }
    }
}

#[test]
fn g_double_prime_perron_entry_ordering() {
    // Classes in layout order (K_s, I_r, K_m, I_{s+1}); the claimed ordering
    // is x(K_m) ≥ x(I_{s+1}) and x(I_r) > x(I_{s+1}) under s ≥ δ+1, δ ≥ 3r+1.
    for r in 1..=2usize {
        let delta = 3 * r + 1;
        for s in (delta + 1)..=(delta + 3) {
            for n in [20 * delta + r + 8, 20 * delta + r + 30] {
                let g = build_g_double_prime(n, s, r).unwrap();
                let q = quotient_matrix(&g, &g_double_prime_partition(n, s, r).unwrap()).unwrap();
                let x = quotient_perron(&q);
                let (k_s, i_r, k_m, i_s1) = (x[0], x[1], x[2], x[3]);
                assert!(k_m >= i_s1 - 1e-12, "n={n}, s={s}, r={r}");
                assert!(i_r > i_s1, "n={n}, s={s}, r={r}");
                assert!(k_s > 0.0 && i_s1 > 0.0);
            }
        }
    }
}
