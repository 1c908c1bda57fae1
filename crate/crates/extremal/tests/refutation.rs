//! A documented negative finding: the ID-criticality spectral theorem, as
//! stated, is refuted by the triple-prime family. G‴(93, s=3, r=1, δ=4)
//! satisfies every hypothesis — minimum degree δ = 4 ≥ 3r+1, order above both
//! thresholds, and ρ(G‴) ≥ ρ(G*) — is not isomorphic to the extremal graph
//! G*, and yet carries a validated non-criticality witness. The root cause is
//! the second proof-stage claim, whose stated bound lies below the trivial
//! clique bound of G‴ (see the claim verifier's documentation).

use criticality::CriticalityWitness;
use extremal::{
    build_g_triple_prime, build_id_extremal, g_triple_prime_partition, id_extremal_partition,
};
use graph_core::VertexSet;
use spectra::{quotient_matrix, quotient_spectral_radius, spectral_radius};

#[test]
fn triple_prime_family_refutes_the_criticality_theorem() {
    let (n, s, r, delta) = (93usize, 3usize, 1usize, 4usize);
    // Order threshold: max{20δ+r+8, cubic} = max{89, 92.5} ≤ 93.
    assert!(n >= 20 * delta + r + 8);
    assert!(2 * n >= 185); // 2·(cubic threshold) for δ=4, r=1

    let g = build_g_triple_prime(n, s, r, delta).unwrap();
    assert_eq!(g.n(), n);
    assert_eq!(g.min_degree(), Some(delta));

    // Spectral hypothesis, by quotient and by power iteration.
    let rho = quotient_spectral_radius(
        &quotient_matrix(&g, &g_triple_prime_partition(n, s, r, delta).unwrap()).unwrap(),
    );
    let g_star = build_id_extremal(n, delta, r).unwrap();
    let rho_star = quotient_spectral_radius(
        &quotient_matrix(&g_star, &id_extremal_partition(n, delta, r).unwrap()).unwrap(),
    );
    assert!(rho > rho_star + 1e-6, "rho={rho}, rho*={rho_star}");
    let rho_direct = spectral_radius(&g, 1e-10).unwrap().value;
    assert!((rho - rho_direct).abs() < 1e-7);

    // Not the extremal graph: the degree multisets already differ.
    let mut d1 = g.degrees();
    let mut d2 = g_star.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    assert_ne!(d1, d2);

    // And yet it is not ID-factor-critical: I = I_r (|I| = 1 ≡ n mod 2),
    // S = K_s leaves the s+1 small cliques K_1 plus the odd large clique.
    let witness = CriticalityWitness {
        i: VertexSet::from_slice(&[0]),
        s: (r..r + s).collect(),
        odd_count: 5,
    };
    witness.validate(&g).expect("refutation witness must validate");
}
