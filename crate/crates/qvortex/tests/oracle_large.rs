//! Large-sector cross-validation: the analytic evolution coefficients
//! against literal `exp(−iHt)` far beyond the reach of term-by-term
//! derivative sums.  The analytic route runs through the orthogonal-
//! polynomial recurrence, the reference route through a dense Hermitian
//! eigendecomposition of the (N+1)×(N+1) sector Hamiltonian — the two
//! share no code past the transfer-matrix entries.

use qvortex::oracle::{expm_evolve, hamiltonian_matrix};
use qvortex::su2::{compose, fock_coefficients, prep_matrix_vortex, transfer_matrix};
use qvortex::{SU2Params, TwoModeState};

/// Componentwise distance between two states on the same sector.
fn max_abs_diff(a: &TwoModeState, b: &TwoModeState) -> f64 {
    a.amps()
        .iter()
        .zip(b.amps().iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn oracle_from_fock(n: u32, j: u32, p: &SU2Params) -> TwoModeState {
    let h = hamiltonian_matrix(n, p);
    let start = TwoModeState::fock(n, j).expect("j must index the sector");
    expm_evolve(&h, p.t(), &start).expect("dimensions agree by construction")
}

#[test]
fn sector_seventy_matches_the_matrix_exponential_componentwise() {
    let p = SU2Params::new(0.9, 0.4, 0.7, 1.3).unwrap();
    let v = transfer_matrix(&p);
    for j in [0, 1, 35, 69, 70] {
        let analytic = fock_coefficients(70, j, &v).unwrap();
        let reference = oracle_from_fock(70, j, &p);
        let dev = max_abs_diff(&analytic, &reference);
        assert!(
            dev < 1e-8,
            "N=70 j={}: max componentwise deviation {:e}",
            j,
            dev
        );
    }
}

#[test]
fn sector_two_hundred_matches_the_matrix_exponential_componentwise() {
    let p = SU2Params::new(1.1, -0.6, -1.9, 0.85).unwrap();
    let v = transfer_matrix(&p);
    for j in [0, 77] {
        let analytic = fock_coefficients(200, j, &v).unwrap();
        let reference = oracle_from_fock(200, j, &p);
        let dev = max_abs_diff(&analytic, &reference);
        assert!(
            dev < 1e-8,
            "N=200 j={}: max componentwise deviation {:e}",
            j,
            dev
        );
    }
}

#[test]
fn prepared_large_sector_state_evolves_identically_on_both_routes() {
    // Evolving the beam-splitter-prepared state with exp(−iHt) must equal
    // the analytic coefficients of the composed matrix V·W.
    let p = SU2Params::new(1.3, 0.2, -0.8, 0.95).unwrap();
    let n = 70;
    let j = 29;
    let w = prep_matrix_vortex();
    let prepared = fock_coefficients(n, j, &w).unwrap();
    let h = hamiltonian_matrix(n, &p);
    let reference = expm_evolve(&h, p.t(), &prepared).unwrap();
    let analytic = fock_coefficients(n, j, &compose(&transfer_matrix(&p), &w)).unwrap();
    let dev = max_abs_diff(&analytic, &reference);
    assert!(
        dev < 1e-8,
        "prepared N=70 j=29: max componentwise deviation {:e}",
        dev
    );
}
