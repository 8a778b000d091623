//! Acceptance suite: eight go/no-go criteria exercising every public
//! surface of the crate at its contracted tolerances — cross-route oracle
//! agreement, probability symmetries, entropy bounds, the single-vortex
//! recipes, modal-representation equality, the constant-entropy regime,
//! spatial coherence, and the structural unitarity/revival guarantees.
//! Each criterion is one test so the suite reports one pass/fail line per
//! criterion.

mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};
use std::time::Instant;

use common::{integrate, linspace, random_params};
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qvortex::coherence::{correlation, spatial_coherence};
use qvortex::oracle::{expm_evolve, hamiltonian_matrix};
use qvortex::specfun::{laguerre, lg_mode};
use qvortex::su2::{
    coeff_prob, coherent_evolution, compose, entropy, fock_coefficients, induced_unitary,
    prep_matrix_vortex, prob_spectrum, reduced_spectrum, transfer_matrix,
};
use qvortex::vortex::state_wavefunction;
use qvortex::{SU2Params, TwoModeState};

/// Largest componentwise distance between two states on the same sector.
fn state_distance(a: &TwoModeState, b: &TwoModeState) -> f64 {
    a.amps()
        .iter()
        .zip(b.amps().iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

#[test]
fn criterion_1_analytic_coefficients_match_the_matrix_exponential() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE97);
    let mut worst = 0.0f64;
    for draw in 0..100 {
        let p = random_params(&mut rng);
        let v = transfer_matrix(&p);
        for n in 0..=12u32 {
            let h = hamiltonian_matrix(n, &p);
            for j in 0..=n {
                let analytic = fock_coefficients(n, j, &v).unwrap();
                let start_state = TwoModeState::fock(n, j).unwrap();
                let reference = expm_evolve(&h, p.t(), &start_state).unwrap();
                let dev = state_distance(&analytic, &reference);
                worst = worst.max(dev);
                assert!(
                    dev < 1e-9,
                    "draw {} N={} j={}: componentwise deviation {:e}",
                    draw,
                    n,
                    j,
                    dev
                );
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "oracle sweep took {:?}, budget is 10 s",
        elapsed
    );
    println!(
        "criterion 1: worst deviation {:e} over 100 draws in {:?}",
        worst, elapsed
    );
}

#[test]
fn criterion_2_probability_symmetries_and_delta_limits() {
    let grid = linspace(0.0, 1.0, 21);
    for n in 0..=10u32 {
        for j in 0..=n {
            for q in 0..=n {
                for &r in &grid {
                    let flipped = coeff_prob(n, j, q, 1.0 - r).unwrap();
                    let q_mirror = coeff_prob(n, j, n - q, r).unwrap();
                    let j_mirror = coeff_prob(n, n - j, q, r).unwrap();
                    assert!(
                        (flipped - q_mirror).abs() < 1e-10,
                        "N={} j={} q={} R={}: 1−R vs q↔N−q: {} vs {}",
                        n,
                        j,
                        q,
                        r,
                        flipped,
                        q_mirror
                    );
                    assert!(
                        (flipped - j_mirror).abs() < 1e-10,
                        "N={} j={} q={} R={}: 1−R vs j↔N−j: {} vs {}",
                        n,
                        j,
                        q,
                        r,
                        flipped,
                        j_mirror
                    );
                }
                let at_zero = coeff_prob(n, j, q, 0.0).unwrap();
                let at_one = coeff_prob(n, j, q, 1.0).unwrap();
                let delta_zero = if q == j { 1.0 } else { 0.0 };
                let delta_one = if q == n - j { 1.0 } else { 0.0 };
                assert_eq!(
                    at_zero, delta_zero,
                    "N={} j={} q={}: R=0 limit must be the exact Kronecker delta",
                    n, j, q
                );
                assert_eq!(
                    at_one, delta_one,
                    "N={} j={} q={}: R=1 limit must be the exact Kronecker delta",
                    n, j, q
                );
            }
        }
    }
}

#[test]
fn criterion_3_entropy_bounds_and_binomial_value() {
    // The dimension bound S ≤ log₂(N+1) across the parameter sweep.
    let grid = linspace(0.0, 1.0, 21);
    for n in 0..=12u32 {
        let bound = f64::from(n + 1).log2();
        for j in 0..=n {
            for &r in &grid {
                let s = entropy(&prob_spectrum(n, j, r).unwrap());
                assert!(
                    s <= bound + 1e-12,
                    "N={} j={} R={}: S = {} exceeds log₂(N+1) = {}",
                    n,
                    j,
                    r,
                    s,
                    bound
                );
            }
        }
    }
    for (j, r) in [(0u32, 0.5), (37, 0.21), (100, 0.83)] {
        let s = entropy(&prob_spectrum(100, j, r).unwrap());
        assert!(
            s <= 101f64.log2() + 1e-12,
            "N=100 j={} R={}: S = {} exceeds the bound",
            j,
            r,
            s
        );
    }
    // The quoted bound values to five decimals.
    for (n, quoted) in [(4u32, 2.32193), (10, 3.45943), (100, 6.65821)] {
        let bound = f64::from(n + 1).log2();
        assert!(
            (bound - quoted).abs() < 5e-6,
            "N={}: log₂(N+1) = {} vs quoted {}",
            n,
            bound,
            quoted
        );
    }
    // Binomial case: j = 0 at R = ½ spreads as p_q = C(4,q)/2⁴, so the
    // entropy must equal the independent −Σ p log₂ p evaluation.
    let engine = entropy(&prob_spectrum(4, 0, 0.5).unwrap());
    let independent: f64 = [1.0f64, 4.0, 6.0, 4.0, 1.0]
        .iter()
        .map(|c| {
            let p = c / 16.0;
            -p * p.log2()
        })
        .sum();
    assert!(
        (engine - independent).abs() < 1e-10,
        "binomial entropy: engine {} vs independent {}",
        engine,
        independent
    );
}

#[test]
fn criterion_4_recipes_generate_single_vortex_modes() {
    // Three parameter recipes whose evolved Fock state collapses onto a
    // single Laguerre–Gaussian mode, checked as full wavefunctions on a
    // dense grid.
    let i = C64::new(0.0, 1.0);
    let recipes = [
        // Ω = 0, φ = π, σt = π/4  →  i^j u_{j,N−j}
        SU2Params::new(1.0, 0.0, PI, FRAC_PI_4).unwrap(),
        // Ω = g, φ = −π/2, σt = π/2 (σ = g√2)  →  (−i)^{j+N} u_{j,N−j}
        SU2Params::new(1.0, 1.0, -FRAC_PI_2, FRAC_PI_2 / SQRT_2).unwrap(),
        // Ω = φ = 0, σt = π/4  →  conj(i^j u_{j,N−j})
        SU2Params::new(1.0, 0.0, 0.0, FRAC_PI_4).unwrap(),
    ];
    let axis = linspace(-4.0, 4.0, 161);
    for (idx, p) in recipes.iter().enumerate() {
        let v = transfer_matrix(p);
        for n in 0..=8u32 {
            for j in 0..=n {
                let st = fock_coefficients(n, j, &v).unwrap();
                let mut dev = 0.0f64;
                for &x in &axis {
                    for &y in &axis {
                        let mode = i.powu(j) * lg_mode(j, n - j, x, y, SQRT_2);
                        let target = match idx {
                            0 => mode,
                            1 => (-i).powu(j + n) * lg_mode(j, n - j, x, y, SQRT_2),
                            _ => mode.conj(),
                        };
                        dev = dev.max((state_wavefunction(&st, x, y) - target).norm());
                    }
                }
                assert!(
                    dev < 1e-9,
                    "recipe {} N={} j={}: max wavefunction deviation {:e}",
                    idx,
                    n,
                    j,
                    dev
                );
            }
        }
    }
}

#[test]
fn criterion_5_hermite_and_laguerre_routes_agree_pointwise() {
    // The number-basis (Hermite-product) assembly and the modal
    // (Laguerre–Gaussian) assembly of the same state must agree at every
    // grid point for arbitrary evolution matrices.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED5);
    let axis = linspace(-4.0, 4.0, 21);
    for draw in 0..50 {
        let v = transfer_matrix(&random_params(&mut rng));
        for n in 0..=8u32 {
            for j in 0..=n {
                let st = fock_coefficients(n, j, &v).unwrap();
                let d = qvortex::vortex::vortex_decomposition(n, j, &v).unwrap();
                let mut dev = 0.0f64;
                for &x in &axis {
                    for &y in &axis {
                        let via_hg = state_wavefunction(&st, x, y);
                        let via_lg = qvortex::vortex::decomposition_wavefunction(&d, x, y);
                        dev = dev.max((via_hg - via_lg).norm());
                    }
                }
                assert!(
                    dev < 1e-9,
                    "draw {} N={} j={}: HG vs LG max deviation {:e}",
                    draw,
                    n,
                    j,
                    dev
                );
            }
        }
    }
}

#[test]
fn criterion_6_constant_entropy_scan_and_quartic_nodes() {
    // Θ = 0 with the beam-splitter preparation: the reduced spectrum is
    // frozen while the wavefunction keeps moving.
    let w = prep_matrix_vortex();
    let times = linspace(0.0, FRAC_PI_4, 50);
    let state_at = |t: f64| {
        let p = SU2Params::new(0.0, 1.0, 0.0, t).unwrap();
        fock_coefficients(4, 0, &compose(&transfer_matrix(&p), &w)).unwrap()
    };
    let entropies: Vec<f64> = times
        .iter()
        .map(|&t| entropy(&reduced_spectrum(&state_at(t))))
        .collect();
    let (lo, hi) = entropies
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &s| {
            (lo.min(s), hi.max(s))
        });
    assert!(
        hi - lo < 1e-10,
        "entropy varied by {:e} across the Θ = 0 scan",
        hi - lo
    );

    let first = state_at(times[0]);
    let last = state_at(*times.last().unwrap());
    let axis = linspace(-4.0, 4.0, 161);
    let cell = (8.0 / 160.0) * (8.0 / 160.0);
    let mut dist_sq = 0.0f64;
    let mut quartic_dev = 0.0f64;
    for &x in &axis {
        for &y in &axis {
            let a = state_wavefunction(&first, x, y);
            let b = state_wavefunction(&last, x, y);
            dist_sq += (a - b).norm_sqr() * cell;
            let u = x - y;
            let closed = (-0.5 * (x * x + y * y)).exp() * (-u.powi(4) + 6.0 * u * u - 3.0)
                / (24.0 * PI).sqrt();
            quartic_dev = quartic_dev.max((b - C64::new(closed, 0.0)).norm());
        }
    }
    let dist = dist_sq.sqrt();
    assert!(
        dist > 0.1,
        "endpoint wavefunctions too close: L2 distance {}",
        dist
    );
    assert!(
        quartic_dev < 1e-9,
        "Ωt = π/4 wavefunction strays from the closed quartic form by {:e}",
        quartic_dev
    );

    // The nodal circles of the quartic form sit at (x−y)² = 3 ± √6; find
    // the two sign changes along y = 0 by bisection and compare.
    let transect = |x: f64| state_wavefunction(&last, x, 0.0).re;
    let bisect = |mut lo: f64, mut hi: f64| {
        assert!(
            transect(lo) * transect(hi) < 0.0,
            "bracket [{}, {}] does not straddle a node",
            lo,
            hi
        );
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if transect(lo) * transect(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    };
    let inner = bisect(0.5, 1.0);
    let outer = bisect(2.0, 2.6);
    let expect_inner = (3.0 - 6.0f64.sqrt()).sqrt();
    let expect_outer = (3.0 + 6.0f64.sqrt()).sqrt();
    assert!(
        (inner - expect_inner).abs() < 1e-8,
        "inner node at {} vs expected {}",
        inner,
        expect_inner
    );
    assert!(
        (outer - expect_outer).abs() < 1e-8,
        "outer node at {} vs expected {}",
        outer,
        expect_outer
    );
}

#[test]
fn criterion_7_spatial_coherence_quadrature_and_limits() {
    // Closed-form γ(l) against direct quadrature of the correlation kernel.
    for n in 0..=8u32 {
        for j in 0..=n {
            for &r in &[0.37, 0.68] {
                let spec = prob_spectrum(n, j, r).unwrap();
                for &l in &[0.0, 0.9, 1.7, 2.8, 4.1, 6.0] {
                    let closed = spatial_coherence(&spec, l);
                    let quad = integrate(|x| correlation(&spec, x, x + l), -12.0, 12.0, 400);
                    assert!(
                        (closed - quad).abs() < 1e-8,
                        "N={} j={} R={} l={}: closed {} vs quadrature {}",
                        n,
                        j,
                        r,
                        l,
                        closed,
                        quad
                    );
                }
            }
            // δ-spectrum limits: R = 0 leaves mode b in |j⟩, R = 1 in |N−j⟩.
            for (r, hot) in [(0.0, j), (1.0, n - j)] {
                let spec = prob_spectrum(n, j, r).unwrap();
                for &l in &[0.0, 1.3, 3.7, 6.0] {
                    let closed = spatial_coherence(&spec, l);
                    let limit = (-l * l / 4.0).exp() * laguerre(hot, 0, l * l / 2.0);
                    assert_eq!(
                        closed, limit,
                        "N={} j={} R={} l={}: δ-limit must be exact",
                        n, j, r, l
                    );
                }
            }
        }
    }
    // Balanced sector N = 8, j = 4: the correlation grid is invariant
    // under R ↔ 1−R, so the R = 0.1 and R = 0.9 grids coincide.
    let axis = linspace(-5.0, 5.0, 201);
    let low = prob_spectrum(8, 4, 0.1).unwrap();
    let high = prob_spectrum(8, 4, 0.9).unwrap();
    let mut dev = 0.0f64;
    for &x in &axis {
        for &y in &axis {
            dev = dev.max((correlation(&low, x, y) - correlation(&high, x, y)).abs());
        }
    }
    assert!(
        dev < 1e-10,
        "N=8 j=4 correlation grids at R = 0.1 / 0.9 differ by {:e}",
        dev
    );
}

#[test]
fn criterion_8_unitarity_homomorphism_conservation_revival() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x8A8A);
    for _ in 0..6 {
        let pv = random_params(&mut rng);
        let pw = random_params(&mut rng);
        let v = transfer_matrix(&pv);
        let w = transfer_matrix(&pw);
        let vw = compose(&v, &w);
        for n in [0u32, 1, 5, 12] {
            let uv = induced_unitary(n, &v).unwrap();
            let uw = induced_unitary(n, &w).unwrap();
            let uvw = induced_unitary(n, &vw).unwrap();
            assert!(
                uv.unitarity_defect() < 1e-10,
                "N={}: induced matrix unitarity defect {:e}",
                n,
                uv.unitarity_defect()
            );
            let hom = uv.mul(&uw).max_abs_diff(&uvw);
            assert!(
                hom < 1e-10,
                "N={}: homomorphism defect {:e}",
                n,
                hom
            );
        }
        // Coherent amplitudes ride the 2×2 matrix directly; the total
        // intensity |α|² + |β|² is conserved exactly.
        let alpha = C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let beta = C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let (ae, be) = coherent_evolution(alpha, beta, &v);
        let before = alpha.norm_sqr() + beta.norm_sqr();
        let after = ae.norm_sqr() + be.norm_sqr();
        assert!(
            (before - after).abs() < 1e-12,
            "coherent intensity drifted: {} vs {}",
            before,
            after
        );
    }
    // Full revival at σt = 2π: the evolved state returns to the input
    // Fock state.
    let sigma = (0.5f64 * 0.5 + 1.2 * 1.2).sqrt();
    let p = SU2Params::new(1.2, 0.5, -0.9, 2.0 * PI / sigma).unwrap();
    let v = transfer_matrix(&p);
    for n in 0..=10u32 {
        for j in 0..=n {
            let st = fock_coefficients(n, j, &v).unwrap();
            let back = TwoModeState::fock(n, j).unwrap();
            let dev = state_distance(&st, &back);
            assert!(
                dev < 1e-9,
                "N={} j={}: revival deviation {:e} at σt = 2π",
                n,
                j,
                dev
            );
        }
    }
}
