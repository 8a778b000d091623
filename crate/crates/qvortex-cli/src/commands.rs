//! Implementations of the subcommands: each one assembles a [`Table`] (or a
//! JSON report) from library calls and writes it to the requested sink.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};

use qvortex::coherence::{correlation, spatial_coherence};
use qvortex::num_complex::Complex64 as C64;
use qvortex::oracle::{expm_evolve, hamiltonian_matrix};
use qvortex::su2::{
    compose, entropy, entropy_nats, fock_coefficients, prep_matrix_vortex, prob_spectrum,
    transfer_matrix,
};
use qvortex::vortex::{
    classify_special_condition, detect_single_vortex, principal_phase, state_wavefunction,
    GammaBranch, SpecialCondition,
};
use qvortex::{ReducedSpectrum, SU2Params, TransferMatrix, TwoModeState};

use crate::args::{
    linspace, CoherenceArgs, Command, CorrelationArgs, DetectArgs, EntropyScanArgs,
    EntropyVsJArgs, EntropyVsNArgs, EvolutionArgs, LogBase, OracleCheckArgs, PrepArgs, PrepKind,
    WavefunctionArgs,
};
use crate::table::{open_sink, Table};

/// Dispatches a parsed subcommand; the returned integer is the process exit
/// code (only `oracle-check` can succeed with a nonzero code).
pub fn run(cmd: Command) -> Result<i32> {
    match cmd {
        Command::EntropyScan(a) => entropy_scan(a).map(|()| 0),
        Command::EntropyVsJ(a) => entropy_vs_j(a).map(|()| 0),
        Command::EntropyVsN(a) => entropy_vs_n(a).map(|()| 0),
        Command::Wavefunction(a) => wavefunction(a).map(|()| 0),
        Command::Correlation(a) => correlation_grid(a).map(|()| 0),
        Command::Coherence(a) => coherence_map(a).map(|()| 0),
        Command::Detect(a) => detect(a).map(|()| 0),
        Command::OracleCheck(a) => oracle_check(a),
    }
}

fn su2_params(e: &EvolutionArgs) -> Result<SU2Params> {
    Ok(SU2Params::new(e.coupling, e.detuning, e.phi, e.time)?)
}

fn evolution_echo(e: &EvolutionArgs) -> Vec<(String, String)> {
    vec![
        ("coupling".into(), e.coupling.to_string()),
        ("detuning".into(), e.detuning.to_string()),
        ("phi".into(), e.phi.to_string()),
        ("time".into(), e.time.to_string()),
    ]
}

fn entropy_in(base: LogBase, spec: &ReducedSpectrum) -> f64 {
    match base {
        LogBase::Two => entropy(spec),
        LogBase::E => entropy_nats(spec),
    }
}

fn base_name(base: LogBase) -> &'static str {
    match base {
        LogBase::Two => "2",
        LogBase::E => "e",
    }
}

fn parse_prep_matrix(s: &str) -> Result<TransferMatrix> {
    let vals: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .context("parsing --prep-matrix")?;
    if vals.len() != 8 {
        bail!(
            "--prep-matrix needs 8 comma-separated reals (re/im of the four entries), got {}",
            vals.len()
        );
    }
    TransferMatrix::new(
        C64::new(vals[0], vals[1]),
        C64::new(vals[2], vals[3]),
        C64::new(vals[4], vals[5]),
        C64::new(vals[6], vals[7]),
    )
    .context("custom preparation matrix rejected")
}

/// Resolves `--prep`/`--prep-matrix` into an optional preparation unitary
/// plus the config lines echoing the choice.
fn resolve_prep(p: &PrepArgs) -> Result<(Option<TransferMatrix>, Vec<(String, String)>)> {
    if p.prep != PrepKind::Custom && p.prep_matrix.is_some() {
        bail!("--prep-matrix is only meaningful with --prep custom");
    }
    match p.prep {
        PrepKind::Fock => Ok((None, vec![("prep".into(), "fock".into())])),
        PrepKind::Vortex => Ok((
            Some(prep_matrix_vortex()),
            vec![("prep".into(), "vortex".into())],
        )),
        PrepKind::Custom => {
            let s = p
                .prep_matrix
                .as_ref()
                .ok_or_else(|| anyhow!("--prep custom requires --prep-matrix"))?;
            let m = parse_prep_matrix(s)?;
            Ok((
                Some(m),
                vec![
                    ("prep".into(), "custom".into()),
                    ("prep_matrix".into(), s.clone()),
                ],
            ))
        }
    }
}

/// The matrix whose induced action evolves the input Fock state: the
/// transfer matrix itself, or its composition with the preparation unitary.
fn effective_matrix(params: &SU2Params, prep: &Option<TransferMatrix>) -> TransferMatrix {
    let v = transfer_matrix(params);
    match prep {
        Some(w) => compose(&v, w),
        None => v,
    }
}

fn entropy_scan(a: EntropyScanArgs) -> Result<()> {
    if a.samples < 2 {
        bail!("--samples must be at least 2");
    }
    let js: Vec<u32> = if a.j.is_empty() {
        (0..=a.total_n).collect()
    } else {
        a.j.clone()
    };
    let config = vec![
        ("total_n".into(), a.total_n.to_string()),
        (
            "j".into(),
            js.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(","),
        ),
        ("samples".into(), a.samples.to_string()),
        ("log_base".into(), base_name(a.log_base).into()),
    ];
    let mut columns = vec!["r".to_string()];
    columns.extend(js.iter().map(|j| format!("s_j{j}")));
    let mut table = Table::new("entropy-scan", config, columns);
    for &r in &linspace(0.0, 1.0, a.samples) {
        let mut row = vec![r];
        for &j in &js {
            row.push(entropy_in(a.log_base, &prob_spectrum(a.total_n, j, r)?));
        }
        table.push(row);
    }
    table.write(a.output.out.as_deref(), a.output.format)
}

fn entropy_vs_j(a: EntropyVsJArgs) -> Result<()> {
    let config = vec![
        ("total_n".into(), a.total_n.to_string()),
        ("reflectivity".into(), "0.5".into()),
        ("log_base".into(), base_name(a.log_base).into()),
    ];
    let mut table = Table::new("entropy-vs-j", config, vec!["j".into(), "s".into()]);
    for j in 0..=a.total_n {
        let s = entropy_in(a.log_base, &prob_spectrum(a.total_n, j, 0.5)?);
        table.push(vec![f64::from(j), s]);
    }
    table.write(a.output.out.as_deref(), a.output.format)
}

fn entropy_vs_n(a: EntropyVsNArgs) -> Result<()> {
    if a.total_n < 1 {
        bail!("--total-n must be at least 1");
    }
    let config = vec![
        ("max_n".into(), a.total_n.to_string()),
        ("reflectivity".into(), "0.5".into()),
        ("log_base".into(), base_name(a.log_base).into()),
    ];
    let columns = vec!["n".into(), "s_j0".into(), "s_j1".into(), "s_jhalf".into()];
    let mut table = Table::new("entropy-vs-n", config, columns);
    for n in 1..=a.total_n {
        let s = |j: u32| -> Result<f64> {
            Ok(entropy_in(a.log_base, &prob_spectrum(n, j, 0.5)?))
        };
        table.push(vec![f64::from(n), s(0)?, s(1)?, s(n / 2)?]);
    }
    table.write(a.output.out.as_deref(), a.output.format)
}

fn wavefunction(a: WavefunctionArgs) -> Result<()> {
    let params = su2_params(&a.evolution)?;
    let (prep, prep_echo) = resolve_prep(&a.prep)?;
    let st = fock_coefficients(a.total_n, a.j, &effective_matrix(&params, &prep))?;
    let mut config = vec![
        ("total_n".into(), a.total_n.to_string()),
        ("j".into(), a.j.to_string()),
    ];
    config.extend(evolution_echo(&a.evolution));
    config.extend(prep_echo);
    config.push(("grid".into(), a.grid.echo()));
    let columns = vec!["x".into(), "y".into(), "prob".into(), "phase".into()];
    let mut table = Table::new("wavefunction", config, columns);
    for &x in &a.grid.xs() {
        for &y in &a.grid.ys() {
            let psi = state_wavefunction(&st, x, y);
            table.push(vec![x, y, psi.norm_sqr(), principal_phase(psi)]);
        }
    }
    table.write(a.output.out.as_deref(), a.output.format)
}

fn correlation_grid(a: CorrelationArgs) -> Result<()> {
    if !(0.0..=1.0).contains(&a.reflectivity) {
        bail!("--reflectivity must lie in [0, 1]");
    }
    let spec = prob_spectrum(a.total_n, a.j, a.reflectivity)?;
    let config = vec![
        ("total_n".into(), a.total_n.to_string()),
        ("j".into(), a.j.to_string()),
        ("reflectivity".into(), a.reflectivity.to_string()),
        ("grid".into(), a.grid.echo()),
    ];
    let columns = vec!["x".into(), "y".into(), "value".into()];
    let mut table = Table::new("correlation", config, columns);
    for &x in &a.grid.xs() {
        for &y in &a.grid.ys() {
            table.push(vec![x, y, correlation(&spec, x, y)]);
        }
    }
    table.write(a.output.out.as_deref(), a.output.format)
}

fn coherence_map(a: CoherenceArgs) -> Result<()> {
    if a.l_count < 2 || a.r_count < 2 {
        bail!("--l-count and --r-count must be at least 2");
    }
    if !(a.l_max > 0.0) {
        bail!("--l-max must be positive");
    }
    let rs = linspace(0.0, 1.0, a.r_count);
    let specs: Vec<ReducedSpectrum> = rs
        .iter()
        .map(|&r| prob_spectrum(a.total_n, a.j, r))
        .collect::<qvortex::Result<_>>()?;
    let config = vec![
        ("total_n".into(), a.total_n.to_string()),
        ("j".into(), a.j.to_string()),
        ("l_max".into(), a.l_max.to_string()),
        ("l_count".into(), a.l_count.to_string()),
        ("r_count".into(), a.r_count.to_string()),
    ];
    let columns = vec!["l".into(), "r".into(), "gamma".into()];
    let mut table = Table::new("coherence", config, columns);
    for &l in &linspace(0.0, a.l_max, a.l_count) {
        for (spec, &r) in specs.iter().zip(rs.iter()) {
            table.push(vec![l, r, spatial_coherence(spec, l)]);
        }
    }
    table.write(a.output.out.as_deref(), a.output.format)
}

fn branch_name(b: GammaBranch) -> &'static str {
    match b {
        GammaBranch::Plus => "gamma_plus",
        GammaBranch::Minus => "gamma_minus",
        GammaBranch::None => "none",
    }
}

fn condition_name(c: SpecialCondition) -> &'static str {
    match c {
        SpecialCondition::Revival => "revival",
        SpecialCondition::Eigenstate => "eigenstate",
        SpecialCondition::ChargeConjugation => "charge_conjugation",
        SpecialCondition::Generic => "generic",
    }
}

fn write_json_report(path: Option<&Path>, payload: &serde_json::Value) -> Result<()> {
    let mut sink = open_sink(path)?;
    serde_json::to_writer_pretty(&mut sink, payload)?;
    use std::io::Write;
    writeln!(sink)?;
    sink.flush()?;
    Ok(())
}

fn detect(a: DetectArgs) -> Result<()> {
    let params = su2_params(&a.evolution)?;
    let (prep, prep_echo) = resolve_prep(&a.prep)?;
    let report = detect_single_vortex(a.total_n, a.j, &effective_matrix(&params, &prep), a.tol)?;
    let classification = classify_special_condition(&params);
    let mut config = serde_json::Map::new();
    config.insert("command".into(), "detect".into());
    config.insert("total_n".into(), a.total_n.to_string().into());
    config.insert("j".into(), a.j.to_string().into());
    for (k, v) in evolution_echo(&a.evolution) {
        config.insert(k, v.into());
    }
    for (k, v) in prep_echo {
        config.insert(k, v.into());
    }
    config.insert("tol".into(), a.tol.to_string().into());
    let payload = serde_json::json!({
        "config": config,
        "classification": condition_name(classification),
        "vortex": {
            "is_single_vortex": report.is_single_vortex,
            "branch": branch_name(report.branch),
            "lg_indices": report.lg_indices.map(|(m, n)| vec![m, n]),
            "charge_label": report.charge_label,
            "measured_winding": report.measured_winding,
        },
    });
    write_json_report(a.out.as_deref(), &payload)
}

fn oracle_check(a: OracleCheckArgs) -> Result<i32> {
    if !(a.tol > 0.0) {
        bail!("--tol must be positive");
    }
    let params = su2_params(&a.evolution)?;
    let v = transfer_matrix(&params);
    let h = hamiltonian_matrix(a.total_n, &params);
    let mut worst = 0.0f64;
    for j in 0..=a.total_n {
        let analytic = fock_coefficients(a.total_n, j, &v)?;
        let reference = expm_evolve(&h, params.t(), &TwoModeState::fock(a.total_n, j)?)?;
        for (x, y) in analytic.amps().iter().zip(reference.amps().iter()) {
            worst = worst.max((x - y).norm());
        }
    }
    let pass = worst <= a.tol;
    println!(
        "oracle check: N = {}, max componentwise deviation {:e} (tolerance {:e}): {}",
        a.total_n,
        worst,
        a.tol,
        if pass { "PASS" } else { "FAIL" }
    );
    if a.out.is_some() {
        let mut config = serde_json::Map::new();
        config.insert("command".into(), "oracle-check".into());
        config.insert("total_n".into(), a.total_n.to_string().into());
        for (k, v) in evolution_echo(&a.evolution) {
            config.insert(k, v.into());
        }
        config.insert("tol".into(), a.tol.to_string().into());
        let payload = serde_json::json!({
            "config": config,
            "max_deviation": worst,
            "tol": a.tol,
            "pass": pass,
        });
        write_json_report(a.out.as_deref(), &payload)?;
    }
    Ok(if pass { 0 } else { 2 })
}
