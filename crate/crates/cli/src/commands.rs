use std::io::Write;

use anyhow::Result;
use ptqm::brachistochrone::{compare_at, DEFAULT_SWEEP_ALPHA_MAX, DEFAULT_SWEEP_ALPHA_MIN};
use ptqm::{
    cpt_normalize, derive_pt, equivalence_sweep, operator_set, pt_eigenvectors_normalized,
    selftest, trace_evolution, CMat2, CVec2, PTParams, SweepRow,
};
use serde_json::json;

use crate::output::{Cell, OutputFormat, Table};
use crate::{Ctx, Failure, StateChoice};

/// Operator residuals above this make `operators` exit with a check failure.
const OPERATOR_TOL: f64 = 1e-10;

pub struct Report {
    pub table: Table,
    /// Replaces the row array in JSON mode.
    pub json: Option<serde_json::Value>,
    pub failure: Option<String>,
}

impl Report {
    fn ok(table: Table) -> Self {
        Self { table, json: None, failure: None }
    }

    pub fn emit<W: Write>(&self, format: OutputFormat, mut out: W) -> Result<()> {
        match (&self.json, format) {
            (Some(v), OutputFormat::Json) => {
                serde_json::to_writer_pretty(&mut out, v)?;
                writeln!(out)?;
                Ok(())
            }
            _ => self.table.write(format, out),
        }
    }
}

fn params(ctx: &Ctx, r: f64, s: f64, psi: f64) -> Result<PTParams, Failure> {
    Ok(PTParams::new(r, s, ctx.angle(psi))?)
}

pub fn spectrum(ctx: &Ctx, r: f64, s: f64, psi: f64) -> Result<Report, Failure> {
    let d = derive_pt(&params(ctx, r, s, psi)?)?;
    let mut t = Table::new(&["alpha", "eps_plus", "eps_minus", "omega", "phase"]);
    t.push(vec![
        d.alpha.into(),
        d.eps_plus.into(),
        d.eps_minus.into(),
        d.omega.into(),
        Cell::Text(d.phase.as_str().to_owned()),
    ]);
    Ok(Report::ok(t))
}

fn matrix_headers(name: &str) -> Vec<String> {
    let mut h = Vec::new();
    for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        h.push(format!("{name}{i}{j}_re"));
        h.push(format!("{name}{i}{j}_im"));
    }
    h
}

fn matrix_cells(m: &CMat2) -> Vec<Cell> {
    m.entries().iter().flat_map(|z| [Cell::Num(z.re), Cell::Num(z.im)]).collect()
}

pub fn operators(ctx: &Ctx, r: f64, s: f64, psi: f64) -> Result<Report, Failure> {
    let p = params(ctx, r, s, psi)?;
    let d = derive_pt(&p)?;
    d.require_unbroken()?;
    let ops = operator_set(&p)?;
    let res = ops.residuals;
    let residuals = [
        ("c_squared_residual", res.c_squared_residual),
        ("ch_commutator_residual", res.ch_commutator_residual),
        ("cpt_commutator_residual", res.cpt_commutator_residual),
        ("completeness_residual", res.completeness_residual),
        ("p_reconstruction_residual", res.p_reconstruction_residual),
    ];

    let mut headers = vec!["alpha".to_owned()];
    headers.extend(matrix_headers("p"));
    headers.extend(matrix_headers("c"));
    headers.extend(residuals.iter().map(|(n, _)| n.to_string()));
    let mut row = vec![Cell::Num(ops.alpha)];
    row.extend(matrix_cells(&ops.p));
    row.extend(matrix_cells(&ops.c));
    row.extend(residuals.iter().map(|&(_, v)| Cell::Num(v)));
    let mut t = Table::new(&headers);
    t.push(row);

    let failure = residuals
        .iter()
        .find(|(_, v)| !(*v < OPERATOR_TOL))
        .map(|(n, v)| format!("{n} = {v:e} exceeds {OPERATOR_TOL:e}"));
    Ok(Report { table: t, json: None, failure })
}

pub fn evolve(
    ctx: &Ctx,
    r: f64,
    s: f64,
    psi: f64,
    t_max: f64,
    steps: usize,
    state: StateChoice,
) -> Result<Report, Failure> {
    if !(t_max >= 0.0 && t_max.is_finite()) {
        return Err(Failure::Usage(format!("--t-max must be finite and >= 0, got {t_max}")));
    }
    if t_max > 0.0 && steps < 2 {
        return Err(Failure::Usage(format!("--steps must be >= 2, got {steps}")));
    }
    let p = params(ctx, r, s, psi)?;
    let d = derive_pt(&p)?;
    d.require_unbroken()?;
    let ops = operator_set(&p)?;
    let (ep, em) = pt_eigenvectors_normalized(&d)?;
    let v0 = match state {
        StateChoice::Nu1 => cpt_normalize(&CVec2::nu1(), &ops)?,
        StateChoice::Nu2 => cpt_normalize(&CVec2::nu2(), &ops)?,
        StateChoice::EpsPlus => ep,
        StateChoice::EpsMinus => em,
    };
    let tr = trace_evolution(&p, &v0, t_max, steps, &ctx.cfg)?;
    let mut t = Table::new(&["time", "re0", "im0", "re1", "im1", "cpt_norm", "dirac_norm"]);
    for k in 0..tr.len() {
        let v = tr.states[k];
        t.push(
            [tr.times[k], v.c0.re, v.c0.im, v.c1.re, v.c1.im, tr.cpt_norms[k], tr.dirac_norms[k]]
                .map(Cell::Num)
                .to_vec(),
        );
    }
    Ok(Report::ok(t))
}

fn sweep_table(rows: &[SweepRow]) -> Table {
    let mut t = Table::new(&SweepRow::HEADERS);
    for row in rows {
        t.push(row.values().map(Cell::Num).to_vec());
    }
    t
}

pub fn brachistochrone(ctx: &Ctx, r: f64, s: f64, psi: f64) -> Result<Report, Failure> {
    let p = params(ctx, r, s, psi)?;
    derive_pt(&p)?.require_unbroken()?;
    Ok(Report::ok(sweep_table(&[compare_at(&p, &ctx.cfg)?])))
}

pub fn sweep(
    ctx: &Ctx,
    alpha_min: Option<f64>,
    alpha_max: Option<f64>,
    steps: usize,
    s: f64,
) -> Result<Report, Failure> {
    if steps < 2 {
        return Err(Failure::Usage(format!("--steps must be >= 2, got {steps}")));
    }
    let lo = alpha_min.map_or(DEFAULT_SWEEP_ALPHA_MIN, |a| ctx.angle(a));
    let hi = alpha_max.map_or(DEFAULT_SWEEP_ALPHA_MAX, |a| ctx.angle(a));
    let rows = equivalence_sweep(lo, hi, steps, s, &ctx.cfg)?;
    let failure = rows
        .iter()
        .find(|row| !(row.equivalence_residual() < ctx.cfg.tol))
        .map(|row| {
            format!(
                "equivalence residual {:e} at alpha = {} exceeds tol {:e}",
                row.equivalence_residual(),
                row.alpha,
                ctx.cfg.tol
            )
        });
    Ok(Report { table: sweep_table(&rows), json: None, failure })
}

pub fn selftest(ctx: &Ctx) -> Result<Report, Failure> {
    let results = selftest::run(&ctx.cfg)?;
    let mut t = Table::new(&["suite", "passed", "worst", "threshold"]);
    for r in &results {
        t.push(vec![
            Cell::Text(r.name.to_owned()),
            Cell::Bool(r.passed),
            Cell::Num(r.worst),
            Cell::Num(r.threshold),
        ]);
    }
    let all = results.iter().all(|r| r.passed);
    let failure = results.iter().find(|r| !r.passed).map(|r| {
        format!("{} (worst {:e}, threshold {:e})", r.name, r.worst, r.threshold)
    });
    let json = json!({
        "passed": all,
        "hbar": ctx.cfg.hbar,
        "tol": ctx.cfg.tol,
        "suites": results,
    });
    Ok(Report { table: t, json: Some(json), failure })
}
