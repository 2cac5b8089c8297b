//! Subcommands and their reports.

use std::path::PathBuf;

use clap::{Args, Subcommand};
use germs::mapgerm::{
    cross_cap_count, detect_qh_type, double_point_curve, is_finitely_determined, slice_exponents,
    transverse_slice, CorankOneGerm, QhType, SliceData,
};
use germs::milnor::{
    implicitize, implicitize_germ, milnor_from_exponents, milnor_implicit_oracle, milnor_multibranch,
    milnor_of_branch,
};
use germs::normalform::{
    deform_to_minimal, is_minimal_branch, is_minimal_germ, minimal_char_exponents, minimal_normal_form,
    minimal_normal_form_germ,
    MinimalitySpec,
};
use germs::poly::{rat, Polynomial, Var};
use germs::puiseux::{characteristic_exponents, CharExponents, PlaneCurveGerm, PuiseuxBranch};
use germs::unfolding::{counterexample_unfolding, whitney_verdict, Unfolding, UnfoldingVerdict, WhitneyVerdict};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::expr::parse_polynomial;
use crate::input::{parse_branch, parse_curve, parse_delta, parse_germ, parse_multi};
use crate::report::{Outcome, Report, EXIT_MISMATCH};
use crate::CliError;

#[derive(Debug, Clone, Args, Serialize)]
#[group(required = true, multiple = false)]
pub struct CurveSource {
    /// Branch `<m>:<expression in u>`, e.g. `8:u^10+u^11`.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    /// File with one branch per line.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Characteristic exponents of a branch.
    Exponents {
        #[arg(long)]
        branch: String,
    },
    /// Milnor number of a branch, a curve file or an implicit equation.
    Milnor {
        #[command(flatten)]
        #[serde(flatten)]
        source: MilnorSource,
        /// Also compute the intersection-number oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Normal form with least Milnor number.
    MinimalForm {
        #[arg(long, requires = "k", conflicts_with = "multi")]
        #[serde(skip_serializing_if = "Option::is_none")]
        m: Option<u64>,
        #[arg(long, requires = "m")]
        #[serde(skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
        /// Several branches: `m1,k1;m2,k2;...`.
        #[arg(long, required_unless_present = "m")]
        #[serde(skip_serializing_if = "Option::is_none")]
        multi: Option<String>,
    },
    /// Whether a branch or curve is µ-minimal.
    CheckMinimal {
        #[command(flatten)]
        #[serde(flatten)]
        source: CurveSource,
    },
    /// A one-parameter family reaching the minimal form.
    DeformMinimal {
        #[arg(long)]
        branch: String,
    },
    /// Double point curve and finite determinacy.
    Dpoints {
        /// Germ `<p>|<q>` for `(x, p, q)`.
        #[arg(long)]
        germ: String,
    },
    /// Transverse slice of the double point curve.
    Slice {
        #[arg(long)]
        germ: String,
        /// Use an explicit plane section even when a formula applies.
        #[arg(long)]
        geometric: bool,
    },
    /// Number of cross-caps in a stable perturbation.
    Crosscaps {
        #[arg(long)]
        germ: String,
    },
    /// Verdicts for the unfolding `(x + d1, p + d2, q + d3)`.
    Unfold {
        #[arg(long)]
        germ: String,
        #[arg(long, default_value = "0")]
        delta1: String,
        #[arg(long, default_value = "0")]
        delta2: String,
        #[arg(long, default_value = "0")]
        delta3: String,
    },
    /// Topologically trivial unfolding that changes the slice.
    Counterexample {
        #[arg(long)]
        germ: String,
    },
    /// Recompute the reference tables and compare with the expected values.
    VerifyTables {},
}

#[derive(Debug, Clone, Args, Serialize)]
#[group(required = true, multiple = false)]
pub struct MilnorSource {
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<PathBuf>,
    /// Equation `h(x, y)` with an isolated singularity at the origin.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub implicit: Option<String>,
}

impl Command {
    fn name_and_args(&self) -> (String, Map<String, Value>) {
        let v = serde_json::to_value(self).expect("commands serialize");
        let Value::Object(outer) = v else { unreachable!("struct variants serialize as maps") };
        let (name, args) = outer.into_iter().next().expect("one variant");
        let Value::Object(args) = args else { unreachable!("struct variants serialize as maps") };
        (name, args)
    }
}

pub fn run(cmd: &Command) -> Report {
    let (command, args) = cmd.name_and_args();
    let outcome = match cmd {
        Command::Exponents { branch } => exponents(branch),
        Command::Milnor { source, oracle } => milnor(source, *oracle),
        Command::MinimalForm { m, k, multi } => minimal_form(*m, *k, multi.as_deref()),
        Command::CheckMinimal { source } => check_minimal(source),
        Command::DeformMinimal { branch } => deform(branch),
        Command::Dpoints { germ } => dpoints(germ),
        Command::Slice { germ, geometric } => slice(germ, *geometric),
        Command::Crosscaps { germ } => crosscaps(germ),
        Command::Unfold { germ, delta1, delta2, delta3 } => unfold(germ, [delta1, delta2, delta3]),
        Command::Counterexample { germ } => counterexample(germ),
        Command::VerifyTables {} => Ok(verify_tables()),
    };
    Report { command, args, outcome }
}

type Run = Result<Outcome, CliError>;

fn read_curve(path: &PathBuf) -> Result<PlaneCurveGerm, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_curve(&text)
}

fn exps_json(e: &CharExponents) -> Value {
    json!(e.e)
}

fn exponents(branch: &str) -> Run {
    let b = parse_branch(branch)?;
    let e = characteristic_exponents(&b)?;
    let result = json!({
        "branch": b.to_string(),
        "exponents": exps_json(&e),
        "gcds": e.b,
        "m": e.m(),
        "k": e.k(),
    });
    Ok(Outcome::new(result, vec![format!("branch: {b}"), format!("exponents: {e}"), format!("gcds: {:?}", e.b)]))
}

fn milnor(source: &MilnorSource, oracle: bool) -> Run {
    if let Some(h) = &source.implicit {
        let h = parse_polynomial(h)?;
        let mu = milnor_implicit_oracle(&h)?;
        let result = json!({ "polynomial": h.to_string(), "oracle_mu": mu });
        return Ok(Outcome::new(result, vec![format!("h = {h}"), format!("oracle µ = {mu}")]));
    }
    let (germ, mu, h) = match (&source.branch, &source.curve) {
        (Some(b), _) => {
            let b = parse_branch(b)?;
            let mu = milnor_of_branch(&b)?;
            (PlaneCurveGerm::from(b.clone()), mu, oracle.then(|| implicitize(&b)))
        }
        (None, Some(path)) => {
            let g = read_curve(path)?;
            let mu = milnor_multibranch(&g)?;
            let h = oracle.then(|| implicitize_germ(&g));
            (g, mu, h)
        }
        (None, None) => return Err(CliError::Input("one of --branch, --curve, --implicit is required".into())),
    };
    let mut result = Map::new();
    result.insert("curve".into(), json!(germ.to_string()));
    result.insert("branches".into(), json!(germ.branches().len()));
    result.insert("mu".into(), json!(mu));
    let mut text = vec![format!("curve: {germ}"), format!("µ = {mu}")];
    if let Some(h) = h {
        let om = milnor_implicit_oracle(&h)?;
        result.insert("oracle_mu".into(), json!(om));
        result.insert("agree".into(), json!(om == mu));
        text.push(format!("oracle µ = {om}"));
    }
    Ok(Outcome::new(Value::Object(result), text))
}

fn branch_json(b: &PuiseuxBranch) -> Result<Value, CliError> {
    let e = characteristic_exponents(b)?;
    Ok(json!({ "branch": b.to_string(), "exponents": exps_json(&e), "mu": milnor_from_exponents(&e) }))
}

fn minimal_form(m: Option<u64>, k: Option<usize>, multi: Option<&str>) -> Run {
    if let Some(spec) = multi {
        let (ms, ks) = parse_multi(spec)?;
        let g = minimal_normal_form_germ(&MinimalitySpec::new(ms, ks)?)?;
        let mu = milnor_multibranch(&g)?;
        let branches = g.branches().iter().map(branch_json).collect::<Result<Vec<_>, _>>()?;
        let result = json!({ "spec": spec, "normal_form": g.to_string(), "branches": branches, "mu": mu });
        return Ok(Outcome::new(result, vec![format!("normal form: {g}"), format!("µ = {mu}")]));
    }
    let (Some(m), Some(k)) = (m, k) else {
        return Err(CliError::Input("--m and --k are required without --multi".into()));
    };
    let b = minimal_normal_form(m, k)?;
    let e = characteristic_exponents(&b)?;
    let mu = milnor_from_exponents(&e);
    let result = json!({ "m": m, "k": k, "normal_form": b.to_string(), "exponents": exps_json(&e), "mu": mu });
    Ok(Outcome::new(result, vec![format!("normal form: {b}"), format!("exponents: {e}"), format!("µ = {mu}")]))
}

fn check_minimal(source: &CurveSource) -> Run {
    let (g, minimal) = match (&source.branch, &source.curve) {
        (Some(b), _) => {
            let b = parse_branch(b)?;
            let minimal = is_minimal_branch(&b)?;
            (PlaneCurveGerm::from(b), minimal)
        }
        (None, Some(path)) => {
            let g = read_curve(path)?;
            let minimal = is_minimal_germ(&g)?;
            (g, minimal)
        }
        (None, None) => return Err(CliError::Input("one of --branch, --curve is required".into())),
    };
    let branches = g.branches().iter().map(branch_json).collect::<Result<Vec<_>, _>>()?;
    let result = json!({ "curve": g.to_string(), "branches": branches, "minimal": minimal });
    Ok(Outcome::new(result, vec![format!("curve: {g}"), format!("minimal: {minimal}")]))
}

fn deform(branch: &str) -> Run {
    let b = parse_branch(branch)?;
    let fam = deform_to_minimal(&b)?;
    let added: Vec<u64> = fam.added_terms[0].keys().copied().collect();
    let special = fam.specialize(&rat(1))?;
    let sb = &special.branches()[0];
    let result = json!({
        "family": fam.to_string(),
        "added_exponents": added,
        "already_minimal": fam.is_trivial(),
        "specialized": sb.to_string(),
        "specialized_exponents": exps_json(&characteristic_exponents(sb)?),
        "specialized_minimal": is_minimal_branch(sb)?,
    });
    Ok(Outcome::new(result, vec![format!("family: {fam}"), format!("at t = 1: {sb}")]))
}

fn dpoints(germ: &str) -> Run {
    let f = parse_germ(germ)?;
    let d = double_point_curve(&f)?;
    let fd = is_finitely_determined(&f)?;
    let result = json!({ "germ": f.to_string(), "double_point_curve": d.to_string(), "finitely_determined": fd });
    Ok(Outcome::new(result, vec![format!("D(f) = {d}"), format!("finitely determined: {fd}")]))
}

fn slice_json(s: &SliceData) -> Value {
    json!({ "exponents": exps_json(&s.exponents), "mu": s.mu, "case": s.case.tag() })
}

fn slice_text(s: &SliceData) -> String {
    format!("slice exponents {} µ = {} [{}]", s.exponents, s.mu, s.case.tag())
}

fn type_json(t: Option<&QhType>) -> Value {
    t.map_or(Value::Null, |t| json!(t.to_string()))
}

fn slice(germ: &str, geometric: bool) -> Run {
    let f = parse_germ(germ)?;
    let t = detect_qh_type(&f);
    let s = match &t {
        Some(t) if !geometric => match slice_exponents(&f, t) {
            Err(germs::error::Error::UnhandledCase(_)) => transverse_slice(&f)?,
            other => other?,
        },
        _ => transverse_slice(&f)?,
    };
    let e = &s.exponents;
    let minimal = minimal_char_exponents(e.m(), e.k())? == *e;
    let mut result = slice_json(&s);
    result["germ"] = json!(f.to_string());
    result["type"] = type_json(t.as_ref());
    result["minimal"] = json!(minimal);
    Ok(Outcome::new(result, vec![format!("germ: {f}"), slice_text(&s), format!("minimal: {minimal}")]))
}

fn crosscaps(germ: &str) -> Run {
    let f = parse_germ(germ)?;
    let n = cross_cap_count(&f)?;
    let result = json!({ "germ": f.to_string(), "cross_caps": n });
    Ok(Outcome::new(result, vec![format!("cross-caps: {n}")]))
}

fn whitney_name(w: WhitneyVerdict) -> &'static str {
    match w {
        WhitneyVerdict::Equisingular => "equisingular",
        WhitneyVerdict::NotEquisingular => "not_equisingular",
        WhitneyVerdict::Unknown => "unknown",
        WhitneyVerdict::NotApplicable => "not_applicable",
    }
}

fn verdict_json(f: &Unfolding, v: &UnfoldingVerdict) -> Value {
    let w = &v.witness;
    json!({
        "deltas": f.deltas().iter().map(Polynomial::to_string).collect::<Vec<_>>(),
        "non_negative_degree": v.non_negative_degree,
        "topologically_trivial": {
            "value": v.topologically_trivial.value,
            "citation": v.topologically_trivial.citation,
        },
        "equimultiple": v.equimultiple,
        "whitney": whitney_name(v.whitney),
        "whitney_citation": v.whitney_citation,
        "witness": {
            "slice_0": w.slice_0.as_ref().map(slice_json),
            "slice_t": w.slice_t.as_ref().map(slice_json),
            "predicted_mu_t": w.predicted_mu_t,
        },
    })
}

fn verdict_text(v: &UnfoldingVerdict) -> Vec<String> {
    let mut out = vec![
        format!("non-negative degree: {}", v.non_negative_degree),
        format!("topologically trivial: {} ({})", v.topologically_trivial.value, v.topologically_trivial.citation),
        format!("equimultiple: {}", v.equimultiple),
        format!("Whitney: {} ({})", whitney_name(v.whitney), v.whitney_citation),
    ];
    if let Some(s) = &v.witness.slice_0 {
        out.push(format!("t = 0: {}", slice_text(s)));
    }
    if let Some(s) = &v.witness.slice_t {
        out.push(format!("generic t: {}", slice_text(s)));
    }
    if let Some(mu) = v.witness.predicted_mu_t {
        out.push(format!("predicted µ at generic t: {mu}"));
    }
    out
}

fn unfold(germ: &str, deltas: [&String; 3]) -> Run {
    let f = parse_germ(germ)?;
    let d = [parse_delta(deltas[0])?, parse_delta(deltas[1])?, parse_delta(deltas[2])?];
    let fam = Unfolding::new(f.clone(), d)?;
    let t = detect_qh_type(&f);
    let v = whitney_verdict(&fam)?;
    let mut result = verdict_json(&fam, &v);
    result["germ"] = json!(f.to_string());
    result["type"] = type_json(t.as_ref());
    let mut text = vec![format!("germ: {f}")];
    text.extend(verdict_text(&v));
    Ok(Outcome::new(result, text))
}

fn counterexample(germ: &str) -> Run {
    let f = parse_germ(germ)?;
    let t = detect_qh_type(&f).ok_or(germs::error::Error::NotQuasihomogeneous)?;
    let cx = counterexample_unfolding(&f, &t)?;
    let deltas: Vec<String> = cx.unfolding.deltas().iter().map(Polynomial::to_string).collect();
    let result = json!({
        "germ": f.to_string(),
        "type": t.to_string(),
        "deltas": deltas,
        "mu_0": cx.mu_0,
        "predicted_mu_t": cx.predicted_mu_t,
    });
    let text = vec![
        format!("germ: {f} of type {t}"),
        format!("unfolding deltas: ({})", deltas.join(", ")),
        format!("µ(slice) = {} at t = 0, predicted {} at generic t", cx.mu_0, cx.predicted_mu_t),
    ];
    Ok(Outcome::new(result, text))
}

struct Cell {
    table: &'static str,
    row: usize,
    expected: String,
    got: String,
}

/// Normal form and µ for `m = 36`, by `k`.
const MINIMAL_FORMS: [(usize, &str, u64); 4] = [
    (2, "(u^36, u^37)", 1260),
    (3, "(u^36, u^38 + u^39)", 1296),
    (4, "(u^36, u^40 + u^42 + u^43)", 1372),
    (5, "(u^36, u^48 + u^52 + u^54 + u^55)", 1696),
];

/// Exponents `(a, b, c, d)` of the germ `(x, y^16 + x y^a, y^b + x y^c + x^d y)`.
type DropGerm = (u32, u32, u32, u32);

/// Drop germs with their slice exponents and `µ` before and after.
const SLICE_DROPS: [(DropGerm, &str, u64, u64); 4] = [
    ((15, 18, 17, 17), "(16,18,33)", 270, 268),
    ((13, 22, 19, 7), "(16,22,35)", 328, 326),
    ((11, 26, 21, 5), "(16,26,37)", 386, 384),
    ((9, 22, 15, 3), "(16,22,31)", 324, 322),
];

fn minimal_form_cell(k: usize) -> String {
    let got = minimal_normal_form(36, k).and_then(|b| Ok((milnor_of_branch(&b)?, b)));
    match got {
        Ok((mu, b)) => format!("{b} µ={mu}"),
        Err(e) => format!("error: {e}"),
    }
}

fn slice_drop_cell((a, b, c, d): DropGerm) -> String {
    let xy = |i: u32, j: u32| &Polynomial::var(Var::X).pow(i) * &Polynomial::var(Var::Y).pow(j);
    let compute = || -> Result<String, germs::error::Error> {
        let f = CorankOneGerm::new(&xy(0, 16) + &xy(1, a), &(&xy(0, b) + &xy(1, c)) + &xy(d, 1))?;
        let t = detect_qh_type(&f).ok_or(germs::error::Error::NotQuasihomogeneous)?;
        let cx = counterexample_unfolding(&f, &t)?;
        let v = whitney_verdict(&cx.unfolding)?;
        let (Some(s0), Some(st)) = (&v.witness.slice_0, &v.witness.slice_t) else {
            return Ok(format!("verdict {} without slices", whitney_name(v.whitney)));
        };
        Ok(format!("{} µ={} -> {}", s0.exponents, s0.mu, st.mu))
    };
    compute().unwrap_or_else(|e| format!("error: {e}"))
}

fn verify_tables() -> Outcome {
    let mut cells: Vec<Cell> = MINIMAL_FORMS
        .iter()
        .enumerate()
        .map(|(i, &(k, form, mu))| Cell {
            table: "minimal-forms",
            row: i + 1,
            expected: format!("{form} µ={mu}"),
            got: minimal_form_cell(k),
        })
        .collect();
    let rows: Vec<String> = std::thread::scope(|s| {
        let handles: Vec<_> = SLICE_DROPS.iter().map(|&(g, ..)| s.spawn(move || slice_drop_cell(g))).collect();
        handles.into_iter().map(|h| h.join().expect("table worker panicked")).collect()
    });
    for (i, (&(_, e, mu0, mut_), got)) in SLICE_DROPS.iter().zip(rows).enumerate() {
        cells.push(Cell { table: "slice-drops", row: i + 1, expected: format!("{e} µ={mu0} -> {mut_}"), got });
    }
    let matched = cells.iter().filter(|c| c.expected == c.got).count();
    let total = cells.len();
    let mut text: Vec<String> = cells
        .iter()
        .map(|c| {
            let mark = if c.expected == c.got { "ok  " } else { "FAIL" };
            format!("{mark} {} row {}: {} (expected {})", c.table, c.row, c.got, c.expected)
        })
        .collect();
    text.push(format!("{matched}/{total} table cells match"));
    let cells_json: Vec<Value> = cells
        .iter()
        .map(|c| {
            json!({ "table": c.table, "row": c.row, "expected": c.expected, "got": c.got, "match": c.expected == c.got })
        })
        .collect();
    let result = json!({ "cells": cells_json, "matched": matched, "total": total });
    let mut out = Outcome::new(result, text);
    if matched != total {
        out.exit_code = EXIT_MISMATCH;
    }
    out
}
