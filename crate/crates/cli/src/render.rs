//! Text, JSON and CSV serialization of library results.
//!
//! Everything printed to stdout is deterministic: JSON objects serialize
//! with sorted keys, every map in the library iterates in a fixed order,
//! and no timing or other run-specific information enters these strings.

use std::fmt::Write as _;

use serde_json::{json, Value};
use tracecode::{
    CodeParams, CompleteWeightEnumerator, CycInt, GriesmerReport, MomentCheck, PlessReport,
    Solvability, VerificationReport, WeightDistribution, WeilClosedForm,
};

/// PASS/FAIL token, colored only when the caller decided stdout is a
/// terminal that wants color.
pub fn status(ok: bool, color: bool) -> String {
    match (ok, color) {
        (true, true) => "\x1b[32mPASS\x1b[0m".into(),
        (false, true) => "\x1b[31mFAIL\x1b[0m".into(),
        (true, false) => "PASS".into(),
        (false, false) => "FAIL".into(),
    }
}

fn json_i128(v: i128) -> Value {
    match i64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

fn json_u128(v: u128) -> Value {
    match u64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

pub fn wd_json(wd: &WeightDistribution) -> Value {
    let rows: Vec<Value> = wd
        .counts()
        .iter()
        .map(|(&w, &a)| json!({ "weight": w, "multiplicity": a }))
        .collect();
    Value::Array(rows)
}

pub fn cwe_json(cwe: &CompleteWeightEnumerator) -> Value {
    let rows: Vec<Value> = cwe
        .terms()
        .iter()
        .map(|(comp, &mult)| json!({ "composition": comp, "multiplicity": mult }))
        .collect();
    Value::Array(rows)
}

fn moment_json(check: &MomentCheck) -> Value {
    json!({
        "lhs": json_i128(check.lhs),
        "rhs": json_i128(check.rhs),
        "passed": check.passed(),
    })
}

pub fn pless_json(report: &PlessReport) -> Value {
    json!({
        "zeroth": moment_json(&report.zeroth),
        "first": moment_json(&report.first),
        "second": moment_json(&report.second),
        "passed": report.passed(),
    })
}

pub fn griesmer_json(report: &GriesmerReport) -> Value {
    json!({ "bound": json_u128(report.bound), "class": report.class.as_str() })
}

fn wd_text(out: &mut String, wd: &WeightDistribution) {
    for (w, a) in wd.counts() {
        let _ = writeln!(out, "  weight {w}: {a}");
    }
}

fn cwe_text(out: &mut String, cwe: &CompleteWeightEnumerator) {
    for (comp, mult) in cwe.terms() {
        let comps: Vec<String> = comp.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "  ({}) x {mult}", comps.join(", "));
    }
}

pub struct ConstructOutcome {
    pub p: u64,
    pub e: u32,
    pub l: u32,
    pub modulus: Vec<u64>,
    pub params: CodeParams,
    pub wd: WeightDistribution,
    pub cwe: CompleteWeightEnumerator,
    pub pless: PlessReport,
    pub griesmer: GriesmerReport,
}

pub fn construct_text(o: &ConstructOutcome, color: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "[{}, {}, {}] code over F_{} from F_{{{}^{}}}, Frobenius exponent l = {}",
        o.params.n, o.params.k, o.params.d, o.p, o.p, o.e, o.l
    );
    let _ = writeln!(out, "modulus: {:?}", o.modulus);
    let _ = writeln!(out, "weight distribution ({} distinct nonzero weights):", o.wd.nonzero_weight_count());
    wd_text(&mut out, &o.wd);
    let _ = writeln!(out, "complete weight enumerator ({} distinct compositions):", o.cwe.terms().len());
    cwe_text(&mut out, &o.cwe);
    let _ = writeln!(out, "power moments: {}", status(o.pless.passed(), color));
    let _ = writeln!(out, "griesmer bound: {} ({})", o.griesmer.bound, o.griesmer.class.as_str());
    out
}

pub fn construct_json(o: &ConstructOutcome) -> Value {
    json!({
        "p": o.p,
        "e": o.e,
        "l": o.l,
        "modulus": o.modulus,
        "n": o.params.n,
        "k": o.params.k,
        "d": o.params.d,
        "weight_distribution": wd_json(&o.wd),
        "complete_weight_enumerator": cwe_json(&o.cwe),
        "pless": pless_json(&o.pless),
        "griesmer": griesmer_json(&o.griesmer),
    })
}

pub fn construct_csv(wd: &WeightDistribution) -> String {
    let mut out = String::from("weight,multiplicity\n");
    for (w, a) in wd.counts() {
        let _ = writeln!(out, "{w},{a}");
    }
    out
}

pub fn verify_text(r: &VerificationReport, color: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "verifying closed forms at p = {}, e = {}, l = {} (modulus {:?}, generator {})",
        r.spec.p, r.spec.e, r.spec.l, r.modulus, r.generator
    );
    let _ = writeln!(
        out,
        "length: {} (brute {}, predicted {})",
        status(r.length_match, color),
        r.brute_n,
        r.predicted_n
    );
    let _ = writeln!(out, "weight distribution: {}", status(r.wd_match, color));
    let _ = writeln!(out, "complete weight enumerator: {}", status(r.cwe_match, color));
    let _ = writeln!(
        out,
        "per-codeword symbol counts: {} ({} mismatches over {} codewords)",
        status(r.per_codeword_mismatch_count == 0, color),
        r.per_codeword_mismatch_count,
        r.spec.q * r.spec.q
    );
    for w in &r.per_codeword_witnesses {
        let _ = writeln!(
            out,
            "  witness a_index={} b_index={} predicted={:?} actual={:?}",
            w.a_index, w.b_index, w.predicted, w.actual
        );
    }
    for f in &r.findings {
        let _ = writeln!(out, "finding: {f}");
    }
    let _ = writeln!(out, "overall: {}", status(r.all_match(), color));
    out
}

pub fn verify_json(r: &VerificationReport) -> Value {
    let witnesses: Vec<Value> = r
        .per_codeword_witnesses
        .iter()
        .map(|w| {
            json!({
                "a_index": w.a_index,
                "b_index": w.b_index,
                "predicted": w.predicted,
                "actual": w.actual,
            })
        })
        .collect();
    json!({
        "p": r.spec.p,
        "e": r.spec.e,
        "l": r.spec.l,
        "modulus": r.modulus,
        "generator": r.generator,
        "brute_n": r.brute_n,
        "predicted_n": r.predicted_n,
        "length_match": r.length_match,
        "brute_weight_distribution": wd_json(&r.brute_wd),
        "predicted_weight_distribution": r.predicted_wd.as_ref().map(wd_json),
        "wd_match": r.wd_match,
        "brute_cwe": cwe_json(&r.brute_cwe),
        "predicted_cwe": cwe_json(&r.predicted_cwe),
        "cwe_match": r.cwe_match,
        "per_codeword_mismatch_count": r.per_codeword_mismatch_count,
        "per_codeword_witnesses": witnesses,
        "findings": r.findings,
        "all_match": r.all_match(),
    })
}

fn cyc_text(v: &CycInt) -> String {
    match v.as_rational_integer() {
        Some(n) => n.to_string(),
        None => format!("{v}"),
    }
}

fn cyc_json(v: &CycInt) -> Value {
    json!({
        "coeffs": v.coeffs(),
        "integer": v.as_rational_integer(),
    })
}

fn solvability_json(s: &Solvability) -> Value {
    match s {
        Solvability::Unique => json!({ "kind": "unique" }),
        Solvability::Kernel { solutions } => json!({ "kind": "kernel", "solutions": solutions }),
        Solvability::Unsolvable => json!({ "kind": "unsolvable" }),
    }
}

fn solvability_text(s: &Solvability) -> String {
    match s {
        Solvability::Unique => "unique solution".into(),
        Solvability::Kernel { solutions } => format!("{solutions} solutions"),
        Solvability::Unsolvable => "unsolvable".into(),
    }
}

pub struct WeilOutcome {
    pub p: u64,
    pub e: u32,
    pub l: u32,
    pub alpha_index: u64,
    pub beta_index: u64,
    pub brute: CycInt,
    /// None when the closed form was not requested.
    pub closed: Option<WeilClosedForm>,
}

impl WeilOutcome {
    pub fn matches(&self) -> Option<bool> {
        self.closed.as_ref().map(|c| c.value == self.brute)
    }
}

pub fn weil_text(o: &WeilOutcome, color: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "S(alpha, beta) over F_{{{}^{}}} with l = {}, alpha index {}, beta index {}",
        o.p, o.e, o.l, o.alpha_index, o.beta_index
    );
    let _ = writeln!(out, "brute force: {}", cyc_text(&o.brute));
    match &o.closed {
        None => {
            let _ = writeln!(out, "closed form: n/a");
        }
        Some(c) => {
            let _ = writeln!(
                out,
                "closed form: {} ({})",
                cyc_text(&c.value),
                solvability_text(&c.solvability)
            );
            let _ = writeln!(out, "agreement: {}", status(o.matches() == Some(true), color));
        }
    }
    out
}

pub fn weil_json(o: &WeilOutcome) -> Value {
    json!({
        "p": o.p,
        "e": o.e,
        "l": o.l,
        "alpha_index": o.alpha_index,
        "beta_index": o.beta_index,
        "brute": cyc_json(&o.brute),
        "closed": o.closed.as_ref().map(|c| {
            json!({
                "value": cyc_json(&c.value),
                "solvability": solvability_json(&c.solvability),
                "matches": c.value == o.brute,
            })
        }),
    })
}

pub enum SweepStatus {
    Ok,
    Mismatch,
    Skipped(String),
}

pub struct SweepRow {
    pub p: u64,
    pub e: u32,
    pub l: u32,
    pub status: SweepStatus,
    /// Present for cells inside the hypothesis.
    pub params: Option<CodeParams>,
    pub wd: Option<WeightDistribution>,
}

pub fn sweep_text(rows: &[SweepRow], color: bool) -> String {
    let mut out = String::new();
    for row in rows {
        match &row.status {
            SweepStatus::Skipped(reason) => {
                let _ = writeln!(out, "p={} e={} l={}: skipped ({reason})", row.p, row.e, row.l);
            }
            _ => {
                let params = row.params.expect("verified cells carry parameters");
                let weights = row.wd.as_ref().expect("verified cells carry a distribution");
                let _ = writeln!(
                    out,
                    "p={} e={} l={}: [{}, {}, {}], {} distinct nonzero weights, {}",
                    row.p,
                    row.e,
                    row.l,
                    params.n,
                    params.k,
                    params.d,
                    weights.nonzero_weight_count(),
                    status(matches!(row.status, SweepStatus::Ok), color)
                );
            }
        }
    }
    out
}

pub fn sweep_json(rows: &[SweepRow]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|row| {
            let (status, reason) = match &row.status {
                SweepStatus::Ok => ("ok", None),
                SweepStatus::Mismatch => ("mismatch", None),
                SweepStatus::Skipped(reason) => ("skipped", Some(reason.clone())),
            };
            json!({
                "p": row.p,
                "e": row.e,
                "l": row.l,
                "status": status,
                "reason": reason,
                "n": row.params.map(|c| c.n),
                "k": row.params.map(|c| c.k),
                "d": row.params.map(|c| c.d),
                "distinct_nonzero_weights": row.wd.as_ref().map(|w| w.nonzero_weight_count()),
                "weight_distribution": row.wd.as_ref().map(wd_json),
            })
        })
        .collect();
    Value::Array(rows)
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("p,e,l,status,n,k,d,distinct_nonzero_weights,reason\n");
    for row in rows {
        let (status, reason) = match &row.status {
            SweepStatus::Ok => ("ok", String::new()),
            SweepStatus::Mismatch => ("mismatch", String::new()),
            SweepStatus::Skipped(reason) => ("skipped", reason.clone()),
        };
        let (n, k, d) = match row.params {
            Some(c) => (c.n.to_string(), c.k.to_string(), c.d.to_string()),
            None => (String::new(), String::new(), String::new()),
        };
        let weights = row
            .wd
            .as_ref()
            .map(|w| w.nonzero_weight_count().to_string())
            .unwrap_or_default();
        // The reason may contain commas; quote it.
        let _ = writeln!(
            out,
            "{},{},{},{status},{n},{k},{d},{weights},\"{}\"",
            row.p,
            row.e,
            row.l,
            reason.replace('"', "\"\"")
        );
    }
    out
}
