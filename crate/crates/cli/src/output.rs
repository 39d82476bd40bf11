//! Deterministic machine-readable reports. The JSON envelope has a fixed key
//! order (struct declaration order) and renders every computed integer as a
//! decimal string, so equal inputs give byte-identical output.

use serde::Serialize;

use germcalc_core::invariants::{Certificate, VerificationReport};
use germcalc_core::ring::{print_polynomial, MonomialOrder, Polynomial};

#[derive(Debug, Serialize)]
pub struct Envelope {
    pub command: String,
    pub inputs: InputsEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportJson>,
    pub seed: String,
    pub samples: u32,
    pub bound: u32,
    pub rounds: u32,
}

#[derive(Debug, Default, Serialize)]
pub struct InputsEcho {
    pub variables: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linear_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strata: Option<Vec<StratumEcho>>,
}

#[derive(Debug, Serialize)]
pub struct SpaceEcho {
    pub ideal: Vec<String>,
    pub dim: usize,
}

#[derive(Debug, Serialize)]
pub struct StratumEcho {
    pub ideal: Vec<String>,
    pub dim: usize,
    pub chi_complex_link: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler_obstruction_along: Option<i64>,
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub identity: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub terms: Vec<TermJson>,
    pub certificates: Vec<CertJson>,
    pub notes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct TermJson {
    pub label: String,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct CertJson {
    pub label: String,
    pub sample: u32,
    pub value: String,
}

pub fn canonical_poly(p: &Polynomial, vars: &[String]) -> String {
    print_polynomial(p, vars, &MonomialOrder::LocalAntiDegRevLex)
}

pub fn report_json(r: &VerificationReport) -> ReportJson {
    ReportJson {
        identity: r.identity.clone(),
        lhs: r.lhs.to_string(),
        rhs: r.rhs.to_string(),
        pass: r.pass,
        terms: r
            .terms
            .iter()
            .map(|(label, value)| TermJson { label: label.clone(), value: value.to_string() })
            .collect(),
        certificates: certs_json(&r.certificates),
        notes: r.notes.clone(),
    }
}

pub fn certs_json(certs: &[Certificate]) -> Vec<CertJson> {
    certs
        .iter()
        .map(|c| CertJson { label: c.label.clone(), sample: c.sample, value: c.value.to_string() })
        .collect()
}

pub fn render(envelope: &Envelope, json: bool) -> String {
    if json {
        return serde_json::to_string_pretty(envelope).expect("serializable");
    }
    let mut out = String::new();
    let push = |out: &mut String, line: String| {
        out.push_str(&line);
        out.push('\n');
    };
    push(&mut out, format!("command: {}", envelope.command));
    push(&mut out, format!("variables: {}", envelope.inputs.variables.join(", ")));
    if let Some(space) = &envelope.inputs.space {
        push(&mut out, format!("space: V({}) of dimension {}", space.ideal.join(", "), space.dim));
    }
    if let Some(f) = &envelope.inputs.f {
        push(&mut out, format!("f: {f}"));
    }
    if let Some(g) = &envelope.inputs.g {
        push(&mut out, format!("g: {g}"));
    }
    if let Some(l) = &envelope.inputs.linear_form {
        push(&mut out, format!("linear form: {l}"));
    }
    if let Some(strata) = &envelope.inputs.strata {
        for (i, s) in strata.iter().enumerate() {
            push(
                &mut out,
                format!(
                    "stratum {i}: V({}) dim {} chi(link) {}",
                    s.ideal.join(", "),
                    s.dim,
                    s.chi_complex_link
                ),
            );
        }
    }
    if let Some(v) = &envelope.value {
        match v {
            serde_json::Value::Array(items) => {
                push(&mut out, "value:".to_string());
                for item in items {
                    push(&mut out, format!("  {}", item.as_str().unwrap_or_default()));
                }
            }
            other => push(&mut out, format!("value: {}", other.as_str().unwrap_or(&other.to_string()))),
        }
    }
    if let Some(r) = &envelope.report {
        push(&mut out, format!("identity: {}", r.identity));
        push(&mut out, format!("lhs: {}", r.lhs));
        push(&mut out, format!("rhs: {}", r.rhs));
        push(&mut out, format!("result: {}", if r.pass { "PASS" } else { "FAIL" }));
        for t in &r.terms {
            push(&mut out, format!("  term {} = {}", t.label, t.value));
        }
        for c in &r.certificates {
            push(&mut out, format!("  certificate [{}] sample {} = {}", c.label, c.sample, c.value));
        }
        for n in &r.notes {
            push(&mut out, format!("  note: {n}"));
        }
    }
    push(&mut out, format!("seed: {}", envelope.seed));
    push(&mut out, format!("samples: {}", envelope.samples));
    push(&mut out, format!("bound: {}", envelope.bound));
    push(&mut out, format!("rounds: {}", envelope.rounds));
    out
}
