//! JSON and plain-text renderings of computed results.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::coeff::Field;
use crate::groebner::Ideal;
use crate::locus::{Certificate, LocusReport, SlicingEstimate};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn ideal_strings<F: Field>(i: &Ideal<F>) -> Vec<String> {
    i.normalized_generators().iter().map(|g| g.to_string()).collect()
}

#[derive(Serialize)]
struct LocusJson<'a> {
    version: &'static str,
    field: &'a str,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    ci_type: Option<[u32; 3]>,
    hf: &'a [usize],
    lowest_degree: i32,
    e: Option<i32>,
    mode: crate::locus::LocusMode,
    ideals: BTreeMap<i32, Vec<String>>,
    total_ideal: Option<Vec<String>>,
    codim: Option<i32>,
    degree: Option<i64>,
    expected_codim: i32,
    wlp: Option<&'a Certificate>,
    slicing: Option<&'a SlicingEstimate>,
    seeds: &'a [u64],
}

pub fn locus_json<F: Field>(r: &LocusReport<F>) -> Value {
    let doc = LocusJson {
        version: VERSION,
        field: &r.field,
        ci_type: r.ci_type.map(|t| t.degrees()),
        hf: &r.hilbert_function,
        lowest_degree: r.lowest_degree,
        e: r.socle_degree,
        mode: r.mode,
        ideals: r.per_degree.iter().map(|d| (d.degree, ideal_strings(&d.ideal))).collect(),
        total_ideal: r.total.as_ref().map(ideal_strings),
        codim: r.codim,
        degree: r.degree,
        expected_codim: r.expected_codim,
        wlp: r.wlp.as_ref(),
        slicing: r.slicing.as_ref(),
        seeds: &r.seeds,
    };
    serde_json::to_value(doc).expect("serializable")
}

/// Human-readable summary; per-degree ideals are listed by size only.
pub fn locus_text<F: Field>(r: &LocusReport<F>) -> String {
    let mut out = String::new();
    let hf: Vec<String> = r.hilbert_function.iter().map(|h| h.to_string()).collect();
    out.push_str(&format!("field: {}\n", r.field));
    if let Some(t) = r.ci_type {
        out.push_str(&format!("type: {t}\n"));
    }
    out.push_str(&format!("hilbert function: ({})\n", hf.join(",")));
    if let Some(e) = r.socle_degree {
        out.push_str(&format!("socle degree: {e}\n"));
    }
    out.push_str(&format!("mode: {}\n", serde_json::to_value(r.mode).unwrap().as_str().unwrap()));
    for d in &r.per_degree {
        out.push_str(&format!(
            "degree {}: B is {}x{}, {} minors\n",
            d.degree,
            d.shape.0,
            d.shape.1,
            d.ideal.generators().len()
        ));
    }
    if let Some(total) = &r.total {
        let gens = ideal_strings(total);
        if gens.len() <= 12 {
            out.push_str(&format!("locus ideal: ({})\n", gens.join(", ")));
        } else {
            out.push_str(&format!("locus ideal: {} generators\n", gens.len()));
        }
    }
    match r.codim {
        Some(c) => out.push_str(&format!("codim: {c}\n")),
        None => out.push_str("codim: not computed\n"),
    }
    if let Some(d) = r.degree {
        out.push_str(&format!("degree: {d}\n"));
    }
    out.push_str(&format!("expected codim: {}\n", r.expected_codim));
    if let Some(w) = &r.wlp {
        out.push_str(&format!("wlp certificate: {}\n", certificate_text(w)));
    }
    if let Some(s) = &r.slicing {
        out.push_str(&format!("slicing codim: {} ({})\n", s.codim, s.confidence));
    }
    let seeds: Vec<String> = r.seeds.iter().map(|s| s.to_string()).collect();
    out.push_str(&format!("seeds: {}\n", seeds.join(",")));
    out
}

pub fn certificate_text(c: &Certificate) -> String {
    match &c.linear_form {
        Some(l) => format!(
            "found l = {} after {} trial(s), seed {}",
            linear_form_text(l),
            c.trials_used,
            c.seed
        ),
        None => format!("none found in {} trial(s), seed {} (inconclusive)", c.trials_used, c.seed),
    }
}

fn linear_form_text(coeffs: &[String]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c == "0" {
            continue;
        }
        let (neg, abs) = match c.strip_prefix('-') {
            Some(a) => (true, a),
            None => (false, c.as_str()),
        };
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        if abs != "1" {
            out.push_str(abs);
            out.push('*');
        }
        out.push_str(&format!("x{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn certificate_json(c: &Certificate, field: &str) -> Value {
    json!({
        "version": VERSION,
        "field": field,
        "found": c.found,
        "linear_form": c.linear_form,
        "trials_used": c.trials_used,
        "seeds": [c.seed],
    })
}
