//! Full classification report for one symbol.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::Serialize;

use crate::covers::euler_sum;
use crate::error::Result;
use crate::groups::{abelianization, fuchsian_quotient, pi1_presentation};
use crate::lens::{recognize_s2_symbol, Recognition};
use crate::symbol::{normalize_symbol, parse_symbol, Obstruction, Orientability};
use crate::topology::{predicates, PredicateReport};

/// Report fields in their serialized order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub input: String,
    pub normalized: String,
    pub class_label: String,
    pub predicates: PredicateReport,
    pub pi1: String,
    pub fuchsian: String,
    pub h1: String,
    pub euler_sum: Option<String>,
    pub recognition: Option<String>,
    pub warnings: Vec<String>,
}

/// `num/den` with a positive denominator.
pub fn render_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses, normalizes and classifies `input`.
pub fn build_report(input: &str) -> Result<Report> {
    let n = normalize_symbol(&parse_symbol(input)?)?;
    let pi1 = pi1_presentation(&n);
    let preds = predicates(&n)?;
    let mut warnings = Vec::new();
    let c = n.class();
    if c.orbit() == Orientability::Orientable && c.total() == Orientability::Orientable && c.genus() == 0 && n.is_closed() {
        if let Recognition::Lens(_, Some(w)) | Recognition::S3(Some(w)) | Recognition::S2xS1(Some(w)) = recognize_s2_symbol(&n)? {
            warnings.push(format!("lens parameters relative to the {w}"));
        }
    }
    if !n.is_closed() && !n.pairs().is_empty() {
        warnings.push(if n.is_orientable() {
            "bounded symbol: crossing pairs kept with beta in [0,mu) by convention".to_string()
        } else {
            "bounded symbol: crossing pairs kept with beta in [0,mu/2] by convention".to_string()
        });
    }
    let euler = match n.obstruction() {
        Obstruction::Integer(_) => Some(render_rational(&euler_sum(&n)?)),
        _ => None,
    };
    Ok(Report {
        input: input.to_string(),
        normalized: n.to_string(),
        class_label: c.label(),
        recognition: preds.named.clone(),
        predicates: preds,
        pi1: pi1.to_string(),
        fuchsian: fuchsian_quotient(&n).to_string(),
        h1: abelianization(&pi1).to_string(),
        euler_sum: euler,
        warnings,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Plain-text rendering of a report.
pub fn render_text(r: &Report) -> String {
    let p = &r.predicates;
    let mut out = String::new();
    let opt = |o: &Option<String>| o.clone().unwrap_or_else(|| "-".to_string());
    let _ = writeln!(out, "input:            {}", r.input);
    let _ = writeln!(out, "normalized:       {}", r.normalized);
    let _ = writeln!(out, "class:            {}", r.class_label);
    let _ = writeln!(out, "pi1:              {}", r.pi1);
    let _ = writeln!(out, "fuchsian:         {}", r.fuchsian);
    let _ = writeln!(out, "h1:               {}", r.h1);
    let _ = writeln!(out, "euler sum:        {}", opt(&r.euler_sum));
    let _ = writeln!(out, "recognition:      {}", opt(&r.recognition));
    let _ = writeln!(out, "small:            {}", opt(&p.small));
    let _ = writeln!(out, "flat:             {}", yes_no(p.flat));
    let _ = writeln!(out, "pi1 finite:       {}", yes_no(p.pi1_finite));
    let _ = writeln!(out, "irreducible:      {}", yes_no(p.irreducible));
    let _ = writeln!(out, "P2-irreducible:   {}", yes_no(p.p2_irreducible));
    let _ = writeln!(out, "aspherical:       {}", yes_no(p.aspherical));
    let _ = writeln!(out, "bdry irreducible: {}", yes_no(p.boundary_irreducible));
    let _ = writeln!(out, "incompressible:   {}", yes_no(p.has_incompressible_surface));
    for n in &p.notes {
        let _ = writeln!(out, "note:             {n}");
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning:          {w}");
    }
    out
}
