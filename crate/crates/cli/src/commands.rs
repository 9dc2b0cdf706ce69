use std::fs;
use std::path::Path;

use meadow_core::counting::{
    classify_order, count_report, invertible_formula, self_inverse_formula, CountError,
    MAX_CLASSIFY_ORDER,
};
use meadow_core::meadow::{to_meadow, Verdict};
use meadow_core::polyfield::MAX_STRUCTURED_ORDER;
use meadow_core::ring::{
    check_axioms, load_ring_within, text, Law, MAX_CHECK_ORDER, MAX_TABLE_ORDER,
};
use meadow_core::structure::{decompose, signature, HomCheck, StructureError};
use meadow_core::{Elem, FiniteCommRing, Meadow, MeadowError, RingError, RingOps};
use thiserror::Error;

use crate::descriptor::{Descriptor, DescriptorError};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub table: usize,
    pub structured: usize,
}

impl Limits {
    pub fn new(max_order: Option<usize>) -> Self {
        Limits {
            table: max_order.unwrap_or(MAX_TABLE_ORDER),
            structured: max_order.unwrap_or(MAX_STRUCTURED_ORDER),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    /// A legitimate negative answer; the report carries the witness.
    #[error("{}", .0.summary)]
    Domain(Box<Report>),
    #[error(transparent)]
    Descriptor(#[from] DescriptorError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format {
        path: String,
        source: text::FormatError,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Ring(RingError),
    #[error(transparent)]
    Internal(StructureError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) | CliError::Internal(_) => 1,
            _ => 2,
        }
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        CliError::Ring(e)
    }
}

impl From<StructureError> for CliError {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::Ring(r) => CliError::Ring(r),
            other => CliError::Internal(other),
        }
    }
}

impl From<MeadowError> for CliError {
    fn from(e: MeadowError) -> Self {
        match e {
            MeadowError::Ring(r) => CliError::Ring(r),
            other => CliError::Internal(StructureError::Meadow(other)),
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match e {
            CountError::OutOfRange { .. } => CliError::Usage(e.to_string()),
            CountError::Ring(r) => CliError::Ring(r),
            CountError::Structure(s) => s.into(),
            CountError::Meadow(m) => m.into(),
            other => CliError::Internal(StructureError::Verification(other.to_string())),
        }
    }
}

fn fmt_elems(v: &[Elem]) -> String {
    let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_witness(v: &[Elem]) -> String {
    match v {
        [x] => x.to_string(),
        _ => {
            let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
            format!("({})", parts.join(", "))
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn read_spec_file(path: &Path) -> Result<meadow_core::ring::RingSpec, CliError> {
    let shown = path.display().to_string();
    let body = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    text::parse(&body).map_err(|source| CliError::Format {
        path: shown,
        source,
    })
}

/// Builds the ring a descriptor names. Tables that violate an axiom are a
/// domain failure reported under `command`.
pub fn build(command: &str, d: &Descriptor, limits: Limits) -> Result<FiniteCommRing, CliError> {
    match d {
        Descriptor::Zmod(n) => Ok(FiniteCommRing::zmod_within(*n, limits.structured)?),
        Descriptor::Galois { p, k } => {
            Ok(FiniteCommRing::galois_within(*p, *k, limits.structured)?)
        }
        Descriptor::Product(parts) => {
            let factors = parts
                .iter()
                .map(|p| build(command, p, limits))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(FiniteCommRing::product_within(factors, limits.structured)?)
        }
        Descriptor::File(path) => {
            let spec = read_spec_file(path)?;
            match load_ring_within(&spec, limits.table) {
                Ok(r) => Ok(r),
                Err(RingError::AxiomViolation { law, witness }) => {
                    let report = Report::new(
                        command,
                        format!(
                            "axiom {} violated: {}; witness: {}",
                            law.label(),
                            law.equation(),
                            fmt_witness(&witness)
                        ),
                    )
                    .field("ring", d)
                    .field("order", spec.order)
                    .field("axioms", "violated")
                    .field("law", law.key())
                    .field("label", law.label())
                    .field("equation", law.equation())
                    .field("witness", fmt_witness(&witness));
                    Err(CliError::Domain(Box::new(report)))
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn not_a_meadow(command: &str, d: &Descriptor, ring: &FiniteCommRing, witness: Elem) -> CliError {
    CliError::Domain(Box::new(
        Report::new(command, format!("meadow: no; witness: {witness}"))
            .field("ring", d)
            .field("structure", ring)
            .field("order", ring.order())
            .field("meadow", "no")
            .field("witness", witness),
    ))
}

/// The meadow a descriptor names, or a domain failure naming the witness.
pub fn require_meadow(command: &str, d: &Descriptor, limits: Limits) -> Result<Meadow, CliError> {
    let ring = build(command, d, limits)?;
    match to_meadow(&ring)? {
        Verdict::Meadow(m) => Ok(m),
        Verdict::NotAMeadow { witness } => Err(not_a_meadow(command, d, &ring, witness)),
    }
}

pub fn check(d: &Descriptor, limits: Limits) -> Result<Report, CliError> {
    let ring = build("check", d, limits)?;
    let mut report = Report::new("check", "")
        .field("ring", d)
        .field("structure", &ring)
        .field("order", ring.order());
    if ring.order() <= MAX_CHECK_ORDER {
        let axioms = check_axioms(&ring)?;
        if let Some(fail) = axioms.first_failure() {
            // Structured rings always pass; a failure here is a library bug.
            return Err(CliError::Internal(StructureError::Verification(format!(
                "{} fails on a constructed ring",
                fail.law.key()
            ))));
        }
        report = report
            .field(
                "axioms",
                format!("ok ({} laws checked exhaustively)", Law::all().count()),
            )
            .field("commutative", yes_no(axioms.holds(Law::MulComm)));
    } else {
        report = report.field(
            "axioms",
            format!("not checked (order above {MAX_CHECK_ORDER}); holds by construction"),
        );
    }
    match to_meadow(&ring)? {
        Verdict::Meadow(m) => {
            report.summary = "meadow: yes".into();
            let sig = signature(&m)?;
            Ok(report
                .field("meadow", "yes")
                .field("signature", &sig)
                .field("minimal", yes_no(sig.is_minimal())))
        }
        Verdict::NotAMeadow { witness } => {
            report.summary = format!("meadow: no; witness: {witness}");
            Err(CliError::Domain(Box::new(
                report.field("meadow", "no").field("witness", witness),
            )))
        }
    }
}

pub fn invtable(d: &Descriptor, limits: Limits) -> Result<Report, CliError> {
    let m = require_meadow("invtable", d, limits)?;
    let sig = signature(&m)?;
    let rows: Vec<Vec<String>> = m
        .elements()
        .map(|x| {
            vec![
                x.to_string(),
                m.inv(x).to_string(),
                yes_no(m.is_self_inverse(x)).to_string(),
                yes_no(m.is_invertible(x)).to_string(),
            ]
        })
        .collect();
    let self_inverse = m.elements().filter(|&x| m.is_self_inverse(x)).count();
    let invertible = m.elements().filter(|&x| m.is_invertible(x)).count();
    Ok(Report::new(
        "invtable",
        format!("inverse table of {} ({} elements)", d, m.order()),
    )
    .field("ring", d)
    .field("structure", m.ring())
    .field("order", m.order())
    .field("signature", &sig)
    .field("self_inverse", self_inverse)
    .field("invertible", invertible)
    .table(
        "inverses",
        &["x", "inverse", "self_inverse", "invertible"],
        rows,
    ))
}

pub fn decompose_cmd(d: &Descriptor, limits: Limits) -> Result<Report, CliError> {
    let m = require_meadow("decompose", d, limits)?;
    let dec = decompose(&m)?;
    let sig = dec.signature();
    let minimals: Vec<Elem> = dec.minimals.iter().map(|e| e.elem()).collect();
    let orders: Vec<String> = dec
        .components
        .iter()
        .map(|c| c.order().to_string())
        .collect();
    let check = match dec.hom_check {
        HomCheck::Exhaustive => "verified exhaustively".to_string(),
        HomCheck::Sampled(k) => format!("verified on all elements against {k} sampled partners"),
    };
    let rows: Vec<Vec<String>> = minimals
        .iter()
        .zip(&dec.components)
        .zip(&dec.fields)
        .map(|((e, c), f)| {
            vec![
                e.to_string(),
                c.order().to_string(),
                f.p.to_string(),
                f.k.to_string(),
                f.to_string(),
            ]
        })
        .collect();
    Ok(Report::new(
        "decompose",
        format!("minimals: {}; M ≅ {}", fmt_elems(&minimals), sig),
    )
    .field("ring", d)
    .field("order", m.order())
    .field("minimals", fmt_elems(&minimals))
    .field("component_orders", format!("[{}]", orders.join(", ")))
    .field("fields", sig.pairs())
    .field("signature", &sig)
    .field("homomorphism", check)
    .table(
        "components",
        &["idempotent", "order", "p", "k", "field"],
        rows,
    ))
}

pub fn classify(n: u64) -> Result<Report, CliError> {
    if n == 0 || n > MAX_CLASSIFY_ORDER {
        return Err(CliError::Usage(format!(
            "order {n} is outside the supported range 1..={MAX_CLASSIFY_ORDER}"
        )));
    }
    let c = classify_order(n)?;
    let count = c.signatures.len();
    let rows: Vec<Vec<String>> = c
        .signatures
        .iter()
        .enumerate()
        .map(|(i, s)| {
            vec![
                (i + 1).to_string(),
                s.to_string().replace(' ', ""),
                s.pairs(),
                yes_no(c.minimal == Some(i)).to_string(),
            ]
        })
        .collect();
    let noun = if count == 1 { "meadow" } else { "meadows" };
    let mut summary = format!("{count} {noun} of order {n} up to isomorphism");
    if count > 1 {
        summary.push_str(", pairwise not isomorphic");
    }
    match c.minimal {
        Some(i) => summary.push_str(&format!("; minimal: {}", c.signatures[i])),
        None => summary.push_str("; no minimal meadow"),
    }
    let minimal = match c.minimal {
        Some(i) => c.signatures[i].to_string(),
        None => "none".into(),
    };
    Ok(Report::new("classify", summary)
        .field("order", n)
        .field("count", count)
        .field("squarefree", yes_no(c.minimal.is_some()))
        .field("minimal", minimal)
        .table(
            "signatures",
            &["index", "signature", "fields", "minimal"],
            rows,
        ))
}

pub fn isomorphic(a: &Descriptor, b: &Descriptor, limits: Limits) -> Result<Report, CliError> {
    let ma = require_meadow("isomorphic", a, limits)?;
    let mb = require_meadow("isomorphic", b, limits)?;
    let (sa, sb) = (signature(&ma)?, signature(&mb)?);
    let iso = ma.order() == mb.order() && sa == sb;
    Ok(
        Report::new("isomorphic", format!("isomorphic: {}", yes_no(iso)))
            .field("left", a)
            .field("right", b)
            .field("left_signature", &sa)
            .field("right_signature", &sb)
            .field("isomorphic", yes_no(iso)),
    )
}

pub fn count(d: &Descriptor, limits: Limits) -> Result<Report, CliError> {
    let m = require_meadow("count", d, limits)?;
    let r = count_report(&m)?;
    let (l, n) = (r.char2_factors, r.factors);
    let orders: Vec<String> = r
        .signature
        .parts()
        .iter()
        .map(|pp| format!("({} - 1)", pp.order()))
        .collect();
    let units_formula = if orders.is_empty() {
        "1".to_string()
    } else {
        orders.join(" · ")
    };
    debug_assert_eq!(invertible_formula(&r.signature), r.invertible.formula);
    debug_assert_eq!(self_inverse_formula(&r.signature), r.self_inverse.formula);
    Ok(Report::new(
        "count",
        format!(
            "{} self-inverse, {} invertible",
            r.self_inverse.brute, r.invertible.brute
        ),
    )
    .field("ring", d)
    .field("order", r.order)
    .field("signature", &r.signature)
    .field("factors", n)
    .field("char2_factors", l)
    .field("self_inverse", r.self_inverse.brute)
    .field(
        "self_inverse_formula",
        format!("2^{l} · 3^{} = {}", n - l, r.self_inverse.formula),
    )
    .field("self_inverse_elements", fmt_elems(&r.self_inverse_elements))
    .field("invertible", r.invertible.brute)
    .field(
        "invertible_formula",
        format!("{units_formula} = {}", r.invertible.formula),
    )
    .field("invertible_elements", fmt_elems(&r.invertible_elements)))
}
