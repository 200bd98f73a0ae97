//! Serializable summaries. JSON keeps a fixed field order and writes every
//! rational as `{"num": …, "den": …}`; decimals appear only under keys
//! named `approx`.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::dirac::{
    first_eigenvalue_squared_max_pairing, lifted_weight, maximal_minima, select_w0, spin_decomposition,
    SpectrumLine, SpinComponent,
};
use crate::error::Result;
use crate::symmspace::{strange_formula_check, CatalogEntry, SymmetricPair};
use crate::verify::{Outcome, Verification};
use crate::weight::{decimal, fmt_rational, frac, q, Weight, Q};

/// An exact rational in JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact(pub Q);

fn big_int_field<S: SerializeStruct>(s: &mut S, key: &'static str, v: &num_bigint::BigInt) -> std::result::Result<(), S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_field(key, &x),
        None => s.serialize_field(key, &v.to_string()),
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Exact", 2)?;
        big_int_field(&mut s, "num", self.0.numer())?;
        big_int_field(&mut s, "den", self.0.denom())?;
        s.end()
    }
}

/// A nonnegative integer that may not fit in 64 bits; written as a number
/// when it does and as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Count(pub BigUint);

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(x) => serializer.serialize_u64(x),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

fn exact_weight(w: &Weight) -> Vec<Exact> {
    w.coords().iter().cloned().map(Exact).collect()
}

/// A rational together with its decimal rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Approximated {
    pub num: i64,
    pub den: i64,
    pub approx: String,
}

impl Approximated {
    fn new(x: &Q) -> Approximated {
        Approximated {
            num: x.numer().to_i64().expect("small eigenvalue"),
            den: x.denom().to_i64().expect("small eigenvalue"),
            approx: decimal(x, 6),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceEcho {
    pub label: String,
    pub g: String,
    pub k: String,
    pub k_simple_roots: Vec<Vec<Exact>>,
}

impl SpaceEcho {
    pub fn new(label: &str, pair: &SymmetricPair) -> SpaceEcho {
        SpaceEcho {
            label: label.into(),
            g: pair.g().simple_type().to_string(),
            k: pair.k_description(),
            k_simple_roots: pair.k_simple_roots().iter().map(exact_weight).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrangeFormulaSummary {
    pub lhs: Exact,
    pub rhs: Exact,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub beta: Vec<Exact>,
    pub norm2: Exact,
    pub dim: Count,
    /// 1-based indices of simple reflections, `w = s_{i1} s_{i2} ⋯`.
    pub word: Vec<usize>,
}

impl ComponentSummary {
    fn new(c: &SpinComponent) -> ComponentSummary {
        ComponentSummary {
            beta: exact_weight(&c.beta),
            norm2: Exact(c.norm2.clone()),
            dim: Count(c.dim.clone()),
            word: c.w.word().iter().map(|i| i + 1).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct W0Summary {
    pub beta: Vec<Exact>,
    pub norm2: Exact,
    pub word: Vec<usize>,
    /// `w₀⁻¹·β_{w₀}`.
    pub beta_g: Vec<Exact>,
    /// Number of ≺-maximal minimal-norm components (1 unless some minima
    /// are incomparable).
    pub maximal_minima: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineSummary {
    pub eigenvalue: Approximated,
    pub g_highest_weight: Vec<Exact>,
    pub casimir: Exact,
    pub hom_dim: u64,
    pub multiplicity: Count,
}

impl LineSummary {
    fn new(l: &SpectrumLine) -> LineSummary {
        LineSummary {
            eigenvalue: Approximated::new(&l.eigenvalue),
            g_highest_weight: exact_weight(&l.g_highest_weight),
            casimir: Exact(l.casimir.clone()),
            hom_dim: l.hom_dim,
            multiplicity: Count(l.multiplicity.clone()),
        }
    }
}

/// The result of `eigenvalue`, `spectrum` and `verify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub space: SpaceEcho,
    pub n: usize,
    pub scal: Exact,
    pub spin: bool,
    pub strange_formula: StrangeFormulaSummary,
    pub components: Vec<ComponentSummary>,
    pub w0: W0Summary,
    pub lift_dominant: bool,
    pub lambda1_squared: Approximated,
    pub max_pairing_value: Exact,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<LineSummary>>,
}

impl Report {
    pub fn new(label: &str, pair: &SymmetricPair) -> Result<Report> {
        let comps = spin_decomposition(pair)?;
        let g = pair.g();
        let w0 = select_w0(g, &comps).expect("nonempty decomposition");
        let maxima = maximal_minima(g, &comps);
        let lift_dominant = maxima
            .iter()
            .all(|c| g.is_dominant(&lifted_weight(c), g.positive_system()).unwrap_or(false));
        let lambda1 = q(2) * &w0.norm2 + frac(pair.dim() as i64, 8);
        let sf = strange_formula_check(pair);
        Ok(Report {
            space: SpaceEcho::new(label, pair),
            n: pair.dim(),
            scal: Exact(pair.scal().clone()),
            spin: pair.is_spin(),
            strange_formula: StrangeFormulaSummary {
                lhs: Exact(sf.lhs),
                rhs: Exact(sf.rhs),
                ok: sf.ok,
            },
            components: comps.iter().map(ComponentSummary::new).collect(),
            w0: W0Summary {
                beta: exact_weight(&w0.beta),
                norm2: Exact(w0.norm2.clone()),
                word: w0.w.word().iter().map(|i| i + 1).collect(),
                beta_g: exact_weight(&lifted_weight(w0)),
                maximal_minima: maxima.len(),
            },
            lift_dominant,
            lambda1_squared: Approximated::new(&lambda1),
            max_pairing_value: Exact(first_eigenvalue_squared_max_pairing(pair)?),
            spectrum: None,
        })
    }

    pub fn with_spectrum(mut self, lines: &[SpectrumLine]) -> Report {
        self.spectrum = Some(lines.iter().map(LineSummary::new).collect());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn weight_text(w: &[Exact]) -> String {
    let parts: Vec<String> = w.iter().map(|x| fmt_rational(&x.0)).collect();
    format!("({})", parts.join(", "))
}

/// `p/q (≈ d.dddddd)`.
pub fn approx_text(x: &Q) -> String {
    format!("{} (≈ {})", fmt_rational(x), decimal(x, 6))
}

fn approximated_text(a: &Approximated) -> String {
    let x = frac(a.num, a.den);
    approx_text(&x)
}

pub fn render_report(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "space           {}", r.space.label);
    let _ = writeln!(s, "G / K           {} / {}", r.space.g, r.space.k);
    let _ = writeln!(s, "n               {}", r.n);
    let _ = writeln!(s, "Scal            {}", fmt_rational(&r.scal.0));
    let _ = writeln!(
        s,
        "strange formula {} = {} [{}]",
        fmt_rational(&r.strange_formula.lhs.0),
        fmt_rational(&r.strange_formula.rhs.0),
        if r.strange_formula.ok { "ok" } else { "FAIL" }
    );
    let _ = writeln!(s, "spin components {}", r.components.len());
    for c in &r.components {
        let _ = writeln!(
            s,
            "  beta = {:<28} |beta|^2 = {:<8} dim = {}",
            weight_text(&c.beta),
            fmt_rational(&c.norm2.0),
            c.dim.0
        );
    }
    let _ = writeln!(s, "w0 beta         {}", weight_text(&r.w0.beta));
    let _ = writeln!(s, "w0^-1 beta      {}", weight_text(&r.w0.beta_g));
    if r.w0.maximal_minima > 1 {
        let _ = writeln!(s, "note            {} incomparable minimal components", r.w0.maximal_minima);
    }
    let _ = writeln!(s, "G-dominant      {}", if r.lift_dominant { "yes" } else { "NO" });
    let _ = writeln!(s, "lambda1^2       {}", approximated_text(&r.lambda1_squared));
    let _ = writeln!(s, "second form     {}", approx_text(&r.max_pairing_value.0));
    if let Some(lines) = &r.spectrum {
        let _ = write!(s, "{}", render_spectrum(lines));
    }
    s
}

pub fn render_spectrum(lines: &[LineSummary]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "spectrum of D^2 ({} lines)", lines.len());
    for l in lines {
        let _ = writeln!(
            s,
            "  {:<24} lambda = {:<24} casimir = {:<8} hom = {:<3} mult = {}",
            approximated_text(&l.eigenvalue),
            weight_text(&l.g_highest_weight),
            fmt_rational(&l.casimir.0),
            l.hom_dim,
            l.multiplicity.0
        );
    }
    s
}

/// The output of `spectrum`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub space: SpaceEcho,
    pub n: usize,
    pub cutoff: Exact,
    pub lines: Vec<LineSummary>,
}

impl SpectrumReport {
    pub fn new(label: &str, pair: &SymmetricPair, cutoff: &Q, lines: &[SpectrumLine]) -> SpectrumReport {
        SpectrumReport {
            space: SpaceEcho::new(label, pair),
            n: pair.dim(),
            cutoff: Exact(cutoff.clone()),
            lines: lines.iter().map(LineSummary::new).collect(),
        }
    }
}

pub fn render_spectrum_report(r: &SpectrumReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "space      {}", r.space.label);
    let _ = writeln!(s, "G / K      {} / {}", r.space.g, r.space.k);
    let _ = writeln!(s, "cutoff     {}", approx_text(&r.cutoff.0));
    let _ = write!(s, "{}", render_spectrum(&r.lines));
    s
}

/// The spin decomposition alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub space: SpaceEcho,
    pub n: usize,
    pub components: Vec<ComponentSummary>,
    pub total_dim: Count,
    pub expected_dim: Count,
}

impl Decomposition {
    pub fn new(label: &str, pair: &SymmetricPair) -> Result<Decomposition> {
        let comps = spin_decomposition(pair)?;
        Ok(Decomposition {
            space: SpaceEcho::new(label, pair),
            n: pair.dim(),
            total_dim: Count(comps.iter().map(|c| &c.dim).sum()),
            expected_dim: Count(BigUint::from(1u32) << (pair.dim() / 2)),
            components: comps.iter().map(ComponentSummary::new).collect(),
        })
    }
}

pub fn render_decomposition(d: &Decomposition) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "space      {}", d.space.label);
    let _ = writeln!(s, "G / K      {} / {}", d.space.g, d.space.k);
    let _ = writeln!(s, "n          {}", d.n);
    for c in &d.components {
        let word: Vec<String> = c.word.iter().map(|i| format!("s{i}")).collect();
        let _ = writeln!(
            s,
            "  beta = {:<28} dim = {:<8} w = {}",
            weight_text(&c.beta),
            c.dim.0,
            if word.is_empty() { "1".into() } else { word.join(" ") }
        );
    }
    let _ = writeln!(s, "total      {} = 2^{}", d.total_dim.0, d.n / 2);
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub name: &'static str,
    pub outcome: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub space: String,
    pub passed: bool,
    pub checks: Vec<CheckSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<LineSummary>>,
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "pass",
        Outcome::Fail => "fail",
        Outcome::Skipped => "skipped",
    }
}

impl VerificationSummary {
    pub fn new(v: &Verification) -> VerificationSummary {
        VerificationSummary {
            space: v.space.clone(),
            passed: v.passed(),
            checks: v
                .checks
                .iter()
                .map(|c| CheckSummary {
                    name: c.name,
                    outcome: outcome_name(c.outcome),
                    lhs: c.lhs.clone(),
                    rhs: c.rhs.clone(),
                    note: c.note.clone(),
                })
                .collect(),
            spectrum: v.spectrum.as_ref().map(|l| l.iter().map(LineSummary::new).collect()),
        }
    }
}

pub fn render_verification(v: &VerificationSummary) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}: {}", v.space, if v.passed { "PASS" } else { "FAIL" });
    for c in &v.checks {
        let mut line = format!("  {:<7} {:<20}", c.outcome, c.name);
        match c.outcome {
            "fail" => {
                let _ = write!(line, " lhs = {}  rhs = {}", c.lhs, c.rhs);
            }
            _ if !c.lhs.is_empty() && c.lhs.len() <= 40 => {
                let _ = write!(line, " {}", c.lhs);
            }
            _ => {}
        }
        if !c.note.is_empty() {
            let _ = write!(line, "  ({})", c.note);
        }
        let _ = writeln!(s, "{}", line.trim_end());
    }
    if let Some(lines) = &v.spectrum {
        let _ = write!(s, "{}", render_spectrum(lines));
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListingEntry {
    pub name: String,
    pub g: String,
    pub k: String,
    pub n: usize,
    pub spin: bool,
    pub notes: String,
}

pub fn listing(entries: &[CatalogEntry]) -> Result<Vec<ListingEntry>> {
    entries
        .iter()
        .map(|e| {
            let p = e.build()?;
            Ok(ListingEntry {
                name: e.name.clone(),
                g: e.g_type.to_string(),
                k: p.k_description(),
                n: p.dim(),
                spin: p.is_spin(),
                notes: e.notes.clone(),
            })
        })
        .collect()
}

pub fn render_listing(entries: &[ListingEntry]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<16} {:<4} {:<16} {:>4}  spin", "name", "G", "K", "n");
    for e in entries {
        let _ = writeln!(
            s,
            "{:<16} {:<4} {:<16} {:>4}  {}",
            e.name,
            e.g,
            e.k,
            e.n,
            if e.spin { "yes" } else { "no" }
        );
    }
    s
}
