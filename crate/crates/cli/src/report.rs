//! Machine-readable report documents and their text rendering.
//!
//! JSON is emitted through `serde_json::Value`, whose maps keep keys sorted,
//! so any report re-serializes byte-identically after a parse. Integers are
//! JSON numbers when they fit in 64 bits and decimal strings otherwise.

use std::fmt;

use isoindex_core::bounds::{BoundReport, DirectrixInvariants, Origin};
use isoindex_core::{SequenceInvariants, VerificationReport};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::input::ParsedCurve;

/// Arbitrary-precision integer with the number-or-string JSON encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl From<&BigInt> for JsonInt {
    fn from(v: &BigInt) -> Self {
        Self(v.clone())
    }
}

impl fmt::Display for JsonInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct IntVisitor;

        impl Visitor<'_> for IntVisitor {
            type Value = JsonInt;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                v.parse().map(JsonInt).map_err(|_| E::custom(format!("{v:?} is not an integer")))
            }
        }

        d.deserialize_any(IntVisitor)
    }
}

fn ints(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().map(JsonInt::from).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveJson {
    pub n: usize,
    /// Coefficient literals in ascending powers of `z`.
    pub components: Vec<Vec<String>>,
    pub display: String,
    pub degree: usize,
    /// Monic common factor divided out during normalization.
    pub removed_factor: String,
    pub full: bool,
}

impl CurveJson {
    pub fn new(parsed: &ParsedCurve, full: bool) -> Self {
        let c = &parsed.curve;
        Self {
            n: c.n(),
            components: c.components().iter().map(|p| p.coeffs().iter().map(ToString::to_string).collect()).collect(),
            display: c.to_string(),
            degree: c.degree(),
            removed_factor: parsed.removed_factor.to_string(),
            full,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceJson {
    pub n: usize,
    pub g: i64,
    pub deg_f: i64,
    pub d: Vec<i64>,
    pub gcd_totals: Vec<i64>,
    pub r: Vec<i64>,
    pub map_deg: Vec<i64>,
}

impl From<&SequenceInvariants> for SequenceJson {
    fn from(s: &SequenceInvariants) -> Self {
        Self {
            n: s.n,
            g: s.g,
            deg_f: s.deg_f,
            d: s.d.clone(),
            gcd_totals: s.gcd_totals.clone(),
            r: s.r.clone(),
            map_deg: s.map_deg.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationJson {
    pub recursion_residuals: Vec<i64>,
    pub ramrelation_residual: i64,
    pub degree_residuals: Vec<i64>,
    pub pass: bool,
}

impl From<&VerificationReport> for VerificationJson {
    fn from(v: &VerificationReport) -> Self {
        Self {
            recursion_residuals: v.recursion_residuals.clone(),
            ramrelation_residual: v.ramrelation_residual,
            degree_residuals: v.degree_residuals.clone(),
            pass: v.pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DirectrixJson {
    pub n: usize,
    pub g: JsonInt,
    pub deg_f: JsonInt,
    pub rho: usize,
    pub r_prefix: Vec<JsonInt>,
    pub r_full: Option<Vec<JsonInt>>,
    /// `"computed"` or `"abstract"`.
    pub origin: String,
    /// Fullness and complex isotropy were taken on trust rather than checked.
    pub user_asserted_full_isotropic: bool,
}

impl From<&DirectrixInvariants> for DirectrixJson {
    fn from(d: &DirectrixInvariants) -> Self {
        let abstract_input = d.origin == Origin::Abstract;
        Self {
            n: d.n,
            g: (&d.g).into(),
            deg_f: (&d.deg_f).into(),
            rho: d.rho,
            r_prefix: ints(&d.r_prefix),
            r_full: d.r_full.as_deref().map(ints),
            origin: if abstract_input { "abstract" } else { "computed" }.into(),
            user_asserted_full_isotropic: abstract_input,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cp2Json {
    pub deg_f_form: JsonInt,
    pub deg_phi_form: JsonInt,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundJson {
    pub input: DirectrixJson,
    pub deg_phi: JsonInt,
    pub applicable: bool,
    pub baseline: Option<JsonInt>,
    /// The bound written in terms of `deg f`.
    pub theorem: Option<JsonInt>,
    /// The same bound written in terms of `deg φ`.
    pub corollary: Option<JsonInt>,
    pub improvement: Option<JsonInt>,
    pub improves: bool,
    pub vacuous: bool,
    pub cp2: Option<Cp2Json>,
    pub notes: Vec<String>,
}

impl From<&BoundReport> for BoundJson {
    fn from(b: &BoundReport) -> Self {
        let opt = |v: &Option<BigInt>| v.as_ref().map(JsonInt::from);
        Self {
            input: (&b.input).into(),
            deg_phi: (&b.deg_phi).into(),
            applicable: b.applicable,
            baseline: opt(&b.baseline),
            theorem: opt(&b.theorem),
            corollary: opt(&b.corollary),
            improvement: opt(&b.improvement),
            improves: b.improves,
            vacuous: b.vacuous,
            cp2: b
                .cp2
                .as_ref()
                .map(|c| Cp2Json { deg_f_form: (&c.deg_f_form).into(), deg_phi_form: (&c.deg_phi_form).into() }),
            notes: b.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisJson {
    pub curve: CurveJson,
    /// The self-map precomposed before analysis, if any.
    pub map: Option<String>,
    pub invariants: SequenceJson,
    pub verification: VerificationJson,
    pub bounds: Vec<BoundJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExampleRowJson {
    pub example: String,
    pub quantity: String,
    pub expected: String,
    pub got: String,
    /// `"match"` or `"MISMATCH"`.
    pub status: String,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExamplesJson {
    pub rows: Vec<ExampleRowJson>,
    pub mismatches: usize,
}

/// Pretty JSON with sorted keys.
pub fn to_canonical_json<T: Serialize>(doc: &T) -> String {
    let value = serde_json::to_value(doc).expect("report types serialize to JSON");
    let mut out = serde_json::to_string_pretty(&value).expect("JSON values render");
    out.push('\n');
    out
}

/// Left-aligned text table with a dashed rule under the header.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let width = |s: &str| s.chars().count();
    let mut widths: Vec<usize> = headers.iter().map(|h| width(h)).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(width(cell));
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            if i + 1 < cells.len() {
                s.push_str(&" ".repeat(w - width(cell)));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(headers.to_vec());
    out.push_str(&line(widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn or_dash(v: &Option<JsonInt>) -> String {
    v.as_ref().map_or_else(|| "-".into(), ToString::to_string)
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

fn list(v: &[impl fmt::Display]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

pub fn render_bounds(bounds: &[BoundJson]) -> String {
    let headers = [
        "ρ",
        "deg φ",
        "applicable",
        "baseline",
        "theorem [deg f form]",
        "corollary [deg φ form]",
        "improvement",
        "improves",
        "vacuous",
    ];
    let rows: Vec<Vec<String>> = bounds
        .iter()
        .map(|b| {
            vec![
                b.input.rho.to_string(),
                b.deg_phi.to_string(),
                yes_no(b.applicable),
                or_dash(&b.baseline),
                or_dash(&b.theorem),
                or_dash(&b.corollary),
                or_dash(&b.improvement),
                yes_no(b.improves),
                yes_no(b.vacuous),
            ]
        })
        .collect();
    let mut out = table(&headers, &rows);
    for b in bounds {
        if let Some(cp2) = &b.cp2 {
            out.push_str(&format!(
                "ρ = {}: CP² closed forms {} [deg f form] = {} [deg φ form]\n",
                b.input.rho, cp2.deg_f_form, cp2.deg_phi_form
            ));
        }
        for note in &b.notes {
            out.push_str(&format!("ρ = {}: note: {note}\n", b.input.rho));
        }
    }
    out
}

pub fn render_directrix(d: &DirectrixJson) -> String {
    let mut out =
        format!("directrix: n = {}, g = {}, deg f = {}, ρ = {}, r = {}", d.n, d.g, d.deg_f, d.rho, list(&d.r_prefix));
    if let Some(full) = &d.r_full {
        out.push_str(&format!(" (full sequence {})", list(full)));
    }
    out.push_str(&format!(", origin {}\n", d.origin));
    out
}

pub fn render_verification(v: &VerificationJson) -> String {
    format!(
        "Plücker check: {} (recursion residuals {}, ramification relation residual {}, degree residuals {})\n",
        if v.pass { "pass" } else { "FAIL" },
        list(&v.recursion_residuals),
        v.ramrelation_residual,
        list(&v.degree_residuals)
    )
}

pub fn render_curve(c: &CurveJson) -> String {
    let mut out = format!("curve: {} in CP^{}, degree {}\n", c.display, c.n, c.degree);
    if c.removed_factor != "1" {
        out.push_str(&format!("normalized: removed common factor {}\n", c.removed_factor));
    }
    out
}

pub fn render_analysis(a: &AnalysisJson) -> String {
    let mut out = render_curve(&a.curve);
    if let Some(map) = &a.map {
        out.push_str(&format!("precomposed with z ↦ {map}\n"));
    }
    let s = &a.invariants;
    out.push_str(&format!("genus {}, deg f = {}\n\n", s.g, s.deg_f));
    let rows: Vec<Vec<String>> = (0..=s.n)
        .map(|k| {
            vec![
                k.to_string(),
                s.gcd_totals[k].to_string(),
                s.d[k].to_string(),
                s.r.get(k).map_or_else(|| "-".into(), ToString::to_string),
                s.map_deg[k].to_string(),
            ]
        })
        .collect();
    out.push_str(&table(&["k", "G_k", "d_k", "r_k", "deg f_k"], &rows));
    out.push('\n');
    out.push_str(&render_verification(&a.verification));
    if !a.bounds.is_empty() {
        out.push('\n');
        out.push_str(&render_bounds(&a.bounds));
    }
    out
}

pub fn render_examples(e: &ExamplesJson) -> String {
    let rows: Vec<Vec<String>> = e
        .rows
        .iter()
        .map(|r| {
            vec![
                r.example.clone(),
                r.quantity.clone(),
                r.expected.clone(),
                r.got.clone(),
                r.status.clone(),
                r.source.clone(),
            ]
        })
        .collect();
    let mut out = table(&["example", "quantity", "expected", "got", "status", "source"], &rows);
    out.push_str(&format!("\n{} checks, {} mismatched\n", e.rows.len(), e.mismatches));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_ints_switch_to_strings_beyond_64_bits() {
        let small = JsonInt(BigInt::from(-7));
        let big = JsonInt(BigInt::from(i64::MAX) * 4);
        assert_eq!(serde_json::to_string(&small).unwrap(), "-7");
        assert_eq!(serde_json::to_string(&big).unwrap(), "\"36893488147419103228\"");
        assert_eq!(serde_json::from_str::<JsonInt>("\"36893488147419103228\"").unwrap(), big);
        assert_eq!(serde_json::from_str::<JsonInt>("-7").unwrap(), small);
        assert!(serde_json::from_str::<JsonInt>("1.5").is_err());
        assert!(serde_json::from_str::<JsonInt>("\"x\"").is_err());
    }

    #[test]
    fn keys_are_sorted() {
        let v = VerificationJson {
            recursion_residuals: vec![0],
            ramrelation_residual: 0,
            degree_residuals: vec![0, 0],
            pass: true,
        };
        let text = to_canonical_json(&v);
        let keys: Vec<usize> = ["degree_residuals", "pass", "ramrelation_residual", "recursion_residuals"]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "{text}");
    }

    #[test]
    fn tables_align() {
        let t = table(&["a", "φ"], &[vec!["long".into(), "1".into()], vec!["x".into(), "22".into()]]);
        assert_eq!(t, "a     φ\n----  --\nlong  1\nx     22\n");
    }
}
