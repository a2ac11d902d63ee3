//! Parsing of curve documents, polynomial expressions and list arguments.

use std::str::FromStr;

use isoindex_core::{GaussianRational, Poly, ProjectiveCurve, RationalSelfMap};
use num_bigint::BigInt;
use serde_json::Value;

use crate::error::CliError;

/// A curve as read from a document, with the common factor removed during normalization.
#[derive(Clone, Debug)]
pub struct ParsedCurve {
    pub curve: ProjectiveCurve,
    pub removed_factor: Poly,
}

fn at(path: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("at {path}: {msg}"))
}

/// Parses `{"n": int, "components": [[coeff, ...], ...]}`, coefficients in
/// ascending powers of `z`, each an integer or a scalar literal string.
pub fn parse_curve_doc(text: &str) -> Result<ParsedCurve, CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    let obj = doc.as_object().ok_or_else(|| at("$", "expected an object"))?;
    if let Some(key) = obj.keys().find(|k| *k != "n" && *k != "components") {
        return Err(at(&format!("$.{key}"), "unknown field"));
    }
    let n = obj
        .get("n")
        .ok_or_else(|| at("$", "missing field \"n\""))?
        .as_u64()
        .ok_or_else(|| at("$.n", "expected a nonnegative integer"))?;
    let n = usize::try_from(n).map_err(|_| at("$.n", "too large"))?;
    if n == 0 {
        return Err(at("$.n", "target dimension must be at least 1"));
    }
    let comps = obj
        .get("components")
        .ok_or_else(|| at("$", "missing field \"components\""))?
        .as_array()
        .ok_or_else(|| at("$.components", "expected an array of coefficient arrays"))?;
    if comps.len() != n + 1 {
        return Err(at("$.components", format!("expected n+1 = {} components, found {}", n + 1, comps.len())));
    }
    let mut polys = Vec::with_capacity(comps.len());
    for (i, comp) in comps.iter().enumerate() {
        let path = format!("$.components[{i}]");
        let coeffs = comp.as_array().ok_or_else(|| at(&path, "expected an array of coefficients"))?;
        let coeffs = coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| parse_coeff(c).map_err(|msg| at(&format!("{path}[{j}]"), msg)))
            .collect::<Result<Vec<_>, _>>()?;
        polys.push(Poly::new(coeffs));
    }
    if polys.iter().all(Poly::is_zero) {
        return Err(at("$.components", "all components are zero"));
    }
    let (curve, removed_factor) = ProjectiveCurve::normalize(n, polys).map_err(|e| at("$.components", e))?;
    Ok(ParsedCurve { curve, removed_factor })
}

fn parse_coeff(v: &Value) -> Result<GaussianRational, String> {
    match v {
        Value::Number(num) => {
            let int = BigInt::from_str(&num.to_string()).map_err(|_| format!("{num} is not an integer"))?;
            Ok(GaussianRational::from_real(int.into()))
        }
        Value::String(s) => GaussianRational::from_str(s).map_err(|e| e.to_string()),
        other => Err(format!("expected an integer or a literal string, found {other}")),
    }
}

/// Parses `NUM` or `NUM/DEN`, where `/` outside parentheses separates the
/// numerator from the denominator.
pub fn parse_map(text: &str) -> Result<RationalSelfMap, CliError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut depth = 0i32;
    let mut split = None;
    for (pos, ch) in compact.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => {
                if split.is_some() {
                    return Err(CliError::Input(format!(
                        "map {text:?}: more than one top-level '/'; parenthesize rational coefficients"
                    )));
                }
                split = Some(pos);
            }
            _ => {}
        }
    }
    let (num, den) = match split {
        Some(pos) => (&compact[..pos], &compact[pos + 1..]),
        None => (compact.as_str(), "1"),
    };
    let num = parse_poly(num).map_err(|e| CliError::Input(format!("map numerator: {e}")))?;
    let den = parse_poly(den).map_err(|e| CliError::Input(format!("map denominator: {e}")))?;
    RationalSelfMap::new(num, den).map_err(|e| CliError::Input(format!("map {text:?}: {e}")))
}

/// Parses a polynomial in `z` such as `z^3 - 2`, `1/2*z`, `(1/2+i)*z^2 + 1` or
/// `(z+1)^2`. Complex coefficients must be parenthesized; so must rational ones
/// inside a map, where a top-level `/` separates numerator and denominator.
pub fn parse_poly(text: &str) -> Result<Poly, String> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut p = ExprParser { chars, pos: 0 };
    let poly = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.fail("unexpected character"));
    }
    Ok(poly)
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn fail(&self, msg: &str) -> String {
        match self.peek() {
            Some(c) => format!("{msg} {c:?} at position {}", self.pos + 1),
            None => format!("{msg} at end of input"),
        }
    }

    fn expr(&mut self) -> Result<Poly, String> {
        let mut acc = Poly::zero();
        let mut negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let term = self.term()?;
            acc = if negative { &acc - &term } else { &acc + &term };
            match self.peek() {
                Some('+') => negative = false,
                Some('-') => negative = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Poly, String> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => self.pos += 1,
                // `/` followed by an integer divides the term: `1/2*z`.
                Some('/') if self.chars.get(self.pos + 1).is_some_and(char::is_ascii_digit) => {
                    self.pos += 1;
                    let at = self.pos;
                    let divisor = BigInt::from_str(&self.digits()).expect("digits form an integer");
                    let inv = GaussianRational::from_real(divisor.into())
                        .inv()
                        .map_err(|_| format!("division by zero at position {}", at + 1))?;
                    acc = acc.scale(&inv);
                    continue;
                }
                // Juxtaposition: `2z`, `3(z+1)`.
                Some('z' | 'i' | '(') => {}
                _ => return Ok(acc),
            }
            acc = &acc * &self.factor()?;
        }
    }

    fn factor(&mut self) -> Result<Poly, String> {
        let base = match self.peek() {
            Some('z') => {
                self.pos += 1;
                Poly::z()
            }
            Some('i') => {
                self.pos += 1;
                Poly::constant(GaussianRational::i())
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let value = BigInt::from_str(&digits).expect("digits form an integer");
                Poly::constant(GaussianRational::from_real(value.into()))
            }
            Some('(') => self.parenthesized()?,
            _ => return Err(self.fail("expected a term, found")),
        };
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.fail("expected an exponent, found"));
        }
        let exp: u32 = self.digits().parse().map_err(|_| "exponent too large".to_string())?;
        Ok(base.pow(exp as usize))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// `(literal)` is a scalar coefficient; anything else in parentheses is a subexpression.
    fn parenthesized(&mut self) -> Result<Poly, String> {
        let open = self.pos;
        let mut depth = 0;
        let close = loop {
            match self.chars.get(self.pos) {
                Some('(') => depth += 1,
                Some(')') => {
                    depth -= 1;
                    if depth == 0 {
                        break self.pos;
                    }
                }
                Some(_) => {}
                None => {
                    self.pos = open;
                    return Err(self.fail("unbalanced parenthesis"));
                }
            }
            self.pos += 1;
        };
        let inner: String = self.chars[open + 1..close].iter().collect();
        self.pos = close + 1;
        if !inner.contains('z') {
            if let Ok(c) = GaussianRational::from_str(&inner) {
                return Ok(Poly::constant(c));
            }
        }
        parse_poly(&inner).map_err(|e| format!("inside parentheses at position {}: {e}", open + 1))
    }
}

/// Comma-separated integers, e.g. `4,7`.
pub fn parse_int_list(text: &str) -> Result<Vec<BigInt>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(i, item)| {
            BigInt::from_str(item.trim())
                .map_err(|_| CliError::Input(format!("list entry {} ({:?}) is not an integer", i + 1, item.trim())))
        })
        .collect()
}

/// Which `ρ` to report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RhoSelection {
    All,
    List(Vec<usize>),
}

impl FromStr for RhoSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim() == "all" {
            return Ok(Self::All);
        }
        s.split(',')
            .map(|item| {
                item.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("ρ entry {:?} is not a nonnegative integer", item.trim()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::List)
    }
}

impl RhoSelection {
    /// The selected values, each checked to lie in `0..=n`.
    pub fn resolve(&self, n: usize) -> Result<Vec<usize>, CliError> {
        match self {
            Self::All => Ok((0..=n).collect()),
            Self::List(list) => {
                if let Some(bad) = list.iter().find(|&&rho| rho > n) {
                    return Err(CliError::Input(format!("ρ = {bad} is outside 0..={n}")));
                }
                Ok(list.clone())
            }
        }
    }
}

/// Reads a curve argument: inline JSON if it starts with `{`, stdin for `-`, else a file path.
pub fn read_source(arg: &str) -> Result<String, CliError> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        return std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Input(format!("reading stdin: {e}")));
    }
    std::fs::read_to_string(arg).map_err(|e| CliError::Input(format!("reading {arg}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn curve_documents() {
        let v = parse_curve_doc(r#"{"n":2,"components":[[1],[0,1],[0,0,1]]}"#).unwrap();
        assert_eq!(v.curve.to_string(), "[1, z, z^2]");
        let c = parse_curve_doc(r#"{"n":2,"components":[[1],[0,1,0,1],[0,0,1]]}"#).unwrap();
        assert_eq!(c.curve.to_string(), "[1, z^3 + z, z^2]");
        let dep = parse_curve_doc(r#"{"n":1,"components":[[1],[1]]}"#).unwrap();
        assert!(!dep.curve.is_full());
    }

    #[test]
    fn common_factor_is_echoed() {
        let parsed = parse_curve_doc(r#"{"n":1,"components":[[0,1],["0","0","1"]]}"#).unwrap();
        assert_eq!(parsed.removed_factor, p(&[0, 1]));
        assert_eq!(parsed.curve.components(), &[p(&[1]), p(&[0, 1])]);
    }

    #[test]
    fn literal_coefficients() {
        let parsed = parse_curve_doc(r#"{"n":1,"components":[["1/2+i"],[" 0 ", "-3/4*i"]]}"#).unwrap();
        assert_eq!(parsed.curve.components()[0].coeff(0), "1/2+1*i".parse().unwrap());
        assert_eq!(parsed.curve.components()[1].coeff(1), "-3/4*i".parse().unwrap());
    }

    #[test]
    fn diagnostics_carry_json_paths() {
        let err = |doc: &str| parse_curve_doc(doc).unwrap_err().to_string();
        assert!(err(r#"{"n":2,"components":[[1],[0,"x"],[0,0,1]]}"#).contains("$.components[1][1]"));
        assert!(err(r#"{"n":2,"components":[[1],[0,1]]}"#).contains("expected n+1 = 3 components, found 2"));
        assert!(err(r#"{"n":1,"components":[[0],[]]}"#).contains("all components are zero"));
        assert!(err(r#"{"n":1,"components":[[1.5],[1]]}"#).contains("$.components[0][0]"));
        assert!(err(r#"{"n":-1,"components":[]}"#).contains("$.n"));
        assert!(err(r#"{"n":1,"components":[[1],[1]],"extra":0}"#).contains("$.extra"));
        assert!(err(r#"{"n":1,"#).contains("invalid JSON"));
    }

    #[test]
    fn polynomial_expressions() {
        assert_eq!(parse_poly("z^3").unwrap(), p(&[0, 0, 0, 1]));
        assert_eq!(parse_poly("z^3 - 4").unwrap(), p(&[-4, 0, 0, 1]));
        assert_eq!(parse_poly("-z+2z^2").unwrap(), p(&[0, -1, 2]));
        assert_eq!(parse_poly("(z+1)^2").unwrap(), p(&[1, 2, 1]));
        assert_eq!(parse_poly("3*(z-1)*z").unwrap(), p(&[0, -3, 3]));
        let q = parse_poly("(1/2+i)*z^2+1").unwrap();
        assert_eq!(q.coeff(2), "1/2+i".parse().unwrap());
        assert_eq!(q.coeff(0), GaussianRational::from_int(1));
        assert_eq!(parse_poly("iz").unwrap(), Poly::monomial(GaussianRational::i(), 1));
        assert_eq!(
            parse_poly("-1/2*z + 3/4").unwrap(),
            Poly::new(vec![GaussianRational::ratio(3, 4), GaussianRational::ratio(-1, 2)])
        );
        for bad in ["", "z^", "z+", "(z", "2x", "z^z", "z/0", "z/"] {
            assert!(parse_poly(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn maps() {
        let m = parse_map("z^3").unwrap();
        assert_eq!(m, RationalSelfMap::power(3).unwrap());
        let m = parse_map("(z^2+1)/(2z-1)").unwrap();
        assert_eq!(m.degree(), 2);
        assert_eq!(m.denominator().leading_coeff(), Some(&GaussianRational::from_int(1)));
        let m = parse_map("(1/2)*z/1").unwrap();
        assert_eq!(m.numerator(), &Poly::monomial(GaussianRational::ratio(1, 2), 1));
        assert!(parse_map("z/z").is_err());
        assert!(parse_map("z/2/3").is_err());
        assert!(parse_map("5").is_err());
    }

    fn small_gauss() -> impl Strategy<Value = GaussianRational> {
        (-5i64..=5, 1i64..=4, -3i64..=3, 1i64..=4).prop_map(|(a, b, c, d)| {
            GaussianRational::new(
                isoindex_core::Rational::new(a.into(), b.into()),
                isoindex_core::Rational::new(c.into(), d.into()),
            )
        })
    }

    proptest! {
        #[test]
        fn printed_polynomials_parse_back(coeffs in prop::collection::vec(small_gauss(), 0..6)) {
            let poly = Poly::new(coeffs);
            prop_assert_eq!(parse_poly(&poly.to_string()).unwrap(), poly);
        }

        #[test]
        fn printed_maps_parse_back(num in prop::collection::vec(small_gauss(), 1..4), den in prop::collection::vec(small_gauss(), 1..4)) {
            if let Ok(map) = RationalSelfMap::new(Poly::new(num), Poly::new(den)) {
                prop_assert_eq!(parse_map(&map.to_string()).unwrap(), map);
            }
        }
    }

    #[test]
    fn lists() {
        assert_eq!(parse_int_list("4, 7").unwrap(), vec![BigInt::from(4), BigInt::from(7)]);
        assert!(parse_int_list("4,x").is_err());
        assert_eq!("all".parse::<RhoSelection>().unwrap(), RhoSelection::All);
        assert_eq!("1,2".parse::<RhoSelection>().unwrap(), RhoSelection::List(vec![1, 2]));
        assert_eq!(RhoSelection::All.resolve(2).unwrap(), vec![0, 1, 2]);
        assert!(RhoSelection::List(vec![3]).resolve(2).is_err());
    }
}
