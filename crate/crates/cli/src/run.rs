use isoindex_core::bounds::{self, DirectrixInvariants};
use isoindex_core::harmonic::{self, verify_plucker};
use isoindex_core::RationalSelfMap;

use crate::args::{Cli, Command, Format};
use crate::corpus::run_corpus;
use crate::error::CliError;
use crate::input::{parse_curve_doc, parse_int_list, parse_map, read_source, ParsedCurve, RhoSelection};
use crate::report::{self, AnalysisJson, BoundJson, CurveJson, VerificationJson};

/// Everything a run writes, plus its exit status.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

pub fn run(cli: Cli) -> Outcome {
    let mut out = Outcome::default();
    if let Err(e) = dispatch(cli.command, &mut out.stdout) {
        out.stderr = format!("isoindex: {e}\n");
        out.code = e.exit_code();
    }
    out
}

fn emit<T: serde::Serialize>(format: Format, doc: &T, text: impl FnOnce(&T) -> String, out: &mut String) {
    out.push_str(&match format {
        Format::Json => report::to_canonical_json(doc),
        Format::Text => text(doc),
    });
}

fn dispatch(command: Command, out: &mut String) -> Result<(), CliError> {
    match command {
        Command::Analyze { input, rho, format } => {
            let doc = analyze(&parse_curve_doc(&read_source(&input)?)?, None, &rho)?;
            emit(format, &doc, report::render_analysis, out);
        }
        Command::ComposeAnalyze { input, map, rho, format } => {
            let map = parse_map(&map)?;
            let doc = analyze(&parse_curve_doc(&read_source(&input)?)?, Some(&map), &rho)?;
            emit(format, &doc, report::render_analysis, out);
        }
        Command::Verify { input, format } => {
            let parsed = parse_curve_doc(&read_source(&input)?)?;
            require_full(&parsed)?;
            let seq = harmonic::invariants(&parsed.curve)?;
            let doc = VerificationJson::from(&verify_plucker(&seq));
            emit(format, &doc, report::render_verification, out);
            check_pass(&doc)?;
        }
        Command::Bounds { n, g, deg_f, rho, r, format } => {
            let dir = DirectrixInvariants::new(n, g, deg_f, rho, parse_int_list(&r)?)?;
            let doc = BoundJson::from(&bounds::bound_report(&dir)?);
            emit(
                format,
                &doc,
                |b| report::render_directrix(&b.input) + &report::render_bounds(std::slice::from_ref(b)),
                out,
            );
        }
        Command::Examples { filter, format } => {
            let doc = run_corpus(filter.as_deref())?;
            emit(format, &doc, report::render_examples, out);
            if doc.mismatches > 0 {
                return Err(CliError::Mismatch(doc.mismatches));
            }
        }
    }
    Ok(())
}

fn require_full(parsed: &ParsedCurve) -> Result<(), CliError> {
    if parsed.curve.checked_is_full()? {
        Ok(())
    } else {
        Err(CliError::NotFull(format!("{} lies in a proper projective subspace", parsed.curve)))
    }
}

/// Residuals of computed invariants are zero unless the arithmetic is wrong.
fn check_pass(v: &VerificationJson) -> Result<(), CliError> {
    if v.pass {
        Ok(())
    } else {
        Err(CliError::Internal(format!("nonzero Plücker residuals {v:?}")))
    }
}

fn analyze(parsed: &ParsedCurve, map: Option<&RationalSelfMap>, rho: &RhoSelection) -> Result<AnalysisJson, CliError> {
    let parsed = match map {
        Some(m) => ParsedCurve { curve: parsed.curve.precompose(m), removed_factor: parsed.removed_factor.clone() },
        None => parsed.clone(),
    };
    require_full(&parsed)?;
    let seq = harmonic::invariants(&parsed.curve)?;
    let verification = VerificationJson::from(&verify_plucker(&seq));
    check_pass(&verification)?;
    let bounds = rho
        .resolve(seq.n)?
        .into_iter()
        .map(|r| {
            let dir = DirectrixInvariants::from_sequence(&seq, r)?;
            Ok(BoundJson::from(&bounds::bound_report(&dir)?))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(AnalysisJson {
        curve: CurveJson::new(&parsed, true),
        map: map.map(ToString::to_string),
        invariants: (&seq).into(),
        verification,
        bounds,
    })
}
