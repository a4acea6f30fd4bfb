//! Subcommand implementations.

use adreal_core::partitions::{atlas_csv, atlas_rows};
use adreal_core::reality::{classify_c, classify_h, ClassificationReport, RealityError, TraceGate};
use adreal_core::witness::{
    build_real_witness_c, build_real_witness_h, build_strong_witness_c, build_strong_witness_h,
    verify_c, verify_h, Certificate, CertificateDocument, CertificateFlags, WitnessError,
    WitnessField,
};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::input::{self, Loaded};
use crate::{Failure, FieldArg, FormatArg};

fn gate(gl_mode: bool) -> TraceGate {
    if gl_mode {
        TraceGate::GlMode
    } else {
        TraceGate::RequireTraceZero
    }
}

fn map_reality_error(e: RealityError) -> Failure {
    Failure::input(e.to_string())
}

fn report_for(loaded: &Loaded, gl_mode: bool) -> Result<ClassificationReport, Failure> {
    match loaded {
        Loaded::C { jd, .. } => classify_c(jd, gate(gl_mode)).map_err(map_reality_error),
        Loaded::H { jd, .. } => classify_h(jd, gate(gl_mode)).map_err(map_reality_error),
    }
}

fn print_report(report: &ClassificationReport, format: FormatArg) {
    match format {
        FormatArg::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
        FormatArg::Table => {
            println!("field          {}", report.field);
            println!("n              {}", report.n);
            println!("real           {}", report.real);
            println!("strongly real  {}", report.strongly_real);
            println!("reason         {}", report.reason);
            for entry in &report.spectrum {
                let partition: Vec<String> = entry
                    .partition
                    .iter()
                    .map(|(d, t)| {
                        if *t == 1 {
                            d.to_string()
                        } else {
                            format!("{d}^{t}")
                        }
                    })
                    .collect();
                println!(
                    "spectrum       lambda = {}, multiplicity = {}, partition = [{}]",
                    entry.lambda,
                    entry.multiplicity,
                    partition.join(",")
                );
            }
        }
    }
}

pub fn classify(
    input_arg: Option<String>,
    field: Option<FieldArg>,
    hint: Option<String>,
    gl_mode: bool,
    format: FormatArg,
    batch: Option<String>,
) -> Result<(), Failure> {
    let hints = input::parse_hints(hint.as_deref())?;
    if let Some(dir) = batch {
        return classify_batch(&dir, field, &hints, gl_mode);
    }
    let source = input::read_source(input_arg.as_deref())?;
    let loaded = input::load(&source, field, &hints)?;
    let report = report_for(&loaded, gl_mode)?;
    print_report(&report, format);
    Ok(())
}

fn classify_batch(
    dir: &str,
    field: Option<FieldArg>,
    hints: &[adreal_core::GaussianRational],
    gl_mode: bool,
) -> Result<(), Failure> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| Failure::input(format!("cannot read directory {dir}: {e}")))?
        .filter_map(Result::ok)
        .map(|entry| entry.path())
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort();
    let mut results = Vec::new();
    let mut first_failure: Option<Failure> = None;
    for path in paths {
        let name = path.display().to_string();
        let outcome = std::fs::read_to_string(&path)
            .map_err(|e| Failure::input(format!("cannot read {name}: {e}")))
            .and_then(|source| input::load(&source, field, hints))
            .and_then(|loaded| report_for(&loaded, gl_mode));
        match outcome {
            Ok(report) => results.push(json!({ "file": name, "report": report })),
            Err(failure) => {
                results.push(json!({ "file": name, "error": failure.message }));
                if first_failure.is_none() {
                    first_failure = Some(failure);
                }
            }
        }
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&results).expect("batch serializes")
    );
    match first_failure {
        None => Ok(()),
        Some(f) => Err(Failure {
            code: f.code,
            message: format!("batch had failures; first: {}", f.message),
        }),
    }
}

fn map_witness_error(e: WitnessError) -> Failure {
    match e {
        WitnessError::NoWitness { reason } => {
            Failure::negative_verdict(format!("no witness exists: {reason}"))
        }
        WitnessError::RootNotRepresentable(detail) => Failure::refusal(detail),
        WitnessError::Spectral(inner) => input::map_spectral_error(inner),
        other => Failure::input(other.to_string()),
    }
}

/// Witness output: the input matrix alongside the certificate fields, so
/// the document pipes straight into `verify`.
#[derive(Serialize)]
struct WitnessOutput {
    x: adreal_core::MatrixDocument,
    g: adreal_core::MatrixDocument,
    flags: CertificateFlags,
    transcript: Vec<String>,
}

fn emit_witness<S: WitnessField>(
    x: &adreal_core::Matrix<S>,
    cert: &Certificate<S>,
    format: FormatArg,
) {
    let doc = CertificateDocument::from_certificate(cert);
    let out = WitnessOutput {
        x: S::matrix_document(x),
        g: doc.g,
        flags: doc.flags,
        transcript: doc.transcript,
    };
    match format {
        FormatArg::Json => println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("witness serializes")
        ),
        FormatArg::Table => {
            println!("conjugator g:");
            for row in &out.g.entries {
                println!("  [{}]", row.join(", "));
            }
            println!(
                "conjugates to negative  {}",
                out.flags.conjugates_to_negative
            );
            println!("involutive              {}", out.flags.involutive);
            println!("special                 {}", out.flags.special);
            for line in &out.transcript {
                println!("transcript: {line}");
            }
        }
    }
}

pub fn witness(
    input_arg: Option<String>,
    field: Option<FieldArg>,
    hint: Option<String>,
    strong: bool,
    gl_mode: bool,
    format: FormatArg,
) -> Result<(), Failure> {
    let hints = input::parse_hints(hint.as_deref())?;
    let source = input::read_source(input_arg.as_deref())?;
    let loaded = input::load(&source, field, &hints)?;
    let report = report_for(&loaded, gl_mode)?;
    if !report.real || (strong && !report.strongly_real) {
        return Err(Failure::negative_verdict(format!(
            "no witness exists: {}",
            report.reason
        )));
    }
    match &loaded {
        Loaded::C { x, jd } => {
            let cert = if strong || report.strongly_real {
                build_strong_witness_c(x, jd)
            } else {
                build_real_witness_c(x, jd)
            }
            .map_err(map_witness_error)?;
            emit_witness(x, &cert, format);
        }
        Loaded::H { x, jd } => {
            let cert = if strong || report.strongly_real {
                build_strong_witness_h(x, jd)
            } else {
                build_real_witness_h(x, jd)
            }
            .map_err(map_witness_error)?;
            emit_witness(x, &cert, format);
        }
    }
    Ok(())
}

#[derive(Deserialize)]
struct VerifyInput {
    x: adreal_core::MatrixDocument,
    #[serde(default)]
    g: Option<adreal_core::MatrixDocument>,
    #[serde(default)]
    certificate: Option<CertificateDocument>,
    /// Claims to check; defaults to the document's own flags when present,
    /// otherwise to the conjugation claim alone.
    #[serde(default)]
    claims: Option<CertificateFlags>,
    #[serde(default)]
    flags: Option<CertificateFlags>,
}

pub fn verify(input_arg: Option<String>, format: FormatArg) -> Result<(), Failure> {
    let source = input::read_source(input_arg.as_deref())?;
    let parsed: VerifyInput = serde_json::from_str(&source)
        .map_err(|e| Failure::input(format!("bad verify document: {e}")))?;
    let g_doc = parsed
        .g
        .clone()
        .or_else(|| parsed.certificate.as_ref().map(|c| c.g.clone()))
        .ok_or_else(|| Failure::input("verify document needs \"g\" or \"certificate\""))?;
    let claims = parsed
        .claims
        .or(parsed.flags)
        .or_else(|| parsed.certificate.as_ref().map(|c| c.flags))
        .unwrap_or(CertificateFlags {
            conjugates_to_negative: true,
            involutive: false,
            special: false,
        });

    let (verified, transcript) = match parsed.x.field.as_str() {
        "C" => {
            let x = parsed
                .x
                .to_matrix_c()
                .map_err(|e| Failure::input(e.to_string()))?;
            let g = g_doc
                .to_matrix_c()
                .map_err(|e| Failure::input(e.to_string()))?;
            let cert = verify_c(&g, &x).map_err(|e| Failure::input(e.to_string()))?;
            (cert.flags, cert.transcript)
        }
        "H" => {
            let x = parsed
                .x
                .to_matrix_h()
                .map_err(|e| Failure::input(e.to_string()))?;
            let g = g_doc
                .to_matrix_h()
                .map_err(|e| Failure::input(e.to_string()))?;
            let cert = verify_h(&g, &x).map_err(|e| Failure::input(e.to_string()))?;
            (cert.flags, cert.transcript)
        }
        other => return Err(Failure::input(format!("unknown field tag {other:?}"))),
    };

    match format {
        FormatArg::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "verified": verified,
                "claims": claims,
                "transcript": transcript,
            }))
            .expect("verification serializes")
        ),
        FormatArg::Table => {
            println!(
                "conjugates to negative  {}",
                verified.conjugates_to_negative
            );
            println!("involutive              {}", verified.involutive);
            println!("special                 {}", verified.special);
        }
    }

    let claim_ok = (!claims.conjugates_to_negative || verified.conjugates_to_negative)
        && (!claims.involutive || verified.involutive)
        && (!claims.special || verified.special);
    if claim_ok {
        Ok(())
    } else {
        Err(Failure::verification(
            "claimed flags were not verified".to_string(),
        ))
    }
}

pub fn atlas(bound: usize) -> Result<(), Failure> {
    if bound > 40 {
        return Err(Failure::input(format!(
            "atlas bound {bound} exceeds the supported maximum 40"
        )));
    }
    let rows = atlas_rows(bound).map_err(|e| Failure::input(e.to_string()))?;
    print!("{}", atlas_csv(&rows));
    Ok(())
}
