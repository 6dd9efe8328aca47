//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::haar::{invariance_check_at, schur_indicator_via_character, HaarMomentTable};
use crate::hopf::{verify_hopf_axioms_at, BEPresentation, CorpusExample, DEFAULT_MAX_K};
use crate::io::{
    error_json, matrix_to_json, moment_table_json, moment_table_text, parse_matrix, Report,
};

#[derive(Parser, Debug)]
#[command(
    name = "bilinear-hopf",
    version,
    about = "Exact analysis of the Hopf algebras B(E) of bilinear forms"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Bound on powers of a non-diagonal F when searching for a scalar.
    #[arg(long, default_value_t = DEFAULT_MAX_K, global = true)]
    max_k: u64,

    /// Precision of the floating approximations in reports.
    #[arg(long, default_value_t = 64, global = true)]
    precision_bits: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Antipode order, cosemisimplicity and indicator of a form read from a file.
    Analyze {
        #[arg(long)]
        file: PathBuf,
    },
    /// Analyze a built-in form: prop2 --m M, remark4 --m M, remark5, example7 --n N.
    Example {
        name: String,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Degree-2 Haar moments of a form read from a file.
    Haar {
        #[arg(long)]
        file: PathBuf,
    },
    /// Symbolic checks modulo the relations.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Counit, antipode, S(I) in I, and compatibility of the coproduct.
    Axioms(VerifyArgs),
    /// Left and right invariance of the degree-2 Haar moments.
    Invariance(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    file: PathBuf,
    /// Degree in which membership is decided.
    #[arg(long, default_value_t = 2)]
    degree: usize,
    /// Extra degrees of products used to close the ideal.
    #[arg(long, default_value_t = 2)]
    margin: usize,
}

/// Parses `args` (program name first), runs the command and writes the
/// report to standard output. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let _ = out.write_all(output.as_bytes());
            0
        }
        Err(e) => {
            match cli.format {
                Format::Json => {
                    let _ = writeln!(out, "{}", pretty(&error_json(&e)));
                }
                Format::Text => {
                    let _ = writeln!(err, "error: {e}");
                }
            }
            e.exit_code()
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn load(path: &Path) -> Result<(BEPresentation, Value, String)> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let form = parse_matrix(&text)?;
    let input = json!({ "file": path.display().to_string(), "matrix": matrix_to_json(&form) });
    let label = format!("file {}", path.display());
    Ok((BEPresentation::new(form)?, input, label))
}

fn check_flags(cli: &Cli) -> Result<()> {
    if cli.precision_bits < 8 {
        return Err(Error::InvalidParameter(
            "--precision-bits must be at least 8".into(),
        ));
    }
    if cli.max_k == 0 {
        return Err(Error::InvalidParameter("--max-k must be positive".into()));
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<String> {
    check_flags(cli)?;
    let (presentation, input, label, verify) = match &cli.command {
        Command::Analyze { file } => {
            let (p, input, label) = load(file)?;
            (p, input, label, None)
        }
        Command::Example { name, m, n } => {
            let example = CorpusExample::from_name(name, *m, *n)?;
            let p = example.build()?;
            let mut input = json!({ "example": example.name() });
            if let Some(m) = m {
                input["m"] = json!(m);
            }
            if let Some(n) = n {
                input["n"] = json!(n);
            }
            input["matrix"] = matrix_to_json(p.form());
            (p, input, format!("example {example}"), None)
        }
        Command::Haar { file } => {
            let (p, input, label) = load(file)?;
            return haar_output(cli.format, &p, input, &label);
        }
        Command::Verify { check } => {
            let (args, which) = match check {
                VerifyCommand::Axioms(a) => (a, Check::Axioms),
                VerifyCommand::Invariance(a) => (a, Check::Invariance),
            };
            let (p, input, label) = load(&args.file)?;
            (p, input, label, Some((which, args.degree, args.margin)))
        }
    };
    let mut report = Report {
        input,
        input_label: label,
        presentation: &presentation,
        analysis: presentation.analyze(cli.max_k)?,
        axioms: None,
        invariance: None,
        approx_bits: Some(cli.precision_bits),
    };
    match verify {
        Some((Check::Axioms, degree, margin)) => {
            report.axioms = Some(verify_hopf_axioms_at(&presentation, degree, margin)?);
        }
        Some((Check::Invariance, degree, margin)) => {
            report.invariance = Some(invariance_check_at(&presentation, degree, margin)?);
        }
        None => {}
    }
    Ok(match cli.format {
        Format::Json => pretty(&report.to_json()) + "\n",
        Format::Text => report.to_text(),
    })
}

#[derive(Clone, Copy)]
enum Check {
    Axioms,
    Invariance,
}

fn haar_output(format: Format, p: &BEPresentation, input: Value, label: &str) -> Result<String> {
    let table = HaarMomentTable::new(p)?;
    let nu2 = p.schur_indicator().ok();
    let via_character = schur_indicator_via_character(p).ok();
    Ok(match format {
        Format::Json => {
            let mut v = json!({
                "input": input,
                "conductor": p.conductor(),
                "size": p.size(),
            });
            let table_json = moment_table_json(&table);
            v["denominator"] = table_json["denominator"].clone();
            v["nu2"] = nu2.map_or(Value::Null, |x| json!(x.to_z_string()));
            v["nu2_via_character"] = via_character.map_or(Value::Null, |x| json!(x.to_z_string()));
            v["moments"] = table_json["moments"].clone();
            pretty(&v) + "\n"
        }
        Format::Text => {
            let mut s = format!("input: {label}\n");
            s += &moment_table_text(&table);
            match (nu2, via_character) {
                (Some(a), Some(b)) => {
                    s += &format!(
                        "nu2 = {} (via character: {})\n",
                        a.to_z_string(),
                        b.to_z_string()
                    )
                }
                _ => s += "nu2: none (no Haar state)\n",
            }
            s
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(
            std::iter::once("bilinear-hopf").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn example_commands() {
        let (code, out, _) = run_capture(&["example", "example7", "--n", "5"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["nu2"], json!("5"));
        assert_eq!(v["antipode_order"], json!({ "finite": 4 }));
        assert_eq!(v["input"]["n"], json!(5));

        let (code, out, _) = run_capture(&["example", "prop2", "--m", "5", "--format", "text"]);
        assert_eq!(code, 0);
        assert!(out.contains("antipode_order:    10"), "{out}");
        assert!(out.contains("cosemisimple:      true"));
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, out, err) = run_capture(&["example", "prop2"]);
        assert_eq!(code, 2);
        assert!(err.is_empty());
        assert!(out.contains("invalid_parameter"));
        let (code, _, err) = run_capture(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
        let (code, _, _) = run_capture(&["example", "remark5", "--precision-bits", "4"]);
        assert_eq!(code, 2);
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }

    #[test]
    fn missing_file_is_an_input_error() {
        let (code, out, _) = run_capture(&["analyze", "--file", "/nonexistent/e.json"]);
        assert_eq!(code, 2);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"]["code"], json!("io_error"));
        let (code, out, err) = run_capture(&[
            "analyze",
            "--file",
            "/nonexistent/e.json",
            "--format",
            "text",
        ]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.starts_with("error: i/o error"));
    }
}
