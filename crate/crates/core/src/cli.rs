//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a singular model has no Jacobian, 2 on
//! malformed input and 3 when an internal consistency check fails.

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::exactmath::{format_rational, parse_rational, Rational};
use crate::invariants::{self, InvariantTriple};
use crate::models::{self, GenusOneModel};

#[derive(Parser, Debug)]
#[command(name = "genus-one", version, about = "Invariants and Jacobians of genus one models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print c4, c6 and Delta.
    Invariants { file: String },
    /// Print the Jacobian y^2 = x^3 - 27 c4 x - 54 c6.
    Jacobian { file: String },
    /// Print the j-invariant.
    J { file: String },
    /// Print the submaximal Pfaffians of a degree-5 model.
    Pfaffians { file: String },
    /// Apply a transformation and print the new model.
    Transform {
        file: String,
        /// Transformation file, or the JSON text itself.
        #[arg(long, short = 't')]
        transformation: String,
    },
    /// Print the Weierstrass model a1 a2 a3 a4 a6 as a model of degree n.
    #[command(allow_negative_numbers = true)]
    Weierstrass {
        #[arg(num_args = 5, required = true)]
        coefficients: Vec<String>,
        #[arg(long, short = 'n', default_value_t = 1)]
        degree: u8,
    },
    /// Project a degree-5 model away from a point on the curve.
    Project {
        file: String,
        /// Comma-separated coordinates x1,...,x5.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Print the discriminant.
    Discriminant {
        file: String,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Print a1 mod 2 of an integral model of degree 2 to 5.
    #[command(name = "a1-char2")]
    A1Char2 { file: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    /// Delta = (c4^3 - c6^2) / 1728.
    Formula,
    /// Determinant of the covariant coefficient matrix (degrees 3 to 5).
    Matrix,
}

enum Failure {
    Input(String),
    Model(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Model(e)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Singular => 1,
        Error::Internal(_) => 3,
        _ => 2,
    }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let mut buf = String::new();
    match execute(cli.command, stdin, &mut buf) {
        Ok(()) => {
            if out.write_all(buf.as_bytes()).is_err() {
                return 2;
            }
            0
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Model(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("reading {path}: {e}")))?;
    }
    Ok(text)
}

fn load(path: &str, stdin: &mut dyn Read) -> Result<GenusOneModel, Failure> {
    Ok(models::model_from_json(&read_input(path, stdin)?)?)
}

fn require_degree(m: &GenusOneModel, allowed: &[u8], verb: &str) -> Result<(), Failure> {
    if allowed.contains(&m.degree()) {
        Ok(())
    } else {
        Err(Failure::Input(format!(
            "`{verb}` does not accept models of degree {}",
            m.degree()
        )))
    }
}

fn line(buf: &mut String, label: &str, q: &Rational) {
    buf.push_str(label);
    buf.push_str(" = ");
    buf.push_str(&format_rational(q));
    buf.push('\n');
}

fn print_triple(buf: &mut String, inv: &InvariantTriple) {
    line(buf, "c4", &inv.c4);
    line(buf, "c6", &inv.c6);
    line(buf, "Delta", &inv.delta);
}

fn execute(cmd: Command, stdin: &mut dyn Read, buf: &mut String) -> Result<(), Failure> {
    const ALL: &[u8] = &[1, 2, 3, 4, 5];
    match cmd {
        Command::Invariants { file } => {
            let m = load(&file, stdin)?;
            require_degree(&m, ALL, "invariants")?;
            print_triple(buf, &invariants::invariants(&m)?);
        }
        Command::Jacobian { file } => {
            let m = load(&file, stdin)?;
            require_degree(&m, ALL, "jacobian")?;
            let e = invariants::jacobian(&m)?;
            let a = e.weierstrass_coefficients().expect("degree 1");
            for (label, q) in ["a1", "a2", "a3", "a4", "a6"].iter().zip(a) {
                line(buf, label, q);
            }
        }
        Command::J { file } => {
            let m = load(&file, stdin)?;
            require_degree(&m, ALL, "j")?;
            line(buf, "j", &invariants::j_invariant(&m)?);
        }
        Command::Pfaffians { file } => {
            let m = load(&file, stdin)?;
            require_degree(&m, &[5], "pfaffians")?;
            for (i, p) in models::equations(&m).iter().enumerate() {
                buf.push_str(&format!("p{} = {}\n", i + 1, p));
            }
        }
        Command::Transform {
            file,
            transformation,
        } => {
            let m = load(&file, stdin)?;
            let text = if transformation.trim_start().starts_with('{') {
                transformation
            } else {
                read_input(&transformation, stdin)?
            };
            let g = models::transformation_from_json(&text)?;
            buf.push_str(&models::model_to_json(&models::apply(&g, &m)?));
        }
        Command::Weierstrass {
            coefficients,
            degree,
        } => {
            let a: Vec<Rational> = coefficients
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<_, _>>()?;
            let w = GenusOneModel::from_coefficients(1, a)?;
            buf.push_str(&models::model_to_json(&models::weierstrass_model(&w, degree)?));
        }
        Command::Project { file, point } => {
            let m = load(&file, stdin)?;
            require_degree(&m, &[5], "project")?;
            let p: Vec<Rational> = point
                .split(',')
                .map(parse_rational)
                .collect::<Result<_, _>>()?;
            if p.len() != 5 {
                return Err(Failure::Input(format!(
                    "--point needs 5 coordinates, got {}",
                    p.len()
                )));
            }
            buf.push_str(&models::model_to_json(&models::project_from_point(&m, &p)?));
        }
        Command::Discriminant { file, method } => {
            let m = load(&file, stdin)?;
            let delta = match method {
                Method::Formula => {
                    require_degree(&m, ALL, "discriminant --method formula")?;
                    invariants::invariants(&m)?.delta
                }
                Method::Matrix => {
                    require_degree(&m, &[3, 4, 5], "discriminant --method matrix")?;
                    invariants::discriminant_via_matrix(&m)?
                }
            };
            line(buf, "Delta", &delta);
        }
        Command::A1Char2 { file } => {
            let m = load(&file, stdin)?;
            require_degree(&m, &[2, 3, 4, 5], "a1-char2")?;
            let r = invariants::a1_char2(&m)?;
            buf.push_str(&format!("a1 = {r}\n"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("genus-one").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn weierstrass_then_invariants() {
        let (code, model, _) = call(&["weierstrass", "0", "0", "0", "-1", "0", "--degree", "5"], "");
        assert_eq!(code, 0);
        let (code, out, _) = call(&["invariants", "-"], &model);
        assert_eq!(code, 0);
        assert_eq!(out, "c4 = 48\nc6 = 0\nDelta = 64\n");
    }

    #[test]
    fn exit_codes() {
        let (code, model, _) = call(&["weierstrass", "0", "0", "0", "-3", "2"], "");
        assert_eq!(code, 0);
        assert_eq!(call(&["jacobian", "-"], &model).0, 1);
        assert_eq!(call(&["j", "-"], &model).0, 1);
        assert_eq!(call(&["invariants", "-"], "{").0, 2);
        assert_eq!(call(&["invariants", "/nonexistent/model.json"], "").0, 2);
        assert_eq!(call(&["frobnicate"], "").0, 2);
        assert_eq!(call(&["pfaffians", "-"], &model).0, 2);
        assert_eq!(call(&["discriminant", "--method", "matrix", "-"], &model).0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
    }
}
