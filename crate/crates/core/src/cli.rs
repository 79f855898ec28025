//! Command-line front end. Output is deterministic: identical arguments give identical bytes.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::json;

use crate::autoequiv::{cotwist_on_generator, k_matrix, twist_on_generator, LocalizationParams, Matrix, WindowFunctor};
use crate::bundle::{BundleLabel, GradedComplex};
use crate::bwb::{bwb_cohomology, bwb_weight, classify, BwbClass};
use crate::characters::exactness_report;
use crate::error::Error;
use crate::partition::{staircase, Partition};
use crate::resolution::{theorem_resolution, unstable_resolution_twisted};
use crate::schur::schur_dimension;
use crate::window::window_generators;

#[derive(Debug, Parser)]
#[command(
    name = "windowshift",
    version,
    about = "Window shifts of Grassmannian flops on window generators"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Render complexes on one line with the degree-0 term underlined.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Fold `V` factors into multiplicities.
    #[arg(long, global = true)]
    pub expand_multiplicities: bool,
    /// Seed for random localization parameters.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generators of the window `k`.
    Windows {
        d: usize,
        r: usize,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// The staircase sequence of a seed diagram.
    Staircase {
        #[arg(value_parser = parse_partition)]
        delta: Partition,
        r: usize,
        steps: usize,
    },
    /// Staircase resolution of `j_* Schur^δ H^v`.
    Resolve {
        #[arg(value_parser = parse_partition)]
        delta: Partition,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        /// The adjoint-twisted form, for δ of full width.
        #[arg(long)]
        twisted: bool,
    },
    /// Twist applied to `Schur^δ S^v(1)`.
    Twist {
        #[arg(value_parser = parse_partition)]
        delta: Partition,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
    },
    /// Shifted inverse cotwist applied to `Schur^δ S^v`.
    Cotwist {
        #[arg(value_parser = parse_partition)]
        delta: Partition,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
    /// Cohomology of `(S/H)^{v i} x Schur^δ H^v` along the fibres of `P(S)`.
    Bwb {
        #[arg(value_parser = parse_partition)]
        delta: Partition,
        i: usize,
        r: usize,
    },
    /// K-theory matrix of a window functor.
    Kmatrix {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
    },
    /// Check the staircase resolution against the pushforward character.
    VerifyExactness {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        delta: Partition,
        #[arg(long, default_value_t = 6)]
        degree: usize,
        #[arg(long, value_enum)]
        report: Option<ReportFormat>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Twist,
    Cotwist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

/// Outcome of a subcommand that ran without a usage error.
enum Outcome {
    Ok(String),
    VerificationFailed(String),
}

/// Parses `args` (including the program name) and writes the result to `out`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(Outcome::Ok(text)) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Ok(Outcome::VerificationFailed(text)) => {
            let _ = writeln!(out, "{text}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let g = &cli.global;
    let text = match &cli.command {
        Command::Windows { d, r, k } => {
            let gens = window_generators(*d, *r, *k)?;
            if g.json {
                to_json(&gens, g.pretty)
            } else {
                gens.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("\n")
            }
        }
        Command::Staircase { delta, r, steps } => {
            let stairs = staircase(delta, *r, *steps)?;
            if g.json {
                to_json(&stairs, g.pretty)
            } else {
                let mut lines = Vec::new();
                for k in 0..=*steps {
                    let shape = stairs.shape(k);
                    lines.push(format!("k={k} s={} {shape}", stairs.added(k)));
                    if g.pretty {
                        lines.push(shape.young_diagram());
                    }
                }
                lines.join("\n")
            }
        }
        Command::Resolve { delta, d, r, twisted } => {
            let complex = if *twisted {
                unstable_resolution_twisted(delta, *d, *r)?
            } else {
                theorem_resolution(delta, *d, *r)?.complex
            };
            render_complex(&complex, *d, g)
        }
        Command::Twist { delta, d, r } => render_complex(&twist_on_generator(delta, *d, *r)?, *d, g),
        Command::Cotwist { delta, d, n } => render_complex(&cotwist_on_generator(delta, *d, *n)?, *d, g),
        Command::Bwb { delta, i, r } => {
            let answer = bwb_cohomology(delta, *i, *r)?;
            let alpha = bwb_weight(delta, *i, *r);
            let class = classify(&alpha);
            if g.json {
                let cohomology = answer.as_ref().map(|(deg, p)| json!({"degree": deg, "schur": p}));
                to_json(
                    &json!({"weight": alpha.0, "class": class_name(&class), "cohomology": cohomology}),
                    g.pretty,
                )
            } else {
                let head = format!("weight {:?}: {}", alpha.0, class_name(&class));
                match answer {
                    Some((deg, p)) => format!("{head}\nH^{deg} = Schur^{p} S^v"),
                    None => format!("{head}\nacyclic"),
                }
            }
        }
        Command::Kmatrix { which, d, r } => {
            let params = match g.seed {
                Some(seed) => LocalizationParams::random(*d, seed),
                None => LocalizationParams::standard(*d),
            };
            let functor = match which {
                Which::Twist => WindowFunctor::Twist,
                Which::Cotwist => WindowFunctor::Cotwist,
            };
            render_matrix(&k_matrix(functor, *d, *r, &params)?, g)
        }
        Command::VerifyExactness {
            d,
            r,
            delta,
            degree,
            report,
        } => {
            let diffs = exactness_report(delta, *d, *r, *degree)?;
            let text = if g.json || report.is_some() {
                to_json(
                    &json!({"exact": diffs.is_empty(), "degree": degree, "diffs": diffs}),
                    g.pretty,
                )
            } else if diffs.is_empty() {
                format!("exact through degree {degree}")
            } else {
                let mut lines = vec![format!("NOT exact: {} coefficients differ", diffs.len())];
                for diff in &diffs {
                    lines.push(format!(
                        "  s_{}(V) s_{}(S^v): resolution {} vs pushforward {}",
                        diff.v_shape, diff.s_shape, diff.left, diff.right
                    ));
                }
                lines.join("\n")
            };
            return Ok(if diffs.is_empty() {
                Outcome::Ok(text)
            } else {
                Outcome::VerificationFailed(text)
            });
        }
    };
    Ok(Outcome::Ok(text))
}

fn class_name(class: &BwbClass) -> String {
    match class {
        BwbClass::Dominant => "dominant".to_string(),
        BwbClass::Regular { length, .. } => format!("regular l={length}"),
        BwbClass::NonRegular => "non-regular".to_string(),
    }
}

fn to_json<T: serde::Serialize + ?Sized>(value: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("serializable")
    } else {
        serde_json::to_string(value).expect("serializable")
    }
}

fn render_matrix(m: &Matrix, g: &GlobalOpts) -> String {
    let ints: Vec<Vec<i64>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.to_integer().to_i64().expect("small entries"))
                .collect()
        })
        .collect();
    if g.json {
        return to_json(&ints, g.pretty);
    }
    let width = ints.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    ints.iter()
        .map(|row| row.iter().map(|x| format!("{x:>width$}")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

/// `label^m`, parenthesized when the label is not a single token.
fn power(name: &str, mult: u64) -> String {
    if mult == 1 {
        name.to_string()
    } else if name.contains(' ') || name.contains('^') {
        format!("({name})^{mult}")
    } else {
        format!("{name}^{mult}")
    }
}

fn term_names(labels: &[(&BundleLabel, u64)], d: usize, expand: bool) -> Vec<String> {
    if !expand {
        return labels.iter().map(|(l, m)| power(&l.to_string(), *m)).collect();
    }
    // Merge labels that agree once the V factor is dropped.
    let mut merged: Vec<(String, u64)> = Vec::new();
    for (label, mult) in labels {
        let name = label.base_name();
        let m = mult * schur_dimension(&label.v_shape, d);
        match merged.iter_mut().find(|(n, _)| *n == name) {
            Some(entry) => entry.1 += m,
            None => merged.push((name, m)),
        }
    }
    merged.into_iter().map(|(n, m)| power(&n, m)).collect()
}

/// Text rendering of a complex. Plain mode prints one degree per line; pretty mode
/// prints `A -> B -> C` with a caret line under the degree-0 term.
pub fn render_complex_text(complex: &GradedComplex, d: usize, pretty: bool, expand: bool) -> String {
    let degrees: Vec<i64> = complex.degrees().collect();
    let group = |deg: i64| -> String {
        match complex.at(deg) {
            Some(terms) => {
                let labels: Vec<(&BundleLabel, u64)> = terms.iter().map(|(l, &m)| (l, m)).collect();
                term_names(&labels, d, expand).join(" + ")
            }
            None => "0".to_string(),
        }
    };
    if degrees.is_empty() {
        return "0".to_string();
    }
    if !pretty {
        return degrees
            .iter()
            .map(|&deg| format!("[{deg}] {}", group(deg)))
            .collect::<Vec<_>>()
            .join("\n");
    }
    let lo = degrees[0].min(0);
    let hi = degrees[degrees.len() - 1].max(0);
    let mut line = String::new();
    let mut caret = String::new();
    for deg in lo..=hi {
        if deg > lo {
            line.push_str(" -> ");
        }
        let text = group(deg);
        if deg == 0 {
            caret = " ".repeat(line.chars().count()) + &"^".repeat(text.chars().count());
        }
        line.push_str(&text);
    }
    format!("{line}\n{caret}")
}

fn render_complex(complex: &GradedComplex, d: usize, g: &GlobalOpts) -> String {
    if g.json {
        if g.pretty {
            complex.to_json_pretty()
        } else {
            complex.to_json()
        }
    } else {
        render_complex_text(complex, d, g.pretty, g.expand_multiplicities)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["windowshift"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn twist_pretty() {
        let (code, out, _) = run_str(&[
            "twist",
            "1",
            "--d",
            "2",
            "--r",
            "1",
            "--pretty",
            "--expand-multiplicities",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "O(1)^2 -> O\n^^^^^^\n");
    }

    #[test]
    fn windows_pretty() {
        let (code, out, _) = run_str(&["windows", "4", "2", "0", "--pretty"]);
        assert_eq!(code, 0);
        assert_eq!(out, "O\nS^v\nSym^2 S^v\nO(1)\nS^v(1)\nO(2)\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            run_str(&[
                "verify-exactness",
                "--d",
                "4",
                "--r",
                "2",
                "--delta",
                "",
                "--degree",
                "4"
            ])
            .0,
            0
        );
        let (code, _, err) = run_str(&["twist", "1,x", "--d", "2", "--r", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("cannot parse partition"));
        let (code, _, err) = run_str(&["twist", "3", "--d", "2", "--r", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("error:"));
        assert_eq!(run_str(&["frobnicate"]).0, 2);
    }

    #[test]
    fn json_round_trip() {
        let (_, out, _) = run_str(&["cotwist", "2,1", "--d", "4", "--n", "2", "--json"]);
        let parsed = GradedComplex::from_json(out.trim_end()).unwrap();
        assert_eq!(parsed.to_json(), out.trim_end());
    }
}
