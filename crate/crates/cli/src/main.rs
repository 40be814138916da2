use std::collections::BTreeSet;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use invpipes::invdream::{fd_set, id_set};
use invpipes::pipedream::pd_set;
use invpipes::schubert::{
    double_schubert, fpf_schubert, fpf_schubert_pd, inv_schubert, inv_schubert_pd, schubert, schubert_dd,
    weighted_count,
};
use invpipes::{render, verify, Diagram, FpfInvolution, Involution, Permutation, Polynomial, Word};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "invpipes", version, about = "Pipe dreams and Schubert polynomials for involutions")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced pipe dreams of a permutation.
    Pd { subject: String },
    /// Involution pipe dreams of an involution.
    Ipd { subject: String },
    /// Fixed-point-free involution pipe dreams.
    Fpd { subject: String },
    /// Schubert polynomial of a permutation.
    Schubert {
        subject: String,
        /// Double Schubert polynomial in x and y.
        #[arg(long)]
        double: bool,
        #[arg(long, value_enum, default_value_t = Method::Dreams)]
        method: Method,
    },
    /// Involution Schubert polynomial.
    InvSchubert {
        subject: String,
        #[arg(long, value_enum, default_value_t = Method::Dreams)]
        method: Method,
    },
    /// Fixed-point-free involution Schubert polynomial.
    FpfSchubert {
        subject: String,
        #[arg(long, value_enum, default_value_t = Method::Dreams)]
        method: Method,
    },
    /// Atoms of an involution, or fpf-atoms with --fpf.
    Atoms {
        subject: String,
        #[arg(long)]
        fpf: bool,
    },
    /// Reduced words, involution words (--inv) or fpf-involution words (--fpf).
    Words {
        subject: String,
        #[command(flatten)]
        family: Family,
    },
    /// Run cross-check suites by name, or `all`.
    Verify {
        #[arg(required = true)]
        suites: Vec<String>,
        /// Largest window for the exhaustive suites.
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Number of (weighted) pipe dreams.
    Count {
        subject: String,
        #[command(flatten)]
        family: Family,
    },
    /// Draw a diagram given as JSON cells, e.g. [[1,3],[2,1]].
    Render {
        diagram: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct Family {
    #[arg(long)]
    inv: bool,
    #[arg(long)]
    fpf: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Sum over pipe dreams.
    Dreams,
    /// Divided differences, summed over atoms for involutions.
    Atoms,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

struct Output {
    text: String,
    json: Value,
    failed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, failed: false }
    }
}

fn word_text(w: &Word) -> String {
    let sep = if w.iter().any(|&a| a > 9) { "," } else { "" };
    w.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn dreams_output(kind: &str, subject: &str, dreams: &BTreeSet<Diagram>) -> Output {
    let text = dreams.iter().map(|d| format!("{d}\n")).collect();
    let json = json!({
        "kind": kind,
        "subject": subject,
        "count": dreams.len(),
        "dreams": dreams.iter().map(Diagram::to_pairs).collect::<Vec<_>>(),
    });
    Output::ok(text, json)
}

fn poly_output(kind: &str, subject: &str, p: &Polynomial) -> Output {
    let json = json!({ "kind": kind, "subject": subject, "polynomial": p.to_string(), "terms": p.to_json() });
    Output::ok(format!("{p}\n"), json)
}

fn parse_perm(s: &str) -> Result<Permutation> {
    s.parse().with_context(|| format!("reading permutation {s:?}"))
}

fn parse_inv(s: &str) -> Result<Involution> {
    s.parse().with_context(|| format!("reading involution {s:?}"))
}

fn parse_fpf(s: &str) -> Result<FpfInvolution> {
    s.parse().with_context(|| format!("reading fixed-point-free involution {s:?}"))
}

fn run(cli: &Cli) -> Result<Output> {
    Ok(match &cli.command {
        Command::Pd { subject } => dreams_output("pd", subject, &pd_set(&parse_perm(subject)?)),
        Command::Ipd { subject } => dreams_output("ipd", subject, &id_set(&parse_inv(subject)?)),
        Command::Fpd { subject } => dreams_output("fpd", subject, &fd_set(&parse_fpf(subject)?)),
        Command::Schubert { subject, double, method } => {
            let w = parse_perm(subject)?;
            match (double, method) {
                (true, Method::Atoms) => bail!("--double is only computed from pipe dreams"),
                (true, Method::Dreams) => poly_output("double-schubert", subject, &double_schubert(&w)),
                (false, Method::Dreams) => poly_output("schubert", subject, &schubert(&w)),
                (false, Method::Atoms) => poly_output("schubert", subject, &schubert_dd(&w)),
            }
        }
        Command::InvSchubert { subject, method } => {
            let y = parse_inv(subject)?;
            let p = match method {
                Method::Dreams => inv_schubert_pd(&y)?,
                Method::Atoms => inv_schubert(&y),
            };
            poly_output("inv-schubert", subject, &p)
        }
        Command::FpfSchubert { subject, method } => {
            let z = parse_fpf(subject)?;
            let p = match method {
                Method::Dreams => fpf_schubert_pd(&z),
                Method::Atoms => fpf_schubert(&z),
            };
            poly_output("fpf-schubert", subject, &p)
        }
        Command::Atoms { subject, fpf } => {
            let atoms = if *fpf { parse_fpf(subject)?.fpf_atoms() } else { parse_inv(subject)?.atoms() };
            let text = atoms.iter().map(|w| format!("{w}\n")).collect();
            let json = json!({
                "kind": if *fpf { "fpf-atoms" } else { "atoms" },
                "subject": subject,
                "atoms": atoms.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            Output::ok(text, json)
        }
        Command::Words { subject, family } => {
            let (kind, words) = if family.inv {
                ("involution-words", parse_inv(subject)?.involution_words())
            } else if family.fpf {
                ("fpf-involution-words", parse_fpf(subject)?.fpf_involution_words())
            } else {
                ("reduced-words", parse_perm(subject)?.reduced_words())
            };
            let text = words.iter().map(|w| format!("{}\n", word_text(w))).collect();
            Output::ok(text, json!({ "kind": kind, "subject": subject, "words": words }))
        }
        Command::Verify { suites, n } => {
            let names: Vec<&str> = suites.iter().map(String::as_str).collect();
            let report = verify::run(&names, *n).map_err(anyhow::Error::msg)?;
            Output { text: report.to_text(), json: report.to_json(), failed: !report.passed() }
        }
        Command::Count { subject, family } => {
            if family.inv {
                let y = parse_inv(subject)?;
                let (count, weighted) = (id_set(&y).len(), weighted_count(&y));
                let text = format!("|ID({subject})| = {count}\n||ID({subject})|| = {weighted}\n");
                Output::ok(text, json!({ "kind": "ipd", "subject": subject, "count": count, "weighted": weighted.to_string() }))
            } else if family.fpf {
                let count = fd_set(&parse_fpf(subject)?).len();
                Output::ok(format!("|FD({subject})| = {count}\n"), json!({ "kind": "fpd", "subject": subject, "count": count }))
            } else {
                let count = pd_set(&parse_perm(subject)?).len();
                Output::ok(format!("|PD({subject})| = {count}\n"), json!({ "kind": "pd", "subject": subject, "count": count }))
            }
        }
        Command::Render { diagram, format, out } => {
            let d = Diagram::from_json(diagram).context("reading diagram")?;
            let picture = match format {
                Format::Ascii => render::ascii(&d),
                Format::Svg => render::svg(&d),
            };
            let mut json = json!({ "kind": "render", "diagram": d.to_pairs() });
            let text = match out {
                Some(path) => {
                    std::fs::write(path, &picture).with_context(|| format!("writing {}", path.display()))?;
                    json["out"] = path.display().to_string().into();
                    format!("wrote {}\n", path.display())
                }
                None => {
                    json["picture"] = picture.clone().into();
                    picture
                }
            };
            Output::ok(text, json)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            let text = if cli.json { format!("{}\n", out.json) } else { out.text };
            // a closed pipe downstream is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
