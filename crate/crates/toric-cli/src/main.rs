//! `toric`: command-line surface for the toric multisection calculus.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use toric::boundary::{boundary, plumbing};
use toric::classify::{blow_up, central_cover, classify, sum_s2s2};
use toric::curves::{curve_params, cyclic_cover_genus, shadow_diagram, CoverFamily};
use toric::enumerate::enumerate_definite;
use toric::invariants::{intersection_form, report};
use toric::render::{emit_farey_svg, emit_shadow_svg};
use toric::{Slope, ToricLoop, ToricPath};

#[derive(Parser)]
#[command(name = "toric", version, about = "Toric multisections of 4-manifolds as Farey loops")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Diagram input: positional slope text or a JSON file.
#[derive(Args)]
struct DiagramInput {
    /// Slopes in fraction form, e.g. "0/1 1/0 1/1"
    diagram: Option<String>,
    /// Read the diagram from a JSON file: {"slopes": [[a, b], ...]}
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Deserialize)]
struct DiagramFile {
    slopes: Vec<(i64, i64)>,
}

impl DiagramInput {
    fn slopes(&self) -> Result<Vec<Slope>, String> {
        match (&self.diagram, &self.input) {
            (Some(text), None) => text
                .split_whitespace()
                .map(|t| Slope::from_str(t).map_err(|e| e.to_string()))
                .collect(),
            (None, Some(path)) => {
                let data = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                let file: DiagramFile = serde_json::from_str(&data)
                    .map_err(|e| format!("malformed diagram file: {e}"))?;
                file.slopes
                    .into_iter()
                    .map(|(a, b)| Slope::new(a, b).map_err(|e| e.to_string()))
                    .collect()
            }
            _ => Err("expected exactly one of a diagram argument or --in FILE".to_string()),
        }
    }

    fn as_loop(&self) -> Result<ToricLoop, String> {
        ToricLoop::new(self.slopes()?).map_err(|e| e.to_string())
    }

    fn as_path(&self) -> Result<ToricPath, String> {
        ToricPath::new(self.slopes()?).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate a loop diagram
    Validate {
        #[command(flatten)]
        input: DiagramInput,
        /// Write a Farey-graph SVG of the loop
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Print the invariant report as JSON
    Invariants {
        #[command(flatten)]
        input: DiagramInput,
    },
    /// Classify the closed 4-manifold as a connected sum
    Classify {
        #[command(flatten)]
        input: DiagramInput,
        /// Print every reduction step
        #[arg(long)]
        trace: bool,
    },
    /// Print the intersection form
    Form {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(long)]
        json: bool,
    },
    /// Insert a blow-up between positions i and i+1
    Blowup {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(short, long)]
        index: usize,
        /// +1 for CP2, -1 for CP2bar
        #[arg(short, long, default_value = "1", allow_hyphen_values = true)]
        sign: i64,
    },
    /// Sum with S2 x S2 by duplicating the pair at position i
    #[command(name = "sum-s2s2")]
    SumS2s2 {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(short, long)]
        index: usize,
    },
    /// Central-surface cover: r concatenated copies
    Repeat {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(short, long)]
        r: u32,
    },
    /// Reverse the ambient orientation
    Mirror {
        #[command(flatten)]
        input: DiagramInput,
    },
    /// Print the canonical representative of the conjugacy class
    Canonical {
        #[command(flatten)]
        input: DiagramInput,
        /// Distinguish reflected diagrams
        #[arg(long)]
        cyclic_only: bool,
    },
    /// Decide conjugacy of two diagrams
    Conjugate {
        /// First diagram in slope text form
        first: String,
        /// Second diagram in slope text form
        second: String,
        /// Distinguish reflected diagrams
        #[arg(long)]
        cyclic_only: bool,
    },
    /// Euler numbers and boundary of a path diagram
    Plumbing {
        #[command(flatten)]
        input: DiagramInput,
    },
    /// Enumerate positive-definite loops of length n up to conjugacy
    Enumerate {
        #[arg(short)]
        n: usize,
        /// Count up to rotation only, not reflection
        #[arg(long)]
        cyclic_only: bool,
    },
    /// Bridge parameters and shadow diagram of the curve C_{p,q}
    Curve {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
        /// Write the shadow diagram as SVG
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        /// Write the shadow diagram as JSON
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Genus of the n-fold cyclic cover branched over C_{p,q}
    Cover {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
        #[arg(short)]
        n: i64,
    },
}

fn run(cli: Cli) -> Result<String, String> {
    let err = |e: toric::Error| e.to_string();
    match cli.command {
        Command::Validate { input, svg } => {
            let d = input.as_loop()?;
            if let Some(path) = svg {
                let text = emit_farey_svg(&d).map_err(err)?;
                std::fs::write(&path, text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            Ok(format!("valid loop with {} slopes\n", d.len()))
        }
        Command::Invariants { input } => {
            let d = input.as_loop()?;
            let r = report(&d).map_err(err)?;
            Ok(format!("{}\n", serde_json::to_string(&r).unwrap()))
        }
        Command::Classify { input, trace } => {
            let d = input.as_loop()?;
            let (t, tr) = classify(&d).map_err(err)?;
            let mut out = String::new();
            if trace {
                for (k, step) in tr.steps.iter().enumerate() {
                    let _ = writeln!(out, "step {}: {step}", k + 1);
                }
            }
            let _ = writeln!(out, "{t}");
            Ok(out)
        }
        Command::Form { input, json } => {
            let d = input.as_loop()?;
            let q = intersection_form(&d).map_err(err)?;
            if json {
                Ok(format!(
                    "{}\n",
                    json!({"size": q.size(), "entries": q.entries()})
                ))
            } else {
                let rows: Vec<String> = q
                    .entries()
                    .iter()
                    .map(|row| {
                        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                        format!("[{}]", cells.join(", "))
                    })
                    .collect();
                Ok(format!("[{}]\n", rows.join(", ")))
            }
        }
        Command::Blowup { input, index, sign } => {
            let d = input.as_loop()?;
            Ok(format!("{}\n", blow_up(&d, index, sign).map_err(err)?))
        }
        Command::SumS2s2 { input, index } => {
            let d = input.as_loop()?;
            Ok(format!("{}\n", sum_s2s2(&d, index).map_err(err)?))
        }
        Command::Repeat { input, r } => {
            let d = input.as_loop()?;
            Ok(format!("{}\n", central_cover(&d, r).map_err(err)?))
        }
        Command::Mirror { input } => Ok(format!("{}\n", input.as_loop()?.mirror())),
        Command::Canonical { input, cyclic_only } => {
            let d = input.as_loop()?;
            let form = d.canonical_form(!cyclic_only).map_err(err)?;
            let slopes: Vec<String> = form
                .iter()
                .map(|&(a, b)| Slope::new(a, b).unwrap().to_string())
                .collect();
            Ok(format!("{}\n", slopes.join(" ")))
        }
        Command::Conjugate { first, second, cyclic_only } => {
            let d1 = ToricLoop::parse_text(&first).map_err(err)?;
            let d2 = ToricLoop::parse_text(&second).map_err(err)?;
            let same = d1.are_conjugate(&d2, !cyclic_only).map_err(err)?;
            Ok(format!("{}\n", if same { "conjugate" } else { "not conjugate" }))
        }
        Command::Plumbing { input } => {
            let path = input.as_path()?;
            let euler: Vec<String> = plumbing(&path)
                .euler_numbers
                .iter()
                .map(i64::to_string)
                .collect();
            Ok(format!(
                "euler: [{}]; boundary: {}\n",
                euler.join(", "),
                boundary(&path)
            ))
        }
        Command::Enumerate { n, cyclic_only } => {
            let result = enumerate_definite(n, !cyclic_only).map_err(err)?;
            let mut out = format!("count: {}\n", result.count);
            for d in &result.loops {
                let _ = writeln!(out, "{d}");
            }
            Ok(out)
        }
        Command::Curve { p, q, svg, json } => {
            let params = curve_params(p, q).map_err(err)?;
            if svg.is_some() || json.is_some() {
                let shadow = shadow_diagram(p, q).map_err(err)?;
                if let Some(path) = svg {
                    std::fs::write(&path, emit_shadow_svg(&shadow))
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                }
                if let Some(path) = json {
                    let points: Vec<_> = shadow
                        .bridge_points
                        .iter()
                        .map(|(x, y)| {
                            json!([[x.numer(), x.denom()], [y.numer(), y.denom()]])
                        })
                        .collect();
                    let arcs: Vec<_> = shadow
                        .arcs
                        .iter()
                        .map(|a| json!({"family": a.family, "from": a.from, "to": a.to}))
                        .collect();
                    let doc = json!({
                        "p": params.p,
                        "q": params.q,
                        "bridge_b": params.bridge_b,
                        "genus": params.genus,
                        "chi": params.chi,
                        "homology": [params.homology.0, params.homology.1],
                        "pi1_order": params.pi1_order,
                        "bridge_points": points,
                        "arcs": arcs,
                    });
                    std::fs::write(&path, format!("{doc}"))
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                }
            }
            Ok(format!(
                "p: {}; q: {}; bridge_b: {}; genus: {}; chi: {}; pi1_order: {}\n",
                params.p, params.q, params.bridge_b, params.genus, params.chi, params.pi1_order
            ))
        }
        Command::Cover { p, q, n } => {
            let (g, family) = cyclic_cover_genus(p, q, n).map_err(err)?;
            let family = match family {
                CoverFamily::Rational { q } => format!("rational CP2 # {} CP2bar", 4 * q + 1),
                CoverFamily::Elliptic { q } => format!("E({q})"),
                CoverFamily::Horikawa { q } => format!("H({q})"),
                CoverFamily::Unnamed => "unnamed".to_string(),
            };
            Ok(format!("genus: {g}; family: {family}\n"))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("{msg}");
            ExitCode::FAILURE
        }
    }
}
