use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chordpoly::{
    build_split_tree, dh_parameters, max_series_independent, peripheral_chords, prune, psi_r,
    recognize_dh, run_verify, to_dot, verify_corners, ChordDiagram, DhRecognition, Error, Graph,
    NodeKind, Slot, SplitTree, Suite, VerifyConfig, DEFAULT_GRAPH_CAP,
};

#[derive(Parser)]
#[command(name = "chordpoly", version, about = "Polygon numbers of chord diagrams and distance hereditary graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fewest corners for a fixed chord diagram.
    PsiRep {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Polygon and asteroidal numbers of a distance hereditary graph.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run seeded property suites against the brute-force oracles.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Largest instance size (defaults per suite).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex cap for the graph oracles.
        #[arg(long, default_value_t = DEFAULT_GRAPH_CAP, value_parser = parse_cap)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Split decomposition tree of a connected distance hereditary graph.
    SplitTree {
        #[command(flatten)]
        input: Input,
        /// Emit the pruned tree.
        #[arg(long)]
        pruned: bool,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

fn parse_cap(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(c) if (1..=24).contains(&c) => Ok(c),
        _ => Err("cap must be an integer between 1 and 24".into()),
    }
}

#[derive(Args)]
struct Input {
    /// Input file.
    #[arg(required_unless_present = "inline", conflicts_with = "inline")]
    path: Option<PathBuf>,
    /// Input text given directly; `;` separates lines.
    #[arg(long)]
    inline: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

/// A failed run: message and exit status.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn input(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotDistanceHereditary { .. } => 3,
            _ => 2,
        };
        Failure { code, msg: e.to_string() }
    }
}

impl Input {
    fn read(&self) -> Result<String, Failure> {
        match (&self.inline, &self.path) {
            (Some(text), _) => Ok(text.replace(';', "\n")),
            (None, Some(p)) => std::fs::read_to_string(p)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", p.display()))),
            (None, None) => Err(Failure::input("no input given")),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn unsupported(format: Format, command: &str) -> Failure {
    let name = match format {
        Format::Text => "text",
        Format::Json => "json",
        Format::Dot => "dot",
    };
    Failure::input(format!("{command} does not support --format {name}"))
}

#[derive(Serialize)]
struct PsiReport {
    k: usize,
    corner_gaps: Vec<usize>,
    peripheral: Vec<usize>,
    checks: PsiChecks,
}

#[derive(Serialize)]
struct PsiChecks {
    corners_verified: bool,
    series_lower_bound: usize,
}

fn psi_rep(input: &Input, format: Format) -> Result<String, Failure> {
    let d = ChordDiagram::parse(&input.read()?)?;
    let (k, corners) = psi_r(&d)?;
    let (peripheral, _) = peripheral_chords(&d);
    let report = PsiReport {
        k,
        corner_gaps: corners.gaps().to_vec(),
        peripheral,
        checks: PsiChecks {
            corners_verified: verify_corners(&d, &corners)?,
            series_lower_bound: max_series_independent(&d),
        },
    };
    match format {
        Format::Text => Ok(format!(
            "k={} corners={:?}\nperipheral={:?}\n",
            report.k, report.corner_gaps, report.peripheral
        )),
        Format::Json => Ok(json(&report)),
        Format::Dot => Err(unsupported(format, "psi-rep")),
    }
}

fn analyze(input: &Input, format: Format) -> Result<String, Failure> {
    let g = Graph::parse(&input.read()?)?;
    let r = dh_parameters(&g)?;
    match format {
        Format::Text => {
            let mut out = format!("psi={} an={} permutation={}\n", r.psi, r.an, r.is_permutation);
            let _ = writeln!(out, "pruned_leaves={} components={}", r.pruned_leaves, r.components.len());
            let word: Vec<String> = r.witness.word.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "witness={}", word.join(" "));
            let _ = writeln!(out, "corners={:?}", r.witness.corner_gaps);
            Ok(out)
        }
        Format::Json => Ok(json(&r)),
        Format::Dot => Err(unsupported(format, "analyze")),
    }
}

#[derive(Serialize)]
struct VerifyReport {
    cases: usize,
    passed: usize,
    failures: Vec<String>,
}

fn verify(cfg: &VerifyConfig, format: Format) -> Result<(String, bool), Failure> {
    let out = run_verify(cfg)?;
    let text = match format {
        Format::Json => json(&VerifyReport {
            cases: out.cases,
            passed: out.passed(),
            failures: out.failures.iter().map(ToString::to_string).collect(),
        }),
        Format::Text if out.cases == 0 => "0 cases, ok\n".to_string(),
        Format::Text => {
            let mut s = String::new();
            for f in &out.failures {
                let _ = writeln!(s, "{f}");
            }
            let status = if out.ok() { "ok" } else { "FAILED" };
            let _ = writeln!(s, "{}/{} {status}", out.passed(), out.cases);
            s
        }
        Format::Dot => return Err(unsupported(format, "verify")),
    };
    Ok((text, out.ok()))
}

fn tree_text(t: &SplitTree) -> String {
    let mut out = String::new();
    for (i, node) in t.nodes().iter().enumerate() {
        let kind = match node.kind {
            NodeKind::Clique => "clique",
            NodeKind::Star => "star",
        };
        let slots: Vec<String> = node
            .slots
            .iter()
            .map(|&s| {
                let name = match s {
                    Slot::Vertex(v) => v.to_string(),
                    Slot::Marker(m) => format!("m{m}"),
                };
                if node.center_slot() == Some(s) {
                    format!("*{name}")
                } else {
                    name
                }
            })
            .collect();
        let _ = writeln!(out, "node {i} {kind}: {}", slots.join(" "));
    }
    for (a, b) in t.edges() {
        let _ = writeln!(out, "edge m{a}-m{b}");
    }
    out
}

fn split_tree(input: &Input, pruned: bool, format: Format) -> Result<String, Failure> {
    let g = Graph::parse(&input.read()?)?;
    let c = match recognize_dh(&g)? {
        DhRecognition::Accepted(c) => c,
        DhRecognition::Rejected(_) => return Err(Error::NotDistanceHereditary { vertex: 0 }.into()),
    };
    let mut t = build_split_tree(&c);
    if pruned {
        t = prune(&t);
    }
    match format {
        Format::Dot => Ok(to_dot(&t)),
        Format::Text => Ok(tree_text(&t)),
        Format::Json => Err(unsupported(format, "split-tree")),
    }
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    match cli.command {
        Command::PsiRep { input, format } => psi_rep(&input, format).map(|s| (s, true)),
        Command::Analyze { input, format } => analyze(&input, format).map(|s| (s, true)),
        Command::Verify {
            suite,
            n,
            count,
            seed,
            cap,
            format,
        } => {
            let cfg = VerifyConfig {
                suite,
                n,
                count,
                seed,
                cap,
            };
            verify(&cfg, format)
        }
        Command::SplitTree {
            input,
            pruned,
            format,
        } => split_tree(&input, pruned, format).map(|s| (s, true)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
