use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use strongchordal::dispatch::{recognize, GraphClass, Options, Recognition, Verdict};
use strongchordal::domination::{
    brute_force_min_domination, general_dominate, max_disjoint_neighbourhoods_oracle, ORACLE_LIMIT,
};
use strongchordal::io::{parse_digraph, to_dot, write_arc_list, write_matrix};
use strongchordal::matrix::{is_totally_balanced, ZeroOneMatrix};
use strongchordal::recognition::{brute_force_strongly_chordal, DEFAULT_ORACLE_LIMIT};
use strongchordal::{Certificate, Digraph, FamilyId, FamilySpec};

mod report;

use report::{describe, DominationReport, OracleReport, RunReport};

#[derive(Parser)]
#[command(version, about = "Recognize strongly chordal digraphs and certify the answer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide strong chordality and print a certificate.
    Recognize(GraphArgs),
    /// Minimum general dominating set of a strongly chordal symmetric digraph.
    Dominate(GraphArgs),
    /// Write a member of an obstruction or tournament family.
    Generate(GenerateArgs),
    /// Run the exhaustive checks directly.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Arc-list or 0/1 matrix file.
    path: PathBuf,
    /// auto, symmetric, tournament, balanced or general.
    #[arg(long, default_value = "auto")]
    class: String,
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    #[arg(long, default_value_t = strongchordal::obstructions::DEFAULT_BUDGET)]
    obstruction_budget: usize,
    /// Structured report to PATH, or to standard output when no PATH is given.
    #[arg(long, num_args = 0..=1, default_missing_value = "-")]
    json: Option<PathBuf>,
    /// DOT rendering of the certificate subgraph.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    /// F1..F9, T0..T6, RefTriangle, Fence, TT, TTStar or TTBlowup.
    family: String,
    #[arg(long)]
    len: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    loops: Vec<usize>,
    /// Rim indices of F8 that lose their loops.
    #[arg(long, value_delimiter = ',')]
    unlooped: Vec<usize>,
    /// F8 matching as `a-b` pairs of rim indices.
    #[arg(long, value_delimiter = ',')]
    matching: Vec<String>,
    /// Write a 0/1 matrix instead of an arc list.
    #[arg(long)]
    matrix: bool,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    path: PathBuf,
    /// Permutation search for a Γ-free ordering (the default check).
    #[arg(long)]
    strongly_chordal: bool,
    #[arg(long)]
    totally_balanced: bool,
    /// Minimum domination and maximum disjoint neighbourhoods by enumeration.
    #[arg(long)]
    domination: bool,
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    #[arg(long, num_args = 0..=1, default_missing_value = "-")]
    json: Option<PathBuf>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        source: strongchordal::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] strongchordal::Error),
    #[error("cannot encode report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Size guards are refusals; everything else is an input problem.
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(strongchordal::Error::LimitExceeded { .. }) => 2,
            _ => 3,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_graph(path: &Path) -> Result<Digraph> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_digraph(&text).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn options(args: &GraphArgs) -> Result<Options> {
    let class = match args.class.as_str() {
        "auto" => None,
        s => Some(s.parse::<GraphClass>().map_err(|_| CliError::Usage(format!("unknown class {s:?}")))?),
    };
    Ok(Options {
        class,
        oracle_limit: args.oracle_limit,
        obstruction_budget: args.obstruction_budget,
    })
}

/// The part of `d` a certificate talks about, with a comment naming host vertices.
fn certificate_dot(d: &Digraph, cert: Option<&Certificate>) -> String {
    let verts: Vec<usize> = match cert {
        Some(Certificate::Obstruction { embedding, .. }) => embedding.clone(),
        Some(Certificate::BadWalk(w)) => {
            let mut v = w.vertices.clone();
            if w.closed {
                v.pop();
            }
            v
        }
        _ => return to_dot(d, &[]),
    };
    format!("// vertex i is host vertex {verts:?}[i]\n{}", to_dot(&d.induced_ordered(&verts), &[]))
}

fn emit(report: &RunReport, json: Option<&Path>, human: &[String]) -> Result<()> {
    let to_stdout = json.is_some_and(|p| p == Path::new("-"));
    if !to_stdout {
        for line in human {
            println!("{line}");
        }
    }
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(report)? + "\n";
        if to_stdout {
            print!("{text}");
        } else {
            write_file(path, &text)?;
        }
    }
    Ok(())
}

fn header(d: &Digraph, r: &RunReport) -> String {
    format!("class: {} (n={}, {} arcs, {} loops)", r.input.class, d.order(), r.input.arcs, r.input.loops)
}

fn verdict_line(v: Verdict) -> String {
    match v {
        Verdict::StronglyChordal => "verdict: strongly chordal".into(),
        Verdict::NotStronglyChordal => "verdict: not strongly chordal".into(),
        Verdict::Undecided => "verdict: undecided".into(),
    }
}

fn recognition_report(command: &str, d: &Digraph, rec: Recognition) -> RunReport {
    let mut report = RunReport::new(command, d, rec.verdict);
    report.input.class = rec.class;
    report.certificate = rec.certificate;
    report.note = rec.note;
    report
}

fn recognition_lines(d: &Digraph, report: &RunReport) -> Vec<String> {
    let mut lines = vec![header(d, report), verdict_line(report.verdict)];
    if let Some(c) = &report.certificate {
        lines.push(format!("certificate: {}", describe(c)));
    }
    if let Some(n) = &report.note {
        lines.push(format!("note: {n}"));
    }
    lines
}

fn cmd_recognize(args: &GraphArgs) -> Result<u8> {
    let start = Instant::now();
    let d = read_graph(&args.path)?;
    let rec = recognize(&d, &options(args)?)?;
    let mut report = recognition_report("recognize", &d, rec);
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    if let Some(path) = &args.dot {
        write_file(path, &certificate_dot(&d, report.certificate.as_ref()))?;
    }
    emit(&report, args.json.as_deref(), &recognition_lines(&d, &report))?;
    Ok(report.exit_code())
}

fn cmd_dominate(args: &GraphArgs) -> Result<u8> {
    let start = Instant::now();
    let d = read_graph(&args.path)?;
    if !d.is_symmetric() {
        return Err(CliError::Usage("domination needs a symmetric digraph".into()));
    }
    let rec = recognize(&d, &options(args)?)?;
    let mut report = recognition_report("dominate", &d, rec);
    let mut lines = recognition_lines(&d, &report);
    let mut code = report.exit_code();
    match &report.certificate {
        Some(Certificate::StrongOrdering(ord)) => match general_dominate(&d, ord) {
            Ok(r) => {
                lines.push(format!("|D| = {}", r.size()));
                lines.push(format!("D: {:?}", r.d));
                lines.push(format!("C: {:?}", r.c));
                report.domination = Some(DominationReport::from(&r));
            }
            Err(e @ strongchordal::Error::Undominatable(_)) => {
                lines.push(e.to_string());
                report.note = Some(e.to_string());
                code = 1;
            }
            Err(e) => return Err(e.into()),
        },
        _ => lines.push("no domination attempted".into()),
    }
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    if let Some(path) = &args.dot {
        let highlight = report.domination.as_ref().map(|r| r.dominating.clone()).unwrap_or_default();
        let dot = if report.domination.is_some() {
            to_dot(&d, &highlight)
        } else {
            certificate_dot(&d, report.certificate.as_ref())
        };
        write_file(path, &dot)?;
    }
    emit(&report, args.json.as_deref(), &lines)?;
    Ok(code)
}

fn need(what: &str, v: Option<usize>) -> Result<usize> {
    v.ok_or_else(|| CliError::Usage(format!("missing --{what}")))
}

fn family_spec(args: &GenerateArgs) -> Result<FamilySpec> {
    let id: FamilyId = args.family.parse()?;
    let loops = args.loops.clone();
    let len = || need("len", args.len);
    Ok(match id {
        FamilyId::F1 => FamilySpec::F1 { len: len()? },
        FamilyId::F2 => FamilySpec::F2 { len: len()? },
        FamilyId::F3 => FamilySpec::F3 { len: len()? },
        FamilyId::F4 => FamilySpec::F4 { len: len()? },
        FamilyId::F5 => FamilySpec::F5 { len: len()? },
        FamilyId::F6 => FamilySpec::F6 { len: len()? },
        FamilyId::F7 => FamilySpec::F7 { len: len()? },
        FamilyId::F9 => FamilySpec::F9 { len: len()? },
        FamilyId::Fence => FamilySpec::Fence { len: len()? },
        FamilyId::F8 => {
            let matching = args
                .matching
                .iter()
                .map(|p| {
                    let (a, b) = p
                        .split_once('-')
                        .ok_or_else(|| CliError::Usage(format!("matching pair {p:?} is not `a-b`")))?;
                    let num = |s: &str| s.trim().parse::<usize>().map_err(|e| CliError::Usage(format!("{p:?}: {e}")));
                    Ok((num(a)?, num(b)?))
                })
                .collect::<Result<Vec<_>>>()?;
            FamilySpec::F8 {
                k: need("k", args.k)?,
                unlooped: args.unlooped.clone(),
                matching,
            }
        }
        FamilyId::T0 => FamilySpec::T0,
        FamilyId::RefTriangle => FamilySpec::RefTriangle,
        FamilyId::T1 | FamilyId::T2 | FamilyId::T3 | FamilyId::T4 | FamilyId::T5 | FamilyId::T6 => {
            let index = args.family[1..].parse().expect("T ids end in a digit");
            FamilySpec::T { index, loops }
        }
        FamilyId::TT => FamilySpec::TT { n: need("n", args.n)?, loops },
        FamilyId::TTStar => FamilySpec::TTStar { n: need("n", args.n)?, loops },
        FamilyId::TTBlowup => FamilySpec::TTBlowup {
            n: need("n", args.n)?,
            i: need("i", args.i)?,
            k: need("k", args.k)?,
            loops,
        },
    })
}

fn cmd_generate(args: &GenerateArgs) -> Result<u8> {
    let spec = family_spec(args)?;
    let d = spec.generate()?;
    let text = if args.matrix { write_matrix(&d) } else { write_arc_list(&d) };
    match &args.out {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_oracle(args: &OracleArgs) -> Result<u8> {
    let start = Instant::now();
    let d = read_graph(&args.path)?;
    let sc = args.strongly_chordal || !(args.totally_balanced || args.domination);
    let mut oracle = OracleReport::default();
    let mut lines = Vec::new();
    let mut negative = false;
    let mut certificate = None;
    if sc {
        let found = brute_force_strongly_chordal(&d, args.oracle_limit)?;
        match &found {
            Some(ord) => lines.push(format!("strongly chordal: yes, ordering {:?}", ord.as_slice())),
            None => lines.push("strongly chordal: no Γ-free ordering exists".into()),
        }
        negative |= found.is_none();
        certificate = Some(match &found {
            Some(ord) => Certificate::StrongOrdering(ord.clone()),
            None => Certificate::Unwitnessed {
                reason: "exhaustive search found no Γ-free ordering".into(),
            },
        });
        oracle.strong_ordering = Some(found.map(|o| o.into_vec()));
    }
    if args.totally_balanced {
        let tb = is_totally_balanced(&ZeroOneMatrix::of_digraph(&d));
        lines.push(format!("totally balanced: {}", if tb { "yes" } else { "no" }));
        negative |= !tb;
        oracle.totally_balanced = Some(tb);
    }
    if args.domination {
        if d.order() > ORACLE_LIMIT {
            return Err(strongchordal::Error::LimitExceeded {
                what: "domination oracle",
                size: d.order(),
                limit: ORACLE_LIMIT,
            }
            .into());
        }
        let min = brute_force_min_domination(&d)?;
        let packing = max_disjoint_neighbourhoods_oracle(&d)?;
        match &min {
            Some((size, set)) => lines.push(format!("minimum domination: {size}, e.g. {set:?}")),
            None => lines.push("minimum domination: no dominating set exists".into()),
        }
        lines.push(format!("maximum disjoint neighbourhoods: {packing}"));
        negative |= min.is_none();
        oracle.min_domination = Some(min);
        oracle.max_disjoint_neighbourhoods = Some(packing);
    }
    let verdict = if negative { Verdict::NotStronglyChordal } else { Verdict::StronglyChordal };
    let mut report = RunReport::new("oracle", &d, verdict);
    report.certificate = certificate;
    report.oracle = Some(oracle);
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    lines.insert(0, header(&d, &report));
    emit(&report, args.json.as_deref(), &lines)?;
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Recognize(a) => cmd_recognize(a),
        Command::Dominate(a) => cmd_dominate(a),
        Command::Generate(a) => cmd_generate(a),
        Command::Oracle(a) => cmd_oracle(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
