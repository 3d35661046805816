//! Command-line entry point. Every subcommand reads and writes the JSON
//! schemas of the library and emits machine-readable certificates: a "no"
//! answer always names the violated bound, failed condition or exhausted
//! search space.
//!
//! Exit codes: 0 decided, 1 validation failure, 2 timeout, 64 usage error.

use biplanar::drawing::{drawing_from_json_str, Drawing};
use biplanar::extremal::{self, WitnessFamily};
use biplanar::graph::{beta, ColoredGraph};
use biplanar::search::{
    beta_exhaustive, cr_counting_chain, decide_one_planar, refute_k37, BetaSearchResult,
    DecideOutcome, SearchOptions,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

const EXIT_OK: u8 = 0;
const EXIT_VALIDATION: u8 = 1;
const EXIT_TIMEOUT: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "biplanar",
    about = "Bipartite 1-planar drawings: generate, verify, analyze, search, export",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a drawing from one of the built-in families.
    Generate(GenerateArgs),
    /// Verify a drawing against the drawing conditions (level 1-5).
    Verify(VerifyArgs),
    /// Full structural analysis: quadrangulation, decomposition, corners,
    /// forbidden-pattern scan.
    Analyze(AnalyzeArgs),
    /// Decide 1-planarity of a graph by exhaustive matching search.
    Decide(DecideArgs),
    /// The maximal edge count on v vertices, with a witness drawing; can be
    /// confirmed exhaustively for small v.
    Beta(BetaArgs),
    /// Chain counting lower bounds for crossing numbers of K_{3,n}.
    Crbound(CrboundArgs),
    /// Emit the structured counting refutation of 1-planarity for K_{3,7}.
    RefuteK37,
    /// Re-emit a drawing as json, svg or dot.
    Export(ExportArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// tube | box | two-strips | odd | kab | cycle
    #[arg(long)]
    family: String,
    /// Comma-separated key=value parameters, e.g. k=3 or k=2,n=4 or a=3,b=6.
    #[arg(long, default_value = "")]
    params: String,
    /// Output path for the drawing JSON (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write an SVG rendering.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Verification level (1-5). Level 5 adds the regularity test.
    #[arg(long, default_value_t = 4)]
    level: u8,
    /// Drawing JSON file.
    path: PathBuf,
}

#[derive(Args)]
struct AnalyzeArgs {
    path: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// SVG with the decomposition parts in distinct layers.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct DecideArgs {
    /// Graph JSON file ({"n":..,"colors":[..],"edges":[[..]]}).
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    max_crossings: Option<usize>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    timeout: Option<f64>,
    /// Memoize planarity verdicts on canonical forms of planarizations.
    #[arg(long)]
    memo: bool,
    /// Write the witness drawing JSON here when found.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BetaArgs {
    #[arg(long)]
    v: usize,
    /// Confirm by exhaustive search over all bipartite graphs (v <= 8 is
    /// practical).
    #[arg(long)]
    exhaustive: bool,
    #[arg(long)]
    timeout: Option<f64>,
}

#[derive(Args)]
struct CrboundArgs {
    /// base and hosts: "m:lb,n1,n2,...", e.g. 3:1,5,7
    #[arg(long)]
    chain: String,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long, value_parser = ["json", "svg", "dot"])]
    format: String,
    /// Drawing JSON file.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Decide(args) => cmd_decide(args),
        Command::Beta(args) => cmd_beta(args),
        Command::Crbound(args) => cmd_crbound(args),
        Command::RefuteK37 => cmd_refute_k37(),
        Command::Export(args) => cmd_export(args),
    };
    ExitCode::from(code)
}

fn parse_params(s: &str) -> Result<BTreeMap<String, usize>, String> {
    let mut map = BTreeMap::new();
    for item in s.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| format!("bad parameter {item:?}"))?;
        let v: usize = v
            .trim()
            .parse()
            .map_err(|_| format!("bad value in {item:?}"))?;
        map.insert(k.trim().to_string(), v);
    }
    Ok(map)
}

fn need(params: &BTreeMap<String, usize>, key: &str) -> Result<usize, String> {
    params
        .get(key)
        .copied()
        .ok_or_else(|| format!("missing parameter {key}"))
}

fn emit(text: &str, out: &Option<PathBuf>) -> u8 {
    match out {
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{text}") {
                Ok(()) => EXIT_OK,
                // A closed pipe (e.g. `| head`) is not an error.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
                Err(e) => {
                    eprintln!("error: cannot write to stdout: {e}");
                    EXIT_VALIDATION
                }
            }
        }
        Some(path) => match std::fs::write(path, format!("{text}\n")) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                EXIT_VALIDATION
            }
        },
    }
}

fn emit_json<T: Serialize>(value: &T, out: &Option<PathBuf>) -> u8 {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    emit(&text, out)
}

fn fail(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    EXIT_VALIDATION
}

fn load_drawing(path: &PathBuf) -> Result<Drawing, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    drawing_from_json_str(&text)
}

fn cmd_generate(args: GenerateArgs) -> u8 {
    let params = match parse_params(&args.params) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    let drawing: Result<Drawing, String> = (|| {
        let d = match args.family.as_str() {
            "tube" => extremal::gen_tube(need(&params, "k")?),
            "box" => extremal::gen_box(need(&params, "k")?, need(&params, "n")?),
            "two-strips" => extremal::gen_two_strips(need(&params, "k")?),
            "odd" => extremal::gen_odd(need(&params, "v")?),
            "kab" => extremal::gen_complete_bipartite(need(&params, "a")?, need(&params, "b")?),
            "cycle" => extremal::plane_cycle(need(&params, "k")?),
            other => return Err(format!("unknown family {other:?}")),
        };
        d.map_err(|e| e.to_string())
    })();
    let drawing = match drawing {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    if let Some(svg) = &args.svg {
        let code = emit(
            &biplanar::export::drawing_to_svg(&drawing),
            &Some(svg.clone()),
        );
        if code != EXIT_OK {
            return code;
        }
    }
    emit(&drawing.to_json_string(), &args.out)
}

fn cmd_verify(args: VerifyArgs) -> u8 {
    if !(1..=5).contains(&args.level) {
        return fail("level must be between 1 and 5");
    }
    let drawing = match load_drawing(&args.path) {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    let report = drawing.verify(args.level);
    let passed = report.passed;
    let code = emit_json(&report, &None);
    if code != EXIT_OK {
        code
    } else if passed {
        EXIT_OK
    } else {
        EXIT_VALIDATION
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> u8 {
    let drawing = match load_drawing(&args.path) {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    let report = biplanar::structure::analyze(&drawing);
    if let Some(svg_path) = &args.svg {
        let gp = drawing.derive_gprime();
        let svg = match &report.decomposition {
            Some(dec) => biplanar::export::gprime_parts_svg(&gp.drawing, dec),
            None => biplanar::export::drawing_to_svg(&gp.drawing),
        };
        let code = emit(&svg, &Some(svg_path.clone()));
        if code != EXIT_OK {
            return code;
        }
    }
    emit_json(&report, &args.out)
}

#[derive(Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
enum DecideReport {
    OnePlanar {
        crossings: usize,
        matching: Vec<(usize, usize)>,
        drawing: biplanar::drawing::DrawingJson,
    },
    NotOnePlanar {
        refutation: biplanar::search::Refutation,
    },
    Timeout {
        timeout: biplanar::search::SearchTimeout,
    },
}

fn cmd_decide(args: DecideArgs) -> u8 {
    let text = match std::fs::read_to_string(&args.graph) {
        Ok(t) => t,
        Err(e) => return fail(&format!("cannot read {}: {e}", args.graph.display())),
    };
    let graph: ColoredGraph = match serde_json::from_str(&text) {
        Ok(g) => g,
        Err(e) => return fail(&format!("bad graph: {e}")),
    };
    let opts = SearchOptions {
        max_crossings: args.max_crossings,
        deadline: args.timeout.map(Duration::from_secs_f64),
        memoize: args.memo,
    };
    match decide_one_planar(&graph, &opts) {
        DecideOutcome::Witness(w) => {
            if let Some(out) = &args.out {
                let code = emit(&w.drawing.to_json_string(), &Some(out.clone()));
                if code != EXIT_OK {
                    return code;
                }
            }
            emit_json(
                &DecideReport::OnePlanar {
                    crossings: w.matching.len(),
                    matching: w.matching.clone(),
                    drawing: w.drawing.to_json(),
                },
                &None,
            )
        }
        DecideOutcome::Refuted(refutation) => {
            emit_json(&DecideReport::NotOnePlanar { refutation }, &None)
        }
        DecideOutcome::Timeout(timeout) => {
            let _ = emit_json(&DecideReport::Timeout { timeout }, &None);
            EXIT_TIMEOUT
        }
    }
}

#[derive(Serialize)]
struct BetaReport {
    v: usize,
    beta: usize,
    witness_family: WitnessFamily,
    witness_name: String,
    witness_edges: usize,
    witness_drawing: biplanar::drawing::DrawingJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    exhaustive_confirmation: Option<ExhaustiveReport>,
}

#[derive(Serialize)]
struct ExhaustiveReport {
    beta: usize,
    witness_graph: ColoredGraph,
    log: biplanar::search::BetaSearchLog,
}

fn witness_name(family: WitnessFamily, d: &Drawing) -> String {
    match family {
        WitnessFamily::CompleteBipartite => {
            let ones = d
                .graph()
                .colors()
                .iter()
                .filter(|c| **c == biplanar::graph::Color::One)
                .count();
            let twos = d.graph().n() - ones;
            format!("K_{{{},{}}}", ones.min(twos), ones.max(twos))
        }
        WitnessFamily::Tube => "tube family".into(),
        WitnessFamily::TwoStrips => "two-strip family".into(),
        WitnessFamily::OddAugmentation => "odd augmentation".into(),
    }
}

fn cmd_beta(args: BetaArgs) -> u8 {
    let value = match beta(args.v) {
        Ok(b) => b,
        Err(e) => return fail(&e.to_string()),
    };
    let (family, drawing) = match extremal::beta_witness(args.v) {
        Ok(x) => x,
        Err(e) => return fail(&e.to_string()),
    };
    let mut report = BetaReport {
        v: args.v,
        beta: value,
        witness_family: family,
        witness_name: witness_name(family, &drawing),
        witness_edges: drawing.graph().edge_count(),
        witness_drawing: drawing.to_json(),
        exhaustive_confirmation: None,
    };
    if args.exhaustive {
        let opts = SearchOptions {
            deadline: args.timeout.map(Duration::from_secs_f64),
            ..Default::default()
        };
        match beta_exhaustive(args.v, &opts) {
            BetaSearchResult::Done(outcome) => {
                if outcome.beta != value {
                    return fail(&format!(
                        "exhaustive search found beta {} but the formula says {value}",
                        outcome.beta
                    ));
                }
                report.exhaustive_confirmation = Some(ExhaustiveReport {
                    beta: outcome.beta,
                    witness_graph: outcome.witness_graph,
                    log: outcome.log,
                });
            }
            BetaSearchResult::Timeout { .. } => {
                let _ = emit_json(&report, &None);
                return EXIT_TIMEOUT;
            }
        }
    }
    emit_json(&report, &None)
}

fn cmd_crbound(args: CrboundArgs) -> u8 {
    let (base, hosts) = match parse_chain(&args.chain) {
        Ok(x) => x,
        Err(e) => return fail(&e),
    };
    match cr_counting_chain(base, &hosts) {
        Ok(derivation) => emit_json(&derivation, &None),
        Err(e) => fail(&e.to_string()),
    }
}

fn parse_chain(s: &str) -> Result<((usize, u64), Vec<usize>), String> {
    let mut items = s.split(',');
    let base = items.next().ok_or("empty chain")?;
    let (m, lb) = base.split_once(':').ok_or("base must be m:lb, e.g. 3:1")?;
    let m: usize = m.trim().parse().map_err(|_| "bad base m")?;
    let lb: u64 = lb.trim().parse().map_err(|_| "bad base lb")?;
    let hosts: Result<Vec<usize>, _> = items.map(|h| h.trim().parse::<usize>()).collect();
    let hosts = hosts.map_err(|_| "bad host list")?;
    if hosts.is_empty() {
        return Err("chain needs at least one host".into());
    }
    Ok(((m, lb), hosts))
}

fn cmd_refute_k37() -> u8 {
    emit_json(&refute_k37(), &None)
}

fn cmd_export(args: ExportArgs) -> u8 {
    let drawing = match load_drawing(&args.input) {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    let text = match args.format.as_str() {
        "json" => drawing.to_json_string(),
        "svg" => biplanar::export::drawing_to_svg(&drawing),
        "dot" => biplanar::export::drawing_to_dot(&drawing),
        _ => unreachable!("clap validates the format"),
    };
    emit(&text, &args.out)
}
