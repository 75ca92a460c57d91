//! Command-line frontend. Subcommands mirror the library surface:
//! polynomial computation, vertex classification, criticality, family
//! construction, path trees, isomorph-free enumeration, minimum-order
//! scans, and the claim verification harness.
//!
//! Exit codes: 0 success (or claim passed), 1 claim violations found,
//! 2 bad parameters or malformed input.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use matchcrit::crit::{classify_vertices_with_engine, is_theta_critical_with_engine};
use matchcrit::enumerate::{compute_n_theta, enum_connected, enum_trees, NThetaError};
use matchcrit::families::FamilySpec;
use matchcrit::graph6::{parse_graph6, write_graph6};
use matchcrit::matching::{
    global_engine, verify_path_tree_divisibility, DEFAULT_PATH_TREE_LIMIT,
};
use matchcrit::poly::IntPolynomial;
use matchcrit::root::AlgebraicRoot;
use matchcrit::verify::{run_claim, RunOptions, VerifyError, CLAIMS};
use matchcrit::Graph;

#[derive(Parser)]
#[command(
    name = "matchcrit",
    version,
    about = "Exact matching polynomials, root multiplicities, and theta-criticality",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matching polynomial mu(G, x)
    Poly {
        #[command(flatten)]
        graph: GraphArgs,
        /// Emit JSON with coefficients and matching counts
        #[arg(long)]
        json: bool,
    },
    /// Classify every vertex of G relative to a root theta
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Minimal polynomial of theta, e.g. "x-1" or "x^2-3"
        #[arg(long, value_name = "MINPOLY")]
        theta: String,
        /// Pretty-print the verdict JSON
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a connected G is theta-critical
    Critical {
        #[command(flatten)]
        graph: GraphArgs,
        /// Minimal polynomial of theta
        #[arg(long, value_name = "MINPOLY")]
        theta: String,
        /// Emit a JSON object instead of a bare boolean
        #[arg(long)]
        json: bool,
    },
    /// Construct a named family member and print its graph6 code
    Family {
        /// Family name: W, Y, Ystar, R, Rstar, F, Fstar, Cstar, Chat,
        /// Cplus, T, H1, H2, Gstar, Fhub
        #[arg(long, value_name = "NAME")]
        family: String,
        /// Order n, for families that take one
        #[arg(long)]
        n: Option<usize>,
        /// Attachment pattern for Fhub: comma-separated 1 | 2 | both
        #[arg(long, value_name = "PATTERN")]
        pattern: Option<String>,
        /// Emit JSON with descriptor and edge list
        #[arg(long)]
        json: bool,
    },
    /// Grow the path tree T(G, u) and check both divisibility identities
    Pathtree {
        #[command(flatten)]
        graph: GraphArgs,
        /// Start vertex u
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Abort if the path tree exceeds this many nodes
        #[arg(long, default_value_t = DEFAULT_PATH_TREE_LIMIT)]
        limit: u64,
        /// Emit the check as JSON
        #[arg(long)]
        json: bool,
    },
    /// Stream pairwise non-isomorphic graphs as graph6 lines
    Enum {
        /// What to enumerate
        #[arg(value_enum)]
        kind: EnumKind,
        /// Order (required unless --input replaces the generator)
        #[arg(long)]
        n: Option<usize>,
        /// Keep only theta-critical graphs, theta given by its minimal polynomial
        #[arg(long, value_name = "MINPOLY")]
        filter_critical: Option<String>,
        /// Read graph6 lines from FILE ("-" for stdin) instead of generating
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        /// Write graph6 lines to FILE instead of stdout
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
        /// Collect the stream into one JSON object
        #[arg(long)]
        json: bool,
    },
    /// Scan orders 1..=n-max for the least n with a connected G, m(theta, G) = 1
    Ntheta {
        /// Minimal polynomial of theta
        #[arg(long, value_name = "MINPOLY")]
        theta: String,
        /// Largest order to scan
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        /// Emit JSON with members and anomalies
        #[arg(long)]
        json: bool,
    },
    /// Run one registered verification claim and report the census
    Verify {
        /// Claim id or alias (see --list)
        claim: Option<String>,
        /// List the registered claims and exit
        #[arg(long)]
        list: bool,
        /// Order parameter, where the claim takes one
        #[arg(long)]
        n: Option<usize>,
        /// Root parameter theta, as a minimal polynomial
        #[arg(long, value_name = "MINPOLY")]
        theta: Option<String>,
        /// Number of hubs t, for the t-connected bound
        #[arg(long)]
        t: Option<usize>,
        /// Worker threads for the scan (1 = sequential, byte-stable output)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Print the full report JSON instead of the summary
        #[arg(long)]
        json: bool,
    },
}

/// How commands that act on a single graph receive it: a graph6 code or
/// a family spec, exactly one of the two.
#[derive(Args)]
struct GraphArgs {
    /// graph6 code of the graph
    #[arg(long, value_name = "CODE", conflicts_with = "family")]
    g6: Option<String>,
    /// Family name (same set as the family subcommand)
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
    /// Order n for the family
    #[arg(long, requires = "family")]
    n: Option<usize>,
    /// Attachment pattern for Fhub
    #[arg(long, value_name = "PATTERN", requires = "family")]
    pattern: Option<String>,
}

impl GraphArgs {
    fn build(&self) -> Result<Graph, CliError> {
        match (&self.g6, &self.family) {
            (Some(code), None) => Ok(parse_graph6(strip_g6_header(code))?),
            (None, Some(name)) => {
                let spec = FamilySpec::parse(name, self.n, self.pattern.as_deref())?;
                Ok(spec.build()?)
            }
            _ => Err(CliError::param(
                "provide exactly one of --g6 CODE or --family NAME",
            )),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    Trees,
    Connected,
}

/// Error destined for stderr, carrying the process exit code.
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn param(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

macro_rules! param_error_from {
    ($($ty:ty),*) => {$(
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError::param(e.to_string())
            }
        }
    )*};
}

param_error_from!(
    matchcrit::graph6::Graph6Error,
    matchcrit::families::FamilyError,
    matchcrit::enumerate::EnumError,
    matchcrit::matching::MatchingError,
    matchcrit::root::RootError,
    matchcrit::poly::PolyError,
    matchcrit::crit::CritError,
    io::Error
);

fn strip_g6_header(line: &str) -> &str {
    line.trim()
        .strip_prefix(">>graph6<<")
        .unwrap_or_else(|| line.trim())
}

fn parse_theta(text: &str) -> Result<AlgebraicRoot, CliError> {
    let p: IntPolynomial = text
        .trim()
        .parse()
        .map_err(|e| CliError::param(format!("cannot parse minimal polynomial {text:?}: {e}")))?;
    AlgebraicRoot::new(p)
        .map_err(|e| CliError::param(format!("invalid minimal polynomial {text:?}: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Poly { graph, json } => cmd_poly(&graph, json),
        Command::Classify { graph, theta, json } => cmd_classify(&graph, &theta, json),
        Command::Critical { graph, theta, json } => cmd_critical(&graph, &theta, json),
        Command::Family {
            family,
            n,
            pattern,
            json,
        } => cmd_family(&family, n, pattern.as_deref(), json),
        Command::Pathtree {
            graph,
            root,
            limit,
            json,
        } => cmd_pathtree(&graph, root, limit, json),
        Command::Enum {
            kind,
            n,
            filter_critical,
            input,
            output,
            json,
        } => cmd_enum(kind, n, filter_critical.as_deref(), input, output, json),
        Command::Ntheta { theta, n_max, json } => cmd_ntheta(&theta, n_max, json),
        Command::Verify {
            claim,
            list,
            n,
            theta,
            t,
            jobs,
            json,
        } => cmd_verify(claim.as_deref(), list, n, theta.as_deref(), t, jobs, json),
    }
}

fn cmd_poly(graph: &GraphArgs, json: bool) -> Result<u8, CliError> {
    let g = graph.build()?;
    let engine = global_engine();
    let mu = engine.matching_polynomial(&g);
    if json {
        let counts = engine.matching_counts(&g);
        let payload = json!({
            "graph6": write_graph6(&g),
            "n": g.n(),
            "m": g.m(),
            "mu": mu.to_string(),
            "coefficients": mu.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "matching_counts": counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializes"));
    } else {
        println!("{mu}");
    }
    Ok(0)
}

fn cmd_classify(graph: &GraphArgs, theta_text: &str, json: bool) -> Result<u8, CliError> {
    let g = graph.build()?;
    let theta = parse_theta(theta_text)?;
    let verdict = classify_vertices_with_engine(global_engine(), &g, &theta);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&verdict).expect("verdict serializes")
        );
    } else {
        println!("{}", verdict.to_json());
    }
    Ok(0)
}

fn cmd_critical(graph: &GraphArgs, theta_text: &str, json: bool) -> Result<u8, CliError> {
    let g = graph.build()?;
    let theta = parse_theta(theta_text)?;
    let critical = is_theta_critical_with_engine(global_engine(), &g, &theta)?;
    if json {
        let payload = json!({
            "graph6": write_graph6(&g),
            "theta": theta.minpoly().to_string(),
            "critical": critical,
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializes"));
    } else {
        println!("{critical}");
    }
    Ok(0)
}

fn cmd_family(name: &str, n: Option<usize>, pattern: Option<&str>, json: bool) -> Result<u8, CliError> {
    let spec = FamilySpec::parse(name, n, pattern)?;
    let g = spec.build()?;
    if json {
        let payload = json!({
            "family": spec.descriptor(),
            "graph6": write_graph6(&g),
            "n": g.n(),
            "m": g.m(),
            "edges": g.edges(),
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializes"));
    } else {
        println!("{}", write_graph6(&g));
    }
    Ok(0)
}

fn cmd_pathtree(graph: &GraphArgs, root: usize, limit: u64, json: bool) -> Result<u8, CliError> {
    let g = graph.build()?;
    if root >= g.n() {
        return Err(CliError::param(format!(
            "root vertex {root} out of range for a graph on {} vertices",
            g.n()
        )));
    }
    let check = verify_path_tree_divisibility(global_engine(), &g, root, limit)?;
    let quotient = check.quotient.as_ref().map(|q| q.to_string());
    if json {
        let payload = json!({
            "graph6": write_graph6(&g),
            "root": root,
            "nodes": check.nodes,
            "divisible": check.quotient.is_some(),
            "ratio_identity": check.ratio_identity,
            "quotient": quotient,
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializes"));
    } else {
        println!("nodes: {}", check.nodes);
        println!("divisible: {}", check.quotient.is_some());
        println!("ratio_identity: {}", check.ratio_identity);
        if let Some(q) = quotient {
            println!("quotient: {q}");
        }
    }
    Ok(0)
}

fn cmd_enum(
    kind: EnumKind,
    n: Option<usize>,
    filter: Option<&str>,
    input: Option<PathBuf>,
    output: Option<PathBuf>,
    json: bool,
) -> Result<u8, CliError> {
    let theta = filter.map(parse_theta).transpose()?;
    let engine = global_engine();

    let stream: Box<dyn Iterator<Item = Result<Graph, CliError>>> = match input {
        Some(path) => {
            let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
                Box::new(BufReader::new(io::stdin()))
            } else {
                Box::new(BufReader::new(File::open(&path)?))
            };
            Box::new(reader.lines().enumerate().filter_map(|(i, line)| {
                let line = match line {
                    Ok(l) => l,
                    Err(e) => return Some(Err(CliError::from(e))),
                };
                let code = strip_g6_header(&line);
                if code.is_empty() {
                    return None;
                }
                Some(parse_graph6(code).map_err(|e| {
                    CliError::param(format!("line {}: {e}", i + 1))
                }))
            }))
        }
        None => {
            let n = n.ok_or_else(|| {
                CliError::param("--n is required unless --input supplies a stream")
            })?;
            let gen = match kind {
                EnumKind::Trees => enum_trees(n)?,
                EnumKind::Connected => enum_connected(n)?,
            };
            Box::new(gen.map(Ok))
        }
    };

    let mut out: Box<dyn Write> = match output {
        Some(path) => Box::new(BufWriter::new(File::create(&path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };

    let mut collected: Vec<String> = Vec::new();
    let mut count: u64 = 0;
    for item in stream {
        let g = item?;
        if let Some(th) = &theta {
            if !is_theta_critical_with_engine(engine, &g, th).unwrap_or(false) {
                continue;
            }
        }
        count += 1;
        let code = write_graph6(&g);
        if json {
            collected.push(code);
        } else if let Err(e) = writeln!(out, "{code}") {
            if e.kind() == io::ErrorKind::BrokenPipe {
                return Ok(0);
            }
            return Err(e.into());
        }
    }
    if json {
        let payload = json!({ "count": count, "graphs": collected });
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&payload).expect("serializes")
        )?;
    }
    match out.flush() {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(0),
        other => {
            other?;
            Ok(0)
        }
    }
}

fn cmd_ntheta(theta_text: &str, n_max: usize, json: bool) -> Result<u8, CliError> {
    let theta = parse_theta(theta_text)?;
    let result = match compute_n_theta(&theta, n_max) {
        Ok(r) => r,
        Err(e @ NThetaError::NotFound { .. }) => return Err(CliError::param(e.to_string())),
        Err(NThetaError::Enum(e)) => return Err(e.into()),
    };
    let members: Vec<String> = result.members.iter().map(write_graph6).collect();
    if json {
        let anomalies: Vec<serde_json::Value> = result
            .anomalies
            .iter()
            .map(|a| json!({ "n": a.n, "graph6": a.graph6, "multiplicity": a.multiplicity }))
            .collect();
        let payload = json!({
            "theta": theta.minpoly().to_string(),
            "n_max": n_max,
            "n_theta": result.n_theta,
            "members": members,
            "anomalies": anomalies,
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializes"));
    } else {
        println!("n_theta: {}", result.n_theta);
        for code in &members {
            println!("{code}");
        }
        for a in &result.anomalies {
            println!(
                "anomaly: n={} graph6={} multiplicity={}",
                a.n, a.graph6, a.multiplicity
            );
        }
    }
    Ok(0)
}

fn cmd_verify(
    claim: Option<&str>,
    list: bool,
    n: Option<usize>,
    theta_text: Option<&str>,
    t: Option<usize>,
    jobs: usize,
    json: bool,
) -> Result<u8, CliError> {
    if list {
        for info in CLAIMS {
            let aliases = if info.aliases.is_empty() {
                String::new()
            } else {
                format!(" (alias {})", info.aliases.join(", "))
            };
            println!("{}{}\n    {}", info.id, aliases, info.summary);
        }
        return Ok(0);
    }
    let token = claim.ok_or_else(|| {
        CliError::param("missing claim id; run `matchcrit verify --list` to see them")
    })?;
    let theta = theta_text.map(parse_theta).transpose()?;
    let opts = RunOptions {
        n,
        theta,
        t,
        jobs,
    };
    let report = match run_claim(token, &opts) {
        Ok(r) => r,
        Err(e @ VerifyError::UnknownClaim { .. }) => return Err(CliError::param(e.to_string())),
        Err(e @ VerifyError::BadParams(_)) => return Err(CliError::param(e.to_string())),
        Err(e) => return Err(CliError::param(e.to_string())),
    };
    if json {
        println!("{}", report.to_json());
    } else {
        println!("claim: {}", report.claim);
        println!("params: {}", report.params);
        println!("scanned: {}", report.scanned);
        println!("witnesses: {}", report.witnesses.len());
        println!("violations: {}", report.violations.len());
        for v in &report.violations {
            println!("violation: {v}");
        }
        println!("elapsed_ms: {}", report.elapsed_ms);
        println!("result: {}", if report.pass() { "PASS" } else { "FAIL" });
    }
    Ok(if report.pass() { 0 } else { 1 })
}
