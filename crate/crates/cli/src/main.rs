use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arcsemi::census::census;
use arcsemi::classifier::{Outcome, Property};
use arcsemi::cycle_length::{decide_l_leq_k, l_of, LDecision};
use arcsemi::graph::io::{parse_digraph, write_digraph};
use arcsemi::oracle::ElementCap;
use arcsemi::verify::run_verify;
use arcsemi::{Digraph, Error, Graph};
use arcsemi_cli::{analyze, bench, generate_family, AnalysisDocument, BenchFamily, OracleSection};
use clap::{Parser, Subcommand};
use serde::Serialize;

const EXIT_INPUT: u8 = 1;
const EXIT_DISAGREEMENT: u8 = 2;

#[derive(Parser)]
#[command(name = "arcsemi", version, about = "Semigroups generated by the arcs of a digraph")]
struct Cli {
    /// Oracle element cap; overrides ARCSEMI_ELEMENT_CAP.
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the semigroup of a digraph, optionally checking the oracle.
    Analyze {
        file: PathBuf,
        /// Also enumerate the semigroup and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Longest cycle length over the generated semigroup.
    L {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide l(G) <= k for a connected graph.
    Decide {
        file: PathBuf,
        #[arg(short, long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Count digraphs on n vertices by property.
    Census {
        n: usize,
        #[arg(long)]
        up_to_iso: bool,
        /// Restrict to these properties (repeatable); all by default.
        #[arg(long = "property", short = 'p')]
        properties: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run the classifier, l and decision cross-checks.
    Verify {
        n_max: usize,
        k_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Time the decision procedure on a graph family.
    Bench {
        /// q, r, path or oplus.
        family: String,
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000,1000000")]
        sizes: Vec<usize>,
        #[arg(short, long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write a named graph or family member as an edge list.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Disagreement,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn read_digraph(path: &Path) -> Result<Digraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_digraph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::try_from_digraph(read_digraph(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serialisable"));
}

fn outcome_text(o: Outcome) -> &'static str {
    match o {
        Outcome::True => "true",
        Outcome::False => "false",
        Outcome::NotApplicable => "n/a",
    }
}

fn render_analysis(doc: &AnalysisDocument) -> String {
    let mut out = String::new();
    let d = &doc.input;
    let arcs: Vec<String> = d.arcs().iter().map(|(u, v)| format!("({u},{v})")).collect();
    writeln!(out, "digraph: n={} arcs={}", d.n(), arcs.join(" ")).unwrap();
    if !doc.closure_added.is_empty() {
        let added: Vec<String> = doc.closure_added.iter().map(|(u, v)| format!("({u},{v})")).collect();
        writeln!(out, "closure adds: {}", added.join(" ")).unwrap();
    }
    let c = &doc.components;
    writeln!(
        out,
        "strong components: {:?}; terminal: {:?}; acyclic: {}; connected: {}",
        c.strong, c.terminals, c.acyclic, c.connected
    )
    .unwrap();
    if let Some(size) = doc.classifier.predicted_size {
        writeln!(out, "predicted |S| = {size}").unwrap();
    }
    match &doc.oracle {
        Some(OracleSection::Complete { size, .. }) => writeln!(out, "oracle: |S| = {size}").unwrap(),
        Some(OracleSection::Aborted { cap, partial }) => writeln!(
            out,
            "oracle: aborted at element cap {cap} after {partial} elements; oracle verdicts unavailable"
        )
        .unwrap(),
        None => {}
    }
    if let Some(l) = &doc.l {
        match l.exact {
            Some(v) => writeln!(out, "l = {v}").unwrap(),
            None => writeln!(
                out,
                "l >= {} ({})",
                l.lower_bound,
                l.note.as_deref().unwrap_or("not computed")
            )
            .unwrap(),
        }
    }
    writeln!(out).unwrap();
    let oracle = match &doc.oracle {
        Some(OracleSection::Complete { report, .. }) => Some(report),
        _ => None,
    };
    for (p, v) in &doc.classifier.properties {
        write!(out, "{:<22} {:<5}", p.name(), outcome_text(v.verdict)).unwrap();
        if let Some(report) = oracle {
            let o = arcsemi::verify::oracle_value(report, *p)
                .map_or("-", |b| if b { "true" } else { "false" });
            write!(out, " oracle={o:<5}").unwrap();
        }
        writeln!(out, "  {}", v.proposition).unwrap();
    }
    if doc.disagreement {
        writeln!(out).unwrap();
        writeln!(out, "DISAGREEMENT between classifier and oracle:").unwrap();
        for bad in &doc.disagreements {
            writeln!(
                out,
                "  {}: classifier={} oracle={}",
                bad.property, bad.classifier, bad.oracle
            )
            .unwrap();
        }
    }
    out
}

fn cmd_analyze(file: &Path, oracle: bool, json: bool, cap: ElementCap) -> CmdResult {
    let d = read_digraph(file)?;
    let doc = analyze(&d, oracle, cap);
    if json {
        print_json(&doc);
    } else {
        print!("{}", render_analysis(&doc));
    }
    if doc.disagreement {
        Err(Failure::Disagreement)
    } else {
        Ok(())
    }
}

fn cmd_l(file: &Path, json: bool) -> CmdResult {
    let d = read_digraph(file)?;
    let l = l_of(&d)?;
    if json {
        print_json(&serde_json::json!({ "l": l }));
    } else {
        println!("{l}");
    }
    Ok(())
}

fn render_decision(d: &LDecision) -> String {
    let mut out = format!(
        "l(G) <= {}: {} (step {}, {}; n = {}, threshold {})",
        d.k,
        if d.verdict { "yes" } else { "no" },
        d.step,
        d.path_taken,
        d.n,
        d.details.threshold
    );
    if let Some(b) = &d.details.branch {
        write!(
            out,
            "\nlongest branch: {} vertices, terminal {}, separating {}",
            b.len(),
            b.terminal,
            b.separating
        )
        .unwrap();
    }
    if let Some(l) = d.details.exact_l {
        write!(out, "\nexact l = {l}").unwrap();
    }
    if let Some(note) = &d.details.note {
        write!(out, "\nnote: {note}").unwrap();
    }
    if d.flagged {
        out.push_str("\nflagged for review");
    }
    out
}

fn cmd_decide(file: &Path, k: usize, json: bool) -> CmdResult {
    let g = read_graph(file)?;
    let d = decide_l_leq_k(&g, k)?;
    if json {
        print_json(&d);
    } else {
        println!("{}", render_decision(&d));
    }
    Ok(())
}

fn cmd_census(n: usize, up_to_iso: bool, names: &[String], json: bool) -> CmdResult {
    let properties = if names.is_empty() {
        Property::ALL.to_vec()
    } else {
        names
            .iter()
            .map(|s| s.parse::<Property>())
            .collect::<Result<Vec<_>, _>>()?
    };
    let c = census(n, up_to_iso, &properties)?;
    if json {
        print_json(&c);
        return Ok(());
    }
    println!(
        "n = {} ({}), {} digraphs with arcs",
        c.n,
        if c.up_to_iso { "up to isomorphism" } else { "labelled" },
        c.total
    );
    println!("{:<22} {:>9} {:>8} {:>11}", "property", "digraphs", "unknown", "semigroups");
    for row in &c.rows {
        let semigroups = row.semigroups.map_or("-".to_string(), |s| s.to_string());
        println!(
            "{:<22} {:>9} {:>8} {:>11}",
            row.property.name(),
            row.digraphs,
            row.unknown,
            semigroups
        );
    }
    Ok(())
}

fn cmd_verify(n_max: usize, k_max: usize, seed: u64, json: bool) -> CmdResult {
    let report = run_verify(n_max, k_max, seed)?;
    if json {
        print_json(&report);
    } else {
        println!("verify n_max={n_max} k_max={k_max} seed={seed}");
        for check in &report.checks {
            let status = if check.passed() { "PASS" } else { "FAIL" };
            println!("{status} {} ({} cases)", check.name, check.cases);
            for f in &check.failures {
                println!("    counterexample: {f}");
            }
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Disagreement)
    }
}

fn cmd_bench(family: &str, sizes: &[usize], k: usize, reps: usize, json: bool) -> CmdResult {
    let family = BenchFamily::parse(family)?;
    let rows = bench(family, sizes, k, reps)?;
    if json {
        print_json(&rows);
        return Ok(());
    }
    println!(
        "{:>10} {:>8} {:>13} {:>12} {:>10}  note",
        "n", "verdict", "step", "time (ms)", "ns/vertex"
    );
    for r in &rows {
        let mut note = Vec::new();
        if r.below_threshold {
            note.push("exact evaluation below threshold");
        }
        if r.flagged {
            note.push("flagged");
        }
        println!(
            "{:>10} {:>8} {:>13} {:>12.4} {:>10.2}  {}",
            r.n,
            if r.verdict { "yes" } else { "no" },
            r.path_taken.name(),
            r.time_ms,
            r.ns_per_vertex,
            note.join(", ")
        );
    }
    Ok(())
}

fn cmd_gen(family: &str, params: &[usize], output: Option<&Path>) -> CmdResult {
    let d = generate_family(family, params)?;
    let text = write_digraph(&d);
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    let cap = match cli.cap {
        Some(c) => {
            std::env::set_var(ElementCap::ENV, c.to_string());
            ElementCap(c)
        }
        None => ElementCap::from_env(),
    };
    match cli.command {
        Command::Analyze { file, oracle, json } => cmd_analyze(&file, oracle, json, cap),
        Command::L { file, json } => cmd_l(&file, json),
        Command::Decide { file, k, json } => cmd_decide(&file, k, json),
        Command::Census {
            n,
            up_to_iso,
            properties,
            json,
        } => cmd_census(n, up_to_iso, &properties, json),
        Command::Verify {
            n_max,
            k_max,
            seed,
            json,
        } => cmd_verify(n_max, k_max, seed, json),
        Command::Bench {
            family,
            sizes,
            k,
            reps,
            json,
        } => cmd_bench(&family, &sizes, k, reps, json),
        Command::Gen {
            family,
            params,
            output,
        } => cmd_gen(&family, &params, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are input errors; help and version are not errors
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Disagreement) => {
            eprintln!("error: verification disagreement");
            ExitCode::from(EXIT_DISAGREEMENT)
        }
    }
}
