//! `autoratio`: build graph-derived structures, count their automorphisms,
//! realize automorphism ratios and rerun the claim checks.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use autoratio::aut::{graph_automorphism_count, graph_automorphisms};
use autoratio::claims::{run_suite, SuiteOptions};
use autoratio::error::Error;
use autoratio::evolution::{evolution_algebra, EvolutionAlgebra, Matrix};
use autoratio::graph::Graph;
use autoratio::monoid::{
    check_graph_monoid, finite_monoid_automorphisms, monoid_automorphisms, monoid_from_graph,
    parse_cayley, ParsedMonoid,
};
use autoratio::partial_group::{
    check_partial_group_axioms, partial_automorphisms, PartialGroup, PartialGroupOps,
    DEFAULT_AXIOM_LEN, DEFAULT_CERT_LEN,
};
use autoratio::perm::PermSet;
use autoratio::poset::{check_poset_axioms, face_poset, poset_automorphisms, FacePoset};
use autoratio::realize::{
    materialize, parse_ratio, plan, plan_with_scale, verify, Target, DEFAULT_VERTEX_BUDGET,
};
use autoratio::report::AxiomReport;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_VERIFY_FAIL: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_MALFORMED: u8 = 65;
const EXIT_NO_INPUT: u8 = 66;

#[derive(Parser)]
#[command(
    name = "autoratio",
    version,
    about = "Graph-derived structures with prescribed automorphism ratios"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the star-with-tail graph Γ_{p,q} (or Γ⁺ with --plus).
    Gamma {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        plus: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Build a structure from a graph file.
    Construct {
        kind: Kind,
        file: String,
        /// Also run the axiom checks and print the report to stderr.
        #[arg(long)]
        check: bool,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Compute the automorphism group of a graph or structure file.
    Aut {
        kind: AutKind,
        file: String,
        #[arg(long)]
        count_only: bool,
        /// Word length used to certify partial group automorphisms.
        #[arg(long, default_value_t = DEFAULT_CERT_LEN)]
        max_len: usize,
    },
    /// Partial group queries.
    Pg {
        #[command(subcommand)]
        action: PgAction,
    },
    /// Evolution algebra queries.
    Evoalg {
        #[command(subcommand)]
        action: EvoAction,
    },
    /// Plan, and optionally build and verify, a realization of a ratio.
    Realize {
        #[arg(long)]
        ratio: String,
        #[arg(long)]
        target: Target,
        /// Largest number of graph vertices that will be materialized.
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: u64,
        /// Override the minimal scaling of the reduced fraction.
        #[arg(long)]
        scale: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        verify: Option<u8>,
        /// Directory receiving the graph and structure files.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rerun every claim check and print a table.
    VerifyPaper {
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = SuiteOptions::default().seed)]
        seed: u64,
        /// Write the table as CSV to FILE (`-` for stdout).
        #[arg(long)]
        csv: Option<String>,
    },
}

#[derive(Subcommand)]
enum PgAction {
    /// Test a word for domain membership and print its product.
    Check {
        file: String,
        #[arg(long)]
        word: String,
    },
    /// Run the partial group axiom checks on words up to a length.
    Axioms {
        file: String,
        #[arg(long, default_value_t = DEFAULT_AXIOM_LEN)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum EvoAction {
    /// Decide whether a matrix is an algebra automorphism.
    CheckMatrix { file: String, matrix: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Monoid,
    PartialGroup,
    Poset,
    Evoalg,
}

#[derive(Clone, Copy, ValueEnum)]
enum AutKind {
    Graph,
    Monoid,
    PartialGroup,
    Poset,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::BudgetExceeded { .. } | Error::OracleLimit { .. } => EXIT_BUDGET,
            Error::Io(_) => EXIT_NO_INPUT,
            Error::GammaParameters { .. }
            | Error::MaxLength { .. }
            | Error::NonPositiveRatio(_)
            | Error::ScaleTooSmall { .. } => EXIT_USAGE,
            _ => EXIT_MALFORMED,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let read = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::new(EXIT_NO_INPUT, format!("{path}: {e}")))?;
    Ok(text)
}

fn write_output(path: &str, text: &str) -> Result<(), Failure> {
    let written = if path == "-" {
        io::stdout().write_all(text.as_bytes())
    } else {
        fs::write(path, text)
    };
    written.map_err(|e| Failure::new(1, format!("{path}: {e}")))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))
}

fn is_graph_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    Ok(Graph::from_json(&read_input(path)?)?)
}

fn read_partial_group(path: &str) -> Result<PartialGroup, Failure> {
    let text = read_input(path)?;
    if is_graph_json(&text) {
        Ok(PartialGroup::from_graph(&Graph::from_json(&text)?))
    } else {
        Ok(PartialGroup::from_text(&text)?)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn report_axioms(report: &AxiomReport) -> u8 {
    eprint!("{report}");
    if report.all_passed() {
        0
    } else {
        EXIT_VERIFY_FAIL
    }
}

fn gamma(p: u64, q: u64, plus: bool, format: GraphFormat, output: &str) -> Outcome {
    let g = Graph::gamma(p, q, plus)?;
    let text = match format {
        GraphFormat::Json => g.to_json() + "\n",
        GraphFormat::Dot => g.to_dot(),
    };
    write_output(output, &text)?;
    Ok(0)
}

fn construct(kind: Kind, file: &str, check: bool, output: &str) -> Outcome {
    let g = read_graph(file)?;
    let mut code = 0;
    let text = match kind {
        Kind::Monoid => {
            let m = monoid_from_graph(&g);
            if check {
                code = report_axioms(&check_graph_monoid(&m));
            }
            m.to_text()
        }
        Kind::PartialGroup => {
            let pg = PartialGroup::from_graph(&g);
            if check {
                code = report_axioms(&check_partial_group_axioms(&pg, DEFAULT_AXIOM_LEN)?);
            }
            pg.to_text()
        }
        Kind::Poset => {
            let p = face_poset(&g);
            if check {
                code = report_axioms(&check_poset_axioms(&p));
            }
            p.to_text()
        }
        Kind::Evoalg => {
            let a = evolution_algebra(&g);
            if check {
                eprintln!("regular: {}", yes_no(a.is_regular()));
                if !a.is_regular() {
                    code = EXIT_VERIFY_FAIL;
                }
            }
            a.to_text()
        }
    };
    write_output(output, &text)?;
    Ok(code)
}

fn print_group(order: impl std::fmt::Display, group: Option<&PermSet>) -> String {
    let mut out = format!("order {order}\n");
    for p in group.into_iter().flat_map(|g| g.iter()) {
        writeln!(out, "{p}").expect("string write");
    }
    out
}

fn aut(kind: AutKind, file: &str, count_only: bool, max_len: usize) -> Outcome {
    let text = read_input(file)?;
    let group = match kind {
        AutKind::Graph => {
            let g = Graph::from_json(&text)?;
            if count_only {
                print!("{}", print_group(graph_automorphism_count(&g), None));
                return Ok(0);
            }
            graph_automorphisms(&g)?
        }
        AutKind::Monoid if is_graph_json(&text) => {
            monoid_automorphisms(&monoid_from_graph(&Graph::from_json(&text)?))?
        }
        AutKind::Monoid => match parse_cayley(&text)? {
            ParsedMonoid::Graph(gm) => monoid_automorphisms(&gm)?,
            ParsedMonoid::Plain(m) => finite_monoid_automorphisms(&m)?,
        },
        AutKind::PartialGroup => {
            let pg = if is_graph_json(&text) {
                PartialGroup::from_graph(&Graph::from_json(&text)?)
            } else {
                PartialGroup::from_text(&text)?
            };
            partial_automorphisms(&pg, max_len)?
        }
        AutKind::Poset => {
            let p = if is_graph_json(&text) {
                face_poset(&Graph::from_json(&text)?)
            } else {
                FacePoset::from_text(&text)?
            };
            poset_automorphisms(&p)?
        }
    };
    print!(
        "{}",
        print_group(group.order(), (!count_only).then_some(&group))
    );
    Ok(0)
}

fn pg_check(file: &str, word: &str) -> Outcome {
    let pg = read_partial_group(file)?;
    let w = pg.parse_word(word)?;
    let mut out = format!("word {}\n", pg.word_label(&w));
    if pg.in_domain(&w)? {
        let product = pg.product(&w)?;
        writeln!(
            out,
            "in domain: yes\nproduct: {}",
            pg.element_label(product)
        )
        .expect("string write");
    } else {
        out.push_str("in domain: no\n");
    }
    print!("{out}");
    Ok(0)
}

fn pg_axioms(file: &str, max_len: usize) -> Outcome {
    let pg = read_partial_group(file)?;
    let report = check_partial_group_axioms(&pg, max_len)?;
    print!("{report}");
    Ok(if report.all_passed() {
        0
    } else {
        EXIT_VERIFY_FAIL
    })
}

fn evo_check(file: &str, matrix: &str) -> Outcome {
    let text = read_input(file)?;
    let algebra = if is_graph_json(&text) {
        evolution_algebra(&Graph::from_json(&text)?)
    } else {
        EvolutionAlgebra::from_text(&text)?
    };
    let m = Matrix::from_text(&read_input(matrix)?)?;
    let invertible = m.dim() == algebra.dim() && m.is_invertible();
    let automorphism = algebra.is_algebra_automorphism(&m)?;
    println!("invertible: {}", yes_no(invertible));
    println!("automorphism: {}", yes_no(automorphism));
    Ok(if automorphism { 0 } else { EXIT_VERIFY_FAIL })
}

fn realize(
    ratio: &str,
    target: Target,
    budget: u64,
    scale: Option<u64>,
    level: Option<u8>,
    output: Option<&Path>,
) -> Outcome {
    let r = parse_ratio(ratio)?;
    let plan = match scale {
        Some(k) => plan_with_scale(&r, target, &k.into())?,
        None => plan(&r, target)?,
    };
    print!("{plan}");
    if level.is_none() && output.is_none() {
        return Ok(0);
    }
    let built = match materialize(&plan, budget) {
        Ok(b) => b,
        Err(e @ Error::BudgetExceeded { .. }) => {
            println!("refused: {e}");
            return Ok(EXIT_BUDGET);
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(dir) = output {
        fs::create_dir_all(dir).map_err(|e| Failure::new(1, format!("{}: {e}", dir.display())))?;
        write_file(&dir.join("graph.json"), &(built.graph.to_json() + "\n"))?;
        let (text, ext) = built.render();
        if ext != "json" {
            write_file(&dir.join(format!("structure.{ext}")), &text)?;
        }
    }
    let Some(level) = level else { return Ok(0) };
    let report = verify(&plan, &built, level);
    print!("{report}");
    Ok(if report.passed() { 0 } else { EXIT_VERIFY_FAIL })
}

fn verify_paper(quick: bool, seed: u64, csv_path: Option<&str>) -> Outcome {
    let results = run_suite(&SuiteOptions { seed, quick });
    let all = results.iter().all(|r| r.passed());
    let mut table: Vec<[String; 4]> = Vec::new();
    for res in &results {
        for row in &res.rows {
            let status = if row.passed { "PASS" } else { "FAIL" };
            table.push([
                format!("{}. {}", res.number, row.claim),
                row.expected.clone(),
                row.computed.clone(),
                status.into(),
            ]);
        }
        if let (false, Some(limit)) = (res.within_time(), res.time_limit) {
            table.push([
                format!("{}. time limit", res.number),
                format!("<= {limit:?}"),
                format!("{:?}", res.elapsed),
                "FAIL".into(),
            ]);
        }
    }
    match csv_path {
        Some(path) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["claim", "expected", "computed", "status"])
                .and_then(|_| table.iter().try_for_each(|row| w.write_record(row)))
                .map_err(|e| Failure::new(1, e.to_string()))?;
            let bytes = w.into_inner().map_err(|e| Failure::new(1, e.to_string()))?;
            write_output(path, &String::from_utf8_lossy(&bytes))?;
        }
        None => {
            let mut out = String::new();
            for res in &results {
                let status = if res.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "[{status}] criterion {}: {}", res.number, res.title)
                    .expect("string write");
            }
            out.push('\n');
            let widths: Vec<usize> = (0..3)
                .map(|i| {
                    table
                        .iter()
                        .map(|r| r[i].chars().count())
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let header = ["claim", "expected", "computed", "status"];
            for row in std::iter::once(header.map(String::from)).chain(table) {
                writeln!(
                    out,
                    "{:<w0$}  {:<w1$}  {:<w2$}  {}",
                    row[0],
                    row[1],
                    row[2],
                    row[3],
                    w0 = widths[0].max(5),
                    w1 = widths[1].max(8),
                    w2 = widths[2].max(8),
                )
                .expect("string write");
            }
            print!("{out}");
        }
    }
    Ok(if all { 0 } else { EXIT_VERIFY_FAIL })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gamma {
            p,
            q,
            plus,
            format,
            output,
        } => gamma(p, q, plus, format, &output),
        Command::Construct {
            kind,
            file,
            check,
            output,
        } => construct(kind, &file, check, &output),
        Command::Aut {
            kind,
            file,
            count_only,
            max_len,
        } => aut(kind, &file, count_only, max_len),
        Command::Pg {
            action: PgAction::Check { file, word },
        } => pg_check(&file, &word),
        Command::Pg {
            action: PgAction::Axioms { file, max_len },
        } => pg_axioms(&file, max_len),
        Command::Evoalg {
            action: EvoAction::CheckMatrix { file, matrix },
        } => evo_check(&file, &matrix),
        Command::Realize {
            ratio,
            target,
            budget,
            scale,
            verify,
            output,
        } => realize(&ratio, target, budget, scale, verify, output.as_deref()),
        Command::VerifyPaper { quick, seed, csv } => verify_paper(quick, seed, csv.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
