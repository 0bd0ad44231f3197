//! `crystalkit`: apply crystal operators, convert between realizations, run
//! verification suites and export crystal graphs.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use crystalkit::document::{trace_to_json, DocumentKind};
use crystalkit::pbw::{phi, phi_inv_in};
use crystalkit::verify::{
    build_graph, enumerate_lusztig_data, enumerate_multisegments, enumerate_ssyt, find_suite, run_battery,
    run_suite, Budget, GraphModel, SuiteParams, SuiteReport,
};
use crystalkit::{Bicrystal, Crystal, CrystalError, Document, DocumentError, Partition, Rank};

#[derive(Parser)]
#[command(name = "crystalkit", version, about = "Crystals of sl(n+1): multisegments, tableaux and Lusztig data")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Rank n of sl(n+1).
    #[arg(long, global = true)]
    rank: Option<u32>,
    /// Input document, or `-` for stdin.
    #[arg(long, global = true, default_value = "-")]
    input: String,
    /// Output destination, or `-` for stdout.
    #[arg(long, global = true, default_value = "-")]
    output: String,
    /// Output format: json or text for documents, dot or json for graphs.
    #[arg(long, global = true)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Apply an operator to the input document.
    Apply {
        #[arg(value_parser = ["e", "f", "e*", "f*", "sigma", "sigma-chain", "flip"])]
        op: String,
        /// Operator index i.
        #[arg(long, short)]
        index: Option<usize>,
        /// With sigma-chain, print a_k and M^(k) for every step.
        #[arg(long)]
        trace: bool,
    },
    /// Convert the input document to another realization.
    Convert {
        #[arg(long)]
        to: String,
    },
    /// Run a verification suite (or `all` for the default battery).
    Verify {
        suite: String,
        #[arg(long)]
        max_size: Option<u64>,
        /// Partition such as `2,1`.
        #[arg(long)]
        shape: Option<Partition>,
    },
    /// Export the crystal graph of a bounded region.
    Graph {
        #[arg(value_parser = ["ms", "tab", "pbw"])]
        model: String,
        #[arg(long)]
        max_size: Option<u64>,
        #[arg(long)]
        shape: Option<Partition>,
        /// Include f_i^* edges.
        #[arg(long)]
        star: bool,
    },
    /// List every element of a bounded region, one per line.
    Enumerate {
        #[arg(value_parser = ["ms", "tab", "pbw"])]
        model: String,
        #[arg(long)]
        max_size: Option<u64>,
        #[arg(long)]
        shape: Option<Partition>,
    },
}

enum Failure {
    Usage(String),
    Parse(String),
    Validation(String),
    Budget(String),
    Suite,
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Validation(_) => 3,
            Failure::Budget(_) => 4,
            Failure::Suite => 5,
        }
    }
}

impl From<CrystalError> for Failure {
    fn from(e: CrystalError) -> Self {
        match e {
            CrystalError::Usage(_)
            | CrystalError::UnknownSuite(_)
            | CrystalError::MissingParameter { .. }
            | CrystalError::IndexOutOfRange { .. }
            | CrystalError::InvalidRank(_)
            | CrystalError::UnsupportedShape { .. }
            | CrystalError::InvalidPartition(_) => Failure::Usage(e.to_string()),
            CrystalError::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Parse(_) => Failure::Parse(e.to_string()),
            DocumentError::Validation(_) => Failure::Validation(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("usage error: {m}"),
                Failure::Parse(m) | Failure::Validation(m) | Failure::Io(m) => eprintln!("error: {m}"),
                Failure::Budget(m) => eprintln!("refused: {m}"),
                Failure::Suite => eprintln!("verification failed; see the report for counterexamples"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Apply { op, index, trace } => {
            let doc = read_document(g)?;
            let out = apply(&doc, op, *index, *trace, format(g, &[Format::Json, Format::Text])?)?;
            write_output(g, &out)
        }
        Command::Convert { to } => {
            let doc = read_document(g)?;
            let converted = convert(&doc, to)?;
            write_output(g, &render(&converted, format(g, &[Format::Json, Format::Text])?))
        }
        Command::Verify { suite, max_size, shape } => {
            format(g, &[Format::Json])?;
            let budget = Budget::from_env()?;
            let reports = if suite == "all" {
                if g.rank.is_some() || max_size.is_some() || shape.is_some() {
                    return Err(Failure::Usage("`verify all` runs fixed parameters; drop --rank/--max-size/--shape".into()));
                }
                run_battery(&budget)?
            } else {
                if find_suite(suite).is_none() {
                    return Err(CrystalError::UnknownSuite(suite.clone()).into());
                }
                let params = SuiteParams { rank: need_rank(g)?, max_size: *max_size, shape: shape.clone() };
                vec![run_suite(suite, &params, &budget)?]
            };
            let text = if suite == "all" {
                serde_json::to_string_pretty(&reports).expect("reports serialize")
            } else {
                reports[0].to_json()
            };
            write_output(g, &text)?;
            if reports.iter().all(SuiteReport::is_pass) {
                Ok(())
            } else {
                Err(Failure::Suite)
            }
        }
        Command::Graph { model, max_size, shape, star } => {
            let fmt = format(g, &[Format::Dot, Format::Json])?;
            let model: GraphModel = model.parse()?;
            let params = SuiteParams { rank: need_rank(g)?, max_size: *max_size, shape: shape.clone() };
            let graph = build_graph(model, &params, *star, &Budget::from_env()?)?;
            match fmt {
                Format::Json => write_output(g, &graph.to_json()),
                _ => write_output(g, &graph.to_dot()),
            }
        }
        Command::Enumerate { model, max_size, shape } => {
            let fmt = format(g, &[Format::Json, Format::Text])?;
            let rank = Rank::new(need_rank(g)?)?;
            let budget = Budget::from_env()?;
            let missing = |what: &str| CrystalError::MissingParameter { suite: "enumerate".into(), what: what.into() };
            let docs: Vec<Document> = match model.as_str() {
                "ms" | "pbw" => {
                    let max = max_size.ok_or_else(|| missing("max_size"))?;
                    budget.check_multisegments(rank, max)?;
                    if model == "ms" {
                        enumerate_multisegments(rank, max).into_iter().map(Document::Ms).collect()
                    } else {
                        enumerate_lusztig_data(rank, max).into_iter().map(Document::Pbw).collect()
                    }
                }
                _ => {
                    let shape = shape.as_ref().ok_or_else(|| missing("shape"))?;
                    budget.check_tableaux(shape, rank)?;
                    enumerate_ssyt(shape, rank)?.into_iter().map(Document::Tab).collect()
                }
            };
            let lines: Vec<String> = docs.iter().map(|d| render(d, fmt)).collect();
            write_output(g, &lines.join("\n"))
        }
    }
}

fn format(g: &Global, allowed: &[Format]) -> Result<Format, Failure> {
    match g.format {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => {
            let name = f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
            Err(Failure::Usage(format!("format `{name}` is not available for this command")))
        }
    }
}

fn need_rank(g: &Global) -> Result<u32, Failure> {
    g.rank.ok_or_else(|| Failure::Usage("--rank is required".into()))
}

fn read_document(g: &Global) -> Result<Document, Failure> {
    let mut text = String::new();
    if g.input == "-" {
        io::stdin().read_to_string(&mut text).map_err(|e| Failure::Io(format!("reading stdin: {e}")))?;
    } else {
        text = fs::read_to_string(&g.input).map_err(|e| Failure::Io(format!("reading {}: {e}", g.input)))?;
    }
    let doc = Document::from_json(&text)?;
    if let Some(r) = g.rank {
        if r != doc.rank().get() {
            return Err(Failure::Validation(format!("--rank {r} but the document has rank {}", doc.rank())));
        }
    }
    Ok(doc)
}

fn write_output(g: &Global, text: &str) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    if g.output == "-" {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| Failure::Io(e.to_string()))
    } else {
        fs::write(&g.output, text).map_err(|e| Failure::Io(format!("writing {}: {e}", g.output)))
    }
}

fn render(doc: &Document, fmt: Format) -> String {
    match fmt {
        Format::Text => doc.label(),
        _ => doc.to_json(),
    }
}

fn render_opt(doc: Option<Document>, fmt: Format) -> String {
    doc.map_or_else(|| "null".to_string(), |d| render(&d, fmt))
}

fn index_for(doc: &Document, op: &str, index: Option<usize>) -> Result<usize, Failure> {
    let i = index.ok_or_else(|| Failure::Usage(format!("`{op}` needs --index")))?;
    doc.rank().check_index(i)?;
    Ok(i)
}

fn apply(doc: &Document, op: &str, index: Option<usize>, trace: bool, fmt: Format) -> Result<String, Failure> {
    if trace && op != "sigma-chain" {
        return Err(Failure::Usage("--trace only applies to sigma-chain".into()));
    }
    let unsupported = || Failure::Usage(format!("`{op}` is not defined for {} documents", doc.kind()));
    let takes_index = matches!(op, "e" | "f" | "e*" | "f*" | "sigma");
    if !takes_index && index.is_some() {
        return Err(Failure::Usage(format!("`{op}` takes no --index")));
    }
    let i = if takes_index { index_for(doc, op, index)? } else { 0 };
    let result = match (doc, op) {
        (Document::Ms(m), _) => match op {
            "e" => m.e(i).map(Document::Ms),
            "f" => Some(Document::Ms(m.f(i))),
            "e*" => m.e_star(i).map(Document::Ms),
            "f*" => Some(Document::Ms(m.f_star(i))),
            "sigma" => Some(Document::Ms(m.sigma_checked(i)?)),
            "flip" => Some(Document::Ms(m.flip())),
            _ if trace => {
                if fmt == Format::Text {
                    return Err(Failure::Usage("--trace output is JSON only".into()));
                }
                return Ok(trace_to_json(&m.sigma_chain_trace()));
            }
            _ => Some(Document::Ms(m.sigma_chain())),
        },
        (Document::Tab(t), "e") => t.checked_e(i)?.map(Document::Tab),
        (Document::Tab(t), "f") => t.checked_f(i)?.map(Document::Tab),
        (Document::Pbw(a), "e") => Crystal::e(a, i).map(Document::Pbw),
        (Document::Pbw(a), "f") => Crystal::f(a, i).map(Document::Pbw),
        (Document::Pbw(a), "e*") => Bicrystal::e_star(a, i).map(Document::Pbw),
        (Document::Pbw(a), "f*") => Bicrystal::f_star(a, i).map(Document::Pbw),
        _ => return Err(unsupported()),
    };
    Ok(render_opt(result, fmt))
}

fn convert(doc: &Document, to: &str) -> Result<Document, Failure> {
    let target: DocumentKind = to.parse()?;
    match (doc, target) {
        (_, t) if t == doc.kind() => Ok(doc.clone()),
        (Document::Pbw(a), DocumentKind::Ms) => Ok(Document::Ms(phi(a))),
        (Document::Ms(m), DocumentKind::Pbw) => Ok(Document::Pbw(phi_inv_in(m.rank(), m)?)),
        (Document::Tab(t), DocumentKind::Ms) => Ok(Document::Ms(t.embed())),
        (from, to) => Err(Failure::Usage(format!("conversion {} -> {to} is not supported", from.kind()))),
    }
}
