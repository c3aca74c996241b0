use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kirchhoff::edgelist::{from_edge_list, to_edge_list};
use kirchhoff::generators::{generate, FamilySpec};
use kirchhoff::report::{self, Format, Report};
use kirchhoff::{Error, Graph};

#[derive(Parser)]
#[command(
    name = "kirchhoff",
    version,
    about = "Additive degree-Kirchhoff index and its bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Tsv,
    Json,
    Markdown,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Tsv => Format::Tsv,
            OutputFormat::Json => Format::Json,
            OutputFormat::Markdown => Format::Markdown,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Path,
    Cycle,
    Star,
    CompleteBipartite,
    Circulant,
    Biregular,
    Sun,
    FullBinaryTree,
    LeafPathTree,
    Lollipop,
    Barbell,
}

#[derive(Args)]
struct Output {
    /// Write to FILE instead of stdout
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph as an edge list
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        n1: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        n2: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
        /// Circulant offsets, comma separated
        #[arg(long, value_delimiter = ',')]
        offsets: Vec<usize>,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Exact R, R* and R+ from effective resistances
    Exact {
        #[arg(short, long, value_name = "FILE")]
        input: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate every bound in the catalog
    Bounds {
        #[arg(short, long, value_name = "FILE")]
        input: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Check the exact identities between R+, R*, hitting times and the spectrum
    Verify {
        #[arg(short, long, value_name = "FILE")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Recompute the published comparison tables
    Reproduce {
        #[arg(long, default_value = "all", value_parser = ["1", "2", "3", "4", "all"])]
        table: String,
        #[command(flatten)]
        out: Output,
    },
    /// Best bounds and exact R+ side by side for several graphs
    Compare {
        #[arg(short, long = "input", value_name = "FILE", required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
}

fn require(name: &str, v: Option<usize>) -> Result<usize, Error> {
    v.ok_or_else(|| Error::Usage(format!("--{name} is required for this family")))
}

#[allow(clippy::too_many_arguments)]
fn family_spec(
    family: Family,
    n: Option<usize>,
    r: Option<usize>,
    s: Option<usize>,
    n1: Option<usize>,
    a: Option<usize>,
    n2: Option<usize>,
    b: Option<usize>,
    depth: Option<usize>,
    offsets: Vec<usize>,
) -> Result<FamilySpec, Error> {
    let n_ = || require("n", n);
    Ok(match family {
        Family::Complete => FamilySpec::Complete(n_()?),
        Family::Path => FamilySpec::Path(n_()?),
        Family::Cycle => FamilySpec::Cycle(n_()?),
        Family::Star => FamilySpec::Star(n_()?),
        Family::CompleteBipartite => {
            FamilySpec::CompleteBipartite(require("r", r)?, require("s", s)?)
        }
        Family::Circulant => FamilySpec::Circulant { n: n_()?, offsets },
        Family::Biregular => FamilySpec::BiregularBipartite {
            n1: require("n1", n1)?,
            a: require("a", a)?,
            n2: require("n2", n2)?,
            b: require("b", b)?,
        },
        Family::Sun => FamilySpec::Sun(n_()?),
        Family::FullBinaryTree => FamilySpec::FullBinaryTree(require("depth", depth)?),
        Family::LeafPathTree => FamilySpec::LeafPathTree(require("depth", depth)?),
        Family::Lollipop => FamilySpec::Lollipop(n_()?),
        Family::Barbell => FamilySpec::BarbellThirds(n_()?),
    })
}

fn read_graph(input: Option<&Path>) -> Result<(String, Graph), Error> {
    let (name, text) = match input {
        Some(p) if p != Path::new("-") => (p.display().to_string(), fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            ("stdin".to_string(), s)
        }
    };
    let g = from_edge_list(&text)?;
    Ok((name, g))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit(report: &Report, out: &Output) -> Result<(), Error> {
    write_out(out.output.as_deref(), &report.render(out.format.into())?)
}

/// Exit status: 0 ok, 1 verification or reproduction failure.
fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Gen {
            family,
            n,
            r,
            s,
            n1,
            a,
            n2,
            b,
            depth,
            offsets,
            output,
        } => {
            let spec = family_spec(family, n, r, s, n1, a, n2, b, depth, offsets)?;
            let g = generate(&spec)?;
            write_out(
                output.as_deref(),
                &format!("# {spec}\n{}", to_edge_list(&g)),
            )?;
            Ok(0)
        }
        Command::Exact { input, out } => {
            let (name, g) = read_graph(input.as_deref())?;
            emit(&report::exact_report(&name, &g)?, &out)?;
            Ok(0)
        }
        Command::Bounds { input, out } => {
            let (name, g) = read_graph(input.as_deref())?;
            emit(&report::bounds_report(&name, &g)?, &out)?;
            Ok(0)
        }
        Command::Verify { input, tol, out } => {
            let (name, g) = read_graph(input.as_deref())?;
            let rep = report::verify_report(&name, &g, tol)?;
            emit(&rep, &out)?;
            Ok(u8::from(rep.verification_failed()))
        }
        Command::Reproduce { table, out } => {
            let selector = match table.as_str() {
                "all" => None,
                t => Some(
                    t.parse()
                        .map_err(|_| Error::Usage(format!("bad table {t:?}")))?,
                ),
            };
            let rep = report::reproduce(selector)?;
            emit(&rep, &out)?;
            Ok(u8::from(rep.reproduction_failed()))
        }
        Command::Compare { inputs, out } => {
            let graphs = inputs
                .iter()
                .map(|p| read_graph(Some(p)))
                .collect::<Result<Vec<_>, _>>()?;
            emit(&report::compare_report(&graphs)?, &out)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Graph(_) | Error::Usage(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
