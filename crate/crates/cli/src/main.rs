use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use specgraph_core::cospectral::{
    adjacency_cospectral_pairs, build_database, find_mates, neumann_pencil, SignatureDatabase,
};
use specgraph_core::exactpoly::{isolate_real_roots, laplacian_pencil_poly, monic};
use specgraph_core::graph::{
    canonical_form, parse_graph6, write_graph6, BoundarySpec, Family, Graph, GraphClass,
};
use specgraph_core::inverse::{
    identify_graph, rationalize, solve_caterpillar, solve_decorated_triangle, solve_double_star,
    FamilyKind, FamilySolution, IDENTIFY_DELTA,
};
use specgraph_core::secular::{roots_to_csv, scan_eigenvalues, PiecewisePotential};
use specgraph_core::spectra::quantum_spectrum;

mod reproduce;

/// Spectral toolkit for equilateral quantum graphs.
#[derive(Parser, Debug)]
#[command(name = "specgraph", version)]
struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every connected graph (or tree) on p vertices in graph6, canonical and sorted.
    Enumerate {
        /// Vertex count (at most 8, or 10 with --trees).
        #[arg(long)]
        p: usize,
        /// Trees only.
        #[arg(long)]
        trees: bool,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pencil polynomial det(zD - A) of the interior subgraph, integer and monic.
    Poly {
        #[command(flatten)]
        graph: GraphArgs,
        /// Output format.
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Closed-form zero-potential spectrum.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        /// Edge length.
        #[arg(long, default_value_t = 1.0)]
        l: f64,
        /// Number of eigenvalues, counted with multiplicity.
        #[arg(long = "K", value_name = "K")]
        k: usize,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalues from a scan of the secular determinant.
    Secular {
        #[command(flatten)]
        graph: GraphArgs,
        /// Edge length.
        #[arg(long, default_value_t = 1.0)]
        l: f64,
        /// Window in lambda, as LO,HI.
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        range: (f64, f64),
        /// Grid step in sign(lambda) sqrt|lambda|.
        #[arg(long)]
        grid: Option<f64>,
        /// Edge potential, e.g. piecewise:1/4:0,1/2:5,1/4:0 or zero.
        #[arg(long, default_value = "zero")]
        potential: PiecewisePotential,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Signature databases and cospectral mates.
    #[command(subcommand)]
    Cospectral(CospectralCommand),
    /// Graph recovery from spectra and family solvers.
    #[command(subcommand)]
    Inverse(InverseCommand),
    /// Run acceptance experiments and report measured against expected values.
    Reproduce {
        /// AC-1 .. AC-10 or all.
        id: String,
        /// Directory for reusable signature databases.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum CospectralCommand {
    /// Build a signature database.
    Build {
        /// Largest vertex count.
        #[arg(long)]
        p: usize,
        /// Smallest vertex count (default: p).
        #[arg(long)]
        p_min: Option<usize>,
        /// Trees only.
        #[arg(long)]
        trees: bool,
        /// Database file (JSON lines).
        #[arg(long)]
        out: PathBuf,
    },
    /// Print every bucket holding two or more graphs.
    Mates {
        /// Database file written by `cospectral build`.
        #[arg(long)]
        db: PathBuf,
    },
    /// Nonisomorphic pairs with equal adjacency characteristic polynomials.
    AdjacencyPairs {
        /// Vertex count.
        #[arg(long)]
        p: usize,
        /// Trees only.
        #[arg(long)]
        trees: bool,
    },
}

#[derive(Subcommand, Debug)]
enum InverseCommand {
    /// Match an eigenvalue list against a database (Neumann, zero potential).
    Identify {
        /// CSV with a lambda column (and optional multiplicity), or one value per line.
        #[arg(long)]
        eigs: PathBuf,
        /// Edge length.
        #[arg(long, default_value_t = 1.0)]
        l: f64,
        /// Database file written by `cospectral build`.
        #[arg(long)]
        db: PathBuf,
        /// Eigenvalues to compare (default: all given).
        #[arg(long)]
        k: Option<usize>,
        /// Matching tolerance scale.
        #[arg(long, default_value_t = IDENTIFY_DELTA)]
        delta: f64,
    },
    /// Solve the integer system of a leaf-decorated family.
    Family {
        /// double-star, caterpillar or decorated-triangle.
        kind: FamilyKind,
        /// Sum of the interior degrees.
        #[arg(long)]
        s: usize,
        /// cos^2 of the offset (double-star, caterpillar), e.g. 5/12 or 0.0625.
        #[arg(
            long,
            required_unless_present = "tau_prod",
            conflicts_with = "tau_prod"
        )]
        cos2: Option<String>,
        /// Product of the cubic's roots up to sign (decorated-triangle).
        #[arg(long)]
        tau_prod: Option<String>,
        /// Snap the value to the nearest fraction with denominator at most this.
        #[arg(long)]
        max_den: Option<u64>,
    },
}

#[derive(Args, Debug)]
#[group(skip)]
#[command(group(ArgGroup::new("input").required(true).args(["family", "graph6"])))]
struct GraphArgs {
    /// Family member, e.g. cycle:3 or double-star:2,3.
    #[arg(long)]
    family: Option<Family>,
    /// Graph in graph6.
    #[arg(long)]
    graph6: Option<String>,
    /// Dirichlet pendant vertices: "all" or a comma list (others Neumann).
    #[arg(long)]
    dirichlet: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
}

/// Failures after argument parsing: exit code 1.
#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return match say(&e.render().to_string()) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(_) => ExitCode::from(1),
                };
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                eprint!("{e}");
                return ExitCode::from(2);
            }
            // first paragraph of clap's message on one line
            let text = e.render().to_string();
            let first: Vec<&str> = text
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(str::trim)
                .collect();
            eprintln!("{}", first.join(" "));
            return ExitCode::from(2);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
        {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Enumerate { p, trees, out } => {
            let class = if trees {
                GraphClass::TreesOnly
            } else {
                GraphClass::AllConnected
            };
            let mut lines: Vec<String> = class
                .enumerate(p)?
                .iter()
                .map(|g| write_graph6(&canonical_form(g)))
                .collect();
            lines.sort();
            let mut text = lines.join("\n");
            text.push('\n');
            emit(out.as_deref(), &text)
        }
        Command::Poly { graph, format } => poly(&graph, format),
        Command::Spectrum {
            graph,
            l,
            k,
            format,
            out,
        } => {
            let (g, bc) = graph.resolve()?;
            let slice = quantum_spectrum(&g, &bc, l, k)?;
            let text = match format {
                Format::Csv => slice.to_csv(),
                Format::Json => serde_json::to_string_pretty(&slice)? + "\n",
                Format::Text => slice
                    .sqrt_eigenvalues()
                    .iter()
                    .map(|x| format!("{:.16e}\n", x * x))
                    .collect(),
            };
            emit(out.as_deref(), &text)
        }
        Command::Secular {
            graph,
            l,
            range,
            grid,
            potential,
            out,
        } => {
            let (g, bc) = graph.resolve()?;
            let roots = scan_eigenvalues(&g, &bc, &potential, l, range, grid)?;
            emit(out.as_deref(), &roots_to_csv(&roots))
        }
        Command::Cospectral(c) => cospectral(c),
        Command::Inverse(c) => inverse(c),
        Command::Reproduce { id, cache } => {
            let ids = match reproduce::select(&id) {
                Some(ids) => ids,
                None => {
                    eprintln!("error: unknown criterion '{id}' (expected AC-1 .. AC-10 or all)");
                    return Ok(ExitCode::from(2));
                }
            };
            let mut failed = 0;
            for id in ids {
                let report = reproduce::run(id, cache.as_deref());
                say(&format!("{report}\n"))?;
                failed += usize::from(!report.passed);
            }
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))?
        }
        None => say(text)?,
    }
    Ok(ExitCode::SUCCESS)
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn say(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        r => Ok(r?),
    }
}

impl GraphArgs {
    fn resolve(&self) -> Result<(Graph, BoundarySpec), Failure> {
        let g = match (&self.family, &self.graph6) {
            (Some(f), _) => f.build()?,
            (None, Some(s)) => parse_graph6(s)?,
            (None, None) => unreachable!("clap requires one input"),
        };
        let bc = match self.dirichlet.as_deref() {
            None => BoundarySpec::neumann(),
            Some("all") => BoundarySpec::dirichlet(&g),
            Some(list) => {
                let vs = list
                    .split(',')
                    .map(|v| v.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| Failure(format!("--dirichlet: {e}")))?;
                BoundarySpec::with_dirichlet(&g, &vs)?
            }
        };
        Ok((g, bc))
    }
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or("expected LO,HI")?;
    let lo = a.trim().parse::<f64>().map_err(|e| e.to_string())?;
    let hi = b.trim().parse::<f64>().map_err(|e| e.to_string())?;
    Ok((lo, hi))
}

/// Exact value of "p/q", an integer, or a finite decimal.
fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|e| e.to_string())?;
        let d = BigInt::from_str(d.trim()).map_err(|e| e.to_string())?;
        if d == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        return Ok(BigRational::new(n, d));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.chars().any(|c| !c.is_ascii_digit()) {
        return Err(format!("not a rational number: {s}"));
    }
    let digits = format!("{int}{frac}");
    let n = BigInt::from_str(&digits).map_err(|_| format!("not a rational number: {s}"))?;
    Ok(BigRational::new(n, BigInt::from(10).pow(frac.len() as u32)))
}

fn poly(args: &GraphArgs, format: PolyFormat) -> Outcome {
    let (g, bc) = args.resolve()?;
    let sub = g.interior_subgraph(&bc)?;
    let pencil = laplacian_pencil_poly(&sub.graph, &sub.degrees)?;
    let monic = monic(&pencil)?;
    let one = BigRational::from(BigInt::from(1));
    let roots = isolate_real_roots(&pencil, &-one.clone(), &one)?;
    let text = match format {
        PolyFormat::Json => {
            let v = json!({
                "graph6": write_graph6(&g),
                "p": g.p(),
                "g": g.g(),
                "pencil": pencil,
                "monic": monic,
                "roots": roots,
            });
            serde_json::to_string_pretty(&v)? + "\n"
        }
        PolyFormat::Text => {
            let mut s = format!("pencil: {pencil}\nmonic: {monic}\nroots:\n");
            for r in roots.iter() {
                let _ = writeln!(s, "  {:.15} (multiplicity {})", r.approx, r.multiplicity);
            }
            s
        }
    };
    emit(None, &text)
}

fn cospectral(c: CospectralCommand) -> Outcome {
    match c {
        CospectralCommand::Build {
            p,
            p_min,
            trees,
            out,
        } => {
            let class = if trees {
                GraphClass::TreesOnly
            } else {
                GraphClass::AllConnected
            };
            let db = build_database(p_min.unwrap_or(p), p, class)?;
            db.save(&out)?;
            eprintln!(
                "{} graphs in {} buckets written to {}",
                db.graph_count(),
                db.bucket_count(),
                out.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        CospectralCommand::Mates { db } => {
            let db = SignatureDatabase::load(&db)?;
            let mut text = String::new();
            for (key, graphs) in find_mates(&db) {
                let v = json!({
                    "p": key.p,
                    "g": key.g,
                    "monic": key.monic.to_string(),
                    "graphs": graphs.iter().map(|l| l.as_str()).collect::<Vec<_>>(),
                });
                text += &(v.to_string() + "\n");
            }
            emit(None, &text)
        }
        CospectralCommand::AdjacencyPairs { p, trees } => {
            let class = if trees {
                GraphClass::TreesOnly
            } else {
                GraphClass::AllConnected
            };
            let mut text = String::new();
            for (a, b) in adjacency_cospectral_pairs(p, class)? {
                let pa = neumann_pencil(&a.to_graph())?;
                let pb = neumann_pencil(&b.to_graph())?;
                let v = json!({
                    "graphs": [a.as_str(), b.as_str()],
                    "pencils": [pa.to_string(), pb.to_string()],
                });
                text += &(v.to_string() + "\n");
            }
            emit(None, &text)
        }
    }
}

fn inverse(c: InverseCommand) -> Outcome {
    match c {
        InverseCommand::Identify {
            eigs,
            l,
            db,
            k,
            delta,
        } => {
            let text = fs::read_to_string(&eigs)
                .map_err(|e| Failure(format!("{}: {e}", eigs.display())))?;
            let values =
                read_eigenvalues(&text).map_err(|e| Failure(format!("{}: {e}", eigs.display())))?;
            let db = SignatureDatabase::load(&db)?;
            let k = k.unwrap_or(values.len()).min(values.len());
            let hits = identify_graph(&values, l, &db, k, delta)?;
            let v = json!({
                "compared": k,
                "candidates": hits.iter().map(|l| l.as_str()).collect::<Vec<_>>(),
            });
            say(&(serde_json::to_string_pretty(&v)? + "\n"))?;
            Ok(if hits.is_empty() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        InverseCommand::Family {
            kind,
            s,
            cos2,
            tau_prod,
            max_den,
        } => {
            let (flag, raw) = match (&cos2, &tau_prod) {
                (Some(c), _) => ("--cos2", c.as_str()),
                (None, Some(t)) => ("--tau-prod", t.as_str()),
                (None, None) => unreachable!("clap requires one value"),
            };
            let mut value = parse_rational(raw).map_err(|e| Failure(format!("{flag}: {e}")))?;
            let mut snapped = None;
            if let Some(max_den) = max_den {
                let x: f64 = raw
                    .trim()
                    .parse()
                    .map_err(|_| Failure(format!("--max-den needs a decimal {flag}, got {raw}")))?;
                let a = rationalize(x, max_den)?;
                snapped = Some(a.error);
                value = a.value;
            }
            let solution: FamilySolution = match (kind, flag) {
                (FamilyKind::DecoratedTriangle, "--tau-prod") => {
                    solve_decorated_triangle(s, &value)
                }
                (FamilyKind::DecoratedTriangle, _) => {
                    return Err(Failure("decorated-triangle takes --tau-prod".into()))
                }
                (_, "--tau-prod") => return Err(Failure(format!("{kind} takes --cos2"))),
                (FamilyKind::DoubleStar, _) => solve_double_star(s, &value),
                (FamilyKind::Caterpillar, _) => solve_caterpillar(s, &value),
            };
            let mut v: Value = serde_json::to_value(&solution)?;
            v["input"] = json!({ "s": s, "value": value.to_string(), "snap_error": snapped });
            v["graphs"] = json!(solution
                .graphs()
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>());
            say(&(serde_json::to_string_pretty(&v)? + "\n"))?;
            Ok(if solution.solutions.is_empty() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

/// Eigenvalues from a spectrum CSV (lambda and multiplicity columns) or a
/// plain list with one value per line.
fn read_eigenvalues(text: &str) -> Result<Vec<f64>, String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty()).peekable();
    let header: Option<Vec<String>> = lines.peek().and_then(|first| {
        let cells: Vec<String> = first
            .split(',')
            .map(|c| c.trim().to_ascii_lowercase())
            .collect();
        cells
            .iter()
            .any(|c| c.parse::<f64>().is_err())
            .then_some(cells)
    });
    let (col, mult) = match &header {
        Some(cells) => {
            lines.next();
            let col = cells
                .iter()
                .position(|c| c == "lambda")
                .ok_or("no lambda column in header")?;
            (col, cells.iter().position(|c| c == "multiplicity"))
        }
        None => (0, None),
    };
    let mut out = Vec::new();
    for (i, line) in lines.enumerate() {
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        let cell = |j: usize| {
            cells
                .get(j)
                .copied()
                .ok_or(format!("row {}: missing column", i + 1))
        };
        let x: f64 = cell(col)?
            .parse()
            .map_err(|e| format!("row {}: {e}", i + 1))?;
        let m: usize = match mult {
            Some(j) => cell(j)?
                .parse()
                .map_err(|e| format!("row {}: {e}", i + 1))?,
            None => 1,
        };
        out.extend(std::iter::repeat_n(x, m));
    }
    Ok(out)
}
