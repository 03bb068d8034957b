use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tutte_polytope::exact::{poly_substitute_tutte, Rational};
use tutte_polytope::face::{
    cayley_vertices, f_vector_json, tutte_f_vector, tutte_vertices, VertexSet,
};
use tutte_polytope::jobs::with_jobs;
use tutte_polytope::polytope::{
    build_hrep, piece_d, points_to_json, simplex_s, vrep_to_text, Family, Point,
};
use tutte_polytope::verify::{
    verify_all, verify_fiber_lemma, verify_refinement, verify_specializations, verify_subdivision,
    verify_triangulation, Report, SampleSettings, DEFAULT_SAMPLES,
};
use tutte_polytope::volume::{
    connected_gf, lattice_and_partition_counts, piece_index, recursion_r, simplex_index,
    z_bruteforce, ConnectedMode, VolumeReport,
};
use tutte_polytope::Error;

#[derive(Parser, Debug)]
#[command(
    name = "tutte",
    version,
    about = "Cayley, Gayley and Tutte polytopes, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for enumeration-heavy commands.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed for sampled points.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
struct PolytopeArgs {
    #[arg(long, default_value = "tutte", value_parser = parse_family)]
    family: Family,

    /// Dimension of the polytope (graphs live on n + 1 nodes).
    #[arg(long)]
    n: usize,

    #[arg(long, default_value = "1/2", value_parser = parse_rational, allow_negative_numbers = true)]
    q: Rational,

    #[arg(long, default_value = "1", value_parser = parse_rational, allow_negative_numbers = true)]
    t: Rational,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Defining inequalities of a family.
    Hrep(PolytopeArgs),
    /// Vertices of every simplex of the triangulation.
    Simplices(PolytopeArgs),
    /// Inequalities of every piece of the coarse subdivision.
    Pieces(PolytopeArgs),
    /// n!-normalized volume, by determinants, closed forms and graph sums.
    Volume {
        #[command(flatten)]
        polytope: PolytopeArgs,
        /// Keep only the polynomials in the parameters the family leaves free.
        #[arg(long)]
        symbolic: bool,
    },
    /// Z and the Tutte polynomial of the complete graph on n + 1 nodes.
    Zpoly {
        #[arg(long)]
        n: usize,
    },
    /// f-vector of the Tutte polytope.
    Fvector {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1/2", value_parser = parse_rational, allow_negative_numbers = true)]
        q: Rational,
        #[arg(long, default_value = "1", value_parser = parse_rational, allow_negative_numbers = true)]
        t: Rational,
    },
    /// Vertices of a family, from their closed forms.
    Vertices(PolytopeArgs),
    /// Partition, refinement, specialization and fiber checks.
    Verify(VerifyArgs),
    /// Connected-graph generating function on n nodes by the recursion.
    Recursion {
        /// Number of nodes.
        #[arg(long)]
        n: usize,
    },
    /// Integer points of the Cayley polytope against binary partitions.
    Cayley1857 {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Run every check for n = 1 .. nmax.
    #[arg(long)]
    all: bool,

    #[arg(long, default_value_t = 4)]
    nmax: usize,

    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,

    #[arg(long)]
    n: Option<usize>,

    #[arg(long, default_value = "1/2", value_parser = parse_rational, allow_negative_numbers = true)]
    q: Rational,

    #[arg(long, default_value = "1", value_parser = parse_rational, allow_negative_numbers = true)]
    t: Rational,

    /// Sample points per partition check.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

/// What a command produced, in both output formats.
struct Output {
    json: Value,
    text: String,
    passed: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            passed: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs;
    let seed = cli.seed;
    let result = with_jobs(jobs, move || run(cli.command, seed)).and_then(|r| r);
    match result {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => {
                    let mut s =
                        serde_json::to_string_pretty(&out.json).expect("json values serialize");
                    s.push('\n');
                    s
                }
                Format::Text => out.text,
            };
            let written = match &cli.output {
                Some(path) => fs::write(path, body),
                None => io::stdout().write_all(body.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ParameterDomain(_) | Error::NodeCountOutOfRange { .. } => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(command: Command, seed: u64) -> Result<Output, Error> {
    match command {
        Command::Hrep(a) => {
            let h = build_hrep(a.family, a.n, &a.q, &a.t)?;
            Ok(Output::new(h.to_json(), h.to_text()))
        }
        Command::Simplices(a) => simplices(&a),
        Command::Pieces(a) => pieces(&a),
        Command::Volume {
            polytope: a,
            symbolic,
        } => {
            let r = VolumeReport::compute(a.family, a.n, &a.q, &a.t, symbolic)?;
            let mut text = format!(
                "family: {}\nn: {}\nclosed form: {}\npieces: {}\ngraph sum: {}\n",
                a.family, a.n, r.by_closed_form, r.by_piece_closed_form, r.by_graph_sum
            );
            if let Some(d) = &r.by_determinant {
                text.push_str(&format!("determinant: {d}\n"));
            }
            let mut out = Output::new(r.to_json(), text);
            out.passed = r.consistent();
            Ok(out)
        }
        Command::Zpoly { n } => {
            let z = z_bruteforce(n + 1)?;
            let tutte = poly_substitute_tutte(&z, n + 1)?;
            let text = format!("Z: {z}\nT: {}\n", tutte.named("x", "y"));
            Ok(Output::new(
                json!({ "n": n, "nodes": n + 1, "z": z.to_json(), "tutte": tutte.to_json() }),
                text,
            ))
        }
        Command::Fvector { n, q, t } => {
            let f = tutte_f_vector(n, &q, &t)?;
            let parts: Vec<String> = f.iter().map(ToString::to_string).collect();
            Ok(Output::new(
                f_vector_json(n, &q, &t, &f),
                parts.join(" ") + "\n",
            ))
        }
        Command::Vertices(a) => {
            let points = family_vertices(&a)?;
            Ok(Output::new(
                points_to_json(&points),
                vrep_to_text(a.n, &points),
            ))
        }
        Command::Verify(v) => verify(&v, seed),
        Command::Recursion { n } => {
            let f = connected_gf(n, ConnectedMode::Recursion)?;
            let r = recursion_r(n.saturating_sub(1));
            let text = format!("F_{n}: {f}\n");
            Ok(Output::new(
                json!({
                    "n": n,
                    "connected": f.to_json(),
                    "r": r.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
                }),
                text,
            ))
        }
        Command::Cayley1857 { n } => {
            let (lattice, partitions) = lattice_and_partition_counts(n)?;
            let text = format!("lattice points: {lattice}\npartitions: {partitions}\n");
            let mut out = Output::new(
                json!({
                    "n": n,
                    "lattice_points": big_json(&lattice),
                    "partitions": big_json(&partitions),
                }),
                text,
            );
            out.passed = lattice == partitions;
            Ok(out)
        }
    }
}

/// Small counts as JSON numbers, larger ones as decimal strings.
fn big_json(v: &impl ToString) -> Value {
    let digits = v.to_string();
    match digits.parse::<u64>() {
        Ok(small) => json!(small),
        Err(_) => json!(digits),
    }
}

fn family_vertices(a: &PolytopeArgs) -> Result<Vec<Point>, Error> {
    a.family.check_parameters(a.n, &a.q, &a.t)?;
    let set: Option<VertexSet> = match a.family {
        Family::Tutte if a.q < Rational::one() => Some(tutte_vertices(a.n, &a.q, &a.t)?),
        Family::TCayley => Some(cayley_vertices(a.n, &a.t)?),
        Family::Cayley => Some(cayley_vertices(a.n, &Rational::one())?),
        _ => None,
    };
    Ok(match set {
        Some(s) => s.points,
        // at q = 1 the polytope is an orthoscheme, small enough to solve for
        None => build_hrep(a.family, a.n, &a.q, &a.t)?.vertices(),
    })
}

fn simplices(a: &PolytopeArgs) -> Result<Output, Error> {
    a.family.check_parameters(a.n, &a.q, &a.t)?;
    let (qc, tc) = a.family.construction_parameters(&a.q, &a.t);
    let mut entries = Vec::new();
    let mut text = String::new();
    for f in simplex_index(a.family, a.n)? {
        let s = simplex_s(&f, &qc, &tc)?;
        entries.push(json!({
            "forest": f.to_string(),
            "vertices": points_to_json(s.vertices()),
            "normalized_volume": s.normalized_volume().to_string(),
        }));
        text.push_str(&format!("# {f}\n{}", vrep_to_text(a.n, s.vertices())));
    }
    Ok(Output::new(Value::Array(entries), text))
}

fn pieces(a: &PolytopeArgs) -> Result<Output, Error> {
    a.family.check_parameters(a.n, &a.q, &a.t)?;
    let (qc, tc) = a.family.construction_parameters(&a.q, &a.t);
    let mut entries = Vec::new();
    let mut text = String::new();
    for f in piece_index(a.family, a.n)? {
        let h = piece_d(&f, &qc, &tc)?;
        entries.push(json!({ "shape": f.to_string(), "hrep": h.to_json() }));
        text.push_str(&format!("# {f}\n{}", h.to_text()));
    }
    Ok(Output::new(Value::Array(entries), text))
}

fn verify(v: &VerifyArgs, seed: u64) -> Result<Output, Error> {
    let settings = SampleSettings {
        points: v.samples,
        seed,
    };
    let reports: Vec<Report> = if v.all {
        verify_all(v.nmax, &v.q, &v.t, settings)?
    } else {
        let n =
            v.n.ok_or_else(|| Error::ParameterDomain("verify needs --all or --n".into()))?;
        match v.family {
            Some(family) => vec![
                verify_triangulation(family, n, &v.q, &v.t, settings)?,
                verify_subdivision(family, n, &v.q, &v.t, settings)?,
                verify_refinement(family, n, &v.q, &v.t)?,
            ],
            None => vec![verify_specializations(n, &v.t)?, verify_fiber_lemma(n + 1)?],
        }
    };
    let mut text = String::new();
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let family = r.family.map_or(String::new(), |f| format!(" {f}"));
        text.push_str(&format!("{status} {}{family} n={}\n", r.theorem, r.n));
        for c in r.failures() {
            text.push_str(&format!("  {}: {}\n", c.name, c.detail));
        }
    }
    let passed = reports.iter().all(Report::passed);
    let json = json!({
        "passed": passed,
        "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
    });
    let mut out = Output::new(json, text);
    out.passed = passed;
    Ok(out)
}
