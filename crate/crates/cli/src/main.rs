use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ratsphere::coloring::{
    hales_straus_color, mod_p_color, parity_class, real_sphere_4color, reduced_two_color,
    sphere_color, Axis,
};
use ratsphere::enumeration::{
    cross_closure, enumerate_sphere_rays, equator_gap, generator_f, generator_f2, orbit,
    DEFAULT_CLOSURE_ROUNDS, DEFAULT_CLOSURE_SIZE,
};
use ratsphere::ks_graph::{
    build_graph, check_valuation, chromatic_coloring, chromatic_number, find_valuation,
    is_proper_coloring, parity_valuation, parse_graph, OrthoGraph,
};
use ratsphere::numerics::Int;
use ratsphere::rays::{
    canonicalize, format_rays, parse_rays, OrientedPoint, PrimitiveVec3, SpherePoint,
};

/// Exact colorings of rational rays and the rational unit sphere.
#[derive(Parser)]
#[command(name = "ratsphere", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color one integer ray. Without flags prints the parity class.
    #[command(allow_negative_numbers = true)]
    Color(ColorArgs),
    /// List every sphere ray of norm at most N with its sphere color.
    Enumerate {
        #[arg(long)]
        max_norm: u64,
    },
    /// Iterate a rotation about the z-axis from (1, 0, 0).
    Density {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "F2")]
        generator: Generator,
        /// Print only the gap ladder 10, 100, ..., K.
        #[arg(long)]
        gaps_only: bool,
    },
    /// Close a seed set under cross products.
    Closure(ClosureArgs),
    /// Decide a valuation or k-coloring of an orthogonality graph.
    Check(CheckArgs),
    /// Color a real direction given by spherical angles.
    #[command(allow_negative_numbers = true)]
    RealColor {
        #[arg(long)]
        theta: f64,
        #[arg(long)]
        phi: f64,
    },
    /// Chromatic number of an orthogonality graph.
    Chromatic {
        #[command(flatten)]
        source: GraphSource,
    },
}

#[derive(Args)]
struct ColorArgs {
    x: Int,
    y: Int,
    z: Int,
    #[arg(long)]
    sphere: bool,
    #[arg(long)]
    parity: bool,
    #[arg(long)]
    hales: bool,
    #[arg(long, value_name = "P")]
    modp: Option<u32>,
    #[arg(long, value_name = "AXIS")]
    reduced: Option<Axis>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Generator {
    #[value(name = "F")]
    F,
    #[value(name = "F2")]
    F2,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ClosureArgs {
    /// Ray file with the seed rays.
    #[arg(long)]
    seeds: Option<PathBuf>,
    /// Extra seed ray `x,y,z`; may be repeated.
    #[arg(long = "seed", value_name = "X,Y,Z")]
    seed: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_CLOSURE_ROUNDS)]
    max_rounds: usize,
    #[arg(long, default_value_t = DEFAULT_CLOSURE_SIZE)]
    max_size: usize,
    /// Also print every generated ray in ray file format.
    #[arg(long)]
    dump: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Graph file with [vertices], [edges] and [triads] sections.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Ray file; edges join orthogonal rays.
    #[arg(long)]
    rays: Option<PathBuf>,
    /// All sphere rays of norm at most N.
    #[arg(long, value_name = "N")]
    sphere_max_norm: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Valuation,
    Chromatic,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value = "valuation")]
    mode: Mode,
    /// Number of colors for chromatic mode.
    #[arg(long, default_value_t = 3)]
    colors: usize,
    /// Verify the parity valuation for this axis instead of searching.
    #[arg(long, value_name = "AXIS", conflicts_with = "colors")]
    parity_axis: Option<Axis>,
}

enum Failure {
    /// Exit code 1.
    Domain(String),
    /// Exit code 2.
    Usage(String),
}

impl From<ratsphere::Error> for Failure {
    fn from(e: ratsphere::Error) -> Self {
        match e {
            ratsphere::Error::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Color(args) => color(args),
        Command::Enumerate { max_norm } => enumerate(max_norm),
        Command::Density {
            k,
            generator,
            gaps_only,
        } => density(k, generator, gaps_only),
        Command::Closure(args) => closure(args),
        Command::Check(args) => check(args),
        Command::RealColor { theta, phi } => real_color(theta, phi),
        Command::Chromatic { source } => chromatic(source),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|()| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn color(args: ColorArgs) -> Outcome {
    let ray = canonicalize(args.x, args.y, args.z)?;
    let mut out = ray.to_string();
    let none = !(args.sphere || args.parity || args.hales)
        && args.modp.is_none()
        && args.reduced.is_none();
    let point = if args.sphere || args.reduced.is_some() {
        Some(SpherePoint::new(ray.clone())?)
    } else {
        None
    };
    if args.sphere {
        let p = point.as_ref().expect("computed for --sphere");
        write!(out, "\tnorm={}\t{}", p.norm(), sphere_color(p)).unwrap();
    }
    if args.parity || none {
        let class = parity_class(&ray);
        write!(out, "\t{}\t#{}", class.label(), class.index()).unwrap();
    }
    if args.hales {
        write!(out, "\t{}", hales_straus_color(&ray)).unwrap();
    }
    if let Some(p) = args.modp {
        let coords: Vec<Int> = ray.coords().into_iter().cloned().collect();
        write!(out, "\tmod{p}={}", mod_p_color(&coords, p)?).unwrap();
    }
    if let Some(axis) = args.reduced {
        let p = point.as_ref().expect("computed for --reduced");
        write!(
            out,
            "\treduced-{axis}={}",
            u8::from(reduced_two_color(p, axis))
        )
        .unwrap();
    }
    out.push('\n');
    Ok(out)
}

fn enumerate(max_norm: u64) -> Outcome {
    if max_norm == 0 {
        return Err(Failure::Usage("--max-norm must be at least 1".into()));
    }
    let points = enumerate_sphere_rays(max_norm)?;
    let mut out = String::new();
    for p in &points {
        let [x, y, z] = p.ray().coords();
        writeln!(out, "{x}\t{y}\t{z}\t{}\t{}", p.norm(), sphere_color(p)).unwrap();
    }
    writeln!(out, "# rays={}", points.len()).unwrap();
    Ok(out)
}

fn density(k: usize, generator: Generator, gaps_only: bool) -> Outcome {
    if k < 2 {
        return Err(Failure::Usage("--k must be at least 2".into()));
    }
    let rot = match generator {
        Generator::F => generator_f(),
        Generator::F2 => generator_f2(),
    };
    let start = OrientedPoint::from_coords(1, 0, 0)?;
    let points = orbit(&rot, &start, k);
    let mut out = String::new();
    if gaps_only {
        let mut step = 10;
        while step < k {
            writeln!(out, "{step}\t{:.9}", equator_gap(&points[..step])?).unwrap();
            step *= 10;
        }
    } else {
        for (j, p) in points.iter().enumerate() {
            let [x, y, z] = p.unit_coordinates();
            writeln!(out, "{j}\t{x}\t{y}\t{z}\t{}", sphere_color(p.point())).unwrap();
        }
    }
    writeln!(out, "{k}\t{:.9}", equator_gap(&points)?).unwrap();
    Ok(out)
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn parse_seed(text: &str) -> Result<PrimitiveVec3, Failure> {
    let bad = || Failure::Usage(format!("--seed expects x,y,z, got {text:?}"));
    let parts: Vec<Int> = text
        .split(',')
        .map(|s| s.trim().parse::<Int>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [x, y, z]: [Int; 3] = parts.try_into().map_err(|_| bad())?;
    canonicalize(x, y, z).map_err(|e| Failure::Usage(format!("--seed {text}: {e}")))
}

fn closure(args: ClosureArgs) -> Outcome {
    let mut seeds = match &args.seeds {
        Some(path) => parse_rays(&read_file(path)?)?,
        None => Vec::new(),
    };
    for s in &args.seed {
        seeds.push(parse_seed(s)?);
    }
    seeds.sort();
    seeds.dedup();
    if seeds.len() < 2 {
        return Err(Failure::Usage(
            "closure needs at least two distinct seed rays".into(),
        ));
    }
    if args.max_size < seeds.len() {
        return Err(Failure::Usage(
            "--max-size is smaller than the seed set".into(),
        ));
    }
    let report = cross_closure(&seeds, args.max_rounds, args.max_size)?;
    let mut out = format!(
        "rounds={}\trays={}\tpythagorean={}\tnon_pythagorean={}\tstop={}\n",
        report.rounds,
        report.generated.len(),
        report.pythagorean_count,
        report.non_pythagorean_count,
        report.stop.name()
    );
    if args.dump {
        out.push_str(&format_rays(&report.generated));
    }
    Ok(out)
}

fn load_graph(source: &GraphSource) -> Result<OrthoGraph, Failure> {
    if let Some(path) = &source.graph {
        Ok(parse_graph(&read_file(path)?)?)
    } else if let Some(path) = &source.rays {
        Ok(build_graph(&parse_rays(&read_file(path)?)?))
    } else {
        let n = source
            .sphere_max_norm
            .expect("clap requires one graph source");
        if n == 0 {
            return Err(Failure::Usage(
                "--sphere-max-norm must be at least 1".into(),
            ));
        }
        let rays: Vec<PrimitiveVec3> = enumerate_sphere_rays(n)?
            .into_iter()
            .map(|p| p.ray().clone())
            .collect();
        Ok(build_graph(&rays))
    }
}

fn witness_lines(g: &OrthoGraph, values: impl Iterator<Item = usize>) -> String {
    let mut out = String::new();
    for (v, value) in g.vertices().iter().zip(values) {
        writeln!(out, "{}\t{value}", v.label()).unwrap();
    }
    out
}

fn check(args: CheckArgs) -> Outcome {
    let g = load_graph(&args.source)?;
    if let Some(axis) = args.parity_axis {
        if matches!(args.mode, Mode::Chromatic) {
            return Err(Failure::Usage(
                "--parity-axis applies to valuation mode".into(),
            ));
        }
        let val = parity_valuation(&g, axis)?;
        let report = check_valuation(&g, &val)?;
        if !report.is_valid() {
            return Err(Failure::Domain(format!(
                "parity valuation for axis {axis} violates {} constraint(s)",
                report.violations.len()
            )));
        }
        return Ok(format!(
            "SAT\n{}",
            witness_lines(&g, val.values().iter().map(|&b| usize::from(b)))
        ));
    }
    match args.mode {
        Mode::Valuation => match find_valuation(&g) {
            Some(val) => {
                if !check_valuation(&g, &val)?.is_valid() {
                    return Err(Failure::Domain(
                        "solver produced an invalid valuation".into(),
                    ));
                }
                Ok(format!(
                    "SAT\n{}",
                    witness_lines(&g, val.values().iter().map(|&b| usize::from(b)))
                ))
            }
            None => Ok("UNSAT\n".into()),
        },
        Mode::Chromatic => match chromatic_coloring(&g, args.colors) {
            Some(colors) => {
                if !is_proper_coloring(&g, &colors) || colors.iter().any(|&c| c >= args.colors) {
                    return Err(Failure::Domain(
                        "solver produced an improper coloring".into(),
                    ));
                }
                Ok(format!(
                    "SAT\n{}",
                    witness_lines(&g, colors.iter().map(|c| c + 1))
                ))
            }
            None => Ok("UNSAT\n".into()),
        },
    }
}

fn chromatic(source: GraphSource) -> Outcome {
    let g = load_graph(&source)?;
    let (k, colors) = chromatic_number(&g);
    if !is_proper_coloring(&g, &colors) {
        return Err(Failure::Domain(
            "solver produced an improper coloring".into(),
        ));
    }
    Ok(format!(
        "chromatic={k}\n{}",
        witness_lines(&g, colors.iter().map(|c| c + 1))
    ))
}

fn real_color(theta: f64, phi: f64) -> Outcome {
    if !theta.is_finite() || !phi.is_finite() {
        return Err(Failure::Usage("--theta and --phi must be finite".into()));
    }
    Ok(format!("{}\n", real_sphere_4color(theta, phi)?))
}
