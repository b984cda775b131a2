use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbifano::intersection::ci_degree;
use orbifano::invariants::{candidate_sieve, format_rat};
use orbifano::lattice::{Int, IntMatrix};
use orbifano::mmp::Mode;
use orbifano::registry::Registry;
use orbifano::svg::render_polygon_svg;
use orbifano::toric::{charts, fan_from_chamber, irrelevant_ideal, nef_cone, omega_for};
use orbifano::tools::{analyze_polygon, mmp_trees, parse_bundle_file, parse_class, parse_vertices, parse_weight_file};
use orbifano::verify::{parse_suites, verify_suites};
use orbifano::polygon::FanoPolygon;

#[derive(Parser)]
#[command(name = "orbifano", version, about = "del Pezzo surfaces with 1/3(1,1) points: checks and tools")]
struct Cli {
    /// Use this registry JSON instead of the embedded one
    #[arg(long, global = true)]
    registry: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Re-verify the registry
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Also write the report as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Fano polygons
    #[command(subcommand)]
    Polygon(PolygonCmd),
    /// Toric varieties from weight matrices
    Toric {
        #[arg(value_enum)]
        what: ToricWhat,
        #[command(flatten)]
        input: WeightsArgs,
    },
    /// Degree of a complete intersection
    Degree {
        #[command(flatten)]
        input: WeightsArgs,
        #[arg(long)]
        bundles: PathBuf,
    },
    /// Directed MMP
    #[command(subcommand)]
    Mmp(MmpCmd),
    /// Candidate (k, K^2) pairs and their fate
    Candidates {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum PolygonCmd {
    Analyze {
        #[arg(long, conflicts_with = "vertices", required_unless_present = "vertices")]
        id: Option<u32>,
        /// "x,y;x,y;..."
        #[arg(long, allow_hyphen_values = true)]
        vertices: Option<String>,
    },
    Render {
        #[arg(long)]
        id: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum MmpCmd {
    Tree {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "curated")]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Raw,
    Curated,
}

#[derive(Clone, Copy, ValueEnum)]
enum ToricWhat {
    Nef,
    Charts,
    Irrelevant,
    Fan,
}

#[derive(Args)]
struct WeightsArgs {
    #[arg(long)]
    weights: PathBuf,
    /// Stability class "a,b,..."; defaults to -K_F minus the bundles
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<String>,
}

/// Input problems exit 2, failed checks exit 1.
enum Failure {
    Input(String),
    Checks,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn load_registry(path: &Option<PathBuf>) -> Result<Registry, Failure> {
    let reg = match path {
        Some(p) => Registry::load(p)?,
        None => Registry::embedded()?,
    };
    Ok(reg)
}

fn show_vec(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))
}

fn weights_and_omega(input: &WeightsArgs, extra: Option<&[Vec<Int>]>) -> Result<(IntMatrix, Vec<Vec<Int>>, Vec<Int>), Failure> {
    let (d, mut bundles) = parse_weight_file(&read(&input.weights)?)?;
    if let Some(extra) = extra {
        bundles.extend(extra.iter().cloned());
    }
    let omega = match &input.omega {
        Some(s) => {
            let w = parse_class(s)?;
            if w.len() != d.rows() {
                return Err(Failure::Input(format!("omega has {} entries, weight matrix has {} rows", w.len(), d.rows())));
            }
            w
        }
        None => omega_for(&d, &bundles),
    };
    Ok((d, bundles, omega))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Verify { suite, json } => {
            let suites = parse_suites(&suite)?;
            let reg = load_registry(&cli.registry)?;
            let report = verify_suites(&reg, &suites);
            print!("{}", report.render_text());
            if let Some(path) = json {
                fs::write(&path, report.to_json() + "\n").map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))?;
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Cmd::Polygon(PolygonCmd::Analyze { id, vertices }) => {
            let reg = load_registry(&cli.registry)?;
            let pts = match (id, vertices) {
                (Some(id), _) => {
                    let p = reg.polygon(id).ok_or_else(|| Failure::Input(format!("no polygon with id {} (1..26)", id)))?;
                    p.vertices.iter().map(|v| (v[0], v[1])).collect()
                }
                (None, Some(s)) => parse_vertices(&s)?,
                (None, None) => return Err(Failure::Input("give --id or --vertices".into())),
            };
            print!("{}", analyze_polygon(&reg, &pts)?.render_text());
            Ok(())
        }
        Cmd::Polygon(PolygonCmd::Render { id, out }) => {
            let reg = load_registry(&cli.registry)?;
            let p = reg.polygon(id).ok_or_else(|| Failure::Input(format!("no polygon with id {} (1..26)", id)))?;
            let pts: Vec<_> = p.vertices.iter().map(|v| (v[0], v[1])).collect();
            let svg = render_polygon_svg(&FanoPolygon::new(&pts)?);
            fs::write(&out, svg).map_err(|e| Failure::Input(format!("{}: {}", out.display(), e)))?;
            Ok(())
        }
        Cmd::Toric { what, input } => {
            let (d, _, omega) = weights_and_omega(&input, None)?;
            match what {
                ToricWhat::Nef => {
                    for r in nef_cone(&d, &omega)?.rays {
                        println!("{}", show_vec(&r));
                    }
                }
                ToricWhat::Irrelevant => {
                    for g in irrelevant_ideal(&d, &omega)? {
                        let m: Vec<String> = g.iter().map(|i| format!("x{}", i)).collect();
                        println!("{}", m.join("*"));
                    }
                }
                ToricWhat::Charts => {
                    for c in charts(&d, &omega)? {
                        let piv: Vec<String> = c.pivots.iter().map(|i| format!("x{}", i)).collect();
                        let kind = match c.cyclic_weights() {
                            Some((n, _)) if n == Int::from(1) => "smooth".to_string(),
                            Some((n, w)) => format!("1/{}{}", n, show_vec(&w)),
                            None => format!("stabilizer {}", c.stabilizer),
                        };
                        println!("U[{}]: {}", piv.join(","), kind);
                    }
                }
                ToricWhat::Fan => {
                    let fan = fan_from_chamber(&d, &omega)?;
                    for i in 0..fan.rays.rows() {
                        println!("ray x{}: {}", i, show_vec(&fan.rays.row(i)));
                    }
                    for c in &fan.cones {
                        let rs: Vec<String> = c.iter().map(|i| format!("x{}", i)).collect();
                        println!("cone {}", rs.join(","));
                    }
                }
            }
            Ok(())
        }
        Cmd::Degree { input, bundles } => {
            let (d, _) = parse_weight_file(&read(&input.weights)?)?;
            let extra = parse_bundle_file(&read(&bundles)?, d.rows())?;
            let (d, all, omega) = weights_and_omega(&input, Some(&extra))?;
            println!("{}", format_rat(&ci_degree(&d, Some(&omega), &all)?));
            Ok(())
        }
        Cmd::Mmp(MmpCmd::Tree { k, mode, json }) => {
            let reg = load_registry(&cli.registry)?;
            let mode = match mode {
                ModeArg::Raw => Mode::Raw,
                ModeArg::Curated => Mode::Curated,
            };
            let trees = mmp_trees(&reg, k, mode)?;
            if json {
                let v: Vec<_> = trees
                    .iter()
                    .map(|(f, t)| serde_json::json!({ "family": f, "tree": t }))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                for (f, t) in &trees {
                    println!("{}", f);
                    print!("{}", t.render_text());
                }
            }
            Ok(())
        }
        Cmd::Candidates { json } => {
            let sieve = candidate_sieve();
            if json {
                let v: Vec<_> = sieve
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "k": c.k, "d": format_rat(&c.d), "sigma_min": c.sigma_min,
                            "sigma_max": c.sigma_max, "verdict": c.verdict.to_string(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!("{:>2} {:>6} {:>9}  verdict", "k", "K^2", "sigma");
                for c in &sieve {
                    println!("{:>2} {:>6} {:>9}  {}", c.k, format_rat(&c.d), format!("[{},{}]", c.sigma_min, c.sigma_max), c.verdict);
                }
            }
            Ok(())
        }
    }
}
