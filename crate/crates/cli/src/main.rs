//! Command-line front end: build and export complexes, query faces by
//! direction, run verifications, analyze linkages, render figures.
//!
//! Exit codes: 0 on success and passing verifications, 1 on verification
//! failures and domain errors, 2 on usage errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use cyclop_core::{
    build_complex, build_moduli_complex, face, face_scene, face_vertices, project_cp4,
    project_cp4_perturbed, rat, render_svg, representative_direction, surface_report,
    verify_embedding, verify_theorem1, CyclicPartition, Direction, Error, Linkage, Scene,
};

#[derive(Parser)]
#[command(
    name = "cyclop",
    version,
    about = "Exact engine for the cyclopermutohedron"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the cell complex and report on it.
    Complex {
        /// Ground-set size (at least 4).
        #[arg(long)]
        m: usize,
        #[command(subcommand)]
        action: ComplexAction,
    },
    /// Compute the face of the virtual polytope in a direction.
    Face(FaceArgs),
    /// Run a verification.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Build and inspect the moduli complex of a polygonal linkage.
    Linkage(LinkageArgs),
    /// Render a planar scene as SVG.
    Render(RenderArgs),
}

#[derive(Subcommand)]
enum ComplexAction {
    /// Print the f-vector.
    Fvector {
        #[arg(long)]
        json: bool,
    },
    /// Print the Euler characteristic.
    Euler {
        #[arg(long)]
        json: bool,
    },
    /// Serialize the complex.
    Export {
        /// Output format: "json" or "dot".
        #[arg(long)]
        format: String,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct FaceArgs {
    /// Ground-set size; must equal the coordinate count plus one.
    #[arg(long)]
    m: usize,
    /// Direction as comma-separated rationals, e.g. "7,3,2,0" or "7/2,3,2,0".
    #[arg(long)]
    xi: String,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// Exhaustive face-lattice isomorphism check plus sampled directions.
    Theorem1 {
        #[arg(long)]
        m: usize,
        /// Random direction samples for the backward check.
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Sampling seed; fixed default keeps runs reproducible.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct LinkageArgs {
    /// Edge lengths as comma-separated rationals, e.g. "1,1,1,1,1".
    #[arg(long)]
    lengths: String,
    /// Additional report: "surface" (five edges only).
    #[arg(long)]
    report: Option<String>,
    /// Export the moduli complex: "json" or "dot".
    #[arg(long)]
    export: Option<String>,
    /// Output path for --export; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// What to draw: "cp4" or "face".
    #[arg(long)]
    what: String,
    /// Ground-set size for --what face (4 or 5).
    #[arg(long)]
    m: Option<usize>,
    /// Cell label for --what face, e.g. "[1]|[2,5]|[3]|[4]".
    #[arg(long)]
    label: Option<String>,
    /// Tilt the inverted generators of cp4 by this rational.
    #[arg(long)]
    perturb: Option<String>,
    /// Output SVG path.
    #[arg(short, long)]
    output: PathBuf,
}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Complex { m, action } => run_complex(m, action),
        Command::Face(args) => run_face(args),
        Command::Verify { what } => run_verify(what),
        Command::Linkage(args) => run_linkage(args),
        Command::Render(args) => run_render(args),
    }
}

fn run_complex(m: usize, action: ComplexAction) -> Result<ExitCode, Error> {
    let complex = build_complex(m)?;
    match action {
        ComplexAction::Fvector { json } => {
            let f = complex.f_vector();
            if json {
                print_json(&json!({ "m": m, "f": f }));
            } else {
                println!(
                    "{}",
                    f.iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
        }
        ComplexAction::Euler { json } => {
            let chi = complex.euler_characteristic();
            if json {
                print_json(&json!({ "m": m, "euler": chi }));
            } else {
                println!("{chi}");
            }
        }
        ComplexAction::Export { format, output } => {
            let bytes = complex.export(&format)?;
            write_output(output.as_deref(), &bytes)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_face(args: FaceArgs) -> Result<ExitCode, Error> {
    let xi: Direction = args.xi.parse()?;
    if xi.m() != args.m {
        return Err(Error::GroundSetMismatch {
            expected: args.m,
            got: xi.m(),
        });
    }
    let vf = face(&xi)?;
    let vertices: Vec<_> = face_vertices(&xi)?.into_iter().collect();
    if args.json {
        let report = json!({
            "label": vf.label.to_string(),
            "dim": vf.dim,
            "diagonal": vf.is_diagonal(),
            "translation": vf.translation.0.iter().map(rat::rat_string).collect::<Vec<_>>(),
            "q_segments": vf.positive_segments.iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(),
            "r_segments": vf.negative_segments,
            "vertices": vertices.iter()
                .map(|v| v.as_ints().expect("face vertices are integral"))
                .collect::<Vec<_>>(),
        });
        print_json(&report);
    } else {
        println!("label: {}", vf.label);
        println!("dim: {}", vf.dim);
        println!("diagonal: {}", vf.is_diagonal());
        println!("translation: {}", vf.translation);
        let q = vf
            .positive_segments
            .iter()
            .map(|(i, j)| format!("q_{i}{j}"))
            .collect::<Vec<_>>();
        println!(
            "q_segments: {}",
            if q.is_empty() {
                "-".into()
            } else {
                q.join(" ")
            }
        );
        let r = vf
            .negative_segments
            .iter()
            .map(|i| format!("r_{i}"))
            .collect::<Vec<_>>();
        println!(
            "r_segments: {}",
            if r.is_empty() {
                "-".into()
            } else {
                r.join(" ")
            }
        );
        println!(
            "vertices: {}",
            vertices
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(what: VerifyWhat) -> Result<ExitCode, Error> {
    match what {
        VerifyWhat::Theorem1 {
            m,
            samples,
            seed,
            json,
        } => {
            let report = verify_theorem1(m, samples, seed)?;
            if json {
                print_json(&report.to_json());
            } else {
                println!("{}", report.summary());
                for (label, what) in &report.failures {
                    println!("FAIL {label}: {what}");
                }
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn run_linkage(args: LinkageArgs) -> Result<ExitCode, Error> {
    let lengths = args
        .lengths
        .split(',')
        .map(rat::parse_rat)
        .collect::<Result<Vec<_>, _>>()?;
    let linkage = Linkage::new(lengths)?;
    let moduli = build_moduli_complex(&linkage)?;
    let embedding = verify_embedding(&linkage)?;

    if let Some(format) = &args.export {
        let bytes = moduli.export(format)?;
        write_output(args.output.as_deref(), &bytes)?;
        return Ok(ExitCode::SUCCESS);
    }

    let surface = match args.report.as_deref() {
        None => None,
        Some("surface") => Some(surface_report(&linkage)?),
        Some(other) => return Err(Error::UnsupportedFormat(other.to_string())),
    };

    if args.json {
        let mut value = json!({
            "m": linkage.m(),
            "lengths": linkage.lengths().iter().map(rat::rat_string).collect::<Vec<_>>(),
            "f": moduli.f_vector(),
            "euler": moduli.euler_characteristic(),
            "embedding_ok": embedding.passed(),
        });
        if let Some(surface) = &surface {
            value["surface"] = surface.to_json();
        }
        print_json(&value);
    } else {
        println!("m: {}", linkage.m());
        println!(
            "f: {}",
            moduli
                .f_vector()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
        println!("euler: {}", moduli.euler_characteristic());
        println!(
            "embedding: {}",
            if embedding.passed() { "ok" } else { "FAILED" }
        );
        if let Some(surface) = &surface {
            println!("pseudo_manifold: {}", surface.pseudo_manifold);
            println!("links_are_circles: {}", surface.links_are_circles);
            println!("connected: {}", surface.connected);
            println!("closed_surface: {}", surface.is_closed_surface());
        }
    }
    Ok(if embedding.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_render(args: RenderArgs) -> Result<ExitCode, Error> {
    let scene: Scene = match args.what.as_str() {
        "cp4" => match &args.perturb {
            None => project_cp4(None)?,
            Some(eps) => project_cp4_perturbed(&rat::parse_rat(eps)?)?,
        },
        "face" => {
            let label: CyclicPartition = args
                .label
                .as_deref()
                .ok_or_else(|| Error::UnsupportedFormat("--label is required".into()))?
                .parse()?;
            if let Some(m) = args.m {
                if m != label.m() {
                    return Err(Error::GroundSetMismatch {
                        expected: m,
                        got: label.m(),
                    });
                }
            }
            let xi = representative_direction(&label);
            let vf = face(&xi)?;
            match label.m() {
                4 => project_cp4(Some(&vf))?,
                _ => {
                    let vertices: Vec<_> = face_vertices(&xi)?.into_iter().collect();
                    face_scene(&vf, &vertices)?
                }
            }
        }
        other => return Err(Error::UnsupportedFormat(other.to_string())),
    };
    let svg = render_svg(&scene);
    fs::write(&args.output, svg.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

/// Restore default SIGPIPE handling so piping into a closing reader (e.g.
/// `cyclop complex ... | head`) terminates quietly instead of panicking.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn write_output(path: Option<&std::path::Path>, bytes: &[u8]) -> Result<(), Error> {
    match path {
        Some(path) => fs::write(path, bytes)?,
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}
