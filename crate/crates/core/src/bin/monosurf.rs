use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use monosurf::analysis::branch_points;
use monosurf::io::{
    export_mesh, run_verification_with, sample_patch, sweep_with, write_curvature_map,
    write_spectral_lines, FigurePreset, MeshFormat, PatchSpec, SweepOptions, SweepPreset,
    Tolerances, Units,
};
use monosurf::moduli::MonopoleModuli;
use monosurf::nullcurve::{
    frame_transform, frame_transform_real, gauss_map, immerse, phi_null, FrameDirection,
};

#[derive(Parser)]
#[command(name = "monosurf", version, about = "Charge-2 monopole minimal surfaces")]
struct Cli {
    /// Replace every verification tolerance with this value.
    #[arg(long, global = true)]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Frame {
    Monopole,
    Standard,
}

#[derive(Clone, Copy, ValueEnum)]
enum UnitsArg {
    Period,
    Absolute,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Obj,
    Ply,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Figure {
    Fig1,
    Fig2,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepArg {
    Star,
    Higgs,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Run the invariant suite and print a JSON report.
    Verify {
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<f64>,
    },
    /// Evaluate the surface at one parameter value and print JSON.
    Eval {
        #[arg(long)]
        k: f64,
        /// `re,im`
        #[arg(long, value_parser = numbers::<f64, 2>, allow_hyphen_values = true)]
        u: [f64; 2],
        #[arg(long, value_enum, default_value = "monopole")]
        frame: Frame,
    },
    /// Sample a patch and write it as a mesh.
    Mesh {
        #[arg(long, required_unless_present = "preset")]
        k: Option<f64>,
        /// `x0,x1,y0,y1`
        #[arg(long, value_parser = numbers::<f64, 4>, allow_hyphen_values = true,
              required_unless_present = "preset")]
        domain: Option<[f64; 4]>,
        /// `nx,ny`
        #[arg(long, value_parser = numbers::<usize, 2>, default_value = "128,64")]
        res: [usize; 2],
        #[arg(long, value_enum, default_value = "period")]
        units: UnitsArg,
        #[arg(long, value_enum, default_value = "obj")]
        format: FormatArg,
        #[arg(long)]
        out: PathBuf,
        /// Use a figure domain; overrides `--k`, `--domain` and `--units`.
        #[arg(long, value_enum)]
        preset: Option<Figure>,
    },
    /// Print the branch points β1, β2, β3 as JSON.
    BranchPoints {
        #[arg(long)]
        k: f64,
    },
    /// Write G and the Gaussian curvature on an n×n grid as CSV.
    CurvatureMap {
        #[arg(long)]
        k: f64,
        #[arg(long, default_value_t = 128)]
        res: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Mesh a family of moduli and write a summary table.
    Sweep {
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<f64>,
        #[arg(long, value_enum, default_value = "star")]
        preset: SweepArg,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "obj")]
        format: FormatArg,
    },
    /// Write spectral lines for points on |ζ| = 1 as CSV.
    SpectralLines {
        #[arg(long)]
        k: f64,
        #[arg(long, default_value_t = 64)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parses exactly `N` comma-separated numbers.
fn numbers<T: std::str::FromStr, const N: usize>(s: &str) -> Result<[T; N], String> {
    let parts: Vec<T> = s
        .split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("`{p}` is not a number")))
        .collect::<Result<_, _>>()?;
    let got = parts.len();
    parts
        .try_into()
        .map_err(|_| format!("expected {N} comma-separated values, got {got}"))
}

fn format_of(f: FormatArg) -> MeshFormat {
    match f {
        FormatArg::Obj => MeshFormat::Obj,
        FormatArg::Ply => MeshFormat::Ply,
        FormatArg::Csv => MeshFormat::Csv,
    }
}

fn run(cli: Cli) -> monosurf::Result<bool> {
    match cli.command {
        Command::Verify { k } => {
            let tol = Tolerances { global: cli.tol };
            let report = run_verification_with(&k, &tol)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("report serialises"));
            Ok(report.all_passed())
        }
        Command::Eval { k, u, frame } => {
            let m = MonopoleModuli::new(k)?;
            let u = Complex64::new(u[0], u[1]);
            let p = phi_null(u, &m)?;
            let s = immerse(u, &m)?;
            let (phi, pos, normal) = match frame {
                Frame::Monopole => (p.phi, s.pos, s.normal),
                Frame::Standard => {
                    let to = FrameDirection::ToStandard;
                    (
                        frame_transform(p.phi, &m, to),
                        frame_transform_real(s.pos, &m, to),
                        frame_transform_real(s.normal, &m, to),
                    )
                }
            };
            let out = json!({
                "k": k,
                "u": [u.re, u.im],
                "frame": match frame { Frame::Monopole => "monopole", Frame::Standard => "standard" },
                "Phi": phi.map(|z| [z.re, z.im]),
                "phi": pos,
                "g": gauss_map(u, &m)?.finite().map(|g| [g.re, g.im]),
                "gamma_phi": normal,
                "lambda": s.lambda,
                "G": s.g_density,
                "K": s.gauss_curv,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            Ok(true)
        }
        Command::Mesh { k, domain, res, units, format, out, preset } => {
            let spec = match preset {
                Some(fig) => {
                    let fig = match fig {
                        Figure::Fig1 => FigurePreset::Fig1,
                        Figure::Fig2 => FigurePreset::Fig2,
                    };
                    fig.spec(res[0], res[1])?
                }
                None => {
                    let d = domain.expect("clap enforces --domain");
                    let units = match units {
                        UnitsArg::Period => Units::Period,
                        UnitsArg::Absolute => Units::Absolute,
                    };
                    let k = k.expect("clap enforces --k");
                    PatchSpec::new(k, (d[0], d[1]), (d[2], d[3]), res[0], res[1], units)
                }
            };
            let m = MonopoleModuli::new(spec.k)?;
            let mesh = sample_patch(&spec, &m)?;
            export_mesh(&mesh, format_of(format), &out)?;
            eprintln!(
                "wrote {} vertices, {} faces ({} excluded) to {}",
                mesh.vertices.len(),
                mesh.faces.len(),
                mesh.metadata.excluded,
                out.display()
            );
            Ok(true)
        }
        Command::BranchPoints { k } => {
            let m = MonopoleModuli::new(k)?;
            let [b1, b2, b3] = branch_points(&m);
            let out = json!({ "k": k, "beta1": b1, "beta2": b2, "beta3": b3 });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            Ok(true)
        }
        Command::CurvatureMap { k, res, out } => {
            let m = MonopoleModuli::new(k)?;
            write_curvature_map(&m, res, &out)?;
            Ok(true)
        }
        Command::Sweep { k, preset, out, format } => {
            let preset = match preset {
                SweepArg::Star => SweepPreset::Star,
                SweepArg::Higgs => SweepPreset::Higgs,
                SweepArg::Full => SweepPreset::Full,
            };
            let opts = SweepOptions { format: format_of(format), ..SweepOptions::default() };
            let rows = sweep_with(&k, preset, &out, &opts)?;
            eprintln!("wrote {} meshes and summary.csv to {}", rows.len(), out.display());
            Ok(true)
        }
        Command::SpectralLines { k, n, out } => {
            let m = MonopoleModuli::new(k)?;
            write_spectral_lines(&m, n, &out)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
