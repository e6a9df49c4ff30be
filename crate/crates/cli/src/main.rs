//! Command-line front end: every behavior is a library call.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 input error,
//! 3 a certificate sweep got stuck.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use oneplane_core::analysis;
use oneplane_core::bounds;
use oneplane_core::census;
use oneplane_core::certify;
use oneplane_core::drawing::OnePlaneDrawing;
use oneplane_core::error::CertifyError;
use oneplane_core::generate;
use oneplane_core::render;
use oneplane_core::report;
use oneplane_core::saturate;

#[derive(Parser)]
#[command(name = "oneplane", about = "Toolkit for drawings with at-most-once-crossed edges")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run all structural checks on a drawing document.
    Analyze {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Produce and verify an inequality certificate; write `.cert.json`.
    Certify {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a drawing to SVG.
    Render {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Summarize a directory of drawing documents.
    Report {
        dir: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the density bound table and the exact optimum.
    Bounds {
        #[arg(short = 'n', long, default_value = "24")]
        up_to: u64,
    },
    /// Exhaustively enumerate maximal drawings on n vertices (4..=6).
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Saturate a drawing to a maximal one.
    Saturate {
        #[arg(long, name = "in")]
        input: Option<PathBuf>,
        #[arg(long, default_value = "0")]
        seed: u64,
        /// Start from this many isolated vertices instead of a file.
        #[arg(short = 'n', long)]
        vertices: Option<usize>,
        /// Use the first witness in canonical order instead of random picks.
        #[arg(long)]
        canonical: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a fixture drawing.
    Gen {
        #[arg(value_parser = ["k4", "k4-crossed", "hermit", "exceptional"])]
        which: String,
        #[arg(long, default_value = "1")]
        template: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_drawing(path: &Path) -> Result<OnePlaneDrawing, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    OnePlaneDrawing::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_out(out: Option<&Path>, content: &str) -> Result<(), String> {
    match out {
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            Ok(())
        }
        Some(p) => std::fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze { path, format } => {
            let d = read_drawing(&path)?;
            let rep = report::analyze(&d);
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&rep).unwrap());
                }
                Format::Csv => {
                    println!("check,status");
                    for c in &rep.checks {
                        println!("{},{}", c.check, c.status);
                    }
                }
            }
            Ok(if rep.all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Certify { path, out } => {
            let d = read_drawing(&path)?;
            match report::certify_report(&d) {
                Ok(cert) => {
                    let text = serde_json::to_string_pretty(&cert).unwrap();
                    let target = out.unwrap_or_else(|| {
                        let mut p = path.clone();
                        let stem = p
                            .file_name()
                            .and_then(|s| s.to_str())
                            .unwrap_or("drawing")
                            .trim_end_matches(".opg.json")
                            .to_string();
                        p.set_file_name(format!("{stem}.cert.json"));
                        p
                    });
                    write_out(Some(&target), &text)?;
                    eprintln!("certificate verified; written to {}", target.display());
                    Ok(ExitCode::SUCCESS)
                }
                Err(CertifyError::SweepStuck(msg)) => {
                    eprintln!("proof gap: {msg}");
                    Ok(ExitCode::from(3))
                }
                Err(e) => {
                    eprintln!("certification failed: {e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Render { path, out } => {
            let d = read_drawing(&path)?;
            let svg = render::render_svg(&d);
            let target = out.unwrap_or_else(|| {
                let mut p = path.clone();
                p.set_extension("svg");
                p
            });
            write_out(Some(&target), &svg)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { dir, format, out } => {
            let mut entries = Vec::new();
            let mut names: Vec<PathBuf> = std::fs::read_dir(&dir)
                .map_err(|e| format!("{}: {e}", dir.display()))?
                .filter_map(|r| r.ok())
                .map(|e| e.path())
                .filter(|p| p.to_string_lossy().ends_with(".opg.json"))
                .collect();
            names.sort();
            for p in names {
                match read_drawing(&p) {
                    Ok(d) => entries.push((
                        p.file_name().unwrap().to_string_lossy().to_string(),
                        d,
                    )),
                    Err(e) => eprintln!("warning: skipping {e}"),
                }
            }
            let summary = report::summarize(&entries);
            let text = match format {
                Format::Csv => report::summary_csv(&summary),
                Format::Json => serde_json::to_string_pretty(&summary).unwrap(),
            };
            write_out(out.as_deref(), &text)?;
            Ok(if summary.all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Bounds { up_to } => {
            let m = bounds::minimize_f();
            println!(
                "exact optimum of the relaxation: {} (replay {}, vertex enumeration {})",
                m.minimum, m.replay_route, m.vertex_route
            );
            let refs = bounds::ReferenceBounds::default();
            println!(
                "reference slopes: {} < {} < {} < {} < {}",
                refs.lower_plane, refs.lower_planar, refs.new_lower, refs.upper_plane, refs.upper_planar
            );
            println!("N,bound,bound_decimal,min_edges");
            for n in 4..=up_to {
                let b = bounds::density_lower_bound(n).unwrap();
                let dec = *b.numer() as f64 / *b.denom() as f64;
                let ceil = (*b.numer() + *b.denom() - 1).div_euclid(*b.denom());
                println!("{n},{b},{dec:.4},{ceil}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, out } => {
            let res = census::enumerate_maximal(n).map_err(|e| e.to_string())?;
            let text = serde_json::to_string_pretty(&res).unwrap();
            write_out(out.as_deref(), &text)?;
            eprintln!(
                "n={}: {} drawings ({} graphs), minimum edges {}",
                res.n, res.drawing_count, res.graph_count, res.e_prime
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Saturate { input, seed, vertices, canonical, out } => {
            let start = match (&input, vertices) {
                (Some(p), _) => read_drawing(p)?,
                (None, Some(n)) => saturate::edgeless(n),
                (None, None) => return Err("need --in or --vertices".into()),
            };
            let result = if canonical {
                saturate::saturate_canonical(&start)
            } else {
                saturate::saturate(&start, seed)
            };
            write_out(out.as_deref(), &result.serialize())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { which, template, out } => {
            let d = match which.as_str() {
                "k4" => generate::gen_k4(false),
                "k4-crossed" => generate::gen_k4(true),
                "hermit" => generate::gen_hermit_gadget().map_err(|e| e.to_string())?,
                "exceptional" => {
                    let t = generate::ExceptionalTemplate::from_index(template)
                        .ok_or_else(|| format!("template must be 1..=4, got {template}"))?;
                    generate::gen_exceptional(t).map_err(|e| e.to_string())?
                }
                other => return Err(format!("unknown fixture `{other}`")),
            };
            let _ = analysis::is_maximal(&d);
            write_out(out.as_deref(), &d.serialize())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
