//! Command-line front end for paperfolding sequences, curves and coverings.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use folding::covering::{Covering, CoveringFile};
use folding::curve::{parse_dir, Curve, CurveFile};
use folding::render::{render_covering, render_curve, RenderStyle};
use folding::seq::{self, CompleteSpec};
use folding::verify;

#[derive(Parser)]
#[command(name = "folding", version, about = "Paperfolding sequences, curves and coverings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpecName {
    Positive,
    Alternating,
}

impl SpecName {
    fn spec(self) -> CompleteSpec {
        match self {
            SpecName::Positive => CompleteSpec::positive(),
            SpecName::Alternating => CompleteSpec::alternating(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Positive,
    Alternating,
    Effective,
    Fig9,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the n-folding word with the given direction choices.
    GenSeq {
        /// Fold directions, one +/- letter per folding step.
        #[arg(long, allow_hyphen_values = true)]
        dirs: String,
    },
    /// Check whether a word is n-folding and finite folding.
    CheckSeq {
        /// The word as a +/- string; read from stdin when absent.
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Print the number of distinct length-t factors of a complete sequence.
    Complexity {
        /// Which complete sequence to use.
        #[arg(long, value_enum, default_value = "positive")]
        spec: SpecName,
        /// Factor length.
        #[arg(long)]
        t: usize,
    },
    /// Build the folding curve of a turn word and render or save it.
    Curve {
        /// Turn word as a +/- string.
        #[arg(long, allow_hyphen_values = true)]
        turns: String,
        /// Write an SVG rendering here.
        #[arg(long)]
        svg: Option<std::path::PathBuf>,
        /// Write the curve file here.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// First-segment direction token (E, N, W, S).
        #[arg(long, default_value = "E")]
        dir: String,
    },
    /// Replace a curve file by its derivative.
    Derive {
        #[arg(long, value_name = "FILE")]
        input: std::path::PathBuf,
        #[arg(long, value_name = "FILE")]
        out: std::path::PathBuf,
    },
    /// Replace a curve file by one of its two antiderivatives.
    Antiderive {
        #[arg(long, value_name = "FILE")]
        input: std::path::PathBuf,
        #[arg(long, value_name = "FILE")]
        out: std::path::PathBuf,
        /// Which antiderivative: 0 bulges left first, 1 right.
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Write a covering file for a named construction.
    Cover {
        #[arg(long, value_enum)]
        construction: Construction,
        /// Window half-width (power of two), for the field constructions.
        #[arg(long, default_value_t = 16)]
        half_width: i64,
        /// Extension rounds, for the effective construction.
        #[arg(long, default_value_t = 3)]
        rounds: u32,
        #[arg(long, value_name = "FILE")]
        out: std::path::PathBuf,
    },
    /// Run the registered verification suites.
    Verify {
        /// Run a single check by id instead of all of them.
        #[arg(long)]
        check: Option<String>,
    },
    /// Render a curve or covering file as SVG.
    Render {
        #[arg(long, value_name = "FILE")]
        input: std::path::PathBuf,
        #[arg(long, value_name = "FILE")]
        svg: std::path::PathBuf,
        /// Inset fraction, in (0, 1/4).
        #[arg(long, default_value_t = 0.15)]
        alpha: f64,
        /// Draw the tiles associated to the segments.
        #[arg(long)]
        show_tiles: bool,
        /// Overlay this many derivatives of each curve.
        #[arg(long, default_value_t = 0)]
        show_derivatives: u32,
    },
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn read_word_arg(word: Option<String>) -> Result<Vec<i8>, String> {
    let text = match word {
        Some(w) => w,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| e.to_string())?;
            buf
        }
    };
    seq::parse_word(text.trim()).map_err(|e| e.to_string())
}

fn load_curve(path: &std::path::Path) -> Result<Curve, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let file: CurveFile = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    Curve::from_file(&file).map_err(|e| e.to_string())
}

fn save_json<T: serde::Serialize>(path: &std::path::Path, value: &T) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn style(alpha: f64, show_tiles: bool, show_derivatives: u32) -> Result<RenderStyle, String> {
    if !(alpha > 0.0 && alpha < 0.25) {
        return Err(format!("alpha {alpha} outside (0, 1/4)"));
    }
    Ok(RenderStyle {
        alpha,
        show_tiles,
        show_derivatives,
        ..RenderStyle::default()
    })
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::GenSeq { dirs } => {
            let d = seq::parse_word(dirs.trim()).map_err(|e| e.to_string())?;
            println!("{}", seq::format_word(&seq::gen_n_folding(&d)));
        }
        Command::CheckSeq { word } => {
            let w = read_word_arg(word)?;
            let n_folding = seq::is_n_folding(&w);
            let finite = seq::is_finite_folding(&w);
            match seq::order_for_len(w.len()) {
                Some(n) if n_folding => println!("n-folding: true (n = {n})"),
                _ => println!("n-folding: false"),
            }
            println!("finite-folding: {finite}");
            if !finite {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Complexity { spec, t } => {
            let n = spec.spec().complexity(t).map_err(|e| e.to_string())?;
            println!("{n}");
        }
        Command::Curve {
            turns,
            svg,
            out,
            dir,
        } => {
            let w = seq::parse_word(turns.trim()).map_err(|e| e.to_string())?;
            let d = parse_dir(&serde_json::Value::String(dir)).map_err(|e| e.to_string())?;
            let c = Curve::new((0, 0), d, w);
            if let Some(path) = &out {
                save_json(path, &c.to_file())?;
            }
            if let Some(path) = &svg {
                let doc = render_curve(&c, &RenderStyle::default());
                fs::write(path, doc).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            if out.is_none() && svg.is_none() {
                println!("{}", serde_json::to_string(&c.to_file()).map_err(|e| e.to_string())?);
            }
        }
        Command::Derive { input, out } => {
            let c = load_curve(&input)?;
            let d = c.derivative().map_err(|e| e.to_string())?;
            save_json(&out, &d.to_file())?;
        }
        Command::Antiderive { input, out, index } => {
            if index > 1 {
                return Err(format!("antiderivative index {index} must be 0 or 1"));
            }
            let c = load_curve(&input)?;
            let a = c.antiderivatives()[index].clone();
            save_json(&out, &a.to_file())?;
        }
        Command::Cover {
            construction,
            half_width,
            rounds,
            out,
        } => {
            use folding::constructions::*;
            let cov = match construction {
                Construction::Positive => positive_covering(half_width),
                Construction::Alternating => alternating_covering(half_width),
                Construction::Effective => effective_single_covering(rounds),
                Construction::Fig9 => fig9_covering(half_width),
            }
            .map_err(|e| e.to_string())?;
            save_json(&out, &cov.to_file())?;
        }
        Command::Verify { check } => {
            let infos = verify::registry();
            let ids: Vec<&str> = match &check {
                Some(id) => {
                    if !infos.iter().any(|i| i.id == id) {
                        return Err(format!("unknown check {id:?}"));
                    }
                    vec![id.as_str()]
                }
                None => infos.iter().map(|i| i.id).collect(),
            };
            let mut all_pass = true;
            for id in ids {
                let report =
                    verify::run_check(id, &verify::Params::new()).map_err(|e| e.to_string())?;
                all_pass &= report.pass;
                println!("{}", serde_json::to_string(&report).map_err(|e| e.to_string())?);
            }
            if !all_pass {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Render {
            input,
            svg,
            alpha,
            show_tiles,
            show_derivatives,
        } => {
            let st = style(alpha, show_tiles, show_derivatives)?;
            let text =
                fs::read_to_string(&input).map_err(|e| format!("{}: {e}", input.display()))?;
            let doc = if let Ok(cf) = serde_json::from_str::<CoveringFile>(&text) {
                let cov = Covering::from_file(&cf).map_err(|e| e.to_string())?;
                render_covering(&cov, &st)
            } else {
                let cf: CurveFile = serde_json::from_str(&text).map_err(|e| e.to_string())?;
                let c = Curve::from_file(&cf).map_err(|e| e.to_string())?;
                render_curve(&c, &st)
            };
            fs::write(&svg, doc).map_err(|e| format!("{}: {e}", svg.display()))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => fail(msg),
    }
}
