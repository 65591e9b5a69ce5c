use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use wallcross::{commands, Format, Report};

/// Exact combinatorics of wall-crossing for the resolved conifold.
///
/// Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
#[derive(Parser)]
#[command(name = "wallcross", version)]
struct Cli {
    /// Output format.
    #[arg(
        long,
        value_enum,
        env = "WALLCROSS_FORMAT",
        default_value = "json",
        global = true
    )]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stable pair invariants P(n,β) and multiplicities a(n,β), cross-checked three ways.
    PtSeries {
        #[arg(long)]
        nmax: u32,
        #[arg(long)]
        bmax: u32,
    },
    /// Run the box-adding algorithm on a diagram.
    Resolve {
        /// Row lengths, e.g. "4,2,1"; empty for the empty diagram.
        #[arg(long, allow_hyphen_values = true)]
        diagram: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        b: usize,
    },
    /// Semiorthogonal summands of the window B_c(d) for the flip with dims (a, b).
    Sod {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        d: usize,
        /// Window width; defaults to a.
        #[arg(long)]
        c: Option<usize>,
    },
    /// Summands and Hall-product twists when crossing the wall W_m at (v0, v1).
    Wallcross {
        #[arg(long)]
        v0: i64,
        #[arg(long)]
        v1: i64,
        #[arg(long)]
        m: i64,
    },
    /// Exhaustive Koszul window check at a polystable point on W_m.
    WindowCheck {
        #[arg(long)]
        v0: i64,
        #[arg(long)]
        v1: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        d: usize,
    },
    /// Walls W_m met by the dimension vector (v0, v1).
    Walls {
        #[arg(long)]
        v0: i64,
        #[arg(long)]
        v1: i64,
    },
    /// Ext-quiver dimensions at a polystable point on W_m.
    ExtQuiver {
        #[arg(long)]
        v0: i64,
        #[arg(long)]
        v1: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        d: i64,
    },
    /// The wall-crossing product over W_1..W_walls, truncated at degree nmax.
    DtSeries {
        #[arg(long)]
        walls: u32,
        #[arg(long)]
        nmax: u32,
    },
}

fn run(command: Command) -> Result<Report> {
    match command {
        Command::PtSeries { nmax, bmax } => commands::pt_series(nmax, bmax),
        Command::Resolve { diagram, d, b } => commands::resolve(&diagram, d, b),
        Command::Sod { a, b, d, c } => commands::sod(a, b, d, c),
        Command::Wallcross { v0, v1, m } => commands::wallcross(v0, v1, m),
        Command::WindowCheck { v0, v1, m, d } => commands::window_check(v0, v1, m, d),
        Command::Walls { v0, v1 } => commands::walls(v0, v1),
        Command::ExtQuiver { v0, v1, m, d } => commands::ext_quiver(v0, v1, m, d),
        Command::DtSeries { walls, nmax } => commands::dt_series(walls, nmax),
    }
}

fn emit(report: &Report, format: Format, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            let mut w = BufWriter::new(file);
            report.render(format, &mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = io::stdout().lock();
            report.render(format, &mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|report| {
        emit(&report, cli.format, cli.output.as_ref())?;
        Ok(report.failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
