use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nilflux::connections::ConnectionKind;
use nilflux::frames::{Params, PresetName};
use nilflux::notation::parse_scalar;
use nilflux_cli::render::{self, Style};
use nilflux_cli::run::status_ok;
use nilflux_cli::{p1_raw, reproduce_paper, run_scenario, Scenario};

const VERIFICATION_FAILED: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "nilflux", version)]
#[command(about = "Exact checks of heterotic solutions on six-dimensional nilmanifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Human,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks listed in a scenario file
    Verify {
        scenario: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the full suite of published results and compare with expectations
    ReproducePaper {
        /// Restrict to one preset
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print 8 pi^2 p1 of a connection on a preset
    P1 {
        #[arg(long)]
        preset: String,
        /// lc, plus, minus or chern
        #[arg(long)]
        connection: String,
        /// Parameter binding name=p/q; repeatable
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VERIFICATION_FAILED)
    }
}

fn verify(path: PathBuf, format: Format, style: Style) -> ExitCode {
    let src = match std::fs::read_to_string(&path) {
        Ok(s) => s,
        Err(e) => return usage(format!("{}: {e}", path.display())),
    };
    let scenario = match Scenario::parse(&src) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let reports = match run_scenario(&scenario) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    for r in &reports {
        match format {
            Format::Human => println!("{}", render::human(r, style)),
            Format::Records => println!("{}", r.record()),
        }
    }
    verdict(reports.iter().all(|r| status_ok(r.status())))
}

fn reproduce(only: Option<String>, format: Format, style: Style) -> ExitCode {
    let only = match only.map(|s| PresetName::parse(&s)).transpose() {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let checks = match reproduce_paper(only) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let mut current = None;
    for c in &checks {
        match format {
            Format::Human => {
                if current != Some(c.preset) {
                    println!("== {} ==", c.preset);
                    current = Some(c.preset);
                }
                println!("{}", render::human_suite(c, style));
            }
            Format::Records => println!("{}", render::record_suite(c)),
        }
    }
    let unexpected = checks.iter().filter(|c| !c.as_expected()).count();
    if format == Format::Human {
        println!(
            "{} checks, {} as expected, {unexpected} unexpected",
            checks.len(),
            checks.len() - unexpected
        );
    }
    verdict(unexpected == 0)
}

fn p1(preset: &str, connection: &str, params: &[String]) -> ExitCode {
    let preset = match PresetName::parse(preset) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let Some(kind) = ConnectionKind::parse(connection) else {
        return usage(format!("unknown connection `{connection}`"));
    };
    let mut bound = Params::new();
    for p in params {
        let Some((name, value)) = p.split_once('=') else {
            return usage(format!("--param expects name=value, got `{p}`"));
        };
        match parse_scalar(value.trim()) {
            Ok(v) => bound.set(name.trim(), v),
            Err(e) => return usage(format!("--param {name}: {e}")),
        }
    }
    match p1_raw(preset, kind, &bound) {
        Ok(raw) => {
            println!("8*pi^2*p1({preset}, {kind}) = {raw}");
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let style = Style::from_env();
    match cli.command {
        Command::Verify { scenario, format } => verify(scenario, format, style),
        Command::ReproducePaper { only, format } => reproduce(only, format, style),
        Command::P1 {
            preset,
            connection,
            params,
        } => p1(&preset, &connection, &params),
    }
}
