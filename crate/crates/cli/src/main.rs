mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anticoord::game::Mode;
use anticoord::reductions::Copies;
use anticoord::search::DEFAULT_BUDGET;
use anticoord::Color;
use clap::{Parser, Subcommand, ValueEnum};

use report::Report;

/// Anti-coordination games on graphs.
#[derive(Debug, Parser)]
#[command(name = "anticoord", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum InitKind {
    All1,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    KcolorStrict,
    SatStrict2,
    BupDirected2,
    Directed2Directedk,
    Proxy,
}

impl Kind {
    fn default_k(self) -> Color {
        match self {
            Kind::KcolorStrict | Kind::Directed2Directedk => 3,
            Kind::SatStrict2 | Kind::BupDirected2 | Kind::Proxy => 2,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Two copies of K_k joined by a perfect matching.
    PoaTight {
        k: Color,
    },
    Complete {
        q: usize,
    },
    Cycle {
        n: usize,
    },
    /// G(n, p) from ChaCha8 seeded by --seed.
    Random {
        n: usize,
        p: f64,
    },
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run best-response dynamics to a stable coloring.
    Solve {
        graph: PathBuf,
        #[arg(short, default_value_t = 2)]
        k: Color,
        #[arg(long, value_enum, default_value = "all1")]
        init: InitKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_steps: Option<usize>,
        /// Writes <OUT>.coloring and <OUT>.trace.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Classify a coloring.
    Check {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Count (and optionally list) all equilibria.
    Enumerate {
        graph: PathBuf,
        #[arg(short, default_value_t = 2)]
        k: Color,
        #[arg(long, default_value = "stable")]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        list: bool,
    },
    /// Exact price of anarchy.
    Poa {
        graph: PathBuf,
        #[arg(short, default_value_t = 2)]
        k: Color,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        /// Writes <OUT>.best.coloring and <OUT>.worst.coloring.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Emit a graph from a named family.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long, default_value_t = 0, global = true)]
        seed: u64,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Build a reduction; writes <OUT>.graph and <OUT>.roles.
    Reduce {
        #[arg(value_enum)]
        kind: Kind,
        instance: PathBuf,
        #[arg(short)]
        k: Option<Color>,
        #[arg(long, default_value = "paper")]
        copies: Copies,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Compare the source oracle with equilibrium search on the reduction.
    Verify {
        #[arg(value_enum)]
        kind: Kind,
        instance: PathBuf,
        #[arg(short)]
        k: Option<Color>,
        #[arg(long, default_value = "min")]
        copies: Copies,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Graphviz rendering.
    Dot {
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        roles: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cmd: Command, r: &mut Report) -> report::CmdResult<commands::Done> {
    use commands as c;
    match cmd {
        Command::Solve {
            graph,
            k,
            init,
            seed,
            max_steps,
            out,
            dot,
        } => c::solve(r, &graph, k, init, seed, max_steps, out.as_deref(), dot.as_deref()),
        Command::Check { graph, coloring, dot } => c::check(r, &graph, &coloring, dot.as_deref()),
        Command::Enumerate {
            graph,
            k,
            mode,
            budget,
            list,
        } => c::enumerate(r, &graph, k, mode, budget, list),
        Command::Poa {
            graph,
            k,
            budget,
            out,
            dot,
        } => c::poa(r, &graph, k, budget, out.as_deref(), dot.as_deref()),
        Command::Gen { family, seed, out } => c::gen(r, &family, seed, out.as_deref()),
        Command::Reduce {
            kind,
            instance,
            k,
            copies,
            out,
            dot,
        } => c::reduce(
            r,
            kind,
            &instance,
            k.unwrap_or(kind.default_k()),
            copies,
            out.as_deref(),
            dot.as_deref(),
        ),
        Command::Verify {
            kind,
            instance,
            k,
            copies,
            budget,
        } => c::verify(r, kind, &instance, k.unwrap_or(kind.default_k()), copies, budget),
        Command::Dot {
            graph,
            coloring,
            roles,
            out,
        } => c::dot(r, &graph, coloring.as_deref(), roles.as_deref(), out.as_deref()),
    }
}

fn main() -> ExitCode {
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(report::exit::INPUT);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let mut r = Report::new(&format!("anticoord {}", echo.join(" ")));
    match run(cli.command, &mut r) {
        Ok(done) => {
            print!("{}", done.report);
            ExitCode::from(done.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            r.result("error", format!("{:?}", f.msg));
            print!("{}", r.finish("error"));
            ExitCode::from(f.code)
        }
    }
}
