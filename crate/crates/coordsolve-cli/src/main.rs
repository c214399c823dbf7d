//! `coordsolve`: solve coordination games described in JSON files.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 unmet precondition,
//! 3 resource cap exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coordsolve::oracle::{Mode, OracleOptions, Schedule};
use coordsolve::random::{random_game, stream, GameSpec};
use coordsolve::sync::{Family, Options};
use coordsolve::{Error, Partition, PlayerSet, StageGame, DEFAULT_BUDGET};
use serde_json::json;

use coordsolve_cli::commands::{self, Report};
use coordsolve_cli::document;

#[derive(Parser)]
#[command(
    name = "coordsolve",
    version,
    about = "Exact solvers for binary-action coordination games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Emit a JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on elementary evaluations (overrides COORDSOLVE_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Search strictly sufficient equilibria (the default).
    #[arg(long, global = true, conflicts_with = "sss")]
    sse: bool,
    /// Search all strictly sufficient sets.
    #[arg(long, global = true)]
    sss: bool,
    /// Seed for `--game random:N`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Run even when the game violates the standing assumptions.
    #[arg(long, global = true)]
    lenient: bool,
}

#[derive(Args)]
struct GameArg {
    /// Game file, or `random:N` for a seeded random game with N players.
    #[arg(long)]
    game: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Spne,
    Mspne,
}

#[derive(Subcommand)]
enum Command {
    /// Check the standing assumptions and list violations.
    Check(GameArg),
    /// Pure Nash equilibria of the stage game.
    Ne(GameArg),
    /// Stages needed before the target plays 1 in every equilibrium.
    Tau {
        #[command(flatten)]
        game: GameArg,
        /// Comma-separated players; defaults to everyone.
        #[arg(long)]
        target: Option<String>,
    },
    /// Players at 1 in every equilibrium of the T-stage game.
    Phi {
        #[command(flatten)]
        game: GameArg,
        #[arg(long)]
        t: usize,
    },
    /// All equilibrium outcomes of the T-stage game.
    Outcomes {
        #[command(flatten)]
        game: GameArg,
        #[arg(long)]
        t: usize,
    },
    /// Tree-depth of the game's graph (or of its reduced graph) with a
    /// schedule built from the elimination forest.
    Treedepth {
        #[command(flatten)]
        game: GameArg,
        /// Number of cells; defaults to the tree-depth.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Optimal T-cell one-move-each schedule.
    Design {
        #[command(flatten)]
        game: GameArg,
        #[arg(long)]
        t: usize,
    },
    /// Least equilibrium outcome of a one-move-each schedule.
    AsyncSolve {
        #[command(flatten)]
        game: GameArg,
        /// Cells separated by `;`, players by `,`; defaults to one player
        /// per cell in index order.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Weak and strong centrality.
    Centrality(GameArg),
    /// Horizons worth paying for.
    Horizons(GameArg),
    /// Effect of fixing players at 1.
    Intervene {
        #[command(flatten)]
        game: GameArg,
        /// Comma-separated subsidised players.
        #[arg(long)]
        subsidize: String,
        #[arg(long)]
        t: usize,
    },
    /// Ordering conditions and the fast horizon.
    Ordered {
        #[command(flatten)]
        game: GameArg,
        #[arg(long)]
        target: Option<String>,
        /// Also search the sequence form of the cost condition.
        #[arg(long)]
        sequence: bool,
    },
    /// Brute-force equilibrium enumeration on small instances.
    Oracle {
        #[command(flatten)]
        game: GameArg,
        /// `sync:T` or `async:CELLS` with cells as in `async-solve`.
        #[arg(long)]
        schedule: String,
        #[arg(long, value_enum, default_value = "mspne")]
        mode: ModeArg,
        /// Only profiles without pledges before the last stage.
        #[arg(long)]
        no_pledge: bool,
    },
}

enum Failure {
    Input(String),
    Solver(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Solver(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Solver(Error::Precondition(_) | Error::Infeasible(_)) => 2,
            Failure::Solver(Error::Resource { .. }) => 3,
            Failure::Solver(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Input(_) => "input",
            Failure::Solver(Error::Argument(_)) => "argument",
            Failure::Solver(Error::Precondition(_)) => "precondition",
            Failure::Solver(Error::Infeasible(_)) => "infeasible",
            Failure::Solver(Error::Resource { .. }) => "resource",
            Failure::Solver(_) => "internal",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(m) => m.clone(),
            Failure::Solver(e) => e.to_string(),
        }
    }
}

fn budget(g: &Global) -> Result<u64, Failure> {
    if let Some(b) = g.budget {
        return Ok(b);
    }
    match std::env::var("COORDSOLVE_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("COORDSOLVE_BUDGET: \"{v}\" is not a count"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn options(g: &Global) -> Result<Options, Failure> {
    Ok(Options {
        family: if g.sss && !g.sse {
            Family::Sss
        } else {
            Family::Sse
        },
        budget: budget(g)?,
        enforce_assumptions: !g.lenient,
        ..Options::default()
    })
}

fn load(arg: &GameArg, seed: u64) -> Result<StageGame, Failure> {
    if let Some(n) = arg.game.strip_prefix("random:") {
        let n: usize = n
            .parse()
            .ok()
            .filter(|&n| (1..=16).contains(&n))
            .ok_or_else(|| {
                Failure::Input(format!("{}: expected random:N with N in 1..=16", arg.game))
            })?;
        return Ok(random_game(&mut stream(seed, 0), GameSpec::new(n)));
    }
    document::load_game(&PathBuf::from(&arg.game)).map_err(Failure::Input)
}

fn players(text: &str, n: usize) -> Result<PlayerSet, Failure> {
    let mut x = PlayerSet::EMPTY;
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let i: usize = part
            .parse()
            .ok()
            .filter(|&i| (1..=n).contains(&i))
            .ok_or_else(|| Failure::Input(format!("\"{part}\" is not a player in 1..={n}")))?;
        x = x.with(i - 1);
    }
    Ok(x)
}

fn partition(text: &str, n: usize) -> Result<Partition, Failure> {
    let cells = text
        .split(';')
        .map(|c| players(c, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(n, cells)?)
}

fn schedule(text: &str, n: usize) -> Result<Schedule, Failure> {
    if let Some(t) = text.strip_prefix("sync:") {
        let t = t
            .parse()
            .map_err(|_| Failure::Input(format!("{text}: expected sync:T")))?;
        Ok(Schedule::Sync(t))
    } else if let Some(cells) = text.strip_prefix("async:") {
        Ok(Schedule::Async(partition(cells, n)?))
    } else {
        Err(Failure::Input(format!(
            "{text}: expected sync:T or async:CELLS"
        )))
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let g = &cli.global;
    let opts = options(g)?;
    let target = |game: &StageGame, t: &Option<String>| match t {
        Some(t) => players(t, game.n()),
        None => Ok(game.players()),
    };
    Ok(match &cli.command {
        Command::Check(a) => commands::check(&load(a, g.seed)?),
        Command::Ne(a) => commands::ne(&load(a, g.seed)?)?,
        Command::Tau { game, target: t } => {
            let game = load(game, g.seed)?;
            commands::tau(&game, target(&game, t)?, opts)?
        }
        Command::Phi { game, t } => commands::phi(&load(game, g.seed)?, *t, opts)?,
        Command::Outcomes { game, t } => commands::outcomes(&load(game, g.seed)?, *t, opts)?,
        Command::Treedepth { game, t } => commands::treedepth(&load(game, g.seed)?, *t, opts)?,
        Command::Design { game, t } => commands::design_cmd(&load(game, g.seed)?, *t, opts)?,
        Command::AsyncSolve { game, partition: p } => {
            let game = load(game, g.seed)?;
            let p = match p {
                Some(text) => partition(text, game.n())?,
                None => Partition::sequential(game.n()),
            };
            commands::async_solve(&game, &p, opts)?
        }
        Command::Centrality(a) => commands::centrality(&load(a, g.seed)?, opts)?,
        Command::Horizons(a) => commands::horizons(&load(a, g.seed)?, opts)?,
        Command::Intervene { game, subsidize, t } => {
            let game = load(game, g.seed)?;
            commands::intervene(&game, players(subsidize, game.n())?, *t, opts)?
        }
        Command::Ordered {
            game,
            target: t,
            sequence,
        } => {
            let game = load(game, g.seed)?;
            commands::ordered(&game, target(&game, t)?, *sequence, opts)?
        }
        Command::Oracle {
            game,
            schedule: s,
            mode,
            no_pledge,
        } => {
            let game = load(game, g.seed)?;
            let sched = schedule(s, game.n())?;
            let mode = match mode {
                ModeArg::Spne => Mode::Spne,
                ModeArg::Mspne => Mode::Mspne,
            };
            let o = OracleOptions {
                cap: opts.budget,
                no_pledge: *no_pledge,
            };
            commands::oracle(&game, &sched, s, mode, o)?
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            if cli.global.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("reports serialise")
                );
            } else {
                print!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            if cli.global.json {
                println!(
                    "{}",
                    json!({ "error": { "kind": f.kind(), "message": f.message() } })
                );
            }
            ExitCode::from(f.code())
        }
    }
}
