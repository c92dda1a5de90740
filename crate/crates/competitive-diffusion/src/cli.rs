//! Command-line front end: one subcommand per solver, machine-readable JSON
//! on stdout, a short human summary on stderr.
//!
//! Exit codes: 0 = answered (equilibrium found / verified), 1 = answered
//! negatively (none / counterexample), 2 = usage or input error, 3 = search
//! budget exceeded.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::engine::{self, NashVerdict, StrategyProfile};
use crate::graph::{self, GameInstance};
use crate::paths::{self, BoundaryCertificate};
use crate::reductions::{self, Certificate, GadgetKind, PartitionInstance};
use crate::search::{self, SearchError, SearchMode};
use crate::structured::{self, GraphClass};

pub const EXIT_ANSWERED: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(
    name = "cdg",
    about = "Competitive diffusion games: simulate, verify and solve",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the diffusion process for one strategy profile.
    Simulate(GameProfileArgs),
    /// Check whether a profile is a pure Nash equilibrium.
    Check(GameProfileArgs),
    /// Best response of one player against the rest of a profile.
    BestResponse {
        #[command(flatten)]
        inputs: GameProfileArgs,
        /// Player index (0-based).
        #[arg(long)]
        player: usize,
    },
    /// Exhaustive equilibrium search over seed multisets.
    BruteForce {
        game: PathBuf,
        /// Enumerate all equilibria up to player permutation.
        #[arg(long)]
        all: bool,
        /// Ceiling on estimated profile-simulations.
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Decide a forest of paths and emit a verified profile.
    SolvePaths {
        game: PathBuf,
        /// Force the weighted or unweighted algorithm (default: unweighted
        /// when all weights are 1).
        #[arg(long, default_value = "auto")]
        algorithm: PathAlgorithm,
    },
    /// Decide a chain, cochain or threshold graph.
    SolveStructured {
        game: PathBuf,
        /// Declared graph class.
        #[arg(long)]
        class: GraphClass,
    },
    /// Materialize a hardness gadget from a source instance.
    Reduce {
        /// Source file: a game JSON for `is` (its `k` is the target set
        /// size), a JSON list of positive integers for the partition kinds.
        input: PathBuf,
        #[arg(long)]
        kind: ReduceKind,
        /// Where to write the gadget game JSON.
        #[arg(long, short)]
        output: PathBuf,
        /// Where to write the role-map JSON.
        #[arg(long, short)]
        roles: PathBuf,
    },
    /// Check a certificate against a gadget: build the prescribed profile,
    /// verify it with the engine, and extract the certificate back.
    VerifyCertificate {
        gadget: PathBuf,
        roles: PathBuf,
        certificate: PathBuf,
    },
}

#[derive(Args)]
struct GameProfileArgs {
    game: PathBuf,
    /// JSON array of vertex ids; player i holds entry i.
    profile: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum PathAlgorithm {
    Auto,
    Weighted,
    Unweighted,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum ReduceKind {
    Is,
    PartitionSp,
    PartitionForest,
}

impl clap::ValueEnum for GraphClass {
    fn value_variants<'a>() -> &'a [Self] {
        &[
            GraphClass::Chain,
            GraphClass::Cochain,
            GraphClass::Threshold,
        ]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(match self {
            GraphClass::Chain => "chain",
            GraphClass::Cochain => "cochain",
            GraphClass::Threshold => "threshold",
        }))
    }
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn read_game(path: &PathBuf) -> Result<GameInstance, InputError> {
    let text =
        fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    graph::load(&text).map_err(InputError::from)
}

fn read_profile(path: &PathBuf, game: &GameInstance) -> Result<StrategyProfile, InputError> {
    let text =
        fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let choices: Vec<usize> =
        serde_json::from_str(&text).map_err(|e| InputError(format!("profile: {e}")))?;
    if choices.len() != game.players() {
        return Err(InputError(format!(
            "profile has {} entries, game has {} players",
            choices.len(),
            game.players()
        )));
    }
    Ok(StrategyProfile::new(choices))
}

fn emit<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("output serializes")
    );
}

/// Parses `argv` and runs the requested command, returning the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error.
            let code = if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_ANSWERED
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            EXIT_INPUT
        }
    }
}

fn dispatch(command: Command) -> Result<i32, InputError> {
    match command {
        Command::Simulate(inputs) => simulate_cmd(&inputs),
        Command::Check(inputs) => check_cmd(&inputs),
        Command::BestResponse { inputs, player } => best_response_cmd(&inputs, player),
        Command::BruteForce { game, all, budget } => brute_force_cmd(&game, all, budget),
        Command::SolvePaths { game, algorithm } => solve_paths_cmd(&game, algorithm),
        Command::SolveStructured { game, class } => solve_structured_cmd(&game, class),
        Command::Reduce {
            input,
            kind,
            output,
            roles,
        } => reduce_cmd(&input, kind, &output, &roles),
        Command::VerifyCertificate {
            gadget,
            roles,
            certificate,
        } => verify_certificate_cmd(&gadget, &roles, &certificate),
    }
}

#[derive(Serialize)]
struct VertexStateJson {
    id: usize,
    state: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    player: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    time: Option<u32>,
}

fn simulate_cmd(inputs: &GameProfileArgs) -> Result<i32, InputError> {
    let game = read_game(&inputs.game)?;
    let profile = read_profile(&inputs.profile, &game)?;
    let outcome = engine::simulate(&game, &profile)?;

    #[derive(Serialize)]
    struct Output {
        vertices: Vec<VertexStateJson>,
        utilities: Vec<i64>,
    }
    let vertices = outcome
        .fates
        .iter()
        .enumerate()
        .map(|(id, fate)| match *fate {
            engine::VertexFate::Dominated { player, time } => VertexStateJson {
                id,
                state: "dominated",
                player: Some(player),
                time: Some(time),
            },
            engine::VertexFate::Neutral { time } => VertexStateJson {
                id,
                state: "neutral",
                player: None,
                time: Some(time),
            },
            engine::VertexFate::Undominated => VertexStateJson {
                id,
                state: "undominated",
                player: None,
                time: None,
            },
        })
        .collect();
    emit(&Output {
        vertices,
        utilities: outcome.utilities.clone(),
    });
    eprintln!("utilities: {:?}", outcome.utilities);
    Ok(EXIT_ANSWERED)
}

fn check_cmd(inputs: &GameProfileArgs) -> Result<i32, InputError> {
    let game = read_game(&inputs.game)?;
    let profile = read_profile(&inputs.profile, &game)?;

    #[derive(Serialize)]
    struct Output {
        equilibrium: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        counterexample: Option<engine::ImprovingDeviation>,
    }
    match engine::is_nash(&game, &profile)? {
        NashVerdict::Equilibrium => {
            emit(&Output {
                equilibrium: true,
                counterexample: None,
            });
            eprintln!("equilibrium");
            Ok(EXIT_ANSWERED)
        }
        NashVerdict::Counterexample(dev) => {
            eprintln!(
                "counterexample: player {} moves to vertex {} for {} (+{})",
                dev.player,
                dev.vertex,
                dev.deviation_utility,
                dev.gain()
            );
            emit(&Output {
                equilibrium: false,
                counterexample: Some(dev),
            });
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn best_response_cmd(inputs: &GameProfileArgs, player: usize) -> Result<i32, InputError> {
    let game = read_game(&inputs.game)?;
    let profile = read_profile(&inputs.profile, &game)?;
    let (vertex, utility) = engine::best_response(&game, &profile, player)?;

    #[derive(Serialize)]
    struct Output {
        player: usize,
        vertex: usize,
        utility: i64,
    }
    emit(&Output {
        player,
        vertex,
        utility,
    });
    eprintln!("player {player}: vertex {vertex} pays {utility}");
    Ok(EXIT_ANSWERED)
}

fn brute_force_cmd(game: &PathBuf, all: bool, budget: Option<u128>) -> Result<i32, InputError> {
    let game = read_game(game)?;
    let mode = if all {
        SearchMode::All
    } else {
        SearchMode::First
    };

    #[derive(Serialize)]
    struct Output {
        found: Option<Vec<usize>>,
        profiles_checked: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        equilibria: Option<Vec<Vec<usize>>>,
    }
    match search::brute_force(&game, mode, budget) {
        Ok(report) => {
            let found = report.found.as_ref().map(|p| p.choices().to_vec());
            let code = if found.is_some() {
                eprintln!("equilibrium found");
                EXIT_ANSWERED
            } else {
                eprintln!("no equilibrium");
                EXIT_NEGATIVE
            };
            emit(&Output {
                found,
                profiles_checked: report.profiles_checked,
                equilibria: report
                    .equilibria
                    .map(|all| all.iter().map(|p| p.choices().to_vec()).collect()),
            });
            Ok(code)
        }
        Err(SearchError::BudgetExceeded {
            n,
            k,
            estimated,
            budget,
        }) => {
            eprintln!(
                "budget exceeded: n = {n}, k = {k} needs about {estimated} \
                 profile-simulations, budget {budget}"
            );
            Ok(EXIT_BUDGET)
        }
        Err(SearchError::Engine(e)) => Err(e.into()),
    }
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
enum CertificateJson {
    Common {
        t: i64,
    },
    Split {
        extra_cap: i64,
        utility_floor: i64,
        pivot: usize,
    },
    Cover,
}

fn solve_paths_cmd(game: &PathBuf, algorithm: PathAlgorithm) -> Result<i32, InputError> {
    let game = read_game(game)?;
    let k = game.players();
    let (forest, layout) = paths::decompose_into_paths(&game.graph)?;
    let unit = forest.is_unit_weight().is_ok();
    let use_unweighted = match algorithm {
        PathAlgorithm::Auto => unit,
        PathAlgorithm::Unweighted => true,
        PathAlgorithm::Weighted => false,
    };

    #[derive(Serialize)]
    struct Output {
        exists: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        certificate: Option<CertificateJson>,
        #[serde(skip_serializing_if = "Option::is_none")]
        kappas: Option<Vec<usize>>,
        /// Seeds in the input graph's vertex ids.
        #[serde(skip_serializing_if = "Option::is_none")]
        profile: Option<Vec<usize>>,
    }

    let (certificate, kappas, path_profiles) = if use_unweighted {
        match paths::solve_forest_unweighted(&forest, k)? {
            None => {
                emit(&Output {
                    exists: false,
                    certificate: None,
                    kappas: None,
                    profile: None,
                });
                eprintln!("no equilibrium");
                return Ok(EXIT_NEGATIVE);
            }
            Some(solution) => {
                let certificate = if solution.t == 0 {
                    CertificateJson::Cover
                } else {
                    CertificateJson::Common { t: solution.t }
                };
                (certificate, solution.kappas, solution.path_profiles)
            }
        }
    } else {
        match paths::solve_forest_weighted(&forest, k)? {
            None => {
                emit(&Output {
                    exists: false,
                    certificate: None,
                    kappas: None,
                    profile: None,
                });
                eprintln!("no equilibrium");
                return Ok(EXIT_NEGATIVE);
            }
            Some(solution) => {
                let certificate = match solution.certificate {
                    BoundaryCertificate::Common { t } => CertificateJson::Common { t },
                    BoundaryCertificate::Split {
                        extra_cap,
                        utility_floor,
                        pivot,
                    } => CertificateJson::Split {
                        extra_cap,
                        utility_floor,
                        pivot,
                    },
                };
                (certificate, solution.kappas, solution.path_profiles)
            }
        }
    };

    // Map path-local seeds back to the input graph's vertex ids, then
    // re-verify on the original instance before printing.
    let mut choices = Vec::with_capacity(k);
    for (path, seeds) in path_profiles.iter().enumerate() {
        for &pos in seeds {
            choices.push(layout.to_original(path, pos));
        }
    }
    let profile = StrategyProfile::new(choices);
    if engine::is_nash(&game, &profile)? != NashVerdict::Equilibrium {
        return Err(InputError(
            "internal error: solver profile failed re-verification".to_owned(),
        ));
    }
    eprintln!("equilibrium found: kappas {kappas:?}");
    emit(&Output {
        exists: true,
        certificate: Some(certificate),
        kappas: Some(kappas),
        profile: Some(profile.choices().to_vec()),
    });
    Ok(EXIT_ANSWERED)
}

fn solve_structured_cmd(game: &PathBuf, class: GraphClass) -> Result<i32, InputError> {
    let game = read_game(game)?;
    let ordered = structured::recognize_and_order(&game.graph, class)?;

    #[derive(Serialize)]
    struct Output {
        exists: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        profile: Option<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        top_x: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        top_y: Option<usize>,
    }
    match structured::solve_chain(&ordered, game.players())? {
        Some(solution) => {
            if engine::is_nash(&game, &solution.profile)? != NashVerdict::Equilibrium {
                return Err(InputError(
                    "internal error: solver profile failed re-verification".to_owned(),
                ));
            }
            eprintln!(
                "equilibrium found with tops ({}, {})",
                solution.top_x, solution.top_y
            );
            emit(&Output {
                exists: true,
                profile: Some(solution.profile.choices().to_vec()),
                top_x: Some(solution.top_x),
                top_y: Some(solution.top_y),
            });
            Ok(EXIT_ANSWERED)
        }
        None => {
            emit(&Output {
                exists: false,
                profile: None,
                top_x: None,
                top_y: None,
            });
            eprintln!("no equilibrium");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn reduce_cmd(
    input: &PathBuf,
    kind: ReduceKind,
    output: &PathBuf,
    roles: &PathBuf,
) -> Result<i32, InputError> {
    let gadget = match kind {
        ReduceKind::Is => {
            let source = read_game(input)?;
            reductions::build_is_gadget(&source.graph, source.players())?
        }
        ReduceKind::PartitionSp | ReduceKind::PartitionForest => {
            let text = fs::read_to_string(input)
                .map_err(|e| InputError(format!("{}: {e}", input.display())))?;
            let values: Vec<i64> =
                serde_json::from_str(&text).map_err(|e| InputError(format!("partition: {e}")))?;
            let instance = PartitionInstance::new(values)?;
            match kind {
                ReduceKind::PartitionSp => reductions::build_partition_sp_gadget(&instance)?,
                _ => reductions::build_partition_forest_gadget(&instance)?,
            }
        }
    };
    fs::write(output, graph::save(&gadget.game))
        .map_err(|e| InputError(format!("{}: {e}", output.display())))?;
    fs::write(roles, reductions::roles_to_json(&gadget))
        .map_err(|e| InputError(format!("{}: {e}", roles.display())))?;

    #[derive(Serialize)]
    struct Output {
        kind: GadgetKind,
        vertices: usize,
        players: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        lambda: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        alpha: Option<i64>,
    }
    emit(&Output {
        kind: gadget.kind,
        vertices: gadget.game.graph.vertex_count(),
        players: gadget.game.players(),
        lambda: gadget.lambda,
        alpha: gadget.alpha,
    });
    eprintln!(
        "wrote {} ({} vertices, {} players) and {}",
        output.display(),
        gadget.game.graph.vertex_count(),
        gadget.game.players(),
        roles.display()
    );
    Ok(EXIT_ANSWERED)
}

fn verify_certificate_cmd(
    gadget_path: &PathBuf,
    roles_path: &PathBuf,
    certificate_path: &PathBuf,
) -> Result<i32, InputError> {
    let game = read_game(gadget_path)?;
    let roles_text = fs::read_to_string(roles_path)
        .map_err(|e| InputError(format!("{}: {e}", roles_path.display())))?;
    let gadget = reductions::gadget_from_parts(game, &roles_text)?;
    let cert_text = fs::read_to_string(certificate_path)
        .map_err(|e| InputError(format!("{}: {e}", certificate_path.display())))?;
    let certificate: Certificate =
        serde_json::from_str(&cert_text).map_err(|e| InputError(format!("certificate: {e}")))?;

    let profile = reductions::certificate_to_profile(&gadget, &certificate)?;
    let outcome = engine::simulate(&gadget.game, &profile)?;
    let verdict = engine::is_nash(&gadget.game, &profile)?;
    let equilibrium = verdict == NashVerdict::Equilibrium;
    let roundtrip = equilibrium
        && reductions::profile_to_certificate(&gadget, &profile)
            .map(|back| back == certificate)
            .unwrap_or(false);

    #[derive(Serialize)]
    struct Output {
        equilibrium: bool,
        roundtrip: bool,
        profile: Vec<usize>,
        utilities: Vec<i64>,
    }
    emit(&Output {
        equilibrium,
        roundtrip,
        profile: profile.choices().to_vec(),
        utilities: outcome.utilities,
    });
    if equilibrium && roundtrip {
        eprintln!("certificate verified");
        Ok(EXIT_ANSWERED)
    } else {
        eprintln!("certificate failed verification");
        Ok(EXIT_NEGATIVE)
    }
}
