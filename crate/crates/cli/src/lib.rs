//! Command-line front end: argument parsing, file loading and report text.
//!
//! [`run`] returns the report as a string so it can be tested without a
//! process; the binary only prints it and maps errors to exit codes.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxstable_core::cut::{format_cut, max_weight_ideal_cut, parse_dag, validate_dag};
use maxstable_core::decimal::format_scaled;
use maxstable_core::matching::{
    dominates, parse_instance, parse_weights, preset_desirable_undesirable, preset_egalitarian,
    Instance, Matching, Sense, WeightFunction,
};
use maxstable_core::oracle;
use maxstable_core::reduction::solve_max_weight;
use maxstable_core::rotation::{build_poset, format_poset};
use maxstable_core::sublattice::{
    boy_optimal_max, enumerate_max_matchings, girl_optimal_max, meta_rotation_poset,
    solve_bi_objective,
};
use maxstable_core::Error;

#[derive(Debug, Parser)]
#[command(name = "maxstable", version, about = "Maximum-weight stable matchings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a maximum-weight stable matching.
    Solve {
        instance: PathBuf,
        #[command(flatten)]
        weights: WeightArgs,
        /// Report the boy- or girl-optimal maximum-weight matching.
        #[arg(long, value_enum)]
        pole: Option<Pole>,
        /// Use brute force instead (n <= 8).
        #[arg(long)]
        oracle: bool,
    },
    /// List every maximum-weight stable matching.
    Enumerate {
        instance: PathBuf,
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        cap: u64,
    },
    /// Print the rotation poset.
    Poset { instance: PathBuf },
    /// Find a maximum-weight ideal cut of a DAG file.
    CutSolve {
        dag: PathBuf,
        /// Use brute force instead (at most 20 vertices).
        #[arg(long)]
        oracle: bool,
    },
    /// Maximize a second weight function over the optima of the first.
    BiObjective {
        instance: PathBuf,
        #[command(flatten)]
        weights: WeightArgs,
        #[command(flatten)]
        weights2: SecondWeightArgs,
        /// Use brute force instead (n <= 8).
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    EgalitarianMin,
    EgalitarianMax,
    DesirableUndesirable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Pole {
    Boy,
    Girl,
}

#[derive(Debug, Clone, Args)]
pub struct WeightArgs {
    /// Weight matrix file.
    #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
    pub weights: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Pair `b:g` (1-based) weighted +1 by the desirable-undesirable preset.
    #[arg(long, value_parser = parse_pair)]
    pub desirable: Vec<(usize, usize)>,
    /// Pair `b:g` (1-based) weighted -1 by the desirable-undesirable preset.
    #[arg(long, value_parser = parse_pair)]
    pub undesirable: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Args)]
pub struct SecondWeightArgs {
    #[arg(long, conflicts_with = "preset2", required_unless_present = "preset2")]
    pub weights2: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub preset2: Option<Preset>,
    #[arg(long, value_parser = parse_pair)]
    pub desirable2: Vec<(usize, usize)>,
    #[arg(long, value_parser = parse_pair)]
    pub undesirable2: Vec<(usize, usize)>,
}

impl SecondWeightArgs {
    fn first(&self) -> WeightArgs {
        WeightArgs {
            weights: self.weights2.clone(),
            preset: self.preset2,
            desirable: self.desirable2.clone(),
            undesirable: self.undesirable2.clone(),
        }
    }
}

/// Parses `b:g` with 1-based ids into a 0-based pair.
pub fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (b, g) = s.split_once(':').ok_or("expected `b:g`")?;
    let id = |x: &str| match x.trim().parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v - 1),
        _ => Err(format!("`{x}` is not a positive integer")),
    };
    Ok((id(b)?, id(g)?))
}

/// Failure of a run, split by exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunError {
    /// Unreadable or malformed input, or a refused request. Exit code 1.
    Input(String),
    /// A broken internal contract. Exit code 2.
    Contract(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input(_) => 1,
            RunError::Contract(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            RunError::Input(m) | RunError::Contract(m) => m,
        }
    }

    fn from_core(e: Error, context: Option<&Path>) -> Self {
        let text = match context {
            Some(path) => format!("{}: {e}", path.display()),
            None => e.to_string(),
        };
        if e.is_contract_violation() {
            RunError::Contract(text)
        } else {
            RunError::Input(text)
        }
    }
}

type RunResult<T> = Result<T, RunError>;

trait Context<T> {
    fn at(self, path: &Path) -> RunResult<T>;
    fn core(self) -> RunResult<T>;
}

impl<T> Context<T> for maxstable_core::Result<T> {
    fn at(self, path: &Path) -> RunResult<T> {
        self.map_err(|e| RunError::from_core(e, Some(path)))
    }

    fn core(self) -> RunResult<T> {
        self.map_err(|e| RunError::from_core(e, None))
    }
}

fn read(path: &Path) -> RunResult<String> {
    fs::read_to_string(path).map_err(|e| RunError::Input(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> RunResult<Instance> {
    parse_instance(&read(path)?).at(path)
}

fn load_weights(args: &WeightArgs, inst: &Instance) -> RunResult<WeightFunction> {
    let preset_pairs = !args.desirable.is_empty() || !args.undesirable.is_empty();
    if preset_pairs && args.preset != Some(Preset::DesirableUndesirable) {
        return Err(RunError::Input(
            "desirable/undesirable pairs need the desirable-undesirable preset".into(),
        ));
    }
    match (&args.weights, args.preset) {
        (Some(path), None) => parse_weights(&read(path)?, inst.n()).at(path),
        (None, Some(Preset::EgalitarianMin)) => Ok(preset_egalitarian(inst, Sense::Minimize)),
        (None, Some(Preset::EgalitarianMax)) => Ok(preset_egalitarian(inst, Sense::Maximize)),
        (None, Some(Preset::DesirableUndesirable)) => {
            preset_desirable_undesirable(inst, &args.desirable, &args.undesirable).core()
        }
        _ => Err(RunError::Input(
            "give exactly one of a weights file or a preset".into(),
        )),
    }
}

fn write_pairs(out: &mut String, m: &Matching) {
    for (b, g) in m.pairs() {
        writeln!(out, "{} {}", b + 1, g + 1).unwrap();
    }
}

/// Among `ms`, the one that dominates (boy pole) or is dominated by (girl
/// pole) all others.
fn oracle_pole(inst: &Instance, ms: &[Matching], pole: Pole) -> RunResult<Matching> {
    ms.iter()
        .find(|m| {
            ms.iter().all(|o| match pole {
                Pole::Boy => dominates(m, o, inst),
                Pole::Girl => dominates(o, m, inst),
            })
        })
        .cloned()
        .ok_or_else(|| RunError::Contract("maximum-weight matchings have no pole".into()))
}

/// Executes one command and returns its report.
pub fn run(cli: &Cli) -> RunResult<String> {
    let mut out = String::new();
    match &cli.command {
        Command::Solve {
            instance,
            weights,
            pole,
            oracle: use_oracle,
        } => {
            let inst = load_instance(instance)?;
            let w = load_weights(weights, &inst)?;
            let (m, weight) = match (pole, use_oracle) {
                (None, false) => {
                    let sol = solve_max_weight(&inst, &w).core()?;
                    (sol.matching, sol.weight)
                }
                (None, true) => oracle::brute_max_weight_matching(&inst, &w).core()?,
                (Some(pole), false) => {
                    let p = meta_rotation_poset(&inst, &w).core()?;
                    let m = match pole {
                        Pole::Boy => boy_optimal_max(&p),
                        Pole::Girl => girl_optimal_max(&p),
                    };
                    (m, p.optimum_weight())
                }
                (Some(pole), true) => {
                    let (ms, weight) = oracle::all_max_weight_matchings(&inst, &w).core()?;
                    (oracle_pole(&inst, &ms, *pole)?, weight)
                }
            };
            writeln!(out, "weight {}", w.format(weight)).unwrap();
            write_pairs(&mut out, &m);
        }
        Command::Enumerate {
            instance,
            weights,
            cap,
        } => {
            let inst = load_instance(instance)?;
            let w = load_weights(weights, &inst)?;
            let p = meta_rotation_poset(&inst, &w).core()?;
            let cap = usize::try_from(*cap).unwrap_or(usize::MAX);
            let all = enumerate_max_matchings(&p, cap).core()?;
            writeln!(out, "count {}", all.items.len()).unwrap();
            writeln!(out, "weight {}", w.format(p.optimum_weight())).unwrap();
            for (i, m) in all.items.iter().enumerate() {
                writeln!(out, "matching {}", i + 1).unwrap();
                write_pairs(&mut out, m);
            }
            let flag = if all.truncated { "yes" } else { "no" };
            writeln!(out, "truncated: {flag}").unwrap();
        }
        Command::Poset { instance } => {
            let inst = load_instance(instance)?;
            let poset = build_poset(&inst).core()?;
            out.push_str(&format_poset(&poset));
        }
        Command::CutSolve {
            dag,
            oracle: use_oracle,
        } => {
            let (g, scale) = parse_dag(&read(dag)?).at(dag)?;
            validate_dag(&g).at(dag)?;
            let (cut, weight) = if *use_oracle {
                oracle::brute_max_weight_cut(&g).core()?
            } else {
                max_weight_ideal_cut(&g)
            };
            writeln!(out, "weight {}", format_scaled(weight, scale)).unwrap();
            writeln!(out, "{}", format_cut(&cut)).unwrap();
        }
        Command::BiObjective {
            instance,
            weights,
            weights2,
            oracle: use_oracle,
        } => {
            let inst = load_instance(instance)?;
            let w1 = load_weights(weights, &inst)?;
            let w2 = load_weights(&weights2.first(), &inst)?;
            let (m, x1, x2) = if *use_oracle {
                oracle::brute_bi_objective(&inst, &w1, &w2).core()?
            } else {
                let sol = solve_bi_objective(&inst, &w1, &w2).core()?;
                (sol.matching, sol.weight1, sol.weight2)
            };
            writeln!(out, "weight1 {}", w1.format(x1)).unwrap();
            writeln!(out, "weight2 {}", w2.format(x2)).unwrap();
            write_pairs(&mut out, &m);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs() {
        assert_eq!(parse_pair("1:2"), Ok((0, 1)));
        assert_eq!(parse_pair(" 3 : 4 "), Ok((2, 3)));
        assert!(parse_pair("0:1").is_err());
        assert!(parse_pair("1-2").is_err());
        assert!(parse_pair("a:1").is_err());
    }

    #[test]
    fn weight_source_is_required() {
        assert!(Cli::try_parse_from(["maxstable", "solve", "x"]).is_err());
        assert!(Cli::try_parse_from([
            "maxstable",
            "solve",
            "x",
            "--weights",
            "w",
            "--preset",
            "egalitarian-min"
        ])
        .is_err());
        assert!(
            Cli::try_parse_from(["maxstable", "solve", "x", "--preset", "egalitarian-min"]).is_ok()
        );
        assert!(Cli::try_parse_from([
            "maxstable",
            "enumerate",
            "x",
            "--preset",
            "egalitarian-max",
            "--cap",
            "0"
        ])
        .is_err());
        assert!(Cli::try_parse_from(["maxstable", "bi-objective", "x", "--weights", "w"]).is_err());
    }

    #[test]
    fn error_codes() {
        assert_eq!(RunError::Input(String::new()).exit_code(), 1);
        assert_eq!(RunError::Contract(String::new()).exit_code(), 2);
        let missing = Cli::try_parse_from(["maxstable", "poset", "/nonexistent/file"]).unwrap();
        let err = run(&missing).unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(err.message().contains("/nonexistent/file"));
    }
}
