//! `bfrac`: evaluate conditional-event expressions over a space file.
//!
//! Exit status: 0 on success or when every checked law passes, 1 on a
//! domain error or a failing law, 2 on usage and parse errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bfrac::lang::{format_conditional, lower, parse_expr, parse_space, Expr, SpaceDoc};
use bfrac::lawcheck::{Checker, LawId, MAX_CHECK_ALL_ATOMS};
use bfrac::prob::Mode;
use bfrac::rel::{self, Relation};
use bfrac::trival::eval_at;
use bfrac::{Conditional, Error, Probability};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bfrac",
    version,
    about = "Boolean fractions: a conditional event algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an expression, or its value at one atom.
    Eval {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        expr: String,
        /// Atom at which to evaluate, printing T, F or U.
        #[arg(long)]
        state: Option<String>,
    },
    /// Print the exact conditional probability of an expression.
    Prob {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        measure: String,
        #[arg(long)]
        expr: String,
        /// Compute a top-level `or`/`and` through its decomposition formula.
        #[arg(long, value_enum, default_value_t = Formula::Direct)]
        formula: Formula,
    },
    /// Decide a relation between two expressions.
    Relate {
        #[arg(long)]
        space: PathBuf,
        /// tr, nf, ap, pm, vee, wedge, bo, orth, simver, simfals, compat or subalg.
        #[arg(long)]
        rel: String,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Print the seven simultaneous-verifiability flags.
    Profile {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Check catalog laws exhaustively over the space with atoms 1..=n.
    Check {
        /// A catalog id such as t2.4, or `all`.
        #[arg(long)]
        law: String,
        #[arg(long)]
        atoms: usize,
        /// Largest per-atom weight of the measure grid.
        #[arg(long)]
        grid: Option<u64>,
    },
    /// Print the parse tree of an expression as an S-expression.
    Parse {
        #[arg(long)]
        expr: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Formula {
    Or,
    And,
    Direct,
}

/// A diagnostic and the exit status that goes with it.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

/// Syntax and catalog errors are usage errors; everything else is a
/// domain error.
impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        match err.root() {
            Error::Parse(_)
            | Error::EmptySpace
            | Error::UnknownLaw(_)
            | Error::UnknownRelation(_)
            | Error::TooLarge { .. } => Failure::usage(err.to_string()),
            _ => Failure::domain(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) if !err.use_stderr() => {
            let _ = err.print();
            return ExitCode::SUCCESS;
        }
        Err(err) => {
            // Keep the diagnostic to one line: drop the usage block and
            // fold the remaining lines together.
            let rendered = err.render().to_string();
            let message: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            eprintln!("{}", message.join(" "));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Eval { space, expr, state } => {
            let doc = load(&space)?;
            let c = eval(&doc, &expr)?;
            match state {
                None => println!("{}", format_conditional(&c, &doc.space)),
                Some(atom) => println!("{}", eval_at(&c, doc.space.atom_index(&atom)?)?),
            }
        }
        Command::Prob {
            space,
            measure,
            expr,
            formula,
        } => {
            let doc = load(&space)?;
            let m = doc
                .measure(&measure)
                .ok_or_else(|| Failure::domain(format!("unknown measure `{measure}`")))?;
            let tree = parse(&expr)?;
            let direct = m.p_cond(&lower(&tree, &doc)?)?;
            let p = match (formula, &tree) {
                (Formula::Direct, _) => direct,
                (Formula::Or, Expr::Or(x, y)) => {
                    let (x, y) = (lower(x, &doc)?, lower(y, &doc)?);
                    agree(m.p_or_formula(&x, &y)?.value, direct)?
                }
                (Formula::And, Expr::And(x, y)) => {
                    let (x, y) = (lower(x, &doc)?, lower(y, &doc)?);
                    agree(m.p_superposition(&x, &y, Mode::And)?.value, direct)?
                }
                (Formula::Or, _) => {
                    return Err(Failure::usage("--formula or needs a top-level `or`"))
                }
                (Formula::And, _) => {
                    return Err(Failure::usage("--formula and needs a top-level `and`"))
                }
            };
            println!("{p} ({})", p.to_decimal(6));
        }
        Command::Relate {
            space,
            rel,
            lhs,
            rhs,
        } => {
            let doc = load(&space)?;
            let (x, y) = (eval(&doc, &lhs)?, eval(&doc, &rhs)?);
            let holds = match rel.as_str() {
                "orth" => rel::orthogonal(&x, &y)?,
                "simver" => rel::sim_verifiable(&x, &y)?,
                "simfals" => rel::sim_falsifiable(&x, &y)?,
                "compat" => rel::compatible(&x, &y)?.compatible,
                "subalg" => rel::compatible(&x, &y)?.in_common_subalgebra,
                tag => rel::holds(tag.parse::<Relation>()?, &x, &y)?,
            };
            println!("{holds}");
        }
        Command::Profile { space, lhs, rhs } => {
            let doc = load(&space)?;
            let profile = rel::profile(&eval(&doc, &lhs)?, &eval(&doc, &rhs)?)?;
            for i in 1..=profile.flags.len() {
                println!("{i}={}", profile.flag(i));
            }
        }
        Command::Check { law, atoms, grid } => {
            let laws = LawId::select(&law)?;
            let mut checker = Checker::default();
            if let Some(g) = grid {
                checker.grid_max = g;
            }
            let all = laws.len() > 1;
            if all && atoms > MAX_CHECK_ALL_ATOMS {
                return Err(Failure::usage(format!(
                    "the full law catalog supports at most {MAX_CHECK_ALL_ATOMS} atoms, got {atoms}"
                )));
            }
            let mut passed = true;
            for law in laws {
                let n = if all {
                    atoms.min(law.max_atoms())
                } else {
                    atoms
                };
                let report = checker.check(law, n)?;
                passed &= report.passed;
                println!("{report}");
            }
            return Ok(if passed { 0 } else { 1 });
        }
        Command::Parse { expr } => println!("{}", parse(&expr)?),
    }
    Ok(0)
}

fn load(path: &Path) -> Result<SpaceDoc, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_space(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn parse(expr: &str) -> Result<Expr, Failure> {
    parse_expr(expr).map_err(|e| Failure::usage(e.to_string()))
}

fn eval(doc: &SpaceDoc, expr: &str) -> Result<Conditional, Failure> {
    Ok(lower(&parse(expr)?, doc)?)
}

fn agree(formula: Probability, direct: Probability) -> Result<Probability, Failure> {
    if formula != direct {
        return Err(Failure::domain(format!(
            "formula gives {formula} but the direct value is {direct}"
        )));
    }
    Ok(formula)
}
