//! Command line front end.
//!
//! Exit codes: 0 when every checked identity or property holds, 1 when a
//! check fails, 2 on usage errors.

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::exactnum::{RatFunc, Rational};
use crate::identities::{self, IdentityId, IdentityReport};
use crate::involution::{self, IllegalCase, IncreasingTree};
use crate::series;
use crate::trees::{enumerate_ordered, FamilyParams, TreeFormat};

#[derive(Debug, Parser)]
#[command(
    name = "hooklen",
    version,
    about = "Exact checks of hook length identities for binomial tree families"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate both sides of an identity for n = 1..=n_max.
    Verify {
        #[arg(long)]
        identity: IdentityId,
        /// `s,m` (e.g. `1/3,3`) or a preset: binary, ordered, kary:k, negk:k, recip:m.
        #[arg(long, allow_hyphen_values = true)]
        family: Option<FamilyParams>,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
        format: VerifyFormat,
        /// Added to every right side before comparing; exercises the failure path.
        #[arg(long, hide = true, allow_hyphen_values = true)]
        perturb_rhs: Option<Rational>,
    },
    /// List every ordered tree with n vertices.
    Trees {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TreesFormat::Paren)]
        format: TreesFormat,
    },
    /// Run the sign-reversing involution on increasing ordered trees.
    Involution {
        #[arg(long, required_unless_present = "tree")]
        n: Option<usize>,
        /// A single tree in labeled paren form, e.g. `1(3() 2())`.
        #[arg(long, conflicts_with = "n")]
        tree: Option<String>,
        #[arg(long, value_enum, default_value_t = InvolutionFormat::Text)]
        format: InvolutionFormat,
    },
    /// Print a truncated generating function.
    Series {
        #[arg(long, value_enum)]
        kind: SeriesKind,
        #[arg(long, allow_hyphen_values = true)]
        family: Option<FamilyParams>,
        #[arg(long)]
        order: usize,
    },
    /// Print the expanded polynomial q_n for a family.
    Qpoly {
        #[arg(long, allow_hyphen_values = true)]
        family: FamilyParams,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TreesFormat {
    Paren,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InvolutionFormat {
    Text,
    Paren,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// `y = x (1 + s y)^m`; needs --family.
    Y,
    /// `u = exp(x u)`.
    U,
    /// `u^z` with symbolic `z`, checked against its closed coefficients.
    Uz,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionTarget {
    All(usize),
    Single(IncreasingTree),
}

/// A validated command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunConfig {
    Verify {
        identity: IdentityId,
        family: FamilyParams,
        n_max: usize,
        format: VerifyFormat,
        perturb_rhs: Option<Rational>,
    },
    Trees {
        n: usize,
        format: TreesFormat,
    },
    Involution {
        target: InvolutionTarget,
        format: InvolutionFormat,
    },
    Series {
        kind: SeriesKind,
        family: Option<FamilyParams>,
        order: usize,
    },
    Qpoly {
        family: FamilyParams,
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success,
    CheckFailed,
    Usage,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::CheckFailed => 1,
            ExitStatus::Usage => 2,
        }
    }

    fn from_check(ok: bool) -> Self {
        if ok {
            ExitStatus::Success
        } else {
            ExitStatus::CheckFailed
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum UsageError {
    #[error("--family is required for `{0}`")]
    MissingFamily(&'static str),
    #[error("{0} must be at least 1")]
    ZeroSize(&'static str),
    #[error(transparent)]
    Invalid(#[from] Error),
}

fn positive(value: usize, what: &'static str) -> Result<usize, UsageError> {
    if value == 0 {
        Err(UsageError::ZeroSize(what))
    } else {
        Ok(value)
    }
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfig, UsageError> {
        Ok(match self.command {
            Command::Verify {
                identity,
                family,
                n_max,
                format,
                perturb_rhs,
            } => {
                let family = match family {
                    Some(f) => f,
                    None if !identity.uses_family() => {
                        identity.effective_family(&FamilyParams::binary())
                    }
                    None => return Err(UsageError::MissingFamily("verify")),
                };
                RunConfig::Verify {
                    identity,
                    family,
                    n_max: positive(n_max, "--n-max")?,
                    format,
                    perturb_rhs,
                }
            }
            Command::Trees { n, format } => RunConfig::Trees {
                n: positive(n, "--n")?,
                format,
            },
            Command::Involution { n, tree, format } => {
                let target = match (n, tree) {
                    (_, Some(text)) => {
                        InvolutionTarget::Single(IncreasingTree::parse_labeled_paren(&text)?)
                    }
                    (Some(n), None) => InvolutionTarget::All(positive(n, "--n")?),
                    (None, None) => return Err(UsageError::ZeroSize("--n")),
                };
                RunConfig::Involution { target, format }
            }
            Command::Series {
                kind,
                family,
                order,
            } => {
                if kind == SeriesKind::Y && family.is_none() {
                    return Err(UsageError::MissingFamily("series --kind y"));
                }
                RunConfig::Series {
                    kind,
                    family,
                    order: positive(order, "--order")?,
                }
            }
            Command::Qpoly { family, n } => RunConfig::Qpoly {
                family,
                n: positive(n, "--n")?,
            },
        })
    }
}

/// Executes `config`, writing all output to `out`.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> ExitStatus {
    match execute(config, out) {
        Ok(status) => status,
        Err(err) => {
            eprintln!("error: {err}");
            ExitStatus::Usage
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum RunError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Domain(#[from] Error),
}

fn execute(config: &RunConfig, out: &mut dyn Write) -> Result<ExitStatus, RunError> {
    match config {
        RunConfig::Verify {
            identity,
            family,
            n_max,
            format,
            perturb_rhs,
        } => {
            let mut reports = identities::verify(*identity, family, *n_max)?;
            if let Some(offset) = perturb_rhs {
                let offset = RatFunc::from(offset.clone());
                reports = reports
                    .into_iter()
                    .map(|r| IdentityReport::new(r.id, r.family, r.n, r.lhs, &r.rhs + &offset))
                    .collect();
            }
            match format {
                VerifyFormat::Text => {
                    out.write_all(identities::render_table(&reports).as_bytes())?
                }
                VerifyFormat::Csv => {
                    for r in &reports {
                        writeln!(out, "{}", r.csv_line())?;
                    }
                }
            }
            Ok(ExitStatus::from_check(reports.iter().all(|r| r.holds)))
        }
        RunConfig::Trees { n, format } => {
            let format = match format {
                TreesFormat::Paren => TreeFormat::Paren,
                TreesFormat::Json => TreeFormat::Json,
                TreesFormat::Dot => TreeFormat::Dot,
            };
            for tree in enumerate_ordered(*n)? {
                let text = tree.serialize(format);
                out.write_all(text.as_bytes())?;
                if !text.ends_with('\n') {
                    out.write_all(b"\n")?;
                }
            }
            Ok(ExitStatus::Success)
        }
        RunConfig::Involution { target, format } => match target {
            InvolutionTarget::Single(tree) => involution_single(tree, *format, out),
            InvolutionTarget::All(n) => involution_all(*n, *format, out),
        },
        RunConfig::Series {
            kind,
            family,
            order,
        } => {
            let (s, ok) = match kind {
                SeriesKind::Y => {
                    let fam = family.as_ref().expect("validated in into_config");
                    (series::solve_y(fam, *order), true)
                }
                SeriesKind::U => (series::solve_u(*order), true),
                SeriesKind::Uz => (series::u_pow_z(*order), series::verify_lagrange(*order)),
            };
            writeln!(out, "{s}")?;
            Ok(ExitStatus::from_check(ok))
        }
        RunConfig::Qpoly { family, n } => {
            let q = identities::q_direct(*n, family)?;
            writeln!(out, "{q}")?;
            Ok(ExitStatus::from_check(
                q == identities::q_closed(*n, family)?,
            ))
        }
    }
}

fn sign_str(sign: i32) -> &'static str {
    if sign > 0 {
        "+1"
    } else {
        "-1"
    }
}

fn describe_case(tree: &IncreasingTree) -> String {
    match tree.find_first_illegal_leaf() {
        None => "fixed".to_string(),
        Some(f) => match f.case {
            IllegalCase::NextSiblingProper => format!(
                "leaf {} before proper sibling {}",
                f.leaf,
                f.next_sibling.expect("case carries the sibling")
            ),
            IllegalCase::RightmostOfProper => {
                format!("leaf {} rightmost under proper {}", f.leaf, f.parent)
            }
        },
    }
}

fn involution_single(
    tree: &IncreasingTree,
    format: InvolutionFormat,
    out: &mut dyn Write,
) -> Result<ExitStatus, RunError> {
    let image = tree.involute();
    let ok = image.involute() == *tree && (image == *tree || image.sign() == -tree.sign());
    let leaf = tree.find_first_illegal_leaf().map(|f| f.leaf);
    match format {
        InvolutionFormat::Text => {
            writeln!(
                out,
                "tree:   {} sign {}",
                tree.to_labeled_paren(),
                sign_str(tree.sign())
            )?;
            writeln!(out, "move:   {}", describe_case(tree))?;
            writeln!(
                out,
                "image:  {} sign {}",
                image.to_labeled_paren(),
                sign_str(image.sign())
            )?;
        }
        InvolutionFormat::Paren => {
            writeln!(out, "{}", tree.to_labeled_paren())?;
            writeln!(out, "{}", image.to_labeled_paren())?;
        }
        InvolutionFormat::Dot => {
            out.write_all(tree.to_dot("before", leaf).as_bytes())?;
            out.write_all(image.to_dot("after", leaf).as_bytes())?;
        }
    }
    Ok(ExitStatus::from_check(ok))
}

fn involution_all(
    n: usize,
    format: InvolutionFormat,
    out: &mut dyn Write,
) -> Result<ExitStatus, RunError> {
    let check = involution::check_involution(n)?;
    match format {
        InvolutionFormat::Text => {
            for tree in involution::enumerate_increasing(n)? {
                let image = tree.involute();
                writeln!(
                    out,
                    "{} {} -> {} {}",
                    tree.to_labeled_paren(),
                    sign_str(tree.sign()),
                    image.to_labeled_paren(),
                    sign_str(image.sign())
                )?;
            }
            writeln!(
                out,
                "n={} trees={} sign_sum={} fixed_points={} not_involutive={} sign_preserved={} missing_illegal_leaf={} leaf_not_preserved={}",
                check.n,
                check.trees,
                check.sign_sum,
                check.fixed_points,
                check.not_involutive,
                check.sign_preserved,
                check.missing_illegal_leaf,
                check.leaf_not_preserved
            )?;
            writeln!(out, "{}", if check.passed() { "PASS" } else { "FAIL" })?;
        }
        InvolutionFormat::Paren => {
            for tree in involution::enumerate_increasing(n)? {
                writeln!(out, "{}", tree.to_labeled_paren())?;
            }
        }
        InvolutionFormat::Dot => {
            for (i, tree) in involution::enumerate_increasing(n)?.iter().enumerate() {
                let leaf = tree.find_first_illegal_leaf().map(|f| f.leaf);
                out.write_all(tree.to_dot(&format!("t{i}"), leaf).as_bytes())?;
            }
        }
    }
    Ok(ExitStatus::from_check(check.passed()))
}
