//! The five-condition clean-graft certifier.

use std::fmt;

use crate::error::{Error, Result};
use crate::graft::Graft;
use crate::witness::Witness;

use super::patterns::{
    find_guarded_fan_with, find_mountable_path_with, find_triangle_with, find_wheel_with,
    tip_edge_with,
};
use super::{Outcome, SearchConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The search space was exhausted without a witness.
    Holds {
        explored: u64,
    },
    Fails {
        witness: Witness,
        explored: u64,
    },
    /// The node budget ran out before the search finished.
    Inconclusive {
        explored: u64,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fails { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn explored(&self) -> u64 {
        match self {
            Verdict::Holds { explored }
            | Verdict::Fails { explored, .. }
            | Verdict::Inconclusive { explored } => *explored,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    TriangleFree,
    TipsStable,
    WheelFree,
    NoGuardedFan,
    NoMountablePath,
}

impl Condition {
    pub const ALL: [Condition; 5] = [
        Condition::TriangleFree,
        Condition::TipsStable,
        Condition::WheelFree,
        Condition::NoGuardedFan,
        Condition::NoMountablePath,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn label(self) -> &'static str {
        match self {
            Condition::TriangleFree => "triangle-free",
            Condition::TipsStable => "tips-stable",
            Condition::WheelFree => "wheel-free",
            Condition::NoGuardedFan => "no-guarded-fan",
            Condition::NoMountablePath => "no-mountable-path",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleanReport {
    pub verdicts: [(Condition, Verdict); 5],
}

impl CleanReport {
    pub fn is_clean(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| v.holds())
    }

    pub fn any_fails(&self) -> bool {
        self.verdicts
            .iter()
            .any(|(_, v)| matches!(v, Verdict::Fails { .. }))
    }

    /// No witness found anywhere, but some search stopped at its budget.
    pub fn budget_clean(&self) -> bool {
        !self.any_fails() && !self.is_clean()
    }

    pub fn verdict(&self, c: Condition) -> &Verdict {
        &self.verdicts[c as usize].1
    }

    pub fn total_explored(&self) -> u64 {
        self.verdicts.iter().map(|(_, v)| v.explored()).sum()
    }
}

impl fmt::Display for CleanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, v) in &self.verdicts {
            write!(f, "({}) {}: ", c.number(), c.label())?;
            match v {
                Verdict::Holds { explored } => writeln!(f, "HOLDS (explored={explored})")?,
                Verdict::Fails { witness, explored } => writeln!(
                    f,
                    "FAILS witness={} (explored={explored})",
                    serde_json::to_string(witness).expect("witnesses serialize")
                )?,
                Verdict::Inconclusive { explored } => writeln!(
                    f,
                    "INCONCLUSIVE (budget exhausted, explored={explored}, no witness)"
                )?,
            }
        }
        Ok(())
    }
}

fn verdict(r: Result<Outcome>) -> Result<Verdict> {
    match r {
        Ok(Outcome {
            witness: Some(witness),
            explored,
        }) => Ok(Verdict::Fails { witness, explored }),
        Ok(Outcome {
            witness: None,
            explored,
        }) => Ok(Verdict::Holds { explored }),
        Err(Error::Inconclusive { explored }) => Ok(Verdict::Inconclusive { explored }),
        Err(e) => Err(e),
    }
}

/// Certify all five conditions with unlimited searches.
pub fn is_clean(gf: &Graft) -> CleanReport {
    is_clean_with(gf, &SearchConfig::unlimited()).expect("unlimited searches always conclude")
}

/// Certify all five conditions; each condition gets its own node budget.
pub fn is_clean_with(gf: &Graft, cfg: &SearchConfig) -> Result<CleanReport> {
    let g = gf.graph();
    Ok(CleanReport {
        verdicts: [
            (
                Condition::TriangleFree,
                verdict(find_triangle_with(g, cfg))?,
            ),
            (Condition::TipsStable, verdict(tip_edge_with(gf, cfg))?),
            (Condition::WheelFree, verdict(find_wheel_with(g, 3, cfg))?),
            (
                Condition::NoGuardedFan,
                verdict(find_guarded_fan_with(gf, cfg))?,
            ),
            (
                Condition::NoMountablePath,
                verdict(find_mountable_path_with(gf, cfg))?,
            ),
        ],
    })
}
