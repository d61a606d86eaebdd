//! Seeded random operation sequences, certified after every step.
//!
//! Each run picks a clean starting graft and applies up to
//! `max_ops` legal operations (pendent, clone, or a join of a clean partner
//! onto a homogeneous set of tips) while the graft stays within
//! `max_vertices`. Any step whose result is not certified clean is reported
//! together with a script that reproduces it.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::detect::{is_clean, CleanReport};
use crate::error::{Error, Result};
use crate::graft::Graft;
use crate::graph::Graph;
use crate::ops::{clone, homogeneous_tip_classes, pendent, GraftBuf};
use crate::script::{apply, OpScript, ScriptOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub runs: usize,
    pub max_ops: usize,
    pub max_vertices: usize,
    pub seed: u64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            runs: 1000,
            max_ops: 8,
            max_vertices: 40,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FuzzFailure {
    pub run: usize,
    /// Replays the failing sequence up to and including the bad step.
    pub script: OpScript,
    pub report: CleanReport,
}

#[derive(Clone, Debug, Default)]
pub struct FuzzSummary {
    pub runs: usize,
    pub ops_applied: usize,
    pub joins_applied: usize,
    /// Every generated sequence, in run order.
    pub scripts: Vec<OpScript>,
    pub failures: Vec<FuzzFailure>,
}

/// Small clean grafts used as starting points and join partners.
pub fn clean_seeds() -> Result<Vec<Graft>> {
    let k2 = Graft::k2();
    let (star2, _) = clone(&k2, 1)?;
    let (star3, _) = clone(&star2, 2)?;
    let (path3, _) = pendent(&star2, 2)?;
    let c5 = Graft::new(Graph::cycle(5), &[1, 3])?;
    let (c5_twin, _) = clone(&c5, 1)?;
    let seeds = vec![
        Graft::new(Graph::empty(1), &[0])?,
        k2,
        star2,
        star3,
        path3,
        Graft::new(Graph::path(4), &[0, 3])?,
        c5,
        c5_twin,
    ];
    for s in &seeds {
        let r = is_clean(s);
        if !r.is_clean() {
            return Err(Error::InvalidArgument(format!(
                "seed graft is not clean:\n{r}"
            )));
        }
    }
    Ok(seeds)
}

pub fn fuzz_closure(cfg: &FuzzConfig) -> Result<FuzzSummary> {
    let seeds = clean_seeds()?;
    let mut summary = FuzzSummary {
        runs: cfg.runs,
        ..FuzzSummary::default()
    };
    for run in 0..cfg.runs {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(run as u64));
        let start = seeds
            .choose(&mut rng)
            .expect("seed pool is non-empty")
            .clone();
        let mut script = OpScript {
            start: start.clone(),
            ops: Vec::new(),
        };
        let mut buf = GraftBuf::from_graft(&start);
        for _ in 0..cfg.max_ops {
            let Some(op) = random_op(&mut rng, &buf, &seeds, cfg.max_vertices) else {
                break;
            };
            apply(&mut buf, &op)?;
            summary.ops_applied += 1;
            summary.joins_applied += usize::from(matches!(op, ScriptOp::Join { .. }));
            script.ops.push(op);
            let report = is_clean(&buf.to_graft());
            if !report.is_clean() {
                summary.failures.push(FuzzFailure {
                    run,
                    script: script.clone(),
                    report,
                });
                break;
            }
        }
        summary.scripts.push(script);
    }
    Ok(summary)
}

/// Certify the start graft and the result of every step, stopping after
/// the first graft that is not clean.
pub fn certify_steps(script: &OpScript) -> Result<Vec<CleanReport>> {
    let mut buf = GraftBuf::from_graft(&script.start);
    let mut reports = vec![is_clean(&script.start)];
    for op in &script.ops {
        if !reports.last().is_some_and(CleanReport::is_clean) {
            break;
        }
        apply(&mut buf, op)?;
        reports.push(is_clean(&buf.to_graft()));
    }
    Ok(reports)
}

fn random_op(
    rng: &mut ChaCha8Rng,
    buf: &GraftBuf,
    seeds: &[Graft],
    max_vertices: usize,
) -> Option<ScriptOp> {
    let tips: Vec<usize> = buf.tips().iter().copied().collect();
    if tips.is_empty() || buf.n() >= max_vertices {
        return None;
    }
    let t = *tips.choose(rng)?;
    match rng.random_range(0..3) {
        0 => Some(ScriptOp::Pendent(t)),
        1 => Some(ScriptOp::Clone(t)),
        _ => random_join(rng, buf, seeds, max_vertices).or(Some(ScriptOp::Pendent(t))),
    }
}

fn random_join(
    rng: &mut ChaCha8Rng,
    buf: &GraftBuf,
    seeds: &[Graft],
    max_vertices: usize,
) -> Option<ScriptOp> {
    let classes = homogeneous_tip_classes(&buf.to_graft());
    let class = classes.choose(rng)?;
    let fitting: Vec<&Graft> = seeds
        .iter()
        .filter(|p| {
            let tips = p.tips().len();
            tips >= 1 && tips <= class.len() && buf.n() + p.n() - tips <= max_vertices
        })
        .collect();
    let partner = (*fitting.choose(rng)?).clone();
    let mut x: Vec<usize> = class
        .choose_multiple(rng, partner.tips().len())
        .copied()
        .collect();
    x.sort_unstable();
    Some(ScriptOp::Join { x, graft: partner })
}
