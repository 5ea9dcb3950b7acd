//! Simulated annealing for extremal pair counts.
//!
//! Points move on the integer grid `[-r, r]^d`: grid configurations have
//! parallel edges and faces with positive probability, and the extremal
//! sets are of that kind. A floating-point estimator drives move
//! acceptance; every improvement is snapped and recounted exactly, and only
//! exact counts are reported.

mod estimate;
mod snap;

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use estimate::estimate;
pub use snap::snap_and_verify;

use crate::antipodality::Mode;
use crate::config::{ConstructionSpec, PointConfig};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Minimize,
    Maximize,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Minimize => "minimize",
            Objective::Maximize => "maximize",
        })
    }
}

impl FromStr for Objective {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minimize" | "min" => Ok(Objective::Minimize),
            "maximize" | "max" => Ok(Objective::Maximize),
            other => Err(Error::Parse(format!("unknown objective '{other}'"))),
        }
    }
}

/// Which configurations are admissible.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Position {
    /// Every point is a vertex of the hull.
    #[default]
    StrictlyConvex,
    /// Every point is on the boundary of the hull.
    Convex,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Position::StrictlyConvex => "strictly_convex",
            Position::Convex => "convex",
        })
    }
}

impl FromStr for Position {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strictly_convex" | "strict" => Ok(Position::StrictlyConvex),
            "convex" => Ok(Position::Convex),
            other => Err(Error::Parse(format!("unknown position requirement '{other}'"))),
        }
    }
}

/// Annealing constants. Loadable from TOML; every field has a default.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SearchParams {
    /// Grid half-width; 0 picks 3 for the plane and 2 otherwise.
    pub radius: i64,
    pub t_start: f64,
    pub t_end: f64,
    /// Initial standard deviation of a move, in grid units.
    pub step: f64,
    pub step_min: f64,
    /// Probability that a move relocates the point uniformly.
    pub relocate_prob: f64,
    /// Acceptance rate the step size is steered towards.
    pub target_accept: f64,
    pub adapt_every: usize,
    pub denominator_bound: u64,
    /// Attempts to draw an admissible starting configuration.
    pub init_tries: usize,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            radius: 0,
            t_start: 1.5,
            t_end: 0.05,
            step: 1.0,
            step_min: 0.5,
            relocate_prob: 0.1,
            target_accept: 0.3,
            adapt_every: 200,
            denominator_bound: 1_000_000,
            init_tries: 20_000,
        }
    }
}

impl SearchParams {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("search parameters: {e}")))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        Self::from_toml_str(&std::fs::read_to_string(path)?)
    }

    fn radius_for(&self, d: usize) -> i64 {
        match self.radius {
            0 if d <= 2 => 3,
            0 => 2,
            r => r,
        }
    }
}

pub const DEFAULT_BUDGET: usize = 100_000;
pub const DEFAULT_RESTARTS: usize = 8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchTask {
    pub d: usize,
    pub n: usize,
    pub mode: Mode,
    pub objective: Objective,
    /// Annealing steps per restart.
    pub budget: usize,
    pub seed: u64,
    pub restarts: usize,
    #[serde(default)]
    pub position: Position,
    /// Stop once this value (or better) is verified.
    #[serde(default)]
    pub stop_at: Option<usize>,
}

impl SearchTask {
    pub fn new(d: usize, n: usize, mode: Mode, objective: Objective, seed: u64) -> Self {
        SearchTask {
            d,
            n,
            mode,
            objective,
            budget: DEFAULT_BUDGET,
            seed,
            restarts: DEFAULT_RESTARTS,
            position: Position::StrictlyConvex,
            stop_at: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d < 2 || self.n < self.d + 1 {
            return Err(Error::Range(format!(
                "need d >= 2 and n >= d + 1, got d = {}, n = {}",
                self.d, self.n
            )));
        }
        if self.budget == 0 || self.restarts == 0 {
            return Err(Error::Range("budget and restarts must be positive".into()));
        }
        Ok(())
    }

    fn better(&self, a: usize, b: usize) -> bool {
        match self.objective {
            Objective::Minimize => a < b,
            Objective::Maximize => a > b,
        }
    }

    fn reached(&self, v: usize) -> bool {
        match (self.stop_at, self.objective) {
            (Some(t), Objective::Minimize) => v <= t,
            (Some(t), Objective::Maximize) => v >= t,
            (None, _) => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub best_config: PointConfig,
    pub best_value: usize,
    /// Best exact value of each restart; `None` when the restart was cut
    /// short because an earlier restart already met `stop_at`, or never
    /// found an admissible configuration.
    pub history: Vec<Option<usize>>,
    pub winner: usize,
    pub steps: Vec<usize>,
    pub verified: bool,
}

/// Serializable summary of a run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchLog {
    pub task: SearchTask,
    pub params: SearchParams,
    pub best_value: usize,
    pub winner: usize,
    pub history: Vec<Option<usize>>,
    pub steps: Vec<usize>,
}

impl SearchResult {
    pub fn log(&self, task: &SearchTask, params: &SearchParams) -> SearchLog {
        SearchLog {
            task: task.clone(),
            params: params.clone(),
            best_value: self.best_value,
            winner: self.winner,
            history: self.history.clone(),
            steps: self.steps.clone(),
        }
    }
}

struct RestartOutcome {
    best: Option<(usize, PointConfig)>,
    steps: usize,
    cut: bool,
    last_error: Option<String>,
}

fn restart_seed(seed: u64, restart: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (restart as u64).wrapping_mul(0xD1B5_4A32_D192_ED03)
}

fn random_config(rng: &mut ChaCha8Rng, task: &SearchTask, radius: i64, tries: usize) -> Option<(Vec<Vec<f64>>, usize)> {
    for _ in 0..tries {
        let mut pts: Vec<Vec<f64>> = Vec::with_capacity(task.n);
        while pts.len() < task.n {
            let p: Vec<f64> = (0..task.d).map(|_| rng.gen_range(-radius..=radius) as f64).collect();
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        if let Some(v) = estimate(&pts, task.mode, task.position) {
            return Some((pts, v));
        }
    }
    None
}

fn run_restart(task: &SearchTask, params: &SearchParams, restart: usize, done: &AtomicUsize) -> RestartOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(restart_seed(task.seed, restart));
    let radius = params.radius_for(task.d);
    let mut outcome = RestartOutcome {
        best: None,
        steps: 0,
        cut: false,
        last_error: None,
    };
    let Some((mut cur, mut cur_val)) = random_config(&mut rng, task, radius, params.init_tries) else {
        outcome.last_error = Some("no admissible starting configuration".into());
        return outcome;
    };
    let score = |v: usize| -> f64 {
        match task.objective {
            Objective::Minimize => v as f64,
            Objective::Maximize => -(v as f64),
        }
    };
    let mut best_est: Option<usize> = None;
    let mut step = params.step.max(params.step_min);
    let mut accepted_window = 0usize;
    let cooling = (params.t_end / params.t_start).ln();

    let mut verify = |pts: &[Vec<f64>], est: usize, outcome: &mut RestartOutcome| -> bool {
        if best_est.is_some_and(|b| !task.better(est, b)) {
            return false;
        }
        best_est = Some(est);
        match snap_and_verify(pts, params.denominator_bound, task.mode, task.position) {
            Ok((config, report)) => {
                let v = report.count;
                if outcome.best.as_ref().is_none_or(|(b, _)| task.better(v, *b)) {
                    outcome.best = Some((v, config));
                }
                task.reached(v)
            }
            Err(e) => {
                outcome.last_error = Some(e.to_string());
                false
            }
        }
    };

    if verify(&cur, cur_val, &mut outcome) {
        done.fetch_min(restart, Ordering::SeqCst);
        return outcome;
    }
    for it in 0..task.budget {
        outcome.steps = it + 1;
        if it % 64 == 0 && done.load(Ordering::SeqCst) < restart {
            outcome.cut = true;
            return outcome;
        }
        let temp = params.t_start * (cooling * it as f64 / task.budget as f64).exp();
        let i = rng.gen_range(0..task.n);
        let old = cur[i].clone();
        let new: Vec<f64> = if rng.gen_bool(params.relocate_prob) {
            (0..task.d).map(|_| rng.gen_range(-radius..=radius) as f64).collect()
        } else {
            let normal = Normal::new(0.0, step).expect("positive step");
            old.iter()
                .map(|&x| {
                    (x + normal.sample(&mut rng))
                        .round()
                        .clamp(-radius as f64, radius as f64)
                })
                .collect()
        };
        if new == old || cur.contains(&new) {
            continue;
        }
        cur[i] = new;
        let accept = match estimate(&cur, task.mode, task.position) {
            None => false,
            Some(v) => {
                let delta = score(v) - score(cur_val);
                if delta <= 0.0 || rng.gen::<f64>() < (-delta / temp).exp() {
                    cur_val = v;
                    true
                } else {
                    false
                }
            }
        };
        if !accept {
            cur[i] = old;
        } else {
            accepted_window += 1;
            if verify(&cur, cur_val, &mut outcome) {
                done.fetch_min(restart, Ordering::SeqCst);
                return outcome;
            }
        }
        if (it + 1) % params.adapt_every == 0 {
            let rate = accepted_window as f64 / params.adapt_every as f64;
            if rate > params.target_accept * 1.2 {
                step = (step * 1.2).min(radius as f64);
            } else if rate < params.target_accept / 1.2 {
                step = (step / 1.2).max(params.step_min);
            }
            accepted_window = 0;
        }
    }
    outcome
}

/// Runs `task.restarts` independent annealing chains and returns the best
/// exactly verified configuration. Ties go to the lower restart index, so
/// the result depends only on the task and parameters.
pub fn search_extremal(task: &SearchTask, params: &SearchParams) -> Result<SearchResult> {
    task.validate()?;
    let done = AtomicUsize::new(usize::MAX);
    let outcomes: Vec<RestartOutcome> = (0..task.restarts)
        .into_par_iter()
        .map(|r| run_restart(task, params, r, &done))
        .collect();
    let cutoff = done.load(Ordering::SeqCst);
    let mut history = Vec::with_capacity(outcomes.len());
    let mut steps = Vec::with_capacity(outcomes.len());
    let mut best: Option<(usize, usize, PointConfig)> = None;
    let mut last_error = None;
    for (r, out) in outcomes.into_iter().enumerate() {
        if out.last_error.is_some() {
            last_error = out.last_error.clone();
        }
        if r > cutoff {
            history.push(None);
            steps.push(0);
            continue;
        }
        steps.push(out.steps);
        debug_assert!(!out.cut || r > cutoff);
        history.push(out.best.as_ref().map(|(v, _)| *v));
        if let Some((v, config)) = out.best {
            if best.as_ref().is_none_or(|(b, _, _)| task.better(v, *b)) {
                best = Some((v, r, config));
            }
        }
    }
    let Some((best_value, winner, config)) = best else {
        return Err(Error::SearchFailed(
            last_error.unwrap_or_else(|| "no admissible configuration".into()),
        ));
    };
    let spec = ConstructionSpec::new("search")
        .with("d", task.d)
        .with("n", task.n)
        .with("mode", task.mode)
        .with("objective", task.objective)
        .with("seed", task.seed)
        .with("restart", winner);
    Ok(SearchResult {
        best_config: config.with_construction(spec),
        best_value,
        history,
        winner,
        steps,
        verified: true,
    })
}

/// Outcome of the search for an antipodal set larger than `2^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct DanzerProbe {
    pub d: usize,
    pub n: usize,
    pub best_antipodal_pairs: usize,
    pub all_pairs: usize,
    pub found: bool,
}

/// Maximizes the antipodal pair count of `2^d + 1` points; an antipodal set
/// of that size would need every pair antipodal.
pub fn danzer_probe(d: usize, budget: usize, restarts: usize, seed: u64, params: &SearchParams) -> Result<DanzerProbe> {
    let n = (1usize << d) + 1;
    let all = n * (n - 1) / 2;
    let mut task = SearchTask::new(d, n, Mode::Antipodal, Objective::Maximize, seed);
    task.budget = budget;
    task.restarts = restarts;
    task.position = Position::Convex;
    task.stop_at = Some(all);
    let r = search_extremal(&task, params)?;
    Ok(DanzerProbe {
        d,
        n,
        best_antipodal_pairs: r.best_value,
        all_pairs: all,
        found: r.best_value == all,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(d: usize, n: usize, objective: Objective, stop_at: usize) -> SearchResult {
        let mut task = SearchTask::new(d, n, Mode::Strict, objective, 1);
        task.budget = 20_000;
        task.restarts = 2;
        task.stop_at = Some(stop_at);
        search_extremal(&task, &SearchParams::default()).unwrap()
    }

    #[test]
    fn small_minima() {
        assert_eq!(quick(2, 5, Objective::Minimize, 3).best_value, 3);
        assert_eq!(quick(3, 5, Objective::Minimize, 6).best_value, 6);
        assert_eq!(quick(3, 6, Objective::Minimize, 3).best_value, 3);
    }

    #[test]
    fn bipyramid_maximum() {
        assert_eq!(quick(3, 5, Objective::Maximize, 10).best_value, 10);
    }

    #[test]
    fn deterministic() {
        let mut task = SearchTask::new(2, 6, Mode::Strict, Objective::Minimize, 5);
        task.budget = 500;
        task.restarts = 3;
        let p = SearchParams::default();
        let a = search_extremal(&task, &p).unwrap();
        let b = search_extremal(&task, &p).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn params_from_toml() {
        let p = SearchParams::from_toml_str("radius = 4\nt_start = 2.0").unwrap();
        assert_eq!(p.radius, 4);
        assert_eq!(p.t_start, 2.0);
        assert_eq!(p.step, SearchParams::default().step);
        assert!(SearchParams::from_toml_str("bogus = 1").is_err());
    }

    #[test]
    fn invalid_tasks() {
        let task = SearchTask::new(3, 3, Mode::Strict, Objective::Minimize, 0);
        assert!(search_extremal(&task, &SearchParams::default()).is_err());
    }
}
