//! Simulated annealing over `k`-regular graphs of a fixed order.
//!
//! States are labeled `k`-regular graphs; a move is a double edge swap
//! (`ab, cd -> ac, bd`), which keeps every degree. The energy is a weighted
//! penalty that is zero exactly on graphs satisfying the target predicate.
//! Restarts draw from independent ChaCha streams of the master seed, so a
//! run is reproducible regardless of how restarts are scheduled.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Bounds, Predicate, SearchReport};
use crate::blowup::four_clique_at;
use crate::cycle::{circumference, longest_cycle_vertices_with};
use crate::error::{Error, Result};
use crate::graph::{Graph, Members, MAX_ORDER};
use crate::graph6;
use crate::ham::{hamilton_path_from, start_neighbors};

/// Penalty weights of the seed objective.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PenaltyWeights {
    /// Per unit of distance between the circumference and `p - 4`.
    pub circumference: u32,
    /// Per vertex without two Hamilton paths having distinct first edges.
    pub doubly: u32,
    /// When no vertex on a longest cycle lies in a 4-clique.
    pub clique: u32,
}

impl Default for PenaltyWeights {
    fn default() -> Self {
        PenaltyWeights {
            circumference: 10,
            doubly: 1,
            clique: 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnealConfig {
    pub order: usize,
    pub degree: usize,
    pub seed: u64,
    /// Proposed moves per restart.
    pub max_steps: u64,
    pub restarts: u32,
    /// Initial temperature.
    pub t0: f64,
    /// Geometric cooling factor applied after every proposal.
    pub cooling: f64,
    pub weights: PenaltyWeights,
    pub target: Predicate,
}

impl AnnealConfig {
    /// Defaults for a seed search of order `p`.
    pub fn seed_search(p: usize, seed: u64) -> AnnealConfig {
        AnnealConfig {
            order: p,
            degree: 4,
            seed,
            max_steps: 20_000,
            restarts: 4,
            t0: 4.0,
            cooling: 0.9997,
            weights: PenaltyWeights::default(),
            target: Predicate::Seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (p, k) = (self.order, self.degree);
        let bad = |why: String| Err(Error::Invalid(why));
        if p > MAX_ORDER || k == 0 || k >= p || (p * k) % 2 == 1 {
            return bad(format!("no {k}-regular graph of order {p}"));
        }
        if self.max_steps == 0 || self.restarts == 0 {
            return bad("steps and restarts must be positive".into());
        }
        let schedule_ok = self.t0 > 0.0 && self.cooling > 0.0 && self.cooling <= 1.0;
        if !schedule_ok {
            return bad(format!("bad schedule t0={} cooling={}", self.t0, self.cooling));
        }
        if self.target == Predicate::Seed && k != 4 {
            return bad("seed targets are 4-regular".into());
        }
        Ok(())
    }
}

/// The seed objective: zero exactly when `g` has circumference `p - 4`, is
/// doubly homogeneously traceable, and some vertex on a longest cycle lies
/// in a 4-clique.
pub fn seed_penalty(g: &Graph, w: &PenaltyWeights) -> u32 {
    let n = g.order();
    let longest = circumference(g);
    let c = longest.as_ref().map_or(0, |x| x.len());
    let target = n.saturating_sub(4);
    let mut penalty = w.circumference * c.abs_diff(target) as u32;
    // a Hamilton cycle gives every vertex two first edges
    if c < n {
        let lacking = (0..n)
            .filter(|&v| start_neighbors(g, v).map_or(true, |s| s.count_ones() < 2))
            .count();
        penalty += w.doubly * lacking as u32;
    }
    let qualified = longest.is_some_and(|cyc| {
        longest_cycle_vertices_with(g, &cyc).is_ok_and(|on| Members(on).any(|v| four_clique_at(g, v).is_some()))
    });
    if !qualified {
        penalty += w.clique;
    }
    penalty
}

/// Penalty for plain predicate targets: zero when the predicate holds,
/// otherwise a base cost plus one unit per vertex ending no Hamilton path.
fn predicate_penalty(g: &Graph, target: Predicate, w: &PenaltyWeights) -> u32 {
    if target.test(g) {
        return 0;
    }
    let stuck = (0..g.order())
        .filter(|&v| !matches!(hamilton_path_from(g, v), Ok(Some(_))))
        .count();
    w.circumference + w.doubly * stuck as u32
}

fn energy(g: &Graph, cfg: &AnnealConfig) -> u32 {
    match cfg.target {
        Predicate::Seed => seed_penalty(g, &cfg.weights),
        other => predicate_penalty(g, other, &cfg.weights),
    }
}

/// Uniform-ish random `k`-regular graph by the pairing model with rejection.
fn random_regular(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    'retry: loop {
        points.shuffle(rng);
        let mut rows = vec![0u64; n];
        for pair in points.chunks(2) {
            let (a, b) = (pair[0], pair[1]);
            if a == b || rows[a] >> b & 1 == 1 {
                continue 'retry;
            }
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        return Graph::from_rows_unchecked(rows);
    }
}

fn propose(g: &Graph, edges: &[(usize, usize)], rng: &mut ChaCha8Rng) -> Option<Graph> {
    let (a, b) = edges[rng.gen_range(0..edges.len())];
    let (mut c, mut d) = edges[rng.gen_range(0..edges.len())];
    if rng.gen::<bool>() {
        std::mem::swap(&mut c, &mut d);
    }
    let distinct = a != c && a != d && b != c && b != d;
    (distinct && !g.has_edge(a, c) && !g.has_edge(b, d)).then(|| g.swapped(a, b, c, d))
}

/// Result of one restart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestartResult {
    pub restart: u32,
    pub best_penalty: u32,
    #[serde(with = "crate::serde_graph6")]
    pub best: Graph,
    /// Step at which a zero-penalty graph appeared.
    pub solved_at: Option<u64>,
}

fn run_restart(cfg: &AnnealConfig, restart: u32) -> RestartResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(restart as u64);
    let mut g = random_regular(cfg.order, cfg.degree, &mut rng);
    let mut e = energy(&g, cfg);
    let mut best = (e, g.clone());
    let mut temp = cfg.t0;
    for step in 0..cfg.max_steps {
        if e == 0 {
            return RestartResult {
                restart,
                best_penalty: 0,
                best: g,
                solved_at: Some(step),
            };
        }
        let edges: Vec<(usize, usize)> = g.edges().collect();
        if let Some(h) = propose(&g, &edges, &mut rng) {
            let eh = energy(&h, cfg);
            let accept = eh <= e || rng.gen::<f64>() < (-((eh - e) as f64) / temp).exp();
            if accept {
                g = h;
                e = eh;
                if e < best.0 {
                    best = (e, g.clone());
                }
            }
        }
        temp *= cfg.cooling;
    }
    RestartResult {
        restart,
        best_penalty: best.0,
        solved_at: (best.0 == 0).then_some(cfg.max_steps),
        best: best.1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnealOutcome {
    /// Zero-penalty graph from the lowest-numbered successful restart.
    #[serde(default, with = "crate::serde_graph6::option")]
    pub graph: Option<Graph>,
    /// Smallest qualifying marked vertex, for seed targets.
    pub marked: Option<usize>,
    pub restarts: Vec<RestartResult>,
    pub report: SearchReport,
}

/// Anneals `cfg.restarts` independent chains and returns the first success
/// in restart order, or none when every chain exhausts its budget.
pub fn anneal_seed_search(cfg: &AnnealConfig) -> Result<AnnealOutcome> {
    cfg.validate()?;
    let start = Instant::now();
    let results: Vec<RestartResult> = (0..cfg.restarts).into_par_iter().map(|r| run_restart(cfg, r)).collect();
    let hit = results.iter().find(|r| r.best_penalty == 0);
    let graph = hit.map(|r| r.best.clone());
    let marked = match (&graph, cfg.target) {
        (Some(g), Predicate::Seed) => seed_mark(g),
        _ => None,
    };
    let examined = results.iter().map(|r| r.solved_at.unwrap_or(cfg.max_steps)).sum();
    let witnesses: Vec<String> = graph.iter().map(graph6::encode).collect();
    let report = SearchReport {
        kind: "anneal".into(),
        bounds: Bounds {
            order: cfg.order,
            degree: Some(cfg.degree),
            predicate: cfg.target,
        },
        examined,
        classes: 0,
        negative: witnesses.is_empty(),
        witnesses,
        seed: Some(cfg.seed),
        value: None,
        reference: None,
        wall_time_ms: start.elapsed().as_millis() as u64,
    };
    Ok(AnnealOutcome {
        graph,
        marked,
        restarts: results,
        report,
    })
}

/// Smallest vertex lying on a longest cycle and in a 4-clique.
pub(crate) fn seed_mark(g: &Graph) -> Option<usize> {
    let longest = circumference(g)?;
    let on = longest_cycle_vertices_with(g, &longest).ok()?;
    Members(on).find(|&v| four_clique_at(g, v).is_some())
}
