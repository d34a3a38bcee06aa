//! Infinite families of regular traceable graphs grown by clique blow-ups.
//!
//! The cubic family starts at the Petersen graph and blows up one vertex on
//! a longest cycle into a triangle per step, adding two vertices. The quartic
//! family starts from one of three seeds of orders 18, 19 and 20 and blows up
//! a tracked vertex lying in a 4-clique and on a longest cycle into `K_4` per
//! step, adding three vertices. Every step is re-verified from scratch.

use serde::{Deserialize, Serialize};

use crate::blowup::{four_clique_at, verify_lemma1, verify_lemma2, LemmaReport};
use crate::cycle::{circumference, cycle_through, longest_cycle_vertices};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::ham::{is_doubly_homogeneously_traceable, is_homogeneously_traceable};

/// Largest order either construction will build.
pub const FAMILY_LIMIT: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cubic,
    Quartic,
}

/// One blow-up step: the vertex blown up in the current graph and the full
/// measured report, which carries the relabeling map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyStep {
    pub vertex: usize,
    pub report: LemmaReport,
}

/// Properties of the final graph, computed independently of the steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinalInvariants {
    pub order: usize,
    pub regularity: Option<usize>,
    pub circumference: usize,
    pub homogeneously_traceable: bool,
    pub doubly: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTrace {
    pub family: Family,
    #[serde(with = "crate::serde_graph6")]
    pub seed: Graph,
    /// Marked vertex of the seed (quartic family only).
    pub marked: Option<usize>,
    pub steps: Vec<FamilyStep>,
    #[serde(rename = "final", with = "crate::serde_graph6")]
    pub final_graph: Graph,
    pub invariants: FinalInvariants,
}

impl FamilyTrace {
    /// Expected circumference deficit of the final graph.
    pub fn expected_circumference(&self) -> usize {
        match self.family {
            Family::Cubic => self.invariants.order - 1,
            Family::Quartic => self.invariants.order - 4,
        }
    }

    /// Whether every step held and the final graph has the promised shape.
    pub fn holds(&self) -> bool {
        let k = match self.family {
            Family::Cubic => 3,
            Family::Quartic => 4,
        };
        self.steps
            .iter()
            .all(|s| s.report.hypotheses_hold() && s.report.conclusions_hold())
            && self.invariants.regularity == Some(k)
            && self.invariants.doubly
            && self.invariants.circumference == self.expected_circumference()
    }
}

fn invariants(g: &Graph) -> FinalInvariants {
    FinalInvariants {
        order: g.order(),
        regularity: g.regularity(),
        circumference: circumference(g).map_or(0, |w| w.len()),
        homogeneously_traceable: is_homogeneously_traceable(g).holds(),
        doubly: is_doubly_homogeneously_traceable(g).holds(),
    }
}

fn checked(report: LemmaReport) -> Result<LemmaReport> {
    if report.hypotheses_hold() && report.conclusions_hold() {
        Ok(report)
    } else {
        Err(Error::Invalid(format!(
            "blow-up of vertex {} failed verification (delta {})",
            report.vertex,
            report.delta()
        )))
    }
}

/// The cubic member of order `n`, grown from the Petersen graph.
pub fn cubic_family(n: usize) -> Result<FamilyTrace> {
    if n % 2 == 1 || !(10..=FAMILY_LIMIT).contains(&n) {
        return Err(Error::Invalid(format!(
            "cubic family needs an even order in 10..={FAMILY_LIMIT}, got {n}"
        )));
    }
    let seed = Graph::petersen();
    let mut g = seed.clone();
    let mut steps = Vec::new();
    while g.order() < n {
        let on_longest = longest_cycle_vertices(&g)?;
        let v = on_longest.trailing_zeros() as usize;
        let report = checked(verify_lemma1(&g, v)?)?;
        g = report.target.clone();
        steps.push(FamilyStep { vertex: v, report });
    }
    Ok(FamilyTrace {
        family: Family::Cubic,
        seed,
        marked: None,
        steps,
        invariants: invariants(&g),
        final_graph: g,
    })
}

/// A 4-regular seed graph with its marked vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seed {
    #[serde(with = "crate::serde_graph6")]
    pub graph: Graph,
    pub marked: usize,
}

impl Seed {
    /// Parses `<graph6> # marked=<int>`.
    pub fn parse(line: &str) -> Result<Seed> {
        let (code, note) = line
            .split_once('#')
            .ok_or_else(|| Error::Invalid(format!("missing marked vertex annotation in {line:?}")))?;
        let marked = note
            .trim()
            .strip_prefix("marked=")
            .and_then(|m| m.trim().parse().ok())
            .ok_or_else(|| Error::Invalid(format!("bad annotation {:?}", note.trim())))?;
        let graph = graph6::decode_str(code.trim())?;
        graph.check_vertex(marked)?;
        Ok(Seed { graph, marked })
    }

    pub fn to_line(&self) -> String {
        format!("{} # marked={}", graph6::encode(&self.graph), self.marked)
    }
}

/// Seeds indexed by order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SeedSet {
    pub seeds: Vec<Seed>,
}

const BUNDLED_SEEDS: &str = include_str!("../fixtures/seeds.g6");

impl SeedSet {
    /// Parses one seed per line; blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<SeedSet> {
        let seeds = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(Seed::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(SeedSet { seeds })
    }

    /// The seeds shipped with the crate.
    pub fn bundled() -> SeedSet {
        SeedSet::parse(BUNDLED_SEEDS).expect("bundled seed fixture parses")
    }

    pub fn of_order(&self, p: usize) -> Option<&Seed> {
        self.seeds.iter().find(|s| s.graph.order() == p)
    }
}

/// Sub-checks of a seed candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedReport {
    pub order: usize,
    pub marked: usize,
    pub four_regular: bool,
    pub doubly: bool,
    pub circumference: usize,
    pub circumference_ok: bool,
    pub marked_on_longest_cycle: bool,
    pub marked_in_four_clique: bool,
}

impl SeedReport {
    pub fn passes(&self) -> bool {
        self.four_regular
            && self.doubly
            && self.circumference_ok
            && self.marked_on_longest_cycle
            && self.marked_in_four_clique
    }
}

/// Checks every seed requirement and reports each one.
pub fn verify_seed(g: &Graph, marked: usize) -> SeedReport {
    let n = g.order();
    let c = circumference(g).map_or(0, |w| w.len());
    let valid = marked < n;
    SeedReport {
        order: n,
        marked,
        four_regular: g.regularity() == Some(4),
        doubly: is_doubly_homogeneously_traceable(g).holds(),
        circumference: c,
        circumference_ok: n >= 4 && c == n - 4,
        marked_on_longest_cycle: valid && c > 0 && matches!(cycle_through(g, marked, c), Ok(Some(_))),
        marked_in_four_clique: valid && four_clique_at(g, marked).is_some(),
    }
}

/// The 4-regular member of order `p`, grown from the seed of order 18, 19
/// or 20 congruent to `p` modulo 3.
pub fn quartic_family(p: usize, seeds: &SeedSet) -> Result<FamilyTrace> {
    if !(18..=FAMILY_LIMIT).contains(&p) {
        return Err(Error::Invalid(format!(
            "quartic family needs an order in 18..={FAMILY_LIMIT}, got {p}"
        )));
    }
    let base = 18 + (p - 18) % 3;
    let seed = seeds
        .of_order(base)
        .ok_or_else(|| Error::Invalid(format!("no seed of order {base}")))?;
    let check = verify_seed(&seed.graph, seed.marked);
    if !check.passes() {
        return Err(Error::Invalid(format!(
            "seed of order {base} fails verification: {check:?}"
        )));
    }
    let mut g = seed.graph.clone();
    let mut tracked = seed.marked;
    let mut steps = Vec::new();
    while g.order() < p {
        let report = checked(verify_lemma2(&g, tracked)?)?;
        let next = report.v_prime.expect("verified reports name the next vertex");
        g = report.target.clone();
        steps.push(FamilyStep {
            vertex: tracked,
            report,
        });
        tracked = next;
    }
    Ok(FamilyTrace {
        family: Family::Quartic,
        seed: seed.graph.clone(),
        marked: Some(seed.marked),
        steps,
        invariants: invariants(&g),
        final_graph: g,
    })
}
