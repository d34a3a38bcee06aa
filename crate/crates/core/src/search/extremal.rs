//! Extremal values over homogeneously traceable graphs of small order.

use std::time::Instant;

use rayon::prelude::*;

use super::connected::connected_classes;
use super::{Bounds, Predicate, SearchReport};
use crate::cycle::circumference;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// An exact optimum found by exhaustive enumeration, next to a reference value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremum {
    pub order: usize,
    pub value: usize,
    /// First optimal graph in canonical order.
    pub witness: Graph,
    pub reference: usize,
    /// Isomorphism classes examined.
    pub classes: u64,
    /// Classes satisfying the predicate the optimum ranges over.
    pub qualifying: u64,
    pub wall_time_ms: u64,
}

impl Extremum {
    pub fn agrees(&self) -> bool {
        self.value == self.reference
    }

    pub fn report(&self, kind: &str, predicate: Predicate) -> SearchReport {
        SearchReport {
            kind: kind.into(),
            bounds: Bounds {
                order: self.order,
                degree: None,
                predicate,
            },
            examined: self.classes,
            classes: self.classes,
            witnesses: vec![graph6::encode(&self.witness)],
            negative: false,
            seed: None,
            value: Some(self.value),
            reference: Some(self.reference),
            wall_time_ms: self.wall_time_ms,
        }
    }
}

fn filtered(n: usize, predicate: Predicate, parallel: bool) -> Result<(Vec<Graph>, u64)> {
    let (classes, _) = connected_classes(n, parallel)?;
    let keep: Vec<Graph> = if parallel {
        classes.par_iter().filter(|g| predicate.test(g)).cloned().collect()
    } else {
        classes.iter().filter(|g| predicate.test(g)).cloned().collect()
    };
    Ok((keep, classes.len() as u64))
}

/// `⌈2n/3⌉ + 2`, the conjectured least circumference of a homogeneously
/// traceable graph of order `n`.
pub fn conjectured_min_circumference(n: usize) -> usize {
    (2 * n).div_ceil(3) + 2
}

/// `⌈5n/4⌉`, the least size of a homogeneously traceable nonhamiltonian
/// graph of order `n`.
pub fn min_size_formula(n: usize) -> usize {
    (5 * n).div_ceil(4)
}

/// Least circumference over all homogeneously traceable graphs of order `n`.
///
/// Hamiltonian classes have circumference `n`, so only the nonhamiltonian
/// ones need a longest-cycle computation.
pub fn min_circumference_ht(n: usize, parallel: bool) -> Result<Extremum> {
    if !(3..=super::CONNECTED_LIMIT).contains(&n) {
        return Err(Error::Invalid(format!(
            "order {n} outside 3..={}",
            super::CONNECTED_LIMIT
        )));
    }
    let start = Instant::now();
    let (ht, classes) = filtered(n, Predicate::Ht, parallel)?;
    let mut best: Option<(usize, &Graph)> = None;
    for g in &ht {
        let c = circumference(g).map_or(0, |w| w.len());
        if best.is_none_or(|(b, _)| c < b) {
            best = Some((c, g));
        }
    }
    let (value, witness) = best.ok_or_else(|| Error::Invalid(format!("no traceable graph of order {n}")))?;
    Ok(Extremum {
        order: n,
        value,
        witness: witness.clone(),
        reference: conjectured_min_circumference(n),
        classes,
        qualifying: ht.len() as u64,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// Least size of a homogeneously traceable nonhamiltonian graph of order 9.
pub fn min_size_ht_nonham(n: usize, parallel: bool) -> Result<Extremum> {
    if n != 9 {
        return Err(Error::Invalid(format!(
            "minimum size search supports order 9 only, got {n}"
        )));
    }
    let start = Instant::now();
    let (found, classes) = filtered(n, Predicate::HtNonham, parallel)?;
    let witness = found
        .iter()
        .min_by_key(|g| g.size())
        .ok_or_else(|| Error::Invalid(format!("no homogeneously traceable nonhamiltonian graph of order {n}")))?;
    Ok(Extremum {
        order: n,
        value: witness.size(),
        witness: witness.clone(),
        reference: min_size_formula(n),
        classes,
        qualifying: found.len() as u64,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas() {
        assert_eq!(conjectured_min_circumference(9), 8);
        assert_eq!(conjectured_min_circumference(18), 14);
        assert_eq!(min_size_formula(9), 12);
    }

    #[test]
    fn small_orders_are_hamiltonian() {
        for n in 3..=6 {
            let e = min_circumference_ht(n, false).unwrap();
            assert_eq!(e.value, n);
        }
        let e = min_circumference_ht(3, false).unwrap();
        assert_eq!(e.qualifying, 1);
        assert!(min_circumference_ht(2, false).is_err());
        assert!(min_size_ht_nonham(8, false).is_err());
    }
}
