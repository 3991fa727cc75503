//! Exact rank bookkeeping for spans of polynomials.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oscillator::{root_vectors, weight_under, Weight};
use crate::poly::{Monomial, Poly, RepConfig};
use crate::weyl::WeylOp;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insertion {
    Added,
    Dependent,
}

/// Monic rows with pairwise distinct leading monomials. Rows are only
/// top-reduced against each other, which is all rank needs.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    rows: Vec<Poly>,
    index: FxHashMap<Monomial, usize>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    /// Eliminate leading monomials that are already pivots until the leading
    /// monomial is new or the polynomial vanishes.
    pub fn reduce(&self, mut p: Poly) -> Poly {
        loop {
            let (lead, c) = match p.leading() {
                Some((m, c)) => (m, c),
                None => return p,
            };
            let Some(&row) = self.index.get(lead) else {
                return p;
            };
            let c = -c.clone();
            p.add_scaled(&self.rows[row], &c);
        }
    }

    pub fn insert(&mut self, p: Poly) -> Insertion {
        let mut r = self.reduce(p);
        if r.is_zero() {
            return Insertion::Dependent;
        }
        r.make_monic();
        let lead = r.leading().expect("nonzero").0.clone();
        self.index.insert(lead, self.rows.len());
        self.rows.push(r);
        Insertion::Added
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p.clone()).is_zero()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Poly] {
        &self.rows
    }

    /// Rows added at positions `from..`.
    pub fn rows_since(&self, from: usize) -> &[Poly] {
        &self.rows[from..]
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.index.keys()
    }
}

/// Number of basis rows per weight.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightLedger {
    pub counts: BTreeMap<Weight, usize>,
}

impl WeightLedger {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn max_multiplicity(&self) -> Option<(&Weight, usize)> {
        self.counts
            .iter()
            .map(|(w, &c)| (w, c))
            .max_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(a.0)))
    }

    pub fn record(&mut self, w: Weight) {
        *self.counts.entry(w).or_default() += 1;
    }

    pub fn merge(&mut self, other: &WeightLedger) {
        for (w, c) in &other.counts {
            *self.counts.entry(w.clone()).or_default() += c;
        }
    }
}

pub fn weight_ledger_under(rows: &[Poly], cartan: &[WeylOp]) -> Result<WeightLedger> {
    let mut ledger = WeightLedger::default();
    for row in rows {
        ledger.record(weight_under(cartan, row)?);
    }
    Ok(ledger)
}

pub fn weight_ledger(basis: &EchelonBasis, cfg: &RepConfig) -> Result<WeightLedger> {
    weight_ledger_under(basis.rows(), &root_vectors(cfg).cartan)
}
