//! Shifted beta-sequences, the statistics `n_t` and `a_t`, and the
//! generalized dominance order on them.
//!
//! For a truncation pair `(z, r)` each component `i` contributes the
//! values `lambda_k - k + t_i + z` for `1 <= k <= r + floor(t_i)`; the
//! merged multiset, sorted descending, is the kappa sequence.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::multipartition::Multipartition;
use crate::params::ChargeParams;
use crate::rational::{ceil_int, floor_int, Rational};

/// Truncation data a kappa sequence was built with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Truncation {
    pub z: i64,
    pub r: i64,
}

impl Truncation {
    /// Least pair valid for `mp` alone: `z` is the least positive integer
    /// with `z >= n + 1 - min t`, and `r` the least with `r >= n` and
    /// `r + floor(t_i) >= len(mp_i)` for every component.
    pub fn minimal(mp: &Multipartition, params: &ChargeParams) -> Self {
        let n = mp.size() as i64;
        let z = ceil_int(&(Rational::from_integer(n + 1) - params.min_t())).max(1);
        let r = (0..mp.level()).map(|i| mp.component(i).len() as i64 - floor_int(&params.t()[i])).fold(n, i64::max);
        Truncation { z, r }
    }

    /// Least pair valid simultaneously for every composition of size
    /// at most `n` (components never have more than `n` rows).
    pub fn covering(n: usize, params: &ChargeParams) -> Self {
        let n = n as i64;
        let z = ceil_int(&(Rational::from_integer(n + 1) - params.min_t())).max(1);
        let r = params.t().iter().map(|t| n - floor_int(t)).fold(n, i64::max);
        Truncation { z, r }
    }

    pub fn check(&self, mp: &Multipartition, params: &ChargeParams) -> Result<()> {
        let n = mp.size() as i64;
        if self.z < 1 {
            return Err(Error::Truncation(format!("z = {} must be positive", self.z)));
        }
        if Rational::from_integer(self.z) < Rational::from_integer(n + 1) - params.min_t() {
            return Err(Error::Truncation(format!("z = {} is below n + 1 - min t", self.z)));
        }
        if self.r < n {
            return Err(Error::Truncation(format!("r = {} is below n = {n}", self.r)));
        }
        for i in 0..mp.level() {
            let slots = self.r + floor_int(&params.t()[i]);
            let len = mp.component(i).len() as i64;
            if slots < len {
                return Err(Error::Truncation(format!(
                    "component {i}: r + floor(t_{i}) = {slots} is shorter than its {len} parts"
                )));
            }
        }
        Ok(())
    }
}

/// A descending list of shifted beta-numbers together with the data used
/// to build it. Only sequences with equal data are comparable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KappaSequence {
    entries: Vec<Rational>,
    trunc: Truncation,
    t: Vec<Rational>,
}

impl KappaSequence {
    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    pub fn shift(&self) -> &[Rational] {
        &self.t
    }

    pub fn n_stat(&self) -> Rational {
        n_stat(&self.entries)
    }

    pub fn dominance(&self, other: &KappaSequence) -> Result<Dominance> {
        if self.trunc != other.trunc || self.t != other.t || self.entries.len() != other.entries.len() {
            return Err(Error::MetaMismatch);
        }
        Ok(dominance(&self.entries, &other.entries))
    }
}

pub fn kappa_sequence(mp: &Multipartition, params: &ChargeParams, trunc: Truncation) -> Result<KappaSequence> {
    if mp.level() != params.level() {
        return Err(Error::LevelMismatch(mp.level(), params.level()));
    }
    trunc.check(mp, params)?;
    let mut entries = Vec::new();
    for (i, t_i) in params.t().iter().enumerate() {
        let slots = trunc.r + floor_int(t_i);
        let base = t_i + Rational::from_integer(trunc.z);
        for k in 1..=slots {
            let part = mp.part(i, k as usize) as i64;
            entries.push(base + Rational::from_integer(part - k));
        }
    }
    entries.sort_unstable_by(|a, b| b.cmp(a));
    Ok(KappaSequence { entries, trunc, t: params.t().to_vec() })
}

/// `sum_i (i - 1) kappa_i` over a descending list.
pub fn n_stat(entries: &[Rational]) -> Rational {
    entries.iter().enumerate().fold(Rational::zero(), |acc, (i, k)| acc + k * Rational::from_integer(i as i64))
}

/// `n_t(mp) - n_t(empty)` with both sequences built from the same
/// truncation pair.
pub fn a_function_with(mp: &Multipartition, params: &ChargeParams, trunc: Truncation) -> Result<Rational> {
    let k = kappa_sequence(mp, params, trunc)?;
    let k0 = kappa_sequence(&Multipartition::empty(mp.level()), params, trunc)?;
    Ok(k.n_stat() - k0.n_stat())
}

/// The a-function, evaluated at the minimal truncation pair for `mp`.
pub fn a_function(mp: &Multipartition, params: &ChargeParams) -> Result<Rational> {
    a_function_with(mp, params, Truncation::minimal(mp, params))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dominance {
    StrictlyDominated,
    Equal,
    StrictlyDominates,
    Incomparable,
}

impl Dominance {
    /// `self` is dominated by or equal to the other sequence.
    pub fn is_le(self) -> bool {
        matches!(self, Dominance::StrictlyDominated | Dominance::Equal)
    }
}

/// Compares partial sums of two equal-length lists.
pub fn dominance(a: &[Rational], b: &[Rational]) -> Dominance {
    debug_assert_eq!(a.len(), b.len());
    if a == b {
        return Dominance::Equal;
    }
    let (mut sa, mut sb) = (Rational::zero(), Rational::zero());
    let (mut le, mut ge) = (true, true);
    for (x, y) in a.iter().zip(b) {
        sa += x;
        sb += y;
        match sa.cmp(&sb) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
    }
    match (le, ge) {
        (true, _) => Dominance::StrictlyDominated,
        (_, true) => Dominance::StrictlyDominates,
        _ => Dominance::Incomparable,
    }
}
