//! Exhaustive pair sweeps and the JSON report they produce.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::kappa::a_function;
use crate::multipartition::{enumerate, Kind, Multipartition, Node};
use crate::params::ChargeParams;
use crate::rational::{self, Rational};

pub const SCHEMA: &str = "basic-set-kit/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub lambda: Multipartition,
    pub lambda_prime: Multipartition,
    #[serde(with = "rational::as_string")]
    pub a_lambda: Rational,
    #[serde(with = "rational::as_string")]
    pub a_lambda_prime: Rational,
    /// Witness pairs `(node of lambda, node of lambda')`.
    pub witness: Vec<(Node, Node)>,
}

/// Outcome of checking "witness exists => lambda = lambda' or
/// a(lambda) > a(lambda')" over every ordered pair of labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub schema: &'static str,
    pub check: &'static str,
    pub n: usize,
    pub level: usize,
    pub kind: &'static str,
    pub params: ChargeParams,
    pub labels: usize,
    pub pairs_tested: u64,
    /// Pairs for which a witness was found.
    pub matched: u64,
    /// Matched pairs with `lambda != lambda'`, where `a` had to drop.
    pub asserted: u64,
    pub violations: u64,
    /// First violation in canonical pair order.
    pub counterexample: Option<Counterexample>,
    pub passed: bool,
}

#[derive(Default)]
struct Tally {
    matched: u64,
    asserted: u64,
    violations: u64,
    first: Option<Counterexample>,
}

/// Runs `witness` over all ordered pairs of `level`-multipartitions of
/// `n` of the given kind. The sweep is parallel over the first label;
/// results do not depend on the thread count.
pub(crate) fn sweep<F>(
    check: &'static str,
    n: usize,
    kind: Kind,
    params: &ChargeParams,
    witness: F,
) -> Result<SweepReport>
where
    F: Fn(&Multipartition, &Multipartition) -> Result<Option<Vec<(Node, Node)>>> + Sync,
{
    let labels = enumerate(n, params.level(), kind);
    let a: Vec<Rational> = labels.iter().map(|m| a_function(m, params)).collect::<Result<_>>()?;
    let rows: Vec<Tally> = (0..labels.len())
        .into_par_iter()
        .map(|i| {
            let mut tally = Tally::default();
            for j in 0..labels.len() {
                let Some(w) = witness(&labels[i], &labels[j])? else { continue };
                tally.matched += 1;
                if i == j {
                    continue;
                }
                tally.asserted += 1;
                if a[i] <= a[j] {
                    tally.violations += 1;
                    if tally.first.is_none() {
                        tally.first = Some(Counterexample {
                            lambda: labels[i].clone(),
                            lambda_prime: labels[j].clone(),
                            a_lambda: a[i],
                            a_lambda_prime: a[j],
                            witness: w,
                        });
                    }
                }
            }
            Ok(tally)
        })
        .collect::<Result<_>>()?;

    let mut total = Tally::default();
    for row in rows {
        total.matched += row.matched;
        total.asserted += row.asserted;
        total.violations += row.violations;
        if total.first.is_none() {
            total.first = row.first;
        }
    }
    let count = labels.len() as u64;
    Ok(SweepReport {
        schema: SCHEMA,
        check,
        n,
        level: params.level(),
        kind: match kind {
            Kind::Partition => "partition",
            Kind::Composition => "composition",
        },
        params: params.clone(),
        labels: labels.len(),
        pairs_tested: count * count,
        matched: total.matched,
        asserted: total.asserted,
        violations: total.violations,
        counterexample: total.first,
        passed: total.violations == 0,
    })
}

impl SweepReport {
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{}: n={} level={} e={} s={:?} u=[{}] ({}s)\n  labels {}, pairs {}, matched {}, asserted {}, violations {}\n",
            self.check,
            self.n,
            self.level,
            self.params.e(),
            self.params.s(),
            self.params.u().iter().map(rational::format_rational).collect::<Vec<_>>().join(", "),
            self.kind,
            self.labels,
            self.pairs_tested,
            self.matched,
            self.asserted,
            self.violations,
        );
        match &self.counterexample {
            None => s.push_str("  PASS\n"),
            Some(c) => s.push_str(&format!(
                "  FAIL: lambda={} a={} ; lambda'={} a={}\n",
                c.lambda,
                rational::format_rational(&c.a_lambda),
                c.lambda_prime,
                rational::format_rational(&c.a_lambda_prime)
            )),
        }
        s
    }
}
