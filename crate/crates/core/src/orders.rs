//! The node precedence order and matchings witnessing it.
//!
//! `g` precedes `g'` when `theta(g) < theta(g')`, or the charged contents
//! agree and `g` lies in a later component.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matching::perfect_matching;
use crate::multipartition::{Kind, Multipartition, Node};
use crate::params::ChargeParams;
use crate::report::{sweep, SweepReport};

pub fn precedes(g: &Node, h: &Node, params: &ChargeParams) -> Result<bool> {
    let (tg, th) = (g.theta(params)?, h.theta(params)?);
    Ok(tg < th || (tg == th && g.comp > h.comp))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    StrictlyPrecedes,
}

/// A bijection between the nodes of two multipartitions in which each
/// pair is equal or strictly increasing for the precedence order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodePairing {
    pub pairs: Vec<(Node, Node, Relation)>,
}

impl NodePairing {
    pub fn node_pairs(&self) -> Vec<(Node, Node)> {
        self.pairs.iter().map(|&(g, h, _)| (g, h)).collect()
    }
}

/// Searches for a bijection `[lambda] -> [lambda']` with every pair equal
/// as triples or strictly preceding.
pub fn precedence_matching(
    lambda: &Multipartition,
    lambda_prime: &Multipartition,
    params: &ChargeParams,
) -> Result<Option<NodePairing>> {
    if lambda.size() != lambda_prime.size() {
        return Err(Error::SizeMismatch(lambda.size(), lambda_prime.size()));
    }
    let left = lambda.nodes();
    let right = lambda_prime.nodes();
    let mut adj = Vec::with_capacity(left.len());
    for g in &left {
        let mut row = Vec::new();
        for (j, h) in right.iter().enumerate() {
            if g == h || precedes(g, h, params)? {
                row.push(j);
            }
        }
        adj.push(row);
    }
    let Some(mate) = perfect_matching(&adj, right.len()) else {
        return Ok(None);
    };
    let pairs = left
        .iter()
        .zip(mate)
        .map(|(g, j)| {
            let h = right[j];
            let rel = if *g == h { Relation::Equal } else { Relation::StrictlyPrecedes };
            (*g, h, rel)
        })
        .collect();
    Ok(Some(NodePairing { pairs }))
}

/// Checks, over all ordered pairs of `level`-compositions of `n`, that a
/// precedence matching forces `lambda = lambda'` or a strict drop of the
/// a-function.
pub fn check_prop_5_4(n: usize, params: &ChargeParams) -> Result<SweepReport> {
    sweep("prop54", n, Kind::Composition, params, |l, m| Ok(precedence_matching(l, m, params)?.map(|p| p.node_pairs())))
}
