//! The arithmetic matching condition that is necessary for a nonzero
//! multiplicity `[Delta(lambda) : L(lambda')]`.
//!
//! A pair of nodes `(g, g')` is compatible when
//! `mu = c(g) - c(g') + (l / e) (theta(g') - theta(g))` is a nonnegative
//! integer congruent to `c(g) - c(g')` modulo `l`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matching::perfect_matching;
use crate::multipartition::{Kind, Multipartition, Node};
use crate::params::ChargeParams;
use crate::rational::{is_nonneg_integer, Rational};
use crate::report::{sweep, SweepReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DgCertificate {
    /// `(node of lambda, node of lambda', mu)`
    pub pairing: Vec<(Node, Node, u64)>,
    pub e: u32,
    pub s: Vec<i64>,
}

impl DgCertificate {
    pub fn node_pairs(&self) -> Vec<(Node, Node)> {
        self.pairing.iter().map(|&(g, h, _)| (g, h)).collect()
    }
}

/// The multiplicity `mu` attached to `(g, g')`, if the pair is compatible.
pub fn dg_edge(g: &Node, h: &Node, params: &ChargeParams) -> Result<Option<u64>> {
    let level = params.level() as i64;
    let dc = g.comp as i64 - h.comp as i64;
    let dtheta = h.theta(params)? - g.theta(params)?;
    let mu = Rational::from_integer(dc) + Rational::new(level * dtheta, params.e() as i64);
    if !is_nonneg_integer(&mu) {
        return Ok(None);
    }
    let mu = mu.to_integer();
    if (mu - dc).mod_floor(&level) != 0 {
        return Ok(None);
    }
    Ok(Some(mu as u64))
}

pub fn dg_compatible(
    lambda: &Multipartition,
    lambda_prime: &Multipartition,
    params: &ChargeParams,
) -> Result<Option<DgCertificate>> {
    if lambda.size() != lambda_prime.size() {
        return Err(Error::SizeMismatch(lambda.size(), lambda_prime.size()));
    }
    let left = lambda.nodes();
    let right = lambda_prime.nodes();
    let mut adj = Vec::with_capacity(left.len());
    let mut mus = Vec::with_capacity(left.len());
    for g in &left {
        let mut row = Vec::new();
        let mut mu_row = vec![None; right.len()];
        for (j, h) in right.iter().enumerate() {
            if let Some(mu) = dg_edge(g, h, params)? {
                row.push(j);
                mu_row[j] = Some(mu);
            }
        }
        adj.push(row);
        mus.push(mu_row);
    }
    let Some(mate) = perfect_matching(&adj, right.len()) else {
        return Ok(None);
    };
    let pairing = left
        .iter()
        .zip(mate)
        .enumerate()
        .map(|(i, (g, j))| (*g, right[j], mus[i][j].expect("matched along an edge")))
        .collect();
    Ok(Some(DgCertificate { pairing, e: params.e(), s: params.s().to_vec() }))
}

/// Checks, over all ordered pairs of `level`-partitions of `n`, that DG
/// compatibility forces `lambda = lambda'` or a strict drop of `a`.
pub fn check_theorem_5_6(n: usize, params: &ChargeParams) -> Result<SweepReport> {
    sweep("thm56", n, Kind::Partition, params, |l, m| Ok(dg_compatible(l, m, params)?.map(|c| c.node_pairs())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(c: &[&[u32]]) -> Multipartition {
        Multipartition::new(c.iter().map(|x| x.to_vec()).collect())
    }

    #[test]
    fn diagonal_edges_are_zero() {
        let p = ChargeParams::uglov(3, vec![1, 3]).unwrap();
        for g in mp(&[&[3, 1], &[2, 2]]).nodes() {
            assert_eq!(dg_edge(&g, &g, &p).unwrap(), Some(0));
        }
    }

    #[test]
    fn level_one_edges() {
        let p = ChargeParams::uglov(2, vec![0]).unwrap();
        let g = Node::new(2, 1, 0); // theta -1
        assert_eq!(dg_edge(&g, &Node::new(1, 2, 0), &p).unwrap(), Some(1)); // theta 1
        assert_eq!(dg_edge(&g, &Node::new(1, 1, 0), &p).unwrap(), None); // odd gap
        assert_eq!(dg_edge(&Node::new(1, 2, 0), &g, &p).unwrap(), None); // negative
        assert_eq!(dg_edge(&g, &Node::new(1, 4, 0), &p).unwrap(), Some(2));
    }

    #[test]
    fn level_two_edge_with_component_drop() {
        let p = ChargeParams::uglov(2, vec![0, 0]).unwrap();
        assert_eq!(dg_edge(&Node::new(1, 1, 1), &Node::new(1, 1, 0), &p).unwrap(), Some(1));
        assert_eq!(dg_edge(&Node::new(1, 1, 0), &Node::new(1, 1, 1), &p).unwrap(), None);
    }

    #[test]
    fn non_integral_ratio() {
        // l / e = 2 / 3: theta gap 1 gives mu = c - c' + 2/3
        let p = ChargeParams::uglov(3, vec![0, 0]).unwrap();
        assert_eq!(dg_edge(&Node::new(1, 1, 0), &Node::new(1, 2, 0), &p).unwrap(), None);
        assert_eq!(dg_edge(&Node::new(1, 1, 0), &Node::new(1, 4, 0), &p).unwrap(), Some(2));
    }

    #[test]
    fn reflexive_certificate() {
        let p = ChargeParams::uglov(2, vec![0, 1]).unwrap();
        let l = mp(&[&[2], &[1, 1]]);
        let c = dg_compatible(&l, &l, &p).unwrap().unwrap();
        assert!(c.pairing.iter().all(|&(_, _, mu)| mu == 0));
        assert_eq!(dg_compatible(&l, &mp(&[&[1], &[]]), &p), Err(Error::SizeMismatch(4, 1)));
    }

    #[test]
    fn single_node_sweep() {
        for s in [vec![0, 0], vec![0, 1], vec![1, 3]] {
            let p = ChargeParams::uglov(2, s).unwrap();
            assert!(check_theorem_5_6(1, &p).unwrap().passed);
        }
    }
}
