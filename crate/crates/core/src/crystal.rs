//! Good-node recursion in the level-`l` Fock space crystal and the Uglov
//! multipartitions it reaches from the empty multipartition.
//!
//! For a residue `i` the addable and removable `i`-nodes are read in
//! increasing precedence order. Each addable node cancels the nearest
//! unmatched removable node read before it, which leaves a reduced word
//! of the form `A...A R...R`; the good node is its last addable node.
//! With `l = 1` this reproduces the e-regular partitions.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::multipartition::{Kind, Multipartition, Node};
use crate::orders::precedes;
use crate::params::ChargeParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ResidueNode {
    pub node: Node,
    pub residue: u32,
}

impl ResidueNode {
    pub fn new(node: Node, params: &ChargeParams) -> Result<Self> {
        let residue = node.theta(params)?.mod_floor(&(params.e() as i64)) as u32;
        Ok(ResidueNode { node, residue })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mark {
    Addable,
    Removable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub residue: u32,
    /// All addable and removable `i`-nodes in increasing precedence order.
    pub word: Vec<(ResidueNode, Mark)>,
    /// The word after cancellation.
    pub reduced: Vec<(ResidueNode, Mark)>,
    pub good: Option<Node>,
}

pub fn addable_nodes(mp: &Multipartition) -> Vec<Node> {
    mp.addable_nodes(Kind::Partition)
}

pub fn removable_nodes(mp: &Multipartition) -> Vec<Node> {
    mp.removable_nodes(Kind::Partition)
}

pub fn signature(mp: &Multipartition, residue: u32, params: &ChargeParams) -> Result<Signature> {
    if residue >= params.e() {
        return Err(Error::Params(format!("residue {residue} is not below e = {}", params.e())));
    }
    if mp.level() != params.level() {
        return Err(Error::LevelMismatch(mp.level(), params.level()));
    }
    let mut word = Vec::new();
    for (nodes, mark) in [(addable_nodes(mp), Mark::Addable), (removable_nodes(mp), Mark::Removable)] {
        for node in nodes {
            let rn = ResidueNode::new(node, params)?;
            if rn.residue == residue {
                word.push((rn, mark));
            }
        }
    }
    let key =
        |n: &Node| -> Result<(i64, std::cmp::Reverse<usize>)> { Ok((n.theta(params)?, std::cmp::Reverse(n.comp))) };
    let mut keyed = word.into_iter().map(|w| Ok((key(&w.0.node)?, w))).collect::<Result<Vec<_>>>()?;
    keyed.sort_by_key(|a| a.0);
    // Distinct i-nodes never tie: equal theta in one component means the
    // same diagonal, which holds at most one addable or removable node.
    assert!(keyed.windows(2).all(|w| w[0].0 < w[1].0), "tie in precedence order");
    let word: Vec<_> = keyed.into_iter().map(|(_, w)| w).collect();
    debug_assert!(word.windows(2).all(|w| precedes(&w[0].0.node, &w[1].0.node, params).unwrap_or(false)));

    let mut reduced: Vec<(ResidueNode, Mark)> = Vec::new();
    for &(rn, mark) in &word {
        if mark == Mark::Addable {
            if let Some(pos) = reduced.iter().rposition(|&(_, m)| m == Mark::Removable) {
                reduced.remove(pos);
                continue;
            }
        }
        reduced.push((rn, mark));
    }
    let good = reduced.iter().rev().find(|&&(_, m)| m == Mark::Addable).map(|&(rn, _)| rn.node);
    Ok(Signature { residue, word, reduced, good })
}

pub fn good_node(mp: &Multipartition, residue: u32, params: &ChargeParams) -> Result<Option<Node>> {
    Ok(signature(mp, residue, params)?.good)
}

/// One step of a generating path: add the good node of this residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PathStep {
    pub residue: u32,
    pub node: Node,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UglovSet {
    pub n: usize,
    pub level: usize,
    pub e: u32,
    pub s: Vec<i64>,
    /// Canonical order.
    pub elements: Vec<Multipartition>,
    /// One good-node path per element, aligned with `elements`.
    pub paths: Vec<Vec<PathStep>>,
}

impl UglovSet {
    pub fn contains(&self, mp: &Multipartition) -> bool {
        self.elements.binary_search_by(|x| mp.cmp(x)).is_ok()
    }

    pub fn set(&self) -> BTreeSet<Multipartition> {
        self.elements.iter().cloned().collect()
    }
}

/// Everything reachable from the empty multipartition by `n` good-node
/// additions, expanded breadth first by size.
pub fn uglov_multipartitions(n: usize, params: &ChargeParams) -> Result<UglovSet> {
    let empty = Multipartition::empty(params.level());
    let mut layer: BTreeMap<Multipartition, Vec<PathStep>> = BTreeMap::from([(empty, Vec::new())]);
    for _ in 0..n {
        // canonical order, residues ascending; the first path found wins
        let current: Vec<_> = layer.into_iter().rev().collect();
        let children: Vec<Vec<(Multipartition, Vec<PathStep>)>> = current
            .par_iter()
            .map(|(mp, path)| {
                let mut out = Vec::new();
                for residue in 0..params.e() {
                    if let Some(node) = good_node(mp, residue, params)? {
                        let mut p = path.clone();
                        p.push(PathStep { residue, node });
                        out.push((mp.add_node(node, Kind::Partition)?, p));
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        let mut next = BTreeMap::new();
        for (mp, path) in children.into_iter().flatten() {
            next.entry(mp).or_insert(path);
        }
        layer = next;
    }
    let (elements, paths) = layer.into_iter().rev().unzip();
    Ok(UglovSet { n, level: params.level(), e: params.e(), s: params.s().to_vec(), elements, paths })
}

/// Replays a path from the empty multipartition, checking each step adds
/// the current good node of its residue.
pub fn replay(path: &[PathStep], params: &ChargeParams) -> Result<Multipartition> {
    let mut mp = Multipartition::empty(params.level());
    for step in path {
        match good_node(&mp, step.residue, params)? {
            Some(g) if g == step.node => mp = mp.add_node(g, Kind::Partition)?,
            _ => return Err(Error::Input(format!("{} is not the good {}-node of {mp}", step.node, step.residue))),
        }
    }
    Ok(mp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(c: &[&[u32]]) -> Multipartition {
        Multipartition::new(c.iter().map(|x| x.to_vec()).collect())
    }

    #[test]
    fn good_nodes_of_small_partitions() {
        let p = ChargeParams::uglov(2, vec![0]).unwrap();
        let e = Multipartition::empty(1);
        assert_eq!(good_node(&e, 0, &p).unwrap(), Some(Node::new(1, 1, 0)));
        assert_eq!(good_node(&e, 1, &p).unwrap(), None);
        // addable 1-nodes (2,1) and (1,2), no removable ones
        let sig = signature(&mp(&[&[1]]), 1, &p).unwrap();
        assert_eq!(sig.word.len(), 2);
        assert_eq!(sig.good, Some(Node::new(1, 2, 0)));
        assert!(signature(&e, 2, &p).is_err());
    }

    #[test]
    fn cancellation_keeps_addable_before_removable() {
        // (2): addable (2,1) res 1 precedes removable (1,2) res 1; nothing cancels
        let p = ChargeParams::uglov(2, vec![0]).unwrap();
        let sig = signature(&mp(&[&[2]]), 1, &p).unwrap();
        assert_eq!(sig.reduced.len(), 2);
        assert_eq!(sig.good, Some(Node::new(2, 1, 0)));
        // (2,1), e = 3, residue 2: removable (2,1) precedes addable (1,3)
        let p = ChargeParams::uglov(3, vec![0]).unwrap();
        let sig = signature(&mp(&[&[2, 1]]), 2, &p).unwrap();
        assert_eq!(sig.word.iter().map(|w| w.1).collect::<Vec<_>>(), vec![Mark::Removable, Mark::Addable]);
        assert!(sig.reduced.is_empty());
        assert_eq!(sig.good, None);
    }

    #[test]
    fn empty_addables_and_residues() {
        let p = ChargeParams::uglov(3, vec![0, 2]).unwrap();
        let e = Multipartition::empty(2);
        assert_eq!(addable_nodes(&e), vec![Node::new(1, 1, 0), Node::new(1, 1, 1)]);
        assert!(removable_nodes(&e).is_empty());
        assert_eq!(ResidueNode::new(Node::new(3, 1, 0), &p).unwrap().residue, 1);
        assert_eq!(ResidueNode::new(Node::new(1, 1, 1), &p).unwrap().residue, 2);
    }

    #[test]
    fn small_sets() {
        let p = ChargeParams::uglov(2, vec![0, 0]).unwrap();
        let u = uglov_multipartitions(0, &p).unwrap();
        assert_eq!(u.elements, vec![Multipartition::empty(2)]);
        let p = ChargeParams::uglov(2, vec![0]).unwrap();
        let u = uglov_multipartitions(4, &p).unwrap();
        assert_eq!(u.elements, vec![mp(&[&[4]]), mp(&[&[3, 1]])]);
        let p = ChargeParams::uglov(3, vec![0]).unwrap();
        let u = uglov_multipartitions(4, &p).unwrap();
        assert_eq!(u.elements, vec![mp(&[&[4]]), mp(&[&[3, 1]]), mp(&[&[2, 2]]), mp(&[&[2, 1, 1]])]);
    }

    #[test]
    fn paths_replay() {
        let p = ChargeParams::uglov(2, vec![0, 1]).unwrap();
        let u = uglov_multipartitions(4, &p).unwrap();
        for (m, path) in u.elements.iter().zip(&u.paths) {
            assert_eq!(path.len(), 4);
            assert_eq!(&replay(path, &p).unwrap(), m);
            assert!(u.contains(m));
        }
        let bad = [PathStep { residue: 1, node: Node::new(1, 1, 0) }];
        assert!(replay(&bad, &p).is_err());
    }
}
