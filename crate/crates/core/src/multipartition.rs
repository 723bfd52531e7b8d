//! Multipartitions, their nodes and node statistics, and enumeration.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::params::ChargeParams;
use crate::rational::Rational;

/// A cell `(row, col, comp)` of a Young diagram; rows and columns count
/// from 1, components from 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub const fn new(row: usize, col: usize, comp: usize) -> Self {
        Node { row, col, comp }
    }

    /// Content `col - row`.
    pub fn cont(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// Charged content `cont + s_comp`.
    pub fn theta(&self, params: &ChargeParams) -> Result<i64> {
        params.check_comp(self.comp)?;
        Ok(self.cont() + params.s()[self.comp])
    }

    /// Shifted charged content `cont + t_comp`.
    pub fn eta(&self, params: &ChargeParams) -> Result<Rational> {
        params.check_comp(self.comp)?;
        Ok(Rational::from_integer(self.cont()) + params.t()[self.comp])
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

impl Serialize for Node {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.col, self.comp].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Node {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [row, col, comp] = <[usize; 3]>::deserialize(d)?;
        if row == 0 || col == 0 {
            return Err(serde::de::Error::custom("node rows and columns start at 1"));
        }
        Ok(Node { row, col, comp })
    }
}

/// Whether components are partitions (weakly decreasing) or compositions
/// (positive parts in any order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Partition,
    Composition,
}

/// An `l`-tuple of compositions, stored with trailing zero parts stripped.
///
/// The derived order is lexicographic on the component tuple; canonical
/// enumeration order is the reverse of it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    components: Vec<Vec<u32>>,
}

impl Multipartition {
    pub fn new(mut components: Vec<Vec<u32>>) -> Self {
        for c in &mut components {
            while c.last() == Some(&0) {
                c.pop();
            }
        }
        Multipartition { components }
    }

    pub fn empty(level: usize) -> Self {
        Multipartition { components: vec![Vec::new(); level] }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn component(&self, c: usize) -> &[u32] {
        &self.components[c]
    }

    pub fn size(&self) -> usize {
        self.components.iter().flatten().map(|&p| p as usize).sum()
    }

    /// Part `row` (1-based) of component `comp`, zero past the end.
    pub fn part(&self, comp: usize, row: usize) -> u32 {
        self.components[comp].get(row - 1).copied().unwrap_or(0)
    }

    pub fn is_partition(&self) -> bool {
        self.components.iter().all(|c| c.windows(2).all(|w| w[0] >= w[1]))
    }

    pub fn is_kind(&self, kind: Kind) -> bool {
        match kind {
            Kind::Partition => self.is_partition(),
            Kind::Composition => self.components.iter().flatten().all(|&p| p > 0),
        }
    }

    pub fn contains(&self, node: &Node) -> bool {
        node.comp < self.level() && node.row >= 1 && node.col >= 1 && node.col as u32 <= self.part(node.comp, node.row)
    }

    /// All nodes, ordered by component, then row, then column.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (comp, parts) in self.components.iter().enumerate() {
            for (r, &p) in parts.iter().enumerate() {
                for col in 1..=p as usize {
                    out.push(Node::new(r + 1, col, comp));
                }
            }
        }
        out
    }

    fn can_add(&self, node: &Node, kind: Kind) -> bool {
        if node.comp >= self.level() || node.row == 0 {
            return false;
        }
        let len = self.components[node.comp].len();
        if node.row > len + 1 || node.col as u32 != self.part(node.comp, node.row) + 1 {
            return false;
        }
        match kind {
            Kind::Composition => true,
            Kind::Partition => node.row == 1 || self.part(node.comp, node.row - 1) as usize >= node.col,
        }
    }

    fn can_remove(&self, node: &Node, kind: Kind) -> bool {
        if !self.contains(node) || node.col as u32 != self.part(node.comp, node.row) {
            return false;
        }
        let len = self.components[node.comp].len();
        match kind {
            // no interior zero parts
            Kind::Composition => node.col > 1 || node.row == len,
            Kind::Partition => (self.part(node.comp, node.row + 1) as usize) < node.col,
        }
    }

    pub fn add_node(&self, node: Node, kind: Kind) -> Result<Self> {
        if !self.can_add(&node, kind) {
            return Err(Error::NotAddable { row: node.row, col: node.col, comp: node.comp });
        }
        let mut components = self.components.clone();
        let c = &mut components[node.comp];
        if node.row > c.len() {
            c.push(1);
        } else {
            c[node.row - 1] += 1;
        }
        Ok(Multipartition::new(components))
    }

    pub fn remove_node(&self, node: Node, kind: Kind) -> Result<Self> {
        if !self.can_remove(&node, kind) {
            return Err(Error::NotRemovable { row: node.row, col: node.col, comp: node.comp });
        }
        let mut components = self.components.clone();
        components[node.comp][node.row - 1] -= 1;
        Ok(Multipartition::new(components))
    }

    /// Positions where a node can be added while staying of `kind`,
    /// ordered by component then row.
    pub fn addable_nodes(&self, kind: Kind) -> Vec<Node> {
        let mut out = Vec::new();
        for comp in 0..self.level() {
            let len = self.components[comp].len();
            for row in 1..=len + 1 {
                let node = Node::new(row, self.part(comp, row) as usize + 1, comp);
                if self.can_add(&node, kind) {
                    out.push(node);
                }
            }
        }
        out
    }

    pub fn removable_nodes(&self, kind: Kind) -> Vec<Node> {
        let mut out = Vec::new();
        for comp in 0..self.level() {
            for row in 1..=self.components[comp].len() {
                let node = Node::new(row, self.part(comp, row) as usize, comp);
                if node.col > 0 && self.can_remove(&node, kind) {
                    out.push(node);
                }
            }
        }
        out
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

impl Serialize for Multipartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.components.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multipartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let components = Vec::<Vec<u32>>::deserialize(d)?;
        if components.is_empty() {
            return Err(serde::de::Error::custom("a multipartition needs at least one component"));
        }
        Ok(Multipartition::new(components))
    }
}

/// Partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `n` into positive parts, in reverse lexicographic order.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest).rev() {
            cur.push(p);
            go(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// Every `level`-partition (or composition) of `n`, duplicate free, in
/// canonical order: descending lexicographic on the component tuple.
pub fn enumerate(n: usize, level: usize, kind: Kind) -> Vec<Multipartition> {
    assert!(level >= 1, "level must be at least 1");
    let gen = |k: usize| match kind {
        Kind::Partition => partitions(k as u32),
        Kind::Composition => compositions(k as u32),
    };
    let by_size: Vec<Vec<Vec<u32>>> = (0..=n).map(gen).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(level);
    fn go(
        rest: usize,
        slots: usize,
        by_size: &[Vec<Vec<u32>>],
        cur: &mut Vec<Vec<u32>>,
        out: &mut Vec<Multipartition>,
    ) {
        if slots == 1 {
            for p in &by_size[rest] {
                cur.push(p.clone());
                out.push(Multipartition::new(cur.clone()));
                cur.pop();
            }
            return;
        }
        for k in (0..=rest).rev() {
            for p in &by_size[k] {
                cur.push(p.clone());
                go(rest - k, slots - 1, by_size, cur, out);
                cur.pop();
            }
        }
    }
    go(n, level, &by_size, &mut cur, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}
