//! Independent oracles shared by the integration tests. None of these
//! call into the code paths they are used to check.

#![allow(dead_code)]

use basic_set_kit::{ChargeParams, Multipartition, Node, Rational};

/// Partition counts p(0..=n) by the recursion on the largest part.
pub fn partition_counts(n: usize) -> Vec<u64> {
    fn p(n: usize, max: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| p(n - k, k)).sum()
    }
    (0..=n).map(|k| p(k, k)).collect()
}

/// Compositions of k into positive parts: 2^(k-1), and 1 for k = 0.
pub fn composition_counts(n: usize) -> Vec<u64> {
    (0..=n).map(|k| if k == 0 { 1 } else { 1u64 << (k - 1) }).collect()
}

/// Coefficient of q^n in the `level`-fold product of the series `seq`.
pub fn convolution_power(seq: &[u64], level: usize, n: usize) -> u64 {
    let mut acc = vec![0u64; n + 1];
    acc[0] = 1;
    for _ in 0..level {
        let mut next = vec![0u64; n + 1];
        for (i, a) in acc.iter().enumerate() {
            for j in 0..=n - i {
                next[i + j] += a * seq[j];
            }
        }
        acc = next;
    }
    acc[n]
}

/// Partitions of n generated by appending parts in weakly increasing
/// order, then reversed (a different traversal from the library).
pub fn naive_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            let mut p = cur.clone();
            p.reverse();
            out.push(p);
            return;
        }
        for k in min..=rest {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Partitions of n in which no part occurs e or more times.
pub fn e_regular_partitions(n: u32, e: u32) -> Vec<Vec<u32>> {
    naive_partitions(n)
        .into_iter()
        .filter(|p| {
            let mut run = 1;
            for w in p.windows(2) {
                run = if w[0] == w[1] { run + 1 } else { 1 };
                if run >= e {
                    return false;
                }
            }
            e > 1 || p.is_empty()
        })
        .collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// The a-function transcribed directly from its definition, using
/// integers scaled by the common denominator of `t`. Returns (num, den).
pub fn oracle_a(components: &[Vec<u32>], t: &[(i64, i64)], z: i64, r: i64) -> (i128, i128) {
    let den = t.iter().fold(1i128, |l, &(_, q)| l / gcd(l, q as i128) * q as i128);
    let floor = |(p, q): (i64, i64)| -> i64 { p.div_euclid(q) };
    let n_scaled = |comps: &[Vec<u32>]| -> i128 {
        let mut vals: Vec<i128> = Vec::new();
        for (i, &(p, q)) in t.iter().enumerate() {
            let ti = p as i128 * (den / q as i128);
            for k in 1..=(r + floor((p, q))) {
                let part = comps.get(i).and_then(|c| c.get(k as usize - 1)).copied().unwrap_or(0) as i128;
                vals.push((part - k as i128 + z as i128) * den + ti);
            }
        }
        vals.sort_unstable_by(|a, b| b.cmp(a));
        vals.iter().enumerate().map(|(i, v)| i as i128 * v).sum()
    };
    let empty = vec![Vec::new(); t.len()];
    let num = n_scaled(components) - n_scaled(&empty);
    let g = gcd(num, den).max(1);
    (num / g, den / g)
}

pub fn as_pair(x: &Rational) -> (i64, i64) {
    (*x.numer(), *x.denom())
}

pub fn rational_pair(x: &Rational) -> (i128, i128) {
    (*x.numer() as i128, *x.denom() as i128)
}

/// Whether some bijection of `left` onto `right` uses only pairs
/// accepted by `edge`; tries all n! orderings.
pub fn brute_force_bijection<F: Fn(&Node, &Node) -> bool>(left: &[Node], right: &[Node], edge: F) -> bool {
    fn go<F: Fn(&Node, &Node) -> bool>(i: usize, left: &[Node], right: &[Node], used: &mut [bool], edge: &F) -> bool {
        if i == left.len() {
            return true;
        }
        for j in 0..right.len() {
            if !used[j] && edge(&left[i], &right[j]) {
                used[j] = true;
                if go(i + 1, left, right, used, edge) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    left.len() == right.len() && go(0, left, right, &mut vec![false; right.len()], &edge)
}

/// Precedence of nodes computed from raw charges.
pub fn oracle_precedes(g: &Node, h: &Node, s: &[i64]) -> bool {
    let th = |x: &Node| x.col as i64 - x.row as i64 + s[x.comp];
    th(g) < th(h) || (th(g) == th(h) && g.comp > h.comp)
}

/// DG pair condition from raw charges: integer mu >= 0 with
/// mu = dc + l (theta' - theta) / e and mu = dc mod l.
pub fn oracle_dg(g: &Node, h: &Node, e: i64, s: &[i64]) -> bool {
    let l = s.len() as i64;
    let th = |x: &Node| x.col as i64 - x.row as i64 + s[x.comp];
    let dc = g.comp as i64 - h.comp as i64;
    let num = l * (th(h) - th(g));
    if num % e != 0 {
        return false;
    }
    let mu = dc + num / e;
    mu >= 0 && (mu - dc).rem_euclid(l) == 0
}

pub fn mp(c: &[&[u32]]) -> Multipartition {
    Multipartition::new(c.iter().map(|x| x.to_vec()).collect())
}

/// A second admissible shift next to the Uglov one.
pub fn alternative_shift(e: u32, level: usize) -> Vec<Rational> {
    let e = e as i64;
    match level {
        1 => vec![Rational::new(1, 2)],
        2 => vec![Rational::from_integer(0), Rational::new(3 * e + 2, 6)],
        3 => vec![Rational::from_integer(0), Rational::new(2 * e + 1, 6), Rational::new(4 * e + 1, 6)],
        _ => unimplemented!("no alternative shift for level {level}"),
    }
}

pub fn alternative(e: u32, s: Vec<i64>) -> ChargeParams {
    let u = alternative_shift(e, s.len());
    ChargeParams::new(e, s, u).expect("alternative shift is admissible")
}

/// Multicharges used across the parameter sweeps.
pub fn charges(level: usize) -> Vec<Vec<i64>> {
    match level {
        1 => vec![vec![0], vec![1], vec![3]],
        2 => vec![vec![0, 0], vec![0, 1], vec![1, 3]],
        3 => vec![vec![0, 0, 0], vec![0, 1, 2], vec![2, 0, 1]],
        _ => unimplemented!(),
    }
}

/// Uglov and alternative parameters for every charge and `e` given.
pub fn parameter_grid(level: usize, es: &[u32]) -> Vec<(String, ChargeParams)> {
    let mut out = Vec::new();
    for &e in es {
        for s in charges(level) {
            out.push((format!("e={e} s={s:?} u=uglov"), ChargeParams::uglov(e, s.clone()).unwrap()));
            out.push((format!("e={e} s={s:?} u=alt"), alternative(e, s)));
        }
    }
    out
}
