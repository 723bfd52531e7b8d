//! Perfect matchings in bipartite graphs by augmenting paths.

/// Finds a perfect matching of a bipartite graph with `adj.len()` left
/// vertices and `right` right vertices, where `adj[i]` lists the right
/// neighbours of left vertex `i`. Returns `mate[i]` for each left vertex.
pub fn perfect_matching(adj: &[Vec<usize>], right: usize) -> Option<Vec<usize>> {
    let left = adj.len();
    if left != right {
        return None;
    }
    let mut owner: Vec<Option<usize>> = vec![None; right];
    let mut seen = vec![false; right];
    for v in 0..left {
        seen.iter_mut().for_each(|s| *s = false);
        if !augment(v, adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut mate = vec![usize::MAX; left];
    for (w, o) in owner.iter().enumerate() {
        if let Some(v) = o {
            mate[*v] = w;
        }
    }
    Some(mate)
}

fn augment(v: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &w in &adj[v] {
        if seen[w] {
            continue;
        }
        seen[w] = true;
        let free = match owner[w] {
            None => true,
            Some(u) => augment(u, adj, owner, seen),
        };
        if free {
            owner[w] = Some(v);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn valid(adj: &[Vec<usize>], mate: &[usize]) -> bool {
        let mut used = vec![false; mate.len()];
        mate.iter().enumerate().all(|(v, &w)| {
            let ok = adj[v].contains(&w) && !used[w];
            used[w] = true;
            ok
        })
    }

    #[test]
    fn needs_augmentation() {
        let adj = vec![vec![0, 1], vec![0]];
        let m = perfect_matching(&adj, 2).unwrap();
        assert_eq!(m, vec![1, 0]);
        assert!(valid(&adj, &m));
    }

    #[test]
    fn hall_violation() {
        // two left vertices share a single neighbour
        let adj = vec![vec![0], vec![0], vec![1, 2]];
        assert!(perfect_matching(&adj, 3).is_none());
        assert!(perfect_matching(&[vec![0]], 2).is_none());
    }

    #[test]
    fn empty_graph_matches_trivially() {
        assert_eq!(perfect_matching(&[], 0), Some(vec![]));
    }

    #[test]
    fn longer_chain() {
        let adj = vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0]];
        let m = perfect_matching(&adj, 4).unwrap();
        assert!(valid(&adj, &m));
    }
}
