//! Graph isomorphism and canonical labelling for small graphs.
//!
//! Canonical forms use individualization-refinement over bitset adjacency
//! rows (at most 16 vertices): refine an ordered partition by neighbour
//! counts, branch on the first non-singleton cell, and take the minimal
//! adjacency encoding over all discrete leaves. Twin vertices (equal rows)
//! are branched only once per cell.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Adjacency rows packed into u16 masks; usable up to 16 vertices.
#[derive(Debug, Clone, Copy)]
pub(crate) struct BitGraph {
    pub n: usize,
    pub adj: [u16; 16],
}

impl BitGraph {
    pub fn from_simple(g: &SimpleGraph) -> Result<Self> {
        let n = g.vertex_count();
        if n > 16 {
            return Err(Error::TooLarge(format!(
                "canonical labelling limited to 16 vertices, got {n}"
            )));
        }
        let mut adj = [0u16; 16];
        for &(i, j) in g.edge_indices() {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Ok(BitGraph { n, adj })
    }

    fn pair_bit(&self, a: usize, b: usize) -> u32 {
        let (a, b) = (a.min(b), a.max(b));
        // index of (a, b) in row-major upper triangle
        (a * (2 * self.n - a - 1) / 2 + (b - a - 1)) as u32
    }

    fn encode(&self, perm: &[usize]) -> u128 {
        let mut code = 0u128;
        for i in 0..self.n {
            let mut row = self.adj[i];
            while row != 0 {
                let j = row.trailing_zeros() as usize;
                row &= row - 1;
                if i < j {
                    code |= 1u128 << self.pair_bit(perm[i], perm[j]);
                }
            }
        }
        code
    }

    /// Canonical edge encoding and a permutation old index -> new index
    /// realising it. Equal encodings iff isomorphic.
    pub fn canonical(&self) -> (u128, Vec<usize>) {
        if self.n == 0 {
            return (0, Vec::new());
        }
        let cells = vec![(0..self.n).collect::<Vec<usize>>()];
        let mut best: Option<(u128, Vec<usize>)> = None;
        self.search(cells, &mut best);
        best.expect("at least one leaf")
    }

    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let masks: Vec<u16> = cells
                .iter()
                .map(|c| c.iter().fold(0u16, |m, &v| m | (1 << v)))
                .collect();
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            let mut changed = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u8>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let key: Vec<u8> = masks
                            .iter()
                            .map(|&m| (self.adj[v] & m).count_ones() as u8)
                            .collect();
                        (key, v)
                    })
                    .collect();
                keyed.sort();
                let mut group: Vec<usize> = vec![keyed[0].1];
                for pair in keyed.windows(2) {
                    if pair[0].0 == pair[1].0 {
                        group.push(pair[1].1);
                    } else {
                        next.push(std::mem::take(&mut group));
                        group.push(pair[1].1);
                        changed = true;
                    }
                }
                next.push(group);
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    fn search(&self, cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
        let cells = self.refine(cells);
        let target = match cells.iter().position(|c| c.len() > 1) {
            None => {
                let mut perm = vec![0usize; self.n];
                for (pos, cell) in cells.iter().enumerate() {
                    perm[cell[0]] = pos;
                }
                let code = self.encode(&perm);
                if best.as_ref().is_none_or(|(b, _)| code < *b) {
                    *best = Some((code, perm));
                }
                return;
            }
            Some(i) => i,
        };
        // branch on one representative per twin class of the target cell:
        // swapping twins is an automorphism, so their subtrees coincide
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            let twin_of_tried = tried
                .iter()
                .any(|&u| self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u));
            if twin_of_tried {
                continue;
            }
            tried.push(v);
            let mut child: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            self.search(child, best);
        }
    }
}

/// Canonical labelling string; equal strings iff isomorphic. Limited to
/// 16 vertices.
pub fn canonical_form(g: &SimpleGraph) -> Result<String> {
    let bg = BitGraph::from_simple(g)?;
    let (code, _) = bg.canonical();
    let n = bg.n;
    let mut edges = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if code & (1u128 << bg.pair_bit(a, b)) != 0 {
                edges.push(format!("{a}-{b}"));
            }
        }
    }
    Ok(format!("{n}|{}", edges.join(",")))
}

/// An adjacency-preserving bijection between the vertex sets, if one
/// exists. Degree refinement plus backtracking.
pub fn is_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Option<BTreeMap<String, String>> {
    let n = g.vertex_count();
    if n != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return None;
    }
    if n == 0 {
        return Some(BTreeMap::new());
    }

    // match order: max degree first, then most-matched-neighbours greedy
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let matched_neighbors = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| placed[w])
                    .count();
                (matched_neighbors, g.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }

    let mut assignment: Vec<Option<usize>> = vec![None; n]; // g index -> h index
    let mut used = vec![false; n];
    if backtrack(g, h, &order, 0, &mut assignment, &mut used) {
        let map: BTreeMap<String, String> = assignment
            .iter()
            .enumerate()
            .map(|(i, j)| {
                (
                    g.label(i).to_string(),
                    h.label(j.expect("complete assignment")).to_string(),
                )
            })
            .collect();
        debug_assert!(check_bijection(g, h, &map));
        Some(map)
    } else {
        None
    }
}

fn backtrack(
    g: &SimpleGraph,
    h: &SimpleGraph,
    order: &[usize],
    depth: usize,
    assignment: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let gu = order[depth];
    for hv in 0..h.vertex_count() {
        if used[hv] || g.degree(gu) != h.degree(hv) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&gw| {
            let hw = assignment[gw].expect("earlier vertices assigned");
            g.has_edge(gu, gw) == h.has_edge(hv, hw)
        });
        if !consistent {
            continue;
        }
        assignment[gu] = Some(hv);
        used[hv] = true;
        if backtrack(g, h, order, depth + 1, assignment, used) {
            return true;
        }
        assignment[gu] = None;
        used[hv] = false;
    }
    false
}

fn check_bijection(g: &SimpleGraph, h: &SimpleGraph, map: &BTreeMap<String, String>) -> bool {
    g.edge_labels().all(|(u, v)| {
        match (
            h.index_of(&map[u]),
            h.index_of(&map[v]),
        ) {
            (Some(i), Some(j)) => h.has_edge(i, j),
            _ => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    fn k5_minus(edge: (usize, usize)) -> SimpleGraph {
        let labels: Vec<String> = (1..=5).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in (i + 1)..5 {
                if (i, j) != edge {
                    edges.push((labels[i].clone(), labels[j].clone()));
                }
            }
        }
        SimpleGraph::new(labels, edges).unwrap()
    }

    #[test]
    fn relabeled_graph_is_isomorphic() {
        let g = complete_graph(4);
        let map: BTreeMap<String, String> = [
            ("v1", "a"),
            ("v2", "b"),
            ("v3", "c"),
            ("v4", "d"),
        ]
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
        let h = g.relabeled(&map).unwrap();
        let found = is_isomorphic(&g, &h).expect("isomorphic");
        assert!(check_bijection(&g, &h, &found));
    }

    #[test]
    fn k5_minus_any_edge_all_isomorphic() {
        let a = k5_minus((0, 1));
        let b = k5_minus((2, 4));
        assert!(is_isomorphic(&a, &b).is_some());
        assert_eq!(
            canonical_form(&a).unwrap(),
            canonical_form(&b).unwrap()
        );
    }

    #[test]
    fn different_graphs_not_isomorphic() {
        let k4 = complete_graph(4);
        let path = SimpleGraph::new(
            ["a", "b", "c", "d"],
            vec![("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c"), ("b", "d")],
        )
        .unwrap();
        // both are K4 actually; make a genuine non-isomorphic pair
        assert!(is_isomorphic(&k4, &path).is_some());
        let c4 = SimpleGraph::new(
            ["a", "b", "c", "d"],
            vec![("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap();
        let star = SimpleGraph::new(
            ["a", "b", "c", "d"],
            vec![("a", "b"), ("a", "c"), ("a", "d"), ("b", "c")],
        )
        .unwrap();
        assert!(is_isomorphic(&c4, &star).is_none());
        assert_ne!(canonical_form(&c4).unwrap(), canonical_form(&star).unwrap());
    }

    #[test]
    fn canonical_form_fixed_for_k3() {
        let s = canonical_form(&complete_graph(3)).unwrap();
        assert_eq!(s, "3|0-1,0-2,1-2");
    }

    #[test]
    fn canonical_form_too_large() {
        let g = complete_graph(17);
        assert!(matches!(canonical_form(&g), Err(Error::TooLarge(_))));
    }

    #[test]
    fn canonical_form_invariant_under_relabeling() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let g = crate::graph::double_banana();
        let base = canonical_form(&g).unwrap();
        for round in 0..20 {
            let mut new_labels: Vec<String> =
                (0..g.vertex_count()).map(|i| format!("r{round}x{i}")).collect();
            new_labels.shuffle(&mut rng);
            let map: BTreeMap<String, String> = g
                .labels()
                .iter()
                .cloned()
                .zip(new_labels)
                .collect();
            let h = g.relabeled(&map).unwrap();
            assert_eq!(canonical_form(&h).unwrap(), base);
        }
    }
}
