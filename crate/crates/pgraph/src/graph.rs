//! Abstract simple graphs with string-labelled vertices.
//!
//! `SimpleGraph` is the label-level view shared by the sparsity,
//! isomorphism and rigidity routines. Vertices are kept sorted so every
//! iteration order (and hence every verdict and witness) is deterministic.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A finite simple graph. No loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    /// Edges as index pairs (i, j) with i < j, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    /// Build a graph from vertex labels and label pairs.
    pub fn new<I, J, S, T>(vertices: I, edges: J) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = (T, T)>,
        S: Into<String>,
        T: Into<String>,
    {
        let labels: BTreeSet<String> = vertices.into_iter().map(Into::into).collect();
        let labels: Vec<String> = labels.into_iter().collect();
        let index: BTreeMap<String, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let mut pairs = BTreeSet::new();
        for (u, v) in edges {
            let (u, v) = (u.into(), v.into());
            let ui = *index
                .get(&u)
                .ok_or_else(|| Error::UnknownVertex(u.clone()))?;
            let vi = *index
                .get(&v)
                .ok_or_else(|| Error::UnknownVertex(v.clone()))?;
            if ui == vi {
                return Err(Error::MalformedInput(format!("loop edge at {u}")));
            }
            pairs.insert((ui.min(vi), ui.max(vi)));
        }
        let edges: Vec<(usize, usize)> = pairs.into_iter().collect();
        let mut adj = vec![BTreeSet::new(); labels.len()];
        for &(i, j) in &edges {
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Ok(SimpleGraph {
            labels,
            index,
            edges,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Edges as index pairs, (i, j) with i < j, in lexicographic order.
    pub fn edge_indices(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges as label pairs in the same order.
    pub fn edge_labels(&self) -> impl Iterator<Item = (&str, &str)> {
        self.edges
            .iter()
            .map(|&(i, j)| (self.labels[i].as_str(), self.labels[j].as_str()))
    }

    pub fn neighbors(&self, i: usize) -> &BTreeSet<usize> {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(&j)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|i| self.degree(i)).collect();
        d.sort_unstable();
        d
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Number of edges with both endpoints in `subset` (indices).
    pub fn induced_edge_count(&self, subset: &BTreeSet<usize>) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j)| subset.contains(&i) && subset.contains(&j))
            .count()
    }

    /// Relabel every vertex through `map`; unknown labels are an error.
    pub fn relabeled(&self, map: &BTreeMap<String, String>) -> Result<SimpleGraph> {
        let get = |l: &String| -> Result<String> {
            map.get(l)
                .cloned()
                .ok_or_else(|| Error::UnknownVertex(l.clone()))
        };
        let vertices: Vec<String> = self.labels.iter().map(get).collect::<Result<_>>()?;
        let edges: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&(i, j)| Ok((get(&self.labels[i])?, get(&self.labels[j])?)))
            .collect::<Result<_>>()?;
        SimpleGraph::new(vertices, edges)
    }
}

/// The complete graph on `n` vertices labelled v1..vn.
pub fn complete_graph(n: usize) -> SimpleGraph {
    let labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((labels[i].clone(), labels[j].clone()));
        }
    }
    SimpleGraph::new(labels, edges).expect("complete graph is simple")
}

/// The classical double banana: two copies of K5 minus an edge, glued on
/// the two endpoints of the missing edge. 8 vertices, 18 edges, (3,6)-tight
/// and yet flexible.
pub fn double_banana() -> SimpleGraph {
    let mut vertices: Vec<String> = vec!["p".into(), "q".into()];
    let mut edges: Vec<(String, String)> = Vec::new();
    for block in ["a", "b"] {
        let inner: Vec<String> = (1..=3).map(|i| format!("{block}{i}")).collect();
        for i in 0..3 {
            for j in (i + 1)..3 {
                edges.push((inner[i].clone(), inner[j].clone()));
            }
            edges.push((inner[i].clone(), "p".into()));
            edges.push((inner[i].clone(), "q".into()));
        }
        vertices.extend(inner);
    }
    SimpleGraph::new(vertices, edges).expect("double banana is simple")
}
