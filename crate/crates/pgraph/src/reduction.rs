//! Reduction of tight embedded graphs to the eight uncontractible base
//! graphs, the base catalog itself, and trace replay.
//!
//! Reduction greedily contracts the lexicographically first admissible
//! edge until none remains. The terminal graph of such a sequence is
//! uncontractible and must be one of the eight catalog members; any other
//! terminal is reported as an error rather than accepted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use crate::iso::{canonical_form, is_isomorphic};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::moves::{self, ContractionRecord};
use crate::sparsity;
use crate::surface::PGraph;

/// The eight uncontractible (3,6)-tight base graphs.
pub struct Catalog {
    members: Vec<(String, PGraph)>,
}

impl Catalog {
    pub fn names(&self) -> Vec<&str> {
        self.members.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&PGraph> {
        self.members
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g)
    }

    pub fn members(&self) -> impl Iterator<Item = (&str, &PGraph)> {
        self.members.iter().map(|(n, g)| (n.as_str(), g))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn member(
    name: &str,
    n: usize,
    edges: &[(&str, &str)],
    faces: &[(&str, &str, &str)],
    holes: &[&[&str]],
) -> (String, PGraph) {
    let extra_z = name == "G^0_7";
    let mut vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    if extra_z {
        vertices.push("z".into());
    }
    let g = PGraph::new(
        vertices,
        edges
            .iter()
            .map(|&(u, v)| (u.to_string(), v.to_string())),
        faces
            .iter()
            .map(|&(a, b, c)| (a.to_string(), b.to_string(), c.to_string())),
        holes
            .iter()
            .map(|w| w.iter().map(|s| s.to_string()).collect())
            .collect(),
    )
    .expect("catalog member is well formed");
    (name.to_string(), g)
}

/// The eight base graphs with their facial and hole structure.
///
/// As abstract graphs: G^2_3 is K3; G^3_4 is K4; G^1_5 is K5 minus an
/// edge; G^0_7 is the cone over K3,3; the four 6-vertex members are K6
/// minus three edges, where the removed edges form a triangle (G^2_6a),
/// a perfect matching (G^2_6b), two edges at a shared vertex plus a
/// disjoint edge (G^1_6a), or a path (G^1_6b). The superscript is the
/// minimum hole incidence degree.
pub fn catalog() -> Catalog {
    let members = vec![
        member(
            "G^2_3",
            3,
            &[("v1", "v2"), ("v2", "v3"), ("v1", "v3")],
            &[],
            &[&["v1", "v2", "v3", "v1", "v2", "v3"]],
        ),
        member(
            "G^3_4",
            4,
            &[
                ("v1", "v2"),
                ("v1", "v3"),
                ("v1", "v4"),
                ("v2", "v3"),
                ("v2", "v4"),
                ("v3", "v4"),
            ],
            &[],
            &[
                &["v3", "v1", "v2", "v4"],
                &["v4", "v1", "v2", "v3"],
                &["v3", "v2", "v4", "v1"],
            ],
        ),
        member(
            "G^1_5",
            5,
            &[
                ("v1", "v2"),
                ("v1", "v3"),
                ("v1", "v4"),
                ("v1", "v5"),
                ("v2", "v3"),
                ("v2", "v4"),
                ("v3", "v4"),
                ("v3", "v5"),
                ("v4", "v5"),
            ],
            &[("v1", "v3", "v4"), ("v1", "v2", "v4"), ("v1", "v3", "v5")],
            &[&["v1", "v2", "v3", "v4", "v5"], &["v2", "v3", "v5", "v4"]],
        ),
        member(
            "G^1_6a",
            6,
            &[
                ("v1", "v2"),
                ("v1", "v4"),
                ("v1", "v5"),
                ("v1", "v6"),
                ("v2", "v3"),
                ("v2", "v5"),
                ("v2", "v6"),
                ("v3", "v4"),
                ("v3", "v6"),
                ("v4", "v5"),
                ("v4", "v6"),
                ("v5", "v6"),
            ],
            &[
                ("v1", "v2", "v5"),
                ("v1", "v5", "v6"),
                ("v1", "v6", "v4"),
                ("v3", "v2", "v6"),
            ],
            &[
                &["v4", "v1", "v2", "v3"],
                &["v2", "v5", "v4", "v6"],
                &["v3", "v4", "v5", "v6"],
            ],
        ),
        member(
            "G^1_6b",
            6,
            &[
                ("v1", "v2"),
                ("v1", "v3"),
                ("v1", "v4"),
                ("v1", "v5"),
                ("v1", "v6"),
                ("v2", "v3"),
                ("v2", "v6"),
                ("v3", "v4"),
                ("v3", "v5"),
                ("v3", "v6"),
                ("v4", "v5"),
                ("v5", "v6"),
            ],
            &[
                ("v1", "v2", "v6"),
                ("v1", "v4", "v5"),
                ("v1", "v3", "v6"),
                ("v1", "v3", "v5"),
            ],
            &[
                &["v3", "v4", "v1", "v2"],
                &["v6", "v3", "v4", "v5"],
                &["v5", "v3", "v2", "v6"],
            ],
        ),
        member(
            "G^2_6a",
            6,
            &[
                ("v1", "v2"),
                ("v1", "v3"),
                ("v1", "v4"),
                ("v1", "v5"),
                ("v1", "v6"),
                ("v2", "v3"),
                ("v2", "v4"),
                ("v2", "v5"),
                ("v2", "v6"),
                ("v3", "v4"),
                ("v4", "v5"),
                ("v4", "v6"),
            ],
            &[
                ("v1", "v2", "v5"),
                ("v1", "v2", "v4"),
                ("v2", "v3", "v4"),
                ("v1", "v4", "v6"),
            ],
            &[
                &["v5", "v2", "v6", "v4"],
                &["v6", "v1", "v3", "v2"],
                &["v5", "v1", "v3", "v4"],
            ],
        ),
        member(
            "G^2_6b",
            6,
            &[
                ("v1", "v2"),
                ("v1", "v3"),
                ("v1", "v5"),
                ("v1", "v6"),
                ("v2", "v3"),
                ("v2", "v4"),
                ("v2", "v6"),
                ("v3", "v4"),
                ("v3", "v5"),
                ("v4", "v5"),
                ("v4", "v6"),
                ("v5", "v6"),
            ],
            &[
                ("v1", "v2", "v3"),
                ("v1", "v5", "v6"),
                ("v2", "v4", "v6"),
                ("v3", "v4", "v5"),
            ],
            &[
                &["v1", "v5", "v4", "v2"],
                &["v1", "v6", "v4", "v3"],
                &["v2", "v6", "v5", "v3"],
            ],
        ),
        member(
            "G^0_7",
            6,
            &[
                ("z", "v1"),
                ("z", "v2"),
                ("z", "v3"),
                ("z", "v4"),
                ("z", "v5"),
                ("z", "v6"),
                ("v1", "v2"),
                ("v2", "v3"),
                ("v3", "v4"),
                ("v4", "v5"),
                ("v5", "v6"),
                ("v6", "v1"),
                ("v1", "v4"),
                ("v2", "v5"),
                ("v3", "v6"),
            ],
            &[
                ("z", "v1", "v2"),
                ("z", "v2", "v3"),
                ("z", "v3", "v4"),
                ("z", "v4", "v5"),
                ("z", "v5", "v6"),
                ("z", "v6", "v1"),
            ],
            &[
                &["v1", "v2", "v5", "v4"],
                &["v2", "v3", "v6", "v5"],
                &["v3", "v4", "v1", "v6"],
            ],
        ),
    ];
    Catalog { members }
}

/// Catalog member isomorphic to `g` as an abstract graph, if any.
pub fn identify_base(g: &PGraph) -> Option<String> {
    let skel = g.skeleton();
    for (name, base) in catalog().members() {
        let base_skel = base.skeleton();
        if skel.vertex_count() == base_skel.vertex_count()
            && is_isomorphic(&skel, &base_skel).is_some()
        {
            return Some(name.to_string());
        }
    }
    None
}

/// A full reduction sequence: the contraction records, the terminal base
/// graph and an isomorphism from the reduced graph onto it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub steps: Vec<ContractionRecord>,
    pub terminal: String,
    pub iso: BTreeMap<String, String>,
}

/// Enumerate adjacency-preserving bijections and return the first that
/// also carries faces to faces and holes to holes (up to walk rotation
/// and reversal), i.e. an isomorphism of embedded graphs.
fn embedded_isomorphism(g: &PGraph, h: &PGraph) -> Option<BTreeMap<String, String>> {
    let gs = g.skeleton();
    let hs = h.skeleton();
    if gs.vertex_count() != hs.vertex_count()
        || gs.edge_count() != hs.edge_count()
        || gs.degree_sequence() != hs.degree_sequence()
    {
        return None;
    }
    let n = gs.vertex_count();
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    let mut found: Option<BTreeMap<String, String>> = None;
    search_embedded(g, h, &gs, &hs, 0, &mut assignment, &mut used, &mut found);
    found
}

#[allow(clippy::too_many_arguments)]
fn search_embedded(
    g: &PGraph,
    h: &PGraph,
    gs: &SimpleGraph,
    hs: &SimpleGraph,
    depth: usize,
    assignment: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    found: &mut Option<BTreeMap<String, String>>,
) {
    if found.is_some() {
        return;
    }
    let n = gs.vertex_count();
    if depth == n {
        let map: BTreeMap<String, String> = assignment
            .iter()
            .enumerate()
            .map(|(i, j)| (gs.label(i).to_string(), hs.label(j.unwrap()).to_string()))
            .collect();
        if let Ok(image) = g.relabeled(&map) {
            if image.same_labeled(h) {
                *found = Some(map);
            }
        }
        return;
    }
    for cand in 0..n {
        if used[cand] || gs.degree(depth) != hs.degree(cand) {
            continue;
        }
        let ok = (0..depth).all(|prev| {
            gs.has_edge(depth, prev) == hs.has_edge(cand, assignment[prev].unwrap())
        });
        if !ok {
            continue;
        }
        assignment[depth] = Some(cand);
        used[cand] = true;
        search_embedded(g, h, gs, hs, depth + 1, assignment, used, found);
        assignment[depth] = None;
        used[cand] = false;
        if found.is_some() {
            return;
        }
    }
}

/// Greedily contract admissible edges until none remains, then identify
/// the terminal base graph. The input must be valid and (3,6)-tight.
pub fn reduce(g: &PGraph) -> Result<ReductionTrace> {
    g.require_valid()?;
    if !sparsity::is_tight(&g.skeleton()) {
        return Err(Error::NotTight);
    }
    let mut current = g.clone();
    let mut steps = Vec::new();
    while let Some((next, record)) = moves::first_admissible_contraction(&current) {
        steps.push(record);
        current = next;
    }
    let name = identify_base(&current).ok_or(Error::TerminalNotInCatalog)?;
    let base = catalog().get(&name).expect("identified name exists").clone();
    let iso = embedded_isomorphism(&current, &base)
        .or_else(|| is_isomorphic(&current.skeleton(), &base.skeleton()))
        .ok_or(Error::TerminalNotInCatalog)?;
    Ok(ReductionTrace {
        steps,
        terminal: name,
        iso,
    })
}

/// Rebuild the graph a trace was computed from: relabel the catalog
/// terminal through the inverse isomorphism, then replay the contraction
/// records in reverse as vertex splits.
pub fn replay_trace(trace: &ReductionTrace) -> Result<PGraph> {
    let base = catalog()
        .get(&trace.terminal)
        .ok_or_else(|| Error::MalformedInput(format!("unknown terminal {}", trace.terminal)))?
        .clone();
    let inverse: BTreeMap<String, String> = trace
        .iso
        .iter()
        .map(|(k, v)| (v.clone(), k.clone()))
        .collect();
    if inverse.len() != trace.iso.len() {
        return Err(Error::MalformedInput("iso map is not a bijection".into()));
    }
    let mut current = base.relabeled(&inverse)?;
    for record in trace.steps.iter().rev() {
        current = moves::replay_split(&current, record)?;
    }
    Ok(current)
}
