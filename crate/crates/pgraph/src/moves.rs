//! Edge contraction and planar vertex splitting.
//!
//! An edge is FF when it lies in exactly two faces, and contractible when
//! additionally its endpoints have no common neighbour besides the two face
//! apexes. Contraction merges the endpoints (keeping the first label),
//! drops the two faces, and substitutes in the hole walks; splitting is the
//! inverse move. Splits are constrained to be planar: the moved neighbours
//! must form a contiguous arc of the link of the split vertex.
//!
//! The link of a vertex is rebuilt from the faces and hole-walk corners:
//! every incident edge has two sides, and each corner (face or hole passage)
//! consumes one side at each of its two flanking edges, so the corners
//! chain the incident edges into a single cycle.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::sparsity;
use crate::surface::{Edge, Face, PGraph};

/// Everything needed to undo a contraction by a vertex split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionRecord {
    /// (surviving vertex, removed vertex)
    #[serde(rename = "edge")]
    pub contracted_edge: (String, String),
    /// Third vertices of the two faces that contained the edge.
    pub apexes: (String, String),
    /// Neighbours of the removed vertex (other than the survivor and the
    /// apexes) that were re-hung onto the survivor.
    #[serde(rename = "moved")]
    pub neighbor_transfer: Vec<String>,
}

/// Edges lying in exactly two faces, in lexicographic order.
pub fn ff_edges(g: &PGraph) -> Vec<Edge> {
    g.edges()
        .filter(|e| g.face_count_of_edge(e) == 2)
        .cloned()
        .collect()
}

/// FF and no non-facial 3-cycle through the edge: the endpoints' only
/// common neighbours are the two face apexes.
pub fn is_contractible_edge(g: &PGraph, u: &str, v: &str) -> Result<bool> {
    let e = Edge::new(u, v)?;
    if !g.has_edge(u, v) {
        return Err(Error::UnknownEdge(u.to_string(), v.to_string()));
    }
    Ok(edge_apexes(g, &e).is_some())
}

/// For a contractible edge, the two face apexes (sorted); `None` when the
/// edge is not FF or lies on a non-facial 3-cycle.
fn edge_apexes(g: &PGraph, e: &Edge) -> Option<(String, String)> {
    let (u, v) = e.endpoints();
    let faces: Vec<&Face> = g
        .faces()
        .filter(|f| f.contains(u) && f.contains(v))
        .collect();
    if faces.len() != 2 {
        return None;
    }
    let apex = |f: &Face| -> String {
        f.vertices()
            .iter()
            .find(|x| *x != u && *x != v)
            .expect("face has a third vertex")
            .clone()
    };
    let mut apexes = [apex(faces[0]), apex(faces[1])];
    apexes.sort();
    let common: BTreeSet<&str> = g
        .neighbors(u)
        .intersection(&g.neighbors(v))
        .copied()
        .collect();
    let apex_set: BTreeSet<&str> = apexes.iter().map(String::as_str).collect();
    if common == apex_set {
        Some((apexes[0].clone(), apexes[1].clone()))
    } else {
        None
    }
}

/// All contractible edges, in lexicographic order.
pub fn contractible_edges(g: &PGraph) -> Vec<Edge> {
    g.edges()
        .filter(|e| edge_apexes(g, e).is_some())
        .cloned()
        .collect()
}

/// Contract the edge (v, w), merging w into v. Requires a contractible
/// edge; the result has one vertex, three edges and two faces fewer and
/// passes validation.
pub fn contract(g: &PGraph, v: &str, w: &str) -> Result<(PGraph, ContractionRecord)> {
    g.require_valid()?;
    let e = Edge::new(v, w)?;
    if !g.has_edge(v, w) {
        return Err(Error::UnknownEdge(v.to_string(), w.to_string()));
    }
    let (a, b) = match edge_apexes(g, &e) {
        Some(p) => p,
        None => return Err(Error::NotContractible(v.to_string(), w.to_string())),
    };

    let transfer: Vec<String> = g
        .neighbors(w)
        .into_iter()
        .filter(|x| *x != v && *x != a && *x != b)
        .map(str::to_string)
        .collect();

    let vertices: Vec<String> = g
        .vertices()
        .filter(|x| *x != w)
        .map(str::to_string)
        .collect();
    let rename = |x: &str| -> String {
        if x == w {
            v.to_string()
        } else {
            x.to_string()
        }
    };
    let edges: Vec<(String, String)> = g
        .edges()
        .filter(|f| {
            let (p, q) = f.endpoints();
            // drop vw, aw, bw
            !(f.contains(w) && (f.contains(v) || p == a || q == a || p == b || q == b))
        })
        .map(|f| {
            let (p, q) = f.endpoints();
            (rename(p), rename(q))
        })
        .collect();
    let dropped_faces = [
        Face::new(v, w, a.as_str())?,
        Face::new(v, w, b.as_str())?,
    ];
    let faces: Vec<(String, String, String)> = g
        .faces()
        .filter(|f| !dropped_faces.contains(f))
        .map(|f| {
            let vs = f.vertices();
            (rename(&vs[0]), rename(&vs[1]), rename(&vs[2]))
        })
        .collect();
    let holes: Vec<Vec<String>> = g
        .holes()
        .iter()
        .map(|walk| walk.iter().map(|x| rename(x)).collect())
        .collect();

    let out = PGraph::new(vertices, edges, faces, holes)?;
    debug_assert_eq!(out.vertex_count(), g.vertex_count() - 1);
    debug_assert_eq!(out.edge_count(), g.edge_count() - 3);
    debug_assert_eq!(out.face_count(), g.face_count() - 2);
    out.require_valid()?;
    let record = ContractionRecord {
        contracted_edge: (v.to_string(), w.to_string()),
        apexes: (a, b),
        neighbor_transfer: transfer,
    };
    Ok((out, record))
}

// ---------------------------------------------------------------------------
// Links
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Corner {
    Face(Face),
    Hole { hole: usize, pos: usize },
}

/// The cyclic sequence of neighbours around a vertex. `corners[i]` lies
/// between `nodes[i]` and `nodes[(i+1) % d]`.
#[derive(Debug, Clone)]
struct Link {
    nodes: Vec<String>,
    corners: Vec<Corner>,
}

fn build_link(g: &PGraph, v: &str) -> Result<Link> {
    let neighbors: Vec<String> = g.neighbors(v).into_iter().map(str::to_string).collect();
    let degree = neighbors.len();
    if degree < 2 {
        return Err(Error::NotPlanarSplit(format!(
            "vertex {v} has degree {degree}; no link cycle"
        )));
    }

    // corners in a fixed order: faces first (sorted), then hole passages
    let mut corners: Vec<(String, String, Corner)> = Vec::new();
    for f in g.faces_at(v) {
        let (x, y) = f.others(v);
        corners.push((x.to_string(), y.to_string(), Corner::Face(f.clone())));
    }
    for (h, walk) in g.holes().iter().enumerate() {
        let len = walk.len();
        for pos in 0..len {
            if walk[pos] == v {
                let x = walk[(pos + len - 1) % len].clone();
                let y = walk[(pos + 1) % len].clone();
                corners.push((x, y, Corner::Hole { hole: h, pos }));
            }
        }
    }
    if corners.len() != degree {
        return Err(Error::NotPlanarSplit(format!(
            "vertex {v} has {degree} incident edges but {} corners",
            corners.len()
        )));
    }

    // each neighbour has exactly two corner incidences (its edge's sides)
    let mut incid: BTreeMap<&str, Vec<(usize, u8)>> = BTreeMap::new();
    for (i, (x, y, _)) in corners.iter().enumerate() {
        incid.entry(x).or_default().push((i, 0));
        incid.entry(y).or_default().push((i, 1));
    }
    for u in &neighbors {
        let entries = incid.get(u.as_str()).map_or(0, Vec::len);
        if entries != 2 {
            return Err(Error::NotPlanarSplit(format!(
                "edge {v}-{u} has {entries} link sides, expected 2"
            )));
        }
    }
    if incid.len() != degree {
        return Err(Error::NotPlanarSplit(format!(
            "link of {v} mentions a non-neighbour"
        )));
    }

    // walk the 2-regular corner multigraph into one cycle
    let start = neighbors
        .first()
        .expect("degree >= 2")
        .clone();
    let mut nodes = vec![start.clone()];
    let mut cycle_corners = Vec::new();
    let first = *incid[start.as_str()]
        .iter()
        .min_by_key(|&&(c, slot)| (c, slot))
        .expect("two incidences");
    let mut current = first;
    loop {
        let (c, slot) = current;
        cycle_corners.push(corners[c].2.clone());
        let next_node = if slot == 0 {
            corners[c].1.clone()
        } else {
            corners[c].0.clone()
        };
        if next_node == start && cycle_corners.len() == degree {
            break;
        }
        if cycle_corners.len() >= degree {
            return Err(Error::NotPlanarSplit(format!(
                "link of {v} is not a single cycle"
            )));
        }
        nodes.push(next_node.clone());
        // leave through the other incidence at next_node
        let arrived = (c, 1 - slot);
        let out = *incid[next_node.as_str()]
            .iter()
            .find(|&&inc| inc != arrived)
            .ok_or_else(|| Error::NotPlanarSplit(format!("link of {v} is tangled")))?;
        current = out;
    }
    if nodes.len() != degree {
        return Err(Error::NotPlanarSplit(format!(
            "link of {v} is not a single cycle"
        )));
    }
    Ok(Link {
        nodes,
        corners: cycle_corners,
    })
}

fn fresh_label(g: &PGraph, prefix: &str) -> String {
    let mut k = 1;
    loop {
        let candidate = format!("{prefix}{k}");
        if !g.has_vertex(&candidate) {
            return candidate;
        }
        k += 1;
    }
}

/// Planar vertex split at `v` with hinge neighbours `a`, `b`: a fresh
/// vertex takes over the edges to `moved` (which must be exactly the
/// neighbours strictly inside one link arc between `a` and `b`) and the
/// faces v-w-a, v-w-b are added. Freedom number is unchanged.
pub fn vertex_split(
    g: &PGraph,
    v: &str,
    a: &str,
    b: &str,
    moved: &BTreeSet<String>,
) -> Result<PGraph> {
    let label = fresh_label(g, "s");
    vertex_split_named(g, v, a, b, moved, &label)
}

/// [`vertex_split`] with an explicit label for the new vertex (used when
/// replaying contraction records).
pub fn vertex_split_named(
    g: &PGraph,
    v: &str,
    a: &str,
    b: &str,
    moved: &BTreeSet<String>,
    new_label: &str,
) -> Result<PGraph> {
    g.require_valid()?;
    if g.has_vertex(new_label) {
        return Err(Error::MalformedInput(format!(
            "label {new_label} already in use"
        )));
    }
    for x in [v, a, b] {
        if !g.has_vertex(x) {
            return Err(Error::UnknownVertex(x.to_string()));
        }
    }
    if a == b || !g.has_edge(v, a) || !g.has_edge(v, b) {
        return Err(Error::NotPlanarSplit(format!(
            "{a} and {b} must be distinct neighbours of {v}"
        )));
    }
    if moved.contains(a) || moved.contains(b) || moved.contains(v) {
        return Err(Error::NotPlanarSplit(
            "moved set must exclude the hinges and the split vertex".into(),
        ));
    }
    let neighbor_set: BTreeSet<&str> = g.neighbors(v);
    for m in moved {
        if !neighbor_set.contains(m.as_str()) {
            return Err(Error::NotPlanarSplit(format!(
                "{m} is not a neighbour of {v}"
            )));
        }
    }

    let link = build_link(g, v)?;
    let d = link.nodes.len();
    let ia = link.nodes.iter().position(|x| x == a).expect("a in link");
    let ib = link.nodes.iter().position(|x| x == b).expect("b in link");

    // corners on the arc from `from` to `to` (exclusive of the far hinge)
    let arc = |from: usize, to: usize| -> (BTreeSet<String>, Vec<usize>) {
        let mut inside = BTreeSet::new();
        let mut corner_ids = Vec::new();
        let mut i = from;
        loop {
            corner_ids.push(i);
            let next = (i + 1) % d;
            if next == to {
                break;
            }
            inside.insert(link.nodes[next].clone());
            i = next;
        }
        (inside, corner_ids)
    };
    let (set_ab, corners_ab) = arc(ia, ib);
    let (set_ba, corners_ba) = arc(ib, ia);
    let transferred = if *moved == set_ab {
        corners_ab
    } else if *moved == set_ba {
        corners_ba
    } else {
        return Err(Error::NotPlanarSplit(format!(
            "moved set is not a link arc between {a} and {b}"
        )));
    };

    let w = new_label.to_string();
    let vertices: Vec<String> = g
        .vertices()
        .map(str::to_string)
        .chain(std::iter::once(w.clone()))
        .collect();
    let mut edges: Vec<(String, String)> = g
        .edges()
        .filter(|e| !(e.contains(v) && moved.contains(e.other(v))))
        .map(|e| {
            let (p, q) = e.endpoints();
            (p.to_string(), q.to_string())
        })
        .collect();
    for m in moved {
        edges.push((w.clone(), m.clone()));
    }
    edges.push((v.to_string(), w.clone()));
    edges.push((w.clone(), a.to_string()));
    edges.push((w.clone(), b.to_string()));

    let mut replaced_faces: BTreeSet<Face> = BTreeSet::new();
    let mut hole_positions: Vec<(usize, usize)> = Vec::new();
    for id in &transferred {
        match &link.corners[*id] {
            Corner::Face(f) => {
                replaced_faces.insert(f.clone());
            }
            Corner::Hole { hole, pos } => hole_positions.push((*hole, *pos)),
        }
    }
    let mut faces: Vec<(String, String, String)> = Vec::new();
    for f in g.faces() {
        let vs = f.vertices();
        if replaced_faces.contains(f) {
            let sub = |x: &String| -> String {
                if x == v {
                    w.clone()
                } else {
                    x.clone()
                }
            };
            faces.push((sub(&vs[0]), sub(&vs[1]), sub(&vs[2])));
        } else {
            faces.push((vs[0].clone(), vs[1].clone(), vs[2].clone()));
        }
    }
    faces.push((v.to_string(), w.clone(), a.to_string()));
    faces.push((v.to_string(), w.clone(), b.to_string()));

    let mut holes: Vec<Vec<String>> = g.holes().to_vec();
    for (h, pos) in hole_positions {
        holes[h][pos] = w.clone();
    }

    let out = PGraph::new(vertices, edges, faces, holes)?;
    debug_assert_eq!(out.vertex_count(), g.vertex_count() + 1);
    debug_assert_eq!(out.edge_count(), g.edge_count() + 3);
    debug_assert_eq!(out.face_count(), g.face_count() + 2);
    out.require_valid()?;
    Ok(out)
}

/// Replay a contraction record as the inverse vertex split, restoring the
/// removed vertex under its original name.
pub fn replay_split(g: &PGraph, record: &ContractionRecord) -> Result<PGraph> {
    let (v, w) = &record.contracted_edge;
    let moved: BTreeSet<String> = record.neighbor_transfer.iter().cloned().collect();
    vertex_split_named(g, v, &record.apexes.0, &record.apexes.1, &moved, w)
}

/// Abstract graph of the contraction of (v, w), built without touching
/// faces or holes; used to test admissibility before committing to the
/// full move.
fn contracted_skeleton(g: &PGraph, v: &str, w: &str, a: &str, b: &str) -> SimpleGraph {
    let vertices = g.vertices().filter(|x| *x != w).map(str::to_string);
    let edges = g
        .edges()
        .filter(|f| {
            let (p, q) = f.endpoints();
            !(f.contains(w) && (f.contains(v) || p == a || q == a || p == b || q == b))
        })
        .map(|f| {
            let (p, q) = f.endpoints();
            let rename = |x: &str| if x == w { v.to_string() } else { x.to_string() };
            (rename(p), rename(q))
        });
    SimpleGraph::new(vertices, edges).expect("contraction of a contractible edge is simple")
}

/// Whether contracting (v, w) with apexes (a, b) preserves tightness.
/// The Maxwell count is preserved automatically, and any new sparsity
/// violation must contain the merged vertex (a subgraph avoiding it
/// embeds unchanged in the original), so the scan is restricted to forced
/// triples through the survivor.
fn contraction_stays_tight(g: &PGraph, v: &str, w: &str, a: &str, b: &str) -> bool {
    let skel = contracted_skeleton(g, v, w, a, b);
    let pivot = skel.index_of(v).expect("survivor present");
    sparsity::freedom_number(&skel) == 6 && sparsity::is_sparse_through(&skel, pivot).is_sparse()
}

/// Contractible edges whose contraction stays (3,6)-tight, in lexicographic
/// order. Assumes `g` is tight; the excluded edges are exactly those on
/// critical 4-, 5- or 6-cycles, and re-certification is the admissibility
/// test.
pub fn admissible_contractions(g: &PGraph) -> Vec<Edge> {
    g.edges()
        .filter(|e| {
            let (v, w) = e.endpoints();
            match edge_apexes(g, e) {
                Some((a, b)) => contraction_stays_tight(g, v, w, &a, &b),
                None => false,
            }
        })
        .cloned()
        .collect()
}

/// First admissible contraction in lexicographic edge order, already
/// performed. `None` when the graph is irreducible.
pub fn first_admissible_contraction(g: &PGraph) -> Option<(PGraph, ContractionRecord)> {
    for e in g.edges() {
        let (v, w) = e.endpoints();
        if let Some((a, b)) = edge_apexes(g, e) {
            if contraction_stays_tight(g, v, w, &a, &b) {
                let (contracted, record) = contract(g, v, w).expect("admissible edge contracts");
                return Some((contracted, record));
            }
        }
    }
    None
}

/// A candidate split: (split vertex, hinge a, hinge b, moved neighbours).
pub type SplitChoice = (String, String, String, BTreeSet<String>);

/// Every legal planar split of `g`.
pub fn legal_splits(g: &PGraph) -> Result<Vec<SplitChoice>> {
    let mut out = Vec::new();
    for v in g.vertices() {
        let link = build_link(g, v)?;
        let d = link.nodes.len();
        for i in 0..d {
            for j in 0..d {
                if i == j {
                    continue;
                }
                let mut moved = BTreeSet::new();
                let mut p = (i + 1) % d;
                while p != j {
                    moved.insert(link.nodes[p].clone());
                    p = (p + 1) % d;
                }
                out.push((
                    v.to_string(),
                    link.nodes[i].clone(),
                    link.nodes[j].clone(),
                    moved,
                ));
            }
        }
    }
    Ok(out)
}

/// Grow by `steps` uniformly chosen legal planar splits.
pub fn grow(g: &PGraph, steps: usize, rng: &mut impl Rng) -> Result<PGraph> {
    let mut current = g.clone();
    for _ in 0..steps {
        let candidates = legal_splits(&current)?;
        if candidates.is_empty() {
            return Err(Error::NotPlanarSplit("no legal split available".into()));
        }
        let (v, a, b, moved) = &candidates[rng.gen_range(0..candidates.len())];
        current = vertex_split(&current, v, a, b, moved)?;
    }
    Ok(current)
}

/// Deterministic growth from a seed.
pub fn grow_seeded(g: &PGraph, steps: usize, seed: u64) -> Result<PGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    grow(g, steps, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::catalog;
    use crate::surface::from_face_graph;
    use crate::{fixtures, iso};

    #[test]
    fn ff_edges_of_catalog_members() {
        let cat = catalog();
        assert!(ff_edges(cat.get("G^3_4").unwrap()).is_empty());
        let cone = cat.get("G^0_7").unwrap();
        let spokes = ff_edges(cone);
        assert_eq!(spokes.len(), 6);
        for e in &spokes {
            assert!(e.contains("z"), "spoke expected, got {e}");
        }
        let full = from_face_graph(&fixtures::hexagon_disc_face_graph()).unwrap();
        assert_eq!(ff_edges(&full).len(), full.edge_count());
    }

    #[test]
    fn cone_spokes_not_contractible() {
        let cat = catalog();
        let cone = cat.get("G^0_7").unwrap();
        for e in ff_edges(cone) {
            let (u, v) = e.endpoints();
            assert!(!is_contractible_edge(cone, u, v).unwrap());
        }
        assert!(contractible_edges(cone).is_empty());
    }

    #[test]
    fn hole_boundary_edge_not_contractible() {
        let strip = from_face_graph(&fixtures::annular_moebius_face_graph()).unwrap();
        // h1-h2 lies on the hole, hence in one face only
        assert!(!is_contractible_edge(&strip, "h1", "h2").unwrap());
        assert!(matches!(
            is_contractible_edge(&strip, "h1", "h4"),
            Err(Error::UnknownEdge(_, _))
        ));
    }

    #[test]
    fn split_then_contract_restores_triangle() {
        let k3 = catalog().get("G^2_3").unwrap().clone();
        let splits = legal_splits(&k3).unwrap();
        assert_eq!(splits.len(), 6); // three vertices, degree 2 each
        for (v, a, b, moved) in splits {
            let grown = vertex_split(&k3, &v, &a, &b, &moved).unwrap();
            assert_eq!(grown.vertex_count(), 4);
            assert_eq!(grown.edge_count(), 6);
            assert_eq!(grown.face_count(), 2);
            assert!(grown.is_valid());
            let w = grown
                .vertices()
                .find(|x| !k3.has_vertex(x))
                .unwrap()
                .to_string();
            let (back, record) = contract(&grown, &v, &w).unwrap();
            assert!(iso::is_isomorphic(&back.skeleton(), &k3.skeleton()).is_some());
            // replay the record on the contracted graph
            let again = replay_split(&back, &record).unwrap();
            assert!(iso::is_isomorphic(&again.skeleton(), &grown.skeleton()).is_some());
        }
    }

    #[test]
    fn contract_deltas_and_errors() {
        let cat = catalog();
        let cone = cat.get("G^0_7").unwrap();
        // perimeter edge v1-v2 lies in one face: not contractible
        assert!(matches!(
            contract(cone, "v1", "v2"),
            Err(Error::NotContractible(_, _))
        ));
        let grown = grow_seeded(cone, 1, 3).unwrap();
        let (v, w) = {
            let e = &contractible_edges(&grown)[0];
            let (u, v) = e.endpoints();
            (u.to_string(), v.to_string())
        };
        let (out, _) = contract(&grown, &v, &w).unwrap();
        assert_eq!(out.vertex_count(), grown.vertex_count() - 1);
        assert_eq!(out.edge_count(), grown.edge_count() - 3);
        assert_eq!(out.face_count(), grown.face_count() - 2);
    }

    #[test]
    fn split_interior_vertex_of_full_triangulation() {
        let strip = from_face_graph(&fixtures::annular_moebius_face_graph()).unwrap();
        let full = crate::surface::moebius_completion(&strip).unwrap();
        let hub = full
            .vertices()
            .find(|v| full.degree(v) == 6)
            .expect("a degree-6 vertex")
            .to_string();
        let splits = legal_splits(&full).unwrap();
        let (v, a, b, moved) = splits
            .iter()
            .find(|(v, _, _, moved)| *v == hub && moved.len() == 2)
            .cloned()
            .expect("a split at the hub");
        let bigger = vertex_split(&full, &v, &a, &b, &moved).unwrap();
        assert_eq!(bigger.vertex_count(), full.vertex_count() + 1);
        assert_eq!(bigger.freedom_number(), 3);
        assert_eq!(bigger.hole_count(), 0);
        assert!(bigger.is_valid());
    }

    #[test]
    fn non_contiguous_moved_rejected() {
        let cat = catalog();
        let cone = cat.get("G^0_7").unwrap();
        // at z the link is the hexagon v1..v6; {v2, v6} is not an arc
        // strictly between v1 and v4
        let moved: BTreeSet<String> = ["v2", "v6"].iter().map(|s| s.to_string()).collect();
        assert!(matches!(
            vertex_split(cone, "z", "v1", "v4", &moved),
            Err(Error::NotPlanarSplit(_))
        ));
    }

    #[test]
    fn admissible_contractions_empty_on_catalog() {
        let cat = catalog();
        for (name, g) in cat.members() {
            assert!(
                admissible_contractions(g).is_empty(),
                "{name} should be uncontractible"
            );
        }
    }

    #[test]
    fn split_of_base_graph_is_reversible() {
        let cat = catalog();
        let cone = cat.get("G^0_7").unwrap();
        let grown = grow_seeded(cone, 1, 9).unwrap();
        assert!(!admissible_contractions(&grown).is_empty());
    }

    #[test]
    fn tightness_preserved_by_splits() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for name in ["G^2_3", "G^1_5", "G^0_7"] {
            let mut g = catalog().get(name).unwrap().clone();
            for _ in 0..6 {
                let candidates = legal_splits(&g).unwrap();
                let (v, a, b, moved) = &candidates[rng.gen_range(0..candidates.len())];
                g = vertex_split(&g, v, a, b, moved).unwrap();
                assert!(g.is_valid());
                assert!(sparsity::is_tight(&g.skeleton()));
            }
        }
    }

    #[test]
    fn contractible_but_inadmissible_on_critical_cycle() {
        // the middle hexagon of the double ring bounds a tight one-hole
        // subgraph; its edges are contractible yet contraction breaks
        // sparsity, so they are excluded and the witness shows the region
        let g = from_face_graph(&fixtures::double_ring_face_graph()).unwrap();
        assert!(g.is_valid());
        assert!(sparsity::is_tight(&g.skeleton()));
        assert!(is_contractible_edge(&g, "h1", "h2").unwrap());
        let admissible = admissible_contractions(&g);
        let h_edge = Edge::new("h1", "h2").unwrap();
        assert!(!admissible.contains(&h_edge));
        let (contracted, _) = contract(&g, "h1", "h2").unwrap();
        let check = sparsity::is_sparse(&contracted.skeleton());
        let witness = check.witness().expect("contraction must break sparsity");
        assert!(witness.excess > 0);
        // the violating region is the contracted image of the outer strip
        assert!(witness.vertex_set.contains("u1"));
        assert!(witness.vertex_set.contains("h1"));
    }
}
