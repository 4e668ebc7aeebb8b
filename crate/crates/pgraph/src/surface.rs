//! Embedded surface graphs for the projective plane.
//!
//! A [`PGraph`] is a simple graph together with its facial 3-cycles and the
//! closed walks bounding its non-triangular regions (holes). Such graphs are
//! built by identifying paired boundary edges of a triangulated disc
//! ([`FaceGraph`], see [`from_face_graph`]), taken from the base-graph
//! catalog, or produced by contraction/splitting moves. No general
//! projective-planarity test is performed: embeddability is by construction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// An unordered edge; endpoints are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(String, String);

impl Edge {
    pub fn new(u: impl Into<String>, v: impl Into<String>) -> Result<Self> {
        let (u, v) = (u.into(), v.into());
        if u == v {
            return Err(Error::MalformedInput(format!("loop edge at {u}")));
        }
        if u <= v {
            Ok(Edge(u, v))
        } else {
            Ok(Edge(v, u))
        }
    }

    pub fn endpoints(&self) -> (&str, &str) {
        (&self.0, &self.1)
    }

    pub fn contains(&self, v: &str) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn other(&self, v: &str) -> &str {
        if self.0 == v {
            &self.1
        } else {
            &self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// An unordered facial triangle; vertices are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face([String; 3]);

impl Face {
    pub fn new(
        a: impl Into<String>,
        b: impl Into<String>,
        c: impl Into<String>,
    ) -> Result<Self> {
        let mut v = [a.into(), b.into(), c.into()];
        v.sort();
        if v[0] == v[1] || v[1] == v[2] {
            return Err(Error::MalformedInput(format!(
                "degenerate face {} {} {}",
                v[0], v[1], v[2]
            )));
        }
        Ok(Face(v))
    }

    pub fn vertices(&self) -> &[String; 3] {
        &self.0
    }

    pub fn contains(&self, v: &str) -> bool {
        self.0.iter().any(|x| x == v)
    }

    pub fn edges(&self) -> [Edge; 3] {
        [
            Edge(self.0[0].clone(), self.0[1].clone()),
            Edge(self.0[0].clone(), self.0[2].clone()),
            Edge(self.0[1].clone(), self.0[2].clone()),
        ]
    }

    /// The two vertices besides `v`.
    pub fn others(&self, v: &str) -> (&str, &str) {
        match self.0.iter().position(|x| x == v) {
            Some(0) => (&self.0[1], &self.0[2]),
            Some(1) => (&self.0[0], &self.0[2]),
            Some(2) => (&self.0[0], &self.0[1]),
            _ => panic!("vertex {v} not in face"),
        }
    }
}

/// A violated structural invariant, reported by [`PGraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A face or hole walk references a vertex not in the vertex set.
    UnknownVertex(String),
    /// A face whose three sides are not all edges of the graph.
    FaceMissingEdge(String),
    /// Consecutive hole-walk vertices that are not an edge.
    HoleMissingEdge(String),
    /// A hole walk with fewer than three vertices.
    HoleTooShort(usize),
    /// An edge contained in more than two faces.
    EdgeInTooManyFaces(String),
    /// 3|F| + sum of hole lengths != 2|E|.
    SideCount { face_sides: usize, hole_sides: usize, edge_sides: usize },
    /// |V| - |E| + |F| + k != 1.
    Euler(i64),
    Disconnected,
    Empty,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            Violation::FaceMissingEdge(s) => write!(f, "face side {s} is not an edge"),
            Violation::HoleMissingEdge(s) => write!(f, "hole step {s} is not an edge"),
            Violation::HoleTooShort(n) => write!(f, "hole walk of length {n}"),
            Violation::EdgeInTooManyFaces(e) => write!(f, "edge {e} lies in more than two faces"),
            Violation::SideCount { face_sides, hole_sides, edge_sides } => write!(
                f,
                "side count {face_sides}+{hole_sides} != {edge_sides}"
            ),
            Violation::Euler(x) => write!(f, "euler count {x} != 1"),
            Violation::Disconnected => write!(f, "graph is not connected"),
            Violation::Empty => write!(f, "graph has no vertices"),
        }
    }
}

/// Outcome of [`PGraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Hole count and hole-length multiset of a graph, as returned by
/// [`PGraph::classify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HoleSignature {
    pub k: usize,
    /// Hole walk lengths, sorted descending.
    pub lengths: Vec<usize>,
    /// Whether sum(lengths) - 3k = 3, which for valid graphs is equivalent
    /// to the Maxwell count 3|V| - |E| = 6.
    pub maxwell_consistent: bool,
}

/// An embedded projective-plane graph: simple graph, facial 3-cycles and
/// hole boundary walks.
///
/// Hole walks are closed vertex sequences (the edge back from the last to
/// the first vertex is implied). Walks may revisit vertices and edges;
/// lengths count multiplicity. All values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PGraph {
    vertices: BTreeSet<String>,
    edges: BTreeSet<Edge>,
    faces: BTreeSet<Face>,
    holes: Vec<Vec<String>>,
}

impl PGraph {
    /// Assemble a graph from parts, checking only label-level wellformedness
    /// (no loops, faces are triangles). Run [`PGraph::validate`] for the
    /// structural invariants.
    pub fn new(
        vertices: impl IntoIterator<Item = String>,
        edges: impl IntoIterator<Item = (String, String)>,
        faces: impl IntoIterator<Item = (String, String, String)>,
        holes: Vec<Vec<String>>,
    ) -> Result<Self> {
        let vertices: BTreeSet<String> = vertices.into_iter().collect();
        let edges: BTreeSet<Edge> = edges
            .into_iter()
            .map(|(u, v)| Edge::new(u, v))
            .collect::<Result<_>>()?;
        let faces: BTreeSet<Face> = faces
            .into_iter()
            .map(|(a, b, c)| Face::new(a, b, c))
            .collect::<Result<_>>()?;
        Ok(PGraph {
            vertices,
            edges,
            faces,
            holes,
        })
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(String::as_str)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        Edge::new(u, v).map(|e| self.edges.contains(&e)).unwrap_or(false)
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn holes(&self) -> &[Vec<String>] {
        &self.holes
    }

    pub fn hole_count(&self) -> usize {
        self.holes.len()
    }

    pub fn neighbors(&self, v: &str) -> BTreeSet<&str> {
        self.edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| e.other(v))
            .collect()
    }

    pub fn degree(&self, v: &str) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Faces incident to `v`.
    pub fn faces_at(&self, v: &str) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.contains(v)).collect()
    }

    /// Number of faces containing each edge.
    pub fn face_count_of_edge(&self, e: &Edge) -> usize {
        let (u, v) = e.endpoints();
        self.faces
            .iter()
            .filter(|f| f.contains(u) && f.contains(v))
            .count()
    }

    /// The underlying abstract simple graph.
    pub fn skeleton(&self) -> SimpleGraph {
        SimpleGraph::new(
            self.vertices.iter().cloned(),
            self.edges
                .iter()
                .map(|e| (e.0.clone(), e.1.clone())),
        )
        .expect("a PGraph edge set is simple by construction")
    }

    /// 3|V| - |E|.
    pub fn freedom_number(&self) -> i64 {
        3 * self.vertex_count() as i64 - self.edge_count() as i64
    }

    /// Check every structural invariant and report the violations:
    /// referenced vertices and edges exist, each edge lies in at most two
    /// faces, the side count 3|F| + sum of hole lengths = 2|E|, the Euler
    /// relation |V| - |E| + |F| + k = 1, and connectivity.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.vertices.is_empty() {
            violations.push(Violation::Empty);
            return ValidationReport { violations };
        }

        for face in &self.faces {
            for v in face.vertices() {
                if !self.vertices.contains(v) {
                    violations.push(Violation::UnknownVertex(v.clone()));
                }
            }
            for e in face.edges() {
                if !self.edges.contains(&e) {
                    violations.push(Violation::FaceMissingEdge(e.to_string()));
                }
            }
        }
        for (u, v) in self.edges.iter().map(|e| e.endpoints()) {
            for x in [u, v] {
                if !self.vertices.contains(x) {
                    violations.push(Violation::UnknownVertex(x.to_string()));
                }
            }
        }
        for walk in &self.holes {
            if walk.len() < 3 {
                violations.push(Violation::HoleTooShort(walk.len()));
                continue;
            }
            for i in 0..walk.len() {
                let u = &walk[i];
                let v = &walk[(i + 1) % walk.len()];
                if !self.vertices.contains(u) {
                    violations.push(Violation::UnknownVertex(u.clone()));
                }
                match Edge::new(u.clone(), v.clone()) {
                    Ok(e) if self.edges.contains(&e) => {}
                    Ok(e) => violations.push(Violation::HoleMissingEdge(e.to_string())),
                    Err(_) => violations.push(Violation::HoleMissingEdge(format!("{u}-{v}"))),
                }
            }
        }
        if !violations.is_empty() {
            // Counting invariants are meaningless on ill-formed data.
            return ValidationReport { violations };
        }

        let mut face_incidences: BTreeMap<Edge, usize> = BTreeMap::new();
        for face in &self.faces {
            for e in face.edges() {
                *face_incidences.entry(e).or_insert(0) += 1;
            }
        }
        for (e, count) in &face_incidences {
            if *count > 2 {
                violations.push(Violation::EdgeInTooManyFaces(e.to_string()));
            }
        }

        let face_sides = 3 * self.face_count();
        let hole_sides: usize = self.holes.iter().map(Vec::len).sum();
        let edge_sides = 2 * self.edge_count();
        if face_sides + hole_sides != edge_sides {
            violations.push(Violation::SideCount {
                face_sides,
                hole_sides,
                edge_sides,
            });
        }

        let euler = self.vertex_count() as i64 - self.edge_count() as i64
            + self.face_count() as i64
            + self.hole_count() as i64;
        if euler != 1 {
            violations.push(Violation::Euler(euler));
        }

        if !self.skeleton().is_connected() {
            violations.push(Violation::Disconnected);
        }

        ValidationReport { violations }
    }

    /// Shorthand: true when [`validate`](Self::validate) reports nothing.
    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// Error unless the graph validates.
    pub fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidPGraph(report.violations))
        }
    }

    /// Hole count and hole-length multiset, with the Maxwell consistency
    /// flag sum(lengths) - 3k = 3.
    pub fn classify(&self) -> HoleSignature {
        let k = self.hole_count();
        let mut lengths: Vec<usize> = self.holes.iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        let total: usize = lengths.iter().sum();
        let maxwell_consistent = total as i64 - 3 * k as i64 == 3;
        HoleSignature {
            k,
            lengths,
            maxwell_consistent,
        }
    }

    /// deg(v) minus the number of faces containing v.
    pub fn hole_incidence_degree(&self, v: &str) -> Result<usize> {
        if !self.vertices.contains(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        Ok(self.degree(v) - self.faces_at(v).len())
    }

    /// Minimum hole incidence degree over all vertices.
    pub fn min_hole_incidence_degree(&self) -> usize {
        self.vertices
            .iter()
            .map(|v| self.hole_incidence_degree(v).expect("vertex exists"))
            .min()
            .unwrap_or(0)
    }

    /// Relabel vertices through `map` (a bijection on labels).
    pub fn relabeled(&self, map: &BTreeMap<String, String>) -> Result<PGraph> {
        let get = |l: &String| -> Result<String> {
            map.get(l)
                .cloned()
                .ok_or_else(|| Error::UnknownVertex(l.clone()))
        };
        let vertices: Vec<String> = self.vertices.iter().map(get).collect::<Result<_>>()?;
        if vertices.iter().collect::<BTreeSet<_>>().len() != vertices.len() {
            return Err(Error::MalformedInput("relabeling is not injective".into()));
        }
        let edges: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|e| Ok((get(&e.0)?, get(&e.1)?)))
            .collect::<Result<_>>()?;
        let faces: Vec<(String, String, String)> = self
            .faces
            .iter()
            .map(|f| {
                let v = f.vertices();
                Ok((get(&v[0])?, get(&v[1])?, get(&v[2])?))
            })
            .collect::<Result<_>>()?;
        let holes: Vec<Vec<String>> = self
            .holes
            .iter()
            .map(|w| w.iter().map(get).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        PGraph::new(vertices, edges, faces, holes)
    }

    /// Structural equality that treats each hole walk up to rotation and
    /// reversal (walk orientation and starting point are not canonical).
    pub fn same_labeled(&self, other: &PGraph) -> bool {
        if self.vertices != other.vertices
            || self.edges != other.edges
            || self.faces != other.faces
            || self.holes.len() != other.holes.len()
        {
            return false;
        }
        let mut mine: Vec<Vec<String>> = self.holes.iter().map(|w| canonical_walk(w)).collect();
        let mut theirs: Vec<Vec<String>> = other.holes.iter().map(|w| canonical_walk(w)).collect();
        mine.sort();
        theirs.sort();
        mine == theirs
    }
}

/// Least rotation of the walk or its reversal.
fn canonical_walk(walk: &[String]) -> Vec<String> {
    let mut best: Option<Vec<String>> = None;
    let n = walk.len();
    let mut consider = |w: &[String]| {
        for s in 0..n {
            let rotated: Vec<String> = (0..n).map(|i| w[(s + i) % n].clone()).collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    };
    consider(walk);
    let reversed: Vec<String> = walk.iter().rev().cloned().collect();
    consider(&reversed);
    best.unwrap_or_default()
}

// ---------------------------------------------------------------------------
// JSON interchange
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct PGraphJson {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
    faces: Vec<[String; 3]>,
    holes: Vec<Vec<String>>,
}

impl Serialize for PGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let json = PGraphJson {
            vertices: self.vertices.iter().cloned().collect(),
            edges: self
                .edges
                .iter()
                .map(|e| [e.0.clone(), e.1.clone()])
                .collect(),
            faces: self.faces.iter().map(|f| f.0.clone()).collect(),
            holes: self.holes.clone(),
        };
        json.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = PGraphJson::deserialize(deserializer)?;
        PGraph::new(
            json.vertices,
            json.edges.into_iter().map(|[u, v]| (u, v)),
            json.faces.into_iter().map(|[a, b, c]| (a, b, c)),
            json.holes,
        )
        .map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// A triangulated disc with a pairing of directed boundary edges and an
/// optional set of removed subdiscs (holes). The input representation for
/// [`from_face_graph`].
///
/// `boundary` is the outer boundary cycle, counterclockwise. Each pairing
/// entry identifies two directed boundary edges first-to-first and
/// second-to-second; identifying edges that are both directed along the
/// boundary orientation glues with a flip, which is how the projective
/// plane and Moebius strips arise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceGraph {
    pub triangles: Vec<[String; 3]>,
    pub boundary: Vec<String>,
    pub pairing: Vec<[[String; 2]; 2]>,
    #[serde(default)]
    pub removed_discs: Vec<Vec<String>>,
}

impl FaceGraph {
    /// All vertices appearing in triangles, boundary or removed discs.
    pub fn vertices(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for t in &self.triangles {
            out.extend(t.iter().cloned());
        }
        out.extend(self.boundary.iter().cloned());
        for w in &self.removed_discs {
            out.extend(w.iter().cloned());
        }
        out
    }

    /// Check the disc invariants. Every edge of the complex must have
    /// exactly two sides (triangle incidences plus boundary and hole-walk
    /// occurrences), the triangle adjacency graph must be connected, the
    /// regions must satisfy the disc Euler count, and the pairing must be a
    /// partial matching of boundary edges.
    pub fn check(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidFaceGraph(msg));

        if self.boundary.len() < 3 {
            return invalid("boundary must be a cycle of length >= 3".into());
        }
        let distinct: BTreeSet<&String> = self.boundary.iter().collect();
        if distinct.len() != self.boundary.len() {
            return invalid("boundary must be a simple cycle".into());
        }
        for walk in &self.removed_discs {
            if walk.len() < 3 {
                return invalid("removed disc boundary shorter than 3".into());
            }
            let distinct: BTreeSet<&String> = walk.iter().collect();
            if distinct.len() != walk.len() {
                return invalid("removed disc boundary must be a simple cycle".into());
            }
        }

        // Side count per undirected edge: triangles + boundary + hole walks.
        let mut sides: BTreeMap<Edge, usize> = BTreeMap::new();
        let mut bump = |e: Edge| *sides.entry(e).or_insert(0) += 1;
        for t in &self.triangles {
            let f = Face::new(t[0].clone(), t[1].clone(), t[2].clone())?;
            for e in f.edges() {
                bump(e);
            }
        }
        for w in std::iter::once(&self.boundary).chain(self.removed_discs.iter()) {
            for i in 0..w.len() {
                bump(Edge::new(w[i].clone(), w[(i + 1) % w.len()].clone())?);
            }
        }
        for (e, count) in &sides {
            if *count != 2 {
                return invalid(format!("edge {e} has {count} sides, expected 2"));
            }
        }

        // Disc Euler count: triangles and holes tile a disc.
        let vertices = self.vertices();
        let v = vertices.len() as i64;
        let e = sides.len() as i64;
        let f = self.triangles.len() as i64 + self.removed_discs.len() as i64;
        if v - e + f != 1 {
            return invalid(format!("disc euler count {} != 1", v - e + f));
        }

        // Triangle adjacency (shared edge) connectivity.
        if self.triangles.len() > 1 {
            let mut edge_to_tris: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
            for (i, t) in self.triangles.iter().enumerate() {
                let f = Face::new(t[0].clone(), t[1].clone(), t[2].clone())?;
                for e in f.edges() {
                    edge_to_tris.entry(e).or_default().push(i);
                }
            }
            let n = self.triangles.len();
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            let mut count = 1;
            while let Some(i) = stack.pop() {
                let t = &self.triangles[i];
                let f = Face::new(t[0].clone(), t[1].clone(), t[2].clone())?;
                for e in f.edges() {
                    for &j in &edge_to_tris[&e] {
                        if !seen[j] {
                            seen[j] = true;
                            count += 1;
                            stack.push(j);
                        }
                    }
                }
            }
            if count != n {
                return invalid("triangles do not tile a single disc".into());
            }
        }

        // 1-skeleton connectivity (covers the no-triangle degenerate case).
        let skel = SimpleGraph::new(
            vertices.iter().cloned(),
            sides.keys().map(|e| (e.0.clone(), e.1.clone())),
        )?;
        if !skel.is_connected() {
            return invalid("disc 1-skeleton is not connected".into());
        }

        // Pairing: directed boundary edges, each in at most one pair.
        let m = self.boundary.len();
        let mut boundary_pos: BTreeMap<(String, String), usize> = BTreeMap::new();
        for i in 0..m {
            let u = self.boundary[i].clone();
            let v = self.boundary[(i + 1) % m].clone();
            boundary_pos.insert((u, v), i);
        }
        let mut used = BTreeSet::new();
        for pair in &self.pairing {
            let mut pos = [0usize; 2];
            for (slot, [u, v]) in pair.iter().enumerate() {
                match boundary_pos.get(&(u.clone(), v.clone())) {
                    Some(&p) => pos[slot] = p,
                    None => {
                        return invalid(format!(
                            "paired edge {u}->{v} is not a directed boundary edge"
                        ))
                    }
                }
            }
            if pos[0] == pos[1] {
                return invalid("an edge cannot be paired with itself".into());
            }
            for p in pos {
                if !used.insert(p) {
                    return invalid("a boundary edge occurs in two pairs".into());
                }
            }
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Identify the paired boundary edges of a face graph and return the
/// resulting embedded graph.
///
/// Faces are inherited from the triangles and holes from the removed
/// discs. When the pairing leaves some boundary edges unidentified, the
/// leftover boundary closes up into one or more additional hole walks
/// (traced through the gluing); with a total pairing and no removed discs
/// the result is a full triangulation with zero holes.
///
/// Each identification class is labelled by its lexicographically smallest
/// member.
pub fn from_face_graph(fg: &FaceGraph) -> Result<PGraph> {
    fg.check()?;

    let vertices: Vec<String> = fg.vertices().into_iter().collect();
    let index: BTreeMap<String, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let m = fg.boundary.len();
    let bpos = |u: &str, v: &str| -> Option<usize> {
        (0..m).find(|&i| fg.boundary[i] == u && fg.boundary[(i + 1) % m] == v)
    };

    // Union the identified endpoints: first to first, second to second.
    let mut uf = UnionFind::new(vertices.len());
    let mut partner: Vec<Option<usize>> = vec![None; m];
    for pair in &fg.pairing {
        let i = bpos(&pair[0][0], &pair[0][1]).expect("checked");
        let j = bpos(&pair[1][0], &pair[1][1]).expect("checked");
        partner[i] = Some(j);
        partner[j] = Some(i);
        uf.union(index[&fg.boundary[i]], index[&fg.boundary[j]]);
        uf.union(
            index[&fg.boundary[(i + 1) % m]],
            index[&fg.boundary[(j + 1) % m]],
        );
    }
    let class_label: Vec<String> = {
        let mut label: Vec<Option<String>> = vec![None; vertices.len()];
        for (i, v) in vertices.iter().enumerate() {
            let root = uf.find(i);
            // vertices is sorted, so the first writer is the smallest label
            if label[root].is_none() {
                label[root] = Some(v.clone());
            }
        }
        (0..vertices.len())
            .map(|i| label[uf.find(i)].clone().expect("root labelled"))
            .collect()
    };
    let quotient = |v: &str| -> String { class_label[index[v]].clone() };

    // Quotient edges; the only legitimate coincidence is a pairing partner.
    let mut edge_preimages: BTreeMap<Edge, BTreeSet<(String, String)>> = BTreeMap::new();
    let mut disc_edges: BTreeSet<Edge> = BTreeSet::new();
    for t in &fg.triangles {
        let f = Face::new(t[0].clone(), t[1].clone(), t[2].clone())?;
        disc_edges.extend(f.edges());
    }
    for w in std::iter::once(&fg.boundary).chain(fg.removed_discs.iter()) {
        for i in 0..w.len() {
            disc_edges.insert(Edge::new(w[i].clone(), w[(i + 1) % w.len()].clone())?);
        }
    }
    for e in &disc_edges {
        let (qu, qv) = (quotient(&e.0), quotient(&e.1));
        if qu == qv {
            return Err(Error::NonSimpleQuotient(format!(
                "edge {e} becomes a loop at {qu}"
            )));
        }
        edge_preimages
            .entry(Edge::new(qu, qv)?)
            .or_default()
            .insert((e.0.clone(), e.1.clone()));
    }
    for (qe, pre) in &edge_preimages {
        if pre.len() > 2 {
            return Err(Error::NonSimpleQuotient(format!("parallel edges at {qe}")));
        }
        if pre.len() == 2 {
            // The two disc edges must be pairing partners.
            let mut items = pre.iter();
            let a = items.next().unwrap();
            let b = items.next().unwrap();
            let a_pos = bpos(&a.0, &a.1).or_else(|| bpos(&a.1, &a.0));
            let b_pos = bpos(&b.0, &b.1).or_else(|| bpos(&b.1, &b.0));
            let partnered = match (a_pos, b_pos) {
                (Some(i), Some(j)) => partner[i] == Some(j),
                _ => false,
            };
            if !partnered {
                return Err(Error::NonSimpleQuotient(format!("parallel edges at {qe}")));
            }
        }
    }

    // Quotient faces must stay distinct triangles.
    let mut faces: BTreeSet<Face> = BTreeSet::new();
    for t in &fg.triangles {
        let f = Face::new(quotient(&t[0]), quotient(&t[1]), quotient(&t[2]))
            .map_err(|_| Error::NonSimpleQuotient("a triangle degenerates".into()))?;
        if !faces.insert(f) {
            return Err(Error::NonSimpleQuotient(
                "two triangles become the same face".into(),
            ));
        }
    }

    let mut holes: Vec<Vec<String>> = fg
        .removed_discs
        .iter()
        .map(|w| w.iter().map(|v| quotient(v)).collect())
        .collect();
    holes.extend(trace_leftover_boundary(fg, &partner, &quotient)?);

    let pg = PGraph::new(
        class_label.iter().cloned().collect::<BTreeSet<_>>(),
        edge_preimages.keys().map(|e| (e.0.clone(), e.1.clone())),
        faces
            .iter()
            .map(|f| (f.0[0].clone(), f.0[1].clone(), f.0[2].clone())),
        holes,
    )?;
    Ok(pg)
}

/// Trace the closed walks formed by the unpaired boundary edges after the
/// identification. Crossing a glued edge flips the traversal direction
/// (the gluing is orientation-reversing when both edges are directed along
/// the boundary).
fn trace_leftover_boundary(
    fg: &FaceGraph,
    partner: &[Option<usize>],
    quotient: &dyn Fn(&str) -> String,
) -> Result<Vec<Vec<String>>> {
    let m = fg.boundary.len();
    let mut walks = Vec::new();
    // (edge position, forward?) states already emitted
    let mut visited = vec![false; m];

    for start in 0..m {
        if partner[start].is_some() || visited[start] {
            continue;
        }
        let mut walk: Vec<String> = Vec::new();
        let mut pos = start;
        let mut forward = true;
        loop {
            visited[pos] = true;
            let from = if forward { pos } else { (pos + 1) % m };
            walk.push(quotient(&fg.boundary[from]));
            // pivot around the far corner until the next unpaired edge
            let (mut look, mut look_forward) = if forward {
                ((pos + 1) % m, true)
            } else {
                ((pos + m - 1) % m, false)
            };
            let mut guard = 0;
            loop {
                guard += 1;
                if guard > 2 * m + 2 {
                    return Err(Error::InvalidFaceGraph(
                        "boundary tracing does not terminate".into(),
                    ));
                }
                match partner[look] {
                    None => break,
                    Some(p) => {
                        if look_forward {
                            // glued start-to-start: emerge before the partner
                            look = (p + m - 1) % m;
                            look_forward = false;
                        } else {
                            // glued end-to-end: emerge after the partner
                            look = (p + 1) % m;
                            look_forward = true;
                        }
                    }
                }
            }
            pos = look;
            forward = look_forward;
            if pos == start && forward {
                break;
            }
            if visited[pos] {
                return Err(Error::InvalidFaceGraph(
                    "boundary tracing revisits an edge".into(),
                ));
            }
        }
        walks.push(walk);
    }
    Ok(walks)
}

/// Cone off the hole of a fully triangulated Moebius strip, producing a
/// full triangulation of the projective plane with one extra vertex.
///
/// The input must have exactly one hole, whose walk is a simple cycle,
/// every edge must lie in at least one face, and the strip must satisfy
/// |V| - |E| + |F| = 0 (which separates a Moebius strip from a planar
/// disc, whose count is 1).
pub fn moebius_completion(g: &PGraph) -> Result<PGraph> {
    if g.hole_count() != 1 {
        return Err(Error::NotMoebius(format!(
            "expected exactly one hole, found {}",
            g.hole_count()
        )));
    }
    let walk = &g.holes()[0];
    let distinct: BTreeSet<&String> = walk.iter().collect();
    if distinct.len() != walk.len() {
        return Err(Error::NotMoebius(
            "hole boundary is not a simple cycle".into(),
        ));
    }
    for e in g.edges() {
        if g.face_count_of_edge(e) == 0 {
            return Err(Error::NotMoebius(format!(
                "edge {e} lies in no face; the strip is not fully triangulated"
            )));
        }
    }
    let chi = g.vertex_count() as i64 - g.edge_count() as i64 + g.face_count() as i64;
    if chi != 0 {
        return Err(Error::NotMoebius(format!(
            "strip euler count {chi} != 0; not a Moebius strip"
        )));
    }
    g.require_valid()?;

    // fresh cone vertex
    let mut apex = String::from("z");
    let mut counter = 0;
    while g.has_vertex(&apex) {
        counter += 1;
        apex = format!("z{counter}");
    }

    let vertices: Vec<String> = g
        .vertices()
        .map(str::to_string)
        .chain(std::iter::once(apex.clone()))
        .collect();
    let mut edges: Vec<(String, String)> = g
        .edges()
        .map(|e| (e.0.clone(), e.1.clone()))
        .collect();
    let mut faces: Vec<(String, String, String)> = g
        .faces()
        .map(|f| (f.0[0].clone(), f.0[1].clone(), f.0[2].clone()))
        .collect();
    for i in 0..walk.len() {
        let u = walk[i].clone();
        let v = walk[(i + 1) % walk.len()].clone();
        edges.push((apex.clone(), u.clone()));
        faces.push((apex.clone(), u, v));
    }
    let out = PGraph::new(vertices, edges, faces, Vec::new())?;
    out.require_valid()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rp6_full_triangulation() {
        let fg = fixtures::hexagon_disc_face_graph();
        let g = from_face_graph(&fg).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.face_count(), 10);
        assert_eq!(g.hole_count(), 0);
        assert_eq!(g.freedom_number(), 3);
        assert!(g.validate().is_valid());
        // every edge lies in exactly two faces
        for e in g.edges() {
            assert_eq!(g.face_count_of_edge(e), 2);
        }
    }

    #[test]
    fn annular_face_graph_is_moebius_strip() {
        let fg = fixtures::annular_moebius_face_graph();
        let g = from_face_graph(&fg).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 21);
        assert_eq!(g.face_count(), 12);
        assert_eq!(g.hole_count(), 1);
        assert_eq!(g.holes()[0].len(), 6);
        assert!(g.validate().is_valid());
        assert_eq!(g.freedom_number(), 6);
        // fully triangulated strip: every edge lies in at least one face
        for e in g.edges() {
            assert!(g.face_count_of_edge(e) >= 1);
        }
    }

    #[test]
    fn trivial_pairing_keeps_disc_with_boundary_hole() {
        let fg = FaceGraph {
            triangles: vec![["a".into(), "b".into(), "c".into()]],
            boundary: vec!["a".into(), "b".into(), "c".into()],
            pairing: vec![],
            removed_discs: vec![],
        };
        let g = from_face_graph(&fg).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.hole_count(), 1);
        assert_eq!(g.holes()[0].len(), 3);
        // a planar disc is spherical, not projective: the Euler check flags it
        let report = g.validate();
        assert_eq!(report.violations, vec![Violation::Euler(2)]);
    }

    #[test]
    fn partial_pairing_traces_strip_boundary() {
        let fg = fixtures::moebius_grid_face_graph();
        let g = from_face_graph(&fg).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.hole_count(), 1);
        assert_eq!(g.holes()[0].len(), 6);
        assert_eq!(g.freedom_number(), 6);
        assert!(g.validate().is_valid());
    }

    #[test]
    fn nonsimple_quotient_rejected() {
        // hexagon with antipodal pairing, interior fanned from one vertex:
        // the two spokes c-b1 and c-b4 become parallel edges
        let b: Vec<String> = (1..=6).map(|i| format!("b{i}")).collect();
        let fg = FaceGraph {
            triangles: (0..6)
                .map(|i| [b[i].clone(), b[(i + 1) % 6].clone(), "c".into()])
                .collect(),
            boundary: b.clone(),
            pairing: vec![
                [
                    [b[0].clone(), b[1].clone()],
                    [b[3].clone(), b[4].clone()],
                ],
                [
                    [b[1].clone(), b[2].clone()],
                    [b[4].clone(), b[5].clone()],
                ],
                [
                    [b[2].clone(), b[3].clone()],
                    [b[5].clone(), b[0].clone()],
                ],
            ],
            removed_discs: vec![],
        };
        match from_face_graph(&fg) {
            Err(Error::NonSimpleQuotient(_)) => {}
            other => panic!("expected NonSimpleQuotient, got {other:?}"),
        }
    }

    #[test]
    fn validate_rejects_bad_side_count() {
        // triangle with a hole walk of length 3: sides 0 + 3 != 6
        let g = PGraph::new(
            ["a", "b", "c"].map(String::from),
            vec![
                ("a".into(), "b".into()),
                ("b".into(), "c".into()),
                ("a".into(), "c".into()),
            ],
            Vec::<(String, String, String)>::new(),
            vec![vec!["a".into(), "b".into(), "c".into()]],
        )
        .unwrap();
        let report = g.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::SideCount { .. })));
    }

    #[test]
    fn classify_signatures() {
        let fg = fixtures::heptagon_annulus_face_graph();
        let g = from_face_graph(&fg).unwrap();
        assert!(g.validate().is_valid());
        let sig = g.classify();
        assert_eq!(sig.k, 1);
        assert_eq!(sig.lengths, vec![7]);
        assert!(!sig.maxwell_consistent);
        assert_eq!(g.freedom_number(), 7);
    }

    #[test]
    fn hole_incidence_degrees() {
        let cat = crate::reduction::catalog();
        let k4 = cat.get("G^3_4").unwrap();
        for v in k4.vertices() {
            assert_eq!(k4.hole_incidence_degree(v).unwrap(), 3);
        }
        let cone = cat.get("G^0_7").unwrap();
        assert_eq!(cone.hole_incidence_degree("z").unwrap(), 0);
        assert_eq!(cone.hole_incidence_degree("v1").unwrap(), 2);
        assert!(matches!(
            cone.hole_incidence_degree("missing"),
            Err(Error::UnknownVertex(_))
        ));
        let full = from_face_graph(&fixtures::hexagon_disc_face_graph()).unwrap();
        for v in full.vertices() {
            assert_eq!(full.hole_incidence_degree(v).unwrap(), 0);
        }
        assert_eq!(cat.get("G^2_3").unwrap().min_hole_incidence_degree(), 2);
        assert_eq!(cat.get("G^1_5").unwrap().min_hole_incidence_degree(), 1);
        assert_eq!(full.min_hole_incidence_degree(), 0);
    }

    #[test]
    fn invalid_face_graphs_rejected() {
        // pairing references an edge that is not on the boundary
        let mut fg = fixtures::hexagon_disc_face_graph();
        fg.pairing[0][0] = ["b1".into(), "x".into()];
        assert!(matches!(
            from_face_graph(&fg),
            Err(Error::InvalidFaceGraph(_))
        ));
        // an interior edge in three triangles
        let fg = FaceGraph {
            triangles: vec![
                ["a".into(), "b".into(), "c".into()],
                ["a".into(), "b".into(), "d".into()],
                ["a".into(), "b".into(), "e".into()],
            ],
            boundary: vec!["c".into(), "d".into(), "e".into()],
            pairing: vec![],
            removed_discs: vec![],
        };
        assert!(matches!(
            from_face_graph(&fg),
            Err(Error::InvalidFaceGraph(_))
        ));
    }

    #[test]
    fn moebius_completion_of_strip() {
        for strip in [
            from_face_graph(&fixtures::annular_moebius_face_graph()).unwrap(),
            from_face_graph(&fixtures::moebius_grid_face_graph()).unwrap(),
        ] {
            let done = moebius_completion(&strip).unwrap();
            assert_eq!(done.vertex_count(), strip.vertex_count() + 1);
            assert_eq!(done.freedom_number(), 3);
            assert_eq!(done.hole_count(), 0);
            assert!(done.validate().is_valid());
            for e in done.edges() {
                assert_eq!(done.face_count_of_edge(e), 2);
            }
        }
    }

    #[test]
    fn moebius_completion_rejects_disc() {
        let fg = FaceGraph {
            triangles: vec![["a".into(), "b".into(), "c".into()]],
            boundary: vec!["a".into(), "b".into(), "c".into()],
            pairing: vec![],
            removed_discs: vec![],
        };
        let disc = from_face_graph(&fg).unwrap();
        match moebius_completion(&disc) {
            Err(Error::NotMoebius(_)) => {}
            other => panic!("expected NotMoebius, got {other:?}"),
        }
    }

    #[test]
    fn pgraph_json_round_trip() {
        let g = from_face_graph(&fixtures::annular_moebius_face_graph()).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        let back: PGraph = serde_json::from_str(&text).unwrap();
        assert!(g.same_labeled(&back));
    }
}
