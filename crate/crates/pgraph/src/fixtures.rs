//! Ready-made face graphs: the hexagonal-disc triangulation of the
//! projective plane, annular Moebius strips with a central hole, and a few
//! annuli with off-count holes. These are the standard small inputs for
//! exercising identification, classification and the moves.

use crate::surface::FaceGraph;

fn tri(a: &str, b: &str, c: &str) -> [String; 3] {
    [a.to_string(), b.to_string(), c.to_string()]
}

fn antipodal_hexagon_pairing(b: &[String; 6]) -> Vec<[[String; 2]; 2]> {
    (0..3)
        .map(|i| {
            [
                [b[i].clone(), b[i + 1].clone()],
                [b[i + 3].clone(), b[(i + 4) % 6].clone()],
            ]
        })
        .collect()
}

/// A hexagonal disc with opposite boundary edges identified in cyclic
/// order and a fully triangulated interior on three inner vertices. The
/// quotient is the 6-vertex full triangulation of the projective plane
/// (the complete graph K6 with 10 faces).
pub fn hexagon_disc_face_graph() -> FaceGraph {
    let b: [String; 6] = std::array::from_fn(|i| format!("b{}", i + 1));
    let triangles = vec![
        tri(&b[0], &b[1], "x"),
        tri(&b[1], "x", "y"),
        tri(&b[1], &b[2], "y"),
        tri(&b[2], &b[3], "y"),
        tri(&b[3], "y", "z"),
        tri(&b[3], &b[4], "z"),
        tri(&b[4], &b[5], "z"),
        tri(&b[5], "z", "x"),
        tri(&b[5], &b[0], "x"),
        tri("x", "y", "z"),
    ];
    FaceGraph {
        triangles,
        boundary: b.to_vec(),
        pairing: antipodal_hexagon_pairing(&b),
        removed_discs: vec![],
    }
}

/// Triangulated ring between an outer cycle and an inner cycle of the same
/// length: vertex `outer[i]` is joined to `inner[i]` and `inner[i+1]`.
fn even_ring(outer: &[String], inner: &[String]) -> Vec<[String; 3]> {
    let n = outer.len();
    let mut triangles = Vec::with_capacity(2 * n);
    for i in 0..n {
        let j = (i + 1) % n;
        triangles.push(tri(&outer[i], &inner[i], &inner[j]));
        triangles.push(tri(&outer[i], &outer[j], &inner[j]));
    }
    triangles
}

/// An annular face graph: outer hexagon with antipodal pairing, inner
/// hexagonal hole, ring of twelve triangles between them. The quotient is
/// a 9-vertex triangulated Moebius strip with one hole of length 6.
pub fn annular_moebius_face_graph() -> FaceGraph {
    let u: [String; 6] = std::array::from_fn(|i| format!("u{}", i + 1));
    let h: Vec<String> = (1..=6).map(|i| format!("h{i}")).collect();
    FaceGraph {
        triangles: even_ring(&u, &h),
        boundary: u.to_vec(),
        pairing: antipodal_hexagon_pairing(&u),
        removed_discs: vec![h],
    }
}

/// Two concentric rings: outer hexagon (antipodally paired) to a middle
/// hexagon, middle hexagon to an inner hexagonal hole. The quotient is a
/// 15-vertex graph in which the middle hexagon bounds a tight proper
/// subgraph, so its edges are contractible but never admissible.
pub fn double_ring_face_graph() -> FaceGraph {
    let u: [String; 6] = std::array::from_fn(|i| format!("u{}", i + 1));
    let h: Vec<String> = (1..=6).map(|i| format!("h{i}")).collect();
    let g: Vec<String> = (1..=6).map(|i| format!("g{i}")).collect();
    let mut triangles = even_ring(&u, &h);
    triangles.extend(even_ring(&h, &g));
    FaceGraph {
        triangles,
        boundary: u.to_vec(),
        pairing: antipodal_hexagon_pairing(&u),
        removed_discs: vec![g],
    }
}

/// A 3x4 grid rectangle whose short sides are identified with a flip (a
/// Moebius strip presented by two paired boundary paths). The pairing is
/// partial: the long sides close up into the strip boundary, a hole walk
/// of length 6.
pub fn moebius_grid_face_graph() -> FaceGraph {
    let name = |r: usize, c: usize| format!("g{r}{c}");
    let mut triangles = Vec::new();
    for r in 0..2 {
        for c in 0..3 {
            triangles.push(tri(&name(r, c), &name(r, c + 1), &name(r + 1, c + 1)));
            triangles.push(tri(&name(r, c), &name(r + 1, c + 1), &name(r + 1, c)));
        }
    }
    let boundary = vec![
        name(0, 0),
        name(0, 1),
        name(0, 2),
        name(0, 3),
        name(1, 3),
        name(2, 3),
        name(2, 2),
        name(2, 1),
        name(2, 0),
        name(1, 0),
    ];
    let pairing = vec![
        [
            [name(0, 3), name(1, 3)],
            [name(2, 0), name(1, 0)],
        ],
        [
            [name(1, 3), name(2, 3)],
            [name(1, 0), name(0, 0)],
        ],
    ];
    FaceGraph {
        triangles,
        boundary,
        pairing,
        removed_discs: vec![],
    }
}

/// Ring between the paired outer hexagon and an inner cycle of different
/// length; the last outer vertex absorbs the surplus inner vertices.
fn uneven_annulus(inner_len: usize) -> FaceGraph {
    let u: [String; 6] = std::array::from_fn(|i| format!("u{}", i + 1));
    let h: Vec<String> = (1..=inner_len).map(|i| format!("h{i}")).collect();
    let mut triangles = Vec::new();
    for i in 0..5 {
        triangles.push(tri(&u[i], &h[i], &h[(i + 1) % inner_len]));
        triangles.push(tri(&u[i], &u[i + 1], &h[(i + 1) % inner_len]));
    }
    for j in 5..inner_len {
        triangles.push(tri(&u[5], &h[j], &h[(j + 1) % inner_len]));
    }
    triangles.push(tri(&u[5], &u[0], &h[0]));
    FaceGraph {
        triangles,
        boundary: u.to_vec(),
        pairing: antipodal_hexagon_pairing(&u),
        removed_discs: vec![h],
    }
}

/// Annulus with a pentagonal hole: freedom number 5, not Maxwell.
pub fn pentagon_annulus_face_graph() -> FaceGraph {
    uneven_annulus(5)
}

/// Annulus with a heptagonal hole: freedom number 7, not Maxwell.
pub fn heptagon_annulus_face_graph() -> FaceGraph {
    uneven_annulus(7)
}
