//! Cross-module invariants: labelling independence of the identification,
//! equivalence of the Maxwell signature and the freedom number, and the
//! split/contract round trips.

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pgraph::fixtures;
use pgraph::iso::is_isomorphic;
use pgraph::moves::{
    contract, first_admissible_contraction, grow_seeded, legal_splits, replay_split, vertex_split,
};
use pgraph::reduction::catalog;
use pgraph::sparsity::freedom_number;
use pgraph::surface::{from_face_graph, FaceGraph, PGraph};

fn relabel_face_graph(fg: &FaceGraph, map: &BTreeMap<String, String>) -> FaceGraph {
    let m = |v: &String| map[v].clone();
    FaceGraph {
        triangles: fg
            .triangles
            .iter()
            .map(|t| [m(&t[0]), m(&t[1]), m(&t[2])])
            .collect(),
        boundary: fg.boundary.iter().map(m).collect(),
        pairing: fg
            .pairing
            .iter()
            .map(|p| [[m(&p[0][0]), m(&p[0][1])], [m(&p[1][0]), m(&p[1][1])]])
            .collect(),
        removed_discs: fg
            .removed_discs
            .iter()
            .map(|w| w.iter().map(m).collect())
            .collect(),
    }
}

/// Graphs with assorted freedom numbers: the catalog (6), a full
/// triangulation (3), and annuli with pentagonal (5) and heptagonal (7)
/// holes, each grown a little.
fn mixed_pool() -> Vec<PGraph> {
    let mut pool: Vec<PGraph> = catalog().members().map(|(_, g)| g.clone()).collect();
    pool.push(from_face_graph(&fixtures::hexagon_disc_face_graph()).unwrap());
    pool.push(from_face_graph(&fixtures::pentagon_annulus_face_graph()).unwrap());
    pool.push(from_face_graph(&fixtures::heptagon_annulus_face_graph()).unwrap());
    pool
}

#[test]
fn maxwell_signature_matches_freedom_number_on_1000_graphs() {
    let pool = mixed_pool();
    for case in 0..1000u64 {
        let start = &pool[(case % pool.len() as u64) as usize];
        let steps = (case / pool.len() as u64 % 6) as usize;
        let g = grow_seeded(start, steps, 40_000 + case).expect("growth succeeds");
        assert!(g.is_valid(), "case {case}");
        let sig = g.classify();
        let freedom = freedom_number(&g.skeleton());
        assert_eq!(
            sig.maxwell_consistent,
            freedom == 6,
            "case {case}: signature {sig:?} vs freedom {freedom}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Relabelling a face graph relabels its quotient: the results are
    /// isomorphic whatever names the disc vertices carry.
    #[test]
    fn identification_is_label_independent(shuffle_seed in any::<u64>(), which in 0usize..3) {
        let fg = match which {
            0 => fixtures::hexagon_disc_face_graph(),
            1 => fixtures::annular_moebius_face_graph(),
            _ => fixtures::moebius_grid_face_graph(),
        };
        let original = from_face_graph(&fg).unwrap();
        let mut names: Vec<String> = fg.vertices().into_iter().collect();
        let fresh: Vec<String> = (0..names.len()).map(|i| format!("n{i}")).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(shuffle_seed);
        let mut shuffled = fresh.clone();
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, rng.gen_range(0..=i));
        }
        names.sort();
        let map: BTreeMap<String, String> = names.into_iter().zip(shuffled).collect();
        let relabeled = from_face_graph(&relabel_face_graph(&fg, &map)).unwrap();
        prop_assert_eq!(relabeled.vertex_count(), original.vertex_count());
        prop_assert!(is_isomorphic(&relabeled.skeleton(), &original.skeleton()).is_some());
    }

    /// A legal split followed by contraction of the fresh edge restores
    /// the graph, and replaying a contraction record restores its source.
    #[test]
    fn split_contract_round_trip(base in 0usize..8, steps in 0usize..8, seed in any::<u64>()) {
        let cat = catalog();
        let name = cat.names()[base];
        let g = grow_seeded(cat.get(name).unwrap(), steps, seed).unwrap();

        let splits = legal_splits(&g).unwrap();
        prop_assert!(!splits.is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let (v, a, b, moved) = &splits[rng.gen_range(0..splits.len())];
        let grown = vertex_split(&g, v, a, b, moved).unwrap();
        prop_assert!(grown.is_valid());
        let w = grown
            .vertices()
            .find(|x| !g.has_vertex(x))
            .expect("fresh vertex")
            .to_string();
        let (back, record) = contract(&grown, v, &w).unwrap();
        prop_assert!(back.same_labeled(&g) || is_isomorphic(&back.skeleton(), &g.skeleton()).is_some());

        let regrown = replay_split(&back, &record).unwrap();
        prop_assert!(is_isomorphic(&regrown.skeleton(), &grown.skeleton()).is_some());
    }

    /// Contraction and its replay are mutually inverse on grown graphs.
    #[test]
    fn contraction_replay_round_trip(base in 0usize..8, steps in 1usize..8, seed in any::<u64>()) {
        let cat = catalog();
        let name = cat.names()[base];
        let g = grow_seeded(cat.get(name).unwrap(), steps, seed).unwrap();
        if let Some((contracted, record)) = first_admissible_contraction(&g) {
            prop_assert!(contracted.is_valid());
            prop_assert_eq!(contracted.hole_count(), g.hole_count());
            let replayed = replay_split(&contracted, &record).unwrap();
            prop_assert!(replayed.same_labeled(&g));
        }
    }
}
