//! Cross-module invariants: the fast counting paths against the exact
//! homology oracle, incremental sweeps against naive recomputation, and
//! structural properties of curves and distances.

use ecshape::cubical::{cell_counts, ec_curve_field, ec_curve_incremental, mask_betti0};
use ecshape::graph::{
    edge_filtration, graph_betti0, graph_betti1, graph_ec, incremental_filtration_curve,
    node_filtration, FiltrationMode,
};
use ecshape::homology::CubicalComplex;
use ecshape::rng::Rng;
use ecshape::stats::ec_distance;
use ecshape::types::euler_poincare;
use ecshape::{Direction, ECCurve, FiltrationSpec, GridField, WeightedGraph};
use proptest::prelude::*;

fn random_graph(rng: &mut Rng, max_nodes: usize) -> WeightedGraph {
    let n = 1 + rng.next_index(max_nodes);
    let p = rng.next_f64() * 0.3;
    let mut edges = Vec::new();
    let mut edge_weights = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.next_f64() < p {
                edges.push((i, j));
                edge_weights.push(rng.next_f64());
            }
        }
    }
    let node_weights = (0..n).map(|_| rng.next_f64()).collect();
    WeightedGraph::new(n, edges, Some(edge_weights), Some(node_weights)).unwrap()
}

fn random_field(rng: &mut Rng, dims: Vec<usize>) -> GridField {
    let len = dims.iter().product();
    let values = (0..len).map(|_| rng.next_f64()).collect();
    GridField::new(dims, values).unwrap()
}

fn random_dims(rng: &mut Rng) -> Vec<usize> {
    match rng.next_index(3) {
        0 => vec![1 + rng.next_index(30)],
        1 => vec![1 + rng.next_index(8), 1 + rng.next_index(8)],
        _ => vec![
            1 + rng.next_index(5),
            1 + rng.next_index(5),
            1 + rng.next_index(5),
        ],
    }
}

#[test]
fn graph_ec_equals_alternating_betti_sum() {
    let mut rng = Rng::new(1001);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 80);
        let betti = [graph_betti0(&g) as i64, graph_betti1(&g) as i64];
        assert_eq!(graph_ec(&g), euler_poincare(&betti));
    }
}

#[test]
fn incremental_graph_curves_equal_naive_recomputation() {
    let mut rng = Rng::new(2002);
    for _ in 0..150 {
        let g = random_graph(&mut rng, 50);
        let m = 2 + rng.next_index(40);
        let spec = FiltrationSpec::uniform(-0.1, 1.1, m, Direction::Sublevel).unwrap();
        assert_eq!(
            edge_filtration(&g, &spec).unwrap(),
            incremental_filtration_curve(&g, &spec, FiltrationMode::Edge).unwrap()
        );
        assert_eq!(
            node_filtration(&g, &spec).unwrap(),
            incremental_filtration_curve(&g, &spec, FiltrationMode::Node).unwrap()
        );
    }
}

#[test]
fn incremental_field_curves_equal_naive_recomputation() {
    let mut rng = Rng::new(3003);
    for _ in 0..60 {
        let dims = random_dims(&mut rng);
        let field = random_field(&mut rng, dims);
        for direction in [Direction::Superlevel, Direction::Sublevel] {
            let spec = FiltrationSpec::uniform(-0.1, 1.1, 25, direction).unwrap();
            assert_eq!(
                ec_curve_incremental(&field, &spec),
                ec_curve_field(&field, &spec),
                "dims {:?}, {direction:?}",
                field.dims()
            );
        }
    }
}

#[test]
fn cell_counts_agree_with_the_homology_oracle() {
    let mut rng = Rng::new(4004);
    for round in 0..40 {
        let dims = random_dims(&mut rng);
        let len: usize = dims.iter().product();
        let density = rng.next_f64();
        let mask: Vec<bool> = (0..len).map(|_| rng.next_f64() < density).collect();

        let counts = cell_counts(&mask, &dims).unwrap();
        let complex = CubicalComplex::build_complex(&mask, &dims).unwrap();
        for (k, &c) in counts.counts().iter().enumerate() {
            assert_eq!(c, complex.cell_count(k), "round {round}, dim {k}");
        }
        assert_eq!(counts.chi(), complex.euler_characteristic());

        let betti = complex.betti_numbers();
        assert_eq!(betti[0], mask_betti0(&mask, &dims).unwrap(), "round {round}");

        // Euler-Poincare: alternating cell counts equal alternating Betti
        // numbers (the omitted top Betti number is always zero).
        let alt_betti: i64 = betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        assert_eq!(counts.chi(), alt_betti, "round {round}, dims {dims:?}");

        if dims.len() == 2 {
            let b1 = betti[0] as i64 - counts.chi();
            assert_eq!(betti[1] as i64, b1, "round {round}");
        }
    }
}

#[test]
fn superlevel_components_match_the_grid_graph_node_filtration() {
    // Thresholding a field from above is the same as a sublevel node
    // filtration of the grid graph under negated values, so beta_0 must
    // agree at matching thresholds.
    let mut rng = Rng::new(5005);
    for _ in 0..30 {
        let rows = 2 + rng.next_index(7);
        let cols = 2 + rng.next_index(7);
        let field = random_field(&mut rng, vec![rows, cols]);

        let mut edges = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                let v = i * cols + j;
                if i + 1 < rows {
                    edges.push((v, v + cols));
                }
                if j + 1 < cols {
                    edges.push((v, v + 1));
                }
            }
        }
        let negated: Vec<f64> = field.values().iter().map(|v| -v).collect();
        let grid_graph =
            WeightedGraph::new(rows * cols, edges, None, Some(negated)).unwrap();

        for level in [0.2, 0.5, 0.8] {
            let mask = ecshape::cubical::threshold_mask(&field, level, Direction::Superlevel);
            let b0_field = mask_betti0(&mask, field.dims()).unwrap();
            let spec = FiltrationSpec::new(Direction::Sublevel, vec![-level]).unwrap();
            let (_, betti) = node_filtration(&grid_graph, &spec).unwrap();
            assert_eq!(b0_field, betti.beta0()[0]);
        }
    }
}

#[test]
fn node_relabeling_leaves_curves_unchanged() {
    let mut rng = Rng::new(6006);
    for _ in 0..40 {
        let g = random_graph(&mut rng, 30);
        let n = g.node_count();
        let mut perm: Vec<usize> = (0..n).collect();
        rng.shuffle(&mut perm);

        let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let mut node_weights = vec![0.0; n];
        for (old, &new) in perm.iter().enumerate() {
            node_weights[new] = g.node_weights().unwrap()[old];
        }
        let relabeled = WeightedGraph::new(
            n,
            edges,
            Some(g.edge_weights().unwrap().to_vec()),
            Some(node_weights),
        )
        .unwrap();

        let spec = FiltrationSpec::uniform(0.0, 1.0, 13, Direction::Sublevel).unwrap();
        assert_eq!(
            edge_filtration(&g, &spec).unwrap(),
            edge_filtration(&relabeled, &spec).unwrap()
        );
        assert_eq!(
            node_filtration(&g, &spec).unwrap(),
            node_filtration(&relabeled, &spec).unwrap()
        );
    }
}

#[test]
fn shifting_a_field_shifts_its_curve() {
    let mut rng = Rng::new(7007);
    for _ in 0..20 {
        let field = random_field(&mut rng, vec![6, 6]);
        let shift = 2.5;
        let shifted = GridField::new(
            field.dims().to_vec(),
            field.values().iter().map(|v| v + shift).collect(),
        )
        .unwrap();

        let levels = vec![0.9, 0.5, 0.1];
        let spec = FiltrationSpec::new(Direction::Superlevel, levels.clone()).unwrap();
        let spec_shifted = FiltrationSpec::new(
            Direction::Superlevel,
            levels.iter().map(|l| l + shift).collect(),
        )
        .unwrap();
        assert_eq!(
            ec_curve_field(&field, &spec).chi(),
            ec_curve_field(&shifted, &spec_shifted).chi()
        );
    }
}

#[test]
fn edge_filtration_growth_is_monotone() {
    // Edges only accumulate along a sublevel sweep, so chi and beta_0
    // cannot increase.
    let mut rng = Rng::new(8008);
    for _ in 0..40 {
        let g = random_graph(&mut rng, 40);
        let spec = FiltrationSpec::uniform(0.0, 1.0, 21, Direction::Sublevel).unwrap();
        let (ec, betti) = edge_filtration(&g, &spec).unwrap();
        for w in ec.chi().windows(2) {
            assert!(w[1] <= w[0]);
        }
        for w in betti.beta0().windows(2) {
            assert!(w[1] <= w[0]);
        }
    }
}

proptest! {
    #[test]
    fn uniform_thresholds_are_well_formed(
        lo in -1e6..1e6f64,
        span in 1e-3..1e6f64,
        m in 2..128usize,
        superlevel in any::<bool>(),
    ) {
        let direction = if superlevel {
            Direction::Superlevel
        } else {
            Direction::Sublevel
        };
        let spec = FiltrationSpec::uniform(lo, lo + span, m, direction).unwrap();
        prop_assert_eq!(spec.len(), m);
        let t = spec.thresholds();
        let (first, last) = (t[0], t[m - 1]);
        if superlevel {
            prop_assert_eq!(first, lo + span);
            prop_assert_eq!(last, lo);
        } else {
            prop_assert_eq!(first, lo);
            prop_assert_eq!(last, lo + span);
        }
    }

    #[test]
    fn ec_distance_is_a_metric(
        chis in prop::collection::vec((-100..100i64, -100..100i64, -100..100i64), 1..50)
    ) {
        let thresholds: Vec<f64> = (0..chis.len()).map(|i| i as f64).collect();
        let a = ECCurve::new(thresholds.clone(), chis.iter().map(|c| c.0).collect()).unwrap();
        let b = ECCurve::new(thresholds.clone(), chis.iter().map(|c| c.1).collect()).unwrap();
        let c = ECCurve::new(thresholds, chis.iter().map(|c| c.2).collect()).unwrap();
        let ab = ec_distance(&a, &b).unwrap();
        let ac = ec_distance(&a, &c).unwrap();
        let bc = ec_distance(&b, &c).unwrap();
        prop_assert!(ab >= 0.0);
        prop_assert_eq!(ab, ec_distance(&b, &a).unwrap());
        prop_assert_eq!(ec_distance(&a, &a).unwrap(), 0.0);
        prop_assert!(ac <= ab + bc + 1e-9 * (1.0 + ab + bc));
    }

    #[test]
    fn threshold_masks_partition_strictly_between_values(
        values in prop::collection::vec(-100.0..100.0f64, 1..64),
        level in -100.0..100.0f64,
    ) {
        let field = GridField::new(vec![values.len()], values.clone()).unwrap();
        let sup = ecshape::cubical::threshold_mask(&field, level, Direction::Superlevel);
        let sub = ecshape::cubical::threshold_mask(&field, level, Direction::Sublevel);
        for (i, &v) in values.iter().enumerate() {
            if v == level {
                prop_assert!(sup[i] && sub[i]);
            } else {
                prop_assert_ne!(sup[i], sub[i]);
            }
        }
    }

    #[test]
    fn graph_construction_never_accepts_invalid_edges(
        n in 1..20usize,
        raw_edges in prop::collection::vec((0..25usize, 0..25usize), 0..40),
    ) {
        match WeightedGraph::new(n, raw_edges.clone(), None, None) {
            Ok(g) => {
                prop_assert_eq!(g.edge_count(), raw_edges.len());
                let mut seen = std::collections::HashSet::new();
                for &(a, b) in g.edges() {
                    prop_assert!(a < b && b < n);
                    prop_assert!(seen.insert((a, b)));
                }
            }
            Err(e) => {
                use ecshape::Error::*;
                let expected = matches!(e, SelfLoop(_) | DuplicateEdge(..) | IndexOutOfRange { .. });
                prop_assert!(expected, "unexpected error {:?}", e);
            }
        }
    }
}
