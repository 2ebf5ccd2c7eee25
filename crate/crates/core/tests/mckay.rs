use std::sync::OnceLock;

use mereon::goldfield::{GoldenNum, OrderedField};
use mereon::mckay::*;
use mereon::quatgroup::{build_2i, build_2o, build_2t, BinaryGroup};
use proptest::prelude::*;

fn two_i() -> &'static BinaryGroup<GoldenNum> {
    static G: OnceLock<BinaryGroup<GoldenNum>> = OnceLock::new();
    G.get_or_init(|| build_2i().unwrap())
}

fn cycle(n: usize) -> Vec<Vec<u32>> {
    let mut a = vec![vec![0; n]; n];
    for i in 0..n {
        a[i][(i + 1) % n] = 1;
        a[(i + 1) % n][i] = 1;
    }
    a
}

fn adjacency(d: Diagram) -> Vec<Vec<u32>> {
    let n = d.nodes();
    let mut a = vec![vec![0; n]; n];
    for (i, j) in d.edges() {
        a[i][j] = 1;
        a[j][i] = 1;
    }
    a
}

#[test]
fn class_algebra_of_2t() {
    let g = build_2t::<GoldenNum>().unwrap();
    let data = class_algebra(&g);
    assert_eq!(data.len(), 7);
    assert_eq!(data.sizes().iter().sum::<usize>(), 24);
    let e = data.identity_class;
    for j in 0..7 {
        for k in 0..7 {
            assert_eq!(data.coefficients[e][j][k], u64::from(j == k));
        }
    }
    assert!(data.counting_identity_holds());
    assert!(data.class_matrices_commute());
}

#[test]
fn class_coefficients_match_brute_force() {
    let g = build_2t::<GoldenNum>().unwrap();
    let data = class_algebra(&g);
    let class_of = g.class_of(&data.classes);
    // count over all ordered pairs and every member of C_k, then divide
    for i in 0..7 {
        for j in 0..7 {
            for k in 0..7 {
                let mut n = 0u64;
                for &x in &data.classes[i].members {
                    for &y in &data.classes[j].members {
                        if class_of[g.mul(x, y)] == k {
                            n += 1;
                        }
                    }
                }
                assert_eq!(n, data.coefficients[i][j][k] * data.classes[k].size() as u64);
            }
        }
    }
}

#[test]
fn character_table_of_2i() {
    let data = class_algebra(two_i());
    let t = character_table(&data, DEFAULT_SEED).unwrap();
    assert_eq!(t.dims, vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    assert_eq!(t.dims_squared_sum(), 120);
    assert!(t.dim_residual < 1e-6);
    assert!(t.row_orthogonality_error(&data) < 1e-9);
    assert!(t.column_orthogonality_error(&data) < 1e-9);
    for z in &t.entries[0] {
        assert!((z - 1.0).norm() < 1e-9);
    }
    // the defining character is an irrep: χ = 2w, 1 on the w = ½ classes
    let defining = t
        .entries
        .iter()
        .find(|row| row.iter().zip(&data.defining_trace).all(|(z, &tr)| (z - tr).norm() < 1e-9))
        .expect("2w is irreducible");
    let half = GoldenNum::from_ratio(1, 2);
    for (c, cls) in data.classes.iter().enumerate() {
        if two_i().element(cls.representative()).w == half {
            assert!((defining[c] - 1.0).norm() < 1e-9);
        }
    }
}

#[test]
fn character_tables_of_2t_and_2o() {
    let (d, t, _) = analyse(&build_2t::<GoldenNum>().unwrap(), DEFAULT_SEED).unwrap();
    assert_eq!(t.dims, vec![1, 1, 1, 2, 2, 2, 3]);
    assert!(t.row_orthogonality_error(&d) < 1e-9);
    let (d, t, _) = analyse(&build_2o().unwrap(), DEFAULT_SEED).unwrap();
    assert_eq!(d.len(), 8);
    assert_eq!(t.dims, vec![1, 1, 2, 2, 2, 3, 3, 4]);
    assert!(t.column_orthogonality_error(&d) < 1e-9);
}

#[test]
fn mckay_graphs_are_affine_e() {
    let cases = [
        (analyse(&build_2t::<GoldenNum>().unwrap(), DEFAULT_SEED).unwrap().2, AdeLabel::AffineE6, 7, Diagram::E(6)),
        (analyse(&build_2o().unwrap(), DEFAULT_SEED).unwrap().2, AdeLabel::AffineE7, 8, Diagram::E(7)),
        (analyse(two_i(), DEFAULT_SEED).unwrap().2, AdeLabel::AffineE8, 9, Diagram::E(8)),
    ];
    for (g, label, nodes, finite) in cases {
        assert_eq!(g.label, label);
        assert_eq!(g.adjacency.len(), nodes);
        assert!(g.is_symmetric());
        assert!(g.is_connected());
        assert!(g.max_residual < 1e-6);
        assert!(g.affine_kernel_residual() < 1e-6);
        assert!(g.adjacency.iter().flatten().all(|&a| a <= 1));
        assert_eq!(g.dims[0], 1);
        assert_eq!(identify_diagram(&g.without(0)), Some(finite));
    }
}

#[test]
fn e8_degree_census() {
    let g = analyse(two_i(), DEFAULT_SEED).unwrap().2;
    let mut deg = g.degrees();
    deg.sort_unstable();
    // a tree on 9 nodes: degree sum 16, three leg ends
    assert_eq!(deg.iter().sum::<u32>(), 16);
    assert_eq!(deg, vec![1, 1, 1, 2, 2, 2, 2, 2, 3]);
    // the branch node is the 6-dimensional irrep
    let branch = g.degrees().iter().position(|&d| d == 3).unwrap();
    assert_eq!(g.dims[branch], 6);
}

#[test]
fn classification_templates() {
    assert_eq!(ade_classify(&adjacency(Diagram::AffineE(8))), AdeLabel::AffineE8);
    assert_eq!(ade_classify(&adjacency(Diagram::AffineE(7))), AdeLabel::AffineE7);
    assert_eq!(ade_classify(&adjacency(Diagram::AffineE(6))), AdeLabel::AffineE6);
    assert_eq!(ade_classify(&cycle(6)), AdeLabel::Other(Some(Diagram::AffineA(5))));
    for d in [Diagram::A(5), Diagram::D(5), Diagram::E(6), Diagram::E(7), Diagram::E(8), Diagram::AffineD(6)] {
        assert_eq!(identify_diagram(&adjacency(d)), Some(d));
    }
    // E8 and Â8 have 9 nodes too but different shapes
    assert_ne!(ade_classify(&cycle(9)), AdeLabel::AffineE8);
    let mut with_loop = cycle(4);
    with_loop[0][0] = 1;
    assert_eq!(ade_classify(&with_loop), AdeLabel::Other(None));
}

#[test]
fn exports_are_deterministic() {
    let (d, t, g) = analyse(two_i(), DEFAULT_SEED).unwrap();
    let (d2, t2, g2) = analyse(two_i(), DEFAULT_SEED).unwrap();
    assert_eq!(t.to_csv(&d), t2.to_csv(&d2));
    assert_eq!(g.to_dot(), g2.to_dot());
    assert_eq!(serde_json::to_string(&t).unwrap(), serde_json::to_string(&t2).unwrap());
    assert_eq!(g.to_dot().matches(" -- ").count(), 8);
    assert_eq!(g.to_csv().lines().count(), 10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn any_seed_gives_the_same_graph(seed in any::<u64>()) {
        let data = class_algebra(two_i());
        let t = character_table(&data, seed).unwrap();
        prop_assert_eq!(&t.dims, &vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
        let g = mckay_graph(&data, &t).unwrap();
        prop_assert_eq!(g.label, AdeLabel::AffineE8);
    }
}

#[test]
fn trace_is_twice_w() {
    let data = class_algebra(two_i());
    for (c, cls) in data.classes.iter().enumerate() {
        let w = two_i().element(cls.representative()).w.to_f64();
        assert_eq!(data.defining_trace[c], 2.0 * w);
    }
}
