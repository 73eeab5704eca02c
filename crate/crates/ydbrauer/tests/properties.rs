//! Property tests for the exact linear algebra layer and the structural
//! laws that the algebraic constructions promise: composition and Kronecker
//! identities, canonical scalar forms over Q, the group law on
//! automorphism pairs, associativity of smash products, and naturality of
//! the braiding.

use proptest::prelude::*;

use ydbrauer::algebra::{diagonal_algebra, smash};
use ydbrauer::endo::{end_algebra, is_h_azumaya};
use ydbrauer::hopf::{
    cyclic_group_table, cyclic_labels, group_algebra, sweedler, sweedler_phi, AutPair,
};
use ydbrauer::linalg::{FieldSpec, LinearMapExact, MatrixExact};
use ydbrauer::monoidal::braiding;
use ydbrauer::yd::{build_h_alpha_beta, check_yd, YDMorphism};

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn matrix_strategy(p: u64, rows: usize, cols: usize) -> impl Strategy<Value = MatrixExact> {
    prop::collection::vec(0..p as i64, rows * cols).prop_map(move |entries| {
        let f = gf(p);
        MatrixExact::from_fn(f, rows, cols, |i, j| f.from_i64(entries[i * cols + j])).unwrap()
    })
}

fn map_strategy(p: u64, rows: usize, cols: usize) -> impl Strategy<Value = LinearMapExact> {
    matrix_strategy(p, rows, cols).prop_map(LinearMapExact::new)
}

fn chain_strategy(
    p: u64,
) -> impl Strategy<Value = (LinearMapExact, LinearMapExact, LinearMapExact)> {
    (1usize..=4, 1usize..=4, 1usize..=4, 1usize..=4).prop_flat_map(move |(a, b, c, d)| {
        (map_strategy(p, a, b), map_strategy(p, b, c), map_strategy(p, c, d))
    })
}

proptest! {
    #[test]
    fn composition_is_associative((f, g, h) in chain_strategy(5)) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #[test]
    fn tensor_map_interchanges_with_composition(
        f1 in map_strategy(5, 3, 2),
        f2 in map_strategy(5, 2, 3),
        g1 in map_strategy(5, 2, 4),
        g2 in map_strategy(5, 4, 2),
    ) {
        let left = f1.compose(&f2).unwrap().tensor_map(&g1.compose(&g2).unwrap());
        let right = f1.tensor_map(&g1).compose(&f2.tensor_map(&g2)).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #[test]
    fn rank_is_transpose_invariant(m in matrix_strategy(7, 4, 3)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }
}

proptest! {
    #[test]
    fn kron_entries_and_mixed_product(
        a in matrix_strategy(5, 2, 3),
        b in matrix_strategy(5, 3, 2),
        c in matrix_strategy(5, 3, 2),
        d in matrix_strategy(5, 2, 3),
    ) {
        // Entry formula straight from the definition.
        let k = a.kron(&b);
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                for r in 0..b.rows() {
                    for s in 0..b.cols() {
                        let expect = gf(5).mul(&a.get(i, j), &b.get(r, s)).unwrap();
                        prop_assert_eq!(k.get(i * b.rows() + r, j * b.cols() + s), expect);
                    }
                }
            }
        }
        // (A (x) B)(C (x) D) = AC (x) BD.
        let left = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let right = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #[test]
    fn rational_arithmetic_stays_canonical(
        an in -30i64..30, ad in 1i64..30,
        bn in -30i64..30, bd in 1i64..30,
    ) {
        let q = FieldSpec::rationals();
        let a = q.parse_scalar(&format!("{an}/{ad}")).unwrap();
        let b = q.parse_scalar(&format!("{bn}/{bd}")).unwrap();
        let sum = q.add(&a, &b).unwrap();
        let prod = q.mul(&a, &b).unwrap();
        prop_assert!(sum.is_canonical(&q));
        prop_assert!(prod.is_canonical(&q));
        // Display round-trips through the parser.
        prop_assert_eq!(&q.parse_scalar(&sum.to_string()).unwrap(), &sum);
        prop_assert_eq!(&q.parse_scalar(&prod.to_string()).unwrap(), &prod);
        // Cross-multiplied oracle for the sum.
        let oracle = q
            .parse_scalar(&format!("{}/{}", an * bd + bn * ad, ad * bd))
            .unwrap();
        prop_assert_eq!(&sum, &oracle);
        if !b.is_zero() {
            let back = q.mul(&prod, &q.inv(&b).unwrap()).unwrap();
            prop_assert_eq!(&back, &a);
        }
    }
}

proptest! {
    #[test]
    fn sweedler_phi_is_a_group_homomorphism(l in 1u64..5, m in 1u64..5) {
        let h = sweedler(5).unwrap();
        let composed = sweedler_phi(&h, l)
            .unwrap()
            .compose(&sweedler_phi(&h, m).unwrap())
            .unwrap();
        let direct = sweedler_phi(&h, (l * m) % 5).unwrap();
        prop_assert_eq!(composed.matrix(), direct.matrix());
    }
}

proptest! {
    #[test]
    fn pair_multiplication_is_a_group_law(
        a1 in 1u64..5, b1 in 1u64..5,
        a2 in 1u64..5, b2 in 1u64..5,
        a3 in 1u64..5, b3 in 1u64..5,
    ) {
        let h = sweedler(5).unwrap();
        let pair = |a, b| {
            AutPair::new(sweedler_phi(&h, a).unwrap(), sweedler_phi(&h, b).unwrap()).unwrap()
        };
        let (p, q, r) = (pair(a1, b1), pair(a2, b2), pair(a3, b3));
        let left = p.multiply(&q).unwrap().multiply(&r).unwrap();
        let right = p.multiply(&q.multiply(&r).unwrap()).unwrap();
        prop_assert_eq!(left.alpha().matrix(), right.alpha().matrix());
        prop_assert_eq!(left.beta().matrix(), right.beta().matrix());

        let e = AutPair::identity(h.clone());
        prop_assert!(p.multiply(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().multiply(&p).unwrap().is_identity());
        let pe = p.multiply(&e).unwrap();
        prop_assert_eq!(pe.alpha().matrix(), p.alpha().matrix());
        prop_assert_eq!(pe.beta().matrix(), p.beta().matrix());
    }
}

proptest! {
    #[test]
    fn braiding_is_natural_in_diagonal_morphisms(
        fa in 0i64..5, fb in 0i64..5,
        ga in 0i64..5, gb in 0i64..5,
    ) {
        // Over kC2 the regular identity-pair module has exactly the
        // diagonal matrices as endomorphisms in the category.
        let h = group_algebra(gf(5), &cyclic_group_table(2), Some(cyclic_labels(2))).unwrap();
        let m = build_h_alpha_beta(&AutPair::identity(h.clone())).unwrap();
        let diag = |x: i64, y: i64| {
            let f = gf(5);
            let mat = MatrixExact::from_fn(f, 2, 2, |i, j| {
                if i != j {
                    f.zero()
                } else if i == 0 {
                    f.from_i64(x)
                } else {
                    f.from_i64(y)
                }
            })
            .unwrap();
            YDMorphism::new(m.clone(), m.clone(), mat).unwrap()
        };
        let f = diag(fa, fb);
        let g = diag(ga, gb);
        prop_assert!(f.is_morphism() && g.is_morphism());
        let c = braiding(&m, &m).unwrap();
        let lhs = c.map().compose(&f.map().tensor_map(g.map())).unwrap();
        let rhs = g.map().tensor_map(f.map()).compose(c.map()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

/// The braiding on an identity-pair module solves the Yang-Baxter
/// equation on the triple tensor power.
#[test]
fn braiding_satisfies_yang_baxter() {
    for h in [
        group_algebra(gf(5), &cyclic_group_table(2), Some(cyclic_labels(2))).unwrap(),
        sweedler(5).unwrap(),
    ] {
        let m = build_h_alpha_beta(&AutPair::identity(h.clone())).unwrap();
        let d = m.dim();
        let c = braiding(&m, &m).unwrap().map().matrix().clone();
        let id = MatrixExact::identity(h.field(), d);
        let c12 = c.kron(&id);
        let c23 = id.kron(&c);
        let left = c12.mul(&c23).unwrap().mul(&c12).unwrap();
        let right = c23.mul(&c12).unwrap().mul(&c23).unwrap();
        assert_eq!(left, right);
    }
}

/// Smash products associate bit-exactly on a mixed bag of algebras.
#[test]
fn smash_product_is_associative() {
    let h = sweedler(5).unwrap();
    let pair = |a, b| {
        AutPair::new(sweedler_phi(&h, a).unwrap(), sweedler_phi(&h, b).unwrap()).unwrap()
    };
    let algebras = [
        diagonal_algebra(&h, 1).unwrap(),
        diagonal_algebra(&h, 2).unwrap(),
        end_algebra(&build_h_alpha_beta(&pair(2, 3)).unwrap()).unwrap(),
    ];
    for a in &algebras {
        for b in &algebras {
            for c in &algebras {
                if a.dim() * b.dim() * c.dim() > 64 {
                    continue;
                }
                let left = smash(&smash(a, b).unwrap(), c).unwrap();
                let right = smash(a, &smash(b, c).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }
}

/// The whole pipeline stays exact over the rationals, not just GF(p).
#[test]
fn rational_field_end_to_end() {
    let q = FieldSpec::rationals();
    let h = group_algebra(q, &cyclic_group_table(3), Some(cyclic_labels(3))).unwrap();
    assert!(ydbrauer::hopf::verify_hopf(&h).passed());
    let m = build_h_alpha_beta(&AutPair::identity(h.clone())).unwrap();
    assert!(check_yd(&m).unwrap().passed());
    let end = end_algebra(&m).unwrap();
    assert!(is_h_azumaya(&end).unwrap());
    assert!(!is_h_azumaya(&diagonal_algebra(&h, 2).unwrap()).unwrap());
}
