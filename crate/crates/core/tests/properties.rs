use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use orbifano::intersection::GradedRingContext;
use orbifano::lattice::{int, smith_normal_form, Int, IntMatrix};
use orbifano::mmp::{apply, edge_is_consistent, enumerate_tree, ContractionType, MMPState, Mode};
use orbifano::polygon::{face_fan, singularity_content, toric_degree, FanoPolygon, Point};
use orbifano::registry::Registry;
use orbifano::sections::monomial_basis;
use orbifano::singularity::{is_class_t, CyclicQuotient};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..4, 1usize..5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..7, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_round_trip(rows in matrix()) {
        let m = IntMatrix::from_vecs(&rows);
        let f = smith_normal_form(&m);
        prop_assert_eq!(f.u.mul(&m).mul(&f.v), f.s.clone());
        prop_assert!(f.u.det().abs() == int(1) && f.v.det().abs() == int(1));
        let d = f.diagonal();
        for w in d.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert_eq!(d.len(), m.rank());
    }

    #[test]
    fn monomial_basis_matches_brute_force(
        w in prop::collection::vec(1i64..4, 2..5),
        top in prop::collection::vec(0i64..3, 2..5),
        deg in 0i64..7,
    ) {
        // two gradings: weights w and a second row; positive first row keeps it finite
        let n = w.len().min(top.len());
        let d = IntMatrix::from_vecs(&[w[..n].to_vec(), top[..n].to_vec()]);
        for second in 0..4i64 {
            let class = vec![int(deg), int(second)];
            let got: BTreeSet<Vec<Int>> = monomial_basis(&d, &class).unwrap().into_iter().collect();
            let mut want = BTreeSet::new();
            let bound = deg as usize + 1;
            let mut e = vec![0usize; n];
            loop {
                let ev: Vec<Int> = e.iter().map(|&x| int(x as i64)).collect();
                if d.mul_vec(&ev) == class {
                    want.insert(ev);
                }
                let mut i = 0;
                while i < n && e[i] + 1 == bound { e[i] = 0; i += 1; }
                if i == n { break; }
                e[i] += 1;
            }
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn polygon_invariants_are_gl2_invariant(id in 1u32..27, a in -2i64..3, b in -2i64..3, flip in any::<bool>()) {
        let reg = Registry::embedded().unwrap();
        let rec = reg.polygon(id).unwrap();
        let pts: Vec<Point> = rec.vertices.iter().map(|v| (v[0], v[1])).collect();
        // shear by a, then b transposed, optionally reflect: all in GL2(Z)
        let g = |p: Point| {
            let (x, y) = (p.0 + a * p.1, p.1);
            let (x, y) = (x, y + b * x);
            if flip { (y, x) } else { (x, y) }
        };
        let moved: Vec<Point> = pts.iter().map(|&p| g(p)).collect();
        let p = FanoPolygon::new(&pts).unwrap();
        let q = FanoPolygon::new(&moved).unwrap();
        let (cp, cq) = (singularity_content(&p).unwrap(), singularity_content(&q).unwrap());
        prop_assert_eq!(cp.n, cq.n);
        prop_assert_eq!(cp.basket.to_string(), cq.basket.to_string());
        prop_assert_eq!(toric_degree(&face_fan(&p)).unwrap(), toric_degree(&face_fan(&q)).unwrap());
    }

    #[test]
    fn intersection_is_multilinear(
        a in prop::collection::vec(-3i64..4, 2),
        b in prop::collection::vec(-3i64..4, 2),
        c in prop::collection::vec(-3i64..4, 2),
        s in -3i64..4,
        t in -3i64..4,
    ) {
        // worked example ring: weights (1,1,2,1,0,0 / 0,0,1,2,1,1), omega (1,1)
        let d = IntMatrix::from_i64(&[&[1, 1, 2, 1, 0, 0], &[0, 0, 1, 2, 1, 1]]);
        let ctx = GradedRingContext::from_weights(&d, &[int(1), int(1)]).unwrap();
        let v = |x: &[i64]| x.iter().map(|&y| int(y)).collect::<Vec<Int>>();
        let comb: Vec<i64> = (0..2).map(|i| s * a[i] + t * b[i]).collect();
        let top = |first: Vec<Int>| ctx.top_intersection(&[first, v(&c), v(&c), v(&a)]).unwrap();
        let lhs = top(v(&comb));
        let rhs = top(v(&a)) * num_rational::BigRational::from_integer(int(s))
            + top(v(&b)) * num_rational::BigRational::from_integer(int(t));
        prop_assert_eq!(lhs, rhs);
        // symmetric in its arguments
        prop_assert_eq!(
            ctx.top_intersection(&[v(&a), v(&b), v(&c), v(&c)]).unwrap(),
            ctx.top_intersection(&[v(&c), v(&b), v(&a), v(&c)]).unwrap()
        );
    }

    #[test]
    fn class_t_family(d in 1i64..5, n in 2i64..6, a in 1i64..8) {
        // 1/dn^2(1, dna - 1) is of class T whenever gcd(n, a) = 1
        prop_assume!(num_integer::gcd(n, a) == 1);
        let r = d * n * n;
        let q = (d * n * a - 1).rem_euclid(r);
        prop_assume!(q > 0 && num_integer::gcd(q, r) == 1);
        prop_assert!(is_class_t(CyclicQuotient::new(r, q).unwrap()));
    }

    #[test]
    fn one_third_is_not_class_t(r in 2i64..40) {
        // 1/r(1,1) is class T only for r = 4 (r | 4)
        prop_assert_eq!(is_class_t(CyclicQuotient::new(r, 1).unwrap()), r == 2 || r == 4);
    }

    #[test]
    fn mmp_edges_keep_bookkeeping(k in 0u32..7, n2 in 0u32..4, n1 in 0u32..7, rho in 1i64..12) {
        let k2y = num_rational::BigRational::from_integer(int(10 - rho));
        let Ok(s) = MMPState::new(k, n2, n1, rho, k2y) else { return Ok(()) };
        for t in [ContractionType::E1, ContractionType::E2, ContractionType::E3,
                  ContractionType::E4, ContractionType::E5, ContractionType::E6] {
            if let Ok(next) = apply(&s, t) {
                prop_assert!(edge_is_consistent(&s, &next), "{} -{}-> {}", s, t, next);
                prop_assert!(next.k + 2 * next.n2 + next.n1 <= 6);
            }
        }
        if let Ok(tree) = enumerate_tree(&s, Mode::Raw, &[]) {
            for (a, _, b) in tree.edges() {
                prop_assert!(edge_is_consistent(&a, &b));
                prop_assert!(b.degree() > a.degree() && b.degree().is_positive());
            }
        }
    }
}
