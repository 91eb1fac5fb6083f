use mincm::homology::boundary_matrices;
use mincm::io::{parse_auto, parse_plain, to_json, to_plain};
use mincm::linalg::SparseMatrix;
use mincm::{
    depth, depth_via_skeletons, dual_ideal, has_linear_quotients, has_linear_resolution, is_acyclic, is_cm,
    is_l_fold_acyclic, is_minimal_cm, reduced_homology, ridge_bound_check, satisfies_serre, Face, FieldSpec,
    RidgeBoundCheck, SimplicialComplex,
};
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rational;

fn complex_from_masks(n: usize, masks: &[u32]) -> SimplicialComplex {
    let facets: Vec<Face> = masks
        .iter()
        .map(|m| Face::new((0..n as u32).filter(|v| m & (1 << v) != 0).collect()))
        .collect();
    SimplicialComplex::from_id_facets(n, facets).unwrap()
}

fn arb_complex(max_n: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (3..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1u32..(1u32 << n), 1..=max_facets).prop_map(move |m| complex_from_masks(n, &m))
    })
}

/// Pure complexes: facets of one size.
fn arb_pure(max_n: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (3..=max_n).prop_flat_map(move |n| {
        (1..n.min(4) + 1).prop_flat_map(move |d| {
            prop::collection::vec(prop::sample::subsequence((0..n as u32).collect::<Vec<_>>(), d), 1..=max_facets)
                .prop_map(move |fs| SimplicialComplex::from_id_facets(n, fs.into_iter().map(Face::new).collect()).unwrap())
        })
    })
}

fn f_poly(c: &SimplicialComplex) -> Vec<i64> {
    c.f_vector().0.iter().map(|&x| x as i64).collect()
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn boundary_squares_to_zero_and_ranks_add_up(c in arb_complex(7, 8)) {
        for field in [Q, FieldSpec::GF2, FieldSpec::GF3] {
            let mats = boundary_matrices(&c, field).unwrap();
            for w in mats.windows(2) {
                prop_assert!(w[0].matrix.multiply(&w[1].matrix).is_zero_over(field));
            }
            for m in &mats {
                prop_assert_eq!(m.matrix.rank_sparse(field), m.matrix.rank_dense(field));
            }
            // rank + nullity = number of columns, summed over the chain complex
            let faces: u64 = c.f_vector().0.iter().sum();
            let ranks: usize = mats.iter().map(|m| m.rank()).sum();
            let betti: usize = reduced_homology(&c, field).0.iter().sum();
            prop_assert_eq!(betti as u64, faces - 2 * ranks as u64);
        }
    }

    #[test]
    fn euler_poincare_and_top_h_entry(c in arb_complex(7, 8)) {
        for field in [Q, FieldSpec::GF2] {
            prop_assert_eq!(reduced_homology(&c, field).euler(), c.f_vector().reduced_euler());
        }
        let d = c.d();
        let h = c.h_vector().unwrap().0;
        let sign = if d % 2 == 1 { 1 } else { -1 };
        prop_assert_eq!(h[d], sign * c.reduced_euler_characteristic());
    }

    #[test]
    fn large_prime_agrees_with_rationals(c in arb_complex(7, 8)) {
        let p = FieldSpec::prime(1009).unwrap();
        prop_assert_eq!(reduced_homology(&c, p), reduced_homology(&c, Q));
    }

    #[test]
    fn depth_routes_agree(c in arb_complex(7, 8)) {
        for field in [Q, FieldSpec::GF2] {
            prop_assert_eq!(depth(&c, field).unwrap(), depth_via_skeletons(&c, field).unwrap());
            prop_assert_eq!(is_cm(&c, field).is_cm, depth(&c, field).unwrap() == c.d());
        }
    }

    #[test]
    fn cm_implies_every_serre_condition(c in arb_complex(7, 8)) {
        if is_cm(&c, Q).is_cm {
            for l in 1..=c.d() + 1 {
                prop_assert!(satisfies_serre(&c, Q, l).unwrap());
            }
        }
        if satisfies_serre(&c, Q, 2).unwrap() {
            prop_assert!(c.is_pure());
        }
    }

    #[test]
    fn alexander_dual_is_an_involution(c in arb_complex(7, 8), extra in 0usize..2) {
        let n = c.n() + extra;
        let dual = c.alexander_dual(n).unwrap();
        let back = dual.alexander_dual(n).unwrap();
        let widened = c.with_universe(n);
        prop_assert_eq!(back.facets(), widened.facets());
    }

    #[test]
    fn link_of_link_is_link_of_union(c in arb_complex(6, 6), pick in any::<prop::sample::Index>(), pick2 in any::<prop::sample::Index>()) {
        let faces: Vec<Face> = c.faces_by_size().into_iter().flatten().collect();
        let sigma = pick.get(&faces).clone();
        let lk = c.link(&sigma).unwrap();
        let inner: Vec<Face> = lk.faces_by_size().into_iter().flatten().collect();
        let tau = pick2.get(&inner).clone();
        let lhs = lk.link(&tau).unwrap();
        let tau_in_c = c.face_from_labels(&lk.face_labels(&tau)).unwrap();
        let rhs = c.link(&sigma.union(&tau_in_c)).unwrap();
        let as_labels = |x: &SimplicialComplex| {
            let mut v: Vec<Vec<String>> = x.facets().iter().map(|f| x.face_labels(f)).collect();
            v.sort();
            v
        };
        prop_assert_eq!(as_labels(&lhs), as_labels(&rhs));
    }

    #[test]
    fn join_multiplies_f_polynomials(a in arb_complex(5, 4), b in arb_complex(5, 4)) {
        let j = a.join(&b);
        prop_assert_eq!(f_poly(&j), poly_mul(&f_poly(&a), &f_poly(&b)));
    }

    #[test]
    fn remove_then_add_round_trips(c in arb_complex(7, 8), pick in any::<prop::sample::Index>()) {
        let f = pick.get(c.facets()).clone();
        let back = c.remove_facet(&f).unwrap().add_facet(&f).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn formats_round_trip(c in arb_complex(7, 8)) {
        let plain = to_plain(&c);
        prop_assert_eq!(to_plain(&parse_plain(&plain).unwrap().complex), plain.clone());
        let json = to_json(&c);
        let again = parse_auto(&json).unwrap();
        prop_assert_eq!(to_json(&again), json);
        prop_assert_eq!(again.facets(), c.facets());
    }

    #[test]
    fn fast_path_agrees_with_brute_force(c in arb_pure(7, 10)) {
        for field in [Q, FieldSpec::GF2] {
            let fast = is_minimal_cm(&c, field, true);
            let brute = is_minimal_cm(&c, field, false);
            prop_assert_eq!(fast.is_minimal, brute.is_minimal);
            if brute.is_minimal && !c.is_void() {
                prop_assert!(is_acyclic(&c, field));
            }
        }
    }

    #[test]
    fn ridge_bound_certificates_are_sound(c in arb_pure(7, 10)) {
        for f in c.facets() {
            if let RidgeBoundCheck::Certified { h_top, .. } = ridge_bound_check(&c, Q, f).unwrap() {
                prop_assert_eq!(h_top, -1);
                prop_assert!(!is_cm(&c.remove_facet(f).unwrap(), Q).is_cm);
            }
        }
    }

    #[test]
    fn l_fold_acyclicity_is_monotone(c in arb_complex(6, 6)) {
        let mut prev = true;
        for l in 1..=c.d() + 1 {
            let now = is_l_fold_acyclic(&c, Q, l).unwrap();
            prop_assert!(prev || !now);
            prev = now;
        }
    }

    #[test]
    fn linear_quotients_imply_linear_resolution(c in arb_pure(6, 8)) {
        if c.facets().iter().any(|f| f.len() == c.n()) {
            return Ok(());
        }
        let ideal = dual_ideal(&c, c.n()).unwrap();
        if has_linear_quotients(&ideal).unwrap().is_some() {
            prop_assert!(has_linear_resolution(&ideal, Q).unwrap());
        }
    }

    #[test]
    fn dense_and_sparse_rank_agree(rows in 1usize..9, cols in 1usize..9, entries in prop::collection::vec(-3i64..=3, 81)) {
        let mut m = SparseMatrix::zeros(rows, cols);
        for c in 0..cols {
            for r in 0..rows {
                let x = entries[c * 9 + r];
                if x != 0 {
                    m.columns[c].push((r, x));
                }
            }
        }
        for field in [Q, FieldSpec::GF2, FieldSpec::GF3, FieldSpec::prime(101).unwrap()] {
            prop_assert_eq!(m.rank_sparse(field), m.rank_dense(field));
        }
    }
}
