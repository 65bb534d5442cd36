use graded_hilbert::exact::{det_int, det_poly, gcd_primitive, reduce};
use graded_hilbert::hilbert::hilbert_components;
use graded_hilbert::oracle::tensor_dimensions;
use graded_hilbert::{hilbert_identity, DimVector, Group, IntPoly};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn small_group() -> impl Strategy<Value = Group> {
    prop_oneof![
        (1usize..=8).prop_map(|n| Group::cyclic(n).unwrap()),
        (2usize..=4).prop_map(|n| Group::dihedral(n).unwrap()),
        Just(Group::symmetric(3).unwrap()),
        Just(Group::direct_product(&Group::cyclic(2).unwrap(), &Group::cyclic(2).unwrap()).unwrap()),
    ]
}

fn group_and_dims() -> impl Strategy<Value = (Group, Vec<u64>)> {
    small_group().prop_flat_map(|g| {
        let s = g.order();
        (Just(g), prop::collection::vec(0u64..=3, s))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(5), b in poly(5), c in poly(5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(5), b in nonzero_poly(4)) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(2)) {
        let (x, y) = (&a * &c, &b * &c);
        let g = gcd_primitive(&x, &y);
        prop_assert!(x.div_exact(&g).is_some());
        prop_assert!(y.div_exact(&g).is_some());
        // The planted factor survives up to content.
        prop_assert!(g.div_exact(&c.primitive_part()).is_some());
    }

    #[test]
    fn reduce_is_idempotent(a in poly(5), b in nonzero_poly(5)) {
        let f = reduce(&a, &b);
        let again = reduce(f.num(), f.den());
        prop_assert_eq!(again.num(), f.num());
        prop_assert_eq!(again.den(), f.den());
        prop_assert_eq!(&f, &again);
    }

    #[test]
    fn expansion_times_denominator_is_numerator(a in poly(4), tail in poly(3)) {
        let den = &IntPoly::one() + &tail.shift(1);
        let f = reduce(&a, &den).with_unit_constant_denominator();
        let n = 12;
        let prefix = IntPoly::new(f.expand(n).unwrap().coeffs);
        prop_assert_eq!((&prefix * f.den()).truncated(n), f.num().truncated(n));
    }

    #[test]
    fn det_poly_agrees_with_pointwise(
        entries in prop::collection::vec(prop::collection::vec(-4i64..=4, 2), 16),
        point in -5i64..=5,
    ) {
        let m: Vec<Vec<IntPoly>> =
            entries.chunks(4).map(|row| row.iter().map(|c| IntPoly::from_i64s(c)).collect()).collect();
        let det = det_poly(&m, 4).unwrap();
        let v = BigInt::from(point);
        let evaluated: Vec<Vec<BigInt>> =
            m.iter().map(|row| row.iter().map(|e| e.eval_int(&v)).collect()).collect();
        prop_assert_eq!(det.eval_int(&v), det_int(&evaluated).unwrap());
    }

    #[test]
    fn cayley_round_trip(g in small_group()) {
        let again = Group::from_cayley_table(g.table().to_vec(), Some(g.labels().to_vec())).unwrap();
        prop_assert_eq!(again.table(), g.table());
        prop_assert_eq!(again.labels(), g.labels());
    }

    #[test]
    fn relabeling_fixing_identity_preserves_series((g, dims) in group_and_dims(), seed in any::<u64>()) {
        // Conjugate the table by a permutation that fixes 0.
        let s = g.order();
        let mut perm: Vec<usize> = (0..s).collect();
        let mut state = seed;
        for i in (2..s).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = 1 + (state >> 33) as usize % i;
            perm.swap(i, j);
        }
        let mut table = vec![vec![0; s]; s];
        for a in 0..s {
            for b in 0..s {
                table[perm[a]][perm[b]] = perm[g.mul(a, b)];
            }
        }
        let h = Group::from_cayley_table(table, None).unwrap();
        let mut moved = vec![0; s];
        for a in 0..s {
            moved[perm[a]] = dims[a];
        }
        let p = hilbert_identity(&g, &DimVector::for_group(&g, dims).unwrap()).unwrap();
        let q = hilbert_identity(&h, &DimVector::for_group(&h, moved).unwrap()).unwrap();
        prop_assert_eq!(p.series, q.series);
    }

    #[test]
    fn inverting_grades_preserves_series((g, dims) in group_and_dims()) {
        // Reversing words while inverting grades maps (V^{⊗n})_e onto itself.
        let inverted: Vec<u64> = (0..g.order()).map(|x| dims[g.inv(x)]).collect();
        let p = hilbert_identity(&g, &DimVector::for_group(&g, dims).unwrap()).unwrap();
        let q = hilbert_identity(&g, &DimVector::for_group(&g, inverted).unwrap()).unwrap();
        prop_assert_eq!(p.series, q.series);
    }

    #[test]
    fn oracle_monotone_in_dims((g, dims) in group_and_dims(), bump in any::<prop::sample::Index>()) {
        let mut larger = dims.clone();
        larger[bump.index(dims.len())] += 1;
        let a = tensor_dimensions(&g, &DimVector::for_group(&g, dims).unwrap(), 10).unwrap();
        let b = tensor_dimensions(&g, &DimVector::for_group(&g, larger).unwrap(), 10).unwrap();
        for (ra, rb) in a.rows().iter().zip(b.rows()) {
            for (x, y) in ra.iter().zip(rb) {
                prop_assert!(x <= y);
            }
        }
    }

    #[test]
    fn oracle_rows_partition_powers((g, dims) in group_and_dims()) {
        let dv = DimVector::for_group(&g, dims).unwrap();
        let d = BigInt::from(dv.total());
        let table = tensor_dimensions(&g, &dv, 15).unwrap();
        let mut power = BigInt::from(1);
        for row in table.rows() {
            let sum = row.iter().fold(BigInt::zero(), |acc, v| acc + v);
            prop_assert_eq!(sum, power.clone());
            power *= &d;
        }
    }

    #[test]
    fn components_partition_geometric_series((g, dims) in group_and_dims()) {
        let dv = DimVector::for_group(&g, dims).unwrap();
        let d = BigInt::from(dv.total());
        let sum = hilbert_components(&g, &dv)
            .unwrap()
            .iter()
            .fold(graded_hilbert::RatFun::zero(), |acc, f| acc.add(f));
        prop_assert_eq!(sum, reduce(&IntPoly::one(), &IntPoly::linear(1, -d)));
    }
}
