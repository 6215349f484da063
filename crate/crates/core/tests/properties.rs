use proptest::prelude::*;

use duplicial::index_cat::{classify, compose, eval_word, factorize, IndexMorphism, MorphismClass};
use duplicial::linalg::{kernel_basis, rank};
use duplicial::matrix::Matrix;
use duplicial::ring::{CoefficientRing, Scalar};
use duplicial::snf::smith_normal_form;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

fn arb_int_matrix(max_dim: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c).prop_map(move |entries| {
            let ring = CoefficientRing::Integers;
            Matrix::from_fn(ring, r, c, |i, j| ring.from_i64(entries[i * c + j]))
        })
    })
}

/// A random morphism of the paracyclic index category with the given
/// domain and codomain degrees.
fn arb_morphism(m: usize, n: usize) -> impl Strategy<Value = IndexMorphism> {
    let lo = -(n as i64) - 2;
    let hi = n as i64 + 2;
    (lo..=hi, proptest::collection::vec(0..=(n as i64 + 1), m))
        .prop_map(move |(start, steps)| {
            let mut values = vec![start];
            let mut budget = n as i64 + 1;
            for s in steps {
                let step = s.min(budget);
                budget -= step;
                values.push(values.last().unwrap() + step);
            }
            IndexMorphism::new(m, n, values).unwrap()
        })
}

proptest! {
    #[test]
    fn snf_is_a_diagonalization(m in arb_int_matrix(5)) {
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s.clone());
        prop_assert!(snf.u.mul(&snf.u_inv).is_identity());
        prop_assert!(snf.v.mul(&snf.v_inv).is_identity());
        let k = m.rows.min(m.cols);
        let mut prev: Option<BigInt> = None;
        for i in 0..k {
            let Scalar::Int(d) = snf.s.get(i, i).clone() else { unreachable!() };
            prop_assert!(!d.is_negative());
            if let Some(p) = prev {
                if p.is_zero() {
                    prop_assert!(d.is_zero());
                } else {
                    prop_assert!((&d % &p).is_zero());
                }
            }
            prev = Some(d);
        }
    }

    #[test]
    fn integer_kernel_vectors_are_killed(m in arb_int_matrix(5)) {
        let basis = kernel_basis(&m).unwrap();
        let ring = m.ring;
        prop_assert_eq!(smith_normal_form(&m).rank() + basis.len(), m.cols);
        for v in basis {
            prop_assert!(m.mul_vec(&v).iter().all(|x| ring.is_zero(x)));
        }
    }

    #[test]
    fn rank_plus_nullity_over_q(m in arb_int_matrix(5)) {
        let q = m.cast(CoefficientRing::Rationals).unwrap();
        prop_assert_eq!(rank(&q).unwrap() + kernel_basis(&q).unwrap().len(), q.cols);
    }

    #[test]
    fn composition_is_associative(
        f in arb_morphism(2, 3),
        g in arb_morphism(3, 2),
        h in arb_morphism(2, 4),
    ) {
        let left = compose(&h, &compose(&g, &f).unwrap()).unwrap();
        let right = compose(&compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identities_are_neutral(f in arb_morphism(3, 2)) {
        prop_assert_eq!(compose(&IndexMorphism::identity(2), &f).unwrap(), f.clone());
        prop_assert_eq!(compose(&f, &IndexMorphism::identity(3)).unwrap(), f);
    }

    #[test]
    fn factorization_round_trips(f in arb_morphism(3, 3)) {
        let word = factorize(&f);
        prop_assert_eq!(eval_word(&word, f.m).unwrap(), f.clone());
        // the word is canonical: faces, then degeneracies, then shifts
        let mut phase = 0;
        for token in &word {
            use duplicial::index_cat::GeneratorKind::*;
            let p = match token.kind {
                Face => 0,
                Degeneracy => 1,
                Shift | ShiftInverse => 2,
            };
            prop_assert!(p >= phase, "word out of canonical order");
            phase = p;
        }
    }

    #[test]
    fn delta_morphisms_stay_in_delta(f in arb_morphism(2, 3), g in arb_morphism(3, 2)) {
        if classify(&f) == MorphismClass::Delta && classify(&g) == MorphismClass::Delta {
            prop_assert_eq!(classify(&compose(&g, &f).unwrap()), MorphismClass::Delta);
        }
    }
}
