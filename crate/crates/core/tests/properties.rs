//! Cross-module invariants checked on random inputs.

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use digitlang::counting::count_series;
use digitlang::dirichlet::{brute_summatory, summatory_u64};
use digitlang::langspec::presets::preset;
use digitlang::oeis::{lookup_offline, FixtureStore, MatchKind};
use digitlang::poly::IntPolynomial;
use digitlang::regular::{dfao_from_spec, LinearRepresentation};
use digitlang::spectral::{count_roots, dominant_root, real_roots, roots_moduli, sturm_sequence};

const REGULAR: &[&str] = &["L1", "L2", "L5", "kempner", "alt9", "powers2", "thue_morse", "evil", "L3:3:1:2"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn summatory_matches_scan(i in 0usize..REGULAR.len(), n in 0u64..5000) {
        let spec = preset(REGULAR[i]).unwrap();
        prop_assert_eq!(summatory_u64(&spec, n).unwrap(), BigUint::from(brute_summatory(&spec, n)));
    }

    #[test]
    fn dfao_and_linear_representation_agree(i in 0usize..REGULAR.len(), n in 0u64..100_000) {
        let spec = preset(REGULAR[i]).unwrap();
        let d = dfao_from_spec(&spec).unwrap();
        let rep = LinearRepresentation::trimmed(&d);
        prop_assert_eq!(d.value(n) == 1, spec.contains(n));
        prop_assert_eq!(rep.evaluate(n), num_rational::BigRational::from_integer(d.value(n).into()));
    }

    #[test]
    fn dominant_root_is_a_root(c in proptest::collection::vec(-20i64..20, 1..5)) {
        let mut coeffs = c.clone();
        coeffs.push(1);
        coeffs[0] -= 25; // p(0) < 0 guarantees a positive root
        let p = IntPolynomial::from_i64s(&coeffs);
        let r = match dominant_root(&p, 1e-12) {
            Ok(r) => r,
            Err(_) => {
                // refused only when some complex root is strictly larger in modulus
                let largest_real = real_roots(&p, 1e-12).last().unwrap().midpoint_f64();
                let m = roots_moduli(&p, 1e-12);
                prop_assert!(m.iter().any(|m| m.approx.norm() > largest_real.abs() + 1e-9));
                return Ok(());
            }
        };
        let seq = sturm_sequence(&p.squarefree_part());
        prop_assert_eq!(count_roots(&seq, &r.hi, &(r.hi.clone() + BigInt::from(1_000_000))), 0);
        if !r.is_exact() {
            prop_assert!(p.sign_at(&r.lo) * p.sign_at(&r.hi) <= 0);
        }
    }

    #[test]
    fn first_difference_matches_are_sound(start in 0i64..1000, shift in 0usize..3) {
        let store = FixtureStore::bundled().unwrap();
        let y = count_series(&preset("y:7:2").unwrap(), 14).unwrap().as_bigints();
        let mut q = vec![BigInt::from(start)];
        for t in &y[shift..] {
            let next = q.last().unwrap() + t;
            q.push(next);
        }
        for m in lookup_offline(&store, &q, 20).unwrap() {
            let base: Vec<BigInt> = if m.kind == MatchKind::FirstDifference {
                q.windows(2).map(|w| &w[1] - &w[0]).collect()
            } else {
                q.clone()
            };
            let n = m.window.len();
            prop_assert_eq!(&base[m.query_start..m.query_start + n], m.window.as_slice());
            let e = store.get(&m.a_number).unwrap();
            prop_assert_eq!(&e.terms[m.entry_start..m.entry_start + n], m.window.as_slice());
        }
    }
}

#[test]
fn counts_are_consistent_with_summatory() {
    // A(b^k) - A(b^(k-1)) counts the members with exactly k digits.
    for name in ["L1", "L2", "L5", "kempner"] {
        let spec = preset(name).unwrap();
        let c = count_series(&spec, 6).unwrap().values;
        let mut prev = summatory_u64(&spec, 1).unwrap();
        for k in 1..=6u32 {
            let a = summatory_u64(&spec, 10u64.pow(k)).unwrap();
            assert_eq!(&a - &prev, c[k as usize], "{name} k={k}");
            prev = a;
        }
    }
}
