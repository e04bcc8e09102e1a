mod common;

use std::collections::BTreeSet;

use dercurve::{
    annihilation_check, der_series, der_series_rational, derivation_module, minimal_generators,
    to_ideal, DerKind, NumericalSemigroup, PlanePoint, PlaneSemigroup, Poly, RationalSeries,
    TruncatedSeries, Witness,
};
use proptest::prelude::*;

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2i64..40, 2..5)
        .prop_filter_map("gcd must be 1", |g| {
            NumericalSemigroup::minimalized(&g).ok()
        })
        .prop_filter("skip ℕ", |s| !s.is_natural())
}

fn membership_table(s: &NumericalSemigroup) -> (Vec<bool>, i64) {
    let limit = s.conductor() + 2 * s.generators().last().unwrap();
    (common::coin_table(s.generators(), limit), limit)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn membership_matches_coin_dp(s in semigroup()) {
        let (table, limit) = membership_table(&s);
        for x in 0..=limit {
            prop_assert_eq!(s.contains(x), table[x as usize], "x = {}", x);
        }
        prop_assert!(!s.contains(-1));
        prop_assert_eq!(
            s.gap_count(),
            table[..s.conductor() as usize].iter().filter(|m| !**m).count() as i64
        );
    }

    #[test]
    fn apery_set_is_least_per_residue(s in semigroup(), pick in 0usize..4) {
        let m = s.generators()[pick % s.generators().len()];
        let ap = s.apery(m).unwrap();
        prop_assert_eq!(ap.len() as i64, m);
        for (r, &w) in ap.iter().enumerate() {
            prop_assert_eq!(w.rem_euclid(m), r as i64);
            prop_assert!(s.contains(w));
            prop_assert!(!s.contains(w - m));
        }
        let brute = common::brute_apery(s.generators(), m);
        prop_assert_eq!(ap.iter().copied().collect::<BTreeSet<_>>(), brute);
    }

    #[test]
    fn pseudo_frobenius_matches_definition(s in semigroup()) {
        let brute = common::brute_pseudo_frobenius(s.generators());
        let engine: BTreeSet<i64> = s.pseudo_frobenius().iter().copied().collect();
        prop_assert_eq!(&engine, &brute);
        prop_assert_eq!(*engine.iter().max().unwrap(), s.frobenius());
        prop_assert_eq!(s.type_count(), brute.len());
    }

    #[test]
    fn homogeneity_ignores_generator_order(s in semigroup(), seed in any::<u64>()) {
        let mut gens = s.generators().to_vec();
        let len = gens.len();
        for i in (1..len).rev() {
            gens.swap(i, (seed as usize).wrapping_add(i * 7919) % (i + 1));
        }
        let shuffled = NumericalSemigroup::minimalized(&gens).unwrap();
        prop_assert_eq!(shuffled.is_homogeneous(), s.is_homogeneous());
    }

    #[test]
    fn length_sets_contain_valid_factorization_lengths(s in semigroup(), x in 0i64..200) {
        match s.length_set(x) {
            Ok(ls) => {
                prop_assert!(s.contains(x));
                prop_assert!(!ls.lengths.is_empty());
                let g = s.generators();
                let (lo, hi) = (*ls.lengths.first().unwrap() as i64, *ls.lengths.last().unwrap() as i64);
                prop_assert!(lo * g[0] <= x && x <= hi * g[g.len() - 1] || x == 0);
            }
            Err(_) => prop_assert!(!s.contains(x)),
        }
    }

    #[test]
    fn plane_semigroup_is_closed_and_inside_the_box(
        s in semigroup(),
        picks in prop::collection::vec((0usize..5, 0usize..5), 1..6),
    ) {
        let p = PlaneSemigroup::new(&s);
        let pts = p.generator_points();
        for (i, j) in picks {
            let x = pts[i % pts.len()] + pts[j % pts.len()];
            prop_assert!(p.contains(x));
            prop_assert!(p.box_member(x));
        }
        let n_e = p.n_e();
        for k in 0..4i64 {
            for a in 0..=k * n_e {
                let q = PlanePoint::new(a, k * n_e - a);
                if p.contains(q) {
                    prop_assert!(p.box_member(q));
                    for g in pts {
                        prop_assert!(p.contains(q + *g));
                    }
                }
            }
        }
    }

    #[test]
    fn derivation_witnesses_are_minimal_and_valid(s in semigroup()) {
        let p = PlaneSemigroup::new(&s);
        let m = derivation_module(&p);
        prop_assume!(m.is_ok(), "not Cohen-Macaulay");
        let m = m.unwrap();
        let n_e = p.n_e();
        let seq = p.sequence();
        let lower: Vec<i64> = std::iter::once(0).chain(seq[..seq.len() - 1].iter().copied()).collect();
        let holds = |base: PlanePoint, ns: &[i64]| {
            ns.iter().all(|&n| p.contains(base + PlanePoint::new(n, n_e - n)))
        };
        let d1 = m.generators.iter().filter(|g| matches!(g.kind, DerKind::D1 | DerKind::D1Degenerate)).count();
        let d2 = m.generators.iter().filter(|g| matches!(g.kind, DerKind::D2 | DerKind::D2Degenerate)).count();
        prop_assert_eq!(m.mu, d1 + d2 + 2);
        for g in &m.generators {
            match g.witness {
                Some(Witness::D1 { alpha, beta }) => {
                    let base = PlanePoint::new(beta, alpha - 1);
                    prop_assert!(holds(base, &lower));
                    prop_assert!(p.gamma1().contains(beta));
                    let mut smaller = beta - n_e;
                    while smaller > 0 {
                        let cand = PlanePoint::new(smaller, alpha - 1);
                        prop_assert!(!(p.gamma1().contains(smaller) && holds(cand, &lower)));
                        smaller -= n_e;
                    }
                }
                Some(Witness::D2 { delta, gamma }) => {
                    let base = PlanePoint::new(delta - 1, gamma);
                    prop_assert!(holds(base, seq));
                    prop_assert!(p.gamma2().contains(gamma));
                    let mut smaller = gamma - n_e;
                    while smaller > 0 {
                        let cand = PlanePoint::new(delta - 1, smaller);
                        prop_assert!(!(p.gamma2().contains(smaller) && holds(cand, seq)));
                        smaller -= n_e;
                    }
                }
                Some(Witness::D1Degenerate { c_prime }) => {
                    prop_assert!(holds(PlanePoint::new(1 + c_prime * n_e, -1), &lower));
                    for c in 0..c_prime {
                        prop_assert!(!holds(PlanePoint::new(1 + c * n_e, -1), &lower));
                    }
                }
                Some(Witness::D2Degenerate { e_prime }) => {
                    let upper = &seq[..seq.len() - 1];
                    prop_assert!(holds(PlanePoint::new(-1, 1 + e_prime * n_e), upper));
                    for e in 0..e_prime {
                        prop_assert!(!holds(PlanePoint::new(-1, 1 + e * n_e), upper));
                    }
                }
                None => prop_assert!(matches!(g.kind, DerKind::EulerU | DerKind::EulerV)),
            }
        }
        let ideal = to_ideal(&m, &p);
        for q in &ideal {
            prop_assert!(p.contains(*q));
        }
        prop_assert!(annihilation_check(&ideal, &p).unwrap());
        prop_assert_eq!(minimal_generators(&ideal, &p).len(), m.minimal_ideal_count);
    }

    #[test]
    fn der_series_constant_term_and_linearity(
        h1 in 1u64..30,
        h2 in 1u64..30,
        tail in prop::collection::vec(0u64..1000, 0..12),
    ) {
        let mut coeffs = vec![1];
        coeffs.extend(&tail);
        let pk = TruncatedSeries::new(coeffs.clone()).unwrap();
        let d = der_series(h1, h2, &pk).unwrap();
        prop_assert_eq!(d.coeffs()[0], 1 + h1 + h2);
        prop_assert_eq!(d.order(), pk.order());

        let doubled: Vec<u64> = std::iter::once(1).chain(tail.iter().map(|c| 2 * c)).collect();
        let d2 = der_series(h1, h2, &TruncatedSeries::new(doubled).unwrap()).unwrap();
        for i in 1..d.coeffs().len() {
            prop_assert_eq!(d2.coeffs()[i], 2 * d.coeffs()[i]);
        }
    }

    #[test]
    fn times_one_plus_z_keeps_nonnegative_partial_sums(c in prop::collection::vec(0u64..1000, 1..12)) {
        let s = TruncatedSeries::new(c.clone()).unwrap();
        let t = s.times_one_plus_z().unwrap();
        prop_assert_eq!(t.order(), s.order());
        prop_assert_eq!(t.coeffs()[0], c[0]);
        for i in 1..c.len() {
            prop_assert_eq!(t.coeffs()[i], c[i] + c[i - 1]);
        }
        let sums = |v: &[u64]| v.iter().scan(0u64, |acc, x| { *acc += x; Some(*acc) }).collect::<Vec<_>>();
        for (a, b) in sums(s.coeffs()).iter().zip(sums(t.coeffs())) {
            prop_assert!(*a <= b);
        }
    }

    #[test]
    fn rational_and_truncated_transforms_commute(
        p_tail in prop::collection::vec(0i64..6, 0..4),
        q_tail in prop::collection::vec(0i64..4, 1..4),
        h1 in 1u64..20,
        h2 in 1u64..20,
    ) {
        let p: Vec<i64> = std::iter::once(1).chain(p_tail).collect();
        let q: Vec<i64> = std::iter::once(1).chain(q_tail.into_iter().map(|c| -c)).collect();
        let pk = RationalSeries::new(Poly::new(p), Poly::new(q)).unwrap();
        let left = der_series(h1, h2, &pk.expand(10).unwrap()).unwrap();
        let right = der_series_rational(h1, h2, &pk).unwrap().expand(10).unwrap();
        prop_assert_eq!(left, right);
    }
}
