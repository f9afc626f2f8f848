mod common;

use std::sync::OnceLock;

use num_traits::Zero;
use proptest::prelude::*;
use proptest::sample::Index;
use semihyp::algebra::{contracted_algebra, group_algebra, radical};
use semihyp::classify::{classify_q, Verdict};
use semihyp::groups::cyclic;
use semihyp::linalg::{rat, Matrix};
use semihyp::rees::{munn, rees, Sandwich};
use semihyp::semigroup::{canonical_table, enumerate_semigroups, fingerprint, isomorphic, principal_series};
use semihyp::FiniteSemigroup;

use common::associative;

fn corpus() -> &'static [FiniteSemigroup] {
    static CORPUS: OnceLock<Vec<FiniteSemigroup>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut all = Vec::new();
        for n in 1..=4 {
            enumerate_semigroups(n, |s| all.push(s.clone())).unwrap();
        }
        all
    })
}

fn member() -> impl Strategy<Value = FiniteSemigroup> {
    any::<Index>().prop_map(|i| i.get(corpus()).clone())
}

fn relabeled() -> impl Strategy<Value = (FiniteSemigroup, FiniteSemigroup)> {
    member().prop_flat_map(|s| {
        let n = s.order();
        Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(move |p| (s.clone(), s.relabel(&p)))
    })
}

fn is_ideal(s: &FiniteSemigroup, xs: &[usize]) -> bool {
    xs.iter().all(|&x| s.elements().all(|a| xs.contains(&s.mul(a, x)) && xs.contains(&s.mul(x, a))))
}

fn shape(v: &Verdict) -> (bool, semihyp::Regime, Vec<(semihyp::classify::FactorTag, String)>) {
    let mut tags: Vec<_> = v.factors.iter().map(|f| (f.tag, f.detail.clone())).collect();
    tags.sort();
    (v.hyperbolic, v.regime, tags)
}

proptest! {
    #[test]
    fn relabeling_preserves_invariants((s, t) in relabeled()) {
        prop_assert!(isomorphic(&s, &t).is_some());
        prop_assert_eq!(canonical_table(&s), canonical_table(&t));
        let (mut fs, mut ft) = (fingerprint(&s), fingerprint(&t));
        fs.sort();
        ft.sort();
        prop_assert_eq!(fs, ft);
        prop_assert_eq!(s.zero().is_some(), t.zero().is_some());
        prop_assert_eq!(s.is_inverse(), t.is_inverse());
    }

    #[test]
    fn verdict_is_isomorphism_invariant((s, t) in relabeled()) {
        match (classify_q(&s), classify_q(&t)) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(shape(&a), shape(&b));
                prop_assert_eq!(a.oracle, b.oracle);
            }
            (Err(a), Err(b)) => prop_assert_eq!(a, b),
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
    }

    #[test]
    fn quotient_by_zero_is_identity(s in member()) {
        if let Some(z) = s.zero() {
            let q = s.rees_quotient(&[z]).unwrap();
            prop_assert!(isomorphic(&q, &s).is_some());
        }
    }

    #[test]
    fn series_is_a_chain_of_ideals(s in member()) {
        let ps = principal_series(&s);
        let t = &ps.semigroup;
        prop_assert_eq!(ps.ideals.first().map(Vec::len), Some(t.order()));
        prop_assert_eq!(ps.ideals.last().cloned(), Some(vec![t.zero().unwrap()]));
        for w in ps.ideals.windows(2) {
            prop_assert!(is_ideal(t, &w[0]) && is_ideal(t, &w[1]));
            prop_assert!(w[1].len() < w[0].len() && w[1].iter().all(|x| w[0].contains(x)));
            // Maximality: no ideal strictly between, by brute force over subsets.
            let between: Vec<usize> = w[0].iter().copied().filter(|x| !w[1].contains(x)).collect();
            for mask in 1..(1u32 << between.len()) - 1 {
                let mut mid = w[1].clone();
                mid.extend(between.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x));
                prop_assert!(!is_ideal(t, &mid));
            }
        }
        let covered: usize = ps.factors.iter().map(|f| f.elements.len()).sum();
        prop_assert_eq!(covered + 1, t.order());
        for f in &ps.factors {
            prop_assert!(associative(&f.quotient.rows()));
        }
    }

    #[test]
    fn radical_is_a_nilpotent_ideal(s in member()) {
        let (t, _) = s.with_zero();
        let a = contracted_algebra(&t).unwrap();
        let r = radical(&a);
        prop_assert!(r.is_two_sided_ideal(&a));
        // Every product of `nilpotency_index` radical vectors vanishes.
        for v in &r.basis {
            let mut p = v.clone();
            for _ in 1..r.nilpotency_index {
                p = a.mul(&p, v);
            }
            prop_assert!(p.iter().all(Zero::is_zero));
        }
        // Nilpotent semigroup elements lie in the radical.
        for x in t.nilpotents().unwrap() {
            let i = if x < t.zero().unwrap() { x } else { x - 1 };
            prop_assert!(semihyp::linalg::in_span(&r.basis, &a.basis_vec(i)));
        }
    }

    #[test]
    fn json_round_trip(s in member()) {
        prop_assert_eq!(FiniteSemigroup::from_json(&s.to_json()).unwrap(), s.clone());
        prop_assert_eq!(FiniteSemigroup::from_text(&s.to_text()).unwrap(), s);
    }

    #[test]
    fn contracted_rees_matches_munn(
        g in 1usize..=3,
        m in 1usize..=2,
        n in 1usize..=2,
        raw in proptest::collection::vec(proptest::option::weighted(0.7, 0usize..3), 4),
    ) {
        let group = cyclic(g);
        let entries: Vec<Vec<Option<usize>>> =
            (0..n).map(|l| (0..m).map(|j| raw[l * 2 + j].map(|x| x % g)).collect()).collect();
        let p = Sandwich::new(m, n, entries.clone()).unwrap();
        let r = rees(&group, m, n, &p).unwrap();
        prop_assert_eq!(r.semigroup.order(), m * n * g + 1);
        let base = group_algebra(&group).unwrap();
        let coords = entries
            .iter()
            .map(|row| row.iter().map(|e| match e {
                Some(c) => base.basis_vec(*c),
                None => vec![rat(0); g],
            }).collect())
            .collect();
        let mu = munn(&base, m, n, coords).unwrap();
        let k0 = contracted_algebra(&r.semigroup).unwrap();
        prop_assert!(mu.algebra.same_structure(&k0));
        prop_assert_eq!(mu.algebra.dim(), m * n * g);
    }

    #[test]
    fn determinant_is_multiplicative(
        a in proptest::collection::vec(-4i64..=4, 9),
        b in proptest::collection::vec(-4i64..=4, 9),
    ) {
        let ma = Matrix::from_i64(&a.chunks(3).map(<[i64]>::to_vec).collect::<Vec<_>>());
        let mb = Matrix::from_i64(&b.chunks(3).map(<[i64]>::to_vec).collect::<Vec<_>>());
        prop_assert_eq!(ma.mul(&mb).determinant(), ma.determinant() * mb.determinant());
        prop_assert_eq!(ma.rank() + ma.kernel().len(), 3);
        for v in ma.kernel() {
            prop_assert!(ma.mul_vec(&v).iter().all(Zero::is_zero));
        }
        if let Some(inv) = ma.inverse() {
            prop_assert_eq!(ma.mul(&inv), Matrix::identity(3));
        } else {
            prop_assert!(ma.determinant().is_zero());
        }
    }
}

#[test]
fn canonical_form_decides_isomorphism() {
    let small: Vec<&FiniteSemigroup> = corpus().iter().filter(|s| s.order() == 3).collect();
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            let same = canonical_table(a) == canonical_table(b);
            assert_eq!(same, isomorphic(a, b).is_some());
        }
    }
}
