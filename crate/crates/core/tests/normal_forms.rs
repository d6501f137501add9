mod common;

use garside::*;
use proptest::prelude::*;

use common::naive_normal_form;

fn word_in(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    let atoms = (n - 1) as i64;
    prop::collection::vec((1..=atoms, any::<bool>()), 0..=max_len)
        .prop_map(|w| w.into_iter().map(|(a, pos)| if pos { a } else { -a }).collect())
}

fn group_and_word(max_len: usize) -> impl Strategy<Value = (BraidGroup, Vec<i64>)> {
    (2usize..=6).prop_flat_map(move |n| (Just(braid(n).unwrap()), word_in(n, max_len)))
}

fn group_and_words(max_len: usize) -> impl Strategy<Value = (BraidGroup, Vec<i64>, Vec<i64>)> {
    (2usize..=6).prop_flat_map(move |n| {
        (Just(braid(n).unwrap()), word_in(n, max_len), word_in(n, max_len))
    })
}

fn abelian_word() -> impl Strategy<Value = (FreeAbelian, Vec<i64>)> {
    (1usize..=5).prop_flat_map(|n| {
        let w = prop::collection::vec((1..=n as i64, any::<bool>()), 0..=12)
            .prop_map(|w| w.into_iter().map(|(a, pos)| if pos { a } else { -a }).collect());
        (Just(free_abelian(n).unwrap()), w)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn normalize_matches_naive_passes((g, w) in group_and_word(16)) {
        let x = normalize(&w, g).unwrap();
        prop_assert!(x.is_valid());
        prop_assert_eq!(x, naive_normal_form(g, &w));
    }

    #[test]
    fn abelian_normalize_matches_naive_passes((g, w) in abelian_word()) {
        let x = normalize(&w, g).unwrap();
        prop_assert!(x.is_valid());
        prop_assert_eq!(&x, &naive_normal_form(g, &w));
        // exponent sums decide abelian equality
        let mut sums = vec![0i64; g.atom_count()];
        for &l in &w {
            sums[l.unsigned_abs() as usize - 1] += l.signum();
        }
        let lo = *sums.iter().min().unwrap();
        let hi = *sums.iter().max().unwrap();
        prop_assert_eq!(x.inf(), lo);
        prop_assert_eq!(x.sup(), hi);
    }

    #[test]
    fn normalize_is_idempotent((g, w) in group_and_word(16)) {
        let x = normalize(&w, g).unwrap();
        prop_assert_eq!(&normalize(&x.to_word(), g).unwrap(), &x);
        prop_assert_eq!(&parse_word(&x.to_string(), g).unwrap(), &x);
        let again = NormalForm::from_parts(g, x.inf(), x.factors().to_vec()).unwrap();
        prop_assert_eq!(again, x);
    }

    #[test]
    fn inverse_extremes((g, w) in group_and_word(16)) {
        let x = normalize(&w, g).unwrap();
        let y = x.inverse();
        prop_assert!(y.is_valid());
        prop_assert_eq!(y.inf(), -x.sup());
        prop_assert_eq!(y.sup(), -x.inf());
        prop_assert_eq!(y.canonical_length(), x.canonical_length());
        prop_assert!(x.multiply(&y).is_identity());
        prop_assert!(y.multiply(&x).is_identity());
        prop_assert_eq!(&y.inverse(), &x);
        let rev: Vec<i64> = w.iter().rev().map(|l| -l).collect();
        prop_assert_eq!(y, normalize(&rev, g).unwrap());
    }

    #[test]
    fn multiply_is_concatenation((g, a, b) in group_and_words(10)) {
        let x = normalize(&a, g).unwrap();
        let y = normalize(&b, g).unwrap();
        let xy = x.multiply(&y);
        prop_assert!(xy.is_valid());
        let mut ab = a.clone();
        ab.extend(&b);
        prop_assert_eq!(&xy, &normalize(&ab, g).unwrap());
        prop_assert!(xy.inf() >= x.inf() + y.inf());
        prop_assert!(xy.sup() <= x.sup() + y.sup());
    }

    #[test]
    fn initial_and_final_factors((g, w) in group_and_word(16)) {
        let x = normalize(&w, g).unwrap();
        let inv = x.inverse();
        prop_assert_eq!(inv.initial_factor(), g.right_complement(&x.final_factor()));
        prop_assert_eq!(g.product(&x.final_factor(), &inv.initial_factor()), Some(g.delta()));
        if x.canonical_length() == 0 {
            prop_assert!(g.is_identity(&x.initial_factor()));
            prop_assert!(g.is_delta(&x.final_factor()));
        } else {
            prop_assert_eq!(x.initial_factor(), g.tau(&x.factors()[0], -x.inf()));
        }
    }

    #[test]
    fn tau_and_powers((g, w) in group_and_word(10), k in -4i64..=4) {
        let x = normalize(&w, g).unwrap();
        let d = NormalForm::delta_power(g, 1);
        let tx = x.tau(1);
        prop_assert!(tx.is_valid());
        prop_assert_eq!(&tx, &d.inverse().multiply(&x).multiply(&d));
        prop_assert_eq!(&x.tau(g.tau_order() as i64), &x);
        let mut naive = NormalForm::identity(g);
        let step = if k >= 0 { x.clone() } else { x.inverse() };
        for _ in 0..k.abs() {
            naive = naive.multiply(&step);
        }
        let p = x.pow(k);
        prop_assert!(p.is_valid());
        prop_assert_eq!(p, naive);
    }

    #[test]
    fn conjugation_outputs((g, a, b) in group_and_words(8)) {
        let x = normalize(&a, g).unwrap();
        let c = normalize(&b, g).unwrap();
        let y = x.conjugate(&c);
        prop_assert!(y.is_valid());
        prop_assert_eq!(&y, &c.inverse().multiply(&x).multiply(&c));
        let s = x.initial_factor();
        prop_assert_eq!(x.conjugate_simple(&s), x.conjugate(&NormalForm::from_simple(g, s)));
        prop_assert!(cycling(&x).is_valid());
        prop_assert!(decycling(&x).is_valid());
    }

    #[test]
    fn decycling_through_inverse((g, w) in group_and_word(12)) {
        // d(X) = Δ c(X⁻¹)⁻¹ Δ⁻¹ since φ(X) ι(X⁻¹) = Δ
        let x = normalize(&w, g).unwrap();
        let via = cycling(&x.inverse()).inverse().tau(-1);
        prop_assert_eq!(decycling(&x), via);
    }

    #[test]
    fn initial_factors_of_right_multiples((g, w) in group_and_word(12), pick in any::<prop::sample::Index>()) {
        let a = normalize(&w, g).unwrap();
        let simples = g.all_simples();
        let s = pick.get(&simples);
        let as_ = a.multiply(&NormalForm::from_simple(g, *s));
        let (i, j) = (as_.initial_factor(), a.initial_factor());
        prop_assert!(g.is_prefix(&i, &j) || g.is_prefix(&j, &i));
    }

    #[test]
    fn meet_with_delta_power((g, w) in group_and_word(12), k in -3i64..=6) {
        let x = normalize(&w, g).unwrap();
        let m = x.meet_delta_power(k);
        prop_assert!(m.is_valid());
        // X ∧ Δ^k is a prefix of both
        let dk = NormalForm::delta_power(g, k);
        let q1 = m.inverse().multiply(&x);
        let q2 = m.inverse().multiply(&dk);
        prop_assert!(q1.inf() >= 0 && q2.inf() >= 0);
        prop_assert!(m.sup() <= k.max(x.inf()));
    }
}

#[test]
fn word_examples() {
    let g = braid(5).unwrap();
    let x = normalize(&[1, 2, 1, 3, 2, 1, 4, 3, 1, 4, 3], g).unwrap();
    assert_eq!(x.inf(), 0);
    assert_eq!(x.to_string(), "D^0 . 12132143 . 143");
    assert_eq!(format_simple(&g, &x.initial_factor()), "12132143");
    assert_eq!(format_simple(&g, &x.final_factor()), "143");
    assert_eq!(x.multiply(&x).to_string(), "D^1 . 2324321 . 14 . 143");
    assert!(normalize(&[], g).unwrap().is_identity());
    assert_eq!(x.multiply(&NormalForm::identity(g)), x);

    let b3 = braid(3).unwrap();
    let d = NormalForm::delta_power(b3, 1);
    assert_eq!(format_simple(&b3, &d.factors().first().cloned().unwrap_or(b3.delta())), "121");
    assert_eq!(d.inf(), 1);
    assert!(NormalForm::delta_power(b3, 2).initial_factor() == b3.identity());
    assert_eq!(NormalForm::delta_power(b3, 3).inverse(), NormalForm::delta_power(b3, -3));
    let s1 = parse_word("1", b3).unwrap();
    let inv = s1.inverse();
    assert_eq!(inv.to_string(), "D^-1 . 12");
    assert!(s1.multiply(&inv).is_identity());
    assert_eq!(parse_word("D^-1 1 2", b3).unwrap(), inv);
    assert_eq!(
        parse_word("1 2 -1", b3).unwrap(),
        normalize(&[1, 2, -1], b3).unwrap()
    );
}

#[test]
fn errors_are_reported() {
    let g = braid(3).unwrap();
    assert!(matches!(normalize(&[3], g), Err(GarsideError::AtomOutOfRange { .. })));
    assert!(matches!(normalize(&[0], g), Err(GarsideError::AtomOutOfRange { .. })));
    assert!(parse_word("1 x", g).is_err());
    assert!(matches!(braid(1), Err(GarsideError::InvalidRank { .. })));
    assert!(matches!(braid(33), Err(GarsideError::RankTooLarge { .. })));
    let h = braid(4).unwrap();
    let a = parse_word("1", g).unwrap();
    let b = parse_word("1", h).unwrap();
    assert!(matches!(a.checked_mul(&b), Err(GarsideError::StructureMismatch { .. })));
    assert!(NormalForm::from_parts(h, 0, vec![h.atom(0), h.atom(1)]).is_none());
    assert!(NormalForm::from_parts(h, 0, vec![h.atom(0), h.atom(0)]).is_some());
}
