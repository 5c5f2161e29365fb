use proptest::prelude::*;

use super::*;
use crate::coxeter::{preset, subword_occurrences, GroupElement, QuasiCartanMatrix, RootVector, Word};
use crate::error::LrcError;
use crate::exactring::{parse_poly, MultiPoly, NumberField, PolyRing};
use crate::oracles::rel_coeff_rec_words;

fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

fn el(a: &QuasiCartanMatrix, s: &str) -> GroupElement {
    a.element(&w(s)).unwrap()
}

fn poly(a: &QuasiCartanMatrix, s: &str) -> MultiPoly {
    parse_poly(a.ring(), s).unwrap()
}

/// The transpose of [[2, −a], [−b, 2]] with a, b symbolic, infinite order,
/// so that ⟨α_1, α_2^∨⟩ = −a as in the rank-2 closed forms.
fn symbolic_rank2() -> QuasiCartanMatrix {
    let ring = PolyRing::new(NumberField::rational(), 2);
    let two = MultiPoly::from_int(&ring, 2);
    let (a, b) = (MultiPoly::aux_a(&ring), MultiPoly::aux_b(&ring));
    QuasiCartanMatrix::new("sym", &ring, vec![vec![two.clone(), -b], vec![-a, two]], vec![vec![1, 0], vec![0, 1]], false)
        .unwrap()
}

#[test]
fn p_phi_examples_in_a3() {
    let a = preset("A3").unwrap();
    let iota = w("3,2,1,3,2");
    // K' = {3,4}, K'' = {1,3,5}: L = K' ∩ K'', M = K' ∪ K''
    let one = BoundedMap::new(5, vec![3], vec![1, 3, 4, 5], vec![2]).unwrap();
    assert_eq!(p_phi(&a, &iota, &one).0, poly(&a, "1"));
    let two = BoundedMap::new(5, vec![3, 4], vec![3, 4, 5], vec![2, 1]).unwrap();
    assert_eq!(p_phi(&a, &iota, &two), (poly(&a, "-1"), poly(&a, "1")));
    let zero = BoundedMap::new(5, vec![3, 4], vec![3, 4, 5], vec![1, 2]).unwrap();
    assert_eq!(p_phi(&a, &iota, &zero).0, poly(&a, "0"));
    let empty = BoundedMap::new(2, vec![], vec![1, 2], vec![]).unwrap();
    assert_eq!(p_phi(&a, &w("1,2"), &empty), (poly(&a, "1"), poly(&a, "1")));
}

#[test]
fn a3_trace_depends_on_the_word() {
    let a = preset("A3").unwrap();
    let (u, v, ww) = (el(&a, "1,3"), el(&a, "1,3,2"), el(&a, "3,2,1,3,2"));
    let trace = lr_trace(&a, &u, &v, &ww, &w("3,2,1,3,2"), Filter::Admissible).unwrap();
    let mut ps: Vec<String> = trace.iter().map(|s| s.p.render()).collect();
    ps.sort();
    assert_eq!(ps, ["-1", "0", "1", "1"]);
    assert_eq!(lr_coefficient(&a, &u, &v, &ww, &w("3,2,1,3,2"), Filter::Admissible).unwrap(), poly(&a, "1"));

    let trace = lr_trace(&a, &u, &v, &ww, &w("2,3,1,2,1"), Filter::Admissible).unwrap();
    assert_eq!(trace.len(), 1);
    assert_eq!(trace[0].kprime, vec![2, 5]);
    assert_eq!(trace[0].kdoubleprime, vec![2, 3, 4]);
    assert_eq!(trace[0].phi.targets(), &[1]);
    assert_eq!(trace[0].p, poly(&a, "1"));
}

#[test]
fn a5_example_three_and_ten_triples() {
    let a = preset("A5").unwrap();
    let (u, v) = (el(&a, "4,2"), el(&a, "3,4,3,1,2,1"));
    let iota = w("5,2,3,4,3,1,2,1");
    let ww = a.element(&iota).unwrap();
    let trace = lr_trace(&a, &u, &v, &ww, &iota, Filter::Admissible).unwrap();
    let mut ps: Vec<String> = trace.iter().map(|s| s.p.render()).collect();
    ps.sort();
    assert_eq!(ps, ["0", "1", "1"]);
    let other = w("5,2,4,3,2,1,2,4");
    let trace = lr_trace(&a, &u, &v, &ww, &other, Filter::Admissible).unwrap();
    assert_eq!(trace.len(), 10);
    assert_eq!(trace.iter().map(|s| s.value()).sum::<MultiPoly>(), poly(&a, "2"));
}

#[test]
fn affine_summand_counts() {
    let a = preset("affine-SL2").unwrap();
    let u = el(&a, "1,2,1,2");
    let iota = w("1,2,1,2,1,2,1,2");
    let ww = a.element(&iota).unwrap();
    assert_eq!(count_summands(&a, &u, &u, &ww, &iota).unwrap(), SummandCount { admissible: 19, all: 190 });
    let adm = lr_coefficient(&a, &u, &u, &ww, &iota, Filter::Admissible).unwrap();
    let all = lr_coefficient(&a, &u, &u, &ww, &iota, Filter::All).unwrap();
    assert_eq!(adm, all);
    let rec = rel_coeff_rec_words(&a, &iota, &w("1,2,1,2"), &w("1,2,1,2"));
    assert_eq!(adm, rec);
}

#[test]
fn relative_coefficient_small_cases() {
    let a = preset("A2").unwrap();
    assert_eq!(relative_coefficient(&a, &w("e"), &w("e"), &w("e"), Filter::Admissible).unwrap(), poly(&a, "1"));
    for i in 1..=2 {
        let s = Word::new(vec![i]);
        assert_eq!(relative_coefficient(&a, &s, &s, &s, Filter::Admissible).unwrap(), MultiPoly::alpha(a.ring(), i));
    }
    assert!(matches!(
        relative_coefficient(&a, &w("1,1"), &w("1"), &w("1"), Filter::Admissible),
        Err(LrcError::NonAdmissibleBase(_))
    ));
    assert!(relative_coefficient(&a, &w("1,1"), &w("1"), &w("1"), Filter::All).is_ok());
}

/// α-linear forms for the rank-2 tables: u_k ends in s_1, v_k in s_2.
fn dihedral(k: usize, last: usize) -> Vec<usize> {
    let other = 3 - last;
    (0..k).map(|j| if (k - 1 - j) % 2 == 0 { last } else { other }).collect()
}

fn img(a: &QuasiCartanMatrix, letters: &[usize], i: usize) -> MultiPoly {
    a.act_letters(letters, &RootVector::simple(a.ring(), i)).to_poly()
}

#[test]
fn rank2_equivariant_tables() {
    let a = symbolic_rank2();
    let r = a.ring();
    let p = crate::rank2::Rank2Params::from_matrix(&a).unwrap();
    let (sa, sb) = crate::rank2::chebyshev_table(&p, 6);
    let one = MultiPoly::one(r);
    let u = |k| dihedral(k, 1);
    let v = |k| dihedral(k, 2);
    // ⟨−x(α_i), α_j^∨⟩
    let pr = |x: &[usize], i: usize, j: usize| a.pair(&a.act_letters(x, &RootVector::simple(r, i)).neg(), j);
    assert_eq!(pr(&u(1), 2, 2), &sa[3] - &one);
    assert_eq!(pr(&v(3), 1, 1), &sa[5] - &sa[3]);
    assert_eq!(pr(&[], 1, 2), sa[2].clone());
    assert_eq!(pr(&u(2), 2, 1), &sb[4] - &sb[2]);
    let iota = w("1,2,1,2,1");
    let ww = a.element(&iota).unwrap();
    let a1 = MultiPoly::alpha(r, 1);

    // p^{u5}_{u3,u3}: nine admissible rows, twenty without the filter
    let u3 = a.element(&Word::new(u(3))).unwrap();
    let trace = lr_trace(&a, &u3, &u3, &ww, &iota, Filter::Admissible).unwrap();
    let rows: Vec<(MultiPoly, MultiPoly)> = trace.iter().map(|s| (s.p.clone(), s.alpha_product.clone())).collect();
    let expect = vec![
        (one.clone(), a1.clone()),
        (one.clone(), img(&a, &v(2), 1)),
        (one.clone(), img(&a, &v(4), 1)),
        (one.clone(), a1.clone()),
        (one.clone(), img(&a, &v(2), 1)),
        (one.clone(), img(&a, &v(4), 1)),
        (&pr(&u(1), 2, 2) * &pr(&v(3), 1, 1), a1.clone()),
        (&pr(&[], 1, 2) * &pr(&v(3), 1, 1), img(&a, &u(2), 2)),
        (&pr(&[], 1, 2) * &pr(&u(2), 2, 1), img(&a, &v(4), 1)),
    ];
    assert_eq!(rows, expect);
    assert_eq!(count_summands(&a, &u3, &u3, &ww, &iota).unwrap(), SummandCount { admissible: 9, all: 20 });
    // 2(α1 + v2(α1) + v4(α1)) + (A5−A3)((A3−1)α1 + A2·u2(α2)) + A2(B4−B2)·v4(α1)
    let sum = &(&MultiPoly::from_int(r, 2) * &(&(&a1 + &img(&a, &v(2), 1)) + &img(&a, &v(4), 1)))
        + &(&(&(&sa[5] - &sa[3]) * &(&(&(&sa[3] - &one) * &a1) + &(&sa[2] * &img(&a, &u(2), 2))))
            + &(&(&sa[2] * &(&sb[4] - &sb[2])) * &img(&a, &v(4), 1)));
    assert_eq!(equivariant_lr(&a, &u3, &u3, &ww, &iota).unwrap(), sum);

    // p^{u5}_{u3,u4}: six rows, every bounded bijection admissible
    let u4 = a.element(&Word::new(u(4))).unwrap();
    let prod = |x: &[usize], i: usize, y: &[usize], j: usize| &img(&a, x, i) * &img(&a, y, j);
    let trace = lr_trace(&a, &u3, &u4, &ww, &iota, Filter::Admissible).unwrap();
    let rows: Vec<(MultiPoly, MultiPoly)> = trace.iter().map(|s| (s.p.clone(), s.alpha_product.clone())).collect();
    let expect = vec![
        (one.clone(), prod(&u(1), 2, &v(2), 1)),
        (one.clone(), prod(&u(1), 2, &v(4), 1)),
        (one.clone(), prod(&u(3), 2, &v(4), 1)),
        (pr(&v(3), 1, 1), prod(&v(1), 1, &u(2), 2)),
        (pr(&u(2), 2, 1), prod(&v(1), 1, &v(4), 1)),
        (pr(&v(1), 1, 1), prod(&u(3), 2, &v(4), 1)),
    ];
    assert_eq!(rows, expect);
    assert_eq!(count_summands(&a, &u3, &u4, &ww, &iota).unwrap(), SummandCount { admissible: 6, all: 6 });
    assert_eq!(pr(&v(1), 1, 1), &sa[3] - &one);
}

#[test]
fn lr_respects_length_and_word() {
    let a = preset("A3").unwrap();
    let e = GroupElement::identity();
    assert_eq!(equivariant_lr(&a, &e, &e, &e, &w("e")).unwrap(), poly(&a, "1"));
    let (u, ww) = (el(&a, "1"), el(&a, "1,2,3"));
    assert!(equivariant_lr(&a, &u, &u, &ww, &w("1,2,3")).unwrap().is_zero());
    assert!(matches!(
        lr_coefficient(&a, &u, &u, &ww, &w("3,2,1"), Filter::Admissible),
        Err(LrcError::NotReducedFor { .. })
    ));
}

#[test]
fn bs_coefficient_examples() {
    let a = preset("B2").unwrap();
    let iota = w("1,2,1,2");
    assert_eq!(bs_coefficient(&a, &iota, &[1, 2, 4], &[1, 4], &[2]).unwrap(), poly(&a, "1"));
    assert!(bs_coefficient(&a, &iota, &[1, 2, 3], &[1], &[2]).unwrap().is_zero());
    assert_eq!(bs_coefficient(&a, &iota, &[2], &[2], &[2]).unwrap(), poly(&a, "a2"));
    // K = {k1 < k2}, K' = K'' = {k2}: x_{i_{k1}}(α_{i_{k2}}) = −a_{i_{k1} i_{k2}}
    assert_eq!(bs_coefficient(&a, &iota, &[1, 2], &[2], &[2]).unwrap(), -a.entry(1, 2));
    assert_eq!(bs_coefficient(&a, &iota, &[2, 3], &[3], &[3]).unwrap(), -a.entry(2, 1));
    assert!(matches!(bs_coefficient(&a, &iota, &[1], &[2], &[1]), Err(LrcError::NotNested(_))));
}

#[test]
fn plus_truncation_examples() {
    let a = preset("A3").unwrap();
    let (u, v, ww) = (el(&a, "1,3"), el(&a, "1,3,2"), el(&a, "3,2,1,3,2"));
    assert_eq!(plus_truncation(&a, &u, &v, &ww, &w("3,2,1,3,2")).unwrap(), poly(&a, "2"));
    assert_eq!(plus_truncation(&a, &u, &v, &ww, &w("2,3,1,2,1")).unwrap(), poly(&a, "1"));
    let (best, _) = plus_truncation_min(&a, &u, &v, &ww).unwrap();
    assert_eq!(best, poly(&a, "1"));
}

#[test]
fn deformation_table_a3() {
    let a = preset("A3").unwrap();
    let (u, v) = (el(&a, "1,3"), el(&a, "1,3,2"));
    for (word, expect) in [
        ("2,3,1,2,1", "t + 1"),
        ("2,1,3,2,1", "t + 1"),
        ("2,3,2,1,2", "(t + 1)^2"),
        ("3,2,3,1,2", "(t + 1)^3"),
        ("3,2,1,3,2", "(t + 1)^3"),
    ] {
        let got = deformed_p(&a, &u, &v, &w(word)).unwrap();
        assert_eq!(got, poly(&a, expect), "{word}");
        assert_eq!(got.substitute_t(&a.ring().field().zero()), poly(&a, "1"));
    }
}

#[test]
fn deformation_table_a5() {
    let a = preset("A5").unwrap();
    let (u, v) = (el(&a, "4,2"), el(&a, "3,4,3,1,2,1"));
    for (word, expect) in [
        ("5,2,3,4,3,1,2,1", "(t+1)*(2*t^2+4*t+1)*(t^2+2*t+2)"),
        ("5,2,4,3,4,1,2,1", "(3*t^2+6*t+2)*(t+1)^3"),
        ("5,4,3,2,3,4,1,2", "2*(t+1)^6"),
        ("5,2,4,3,4,2,1,2", "(2*t^4+8*t^3+11*t^2+6*t+2)*(t+1)^3"),
        ("5,2,3,4,3,2,1,2", "(t+1)*(t^2+2*t+2)*(2*t^4+8*t^3+10*t^2+4*t+1)"),
    ] {
        assert_eq!(deformed_p(&a, &u, &v, &w(word)).unwrap(), poly(&a, expect), "{word}");
    }
}

#[test]
fn trace_json_fields() {
    let a = preset("A3").unwrap();
    let (u, v, ww) = (el(&a, "1,3"), el(&a, "1,3,2"), el(&a, "2,3,1,2,1"));
    let t = lr_trace(&a, &u, &v, &ww, &w("2,3,1,2,1"), Filter::Admissible).unwrap();
    let j = t[0].to_json();
    assert_eq!(j["phi"]["2"], "1");
    assert_eq!(j["L"], serde_json::json!([2]));
    assert_eq!(j["p"], "1");
    assert_eq!(j["admissible"], true);
}

const PRESETS: [&str; 6] = ["A2", "A3", "B2", "G2", "affine-SL2", "H3-rank2"];

fn word_strategy() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..PRESETS.len()).prop_flat_map(|p| {
        let rank = preset(PRESETS[p]).unwrap().rank();
        (Just(p), prop::collection::vec(1..=rank, 1..=5))
    })
}

/// Subwords of ι that occur as subsequences, deduplicated.
fn subwords(iota: &Word) -> Vec<Word> {
    let m = iota.len();
    let mut out: Vec<Word> = (0u32..(1 << m))
        .map(|mask| iota.subword(&(1..=m).filter(|x| mask & (1 << (x - 1)) != 0).collect::<Vec<_>>()))
        .collect();
    out.sort();
    out.dedup();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relative_matches_recursion((p, letters) in word_strategy()) {
        let a = preset(PRESETS[p]).unwrap();
        let iota = Word::new(letters);
        let subs = subwords(&iota);
        for i1 in &subs {
            for i2 in &subs {
                let all = relative_coefficient(&a, &iota, i1, i2, Filter::All).unwrap();
                let rec = rel_coeff_rec_words(&a, &iota, i1, i2);
                prop_assert_eq!(&all, &rec);
                // the admissible filter needs ι, ι', ι'' all admissible
                if iota.is_admissible() && i1.is_admissible() && i2.is_admissible() {
                    prop_assert_eq!(relative_coefficient(&a, &iota, i1, i2, Filter::Admissible).unwrap(), rec);
                }
                // symmetry and homogeneity
                prop_assert_eq!(&relative_coefficient(&a, &iota, i2, i1, Filter::All).unwrap(), &all);
                let d = i1.len() + i2.len();
                if d < iota.len() {
                    prop_assert!(all.is_zero());
                } else {
                    prop_assert!(all.is_alpha_homogeneous((d - iota.len()) as u32));
                }
            }
        }
    }

    #[test]
    fn bs_sum_gives_relative((p, letters) in word_strategy()) {
        let a = preset(PRESETS[p]).unwrap();
        let iota = Word::new(letters);
        let m = iota.len();
        let full: Vec<usize> = (1..=m).collect();
        let subs = subwords(&iota);
        for i1 in subs.iter().filter(|x| x.len() * 2 >= m) {
            let i2 = i1;
            let mut acc = MultiPoly::zero(a.ring());
            for kp in subword_occurrences(&iota, i1) {
                for kpp in subword_occurrences(&iota, i2) {
                    acc.add_assign_ref(&bs_coefficient(&a, &iota, &full, &kp, &kpp).unwrap());
                    if kp.iter().all(|x| !kpp.contains(x)) {
                        let union = (kp.len() + kpp.len() == m) as i64;
                        prop_assert_eq!(bs_coefficient(&a, &iota, &full, &kp, &kpp).unwrap(), MultiPoly::from_int(a.ring(), union));
                    }
                }
            }
            prop_assert_eq!(acc, relative_coefficient(&a, &iota, i1, i2, Filter::All).unwrap());
        }
    }
}

#[test]
fn equivariant_lr_is_independent_of_the_reduced_word() {
    for name in ["A3", "B2", "G2", "H3-rank2"] {
        let a = preset(name).unwrap();
        for ww in a.system().elements_up_to(5, 10_000).unwrap() {
            let words: Vec<Word> = a.system().reduced_words(&ww).into_iter().collect();
            let base = equivariant_table(&a, &words[0], Filter::Admissible).unwrap();
            for other in &words[1..] {
                assert_eq!(equivariant_table(&a, other, Filter::Admissible).unwrap(), base, "{name} {other}");
            }
            for ((u, v), p) in &base {
                let d = u.length() + v.length() - ww.length();
                assert!(p.is_alpha_homogeneous(d as u32));
                let c = lr_coefficient(&a, u, v, &ww, &words[0], Filter::Admissible).unwrap();
                if d == 0 {
                    assert_eq!(&c, p);
                } else {
                    assert!(c.is_zero());
                }
            }
        }
    }
}
