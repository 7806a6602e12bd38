//! Property tests over random permutations and random small groups.

mod common;

use proptest::prelude::*;

use common::{closure, raw_generators, Oracle};
use growthlab::characters::CharacterTable;
use growthlab::cyclotomic::Cyclotomic;
use growthlab::growth::{ab_growth, abelianization_order, rep_growth};
use growthlab::subgroups::Subgroup;
use growthlab::verify::report::{from_json, parse_csv, to_csv, to_json};
use growthlab::verify::{default_corpus, run_corpus, RunOptions};
use growthlab::{PermGroup, Permutation};
use num_rational::Ratio;

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn gens(degree: usize, max: usize) -> impl Strategy<Value = Vec<Permutation>> {
    prop::collection::vec(perm(degree), 0..=max)
}

fn small_group() -> impl Strategy<Value = PermGroup> {
    (3usize..=6).prop_flat_map(|d| gens(d, 3).prop_map(move |g| PermGroup::new(d, g).unwrap()))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_laws(a in perm(7), b in perm(7), c in perm(7)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.inverse().compose(&a).is_identity());
        prop_assert_eq!(a.compose(&Permutation::identity(7)), a.clone());
        prop_assert_eq!(Permutation::parse(7, &a.to_string()).unwrap(), a.clone());
        let lcm = a.cycles().iter().fold(1u64, |acc, c| acc / gcd(acc, c.len() as u64) * c.len() as u64);
        prop_assert_eq!(a.order(), lcm);
        prop_assert!(a.pow(a.order()).is_identity());
        // conjugation preserves cycle type
        let mut t1: Vec<usize> = a.cycles().iter().map(Vec::len).collect();
        let mut t2: Vec<usize> = a.conjugate_by(&b).cycles().iter().map(Vec::len).collect();
        t1.sort_unstable();
        t2.sort_unstable();
        prop_assert_eq!(t1, t2);
    }

    #[test]
    fn group_structure(g in small_group()) {
        let elems = closure(g.degree(), &raw_generators(&g));
        prop_assert_eq!(g.order() as usize, elems.len());
        let d = g.derived_subgroup();
        prop_assert_eq!(g.order() % d.order(), 0);
        prop_assert!(g.is_normal(&d).unwrap());
        // G/G' is abelian: the generators commute in the action on cosets of G'
        let (image, kernel) = g.coset_action(&d).unwrap();
        prop_assert!(image.is_abelian());
        prop_assert!(kernel.same_group(&d));
        prop_assert_eq!(image.order(), abelianization_order(&g));
        for x in g.generators() {
            prop_assert!(g.contains(x).unwrap());
        }
    }

    #[test]
    fn core_is_coset_kernel(g in small_group(), pick in prop::collection::vec(any::<prop::sample::Index>(), 0..3)) {
        let elems = g.elements().unwrap();
        let hg: Vec<Permutation> = pick.iter().map(|i| i.get(&elems).clone()).collect();
        let h = g.subgroup_generated(&hg).unwrap();
        let core = g.normal_core(&h).unwrap();
        let (image, kernel) = g.coset_action(&h).unwrap();
        prop_assert!(core.same_group(&kernel));
        prop_assert_eq!(image.order() * kernel.order(), g.order());
        prop_assert_eq!(image.degree() as u64, g.order() / h.order());
        prop_assert!(h.is_subgroup(&core));
        let oracle = Oracle::new(&g);
        prop_assert_eq!(g.center().unwrap().order() as usize, oracle.center().len());
    }

    #[test]
    fn character_table_identities(g in small_group()) {
        let ct = CharacterTable::new(&g).unwrap();
        prop_assert!(ct.orthogonality_holds());
        prop_assert_eq!(ct.sum_of_squared_degrees(), g.order());
        prop_assert_eq!(ct.chars().len(), ct.class_count());
        prop_assert_eq!(ct.classes().sizes.iter().sum::<u64>(), g.order());
        prop_assert_eq!(ct.classes().sizes[0], 1);
        let oracle = Oracle::new(&g);
        prop_assert_eq!(ct.class_count(), oracle.class_sizes().len());
        for &d in ct.degrees() {
            prop_assert_eq!(g.order() % d, 0);
        }
        let n = g.order();
        let ab = ab_growth(&g, n).unwrap();
        let rep = rep_growth(&g, n).unwrap();
        prop_assert_eq!(ab.value(1), rep.value(1));
        for m in 1..=n {
            prop_assert!(ab.value(m) <= m * rep.value(m));
        }
        let dense = ab.dense();
        prop_assert!(dense.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn frobenius_reciprocity(g in small_group(), pick in prop::collection::vec(any::<prop::sample::Index>(), 0..3)) {
        let ct = CharacterTable::new(&g).unwrap();
        let table = ct.element_table().clone();
        let gi: Vec<u32> = pick.iter().map(|i| i.index(table.len()) as u32).collect();
        let h = Subgroup { bits: table.closure(&gi), gens: gi };
        let sub = ct.subgroup(&h);
        let lin = sub.linear_characters();
        prop_assert_eq!(lin.len() as u64, h.order() / table.derived(&h.gens).count() as u64);
        for l in &lin {
            let up = sub.induce(l);
            prop_assert_eq!(up.values[0].to_integer(), Some((g.order() / h.order()) as i128));
            for i in 0..ct.class_count() {
                let chi = ct.character(i);
                prop_assert_eq!(ct.inner_product(&up, &chi), sub.inner_product(l, &sub.restrict(&chi)));
            }
        }
        let pi = ct.permutation_character_bits(&h.bits);
        prop_assert_eq!(pi.values.clone(), sub.induce(&sub.trivial()).values);
    }

    #[test]
    fn cyclotomic_field_laws(
        a in prop::collection::vec((0u64..12, -5i64..5), 0..5),
        b in prop::collection::vec((0u64..12, -5i64..5), 0..5),
        k in prop::sample::select(vec![1u32, 5, 7, 11]),
    ) {
        let build = |terms: &[(u64, i64)]| {
            terms.iter().fold(Cyclotomic::zero(12), |acc, &(m, c)| {
                &acc + &Cyclotomic::root(12, m).scale(Ratio::from_integer(c as i128))
            })
        };
        let (x, y) = (build(&a), build(&b));
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((&x * &y).galois(k), &x.galois(k) * &y.galois(k));
        prop_assert!((&x + &(-&x)).is_zero());
        // x · conj(x) is a non-negative real number
        let (re, im) = (&x * &x.conj()).to_complex();
        prop_assert!(im.abs() < 1e-9 && re > -1e-9);
    }
}

#[test]
fn report_round_trips() {
    let corpus: Vec<_> = default_corpus().into_iter().take(6).collect();
    let report = run_corpus(&corpus, &RunOptions { checks: None, workers: 2 }).unwrap();
    let back = from_json(&to_json(&report).unwrap()).unwrap();
    assert_eq!(back, report);
    let csv = to_csv(&report).unwrap();
    assert!(csv.starts_with("check_id,group,status,lhs,rhs,n,witness\n"));
    let rows = parse_csv(&csv).unwrap();
    assert_eq!(rows.len(), report.entries.len());
    for (row, r) in rows.iter().zip(&report.entries) {
        assert_eq!(row.check_id, r.check_id);
        assert_eq!(row.status, r.status);
        assert_eq!(row.lhs, r.lhs);
    }
}
