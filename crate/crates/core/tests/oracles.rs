//! Library results against brute force on every small corpus group.

mod common;

use std::collections::BTreeSet;

use common::*;
use growthlab::characters::{class_count, conjugacy_classes, CharacterTable};
use growthlab::constructors::{alternating, dihedral, psl2, symmetric};
use growthlab::growth::{ab_growth_rel, is_weakly_abnormal, largest_abelian_section};
use growthlab::subgroups::{intermediate_subgroups, min_abelian_normal_index, normal_subgroups};
use growthlab::verify::default_corpus;
use growthlab::{GroupSpec, PermGroup};

fn small_corpus() -> Vec<(GroupSpec, PermGroup)> {
    default_corpus()
        .into_iter()
        .map(|e| {
            let g = e.spec.build().unwrap();
            (e.spec, g)
        })
        .filter(|(_, g)| g.order() <= 200)
        .collect()
}

#[test]
fn lattice_and_ab_match_brute_force() {
    let groups = small_corpus();
    assert_eq!(groups.len(), 19);
    for (spec, g) in &groups {
        if let Err(e) = lattice_and_ab_agree(g) {
            panic!("{spec}: {e}");
        }
    }
}

#[test]
fn orders_match_closure() {
    for e in default_corpus() {
        let g = e.spec.build().unwrap();
        if g.order() <= 5000 {
            assert_eq!(closure(g.degree(), &raw_generators(&g)).len() as u64, g.order(), "{}", e.spec);
        }
    }
}

#[test]
fn class_sizes_match_orbits() {
    for (spec, g) in small_corpus() {
        let oracle = Oracle::new(&g);
        let mut want = oracle.class_sizes();
        let mut got: Vec<usize> = conjugacy_classes(&g).unwrap().sizes.iter().map(|&s| s as usize).collect();
        want.sort_unstable();
        got.sort_unstable();
        assert_eq!(got, want, "{spec}");
    }
}

#[test]
fn normal_subgroups_and_centers() {
    for (spec, g) in small_corpus() {
        let oracle = Oracle::new(&g);
        let subs = oracle.all_subgroups();
        let mut want: Vec<usize> = subs.iter().filter(|h| oracle.is_normal(h)).map(|h| h.len()).collect();
        let mut got: Vec<usize> = normal_subgroups(&g).unwrap().iter().map(|n| n.order() as usize).collect();
        want.sort_unstable();
        got.sort_unstable();
        assert_eq!(got, want, "{spec}");
        assert_eq!(g.center().unwrap().order() as usize, oracle.center().len(), "{spec}");

        let min_abelian = subs
            .iter()
            .filter(|h| oracle.is_normal(h) && oracle.derived(h).len() == 1)
            .map(|h| oracle.order() / h.len())
            .min()
            .unwrap();
        assert_eq!(min_abelian_normal_index(&g).unwrap() as usize, min_abelian, "{spec}");
    }
}

#[test]
fn relative_growth_matches_brute_force() {
    for (spec, g) in small_corpus() {
        if !g.is_transitive() || g.order() as usize <= g.degree() {
            continue;
        }
        let y = g.point_stabilizer(0).unwrap();
        let oracle = Oracle::new(&g);
        let ys: Sub = closure(g.degree(), &raw_generators(&y)).iter().map(|e| oracle.index_of(e)).collect();
        let above: Vec<Sub> = oracle.all_subgroups().into_iter().filter(|h| ys.is_subset(h)).collect();

        let inter = intermediate_subgroups(&g, &y, g.order()).unwrap();
        assert_eq!(inter.len(), above.len(), "{spec}");

        let n = oracle.order();
        let rel = ab_growth_rel(&g, &y, n as u64).unwrap();
        for m in 1..=n {
            let want = above
                .iter()
                .filter(|h| n / h.len() <= m)
                .map(|h| oracle.rel_ab_order(h, &ys))
                .max()
                .unwrap();
            assert_eq!(rel.value(m as u64) as usize, want, "{spec} n={m}");
        }
        let weak = above.iter().all(|h| oracle.normalizer_order(h) == h.len());
        assert_eq!(is_weakly_abnormal(&g, &y).unwrap(), weak, "{spec}");
    }
}

#[test]
fn center_remark_by_brute_force() {
    for (spec, g) in small_corpus() {
        let oracle = Oracle::new(&g);
        let z = oracle.center();
        for h in oracle.all_subgroups() {
            let hz: Vec<u16> = h.iter().chain(z.iter()).copied().collect();
            assert_eq!(oracle.derived(&oracle.close(&hz)), oracle.derived(&h), "{spec}");
        }
    }
}

#[test]
fn symmetric_and_alternating_degrees_match_hook_lengths() {
    for k in 3..=7 {
        let ct = CharacterTable::new(&symmetric(k)).unwrap();
        let mut d = ct.degrees().to_vec();
        d.sort_unstable();
        assert_eq!(d, sym_degrees(k as usize), "sym {k}");
    }
    for k in 4..=8 {
        let ct = CharacterTable::new(&alternating(k)).unwrap();
        let mut d = ct.degrees().to_vec();
        d.sort_unstable();
        assert_eq!(d, alt_degrees(k as usize), "alt {k}");
    }
    assert_eq!(class_count(&symmetric(5)).unwrap(), partitions(5).len());
}

#[test]
fn psl2_and_dihedral_degrees() {
    for q in [5u32, 7, 11, 13] {
        let ct = CharacterTable::new(&psl2(q).unwrap()).unwrap();
        let mut d = ct.degrees().to_vec();
        d.sort_unstable();
        assert_eq!(d, psl2_degrees(q as u64), "psl2 {q}");
    }
    for p in [3u32, 5, 7, 11, 13] {
        let ct = CharacterTable::new(&dihedral(p).unwrap()).unwrap();
        let mut d = ct.degrees().to_vec();
        d.sort_unstable();
        let mut want = vec![1, 1];
        want.extend(std::iter::repeat_n(2, (p as usize - 1) / 2));
        assert_eq!(d, want, "dihedral {p}");
    }
}

#[test]
fn largest_abelian_sections() {
    assert_eq!(largest_abelian_section(&symmetric(4)).unwrap(), 4);
    let g: PermGroup = "deleted 3 5".parse::<GroupSpec>().unwrap().build().unwrap();
    assert!(largest_abelian_section(&g).unwrap() >= 81);
    // brute force on the small ones
    for (spec, g) in small_corpus() {
        let oracle = Oracle::new(&g);
        let subs = oracle.all_subgroups();
        let want = *oracle.ab_growth(&subs).last().unwrap() as u64;
        assert_eq!(largest_abelian_section(&g).unwrap(), want, "{spec}");
    }
}

#[test]
fn subgroup_counts_of_small_groups() {
    let expected: BTreeSet<(&str, usize)> = [("sym 3", 6), ("sym 4", 30), ("alt 4", 10), ("sym 5", 156), ("alt 5", 59)]
        .into_iter()
        .collect();
    for (text, count) in expected {
        let g = text.parse::<GroupSpec>().unwrap().build().unwrap();
        assert_eq!(Oracle::new(&g).all_subgroups().len(), count, "{text}");
        assert_eq!(lattice_and_ab_agree(&g).unwrap(), count, "{text}");
    }
}
