//! Subgroup enumeration by cyclic extension.
//!
//! Every subgroup `K ≠ 1` equals `⟨M, g⟩` for a maximal subgroup `M < K` and
//! any prime-power-order `g ∈ K \ M` (such a `g` exists because `K` is
//! generated by its prime-power elements). Extending one representative
//! per conjugacy class by one element per `(H, H, N_G(H))`-orbit therefore
//! reaches a conjugate of every subgroup.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::bitset::Bitset;
use crate::config::limits;
use crate::enumerated::ElementTable;
use crate::error::{Error, Result};
use crate::group::PermGroup;

/// A subgroup of an enumerated group, as a member set plus generators.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub bits: Bitset,
    pub gens: Vec<u32>,
}

impl Subgroup {
    pub fn order(&self) -> u64 {
        self.bits.count() as u64
    }

    pub fn fingerprint(&self) -> u128 {
        self.bits.fingerprint()
    }
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub rep: PermGroup,
    /// `|G : N_G(rep)|`.
    pub class_length: u64,
    pub order: u64,
    pub index: u64,
    pub fingerprint: u128,
    pub member: Subgroup,
}

pub struct SubgroupLattice {
    table: Arc<ElementTable>,
    pub classes: Vec<SubgroupClass>,
    pub complete_up_to_index: u64,
}

struct ConjOrbit {
    members: Vec<(Bitset, u32)>,
    /// `(j, s, j')` with `members[j]^s = members[j']`.
    edges: Vec<(usize, u32, usize)>,
}

fn conjugacy_orbit(table: &ElementTable, bits: &Bitset, with_edges: bool) -> ConjOrbit {
    let mut members = vec![(bits.clone(), table.identity())];
    let mut seen: FxHashMap<u128, usize> = FxHashMap::default();
    seen.insert(bits.fingerprint(), 0);
    let mut edges = Vec::new();
    let mut head = 0;
    while head < members.len() {
        for &s in table.generator_indices() {
            let c = table.conjugate_bits(&members[head].0, s);
            let fp = c.fingerprint();
            let j = match seen.get(&fp) {
                Some(&j) => j,
                None => {
                    let j = members.len();
                    seen.insert(fp, j);
                    let t = table.mul(members[head].1, s);
                    members.push((c, t));
                    j
                }
            };
            if with_edges {
                edges.push((head, s, j));
            }
        }
        head += 1;
    }
    ConjOrbit { members, edges }
}

/// Normalizer of `h` in the enumerated group.
pub fn normalizer(table: &ElementTable, h: &Subgroup) -> Subgroup {
    let orbit = conjugacy_orbit(table, &h.bits, true);
    let target = table.len() / orbit.members.len();
    let mut bits = h.bits.clone();
    let mut gens = h.gens.clone();
    for &(j, s, k) in &orbit.edges {
        if bits.count() == target {
            break;
        }
        let x = table.mul(
            table.mul(orbit.members[j].1, s),
            table.inv(orbit.members[k].1),
        );
        if !bits.contains(x) {
            gens.push(x);
            bits = table.extend(&bits, &gens);
        }
    }
    debug_assert_eq!(bits.count(), target);
    Subgroup { bits, gens }
}

/// Marks the orbit of `g` under `x ↦ a·x`, `x ↦ x·a` (a ∈ `two_sided`) and
/// `x ↦ b⁻¹·x·b` (b ∈ `conj`).
fn mark_orbit(table: &ElementTable, marked: &mut Bitset, g: u32, two_sided: &[u32], conj: &[u32]) {
    marked.insert(g);
    let mut queue = vec![g];
    while let Some(x) = queue.pop() {
        for &a in two_sided {
            for y in [table.mul(a, x), table.mul(x, a)] {
                if marked.insert(y) {
                    queue.push(y);
                }
            }
        }
        for &b in conj {
            let y = table.conj(x, b);
            if marked.insert(y) {
                queue.push(y);
            }
        }
    }
}

fn is_prime_power(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|d| n % d == 0).expect("n ≥ 2");
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

impl SubgroupLattice {
    /// All conjugacy classes of subgroups of the enumerated group.
    pub fn full(table: Arc<ElementTable>) -> Self {
        let n = table.len();
        let mut lookup: FxHashMap<u128, usize> = FxHashMap::default();
        let mut found: Vec<(Subgroup, u64, u128)> = Vec::new();

        let register = |sub: Subgroup,
                        lookup: &mut FxHashMap<u128, usize>,
                        found: &mut Vec<(Subgroup, u64, u128)>| {
            let orbit = conjugacy_orbit(&table, &sub.bits, false);
            let id = found.len();
            let mut best: Option<(u128, usize)> = None;
            for (j, (b, _)) in orbit.members.iter().enumerate() {
                let fp = b.fingerprint();
                lookup.insert(fp, id);
                if best.is_none_or(|(f, _)| fp < f) {
                    best = Some((fp, j));
                }
            }
            let (fp, j) = best.expect("orbit is non-empty");
            let (bits, t) = orbit.members[j].clone();
            let gens = sub.gens.iter().map(|&x| table.conj(x, t)).collect();
            found.push((Subgroup { bits, gens }, orbit.members.len() as u64, fp));
        };

        register(
            Subgroup {
                bits: table.trivial(),
                gens: Vec::new(),
            },
            &mut lookup,
            &mut found,
        );
        let mut next = 0;
        while next < found.len() {
            let h = found[next].0.clone();
            next += 1;
            if h.order() as usize == n {
                continue;
            }
            let norm = normalizer(&table, &h);
            let mut marked = h.bits.clone();
            for g in 0..n as u32 {
                if marked.contains(g) || !is_prime_power(table.element_order(g)) {
                    continue;
                }
                mark_orbit(&table, &mut marked, g, &h.gens, &norm.gens);
                let mut gens = h.gens.clone();
                gens.push(g);
                let bits = table.extend(&h.bits, &gens);
                if lookup.contains_key(&bits.fingerprint()) {
                    continue;
                }
                register(Subgroup { bits, gens }, &mut lookup, &mut found);
            }
        }

        let order = n as u64;
        let mut classes: Vec<SubgroupClass> = found
            .into_iter()
            .map(|(member, class_length, fingerprint)| SubgroupClass {
                rep: table.group_from_indices(&member.gens),
                class_length,
                order: member.order(),
                index: order / member.order(),
                fingerprint,
                member,
            })
            .collect();
        classes.sort_by_key(|c| (c.index, c.order, c.fingerprint));
        Self {
            table,
            classes,
            complete_up_to_index: order,
        }
    }

    pub fn table(&self) -> &Arc<ElementTable> {
        &self.table
    }

    /// Restriction to classes of index at most `max_index`.
    pub fn truncated(&self, max_index: u64) -> Self {
        Self {
            table: self.table.clone(),
            classes: self
                .classes
                .iter()
                .filter(|c| c.index <= max_index)
                .cloned()
                .collect(),
            complete_up_to_index: max_index.min(self.table.len() as u64),
        }
    }

    /// `Sub_n`: number of subgroups of index at most `n`.
    pub fn count_up_to(&self, n: u64) -> u64 {
        self.classes
            .iter()
            .filter(|c| c.index <= n)
            .map(|c| c.class_length)
            .sum()
    }

    pub fn total_subgroups(&self) -> u64 {
        self.classes.iter().map(|c| c.class_length).sum()
    }

    /// Every member of every class, classes in lattice order.
    pub fn expand(&self) -> Vec<Subgroup> {
        let mut out = Vec::new();
        for c in &self.classes {
            let orbit = conjugacy_orbit(&self.table, &c.member.bits, false);
            for (bits, t) in orbit.members {
                let gens = c.member.gens.iter().map(|&x| self.table.conj(x, t)).collect();
                out.push(Subgroup { bits, gens });
            }
        }
        out
    }

    pub fn is_normal_class(&self, c: &SubgroupClass) -> bool {
        c.class_length == 1
    }
}

pub(crate) fn lattice_table(g: &PermGroup) -> Result<Arc<ElementTable>> {
    let cap = limits().subgroup_cap;
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what: "subgroup enumeration",
            order: g.order(),
            cap,
        });
    }
    Ok(Arc::new(ElementTable::new(g.clone(), cap)?))
}

/// Conjugacy classes of subgroups of index at most `max_index`.
pub fn subgroup_classes(g: &PermGroup, max_index: u64) -> Result<SubgroupLattice> {
    if max_index == 0 {
        return Err(Error::Invalid("max_index must be ≥ 1".into()));
    }
    Ok(SubgroupLattice::full(lattice_table(g)?).truncated(max_index))
}

/// `Sub_n(G)`.
pub fn count_subgroups(g: &PermGroup, n: u64) -> Result<u64> {
    Ok(subgroup_classes(g, n.max(1))?.count_up_to(n))
}

/// All `H` with `Y ≤ H ≤ G` and `|G:H| ≤ max_index`, by breadth-first
/// extension from `Y` with one element per `(H,H)` double coset.
pub fn intermediate_bits(table: &ElementTable, y: &Subgroup, max_index: u64) -> Vec<Subgroup> {
    let n = table.len() as u64;
    let mut seen: FxHashMap<u128, ()> = FxHashMap::default();
    seen.insert(y.fingerprint(), ());
    let mut all = vec![y.clone()];
    let mut head = 0;
    while head < all.len() {
        let h = all[head].clone();
        head += 1;
        let mut marked = h.bits.clone();
        for g in 0..n as u32 {
            if marked.contains(g) {
                continue;
            }
            mark_orbit(table, &mut marked, g, &h.gens, &[]);
            let mut gens = h.gens.clone();
            gens.push(g);
            let bits = table.extend(&h.bits, &gens);
            if seen.insert(bits.fingerprint(), ()).is_none() {
                all.push(Subgroup { bits, gens });
            }
        }
    }
    let mut out: Vec<Subgroup> = all
        .into_iter()
        .filter(|s| n / s.order() <= max_index)
        .collect();
    out.sort_by_key(|s| (n / s.order(), s.fingerprint()));
    out
}

pub fn intermediate_subgroups(g: &PermGroup, y: &PermGroup, max_index: u64) -> Result<Vec<PermGroup>> {
    if !g.is_subgroup(y) {
        return Err(Error::NotSubgroup("Y is not contained in G".into()));
    }
    let table = lattice_table(g)?;
    let ys = Subgroup {
        bits: table.subgroup_bits(y),
        gens: y.generators().iter().map(|p| table.index_of(p).expect("in G")).collect(),
    };
    Ok(intermediate_bits(&table, &ys, max_index)
        .iter()
        .map(|s| table.group_from_indices(&s.gens))
        .collect())
}

/// All normal subgroups: joins of normal closures of single conjugacy
/// classes. Sorted by order, then fingerprint.
pub fn normal_subgroup_bits(table: &ElementTable) -> Vec<Subgroup> {
    let classes = table.classes();
    let gens = table.generator_indices().to_vec();
    let mut found: Vec<Subgroup> = Vec::new();
    let mut seen: FxHashMap<u128, ()> = FxHashMap::default();
    let mut push = |s: Subgroup, found: &mut Vec<Subgroup>| {
        if seen.insert(s.fingerprint(), ()).is_none() {
            found.push(s);
            true
        } else {
            false
        }
    };
    push(
        Subgroup {
            bits: table.trivial(),
            gens: Vec::new(),
        },
        &mut found,
    );
    for &r in &classes.reps[1..] {
        let (bits, ngens) = table.normal_closure(&gens, &[r]);
        push(Subgroup { bits, gens: ngens }, &mut found);
    }
    let minimal_count = found.len();
    let mut i = 0;
    while i < found.len() {
        for j in 1..minimal_count {
            if found[j].bits.is_subset(&found[i].bits) {
                continue;
            }
            let mut g2 = found[i].gens.clone();
            g2.extend(found[j].gens.iter().copied());
            let bits = table.extend(&found[i].bits, &g2);
            push(Subgroup { bits, gens: g2 }, &mut found);
        }
        i += 1;
    }
    found.sort_by_key(|s| (s.order(), s.fingerprint()));
    found
}

pub fn normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let table = lattice_table(g)?;
    Ok(normal_subgroup_bits(&table)
        .iter()
        .map(|s| table.group_from_indices(&s.gens))
        .collect())
}

pub fn is_abelian_bits(table: &ElementTable, s: &Subgroup) -> bool {
    let g = &s.gens;
    (0..g.len()).all(|i| (i + 1..g.len()).all(|j| table.mul(g[i], g[j]) == table.mul(g[j], g[i])))
}

/// `min |G:A|` over abelian normal subgroups `A`.
pub fn min_abelian_normal_index_of(table: &ElementTable) -> u64 {
    let n = table.len() as u64;
    normal_subgroup_bits(table)
        .iter()
        .filter(|s| is_abelian_bits(table, s))
        .map(|s| n / s.order())
        .min()
        .unwrap_or(n)
}

pub fn min_abelian_normal_index(g: &PermGroup) -> Result<u64> {
    let table = lattice_table(g)?;
    Ok(min_abelian_normal_index_of(&table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    #[test]
    fn s3_classes() {
        let lat = subgroup_classes(&symmetric(3), 6).unwrap();
        let shape: Vec<(u64, u64, u64)> = lat
            .classes
            .iter()
            .map(|c| (c.index, c.order, c.class_length))
            .collect();
        assert_eq!(shape, vec![(1, 6, 1), (2, 3, 1), (3, 2, 3), (6, 1, 1)]);
        assert_eq!(lat.count_up_to(2), 2);
        assert_eq!(lat.count_up_to(6), 6);
    }

    #[test]
    fn s4_lattice() {
        let lat = subgroup_classes(&symmetric(4), 24).unwrap();
        assert_eq!(lat.classes.len(), 11);
        assert_eq!(lat.total_subgroups(), 30);
        assert_eq!(lat.expand().len(), 30);
        let one = subgroup_classes(&symmetric(4), 1).unwrap();
        assert_eq!(one.classes.len(), 1);
        assert_eq!(one.classes[0].order, 24);
    }

    #[test]
    fn known_subgroup_totals() {
        // standard counts
        assert_eq!(subgroup_classes(&alternating(5), 60).unwrap().total_subgroups(), 59);
        assert_eq!(subgroup_classes(&symmetric(5), 120).unwrap().total_subgroups(), 156);
        assert_eq!(subgroup_classes(&alternating(5), 60).unwrap().classes.len(), 9);
        assert_eq!(subgroup_classes(&symmetric(5), 120).unwrap().classes.len(), 19);
    }

    #[test]
    fn intermediates() {
        let s4 = symmetric(4);
        let y = s4.point_stabilizer(0).unwrap();
        let mids = intermediate_subgroups(&s4, &y, 24).unwrap();
        assert_eq!(mids.iter().map(|h| h.order()).collect::<Vec<_>>(), vec![24, 6]);
        let mids = intermediate_subgroups(&s4, &s4, 24).unwrap();
        assert_eq!(mids.len(), 1);
        let d5 = dihedral(5).unwrap();
        let r = d5.point_stabilizer(0).unwrap();
        let mids = intermediate_subgroups(&d5, &r, 10).unwrap();
        assert_eq!(mids.iter().map(|h| h.order()).collect::<Vec<_>>(), vec![10, 2]);
    }

    #[test]
    fn normal_subgroup_lists() {
        let orders = |g: &PermGroup| -> Vec<u64> {
            normal_subgroups(g).unwrap().iter().map(|h| h.order()).collect()
        };
        assert_eq!(orders(&symmetric(4)), vec![1, 4, 12, 24]);
        assert_eq!(orders(&alternating(5)), vec![1, 60]);
        assert_eq!(orders(&cyclic(6)).len(), 4);
    }

    #[test]
    fn abelian_normal_index() {
        assert_eq!(min_abelian_normal_index(&cyclic(12)).unwrap(), 1);
        assert_eq!(min_abelian_normal_index(&symmetric(4)).unwrap(), 6);
        assert_eq!(min_abelian_normal_index(&alternating(5)).unwrap(), 60);
    }

    #[test]
    fn prime_powers() {
        assert!(is_prime_power(8) && is_prime_power(7) && is_prime_power(9));
        assert!(!is_prime_power(6) && !is_prime_power(1) && !is_prime_power(12));
    }
}
