//! Lazily computed data for one enumerated group, shared by the checks.

use std::sync::{Arc, OnceLock};

use crate::bitset::Bitset;
use crate::characters::CharacterTable;
use crate::constructors::GroupSpec;
use crate::enumerated::ElementTable;
use crate::error::Result;
use crate::group::PermGroup;
use crate::growth::{
    ab_growth_from, class_abelianizations, relative_ab_order_bits, rep_growth_of, rep_growth_rel_of,
    sub_growth_of, GrowthKind, GrowthTable,
};
use crate::perm::Permutation;
use crate::subgroups::{intermediate_bits, lattice_table, normal_subgroup_bits, Subgroup, SubgroupLattice};

pub struct GroupData {
    pub spec: Option<GroupSpec>,
    table: Arc<ElementTable>,
    lattice: OnceLock<SubgroupLattice>,
    class_ab: OnceLock<Vec<u64>>,
    expanded: OnceLock<Vec<(Subgroup, usize)>>,
    normals: OnceLock<Vec<Subgroup>>,
    chars: OnceLock<CharacterTable>,
    rep_tables: OnceLock<Vec<GrowthTable>>,
    quotients: OnceLock<Vec<OnceLock<Arc<Quotient>>>>,
}

/// `G/N` realized as the action on the cosets of `N`.
pub struct Quotient {
    pub normal: Subgroup,
    pub data: GroupData,
    coset_of: Vec<u32>,
    reps: Vec<u32>,
}

impl Quotient {
    /// Index in the quotient's table of the image of element `x` of `G`.
    pub fn image_of(&self, parent: &ElementTable, x: u32) -> u32 {
        let p = parent.coset_permutation(&self.coset_of, &self.reps, x);
        self.data.table().index_of(&p).expect("image lies in the quotient")
    }

    pub fn image_subgroup(&self, parent: &ElementTable, s: &Subgroup) -> Subgroup {
        let t = self.data.table();
        let gens: Vec<u32> = s.gens.iter().map(|&x| self.image_of(parent, x)).collect();
        Subgroup {
            bits: t.closure(&gens),
            gens,
        }
    }
}

impl GroupData {
    pub fn new(group: PermGroup, spec: Option<GroupSpec>) -> Result<Self> {
        Ok(Self::from_table(lattice_table(&group)?, spec))
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        Self::new(spec.build()?, Some(spec.clone()))
    }

    pub fn from_table(table: Arc<ElementTable>, spec: Option<GroupSpec>) -> Self {
        Self {
            spec,
            table,
            lattice: OnceLock::new(),
            class_ab: OnceLock::new(),
            expanded: OnceLock::new(),
            normals: OnceLock::new(),
            chars: OnceLock::new(),
            rep_tables: OnceLock::new(),
            quotients: OnceLock::new(),
        }
    }

    pub fn table(&self) -> &Arc<ElementTable> {
        &self.table
    }

    pub fn group(&self) -> &PermGroup {
        self.table.group()
    }

    pub fn order(&self) -> u64 {
        self.table.len() as u64
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            bits: self.table.full(),
            gens: self.table.generator_indices().to_vec(),
        }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup {
            bits: self.table.trivial(),
            gens: Vec::new(),
        }
    }

    pub fn subgroup(&self, gens: &[u32]) -> Subgroup {
        Subgroup {
            bits: self.table.closure(gens),
            gens: gens.to_vec(),
        }
    }

    pub fn subgroup_of(&self, h: &PermGroup) -> Result<Subgroup> {
        crate::growth::subgroup_in(&self.table, h)
    }

    pub fn to_group(&self, s: &Subgroup) -> PermGroup {
        self.table.group_from_indices(&s.gens)
    }

    pub fn generators_as_perms(&self, s: &Subgroup) -> Vec<Permutation> {
        s.gens.iter().map(|&x| self.table.element(x).clone()).collect()
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        self.lattice.get_or_init(|| SubgroupLattice::full(self.table.clone()))
    }

    /// `|H/H'|` per lattice class.
    pub fn class_ab(&self) -> &[u64] {
        self.class_ab.get_or_init(|| class_abelianizations(self.lattice()))
    }

    /// Every subgroup with its class number.
    pub fn expanded(&self) -> &[(Subgroup, usize)] {
        self.expanded.get_or_init(|| {
            let lattice = self.lattice();
            let mut out = Vec::new();
            let mut current = 0usize;
            let mut remaining = 0u64;
            for s in lattice.expand() {
                if remaining == 0 {
                    remaining = lattice.classes[current].class_length;
                    current += 1;
                }
                remaining -= 1;
                out.push((s, current - 1));
            }
            out
        })
    }

    pub fn normals(&self) -> &[Subgroup] {
        self.normals.get_or_init(|| normal_subgroup_bits(&self.table))
    }

    pub fn characters(&self) -> Result<&CharacterTable> {
        if let Some(c) = self.chars.get() {
            return Ok(c);
        }
        let table = CharacterTable::from_table(self.table.clone())?;
        let _ = self.chars.set(table);
        Ok(self.chars.get().expect("just set"))
    }

    pub fn ab_table(&self) -> GrowthTable {
        ab_growth_from(self.lattice(), self.class_ab(), self.order()).with_group(self.spec.clone())
    }

    pub fn sub_table(&self) -> GrowthTable {
        sub_growth_of(self.lattice(), self.order()).with_group(self.spec.clone())
    }

    pub fn rep_table(&self) -> Result<GrowthTable> {
        Ok(rep_growth_of(self.characters()?, self.order()).with_group(self.spec.clone()))
    }

    /// `ab_n(H)` for a subgroup `H`, read off the subgroups of `G` inside `H`.
    pub fn ab_of_subgroup(&self, h: &Subgroup) -> GrowthTable {
        let ho = h.order();
        let abs = self.class_ab();
        let points = self
            .expanded()
            .iter()
            .filter(|(k, _)| k.bits.is_subset(&h.bits))
            .map(|(k, c)| (ho / k.order(), abs[*c]))
            .collect();
        GrowthTable::from_max(GrowthKind::Ab, ho, points)
    }

    /// `Rep_n` of each lattice class representative.
    pub fn class_rep_tables(&self) -> Result<&[GrowthTable]> {
        if let Some(t) = self.rep_tables.get() {
            return Ok(t);
        }
        let tables = self
            .lattice()
            .classes
            .iter()
            .map(|c| {
                let h = self.to_group(&c.member);
                Ok(rep_growth_of(&CharacterTable::new(&h)?, c.order))
            })
            .collect::<Result<Vec<_>>>()?;
        let _ = self.rep_tables.set(tables);
        Ok(self.rep_tables.get().expect("just set"))
    }

    pub fn intermediates(&self, y: &Subgroup) -> Vec<Subgroup> {
        intermediate_bits(&self.table, y, self.order())
    }

    /// `ab_n(G, Y)` given the subgroups between `Y` and `G`.
    pub fn ab_rel_table(&self, y: &Subgroup, inter: &[Subgroup]) -> GrowthTable {
        crate::growth::ab_growth_rel_from(&self.table, y, inter, self.order()).with_group(self.spec.clone())
    }

    /// `ab_n(H, Y)` from the subgroups between `Y` and `G` that lie in `H`.
    pub fn ab_rel_of_subgroup(&self, h: &Subgroup, y: &Subgroup, inter: &[Subgroup]) -> GrowthTable {
        let ho = h.order();
        let points = inter
            .iter()
            .filter(|k| k.bits.is_subset(&h.bits))
            .map(|k| (ho / k.order(), relative_ab_order_bits(&self.table, k, y)))
            .collect();
        GrowthTable::from_max(GrowthKind::AbRel, ho, points)
    }

    pub fn rep_rel_table(&self, y: &Subgroup) -> Result<GrowthTable> {
        Ok(rep_growth_rel_of(self.characters()?, y, self.order()).with_group(self.spec.clone()))
    }

    /// `Rep_n(H, Y)` computed from the character table of `H`.
    pub fn rep_rel_of_subgroup(&self, h: &Subgroup, y: &Subgroup) -> Result<GrowthTable> {
        let hg = self.to_group(h);
        let ct = CharacterTable::new(&hg)?;
        let yg = self.to_group(y);
        let ys = crate::growth::subgroup_in(ct.element_table(), &yg)?;
        Ok(rep_growth_rel_of(&ct, &ys, h.order()))
    }

    pub fn center(&self) -> Subgroup {
        let bits = self.table.center();
        let gens = self.table.generators_of(&bits);
        Subgroup { bits, gens }
    }

    /// `G/N` for the `i`-th normal subgroup.
    pub fn quotient(&self, i: usize) -> Result<Arc<Quotient>> {
        let slots = self
            .quotients
            .get_or_init(|| (0..self.normals().len()).map(|_| OnceLock::new()).collect());
        if let Some(q) = slots[i].get() {
            return Ok(q.clone());
        }
        let normal = self.normals()[i].clone();
        let action = self.table.coset_action(&normal.bits);
        let data = GroupData::new(action.image, None)?;
        let q = Arc::new(Quotient {
            normal,
            data,
            coset_of: action.coset_of,
            reps: action.reps,
        });
        let _ = slots[i].set(q);
        Ok(slots[i].get().expect("just set").clone())
    }

    /// Normal subgroups of `G` strictly between `1` and `G`, by index in [`normals`](Self::normals).
    pub fn proper_normal_indices(&self) -> Vec<usize> {
        let n = self.order();
        self.normals()
            .iter()
            .enumerate()
            .filter(|(_, s)| s.order() > 1 && s.order() < n)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_trivial_subgroup(&self, s: &Subgroup) -> bool {
        s.order() == 1
    }

    pub fn bits_of(&self, elems: impl IntoIterator<Item = u32>) -> Bitset {
        Bitset::from_indices(self.table.len(), elems)
    }
}

/// `n` values checked for a group of the given order: `1..=min(order, 60)`
/// and the order itself.
pub fn n_range(order: u64) -> Vec<u64> {
    let mut ns: Vec<u64> = (1..=order.min(60)).collect();
    if order > 60 {
        ns.push(order);
    }
    ns
}
