//! Abelianization, representation and subgroup growth, absolute and
//! relative to a fixed subgroup `Y`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::CharacterTable;
use crate::constructors::GroupSpec;
use crate::enumerated::ElementTable;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::subgroups::{intermediate_bits, lattice_table, normalizer, Subgroup, SubgroupLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthKind {
    Ab,
    Rep,
    Sub,
    AbRel,
    RepRel,
}

/// A non-decreasing function `n ↦ value` on `1..=n_max`, stored at the
/// points where it jumps.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthTable {
    pub group: Option<GroupSpec>,
    pub kind: GrowthKind,
    pub n_max: u64,
    pub baseline: Option<String>,
    /// `(n, value)` with `n` and `value` strictly increasing; starts at `n = 1`.
    pub jumps: Vec<(u64, u64)>,
}

impl GrowthTable {
    fn from_steps(kind: GrowthKind, n_max: u64, mut steps: Vec<(u64, u64)>, sum: bool) -> Self {
        steps.sort_unstable();
        let mut jumps = vec![(1u64, 0u64)];
        let mut current = 0u64;
        for (t, v) in steps {
            if t > n_max {
                break;
            }
            let next = if sum { current + v } else { current.max(v) };
            if next == current {
                continue;
            }
            current = next;
            let t = t.max(1);
            match jumps.last_mut() {
                Some(last) if last.0 == t => last.1 = current,
                _ => jumps.push((t, current)),
            }
        }
        Self {
            group: None,
            kind,
            n_max,
            baseline: None,
            jumps,
        }
    }

    /// `value(n) = max { v : (t, v) in points, t ≤ n }`.
    pub fn from_max(kind: GrowthKind, n_max: u64, points: Vec<(u64, u64)>) -> Self {
        Self::from_steps(kind, n_max, points, false)
    }

    /// `value(n) = Σ { c : (t, c) in points, t ≤ n }`.
    pub fn from_counts(kind: GrowthKind, n_max: u64, points: Vec<(u64, u64)>) -> Self {
        Self::from_steps(kind, n_max, points, true)
    }

    pub fn with_group(mut self, spec: Option<GroupSpec>) -> Self {
        self.group = spec;
        self
    }

    pub fn with_baseline(mut self, baseline: Option<String>) -> Self {
        self.baseline = baseline;
        self
    }

    /// Value at `n ≥ 1`; constant past the last jump, including `n > n_max`.
    pub fn value(&self, n: u64) -> u64 {
        assert!(n >= 1, "growth functions start at n = 1");
        let i = self.jumps.partition_point(|&(t, _)| t <= n);
        self.jumps[i - 1].1
    }

    pub fn dense(&self) -> Vec<u64> {
        (1..=self.n_max).map(|n| self.value(n)).collect()
    }

    /// Value at `n_max`.
    pub fn saturation(&self) -> u64 {
        self.value(self.n_max.max(1))
    }

    pub fn is_constant(&self, v: u64) -> bool {
        self.jumps.len() == 1 && self.jumps[0].1 == v
    }
}

/// `|H/H'|`.
pub fn abelianization_order(h: &PermGroup) -> u64 {
    h.order() / h.derived_subgroup().order()
}

pub fn abelianization_order_bits(table: &ElementTable, h: &Subgroup) -> u64 {
    h.order() / table.derived(&h.gens).count() as u64
}

/// `|H / H'Y|` for `Y ≤ H` given as element sets of one table.
pub fn relative_ab_order_bits(table: &ElementTable, h: &Subgroup, y: &Subgroup) -> u64 {
    let derived = table.derived(&h.gens);
    let hy = table.extend(&derived, &y.gens);
    h.order() / hy.count() as u64
}

/// `|H / H'Y|`; errors if `Y ⊄ H`, and checks that `H'Y` is normal in `H`.
pub fn relative_ab_order(h: &PermGroup, y: &PermGroup) -> Result<u64> {
    if !h.is_subgroup(y) {
        return Err(Error::NotSubgroup("Y is not contained in H".into()));
    }
    let mut gens = h.derived_subgroup().generators().to_vec();
    gens.extend(y.generators().iter().cloned());
    let hy = h.subgroup_generated(&gens)?;
    if !h.is_normal(&hy)? {
        return Err(Error::Invalid("H'Y is not normal in H".into()));
    }
    Ok(h.order() / hy.order())
}

/// `|H/H'|` for every class of the lattice, in lattice order.
pub fn class_abelianizations(lattice: &SubgroupLattice) -> Vec<u64> {
    let table = lattice.table();
    lattice
        .classes
        .par_iter()
        .map(|c| abelianization_order_bits(table, &c.member))
        .collect()
}

pub fn ab_growth_of(lattice: &SubgroupLattice, n_max: u64) -> GrowthTable {
    let abs = class_abelianizations(lattice);
    ab_growth_from(lattice, &abs, n_max)
}

pub fn ab_growth_from(lattice: &SubgroupLattice, abs: &[u64], n_max: u64) -> GrowthTable {
    let points = lattice.classes.iter().zip(abs).map(|(c, &a)| (c.index, a)).collect();
    GrowthTable::from_max(GrowthKind::Ab, n_max, points)
}

/// `ab_n(G)` for `1 ≤ n ≤ n_max`, over one representative per subgroup class.
pub fn ab_growth(g: &PermGroup, n_max: u64) -> Result<GrowthTable> {
    let lattice = SubgroupLattice::full(lattice_table(g)?);
    Ok(ab_growth_of(&lattice, n_max))
}

/// `Sub_n(G)`.
pub fn sub_growth_of(lattice: &SubgroupLattice, n_max: u64) -> GrowthTable {
    let points = lattice.classes.iter().map(|c| (c.index, c.class_length)).collect();
    GrowthTable::from_counts(GrowthKind::Sub, n_max, points)
}

pub fn sub_growth(g: &PermGroup, n_max: u64) -> Result<GrowthTable> {
    Ok(sub_growth_of(&SubgroupLattice::full(lattice_table(g)?), n_max))
}

/// `ab_n(G, Y)` from the subgroups between `Y` and `G`.
pub fn ab_growth_rel_of(table: &ElementTable, y: &Subgroup, n_max: u64) -> GrowthTable {
    let inter = intermediate_bits(table, y, table.len() as u64);
    ab_growth_rel_from(table, y, &inter, n_max)
}

pub fn ab_growth_rel_from(table: &ElementTable, y: &Subgroup, inter: &[Subgroup], n_max: u64) -> GrowthTable {
    let n = table.len() as u64;
    let points = inter
        .par_iter()
        .map(|h| (n / h.order(), relative_ab_order_bits(table, h, y)))
        .collect();
    GrowthTable::from_max(GrowthKind::AbRel, n_max, points)
}

pub(crate) fn subgroup_in(table: &ElementTable, y: &PermGroup) -> Result<Subgroup> {
    if !table.group().is_subgroup(y) {
        return Err(Error::NotSubgroup("Y is not contained in G".into()));
    }
    Ok(Subgroup {
        bits: table.subgroup_bits(y),
        gens: y
            .generators()
            .iter()
            .map(|p| table.index_of(p).expect("generator of a subgroup"))
            .collect(),
    })
}

pub fn ab_growth_rel(g: &PermGroup, y: &PermGroup, n_max: u64) -> Result<GrowthTable> {
    let table = lattice_table(g)?;
    let ys = subgroup_in(&table, y)?;
    Ok(ab_growth_rel_of(&table, &ys, n_max))
}

/// `ab_{|G|}(G)`, the order of the largest abelian section.
pub fn largest_abelian_section(g: &PermGroup) -> Result<u64> {
    Ok(ab_growth(g, g.order())?.saturation())
}

pub fn rep_growth_of(table: &CharacterTable, n_max: u64) -> GrowthTable {
    let points = table.degrees().iter().map(|&d| (d, 1)).collect();
    GrowthTable::from_counts(GrowthKind::Rep, n_max, points)
}

/// `Rep_n(G)`: irreducibles of degree at most `n`.
pub fn rep_growth(g: &PermGroup, n_max: u64) -> Result<GrowthTable> {
    Ok(rep_growth_of(&CharacterTable::new(g)?, n_max))
}

/// `Rep_n(G, Y)`: irreducibles of degree at most `n` with a `Y`-fixed vector.
pub fn rep_growth_rel_of(table: &CharacterTable, y: &Subgroup, n_max: u64) -> GrowthTable {
    let rel = table.rep_rel_counts(&y.bits);
    let points = rel.degrees.iter().map(|&d| (d, 1)).collect();
    GrowthTable::from_counts(GrowthKind::RepRel, n_max, points)
}

pub fn rep_growth_rel(g: &PermGroup, y: &PermGroup, n_max: u64) -> Result<GrowthTable> {
    let table = CharacterTable::new(g)?;
    let ys = subgroup_in(table.element_table(), y)?;
    Ok(rep_growth_rel_of(&table, &ys, n_max))
}

/// Every subgroup between `Y` and `G` is self-normalizing.
pub fn is_weakly_abnormal_of(table: &ElementTable, y: &Subgroup) -> bool {
    intermediate_bits(table, y, table.len() as u64)
        .par_iter()
        .all(|h| normalizer(table, h).order() == h.order())
}

pub fn is_weakly_abnormal(g: &PermGroup, y: &PermGroup) -> Result<bool> {
    let table = lattice_table(g)?;
    let ys = subgroup_in(&table, y)?;
    Ok(is_weakly_abnormal_of(&table, &ys))
}

/// `(|H/H'|, |G:N| |N/N'|)` with `N` the normal core of `H`.
pub fn bab_chain_of(table: &ElementTable, h: &Subgroup) -> (u64, u64) {
    let core = table.core(&h.bits);
    let core_gens = table.generators_of(&core);
    let n = Subgroup {
        bits: core,
        gens: core_gens,
    };
    let lhs = abelianization_order_bits(table, h);
    let rhs = table.len() as u64 / n.order() * abelianization_order_bits(table, &n);
    (lhs, rhs)
}

pub fn bab_chain_bound(g: &PermGroup, h: &PermGroup) -> Result<(u64, u64)> {
    let table = lattice_table(g)?;
    let hs = subgroup_in(&table, h)?;
    Ok(bab_chain_of(&table, &hs))
}
