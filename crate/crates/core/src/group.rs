//! Permutation groups backed by a stabilizer chain.
//!
//! The chain is built by deterministic Schreier–Sims: base points are
//! chosen as the smallest point moved by the element that forces a new
//! level, and Schreier generators are visited in orbit order.

use std::fmt;

use crate::config::limits;
use crate::enumerated::ElementTable;
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone)]
struct Level {
    base_point: u32,
    /// Indices into `StabChain::strong` of generators fixing every earlier base point.
    gens: Vec<usize>,
    orbit: Vec<u32>,
    /// For each point in the orbit, the generator index and predecessor it was reached from.
    schreier: Vec<Option<(usize, u32)>>,
}

#[derive(Clone)]
struct StabChain {
    degree: usize,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabChain {
    fn empty(degree: usize) -> Self {
        Self {
            degree,
            strong: Vec::new(),
            levels: Vec::new(),
        }
    }

    fn build(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = Self::empty(degree);
        for g in gens {
            if g.is_identity() || chain.strong.contains(g) {
                continue;
            }
            chain.strong.push(g.clone());
            if chain
                .levels
                .iter()
                .all(|l| g.apply(l.base_point) == l.base_point)
            {
                let pt = g.smallest_moved_point().expect("non-identity");
                chain.push_level(pt);
            }
        }
        for i in 0..chain.levels.len() {
            chain.refresh_level(i);
        }
        chain.complete();
        chain
    }

    fn push_level(&mut self, base_point: u32) {
        self.levels.push(Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            schreier: Vec::new(),
        });
    }

    fn refresh_level(&mut self, i: usize) {
        let fixed: Vec<u32> = self.levels[..i].iter().map(|l| l.base_point).collect();
        let gens: Vec<usize> = (0..self.strong.len())
            .filter(|&s| fixed.iter().all(|&b| self.strong[s].apply(b) == b))
            .collect();
        let base_point = self.levels[i].base_point;
        let mut schreier = vec![None; self.degree];
        let mut seen = vec![false; self.degree];
        seen[base_point as usize] = true;
        let mut orbit = vec![base_point];
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for &s in &gens {
                let q = self.strong[s].apply(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    schreier[q as usize] = Some((s, p));
                    orbit.push(q);
                }
            }
        }
        let level = &mut self.levels[i];
        level.gens = gens;
        level.orbit = orbit;
        level.schreier = schreier;
    }

    /// Coset representative `u` at level `i` with `base_point^u = point`.
    fn transversal(&self, i: usize, point: u32) -> Option<Permutation> {
        let level = &self.levels[i];
        if point == level.base_point {
            return Some(Permutation::identity(self.degree));
        }
        let mut word = Vec::new();
        let mut p = point;
        while p != level.base_point {
            let (s, prev) = level.schreier[p as usize]?;
            word.push(s);
            p = prev;
        }
        let mut u = Permutation::identity(self.degree);
        for &s in word.iter().rev() {
            u = u.compose(&self.strong[s]);
        }
        Some(u)
    }

    /// Strips `g` through the chain from level `start`; returns the residue
    /// and the level where sifting stopped.
    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for i in start..self.levels.len() {
            let beta = g.apply(self.levels[i].base_point);
            match self.transversal(i, beta) {
                Some(u) => g = g.compose(&u.inverse()),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let level = i as usize;
            let orbit = self.levels[level].orbit.clone();
            let gens = self.levels[level].gens.clone();
            for &beta in &orbit {
                let u = self.transversal(level, beta).expect("orbit point");
                for &s in &gens {
                    let image = self.strong[s].apply(beta);
                    let v = self.transversal(level, image).expect("orbit point");
                    let schreier = u.compose(&self.strong[s]).compose(&v.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.sift_from(schreier, level + 1);
                    if h.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let pt = h.smallest_moved_point().expect("non-identity");
                        self.push_level(pt);
                    }
                    self.strong.push(h);
                    for l in level + 1..=j {
                        self.refresh_level(l);
                    }
                    i = j as isize;
                    continue 'outer;
                }
            }
            i -= 1;
        }
    }

    fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }
}

/// A finitely generated permutation group of fixed degree.
///
/// Immutable after construction; the stabilizer chain is computed eagerly.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, order {}, gens [", self.degree, self.order())?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let chain = StabChain::build(degree, &gens);
        Ok(Self {
            degree,
            generators: gens,
            chain,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            generators: Vec::new(),
            chain: StabChain::empty(degree),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.chain.order()
    }

    pub fn base(&self) -> Vec<u32> {
        self.chain.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.chain.strong
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    fn check_degree(&self, g: &Permutation) -> Result<()> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        self.check_degree(g)?;
        Ok(self.contains_unchecked(g))
    }

    pub(crate) fn contains_unchecked(&self, g: &Permutation) -> bool {
        let (h, j) = self.chain.sift_from(g.clone(), 0);
        j == self.chain.levels.len() && h.is_identity()
    }

    /// True iff `h` is a subgroup of `self` on the same points.
    pub fn is_subgroup(&self, h: &PermGroup) -> bool {
        h.degree == self.degree && h.generators.iter().all(|g| self.contains_unchecked(g))
    }

    fn require_subgroup(&self, h: &PermGroup) -> Result<()> {
        if h.degree != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: h.degree,
            });
        }
        if let Some(g) = h.generators.iter().find(|g| !self.contains_unchecked(g)) {
            return Err(Error::NotSubgroup(format!("generator {g} lies outside the group")));
        }
        Ok(())
    }

    /// Equality as sets of permutations.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.is_subgroup(other)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].compose(&g[j]) == g[j].compose(&g[i])))
    }

    pub fn subgroup_generated(&self, elems: &[Permutation]) -> Result<PermGroup> {
        for e in elems {
            self.check_degree(e)?;
            if !self.contains_unchecked(e) {
                return Err(Error::NotInGroup(e.to_string()));
            }
        }
        PermGroup::new(self.degree, elems.to_vec())
    }

    /// Smallest normal subgroup of `self` containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        for s in seeds {
            self.check_degree(s)?;
            if !self.contains_unchecked(s) {
                return Err(Error::NotInGroup(s.to_string()));
            }
        }
        Ok(self.normal_closure_unchecked(seeds))
    }

    fn normal_closure_unchecked(&self, seeds: &[Permutation]) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(self.degree);
        let mut queue: Vec<Permutation> = seeds.to_vec();
        queue.reverse();
        while let Some(x) = queue.pop() {
            if current.contains_unchecked(&x) {
                continue;
            }
            gens.push(x.clone());
            current = PermGroup::new(self.degree, gens.clone()).expect("degree checked");
            for g in &self.generators {
                queue.push(x.conjugate_by(g));
            }
        }
        current
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let g = &self.generators;
        let mut comms = Vec::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let c = g[i].commutator(&g[j]);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_unchecked(&comms)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// True iff `h ≤ self` and `h` is normalized by every generator.
    pub fn is_normal(&self, h: &PermGroup) -> Result<bool> {
        self.require_subgroup(h)?;
        Ok(self.generators.iter().all(|g| {
            h.generators
                .iter()
                .all(|x| h.contains_unchecked(&x.conjugate_by(g)))
        }))
    }

    /// `g⁻¹ H g`.
    pub fn conjugate_subgroup(h: &PermGroup, g: &Permutation) -> Result<PermGroup> {
        h.check_degree(g)?;
        PermGroup::new(
            h.degree,
            h.generators.iter().map(|x| x.conjugate_by(g)).collect(),
        )
    }

    /// Stabilizer of `point`, from the Schreier generators of its orbit.
    pub fn point_stabilizer(&self, point: u32) -> Result<PermGroup> {
        if point as usize >= self.degree {
            return Err(Error::PointOutOfRange {
                point: point as usize,
                degree: self.degree,
            });
        }
        let mut reps: Vec<Option<Permutation>> = vec![None; self.degree];
        reps[point as usize] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            let u = reps[p as usize].clone().expect("orbit point");
            for g in &self.generators {
                let q = g.apply(p);
                if reps[q as usize].is_none() {
                    reps[q as usize] = Some(u.compose(g));
                    orbit.push(q);
                }
            }
        }
        let mut gens: Vec<Permutation> = Vec::new();
        let mut stab = PermGroup::trivial(self.degree);
        let target = self.order() / orbit.len() as u64;
        'scan: for &p in &orbit {
            let u = reps[p as usize].as_ref().expect("orbit point");
            for g in &self.generators {
                let v = reps[g.apply(p) as usize].as_ref().expect("orbit point");
                let s = u.compose(g).compose(&v.inverse());
                if !stab.contains_unchecked(&s) {
                    gens.push(s);
                    stab = PermGroup::new(self.degree, gens.clone())?;
                    if stab.order() == target {
                        break 'scan;
                    }
                }
            }
        }
        Ok(stab)
    }

    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Direct product acting on the disjoint union of the two point sets.
    pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
        let total = a.degree + b.degree;
        let mut gens: Vec<Permutation> = a
            .generators
            .iter()
            .map(|g| g.shifted(0, total))
            .collect();
        gens.extend(b.generators.iter().map(|g| g.shifted(a.degree, total)));
        PermGroup::new(total, gens).expect("degrees agree by construction")
    }

    /// All elements in increasing image-array order. Subject to the element cap.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        let cap = limits().element_cap;
        if self.order() > cap {
            return Err(Error::CapExceeded {
                what: "elements",
                order: self.order(),
                cap,
            });
        }
        let mut out = vec![Permutation::identity(self.degree)];
        for i in (0..self.chain.levels.len()).rev() {
            let reps: Vec<Permutation> = self.chain.levels[i]
                .orbit
                .iter()
                .map(|&p| self.chain.transversal(i, p).expect("orbit point"))
                .collect();
            let mut next = Vec::with_capacity(out.len() * reps.len());
            for x in &out {
                for u in &reps {
                    next.push(x.compose(u));
                }
            }
            out = next;
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn center(&self) -> Result<PermGroup> {
        let table = ElementTable::new(self.clone(), limits().element_cap)?;
        let z = table.center();
        Ok(table.to_group(&z))
    }

    /// Largest normal subgroup of `self` contained in `h`.
    pub fn normal_core(&self, h: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h)?;
        if self.is_normal(h)? {
            return Ok(h.clone());
        }
        let table = ElementTable::new(self.clone(), limits().element_cap)?;
        let hb = table.subgroup_bits(h);
        let core = table.core(&hb);
        Ok(table.to_group(&core))
    }

    /// Action of `self` on the right cosets of `h`, numbered in order of
    /// their smallest element. Returns the image group and the kernel.
    pub fn coset_action(&self, h: &PermGroup) -> Result<(PermGroup, PermGroup)> {
        self.require_subgroup(h)?;
        let table = ElementTable::new(self.clone(), limits().element_cap)?;
        let hb = table.subgroup_bits(h);
        let action = table.coset_action(&hb);
        let kernel = table.to_group(&table.core(&hb));
        Ok((action.image, kernel))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: usize, s: &str) -> Permutation {
        Permutation::parse(d, s).unwrap()
    }

    fn sym(k: usize) -> PermGroup {
        let cyc: Vec<u32> = (0..k as u32).collect();
        PermGroup::new(
            k,
            vec![
                Permutation::from_cycles(k, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(k, &[&cyc]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn orders_from_chain() {
        assert_eq!(sym(3).order(), 6);
        assert_eq!(sym(5).order(), 120);
        assert_eq!(sym(7).order(), 5040);
        assert_eq!(PermGroup::new(5, vec![]).unwrap().order(), 1);
        let klein = PermGroup::new(4, vec![p(4, "(0 1)(2 3)"), p(4, "(0 2)(1 3)")]).unwrap();
        assert_eq!(klein.order(), 4);
    }

    #[test]
    fn membership() {
        let a3 = PermGroup::new(3, vec![p(3, "(0 1 2)")]).unwrap();
        assert!(!a3.contains(&p(3, "(0 1)")).unwrap());
        assert!(a3.contains(&Permutation::identity(3)).unwrap());
        let c4 = PermGroup::new(4, vec![p(4, "(0 1 2 3)")]).unwrap();
        assert!(c4.contains(&p(4, "(0 2)(1 3)")).unwrap());
        assert!(c4.contains(&p(5, "()")).is_err());
    }

    #[test]
    fn degree_mismatch_rejected() {
        assert!(matches!(
            PermGroup::new(3, vec![p(4, "(0 1)")]),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn derived_and_closure() {
        assert_eq!(sym(3).derived_subgroup().order(), 3);
        assert_eq!(sym(5).derived_subgroup().order(), 60);
        let s4 = sym(4);
        let v4 = s4.normal_closure(&[p(4, "(0 1)(2 3)")]).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(s4.normal_closure(&[]).unwrap().order(), 1);
        assert_eq!(sym(3).normal_closure(&[p(3, "(0 1)")]).unwrap().order(), 6);
        let a3 = PermGroup::new(3, vec![p(3, "(0 1 2)")]).unwrap();
        assert!(a3.normal_closure(&[p(3, "(0 1)")]).is_err());
    }

    #[test]
    fn stabilizer_and_core() {
        let s4 = sym(4);
        let stab = s4.point_stabilizer(0).unwrap();
        assert_eq!(stab.order(), 6);
        let core = s4.normal_core(&stab).unwrap();
        assert_eq!(core.order(), 1);
        let d8 = PermGroup::new(4, vec![p(4, "(0 1 2 3)"), p(4, "(0 2)")]).unwrap();
        assert_eq!(s4.normal_core(&d8).unwrap().order(), 4);
        assert!(s4.point_stabilizer(4).is_err());
    }

    #[test]
    fn coset_actions() {
        let s4 = sym(4);
        let stab = s4.point_stabilizer(0).unwrap();
        let (img, ker) = s4.coset_action(&stab).unwrap();
        assert_eq!((img.degree(), img.order(), ker.order()), (4, 24, 1));
        let a4 = s4.derived_subgroup();
        let (img, ker) = s4.coset_action(&a4).unwrap();
        assert_eq!((img.degree(), img.order(), ker.order()), (2, 2, 12));
        let (img, _) = s4.coset_action(&s4).unwrap();
        assert_eq!((img.degree(), img.order()), (1, 1));
    }

    #[test]
    fn center_and_products() {
        assert_eq!(sym(3).center().unwrap().order(), 1);
        let prod = PermGroup::direct_product(&sym(3), &sym(3));
        assert_eq!((prod.degree(), prod.order()), (6, 36));
        let c4 = PermGroup::new(4, vec![p(4, "(0 1 2 3)")]).unwrap();
        assert_eq!(c4.center().unwrap().order(), 4);
    }

    #[test]
    fn elements_sorted_and_complete() {
        let els = sym(4).elements().unwrap();
        assert_eq!(els.len(), 24);
        assert!(els[0].is_identity());
        assert!(els.windows(2).all(|w| w[0] < w[1]));
    }
}
