//! Explicitly enumerated groups: elements are numbered in increasing
//! image-array order and subgroups become bitsets over those numbers.
//!
//! Small groups get a full multiplication table; larger ones multiply
//! permutations and look the product up.

use rustc_hash::FxHashMap;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Groups up to this order get a full `u16` multiplication table.
pub const TABLE_LIMIT: usize = 6_000;

pub struct ElementTable {
    group: PermGroup,
    elems: Vec<Permutation>,
    index: FxHashMap<Permutation, u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    gens: Vec<u32>,
    table: Option<Vec<u16>>,
}

/// Conjugacy classes of an enumerated group.
#[derive(Clone, Debug)]
pub struct ElementClasses {
    /// Class index of every element.
    pub class_of: Vec<u32>,
    /// Smallest element index in each class; class 0 holds the identity.
    pub reps: Vec<u32>,
    pub sizes: Vec<u64>,
}

/// Right-coset action `Hx ↦ Hxg`.
pub struct CosetAction {
    /// Coset number of every element; cosets are numbered by their smallest element.
    pub coset_of: Vec<u32>,
    pub reps: Vec<u32>,
    pub image: PermGroup,
}

impl ElementTable {
    pub fn new(group: PermGroup, cap: u64) -> Result<Self> {
        let order = group.order();
        if order > cap {
            return Err(Error::CapExceeded {
                what: "element enumeration",
                order,
                cap,
            });
        }
        let degree = group.degree();
        let elems = {
            // breadth-first closure over the generators, then sorted
            let mut seen: rustc_hash::FxHashSet<Permutation> = Default::default();
            let id = Permutation::identity(degree);
            seen.insert(id.clone());
            let mut list = vec![id];
            let mut head = 0;
            while head < list.len() {
                let x = list[head].clone();
                head += 1;
                for g in group.generators() {
                    let y = x.compose(g);
                    if seen.insert(y.clone()) {
                        list.push(y);
                    }
                }
            }
            list.sort_unstable();
            list
        };
        debug_assert_eq!(elems.len() as u64, order);
        let n = elems.len();
        let index: FxHashMap<Permutation, u32> = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let inv = elems.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elems.iter().map(|p| p.order() as u32).collect();
        let gens = group.generators().iter().map(|g| index[g]).collect();
        let mut t = Self {
            group,
            elems,
            index,
            inv,
            orders,
            gens,
            table: None,
        };
        if n <= TABLE_LIMIT {
            t.table = Some(t.build_table());
        }
        Ok(t)
    }

    fn build_table(&self) -> Vec<u16> {
        let n = self.elems.len();
        // spanning tree: element b = parent[b] * gens[via[b]]
        let mut parent = vec![u32::MAX; n];
        let mut via = vec![0usize; n];
        let mut order = vec![0u32];
        parent[0] = 0;
        let right: Vec<Vec<u32>> = self
            .group
            .generators()
            .iter()
            .map(|g| self.elems.iter().map(|x| self.index[&x.compose(g)]).collect())
            .collect();
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for (s, r) in right.iter().enumerate() {
                let y = r[x as usize];
                if parent[y as usize] == u32::MAX {
                    parent[y as usize] = x;
                    via[y as usize] = s;
                    order.push(y);
                }
            }
        }
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            row[0] = a as u16;
            for &b in &order[1..] {
                let b = b as usize;
                let p = row[parent[b] as usize];
                row[b] = right[via[b]][p as usize] as u16;
            }
        }
        table
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    #[inline]
    pub fn element(&self, i: u32) -> &Permutation {
        &self.elems[i as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elems
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn generator_indices(&self) -> &[u32] {
        &self.gens
    }

    #[inline]
    pub fn identity(&self) -> u32 {
        0
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.elems.len() + b as usize] as u32,
            None => self.index[&self.elems[a as usize].compose(&self.elems[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv[g as usize], x), g)
    }

    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: u32, e: u64) -> u32 {
        let e = e % self.orders[x as usize] as u64;
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    #[inline]
    pub fn element_order(&self, x: u32) -> u32 {
        self.orders[x as usize]
    }

    pub fn exponent(&self) -> u64 {
        self.orders
            .iter()
            .fold(1u64, |acc, &o| num_integer::lcm(acc, o as u64))
    }

    pub fn full(&self) -> Bitset {
        Bitset::from_indices(self.len(), 0..self.len() as u32)
    }

    pub fn trivial(&self) -> Bitset {
        Bitset::from_indices(self.len(), [0])
    }

    /// Closure of `start` (a subgroup, or `{1}`) together with `gens`.
    pub fn extend(&self, start: &Bitset, gens: &[u32]) -> Bitset {
        let mut bits = start.clone();
        let mut queue: Vec<u32> = bits.iter().collect();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if bits.insert(y) {
                    queue.push(y);
                }
            }
        }
        bits
    }

    pub fn closure(&self, gens: &[u32]) -> Bitset {
        self.extend(&self.trivial(), gens)
    }

    pub fn subgroup_bits(&self, h: &PermGroup) -> Bitset {
        let gens: Vec<u32> = h
            .generators()
            .iter()
            .map(|g| self.index_of(g).expect("subgroup element"))
            .collect();
        self.closure(&gens)
    }

    /// Greedy generating set for the subgroup `bits`, in increasing index order.
    pub fn generators_of(&self, bits: &Bitset) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut cur = self.trivial();
        let target = bits.count();
        for x in bits.iter() {
            if cur.count() == target {
                break;
            }
            if !cur.contains(x) {
                gens.push(x);
                cur = self.extend(&cur, &gens);
            }
        }
        gens
    }

    pub fn to_group(&self, bits: &Bitset) -> PermGroup {
        self.group_from_indices(&self.generators_of(bits))
    }

    pub fn group_from_indices(&self, gens: &[u32]) -> PermGroup {
        let perms = gens.iter().map(|&g| self.elems[g as usize].clone()).collect();
        PermGroup::new(self.group.degree(), perms).expect("elements share the degree")
    }

    /// `{g⁻¹ x g : x ∈ bits}`.
    pub fn conjugate_bits(&self, bits: &Bitset, g: u32) -> Bitset {
        Bitset::from_indices(self.len(), bits.iter().map(|x| self.conj(x, g)))
    }

    /// Normal closure of `seeds` under conjugation by `ambient`; returns the
    /// subgroup and a generating set for it.
    pub fn normal_closure(&self, ambient: &[u32], seeds: &[u32]) -> (Bitset, Vec<u32>) {
        let mut bits = self.trivial();
        let mut gens = Vec::new();
        let mut queue: Vec<u32> = seeds.iter().rev().copied().collect();
        while let Some(x) = queue.pop() {
            if bits.contains(x) {
                continue;
            }
            gens.push(x);
            bits = self.extend(&bits, &gens);
            for &a in ambient {
                queue.push(self.conj(x, a));
            }
        }
        (bits, gens)
    }

    /// Commutator subgroup of the subgroup generated by `gens`.
    pub fn derived(&self, gens: &[u32]) -> Bitset {
        let mut comms = Vec::new();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let c = self.commutator(gens[i], gens[j]);
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(gens, &comms).0
    }

    pub fn is_normalized_by(&self, bits: &Bitset, gens: &[u32]) -> bool {
        bits.iter()
            .all(|x| gens.iter().all(|&g| bits.contains(self.conj(x, g))))
    }

    pub fn center(&self) -> Bitset {
        Bitset::from_indices(
            self.len(),
            (0..self.len() as u32)
                .filter(|&x| self.gens.iter().all(|&g| self.mul(x, g) == self.mul(g, x))),
        )
    }

    /// Right cosets `Hx` of the subgroup `h`.
    pub fn right_cosets(&self, h: &Bitset) -> (Vec<u32>, Vec<u32>) {
        let n = self.len();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let members: Vec<u32> = h.iter().collect();
        for x in 0..n as u32 {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &m in &members {
                coset_of[self.mul(m, x) as usize] = c;
            }
        }
        (coset_of, reps)
    }

    pub fn coset_action(&self, h: &Bitset) -> CosetAction {
        let (coset_of, reps) = self.right_cosets(h);
        let gens = self
            .gens
            .iter()
            .map(|&g| self.coset_permutation(&coset_of, &reps, g))
            .collect();
        let image = PermGroup::new(reps.len(), gens).expect("coset permutations share the degree");
        CosetAction {
            coset_of,
            reps,
            image,
        }
    }

    pub fn coset_permutation(&self, coset_of: &[u32], reps: &[u32], g: u32) -> Permutation {
        Permutation::from_images_unchecked(
            reps.iter()
                .map(|&r| coset_of[self.mul(r, g) as usize])
                .collect(),
        )
    }

    /// Intersection of all conjugates of `h`.
    pub fn core(&self, h: &Bitset) -> Bitset {
        let (_, reps) = self.right_cosets(h);
        let mut core = h.clone();
        for &r in &reps[1..] {
            core.intersect_with(&self.conjugate_bits(h, r));
        }
        core
    }

    /// Conjugacy classes under the action of the group's generators.
    pub fn classes(&self) -> ElementClasses {
        self.classes_within(&self.full(), &self.gens)
    }

    /// Conjugacy classes of the subgroup `within`, acted on by `gens`.
    pub fn classes_within(&self, within: &Bitset, gens: &[u32]) -> ElementClasses {
        let n = self.len();
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for x in within.iter() {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            class_of[x as usize] = c;
            let mut queue = vec![x];
            let mut head = 0;
            while head < queue.len() {
                let y = queue[head];
                head += 1;
                for &g in gens {
                    let z = self.conj(y, g);
                    if class_of[z as usize] == u32::MAX {
                        class_of[z as usize] = c;
                        queue.push(z);
                    }
                }
            }
            sizes.push(queue.len() as u64);
        }
        ElementClasses {
            class_of,
            reps,
            sizes,
        }
    }
}
