//! Independent oracles. Everything here works on raw image arrays and
//! brute force, without touching the library's algorithms.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;

use growthlab::PermGroup;

pub type Elem = Vec<u16>;

/// `a` then `b`.
pub fn mul(a: &Elem, b: &Elem) -> Elem {
    a.iter().map(|&i| b[i as usize]).collect()
}

pub fn inv(a: &Elem) -> Elem {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j as usize] = i as u16;
    }
    out
}

pub fn identity(n: usize) -> Elem {
    (0..n as u16).collect()
}

pub fn raw_generators(g: &PermGroup) -> Vec<Elem> {
    g.generators()
        .iter()
        .map(|p| p.images().iter().map(|&x| x as u16).collect())
        .collect()
}

/// Every product of the generators, by breadth-first search.
pub fn closure(degree: usize, gens: &[Elem]) -> Vec<Elem> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity(degree));
    queue.push_back(identity(degree));
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = mul(&x, s);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// A small group with a naive multiplication table over sorted elements.
pub struct Oracle {
    pub elems: Vec<Elem>,
    pub mul: Vec<Vec<u16>>,
    pub inv: Vec<u16>,
    index: HashMap<Elem, u16>,
}

pub type Sub = BTreeSet<u16>;

impl Oracle {
    pub fn new(g: &PermGroup) -> Self {
        let elems = closure(g.degree(), &raw_generators(g));
        let index: HashMap<Elem, u16> = elems.iter().enumerate().map(|(i, e)| (e.clone(), i as u16)).collect();
        let mul = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect())
            .collect();
        let inv = elems.iter().map(|a| index[&inv(a)]).collect();
        Self { elems, mul, inv, index }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn index_of(&self, e: &Elem) -> u16 {
        self.index[e]
    }

    pub fn close(&self, gens: &[u16]) -> Sub {
        let mut seen = BTreeSet::from([0u16]);
        let mut queue = VecDeque::from([0u16]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul[x as usize][s as usize];
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Index 0 is the identity because elements are sorted.
    pub fn conj(&self, x: u16, g: u16) -> u16 {
        let gi = self.inv[g as usize];
        self.mul[self.mul[gi as usize][x as usize] as usize][g as usize]
    }

    /// All subgroups: start from the trivial one and add one element at a
    /// time until nothing new appears.
    pub fn all_subgroups(&self) -> Vec<Sub> {
        let trivial: Sub = BTreeSet::from([0]);
        let mut found: BTreeMap<Sub, Vec<u16>> = BTreeMap::new();
        found.insert(trivial.clone(), Vec::new());
        let mut queue = VecDeque::from([trivial]);
        while let Some(h) = queue.pop_front() {
            let gens = found[&h].clone();
            for x in 0..self.order() as u16 {
                if h.contains(&x) {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(x);
                let k = self.close(&g2);
                if !found.contains_key(&k) {
                    found.insert(k.clone(), g2);
                    queue.push_back(k);
                }
            }
        }
        found.into_keys().collect()
    }

    pub fn conjugate_sub(&self, h: &Sub, g: u16) -> Sub {
        h.iter().map(|&x| self.conj(x, g)).collect()
    }

    /// Subgroups grouped into conjugacy classes.
    pub fn subgroup_classes(&self, subs: &[Sub]) -> Vec<Vec<Sub>> {
        let mut done = BTreeSet::new();
        let mut classes = Vec::new();
        for h in subs {
            if done.contains(h) {
                continue;
            }
            let class: BTreeSet<Sub> = (0..self.order() as u16).map(|g| self.conjugate_sub(h, g)).collect();
            done.extend(class.iter().cloned());
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Subgroup generated by all commutators of elements of `h`.
    pub fn derived(&self, h: &Sub) -> Sub {
        let mut comms = BTreeSet::new();
        for &x in h {
            for &y in h {
                let xi = self.inv[x as usize] as usize;
                let yi = self.inv[y as usize] as usize;
                let c = self.mul[self.mul[self.mul[xi][yi] as usize][x as usize] as usize][y as usize];
                comms.insert(c);
            }
        }
        self.close(&comms.into_iter().collect::<Vec<_>>())
    }

    pub fn ab_order(&self, h: &Sub) -> usize {
        h.len() / self.derived(h).len()
    }

    /// `|H / H'Y|`.
    pub fn rel_ab_order(&self, h: &Sub, y: &Sub) -> usize {
        let gens: Vec<u16> = self.derived(h).into_iter().chain(y.iter().copied()).collect();
        h.len() / self.close(&gens).len()
    }

    pub fn is_normal(&self, h: &Sub) -> bool {
        (0..self.order() as u16).all(|g| h.iter().all(|&x| h.contains(&self.conj(x, g))))
    }

    pub fn normalizer_order(&self, h: &Sub) -> usize {
        (0..self.order() as u16).filter(|&g| self.conjugate_sub(h, g) == *h).count()
    }

    /// Conjugacy class sizes of elements.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut sizes = Vec::new();
        for x in 0..self.order() as u16 {
            if seen[x as usize] {
                continue;
            }
            let orbit: BTreeSet<u16> = (0..self.order() as u16).map(|g| self.conj(x, g)).collect();
            for &y in &orbit {
                seen[y as usize] = true;
            }
            sizes.push(orbit.len());
        }
        sizes
    }

    pub fn center(&self) -> Sub {
        (0..self.order() as u16)
            .filter(|&z| (0..self.order() as u16).all(|g| self.mul[z as usize][g as usize] == self.mul[g as usize][z as usize]))
            .collect()
    }

    /// `ab_n` for `n = 1..=|G|` by brute force over the given subgroups.
    pub fn ab_growth(&self, subs: &[Sub]) -> Vec<usize> {
        let n = self.order();
        let mut best = vec![1; n + 1];
        for h in subs {
            let idx = n / h.len();
            let a = self.ab_order(h);
            best[idx] = best[idx].max(a);
        }
        for i in 2..=n {
            best[i] = best[i].max(best[i - 1]);
        }
        best[1..].to_vec()
    }
}

/// Partitions of `k` in non-increasing order.
pub fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

fn conjugate_partition(p: &[usize]) -> Vec<usize> {
    (1..=p.first().copied().unwrap_or(0))
        .map(|i| p.iter().filter(|&&x| x >= i).count())
        .collect()
}

/// Irreducible degree of Sym(k) for a partition, by the hook length formula.
pub fn hook_degree(p: &[usize]) -> u64 {
    let k: usize = p.iter().sum();
    let conj = conjugate_partition(p);
    let mut num: u128 = (1..=k as u128).product();
    let mut hooks: u128 = 1;
    for (i, &row) in p.iter().enumerate() {
        for j in 0..row {
            hooks *= (row - j + conj[j] - i - 1) as u128;
        }
    }
    num /= hooks;
    num as u64
}

pub fn sym_degrees(k: usize) -> Vec<u64> {
    let mut d: Vec<u64> = partitions(k).iter().map(|p| hook_degree(p)).collect();
    d.sort_unstable();
    d
}

/// Alt(k) degrees: a Sym(k) irreducible restricts irreducibly unless its
/// partition is self-conjugate, in which case it splits into two halves;
/// conjugate pairs restrict to the same character.
pub fn alt_degrees(k: usize) -> Vec<u64> {
    let mut d = Vec::new();
    for p in partitions(k) {
        let c = conjugate_partition(&p);
        match p.cmp(&c) {
            std::cmp::Ordering::Equal => {
                let h = hook_degree(&p) / 2;
                d.push(h);
                d.push(h);
            }
            std::cmp::Ordering::Greater => d.push(hook_degree(&p)),
            std::cmp::Ordering::Less => {}
        }
    }
    d.sort_unstable();
    d
}

/// PSL(2,q) degrees for an odd prime `q ≥ 5`.
pub fn psl2_degrees(q: u64) -> Vec<u64> {
    let mut d = vec![1, q];
    if q % 4 == 1 {
        d.extend(std::iter::repeat_n(q + 1, ((q - 5) / 4) as usize));
        d.extend(std::iter::repeat_n(q - 1, ((q - 1) / 4) as usize));
        d.extend([(q + 1) / 2, (q + 1) / 2]);
    } else {
        d.extend(std::iter::repeat_n(q + 1, ((q - 3) / 4) as usize));
        d.extend(std::iter::repeat_n(q - 1, ((q - 3) / 4) as usize));
        d.extend([(q - 1) / 2, (q - 1) / 2]);
    }
    d.sort_unstable();
    d
}

pub fn zeta_from_degrees(degrees: &[u64], t: u32) -> BigRational {
    degrees.iter().fold(BigRational::from_integer(BigInt::from(0)), |acc, &d| {
        acc + BigRational::new(BigInt::from(1), BigInt::from(d).pow(t))
    })
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Compares the library's subgroup lattice and ab_n table with brute
/// force. Returns the number of subgroups on success.
pub fn lattice_and_ab_agree(g: &PermGroup) -> Result<usize, String> {
    use growthlab::growth::ab_growth;
    use growthlab::subgroups::subgroup_classes;

    let oracle = Oracle::new(g);
    let n = oracle.order() as u64;
    if g.order() != n {
        return Err(format!("order {} vs closure {}", g.order(), n));
    }
    let subs = oracle.all_subgroups();
    let classes = oracle.subgroup_classes(&subs);
    let lattice = subgroup_classes(g, n).map_err(|e| e.to_string())?;

    let mut expected: Vec<(u64, u64, u64)> = classes
        .iter()
        .map(|c| (n / c[0].len() as u64, c[0].len() as u64, c.len() as u64))
        .collect();
    let mut got: Vec<(u64, u64, u64)> = lattice.classes.iter().map(|c| (c.index, c.order, c.class_length)).collect();
    expected.sort_unstable();
    got.sort_unstable();
    if expected != got {
        return Err(format!("class data differs: oracle {expected:?}, library {got:?}"));
    }
    if lattice.total_subgroups() as usize != subs.len() {
        return Err(format!("{} subgroups vs {}", lattice.total_subgroups(), subs.len()));
    }

    // every representative is a genuine subgroup, and no two share a class
    let table = lattice.table();
    let mut hit = BTreeSet::new();
    for c in &lattice.classes {
        let sub: Sub = c
            .member
            .bits
            .iter()
            .map(|i| {
                let e: Elem = table.element(i).images().iter().map(|&x| x as u16).collect();
                oracle.index_of(&e)
            })
            .collect();
        let which = classes
            .iter()
            .position(|cl| cl.contains(&sub))
            .ok_or_else(|| format!("representative of order {} is not a subgroup", c.order))?;
        if !hit.insert(which) {
            return Err("two representatives are conjugate".into());
        }
    }

    let want = oracle.ab_growth(&subs);
    let ab = ab_growth(g, n).map_err(|e| e.to_string())?;
    for (i, &w) in want.iter().enumerate() {
        let m = i as u64 + 1;
        if ab.value(m) != w as u64 {
            return Err(format!("ab_{m}: library {}, brute force {w}", ab.value(m)));
        }
    }
    Ok(subs.len())
}
