//! Character tables by the Dixon–Schneider method, and the character
//! theory built on them.
//!
//! The common eigenvectors of the class-multiplication matrices are the
//! central characters `ω_χ(K_i) = |C_i| χ(g_i) / χ(1)`. They are found
//! modulo a prime `p ≡ 1 (mod e)` with `p > 2√|G|`, where `e` is the group
//! exponent; the degree is the unique square root of `|G| / Σ ω_i ω_{i*} / |C_i|`
//! below `p/2`, and each value is lifted to `Q(ζ_e)` from the eigenvalue
//! multiplicities of `ρ(g)`, which are recovered by a discrete Fourier
//! transform over the powers of `g`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bitset::Bitset;
use crate::config::limits;
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::enumerated::{ElementClasses, ElementTable};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::subgroups::{Subgroup, SubgroupLattice};

/// Search bound for the Dixon–Schneider prime.
pub const PRIME_SEARCH_BOUND: u64 = 1 << 31;

/// Conjugacy classes with their representatives in minimal-encoding order.
#[derive(Clone)]
pub struct ConjugacyClasses {
    table: Arc<ElementTable>,
    inner: ElementClasses,
    pub reps: Vec<Permutation>,
    pub sizes: Vec<u64>,
}

impl ConjugacyClasses {
    pub fn new(table: Arc<ElementTable>) -> Self {
        let inner = table.classes();
        let reps = inner.reps.iter().map(|&r| table.element(r).clone()).collect();
        let sizes = inner.sizes.clone();
        Self {
            table,
            inner,
            reps,
            sizes,
        }
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.table
            .index_of(g)
            .map(|i| self.inner.class_of[i as usize] as usize)
    }

    pub fn class_of_index(&self, i: u32) -> usize {
        self.inner.class_of[i as usize] as usize
    }

    pub fn rep_index(&self, c: usize) -> u32 {
        self.inner.reps[c]
    }

    pub fn table(&self) -> &Arc<ElementTable> {
        &self.table
    }

    pub fn group_order(&self) -> u64 {
        self.table.len() as u64
    }
}

pub(crate) fn table_for(g: &PermGroup) -> Result<Arc<ElementTable>> {
    let cap = limits().table_cap;
    Ok(Arc::new(ElementTable::new(g.clone(), cap)?))
}

pub fn conjugacy_classes(g: &PermGroup) -> Result<ConjugacyClasses> {
    Ok(ConjugacyClasses::new(table_for(g)?))
}

/// `k(G)`.
pub fn class_count(g: &PermGroup) -> Result<usize> {
    Ok(conjugacy_classes(g)?.len())
}

/// A class function on some group, one value per conjugacy class.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
    /// Fingerprint of the owning group's element set.
    pub owner: u128,
}

impl ClassFunction {
    pub fn degree(&self) -> Cyclotomic {
        self.values[0].clone()
    }
}

pub struct CharacterTable {
    classes: ConjugacyClasses,
    exponent: u32,
    prime: u64,
    chars: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
    inverse_class: Vec<usize>,
    owner: u128,
}

// ---- arithmetic modulo p -------------------------------------------------

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2√order`.
pub fn dixon_prime(exponent: u64, order: u64) -> Result<u64> {
    let mut p = exponent + 1;
    while p < PRIME_SEARCH_BOUND {
        if (p as u128) * (p as u128) > 4 * order as u128 && crate::constructors::is_prime(p) {
            return Ok(p);
        }
        p += exponent;
    }
    Err(Error::NoPrime(PRIME_SEARCH_BOUND))
}

fn primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("prime modulus has a primitive root")
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let width = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = inv_mod(rows[r][col], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                for c in 0..width {
                    rows[i][c] = (rows[i][c] + p - f * rows[r][c] % p) % p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{c : M c = 0}` for a square matrix `M`.
fn nullspace(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let d = m.len();
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows, p);
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; d];
            v[f] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

/// Splits `space` into eigenspaces of the class matrix `a`.
fn split_space(space: Space, a: &[Vec<u64>], p: u64) -> Vec<Space> {
    let d = space.basis.len();
    let k = a.len();
    let images: Vec<Vec<u64>> = space
        .basis
        .iter()
        .map(|b| {
            (0..k)
                .map(|r| (0..k).fold(0u64, |acc, s| (acc + a[r][s] * b[s]) % p))
                .collect()
        })
        .collect();
    // restricted matrix in the echelon basis: column i holds the coordinates of A b_i
    let restricted: Vec<Vec<u64>> = (0..d)
        .map(|l| (0..d).map(|i| images[i][space.pivots[l]]).collect())
        .collect();
    let mut parts = Vec::new();
    let mut covered = 0;
    for lambda in 0..p {
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(l, row)| {
                row.iter()
                    .enumerate()
                    .map(|(i, &x)| if i == l { (x + p - lambda) % p } else { x })
                    .collect()
            })
            .collect();
        let ns = nullspace(&shifted, p);
        if ns.is_empty() {
            continue;
        }
        if ns.len() == d {
            return vec![space];
        }
        covered += ns.len();
        let mut vectors: Vec<Vec<u64>> = ns
            .iter()
            .map(|c| {
                (0..k)
                    .map(|s| (0..d).fold(0u64, |acc, i| (acc + c[i] * space.basis[i][s]) % p))
                    .collect()
            })
            .collect();
        let pivots = rref(&mut vectors, p);
        parts.push(Space {
            basis: vectors,
            pivots,
        });
        if covered == d {
            break;
        }
    }
    parts
}

impl CharacterTable {
    pub fn new(g: &PermGroup) -> Result<Self> {
        Self::from_table(table_for(g)?)
    }

    pub fn from_table(table: Arc<ElementTable>) -> Result<Self> {
        let cap = limits().table_cap;
        if table.len() as u64 > cap {
            return Err(Error::CapExceeded {
                what: "character table",
                order: table.len() as u64,
                cap,
            });
        }
        let classes = ConjugacyClasses::new(table.clone());
        let k = classes.len();
        let order = table.len() as u64;
        let exponent = table.exponent();
        let p = dixon_prime(exponent, order)?;
        let z = pow_mod(primitive_root(p), (p - 1) / exponent, p);

        let mut members: Vec<Vec<u32>> = vec![Vec::new(); k];
        for x in 0..table.len() as u32 {
            members[classes.class_of_index(x)].push(x);
        }
        let inverse_class: Vec<usize> = (0..k)
            .map(|c| classes.class_of_index(table.inv(classes.rep_index(c))))
            .collect();

        let class_matrix = |j: usize| -> Vec<Vec<u64>> {
            let mut a = vec![vec![0u64; k]; k];
            for (s, col) in (0..k).map(|s| (s, classes.rep_index(s))) {
                for &x in &members[j] {
                    let y = table.mul(table.inv(x), col);
                    a[classes.class_of_index(y)][s] += 1;
                }
            }
            for row in a.iter_mut() {
                for v in row.iter_mut() {
                    *v %= p;
                }
            }
            a
        };

        let mut spaces = vec![Space {
            basis: (0..k)
                .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
                .collect(),
            pivots: (0..k).collect(),
        }];
        // split by class matrices in order of increasing class size
        let mut order_of_classes: Vec<usize> = (1..k).collect();
        order_of_classes.sort_by_key(|&c| (classes.sizes[c], c));
        for j in order_of_classes {
            if spaces.iter().all(|s| s.basis.len() == 1) {
                break;
            }
            let a = class_matrix(j);
            spaces = spaces
                .into_iter()
                .flat_map(|s| {
                    if s.basis.len() == 1 {
                        vec![s]
                    } else {
                        split_space(s, &a, p)
                    }
                })
                .collect();
        }
        if spaces.len() != k || spaces.iter().any(|s| s.basis.len() != 1) {
            return Err(Error::Invalid(format!(
                "class matrices did not separate the {k} characters"
            )));
        }

        let sizes_mod: Vec<u64> = classes.sizes.iter().map(|&s| s % p).collect();
        let mut rows: Vec<(u64, Vec<u64>)> = Vec::with_capacity(k);
        for s in &spaces {
            let w = &s.basis[0];
            if w[0] != 1 {
                return Err(Error::Invalid("central character not normalized".into()));
            }
            let sum = (0..k).fold(0u64, |acc, i| {
                (acc + w[i] * w[inverse_class[i]] % p * inv_mod(sizes_mod[i], p)) % p
            });
            let target = (order % p) * inv_mod(sum, p) % p;
            let degree = (1..=order)
                .take_while(|d| d * d <= order)
                .find(|d| d * d % p == target)
                .ok_or_else(|| Error::Invalid("no degree matches the central character".into()))?;
            let values: Vec<u64> = (0..k)
                .map(|i| w[i] * (degree % p) % p * inv_mod(sizes_mod[i], p) % p)
                .collect();
            rows.push((degree, values));
        }
        rows.sort();

        // power maps: class of rep_i^l for l < order(rep_i)
        let power_classes: Vec<Vec<usize>> = (0..k)
            .map(|i| {
                let x = classes.rep_index(i);
                let o = table.element_order(x);
                let mut acc = table.identity();
                (0..o)
                    .map(|_| {
                        let c = classes.class_of_index(acc);
                        acc = table.mul(acc, x);
                        c
                    })
                    .collect()
            })
            .collect();

        let e = exponent as u32;
        let mut chars = Vec::with_capacity(k);
        let mut degrees = Vec::with_capacity(k);
        for (degree, modvals) in &rows {
            let mut row = Vec::with_capacity(k);
            for i in 0..k {
                let o = power_classes[i].len() as u64;
                let zo = pow_mod(z, exponent / o, p);
                let inv_o = inv_mod(o % p, p);
                let mut value = Cyclotomic::zero(e);
                let mut total = 0u64;
                for m in 0..o {
                    let step = pow_mod(inv_mod(zo, p), m, p);
                    let mut acc = 0u64;
                    let mut w = 1u64;
                    for &c in &power_classes[i] {
                        acc = (acc + modvals[c] * w) % p;
                        w = w * step % p;
                    }
                    let mult = acc * inv_o % p;
                    if mult > *degree {
                        return Err(Error::Invalid(format!(
                            "eigenvalue multiplicity {mult} exceeds degree {degree}"
                        )));
                    }
                    total += mult;
                    value.add_term(
                        (m * (exponent / o)) as u32,
                        Rational::from_integer(mult as i128),
                    );
                }
                if total != *degree {
                    return Err(Error::Invalid("eigenvalue multiplicities do not sum to the degree".into()));
                }
                row.push(value);
            }
            chars.push(row);
            degrees.push(*degree);
        }

        Ok(Self {
            owner: table.full().fingerprint(),
            classes,
            exponent: e,
            prime: p,
            chars,
            degrees,
            inverse_class,
        })
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn element_table(&self) -> &Arc<ElementTable> {
        self.classes.table()
    }

    pub fn order(&self) -> u64 {
        self.classes.group_order()
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn chars(&self) -> &[Vec<Cyclotomic>] {
        &self.chars
    }

    pub fn character(&self, i: usize) -> ClassFunction {
        ClassFunction {
            values: self.chars[i].clone(),
            owner: self.owner,
        }
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    pub fn owner(&self) -> u128 {
        self.owner
    }

    /// `⟨a, b⟩ = |G|⁻¹ Σ |C_i| a_i conj(b_i)`.
    pub fn inner_product(&self, a: &ClassFunction, b: &ClassFunction) -> Cyclotomic {
        assert_eq!(a.owner, self.owner, "class function belongs to another group");
        assert_eq!(b.owner, self.owner, "class function belongs to another group");
        let mut acc = Cyclotomic::zero(self.exponent);
        for (i, &size) in self.classes.sizes.iter().enumerate() {
            let t = (&a.values[i] * &b.values[i].conj()).scale(Rational::from_integer(size as i128));
            acc = &acc + &t;
        }
        acc.scale(Rational::new(1, self.order() as i128))
    }

    /// Exact row orthogonality of the whole table.
    pub fn orthogonality_holds(&self) -> bool {
        let k = self.chars.len();
        (0..k).all(|i| {
            (i..k).all(|j| {
                let ip = self.inner_product(&self.character(i), &self.character(j));
                ip.to_integer() == Some(i128::from(i == j))
            })
        })
    }

    pub fn sum_of_squared_degrees(&self) -> u64 {
        self.degrees.iter().map(|d| d * d).sum()
    }

    /// `Rep_n`: irreducibles of degree at most `n`.
    pub fn rep_count(&self, n: u64) -> u64 {
        self.degrees.iter().filter(|&&d| d <= n).count() as u64
    }

    /// Number of irreducibles of degree exactly `n`.
    pub fn degree_count(&self, n: u64) -> u64 {
        self.degrees.iter().filter(|&&d| d == n).count() as u64
    }

    /// `ζ_G(t) = Σ χ(1)^{-t}`.
    pub fn zeta(&self, t: u32) -> BigRational {
        self.degrees.iter().fold(BigRational::zero(), |acc, &d| {
            acc + BigRational::new(BigInt::one(), BigInt::from(d).pow(t))
        })
    }

    /// Classes on which `χ_i` takes the value `χ_i(1)`.
    pub fn kernel_classes(&self, i: usize) -> Vec<usize> {
        let deg = Cyclotomic::from_int(self.exponent, self.degrees[i] as i128);
        (0..self.class_count())
            .filter(|&c| self.chars[i][c] == deg)
            .collect()
    }

    /// Kernel of `χ_i` as a set of elements.
    pub fn kernel_bits(&self, i: usize) -> Bitset {
        let cls = self.kernel_classes(i);
        let t = self.element_table();
        Bitset::from_indices(
            t.len(),
            (0..t.len() as u32).filter(|&x| cls.contains(&self.classes.class_of_index(x))),
        )
    }

    /// Permutation character of the action on the cosets of `y`:
    /// `π(g_i) = |G| |C_i ∩ Y| / (|C_i| |Y|)`.
    pub fn permutation_character_bits(&self, y: &Bitset) -> ClassFunction {
        let mut hits = vec![0u64; self.class_count()];
        for x in y.iter() {
            hits[self.classes.class_of_index(x)] += 1;
        }
        let ord = self.order() as i128;
        let yo = y.count() as i128;
        let values = hits
            .iter()
            .zip(&self.classes.sizes)
            .map(|(&h, &s)| Cyclotomic::from_rational(self.exponent, Rational::new(ord * h as i128, s as i128 * yo)))
            .collect();
        ClassFunction {
            values,
            owner: self.owner,
        }
    }

    pub fn permutation_character(&self, y: &PermGroup) -> Result<ClassFunction> {
        Ok(self.permutation_character_bits(&self.subgroup_bits(y)?))
    }

    fn subgroup_bits(&self, h: &PermGroup) -> Result<Bitset> {
        let t = self.element_table();
        if !t.group().is_subgroup(h) {
            return Err(Error::NotSubgroup("subgroup is not contained in the group".into()));
        }
        Ok(t.subgroup_bits(h))
    }

    /// Multiplicity of every irreducible in `(1_Y)^G`.
    pub fn permutation_multiplicities(&self, y: &Bitset) -> Vec<u64> {
        let pi = self.permutation_character_bits(y);
        (0..self.class_count())
            .map(|i| {
                let m = self.inner_product(&self.character(i), &pi);
                m.to_integer()
                    .and_then(|v| u64::try_from(v).ok())
                    .expect("multiplicities are non-negative integers")
            })
            .collect()
    }

    /// `Rep_n(G, Y)` for every `n` in `ns`.
    pub fn rep_rel_counts(&self, y: &Bitset) -> RelativeReps {
        let mults = self.permutation_multiplicities(y);
        RelativeReps {
            degrees: self
                .degrees
                .iter()
                .zip(&mults)
                .filter(|(_, &m)| m > 0)
                .map(|(&d, _)| d)
                .collect(),
            multiplicities: mults,
        }
    }

    pub fn subgroup(&self, h: &Subgroup) -> SubgroupCharacters<'_> {
        SubgroupCharacters::new(self, h)
    }

    /// Smallest `ε` with every non-trivial degree `≥ |G|^ε`; zero when a
    /// non-trivial linear character exists.
    pub fn quasirandomness(&self) -> Result<Quasirandomness> {
        if self.order() == 1 {
            return Err(Error::Invalid("quasirandomness of the trivial group".into()));
        }
        let min_degree = self.degrees[1..].iter().copied().min().expect("k(G) ≥ 2");
        Ok(Quasirandomness {
            min_degree,
            order: self.order(),
        })
    }
}

/// Irreducible constituents of a permutation character.
#[derive(Clone, Debug)]
pub struct RelativeReps {
    /// Degrees of the constituents, with repetition for distinct characters.
    pub degrees: Vec<u64>,
    pub multiplicities: Vec<u64>,
}

impl RelativeReps {
    pub fn count(&self, n: u64) -> u64 {
        self.degrees.iter().filter(|&&d| d <= n).count() as u64
    }
}

/// `ε = log₂(min non-trivial degree) / log₂|G|`, kept as its exact inputs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quasirandomness {
    pub min_degree: u64,
    pub order: u64,
}

impl Quasirandomness {
    pub fn epsilon(&self) -> f64 {
        if self.min_degree <= 1 {
            0.0
        } else {
            (self.min_degree as f64).log2() / (self.order as f64).log2()
        }
    }
}

/// Character theory of a subgroup `H` read off the ambient table: class
/// fusion, restriction, induction, and the linear characters of `H`.
pub struct SubgroupCharacters<'a> {
    table: &'a CharacterTable,
    pub sub: Subgroup,
    classes: ElementClasses,
    fusion: Vec<usize>,
    owner: u128,
}

impl<'a> SubgroupCharacters<'a> {
    fn new(table: &'a CharacterTable, h: &Subgroup) -> Self {
        let t = table.element_table();
        let classes = t.classes_within(&h.bits, &h.gens);
        let fusion = classes
            .reps
            .iter()
            .map(|&r| table.classes.class_of_index(r))
            .collect();
        Self {
            table,
            sub: h.clone(),
            classes,
            fusion,
            owner: h.bits.fingerprint(),
        }
    }

    pub fn order(&self) -> u64 {
        self.sub.order()
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.classes.sizes
    }

    pub fn class_count(&self) -> usize {
        self.classes.sizes.len()
    }

    pub fn trivial(&self) -> ClassFunction {
        ClassFunction {
            values: vec![Cyclotomic::from_int(self.table.exponent, 1); self.class_count()],
            owner: self.owner,
        }
    }

    pub fn restrict(&self, chi: &ClassFunction) -> ClassFunction {
        assert_eq!(chi.owner, self.table.owner, "restricting a foreign class function");
        ClassFunction {
            values: self.fusion.iter().map(|&c| chi.values[c].clone()).collect(),
            owner: self.owner,
        }
    }

    /// `ψ^G(g_i) = |G| / (|C_i| |H|) Σ_{h ∈ H ∩ C_i} ψ(h)`.
    pub fn induce(&self, psi: &ClassFunction) -> ClassFunction {
        assert_eq!(psi.owner, self.owner, "inducing a foreign class function");
        let e = self.table.exponent;
        let mut sums = vec![Cyclotomic::zero(e); self.table.class_count()];
        for (c, &g) in self.fusion.iter().enumerate() {
            let term = psi.values[c].scale(Rational::from_integer(self.classes.sizes[c] as i128));
            sums[g] = &sums[g] + &term;
        }
        let ord = self.table.order() as i128;
        let h = self.order() as i128;
        let values = sums
            .iter()
            .zip(&self.table.classes.sizes)
            .map(|(s, &size)| s.scale(Rational::new(ord, size as i128 * h)))
            .collect();
        ClassFunction {
            values,
            owner: self.table.owner,
        }
    }

    pub fn inner_product(&self, a: &ClassFunction, b: &ClassFunction) -> Cyclotomic {
        assert_eq!(a.owner, self.owner);
        assert_eq!(b.owner, self.owner);
        let mut acc = Cyclotomic::zero(self.table.exponent);
        for (i, &size) in self.classes.sizes.iter().enumerate() {
            let t = (&a.values[i] * &b.values[i].conj()).scale(Rational::from_integer(size as i128));
            acc = &acc + &t;
        }
        acc.scale(Rational::new(1, self.order() as i128))
    }

    /// The `|H/H'|` linear characters of `H`, trivial first.
    pub fn linear_characters(&self) -> Vec<ClassFunction> {
        let t = self.table.element_table();
        let e = self.table.exponent as u64;
        let exps = linear_character_exponents(t, &self.sub, e);
        exps.into_iter()
            .map(|exp| ClassFunction {
                values: self
                    .classes
                    .reps
                    .iter()
                    .map(|&r| Cyclotomic::root(e as u32, exp(r)))
                    .collect(),
                owner: self.owner,
            })
            .collect()
    }
}

type LinearExponent = Box<dyn Fn(u32) -> u64>;

/// Every homomorphism `H → ⟨ζ_e⟩`, as a map from element index to the
/// exponent of `ζ_e`.
fn linear_character_exponents(t: &ElementTable, h: &Subgroup, e: u64) -> Vec<LinearExponent> {
    let derived = t.derived(&h.gens);
    let members: Vec<u32> = derived.iter().collect();
    let mut coset_of = vec![u32::MAX; t.len()];
    let mut reps: Vec<u32> = Vec::new();
    for x in h.bits.iter() {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &m in &members {
            coset_of[t.mul(m, x) as usize] = c;
        }
    }
    let a = reps.len();
    let qmul = |c: u32, g: u32| coset_of[t.mul(reps[c as usize], g) as usize];

    // irredundant generators of the quotient, with their orders there
    let mut gens: Vec<(u32, u64)> = Vec::new();
    let mut reached = vec![false; a];
    reached[0] = true;
    for &g in &h.gens {
        if reached[coset_of[g as usize] as usize] {
            continue;
        }
        let mut order = 1u64;
        let mut c = coset_of[g as usize];
        while c != 0 {
            c = qmul(c, g);
            order += 1;
        }
        gens.push((g, order));
        // regenerate the reached set
        let mut queue = vec![0u32];
        reached = vec![false; a];
        reached[0] = true;
        while let Some(c) = queue.pop() {
            for &(g, _) in &gens {
                let d = qmul(c, g);
                if !reached[d as usize] {
                    reached[d as usize] = true;
                    queue.push(d);
                }
            }
        }
    }

    let mut out: Vec<LinearExponent> = Vec::new();
    let total: u64 = gens.iter().map(|&(_, o)| o).product();
    for code in 0..total {
        let mut c = code;
        let assign: Vec<u64> = gens
            .iter()
            .map(|&(_, o)| {
                let a = c % o;
                c /= o;
                a * (e / o)
            })
            .collect();
        let mut value = vec![u64::MAX; a];
        value[0] = 0;
        let mut queue = vec![0u32];
        let mut ok = true;
        'bfs: while let Some(c) = queue.pop() {
            for (&(g, _), &x) in gens.iter().zip(&assign) {
                let d = qmul(c, g);
                let v = (value[c as usize] + x) % e;
                if value[d as usize] == u64::MAX {
                    value[d as usize] = v;
                    queue.push(d);
                } else if value[d as usize] != v {
                    ok = false;
                    break 'bfs;
                }
            }
        }
        if ok {
            let co = coset_of.clone();
            out.push(Box::new(move |x: u32| value[co[x as usize] as usize]));
        }
    }
    debug_assert_eq!(out.len(), a);
    out
}

/// Character table of `g` (capped by the table limit).
pub fn character_table(g: &PermGroup) -> Result<CharacterTable> {
    CharacterTable::new(g)
}

pub fn zeta(g: &PermGroup, t: u32) -> Result<BigRational> {
    if t == 0 {
        return Err(Error::Invalid("zeta needs t ≥ 1".into()));
    }
    Ok(character_table(g)?.zeta(t))
}

pub fn linear_characters(g: &PermGroup) -> Result<Vec<ClassFunction>> {
    let table = character_table(g)?;
    let t = table.element_table().clone();
    let whole = Subgroup {
        bits: t.full(),
        gens: t.generator_indices().to_vec(),
    };
    let sub = table.subgroup(&whole);
    // the subgroup view of G itself has G's classes in the same order
    Ok(sub
        .linear_characters()
        .into_iter()
        .map(|mut f| {
            f.owner = table.owner();
            f
        })
        .collect())
}

/// True iff every irreducible is induced from a linear character of a
/// subgroup of index equal to its degree. Subgroups are scanned by class
/// representative in increasing index order.
pub fn is_monomial_with(table: &CharacterTable, lattice: &SubgroupLattice) -> bool {
    (0..table.class_count()).all(|i| monomial_witness(table, lattice, i).is_some())
}

/// Index of a subgroup class and linear character inducing to `χ_i`.
pub fn monomial_witness(table: &CharacterTable, lattice: &SubgroupLattice, i: usize) -> Option<(usize, usize)> {
    let d = table.degrees()[i];
    if d == 1 {
        return Some((0, i));
    }
    let chi = table.character(i);
    for (ci, c) in lattice.classes.iter().enumerate() {
        if c.index != d {
            continue;
        }
        let sub = table.subgroup(&c.member);
        let res = sub.restrict(&chi);
        for (li, lambda) in sub.linear_characters().iter().enumerate() {
            // Frobenius: ⟨λ^G, χ⟩ = ⟨λ, χ_H⟩ and λ^G has degree |G:H| = χ(1)
            if sub.inner_product(lambda, &res).to_integer() == Some(1) {
                return Some((ci, li));
            }
        }
    }
    None
}

pub fn is_monomial(g: &PermGroup) -> Result<bool> {
    let table = CharacterTable::new(g)?;
    let lattice = crate::subgroups::subgroup_classes(g, g.order())?;
    Ok(is_monomial_with(&table, &lattice))
}

pub fn quasirandomness_eps(g: &PermGroup) -> Result<f64> {
    Ok(character_table(g)?.quasirandomness()?.epsilon())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    fn degrees(g: &PermGroup) -> Vec<u64> {
        character_table(g).unwrap().degrees().to_vec()
    }

    #[test]
    fn small_tables() {
        assert_eq!(degrees(&symmetric(3)), vec![1, 1, 2]);
        assert_eq!(degrees(&cyclic(6)), vec![1; 6]);
        assert_eq!(degrees(&dihedral(7).unwrap()), vec![1, 1, 2, 2, 2]);
        assert_eq!(degrees(&alternating(5)), vec![1, 3, 3, 4, 5]);
        assert_eq!(degrees(&symmetric(5)), vec![1, 1, 4, 4, 5, 5, 6]);
        assert_eq!(degrees(&psl2(7).unwrap()), vec![1, 3, 3, 6, 7, 8]);
    }

    #[test]
    fn orthogonality() {
        for g in [symmetric(4), alternating(5), cyclic(12), psl2(7).unwrap()] {
            let t = character_table(&g).unwrap();
            assert!(t.orthogonality_holds());
            assert_eq!(t.sum_of_squared_degrees(), g.order());
        }
    }

    #[test]
    fn class_data() {
        let c = conjugacy_classes(&symmetric(3)).unwrap();
        assert_eq!(c.sizes, vec![1, 3, 2]);
        assert_eq!(class_count(&symmetric(5)).unwrap(), 7);
        assert_eq!(class_count(&alternating(5)).unwrap(), 5);
        assert_eq!(class_count(&cyclic(12)).unwrap(), 12);
    }

    #[test]
    fn dixon_prime_choice() {
        // exponent 6, order 6: smallest p ≡ 1 mod 6 above 2√6
        assert_eq!(dixon_prime(6, 6).unwrap(), 7);
        assert_eq!(dixon_prime(30, 60).unwrap(), 31);
    }

    #[test]
    fn zeta_of_a5() {
        let z = zeta(&alternating(5), 3).unwrap();
        assert_eq!(z, BigRational::new(237103.into(), 216000.into()));
        assert_eq!(zeta(&symmetric(1), 4).unwrap(), BigRational::one());
    }

    #[test]
    fn permutation_characters() {
        let s4 = symmetric(4);
        let t = character_table(&s4).unwrap();
        let y = s4.point_stabilizer(0).unwrap();
        let pi = t.permutation_character(&y).unwrap();
        assert_eq!(pi.values[0].to_integer(), Some(4));
        let rel = t.rep_rel_counts(&t.element_table().subgroup_bits(&y));
        assert_eq!(rel.degrees, vec![1, 3]);
        let whole = t.permutation_character(&s4).unwrap();
        assert!(whole.values.iter().all(|v| v.to_integer() == Some(1)));
    }

    #[test]
    fn induction_from_a3() {
        let s3 = symmetric(3);
        let t = character_table(&s3).unwrap();
        let et = t.element_table().clone();
        let a3 = s3.derived_subgroup();
        let sub = Subgroup {
            bits: et.subgroup_bits(&a3),
            gens: a3.generators().iter().map(|g| et.index_of(g).unwrap()).collect(),
        };
        let view = t.subgroup(&sub);
        let lin = view.linear_characters();
        assert_eq!(lin.len(), 3);
        let induced = view.induce(&lin[1]);
        let two = t.degrees().iter().position(|&d| d == 2).unwrap();
        assert_eq!(induced, t.character(two));
        // Frobenius reciprocity
        for i in 0..3 {
            let lhs = t.inner_product(&view.induce(&lin[1]), &t.character(i));
            let rhs = view.inner_product(&lin[1], &view.restrict(&t.character(i)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn linear_character_counts() {
        assert_eq!(linear_characters(&symmetric(3)).unwrap().len(), 2);
        assert_eq!(linear_characters(&alternating(5)).unwrap().len(), 1);
        assert_eq!(linear_characters(&cyclic(6)).unwrap().len(), 6);
    }

    #[test]
    fn monomiality() {
        assert!(is_monomial(&symmetric(4)).unwrap());
        assert!(is_monomial(&cyclic(5)).unwrap());
        assert!(!is_monomial(&alternating(5)).unwrap());
    }

    #[test]
    fn quasirandom_eps() {
        assert_eq!(quasirandomness_eps(&symmetric(3)).unwrap(), 0.0);
        let e = quasirandomness_eps(&alternating(5)).unwrap();
        assert!((e - 3f64.log2() / 60f64.log2()).abs() < 1e-12);
        let e = quasirandomness_eps(&psl2(7).unwrap()).unwrap();
        assert!((e - 3f64.log2() / 168f64.log2()).abs() < 1e-12);
    }
}
