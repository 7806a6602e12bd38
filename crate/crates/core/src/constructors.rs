//! Named groups as explicit permutation groups, and their text specs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::config::limits;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Degree cap for the imprimitive wreath action.
pub const WREATH_DEGREE_CAP: u64 = 256;

/// One named group from the corpus vocabulary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum GroupSpec {
    Sym(u32),
    Alt(u32),
    Cyclic(u32),
    Dihedral(u32),
    Psl2(u32),
    /// `(C_p)^k ⋊ Alt(k)` on `p·k` points.
    Wreath { p: u32, k: u32 },
    /// `V_k ⋊ Alt(k)` with `V_k` the zero-sum vectors of `F_p^k`.
    Deleted { p: u32, k: u32 },
    Product(Vec<GroupSpec>),
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn factorial(k: u32) -> u64 {
    (1..=k as u64).product()
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Spec(msg));
        match *self {
            GroupSpec::Sym(k) | GroupSpec::Alt(k) if k == 0 => bad(format!("{self}: k must be ≥ 1")),
            GroupSpec::Cyclic(0) => bad("cyclic: m must be ≥ 1".into()),
            GroupSpec::Dihedral(m) if m < 3 => bad(format!("dihedral {m}: m must be ≥ 3")),
            GroupSpec::Psl2(q) if !(3..=13).contains(&q) || !is_prime(q as u64) => {
                bad(format!("psl2 {q}: q must be an odd prime ≤ 13"))
            }
            GroupSpec::Wreath { p, k } => {
                if !is_prime(p as u64) || k < 3 {
                    bad(format!("wreath {p} {k}: need p prime and k ≥ 3"))
                } else if p as u64 * k as u64 > WREATH_DEGREE_CAP {
                    bad(format!("wreath {p} {k}: degree exceeds {WREATH_DEGREE_CAP}"))
                } else {
                    Ok(())
                }
            }
            GroupSpec::Deleted { p, k } => {
                let cap = limits().element_cap;
                if !is_prime(p as u64) || k < 3 {
                    bad(format!("deleted {p} {k}: need p prime and k ≥ 3"))
                } else if (p as u64).checked_pow(k - 1).is_none_or(|v| v > cap) {
                    bad(format!("deleted {p} {k}: p^(k-1) exceeds the element cap {cap}"))
                } else {
                    Ok(())
                }
            }
            GroupSpec::Product(ref parts) => {
                if parts.len() < 2 {
                    return bad("product needs at least two factors".into());
                }
                parts.iter().try_for_each(|p| p.validate())
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<PermGroup> {
        self.validate()?;
        Ok(match *self {
            GroupSpec::Sym(k) => symmetric(k),
            GroupSpec::Alt(k) => alternating(k),
            GroupSpec::Cyclic(m) => cyclic(m),
            GroupSpec::Dihedral(m) => dihedral(m)?,
            GroupSpec::Psl2(q) => psl2(q)?,
            GroupSpec::Wreath { p, k } => wreath_cyc_alt(p, k)?,
            GroupSpec::Deleted { p, k } => deleted_semidirect(p, k)?,
            GroupSpec::Product(ref parts) => {
                let mut acc = parts[0].build()?;
                for p in &parts[1..] {
                    acc = PermGroup::direct_product(&acc, &p.build()?);
                }
                acc
            }
        })
    }

    /// Closed-form group order.
    pub fn expected_order(&self) -> u64 {
        match *self {
            GroupSpec::Sym(k) => factorial(k),
            GroupSpec::Alt(k) => (factorial(k) / 2).max(1),
            GroupSpec::Cyclic(m) => m as u64,
            GroupSpec::Dihedral(m) => 2 * m as u64,
            GroupSpec::Psl2(q) => {
                let q = q as u64;
                q * (q * q - 1) / 2
            }
            GroupSpec::Wreath { p, k } => (p as u64).pow(k) * factorial(k) / 2,
            GroupSpec::Deleted { p, k } => (p as u64).pow(k - 1) * factorial(k) / 2,
            GroupSpec::Product(ref parts) => parts.iter().map(|p| p.expected_order()).product(),
        }
    }

    pub fn is_simple_family(&self) -> bool {
        matches!(*self, GroupSpec::Alt(k) if k >= 5) || matches!(*self, GroupSpec::Psl2(q) if q >= 5)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Sym(k) => write!(f, "sym {k}"),
            GroupSpec::Alt(k) => write!(f, "alt {k}"),
            GroupSpec::Cyclic(m) => write!(f, "cyclic {m}"),
            GroupSpec::Dihedral(m) => write!(f, "dihedral {m}"),
            GroupSpec::Psl2(q) => write!(f, "psl2 {q}"),
            GroupSpec::Wreath { p, k } => write!(f, "wreath {p} {k}"),
            GroupSpec::Deleted { p, k } => write!(f, "deleted {p} {k}"),
            GroupSpec::Product(parts) => {
                write!(f, "product ")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ; ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("product") {
            let parts = rest
                .split(';')
                .map(|p| p.parse::<GroupSpec>())
                .collect::<Result<Vec<_>>>()?;
            if parts.iter().any(|p| matches!(p, GroupSpec::Product(_))) {
                return Err(Error::Spec(format!("nested product in {s:?}")));
            }
            let spec = GroupSpec::Product(parts);
            spec.validate()?;
            return Ok(spec);
        }
        let mut words = s.split_whitespace();
        let kind = words
            .next()
            .ok_or_else(|| Error::Spec("empty group spec".into()))?;
        let params = words
            .map(|w| {
                w.parse::<u32>()
                    .map_err(|_| Error::Spec(format!("bad parameter {w:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |n: usize| {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::Spec(format!("{kind} takes {n} parameter(s): {s:?}")))
            }
        };
        let spec = match kind {
            "sym" => arity(1).map(|_| GroupSpec::Sym(params[0])),
            "alt" => arity(1).map(|_| GroupSpec::Alt(params[0])),
            "cyclic" => arity(1).map(|_| GroupSpec::Cyclic(params[0])),
            "dihedral" => arity(1).map(|_| GroupSpec::Dihedral(params[0])),
            "psl2" => arity(1).map(|_| GroupSpec::Psl2(params[0])),
            "wreath" => arity(2).map(|_| GroupSpec::Wreath { p: params[0], k: params[1] }),
            "deleted" => arity(2).map(|_| GroupSpec::Deleted { p: params[0], k: params[1] }),
            other => Err(Error::Spec(format!("unknown group kind {other:?}"))),
        }?;
        spec.validate()?;
        Ok(spec)
    }
}

impl TryFrom<String> for GroupSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<GroupSpec> for String {
    fn from(g: GroupSpec) -> String {
        g.to_string()
    }
}

fn cycle_perm(degree: usize, cycle: &[u32]) -> Permutation {
    Permutation::from_cycles(degree, &[cycle]).expect("valid cycle")
}

pub fn symmetric(k: u32) -> PermGroup {
    let d = k as usize;
    let mut gens = Vec::new();
    if k >= 2 {
        gens.push(cycle_perm(d, &[0, 1]));
    }
    if k >= 3 {
        gens.push(cycle_perm(d, &(0..k).collect::<Vec<_>>()));
    }
    PermGroup::new(d, gens).expect("degree consistent")
}

/// Generators of `Alt(k)` as permutations of `0..k`.
fn alternating_gens(k: u32) -> Vec<Permutation> {
    let d = k as usize;
    if k < 3 {
        return Vec::new();
    }
    let mut gens = vec![cycle_perm(d, &[0, 1, 2])];
    if k >= 4 {
        let long: Vec<u32> = if k % 2 == 1 { (0..k).collect() } else { (1..k).collect() };
        gens.push(cycle_perm(d, &long));
    }
    gens
}

pub fn alternating(k: u32) -> PermGroup {
    PermGroup::new(k as usize, alternating_gens(k)).expect("degree consistent")
}

pub fn cyclic(m: u32) -> PermGroup {
    let gens = if m >= 2 {
        vec![cycle_perm(m as usize, &(0..m).collect::<Vec<_>>())]
    } else {
        Vec::new()
    };
    PermGroup::new(m as usize, gens).expect("degree consistent")
}

/// Symmetries of the regular `m`-gon: rotation `i ↦ i+1` and reflection `i ↦ -i`.
pub fn dihedral(m: u32) -> Result<PermGroup> {
    if m < 3 {
        return Err(Error::Spec(format!("dihedral {m}: m must be ≥ 3")));
    }
    let rot = Permutation::from_images((0..m).map(|i| (i + 1) % m).collect())?;
    let refl = Permutation::from_images((0..m).map(|i| (m - i) % m).collect())?;
    PermGroup::new(m as usize, vec![rot, refl])
}

pub fn point_stabilizer(g: &PermGroup, pt: u32) -> Result<PermGroup> {
    g.point_stabilizer(pt)
}

/// `PSL(2,q)` on the projective line; point `q` is ∞.
pub fn psl2(q: u32) -> Result<PermGroup> {
    GroupSpec::Psl2(q).validate()?;
    let inf = q;
    let translate = (0..=q).map(|x| if x == inf { inf } else { (x + 1) % q }).collect();
    let inverse = |x: u32| -> u32 { (1..q).find(|y| x * y % q == 1).expect("q prime") };
    let invert = (0..=q)
        .map(|x| match x {
            _ if x == inf => 0,
            0 => inf,
            _ => (q - inverse(x)) % q,
        })
        .collect();
    PermGroup::new(
        q as usize + 1,
        vec![
            Permutation::from_images(translate)?,
            Permutation::from_images(invert)?,
        ],
    )
}

/// `(C_p)^k ⋊ Alt(k)`: `k` blocks of `p` points, point `i·p + j` is `j` in block `i`.
pub fn wreath_cyc_alt(p: u32, k: u32) -> Result<PermGroup> {
    GroupSpec::Wreath { p, k }.validate()?;
    let d = (p * k) as usize;
    let mut gens = vec![cycle_perm(d, &(0..p).collect::<Vec<_>>())];
    for a in alternating_gens(k) {
        let images = (0..p * k)
            .map(|x| a.apply(x / p) * p + x % p)
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::new(d, gens)
}

/// Zero-sum vectors of `F_p^k` in lexicographic order; these are the points
/// of the affine action of `V_k ⋊ Alt(k)`.
pub fn zero_sum_vectors(p: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let total = (p as u64).pow(k);
    for code in 0..total {
        let mut v = vec![0u32; k as usize];
        let mut c = code;
        for slot in v.iter_mut().rev() {
            *slot = (c % p as u64) as u32;
            c /= p as u64;
        }
        if v.iter().sum::<u32>() % p == 0 {
            out.push(v);
        }
    }
    out
}

fn vector_index(points: &[Vec<u32>]) -> rustc_hash::FxHashMap<Vec<u32>, u32> {
    points
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i as u32))
        .collect()
}

fn translation_gens(p: u32, k: u32, points: &[Vec<u32>]) -> Result<Vec<Permutation>> {
    let index = vector_index(points);
    let mut gens = Vec::new();
    for i in 0..(k - 1) as usize {
        // e_i - e_{k-1}
        let images = points
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w[i] = (w[i] + 1) % p;
                w[k as usize - 1] = (w[k as usize - 1] + p - 1) % p;
                index[&w]
            })
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    Ok(gens)
}

/// `V_k ⋊ Alt(k)` acting affinely on the `p^(k-1)` vectors of the deleted
/// permutation module.
pub fn deleted_semidirect(p: u32, k: u32) -> Result<PermGroup> {
    GroupSpec::Deleted { p, k }.validate()?;
    let points = zero_sum_vectors(p, k);
    let index = vector_index(&points);
    let mut gens = translation_gens(p, k, &points)?;
    for a in alternating_gens(k) {
        // coordinate i moves to position a(i)
        let images = points
            .iter()
            .map(|v| {
                let mut w = vec![0u32; k as usize];
                for (i, &x) in v.iter().enumerate() {
                    w[a.apply(i as u32) as usize] = x;
                }
                index[&w]
            })
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::new(points.len(), gens)
}

/// The translation subgroup `V_k` inside [`deleted_semidirect`].
pub fn deleted_translations(p: u32, k: u32) -> Result<PermGroup> {
    GroupSpec::Deleted { p, k }.validate()?;
    let points = zero_sum_vectors(p, k);
    PermGroup::new(points.len(), translation_gens(p, k, &points)?)
}

/// The base subgroup `(C_p)^k` inside [`wreath_cyc_alt`].
pub fn wreath_base(p: u32, k: u32) -> Result<PermGroup> {
    GroupSpec::Wreath { p, k }.validate()?;
    let d = (p * k) as usize;
    let gens = (0..k)
        .map(|b| cycle_perm(d, &(b * p..(b + 1) * p).collect::<Vec<_>>()))
        .collect();
    PermGroup::new(d, gens)
}
