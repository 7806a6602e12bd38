//! Exact elements of `Q(ζ_n)`.
//!
//! Values are kept as sparse sums `Σ c_m ζ^m` over `0 ≤ m < n`; this form
//! is not unique, so comparisons go through [`Cyclotomic::canonical`],
//! which reduces modulo the cyclotomic polynomial `Φ_n`.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rational = Ratio<i128>;

#[derive(Clone)]
pub struct Cyclotomic {
    n: u32,
    terms: BTreeMap<u32, Rational>,
}

fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i128>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i128>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cache poisoned").get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        let phi = cyclotomic_polynomial(d);
        num = divide_exact(&num, &phi);
    }
    let p = Arc::new(num);
    cache.lock().expect("cache poisoned").insert(n, p.clone());
    p
}

/// Exact division by a monic polynomial (coefficients low to high).
fn divide_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i128; num.len() - dn];
    for i in (dn..num.len()).rev() {
        let c = rem[i];
        if c != 0 {
            quot[i - dn] = c;
            for j in 0..=dn {
                rem[i - dn + j] -= c * den[j];
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_rational(n: u32, r: Rational) -> Self {
        let mut c = Self::zero(n);
        c.add_term(0, r);
        c
    }

    pub fn from_int(n: u32, v: i128) -> Self {
        Self::from_rational(n, Rational::from_integer(v))
    }

    /// `ζ_n^m`.
    pub fn root(n: u32, m: u64) -> Self {
        let mut c = Self::zero(n);
        c.add_term((m % n as u64) as u32, Rational::one());
        c
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn add_term(&mut self, m: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let m = m % self.n;
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, r: Rational) -> Self {
        if r.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(&m, c)| (m, *c * r)).collect(),
        }
    }

    /// Complex conjugate: `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (&m, c) in &self.terms {
            out.add_term((self.n - m) % self.n, *c);
        }
        out
    }

    /// Galois image under `ζ ↦ ζ^k`, `gcd(k, n) = 1`.
    pub fn galois(&self, k: u32) -> Self {
        let mut out = Self::zero(self.n);
        for (&m, c) in &self.terms {
            out.add_term(((m as u64 * k as u64) % self.n as u64) as u32, *c);
        }
        out
    }

    /// Coefficients in the basis `1, ζ, …, ζ^{φ(n)-1}`.
    pub fn canonical(&self) -> Vec<Rational> {
        let phi = cyclotomic_polynomial(self.n);
        let deg = phi.len() - 1;
        let den = self
            .terms
            .values()
            .fold(1i128, |acc, c| acc.lcm(c.denom()));
        let mut v = vec![0i128; (self.n as usize).max(deg)];
        for (&m, c) in &self.terms {
            v[m as usize] += c.numer() * (den / c.denom());
        }
        for i in (deg..v.len()).rev() {
            let c = v[i];
            if c != 0 {
                for j in 0..=deg {
                    v[i - deg + j] -= c * phi[j];
                }
            }
        }
        v.truncate(deg);
        v.into_iter().map(|x| Rational::new(x, den)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        let c = self.canonical();
        if c.iter().skip(1).all(|x| x.is_zero()) {
            Some(c.first().copied().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<i128> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Numerical value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (&m, c) in &self.terms {
            let angle = 2.0 * std::f64::consts::PI * m as f64 / self.n as f64;
            let c = *c.numer() as f64 / *c.denom() as f64;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, Rational)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n, "cyclotomic fields differ");
        (self - other).is_zero()
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.n, rhs.n, "cyclotomic fields differ");
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, *c);
        }
        out
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.scale(-Rational::one())
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.n, rhs.n, "cyclotomic fields differ");
        let mut out = Cyclotomic::zero(self.n);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(((a as u64 + b as u64) % self.n as u64) as u32, *ca * *cb);
            }
        }
        out
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let sign = if c < Rational::zero() { "-" } else { "+" };
            let mag = c.abs();
            if !first || sign == "-" {
                write!(f, "{sign}")?;
            }
            first = false;
            if m == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "E({})^{m}", self.n)?;
            } else {
                write!(f, "{mag}*E({})^{m}", self.n)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
