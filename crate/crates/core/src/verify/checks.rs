//! The registered checks. Each one walks every applicable case (subgroup,
//! normal subgroup, `n`) of one corpus entry and reports the first failing
//! case, or the tightest passing one.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::analysis::{n_range, GroupData};
use crate::characters::{is_monomial_with, CharacterTable};
use crate::constructors::{alternating, deleted_translations, wreath_base, GroupSpec};
use crate::error::{Error, Result};
use crate::growth::{bab_chain_of, GrowthTable};
use crate::subgroups::{normalizer, Subgroup};

use super::corpus::{Baseline, CorpusEntry};
use super::report::{CheckResult, Status, Witness};

pub const CHECK_IDS: &[&str] = &[
    "eqLM",
    "ab-hered-1",
    "ab-hered-2",
    "ab-quotient",
    "bab-chain",
    "center-remark",
    "sub-count",
    "lb-abelian",
    "rep-hered-1",
    "rep-hered-2",
    "jordan-measure",
    "monomial-bound",
    "fastag-construction",
    "quasi-i",
    "quasi-ii",
    "ext-lemma",
    "zeta-data",
    "sum-squares",
    "rel-reduce",
    "rel-hered-ab",
    "rel-hered-rep",
    "rel-base",
    "weak-abnormal",
    "dihedral-example",
    "sym-example",
    "kG-data",
];

/// Largest alternating degree in the zeta monotonicity chain.
pub const ZETA_CHAIN_END: u32 = 9;

/// Slack for comparisons made on base-2 logarithms; always in favour of the
/// inequality, so rounding never produces a failure.
const LOG_MARGIN: f64 = 1e-9;

pub fn is_registered(id: &str) -> bool {
    CHECK_IDS.contains(&id)
}

/// Checks evaluated once per baseline `Y`.
pub fn is_relative(id: &str) -> bool {
    matches!(id, "rel-reduce" | "rel-hered-ab" | "rel-hered-rep" | "rel-base" | "weak-abnormal")
}

pub fn applies(id: &str, spec: &GroupSpec) -> bool {
    match id {
        "fastag-construction" => matches!(spec, GroupSpec::Deleted { .. } | GroupSpec::Wreath { .. }),
        "zeta-data" => spec.is_simple_family(),
        "dihedral-example" => {
            matches!(*spec, GroupSpec::Dihedral(p) if crate::constructors::is_prime(p as u64))
        }
        "sym-example" => matches!(*spec, GroupSpec::Sym(k) if k >= 3),
        _ => true,
    }
}

/// One corpus entry prepared for checking.
pub struct Subject<'a> {
    pub entry: &'a CorpusEntry,
    pub data: &'a GroupData,
}

#[derive(Clone)]
struct Case {
    n: Option<u64>,
    lhs: String,
    rhs: String,
    subgroup: Option<Subgroup>,
    normal: Option<Subgroup>,
}

/// Accumulates the cases of one check.
struct Tally {
    cases: u64,
    failure: Option<Case>,
    tightest: Option<(f64, Case)>,
    reported: bool,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            failure: None,
            tightest: None,
            reported: false,
            notes: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, tightness: f64, make: impl FnOnce() -> Case) {
        self.cases += 1;
        if !ok {
            if self.failure.is_none() {
                self.failure = Some(make());
            }
            return;
        }
        if self.tightest.as_ref().is_none_or(|(t, _)| tightness > *t) {
            self.tightest = Some((tightness, make()));
        }
    }

    /// `lhs ≤ rhs` on integers.
    fn le(&mut self, lhs: u64, rhs: u64, n: Option<u64>, h: Option<&Subgroup>, nn: Option<&Subgroup>) {
        let tight = if rhs == 0 { f64::INFINITY } else { lhs as f64 / rhs as f64 };
        self.record(lhs <= rhs, tight, || case(n, lhs, rhs, h, nn));
    }

    fn eq(&mut self, lhs: u64, rhs: u64, n: Option<u64>, h: Option<&Subgroup>, nn: Option<&Subgroup>) {
        self.record(lhs == rhs, 1.0, || case(n, lhs, rhs, h, nn));
    }

    fn holds(&mut self, ok: bool, lhs: impl ToString, rhs: impl ToString, n: Option<u64>) {
        self.record(ok, 1.0, || Case {
            n,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            subgroup: None,
            normal: None,
        });
    }

    /// `lhs ≤ rhs` on base-2 logarithms.
    fn log_le(&mut self, lhs: f64, rhs: f64, n: Option<u64>) {
        let tight = lhs - rhs;
        self.record(lhs <= rhs + LOG_MARGIN, tight, || Case {
            n,
            lhs: format!("{lhs:.9}"),
            rhs: format!("{rhs:.9}"),
            subgroup: None,
            normal: None,
        });
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn case(n: Option<u64>, lhs: u64, rhs: u64, h: Option<&Subgroup>, nn: Option<&Subgroup>) -> Case {
    Case {
        n,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        subgroup: h.cloned(),
        normal: nn.cloned(),
    }
}

fn gens_text(data: &GroupData, s: &Subgroup) -> Vec<String> {
    data.generators_as_perms(s).iter().map(|p| p.to_string()).collect()
}

fn finish(id: &str, subject: &Subject, baseline: Option<&Baseline>, tally: Tally, started: Instant) -> CheckResult {
    let data = subject.data;
    let spec = subject.entry.spec.clone();
    let mut detail = tally.notes.join("; ");
    let (status, shown, witness) = match (tally.failure, tally.tightest) {
        (Some(f), _) => {
            let w = Witness {
                check_id: id.to_string(),
                group: spec.clone(),
                declared_generators: subject.entry.declared_generators,
                baseline: baseline.cloned(),
                n: f.n,
                subgroup: f.subgroup.as_ref().map(|s| gens_text(data, s)),
                normal: f.normal.as_ref().map(|s| gens_text(data, s)),
                lhs: f.lhs.clone(),
                rhs: f.rhs.clone(),
            };
            (Status::Fail, Some(f), Some(w))
        }
        (None, t) => {
            let status = if tally.reported { Status::Reported } else { Status::Pass };
            (status, t.map(|(_, c)| c), None)
        }
    };
    let prefix = format!("{} cases", tally.cases);
    detail = if detail.is_empty() { prefix } else { format!("{prefix}; {detail}") };
    CheckResult {
        check_id: id.to_string(),
        group: spec,
        baseline: baseline.cloned(),
        status,
        lhs: shown.as_ref().map(|c| c.lhs.clone()),
        rhs: shown.as_ref().map(|c| c.rhs.clone()),
        n: shown.as_ref().and_then(|c| c.n),
        witness,
        detail,
        timing_us: started.elapsed().as_micros() as u64,
    }
}

/// Runs one check. Relative checks need a baseline; the others ignore it.
pub fn run_check(id: &str, subject: &Subject, baseline: Option<(&Baseline, &Subgroup)>) -> Result<CheckResult> {
    if !is_registered(id) {
        return Err(Error::UnknownCheck(id.to_string()));
    }
    let started = Instant::now();
    let mut t = Tally::new();
    let outcome = match baseline {
        Some((_, y)) if is_relative(id) => run_relative(id, subject, y, &mut t),
        None if is_relative(id) => Err(Error::Invalid(format!("{id} needs a baseline"))),
        _ => run_absolute(id, subject, &mut t),
    };
    let shown_baseline = baseline.filter(|_| is_relative(id)).map(|(b, _)| b);
    if let Err(e) = outcome {
        // resource or construction errors fail the check without a case witness
        t.record(false, 0.0, || Case {
            n: None,
            lhs: "error".into(),
            rhs: e.to_string(),
            subgroup: None,
            normal: None,
        });
    }
    Ok(finish(id, subject, shown_baseline, t, started))
}

fn run_absolute(id: &str, s: &Subject, t: &mut Tally) -> Result<()> {
    match id {
        "eqLM" => eq_lm(s, t),
        "ab-hered-1" => ab_hered(s, t, true),
        "ab-hered-2" => ab_hered(s, t, false),
        "ab-quotient" => ab_quotient(s, t),
        "bab-chain" => bab_chain(s, t),
        "center-remark" => center_remark(s, t),
        "sub-count" => sub_count(s, t),
        "lb-abelian" => lb_abelian(s, t),
        "rep-hered-1" => rep_hered(s, t, true),
        "rep-hered-2" => rep_hered(s, t, false),
        "jordan-measure" => jordan_measure(s, t),
        "monomial-bound" => monomial_bound(s, t),
        "fastag-construction" => fastag(s, t),
        "quasi-i" => quasi_i(s, t),
        "quasi-ii" => quasi_ii(s, t),
        "ext-lemma" => ext_lemma(s, t),
        "zeta-data" => zeta_data(s, t),
        "sum-squares" => sum_squares(s, t),
        "dihedral-example" => dihedral_example(s, t),
        "sym-example" => sym_example(s, t),
        "kG-data" => kg_data(s, t),
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

fn run_relative(id: &str, s: &Subject, y: &Subgroup, t: &mut Tally) -> Result<()> {
    let rel = Relative::new(s.data, y)?;
    match id {
        "rel-reduce" => rel_reduce(s, y, t),
        "rel-hered-ab" => rel_hered_ab(s, &rel, t),
        "rel-hered-rep" => rel_hered_rep(s, &rel, t),
        "rel-base" => rel_base(&rel, t),
        "weak-abnormal" => weak_abnormal(s, &rel, t),
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

// ---- absolute checks -------------------------------------------------------

fn eq_lm(s: &Subject, t: &mut Tally) -> Result<()> {
    let ab = s.data.ab_table();
    let rep = s.data.rep_table()?;
    for n in n_range(s.data.order()) {
        t.le(ab.value(n), n * rep.value(n), Some(n), None, None);
    }
    Ok(())
}

fn ab_hered(s: &Subject, t: &mut Tally, first: bool) -> Result<()> {
    let d = s.data;
    let g_ab = d.ab_table();
    for c in &d.lattice().classes {
        let h_ab = d.ab_of_subgroup(&c.member);
        let idx = c.index;
        if first {
            // ab_n(H) ≤ ab_{|G:H| n}(G)
            for n in n_range(c.order) {
                t.le(h_ab.value(n), g_ab.value(idx * n), Some(n), Some(&c.member), None);
            }
        } else {
            // ab_n(G) ≤ |G:H| ab_n(H)
            for n in n_range(d.order()) {
                t.le(g_ab.value(n), idx * h_ab.value(n), Some(n), Some(&c.member), None);
            }
        }
    }
    Ok(())
}

fn ab_quotient(s: &Subject, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let g_ab = d.ab_table();
    for i in d.proper_normal_indices() {
        let q = d.quotient(i)?;
        let q_ab = q.data.ab_table();
        for n in n_range(d.order()) {
            t.le(q_ab.value(n), g_ab.value(n), Some(n), None, Some(&q.normal));
        }
    }
    Ok(())
}

fn ext_lemma(s: &Subject, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let g_ab = d.ab_table();
    let mut divisor_misses = 0u64;
    let mut first_miss = None;
    for i in d.proper_normal_indices() {
        let q = d.quotient(i)?;
        let q_ab = q.data.ab_table();
        let n_ab = d.ab_of_subgroup(&q.normal);
        for n in n_range(d.order()) {
            let lhs = g_ab.value(n);
            // the proof splits |G:H| = |G:NH| |NH:H| with j = |NH:H|, so j
            // divides |G:H| but not necessarily n
            let split = (1..=n).map(|j| q_ab.value(n / j) * n_ab.value(j)).max().expect("n ≥ 1");
            t.le(lhs, split, Some(n), None, Some(&q.normal));
            t.le(lhs, q_ab.value(n) * n_ab.value(n), Some(n), None, Some(&q.normal));
            let divisor = (1..=n)
                .filter(|j| n % j == 0)
                .map(|j| q_ab.value(n / j) * n_ab.value(j))
                .max()
                .expect("n ≥ 1");
            if lhs > divisor {
                divisor_misses += 1;
                first_miss.get_or_insert_with(|| {
                    format!("n={n} |N|={} ab_n(G)={lhs} > {divisor}", q.normal.order())
                });
            }
        }
    }
    if let Some(m) = first_miss {
        t.note(format!("divisor-only form j | n exceeded in {divisor_misses} cases, first {m}"));
    }
    Ok(())
}

fn bab_chain(s: &Subject, t: &mut Tally) -> Result<()> {
    let d = s.data;
    for c in &d.lattice().classes {
        let (lhs, rhs) = bab_chain_of(d.table(), &c.member);
        t.le(lhs, rhs, None, Some(&c.member), None);
    }
    Ok(())
}

fn center_remark(s: &Subject, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let table = d.table();
    let z = d.center();
    for c in &d.lattice().classes {
        let mut gens = c.member.gens.clone();
        gens.extend(z.gens.iter().copied());
        let hz = table.derived(&gens);
        let h = table.derived(&c.member.gens);
        let ok = hz == h;
        t.record(ok, 1.0, || case(None, hz.count() as u64, h.count() as u64, Some(&c.member), None));
    }
    if z.order() == 1 {
        t.note("trivial center");
    }
    Ok(())
}

fn saturating_factorial_pow(n: u64, d: u32) -> Option<u128> {
    let mut f: u128 = 1;
    for i in 2..=n as u128 {
        f = f.checked_mul(i)?;
    }
    f.checked_pow(d)
}

/// Finds a generating set of size `d`, if the cheap searches can.
fn generated_by(data: &GroupData, d: u32) -> bool {
    let table = data.table();
    let n = data.order();
    if d as usize >= table.generator_indices().len() {
        return true;
    }
    if table.generators_of(&table.full()).len() <= d as usize {
        return true;
    }
    match d {
        0 => n == 1,
        1 => (0..n as u32).any(|x| table.element_order(x) as u64 == n),
        2 => {
            let classes = table.classes();
            classes.reps.iter().any(|&x| {
                (0..n as u32).any(|y| table.closure(&[x, y]).count() as u64 == n)
            })
        }
        _ => false,
    }
}

fn sub_count(s: &Subject, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let dd = s.entry.d(d.group());
    let sub = d.sub_table();
    for n in n_range(d.order()).into_iter().filter(|&n| n >= 4) {
        let lhs = sub.value(n);
        let (ok, rhs, tight) = match saturating_factorial_pow(n, dd) {
            Some(rhs) => (lhs as u128 <= rhs, rhs.to_string(), lhs as f64 / rhs as f64),
            // (n!)^d beyond 2^128 exceeds any subgroup count here
            None => (true, format!("({n}!)^{dd}"), 0.0),
        };
        t.record(ok, tight, || Case {
            n: Some(n),
            lhs: lhs.to_string(),
            rhs,
            subgroup: None,
            normal: None,
        });
    }
    // the declared d must be a generator count the group actually has
    if !generated_by(d, dd) {
        t.holds(false, format!("d={dd}"), "no generating set of that size", None);
    }
    t.note(format!("d={dd}"));
    Ok(())
}

fn log2(x: u64) -> f64 {
    (x as f64).log2()
}

/// `max log ab_n · log log n / log n` over `n ≥ 3`: the smallest `β` with
/// `ab_n ≤ n^{β / log log n}` on this group.
fn implied_beta(ab: &GrowthTable, order: u64) -> f64 {
    let mut ns: Vec<u64> = (3..=7.min(order)).collect();
    ns.extend(ab.jumps.iter().map(|&(n, _)| n).filter(|&n| n >= 3));
    ns.into_iter()
        .map(|n| log2(ab.value(n)) * log2(n).log2() / log2(n))
        .fold(0.0, f64::max)
}

fn lb_abelian(s: &Subject, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let order = d.order();
    let ab = d.ab_table();
    if order <= 4 {
        t.note("|G| ≤ 4: not applicable");
        return Ok(());
    }
    let las = ab.saturation();
    let lhs = log2(las);
    let rhs = log2(order) / (32.0 * log2(order).log2());
    t.log_le(rhs, lhs, Some(order));
    t.note(format!("largest abelian section {las}; implied beta {:.6}", implied_beta(&ab, order)));
    Ok(())
}

fn rep_hered(s: &Subject, t: &mut Tally, first: bool) -> Result<()> {
    let d = s.data;
    let g_rep = d.rep_table()?;
    let tables = d.class_rep_tables()?;
    for (c, h_rep) in d.lattice().classes.iter().zip(tables) {
        let idx = c.index;
        if first {
            for n in n_range(c.order) {
                t.le(h_rep.value(n), idx * g_rep.value(n * idx), Some(n), Some(&c.member), None);
            }
        } else {
            for n in n_range(d.order()) {
                t.le(g_rep.value(n), idx * h_rep.value(n), Some(n), Some(&c.member), None);
            }
        }
    }
    Ok(())
}

fn jordan_measure(s: &Subject, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let table = d.table();
    let ct = d.characters()?;
    let order = d.order();
    let mut seen: HashMap<u128, (u64, u64, u64)> = HashMap::new();
    let mut rows = Vec::new();
    for i in 0..ct.class_count() {
        let kernel = ct.kernel_bits(i);
        let (image, idx, las) = *seen.entry(kernel.fingerprint()).or_insert_with(|| {
            let kgens = table.generators_of(&kernel);
            let image = order / kernel.count() as u64;
            // abelian normal subgroups of G/K are the A/K with K ≤ A ◁ G and A' ≤ K
            let idx = d
                .normals()
                .iter()
                .filter(|a| kernel.is_subset(&a.bits) && table.derived(&a.gens).is_subset(&kernel))
                .map(|a| order / a.order())
                .min()
                .unwrap_or(image);
            // largest abelian section of G/K: max |H / H'K| over K ≤ H
            let las = d
                .lattice()
                .classes
                .iter()
                .filter(|c| kernel.is_subset(&c.member.bits))
                .map(|c| {
                    let hk = table.extend(&table.derived(&c.member.gens), &kgens);
                    c.order / hk.count() as u64
                })
                .max()
                .unwrap_or(1);
            (image, idx, las)
        });
        t.le(image, idx * las, Some(ct.degrees()[i]), None, None);
        rows.push(format!("{}:{image}:{idx}:{las}", ct.degrees()[i]));
    }
    t.reported = true;
    t.note(format!("degree:|image|:abelian-normal index:largest abelian section = {}", rows.join(",")));
    Ok(())
}

fn monomial_bound(s: &Subject, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let ct = d.characters()?;
    if !is_monomial_with(ct, d.lattice()) {
        t.reported = true;
        t.note("not monomial; bound not asserted");
        return Ok(());
    }
    let rep = d.rep_table()?;
    let sub = d.sub_table();
    let ab = d.ab_table();
    for n in n_range(d.order()) {
        t.le(rep.value(n), sub.value(n) * ab.value(n), Some(n), None, None);
    }
    t.note("monomial");
    Ok(())
}

fn fastag(s: &Subject, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let table = d.table();
    let order = d.order();
    let whole = d.whole();
    let g_ab = order / table.derived(&whole.gens).count() as u64;
    let half_factorial = |k: u32| (1..=k as u64).product::<u64>() / 2;
    match s.entry.spec {
        GroupSpec::Deleted { p, k } => {
            let v = d.subgroup_of(&deleted_translations(p, k)?)?;
            if k >= 5 {
                t.eq(g_ab, 1, None, None, None);
                t.note("perfect");
            } else {
                t.note(format!("|G/G'| = {g_ab} (perfectness only claimed for k ≥ 5)"));
            }
            t.eq(order / v.order(), half_factorial(k), None, Some(&v), None);
            let v_ab = v.order() / table.derived(&v.gens).count() as u64;
            t.eq(v_ab, (p as u64).pow(k - 1), None, Some(&v), None);
        }
        GroupSpec::Wreath { p, k } => {
            let b = d.subgroup_of(&wreath_base(p, k)?)?;
            // Alt(3) and Alt(4) have abelianization of order 3
            let top = if matches!(k, 3 | 4) { 3 } else { 1 };
            t.eq(g_ab, p as u64 * top, None, None, None);
            if top > 1 {
                t.note(format!("|G/G'| = p·|Alt({k})/Alt({k})'| below k = 5"));
            }
            t.eq(order / b.order(), half_factorial(k), None, Some(&b), None);
            let b_ab = b.order() / table.derived(&b.gens).count() as u64;
            t.eq(b_ab, (p as u64).pow(k), None, Some(&b), None);
        }
        _ => return Err(Error::Invalid("construction check needs a deleted or wreath group".into())),
    }
    Ok(())
}

fn quasi_i(s: &Subject, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let order = d.order();
    let Some(min_index) = d.lattice().classes.iter().map(|c| c.index).filter(|&i| i > 1).min() else {
        t.note("trivial group");
        return Ok(());
    };
    // largest ε with |G:H| ≥ |G|^ε for all proper H
    let eps = log2(min_index) / log2(order);
    let ab = d.ab_table();
    let ab1 = ab.value(1);
    if ab1 as f64 * eps > 1.0 + LOG_MARGIN {
        t.note(format!("hypothesis |G/G'| ≤ 1/ε fails (ε = {eps:.6}, |G/G'| = {ab1})"));
        return Ok(());
    }
    for n in n_range(order) {
        let rhs = (1.0 / eps).log2() + (1.0 / eps - 1.0) * log2(n);
        t.log_le(log2(ab.value(n)), rhs, Some(n));
    }
    t.note(format!("ε = {eps:.6}"));
    Ok(())
}

fn quasi_ii(s: &Subject, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let order = d.order();
    let ct = d.characters()?;
    if order == 1 {
        t.note("trivial group");
        return Ok(());
    }
    let q = ct.quasirandomness()?;
    if q.min_degree <= 1 {
        t.note("ε = 0: a non-trivial linear character exists");
        return Ok(());
    }
    let eps = q.epsilon();
    for &deg in ct.degrees() {
        // r_n(G) n² ≤ |G|
        t.le(ct.degree_count(deg) * deg * deg, order, Some(deg), None, None);
    }
    let rep = d.rep_table()?;
    let exponent = log2(order) / log2(q.min_degree) - 1.0;
    for n in n_range(order) {
        t.log_le(log2(rep.value(n)), exponent * log2(n), Some(n));
    }
    t.note(format!("ε = {eps:.6}"));
    Ok(())
}

fn zeta_cache() -> &'static Mutex<HashMap<u32, BigRational>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, BigRational>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `ζ_{Alt(k)}(3)`, memoized across the run.
pub fn zeta3_alt(k: u32) -> Result<BigRational> {
    if let Some(z) = zeta_cache().lock().expect("zeta cache").get(&k) {
        return Ok(z.clone());
    }
    let z = CharacterTable::new(&alternating(k))?.zeta(3);
    zeta_cache().lock().expect("zeta cache").insert(k, z.clone());
    Ok(z)
}

pub fn rational_text(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn zeta_data(s: &Subject, t: &mut Tally) -> Result<()> {
    let one = BigRational::one();
    let bound = BigRational::new(BigInt::from(6), BigInt::from(5));
    let own = s.data.characters()?.zeta(3);
    let decimal = own.to_f64().unwrap_or(f64::NAN);
    t.holds(own > one, rational_text(&own), format!("{decimal:.10}"), Some(3));
    if let GroupSpec::Alt(k) = s.entry.spec {
        // ζ_{Alt(j)}(3) strictly decreasing and inside (1, 6/5) along the chain
        let mut prev: Option<BigRational> = None;
        for j in k..=k.max(ZETA_CHAIN_END) {
            let z = zeta3_alt(j)?;
            let in_range = z > one && z < bound;
            let decreasing = prev.as_ref().is_none_or(|p| &z < p);
            t.holds(in_range && decreasing, rational_text(&z), format!("alt {j}"), Some(3));
            prev = Some(z);
        }
        t.note(format!("chain alt {k}..{}", k.max(ZETA_CHAIN_END)));
    }
    Ok(())
}

fn sum_squares(s: &Subject, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let ct = d.characters()?;
    t.eq(ct.sum_of_squared_degrees(), d.order(), None, None, None);
    t.eq(ct.chars().len() as u64, ct.class_count() as u64, None, None, None);
    t.holds(ct.orthogonality_holds(), "orthogonal", "orthogonal", None);
    Ok(())
}

fn kg_data(s: &Subject, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let order = d.order();
    let k = d.characters()?.class_count() as u64;
    t.reported = true;
    if order < 3 {
        t.note(format!("k(G) = {k}"));
        return Ok(());
    }
    let scale = log2(order) / log2(order).log2().powi(3);
    t.holds(true, k, format!("{scale:.6}"), None);
    t.note(format!("k(G) = {k}; log|G|/(log log|G|)^3 = {scale:.6}; ratio {:.6}", k as f64 / scale));
    Ok(())
}

fn stab_zero(d: &GroupData) -> Result<Subgroup> {
    d.subgroup_of(&d.group().point_stabilizer(0)?)
}

fn dihedral_example(s: &Subject, t: &mut Tally) -> Result<()> {
    let GroupSpec::Dihedral(p) = s.entry.spec else {
        return Err(Error::Invalid("dihedral example needs a dihedral group".into()));
    };
    let d = s.data;
    let y = stab_zero(d)?;
    let inter = d.intermediates(&y);
    let ab = d.ab_rel_table(&y, &inter);
    t.eq(ab.saturation(), 1, Some(d.order()), Some(&y), None);
    let ct = d.characters()?;
    let rel = ct.rep_rel_counts(&y.bits);
    let deg2 = rel.degrees.iter().filter(|&&x| x == 2).count() as u64;
    let half = (p as u64 - 1) / 2;
    t.eq(deg2, half, Some(2), Some(&y), None);
    t.eq(rel.count(1), 1, Some(1), Some(&y), None);
    t.note(format!(
        "Rep_2 counting only degree-2 constituents = {deg2}; including the trivial one = {}",
        rel.count(2)
    ));
    Ok(())
}

fn sym_example(s: &Subject, t: &mut Tally) -> Result<()> {
    let GroupSpec::Sym(k) = s.entry.spec else {
        return Err(Error::Invalid("symmetric example needs a symmetric group".into()));
    };
    let d = s.data;
    let y = stab_zero(d)?;
    let inter = d.intermediates(&y);
    let ab = d.ab_rel_table(&y, &inter);
    t.eq(ab.saturation(), 1, Some(d.order()), Some(&y), None);
    let ct = d.characters()?;
    let rel = ct.rep_rel_counts(&y.bits);
    for n in n_range(d.order()) {
        t.le(rel.count(n), 2, Some(n), Some(&y), None);
    }
    let mut degrees = rel.degrees.clone();
    degrees.sort_unstable();
    let expected = vec![1, k as u64 - 1];
    t.holds(degrees == expected, format!("{degrees:?}"), format!("{expected:?}"), None);
    Ok(())
}

// ---- relative checks -------------------------------------------------------

/// Data for one baseline `Y`. With `Y` trivial the intermediate subgroups
/// are all subgroups, and every statement is conjugation invariant, so one
/// representative per class stands in for them.
struct Relative<'a> {
    data: &'a GroupData,
    y: Subgroup,
    trivial: bool,
    inter: Vec<Subgroup>,
    ab: GrowthTable,
    rep: GrowthTable,
}

impl<'a> Relative<'a> {
    fn new(data: &'a GroupData, y: &Subgroup) -> Result<Self> {
        let trivial = y.order() == 1;
        let (inter, ab) = if trivial {
            let reps = data.lattice().classes.iter().map(|c| c.member.clone()).collect();
            (reps, data.ab_table())
        } else {
            let inter = data.intermediates(y);
            let ab = data.ab_rel_table(y, &inter);
            (inter, ab)
        };
        let rep = data.rep_rel_table(y)?;
        Ok(Self {
            data,
            y: y.clone(),
            trivial,
            inter,
            ab,
            rep,
        })
    }

    /// `ab_n(H, Y)` for an intermediate `H`.
    fn ab_of(&self, i: usize) -> GrowthTable {
        if self.trivial {
            self.data.ab_of_subgroup(&self.inter[i])
        } else {
            self.data.ab_rel_of_subgroup(&self.inter[i], &self.y, &self.inter)
        }
    }
}

fn rel_base(rel: &Relative, t: &mut Tally) -> Result<()> {
    t.eq(rel.ab.value(1), rel.rep.value(1), Some(1), None, None);
    for n in n_range(rel.data.order()) {
        t.le(rel.ab.value(n), n * rel.rep.value(n), Some(n), None, None);
    }
    Ok(())
}

fn weak_abnormal(s: &Subject, rel: &Relative, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let weakly_abnormal = if rel.trivial {
        d.lattice().classes.iter().all(|c| c.class_length == c.index)
    } else {
        rel.inter
            .iter()
            .all(|h| normalizer(d.table(), h).order() == h.order())
    };
    let constant_one = rel.ab.is_constant(1);
    t.holds(
        weakly_abnormal == constant_one,
        format!("weakly abnormal = {weakly_abnormal}"),
        format!("ab_n(G,Y) = 1 for all n: {constant_one}"),
        None,
    );
    t.note(format!("weakly abnormal = {weakly_abnormal}"));
    Ok(())
}

fn rel_hered_ab(s: &Subject, rel: &Relative, t: &mut Tally) -> Result<()> {
    let order = s.data.order();
    for (i, h) in rel.inter.iter().enumerate() {
        let h_ab = rel.ab_of(i);
        let idx = order / h.order();
        for n in n_range(h.order()) {
            t.le(h_ab.value(n), rel.ab.value(idx * n), Some(n), Some(h), None);
        }
        for n in n_range(order) {
            t.le(rel.ab.value(n), idx * h_ab.value(n), Some(n), Some(h), None);
        }
    }
    t.note(format!("{} intermediate subgroups", rel.inter.len()));
    Ok(())
}

fn rel_hered_rep(s: &Subject, rel: &Relative, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let order = d.order();
    let class_tables = if rel.trivial { Some(d.class_rep_tables()?) } else { None };
    for (i, h) in rel.inter.iter().enumerate() {
        let h_rep = match class_tables {
            Some(tabs) => tabs[i].clone(),
            None => d.rep_rel_of_subgroup(h, &rel.y)?,
        };
        let idx = order / h.order();
        for n in n_range(h.order()) {
            t.le(h_rep.value(n), idx * rel.rep.value(idx * n), Some(n), Some(h), None);
        }
        for n in n_range(order) {
            t.le(rel.rep.value(n), idx * h_rep.value(n), Some(n), Some(h), None);
        }
    }
    Ok(())
}

/// For every proper non-trivial `N ◁ G`, compares `G` relative to `NY` with
/// `G/N` relative to `NY/N`; with `Y` trivial this is `Y = N`.
fn rel_reduce(s: &Subject, y0: &Subgroup, t: &mut Tally) -> Result<()> {
    let d = s.data;
    let table = d.table();
    let mut pairs = 0;
    for i in d.proper_normal_indices() {
        let q = d.quotient(i)?;
        let n = &q.normal;
        let mut gens = n.gens.clone();
        gens.extend(y0.gens.iter().copied());
        let y = Subgroup {
            bits: table.extend(&n.bits, &gens),
            gens,
        };
        let inter = d.intermediates(&y);
        let ab_g = d.ab_rel_table(&y, &inter);
        let rep_g = d.rep_rel_table(&y)?;
        let ybar = q.image_subgroup(table, &y);
        let inter_q = q.data.intermediates(&ybar);
        let ab_q = q.data.ab_rel_table(&ybar, &inter_q);
        let rep_q = q.data.rep_rel_table(&ybar)?;
        for m in n_range(d.order()) {
            t.eq(ab_g.value(m), ab_q.value(m), Some(m), Some(&y), Some(n));
            t.eq(rep_g.value(m), rep_q.value(m), Some(m), Some(&y), Some(n));
        }
        pairs += 1;
    }
    t.note(format!("{pairs} (N, Y) pairs"));
    Ok(())
}
