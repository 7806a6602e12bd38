//! Corpus-driven verification: run the registered checks over a list of
//! groups and collect the verdicts and growth tables into a report.

pub mod checks;
pub mod corpus;
pub mod report;

use rayon::prelude::*;

use crate::analysis::GroupData;
use crate::error::{Error, Result};
use crate::growth::GrowthTable;
use crate::subgroups::Subgroup;

pub use checks::{applies, is_relative, run_check, Subject, CHECK_IDS};
pub use corpus::{default_corpus, parse_corpus, Baseline, CorpusEntry};
pub use report::{emit_report, CheckResult, Format, GrowthReport, Status, Witness};

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Check ids to run; `None` runs all of them.
    pub checks: Option<Vec<String>>,
    /// Worker threads; `0` lets rayon decide.
    pub workers: usize,
}

impl RunOptions {
    fn selected(&self) -> Result<Vec<&'static str>> {
        match &self.checks {
            None => Ok(CHECK_IDS.to_vec()),
            Some(ids) => {
                for id in ids {
                    if !checks::is_registered(id) {
                        return Err(Error::UnknownCheck(id.clone()));
                    }
                }
                Ok(CHECK_IDS.iter().copied().filter(|c| ids.iter().any(|i| i == c)).collect())
            }
        }
    }
}

struct EntryOutput {
    results: Vec<CheckResult>,
    tables: Vec<GrowthTable>,
}

/// Resolves the baselines of an entry to subgroups of its group.
fn resolve_baselines(entry: &CorpusEntry, data: &GroupData) -> Result<Vec<(Baseline, Subgroup)>> {
    entry
        .baselines_for(data.group())
        .into_iter()
        .map(|b| {
            let y = b
                .build(data.group())
                .map_err(|e| Error::Parse(format!("line {}: base={b}: {e}", entry.line)))?;
            Ok((b, data.subgroup_of(&y)?))
        })
        .collect()
}

fn tables_for(data: &GroupData, baselines: &[(Baseline, Subgroup)]) -> Result<Vec<GrowthTable>> {
    let mut out = vec![data.ab_table(), data.rep_table()?, data.sub_table()];
    for (b, y) in baselines.iter().filter(|(_, y)| y.order() > 1) {
        let inter = data.intermediates(y);
        out.push(data.ab_rel_table(y, &inter).with_baseline(Some(b.to_string())));
        out.push(data.rep_rel_table(y)?.with_baseline(Some(b.to_string())));
    }
    Ok(out)
}

/// Rows for an entry whose group could not be built or enumerated.
fn error_rows(entry: &CorpusEntry, ids: &[&str], err: &Error) -> Vec<CheckResult> {
    ids.iter()
        .filter(|id| applies(id, &entry.spec))
        .map(|id| {
            let witness = Witness {
                check_id: id.to_string(),
                group: entry.spec.clone(),
                declared_generators: entry.declared_generators,
                baseline: None,
                n: None,
                subgroup: None,
                normal: None,
                lhs: "error".into(),
                rhs: err.to_string(),
            };
            CheckResult {
                check_id: id.to_string(),
                group: entry.spec.clone(),
                baseline: None,
                status: Status::Fail,
                lhs: Some(witness.lhs.clone()),
                rhs: Some(witness.rhs.clone()),
                n: None,
                witness: Some(witness),
                detail: err.to_string(),
                timing_us: 0,
            }
        })
        .collect()
}

fn run_entry(entry: &CorpusEntry, ids: &[&str]) -> Result<EntryOutput> {
    let data = match GroupData::from_spec(&entry.spec) {
        Ok(d) => d,
        Err(e @ (Error::CapExceeded { .. } | Error::NoPrime(_))) => {
            return Ok(EntryOutput {
                results: error_rows(entry, ids, &e),
                tables: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    let baselines = resolve_baselines(entry, &data)?;
    let subject = Subject { entry, data: &data };
    let mut results = Vec::new();
    for &id in ids.iter().filter(|id| applies(id, &entry.spec)) {
        if is_relative(id) {
            for (b, y) in &baselines {
                results.push(run_check(id, &subject, Some((b, y)))?);
            }
        } else {
            results.push(run_check(id, &subject, None)?);
        }
    }
    let tables = tables_for(&data, &baselines)?;
    Ok(EntryOutput { results, tables })
}

/// Runs the selected checks on every entry. Entries are processed in
/// parallel but the report is assembled in corpus order.
pub fn run_corpus(entries: &[CorpusEntry], options: &RunOptions) -> Result<GrowthReport> {
    let ids = options.selected()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers)
        .build()
        .map_err(|e| Error::Invalid(e.to_string()))?;
    let outputs: Vec<Result<EntryOutput>> =
        pool.install(|| entries.par_iter().map(|e| run_entry(e, &ids)).collect());
    let mut report = GrowthReport::default();
    for out in outputs {
        let out = out?;
        report.entries.extend(out.results);
        report.tables.extend(out.tables);
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct Replay {
    pub result: CheckResult,
    /// The rerun failed again with an identical witness.
    pub reproduced: bool,
}

/// Reruns the check named in a failure witness.
pub fn replay(witness: &Witness) -> Result<Replay> {
    let entry = CorpusEntry {
        spec: witness.group.clone(),
        declared_generators: witness.declared_generators,
        baselines: witness.baseline.clone().map(|b| vec![b]),
        line: 0,
    };
    let data = GroupData::from_spec(&entry.spec)?;
    let subject = Subject { entry: &entry, data: &data };
    let result = if is_relative(&witness.check_id) {
        let baselines = resolve_baselines(&entry, &data)?;
        let (b, y) = baselines
            .first()
            .ok_or_else(|| Error::Invalid("relative witness without a baseline".into()))?;
        run_check(&witness.check_id, &subject, Some((b, y)))?
    } else {
        run_check(&witness.check_id, &subject, None)?
    };
    let reproduced = result.status == Status::Fail && result.witness.as_ref() == Some(witness);
    Ok(Replay { result, reproduced })
}
