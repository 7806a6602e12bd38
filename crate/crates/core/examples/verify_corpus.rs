// Runs a few checks over part of the built-in corpus and prints the CSV report.

use growthlab::verify::report::{emit_report, Format};
use growthlab::verify::{default_corpus, run_corpus, RunOptions, Status};

fn main() -> growthlab::Result<()> {
    let corpus: Vec<_> = default_corpus().into_iter().take(8).collect();
    let options = RunOptions {
        checks: Some(vec!["eqLM".into(), "ab-hered-1".into(), "rel-base".into(), "sym-example".into()]),
        workers: 2,
    };
    let report = run_corpus(&corpus, &options)?;
    print!("{}", String::from_utf8_lossy(&emit_report(&report, Format::Csv)?));
    let failed = report.entries.iter().filter(|r| r.status == Status::Fail).count();
    println!("{} rows, {failed} failures, {} growth tables", report.entries.len(), report.tables.len());
    Ok(())
}
