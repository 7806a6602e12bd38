// A failing check, its witness, and replaying the witness.

use growthlab::verify::report::{from_json, to_json};
use growthlab::verify::{parse_corpus, replay, run_corpus, RunOptions};

fn main() -> growthlab::Result<()> {
    // Sym(5) is 2-generated but not cyclic, so d=1 is wrong
    let corpus = parse_corpus("sym 5 | d=1\n")?;
    let options = RunOptions {
        checks: Some(vec!["sub-count".into()]),
        workers: 1,
    };
    let report = run_corpus(&corpus, &options)?;
    let json = to_json(&report)?;
    let back = from_json(&json)?;
    assert_eq!(back, report);

    for failure in back.failures() {
        let witness = failure.witness.as_ref().expect("failures carry a witness");
        println!("witness: {}", serde_json::to_string(witness).unwrap_or_default());
        let again = replay(witness)?;
        println!("replayed: {} (reproduced: {})", again.result.status.as_str(), again.reproduced);
    }
    Ok(())
}
