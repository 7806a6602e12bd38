//! Command-line front end. `run` returns the process exit status: 0 when
//! everything passed, 1 on check failures or runtime errors, 2 on bad input.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::analysis::GroupData;
use crate::characters::CharacterTable;
use crate::constructors::GroupSpec;
use crate::error::{Error, Result};
use crate::growth::{abelianization_order, relative_ab_order, GrowthTable};
use crate::subgroups::Subgroup;
use crate::verify::checks::rational_text;
use crate::verify::report::{self, Format, Status};
use crate::verify::{self, Baseline, RunOptions, Witness};

#[derive(Parser, Debug)]
#[command(name = "growthlab", version, about = "Abelianization and representation growth of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the verification checks over a corpus.
    Verify(VerifyArgs),
    /// ab_n(G) or ab_n(G,Y) at jump points.
    Ab(GroupArgs),
    /// Rep_n(G) or Rep_n(G,Y) at jump points.
    Rep(GroupArgs),
    /// Subgroup classes with their abelianization orders.
    #[command(visible_alias = "subs")]
    Sub(GroupArgs),
    /// Witten zeta value as an exact rational.
    Zeta(ZetaArgs),
    /// Character degrees and class sizes as JSON.
    Table(GroupArgs),
    /// Rerun the check behind a failure witness, or every failure in a JSON report.
    Replay { file: PathBuf },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Corpus file; the built-in corpus when omitted.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// Comma-separated check ids.
    #[arg(long, value_delimiter = ',')]
    pub check: Option<Vec<String>>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    pub format: String,
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    #[arg(long)]
    pub group: String,
    /// Baseline subgroup Y: `trivial`, `stab <pt>` or `cyclic-sub <element>`.
    #[arg(long)]
    pub rel: Option<String>,
    /// Largest n (or index) shown; defaults to |G|.
    #[arg(long)]
    pub n: Option<u64>,
}

#[derive(Args, Debug)]
pub struct ZetaArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, default_value_t = 3)]
    pub t: u32,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Spec(_)
        | Error::UnknownCheck(_)
        | Error::NotInGroup(_)
        | Error::NotSubgroup(_)
        | Error::DegreeMismatch { .. }
        | Error::NotBijective(_)
        | Error::PointOutOfRange { .. } => 2,
        _ => 1,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut out = std::io::stdout().lock();
    match execute(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Invalid(e.to_string())
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Runs one command, writing its main output to `out`.
pub fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Verify(a) => verify_cmd(a, out),
        Command::Ab(a) => growth_cmd(a, true, out),
        Command::Rep(a) => growth_cmd(a, false, out),
        Command::Sub(a) => sub_cmd(a, out),
        Command::Zeta(a) => zeta_cmd(a, out),
        Command::Table(a) => table_cmd(a, out),
        Command::Replay { file } => replay_cmd(&file, out),
    }
}

fn verify_cmd(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let format: Format = a.format.parse()?;
    let entries = match &a.corpus {
        Some(path) => verify::parse_corpus(&read(path)?)?,
        None => verify::default_corpus(),
    };
    let options = RunOptions {
        checks: a.check,
        workers: a.workers,
    };
    let report = verify::run_corpus(&entries, &options)?;
    let bytes = report::emit_report(&report, format)?;
    match &a.out {
        Some(path) => std::fs::write(path, &bytes).map_err(io_err)?,
        None => out.write_all(&bytes).map_err(io_err)?,
    }
    let count = |s: Status| report.entries.iter().filter(|r| r.status == s).count();
    eprintln!(
        "{} results: {} pass, {} fail, {} reported",
        report.entries.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Reported)
    );
    Ok(if report.has_failures() { 1 } else { 0 })
}

fn group_and_baseline(a: &GroupArgs) -> Result<(GroupData, Option<Subgroup>)> {
    let spec: GroupSpec = a.group.parse()?;
    let data = GroupData::from_spec(&spec)?;
    let y = match &a.rel {
        None => None,
        Some(text) => {
            let b: Baseline = text.parse()?;
            let y = b.build(data.group())?;
            Some(data.subgroup_of(&y)?)
        }
    };
    Ok((data, y))
}

fn write_jumps(out: &mut dyn Write, header: &str, table: &GrowthTable, n_max: u64) -> Result<()> {
    writeln!(out, "{header}").map_err(io_err)?;
    for &(n, v) in table.jumps.iter().filter(|(n, _)| *n <= n_max) {
        if n < n_max {
            writeln!(out, "{n},{v}").map_err(io_err)?;
        }
    }
    writeln!(out, "{n_max},{}", table.value(n_max)).map_err(io_err)
}

fn growth_cmd(a: GroupArgs, ab: bool, out: &mut dyn Write) -> Result<i32> {
    let (data, y) = group_and_baseline(&a)?;
    let n_max = a.n.unwrap_or(data.order()).max(1);
    let table = match (&y, ab) {
        (None, true) => data.ab_table(),
        (None, false) => data.rep_table()?,
        (Some(y), true) => data.ab_rel_table(y, &data.intermediates(y)),
        (Some(y), false) => data.rep_rel_table(y)?,
    };
    let header = if ab { "n,value" } else { "n,Rep_n" };
    write_jumps(out, header, &table, n_max)?;
    Ok(0)
}

fn sub_cmd(a: GroupArgs, out: &mut dyn Write) -> Result<i32> {
    let (data, y) = group_and_baseline(&a)?;
    let max_index = a.n.unwrap_or(data.order());
    writeln!(out, "index,order,class_length,is_normal,abelianization_order").map_err(io_err)?;
    match y {
        None => {
            let lattice = data.lattice();
            for (c, ab) in lattice.classes.iter().zip(data.class_ab()) {
                if c.index > max_index {
                    continue;
                }
                let normal = lattice.is_normal_class(c);
                writeln!(out, "{},{},{},{normal},{ab}", c.index, c.order, c.class_length).map_err(io_err)?;
            }
        }
        Some(y) => {
            // subgroups between Y and G, each listed once; the last column is |H/H'Y|
            let yg = data.to_group(&y);
            for h in data.intermediates(&y) {
                let index = data.order() / h.order();
                if index > max_index {
                    continue;
                }
                let hg = data.to_group(&h);
                let normal = data.group().is_normal(&hg)?;
                let ab = if y.order() == 1 { abelianization_order(&hg) } else { relative_ab_order(&hg, &yg)? };
                writeln!(out, "{index},{},1,{normal},{ab}", h.order()).map_err(io_err)?;
            }
        }
    }
    Ok(0)
}

fn zeta_cmd(a: ZetaArgs, out: &mut dyn Write) -> Result<i32> {
    let spec: GroupSpec = a.group.parse()?;
    let z = crate::characters::zeta(&spec.build()?, a.t)?;
    let decimal = z.to_f64().unwrap_or(f64::NAN);
    writeln!(out, "{}", rational_text(&z)).map_err(io_err)?;
    writeln!(out, "{decimal:.12}").map_err(io_err)?;
    Ok(0)
}

#[derive(Serialize)]
struct TableDump {
    group: GroupSpec,
    order: u64,
    class_count: usize,
    class_sizes: Vec<u64>,
    class_reps: Vec<String>,
    degrees: Vec<u64>,
}

fn table_cmd(a: GroupArgs, out: &mut dyn Write) -> Result<i32> {
    let spec: GroupSpec = a.group.parse()?;
    let ct = CharacterTable::new(&spec.build()?)?;
    let classes = ct.classes();
    let dump = TableDump {
        group: spec,
        order: ct.order(),
        class_count: ct.class_count(),
        class_sizes: classes.sizes.clone(),
        class_reps: classes.reps.iter().map(|p| p.to_string()).collect(),
        degrees: ct.degrees().to_vec(),
    };
    let text = serde_json::to_string_pretty(&dump).map_err(|e| Error::Invalid(e.to_string()))?;
    writeln!(out, "{text}").map_err(io_err)?;
    Ok(0)
}

fn replay_cmd(path: &PathBuf, out: &mut dyn Write) -> Result<i32> {
    let text = read(path)?;
    let witnesses: Vec<Witness> = match report::parse_witness(&text) {
        Ok(w) => vec![w],
        Err(_) => report::from_json(&text)?
            .failures()
            .filter_map(|r| r.witness.clone())
            .collect(),
    };
    let mut code = 0;
    for w in &witnesses {
        let r = verify::replay(w)?;
        writeln!(
            out,
            "{} {}: {} (reproduced: {})",
            w.check_id,
            r.result.group_label(),
            r.result.status.as_str(),
            r.reproduced
        )
        .map_err(io_err)?;
        if r.result.status == Status::Fail {
            code = 1;
        }
    }
    Ok(code)
}
