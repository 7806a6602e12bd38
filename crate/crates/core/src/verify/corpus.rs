//! Corpus files: one group spec per line, `#` comments, optional
//! `| d=<int>` and `| base=<Y spec>` suffixes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constructors::GroupSpec;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub const DEFAULT_CORPUS: &str = include_str!("../../corpus/default.txt");

/// A subgroup `Y` named relative to the group it lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Baseline {
    Trivial,
    Stab(u32),
    /// Cyclic subgroup generated by an element in cycle notation.
    CyclicSub(String),
}

impl Baseline {
    pub fn build(&self, g: &PermGroup) -> Result<PermGroup> {
        match self {
            Baseline::Trivial => Ok(PermGroup::trivial(g.degree())),
            Baseline::Stab(pt) => g.point_stabilizer(*pt),
            Baseline::CyclicSub(text) => {
                let x = Permutation::parse(g.degree(), text)?;
                if !g.contains(&x)? {
                    return Err(Error::NotInGroup(format!("{text} is not in the group")));
                }
                g.subgroup_generated(&[x])
            }
        }
    }
}

impl fmt::Display for Baseline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Baseline::Trivial => write!(f, "trivial"),
            Baseline::Stab(pt) => write!(f, "stab {pt}"),
            Baseline::CyclicSub(text) => write!(f, "cyclic-sub {text}"),
        }
    }
}

impl FromStr for Baseline {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "trivial" {
            return Ok(Baseline::Trivial);
        }
        if let Some(rest) = s.strip_prefix("stab") {
            return rest
                .trim()
                .parse()
                .map(Baseline::Stab)
                .map_err(|_| Error::Parse(format!("bad point in {s:?}")));
        }
        if let Some(rest) = s.strip_prefix("cyclic-sub") {
            let text = rest.trim();
            // normalize through a parse at the implied degree
            let x: Permutation = text.parse()?;
            return Ok(Baseline::CyclicSub(x.to_string()));
        }
        Err(Error::Parse(format!("unknown subgroup spec {s:?}")))
    }
}

impl TryFrom<String> for Baseline {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Baseline> for String {
    fn from(b: Baseline) -> String {
        b.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub spec: GroupSpec,
    /// Declared generator count `d`; defaults to the constructor's count.
    pub declared_generators: Option<u32>,
    /// Explicit baselines; `None` means trivial plus `stab 0` when transitive.
    pub baselines: Option<Vec<Baseline>>,
    pub line: usize,
}

impl CorpusEntry {
    pub fn new(spec: GroupSpec) -> Self {
        Self {
            spec,
            declared_generators: None,
            baselines: None,
            line: 0,
        }
    }

    pub fn d(&self, g: &PermGroup) -> u32 {
        self.declared_generators.unwrap_or(g.generators().len() as u32)
    }

    pub fn baselines_for(&self, g: &PermGroup) -> Vec<Baseline> {
        if let Some(b) = &self.baselines {
            return b.clone();
        }
        let mut out = vec![Baseline::Trivial];
        if g.degree() > 0 && g.is_transitive() && g.order() as usize > g.degree() {
            out.push(Baseline::Stab(0));
        }
        out
    }
}

impl fmt::Display for CorpusEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec)?;
        if let Some(d) = self.declared_generators {
            write!(f, " | d={d}")?;
        }
        for b in self.baselines.iter().flatten() {
            write!(f, " | base={b}")?;
        }
        Ok(())
    }
}

pub fn parse_entry(text: &str, line: usize) -> Result<CorpusEntry> {
    let err = |msg: String| Error::Parse(format!("line {line}: {msg}"));
    let mut fields = text.split('|');
    let spec: GroupSpec = fields
        .next()
        .unwrap_or_default()
        .parse()
        .map_err(|e| err(format!("{e}")))?;
    let mut entry = CorpusEntry {
        spec,
        declared_generators: None,
        baselines: None,
        line,
    };
    for field in fields {
        let field = field.trim();
        if let Some(d) = field.strip_prefix("d=") {
            entry.declared_generators = Some(d.trim().parse().map_err(|_| err(format!("bad d in {field:?}")))?);
        } else if let Some(b) = field.strip_prefix("base=") {
            let b: Baseline = b.parse().map_err(|e| err(format!("{e}")))?;
            entry.baselines.get_or_insert_with(Vec::new).push(b);
        } else {
            return Err(err(format!("unknown field {field:?}")));
        }
    }
    Ok(entry)
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("").trim();
            (!content.is_empty()).then(|| parse_entry(content, i + 1))
        })
        .collect()
}

pub fn default_corpus() -> Vec<CorpusEntry> {
    parse_corpus(DEFAULT_CORPUS).expect("built-in corpus parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_suffixes() {
        let e = parse_entry("sym 5 | d=1 | base=stab 0", 3).unwrap();
        assert_eq!(e.spec, GroupSpec::Sym(5));
        assert_eq!(e.declared_generators, Some(1));
        assert_eq!(e.baselines, Some(vec![Baseline::Stab(0)]));
        assert_eq!(e.to_string(), "sym 5 | d=1 | base=stab 0");
        assert!(parse_entry("sym 5 | q=1", 1).is_err());
        assert!(parse_entry("sim 5", 1).is_err());
    }

    #[test]
    fn comments_and_blanks() {
        let c = parse_corpus("# header\n\nalt 5 # simple\ncyclic 6\n").unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].line, 3);
        assert!(parse_corpus("").unwrap().is_empty());
    }

    #[test]
    fn baselines() {
        let s4 = crate::constructors::symmetric(4);
        let e = CorpusEntry::new(GroupSpec::Sym(4));
        assert_eq!(e.baselines_for(&s4), vec![Baseline::Trivial, Baseline::Stab(0)]);
        let c6 = crate::constructors::cyclic(6);
        assert_eq!(e.baselines_for(&c6), vec![Baseline::Trivial]);
        let y: Baseline = "cyclic-sub (0 1)(2 3)".parse().unwrap();
        assert_eq!(y.build(&s4).unwrap().order(), 2);
        assert_eq!(Baseline::Stab(0).build(&s4).unwrap().order(), 6);
        assert!("cyclic-sub (0 1 2 3 4)".parse::<Baseline>().unwrap().build(&s4).is_err());
    }

    #[test]
    fn default_corpus_parses() {
        let c = default_corpus();
        assert_eq!(c.len(), 28);
        for e in &c {
            assert_eq!(e.spec.build().unwrap().order(), e.spec.expected_order());
        }
    }
}
