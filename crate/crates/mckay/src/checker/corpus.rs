//! Line-oriented corpus of group specifications: one JSON object per line,
//! blank lines and `#` comments ignored.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::perm::{parse_cycles, Family, GroupSpec, MAX_DEGREE};
use crate::{Error, Result};

/// One corpus record. Exactly one of `family` and `generators` must be set.
/// Generator strings are cycle expressions on 1-based points; the entry's
/// degree is the largest point mentioned across all of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    /// Declared group order, verified against the computed order whenever
    /// the group is small enough to enumerate.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    /// Conjecture scope marker: a `no_bijection` verdict on a solvable
    /// group is a counterexample candidate.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solvable: Option<bool>,
}

impl CorpusEntry {
    fn err(&self, msg: &str) -> Error {
        Error::Corpus {
            id: self.id.clone(),
            msg: msg.to_string(),
        }
    }

    pub fn to_spec(&self) -> Result<GroupSpec> {
        match (&self.family, &self.generators) {
            (Some(_), Some(_)) => Err(self.err("both family and generators given")),
            (None, None) => Err(self.err("neither family nor generators given")),
            (Some(name), None) => Ok(GroupSpec::family(&self.id, name.parse::<Family>()?)),
            (None, Some(strings)) => {
                if strings.is_empty() {
                    return Err(self.err("empty generator list"));
                }
                let mut degree = 1usize;
                for s in strings {
                    degree = degree.max(max_point(s)? as usize);
                }
                let perms = strings
                    .iter()
                    .map(|s| parse_cycles(s, degree))
                    .collect::<Result<Vec<_>>>()?;
                GroupSpec::from_generators(&self.id, perms)
            }
        }
    }

    /// Checks a declared order against the computed one, if one is declared.
    pub fn verify_order(&self, computed: &BigUint) -> Result<()> {
        let Some(declared) = &self.order else {
            return Ok(());
        };
        let want: BigUint = declared
            .parse()
            .map_err(|_| self.err("declared order is not a decimal integer"))?;
        if want != *computed {
            return Err(Error::OrderMismatch {
                declared: declared.clone(),
                computed: computed.to_string(),
            });
        }
        Ok(())
    }
}

/// Largest 1-based point mentioned in a cycle expression, 0 for "()".
fn max_point(text: &str) -> Result<u32> {
    let mut max = 0u32;
    let mut run = String::new();
    for c in text.chars().chain(std::iter::once(',')) {
        if c.is_ascii_digit() {
            run.push(c);
            continue;
        }
        if !run.is_empty() {
            let point: u32 = run
                .parse()
                .map_err(|_| Error::CycleParse(format!("bad point {run:?}")))?;
            if point as usize > MAX_DEGREE {
                return Err(Error::CycleParse(format!(
                    "point {point} above the {MAX_DEGREE}-point limit"
                )));
            }
            max = max.max(point);
            run.clear();
        }
    }
    Ok(max)
}

/// Splits a corpus text into entries, keeping 1-based line numbers.
/// Unparsable lines become per-line errors, never a failure of the whole.
pub fn parse_corpus(text: &str) -> Vec<(usize, Result<CorpusEntry>)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let number = i + 1;
        let parsed = serde_json::from_str::<CorpusEntry>(line).map_err(|e| Error::Corpus {
            id: format!("line {number}"),
            msg: e.to_string(),
        });
        out.push((number, parsed));
    }
    out
}
