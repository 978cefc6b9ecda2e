//! Named groups and the test corpus.
//!
//! Names follow a small grammar: atoms `sym<n>`, `alt<n>`, `cyclic<n>`,
//! `dihedral<n>` (order `2n`), `psl2_<p>`, `gl<n>_<q>`, `aff<p>_<i>` (affine
//! maps with multipliers of index `i`), `gl52hat`; an atom may carry a
//! wreath suffix `wr<k>`; atoms joined by `x` form a direct product on
//! disjoint points. Example: `alt5wr2`, `sym5xcyclic7`.
//!
//! The corpus expectations are produced by the exhaustive oracle in a
//! bootstrap run and frozen in `data/corpus.json`; they are never written
//! by hand.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::Ctx;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hall::{classify, PiSet};
use crate::zoo;

/// Corpus members: zoo name and π.
pub const CORPUS: &[(&str, &str)] = &[
    ("sym4", "2,3"),
    ("sym4", "3"),
    ("dihedral6", "2"),
    ("aff7_1", "2,7"),
    ("aff11_1", "2,5"),
    ("aff13_2", "2,13"),
    ("alt4xcyclic5", "3,5"),
    ("sym3wr2", "2"),
    ("sym4wr2", "2,3"),
    ("sym4wr2", "3"),
    ("alt5", "2,3"),
    ("alt5", "2,5"),
    ("alt5", "3,5"),
    ("sym5", "2,3"),
    ("sym5", "2,5"),
    ("sym5", "3,5"),
    ("alt6", "2,3"),
    ("alt6", "3,5"),
    ("sym6", "2,3"),
    ("sym6", "2,5"),
    ("psl2_7", "2,3"),
    ("psl2_7", "3,7"),
    ("psl2_7", "2,7"),
    ("psl2_11", "2,3"),
    ("psl2_11", "5,11"),
    ("psl2_11", "2,5"),
    ("psl2_13", "2,3"),
    ("psl2_13", "3,13"),
    ("psl2_13", "2,7"),
    ("gl3_2", "2,3"),
    ("gl3_2", "3,7"),
    ("gl3_3", "2,3"),
    ("gl3_3", "3,13"),
    ("alt7", "2,3"),
    ("alt7", "5,7"),
    ("sym7", "2,3"),
    ("alt5xalt5", "2,3"),
    ("alt5xalt5", "3,5"),
    ("alt5wr2", "2,3"),
    ("alt5wr2", "2,5"),
    ("sym5xcyclic7", "3,5"),
    ("psl2_7xsym3", "2,3"),
    ("psl2_17", "2,3"),
    ("psl2_19", "3,5"),
    ("gl3_2wr2", "2,3"),
    ("psl2_7wr2", "3,7"),
];

#[derive(Clone, Debug)]
pub struct ZooEntry {
    pub name: String,
    pub group: PermGroup,
    pub notes: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub e: bool,
    pub c: bool,
    pub d: bool,
    pub k: usize,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E={} C={} D={} k={}", self.e, self.c, self.d, self.k)
    }
}

/// One frozen manifest line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestRecord {
    pub name: String,
    pub pi: PiSet,
    pub order: u128,
    pub expected: Expected,
    pub provenance: String,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub entry: ZooEntry,
    pub pi: PiSet,
    pub expected: Expected,
    pub provenance: String,
}

const FROZEN: &str = include_str!("../data/corpus.json");

fn parse_num(s: &str, what: &str, name: &str) -> Result<u32> {
    s.parse()
        .map_err(|_| Error::Precondition(format!("bad {what} {s:?} in group name {name:?}")))
}

fn build_atom(atom: &str, full: &str) -> Result<PermGroup> {
    if let Some(i) = atom.rfind("wr") {
        if i > 0 {
            let k = parse_num(&atom[i + 2..], "wreath degree", full)? as usize;
            let base = build_atom(&atom[..i], full)?;
            if k == 0 || base.degree() * k > zoo::DEGREE_BUDGET {
                return Err(Error::budget(format!("wreath product {atom} exceeds the degree budget")));
            }
            return Ok(zoo::wreath(&base, k));
        }
    }
    let two = |rest: &str| -> Result<(u32, u32)> {
        let (a, b) = rest
            .split_once('_')
            .ok_or_else(|| Error::Precondition(format!("expected <a>_<b> in {full:?}")))?;
        Ok((parse_num(a, "parameter", full)?, parse_num(b, "parameter", full)?))
    };
    if atom == "gl52hat" {
        return Ok(crate::duality::gl52_hat().group);
    }
    if let Some(r) = atom.strip_prefix("sym") {
        return zoo::try_sym(parse_num(r, "degree", full)? as usize);
    }
    if let Some(r) = atom.strip_prefix("alt") {
        return zoo::try_alt(parse_num(r, "degree", full)? as usize);
    }
    if let Some(r) = atom.strip_prefix("cyclic") {
        let n = parse_num(r, "order", full)? as usize;
        if n == 0 || n > zoo::DEGREE_BUDGET {
            return Err(Error::budget(format!("cyclic group of order {n}")));
        }
        return Ok(zoo::cyclic(n));
    }
    if let Some(r) = atom.strip_prefix("dihedral") {
        let n = parse_num(r, "order", full)? as usize;
        if !(3..=zoo::DEGREE_BUDGET).contains(&n) {
            return Err(Error::Precondition(format!("dihedral({n}) needs 3 <= n <= {}", zoo::DEGREE_BUDGET)));
        }
        return Ok(zoo::dihedral(n));
    }
    if let Some(r) = atom.strip_prefix("psl2_") {
        let p = parse_num(r, "prime", full)?;
        if p > 251 {
            return Err(Error::Precondition("psl2 needs p <= 251".into()));
        }
        return zoo::psl2(p);
    }
    if let Some(r) = atom.strip_prefix("gl") {
        // short form gl<n><q> for single-digit parameters, e.g. gl32
        let (n, q) = match r.as_bytes() {
            [a, b] if a.is_ascii_digit() && b.is_ascii_digit() => ((a - b'0') as u32, (b - b'0') as u32),
            _ => two(r)?,
        };
        return zoo::gl(n as usize, q);
    }
    if let Some(r) = atom.strip_prefix("aff") {
        let (p, i) = two(r)?;
        if p > 251 || i == 0 || (p - 1) % i != 0 {
            return Err(Error::Precondition(format!("aff{p}_{i}: need p <= 251 and i | p-1")));
        }
        return zoo::affine(p, i);
    }
    Err(Error::Precondition(format!("unknown group name {full:?}")))
}

/// Builds a group from its zoo name.
pub fn build_named(name: &str) -> Result<PermGroup> {
    let name = name.trim();
    if name.is_empty() {
        return Err(Error::Precondition("empty group name".into()));
    }
    let mut out: Option<PermGroup> = None;
    for atom in name.split('x') {
        let g = build_atom(atom, name)?;
        out = Some(match out {
            None => g,
            Some(acc) => {
                if acc.degree() + g.degree() > zoo::DEGREE_BUDGET {
                    return Err(Error::budget("direct product exceeds the degree budget"));
                }
                zoo::direct_product(&acc, &g)
            }
        });
    }
    Ok(out.expect("split yields at least one atom"))
}

pub fn zoo_entry(name: &str) -> Result<ZooEntry> {
    Ok(ZooEntry {
        name: name.to_string(),
        group: build_named(name)?,
        notes: format!("built from the name {name:?}"),
    })
}

/// Runs the oracle on every corpus member, producing the manifest that is
/// frozen into `data/corpus.json`.
pub fn bootstrap_manifest(ctx: &Ctx) -> Result<Vec<ManifestRecord>> {
    use rayon::prelude::*;
    CORPUS
        .par_iter()
        .map(|&(name, pi)| {
            let g = build_named(name)?;
            let pi = PiSet::parse(pi)?;
            let c = classify(&g, &pi, &Ctx::new(ctx.budget.clone(), ctx.seed))?;
            let (Some(e), Some(cc), Some(d), Some(k)) = (c.e, c.c, c.d, c.k) else {
                return Err(Error::budget(format!("oracle incomplete on {name} / {pi}")));
            };
            Ok(ManifestRecord {
                name: name.to_string(),
                order: g.order_u128(),
                pi,
                expected: Expected { e, c: cc, d, k },
                provenance: format!("oracle bootstrap (seed {})", ctx.seed),
            })
        })
        .collect()
}

pub fn manifest_to_json(records: &[ManifestRecord]) -> String {
    let mut out = String::from("[\n");
    for (i, r) in records.iter().enumerate() {
        out.push_str("  ");
        out.push_str(&serde_json::to_string(r).expect("serializable"));
        out.push_str(if i + 1 < records.len() { ",\n" } else { "\n" });
    }
    out.push_str("]\n");
    out
}

pub fn parse_manifest(text: &str) -> Result<Vec<ManifestRecord>> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        generator: None,
        msg: e.to_string(),
    })
}

/// Builds the groups of a manifest, checking recorded orders.
pub fn load_corpus(records: &[ManifestRecord]) -> Result<Vec<CorpusEntry>> {
    records
        .iter()
        .map(|r| {
            let entry = zoo_entry(&r.name)?;
            if entry.group.order_u128() != r.order {
                return Err(Error::Verification(format!(
                    "{}: built order {} differs from manifest order {}",
                    r.name,
                    entry.group.order_u128(),
                    r.order
                )));
            }
            Ok(CorpusEntry {
                entry,
                pi: r.pi.clone(),
                expected: r.expected,
                provenance: r.provenance.clone(),
            })
        })
        .collect()
}

/// The frozen default manifest.
pub fn frozen_manifest() -> Result<Vec<ManifestRecord>> {
    parse_manifest(FROZEN)
}

pub fn corpus_manifest() -> Result<Vec<CorpusEntry>> {
    load_corpus(&frozen_manifest()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_build_expected_orders() {
        for (name, order) in [
            ("sym4", 24u128),
            ("alt5xalt5", 3600),
            ("sym3wr2", 72),
            ("alt5wr2", 7200),
            ("psl2_7", 168),
            ("gl3_2", 168),
            ("gl32", 168),
            ("aff7_1", 42),
            ("aff13_2", 78),
            ("dihedral6", 12),
            ("sym5xcyclic7", 840),
        ] {
            assert_eq!(build_named(name).unwrap().order_u128(), order, "{name}");
        }
        for bad in ["", "foo", "sym", "psl2_8", "gl3", "aff7_4", "symx", "cyclic0"] {
            assert!(build_named(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn builds_are_deterministic() {
        for &(name, _) in CORPUS {
            let a = build_named(name).unwrap();
            let b = build_named(name).unwrap();
            assert_eq!(a.generators(), b.generators(), "{name}");
        }
    }

    #[test]
    fn frozen_manifest_matches_member_list() {
        let m = frozen_manifest().unwrap();
        assert!(m.len() >= 30);
        let names: Vec<(String, String)> = m.iter().map(|r| (r.name.clone(), r.pi.to_string())).collect();
        let want: Vec<(String, String)> = CORPUS
            .iter()
            .map(|&(n, p)| (n.to_string(), PiSet::parse(p).unwrap().to_string()))
            .collect();
        assert_eq!(names, want);
        assert!(m.iter().all(|r| r.order <= 1_000_000));
        assert_eq!(parse_manifest(&manifest_to_json(&m)).unwrap(), m);
    }
}
