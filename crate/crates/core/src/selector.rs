//! Subgroup selectors used on the command line: either a named
//! construction relative to the ambient group or a second group file.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::config::Ctx;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::search;
use crate::structure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    /// The ambient group itself.
    Whole,
    Trivial,
    Derived,
    Center,
    /// Product of all minimal normal subgroups.
    Socle,
    /// The `i`-th minimal normal subgroup (0-based, in engine order).
    Minimal(usize),
    /// Kernel of the action on the points outside the orbit of point 0; for
    /// a direct product built side by side this is the first factor.
    FirstFactor,
    /// A zoo group of the same degree, intersected with the ambient group.
    Named(String),
    /// A group file.
    File(PathBuf),
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Whole => write!(f, "whole"),
            Selector::Trivial => write!(f, "trivial"),
            Selector::Derived => write!(f, "derived"),
            Selector::Center => write!(f, "center"),
            Selector::Socle => write!(f, "socle"),
            Selector::Minimal(i) => write!(f, "minimal:{i}"),
            Selector::FirstFactor => write!(f, "first-factor"),
            Selector::Named(n) => write!(f, "{n}"),
            Selector::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

fn is_zoo_name(s: &str) -> bool {
    !s.is_empty()
        && s.bytes().all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_')
        && s.as_bytes()[0].is_ascii_lowercase()
}

impl FromStr for Selector {
    type Err = Error;

    /// Accepts the keywords, `minimal:<i>`, `file:<path>`, anything that
    /// looks like a path (contains `/` or ends in `.json`), or a zoo name.
    fn from_str(s: &str) -> Result<Selector> {
        let s = s.trim();
        Ok(match s {
            "whole" => Selector::Whole,
            "trivial" => Selector::Trivial,
            "derived" => Selector::Derived,
            "center" | "centre" => Selector::Center,
            "socle" => Selector::Socle,
            "first-factor" => Selector::FirstFactor,
            _ => {
                if let Some(i) = s.strip_prefix("minimal:") {
                    let i = i
                        .parse()
                        .map_err(|_| Error::Selector(format!("bad index in {s:?}")))?;
                    Selector::Minimal(i)
                } else if let Some(p) = s.strip_prefix("file:") {
                    if p.is_empty() {
                        return Err(Error::Selector("empty file path".into()));
                    }
                    Selector::File(PathBuf::from(p))
                } else if s.contains('/') || s.ends_with(".json") {
                    Selector::File(PathBuf::from(s))
                } else if is_zoo_name(s) {
                    Selector::Named(s.to_string())
                } else {
                    return Err(Error::Selector(format!("unrecognised subgroup selector {s:?}")));
                }
            }
        })
    }
}

impl Selector {
    /// The selected subgroup of `g`. Only the `File` form can fail to be a
    /// subgroup; that is reported as a selector error.
    pub fn resolve(&self, g: &PermGroup, ctx: &Ctx) -> Result<PermGroup> {
        let n = g.degree();
        match self {
            Selector::Whole => Ok(g.clone()),
            Selector::Trivial => Ok(PermGroup::trivial(n)),
            Selector::Derived => Ok(structure::derived_subgroup(g)),
            Selector::Center => structure::center(g, ctx),
            Selector::Socle => {
                let mut s = PermGroup::trivial(n);
                for m in structure::minimal_normal_subgroups(g, ctx)? {
                    s = s.join(&m);
                }
                Ok(s)
            }
            Selector::Minimal(i) => {
                let ms = structure::minimal_normal_subgroups(g, ctx)?;
                let count = ms.len();
                ms.into_iter().nth(*i).ok_or_else(|| {
                    Error::Selector(format!("minimal:{i} requested but there are {count} minimal normal subgroups"))
                })
            }
            Selector::FirstFactor => {
                let first = g.orbit(0)?;
                let rest: Vec<u32> = (0..n as u32).filter(|p| !first.contains(p)).collect();
                Ok(g.pointwise_stabilizer(&rest))
            }
            Selector::Named(name) => {
                let h = crate::corpus::build_named(name).map_err(|e| match e {
                    Error::Precondition(m) => Error::Selector(m),
                    other => other,
                })?;
                if h.degree() != n {
                    return Err(Error::Selector(format!(
                        "{name} has degree {}, the group has degree {n}",
                        h.degree()
                    )));
                }
                search::intersection(g, &h, ctx.budget.nodes)
            }
            Selector::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Selector(format!("{}: {e}", path.display())))?;
                let (_, h) = crate::io::parse_group_file(&text)?;
                if h.degree() != n {
                    return Err(Error::Selector(format!(
                        "{} has degree {}, the group has degree {n}",
                        path.display(),
                        h.degree()
                    )));
                }
                if !g.try_is_subgroup(&h)? {
                    return Err(Error::Selector(format!("{} is not a subgroup of the group", path.display())));
                }
                Ok(h)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn parses_every_form() {
        assert_eq!("derived".parse::<Selector>().unwrap(), Selector::Derived);
        assert_eq!("minimal:2".parse::<Selector>().unwrap(), Selector::Minimal(2));
        assert_eq!("alt5".parse::<Selector>().unwrap(), Selector::Named("alt5".into()));
        assert_eq!("a/b".parse::<Selector>().unwrap(), Selector::File("a/b".into()));
        assert_eq!("file:x".parse::<Selector>().unwrap(), Selector::File("x".into()));
        for bad in ["", "minimal:x", "Alt5", "file:", "a b"] {
            assert!(matches!(bad.parse::<Selector>(), Err(Error::Selector(_))), "{bad}");
        }
        for s in ["whole", "socle", "minimal:0", "first-factor", "sym4", "file:g.json"] {
            assert_eq!(s.parse::<Selector>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn resolves_against_the_ambient_group() {
        let ctx = Ctx::default();
        let s5 = zoo::sym(5);
        let order = |sel: &str, g: &PermGroup| sel.parse::<Selector>().unwrap().resolve(g, &ctx).unwrap().order_u128();
        assert_eq!(order("derived", &s5), 60);
        assert_eq!(order("alt5", &s5), 60);
        assert_eq!(order("socle", &s5), 60);
        assert_eq!(order("center", &s5), 1);
        assert_eq!(order("socle", &zoo::sym(4)), 4);
        let aa = zoo::direct_product(&zoo::alt(5), &zoo::alt(5));
        let f = "first-factor".parse::<Selector>().unwrap().resolve(&aa, &ctx).unwrap();
        assert_eq!(f.order_u128(), 60);
        assert!(f.is_normal_in(&aa));
        assert!("sym4".parse::<Selector>().unwrap().resolve(&s5, &ctx).is_err());
        assert!("minimal:3".parse::<Selector>().unwrap().resolve(&s5, &ctx).is_err());
    }
}
