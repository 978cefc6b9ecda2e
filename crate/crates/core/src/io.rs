//! The JSON group-file format: `{"name": ..., "degree": n, "generators": [[...], ...]}`
//! with 0-based image lists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

impl GroupFile {
    pub fn from_group(name: &str, g: &PermGroup) -> GroupFile {
        GroupFile {
            name: name.to_string(),
            degree: g.degree(),
            generators: g.generators().iter().map(|x| x.images().to_vec()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"name\": {},\n", serde_json::to_string(&self.name).expect("string")));
        out.push_str(&format!("  \"degree\": {},\n", self.degree));
        out.push_str("  \"generators\": [");
        for (i, g) in self.generators.iter().enumerate() {
            out.push_str(if i == 0 { "\n    " } else { ",\n    " });
            out.push_str(&serde_json::to_string(g).expect("integers"));
        }
        out.push_str(if self.generators.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
        out
    }
}

/// Parses and validates a group file. Errors carry the 1-based line and,
/// for invalid generators, the 0-based generator index.
pub fn parse_group_file(text: &str) -> Result<(GroupFile, PermGroup)> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        generator: None,
        msg: e.to_string(),
    })?;
    let degree_line = text
        .lines()
        .position(|l| l.contains("\"degree\""))
        .map_or(1, |i| i + 1);
    if file.degree == 0 {
        return Err(Error::Parse {
            line: degree_line,
            generator: None,
            msg: "degree must be positive".into(),
        });
    }
    if file.degree > crate::zoo::DEGREE_BUDGET {
        return Err(Error::Parse {
            line: degree_line,
            generator: None,
            msg: format!("degree {} exceeds the supported maximum {}", file.degree, crate::zoo::DEGREE_BUDGET),
        });
    }
    let starts = generator_lines(text);
    let mut gens = Vec::with_capacity(file.generators.len());
    for (k, img) in file.generators.iter().enumerate() {
        let line = starts.get(k).copied().unwrap_or(1);
        if img.len() != file.degree {
            return Err(Error::Parse {
                line,
                generator: Some(k),
                msg: format!("expected {} images, found {}", file.degree, img.len()),
            });
        }
        let p = Perm::from_images(img.clone()).map_err(|e| Error::Parse {
            line,
            generator: Some(k),
            msg: e.to_string(),
        })?;
        gens.push(p);
    }
    let g = PermGroup::new(file.degree, gens)?;
    Ok((file, g))
}

/// Line numbers (1-based) where each element of the top-level
/// `"generators"` array starts.
fn generator_lines(text: &str) -> Vec<usize> {
    let Some(key) = text.find("\"generators\"") else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut line = 1 + text[..key].matches('\n').count();
    let mut depth = 0usize;
    let mut in_string = false;
    let mut escaped = false;
    let mut started = false;
    for c in text[key + "\"generators\"".len()..].chars() {
        if c == '\n' {
            line += 1;
        }
        if in_string {
            match (escaped, c) {
                (true, _) => escaped = false,
                (false, '\\') => escaped = true,
                (false, '"') => in_string = false,
                _ => {}
            }
            continue;
        }
        match c {
            '"' => in_string = true,
            '[' => {
                depth += 1;
                started = true;
                if depth == 2 {
                    out.push(line);
                }
            }
            ']' => {
                depth = depth.saturating_sub(1);
                if started && depth == 0 {
                    break;
                }
            }
            _ => {}
        }
    }
    out
}

/// A group from raw image lists.
pub fn group_from_images(degree: usize, gens: &[Vec<u32>]) -> Result<PermGroup> {
    let perms = gens
        .iter()
        .map(|g| Perm::from_images(g.clone()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(degree, perms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn round_trip() {
        let g = zoo::sym(4);
        let f = GroupFile::from_group("sym4", &g);
        let (back, h) = parse_group_file(&f.to_json()).unwrap();
        assert_eq!(back, f);
        assert_eq!(h.order_u128(), 24);
    }

    #[test]
    fn errors_name_the_generator_and_line() {
        let text = "{\n  \"name\": \"bad\",\n  \"degree\": 3,\n  \"generators\": [\n    [1, 2, 0],\n    [0, 0, 1]\n  ]\n}\n";
        match parse_group_file(text) {
            Err(Error::Parse { line, generator, .. }) => {
                assert_eq!(line, 6);
                assert_eq!(generator, Some(1));
            }
            other => panic!("unexpected {other:?}"),
        }
        let short = "{\"name\": \"s\", \"degree\": 3, \"generators\": [[1, 0]]}";
        assert!(matches!(
            parse_group_file(short),
            Err(Error::Parse { generator: Some(0), .. })
        ));
    }

    #[test]
    fn syntax_errors_have_lines() {
        let text = "{\n  \"name\": \"x\",\n  \"degree\": 3,\n  \"generators\": [[1, 2, 0],]\n}";
        match parse_group_file(text) {
            Err(Error::Parse { line, generator: None, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_group_file("{\"name\": \"x\", \"degree\": 0, \"generators\": []}").is_err());
        assert!(parse_group_file("{\"name\": \"x\", \"degree\": 2, \"generators\": [], \"extra\": 1}").is_err());
    }
}
