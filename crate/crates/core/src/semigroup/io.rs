//! Cayley-table file formats.
//!
//! JSON: `{"order": n, "names": [...]?, "table": [[...], ...], "zero": k?}`
//! with 0-based indices. Text: `n` on the first line, then `n` rows of `n`
//! whitespace-separated indices.

use serde::{Deserialize, Serialize};

use super::FiniteSemigroup;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyJson {
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<usize>,
}

impl CayleyJson {
    pub fn into_semigroup(self) -> Result<FiniteSemigroup> {
        if self.table.len() != self.order {
            return Err(Error::Parse(format!(
                "\"order\" is {} but the table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        FiniteSemigroup::with_declared_zero(self.table, self.names, self.zero)
    }
}

impl From<&FiniteSemigroup> for CayleyJson {
    fn from(s: &FiniteSemigroup) -> Self {
        CayleyJson { order: s.order(), names: s.names().map(<[String]>::to_vec), table: s.rows(), zero: s.zero() }
    }
}

impl FiniteSemigroup {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: CayleyJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.into_semigroup()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CayleyJson::from(self)).expect("Cayley JSON serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&CayleyJson::from(self)).expect("Cayley JSON serializes")
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("missing order line".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad order: {e}")))?;
        let rows = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("bad entry `{t}`: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != n {
            return Err(Error::Parse(format!("expected {n} rows, found {}", rows.len())));
        }
        FiniteSemigroup::new(rows, None)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses either format, picking JSON when the text starts with `{`.
    pub fn parse_any(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_text(text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_with_names_and_zero() {
        let text = r#"{"order":2,"names":["f","θ"],"table":[[1,1],[1,1]],"zero":1}"#;
        let s = FiniteSemigroup::from_json(text).unwrap();
        assert_eq!(s.zero(), Some(1));
        assert_eq!(s.to_json(), text);
    }

    #[test]
    fn json_zero_is_checked() {
        let text = r#"{"order":2,"table":[[1,1],[1,1]],"zero":0}"#;
        assert_eq!(FiniteSemigroup::from_json(text), Err(Error::ZeroMismatch(0)));
        let short = r#"{"order":3,"table":[[0]]}"#;
        assert!(matches!(FiniteSemigroup::from_json(short), Err(Error::Parse(_))));
    }

    #[test]
    fn text_format() {
        let s = FiniteSemigroup::from_text("3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        assert!(s.is_group());
        assert_eq!(FiniteSemigroup::from_text(&s.to_text()).unwrap(), s);
        assert!(FiniteSemigroup::from_text("2\n0 1\n").is_err());
        assert!(matches!(FiniteSemigroup::parse_any("2\n0 x\n0 0"), Err(Error::Parse(_))));
    }
}
