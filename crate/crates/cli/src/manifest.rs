//! Batch manifests: JSON Lines, one figure per line.
//!
//! ```text
//! # comments and blank lines are skipped
//! {"figure": "plots/a.eps", "width": "200bp"}
//! {"figure": "[0 0 100 50]b.eps", "height": "72pt", "clip": true}
//! ```

use serde::Deserialize;

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub figure: String,
    #[serde(default)]
    pub width: Option<String>,
    #[serde(default)]
    pub height: Option<String>,
    #[serde(default)]
    pub clip: bool,
}

/// One manifest line: an entry, or the reason it could not be read.
#[derive(Debug)]
pub struct Record {
    pub line: usize,
    pub entry: Result<Entry, String>,
}

pub fn parse(text: &str) -> Vec<Record> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| Record {
            line: i + 1,
            entry: serde_json::from_str(l).map_err(|e| format!("bad manifest entry: {e}")),
        })
        .collect()
}
