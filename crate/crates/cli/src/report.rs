use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// Envelope of every JSON document the tool prints.
#[derive(Debug, Serialize)]
pub struct Report<T: Serialize> {
    pub schema_version: &'static str,
    pub command: String,
    pub result: T,
    pub notes: Vec<String>,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &str, result: T, notes: Vec<String>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            result,
            notes,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// One row of an emitted table. Absent fields are omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Row {
    pub g: i64,
    pub d: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mults: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub four_secants: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_anti: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub column: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marker: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flop: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conic_secancy: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cubic_secancy: Option<i64>,
}

impl Row {
    pub fn new(g: i64, d: i64) -> Self {
        Self {
            g,
            d,
            ..Self::default()
        }
    }

    /// `(header, cell)` pairs in key order, present fields only.
    fn cells(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![("g", self.g.to_string()), ("d", self.d.to_string())];
        let mut push = |name, v: Option<String>| {
            if let Some(v) = v {
                out.push((name, v));
            }
        };
        push("k", self.k.map(|v| v.to_string()));
        push(
            "mults",
            self.mults.as_ref().map(|m| {
                let parts: Vec<_> = m.iter().map(i64::to_string).collect();
                format!("({})", parts.join(","))
            }),
        );
        push("4-secants", self.four_secants.map(|v| v.to_string()));
        push("dim |-K|", self.dim_anti.map(|v| v.to_string()));
        push("category", self.category.clone());
        push("link", self.link.clone());
        push("A-set", self.aset.clone());
        push("surface", self.column.clone());
        push("marker", self.marker.clone());
        push(
            "flop",
            self.flop.map(|v| if v { "yes" } else { "no" }.into()),
        );
        push("k-m11-m12", self.conic_secancy.map(|v| v.to_string()));
        push("2k-(m8+..+m12)", self.cubic_secancy.map(|v| v.to_string()));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableResult {
    pub table: String,
    pub rows: Vec<Row>,
}

/// Renders rows as a GitHub-flavoured Markdown table; the columns are the
/// union of the fields present in any row.
pub fn markdown(title: &str, rows: &[Row]) -> String {
    let mut headers: Vec<&'static str> = Vec::new();
    for row in rows {
        for (h, _) in row.cells() {
            if !headers.contains(&h) {
                headers.push(h);
            }
        }
    }
    let mut s = format!("### {title}\n\n| {} |\n", headers.join(" | "));
    s.push_str(&format!("|{}\n", "---|".repeat(headers.len())));
    for row in rows {
        let cells = row.cells();
        let line: Vec<&str> = headers
            .iter()
            .map(|h| {
                cells
                    .iter()
                    .find(|(name, _)| name == h)
                    .map_or("", |(_, v)| v.as_str())
            })
            .collect();
        s.push_str(&format!("| {} |\n", line.join(" | ")));
    }
    s
}
