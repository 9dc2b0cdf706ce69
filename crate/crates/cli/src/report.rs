//! Command results and their two renderings.
//!
//! The machine form is line-oriented:
//!
//! ```text
//! command: check
//! summary: meadow: yes
//! order: 10
//! table: inverses
//! columns: x inverse
//! row: 0 0
//! end: inverses
//! ```
//!
//! Table cells are single tokens without whitespace.

use std::fmt::Write as _;

use thiserror::Error;

/// Keys with a structural meaning in the machine form.
pub const RESERVED_KEYS: [&str; 6] = ["command", "summary", "table", "columns", "row", "end"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Field { key: String, value: String },
    Table(Table),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub summary: String,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ReportParseError {
    pub line: usize,
    pub message: String,
}

impl Report {
    pub fn new(command: &str, summary: impl Into<String>) -> Self {
        Report {
            command: command.to_string(),
            summary: summary.into(),
            entries: Vec::new(),
        }
    }

    pub fn field(mut self, key: &str, value: impl ToString) -> Self {
        debug_assert!(!RESERVED_KEYS.contains(&key), "reserved key {key}");
        self.entries.push(Entry::Field {
            key: key.to_string(),
            value: value.to_string(),
        });
        self
    }

    pub fn table(mut self, name: &str, columns: &[&str], rows: Vec<Vec<String>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == columns.len()));
        debug_assert!(rows
            .iter()
            .flatten()
            .all(|c| !c.is_empty() && !c.contains(char::is_whitespace)));
        self.entries.push(Entry::Table(Table {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows,
        }));
        self
    }

    /// Value of the first field named `key`.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find_map(|e| match e {
            Entry::Field { key: k, value } if k == key => Some(value.as_str()),
            _ => None,
        })
    }

    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        writeln!(out, "summary: {}", self.summary).unwrap();
        for e in &self.entries {
            match e {
                Entry::Field { key, value } => writeln!(out, "{key}: {value}").unwrap(),
                Entry::Table(t) => {
                    writeln!(out, "table: {}", t.name).unwrap();
                    writeln!(out, "columns: {}", t.columns.join(" ")).unwrap();
                    for row in &t.rows {
                        writeln!(out, "row: {}", row.join(" ")).unwrap();
                    }
                    writeln!(out, "end: {}", t.name).unwrap();
                }
            }
        }
        out
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.summary).unwrap();
        let width = self
            .entries
            .iter()
            .filter_map(|e| match e {
                Entry::Field { key, .. } => Some(key.chars().count()),
                Entry::Table(_) => None,
            })
            .max()
            .unwrap_or(0);
        for e in &self.entries {
            match e {
                Entry::Field { key, value } => {
                    writeln!(out, "  {:<width$}  {}", key.replace('_', " "), value).unwrap();
                }
                Entry::Table(t) => {
                    writeln!(out).unwrap();
                    writeln!(out, "{}", t.name.replace('_', " ")).unwrap();
                    let header: Vec<String> =
                        t.columns.iter().map(|c| c.replace('_', " ")).collect();
                    let mut widths: Vec<usize> = header.iter().map(|c| c.chars().count()).collect();
                    for row in &t.rows {
                        for (w, cell) in widths.iter_mut().zip(row) {
                            *w = (*w).max(cell.chars().count());
                        }
                    }
                    let line = |cells: &[String]| {
                        let padded: Vec<String> = cells
                            .iter()
                            .zip(&widths)
                            .map(|(c, &w)| format!("{c:<w$}"))
                            .collect();
                        format!("  {}", padded.join("  ").trim_end())
                    };
                    writeln!(out, "{}", line(&header)).unwrap();
                    for row in &t.rows {
                        writeln!(out, "{}", line(row)).unwrap();
                    }
                }
            }
        }
        out
    }

    /// Inverse of [`Report::render_machine`].
    pub fn parse_machine(text: &str) -> Result<Report, ReportParseError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let fail = |line: usize, message: String| Err(ReportParseError { line, message });
        let split = |line: usize, l: &str| -> Result<(String, String), ReportParseError> {
            match l.split_once(':') {
                Some((k, v)) if !k.is_empty() => {
                    let v = v.strip_prefix(' ').unwrap_or(v);
                    Ok((k.to_string(), v.to_string()))
                }
                _ => Err(ReportParseError {
                    line,
                    message: format!("expected `key: value`, found `{l}`"),
                }),
            }
        };
        let mut header = |want: &str| -> Result<String, ReportParseError> {
            let (n, l) = lines.next().ok_or(ReportParseError {
                line: 0,
                message: format!("missing `{want}` line"),
            })?;
            let (k, v) = split(n, l)?;
            if k != want {
                return Err(ReportParseError {
                    line: n,
                    message: format!("expected `{want}`, found `{k}`"),
                });
            }
            Ok(v)
        };
        let command = header("command")?;
        let summary = header("summary")?;
        let mut entries = Vec::new();
        while let Some((n, l)) = lines.next() {
            let (k, v) = split(n, l)?;
            match k.as_str() {
                "table" => {
                    let (cn, cl) = match lines.next() {
                        Some(x) => x,
                        None => return fail(n, "table without columns".into()),
                    };
                    let (ck, cv) = split(cn, cl)?;
                    if ck != "columns" {
                        return fail(cn, format!("expected `columns`, found `{ck}`"));
                    }
                    let columns: Vec<String> = cv.split_whitespace().map(String::from).collect();
                    let mut rows = Vec::new();
                    loop {
                        let (rn, rl) = match lines.next() {
                            Some(x) => x,
                            None => return fail(n, format!("table `{v}` is not closed")),
                        };
                        let (rk, rv) = split(rn, rl)?;
                        match rk.as_str() {
                            "row" => {
                                let cells: Vec<String> =
                                    rv.split_whitespace().map(String::from).collect();
                                if cells.len() != columns.len() {
                                    return fail(
                                        rn,
                                        format!(
                                            "row has {} cells, expected {}",
                                            cells.len(),
                                            columns.len()
                                        ),
                                    );
                                }
                                rows.push(cells);
                            }
                            "end" if rv == v => break,
                            _ => return fail(rn, format!("expected `row` or `end: {v}`")),
                        }
                    }
                    entries.push(Entry::Table(Table {
                        name: v,
                        columns,
                        rows,
                    }));
                }
                key if RESERVED_KEYS.contains(&key) => {
                    return fail(n, format!("unexpected `{key}` line"));
                }
                _ => entries.push(Entry::Field { key: k, value: v }),
            }
        }
        Ok(Report {
            command,
            summary,
            entries,
        })
    }
}
