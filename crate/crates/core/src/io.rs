//! The line-based `.osg` / `.sgp` text formats.
//!
//! ```text
//! # min-semilattice
//! kind: osg
//! elements: 2
//! names: zero one
//! table:
//! 0 0
//! 0 1
//! order:
//! 0 1
//! ```
//!
//! Reflexive pairs are implied. `.sgp` documents say `kind: sgp` and have no
//! order block. Everything after `#` on a line is a comment.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::structure::{close_order, FiniteSemigroup, OrderedSemigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Osg,
    Sgp,
}

impl DocumentKind {
    fn as_str(self) -> &'static str {
        match self {
            DocumentKind::Osg => "osg",
            DocumentKind::Sgp => "sgp",
        }
    }
}

/// Raw contents of a document before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureDocument {
    pub kind: DocumentKind,
    pub size: usize,
    pub names: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
    /// Non-reflexive pairs as written.
    pub order: Vec<(usize, usize)>,
    /// Whole-line comments, without the leading `#`, emitted before the header.
    pub comments: Vec<String>,
}

/// A validated document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Ordered(OrderedSemigroup),
    Unordered(FiniteSemigroup),
}

impl Structure {
    /// Unordered structures get the discrete order.
    pub fn into_ordered(self) -> OrderedSemigroup {
        match self {
            Structure::Ordered(s) => s,
            Structure::Unordered(f) => {
                let names = f.names().map(<[String]>::to_vec);
                let s = OrderedSemigroup::discrete(f);
                match names {
                    Some(n) => s.with_names(n),
                    None => s,
                }
            }
        }
    }

    /// Forgets the order.
    pub fn semigroup(&self) -> &FiniteSemigroup {
        match self {
            Structure::Ordered(s) => s.semigroup(),
            Structure::Unordered(f) => f,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Complete the order pairs transitively before validation.
    pub close_order: bool,
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| syntax(line, format!("expected a number, found `{t}`")))
        })
        .collect()
}

fn header<'a>(line: usize, text: &'a str, key: &str) -> Result<&'a str> {
    text.strip_prefix(key)
        .and_then(|r| r.strip_prefix(':'))
        .map(str::trim)
        .ok_or_else(|| syntax(line, format!("expected `{key}:`")))
}

impl StructureDocument {
    /// Reads the document without validating the algebra.
    pub fn parse(text: &str) -> Result<Self> {
        let mut comments = Vec::new();
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let trimmed = raw.trim();
            if let Some(c) = trimmed.strip_prefix('#') {
                if lines.is_empty() {
                    comments.push(c.strip_prefix(' ').unwrap_or(c).to_string());
                }
                continue;
            }
            let content = raw.split('#').next().unwrap_or("").trim();
            if !content.is_empty() {
                lines.push((i + 1, content));
            }
        }
        let last_line = text.lines().count().max(1);
        let mut it = lines.into_iter().peekable();
        let mut next = |what: &str| {
            it.next()
                .ok_or_else(|| syntax(last_line, format!("missing {what}")))
        };

        let (ln, text) = next("`kind:` header")?;
        let kind = match header(ln, text, "kind")? {
            "osg" => DocumentKind::Osg,
            "sgp" => DocumentKind::Sgp,
            other => return Err(syntax(ln, format!("unknown kind `{other}`"))),
        };
        let (ln, text) = next("`elements:` header")?;
        let size_text = header(ln, text, "elements")?;
        let size: usize = size_text
            .parse()
            .map_err(|_| syntax(ln, format!("expected element count, found `{size_text}`")))?;
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }

        let (mut ln, mut text) = next("`table:`")?;
        let mut names = None;
        if text.starts_with("names") {
            let list: Vec<String> = header(ln, text, "names")?
                .split_whitespace()
                .map(str::to_string)
                .collect();
            if list.len() != size {
                return Err(syntax(
                    ln,
                    format!("{} names for {size} elements", list.len()),
                ));
            }
            names = Some(list);
            (ln, text) = next("`table:`")?;
        }
        if !header(ln, text, "table")?.is_empty() {
            return Err(syntax(ln, "table rows start on the next line"));
        }
        let mut table = Vec::with_capacity(size);
        for r in 0..size {
            let (ln, text) = next(&format!("table row {r}"))?;
            let row = numbers(ln, text)?;
            if row.len() != size {
                return Err(syntax(
                    ln,
                    format!("row has {} entries, expected {size}", row.len()),
                ));
            }
            table.push(row);
        }

        let mut order = Vec::new();
        let mut pending: Vec<(usize, usize)> = Vec::new();
        let mut rest = it.collect::<Vec<_>>().into_iter();
        if let Some((ln, text)) = rest.next() {
            if kind == DocumentKind::Sgp {
                return Err(syntax(
                    ln,
                    "unexpected content after the table of an sgp document",
                ));
            }
            let inline = header(ln, text, "order")?;
            pending.extend(numbers(ln, inline)?.into_iter().map(|v| (ln, v)));
            for (ln, text) in rest {
                pending.extend(numbers(ln, text)?.into_iter().map(|v| (ln, v)));
            }
            if pending.len() % 2 == 1 {
                return Err(syntax(
                    pending[pending.len() - 1].0,
                    "order pair is missing its second element",
                ));
            }
            for pair in pending.chunks(2) {
                order.push((pair[0].1, pair[1].1));
            }
        }
        Ok(StructureDocument {
            kind,
            size,
            names,
            table,
            order,
            comments,
        })
    }

    /// Validates the table and order.
    pub fn build(&self, options: ParseOptions) -> Result<Structure> {
        let names = self.names.clone();
        match self.kind {
            DocumentKind::Sgp => {
                let f = FiniteSemigroup::new(self.size, self.table.clone())?;
                Ok(Structure::Unordered(match names {
                    Some(n) => f.with_names(n),
                    None => f,
                }))
            }
            DocumentKind::Osg => {
                let pairs = if options.close_order {
                    close_order(self.size, &self.order)?
                } else {
                    self.order.clone()
                };
                let s = OrderedSemigroup::new(self.size, self.table.clone(), &pairs)?;
                Ok(Structure::Ordered(match names {
                    Some(n) => s.with_names(n),
                    None => s,
                }))
            }
        }
    }

    pub fn from_ordered(s: &OrderedSemigroup) -> Self {
        StructureDocument {
            kind: DocumentKind::Osg,
            size: s.size(),
            names: s.names().map(<[String]>::to_vec),
            table: s.rows(),
            order: s.order_pairs(),
            comments: Vec::new(),
        }
    }

    pub fn from_semigroup(f: &FiniteSemigroup) -> Self {
        StructureDocument {
            kind: DocumentKind::Sgp,
            size: f.size(),
            names: f.names().map(<[String]>::to_vec),
            table: f.rows(),
            order: Vec::new(),
            comments: Vec::new(),
        }
    }

    pub fn with_comments(mut self, comments: Vec<String>) -> Self {
        self.comments = comments;
        self
    }

    /// Canonical text: sorted non-reflexive pairs, single spaces, trailing newline.
    /// The order block is left out when there are no pairs.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            if c.is_empty() {
                out.push_str("#\n");
            } else {
                let _ = writeln!(out, "# {c}");
            }
        }
        let _ = writeln!(out, "kind: {}", self.kind.as_str());
        let _ = writeln!(out, "elements: {}", self.size);
        if let Some(names) = &self.names {
            let _ = writeln!(out, "names: {}", names.join(" "));
        }
        out.push_str("table:\n");
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        let mut pairs: Vec<(usize, usize)> =
            self.order.iter().copied().filter(|(a, b)| a != b).collect();
        pairs.sort_unstable();
        pairs.dedup();
        if self.kind == DocumentKind::Osg && !pairs.is_empty() {
            out.push_str("order:\n");
            for (a, b) in pairs {
                let _ = writeln!(out, "{a} {b}");
            }
        }
        out
    }
}

/// Parses and validates a document.
pub fn parse_document(text: &str) -> Result<Structure> {
    parse_document_with(text, ParseOptions::default())
}

pub fn parse_document_with(text: &str, options: ParseOptions) -> Result<Structure> {
    StructureDocument::parse(text)?.build(options)
}

/// Canonical `.osg` text of an ordered semigroup.
pub fn serialize_document(s: &OrderedSemigroup) -> String {
    StructureDocument::from_ordered(s).render()
}

/// Canonical `.sgp` text of a semigroup.
pub fn serialize_semigroup(f: &FiniteSemigroup) -> String {
    StructureDocument::from_semigroup(f).render()
}
