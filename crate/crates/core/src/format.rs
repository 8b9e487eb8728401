//! The `.ls` structure format and the arrow-table format.
//!
//! ```text
//! # comment
//! structure g5
//! elements 3
//! mode table
//! map {} -> {0 1 2}
//! map {0} -> {0 1}
//! default full
//! ```
//!
//! Header lines come first and in that order. Table mode takes `map` lines
//! and at most one `default identity|full|{..}` (identity when absent); rule
//! mode takes a single `rule NAME`. Arrow files are
//!
//! ```text
//! arrow imp
//! elements 2
//! row 0 -> 1 1
//! row 1 -> 0 1
//! ```
//!
//! with one `row a -> (a→0) (a→1) ...` per element, or `rule projection`.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::error::Error;
use crate::structure::{ArrowTable, LogicalStructure, Rule, Source, TableDefault};
use crate::subset::{all_subsets, Subset, MAX_CARRIER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("{0}")]
    Structure(#[from] Error),
}

type Result<T> = std::result::Result<T, FormatError>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Table {
        entries: Vec<(Subset, Subset)>,
        default: TableDefault,
    },
    Rule(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFile {
    pub name: String,
    pub n: usize,
    pub body: Body,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Word(&'a str),
    Open,
    Close,
    Arrow,
    Comma,
}

#[derive(Debug, Clone, Copy)]
struct Spanned<'a> {
    tok: Tok<'a>,
    col: usize,
}

struct Line<'a> {
    no: usize,
    toks: Vec<Spanned<'a>>,
    end: usize,
}

impl<'a> Line<'a> {
    fn err<T>(&self, col: usize, msg: impl Into<String>) -> Result<T> {
        Err(FormatError::Syntax {
            line: self.no,
            col,
            msg: msg.into(),
        })
    }
}

fn lex(no: usize, text: &str) -> Result<Line<'_>> {
    let text = match text.find('#') {
        Some(i) => &text[..i],
        None => text,
    };
    let mut toks = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let col_of = |byte: usize| text[..byte].chars().count() + 1;
    let mut i = 0;
    while i < chars.len() {
        let (b, c) = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '{' => Tok::Open,
            '}' => Tok::Close,
            ',' => Tok::Comma,
            '-' if chars.get(i + 1).map(|x| x.1) == Some('>') => {
                toks.push(Spanned {
                    tok: Tok::Arrow,
                    col: col_of(b),
                });
                i += 2;
                continue;
            }
            c if c.is_alphanumeric() || c == '_' || c == '-' => {
                let mut j = i;
                while j < chars.len() && {
                    let d = chars[j].1;
                    (d.is_alphanumeric() || d == '_' || d == '-')
                        && !(d == '-' && chars.get(j + 1).map(|x| x.1) == Some('>'))
                } {
                    j += 1;
                }
                let e = chars.get(j).map_or(text.len(), |x| x.0);
                toks.push(Spanned {
                    tok: Tok::Word(&text[b..e]),
                    col: col_of(b),
                });
                i = j;
                continue;
            }
            other => {
                return Err(FormatError::Syntax {
                    line: no,
                    col: col_of(b),
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        toks.push(Spanned {
            tok,
            col: col_of(b),
        });
        i += 1;
    }
    Ok(Line {
        no,
        toks,
        end: text.chars().count() + 1,
    })
}

struct Cursor<'l, 'a> {
    line: &'l Line<'a>,
    pos: usize,
}

impl<'l, 'a> Cursor<'l, 'a> {
    fn new(line: &'l Line<'a>) -> Self {
        Cursor { line, pos: 0 }
    }

    fn col(&self) -> usize {
        self.line
            .toks
            .get(self.pos)
            .map_or(self.line.end, |t| t.col)
    }

    fn peek(&self) -> Option<Tok<'a>> {
        self.line.toks.get(self.pos).map(|t| t.tok)
    }

    fn next(&mut self) -> Option<Tok<'a>> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn word(&mut self, what: &str) -> Result<(&'a str, usize)> {
        let col = self.col();
        match self.next() {
            Some(Tok::Word(w)) => Ok((w, col)),
            _ => self.line.err(col, format!("expected {what}")),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        let col = self.col();
        if self.next() == Some(tok) {
            Ok(())
        } else {
            self.line.err(col, format!("expected {what}"))
        }
    }

    fn number(&mut self, what: &str) -> Result<(usize, usize)> {
        let (w, col) = self.word(what)?;
        w.parse::<usize>()
            .map(|v| (v, col))
            .or_else(|_| self.line.err(col, format!("expected {what}, found `{w}`")))
    }

    fn element(&mut self, n: usize) -> Result<usize> {
        let (v, col) = self.number("an element")?;
        if v >= n {
            return self
                .line
                .err(col, format!("element {v} out of range for {n} elements"));
        }
        Ok(v)
    }

    fn subset(&mut self, n: usize) -> Result<Subset> {
        self.expect(Tok::Open, "`{`")?;
        let mut s = Subset::EMPTY;
        loop {
            match self.peek() {
                Some(Tok::Close) => {
                    self.next();
                    return Ok(s);
                }
                Some(Tok::Comma) => {
                    self.next();
                }
                Some(Tok::Word(_)) => s = s.with(self.element(n)?),
                _ => return self.line.err(self.col(), "expected an element or `}`"),
            }
        }
    }

    fn done(&self) -> Result<()> {
        if self.pos < self.line.toks.len() {
            self.line.err(self.col(), "unexpected trailing input")
        } else {
            Ok(())
        }
    }
}

fn lines(text: &str) -> Result<Vec<Line<'_>>> {
    let mut out = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let line = lex(i + 1, l)?;
        if !line.toks.is_empty() {
            out.push(line);
        }
    }
    Ok(out)
}

fn eof<T>(text: &str, msg: &str) -> Result<T> {
    Err(FormatError::Syntax {
        line: text.lines().count() + 1,
        col: 1,
        msg: msg.to_string(),
    })
}

fn identifier(line: &Line, col: usize, w: &str) -> Result<()> {
    let ok = w
        .chars()
        .next()
        .is_some_and(|c| c.is_alphabetic() || c == '_');
    if ok {
        Ok(())
    } else {
        line.err(col, format!("`{w}` is not an identifier"))
    }
}

/// Parses `KEYWORD NAME` then `elements N`.
fn header<'a>(text: &str, ls: &[Line<'a>], keyword: &str) -> Result<(String, usize)> {
    let Some(first) = ls.first() else {
        return eof(text, &format!("expected `{keyword} NAME`"));
    };
    let mut c = Cursor::new(first);
    let (kw, col) = c.word(&format!("`{keyword}`"))?;
    if kw != keyword {
        return first.err(col, format!("expected `{keyword}`, found `{kw}`"));
    }
    let (name, col) = c.word("a name")?;
    identifier(first, col, name)?;
    c.done()?;
    let Some(second) = ls.get(1) else {
        return eof(text, "expected `elements N`");
    };
    let mut c = Cursor::new(second);
    let (kw, col) = c.word("`elements`")?;
    if kw != "elements" {
        return second.err(col, format!("expected `elements`, found `{kw}`"));
    }
    let (n, col) = c.number("a carrier size")?;
    if n == 0 || n > MAX_CARRIER {
        return second.err(col, format!("carrier size {n} outside 1..={MAX_CARRIER}"));
    }
    c.done()?;
    Ok((name.to_string(), n))
}

impl StructureFile {
    pub fn parse(text: &str) -> Result<Self> {
        let ls = lines(text)?;
        let (name, n) = header(text, &ls, "structure")?;
        let Some(mode_line) = ls.get(2) else {
            return eof(text, "expected `mode table|rule`");
        };
        let mut c = Cursor::new(mode_line);
        let (kw, col) = c.word("`mode`")?;
        if kw != "mode" {
            return mode_line.err(col, format!("expected `mode`, found `{kw}`"));
        }
        let (mode, col) = c.word("`table` or `rule`")?;
        c.done()?;
        let body = match mode {
            "table" => Self::table_body(&ls[3..], n)?,
            "rule" => Self::rule_body(text, &ls[3..])?,
            other => return mode_line.err(col, format!("unknown mode `{other}`")),
        };
        Ok(StructureFile { name, n, body })
    }

    fn table_body(ls: &[Line], n: usize) -> Result<Body> {
        let mut entries: Vec<(Subset, Subset)> = Vec::new();
        let mut default = None;
        for line in ls {
            let mut c = Cursor::new(line);
            let (kw, col) = c.word("`map` or `default`")?;
            match kw {
                "map" => {
                    let at = c.col();
                    let g = c.subset(n)?;
                    c.expect(Tok::Arrow, "`->`")?;
                    let cons = c.subset(n)?;
                    c.done()?;
                    if entries.iter().any(|(e, _)| *e == g) {
                        return line.err(at, format!("duplicate map line for {g}"));
                    }
                    entries.push((g, cons));
                }
                "default" => {
                    if default.is_some() {
                        return line.err(col, "duplicate default line");
                    }
                    let d = match c.peek() {
                        Some(Tok::Open) => TableDefault::Named(c.subset(n)?),
                        _ => match c.word("`identity`, `full` or a subset")? {
                            ("identity", _) => TableDefault::Identity,
                            ("full", _) => TableDefault::Full,
                            (w, col) => return line.err(col, format!("unknown default `{w}`")),
                        },
                    };
                    c.done()?;
                    default = Some(d);
                }
                other => return line.err(col, format!("unexpected `{other}` in table mode")),
            }
        }
        Ok(Body::Table {
            entries,
            default: default.unwrap_or(TableDefault::Identity),
        })
    }

    fn rule_body(text: &str, ls: &[Line]) -> Result<Body> {
        let Some(line) = ls.first() else {
            return eof(text, "expected `rule NAME`");
        };
        let mut c = Cursor::new(line);
        let (kw, col) = c.word("`rule`")?;
        if kw != "rule" {
            return line.err(col, format!("expected `rule`, found `{kw}`"));
        }
        let (name, col) = c.word("a rule name")?;
        if Rule::from_name(name).is_err() {
            return line.err(col, format!("unknown rule `{name}`"));
        }
        c.done()?;
        if let Some(extra) = ls.get(1) {
            return extra.err(1, "rule mode takes a single `rule` line");
        }
        Ok(Body::Rule(name.to_string()))
    }

    pub fn to_structure(&self) -> Result<LogicalStructure> {
        let source = match &self.body {
            Body::Table { entries, default } => Source::Table {
                entries: entries.clone(),
                default: *default,
            },
            Body::Rule(name) => Source::Rule(Rule::from_name(name)?),
        };
        Ok(LogicalStructure::build(self.n, source)?)
    }

    /// Canonical text; `parse(serialize(f)) == f`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "structure {}", self.name);
        let _ = writeln!(out, "elements {}", self.n);
        match &self.body {
            Body::Table { entries, default } => {
                out.push_str("mode table\n");
                for (g, c) in entries {
                    let _ = writeln!(out, "map {} -> {}", Braced(*g), Braced(*c));
                }
                match default {
                    TableDefault::Identity => out.push_str("default identity\n"),
                    TableDefault::Full => out.push_str("default full\n"),
                    TableDefault::Named(s) => {
                        let _ = writeln!(out, "default {}", Braced(*s));
                    }
                }
            }
            Body::Rule(name) => {
                out.push_str("mode rule\n");
                let _ = writeln!(out, "rule {name}");
            }
        }
        out
    }

    /// A table-mode file for `s`, listing only entries that differ from the
    /// better of the identity and full defaults.
    pub fn from_structure(name: &str, s: &LogicalStructure) -> Self {
        let n = s.n();
        let differs = |d: TableDefault| -> Vec<(Subset, Subset)> {
            all_subsets(n)
                .filter(|&g| {
                    let fallback = match d {
                        TableDefault::Identity => g,
                        TableDefault::Full => s.full(),
                        TableDefault::Named(x) => x,
                    };
                    s.c(g) != fallback
                })
                .map(|g| (g, s.c(g)))
                .collect()
        };
        let id = differs(TableDefault::Identity);
        let full = differs(TableDefault::Full);
        let (entries, default) = if full.len() < id.len() {
            (full, TableDefault::Full)
        } else {
            (id, TableDefault::Identity)
        };
        StructureFile {
            name: name.to_string(),
            n,
            body: Body::Table { entries, default },
        }
    }
}

/// `{0 1 2}`.
struct Braced(Subset);

impl fmt::Display for Braced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.0.elems().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

pub fn parse_structure(text: &str) -> Result<LogicalStructure> {
    StructureFile::parse(text)?.to_structure()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowFile {
    pub name: String,
    pub table: ArrowTable,
}

impl ArrowFile {
    pub fn parse(text: &str) -> Result<Self> {
        let ls = lines(text)?;
        let (name, n) = header(text, &ls, "arrow")?;
        let body = &ls[2..];
        if let Some(first) = body.first() {
            let mut c = Cursor::new(first);
            if c.peek() == Some(Tok::Word("rule")) {
                c.next();
                let (w, col) = c.word("`projection`")?;
                if w != "projection" {
                    return first.err(col, format!("unknown arrow rule `{w}`"));
                }
                c.done()?;
                if let Some(extra) = body.get(1) {
                    return extra.err(1, "`rule projection` takes no further lines");
                }
                return Ok(ArrowFile {
                    name,
                    table: ArrowTable::second_projection(n),
                });
            }
        }
        let mut rows: Vec<Option<Vec<usize>>> = vec![None; n];
        for line in body {
            let mut c = Cursor::new(line);
            let (kw, col) = c.word("`row`")?;
            if kw != "row" {
                return line.err(col, format!("expected `row`, found `{kw}`"));
            }
            let at = c.col();
            let a = c.element(n)?;
            c.expect(Tok::Arrow, "`->`")?;
            let row = (0..n).map(|_| c.element(n)).collect::<Result<Vec<_>>>()?;
            c.done()?;
            if rows[a].is_some() {
                return line.err(at, format!("duplicate row for {a}"));
            }
            rows[a] = Some(row);
        }
        let mut op = Vec::with_capacity(n * n);
        for (a, row) in rows.into_iter().enumerate() {
            match row {
                Some(r) => op.extend(r),
                None => return eof(text, &format!("missing row for {a}")),
            }
        }
        Ok(ArrowFile {
            name,
            table: ArrowTable::new(n, op)?,
        })
    }

    pub fn serialize(&self) -> String {
        let n = self.table.n();
        let mut out = format!("arrow {}\nelements {n}\n", self.name);
        for a in 0..n {
            let _ = write!(out, "row {a} ->");
            for b in 0..n {
                let _ = write!(out, " {}", self.table.apply(a, b));
            }
            out.push('\n');
        }
        out
    }
}

/// Command-line subset syntax: `0,1,3`, or `empty`.
pub fn parse_subset_arg(arg: &str, n: usize) -> std::result::Result<Subset, Error> {
    let arg = arg.trim();
    if arg == "empty" {
        return Ok(Subset::EMPTY);
    }
    let mut s = Subset::EMPTY;
    for part in arg.split(',') {
        let part = part.trim();
        let e: usize = part
            .parse()
            .map_err(|_| Error::SubsetSyntax(arg.to_string()))?;
        if e >= n {
            return Err(Error::Element { elem: e, n });
        }
        s = s.with(e);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::three_element_example;

    const G5: &str = "structure g5\nelements 3\nmode table\nmap {} -> {0 1 2}\nmap {0} -> {0 1}\nmap {0 1} -> {0 1}\ndefault full\n";

    #[test]
    fn g5_file() {
        assert_eq!(parse_structure(G5).unwrap(), three_element_example());
        assert_eq!(StructureFile::parse(G5).unwrap().serialize(), G5);
    }

    #[test]
    fn rule_file() {
        let s = parse_structure("structure id2\nelements 2\nmode rule\nrule identity").unwrap();
        assert_eq!(s, LogicalStructure::identity(2).unwrap());
    }

    #[test]
    fn comments_commas_and_default_position() {
        let t = "# header\nstructure x # trailing\n\nelements 2\nmode table\ndefault full\nmap {0, 1} -> {}\n";
        let f = StructureFile::parse(t).unwrap();
        assert_eq!(StructureFile::parse(&f.serialize()).unwrap(), f);
        assert_eq!(f.to_structure().unwrap().c(Subset::full(2)), Subset::EMPTY);
    }

    fn syntax(text: &str) -> (usize, usize) {
        match StructureFile::parse(text) {
            Err(FormatError::Syntax { line, col, .. }) => (line, col),
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        let dup = "structure d\nelements 2\nmode table\nmap {0} -> {0}\nmap {0} -> {1}\n";
        assert_eq!(syntax(dup), (5, 5));
        let big = "structure d\nelements 2\nmode table\nmap {0 2} -> {0}\n";
        assert_eq!(syntax(big), (4, 8));
        assert_eq!(syntax("structure d\nelements 17\n"), (2, 10));
        assert_eq!(
            syntax("structure d\nelements 2\nmode table\nmap {0} {1}\n"),
            (4, 9)
        );
        assert_eq!(
            syntax("structure d\nelements 2\nmode table\nmap {0} -> {1} ?\n"),
            (4, 16)
        );
        let empty = "structure e\nelements 1\nmode rule\nrule empty\n";
        assert!(matches!(
            parse_structure(empty),
            Err(FormatError::Structure(Error::EmptyRelation))
        ));
    }

    #[test]
    fn from_structure_round_trip() {
        let s = three_element_example();
        let f = StructureFile::from_structure("g5", &s);
        assert_eq!(parse_structure(&f.serialize()).unwrap(), s);
    }

    #[test]
    fn arrow_files() {
        let t = "arrow imp\nelements 2\nrow 0 -> 1 1\nrow 1 -> 0 1\n";
        let a = ArrowFile::parse(t).unwrap();
        assert_eq!(a.table.apply(1, 0), 0);
        assert_eq!(a.serialize(), t);
        let p = ArrowFile::parse("arrow p\nelements 3\nrule projection\n").unwrap();
        assert_eq!(p.table, ArrowTable::second_projection(3));
        assert!(ArrowFile::parse("arrow q\nelements 2\nrow 0 -> 1 1\n").is_err());
    }

    #[test]
    fn subset_args() {
        assert_eq!(parse_subset_arg("empty", 3).unwrap(), Subset::EMPTY);
        assert_eq!(
            parse_subset_arg("0,2", 3).unwrap(),
            Subset::from_elems([0, 2])
        );
        assert!(parse_subset_arg("3", 3).is_err());
        assert!(parse_subset_arg("x", 3).is_err());
    }
}
