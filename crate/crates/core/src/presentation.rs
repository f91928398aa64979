//! Finite presentations and the line-oriented `.grp` text format.
//!
//! ```text
//! # comments run to end of line
//! group Q8
//! gens x y
//! order 8
//! prime 2
//! family quaternion
//! rel x^4
//! rel y^2 = x^2
//! rel x^y = x^-1
//! rel [x, y]^2
//! ```
//!
//! `^` binds tighter than `*`, and juxtaposition is not multiplication.
//! An integer after `^` is a power; a generator name after `^` conjugates
//! (`a^b = b^-1 a b`). `[a, b]` is `a^-1 b^-1 a b`. A relation `L = R` is
//! stored as the relator `L R^-1`.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::word::{ExponentOverflow, Word};

/// Expanded words longer than this many letters are rejected; coset
/// enumeration walks relators letter by letter.
pub const MAX_WORD_LETTERS: u64 = 1 << 22;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Meta {
    pub prime: Option<u64>,
    pub expected_order: Option<u64>,
    pub family: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    pub meta: Meta,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresentationError {
    DuplicateGenerator(String),
    InvalidGeneratorName(String),
    GeneratorOutOfRange { relator: usize, generator: usize },
    ZeroExpectedOrder,
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationError::DuplicateGenerator(g) => write!(f, "generator `{g}` declared twice"),
            PresentationError::InvalidGeneratorName(g) => write!(f, "`{g}` is not a valid generator name"),
            PresentationError::GeneratorOutOfRange { relator, generator } => {
                write!(f, "relator {relator} uses generator index {generator}, which is not declared")
            }
            PresentationError::ZeroExpectedOrder => f.write_str("expected order must be at least 1"),
        }
    }
}

impl core::error::Error for PresentationError {}

impl Presentation {
    /// Builds a presentation, checking generator names and relator indices.
    /// Relators are stored reduced; relators equal to the identity are dropped.
    pub fn new(
        name: impl Into<String>,
        generators: Vec<String>,
        relators: Vec<Word>,
        meta: Meta,
    ) -> Result<Self, PresentationError> {
        for (i, g) in generators.iter().enumerate() {
            if !is_identifier(g) {
                return Err(PresentationError::InvalidGeneratorName(g.clone()));
            }
            if generators[..i].contains(g) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        for (i, r) in relators.iter().enumerate() {
            if let Some(max) = r.max_generator() {
                if max >= generators.len() {
                    return Err(PresentationError::GeneratorOutOfRange { relator: i, generator: max });
                }
            }
        }
        if meta.expected_order == Some(0) {
            return Err(PresentationError::ZeroExpectedOrder);
        }
        let relators = relators.into_iter().filter(|r| !r.is_identity()).collect();
        Ok(Presentation { name: name.into(), generators, relators, meta })
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }
}

/// Serializes to `.grp` text that parses back to the same presentation.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group {}", self.name)?;
        f.write_str("gens")?;
        for g in &self.generators {
            write!(f, " {g}")?;
        }
        writeln!(f)?;
        if let Some(order) = self.meta.expected_order {
            writeln!(f, "order {order}")?;
        }
        if let Some(p) = self.meta.prime {
            writeln!(f, "prime {p}")?;
        }
        if let Some(family) = &self.meta.family {
            writeln!(f, "family {family}")?;
        }
        for r in &self.relators {
            writeln!(f, "rel {}", r.display_with(&self.generators))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownGenerator(String),
    ExponentOverflow,
    WordTooLong,
    Invalid(PresentationError),
}

/// Parse failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax(msg) => f.write_str(msg),
            ParseErrorKind::UnknownGenerator(g) => write!(f, "unknown generator `{g}`"),
            ParseErrorKind::ExponentOverflow => f.write_str("exponent overflow"),
            ParseErrorKind::WordTooLong => write!(f, "word longer than {MAX_WORD_LETTERS} letters"),
            ParseErrorKind::Invalid(e) => fmt::Display::fmt(e, f),
        }
    }
}

impl core::error::Error for ParseError {}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric())
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Caret,
    Star,
    Eq,
    Minus,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Int(s) => write!(f, "`{s}`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
        }
    }
}

struct Lexed {
    tok: Tok,
    column: usize,
}

fn lex(line: &str, line_no: usize, start_col: usize) -> Result<Vec<Lexed>, ParseError> {
    let mut out = Vec::new();
    let bytes: Vec<(usize, char)> = line.char_indices().collect();
    let mut i = 0;
    while i < bytes.len() {
        let (_, c) = bytes[i];
        let column = start_col + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '^' => Some(Tok::Caret),
            '*' => Some(Tok::Star),
            '=' => Some(Tok::Eq),
            '-' => Some(Tok::Minus),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Lexed { tok, column });
            i += 1;
            continue;
        }
        let begin = i;
        if c.is_ascii_alphabetic() {
            while i < bytes.len() && bytes[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            let text: String = bytes[begin..i].iter().map(|&(_, c)| c).collect();
            out.push(Lexed { tok: Tok::Ident(text), column });
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && bytes[i].1.is_ascii_alphabetic() {
                return Err(syntax(line_no, start_col + i, "identifiers must start with a letter"));
            }
            let text: String = bytes[begin..i].iter().map(|&(_, c)| c).collect();
            out.push(Lexed { tok: Tok::Int(text), column });
        } else {
            return Err(syntax(line_no, column, &alloc::format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

fn syntax(line: usize, column: usize, msg: &str) -> ParseError {
    ParseError { line, column, kind: ParseErrorKind::Syntax(msg.to_owned()) }
}

struct ExprParser<'a> {
    toks: &'a [Lexed],
    pos: usize,
    line: usize,
    end_col: usize,
    generators: &'a [String],
}

impl<'a> ExprParser<'a> {
    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.column)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, column: self.column(), kind }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        let msg = match self.peek() {
            Some(t) => alloc::format!("expected {wanted}, found {t}"),
            None => alloc::format!("expected {wanted}, found end of line"),
        };
        self.error(ParseErrorKind::Syntax(msg))
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn checked(&self, column: usize, r: Result<Word, ExponentOverflow>) -> Result<Word, ParseError> {
        let w = r.map_err(|_| ParseError { line: self.line, column, kind: ParseErrorKind::ExponentOverflow })?;
        if w.letter_length() > MAX_WORD_LETTERS {
            return Err(ParseError { line: self.line, column, kind: ParseErrorKind::WordTooLong });
        }
        Ok(w)
    }

    fn generator(&self, name: &str, column: usize) -> Result<usize, ParseError> {
        self.generators.iter().position(|g| g == name).ok_or_else(|| ParseError {
            line: self.line,
            column,
            kind: ParseErrorKind::UnknownGenerator(name.to_owned()),
        })
    }

    fn expr(&mut self) -> Result<Word, ParseError> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Tok::Star) {
            let column = self.column();
            self.pos += 1;
            let rhs = self.term()?;
            acc = self.checked(column, acc.mul(&rhs))?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Word, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        let column = self.column();
        self.pos += 1;
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                let g = self.generator(&name, self.column())?;
                self.pos += 1;
                self.checked(column, base.conjugate_by(&Word::generator(g)))
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                let k = self.integer()?;
                let k = k.checked_neg().ok_or(self.error(ParseErrorKind::ExponentOverflow))?;
                self.power(column, &base, k)
            }
            Some(Tok::Int(_)) => {
                let k = self.integer()?;
                self.power(column, &base, k)
            }
            _ => Err(self.unexpected("an integer exponent or a generator")),
        }
    }

    fn power(&self, column: usize, base: &Word, k: i64) -> Result<Word, ParseError> {
        // Refuse before expanding: a long base raised to a large power would
        // allocate the whole expansion first.
        if base.syllables().len() > 1 && base.letter_length().saturating_mul(k.unsigned_abs()) > MAX_WORD_LETTERS {
            return Err(ParseError { line: self.line, column, kind: ParseErrorKind::WordTooLong });
        }
        self.checked(column, base.pow(k))
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        match self.peek() {
            Some(Tok::Int(text)) => {
                let v = text.parse::<i64>().map_err(|_| self.error(ParseErrorKind::ExponentOverflow))?;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                let g = self.generator(&name, self.column())?;
                self.pos += 1;
                Ok(Word::generator(g))
            }
            Some(Tok::LBracket) => {
                let column = self.column();
                self.pos += 1;
                let a = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.expr()?;
                self.expect(Tok::RBracket, "`]`")?;
                self.checked(column, Word::commutator(&a, &b))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a generator, `[` or `(`")),
        }
    }
}

/// Parses a single relation `L` or `L = R` over the given generators into a
/// relator. Column numbers in errors are relative to `text`.
pub fn parse_relator(text: &str, generators: &[String]) -> Result<Word, ParseError> {
    parse_relator_at(text, generators, 1, 1)
}

fn parse_relator_at(text: &str, generators: &[String], line: usize, start_col: usize) -> Result<Word, ParseError> {
    let toks = lex(text, line, start_col)?;
    let end_col = start_col + text.chars().count();
    let mut p = ExprParser { toks: &toks, pos: 0, line, end_col, generators };
    let lhs = p.expr()?;
    let relator = if p.peek() == Some(&Tok::Eq) {
        let column = p.column();
        p.pos += 1;
        let rhs = p.expr()?;
        p.checked(column, lhs.mul(&rhs.inverse()))?
    } else {
        lhs
    };
    if p.pos != toks.len() {
        return Err(p.unexpected("`*`, `=` or end of line"));
    }
    Ok(relator)
}

#[derive(PartialEq, Eq, PartialOrd, Ord, Clone, Copy)]
enum Stage {
    Start,
    Header,
    Gens,
    Rels,
}

/// Parses `.grp` text into a [`Presentation`].
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut stage = Stage::Start;
    let mut name = String::new();
    let mut generators: Vec<String> = Vec::new();
    let mut relators = Vec::new();
    let mut meta = Meta::default();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        let indent = content.len() - content.trim_start().len();
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        let keyword_end = content.find(char::is_whitespace).unwrap_or(content.len());
        let keyword = &content[..keyword_end];
        let rest = &content[keyword_end..];
        let rest_col = 1 + indent + content[..keyword_end].chars().count();
        let rest_indent = rest.len() - rest.trim_start().len();
        let rest_trim = rest.trim();
        let arg_col = rest_col + rest[..rest_indent].chars().count();
        let kw_col = 1 + indent;

        match keyword {
            "group" => {
                if stage != Stage::Start {
                    return Err(syntax(line_no, kw_col, "`group` must be the first line"));
                }
                let mut parts = rest_trim.split_whitespace();
                match (parts.next(), parts.next()) {
                    (Some(n), None) => name = n.to_owned(),
                    (None, _) => return Err(syntax(line_no, arg_col, "expected a group name")),
                    (Some(_), Some(_)) => {
                        return Err(syntax(line_no, arg_col, "group name must be a single token"));
                    }
                }
                stage = Stage::Header;
            }
            "gens" => {
                if stage != Stage::Header {
                    return Err(syntax(line_no, kw_col, "`gens` must directly follow the `group` line"));
                }
                let toks = lex(rest, line_no, rest_col)?;
                if toks.is_empty() {
                    return Err(syntax(line_no, arg_col, "expected at least one generator"));
                }
                for t in toks {
                    match t.tok {
                        Tok::Ident(g) => {
                            if generators.contains(&g) {
                                return Err(ParseError {
                                    line: line_no,
                                    column: t.column,
                                    kind: ParseErrorKind::Invalid(PresentationError::DuplicateGenerator(g)),
                                });
                            }
                            generators.push(g);
                        }
                        other => {
                            return Err(syntax(line_no, t.column, &alloc::format!("expected a generator name, found {other}")));
                        }
                    }
                }
                stage = Stage::Gens;
            }
            "order" | "prime" | "family" => {
                if stage != Stage::Gens {
                    let msg = if stage == Stage::Rels {
                        "metadata must come before the first `rel` line"
                    } else {
                        "metadata must follow the `gens` line"
                    };
                    return Err(syntax(line_no, kw_col, msg));
                }
                let mut parts = rest_trim.split_whitespace();
                let value = match (parts.next(), parts.next()) {
                    (Some(v), None) => v,
                    _ => return Err(syntax(line_no, arg_col, &alloc::format!("`{keyword}` takes exactly one value"))),
                };
                if keyword == "family" {
                    if !value.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                        || !value.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                    {
                        return Err(syntax(line_no, arg_col, "family tag must be an identifier"));
                    }
                    if meta.family.replace(value.to_owned()).is_some() {
                        return Err(syntax(line_no, kw_col, "duplicate `family` line"));
                    }
                    continue;
                }
                let n: u64 = value.parse().map_err(|_| {
                    if value.chars().all(|c| c.is_ascii_digit()) {
                        ParseError { line: line_no, column: arg_col, kind: ParseErrorKind::ExponentOverflow }
                    } else {
                        syntax(line_no, arg_col, "expected a positive integer")
                    }
                })?;
                if keyword == "order" {
                    if n == 0 {
                        return Err(ParseError {
                            line: line_no,
                            column: arg_col,
                            kind: ParseErrorKind::Invalid(PresentationError::ZeroExpectedOrder),
                        });
                    }
                    if meta.expected_order.replace(n).is_some() {
                        return Err(syntax(line_no, kw_col, "duplicate `order` line"));
                    }
                } else {
                    if n < 2 {
                        return Err(syntax(line_no, arg_col, "prime must be at least 2"));
                    }
                    if meta.prime.replace(n).is_some() {
                        return Err(syntax(line_no, kw_col, "duplicate `prime` line"));
                    }
                }
            }
            "rel" => {
                if stage < Stage::Gens {
                    return Err(syntax(line_no, kw_col, "`rel` before `gens`"));
                }
                if rest_trim.is_empty() {
                    return Err(syntax(line_no, arg_col, "expected a relation"));
                }
                relators.push(parse_relator_at(rest, &generators, line_no, rest_col)?);
                stage = Stage::Rels;
            }
            other => {
                return Err(syntax(line_no, kw_col, &alloc::format!("unknown keyword `{other}`")));
            }
        }
    }

    if stage != Stage::Rels {
        let what = match stage {
            Stage::Start => "missing `group` line",
            Stage::Header => "missing `gens` line",
            _ => "expected at least one `rel` line",
        };
        return Err(syntax(last_line.max(1), 1, what));
    }
    Presentation::new(name, generators, relators, meta)
        .map_err(|e| ParseError { line: 1, column: 1, kind: ParseErrorKind::Invalid(e) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Syllable;
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    fn names(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    fn w(s: &[(usize, i64)]) -> Word {
        Word::from_syllables(s.iter().map(|&(g, e)| Syllable::new(g, e))).unwrap()
    }

    #[test]
    fn quaternion_relator_form() {
        let p = parse_presentation("group Q8\ngens x y\nrel x^4\nrel y^4\nrel y*x*y^-1*x").unwrap();
        assert_eq!(p.name, "Q8");
        assert_eq!(p.num_generators(), 2);
        assert_eq!(p.relators.len(), 3);
        assert_eq!(p.relators[2], w(&[(1, 1), (0, 1), (1, -1), (0, 1)]));
    }

    #[test]
    fn conjugation_relation() {
        let r = parse_relator("x^y = x", &names(&["x", "y"])).unwrap();
        assert_eq!(r, w(&[(1, -1), (0, 1), (1, 1), (0, -1)]));
        assert_eq!(r.syllables().len(), 4);
    }

    #[test]
    fn commutator_subword() {
        let r = parse_relator("[x,y]", &names(&["x", "y"])).unwrap();
        assert_eq!(r, w(&[(0, -1), (1, -1), (0, 1), (1, 1)]));
    }

    #[test]
    fn power_binds_tighter_than_product() {
        let g = names(&["x", "y"]);
        assert_eq!(parse_relator("x*y^2", &g).unwrap(), w(&[(0, 1), (1, 2)]));
        assert_eq!(parse_relator("(x*y)^2", &g).unwrap(), w(&[(0, 1), (1, 1), (0, 1), (1, 1)]));
        assert_eq!(parse_relator("x^-3", &g).unwrap(), w(&[(0, -3)]));
        assert_eq!(parse_relator("[x,y]^3", &g).unwrap(), Word::commutator(&w(&[(0, 1)]), &w(&[(1, 1)])).unwrap().pow(3).unwrap());
    }

    #[test]
    fn conjugation_of_compound_atom() {
        let g = names(&["x", "y", "z"]);
        let r = parse_relator("[x,y]^z", &g).unwrap();
        let expected = Word::commutator(&Word::generator(0), &Word::generator(1))
            .unwrap()
            .conjugate_by(&Word::generator(2))
            .unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn juxtaposition_rejected() {
        let err = parse_relator("x y", &names(&["x", "y"])).unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
        assert_eq!(err.column, 3);
    }

    #[test]
    fn unknown_generator_position() {
        let err = parse_presentation("group G\ngens x\nrel x^2\nrel  x*z").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownGenerator("z".to_string()));
        assert_eq!((err.line, err.column), (4, 8));
    }

    #[test]
    fn unknown_conjugator() {
        let err = parse_relator("x^q", &names(&["x"])).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownGenerator("q".to_string()));
    }

    #[test]
    fn exponent_overflow_reported() {
        let g = names(&["x"]);
        assert_eq!(parse_relator("x^99999999999999999999", &g).unwrap_err().kind, ParseErrorKind::ExponentOverflow);
        assert_eq!(
            parse_relator("x^-9223372036854775808", &g).unwrap_err().kind,
            ParseErrorKind::ExponentOverflow
        );
    }

    #[test]
    fn long_expansions_rejected() {
        let g = names(&["x", "y"]);
        assert_eq!(parse_relator("(x*y)^4000000", &g).unwrap_err().kind, ParseErrorKind::WordTooLong);
    }

    #[test]
    fn metadata_and_comments() {
        let text = "# header comment\ngroup D8   # dihedral\ngens x y\norder 8\nprime 2\nfamily dihedral\nrel x^4\nrel y^2\nrel y*x*y = x^-1\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.meta, Meta { prime: Some(2), expected_order: Some(8), family: Some("dihedral".to_string()) });
        assert_eq!(p.relators.len(), 3);
    }

    #[test]
    fn structural_errors() {
        assert!(parse_presentation("gens x\nrel x").is_err());
        assert!(parse_presentation("group G\nrel x").is_err());
        assert!(parse_presentation("group G\ngens x").is_err());
        assert!(parse_presentation("group G\ngens x\nrel x^2\norder 2").is_err());
        assert!(parse_presentation("group G\ngens x\norder 0\nrel x^2").is_err());
        assert!(parse_presentation("group G\ngens x x\nrel x^2").is_err());
        assert!(parse_presentation("group G\ngens 2x\nrel x^2").is_err());
        assert!(parse_presentation("group G\ngens x\nfoo 3\nrel x^2").is_err());
        assert!(parse_presentation("group G H\ngens x\nrel x^2").is_err());
        assert!(parse_presentation("group G\ngens x\nrel [x, x").is_err());
        assert!(parse_presentation("group G\ngens x\nrel x^").is_err());
    }

    #[test]
    fn trivial_relators_dropped() {
        let p = parse_presentation("group G\ngens x\nrel x^3\nrel x = x").unwrap();
        assert_eq!(p.relators, vec![w(&[(0, 3)])]);
    }

    #[test]
    fn serialization_round_trip() {
        let text = "group M27xC3\ngens x y z\norder 81\nprime 3\nfamily thm31_equality\nrel x^9\nrel y^3\nrel x^y = x^4\nrel z^3\nrel [x,z]\nrel [y,z]\n";
        let p = parse_presentation(text).unwrap();
        let again = parse_presentation(&p.to_string()).unwrap();
        assert_eq!(p, again);
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((0usize..3, -5i64..=5), 1..10)
            .prop_map(|raw| Word::from_syllables(raw.into_iter().map(|(g, e)| Syllable::new(g, e))).unwrap())
            .prop_filter("non-trivial", |w| !w.is_identity())
    }

    proptest! {
        #[test]
        fn printed_presentations_reparse(relators in prop::collection::vec(arb_word(), 1..5)) {
            let p = Presentation::new("G", names(&["a", "b", "c"]), relators, Meta::default()).unwrap();
            let again = parse_presentation(&p.to_string()).unwrap();
            prop_assert_eq!(p, again);
        }
    }
}
