//! Finite presentations and the text grammar used for them.
//!
//! ```text
//! <g1,g2,... | chain, chain, ...>
//! chain = word ('=' word)*
//! word  = term ('*' term)*
//! term  = generator ('^' signed-integer)? | '1'
//! ```
//!
//! Whitespace is ignored. `1` denotes the empty word.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("undeclared generator `{name}` at line {line}, column {column}")]
    UndeclaredGenerator {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
}

/// A word in the free group, as (generator index, exponent) pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(pub Vec<(usize, i64)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(index: usize) -> Self {
        Word(vec![(index, 1)])
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Expands exponents into a sequence of signed unit letters and freely
    /// reduces it. `+1` is the generator and `-1` its inverse.
    pub fn unit_letters(&self) -> Vec<(usize, i8)> {
        let mut out: Vec<(usize, i8)> = Vec::new();
        for &(g, e) in &self.0 {
            let s: i8 = if e > 0 { 1 } else { -1 };
            for _ in 0..e.unsigned_abs() {
                match out.last() {
                    Some(&(h, t)) if h == g && t == -s => {
                        out.pop();
                    }
                    _ => out.push((g, s)),
                }
            }
        }
        out
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    names[g].clone()
                } else {
                    format!("{}^{}", names[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    /// Each chain `w1 = w2 = ... = wk`; a one-word chain means `w = 1`.
    pub relations: Vec<Vec<Word>>,
}

impl Presentation {
    /// Relators obtained by expanding each chain into consecutive
    /// differences `w_i * w_{i+1}^-1`.
    pub fn relators(&self) -> Vec<Word> {
        let mut out = Vec::new();
        for chain in &self.relations {
            if chain.len() == 1 {
                out.push(chain[0].clone());
            } else {
                for pair in chain.windows(2) {
                    out.push(pair[0].concat(&pair[1].inverse()));
                }
            }
        }
        out
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | ", self.generators.join(","))?;
        let chains: Vec<String> = self
            .relations
            .iter()
            .map(|c| {
                c.iter()
                    .map(|w| w.display_with(&self.generators))
                    .collect::<Vec<_>>()
                    .join("=")
            })
            .collect();
        write!(f, "{}>", chains.join(", "))
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
            _src: src,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if !c.is_whitespace() {
                break;
            }
            self.bump();
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = *self.chars.get(self.pos)?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn identifier(&mut self) -> Result<(String, usize, usize), ParseError> {
        let c = self.peek();
        let (line, column) = (self.line, self.column);
        match c {
            Some(c) if c.is_ascii_alphabetic() => {}
            Some(c) => return Err(self.error(format!("expected generator name, found `{c}`"))),
            None => return Err(self.error("expected generator name, found end of input")),
        }
        let mut s = String::new();
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Ok((s, line, column))
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let mut neg = false;
        match self.peek() {
            Some('-') => {
                neg = true;
                self.bump();
            }
            Some('+') => {
                self.bump();
            }
            _ => {}
        }
        self.skip_ws();
        let mut digits = String::new();
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(self.error("expected integer exponent"));
        }
        let v: i64 = digits
            .parse()
            .map_err(|_| self.error("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }
}

/// Parses a word over the given generator names.
pub fn parse_word(text: &str, generators: &[String]) -> Result<Word, ParseError> {
    let mut cur = Cursor::new(text);
    let w = word(&mut cur, generators)?;
    if let Some(c) = cur.peek() {
        return Err(cur.error(format!("unexpected `{c}` after word")));
    }
    Ok(w)
}

fn word(cur: &mut Cursor<'_>, generators: &[String]) -> Result<Word, ParseError> {
    let mut letters = Vec::new();
    loop {
        match cur.peek() {
            Some('1') => {
                cur.bump();
            }
            _ => {
                let (name, line, column) = cur.identifier()?;
                let g = generators.iter().position(|x| *x == name).ok_or(
                    ParseError::UndeclaredGenerator {
                        name: name.clone(),
                        line,
                        column,
                    },
                )?;
                let mut e = 1;
                if cur.peek() == Some('^') {
                    cur.bump();
                    e = cur.integer()?;
                }
                if e != 0 {
                    letters.push((g, e));
                }
            }
        }
        if cur.peek() == Some('*') {
            cur.bump();
        } else {
            break;
        }
    }
    Ok(Word(letters))
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut cur = Cursor::new(text);
    cur.expect('<')?;
    let mut generators: Vec<String> = Vec::new();
    if !matches!(cur.peek(), Some('|') | Some('>')) {
        loop {
            let (name, _, _) = cur.identifier()?;
            if generators.contains(&name) {
                return Err(ParseError::DuplicateGenerator(name));
            }
            generators.push(name);
            if cur.peek() == Some(',') {
                cur.bump();
            } else {
                break;
            }
        }
    }
    let mut relations = Vec::new();
    if cur.peek() == Some('|') {
        cur.bump();
        if cur.peek() != Some('>') {
            loop {
                let mut chain = vec![word(&mut cur, &generators)?];
                while cur.peek() == Some('=') {
                    cur.bump();
                    chain.push(word(&mut cur, &generators)?);
                }
                relations.push(chain);
                if cur.peek() == Some(',') {
                    cur.bump();
                } else {
                    break;
                }
            }
        }
    }
    cur.expect('>')?;
    if let Some(c) = cur.peek() {
        return Err(cur.error(format!("unexpected `{c}` after presentation")));
    }
    Ok(Presentation {
        generators,
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const ORDER32: &str =
        "<a,b,c | a^4=1, b^4=a^2, c^2=b*a*b^-1=a^-1, a*c=c*a, c*b*c^-1=a^-1*b^3>";

    #[test]
    fn cyclic() {
        let p = parse_presentation("<a | a^4>").unwrap();
        assert_eq!(p.generators, vec!["a"]);
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.relations[0], vec![Word(vec![(0, 4)])]);
    }

    #[test]
    fn order_32_chains() {
        let p = parse_presentation(ORDER32).unwrap();
        assert_eq!(p.generators.len(), 3);
        assert_eq!(p.relations.len(), 5);
        assert_eq!(p.relations[2].len(), 3);
        // a^4 = 1 keeps the identity word as the second member
        assert_eq!(p.relations[0][1], Word::identity());
        assert_eq!(p.relations[2][1], Word(vec![(1, 1), (0, 1), (1, -1)]));
        assert_eq!(p.relators().len(), 6);
    }

    #[test]
    fn quaternion() {
        let p = parse_presentation("<a,b | a^4, b^2=a^2, b*a*b^-1=a^-1>").unwrap();
        assert_eq!(p.relations.len(), 3);
    }

    #[test]
    fn errors_carry_position() {
        match parse_presentation("<a | a^4,\n  b^2>") {
            Err(ParseError::UndeclaredGenerator { name, line, column }) => {
                assert_eq!(name, "b");
                assert_eq!((line, column), (2, 3));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_presentation("<a | a^>"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_presentation("<a | a^2"),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn unit_letters_reduce() {
        let w = Word(vec![(0, 2), (0, -1), (1, 1), (1, -1)]);
        assert_eq!(w.unit_letters(), vec![(0, 1)]);
    }
}
