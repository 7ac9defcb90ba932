//! The line-oriented space file format.
//!
//! ```text
//! space DIE
//! atoms 1 2 3 4 5 6
//! event even = {2,4,6}
//! event small = {1,2} or {3}     # any unconditional expression
//! measure uniform = 1 1 1 1 1 1
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, ParseError, Result};
use crate::event::{is_valid_name, Event, SampleSpace};
use crate::prob::Measure;

use super::lower;
use super::parser::parse_expr_at;

/// A parsed space file: the sample space plus its named events and measures.
#[derive(Debug, Clone)]
pub struct SpaceDoc {
    pub name: Option<String>,
    pub space: SampleSpace,
    events: Vec<(String, Event)>,
    measures: Vec<(String, Measure)>,
}

impl SpaceDoc {
    /// A document with no names, for working directly with set literals.
    pub fn new(space: SampleSpace) -> SpaceDoc {
        SpaceDoc {
            name: None,
            space,
            events: Vec::new(),
            measures: Vec::new(),
        }
    }

    pub fn event(&self, name: &str) -> Option<Event> {
        self.events.iter().find(|(n, _)| n == name).map(|(_, e)| *e)
    }

    pub fn measure(&self, name: &str) -> Option<&Measure> {
        self.measures
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
    }

    pub fn events(&self) -> &[(String, Event)] {
        &self.events
    }

    pub fn measures(&self) -> &[(String, Measure)] {
        &self.measures
    }

    pub fn define_event(&mut self, name: &str, event: Event) -> Result<()> {
        check_name(name)?;
        self.space.check(&event)?;
        if self.event(name).is_some() {
            return Err(Error::DuplicateName(name.to_string()));
        }
        self.events.push((name.to_string(), event));
        Ok(())
    }

    pub fn define_measure(&mut self, name: &str, measure: Measure) -> Result<()> {
        check_name(name)?;
        if self.measure(name).is_some() {
            return Err(Error::DuplicateName(name.to_string()));
        }
        self.measures.push((name.to_string(), measure));
        Ok(())
    }
}

fn check_name(name: &str) -> Result<()> {
    if !is_valid_name(name) || name == "and" || name == "or" {
        return Err(Error::InvalidAtomName(name.to_string()));
    }
    Ok(())
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    fn error(&self, column: usize, expected: &[&str], found: &str) -> Error {
        Error::Parse(ParseError {
            line: self.number,
            column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: found.to_string(),
        })
    }

    /// Whitespace-separated words with their 1-based columns.
    fn words(&self) -> Vec<(usize, &str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, c) in self.text.char_indices() {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    out.push((s, &self.text[s..i]));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push((s, &self.text[s..]));
        }
        out.into_iter()
            .map(|(byte, w)| (self.text[..byte].chars().count() + 1, w))
            .collect()
    }

    fn end_column(&self) -> usize {
        self.text.chars().count() + 1
    }
}

fn found(word: Option<&(usize, &str)>) -> String {
    match word {
        Some((_, w)) => format!("`{w}`"),
        None => "end of line".to_string(),
    }
}

/// Parses a space file. Event definitions may use any earlier event name.
pub fn parse_space(text: &str) -> Result<SpaceDoc> {
    let mut name = None;
    let mut doc: Option<SpaceDoc> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = Line {
            number: i + 1,
            text: raw.split('#').next().unwrap_or(""),
        };
        let words = line.words();
        let Some(&(col, keyword)) = words.first() else {
            continue;
        };
        match keyword {
            "space" => {
                let [_, (_, n)] = words[..] else {
                    return Err(line.error(
                        words.get(2).map_or(line.end_column(), |w| w.0),
                        &["a single space name"],
                        &found(words.get(2)),
                    ));
                };
                if name.is_some() {
                    return Err(Error::DuplicateName(n.to_string()).at_line(line.number));
                }
                name = Some(n.to_string());
            }
            "atoms" => {
                if doc.is_some() {
                    return Err(line.error(col, &["`event`", "`measure`"], "`atoms`"));
                }
                let space = SampleSpace::new(words[1..].iter().map(|(_, w)| *w))
                    .map_err(|e| e.at_line(line.number))?;
                doc = Some(SpaceDoc::new(space));
            }
            "event" | "measure" => {
                let Some(doc) = doc.as_mut() else {
                    return Err(line.error(col, &["`space`", "`atoms`"], &format!("`{keyword}`")));
                };
                let eq = match words.get(2) {
                    Some(&(c, "=")) => c,
                    other => {
                        return Err(line.error(
                            other.map_or(line.end_column(), |w| w.0),
                            &["`=`"],
                            &found(other),
                        ))
                    }
                };
                let Some(&(_, target)) = words.get(1) else {
                    unreachable!("a third word implies a second");
                };
                if keyword == "event" {
                    let rhs = byte_after_column(line.text, eq + 1);
                    let expr = parse_expr_at(&line.text[rhs..], line.number, eq + 1)?;
                    let value = lower(&expr, doc).map_err(|e| e.at_line(line.number))?;
                    if !value.condition().is_full() {
                        let shown = doc.space.format_event(&value.condition());
                        return Err(Error::ConditionalEvent(shown).at_line(line.number));
                    }
                    doc.define_event(target, value.consequent())
                        .map_err(|e| e.at_line(line.number))?;
                } else {
                    let weights = words[3..]
                        .iter()
                        .map(|(_, w)| parse_weight(w))
                        .collect::<Result<Vec<_>>>()
                        .map_err(|e| e.at_line(line.number))?;
                    let measure =
                        Measure::new(&doc.space, weights).map_err(|e| e.at_line(line.number))?;
                    doc.define_measure(target, measure)
                        .map_err(|e| e.at_line(line.number))?;
                }
            }
            other => {
                return Err(line.error(
                    col,
                    &["`space`", "`atoms`", "`event`", "`measure`"],
                    &format!("`{other}`"),
                ))
            }
        }
    }
    let Some(mut doc) = doc else {
        return Err(Error::Parse(ParseError {
            line: text.lines().count().max(1),
            column: 1,
            expected: vec!["`atoms`".to_string()],
            found: "end of input".to_string(),
        }));
    };
    doc.name = name;
    Ok(doc)
}

fn byte_after_column(text: &str, column: usize) -> usize {
    text.char_indices()
        .nth(column - 1)
        .map_or(text.len(), |(i, _)| i)
}

/// A nonnegative rational written `p` or `p/q` with `q > 0`.
pub fn parse_weight(word: &str) -> Result<BigRational> {
    let bad = || Error::BadWeight(word.to_string());
    let digits = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse().map_err(|_| bad())
    };
    let w = match word.split_once('/') {
        None => BigRational::from_integer(digits(word)?),
        Some((p, q)) => {
            let q = digits(q)?;
            if q.is_zero() {
                return Err(bad());
            }
            BigRational::new(digits(p)?, q)
        }
    };
    debug_assert!(!w.is_negative());
    Ok(w)
}
