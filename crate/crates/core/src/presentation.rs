//! Finitely generated group presentations and elementary quotients.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::matrix::{cokernel, AbelianGroup, IntMatrix};
use crate::word::{parse_word, valid_generator_name, Generator, Word, MAX_GENERATORS};

/// `< generators | relators >`. Relators are freely reduced but not
/// cyclically reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self, ParseError> {
        if names.len() > MAX_GENERATORS {
            return Err(ParseError::TooManyGenerators(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if !valid_generator_name(name) {
                return Err(ParseError::InvalidGeneratorName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(ParseError::DuplicateGenerator(name.clone()));
            }
        }
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= names.len() {
                    return Err(ParseError::InvalidGeneratorName(format!("#{g}")));
                }
            }
        }
        Ok(Presentation { names, relators })
    }

    /// Presentation on `x, y` (or `a, b, ...` / `g0, g1, ...`) with the given relators.
    pub fn with_default_names(n: usize, relators: Vec<Word>) -> Result<Self, ParseError> {
        Presentation::new(default_names(n), relators)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn generator(&self, name: &str) -> Option<Generator> {
        self.names.iter().position(|n| n == name).map(Generator)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        parse_word(text, &self.names)
    }

    pub fn word_to_string(&self, w: &Word) -> String {
        w.display(&self.names).to_string()
    }

    /// Relator-by-generator matrix of exponent sums.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let n = self.generator_count();
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| r.exponent_sums(n).0).collect();
        IntMatrix::from_i64_rows(self.relators.len(), n, &rows)
    }

    /// First homology of the presented group.
    pub fn abelianization(&self) -> AbelianGroup {
        cokernel(&self.exponent_matrix())
    }

    /// Adds `g = 1`: drops generator `g`, deletes its letters from every
    /// relator and removes relators that become trivial.
    pub fn kill_generator(&self, g: Generator) -> Presentation {
        let Generator(k) = g;
        assert!(k < self.names.len(), "generator out of range");
        let names = self
            .names
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, n)| n.clone())
            .collect();
        let relators = self
            .relators
            .iter()
            .map(|r| r.delete_generator(k).map_generators(|i| if i > k { i - 1 } else { i }))
            .filter(|r| !r.is_empty())
            .collect();
        Presentation { names, relators }
    }

    /// Drops trivial relators and kills generators that appear as
    /// single-letter relators until nothing changes.
    pub fn simplify(&self) -> Presentation {
        let mut p = self.clone();
        loop {
            p.relators.retain(|r| !r.is_empty());
            match p.relators.iter().find(|r| r.len() == 1) {
                Some(r) => {
                    let g = r.letters()[0].generator;
                    p = p.kill_generator(Generator(g));
                }
                None => return p,
            }
        }
    }
}

/// `x, y` for two generators, `a, b, c, ...` up to 26, `g0, g1, ...` beyond.
pub fn default_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        n if n <= 26 => (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect(),
        n => (0..n).map(|i| format!("g{i}")).collect(),
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} |", self.names.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{}", r.display(&self.names))?;
        }
        f.write_str(">")
    }
}

impl FromStr for Presentation {
    type Err = ParseError;

    /// Parses `< x, y | xyxY, x^3 >`. Whitespace is insignificant.
    fn from_str(text: &str) -> Result<Self, ParseError> {
        let open = text
            .find(|c: char| !c.is_whitespace())
            .filter(|&i| text[i..].starts_with('<'))
            .ok_or_else(|| ParseError::syntax(0, "presentation must start with '<'"))?;
        let close = text
            .rfind(|c: char| !c.is_whitespace())
            .filter(|&i| text[i..].starts_with('>') && i > open)
            .ok_or_else(|| ParseError::syntax(text.len(), "presentation must end with '>'"))?;
        let body_start = open + 1;
        let body = &text[body_start..close];
        let bar = body
            .find('|')
            .ok_or_else(|| ParseError::syntax(close, "expected '|' between generators and relators"))?;
        if let Some(extra) = body[bar + 1..].find(['|', '<', '>']) {
            return Err(ParseError::syntax(body_start + bar + 1 + extra, "unexpected delimiter"));
        }

        let gens_text = &body[..bar];
        let mut names = Vec::new();
        if !gens_text.trim().is_empty() {
            let mut offset = body_start;
            for item in gens_text.split(',') {
                let name = item.trim();
                if !valid_generator_name(name) {
                    let pos = offset + item.find(|c: char| !c.is_whitespace()).unwrap_or(0);
                    return Err(ParseError::syntax(pos, format!("invalid generator name '{name}'")));
                }
                if names.iter().any(|n| n == name) {
                    return Err(ParseError::DuplicateGenerator(name.to_string()));
                }
                names.push(name.to_string());
                offset += item.len() + 1;
            }
        }
        if names.len() > MAX_GENERATORS {
            return Err(ParseError::TooManyGenerators(names.len()));
        }

        let rels_text = &body[bar + 1..];
        let mut relators = Vec::new();
        if !rels_text.trim().is_empty() {
            let mut offset = body_start + bar + 1;
            for item in rels_text.split(',') {
                if item.trim().is_empty() {
                    return Err(ParseError::syntax(offset, "empty relator"));
                }
                let word = parse_word(item, &names).map_err(|e| shift(e, offset))?;
                relators.push(word);
                offset += item.len() + 1;
            }
        }
        Ok(Presentation { names, relators })
    }
}

fn shift(e: ParseError, offset: usize) -> ParseError {
    match e {
        ParseError::Syntax { position, message } => ParseError::Syntax { position: position + offset, message },
        ParseError::UnknownGenerator { position, name } => {
            ParseError::UnknownGenerator { position: position + offset, name }
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const R_EE: &str = "xyxYXyxyXY";

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        let p = pres(" < x , y | xyxYXyxyXY , x^2 > ");
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relators().len(), 2);
        assert_eq!(p.to_string(), "<x, y | xyxYXyxyXY, xx>");
        assert_eq!(pres(&p.to_string()), p);
        assert_eq!(pres("<x | >").to_string(), "<x |>");
        assert_eq!(pres("< | >").generator_count(), 0);
    }

    #[test]
    fn parse_errors() {
        assert!("x, y | xy".parse::<Presentation>().is_err());
        assert!("<x, y  xy>".parse::<Presentation>().is_err());
        assert!("<x, x | x>".parse::<Presentation>().is_err());
        assert!("<x, Y | x>".parse::<Presentation>().is_err());
        assert!("<x | x,>".parse::<Presentation>().is_err());
        match "<x, y | xy, xz>".parse::<Presentation>() {
            Err(ParseError::UnknownGenerator { position, name }) => {
                assert_eq!(name, "z");
                assert_eq!(&"<x, y | xy, xz>"[position..position + 1], "z");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn kill_generator_on_family_relator() {
        let p = pres(&format!("<x, y | {R_EE}>"));
        assert_eq!(p.kill_generator(Generator(0)).to_string(), "<y | y>");
        assert_eq!(p.kill_generator(Generator(1)).to_string(), "<x | x>");
        let q = pres("<x | >").kill_generator(Generator(0));
        assert_eq!(q.generator_count(), 0);
        assert!(q.relators().is_empty());
    }

    #[test]
    fn kill_generator_renumbers() {
        let p = pres("<a, b, c | abC, cc>");
        let q = p.kill_generator(Generator(1));
        assert_eq!(q.to_string(), "<a, c | aC, cc>");
    }

    #[test]
    fn simplify_examples() {
        assert_eq!(pres("<y | y>").simplify().to_string(), "< |>");
        assert_eq!(pres(&format!("<x, y | {R_EE}, x>")).simplify().generator_count(), 0);
        let cyclic = pres("<x | x^3>");
        assert_eq!(cyclic.simplify(), cyclic);
        assert_eq!(pres("<x, y | xX, xyXY>").simplify().relators().len(), 1);
    }

    #[test]
    fn abelianization_of_family_relator() {
        let h1 = pres(&format!("<x, y | {R_EE}>")).abelianization();
        assert_eq!(h1.free_rank, 1);
        assert!(h1.torsion.is_empty());
    }
}
