//! Multiset notation for partitions: `13^4,11^2,9,5^5,3^3,1^4`.
//!
//! Parts may appear in any order and the same part may repeat; the parser
//! normalizes to the canonical partition. The printer lists parts in
//! decreasing order and omits exponent 1. The empty partition prints as
//! `()` and parses from `()` or the empty string.

use partition_bijections::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    /// 0-based character offset into the input.
    pub position: usize,
    pub message: String,
}

fn error(position: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        position,
        message: message.into(),
    }
}

struct Scanner<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    text: &'a str,
}

impl Scanner<'_> {
    fn skip_space(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.at += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn position(&self) -> usize {
        self.at
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_space();
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self, what: &str) -> Result<u64, ParseError> {
        self.skip_space();
        let start = self.position();
        if self.peek() == Some('-') {
            return Err(error(start, format!("{what} must be positive")));
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        if self.at == start {
            let found = match self.peek() {
                Some(c) => format!("found {c:?}"),
                None => "found end of input".to_string(),
            };
            return Err(error(start, format!("expected {what}, {found}")));
        }
        let from = self.chars[start].0;
        let to = self.chars.get(self.at).map_or(self.text.len(), |&(i, _)| i);
        let value: u64 = self.text[from..to]
            .parse()
            .map_err(|_| error(start, format!("{what} is too large")))?;
        if value == 0 {
            return Err(error(start, format!("{what} must be positive")));
        }
        Ok(value)
    }
}

/// Parses `part(^mult)?(,part(^mult)?)*`, optionally wrapped in parentheses.
pub fn parse(text: &str) -> Result<Partition, ParseError> {
    let mut s = Scanner {
        chars: text.char_indices().collect(),
        at: 0,
        text,
    };
    let wrapped = s.eat('(');
    s.skip_space();
    let mut parts = Vec::new();
    let closes = |s: &Scanner| s.peek().is_none() || (wrapped && s.peek() == Some(')'));
    if !closes(&s) {
        loop {
            let part = s.number("a part")?;
            let mult = if s.eat('^') {
                s.number("a multiplicity")?
            } else {
                1
            };
            let mult = usize::try_from(mult)
                .map_err(|_| error(s.position(), "multiplicity is too large"))?;
            parts.extend(std::iter::repeat_n(part, mult));
            if !s.eat(',') {
                break;
            }
        }
    }
    if wrapped && !s.eat(')') {
        s.skip_space();
        return Err(error(s.position(), "expected ')'"));
    }
    s.skip_space();
    if let Some(c) = s.peek() {
        return Err(error(s.position(), format!("unexpected {c:?}")));
    }
    Ok(Partition::new(parts).expect("zero parts are rejected while scanning"))
}

/// The canonical multiset notation of `p`.
pub fn print(p: &Partition) -> String {
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parses_multiset_notation() {
        assert_eq!(
            parse("5^3,4,3^2,1^4").unwrap(),
            p(&[5, 5, 5, 4, 3, 3, 1, 1, 1, 1])
        );
        assert_eq!(parse("").unwrap(), p(&[]));
        assert_eq!(parse("()").unwrap(), p(&[]));
        assert_eq!(parse("1,3,1").unwrap(), p(&[3, 1, 1]));
        assert_eq!(parse(" (13^2, 11) ").unwrap(), p(&[13, 13, 11]));
        assert_eq!(parse("3^1").unwrap(), p(&[3]));
    }

    #[test]
    fn reports_positions() {
        assert_eq!(parse("3,0").unwrap_err().position, 2);
        assert_eq!(parse("3,x").unwrap_err().position, 2);
        assert_eq!(parse("3^0").unwrap_err().position, 2);
        assert_eq!(parse("-1").unwrap_err().position, 0);
        assert_eq!(parse("3,").unwrap_err().position, 2);
        assert_eq!(parse("3 4").unwrap_err().position, 2);
        assert_eq!(parse("(3").unwrap_err().position, 2);
        assert!(parse("99999999999999999999999").is_err());
    }

    #[test]
    fn prints_canonically() {
        assert_eq!(print(&p(&[1, 3, 1])), "3,1^2");
        assert_eq!(print(&p(&[])), "()");
        assert_eq!(
            print(&parse("21,11^2,9,5^2,3^3").unwrap()),
            "21,11^2,9,5^2,3^3"
        );
    }
}
