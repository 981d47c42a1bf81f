//! Recursive-descent parser for group specifications.
//!
//! ```text
//! spec       := term ('x' term)*
//! term       := 'C' INT | 'D' INT | 'Q' INT | 'A' INT | 'S' INT
//!             | 'E27' | 'M16' | semidirect
//! semidirect := 'C' INT ':' 'C' INT '[' INT ']'
//! ```
//!
//! In `Cm:Cn[k]` the first factor acts on the second by `x -> x^k`. `D` and
//! `Q` take the group order, `A` and `S` the degree. Whitespace between
//! tokens is ignored.

use thiserror::Error;

use crate::group::{Group, GroupError, GroupSpec, NamedGroup};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error("cannot build group: {0}")]
    Semantic(#[from] GroupError),
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.char_indices().collect(),
            pos: 0,
            src,
        }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.error(format!("expected '{want}', found '{c}'")),
            None => self.error(format!("expected '{want}', found end of input")),
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            self.pos = start;
            return self.error("expected an integer");
        }
        let text: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        text.parse().or_else(|_| {
            self.pos = start;
            self.error("integer too large")
        })
    }

    fn spec(&mut self) -> Result<GroupSpec, ParseError> {
        let mut terms = vec![self.term()?];
        while let Some(c) = self.peek() {
            if c != 'x' {
                return self.error(format!("expected 'x' or end of input, found '{c}'"));
            }
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            GroupSpec::Product(terms)
        })
    }

    fn term(&mut self) -> Result<GroupSpec, ParseError> {
        let Some(c) = self.peek() else {
            return self.error("expected a group, found end of input");
        };
        let at = self.pos;
        self.pos += 1;
        match c {
            'C' => {
                let n = self.int()?;
                if self.peek() == Some(':') {
                    self.pos += 1;
                    self.expect('C')?;
                    let base = self.int()?;
                    self.expect('[')?;
                    let multiplier = self.int()?;
                    self.expect(']')?;
                    Ok(GroupSpec::Semidirect {
                        actor: n,
                        base,
                        multiplier,
                    })
                } else {
                    Ok(GroupSpec::Cyclic(n))
                }
            }
            'D' => Ok(GroupSpec::Dihedral(self.int()?)),
            'Q' => Ok(GroupSpec::Quaternion(self.int()?)),
            'A' => Ok(GroupSpec::Alternating(self.int()?)),
            'S' => Ok(GroupSpec::Symmetric(self.int()?)),
            'E' | 'M' => {
                let n = self.int()?;
                match (c, n) {
                    ('E', 27) => Ok(GroupSpec::Named(NamedGroup::E27)),
                    ('M', 16) => Ok(GroupSpec::Named(NamedGroup::M16)),
                    _ => {
                        self.pos = at;
                        self.error(format!("unknown named group {c}{n}"))
                    }
                }
            }
            other => {
                self.pos = at;
                self.error(format!("unexpected '{other}'"))
            }
        }
    }
}

pub fn parse_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut p = Parser::new(text);
    p.spec()
}

/// Parses and constructs, labelling the group with the input text.
pub fn build_spec(text: &str) -> Result<Group, SpecError> {
    let spec = parse_spec(text)?;
    Ok(spec.build()?.with_label(text.trim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::count_subgroups;
    use proptest::prelude::*;

    #[test]
    fn parses_terms() {
        assert_eq!(parse_spec("C1").unwrap(), GroupSpec::Cyclic(1));
        assert_eq!(
            parse_spec("C2:C3[2]").unwrap(),
            GroupSpec::Semidirect { actor: 2, base: 3, multiplier: 2 }
        );
        assert_eq!(
            parse_spec("S3 x C5").unwrap(),
            GroupSpec::Product(vec![GroupSpec::Symmetric(3), GroupSpec::Cyclic(5)])
        );
        assert_eq!(parse_spec("E27").unwrap(), GroupSpec::Named(NamedGroup::E27));
        assert_eq!(
            parse_spec("C2xC4:C3[2]").unwrap(),
            GroupSpec::Product(vec![
                GroupSpec::Cyclic(2),
                GroupSpec::Semidirect { actor: 4, base: 3, multiplier: 2 }
            ])
        );
    }

    #[test]
    fn builds_groups() {
        let s3 = build_spec("C2:C3[2]").unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(build_spec("C1").unwrap().order(), 1);
        let m16 = build_spec("C2:C8[5]").unwrap();
        assert_eq!(count_subgroups(&m16), 11);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse_spec("C2 x Z3").unwrap_err();
        assert_eq!(e.position, 5);
        let e = parse_spec("C2:C3").unwrap_err();
        assert_eq!(e.position, 5);
        assert!(e.message.contains("'['"));
        let e = parse_spec("E28").unwrap_err();
        assert_eq!(e.position, 0);
        let e = parse_spec("").unwrap_err();
        assert_eq!(e.position, 0);
        let e = parse_spec("C4 C5").unwrap_err();
        assert_eq!(e.position, 3);
        assert!(parse_spec("C99999999999999999999999").is_err());
    }

    #[test]
    fn semantic_errors_are_distinct() {
        assert!(matches!(
            build_spec("C2:C5[2]"),
            Err(SpecError::Semantic(GroupError::InvalidMultiplier { .. }))
        ));
        assert!(matches!(
            build_spec("C600"),
            Err(SpecError::Semantic(GroupError::TooLarge { .. }))
        ));
        assert!(matches!(build_spec("C2:"), Err(SpecError::Syntax(_))));
    }

    fn arb_term() -> impl Strategy<Value = GroupSpec> {
        prop_oneof![
            (1usize..50).prop_map(GroupSpec::Cyclic),
            (2usize..20).prop_map(|n| GroupSpec::Dihedral(2 * n)),
            (3u32..6).prop_map(|e| GroupSpec::Quaternion(1 << e)),
            (1usize..6).prop_map(GroupSpec::Alternating),
            (1usize..5).prop_map(GroupSpec::Symmetric),
            Just(GroupSpec::Named(NamedGroup::E27)),
            Just(GroupSpec::Named(NamedGroup::M16)),
            (1usize..9, 1usize..9, 1usize..9).prop_map(|(actor, base, multiplier)| {
                GroupSpec::Semidirect { actor, base, multiplier }
            }),
        ]
    }

    proptest! {
        #[test]
        fn display_reparses(terms in proptest::collection::vec(arb_term(), 1..4)) {
            let spec = if terms.len() == 1 {
                terms[0].clone()
            } else {
                GroupSpec::Product(terms)
            };
            prop_assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec);
        }
    }
}
