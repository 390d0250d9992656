//! One-line text form of forests.
//!
//! ```text
//! forest := tree ('|' tree)*
//! tree   := label | '(' tree ',' tree ')'
//! ```
//!
//! Whitespace is ignored. Formatting always emits the canonical form, so
//! parsing a formatted forest gives back the same value.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::label::{is_label_char, Label};
use crate::tree::Tree;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    seen: BTreeSet<Label>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            pos: 0,
            seen: BTreeSet::new(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(alloc::format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(alloc::format!("expected `{want}`, found end of input"))),
        }
    }

    fn tree(&mut self) -> Result<Tree> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let left = self.tree()?;
                self.expect(',')?;
                let right = self.tree()?;
                self.expect(')')?;
                Ok(Tree::graft_disjoint(left, right))
            }
            Some(c) if is_label_char(c) => {
                let start = self.pos;
                let len = self.src[start..]
                    .find(|c: char| !is_label_char(c))
                    .unwrap_or(self.src.len() - start);
                self.pos += len;
                let label = Label::new(&self.src[start..self.pos])?;
                if !self.seen.insert(label.clone()) {
                    return Err(Error::DuplicateLabel(label));
                }
                Ok(Tree::leaf(label))
            }
            Some(c) => Err(self.error(alloc::format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn forest(&mut self) -> Result<Forest> {
        let mut trees = alloc::vec![self.tree()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            trees.push(self.tree()?);
        }
        if let Some(c) = self.peek() {
            return Err(self.error(alloc::format!("trailing `{c}`")));
        }
        Ok(Forest::from_disjoint(trees))
    }
}

pub fn parse_forest(text: &str) -> Result<Forest> {
    Parser::new(text).forest()
}

pub fn parse_tree(text: &str) -> Result<Tree> {
    let forest = parse_forest(text)?;
    match forest.as_tree() {
        Some(t) => Ok(t.clone()),
        None => Err(Error::Syntax {
            position: 0,
            message: "expected a single tree".to_string(),
        }),
    }
}

impl FromStr for Forest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_forest(s)
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.children() {
            None => write!(f, "{}", self.as_leaf().unwrap()),
            Some((l, r)) => write!(f, "({l},{r})"),
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.trees().iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Forest({self})")
    }
}

/// The nested-array view of a tree: a leaf is its label, a node is a pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Nested {
    Leaf(String),
    Node(alloc::boxed::Box<Nested>, alloc::boxed::Box<Nested>),
}

impl From<&Tree> for Nested {
    fn from(t: &Tree) -> Self {
        match t.children() {
            None => Nested::Leaf(t.as_leaf().unwrap().as_str().to_string()),
            Some((l, r)) => Nested::Node(
                alloc::boxed::Box::new(l.into()),
                alloc::boxed::Box::new(r.into()),
            ),
        }
    }
}

impl Forest {
    pub fn to_nested(&self) -> Vec<Nested> {
        self.trees().iter().map(Nested::from).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parses_examples() {
        let f = parse_forest("a").unwrap();
        assert_eq!(f.tree_count(), 1);
        assert!(f.trees()[0].is_leaf());

        let f = parse_forest("(a,b)|c").unwrap();
        assert_eq!(f.tree_count(), 2);
        assert_eq!(f.to_string(), "(a,b)|c");

        let f = parse_forest(" ( (b , a) ,c ) ").unwrap();
        assert_eq!(f.to_string(), "((a,b),c)");
        assert_eq!(parse_forest(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(parse_forest("(b,a)").unwrap().to_string(), "(a,b)");
        assert_eq!(parse_forest("(c,d)|a").unwrap().to_string(), "a|(c,d)");
        assert_eq!(
            parse_forest("(d,(c,b))|a").unwrap().to_string(),
            "a|((b,c),d)"
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(
            parse_forest("(a,b"),
            Err(Error::Syntax {
                position: 4,
                message: "expected `)`, found end of input".into()
            })
        );
        assert!(matches!(
            parse_forest("(a;b)"),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_forest(""),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_forest("a|"),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_forest("a b"),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(parse_forest("(a,b,c)"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn duplicate_labels_are_named() {
        assert_eq!(
            parse_forest("(a,b)|a"),
            Err(Error::DuplicateLabel(Label::new("a").unwrap()))
        );
    }

    #[test]
    fn multi_character_labels() {
        let f = parse_forest("(x10,x2)|leaf_3").unwrap();
        assert_eq!(f.to_string(), "leaf_3|(x10,x2)");
    }

    #[test]
    fn nested_view() {
        let f = parse_forest("((a,b),c)").unwrap();
        let n = f.to_nested();
        assert_eq!(n.len(), 1);
        match &n[0] {
            Nested::Node(l, r) => {
                assert!(matches!(**l, Nested::Node(..)));
                assert_eq!(**r, Nested::Leaf("c".into()));
            }
            _ => panic!("expected node"),
        }
    }
}
