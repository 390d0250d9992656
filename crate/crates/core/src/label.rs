use alloc::string::ToString;
use alloc::sync::Arc;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A leaf label: a nonempty word over `[A-Za-z0-9_]`, ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Arc<str>);

pub(crate) fn is_label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl Label {
    pub fn new(symbol: &str) -> Result<Self> {
        if symbol.is_empty() || !symbol.chars().all(is_label_char) {
            return Err(Error::InvalidLabel(symbol.to_string()));
        }
        Ok(Label(Arc::from(symbol)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Label::new(s)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Builds labels from a list of symbols, rejecting duplicates.
pub fn labels<S: AsRef<str>>(symbols: &[S]) -> Result<alloc::vec::Vec<Label>> {
    let mut out = alloc::vec::Vec::with_capacity(symbols.len());
    let mut seen = alloc::collections::BTreeSet::new();
    for s in symbols {
        let l = Label::new(s.as_ref())?;
        if !seen.insert(l.clone()) {
            return Err(Error::DuplicateLabel(l));
        }
        out.push(l);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_symbols() {
        assert!(Label::new("").is_err());
        assert!(Label::new("a-b").is_err());
        assert!(Label::new("a b").is_err());
        assert_eq!(Label::new("x_1").unwrap().as_str(), "x_1");
    }

    #[test]
    fn lexicographic_order() {
        let a = Label::new("a").unwrap();
        let b = Label::new("b").unwrap();
        let a10 = Label::new("a10").unwrap();
        let a2 = Label::new("a2").unwrap();
        assert!(a < b);
        assert!(a10 < a2);
    }

    #[test]
    fn labels_rejects_duplicates() {
        assert_eq!(
            labels(&["a", "b", "a"]),
            Err(Error::DuplicateLabel(Label::new("a").unwrap()))
        );
    }
}
