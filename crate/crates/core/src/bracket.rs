//! Bracket strings and stack cancellation.
//!
//! Every operator in this crate locates its action through a string of `(`
//! and `)` tokens. A `(` followed (possibly across canceled tokens) by a `)`
//! cancels; what survives always reads `)))...(((`.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bracket {
    Open,
    Close,
}

impl Bracket {
    pub fn symbol(self) -> char {
        match self {
            Bracket::Open => '(',
            Bracket::Close => ')',
        }
    }
}

/// Which rule produced a bracket string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BracketKind {
    /// `S_i(M)` on multisegments.
    Normal,
    /// `S_i^*(M)` on multisegments.
    Star,
    /// The column rule on tableaux.
    Column,
}

/// One bracket, tied to the site (segment copy or column) that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketToken<S> {
    pub site: S,
    pub symbol: Bracket,
    pub canceled: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketString<S> {
    kind: BracketKind,
    index: usize,
    tokens: Vec<BracketToken<S>>,
}

impl<S> BracketString<S> {
    /// Builds a string from tokens already in left-to-right order and marks
    /// cancellations: `(` pushes, `)` cancels the most recent unmatched `(`.
    pub fn new(kind: BracketKind, index: usize, tokens: impl IntoIterator<Item = (S, Bracket)>) -> Self {
        let mut tokens: Vec<BracketToken<S>> = tokens
            .into_iter()
            .map(|(site, symbol)| BracketToken { site, symbol, canceled: false })
            .collect();
        let mut open = Vec::new();
        for k in 0..tokens.len() {
            match tokens[k].symbol {
                Bracket::Open => open.push(k),
                Bracket::Close => {
                    if let Some(j) = open.pop() {
                        tokens[j].canceled = true;
                        tokens[k].canceled = true;
                    }
                }
            }
        }
        BracketString { kind, index, tokens }
    }

    pub fn kind(&self) -> BracketKind {
        self.kind
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn tokens(&self) -> &[BracketToken<S>] {
        &self.tokens
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn uncanceled(&self) -> impl Iterator<Item = &BracketToken<S>> {
        self.tokens.iter().filter(|t| !t.canceled)
    }

    /// Number of uncanceled `(`, which is `ε`.
    pub fn uncanceled_open(&self) -> usize {
        self.uncanceled().filter(|t| t.symbol == Bracket::Open).count()
    }

    /// Number of uncanceled `)`.
    pub fn uncanceled_close(&self) -> usize {
        self.uncanceled().filter(|t| t.symbol == Bracket::Close).count()
    }

    /// Site under the right-most uncanceled `)`, where `f` acts.
    pub fn rightmost_uncanceled_close(&self) -> Option<&S> {
        self.uncanceled().filter(|t| t.symbol == Bracket::Close).last().map(|t| &t.site)
    }

    /// Site under the left-most uncanceled `(`, where `e` acts.
    pub fn leftmost_uncanceled_open(&self) -> Option<&S> {
        self.uncanceled().find(|t| t.symbol == Bracket::Open).map(|t| &t.site)
    }

    /// The bare symbols, e.g. `")(()"`.
    pub fn symbols(&self) -> String {
        self.tokens.iter().map(|t| t.symbol.symbol()).collect()
    }

    /// The reduced word `uc`, e.g. `"))(("`.
    pub fn reduced_symbols(&self) -> String {
        self.uncanceled().map(|t| t.symbol.symbol()).collect()
    }
}

impl<S> fmt::Display for BracketString<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.tokens.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if t.canceled {
                write!(f, "[{}]", t.symbol.symbol())?;
            } else {
                write!(f, "{}", t.symbol.symbol())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_str(s: &str) -> BracketString<usize> {
        let toks = s.chars().enumerate().map(|(k, c)| (k, if c == '(' { Bracket::Open } else { Bracket::Close }));
        BracketString::new(BracketKind::Column, 1, toks)
    }

    #[test]
    fn column_string_with_open_and_close() {
        let s = from_str(")()((");
        assert_eq!(s.reduced_symbols(), ")((");
        assert_eq!(s.uncanceled_open(), 2);
        assert_eq!(s.rightmost_uncanceled_close(), Some(&0));
        assert_eq!(s.leftmost_uncanceled_open(), Some(&3));
    }

    #[test]
    fn nested_cancellation() {
        let s = from_str("(())");
        assert_eq!(s.reduced_symbols(), "");
        let s = from_str("(()");
        assert_eq!(s.reduced_symbols(), "(");
        assert_eq!(s.leftmost_uncanceled_open(), Some(&0));
    }

    #[test]
    fn empty_string() {
        let s = from_str("");
        assert!(s.is_empty());
        assert_eq!(s.rightmost_uncanceled_close(), None);
        assert_eq!(s.leftmost_uncanceled_open(), None);
    }

    proptest! {
        #[test]
        fn reduced_form_is_closes_then_opens(word in "[()]{0,40}") {
            let s = from_str(&word);
            let red = s.reduced_symbols();
            let closes = red.chars().take_while(|&c| c == ')').count();
            prop_assert!(red[closes..].chars().all(|c| c == '('));
            // net count is preserved by cancellation
            let opens = word.chars().filter(|&c| c == '(').count() as i64;
            let total_closes = word.len() as i64 - opens;
            prop_assert_eq!(s.uncanceled_open() as i64 - s.uncanceled_close() as i64, opens - total_closes);
        }
    }
}
