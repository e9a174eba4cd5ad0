//! Descriptional-complexity measures of conditional matrix grammars.

use std::fmt;

use crate::grammar::ScmGrammar;

/// The measure tuple (i, j; n; m, l, s):
/// longest permit word, longest forbid word, nonterminal count,
/// conditional-matrix count, longest matrix, non-simple-matrix count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParameterTuple {
    pub i: usize,
    pub j: usize,
    pub n: usize,
    pub m: usize,
    pub l: usize,
    pub s: usize,
}

impl ParameterTuple {
    /// Renders as `i=.. j=.. n=.. m=.. l=.. s=..`.
    pub fn assignments(&self) -> String {
        format!(
            "i={} j={} n={} m={} l={} s={}",
            self.i, self.j, self.n, self.m, self.l, self.s
        )
    }
}

impl fmt::Display for ParameterTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{};{};{},{},{})",
            self.i, self.j, self.n, self.m, self.l, self.s
        )
    }
}

/// A componentwise bound on measure tuples; `None` leaves a component free.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleBound {
    pub i: Option<usize>,
    pub j: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub l: Option<usize>,
    pub s: Option<usize>,
}

impl TupleBound {
    /// Componentwise `<=` against every constrained component.
    pub fn admits(&self, t: &ParameterTuple) -> bool {
        fn ok(bound: Option<usize>, value: usize) -> bool {
            bound.is_none_or(|b| value <= b)
        }
        ok(self.i, t.i)
            && ok(self.j, t.j)
            && ok(self.n, t.n)
            && ok(self.m, t.m)
            && ok(self.l, t.l)
            && ok(self.s, t.s)
    }

    /// Componentwise equality against every constrained component.
    pub fn matches_exactly(&self, t: &ParameterTuple) -> bool {
        fn ok(bound: Option<usize>, value: usize) -> bool {
            bound.is_none_or(|b| value == b)
        }
        ok(self.i, t.i)
            && ok(self.j, t.j)
            && ok(self.n, t.n)
            && ok(self.m, t.m)
            && ok(self.l, t.l)
            && ok(self.s, t.s)
    }
}

impl fmt::Display for TupleBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn part(bound: Option<usize>) -> String {
            bound.map_or_else(|| "*".to_string(), |b| b.to_string())
        }
        write!(
            f,
            "({},{};{};{},{},{})",
            part(self.i),
            part(self.j),
            part(self.n),
            part(self.m),
            part(self.l),
            part(self.s)
        )
    }
}

/// Computes the measure tuple of a grammar.
pub fn metrics(grammar: &ScmGrammar) -> ParameterTuple {
    let mut t = ParameterTuple { i: 0, j: 0, n: grammar.nonterminals().len(), m: 0, l: 0, s: 0 };
    for matrix in grammar.matrices() {
        t.l = t.l.max(matrix.len());
        if let Some(p) = matrix.permit() {
            t.i = t.i.max(p.len());
        }
        if let Some(f) = matrix.forbid() {
            t.j = t.j.max(f.len());
        }
        if !matrix.is_unconditional() {
            t.m += 1;
        }
        if !matrix.is_simple() {
            t.s += 1;
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::grammar::{CfRule, Matrix};
    use crate::symbol::{Symbol, Word};

    fn sample() -> ScmGrammar {
        let terminals: BTreeSet<Symbol> = [Symbol::new("a")].into();
        let nonterminals: BTreeSet<Symbol> =
            [Symbol::new("S"), Symbol::new("A"), Symbol::new("B")].into();
        let unconditional = Matrix::new(
            "m1",
            vec![CfRule::new(Symbol::new("S"), Word::from_chars("AB"))],
            None,
            None,
        )
        .unwrap();
        let simple = Matrix::new(
            "m2",
            vec![
                CfRule::new(Symbol::new("A"), Word::empty()),
                CfRule::new(Symbol::new("B"), Word::empty()),
            ],
            Some(Word::from_chars("AB")),
            None,
        )
        .unwrap();
        let non_simple = Matrix::new(
            "m3",
            vec![CfRule::new(Symbol::new("A"), Word::from_chars("a"))],
            Some(Word::from_chars("AAA")),
            Some(Word::from_chars("B")),
        )
        .unwrap();
        ScmGrammar::new(
            terminals,
            nonterminals,
            Symbol::new("S"),
            vec![unconditional, simple, non_simple],
        )
        .unwrap()
    }

    #[test]
    fn tuple_counts_each_measure() {
        let t = metrics(&sample());
        assert_eq!(t, ParameterTuple { i: 3, j: 1, n: 3, m: 2, l: 2, s: 1 });
        assert_eq!(t.to_string(), "(3,1;3;2,2,1)");
        assert_eq!(t.assignments(), "i=3 j=1 n=3 m=2 l=2 s=1");
    }

    #[test]
    fn bounds_compare_componentwise() {
        let t = metrics(&sample());
        let exact = TupleBound {
            i: Some(3),
            j: Some(1),
            n: Some(3),
            m: Some(2),
            l: Some(2),
            s: Some(1),
        };
        assert!(exact.admits(&t));
        assert!(exact.matches_exactly(&t));
        let starred = TupleBound { i: Some(3), j: None, n: Some(3), m: None, l: None, s: Some(1) };
        assert!(starred.matches_exactly(&t));
        assert_eq!(starred.to_string(), "(3,*;3;*,*,1)");
        let tight = TupleBound { i: Some(2), ..exact };
        assert!(!tight.admits(&t));
    }
}
