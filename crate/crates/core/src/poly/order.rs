use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "degrevlex" | "grevlex" => Ok(OrderKind::DegRevLex),
            other => Err(Error::InvalidContext(format!("unknown monomial order `{other}`"))),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::DegRevLex => "degrevlex",
        })
    }
}

/// A monomial order together with a variable priority.
///
/// `priority[0]` is the most significant variable. With the identity priority,
/// lex compares `X1 > X2 > ... > Xn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(n: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority: (0..n).collect() }
    }

    pub fn degrevlex(n: usize) -> Self {
        MonomialOrder { kind: OrderKind::DegRevLex, priority: (0..n).collect() }
    }

    pub fn new(kind: OrderKind, n: usize) -> Self {
        MonomialOrder { kind, priority: (0..n).collect() }
    }

    /// Order with an explicit variable priority; `priority` must permute `0..n`.
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &v in &priority {
            if v >= priority.len() || seen[v] {
                return Err(Error::InvalidContext(format!("{priority:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder { kind, priority })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn arity(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.priority {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for &v in self.priority.iter().rev() {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}
