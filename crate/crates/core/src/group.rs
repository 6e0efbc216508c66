//! Vertex groups with exact arithmetic and their canonical proper,
//! symmetric, conditionally negative definite functions.
//!
//! Three families are supported:
//!
//! | kind            | elements                     | `phi`             |
//! |-----------------|------------------------------|-------------------|
//! | `Cyclic(n)`     | residues in `[0, n)`         | discrete metric   |
//! | `Integers`      | signed integers              | absolute value    |
//! | `Free(k)`       | freely reduced words         | word length       |
//!
//! The Hilbert-space map `R_v` with `phi(h^-1 g) = ||R_v(g) - R_v(h)||^2` and
//! `R_v(e) = 0` is never materialised; [`GroupKind::inner`] recovers its inner
//! products by polarization.

use std::fmt;

use crate::error::{Error, Result};

/// Descriptor of a vertex group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// `Z/n`, `n >= 2`.
    Cyclic(u64),
    /// `Z`.
    Integers,
    /// Free group of rank `k >= 1` on generators `x1 .. xk`.
    Free(u32),
}

/// Element payload. Which variant is legal depends on the owning [`GroupKind`].
///
/// Free-group words store letters as signed generator indices: `i` for `x_i`,
/// `-i` for `x_i^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexElement {
    Residue(u64),
    Int(i64),
    Word(Vec<i32>),
}

impl VertexElement {
    /// Value of the vertex group's CND function. Depends only on the payload,
    /// so the owning group does not need to be known.
    pub fn weight(&self) -> u64 {
        match self {
            VertexElement::Residue(r) => u64::from(*r != 0),
            VertexElement::Int(a) => a.unsigned_abs(),
            VertexElement::Word(w) => w.len() as u64,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.weight() == 0
    }
}

impl fmt::Display for VertexElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexElement::Residue(r) => write!(f, "{r}"),
            VertexElement::Int(a) => write!(f, "{a}"),
            VertexElement::Word(w) if w.is_empty() => f.write_str("e"),
            VertexElement::Word(w) => {
                for (i, &letter) in w.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "x{}", letter.unsigned_abs())?;
                    if letter < 0 {
                        f.write_str("^-1")?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(n) => write!(f, "Z/{n}"),
            GroupKind::Integers => f.write_str("Z"),
            GroupKind::Free(k) => write!(f, "F{k}"),
        }
    }
}

/// Appends `letter` to a freely reduced word, cancelling against the tail.
fn push_reduced(word: &mut Vec<i32>, letter: i32) {
    if word.last() == Some(&-letter) {
        word.pop();
    } else {
        word.push(letter);
    }
}

impl GroupKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GroupKind::Cyclic(n) if n < 2 => Err(Error::InvalidGroup(format!(
                "cyclic group order must be at least 2, got {n}"
            ))),
            GroupKind::Free(0) => Err(Error::InvalidGroup(
                "free group rank must be at least 1".into(),
            )),
            GroupKind::Free(k) if k > i32::MAX as u32 => {
                Err(Error::InvalidGroup(format!("free group rank {k} too large")))
            }
            _ => Ok(()),
        }
    }

    /// Whether the group has finitely many elements.
    pub fn is_finite(&self) -> bool {
        matches!(self, GroupKind::Cyclic(_))
    }

    pub fn identity(&self) -> VertexElement {
        match self {
            GroupKind::Cyclic(_) => VertexElement::Residue(0),
            GroupKind::Integers => VertexElement::Int(0),
            GroupKind::Free(_) => VertexElement::Word(Vec::new()),
        }
    }

    pub fn contains(&self, a: &VertexElement) -> bool {
        match (self, a) {
            (GroupKind::Cyclic(n), VertexElement::Residue(r)) => r < n,
            (GroupKind::Integers, VertexElement::Int(_)) => true,
            (GroupKind::Free(k), VertexElement::Word(w)) => {
                w.iter()
                    .all(|&x| x != 0 && x.unsigned_abs() <= *k)
                    && w.windows(2).all(|p| p[0] != -p[1])
            }
            _ => false,
        }
    }

    pub fn check(&self, a: &VertexElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::Domain {
                group: self.to_string(),
                element: format!("{a:?}"),
            })
        }
    }

    pub fn multiply(&self, a: &VertexElement, b: &VertexElement) -> Result<VertexElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (GroupKind::Cyclic(n), VertexElement::Residue(x), VertexElement::Residue(y)) => {
                // x, y < n, so x + (y - n) wraps at most once.
                let s = if *x >= n - y { x - (n - y) } else { x + y };
                VertexElement::Residue(s)
            }
            (GroupKind::Integers, VertexElement::Int(x), VertexElement::Int(y)) => {
                VertexElement::Int(x.checked_add(*y).ok_or(Error::Overflow)?)
            }
            (GroupKind::Free(_), VertexElement::Word(x), VertexElement::Word(y)) => {
                let mut w = x.clone();
                for &letter in y {
                    push_reduced(&mut w, letter);
                }
                VertexElement::Word(w)
            }
            _ => unreachable!("membership checked above"),
        })
    }

    pub fn inverse(&self, a: &VertexElement) -> Result<VertexElement> {
        self.check(a)?;
        Ok(match (self, a) {
            (GroupKind::Cyclic(n), VertexElement::Residue(x)) => {
                VertexElement::Residue(if *x == 0 { 0 } else { n - x })
            }
            (GroupKind::Integers, VertexElement::Int(x)) => {
                VertexElement::Int(x.checked_neg().ok_or(Error::Overflow)?)
            }
            (GroupKind::Free(_), VertexElement::Word(w)) => {
                VertexElement::Word(w.iter().rev().map(|x| -x).collect())
            }
            _ => unreachable!("membership checked above"),
        })
    }

    /// The proper symmetric CND function carried by this group.
    pub fn phi(&self, a: &VertexElement) -> f64 {
        debug_assert!(self.contains(a), "{a:?} not in {self}");
        a.weight() as f64
    }

    /// Symmetric generating set. `Z/2` has the single self-inverse generator.
    pub fn generators(&self) -> Vec<VertexElement> {
        match *self {
            GroupKind::Cyclic(2) => vec![VertexElement::Residue(1)],
            GroupKind::Cyclic(n) => vec![VertexElement::Residue(1), VertexElement::Residue(n - 1)],
            GroupKind::Integers => vec![VertexElement::Int(1), VertexElement::Int(-1)],
            GroupKind::Free(k) => (1..=k as i32)
                .flat_map(|i| [VertexElement::Word(vec![i]), VertexElement::Word(vec![-i])])
                .collect(),
        }
    }

    /// `<R_v(a), R_v(b)> = (phi(a) + phi(b) - phi(b^-1 a)) / 2`.
    pub fn inner(&self, a: &VertexElement, b: &VertexElement) -> Result<f64> {
        let diff = self.multiply(&self.inverse(b)?, a)?;
        let twice = a.weight() as i128 + b.weight() as i128 - diff.weight() as i128;
        Ok(twice as f64 / 2.0)
    }

    /// Parses an element in this group's text syntax. `offset` is added to
    /// byte positions reported in errors.
    pub fn parse_element(&self, text: &str, offset: usize) -> Result<VertexElement> {
        let trimmed = text.trim();
        let lead = offset + (text.len() - text.trim_start().len());
        if trimmed.is_empty() {
            return Err(Error::parse(lead, "empty element"));
        }
        let element = match self {
            GroupKind::Cyclic(_) => {
                let r: u64 = trimmed
                    .parse()
                    .map_err(|_| Error::parse(lead, format!("expected residue, got `{trimmed}`")))?;
                VertexElement::Residue(r)
            }
            GroupKind::Integers => {
                let a: i64 = trimmed
                    .parse()
                    .map_err(|_| Error::parse(lead, format!("expected integer, got `{trimmed}`")))?;
                VertexElement::Int(a)
            }
            GroupKind::Free(_) if trimmed == "e" => VertexElement::Word(Vec::new()),
            GroupKind::Free(_) => {
                let mut word = Vec::new();
                let mut cursor = 0;
                for token in trimmed.split_whitespace() {
                    let at = lead + trimmed[cursor..].find(token).unwrap() + cursor;
                    cursor = at - lead + token.len();
                    let (base, inverted) = match token.strip_suffix("^-1") {
                        Some(base) => (base, true),
                        None => (token, false),
                    };
                    let index: i32 = base
                        .strip_prefix('x')
                        .and_then(|i| i.parse().ok())
                        .filter(|&i| i > 0)
                        .ok_or_else(|| {
                            Error::parse(at, format!("expected generator like x1 or x1^-1, got `{token}`"))
                        })?;
                    // Input need not be freely reduced.
                    push_reduced(&mut word, if inverted { -index } else { index });
                }
                VertexElement::Word(word)
            }
        };
        self.check(&element)?;
        Ok(element)
    }
}
