//! Good sequences over a finite MV-algebra and the Chang group built from them.
//!
//! A good sequence `(x₁, x₂, …)` satisfies `xᵢ ⊕ xᵢ₊₁ = xᵢ` and is eventually
//! zero. Under the sum below they form a cancellative monoid whose
//! Grothendieck group is the Chang group; its elements are stored as
//! `pos − neg` pairs with `pos ∧ neg = 0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::mv::MvAlgebra;

pub fn is_good_sequence(base: &MvAlgebra, terms: &[usize]) -> bool {
    terms
        .windows(2)
        .all(|w| base.oplus(w[0], w[1]) == w[0])
}

#[derive(Clone)]
pub struct GoodSequence<'a> {
    base: &'a MvAlgebra,
    terms: Vec<usize>,
}

impl PartialEq for GoodSequence<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.base, other.base) && self.terms == other.terms
    }
}

impl Eq for GoodSequence<'_> {}

impl fmt::Debug for GoodSequence<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("GoodSequence").field(&self.terms).finish()
    }
}

impl<'a> GoodSequence<'a> {
    /// Validates goodness and trims trailing zeros.
    pub fn new(base: &'a MvAlgebra, terms: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = terms.iter().find(|&&t| t >= base.size()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: base.size(),
            });
        }
        if !is_good_sequence(base, &terms) {
            return Err(Error::MalformedTable(format!(
                "{terms:?} is not a good sequence"
            )));
        }
        Ok(Self::trimmed(base, terms))
    }

    fn trimmed(base: &'a MvAlgebra, mut terms: Vec<usize>) -> Self {
        while terms.last() == Some(&base.zero()) {
            terms.pop();
        }
        GoodSequence { base, terms }
    }

    pub fn empty(base: &'a MvAlgebra) -> Self {
        GoodSequence {
            base,
            terms: Vec::new(),
        }
    }

    /// `(x, 0, 0, …)`.
    pub fn singleton(base: &'a MvAlgebra, x: usize) -> Result<Self> {
        Self::new(base, vec![x])
    }

    pub fn base(&self) -> &'a MvAlgebra {
        self.base
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The i-th term, zero beyond the stored prefix (0-based).
    pub fn term(&self, i: usize) -> usize {
        self.terms.get(i).copied().unwrap_or(self.base.zero())
    }

    fn same_base(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.base, other.base) {
            Ok(())
        } else {
            Err(Error::BaseMismatch)
        }
    }

    /// `zᵢ = xᵢ ⊕ (xᵢ₋₁ ⊙ y₁) ⊕ ⋯ ⊕ (x₁ ⊙ yᵢ₋₁) ⊕ yᵢ`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_base(other)?;
        let a = self.base;
        let n = self.len() + other.len();
        // 1-based with x₀ = y₀ = 1 so that every summand is xⱼ ⊙ yᵢ₋ⱼ.
        let x = |j: usize| if j == 0 { a.one() } else { self.term(j - 1) };
        let y = |j: usize| if j == 0 { a.one() } else { other.term(j - 1) };
        let terms = (1..=n)
            .map(|i| (0..=i).fold(a.zero(), |acc, j| a.oplus(acc, a.odot(x(j), y(i - j)))))
            .collect();
        Ok(Self::trimmed(a, terms))
    }

    /// The `z` with `other + z = self`, via `self + (¬xₙ, …, ¬x₁)` with the
    /// `n` leading `1`s removed.
    pub fn subtract(&self, other: &Self) -> Result<Self> {
        self.same_base(other)?;
        let a = self.base;
        let complement: Vec<usize> = other.terms.iter().rev().map(|&t| a.neg(t)).collect();
        let shifted = self.add(&Self::trimmed(a, complement))?;
        let n = other.len();
        if (0..n).any(|i| shifted.term(i) != a.one()) {
            return Err(Error::NotLeq);
        }
        let rest = shifted.terms.get(n..).unwrap_or_default().to_vec();
        Ok(Self::trimmed(a, rest))
    }

    /// Monoid order: `self ≤ other` iff `other = self + z` for some `z`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        match other.subtract(self) {
            Ok(_) => Ok(true),
            Err(Error::NotLeq) => Ok(false),
            Err(e) => Err(e),
        }
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.componentwise(other, MvAlgebra::meet)
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.componentwise(other, MvAlgebra::join)
    }

    fn componentwise(&self, other: &Self, op: fn(&MvAlgebra, usize, usize) -> usize) -> Result<Self> {
        self.same_base(other)?;
        let n = self.len().max(other.len());
        let terms = (0..n)
            .map(|i| op(self.base, self.term(i), other.term(i)))
            .collect();
        Ok(Self::trimmed(self.base, terms))
    }
}

/// The good sequence whose sum equals the sum of `parts`, each read as
/// `(x, 0, …)`.
pub fn good_decompose<'a>(base: &'a MvAlgebra, parts: &[usize]) -> Result<GoodSequence<'a>> {
    parts.iter().try_fold(GoodSequence::empty(base), |acc, &x| {
        acc.add(&GoodSequence::singleton(base, x)?)
    })
}

/// A Chang group element `pos − neg` in normal form (`pos ∧ neg = 0`).
#[derive(Clone, PartialEq, Eq)]
pub struct ChangElement<'a> {
    pos: GoodSequence<'a>,
    neg: GoodSequence<'a>,
}

impl fmt::Debug for ChangElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} - {:?}", self.pos.terms, self.neg.terms)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChangOp {
    Add,
    Neg,
    Meet,
    Join,
    Leq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChangValue<'a> {
    Element(ChangElement<'a>),
    Bool(bool),
}

impl<'a> ChangElement<'a> {
    pub fn normalize(pos: GoodSequence<'a>, neg: GoodSequence<'a>) -> Result<Self> {
        let m = pos.meet(&neg)?;
        Ok(ChangElement {
            pos: pos.subtract(&m)?,
            neg: neg.subtract(&m)?,
        })
    }

    pub fn zero(base: &'a MvAlgebra) -> Self {
        ChangElement {
            pos: GoodSequence::empty(base),
            neg: GoodSequence::empty(base),
        }
    }

    pub fn from_positive(pos: GoodSequence<'a>) -> Self {
        let neg = GoodSequence::empty(pos.base);
        ChangElement { pos, neg }
    }

    pub fn pos(&self) -> &GoodSequence<'a> {
        &self.pos
    }

    pub fn neg_part(&self) -> &GoodSequence<'a> {
        &self.neg
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::normalize(self.pos.add(&other.pos)?, self.neg.add(&other.neg)?)
    }

    pub fn negate(&self) -> Self {
        ChangElement {
            pos: self.neg.clone(),
            neg: self.pos.clone(),
        }
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        Ok(other.add(&self.negate())?.neg.is_empty())
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.shifted_lattice_op(other, GoodSequence::meet)
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.shifted_lattice_op(other, GoodSequence::join)
    }

    /// Translates both operands by `s = a₋ + b₋` so they become good
    /// sequences, applies `op` there and translates back.
    fn shifted_lattice_op(
        &self,
        other: &Self,
        op: fn(&GoodSequence<'a>, &GoodSequence<'a>) -> Result<GoodSequence<'a>>,
    ) -> Result<Self> {
        let shift = self.neg.add(&other.neg)?;
        let a = self.pos.add(&other.neg)?;
        let b = other.pos.add(&self.neg)?;
        Self::normalize(op(&a, &b)?, shift)
    }

    pub fn apply(&self, op: ChangOp, other: &Self) -> Result<ChangValue<'a>> {
        self.pos.same_base(&other.pos)?;
        Ok(match op {
            ChangOp::Add => ChangValue::Element(self.add(other)?),
            ChangOp::Neg => ChangValue::Element(self.negate()),
            ChangOp::Meet => ChangValue::Element(self.meet(other)?),
            ChangOp::Join => ChangValue::Element(self.join(other)?),
            ChangOp::Leq => ChangValue::Bool(self.leq(other)?),
        })
    }
}
