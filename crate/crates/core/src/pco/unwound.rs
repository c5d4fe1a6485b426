use super::{FinitePco, Pco};
use crate::error::{Error, Result};

/// `(n, c)` in `ℤ × C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnwoundElement {
    pub n: i64,
    pub c: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnwoundOp {
    Add,
    Leq,
    Unit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnwoundValue {
    Element(UnwoundElement),
    Bool(bool),
}

/// The linearly ordered group `uw(C)` on `ℤ × C` for a finite cyclically
/// ordered group `C`, with unit `(1, 0)`.
#[derive(Clone, Debug)]
pub struct Unwound<'c> {
    c: &'c FinitePco,
}

impl<'c> Unwound<'c> {
    pub fn new(c: &'c FinitePco) -> Result<Self> {
        if !c.is_co() {
            return Err(Error::NotCyclicallyOrdered);
        }
        Ok(Unwound { c })
    }

    pub fn base(&self) -> &'c FinitePco {
        self.c
    }

    pub fn unit(&self) -> UnwoundElement {
        UnwoundElement { n: 1, c: self.c.zero() }
    }

    pub fn element(&self, n: i64, c: usize) -> UnwoundElement {
        UnwoundElement { n, c }
    }

    /// Whether `x + y` wraps past `0` in `C`: false iff `x = y = 0` or
    /// `min₀(x,y) <₀ x+y`.
    pub fn carries(&self, x: usize, y: usize) -> bool {
        let c = self.c;
        let z = c.zero();
        if x == z && y == z {
            return false;
        }
        let min = if c.leq0(&x, &y) { x } else { y };
        !c.lt0(&min, &c.add(x, y))
    }

    pub fn add(&self, a: UnwoundElement, b: UnwoundElement) -> UnwoundElement {
        UnwoundElement {
            n: a.n + b.n + i64::from(self.carries(a.c, b.c)),
            c: self.c.add(a.c, b.c),
        }
    }

    pub fn neg(&self, a: UnwoundElement) -> UnwoundElement {
        let z = self.c.zero();
        if a.c == z {
            UnwoundElement { n: -a.n, c: z }
        } else {
            UnwoundElement {
                n: -a.n - 1,
                c: self.c.neg(a.c),
            }
        }
    }

    /// Lexicographic on `(ℤ, ≤) × (C, ≤₀)`.
    pub fn leq(&self, a: UnwoundElement, b: UnwoundElement) -> bool {
        a.n < b.n || (a.n == b.n && self.c.leq0(&a.c, &b.c))
    }

    pub fn lt(&self, a: UnwoundElement, b: UnwoundElement) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn apply(&self, op: UnwoundOp, a: UnwoundElement, b: UnwoundElement) -> UnwoundValue {
        match op {
            UnwoundOp::Add => UnwoundValue::Element(self.add(a, b)),
            UnwoundOp::Leq => UnwoundValue::Bool(self.leq(a, b)),
            UnwoundOp::Unit => UnwoundValue::Element(self.unit()),
        }
    }

    /// The quotient map `ρ(n, c) = c`.
    pub fn rho(&self, a: UnwoundElement) -> usize {
        a.c
    }

    /// `R` on `C` recovered from `uw(C)` by the winding rule
    /// `x < y + n₂u < z + n₃u < x + u`, using the lifts `(0, c)`.
    pub fn wound_relation(&self, x: usize, y: usize, z: usize) -> bool {
        let u = self.unit();
        let lift = |c: usize| UnwoundElement { n: 0, c };
        let shift = |e: UnwoundElement, k: i64| UnwoundElement { n: e.n + k, c: e.c };
        let (lx, ly, lz) = (lift(x), lift(y), lift(z));
        let top = self.add(lx, u);
        (-1..=1).any(|n2| {
            let y2 = shift(ly, n2);
            self.lt(lx, y2)
                && (-1..=1).any(|n3| {
                    let z3 = shift(lz, n3);
                    self.lt(y2, z3) && self.lt(z3, top)
                })
        })
    }
}
