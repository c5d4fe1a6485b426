//! Partially cyclically ordered groups.
//!
//! Two representations share one interface through [`Pco`]: finite
//! table-backed structures ([`FinitePco`]) and the wound-round of `ℤᵏ` by a
//! strong unit ([`LatticeQuotientPco`]), whose carrier is infinite but whose
//! non-isolated part is a finite box.

mod ac;
mod finite;
mod lattice;
mod unwound;

use std::fmt::Debug;

pub use ac::{canonical_mv, check_ac_class, good_seq_formulas, is_lco, AcReport, AcView, Ext};
pub use finite::{
    abelian_groups_up_to, c_hom_check, co_structures, generated_subgroup, make_cyclic_group,
    make_product_pco, r_from_order, FinitePco, PcoReport,
};
pub use lattice::LatticeQuotientPco;
pub use unwound::{Unwound, UnwoundElement, UnwoundOp, UnwoundValue};

/// Default cap on `|A(C)|ⁿ` for [`good_seq_formulas`].
pub const DEFAULT_FORMULA_CAP: usize = 1 << 20;

/// The operations every representation provides. Everything about `A(C)`,
/// `≤₀` and the canonical MV-algebra is derived from these.
pub trait Pco {
    type Elem: Clone + Ord + Debug;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn rel(&self, x: &Self::Elem, y: &Self::Elem, z: &Self::Elem) -> bool;

    /// `A(C)` with `0` first, in a fixed deterministic order.
    fn non_isolated(&self) -> Vec<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// `x ≤₀ y`: `0` is the least element, otherwise `R(0,x,y)` or `x = y`.
    fn leq0(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        let z = self.zero();
        x == y || *x == z || self.rel(&z, x, y)
    }

    fn lt0(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        x != y && self.leq0(x, y)
    }

    fn describe(&self, e: &Self::Elem) -> String {
        format!("{e:?}")
    }
}
