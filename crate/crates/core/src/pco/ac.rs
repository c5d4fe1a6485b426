use std::collections::BTreeMap;

use serde::Serialize;

use super::Pco;
use crate::error::{Error, Result};
use crate::good_seq::GoodSequence;
use crate::mv::MvAlgebra;
use crate::report::{first_failure, Verdict};

/// An element of `A(C) ∪ {𝟙}`, or of `C` when arithmetic leaves `A(C)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Ext<E> {
    El(E),
    Top,
}

/// `A(C)` with `≤₀` and its lattice operations tabulated. Index `m = |A(C)|`
/// stands for `𝟙`; `0` has index `0`.
pub struct AcView<'c, P: Pco> {
    pco: &'c P,
    elems: Vec<P::Elem>,
    index: BTreeMap<P::Elem, usize>,
    leq: Vec<bool>,
    meet: Vec<Option<usize>>,
    join: Vec<Option<usize>>,
}

impl<'c, P: Pco> AcView<'c, P> {
    pub fn new(pco: &'c P) -> Self {
        let elems = pco.non_isolated();
        let index: BTreeMap<P::Elem, usize> =
            elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let m = elems.len();
        let n = m + 1;
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = i == j || i == 0 || j == m || (i < m && j < m && pco.leq0(&elems[i], &elems[j]));
            }
        }
        let bound = |pick_lower: bool, i: usize, j: usize| -> Option<usize> {
            let is_bound = |k: usize| {
                if pick_lower {
                    leq[k * n + i] && leq[k * n + j]
                } else {
                    leq[i * n + k] && leq[j * n + k]
                }
            };
            let bounds: Vec<usize> = (0..n).filter(|&k| is_bound(k)).collect();
            bounds.iter().copied().find(|&b| {
                bounds
                    .iter()
                    .all(|&o| if pick_lower { leq[o * n + b] } else { leq[b * n + o] })
            })
        };
        let mut meet = vec![None; n * n];
        let mut join = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                meet[i * n + j] = bound(true, i, j);
                join[i * n + j] = bound(false, i, j);
            }
        }
        AcView {
            pco,
            elems,
            index,
            leq,
            meet,
            join,
        }
    }

    pub fn pco(&self) -> &'c P {
        self.pco
    }

    /// `|A(C)|`, not counting `𝟙`.
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[P::Elem] {
        &self.elems
    }

    pub fn index_of(&self, e: &P::Elem) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn top(&self) -> usize {
        self.elems.len()
    }

    fn n(&self) -> usize {
        self.elems.len() + 1
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n() + j]
    }

    pub fn meet_idx(&self, i: usize, j: usize) -> Option<usize> {
        self.meet[i * self.n() + j]
    }

    pub fn join_idx(&self, i: usize, j: usize) -> Option<usize> {
        self.join[i * self.n() + j]
    }

    fn to_ext(&self, i: usize) -> Ext<P::Elem> {
        if i == self.top() {
            Ext::Top
        } else {
            Ext::El(self.elems[i].clone())
        }
    }

    fn ext_index(&self, e: &Ext<P::Elem>) -> Option<usize> {
        match e {
            Ext::Top => Some(self.top()),
            Ext::El(x) => self.index_of(x),
        }
    }

    /// `x ∧₀ y`; an argument outside `A(C)` meets everything at `0`.
    pub fn meet0(&self, a: &Ext<P::Elem>, b: &Ext<P::Elem>) -> Option<Ext<P::Elem>> {
        match (self.ext_index(a), self.ext_index(b)) {
            (Some(i), Some(j)) => self.meet_idx(i, j).map(|k| self.to_ext(k)),
            _ => Some(Ext::El(self.pco.zero())),
        }
    }

    /// `x ∨₀` y in `A(C) ∪ {𝟙}`; `None` if it does not exist.
    pub fn join0(&self, a: &Ext<P::Elem>, b: &Ext<P::Elem>) -> Option<Ext<P::Elem>> {
        let (i, j) = (self.ext_index(a)?, self.ext_index(b)?);
        self.join_idx(i, j).map(|k| self.to_ext(k))
    }

    /// Group addition with `𝟙 + x = x + 𝟙 = x`.
    pub fn add(&self, a: &Ext<P::Elem>, b: &Ext<P::Elem>) -> Ext<P::Elem> {
        match (a, b) {
            (Ext::Top, x) | (x, Ext::Top) => x.clone(),
            (Ext::El(x), Ext::El(y)) => Ext::El(self.pco.add(x, y)),
        }
    }

    fn el(&self, i: usize) -> Ext<P::Elem> {
        self.to_ext(i)
    }

    fn neg_el(&self, i: usize) -> Ext<P::Elem> {
        Ext::El(self.pco.neg(&self.elems[i]))
    }
}

/// `x ∧₀ y` exists on `A(C)` and `0 <₀ x <₀ y ⇔ 0 <₀ −y <₀ −x`.
pub fn is_lco<P: Pco>(c: &P) -> bool {
    let v = AcView::new(c);
    let m = v.len();
    let zero = c.zero();
    (0..m).all(|i| (0..m).all(|j| v.meet_idx(i, j).is_some_and(|k| k < m)))
        && (1..m).all(|i| {
            (1..m).all(|j| {
                let (x, y) = (&v.elems[i], &v.elems[j]);
                let (nx, ny) = (c.neg(x), c.neg(y));
                let lhs = c.lt0(x, y);
                let rhs = ny != zero && c.lt0(&ny, &nx);
                lhs == rhs
            })
        })
}

/// Verdicts for the four conditions under which `A(C)` defines an
/// MV-algebra. Witnesses are indices into [`AcReport::carrier`], with
/// `carrier.len()` standing for `𝟙`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcReport {
    pub verdicts: Vec<Verdict>,
    pub carrier: Vec<String>,
}

impl AcReport {
    pub fn holds(&self) -> bool {
        self.verdicts.iter().all(Verdict::holds)
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        first_failure(&self.verdicts)
    }

    pub fn label(&self, i: usize) -> String {
        self.carrier.get(i).cloned().unwrap_or_else(|| "1".into())
    }
}

pub fn check_ac_class<P: Pco>(c: &P) -> AcReport {
    let v = AcView::new(c);
    let m = v.len();
    let n = m + 1;

    // 1) x <₀ y ⇔ −y <₀ −x on A(C)∖{0}.
    let c1 = (1..m)
        .flat_map(|i| (1..m).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let (x, y) = (&v.elems[i], &v.elems[j]);
            c.lt0(x, y) != c.lt0(&c.neg(y), &c.neg(x))
        })
        .map(|(i, j)| vec![i, j]);

    // 2) (A(C) ∪ {𝟙}, ≤₀) is a distributive lattice.
    let mut c2 = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| v.meet_idx(i, j).is_none() || v.join_idx(i, j).is_none())
        .map(|(i, j)| vec![i, j]);
    if c2.is_none() {
        c2 = (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |d| (a, b, d))))
            .find(|&(a, b, d)| {
                let lhs = v.meet_idx(a, v.join_idx(b, d).unwrap());
                let rhs = v.join_idx(v.meet_idx(a, b).unwrap(), v.meet_idx(a, d).unwrap());
                lhs != rhs
            })
            .map(|(a, b, d)| vec![a, b, d]);
    }

    // 3) x + y = x ∧₀ y + x ∨₀ y on A(C).
    let c3 = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let (x, y) = (v.el(i), v.el(j));
            let rhs = v
                .meet0(&x, &y)
                .zip(v.join0(&x, &y))
                .map(|(mt, jn)| v.add(&mt, &jn));
            rhs != Some(v.add(&x, &y))
        })
        .map(|(i, j)| vec![i, j]);

    // 4) x − y = (x ∧₀ (−z) + z) ∧₀ (−y) − (y ∧₀ (−z) + z) ∧₀ (−x) on A(C)∖{0}.
    // The inner term is x ⊕ z, so a sum that wraps to 0 stands for 𝟙.
    let zero = c.zero();
    let side = |a: usize, b: usize, k: usize| -> Option<Ext<P::Elem>> {
        let inner = v.meet0(&v.el(a), &v.neg_el(k))?;
        let mut s = v.add(&inner, &v.el(k));
        if s == Ext::El(zero.clone()) {
            s = Ext::Top;
        }
        v.meet0(&s, &v.neg_el(b))
    };
    let c4 = (1..m)
        .flat_map(|i| (1..m).flat_map(move |j| (1..m).map(move |k| (i, j, k))))
        .find(|&(i, j, k)| {
            let lhs = c.sub(&v.elems[i], &v.elems[j]);
            match (side(i, j, k), side(j, i, k)) {
                (Some(Ext::El(p)), Some(Ext::El(q))) => c.sub(&p, &q) != lhs,
                _ => true,
            }
        })
        .map(|(i, j, k)| vec![i, j, k]);

    AcReport {
        verdicts: vec![
            Verdict::from_witness("negation_reverses_order", c1),
            Verdict::from_witness("distributive_lattice", c2),
            Verdict::from_witness("sum_is_meet_plus_join", c3),
            Verdict::from_witness("difference_identity", c4),
        ],
        carrier: v.elems.iter().map(|e| c.describe(e)).collect(),
    }
}

/// The MV-algebra on `A(C) ∪ {𝟙}`: `¬0 = 𝟙`, `¬𝟙 = 0`, `¬x = −x` otherwise,
/// and `x ⊕ y = x ∧₀ ¬y + y` unless that is `0` with `(x,y) ≠ (0,0)`, in
/// which case `x ⊕ y = 𝟙`.
///
/// Carrier index `i < |A(C)|` is the i-th element of `A(C)`; the last index
/// is `𝟙`. The returned labels name each carrier element.
pub fn canonical_mv<P: Pco>(c: &P) -> Result<(MvAlgebra, Vec<Ext<P::Elem>>)> {
    let report = check_ac_class(c);
    if let Some(f) = report.first_failure() {
        return Err(Error::NotInAcClass(format!(
            "{} fails at {:?}",
            f.name,
            f.witness.as_deref().unwrap_or_default()
        )));
    }
    canonical_mv_unchecked(&AcView::new(c))
}

fn canonical_mv_unchecked<P: Pco>(v: &AcView<'_, P>) -> Result<(MvAlgebra, Vec<Ext<P::Elem>>)> {
    let m = v.len();
    let n = m + 1;
    let zero = v.pco.zero();
    let leave = || Error::NotInAcClass("canonical operations leave A(C)".into());
    let mut neg = vec![0; n];
    neg[0] = m;
    neg[m] = 0;
    for (i, slot) in neg.iter_mut().enumerate().take(m).skip(1) {
        *slot = v.index_of(&v.pco.neg(&v.elems[i])).ok_or_else(leave)?;
    }
    let mut oplus = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            let t = v
                .meet0(&v.el(i), &v.el(neg[j]))
                .ok_or_else(leave)?;
            let s = v.add(&t, &v.el(j));
            oplus[i * n + j] = if s == Ext::El(zero.clone()) && !(i == 0 && j == 0) {
                m
            } else {
                v.ext_index(&s).ok_or_else(leave)?
            };
        }
    }
    let labels = (0..n).map(|i| v.el(i)).collect();
    Ok((MvAlgebra::from_flat(n, oplus, neg, 0)?, labels))
}

/// Evaluates the two good-sequence formula families over `A(C)ⁿ`:
///
/// 1. every sum of `n` elements of `A(C)` has exactly one good
///    representation `(y₁,…,yₙ)` in `A(C)ⁿ`;
/// 2. for good `x`, `y`, `z` with `Σx + Σy = Σz`, the sequence `z` is the
///    canonical good sum of `x` and `y` with its leading `𝟙` terms removed.
///
/// Goodness of `(y₁,…,yₙ)` is `yᵢ₊₁ ∧₀ −yᵢ = 0` and `yᵢ = 0 ⇒ yᵢ₊₁ = 0`.
pub fn good_seq_formulas<P: Pco>(c: &P, n: usize, cap: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::Unsupported("formula length must be at least 1".into()));
    }
    let report = check_ac_class(c);
    if let Some(f) = report.first_failure() {
        return Err(Error::NotInAcClass(f.name.to_string()));
    }
    let v = AcView::new(c);
    let m = v.len();
    let tuples = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if tuples > cap as u128 {
        return Err(Error::ResourceBound(format!("|A(C)|^{n} = {tuples} exceeds {cap}")));
    }
    let zero = c.zero();
    let good = |t: &[usize]| {
        t.windows(2).all(|w| {
            let meets_zero = v.meet0(&v.el(w[1]), &v.neg_el(w[0])) == Some(Ext::El(zero.clone()));
            meets_zero && (w[0] != 0 || w[1] == 0)
        })
    };
    let sum = |t: &[usize]| t.iter().fold(zero.clone(), |acc, &i| c.add(&acc, &v.elems[i]));
    let all: Vec<Vec<usize>> = (0..tuples as usize)
        .map(|code| (0..n).map(|p| code / m.pow(p as u32) % m).collect())
        .collect();
    let mut goods_by_sum: BTreeMap<P::Elem, Vec<&Vec<usize>>> = BTreeMap::new();
    for t in all.iter().filter(|t| good(t)) {
        goods_by_sum.entry(sum(t)).or_default().push(t);
    }

    let family1 = all
        .iter()
        .all(|x| goods_by_sum.get(&sum(x)).is_some_and(|reps| reps.len() == 1));
    if !family1 {
        return Ok(false);
    }

    let (mv, _) = canonical_mv_unchecked(&v)?;
    let goods: Vec<&Vec<usize>> = goods_by_sum.values().flatten().copied().collect();
    let to_seq = |t: &[usize]| GoodSequence::new(&mv, t.to_vec());
    for x in &goods {
        for y in &goods {
            let w = to_seq(x)?.add(&to_seq(y)?)?;
            let tail: Vec<usize> = w.terms().iter().copied().skip_while(|&t| t == mv.one()).collect();
            let target = c.add(&sum(x), &sum(y));
            for z in goods_by_sum.get(&target).into_iter().flatten() {
                let z_trim = to_seq(z)?;
                if z_trim.terms() != tail.as_slice() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
