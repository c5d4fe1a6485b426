//! Translations between finite MV-chains and finite cyclically ordered
//! groups, the Chang group of a chain, round trips, and isomorphism search.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model_check::{eq_invariants, Bounds, Subject};
use crate::mv::{MvAlgebra, DEFAULT_MAX_WIDTH};
use crate::pco::{canonical_mv, FinitePco, LatticeQuotientPco, Pco, Unwound};

pub const DEFAULT_ISO_CAP: usize = 24;

/// `C(A)`: carrier `A∖{1}` labelled by rank in the chain, with
/// `x + y = x ⊕ y` when `x ⊕ y ≠ 1` and `x + y = x ⊙ y` otherwise, and
/// `R(x,y,z)` iff `x<y<z`, `y<z<x` or `z<x<y`.
pub fn co_from_chain(a: &MvAlgebra) -> Result<FinitePco> {
    let order = a.chain_order()?;
    let n = order.len() - 1;
    let mut rank = vec![0; a.size()];
    for (r, &x) in order.iter().enumerate() {
        rank[x] = r;
    }
    let add = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (x, y) = (order[i], order[j]);
                    let s = a.oplus(x, y);
                    rank[if s == a.one() { a.odot(x, y) } else { s }]
                })
                .collect()
        })
        .collect();
    let neg = (0..n)
        .map(|i| if i == 0 { 0 } else { rank[a.neg(order[i])] })
        .collect();
    let mut triples = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if (x < y && y < z) || (y < z && z < x) || (z < x && x < y) {
                    triples.push([x, y, z]);
                }
            }
        }
    }
    FinitePco::new(add, neg, 0, &triples)
}

/// `C ∪ {𝟙}` with `x ⊕ y = x + y` when `x + y ≠ 0` and `min₀(x,y) <₀ x + y`,
/// `x ⊕ y = 𝟙` when `x ≠ 0 ≠ y` and `x + y ≤₀ min₀(x,y)`. `𝟙` has index
/// `|C|`.
pub fn chain_from_co(c: &FinitePco) -> Result<MvAlgebra> {
    if !c.is_co() {
        return Err(Error::NotCyclicallyOrdered);
    }
    let n = c.size();
    let top = n;
    let z = c.zero();
    let mut oplus = vec![vec![top; n + 1]; n + 1];
    for (x, row) in oplus.iter_mut().enumerate().take(n) {
        for (y, cell) in row.iter_mut().enumerate().take(n) {
            let s = c.add(x, y);
            let min = if c.leq0(&x, &y) { x } else { y };
            *cell = if x == z {
                y
            } else if y == z {
                x
            } else if s != z && c.lt0(&min, &s) {
                s
            } else {
                top
            };
        }
    }
    let neg = (0..=n)
        .map(|x| {
            if x == z {
                top
            } else if x == top {
                z
            } else {
                c.neg(x)
            }
        })
        .collect();
    MvAlgebra::new(oplus, neg, z)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainChangOp {
    Add,
    Leq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainChangValue {
    Pair(i64, usize),
    Bool(bool),
}

/// The Chang group of a finite chain on `ℤ × (A∖{1})`, lexicographically
/// ordered, with strong unit `(1, 0)`.
#[derive(Clone, Debug)]
pub struct ChainChang<'a> {
    a: &'a MvAlgebra,
    rank: Vec<usize>,
}

impl<'a> ChainChang<'a> {
    pub fn new(a: &'a MvAlgebra) -> Result<Self> {
        let order = a.chain_order()?;
        let mut rank = vec![0; a.size()];
        for (r, &x) in order.iter().enumerate() {
            rank[x] = r;
        }
        Ok(ChainChang { a, rank })
    }

    fn check(&self, x: usize) -> Result<()> {
        if x >= self.a.size() {
            return Err(Error::IndexOutOfRange { index: x, size: self.a.size() });
        }
        if x == self.a.one() {
            return Err(Error::TopComponent);
        }
        Ok(())
    }

    pub fn unit(&self) -> (i64, usize) {
        (1, self.a.zero())
    }

    pub fn add(&self, (m, x): (i64, usize), (n, y): (i64, usize)) -> Result<(i64, usize)> {
        self.check(x)?;
        self.check(y)?;
        let s = self.a.oplus(x, y);
        Ok(if s != self.a.one() {
            (m + n, s)
        } else {
            (m + n + 1, self.a.odot(x, y))
        })
    }

    pub fn neg(&self, (m, x): (i64, usize)) -> Result<(i64, usize)> {
        self.check(x)?;
        Ok(if x == self.a.zero() {
            (-m, x)
        } else {
            (-m - 1, self.a.neg(x))
        })
    }

    pub fn leq(&self, (m, x): (i64, usize), (n, y): (i64, usize)) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(m < n || (m == n && self.rank[x] <= self.rank[y]))
    }

    /// Rank of `x` in the chain; `(m, x) ↦ m·|A∖{1}| + rank(x)` embeds the
    /// group into `ℤ`.
    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }
}

pub fn chang_of_chain_op(
    a: &MvAlgebra,
    op: ChainChangOp,
    p: (i64, usize),
    q: (i64, usize),
) -> Result<ChainChangValue> {
    let g = ChainChang::new(a)?;
    Ok(match op {
        ChainChangOp::Add => {
            let (m, x) = g.add(p, q)?;
            ChainChangValue::Pair(m, x)
        }
        ChainChangOp::Leq => ChainChangValue::Bool(g.leq(p, q)?),
    })
}

/// The rank-one wound-round `ℤ/ℤu` as an explicit table structure.
pub fn wound_to_finite(w: &LatticeQuotientPco) -> Result<FinitePco> {
    if w.rank() != 1 {
        return Err(Error::Unsupported(format!(
            "ℤ^{}/ℤu is infinite; only rank one has a finite carrier",
            w.rank()
        )));
    }
    let n = w.unit()[0] as usize;
    let v = |i: usize| vec![i as i64];
    let idx = |e: Vec<i64>| e[0] as usize;
    let add = (0..n)
        .map(|i| (0..n).map(|j| idx(w.add(&v(i), &v(j)))).collect())
        .collect();
    let neg = (0..n).map(|i| idx(w.neg(&v(i)))).collect();
    let mut triples = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if w.rel(&v(x), &v(y), &v(z)) {
                    triples.push([x, y, z]);
                }
            }
        }
    }
    FinitePco::new(add, neg, 0, &triples)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IsoKind {
    Mv,
    Pco,
    Group,
}

/// A bijection `map[x] = f(x)` from the first structure to the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub kind: IsoKind,
    pub map: Vec<usize>,
}

/// Uniform view used by the search: one binary and one unary operation, a
/// constant, and optionally a ternary relation.
struct Tables {
    size: usize,
    bin: Vec<usize>,
    un: Vec<usize>,
    constant: usize,
    rel: Option<Vec<bool>>,
}

impl Tables {
    fn of_mv(a: &MvAlgebra) -> Self {
        Tables {
            size: a.size(),
            bin: a.oplus_rows().concat(),
            un: a.neg_table().to_vec(),
            constant: a.zero(),
            rel: None,
        }
    }

    fn of_pco(c: &FinitePco, with_rel: bool) -> Self {
        let n = c.size();
        let rel = with_rel.then(|| {
            let mut t = vec![false; n * n * n];
            for [x, y, z] in c.triples() {
                t[(x * n + y) * n + z] = true;
            }
            t
        });
        Tables {
            size: n,
            bin: c.add_rows().concat(),
            un: c.neg_table().to_vec(),
            constant: c.zero(),
            rel,
        }
    }

    fn op(&self, x: usize, y: usize) -> usize {
        self.bin[x * self.size + y]
    }

    fn r(&self, x: usize, y: usize, z: usize) -> bool {
        self.rel
            .as_ref()
            .is_some_and(|t| t[(x * self.size + y) * self.size + z])
    }

    /// Data of `x` preserved by every isomorphism.
    fn signature(&self, x: usize) -> Vec<usize> {
        let n = self.size;
        let mut seq = vec![x];
        let mut cur = x;
        let (tail, cycle) = loop {
            cur = self.op(cur, x);
            if let Some(p) = seq.iter().position(|&s| s == cur) {
                break (p, seq.len() - p);
            }
            seq.push(cur);
        };
        let c = self.constant;
        let mut sig = vec![
            tail,
            cycle,
            usize::from(x == c),
            usize::from(self.un[x] == x),
            (0..n).filter(|&y| self.op(x, y) == x).count(),
            (0..n).filter(|&y| self.op(x, y) == c).count(),
            (0..n).filter(|&y| self.op(x, y) == self.un[c]).count(),
        ];
        if self.rel.is_some() {
            sig.push((0..n).filter(|&y| self.r(c, x, y)).count());
            sig.push((0..n).filter(|&y| self.r(c, y, x)).count());
            sig.push((0..n).flat_map(|y| (0..n).map(move |z| (y, z))).filter(|&(y, z)| self.r(x, y, z)).count());
        }
        sig
    }

    fn preserves(&self, other: &Tables, f: &[usize]) -> bool {
        let n = self.size;
        if f.len() != n || other.size != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &y in f {
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        if f[self.constant] != other.constant {
            return false;
        }
        for x in 0..n {
            if f[self.un[x]] != other.un[f[x]] {
                return false;
            }
            for y in 0..n {
                if f[self.op(x, y)] != other.op(f[x], f[y]) {
                    return false;
                }
                if self.rel.is_some() || other.rel.is_some() {
                    for z in 0..n {
                        if self.r(x, y, z) != other.r(f[x], f[y], f[z]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy)]
enum Step {
    Gen(usize),
    Bin(usize, usize),
    Un(usize),
}

/// Closes the constant under the operations, adding generators greedily.
/// Returns the steps deriving every element, in dependency order.
fn derivation(t: &Tables, class_size: &[usize]) -> Vec<(usize, Step)> {
    let n = t.size;
    let mut seen = vec![false; n];
    let mut steps = Vec::new();
    let mut gens = 0;
    let push = |e: usize, s: Step, seen: &mut Vec<bool>, steps: &mut Vec<(usize, Step)>| {
        if !seen[e] {
            seen[e] = true;
            steps.push((e, s));
        }
    };
    push(t.constant, Step::Gen(usize::MAX), &mut seen, &mut steps);
    loop {
        let mut i = 0;
        while i < steps.len() {
            let a = steps[i].0;
            push(t.un[a], Step::Un(a), &mut seen, &mut steps);
            for j in 0..=i {
                let b = steps[j].0;
                push(t.op(a, b), Step::Bin(a, b), &mut seen, &mut steps);
                push(t.op(b, a), Step::Bin(b, a), &mut seen, &mut steps);
            }
            i += 1;
        }
        let next = (0..n).filter(|&x| !seen[x]).min_by_key(|&x| (class_size[x], x));
        match next {
            Some(g) => {
                push(g, Step::Gen(gens), &mut seen, &mut steps);
                gens += 1;
            }
            None => return steps,
        }
    }
}

fn search(s: &Tables, t: &Tables) -> Option<Vec<usize>> {
    let n = s.size;
    if t.size != n {
        return None;
    }
    let ss: Vec<Vec<usize>> = (0..n).map(|x| s.signature(x)).collect();
    let ts: Vec<Vec<usize>> = (0..n).map(|x| t.signature(x)).collect();
    let mut a = ss.clone();
    let mut b = ts.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let class_size: Vec<usize> = (0..n).map(|x| ts.iter().filter(|sig| **sig == ss[x]).count()).collect();
    let steps = derivation(s, &class_size);
    let gens: Vec<usize> = steps
        .iter()
        .filter(|(_, st)| matches!(st, Step::Gen(g) if *g != usize::MAX))
        .map(|(e, _)| *e)
        .collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..n).filter(|&y| ts[y] == ss[g]).collect())
        .collect();
    let mut choice = vec![0; gens.len()];
    assign(s, t, &steps, &gens, &candidates, &mut choice, 0, &ss, &ts)
}

#[allow(clippy::too_many_arguments)]
fn assign(
    s: &Tables,
    t: &Tables,
    steps: &[(usize, Step)],
    gens: &[usize],
    candidates: &[Vec<usize>],
    choice: &mut Vec<usize>,
    depth: usize,
    ss: &[Vec<usize>],
    ts: &[Vec<usize>],
) -> Option<Vec<usize>> {
    {
        let f = extend(s, t, steps, choice, depth, ss, ts)?;
        if depth == gens.len() {
            return s.preserves(t, &f).then_some(f);
        }
    }
    for &c in &candidates[depth] {
        choice[depth] = c;
        if let Some(f) = assign(s, t, steps, gens, candidates, choice, depth + 1, ss, ts) {
            return Some(f);
        }
    }
    None
}

/// Propagates the images of the first `depth` generators along the
/// derivation, failing on a clash. Stops at the first unassigned generator.
#[allow(clippy::too_many_arguments)]
fn extend(
    s: &Tables,
    t: &Tables,
    steps: &[(usize, Step)],
    choice: &[usize],
    depth: usize,
    ss: &[Vec<usize>],
    ts: &[Vec<usize>],
) -> Option<Vec<usize>> {
    let n = s.size;
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(e, st) in steps {
        let img = match st {
            Step::Gen(g) if g == usize::MAX => t.constant,
            Step::Gen(g) if g < depth => choice[g],
            Step::Gen(_) => break,
            Step::Bin(a, b) => t.op(f[a], f[b]),
            Step::Un(a) => t.un[f[a]],
        };
        if used[img] || ss[e] != ts[img] {
            return None;
        }
        used[img] = true;
        f[e] = img;
    }
    // Every defined pair must be consistent with the operations.
    let defined: Vec<usize> = (0..n).filter(|&x| f[x] != usize::MAX).collect();
    for &x in &defined {
        if f[s.un[x]] != usize::MAX && f[s.un[x]] != t.un[f[x]] {
            return None;
        }
        for &y in &defined {
            let xy = s.op(x, y);
            if f[xy] != usize::MAX && f[xy] != t.op(f[x], f[y]) {
                return None;
            }
        }
    }
    Some(f)
}

fn check_cap(sizes: &[usize], cap: usize) -> Result<()> {
    match sizes.iter().find(|&&s| s > cap) {
        Some(&size) => Err(Error::SizeCap { size, cap }),
        None => Ok(()),
    }
}

const PRUNE_BOUNDS: Bounds = Bounds { q_max: 5, p_max: 7 };

pub fn mv_iso(a: &MvAlgebra, b: &MvAlgebra, cap: usize) -> Result<Option<IsoWitness>> {
    check_cap(&[a.size(), b.size()], cap)?;
    if a.size() != b.size() || a.shape_classify().ok() != b.shape_classify().ok() {
        return Ok(None);
    }
    Ok(search(&Tables::of_mv(a), &Tables::of_mv(b)).map(|map| IsoWitness { kind: IsoKind::Mv, map }))
}

/// Isomorphism of groups preserving `R` in both directions.
pub fn pco_iso(c: &FinitePco, d: &FinitePco, cap: usize) -> Result<Option<IsoWitness>> {
    check_cap(&[c.size(), d.size()], cap)?;
    if c.size() != d.size()
        || eq_invariants(Subject::Pco(c), PRUNE_BOUNDS)? != eq_invariants(Subject::Pco(d), PRUNE_BOUNDS)?
    {
        return Ok(None);
    }
    Ok(search(&Tables::of_pco(c, true), &Tables::of_pco(d, true))
        .map(|map| IsoWitness { kind: IsoKind::Pco, map }))
}

/// Isomorphism of the underlying groups, ignoring `R`.
pub fn group_iso(c: &FinitePco, d: &FinitePco, cap: usize) -> Result<Option<IsoWitness>> {
    check_cap(&[c.size(), d.size()], cap)?;
    if c.size() != d.size() || c.order_multiset() != d.order_multiset() {
        return Ok(None);
    }
    Ok(search(&Tables::of_pco(c, false), &Tables::of_pco(d, false))
        .map(|map| IsoWitness { kind: IsoKind::Group, map }))
}

impl IsoWitness {
    pub fn verify_mv(&self, a: &MvAlgebra, b: &MvAlgebra) -> bool {
        self.kind == IsoKind::Mv && Tables::of_mv(a).preserves(&Tables::of_mv(b), &self.map)
    }

    pub fn verify_pco(&self, c: &FinitePco, d: &FinitePco) -> bool {
        let with_rel = match self.kind {
            IsoKind::Pco => true,
            IsoKind::Group => false,
            IsoKind::Mv => return false,
        };
        Tables::of_pco(c, with_rel).preserves(&Tables::of_pco(d, with_rel), &self.map)
    }

    pub fn inverse(&self) -> IsoWitness {
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        IsoWitness { kind: self.kind, map: inv }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &IsoWitness) -> IsoWitness {
        IsoWitness {
            kind: self.kind,
            map: self.map.iter().map(|&y| other.map[y]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RiegerReport {
    /// `R` on `C` equals the relation wound back from `uw(C)`.
    pub quotient_reproduces: bool,
    /// For `g, h ∈ [0, u)`: `g + h < u` iff `ρ(g) + ρ(h)` does not wrap.
    pub carry_criterion: bool,
}

impl RiegerReport {
    pub fn holds(&self) -> bool {
        self.quotient_reproduces && self.carry_criterion
    }
}

pub fn rieger_check(c: &FinitePco) -> Result<RiegerReport> {
    let uw = Unwound::new(c)?;
    let n = c.size();
    let z = c.zero();
    let quotient_reproduces = (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|w| uw.wound_relation(x, y, w) == c.rel(x, y, w)))
    });
    let u = uw.unit();
    let carry_criterion = (0..n).all(|x| {
        (0..n).all(|y| {
            let (g, h) = (uw.element(0, x), uw.element(0, y));
            let s = uw.add(g, h);
            let wraps = y != z && !c.lt0(&x, &c.add(x, y));
            uw.rho(s) == c.add(x, y) && uw.lt(s, u) == !wraps
        })
    });
    Ok(RiegerReport {
        quotient_reproduces,
        carry_criterion,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "path", rename_all = "kebab-case")]
pub enum RoundTripPath {
    Chain,
    LatticeQuotient { u: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTripReport {
    pub path: RoundTripPath,
    pub size: usize,
    pub canonical_size: usize,
    pub witness: Option<IsoWitness>,
    /// Chains only.
    pub rieger: Option<RiegerReport>,
}

impl RoundTripReport {
    pub fn holds(&self) -> bool {
        self.witness.is_some() && self.rieger.as_ref().is_none_or(RiegerReport::holds)
    }
}

/// Unit vector `u` with `A ≅ Γ(ℤᵏ, u)` read off a product decomposition,
/// in ascending order.
pub fn unit_vector(a: &MvAlgebra, max_width: usize) -> Result<Vec<i64>> {
    let mut u = a
        .decompose_product(max_width)?
        .into_iter()
        .map(|u| Ok(a.interval(u)?.0.size() as i64 - 1))
        .collect::<Result<Vec<_>>>()?;
    u.sort_unstable();
    Ok(u)
}

/// Checks `A ≅` the canonical MV-algebra of `C(A)`. Chains go through
/// [`co_from_chain`]; other algebras through their unit vector and the
/// wound-round of `ℤᵏ`.
pub fn round_trip(a: &MvAlgebra, cap: usize) -> Result<RoundTripReport> {
    if a.is_chain() {
        let c = co_from_chain(a)?;
        let (m, _) = canonical_mv(&c)?;
        Ok(RoundTripReport {
            path: RoundTripPath::Chain,
            size: a.size(),
            canonical_size: m.size(),
            witness: mv_iso(a, &m, cap)?,
            rieger: Some(rieger_check(&c)?),
        })
    } else {
        let u = unit_vector(a, DEFAULT_MAX_WIDTH)?;
        let w = LatticeQuotientPco::wound_round(&u)?;
        let (m, _) = canonical_mv(&w)?;
        Ok(RoundTripReport {
            path: RoundTripPath::LatticeQuotient { u },
            size: a.size(),
            canonical_size: m.size(),
            witness: mv_iso(a, &m, cap)?,
            rieger: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pco::{make_cyclic_group, make_product_pco};

    fn l(n: i64) -> MvAlgebra {
        MvAlgebra::lukasiewicz(n).unwrap()
    }

    #[test]
    fn co_from_chain_examples() {
        let c = co_from_chain(&l(4)).unwrap();
        assert!(c.check_axioms().is_co());
        assert_eq!(c.add(2, 3), 1);
        let z4 = make_cyclic_group(4).unwrap();
        let w = pco_iso(&c, &z4, DEFAULT_ISO_CAP).unwrap().unwrap();
        assert!(w.verify_pco(&c, &z4));
        assert_eq!(co_from_chain(&l(1)).unwrap().size(), 1);
        let sq = MvAlgebra::gamma(&[1, 1]).unwrap();
        assert_eq!(co_from_chain(&sq), Err(Error::NotAChain));
    }

    #[test]
    fn chain_from_co_examples() {
        let z5 = make_cyclic_group(5).unwrap();
        let a = chain_from_co(&z5).unwrap();
        assert!(a.check_axioms().holds());
        assert_eq!(a.oplus(2, 2), 4);
        assert_eq!(a.oplus(3, 3), 5);
        let z4 = make_cyclic_group(4).unwrap();
        let b = chain_from_co(&z4).unwrap();
        assert!(mv_iso(&b, &l(4), DEFAULT_ISO_CAP).unwrap().is_some());
        let p = make_product_pco(&z5, &z5);
        assert_eq!(chain_from_co(&p), Err(Error::NotCyclicallyOrdered));
    }

    #[test]
    fn interpretations_are_inverse() {
        for n in 1..=16 {
            let a = l(n);
            let back = chain_from_co(&co_from_chain(&a).unwrap()).unwrap();
            assert!(mv_iso(&a, &back, DEFAULT_ISO_CAP).unwrap().is_some(), "L{n}");
            let c = make_cyclic_group(n as usize).unwrap();
            let again = co_from_chain(&chain_from_co(&c).unwrap()).unwrap();
            assert!(pco_iso(&c, &again, DEFAULT_ISO_CAP).unwrap().is_some(), "Z/{n}");
        }
    }

    #[test]
    fn chang_examples() {
        let a = l(4);
        let add = |p, q| chang_of_chain_op(&a, ChainChangOp::Add, p, q).unwrap();
        assert_eq!(add((0, 2), (0, 3)), ChainChangValue::Pair(1, 1));
        assert_eq!(add((2, 0), (5, 0)), ChainChangValue::Pair(7, 0));
        assert_eq!(add((0, 1), (0, 2)), ChainChangValue::Pair(0, 3));
        assert_eq!(
            chang_of_chain_op(&a, ChainChangOp::Add, (0, 4), (0, 0)),
            Err(Error::TopComponent)
        );
    }

    #[test]
    fn chang_embeds_in_integers() {
        for n in 1..=6i64 {
            let a = l(n);
            let g = ChainChang::new(&a).unwrap();
            let int = |(m, x): (i64, usize)| m * n + g.rank(x) as i64;
            let window: Vec<(i64, usize)> =
                (-10..=10).flat_map(|m| (0..n as usize).map(move |x| (m, x))).collect();
            for &p in &window {
                assert_eq!(int(g.neg(p).unwrap()), -int(p));
                for &q in &window {
                    assert_eq!(int(g.add(p, q).unwrap()), int(p) + int(q));
                    assert_eq!(g.leq(p, q).unwrap(), int(p) <= int(q));
                }
            }
        }
    }

    #[test]
    fn chang_agrees_with_good_sequences() {
        use crate::good_seq::GoodSequence;
        let a = l(3);
        let g = ChainChang::new(&a).unwrap();
        let seq = |v: i64| {
            let mut t = vec![3; (v / 3) as usize];
            if v % 3 != 0 {
                t.push((v % 3) as usize);
            }
            GoodSequence::new(&a, t).unwrap()
        };
        for v in 0..15 {
            for w in 0..15 {
                let s = g.add((v / 3, (v % 3) as usize), (w / 3, (w % 3) as usize)).unwrap();
                let sum = seq(v).add(&seq(w)).unwrap();
                assert_eq!(sum, seq(s.0 * 3 + s.1 as i64));
            }
        }
    }

    #[test]
    fn iso_examples() {
        let z4 = make_cyclic_group(4).unwrap();
        let z2 = make_cyclic_group(2).unwrap();
        let v4 = make_product_pco(&z2, &z2);
        assert!(pco_iso(&z4, &v4, DEFAULT_ISO_CAP).unwrap().is_none());
        assert!(group_iso(&z4, &v4, DEFAULT_ISO_CAP).unwrap().is_none());
        let id = pco_iso(&z4, &z4, DEFAULT_ISO_CAP).unwrap().unwrap();
        assert_eq!(id.map, vec![0, 1, 2, 3]);
        let big = make_cyclic_group(30).unwrap();
        assert_eq!(
            pco_iso(&big, &big, DEFAULT_ISO_CAP),
            Err(Error::SizeCap { size: 30, cap: 24 })
        );
        let w = LatticeQuotientPco::wound_round(&[2, 3]).unwrap();
        let (m, _) = canonical_mv(&w).unwrap();
        let g = MvAlgebra::gamma(&[2, 3]).unwrap();
        let wit = mv_iso(&m, &g, DEFAULT_ISO_CAP).unwrap().unwrap();
        assert!(wit.verify_mv(&m, &g));
        assert!(wit.inverse().verify_mv(&g, &m));
    }

    #[test]
    fn opposite_orientation_is_isomorphic() {
        let z5 = make_cyclic_group(5).unwrap();
        let flipped: Vec<[usize; 3]> = z5.triples().into_iter().map(|[x, y, z]| [z, y, x]).collect();
        let d = FinitePco::new(z5.add_rows(), z5.neg_table().to_vec(), 0, &flipped).unwrap();
        let w = pco_iso(&z5, &d, DEFAULT_ISO_CAP).unwrap().unwrap();
        assert!(w.verify_pco(&z5, &d));
        assert_eq!(w.map[1], 4);
    }

    #[test]
    fn wound_rank_one_is_cyclic() {
        for n in 2..=12 {
            let w = LatticeQuotientPco::wound_round(&[n]).unwrap();
            let f = wound_to_finite(&w).unwrap();
            let c = make_cyclic_group(n as usize).unwrap();
            assert!(pco_iso(&f, &c, DEFAULT_ISO_CAP).unwrap().is_some());
        }
        let w = LatticeQuotientPco::wound_round(&[2, 2]).unwrap();
        assert!(wound_to_finite(&w).is_err());
    }

    #[test]
    fn rieger_on_cyclic() {
        for n in 1..=10 {
            let c = make_cyclic_group(n).unwrap();
            assert!(rieger_check(&c).unwrap().holds(), "Z/{n}");
        }
    }

    #[test]
    fn round_trips() {
        assert!(round_trip(&l(5), DEFAULT_ISO_CAP).unwrap().holds());
        assert!(round_trip(&l(1), DEFAULT_ISO_CAP).unwrap().holds());
        let g = MvAlgebra::gamma(&[2, 3]).unwrap();
        let r = round_trip(&g, DEFAULT_ISO_CAP).unwrap();
        assert_eq!(r.path, RoundTripPath::LatticeQuotient { u: vec![2, 3] });
        assert!(r.holds());
        // C(Ł₂) = ℤ/2 has A(C) = {0}.
        let r = round_trip(&l(2), DEFAULT_ISO_CAP).unwrap();
        assert_eq!(r.canonical_size, 2);
        assert!(!r.holds());
    }
}
