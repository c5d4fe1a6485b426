//! First-order invariants of finite cyclically ordered groups and MV-chains,
//! and the classification criteria built from them.
//!
//! Every quantifier ranges over a finite carrier, so each predicate here is
//! decided exactly. Regularity quantifies over all `n`, but an increasing
//! `n`-tuple of nonzero elements needs `n < |C|`, which bounds the search.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::correspondence::co_from_chain;
use crate::error::{Error, Result};
use crate::mv::{AlgebraPredicates, MvAlgebra, Shape, DEFAULT_MAX_WIDTH};
use crate::pco::{FinitePco, Pco};

/// Prime powers `q ≤ 9`, the default D-spectrum grid.
pub const DEFAULT_Q_MAX: u64 = 9;
pub const DEFAULT_P_MAX: u64 = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoPredicates {
    pub c_archimedean: bool,
    pub discrete: bool,
    pub c_regular: bool,
}

/// Ranks of the elements of a c.o. group in `(C, ≤₀)`.
struct Ranked {
    rank: Vec<usize>,
    by_rank: Vec<usize>,
}

impl Ranked {
    fn new(c: &FinitePco) -> Result<Self> {
        if !c.is_co() {
            return Err(Error::NotCyclicallyOrdered);
        }
        let n = c.size();
        let rank: Vec<usize> = (0..n)
            .map(|x| (0..n).filter(|&y| c.lt0(&y, &x)).count())
            .collect();
        let mut by_rank = vec![0; n];
        for (x, &r) in rank.iter().enumerate() {
            by_rank[r] = x;
        }
        Ok(Ranked { rank, by_rank })
    }

    /// `ε`, the least positive element.
    fn epsilon(&self) -> Option<usize> {
        self.by_rank.get(1).copied()
    }
}

/// Decides `c-archimedean`, `discrete` and `c-regular` on a finite c.o. group.
pub fn co_predicates(c: &FinitePco) -> Result<CoPredicates> {
    let r = Ranked::new(c)?;
    let z = c.zero();
    let n = c.size();
    let c_archimedean = (0..n).filter(|&x| x != z).all(|x| {
        (0..n)
            .filter(|&y| y != z)
            .all(|y| (1..=n).any(|k| !c.rel(z, c.multiple(k, x), y)))
    });
    // A finite linear order always has immediate successors and predecessors.
    let discrete = true;
    Ok(CoPredicates {
        c_archimedean,
        discrete,
        c_regular: regular_by_rank(n, |k, x| {
            let m: Vec<usize> = (1..=k).map(|i| c.multiple(i, x)).collect();
            increasing_multiples(&m, |a, b| c.lt0(&a, &b)).then(|| r.rank[m[k - 1]])
        }),
    })
}

fn increasing_multiples(m: &[usize], lt: impl Fn(usize, usize) -> bool) -> bool {
    m.windows(2).all(|w| lt(w[0], w[1]))
}

/// Shared core of both regularity notions on a linear order of `len`
/// elements with bottom `0` at rank 0. `reach(n, x)` returns the rank of
/// `n·x` when `x < 2x < ⋯ < nx`, for `x` ranging over ranks.
///
/// Only the endpoints of an increasing tuple matter, and shrinking the gap
/// makes the condition harder, so it suffices to test windows
/// `[r, r + n − 1]` with `r ≥ 1`.
fn regular_by_rank(len: usize, reach: impl Fn(usize, usize) -> Option<usize>) -> bool {
    (2..len).all(|n| {
        let hits: BTreeSet<usize> = (0..len).filter_map(|x| reach(n, x)).collect();
        (1..len - n + 1).all(|r| hits.range(r..=r + n - 1).next().is_some())
    })
}

/// `(p, m)` with `q = pᵐ`, `m ≥ 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn check_d_params(q: u64, k: u64) -> Result<()> {
    if prime_power(q).is_none() {
        return Err(Error::DParams(format!("{q} is not a prime power")));
    }
    if k >= q {
        return Err(Error::DParams(format!("k = {k} must be below q = {q}")));
    }
    Ok(())
}

fn d_with_eps(c: &FinitePco, eps: usize, q: u64, k: u64) -> Result<Option<usize>> {
    let z = c.zero();
    let target = c.multiple(k as usize, eps);
    let q = q as usize;
    for x in 0..c.size() {
        if c.multiple(q, x) != target {
            continue;
        }
        let ordered = if q == 2 {
            x != z
        } else {
            let tuple: Vec<usize> = (0..q).map(|i| c.multiple(i, x)).collect();
            c.r_tuple(&tuple)?
        };
        if ordered {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// A witness for `D_{q,k}`: `R(0, x, 2x, …, (q−1)x)` and `qx = kε`.
/// For `q = 2` the order conjunct reads `x ≠ 0`.
pub fn d_witness(c: &FinitePco, q: u64, k: u64) -> Result<Option<usize>> {
    check_d_params(q, k)?;
    let r = Ranked::new(c)?;
    let eps = r.epsilon().ok_or(Error::NotDiscrete)?;
    d_with_eps(c, eps, q, k)
}

pub fn d_formula(c: &FinitePco, q: u64, k: u64) -> Result<bool> {
    Ok(d_witness(c, q, k)?.is_some())
}

/// `D_{q,k}` on an MV-chain, evaluated in `C(A)`.
pub fn d_formula_chain(a: &MvAlgebra, q: u64, k: u64) -> Result<bool> {
    d_formula(&co_from_chain(a)?, q, k)
}

/// The chain form read with truncated `⊕`:
/// `0 < x < 2.x < ⋯ < (q−1).x` and `q.x = k.ε`.
pub fn d_formula_chain_literal(a: &MvAlgebra, q: u64, k: u64) -> Result<bool> {
    check_d_params(q, k)?;
    if !a.is_chain() {
        return Err(Error::NotAChain);
    }
    let eps = *a.atoms().first().ok_or(Error::NotDiscrete)?;
    let (q, k) = (q as usize, k as usize);
    let target = a.multiple(k, eps);
    Ok(a.elements().any(|x| {
        let m: Vec<usize> = (0..q).map(|i| a.multiple(i, x)).collect();
        increasing_multiples(&m, |s, t| a.lt(s, t)) && a.multiple(q, x) == target
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DEntry {
    pub q: u64,
    pub k: u64,
    pub holds: bool,
}

/// Prime powers in `2..=q_max`.
pub fn prime_powers_up_to(q_max: u64) -> Vec<u64> {
    (2..=q_max).filter(|&q| prime_power(q).is_some()).collect()
}

/// `D_{q,k}` for every prime power `q ≤ q_max` and `k < q`.
pub fn d_spectrum(c: &FinitePco, q_max: u64) -> Result<Vec<DEntry>> {
    let r = Ranked::new(c)?;
    let eps = r.epsilon().ok_or(Error::NotDiscrete)?;
    let mut out = Vec::new();
    for q in prime_powers_up_to(q_max) {
        for k in 0..q {
            out.push(DEntry {
                q,
                k,
                holds: d_with_eps(c, eps, q, k)?.is_some(),
            });
        }
    }
    Ok(out)
}

/// `D_{q,k}` on `ℤ/n` in closed form: `q ∣ n + k` and `n > (q − 1)k`.
pub fn d_law(n: u64, q: u64, k: u64) -> bool {
    (n + k).is_multiple_of(q) && n > (q - 1) * k
}

/// `[p]B = |B/pB|`.
pub fn zakon_invariant(b: &FinitePco, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pb: BTreeSet<usize> = (0..b.size()).map(|x| b.multiple(p as usize, x)).collect();
    let mut seen = BTreeSet::new();
    let mut cosets = 0;
    for x in 0..b.size() {
        if seen.contains(&x) {
            continue;
        }
        cosets += 1;
        seen.extend(pb.iter().map(|&y| b.add(x, y)));
    }
    Ok(cosets)
}

fn element_order(b: &FinitePco, x: usize) -> usize {
    (1..=b.size())
        .find(|&k| b.multiple(k, x) == b.zero())
        .expect("finite group")
}

/// Invariant factors `d₁ ∣ d₂ ∣ ⋯` of a finite abelian group, read off the
/// counts of elements killed by each prime power.
pub fn invariant_factors(b: &FinitePco) -> Vec<usize> {
    let n = b.size();
    let orders: Vec<usize> = (0..n).map(|x| element_order(b, x)).collect();
    let mut per_prime: Vec<(usize, Vec<u32>)> = Vec::new();
    for p in (2..=n).filter(|&p| is_prime(p as u64) && n.is_multiple_of(p)) {
        // log_p |{x : p^j x = 0}| = Σᵢ min(j, eᵢ)
        let mut logs = vec![0u32];
        let mut j = 1;
        loop {
            let pj = p.pow(j);
            let killed = orders.iter().filter(|&&o| pj % o == 0).count();
            logs.push(ilog(killed, p));
            if logs[j as usize] == logs[j as usize - 1] {
                break;
            }
            j += 1;
        }
        // Number of cyclic factors with exponent ≥ j is logs[j] − logs[j−1].
        let mut exps = Vec::new();
        let at_least: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
        for (j, &cnt) in at_least.iter().enumerate() {
            let next = at_least.get(j + 1).copied().unwrap_or(0);
            for _ in 0..cnt - next {
                exps.push(j as u32 + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push((p, exps));
    }
    let width = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors: Vec<usize> = (0..width)
        .map(|i| {
            per_prime
                .iter()
                .map(|(p, e)| e.get(i).map_or(1, |&x| p.pow(x)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}

fn ilog(mut x: usize, p: usize) -> u32 {
    let mut e = 0;
    while x > 1 {
        x /= p;
        e += 1;
    }
    e
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionReport {
    pub elements: Vec<usize>,
    pub factors: Vec<usize>,
    /// Chains only: whether `0` lies in the group-side torsion subgroup.
    pub zero_flagged: bool,
    /// Chains only: the chain-side set plus `0` equals `C(A)`'s torsion.
    pub agrees_with_group: bool,
}

/// Torsion of a finite c.o. group: the whole group.
pub fn torsion_subgroup(c: &FinitePco) -> TorsionReport {
    TorsionReport {
        elements: (0..c.size()).collect(),
        factors: invariant_factors(c),
        zero_flagged: true,
        agrees_with_group: true,
    }
}

/// Chain torsion `{x : n.x = 1 and xⁿ = 0 for some n}`, cross-checked
/// against the torsion of `C(A)`.
pub fn torsion_subgroup_chain(a: &MvAlgebra) -> Result<TorsionReport> {
    let c = co_from_chain(a)?;
    let order = a.chain_order()?;
    let mut elements = Vec::new();
    for x in a.elements() {
        if a.torsion(x)?.chain {
            elements.push(x);
        }
    }
    // `co_from_chain` labels `A∖{1}` by rank, so ranks are group indices.
    let group = torsion_subgroup(&c);
    let mut chain_ranks: Vec<usize> = elements
        .iter()
        .map(|&x| order.iter().position(|&y| y == x).expect("in chain"))
        .collect();
    chain_ranks.push(0);
    chain_ranks.sort_unstable();
    chain_ranks.dedup();
    Ok(TorsionReport {
        agrees_with_group: chain_ranks == group.elements,
        elements,
        factors: group.factors,
        zero_flagged: true,
    })
}

/// Regularity of an MV-chain: for all `n ≥ 2` and `0 < x₁ < ⋯ < xₙ` there is
/// `x` with `x₁ ≤ n.x ≤ xₙ` and `0 < x < 2.x < ⋯ < n.x`.
pub fn chain_regular(a: &MvAlgebra) -> Result<bool> {
    let order = a.chain_order()?;
    let len = order.len();
    let mut rank = vec![0; len];
    for (r, &x) in order.iter().enumerate() {
        rank[x] = r;
    }
    Ok(regular_by_rank(len, |n, r| {
        let x = order[r];
        let m: Vec<usize> = (0..=n).map(|i| a.multiple(i, x)).collect();
        increasing_multiples(&m, |s, t| a.lt(s, t)).then(|| rank[m[n]])
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub q_max: u64,
    pub p_max: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            q_max: DEFAULT_Q_MAX,
            p_max: DEFAULT_P_MAX,
        }
    }
}

/// Isomorphism-invariant data of a finite structure. Fields that do not
/// apply to a structure are `None` or empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantVector {
    pub size: usize,
    pub shape: Option<Shape>,
    pub algebra: Option<AlgebraPredicates>,
    /// Sizes of the chain factors, ascending.
    pub factor_sizes: Vec<usize>,
    pub is_co: Option<bool>,
    pub is_discrete: Option<bool>,
    /// Order of `ε` (or of the atom in `C(A)`).
    pub epsilon_order: Option<usize>,
    pub c_archimedean: Option<bool>,
    pub c_regular: Option<bool>,
    pub d_spectrum: Vec<DEntry>,
    pub zakon: Vec<(u64, usize)>,
    pub torsion_factors: Vec<usize>,
    pub order_multiset: Vec<usize>,
    pub relation_size: Option<usize>,
    pub non_isolated: Option<usize>,
}

pub enum Subject<'a> {
    Mv(&'a MvAlgebra),
    Pco(&'a FinitePco),
}

fn group_invariants(c: &FinitePco, bounds: Bounds, v: &mut InvariantVector) -> Result<()> {
    v.zakon = (2..=bounds.p_max)
        .filter(|&p| is_prime(p))
        .map(|p| Ok((p, zakon_invariant(c, p)?)))
        .collect::<Result<_>>()?;
    v.torsion_factors = invariant_factors(c);
    v.order_multiset = c.order_multiset();
    if c.is_co() {
        let preds = co_predicates(c)?;
        v.is_co = Some(true);
        v.is_discrete = Some(preds.discrete);
        v.c_archimedean = Some(preds.c_archimedean);
        v.c_regular = Some(preds.c_regular);
        let r = Ranked::new(c)?;
        if let Some(eps) = r.epsilon() {
            v.epsilon_order = Some(element_order(c, eps));
            v.d_spectrum = d_spectrum(c, bounds.q_max)?;
        }
    } else {
        v.is_co = Some(false);
    }
    Ok(())
}

pub fn eq_invariants(s: Subject<'_>, bounds: Bounds) -> Result<InvariantVector> {
    let mut v = InvariantVector {
        size: 0,
        shape: None,
        algebra: None,
        factor_sizes: Vec::new(),
        is_co: None,
        is_discrete: None,
        epsilon_order: None,
        c_archimedean: None,
        c_regular: None,
        d_spectrum: Vec::new(),
        zakon: Vec::new(),
        torsion_factors: Vec::new(),
        order_multiset: Vec::new(),
        relation_size: None,
        non_isolated: None,
    };
    match s {
        Subject::Mv(a) => {
            v.size = a.size();
            v.shape = a.shape_classify().ok();
            v.algebra = Some(a.algebra_predicates());
            if let Ok(units) = a.decompose_product(DEFAULT_MAX_WIDTH) {
                let mut sizes = units
                    .iter()
                    .map(|&u| Ok(a.interval(u)?.0.size()))
                    .collect::<Result<Vec<_>>>()?;
                sizes.sort_unstable();
                v.factor_sizes = sizes;
            }
            if a.is_chain() {
                group_invariants(&co_from_chain(a)?, bounds, &mut v)?;
            }
        }
        Subject::Pco(c) => {
            v.size = c.size();
            v.relation_size = Some(c.triples().len());
            v.non_isolated = Some(c.non_isolated().len());
            group_invariants(c, bounds, &mut v)?;
        }
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCriteria {
    pub is_chain: bool,
    pub atomic: bool,
    pub regular: bool,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub size: usize,
    pub finite: bool,
    pub discrete: bool,
    pub regular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductCriteria {
    pub projectable: bool,
    pub factors: Vec<FactorReport>,
    /// Each factor finite, or infinite, discrete and regular.
    pub satisfied: bool,
    /// Each factor finite or regular.
    pub hyperarchimedean_satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudoReport {
    pub chain: ChainCriteria,
    pub product: ProductCriteria,
}

/// Evaluates the criteria for pseudofiniteness of chains and for products
/// of chains.
pub fn pseudo_classify(a: &MvAlgebra, max_width: usize) -> Result<PseudoReport> {
    let is_chain = a.is_chain();
    let atomic = a.is_atomic();
    let regular = is_chain && chain_regular(a)?;
    let chain = ChainCriteria {
        is_chain,
        atomic,
        regular,
        satisfied: is_chain && atomic && regular,
    };
    let units = a.decompose_product(max_width)?;
    let mut factors = Vec::new();
    for u in units {
        let (f, _) = a.interval(u)?;
        factors.push(FactorReport {
            size: f.size(),
            finite: true,
            discrete: true,
            regular: chain_regular(&f)?,
        });
    }
    let projectable = a.is_projectable();
    let product = ProductCriteria {
        projectable,
        satisfied: projectable && factors.iter().all(|f| f.finite || (f.discrete && f.regular)),
        hyperarchimedean_satisfied: projectable && factors.iter().all(|f| f.finite || f.regular),
        factors,
    };
    Ok(PseudoReport { chain, product })
}
