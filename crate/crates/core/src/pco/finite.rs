use std::collections::BTreeSet;

use serde::Serialize;

use super::Pco;
use crate::error::{Error, Result};
use crate::report::{first_failure, Verdict};

#[derive(Clone, Debug)]
enum Relation {
    Table(Vec<bool>),
    /// Canonical cyclic order on `ℤ/n` with element `i` the residue `i`.
    Cyclic,
}

/// A finite group with a ternary relation. The group axioms are checked at
/// construction; the p.c.o. axioms are checked by [`FinitePco::check_axioms`].
#[derive(Clone, Debug)]
pub struct FinitePco {
    size: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    rel: Relation,
}

impl PartialEq for FinitePco {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
            && self.add == other.add
            && self.neg == other.neg
            && self.zero == other.zero
            && self.triples() == other.triples()
    }
}

impl Eq for FinitePco {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PcoReport {
    /// `strict`, `cyclic`, `order_per_base`, `compatible`.
    pub verdicts: Vec<Verdict>,
    /// Every `≤ₓ` linear; the witness is `[x, y, z]` with `y`, `z`
    /// incomparable under `≤ₓ`.
    pub linear: Verdict,
}

impl PcoReport {
    pub fn holds(&self) -> bool {
        self.verdicts.iter().all(Verdict::holds)
    }

    pub fn is_co(&self) -> bool {
        self.holds() && self.linear.holds()
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        first_failure(&self.verdicts)
    }
}

impl FinitePco {
    /// Builds a structure from an addition table, negation table, zero and
    /// the triples of `R`.
    pub fn new(
        add: Vec<Vec<usize>>,
        neg: Vec<usize>,
        zero: usize,
        triples: &[[usize; 3]],
    ) -> Result<Self> {
        let size = add.len();
        if size == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        if let Some((i, row)) = add.iter().enumerate().find(|(_, r)| r.len() != size) {
            return Err(Error::MalformedTable(format!(
                "add row {i} has length {}, expected {size}",
                row.len()
            )));
        }
        if neg.len() != size {
            return Err(Error::MalformedTable(format!(
                "neg has length {}, expected {size}",
                neg.len()
            )));
        }
        let add: Vec<usize> = add.into_iter().flatten().collect();
        let all = add.iter().chain(&neg).chain(std::iter::once(&zero));
        for &v in all.chain(triples.iter().flatten()) {
            if v >= size {
                return Err(Error::IndexOutOfRange { index: v, size });
            }
        }
        let mut table = vec![false; size * size * size];
        for t in triples {
            table[(t[0] * size + t[1]) * size + t[2]] = true;
        }
        let c = FinitePco {
            size,
            add,
            neg,
            zero,
            rel: Relation::Table(table),
        };
        c.check_group()?;
        Ok(c)
    }

    fn check_group(&self) -> Result<()> {
        let n = self.size;
        for x in 0..n {
            if self.add(x, self.zero) != x || self.add(self.zero, x) != x {
                return Err(Error::MalformedTable(format!("{} is not an identity", self.zero)));
            }
            if self.add(x, self.neg(x)) != self.zero {
                return Err(Error::MalformedTable(format!("neg({x}) is not an inverse")));
            }
            for y in 0..n {
                for z in 0..n {
                    if self.add(x, self.add(y, z)) != self.add(self.add(x, y), z) {
                        return Err(Error::MalformedTable(format!(
                            "addition is not associative at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn with_relation(&self, table: Vec<bool>) -> FinitePco {
        FinitePco {
            size: self.size,
            add: self.add.clone(),
            neg: self.neg.clone(),
            zero: self.zero,
            rel: Relation::Table(table),
        }
    }

    /// The same group with the empty relation.
    pub fn group_only(&self) -> FinitePco {
        self.with_relation(vec![false; self.size.pow(3)])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn rel(&self, x: usize, y: usize, z: usize) -> bool {
        match &self.rel {
            Relation::Table(t) => t[(x * self.size + y) * self.size + z],
            Relation::Cyclic => (x < y && y < z) || (y < z && z < x) || (z < x && x < y),
        }
    }

    /// `n·x` in the group.
    pub fn multiple(&self, n: usize, x: usize) -> usize {
        (0..n).fold(self.zero, |acc, _| self.add(acc, x))
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn neg_table(&self) -> &[usize] {
        &self.neg
    }

    /// The triples of `R` in lexicographic order.
    pub fn triples(&self) -> Vec<[usize; 3]> {
        let n = self.size;
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.rel(x, y, z) {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        out
    }

    /// `y ≤ₓ z`.
    pub fn leq_at(&self, x: usize, y: usize, z: usize) -> bool {
        y == z || x == y || self.rel(x, y, z)
    }

    pub fn check_axioms(&self) -> PcoReport {
        let n = self.size;
        let triples = || {
            (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
        };
        let strict = triples()
            .find(|&(x, y, z)| self.rel(x, y, z) && (x == y || y == z || z == x))
            .map(|(x, y, z)| vec![x, y, z]);
        let cyclic = triples()
            .find(|&(x, y, z)| self.rel(x, y, z) && !self.rel(y, z, x))
            .map(|(x, y, z)| vec![x, y, z]);
        let order = self.order_violation();
        let compatible = triples()
            .filter(|&(x, y, z)| self.rel(x, y, z))
            .find_map(|(x, y, z)| {
                (0..n)
                    .find(|&v| !self.rel(self.add(x, v), self.add(y, v), self.add(z, v)))
                    .map(|v| vec![x, y, z, v])
            });
        let linear = triples()
            .find(|&(x, y, z)| !self.leq_at(x, y, z) && !self.leq_at(x, z, y))
            .map(|(x, y, z)| vec![x, y, z]);
        PcoReport {
            verdicts: vec![
                Verdict::from_witness("strict", strict),
                Verdict::from_witness("cyclic", cyclic),
                Verdict::from_witness("order_per_base", order),
                Verdict::from_witness("compatible", compatible),
            ],
            linear: Verdict::from_witness("linear", linear),
        }
    }

    /// First `[x, y, z]` breaking antisymmetry of `≤ₓ`, or `[x, y, z, w]`
    /// breaking transitivity.
    fn order_violation(&self) -> Option<Vec<usize>> {
        let n = self.size;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !self.leq_at(x, y, z) {
                        continue;
                    }
                    if y != z && self.leq_at(x, z, y) {
                        return Some(vec![x, y, z]);
                    }
                    if let Some(w) = (0..n).find(|&w| self.leq_at(x, z, w) && !self.leq_at(x, y, w)) {
                        return Some(vec![x, y, z, w]);
                    }
                }
            }
        }
        None
    }

    pub fn is_co(&self) -> bool {
        matches!(self.rel, Relation::Cyclic) || self.check_axioms().is_co()
    }

    /// The strict order `<₀` restricted to `C∖{0}`, as pairs.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        let z = self.zero;
        let mut out = Vec::new();
        for x in (0..self.size).filter(|&x| x != z) {
            for y in (0..self.size).filter(|&y| y != z) {
                if self.rel(z, x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// `R(x₁, …, xₙ)`: `R(x₁,xᵢ,xᵢ₊₁)` for every `2 ≤ i < n`.
    pub fn r_tuple(&self, xs: &[usize]) -> Result<bool> {
        if xs.len() < 3 {
            return Err(Error::Arity(xs.len()));
        }
        if let Some(&bad) = xs.iter().find(|&&x| x >= self.size) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: self.size,
            });
        }
        Ok(xs[1..].windows(2).all(|w| self.rel(xs[0], w[0], w[1])))
    }

    /// Orders of all elements, sorted.
    pub fn order_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.size)
            .map(|x| (1..=self.size).find(|&k| self.multiple(k, x) == self.zero).unwrap_or(0))
            .collect();
        v.sort_unstable();
        v
    }
}

impl Pco for FinitePco {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }

    fn add(&self, a: &usize, b: &usize) -> usize {
        FinitePco::add(self, *a, *b)
    }

    fn neg(&self, a: &usize) -> usize {
        FinitePco::neg(self, *a)
    }

    fn rel(&self, x: &usize, y: &usize, z: &usize) -> bool {
        FinitePco::rel(self, *x, *y, *z)
    }

    fn non_isolated(&self) -> Vec<usize> {
        let z = self.zero;
        let nonzero = || (0..self.size).filter(move |&x| x != z);
        std::iter::once(z)
            .chain(nonzero().filter(|&x| nonzero().any(|y| self.rel(z, x, y) || self.rel(z, y, x))))
            .collect()
    }
}

/// `ℤ/n` with its canonical cyclic order.
pub fn make_cyclic_group(n: usize) -> Result<FinitePco> {
    if n == 0 {
        return Err(Error::InvalidUnit("group order must be positive".into()));
    }
    let add = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
    let neg = (0..n).map(|a| (n - a) % n).collect();
    Ok(FinitePco {
        size: n,
        add,
        neg,
        zero: 0,
        rel: Relation::Cyclic,
    })
}

/// Componentwise product; `(a, b)` has index `a * |C₂| + b`.
pub fn make_product_pco(c1: &FinitePco, c2: &FinitePco) -> FinitePco {
    let (n1, n2) = (c1.size, c2.size);
    let size = n1 * n2;
    let split = |p: usize| (p / n2, p % n2);
    let join = |a: usize, b: usize| a * n2 + b;
    let mut add = vec![0; size * size];
    let mut neg = vec![0; size];
    let mut rel = vec![false; size * size * size];
    for p in 0..size {
        let (pa, pb) = split(p);
        neg[p] = join(c1.neg(pa), c2.neg(pb));
        for q in 0..size {
            let (qa, qb) = split(q);
            add[p * size + q] = join(c1.add(pa, qa), c2.add(pb, qb));
            for r in 0..size {
                let (ra, rb) = split(r);
                rel[(p * size + q) * size + r] = c1.rel(pa, qa, ra) && c2.rel(pb, qb, rb);
            }
        }
    }
    FinitePco {
        size,
        add,
        neg,
        zero: join(c1.zero, c2.zero),
        rel: Relation::Table(rel),
    }
}

/// Builds `R(x,y,z) ⇔ 0 ≠ y−x < z−x` from a strict order on `C∖{0}` given
/// by generating pairs. The order must satisfy `x < y ⇒ y−x < −x`.
pub fn r_from_order(group: &FinitePco, pairs: &[(usize, usize)]) -> Result<FinitePco> {
    let n = group.size;
    let z = group.zero;
    let mut lt = vec![false; n * n];
    for &(x, y) in pairs {
        for v in [x, y] {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, size: n });
            }
        }
        if x == z || y == z {
            return Err(Error::NotAnOrder("pairs must avoid the zero element".into()));
        }
        lt[x * n + y] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if lt[i * n + k] {
                for j in 0..n {
                    if lt[k * n + j] {
                        lt[i * n + j] = true;
                    }
                }
            }
        }
    }
    if let Some(x) = (0..n).find(|&x| lt[x * n + x]) {
        return Err(Error::NotAnOrder(format!("cycle through {x}")));
    }
    for x in 0..n {
        for y in 0..n {
            if lt[x * n + y] && !lt[group.sub(y, x) * n + group.neg(x)] {
                return Err(Error::OrderHypothesis { x, y });
            }
        }
    }
    let mut rel = vec![false; n * n * n];
    for x in 0..n {
        for y in 0..n {
            let d = group.sub(y, x);
            if d == z {
                continue;
            }
            for w in 0..n {
                rel[(x * n + y) * n + w] = lt[d * n + group.sub(w, x)];
            }
        }
    }
    Ok(group.with_relation(rel))
}

/// Closure of `A(C)` under `+` and `−`.
pub fn generated_subgroup(c: &FinitePco) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = c.non_isolated().into_iter().collect();
    loop {
        let mut next = set.clone();
        for &a in &set {
            next.insert(c.neg(a));
            for &b in &set {
                next.insert(c.add(a, b));
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// `f` is a group homomorphism and `R(x,y,z)` with `f(x),f(y),f(z)` pairwise
/// distinct implies `R(f(x),f(y),f(z))`.
pub fn c_hom_check(f: &[usize], c: &FinitePco, target: &FinitePco) -> bool {
    let n = c.size;
    if f.len() != n || f.iter().any(|&v| v >= target.size) {
        return false;
    }
    let hom = (0..n).all(|a| (0..n).all(|b| f[c.add(a, b)] == target.add(f[a], f[b])));
    hom && (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let (fx, fy, fz) = (f[x], f[y], f[z]);
                !c.rel(x, y, z) || fx == fy || fy == fz || fz == fx || target.rel(fx, fy, fz)
            })
        })
    })
}

/// Every finite abelian group of order at most `max`, up to isomorphism,
/// named by its primary decomposition, with empty relation.
pub fn abelian_groups_up_to(max: usize) -> Vec<(String, FinitePco)> {
    let mut out = Vec::new();
    for order in 1..=max {
        let mut factor_choices: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut m = order;
        let mut p = 2;
        while m > 1 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if e > 0 {
                factor_choices.push(
                    partitions(e)
                        .into_iter()
                        .map(|part| part.into_iter().map(|k| p.pow(k as u32)).collect())
                        .collect(),
                );
            }
            p += 1;
        }
        let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
        for choices in &factor_choices {
            combos = combos
                .iter()
                .flat_map(|c| {
                    choices.iter().map(move |f| {
                        let mut c = c.clone();
                        c.extend(f);
                        c
                    })
                })
                .collect();
        }
        for factors in combos {
            let name = if factors.is_empty() {
                "Z1".to_string()
            } else {
                factors.iter().map(|f| format!("Z{f}")).collect::<Vec<_>>().join("x")
            };
            let group = factors
                .iter()
                .map(|&f| make_cyclic_group(f).expect("positive order").group_only())
                .reduce(|a, b| make_product_pco(&a, &b))
                .unwrap_or_else(|| make_cyclic_group(1).expect("order 1").group_only());
            out.push((name, group));
        }
    }
    out
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All cyclic orders on `group`: every linear order on `C∖{0}` with
/// `x < y ⇒ y−x < −x`, turned into `R`.
pub fn co_structures(group: &FinitePco) -> Vec<FinitePco> {
    let z = group.zero;
    let elems: Vec<usize> = (0..group.size).filter(|&x| x != z).collect();
    let mut pos = vec![usize::MAX; group.size];
    let mut seq = Vec::new();
    let mut out = Vec::new();
    extend_order(group, &elems, &mut seq, &mut pos, &mut out);
    out
}

fn extend_order(
    g: &FinitePco,
    elems: &[usize],
    seq: &mut Vec<usize>,
    pos: &mut [usize],
    out: &mut Vec<FinitePco>,
) {
    let placed = |pos: &[usize], x: usize| pos[x] != usize::MAX;
    for (j, &y) in seq.iter().enumerate() {
        for &x in &seq[..j] {
            let (d, nx) = (g.sub(y, x), g.neg(x));
            match (placed(pos, d), placed(pos, nx)) {
                (false, true) => return,
                (true, true) if pos[d] >= pos[nx] => return,
                _ => {}
            }
        }
    }
    if seq.len() == elems.len() {
        let pairs: Vec<(usize, usize)> = seq.windows(2).map(|w| (w[0], w[1])).collect();
        if let Ok(c) = r_from_order(g, &pairs) {
            if c.is_co() {
                out.push(c);
            }
        }
        return;
    }
    for &e in elems {
        if !placed(pos, e) {
            pos[e] = seq.len();
            seq.push(e);
            extend_order(g, elems, seq, pos, out);
            seq.pop();
            pos[e] = usize::MAX;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z6_partial() -> FinitePco {
        let g = make_cyclic_group(6).unwrap().group_only();
        r_from_order(&g, &[(1, 2), (1, 5), (4, 2), (4, 5)]).unwrap()
    }

    #[test]
    fn canonical_z6_is_co() {
        let r = make_cyclic_group(6).unwrap().check_axioms();
        assert!(r.holds() && r.is_co());
    }

    #[test]
    fn lone_triple_is_not_cyclic() {
        let g = make_cyclic_group(6).unwrap();
        let c = FinitePco::new(g.add_rows(), g.neg_table().to_vec(), 0, &[[0, 1, 2]]).unwrap();
        let r = c.check_axioms();
        assert_eq!(r.verdicts[1], Verdict::fail("cyclic", vec![0, 1, 2]));
    }

    #[test]
    fn z5_squared_is_pco_not_co() {
        let c5 = make_cyclic_group(5).unwrap();
        let p = make_product_pco(&c5, &c5);
        let r = p.check_axioms();
        assert!(r.holds());
        assert!(!r.is_co());
        assert!(p.rel(0, 6, 12));
        assert!(!p.rel(0, 7, 11));
    }

    #[test]
    fn partial_order_example_on_z6() {
        let c = z6_partial();
        assert!(c.check_axioms().holds());
        let mut pairs = c.order_pairs();
        pairs.sort_unstable();
        assert_eq!(pairs, vec![(1, 2), (1, 5), (4, 2), (4, 5)]);
        assert!(!c.is_co());
    }

    #[test]
    fn empty_order_and_bad_hypothesis() {
        let g = make_cyclic_group(6).unwrap().group_only();
        assert!(r_from_order(&g, &[]).unwrap().triples().is_empty());
        assert_eq!(r_from_order(&g, &[(1, 3)]), Err(Error::OrderHypothesis { x: 1, y: 3 }));
        assert!(matches!(r_from_order(&g, &[(1, 2), (2, 1)]), Err(Error::NotAnOrder(_))));
    }

    #[test]
    fn tuples_on_z7() {
        let c = make_cyclic_group(7).unwrap();
        assert!(c.r_tuple(&[1, 3, 5, 0]).unwrap());
        assert!(!c.r_tuple(&[1, 5, 3, 0]).unwrap());
        assert!(!c.r_tuple(&[2, 2, 4]).unwrap());
        assert_eq!(c.r_tuple(&[1, 2]), Err(Error::Arity(2)));
    }

    #[test]
    fn tuple_lemma_properties() {
        let c = make_cyclic_group(7).unwrap();
        for a in 0..7 {
            for b in 0..7 {
                for d in 0..7 {
                    for e in 0..7 {
                        let xs = [a, b, d, e];
                        let all_triples = (0..4).all(|i| {
                            (i + 1..4).all(|j| (j + 1..4).all(|k| c.rel(xs[i], xs[j], xs[k])))
                        });
                        let holds = c.r_tuple(&xs).unwrap();
                        assert_eq!(holds, all_triples);
                        assert_eq!(holds, c.r_tuple(&[b, d, e, a]).unwrap());
                        for v in 0..7 {
                            let shifted: Vec<usize> = xs.iter().map(|&x| c.add(x, v)).collect();
                            assert_eq!(holds, c.r_tuple(&shifted).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn small_cyclic_groups() {
        assert!(make_cyclic_group(4).unwrap().rel(1, 2, 3));
        assert!(make_cyclic_group(1).unwrap().triples().is_empty());
        assert!(make_cyclic_group(5).unwrap().rel(3, 4, 0));
        assert!(make_cyclic_group(0).is_err());
    }

    #[test]
    fn product_with_trivial_factor_has_empty_relation() {
        // R₂ never holds on the trivial group, so neither does the product R.
        let c5 = make_cyclic_group(5).unwrap();
        let p = make_product_pco(&c5, &make_cyclic_group(1).unwrap());
        assert_eq!(p.size(), 5);
        assert!(p.triples().is_empty());
        assert_eq!(p.add_rows(), c5.add_rows());
    }

    #[test]
    fn non_isolated_and_subgroups() {
        let c4 = make_cyclic_group(4).unwrap();
        assert_eq!(c4.non_isolated(), vec![0, 1, 2, 3]);
        assert_eq!(generated_subgroup(&make_cyclic_group(6).unwrap()).len(), 6);
        let c2 = make_cyclic_group(2).unwrap();
        assert_eq!(generated_subgroup(&c2), BTreeSet::from([0]));
        let c5 = make_cyclic_group(5).unwrap();
        assert_eq!(generated_subgroup(&make_product_pco(&c5, &c5)).len(), 25);
    }

    #[test]
    fn c_homomorphisms() {
        let c5 = make_cyclic_group(5).unwrap();
        let id: Vec<usize> = (0..5).collect();
        assert!(c_hom_check(&id, &c5, &c5));
        let flip: Vec<usize> = (0..5).map(|x| (5 - x) % 5).collect();
        assert!(!c_hom_check(&flip, &c5, &c5));
        let c10 = make_cyclic_group(10).unwrap();
        let double: Vec<usize> = (0..5).map(|x| 2 * x).collect();
        assert!(c_hom_check(&double, &c5, &c10));
        let reduce: Vec<usize> = (0..10).map(|x| x % 5).collect();
        assert!(!c_hom_check(&reduce, &c10, &c5));
    }

    #[test]
    fn lemma_on_opposite_pairs() {
        for c in [z6_partial(), make_cyclic_group(7).unwrap()] {
            for (x, y) in c.order_pairs() {
                assert!(!c.rel(0, c.neg(x), c.neg(y)));
            }
        }
    }

    #[test]
    fn order_round_trip_over_small_groups() {
        for (_, g) in abelian_groups_up_to(6) {
            for c in co_structures(&g) {
                let rebuilt = r_from_order(&g, &c.order_pairs()).unwrap();
                assert_eq!(rebuilt, c);
            }
        }
    }

    #[test]
    fn abelian_group_census() {
        let names: Vec<String> = abelian_groups_up_to(9).into_iter().map(|(n, _)| n).collect();
        assert_eq!(
            names,
            ["Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z2xZ3", "Z7", "Z8", "Z4xZ2", "Z2xZ2xZ2", "Z9", "Z3xZ3"]
        );
    }

    #[test]
    fn cyclic_orders_exist_only_on_cyclic_groups() {
        let phi = |n: usize| (1..=n).filter(|&k| gcd(k, n) == 1).count();
        for (name, g) in abelian_groups_up_to(8) {
            let count = co_structures(&g).len();
            let cyclic = g.order_multiset().last() == Some(&g.size());
            let expected = if !cyclic { 0 } else if g.size() <= 2 { 1 } else { phi(g.size()) };
            assert_eq!(count, expected, "{name}");
        }
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }
}
