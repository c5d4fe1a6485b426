use super::Pco;
use crate::error::{Error, Result};
use crate::mv::GammaBox;

/// The wound-round `ℤᵏ/ℤu` of `ℤᵏ` with componentwise order and strong unit
/// `u`. Elements are stored as the unique representative `v ≥ 0` with
/// `v ≱ u`.
///
/// Strict inequality in `ℤᵏ` means `≤` componentwise and `≠`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeQuotientPco {
    u: Vec<i64>,
    gbox: GammaBox,
}

impl LatticeQuotientPco {
    pub fn wound_round(u: &[i64]) -> Result<Self> {
        Ok(LatticeQuotientPco {
            u: u.to_vec(),
            gbox: GammaBox::new(u)?,
        })
    }

    pub fn rank(&self) -> usize {
        self.u.len()
    }

    pub fn unit(&self) -> &[i64] {
        &self.u
    }

    /// `v − m·u` with `m = minᵢ ⌊vᵢ/uᵢ⌋`.
    pub fn normalize(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.u.len() {
            return Err(Error::DimensionMismatch {
                expected: self.u.len(),
                found: v.len(),
            });
        }
        Ok(self.norm(v))
    }

    fn norm(&self, v: &[i64]) -> Vec<i64> {
        let m = v
            .iter()
            .zip(&self.u)
            .map(|(vi, ui)| vi.div_euclid(*ui))
            .min()
            .unwrap_or(0);
        v.iter().zip(&self.u).map(|(vi, ui)| vi - m * ui).collect()
    }

    fn leq_vec(a: &[i64], b: &[i64]) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }

    fn lt_vec(a: &[i64], b: &[i64]) -> bool {
        a != b && Self::leq_vec(a, b)
    }

    /// Integers `n` with `lo ≤ v + n·u ≤ lo + u` componentwise; at most two.
    fn window(&self, lo: &[i64], v: &[i64]) -> std::ops::RangeInclusive<i64> {
        let mut from = i64::MIN;
        let mut to = i64::MAX;
        for ((l, x), ui) in lo.iter().zip(v).zip(&self.u) {
            let d = l - x;
            from = from.max(div_ceil(d, *ui));
            to = to.min((d + ui).div_euclid(*ui));
        }
        from..=to
    }

    /// `∃ n₂, n₃: x < y + n₂u < z + n₃u < x + u`.
    pub fn lq_relation(&self, x: &[i64], y: &[i64], z: &[i64]) -> bool {
        let shift = |v: &[i64], n: i64| -> Vec<i64> {
            v.iter().zip(&self.u).map(|(a, ui)| a + n * ui).collect()
        };
        let top = shift(x, 1);
        for n2 in self.window(x, y) {
            let y2 = shift(y, n2);
            if !Self::lt_vec(x, &y2) {
                continue;
            }
            for n3 in self.window(x, z) {
                let z3 = shift(z, n3);
                if Self::lt_vec(&y2, &z3) && Self::lt_vec(&z3, &top) {
                    return true;
                }
            }
        }
        false
    }

    /// The box `[0,u]` as an index space.
    pub fn gamma_box(&self) -> &GammaBox {
        &self.gbox
    }

    /// Points of `]0,u[`.
    pub fn box_interior(&self) -> Vec<Vec<i64>> {
        (1..self.gbox.len() - 1).map(|i| self.gbox.point(i)).collect()
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

impl Pco for LatticeQuotientPco {
    type Elem = Vec<i64>;

    fn zero(&self) -> Vec<i64> {
        vec![0; self.u.len()]
    }

    fn add(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.norm(&s)
    }

    fn neg(&self, a: &Vec<i64>) -> Vec<i64> {
        let s: Vec<i64> = a.iter().map(|x| -x).collect();
        self.norm(&s)
    }

    fn rel(&self, x: &Vec<i64>, y: &Vec<i64>, z: &Vec<i64>) -> bool {
        self.lq_relation(x, y, z)
    }

    /// `{0} ∪ {x ∈ ]0,u[ : x < y or y < x for some y ∈ ]0,u[}` in box order.
    fn non_isolated(&self) -> Vec<Vec<i64>> {
        let interior = self.box_interior();
        let mut out = vec![self.zero()];
        out.extend(
            interior
                .iter()
                .filter(|x| interior.iter().any(|y| Self::lt_vec(x, y) || Self::lt_vec(y, x)))
                .cloned(),
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pco::make_cyclic_group;

    #[test]
    fn normal_forms() {
        let c = LatticeQuotientPco::wound_round(&[2, 3]).unwrap();
        assert_eq!(c.normalize(&[5, 7]).unwrap(), vec![1, 1]);
        assert_eq!(c.normalize(&[1, 1]).unwrap(), vec![1, 1]);
        assert_eq!(c.normalize(&[-1, 0]).unwrap(), vec![1, 3]);
        assert_eq!(c.zero(), vec![0, 0]);
        assert!(matches!(c.normalize(&[1]), Err(Error::DimensionMismatch { .. })));
        assert!(LatticeQuotientPco::wound_round(&[0]).is_err());
    }

    #[test]
    fn rank_one_matches_cyclic_order() {
        for n in 1..=9 {
            let lq = LatticeQuotientPco::wound_round(&[n as i64]).unwrap();
            let c = make_cyclic_group(n).unwrap();
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let v = |a: usize| vec![a as i64];
                        assert_eq!(lq.rel(&v(x), &v(y), &v(z)), c.rel(x, y, z));
                    }
                }
            }
        }
    }

    #[test]
    fn relation_examples() {
        let c = LatticeQuotientPco::wound_round(&[4]).unwrap();
        assert!(c.rel(&vec![1], &vec![2], &vec![3]));
        assert!(!c.rel(&vec![1], &vec![1], &vec![2]));
        let c = LatticeQuotientPco::wound_round(&[2, 3]).unwrap();
        assert!(!c.rel(&vec![0, 0], &vec![1, 0], &vec![0, 1]));
        assert!(c.rel(&vec![0, 0], &vec![1, 0], &vec![1, 1]));
    }

    #[test]
    fn non_isolated_boxes() {
        let c = LatticeQuotientPco::wound_round(&[2, 3]).unwrap();
        assert_eq!(c.non_isolated().len(), 11);
        let sq = LatticeQuotientPco::wound_round(&[1, 1]).unwrap();
        assert_eq!(sq.non_isolated(), vec![vec![0, 0]]);
    }

    #[test]
    fn non_isolated_closed_under_negation() {
        for u in [[2, 3], [3, 3], [1, 4]] {
            let c = LatticeQuotientPco::wound_round(&u).unwrap();
            let a = c.non_isolated();
            for x in &a {
                assert!(a.contains(&c.neg(x)));
                for y in &a {
                    let zero = c.zero();
                    if *x != zero && *y != zero {
                        assert_eq!(
                            c.lt0(x, y),
                            c.lt0(&c.neg(y), &c.neg(x)),
                            "{x:?} {y:?}"
                        );
                    }
                    let diff_in = a.contains(&c.sub(y, x));
                    assert_eq!(diff_in, c.leq0(x, y) || c.leq0(y, x), "{x:?} {y:?}");
                }
            }
        }
    }
}
