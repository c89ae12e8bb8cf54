use num_rational::BigRational;
use num_traits::Signed;

use super::IntPoly;

/// Sturm chain of the squarefree part of a polynomial.
///
/// Built from sign-corrected pseudo-remainders with the positive content
/// stripped at each step, so every entry is an integer polynomial and the
/// sign pattern matches the classical rational chain.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let g = p.squarefree_part();
        let mut chain = vec![g.clone()];
        let d = g.derivative();
        if !d.is_zero() {
            chain.push(d.divide_by_content());
            loop {
                let n = chain.len();
                let r = chain[n - 2].pseudo_rem_positive(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push((-r).divide_by_content());
            }
        }
        SturmChain { chain }
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.chain
    }

    /// The squarefree polynomial the chain was built on.
    pub fn base(&self) -> &IntPoly {
        &self.chain[0]
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let s = lead_sign(p);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(lead_sign))
    }

    /// Distinct real roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Distinct real roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        let c = self.count(a, b);
        if c > 0 && self.base().sign_at(b) == 0 {
            c - 1
        } else {
            c
        }
    }

    /// Distinct real roots in `(a, +inf)`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations_at(a)
            .saturating_sub(self.variations_at_pos_inf())
    }

    /// Distinct real roots overall.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_inf()
            .saturating_sub(self.variations_at_pos_inf())
    }
}

fn lead_sign(p: &IntPoly) -> i8 {
    match p.leading() {
        Some(c) if c.is_negative() => -1,
        Some(_) => 1,
        None => 0,
    }
}

/// Number of distinct real roots of `p` in `(a, b]`.
pub fn sturm_count(p: &IntPoly, a: &BigRational, b: &BigRational) -> usize {
    SturmChain::new(p).count(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn examples() {
        let p = IntPoly::from_i64s(&[11, -7, 1]);
        assert_eq!(sturm_count(&p, &q(1, 1), &q(2, 1)), 0);
        assert_eq!(sturm_count(&p, &q(2, 1), &q(5, 1)), 2);
        let r = IntPoly::from_roots(&[1, 1, 2]);
        assert_eq!(sturm_count(&r, &q(0, 1), &q(3, 1)), 2);
        // half-open: right endpoint counts, left does not
        assert_eq!(sturm_count(&r, &q(1, 1), &q(2, 1)), 1);
        assert_eq!(sturm_count(&r, &q(0, 1), &q(1, 1)), 1);
        assert_eq!(SturmChain::new(&r).count_open(&q(0, 1), &q(2, 1)), 1);
        assert_eq!(SturmChain::new(&r).count_all(), 2);
        assert_eq!(
            SturmChain::new(&IntPoly::from_i64s(&[1, 0, 1])).count_all(),
            0
        );
    }

    proptest! {
        #[test]
        fn additive_over_breakpoints(
            roots in prop::collection::vec(-6i64..=6, 1..7),
            extra in prop::collection::vec(-9i64..=9, 0..3),
            mut cuts in prop::collection::vec((-70i64..=70, 1i64..=7), 3),
        ) {
            let base = IntPoly::from_roots(&roots);
            let p = &base * &IntPoly::new(vec![
                BigInt::from(extra.len() as i64 + 1), BigInt::from(0), BigInt::from(1),
            ]) + IntPoly::from_i64s(&extra);
            prop_assume!(!p.is_zero());
            let mut pts: Vec<BigRational> = cuts.drain(..).map(|(n, d)| q(n, d)).collect();
            pts.sort();
            prop_assume!(pts[0] < pts[1] && pts[1] < pts[2]);
            let chain = SturmChain::new(&p);
            prop_assert_eq!(
                chain.count(&pts[0], &pts[1]) + chain.count(&pts[1], &pts[2]),
                chain.count(&pts[0], &pts[2])
            );
        }
    }
}
