use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::Interval;
use super::sturm::SturmChain;
use super::IntPoly;
use crate::error::PolyError;

/// A distinct non-integer real root with its isolating interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatedRoot {
    pub interval: Interval,
    pub multiplicity: usize,
}

/// Exact summary of the real roots of a nonzero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootProfile {
    pub degree: usize,
    /// `(value, multiplicity)`, ascending by value.
    #[serde(with = "integer_roots_repr")]
    pub integer_roots: Vec<(BigInt, usize)>,
    /// Roots in the open interval `(1, 2)`, with multiplicity.
    pub count_in_1_2: usize,
    /// Roots in `(2, inf)`, with multiplicity.
    pub count_above_2: usize,
    /// All real roots, with multiplicity.
    pub real_root_count: usize,
    pub real_rooted: bool,
    /// Enclosure of the sum of `2 - u` over roots `u` in `(1, 2)`.
    pub omega: Interval,
    /// One entry per distinct non-integer real root, ascending.
    pub isolated: Vec<IsolatedRoot>,
}

impl RootProfile {
    /// Every root (real or complex, with multiplicity) is an integer.
    pub fn all_roots_integral(&self) -> bool {
        self.integer_roots.iter().map(|(_, k)| k).sum::<usize>() == self.degree
    }

    /// Every root lies in `{1, 2, 3}`.
    pub fn all_roots_in_123(&self) -> bool {
        self.all_roots_integral()
            && self
                .integer_roots
                .iter()
                .all(|(v, _)| *v >= BigInt::one() && *v <= BigInt::from(3))
    }

    pub fn multiplicity_of(&self, v: i64) -> usize {
        let v = BigInt::from(v);
        self.integer_roots
            .iter()
            .find(|(x, _)| *x == v)
            .map_or(0, |&(_, k)| k)
    }

    pub fn omega_width(&self) -> BigRational {
        self.omega.width()
    }
}

mod integer_roots_repr {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Root {
        value: String,
        multiplicity: usize,
    }

    pub fn serialize<S: Serializer>(roots: &[(BigInt, usize)], s: S) -> Result<S::Ok, S::Error> {
        roots
            .iter()
            .map(|(v, k)| Root {
                value: v.to_string(),
                multiplicity: *k,
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(BigInt, usize)>, D::Error> {
        Vec::<Root>::deserialize(d)?
            .into_iter()
            .map(|r| {
                r.value
                    .parse::<BigInt>()
                    .map(|v| (v, r.multiplicity))
                    .map_err(serde::de::Error::custom)
            })
            .collect()
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Integer `B` with every real root of `p` in `(-B, B)`.
fn cauchy_bound(p: &IntPoly) -> BigInt {
    let lead = p.leading().expect("nonzero").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_default();
    let (q, r) = max.div_rem(&lead);
    q + BigInt::from(if r.is_zero() { 1 } else { 2 })
}

/// Isolating intervals `(lo, hi]` for the distinct real roots, ascending.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<Interval> {
    isolate_with(&SturmChain::new(p))
}

fn isolate_with(chain: &SturmChain) -> Vec<Interval> {
    if chain.base().degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let b = BigRational::from_integer(cauchy_bound(chain.base()));
    let mut out = Vec::new();
    let mut work = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = work.pop() {
        match chain.count(&lo, &hi) {
            0 => {}
            1 => out.push(Interval::new(lo, hi)),
            _ => {
                let mid = (&lo + &hi) / int(2);
                work.push((mid.clone(), hi));
                work.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Shrink `(lo, hi]`, holding exactly one root of the chain's base, until
/// `stop` accepts it. Exact hits collapse to a point interval.
fn refine_until(
    chain: &SturmChain,
    mut iv: Interval,
    stop: impl Fn(&Interval) -> bool,
) -> Interval {
    let base = chain.base();
    loop {
        if iv.lo == iv.hi || stop(&iv) {
            return iv;
        }
        if base.sign_at(&iv.hi) == 0 {
            return Interval::point(iv.hi);
        }
        let mid = iv.midpoint();
        if chain.count(&iv.lo, &mid) == 1 {
            iv = Interval::new(iv.lo, mid);
        } else {
            iv = Interval::new(mid, iv.hi);
        }
    }
}

/// Refine an isolating interval of `p` to width at most `tol`.
pub fn refine_root(p: &IntPoly, iv: Interval, tol: &BigRational) -> Interval {
    let chain = SturmChain::new(p);
    refine_until(&chain, iv, |iv| iv.width() <= *tol)
}

/// Enclose the unique root of `c` in the open window `(lo, hi)` to width `tol`.
pub fn isolate_root_of_cubic(
    c: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
    tol: &BigRational,
) -> Result<Interval, PolyError> {
    if c.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(PolyError::Interval(format!("empty window ({lo}, {hi})")));
    }
    let chain = SturmChain::new(c);
    let found = chain.count_open(lo, hi);
    if found != 1 {
        return Err(PolyError::RootCount(found));
    }
    // when `hi` is itself a root, pull the right end in until only the
    // interior root remains in (lo, right]
    let mut right = hi.clone();
    if chain.base().sign_at(hi) == 0 {
        let mut step = (hi - lo) / int(2);
        loop {
            right = hi - &step;
            if chain.count(lo, &right) == 1 {
                break;
            }
            step /= int(2);
        }
    }
    Ok(refine_until(
        &chain,
        Interval::new(lo.clone(), right),
        |iv| iv.width() <= *tol,
    ))
}

/// Newton's inequalities on the coefficient sequence:
/// `a_i^2 C(d,i-1) C(d,i+1) >= a_{i-1} a_{i+1} C(d,i)^2` for `0 < i < d`.
/// Every real-rooted polynomial satisfies them.
pub fn newton_check(p: &IntPoly) -> bool {
    let Some(d) = p.degree() else {
        return true;
    };
    let binom: Vec<BigInt> = {
        let mut row = vec![BigInt::one()];
        for k in 0..d {
            let next = &row[k] * BigInt::from(d - k) / BigInt::from(k + 1);
            row.push(next);
        }
        row
    };
    (1..d).all(|i| {
        let a = p.coeff(i);
        let lhs = &a * &a * &binom[i - 1] * &binom[i + 1];
        let rhs = p.coeff(i - 1) * p.coeff(i + 1) * &binom[i] * &binom[i];
        lhs >= rhs
    })
}

/// Full real-root profile of a nonzero polynomial. `tol` bounds the width of
/// the `omega` enclosure.
pub fn root_profile(p: &IntPoly, tol: &BigRational) -> Result<RootProfile, PolyError> {
    let degree = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if !tol.is_positive() {
        return Err(PolyError::Interval(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let one = int(1);
    let two = int(2);
    let factors: Vec<(IntPoly, usize, SturmChain)> = p
        .squarefree_decomposition()
        .into_iter()
        .map(|(f, k)| {
            let chain = SturmChain::new(&f);
            (f, k, chain)
        })
        .collect();
    let count_in_1_2: usize = factors
        .iter()
        .map(|(_, k, c)| k * c.count_open(&one, &two))
        .sum();
    let count_above_2: usize = factors
        .iter()
        .map(|(_, k, c)| k * c.count_above(&two))
        .sum();
    // omega's width is at most the sum of the (multiplicity-weighted) root widths
    let per_root = if count_in_1_2 > 0 {
        tol / BigRational::from_integer(BigInt::from(count_in_1_2))
    } else {
        tol.clone()
    };

    let mut integer_roots = Vec::new();
    let mut isolated = Vec::new();
    let mut real_root_count = 0;
    let mut omega_lo = BigRational::zero();
    let mut omega_hi = BigRational::zero();
    for (f, mult, chain) in &factors {
        // integer roots divide the constant term once x-powers are removed
        let low = f.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
        let trailing = f.coeff(low);
        for iv in isolate_with(chain) {
            real_root_count += mult;
            let iv = refine_until(chain, iv, |iv| iv.width() < one);
            if let Some(c) = integer_in(&iv) {
                if (c.is_zero() || trailing.is_multiple_of(&c)) && f.eval_int(&c).is_zero() {
                    integer_roots.push((c, *mult));
                    continue;
                }
            }
            // non-integer root: settle its position relative to (1, 2)
            let mut iv = refine_until(chain, iv, |iv| {
                iv.hi <= one || iv.lo >= two || (iv.lo >= one && iv.hi <= two)
            });
            if iv.lo >= one && iv.hi <= two {
                iv = refine_until(chain, iv, |iv| iv.width() <= per_root);
                let k = BigRational::from_integer(BigInt::from(*mult));
                omega_lo += (&two - &iv.hi) * &k;
                omega_hi += (&two - &iv.lo) * &k;
            }
            isolated.push(IsolatedRoot {
                interval: iv,
                multiplicity: *mult,
            });
        }
    }
    integer_roots.sort();
    isolated.sort_by(|a, b| a.interval.lo.cmp(&b.interval.lo));

    Ok(RootProfile {
        degree,
        integer_roots,
        count_in_1_2,
        count_above_2,
        real_root_count,
        real_rooted: real_root_count == degree,
        omega: Interval::new(omega_lo, omega_hi),
        isolated,
    })
}

/// The only integer in `(lo, hi]` when the width is below one.
fn integer_in(iv: &Interval) -> Option<BigInt> {
    if iv.lo == iv.hi {
        return iv.lo.is_integer().then(|| iv.lo.to_integer());
    }
    let c = iv.hi.floor().to_integer();
    if BigRational::from_integer(c.clone()) > iv.lo {
        Some(c)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::ten_pow_neg;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn tol() -> BigRational {
        ten_pow_neg(9)
    }

    #[test]
    fn integer_cubic() {
        let prof = root_profile(&IntPoly::from_i64s(&[-6, 11, -6, 1]), &tol()).unwrap();
        let vals: Vec<(i64, usize)> = prof
            .integer_roots
            .iter()
            .map(|(v, k)| (v.try_into().unwrap(), *k))
            .collect();
        assert_eq!(vals, vec![(1, 1), (2, 1), (3, 1)]);
        assert_eq!(prof.count_in_1_2, 0);
        assert!(prof.real_rooted);
        assert!(prof.omega.contains(&BigRational::zero()));
        assert!(prof.all_roots_in_123());
    }

    #[test]
    fn complex_quadratic() {
        let prof = root_profile(&IntPoly::from_i64s(&[10, -5, 1]), &tol()).unwrap();
        assert!(!prof.real_rooted);
        assert_eq!(prof.real_root_count, 0);
        assert!(prof.integer_roots.is_empty());
    }

    #[test]
    fn repeated_root() {
        let prof = root_profile(&IntPoly::from_roots(&[1, 1, 1]), &tol()).unwrap();
        assert_eq!(prof.integer_roots, vec![(BigInt::from(1), 3)]);
        assert_eq!(prof.real_root_count, 3);
        assert!(prof.real_rooted);
    }

    #[test]
    fn hs7_quadratic_factor() {
        // x^2 - 7x + 11 has roots (7 +- sqrt 5)/2
        let p = &IntPoly::from_roots(&[0, 1, 2, 3, 4, 5]) * &IntPoly::from_i64s(&[11, -7, 1]);
        let prof = root_profile(&p, &tol()).unwrap();
        assert_eq!(prof.integer_roots.len(), 6);
        assert_eq!(prof.isolated.len(), 2);
        assert!(prof.real_rooted);
        let a = &prof.isolated[0].interval;
        let b = &prof.isolated[1].interval;
        assert!(a.lo >= q(2, 1) && a.hi <= q(3, 1));
        assert!(b.lo >= q(4, 1) && b.hi <= q(5, 1));
    }

    #[test]
    fn omega_of_planted_root() {
        // (2x - 3)^2 (x - 1): root 3/2 twice, omega = 1 exactly
        let lin = IntPoly::from_i64s(&[-3, 2]);
        let p = &(&lin * &lin) * &IntPoly::linear(1);
        let prof = root_profile(&p, &tol()).unwrap();
        assert_eq!(prof.count_in_1_2, 2);
        assert!(prof.omega.contains(&q(1, 1)));
        // x^2 - 2 has sqrt 2 in (1, 2): omega = 2 - sqrt 2
        let prof = root_profile(&IntPoly::from_i64s(&[-2, 0, 1]), &tol()).unwrap();
        assert_eq!(prof.count_in_1_2, 1);
        assert!(prof.omega.width() <= tol());
        assert!(prof.omega.lo < q(5858, 10000) && prof.omega.hi > q(5857, 10000));
    }

    #[test]
    fn cubic_windows() {
        let xi3 = IntPoly::from_i64s(&[-7, 10, -5, 1]);
        let iv = isolate_root_of_cubic(&xi3, &q(1, 1), &q(2, 1), &ten_pow_neg(6)).unwrap();
        assert!(iv.width() <= ten_pow_neg(6));
        assert!(iv.lo > q(1430, 1000) && iv.hi < q(1431, 1000));
        // a window with two roots is refused
        let two = IntPoly::from_roots(&[1, 2]);
        assert_eq!(
            isolate_root_of_cubic(&two, &q(0, 1), &q(3, 1), &tol()),
            Err(PolyError::RootCount(2))
        );
        assert_eq!(
            isolate_root_of_cubic(&two, &q(5, 1), &q(6, 1), &tol()),
            Err(PolyError::RootCount(0))
        );
        // exact rational root on the window boundary is excluded
        let iv = isolate_root_of_cubic(&two, &q(1, 2), &q(2, 1), &tol()).unwrap();
        assert!(iv.contains(&q(1, 1)));
    }

    #[test]
    fn newton_examples() {
        assert!(newton_check(&IntPoly::from_roots(&[1, 2, 3])));
        assert!(!newton_check(&IntPoly::from_i64s(&[1, 0, 1])));
        assert!(newton_check(&IntPoly::from_roots(&[1; 10])));
    }
}
