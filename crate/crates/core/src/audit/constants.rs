use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{PolyError, WorkError};
use crate::poly::{isolate_root_of_cubic, IntPoly, Interval, SturmChain};

/// Published values of `nroot(k)` for `k = 3..=10`.
pub const NROOT_TABLE: [u64; 8] = [9, 11, 14, 14, 16, 19, 21, 24];

pub fn xi_lower_bound() -> BigRational {
    BigRational::new(BigInt::from(32), BigInt::from(27))
}

/// The cubic whose root in `(1, 2)` is `ξ_k`, for `k` in `3..=5`.
pub fn xi_cubic(k: usize) -> Option<IntPoly> {
    let c: &[i64] = match k {
        3 => &[-7, 10, -5, 1],
        4 => &[-6, 8, -4, 1],
        5 => &[-9, 13, -6, 1],
        _ => return None,
    };
    Some(IntPoly::from_i64s(c))
}

/// Enclosure of `ξ_k` (`k` in `3..=5`) of width at most `tol`.
pub fn xi_enclosure(k: usize, tol: &BigRational) -> Result<Interval, PolyError> {
    let c = xi_cubic(k).ok_or_else(|| PolyError::Interval(format!("no cubic for k = {k}")))?;
    let (one, two) = (
        BigRational::one(),
        BigRational::from_integer(BigInt::from(2)),
    );
    let found = SturmChain::new(&c).count_open(&one, &two);
    if found != 1 {
        return Err(PolyError::RootCount(found));
    }
    isolate_root_of_cubic(&c, &one, &two, tol)
}

/// What is known about `ξ_k` for a given `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XiValue {
    /// `ξ_k = 2` for `k <= 2`.
    Exact(BigRational),
    Enclosure(Interval),
    /// Only `ξ_k > 32/27` is available.
    StrictLowerBound(BigRational),
}

/// Certified enclosures of `ξ_3, ξ_4, ξ_5` and the general lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiTable {
    pub xi_3: Interval,
    pub xi_4: Interval,
    pub xi_5: Interval,
    #[serde(with = "rational_str")]
    pub xi_lower_bound_k_ge_6: BigRational,
}

impl XiTable {
    pub fn compute(tol: &BigRational) -> Result<XiTable, PolyError> {
        Ok(XiTable {
            xi_3: xi_enclosure(3, tol)?,
            xi_4: xi_enclosure(4, tol)?,
            xi_5: xi_enclosure(5, tol)?,
            xi_lower_bound_k_ge_6: xi_lower_bound(),
        })
    }

    pub fn value(&self, k: usize) -> XiValue {
        match k {
            0..=2 => XiValue::Exact(BigRational::from_integer(BigInt::from(2))),
            3 => XiValue::Enclosure(self.xi_3.clone()),
            4 => XiValue::Enclosure(self.xi_4.clone()),
            5 => XiValue::Enclosure(self.xi_5.clone()),
            _ => XiValue::StrictLowerBound(self.xi_lower_bound_k_ge_6.clone()),
        }
    }

    /// Every enclosure lies strictly above 32/27.
    pub fn above_lower_bound(&self) -> bool {
        let lb = xi_lower_bound();
        [&self.xi_3, &self.xi_4, &self.xi_5]
            .iter()
            .all(|iv| iv.lo > lb)
    }

    pub fn width(&self) -> BigRational {
        [&self.xi_3, &self.xi_4, &self.xi_5]
            .iter()
            .map(|iv| iv.width())
            .max()
            .unwrap()
    }
}

/// `μ(x) = 1` for `x > 0`, else 0.
fn mu(x: &BigRational) -> BigInt {
    if x > &BigRational::zero() {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// `⌊v⌋ + μ(v - ⌊v⌋)`, i.e. the ceiling of `v`.
fn floor_plus_mu(v: &BigRational) -> BigInt {
    let f = v.floor();
    f.to_integer() + mu(&(v - &f))
}

/// `(2k - 1) / (2 - ξ)`.
fn root_bound(k: usize, xi: &BigRational) -> BigRational {
    let num = BigRational::from_integer(BigInt::from(2 * k as i64 - 1));
    num / (BigRational::from_integer(BigInt::from(2)) - xi)
}

/// The ceiling formula `⌈(2k-1)/(2-ξ_k)⌉`, using the `ξ` enclosure for
/// `k <= 5` (both ends must give the same integer; the enclosure is refined
/// until they do) and `32/27` for `k >= 6`.
pub fn nroot_formula(k: usize, tol: &BigRational) -> Result<u64, WorkError> {
    if k < 3 {
        return Err(WorkError::Invalid(format!("nroot needs k >= 3, got {k}")));
    }
    let to_u64 = |v: BigInt| -> Result<u64, WorkError> {
        u64::try_from(v).map_err(|_| WorkError::TooLarge("nroot overflows u64".into()))
    };
    if k >= 6 {
        return to_u64(floor_plus_mu(&root_bound(k, &xi_lower_bound())));
    }
    let mut tol = tol.clone();
    for _ in 0..64 {
        let iv = xi_enclosure(k, &tol).map_err(|e| WorkError::Invalid(e.to_string()))?;
        let lo = floor_plus_mu(&root_bound(k, &iv.lo));
        let hi = floor_plus_mu(&root_bound(k, &iv.hi));
        if lo == hi {
            return to_u64(hi);
        }
        tol /= BigRational::from_integer(BigInt::from(1000));
    }
    Err(WorkError::Invalid(format!(
        "nroot({k}) straddles an integer at every tested precision"
    )))
}

/// `nroot(k)`: the table for `3 <= k <= 10`, the ceiling formula beyond.
pub fn nroot(k: usize) -> Result<u64, WorkError> {
    match k {
        0..=2 => Err(WorkError::Invalid(format!("nroot needs k >= 3, got {k}"))),
        3..=10 => Ok(NROOT_TABLE[k - 3]),
        _ => nroot_formula(k, &crate::poly::ten_pow_neg(12)),
    }
}

/// Whether `a` divides `b`, with `0 | b` only for `b = 0`.
pub(crate) fn divides(a: i64, b: i64) -> bool {
    if a == 0 {
        b == 0
    } else {
        b.is_multiple_of(&a)
    }
}

pub(crate) mod rational_str {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        v.to_string().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        crate::poly::parse_rational(&String::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
