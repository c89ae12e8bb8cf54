//! Exact univariate polynomials over arbitrary-precision integers.

mod rational;
mod roots;
mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::PolyError;

pub use rational::{parse_rational, ten_pow_neg, Interval};
pub use roots::{
    isolate_real_roots, isolate_root_of_cubic, newton_check, refine_root, root_profile,
    IsolatedRoot, RootProfile,
};
pub use sturm::{sturm_count, SturmChain};

/// Dense integer polynomial, constant term first, with no trailing zeros.
/// The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `x - a`.
    pub fn linear(a: i64) -> Self {
        IntPoly::from_i64s(&[-a, 1])
    }

    /// `prod (x - a_i)`.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots
            .iter()
            .fold(IntPoly::one(), |acc, &a| &acc * &IntPoly::linear(a))
    }

    /// Falling factorial `(x - a)(x - a - 1)...(x - a - k + 1)`.
    pub fn falling(a: i64, k: usize) -> Self {
        let roots: Vec<i64> = (0..k as i64).map(|j| a + j).collect();
        IntPoly::from_roots(&roots)
    }

    #[inline]
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Coefficient of `x^i` for a possibly negative index (zero there).
    pub fn coeff_signed(&self, i: i64) -> BigInt {
        if i < 0 {
            BigInt::zero()
        } else {
            self.coeff(i as usize)
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    /// Sign of `p(x)` as -1, 0 or 1, computed on the integer numerator of the
    /// homogenised form so no rational normalisation happens.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let (a, b) = (x.numer(), x.denom());
        // Horner on sum c_i a^i b^(d-i), with b > 0
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        let mut p = self.divide_by_content();
        if p.leading().is_some_and(Signed::is_negative) {
            p = -p;
        }
        p
    }

    /// Divide by the (positive) content, preserving signs.
    pub fn divide_by_content(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        (0..k).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    /// Exact quotient `self / q`.
    ///
    /// Fails with [`PolyError::NonzeroRemainder`] unless `q` divides `self`
    /// with an integer quotient.
    pub fn div_exact(&self, q: &IntPoly) -> Result<IntPoly, PolyError> {
        let dq = q.degree().ok_or(PolyError::DivisionByZero)?;
        let Some(dp) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if dp < dq {
            return Err(PolyError::NonzeroRemainder);
        }
        let lq = q.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let top = &rem[k + dq];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lq);
            if !r.is_zero() {
                return Err(PolyError::NonzeroRemainder);
            }
            for (j, qc) in q.coeffs.iter().enumerate() {
                rem[k + j] -= &c * qc;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NonzeroRemainder);
        }
        Ok(IntPoly::new(quot))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`, with the
    /// multiplier's sign folded in so the result is a positive multiple of
    /// the true remainder.
    pub fn pseudo_rem_positive(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let Some(da) = self.degree() else {
            return IntPoly::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.leading().unwrap().clone();
        let lb_abs = lb.abs();
        let sgn = if lb.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let mut r = self.coeffs.clone();
        let mut top = da;
        loop {
            if top < db {
                break;
            }
            let lead = r[top].clone();
            if !lead.is_zero() {
                // r <- |lb| r - sgn * lead x^(top-db) b
                for c in r.iter_mut() {
                    *c *= &lb_abs;
                }
                let f = &lead * &sgn;
                for (j, bc) in b.coeffs.iter().enumerate() {
                    r[top - db + j] -= &f * bc;
                }
            }
            debug_assert!(r[top].is_zero());
            if top == 0 {
                break;
            }
            top -= 1;
        }
        IntPoly::new(r)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem_positive(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Squarefree decomposition of the primitive part: pairs `(f_i, i)` with
    /// each `f_i` primitive, squarefree, non-constant and pairwise coprime,
    /// such that `pp(self) = prod f_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        // A_0 = pp(p), A_j = gcd(A_{j-1}, A_{j-1}')
        let mut a = vec![self.primitive_part()];
        while a.last().unwrap().degree().unwrap_or(0) > 0 {
            let last = a.last().unwrap();
            a.push(last.gcd(&last.derivative()));
        }
        // P_j = A_{j-1} / A_j carries the roots of multiplicity >= j
        let p: Vec<IntPoly> = a
            .windows(2)
            .map(|w| w[0].div_exact(&w[1]).expect("gcd divides").primitive_part())
            .collect();
        let mut out = Vec::new();
        for j in 0..p.len() {
            let f = if j + 1 < p.len() {
                p[j].div_exact(&p[j + 1]).expect("nested squarefree parts")
            } else {
                p[j].clone()
            };
            let f = f.primitive_part();
            if f.degree().unwrap_or(0) > 0 {
                out.push((f, j + 1));
            }
        }
        out
    }

    /// Product of the distinct irreducible factors (primitive).
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) == 0 {
            return IntPoly::one();
        }
        let pp = self.primitive_part();
        pp.div_exact(&pp.gcd(&pp.derivative()))
            .expect("gcd divides")
            .primitive_part()
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: i64) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = IntPoly::linear(a);
        let mut p = self.clone();
        let mut k = 0;
        while let Ok(q) = p.div_exact(&lin) {
            if p.degree() == Some(0) {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }

    /// Coefficients as decimal strings, constant term first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings<S: AsRef<str>>(parts: &[S]) -> Result<IntPoly, PolyError> {
        parts
            .iter()
            .map(|s| {
                s.as_ref()
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| PolyError::Coefficient(s.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(IntPoly::new)
    }

    /// Coefficients as `i64` when they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(d)?;
        IntPoly::from_strings(&parts).map_err(serde::de::Error::custom)
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> IntPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(if negate_b { x - y } else { x + y });
    }
    IntPoly::new(out)
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str(if show_mag { "*x" } else { "x" })?,
                _ => write!(f, "{}x^{i}", if show_mag { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}
