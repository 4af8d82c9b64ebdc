//! Exact arithmetic over quadratic number fields.
//!
//! Eigenvalues of strongly regular graphs are roots of a monic integer
//! quadratic, so they live in `Q(√D)` for some squarefree `D ≥ 0`. All
//! parameter identities in this crate are evaluated in that field, via
//! [`QuadraticNumber`], so equality claims are decidable instead of
//! tolerance-bound.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Exact rational scalar used for counting averages.
pub type Rational = Ratio<i64>;

/// An exact element `(p + q√d)/r` with `r > 0`, `gcd(p, q, r) = 1`,
/// `d` squarefree and `q = 0 ⇔ d = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    p: i64,
    q: i64,
    r: i64,
    d: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    /// Mixing radicands, e.g. `√2 + √3`, leaves the single-radical form.
    #[error("incompatible radicands {0} and {1}")]
    IncompatibleRadicands(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of negative rational")]
    NegativeRadicand,
    #[error("arithmetic overflow in exact computation")]
    Overflow,
}

fn i64_of(v: i128) -> Result<i64, ExactError> {
    i64::try_from(v).map_err(|_| ExactError::Overflow)
}

/// Strips the largest square factor: returns `(f, d')` with `d = f² d'`.
fn squarefree_part(d: u64) -> (u64, u64) {
    let mut factor = 1u64;
    let mut rest = d;
    let mut p = 2u64;
    while p * p <= rest {
        while rest % (p * p) == 0 {
            rest /= p * p;
            factor *= p;
        }
        p += 1;
    }
    (factor, rest)
}

impl QuadraticNumber {
    /// Builds `(p + q√d)/r` and canonicalizes. `r` must be nonzero.
    pub fn new(p: i64, q: i64, r: i64, d: u64) -> Result<Self, ExactError> {
        if r == 0 {
            return Err(ExactError::DivisionByZero);
        }
        let mut p = p as i128;
        let mut q = q as i128;
        let mut r = r as i128;
        let mut d = d;
        if q == 0 || d == 0 {
            q = 0;
            d = 0;
        } else {
            let (f, rest) = squarefree_part(d);
            q *= f as i128;
            d = rest;
            if d == 1 {
                // √1 folds into the rational part.
                p += q;
                q = 0;
                d = 0;
            }
        }
        if r < 0 {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if g > 1 {
            p /= g;
            q /= g;
            r /= g;
        }
        Ok(Self {
            p: i64_of(p)?,
            q: i64_of(q)?,
            r: i64_of(r)?,
            d,
        })
    }

    pub fn from_int(n: i64) -> Self {
        Self { p: n, q: 0, r: 1, d: 0 }
    }

    pub fn from_rational(x: Rational) -> Self {
        Self::new(*x.numer(), 0, *x.denom(), 0).expect("reduced rational cannot overflow")
    }

    /// `√d` for a nonnegative integer `d`.
    pub fn sqrt_int(d: u64) -> Self {
        Self::new(0, 1, 1, d).expect("unit radical cannot overflow")
    }

    /// `√x` of a nonnegative rational: `√(n/m) = √(nm)/m`.
    pub fn sqrt_rational(x: Rational) -> Result<Self, ExactError> {
        if x.is_negative() {
            return Err(ExactError::NegativeRadicand);
        }
        let n = *x.numer() as i128;
        let m = *x.denom() as i128;
        let rad = u64::try_from(n * m).map_err(|_| ExactError::Overflow)?;
        Self::new(0, 1, i64_of(m)?, rad)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0 && self.q == 0
    }

    pub fn is_rational(&self) -> bool {
        self.q == 0
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| Rational::new(self.p, self.r))
    }

    pub fn is_integer(&self) -> bool {
        self.q == 0 && self.r == 1
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.p)
    }

    pub fn to_f64(&self) -> f64 {
        (self.p as f64 + self.q as f64 * (self.d as f64).sqrt()) / self.r as f64
    }

    fn common_radicand(&self, other: &Self) -> Result<u64, ExactError> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(ExactError::IncompatibleRadicands(a, b)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.common_radicand(other)?;
        let (p1, q1, r1) = (self.p as i128, self.q as i128, self.r as i128);
        let (p2, q2, r2) = (other.p as i128, other.q as i128, other.r as i128);
        Self::new(
            i64_of(p1 * r2 + p2 * r1)?,
            i64_of(q1 * r2 + q2 * r1)?,
            i64_of(r1 * r2)?,
            d,
        )
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.common_radicand(other)? as i128;
        let (p1, q1, r1) = (self.p as i128, self.q as i128, self.r as i128);
        let (p2, q2, r2) = (other.p as i128, other.q as i128, other.r as i128);
        Self::new(
            i64_of(p1 * p2 + q1 * q2 * d)?,
            i64_of(p1 * q2 + q1 * p2)?,
            i64_of(r1 * r2)?,
            d as u64,
        )
    }

    /// Multiplicative inverse via the conjugate: `r(p - q√d)/(p² - q²d)`.
    pub fn checked_inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let (p, q, r) = (self.p as i128, self.q as i128, self.r as i128);
        let norm = p * p - q * q * self.d as i128;
        debug_assert!(norm != 0, "nonzero element with zero field norm");
        let (num_p, num_q, den) = if norm < 0 {
            (-r * p, r * q, -norm)
        } else {
            (r * p, -r * q, norm)
        };
        Self::new(i64_of(num_p)?, i64_of(num_q)?, i64_of(den)?, self.d)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn neg(&self) -> Self {
        Self { p: -self.p, q: -self.q, r: self.r, d: self.d }
    }

    /// Sign of the value: -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        if self.q == 0 {
            return self.p.signum() as i32;
        }
        if self.p == 0 {
            return self.q.signum() as i32;
        }
        // sign of p + q√d with p, q nonzero
        let (sp, sq) = (self.p.signum(), self.q.signum());
        if sp == sq {
            return sp as i32;
        }
        // opposite signs: compare p² with q²d
        let p2 = (self.p as i128) * (self.p as i128);
        let q2d = (self.q as i128) * (self.q as i128) * self.d as i128;
        match p2.cmp(&q2d) {
            Ordering::Greater => sp as i32,
            Ordering::Less => sq as i32,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Exact comparison; `None` when the radicands are incompatible.
    pub fn try_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.checked_sub(other).ok()?;
        Some(diff.signum().cmp(&0))
    }
}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other)
    }
}

impl From<i64> for QuadraticNumber {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for QuadraticNumber {
    fn from(x: Rational) -> Self {
        Self::from_rational(x)
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: QuadraticNumber) -> QuadraticNumber {
                self.$checked(&rhs).expect("exact arithmetic failed")
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);
forward_op!(Div, div, checked_div);

impl std::ops::Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber::neg(&self)
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 0 {
            if self.r == 1 {
                return write!(f, "{}", self.p);
            }
            return write!(f, "{}/{}", self.p, self.r);
        }
        let radical = match self.q {
            1 => format!("sqrt({})", self.d),
            -1 => format!("-sqrt({})", self.d),
            q => format!("{}*sqrt({})", q, self.d),
        };
        let numer = if self.p == 0 {
            radical
        } else if self.q > 0 {
            format!("{}+{}", self.p, radical)
        } else {
            format!("{}{}", self.p, radical)
        };
        if self.r == 1 {
            write!(f, "{}", numer)
        } else {
            write!(f, "({})/{}", numer, self.r)
        }
    }
}

impl fmt::Debug for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Roots of the monic quadratic `x² + bx + c` with rational coefficients,
/// returned as `(smaller, larger)`. Errors when the discriminant is negative.
pub fn monic_quadratic_roots(
    b: Rational,
    c: Rational,
) -> Result<(QuadraticNumber, QuadraticNumber), ExactError> {
    let disc = b * b - Rational::from_integer(4) * c;
    let root = QuadraticNumber::sqrt_rational(disc)?;
    let minus_b = QuadraticNumber::from_rational(-b);
    let two = QuadraticNumber::from_int(2);
    let smaller = minus_b.checked_sub(&root)?.checked_div(&two)?;
    let larger = minus_b.checked_add(&root)?.checked_div(&two)?;
    Ok((smaller, larger))
}

/// Roots of `ax² + bx + c` with rational coefficients; degenerates to the
/// linear solution when `a = 0`. Returns roots in increasing order (a single
/// root is returned twice).
pub fn quadratic_roots(
    a: Rational,
    b: Rational,
    c: Rational,
) -> Result<(QuadraticNumber, QuadraticNumber), ExactError> {
    if a.is_zero() {
        if b.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let x = QuadraticNumber::from_rational(-c / b);
        return Ok((x, x));
    }
    let (lo, hi) = monic_quadratic_roots(b / a, c / a)?;
    if a.is_negative() {
        Ok((hi, lo))
    } else {
        Ok((lo, hi))
    }
}
