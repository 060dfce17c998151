use std::fmt;

use lgcheck_core::{rat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::AbelMonoError;

/// Safety net on the number of translate/invert rounds.
pub const REDUCTION_CAP: usize = 10_000;

/// `τ = x + y·i` with `y > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UpperHalfPoint {
    x: Rational,
    y: Rational,
}

impl UpperHalfPoint {
    pub fn new(x: Rational, y: Rational) -> Result<Self, AbelMonoError> {
        if !y.is_positive() {
            return Err(AbelMonoError::NotInUpperHalfPlane(y.to_string()));
        }
        Ok(UpperHalfPoint { x, y })
    }

    /// `x + y·i` from small integer fractions.
    pub fn from_ratios(xn: i64, xd: i64, yn: i64, yd: i64) -> Result<Self, AbelMonoError> {
        Self::new(rat(xn, xd), rat(yn, yd))
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn norm_sq(&self) -> Rational {
        &self.x * &self.x + &self.y * &self.y
    }

    /// `|x| ≤ 1/2`, `|τ| ≥ 1`, with `x = −1/2` excluded and `x ≥ 0` on the
    /// unit circle.
    pub fn is_reduced(&self) -> bool {
        let half = rat(1, 2);
        let n = self.norm_sq();
        self.x > -half.clone()
            && self.x <= half
            && n >= Rational::one()
            && !(n == Rational::one() && self.x.is_negative())
    }
}

pub(crate) fn fmt_complex(x: &Rational, y: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let imag = if y.is_one() {
        "i".to_string()
    } else if *y == -Rational::one() {
        "-i".to_string()
    } else {
        format!("{y}i")
    };
    match (x.is_zero(), y.is_zero()) {
        (_, true) => write!(f, "{x}"),
        (true, false) => write!(f, "{imag}"),
        (false, false) if y.is_negative() => write!(f, "{x}{imag}"),
        (false, false) => write!(f, "{x}+{imag}"),
    }
}

impl fmt::Display for UpperHalfPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_complex(&self.x, &self.y, f)
    }
}

/// `[[a, b], [c, d]]` with `ad − bc = 1`, acting by `τ ↦ (aτ + b)/(cτ + d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sl2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Sl2 {
    pub fn identity() -> Self {
        Sl2 {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// `τ ↦ τ + n`.
    pub fn translation(n: BigInt) -> Self {
        Sl2 {
            b: n,
            ..Self::identity()
        }
    }

    /// `τ ↦ −1/τ`.
    pub fn inversion() -> Self {
        Sl2 {
            a: BigInt::zero(),
            b: -BigInt::one(),
            c: BigInt::one(),
            d: BigInt::zero(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Sl2) -> Sl2 {
        Sl2 {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    pub fn act(&self, p: &UpperHalfPoint) -> UpperHalfPoint {
        let (a, b, c, d) = (
            Rational::from(self.a.clone()),
            Rational::from(self.b.clone()),
            Rational::from(self.c.clone()),
            Rational::from(self.d.clone()),
        );
        let ysq = &p.y * &p.y;
        let den_re = &c * &p.x + &d;
        let den = &den_re * &den_re + &c * &c * &ysq;
        let x = ((&a * &p.x + &b) * &den_re + &a * &c * &ysq) / &den;
        let y = Rational::from(self.det()) * &p.y / &den;
        UpperHalfPoint { x, y }
    }

    pub fn entries(&self) -> [[BigInt; 2]; 2] {
        [
            [self.a.clone(), self.b.clone()],
            [self.c.clone(), self.d.clone()],
        ]
    }
}

impl fmt::Display for Sl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// Canonical representative of `τ` in the standard fundamental domain and
/// the `SL₂(ℤ)` element taking `τ` there.
pub fn reduce_fundamental(tau: &UpperHalfPoint) -> Result<(UpperHalfPoint, Sl2), AbelMonoError> {
    let half = rat(1, 2);
    let mut p = tau.clone();
    let mut m = Sl2::identity();
    for _ in 0..REDUCTION_CAP {
        let shift = (&p.x - &half).ceil().to_integer();
        if !shift.is_zero() {
            let t = Sl2::translation(-shift);
            p = t.act(&p);
            m = t.compose(&m);
        }
        let n = p.norm_sq();
        if n < Rational::one() || (n == Rational::one() && p.x.is_negative()) {
            let s = Sl2::inversion();
            p = s.act(&p);
            m = s.compose(&m);
            continue;
        }
        debug_assert!(p.is_reduced());
        debug_assert_eq!(m.act(tau), p);
        return Ok((p, m));
    }
    Err(AbelMonoError::IterationCap(REDUCTION_CAP))
}
