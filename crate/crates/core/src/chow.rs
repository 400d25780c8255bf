//! Truncated Chow rings used by the Grothendieck–Riemann–Roch degree
//! computations.
//!
//! [`ChowP2`] is `A*(P²) = Q[h]/(h³)`. [`ChowCurveP2`] is the ring of
//! (parameter curve) × (plane) on the basis `{1, h, h², p, ph, ph²}` with
//! `p² = 0` and `h³ = 0`, where `p` is the point class of the parameter curve.
//! The curve may be a pencil `P¹` or a plane curve; only `p` enters degree
//! extraction, so both are modeled by the same ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactmath::{rat, Rational};

/// A class `c0 + c1·h + c2·h²` on the plane.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ChowP2 {
    pub c0: Rational,
    pub c1: Rational,
    pub c2: Rational,
}

impl ChowP2 {
    pub fn new(c0: Rational, c1: Rational, c2: Rational) -> Self {
        ChowP2 { c0, c1, c2 }
    }

    /// Pull back along the projection (curve) × (plane) → (plane).
    pub fn pullback(&self) -> ChowCurveP2 {
        ChowCurveP2 {
            a1: self.c0.clone(),
            ah: self.c1.clone(),
            ah2: self.c2.clone(),
            ..ChowCurveP2::default()
        }
    }
}

impl Mul<&ChowP2> for &ChowP2 {
    type Output = ChowP2;
    fn mul(self, y: &ChowP2) -> ChowP2 {
        ChowP2 {
            c0: &self.c0 * &y.c0,
            c1: &self.c0 * &y.c1 + &self.c1 * &y.c0,
            c2: &self.c0 * &y.c2 + &self.c1 * &y.c1 + &self.c2 * &y.c0,
        }
    }
}

/// Basis monomials of [`ChowCurveP2`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Monomial {
    One,
    H,
    H2,
    P,
    PH,
    PH2,
}

impl Monomial {
    pub const ALL: [Monomial; 6] = [
        Monomial::One,
        Monomial::H,
        Monomial::H2,
        Monomial::P,
        Monomial::PH,
        Monomial::PH2,
    ];
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tag: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*')
            .collect();
        Ok(match tag.as_str() {
            "1" => Monomial::One,
            "h" => Monomial::H,
            "h^2" | "h2" => Monomial::H2,
            "p" => Monomial::P,
            "ph" => Monomial::PH,
            "ph^2" | "ph2" => Monomial::PH2,
            _ => return Err(Error::Domain(format!("unknown Chow monomial {s:?}"))),
        })
    }
}

/// A class on (parameter curve) × (plane).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ChowCurveP2 {
    pub a1: Rational,
    pub ah: Rational,
    pub ah2: Rational,
    pub ap: Rational,
    pub aph: Rational,
    pub aph2: Rational,
}

impl ChowCurveP2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        ChowCurveP2 {
            a1: Rational::one(),
            ..Self::default()
        }
    }

    pub fn h() -> Self {
        ChowCurveP2 {
            ah: Rational::one(),
            ..Self::default()
        }
    }

    pub fn h2() -> Self {
        ChowCurveP2 {
            ah2: Rational::one(),
            ..Self::default()
        }
    }

    pub fn p() -> Self {
        ChowCurveP2 {
            ap: Rational::one(),
            ..Self::default()
        }
    }

    /// Build from coefficients on `{1, h, h², p, ph, ph²}`.
    pub fn from_coeffs(c: [Rational; 6]) -> Self {
        let [a1, ah, ah2, ap, aph, aph2] = c;
        ChowCurveP2 {
            a1,
            ah,
            ah2,
            ap,
            aph,
            aph2,
        }
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        match m {
            Monomial::One => self.a1.clone(),
            Monomial::H => self.ah.clone(),
            Monomial::H2 => self.ah2.clone(),
            Monomial::P => self.ap.clone(),
            Monomial::PH => self.aph.clone(),
            Monomial::PH2 => self.aph2.clone(),
        }
    }

    /// Coefficient lookup by textual tag such as `"ph^2"`.
    pub fn coeff_by_tag(&self, tag: &str) -> Result<Rational> {
        Ok(self.coeff(tag.parse()?))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.map(|c| c * s)
    }

    pub fn is_p_free(&self) -> bool {
        self.ap.is_zero() && self.aph.is_zero() && self.aph2.is_zero()
    }

    /// The `p`-free part `a1 + ah·h + ah2·h²`.
    pub fn base_part(&self) -> ChowP2 {
        ChowP2::new(self.a1.clone(), self.ah.clone(), self.ah2.clone())
    }

    /// The cofactor of `p`: the class `x` with `self = base + p·x`.
    pub fn p_part(&self) -> ChowP2 {
        ChowP2::new(self.ap.clone(), self.aph.clone(), self.aph2.clone())
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        ChowCurveP2 {
            a1: f(&self.a1),
            ah: f(&self.ah),
            ah2: f(&self.ah2),
            ap: f(&self.ap),
            aph: f(&self.aph),
            aph2: f(&self.aph2),
        }
    }

    fn zip(&self, o: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        ChowCurveP2 {
            a1: f(&self.a1, &o.a1),
            ah: f(&self.ah, &o.ah),
            ah2: f(&self.ah2, &o.ah2),
            ap: f(&self.ap, &o.ap),
            aph: f(&self.aph, &o.aph),
            aph2: f(&self.aph2, &o.aph2),
        }
    }
}

/// `exp(alpha·p + beta·h)`, truncated by `p² = 0` and `h³ = 0`.
pub fn exp_class(alpha: &Rational, beta: &Rational) -> ChowCurveP2 {
    let half_beta_sq = beta * beta * rat(1, 2);
    ChowCurveP2 {
        a1: Rational::one(),
        ah: beta.clone(),
        ah2: half_beta_sq.clone(),
        ap: alpha.clone(),
        aph: alpha * beta,
        aph2: alpha * &half_beta_sq,
    }
}

/// The relative Todd class `1 + 3/2·h + h²` of the plane, pulled back.
pub fn todd_relative() -> ChowCurveP2 {
    ChowCurveP2 {
        a1: Rational::one(),
        ah: rat(3, 2),
        ah2: Rational::one(),
        ..ChowCurveP2::default()
    }
}

impl Mul<&ChowCurveP2> for &ChowCurveP2 {
    type Output = ChowCurveP2;
    fn mul(self, y: &ChowCurveP2) -> ChowCurveP2 {
        // (b + p·x)(b' + p·x') = b·b' + p·(b·x' + x·b')
        let (b, x) = (self.base_part(), self.p_part());
        let (b2, x2) = (y.base_part(), y.p_part());
        let base = &b * &b2;
        let bx2 = &b * &x2;
        let xb2 = &x * &b2;
        ChowCurveP2 {
            a1: base.c0,
            ah: base.c1,
            ah2: base.c2,
            ap: bx2.c0 + xb2.c0,
            aph: bx2.c1 + xb2.c1,
            aph2: bx2.c2 + xb2.c2,
        }
    }
}

impl Mul for ChowCurveP2 {
    type Output = ChowCurveP2;
    fn mul(self, y: ChowCurveP2) -> ChowCurveP2 {
        &self * &y
    }
}

impl Add<&ChowCurveP2> for &ChowCurveP2 {
    type Output = ChowCurveP2;
    fn add(self, y: &ChowCurveP2) -> ChowCurveP2 {
        self.zip(y, |a, b| a + b)
    }
}

impl Add for ChowCurveP2 {
    type Output = ChowCurveP2;
    fn add(self, y: ChowCurveP2) -> ChowCurveP2 {
        &self + &y
    }
}

impl Sub<&ChowCurveP2> for &ChowCurveP2 {
    type Output = ChowCurveP2;
    fn sub(self, y: &ChowCurveP2) -> ChowCurveP2 {
        self.zip(y, |a, b| a - b)
    }
}

impl Sub for ChowCurveP2 {
    type Output = ChowCurveP2;
    fn sub(self, y: ChowCurveP2) -> ChowCurveP2 {
        &self - &y
    }
}

impl Neg for &ChowCurveP2 {
    type Output = ChowCurveP2;
    fn neg(self) -> ChowCurveP2 {
        self.map(|a| -a)
    }
}

impl fmt::Display for ChowCurveP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}·h + {}·h^2 + {}·p + {}·p h + {}·p h^2",
            self.a1, self.ah, self.ah2, self.ap, self.aph, self.aph2
        )
    }
}
