use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::QPoly;
use crate::error::{Error, Result};

/// A rational function `num / den` in `q` with integer-coefficient numerator
/// and denominator. Common factors are cancelled on construction and the
/// denominator has a positive leading coefficient; equality is still decided
/// by cross-multiplication.
#[derive(Clone)]
pub struct QRational {
    num: QPoly,
    den: QPoly,
}

impl QRational {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain(
                "rational function with zero denominator".into(),
            ));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return QRational {
                num,
                den: QPoly::one(),
            };
        }
        let mut g = num.gcd(&den);
        if den.leading().is_some_and(|c| c.is_negative()) {
            g = -&g;
        }
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        QRational { num, den }
    }

    pub fn zero() -> Self {
        QRational {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRational::from(QPoly::one())
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = QPoly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            QRational::from(m)
        } else {
            QRational {
                num: QPoly::one(),
                den: m,
            }
        }
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        QRational::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &QRational) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// The polynomial this function equals, if the denominator divides
    /// the numerator exactly in `Z[q]`.
    pub fn to_poly(&self) -> Result<QPoly> {
        self.num.div_exact(&self.den).map_err(|_| {
            Error::Convention(format!(
                "({}) / ({}) is not a polynomial",
                self.num, self.den
            ))
        })
    }
}

impl From<QPoly> for QRational {
    fn from(p: QPoly) -> Self {
        QRational {
            num: p,
            den: QPoly::one(),
        }
    }
}

impl PartialEq for QRational {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for QRational {}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == QPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&QRational> for &QRational {
    type Output = QRational;
    fn add(self, rhs: &QRational) -> QRational {
        if self.den == rhs.den {
            return QRational::reduced(&self.num + &rhs.num, self.den.clone());
        }
        QRational::reduced(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&QRational> for &QRational {
    type Output = QRational;
    fn sub(self, rhs: &QRational) -> QRational {
        self + &(-rhs)
    }
}

impl Mul<&QRational> for &QRational {
    type Output = QRational;
    fn mul(self, rhs: &QRational) -> QRational {
        QRational::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
