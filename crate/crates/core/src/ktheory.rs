//! Chern characters on the projective plane and the two Euler pairings.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::chow::ChowP2;
use crate::error::{domain, Error, Result};
use crate::exactmath::{rat, Rational};

/// A K-theory class on the plane recorded by its Chern character
/// `(rank, degree, ch₂)`.
///
/// `ch₂ − degree²/2` is always an integer (it is `−c₂`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChernP2 {
    r: i64,
    c: i64,
    e: Rational,
}

impl ChernP2 {
    pub fn new(r: i64, c: i64, e: Rational) -> Result<Self> {
        let c2 = &e - rat(c * c, 2);
        if !c2.is_integer() {
            return Err(domain(format!(
                "({r},{c},{e}) is not an integral class: ch2 - c^2/2 = {c2}"
            )));
        }
        Ok(ChernP2 { r, c, e })
    }

    /// Construct from known-integral data; panics otherwise. Meant for
    /// constants in code and tests.
    pub fn of(r: i64, c: i64, e: Rational) -> Self {
        Self::new(r, c, e).expect("integral Chern character")
    }

    pub fn rank(&self) -> i64 {
        self.r
    }

    pub fn degree(&self) -> i64 {
        self.c
    }

    pub fn ch2(&self) -> &Rational {
        &self.e
    }

    /// The Chern character as a class `r + c·h + e·h²` in `A*(P²)`.
    pub fn to_chow(&self) -> ChowP2 {
        ChowP2::new(
            Rational::integer(self.r),
            Rational::integer(self.c),
            self.e.clone(),
        )
    }

    /// Derived dual: `(r, −c, e)`.
    pub fn dual(&self) -> Self {
        ChernP2 {
            r: self.r,
            c: -self.c,
            e: self.e.clone(),
        }
    }

    /// Tensor with `O(k)`.
    pub fn twist(&self, k: i64) -> Self {
        let e = &self.e + Rational::integer(k * self.c) + rat(k * k * self.r, 2);
        ChernP2 {
            r: self.r,
            c: self.c + k * self.r,
            e,
        }
    }

    /// Shift by one in the derived category: negates the class.
    pub fn shift(&self) -> Self {
        -self
    }
}

/// Named classes appearing throughout the wall computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardClass {
    /// `O(k)`.
    LineBundle(i64),
    /// `I_Z(k)` with `|Z| = n`.
    IdealTwisted { n: i64, k: i64 },
    /// The skyscraper `O_p`.
    Point,
    /// `O_l(k)` for a line `l`.
    LineSupport(i64),
    /// A sheaf in `M_d`: support of degree `d`, Hilbert polynomial `dm + 1`.
    Moduli(i64),
}

impl StandardClass {
    pub fn chern(self) -> Result<ChernP2> {
        Ok(match self {
            StandardClass::LineBundle(k) => ChernP2 {
                r: 1,
                c: k,
                e: rat(k * k, 2),
            },
            StandardClass::IdealTwisted { n, k } => {
                if n < 0 {
                    return Err(domain(format!("ideal sheaf of {n} points")));
                }
                ChernP2 {
                    r: 1,
                    c: k,
                    e: rat(k * k, 2) - Rational::integer(n),
                }
            }
            StandardClass::Point => ChernP2 {
                r: 0,
                c: 0,
                e: Rational::one(),
            },
            StandardClass::LineSupport(k) => ChernP2 {
                r: 0,
                c: 1,
                e: rat(2 * k - 1, 2),
            },
            StandardClass::Moduli(d) => {
                if d < 1 {
                    return Err(domain(format!("M_d requires d >= 1, got {d}")));
                }
                ChernP2 {
                    r: 0,
                    c: d,
                    e: rat(2 - 3 * d, 2),
                }
            }
        })
    }
}

pub fn line_bundle(k: i64) -> ChernP2 {
    StandardClass::LineBundle(k).chern().unwrap()
}

pub fn ideal_twisted(n: i64, k: i64) -> Result<ChernP2> {
    StandardClass::IdealTwisted { n, k }.chern()
}

pub fn point() -> ChernP2 {
    StandardClass::Point.chern().unwrap()
}

pub fn line_support(k: i64) -> ChernP2 {
    StandardClass::LineSupport(k).chern().unwrap()
}

pub fn moduli(d: i64) -> Result<ChernP2> {
    StandardClass::Moduli(d).chern()
}

/// `∫ ch(v)·ch(w)·td(P²)`, with no dualization of either slot.
///
/// This is the pairing that defines orthogonality of determinant-line-bundle
/// classes against the moduli class.
pub fn euler_product(v: &ChernP2, w: &ChernP2) -> Rational {
    let (r, c, e) = (v.r, v.c, &v.e);
    let (r2, c2, e2) = (w.r, w.c, &w.e);
    Rational::integer(r) * e2
        + Rational::integer(c * c2)
        + e * Rational::integer(r2)
        + rat(3 * (r * c2 + c * r2), 2)
        + Rational::integer(r * r2)
}

/// `χ(v, w) = Σ (−1)^i ext^i(v, w) = ∫ ch(v)^∨·ch(w)·td(P²)`.
pub fn euler_hom(v: &ChernP2, w: &ChernP2) -> Rational {
    euler_product(&v.dual(), w)
}

/// `χ(v ⊗ O(m)) = quadratic·m² + linear·m + constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    pub quadratic: Rational,
    pub linear: Rational,
    pub constant: Rational,
}

impl HilbertPolynomial {
    pub fn eval(&self, m: i64) -> Rational {
        let m = Rational::integer(m);
        &self.quadratic * &m * &m + &self.linear * &m + &self.constant
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [
            (&self.quadratic, "m^2"),
            (&self.linear, "m"),
            (&self.constant, ""),
        ];
        let mut first = true;
        for (c, var) in terms {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if var.is_empty() || mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "{var}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn hilbert_polynomial(v: &ChernP2) -> HilbertPolynomial {
    let (r, c) = (v.r, v.c);
    HilbertPolynomial {
        quadratic: rat(r, 2),
        linear: Rational::integer(c) + rat(3 * r, 2),
        constant: &v.e + rat(3 * c, 2) + Rational::integer(r),
    }
}

impl fmt::Display for ChernP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.c, self.e)
    }
}

impl fmt::Debug for ChernP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"r,c,e"`, optionally wrapped in parentheses, e.g. `"1,3,-7/2"`.
impl FromStr for ChernP2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let [r, c, e] = parts.as_slice() else {
            return Err(Error::Parse(format!("expected r,c,e but got {s:?}")));
        };
        let int = |x: &str| {
            x.parse::<i64>()
                .map_err(|_| Error::Parse(format!("expected an integer, got {x:?}")))
        };
        ChernP2::new(int(r)?, int(c)?, e.parse()?)
    }
}

impl Add<&ChernP2> for &ChernP2 {
    type Output = ChernP2;
    fn add(self, w: &ChernP2) -> ChernP2 {
        ChernP2 {
            r: self.r + w.r,
            c: self.c + w.c,
            e: &self.e + &w.e,
        }
    }
}

impl Add for ChernP2 {
    type Output = ChernP2;
    fn add(self, w: ChernP2) -> ChernP2 {
        &self + &w
    }
}

impl Sub<&ChernP2> for &ChernP2 {
    type Output = ChernP2;
    fn sub(self, w: &ChernP2) -> ChernP2 {
        self + &(-w)
    }
}

impl Sub for ChernP2 {
    type Output = ChernP2;
    fn sub(self, w: ChernP2) -> ChernP2 {
        &self - &w
    }
}

impl Neg for &ChernP2 {
    type Output = ChernP2;
    fn neg(self) -> ChernP2 {
        ChernP2 {
            r: -self.r,
            c: -self.c,
            e: -&self.e,
        }
    }
}

impl Neg for ChernP2 {
    type Output = ChernP2;
    fn neg(self) -> ChernP2 {
        -&self
    }
}

/// Integer multiples stay integral.
impl Mul<&ChernP2> for i64 {
    type Output = ChernP2;
    fn mul(self, v: &ChernP2) -> ChernP2 {
        ChernP2 {
            r: self * v.r,
            c: self * v.c,
            e: &v.e * self,
        }
    }
}
