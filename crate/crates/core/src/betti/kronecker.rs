//! Poincaré polynomials of moduli of stable Kronecker modules via the
//! Harder–Narasimhan recursion.
//!
//! For the `m`-arrow Kronecker quiver with dimension vector `(e, f)` the stack
//! of all representations has motive
//! `I(e, f) = q^{m·e·f} / (|GL_e(F_q)|·|GL_f(F_q)|)`. Every representation has a
//! unique HN filtration with strictly decreasing slope `e_k/(e_k + f_k)`, so
//!
//! ```text
//! I(d) = A(d) + Σ_{d = d_1 + … + d_s, s ≥ 2, slopes decreasing}
//!              Π_{k<l} q^{−⟨d_l, d_k⟩} · Π_k A(d_k)
//! ```
//!
//! with Euler form `⟨(e,f),(e',f')⟩ = e·e' + f·f' − m·e·f'`. For coprime
//! `(e, f)` stable equals semistable and `(q − 1)·A(e, f)` is the Poincaré
//! polynomial of the (smooth, projective) moduli space.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;

use super::PoincarePolynomial;
use crate::error::{domain, Error, Result};
use crate::exactmath::{QPoly, QRational};

/// A dimension vector `(e, f)`: `e` at the source, `f` at the sink.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector {
    pub e: u32,
    pub f: u32,
}

impl DimVector {
    pub fn new(e: u32, f: u32) -> Result<Self> {
        if e == 0 && f == 0 {
            return Err(domain("dimension vector (0,0)"));
        }
        Ok(DimVector { e, f })
    }

    pub fn is_coprime(&self) -> bool {
        self.e.gcd(&self.f) == 1
    }

    /// Compare slopes `e/(e+f)` exactly.
    fn slope_cmp(&self, other: &DimVector) -> Ordering {
        let lhs = self.e as u64 * (other.e + other.f) as u64;
        let rhs = other.e as u64 * (self.e + self.f) as u64;
        lhs.cmp(&rhs)
    }

    /// Expected dimension `m·e·f − e² − f² + 1` of the moduli space.
    pub fn expected_dim(&self, m: u32) -> i64 {
        let (e, f, m) = (self.e as i64, self.f as i64, m as i64);
        m * e * f - e * e - f * f + 1
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.e, self.f)
    }
}

/// `|GL_n(F_q)| = Π_{i=0}^{n−1} (q^n − q^i)` as a polynomial in `q`.
pub fn gl_order(n: u32) -> QPoly {
    let n = n as usize;
    let qn = QPoly::q().pow(n as u32);
    (0..n).map(|i| &qn - &QPoly::q().pow(i as u32)).product()
}

struct HnRecursion {
    arrows: u32,
    memo: HashMap<DimVector, QRational>,
}

impl HnRecursion {
    fn euler_form(&self, a: DimVector, b: DimVector) -> i64 {
        let (e, f) = (a.e as i64, a.f as i64);
        let (e2, f2) = (b.e as i64, b.f as i64);
        e * e2 + f * f2 - self.arrows as i64 * e * f2
    }

    /// Ordered decompositions of `d` into ≥ 2 nonzero parts with strictly
    /// decreasing slope.
    fn hn_types(d: DimVector) -> Vec<Vec<DimVector>> {
        fn rec(
            rest: (u32, u32),
            prev: Option<DimVector>,
            cur: &mut Vec<DimVector>,
            out: &mut Vec<Vec<DimVector>>,
        ) {
            if rest == (0, 0) {
                if cur.len() >= 2 {
                    out.push(cur.clone());
                }
                return;
            }
            for a in 0..=rest.0 {
                for b in 0..=rest.1 {
                    if a == 0 && b == 0 {
                        continue;
                    }
                    let part = DimVector { e: a, f: b };
                    if prev.is_some_and(|p| part.slope_cmp(&p) != Ordering::Less) {
                        continue;
                    }
                    cur.push(part);
                    rec((rest.0 - a, rest.1 - b), Some(part), cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec((d.e, d.f), None, &mut Vec::new(), &mut out);
        out
    }

    /// Motive of the semistable stack of dimension vector `d`.
    fn semistable(&mut self, d: DimVector) -> Result<QRational> {
        if let Some(a) = self.memo.get(&d) {
            return Ok(a.clone());
        }
        let all = QRational::new(
            QPoly::q().pow(self.arrows * d.e * d.f),
            &gl_order(d.e) * &gl_order(d.f),
        )?;
        let mut strata = QRational::zero();
        for parts in Self::hn_types(d) {
            let mut exponent = 0i64;
            for (k, &earlier) in parts.iter().enumerate() {
                for &later in &parts[k + 1..] {
                    exponent -= self.euler_form(later, earlier);
                }
            }
            let mut term = QRational::q_pow(exponent);
            for &part in &parts {
                term = &term * &self.semistable(part)?;
            }
            strata = &strata + &term;
        }
        let a = &all - &strata;
        self.memo.insert(d, a.clone());
        Ok(a)
    }
}

/// `P(N(m; e, f))`, the Poincaré polynomial of the moduli space of stable
/// `m`-Kronecker modules of coprime dimension vector `(e, f)`.
///
/// Fails with [`Error::Convention`] if the recursion does not produce a
/// polynomial with nonnegative coefficients of the expected degree.
pub fn kronecker_poincare(m: u32, dv: DimVector) -> Result<PoincarePolynomial> {
    if m == 0 {
        return Err(domain("Kronecker quiver needs at least one arrow"));
    }
    if !dv.is_coprime() {
        return Err(domain(format!("dimension vector {dv} is not coprime")));
    }
    let mut rec = HnRecursion {
        arrows: m,
        memo: HashMap::new(),
    };
    let a = rec.semistable(dv)?;
    let poly = (&QRational::from(&QPoly::q() - &QPoly::one()) * &a).to_poly()?;

    let expected = dv.expected_dim(m);
    let degree = poly.degree().map(|d| d as i64);
    let ok = if expected < 0 {
        poly.is_zero()
    } else {
        degree == Some(expected)
    };
    if !ok {
        return Err(Error::Convention(format!(
            "N({m};{dv}) has degree {degree:?}, expected {expected}"
        )));
    }
    if !poly.has_nonnegative_coeffs() {
        return Err(Error::Convention(format!(
            "N({m};{dv}) has a negative Betti number: {poly}"
        )));
    }
    PoincarePolynomial::new(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dv(e: u32, f: u32) -> DimVector {
        DimVector::new(e, f).unwrap()
    }

    #[test]
    fn small_anchors() {
        assert_eq!(
            kronecker_poincare(3, dv(1, 1)).unwrap().poly(),
            &QPoly::from_i64s(&[1, 1, 1])
        );
        assert_eq!(
            kronecker_poincare(3, dv(1, 0)).unwrap().poly(),
            &QPoly::one()
        );
        // N(m;1,1) = P^{m−1}.
        for m in 1..=6 {
            let p = kronecker_poincare(m, dv(1, 1)).unwrap();
            assert_eq!(p.poly(), &crate::exactmath::projective_poincare(m - 1));
        }
    }

    #[test]
    fn n6_betti_numbers() {
        let expect = QPoly::from_i64s(&[
            1, 1, 3, 5, 10, 14, 23, 30, 41, 46, 51, 46, 41, 30, 23, 14, 10, 5, 3, 1, 1,
        ]);
        assert_eq!(kronecker_poincare(3, dv(5, 4)).unwrap().poly(), &expect);
    }

    #[test]
    fn two_one_is_the_grassmannian() {
        // N(m;2,1) ≅ Gr(2, m).
        for m in 2..=6 {
            let p = kronecker_poincare(m, dv(2, 1)).unwrap();
            assert_eq!(
                p.poly(),
                &crate::exactmath::grassmannian_poincare(2, m).unwrap()
            );
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(kronecker_poincare(3, dv(2, 2)).is_err());
        assert!(kronecker_poincare(0, dv(1, 1)).is_err());
        assert!(DimVector::new(0, 0).is_err());
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(0), QPoly::one());
        assert_eq!(gl_order(1), QPoly::from_i64s(&[-1, 1]));
        // |GL_2(F_2)| = 6
        assert_eq!(gl_order(2).eval(&2.into()), 6.into());
    }

    #[test]
    fn hn_types_have_decreasing_slopes() {
        let types = HnRecursion::hn_types(dv(2, 1));
        assert!(types.contains(&vec![dv(1, 0), dv(1, 1)]));
        assert!(types.contains(&vec![dv(2, 0), dv(0, 1)]));
        assert!(!types.contains(&vec![dv(0, 1), dv(2, 0)]));
        for t in &types {
            assert!(t
                .windows(2)
                .all(|w| w[0].slope_cmp(&w[1]) == Ordering::Greater));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn outputs_palindromic_with_unit_constant(m in 2u32..=4, e in 1u32..=4, f in 1u32..=4) {
            prop_assume!(e.gcd(&f) == 1);
            let d = dv(e, f);
            prop_assume!(d.expected_dim(m) >= 0);
            let p = kronecker_poincare(m, d).unwrap();
            prop_assert!(p.poly().is_palindromic().unwrap());
            prop_assert_eq!(p.poly().coeff(0), 1.into());
            prop_assert_eq!(p.poly().degree(), Some(d.expected_dim(m) as usize));
        }
    }
}
