//! Determinant line bundles on `M_d` and their intersection numbers.
//!
//! Divisor classes are written in the basis `A = λ(O_p)` and `L`, the divisor
//! of sheaves whose support meets a fixed line in a special way. A class
//! `w ∈ K(P²)` orthogonal to the moduli class `v = (0, d, (2−3d)/2)` under
//! [`euler_product`] determines the divisor `λ(w)`. Since `λ` is linear,
//! writing `w = α·[O_p] + β·(−d, 1, −1/2)` gives
//! `λ(w) = α·A + β·D = (α + β(1−d))·A + β·L` via `D = (1−d)A + L`.
//!
//! Degrees of `λ(w)` on test curves come from GRR:
//! `deg λ(w)|_family = Coeff_{ph²}[ch(F)·td_rel·ch(w)]`.

use std::fmt;
use std::ops::{Add, Sub};

use crate::chow::{exp_class, todd_relative, ChowCurveP2, Monomial};
use crate::error::{domain, Error, Result};
use crate::exactmath::{rat, Rational};
use crate::ktheory::{
    euler_product, ideal_twisted, line_bundle, line_support, moduli, point, ChernP2,
};

/// The divisor `a·A + l·L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DivisorAL {
    pub a: Rational,
    pub l: Rational,
}

impl DivisorAL {
    pub fn new(a: Rational, l: Rational) -> Self {
        DivisorAL { a, l }
    }

    pub fn a() -> Self {
        DivisorAL {
            a: Rational::one(),
            l: Rational::zero(),
        }
    }

    pub fn l() -> Self {
        DivisorAL {
            a: Rational::zero(),
            l: Rational::one(),
        }
    }

    /// `k·A + L`.
    pub fn l_plus(k: Rational) -> Self {
        DivisorAL {
            a: k,
            l: Rational::one(),
        }
    }
}

impl Add<&DivisorAL> for &DivisorAL {
    type Output = DivisorAL;
    fn add(self, o: &DivisorAL) -> DivisorAL {
        DivisorAL {
            a: &self.a + &o.a,
            l: &self.l + &o.l,
        }
    }
}

impl Sub<&DivisorAL> for &DivisorAL {
    type Output = DivisorAL;
    fn sub(self, o: &DivisorAL) -> DivisorAL {
        DivisorAL {
            a: &self.a - &o.a,
            l: &self.l - &o.l,
        }
    }
}

/// Renders as e.g. `16A + L`, `A`, `-5A + L`, `3/2A - 2L`, or `0`.
impl fmt::Display for DivisorAL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, sym) in [(&self.a, "A"), (&self.l, "L")] {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "{sym}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Arithmetic genus of a plane curve of degree `d`.
pub fn genus(d: i64) -> Result<i64> {
    if d < 1 {
        return Err(domain(format!("genus requires d >= 1, got {d}")));
    }
    Ok((d - 1) * (d - 2) / 2)
}

/// The destabilizing subobject at the first (largest) wall of `M_d`:
/// `I_Z((d−2)/2)` with `|Z| = (d−2)/2` for even `d`, `O((d−3)/2)` for odd `d`.
pub fn first_wall_destabilizer(d: i64) -> Result<ChernP2> {
    if d < 3 {
        return Err(domain(format!("first wall requires d >= 3, got {d}")));
    }
    if d % 2 == 0 {
        let k = (d - 2) / 2;
        ideal_twisted(k, k)
    } else {
        Ok(line_bundle((d - 3) / 2))
    }
}

/// The class `w = (r, 1, e)` with `χ(w, v) = χ(w, v') = 0` under the
/// undualized pairing.
pub fn orthogonal_wall_class(v: &ChernP2, vprime: &ChernP2) -> Result<ChernP2> {
    // χ(w, u) = r·(e_u + 3c_u/2 + r_u) + c·(c_u + 3r_u/2) + e·r_u, linear in (r, c, e).
    // With c = 1 this is a 2×2 system in (r, e).
    let row = |u: &ChernP2| {
        let (ru, cu) = (Rational::integer(u.rank()), Rational::integer(u.degree()));
        let r_coef = u.ch2() + &cu * rat(3, 2) + &ru;
        let c_coef = &cu + &ru * rat(3, 2);
        (r_coef, ru, c_coef)
    };
    let (a11, a12, b1) = row(v);
    let (a21, a22, b2) = row(vprime);
    let det = &a11 * &a22 - &a12 * &a21;
    if det.is_zero() {
        return Err(Error::RankDeficient(format!(
            "no unique class orthogonal to {v} and {vprime} with c = 1"
        )));
    }
    // a11·r + a12·e = −b1, a21·r + a22·e = −b2.
    let r = (-&b1 * &a22 + &b2 * &a12) / &det;
    let e = (-&a11 * &b2 + &a21 * &b1) / &det;
    let r = r
        .to_i64()
        .ok_or_else(|| domain(format!("orthogonal class has non-integral rank {r}")))?;
    ChernP2::new(r, 1, e)
}

/// `λ(w)` in the basis `(A, L)` for `w` orthogonal to the class of `M_d`.
pub fn lambda_decompose(w: &ChernP2, d: i64) -> Result<DivisorAL> {
    let v = moduli(d)?;
    let pairing = euler_product(w, &v);
    if !pairing.is_zero() {
        return Err(domain(format!(
            "{w} is not orthogonal to the class of M_{d}: χ = {pairing}"
        )));
    }
    // w = α·(0,0,1) + β·(−d, 1, −1/2); orthogonality already forces r = −d·c.
    let beta = Rational::integer(w.degree());
    let alpha = w.ch2() + &beta * rat(1, 2);
    Ok(DivisorAL {
        a: alpha + &beta * (1 - d),
        l: beta,
    })
}

/// `λ(w)` for the wall of `M_d` destabilized by `vprime`.
pub fn wall_divisor(d: i64, vprime: &ChernP2) -> Result<DivisorAL> {
    let w = orthogonal_wall_class(&moduli(d)?, vprime)?;
    lambda_decompose(&w, d)
}

/// `B = k·A + L` with `k = (d−2)²(d+2)/8` (even `d`) or `(d−1)(d+4)(d−3)/8` (odd `d`).
pub fn nef_closed_form(d: i64) -> Result<DivisorAL> {
    if d < 3 {
        return Err(domain(format!("nef cone requires d >= 3, got {d}")));
    }
    let k = if d % 2 == 0 {
        rat((d - 2) * (d - 2) * (d + 2), 8)
    } else {
        rat((d - 1) * (d + 4) * (d - 3), 8)
    };
    Ok(DivisorAL::l_plus(k))
}

/// The two extremal rays `(A, B)` of the nef cone of `M_d`, with `B` the
/// divisor of the first wall. `B` is checked against [`nef_closed_form`].
pub fn nef_generators(d: i64) -> Result<(DivisorAL, DivisorAL)> {
    let b = wall_divisor(d, &first_wall_destabilizer(d)?)?;
    let closed = nef_closed_form(d)?;
    if b != closed {
        return Err(Error::Convention(format!(
            "first-wall divisor {b} differs from closed form {closed} at d = {d}"
        )));
    }
    Ok((DivisorAL::a(), b))
}

/// The nontrivial nef generator computed by the test-curve route instead:
/// `B = D + c·A` where `c` makes `B` vanish on the curve swept by the first
/// wall's destabilizing family.
pub fn nef_via_wall_family(d: i64) -> Result<DivisorAL> {
    let kind = if d % 2 == 0 {
        FamilyKind::EvenWall
    } else {
        FamilyKind::OddWall
    };
    let fam = family_class(kind, d)?;
    let a_r = intersection_degree(&fam, &point());
    let c = -intersection_degree(&fam, &d_class(d)).checked_div(&a_r)?;
    let dd = d_in_al(d)?;
    Ok(&dd + &DivisorAL::new(c, Rational::zero()))
}

/// Generators `(A, L)` of the effective cone of `M_d`.
pub fn effective_generators(d: i64) -> Result<(DivisorAL, DivisorAL)> {
    if d < 3 {
        return Err(domain(format!("effective cone requires d >= 3, got {d}")));
    }
    Ok((DivisorAL::a(), DivisorAL::l()))
}

/// The K-class `−d·[O] + [O_l]` whose determinant is `D`.
pub fn d_class(d: i64) -> ChernP2 {
    &(-d * &line_bundle(0)) + &line_support(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `P¹` of sheaves `O_C` with `C` moving in a pencil of degree-`d` curves.
    Pencil,
    /// A plane curve `T ≅ C` inside the Jacobian fiber over a fixed curve `C`.
    Jacobian,
    /// The curve contracted by the first wall, `d` even.
    EvenWall,
    /// The curve contracted by the first wall, `d` odd.
    OddWall,
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['_', '-'], "").as_str() {
            "pencil" => Ok(FamilyKind::Pencil),
            "jacobian" => Ok(FamilyKind::Jacobian),
            "evenwall" => Ok(FamilyKind::EvenWall),
            "oddwall" => Ok(FamilyKind::OddWall),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// Chern character of a one-parameter family of sheaves in `M_d`, as a class
/// on (parameter curve) × (plane).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyClass {
    pub chern: ChowCurveP2,
    pub kind: FamilyKind,
    pub degree_d: i64,
}

pub fn family_class(kind: FamilyKind, d: i64) -> Result<FamilyClass> {
    let g = Rational::integer(genus(d)?);
    let dr = Rational::integer(d);
    let zero = Rational::zero();
    let chern = match kind {
        // e^p − e^{−dh} + g·h²
        FamilyKind::Pencil => {
            let mut c = exp_class(&Rational::one(), &zero) - exp_class(&zero, &-&dr);
            c.ah2 += &g;
            c
        }
        // dh + d·ph + (g − d²/2)h² + (1 − g − 3d/2)ph²
        FamilyKind::Jacobian => ChowCurveP2 {
            ah: dr.clone(),
            aph: dr.clone(),
            ah2: &g - &dr * &dr * rat(1, 2),
            aph2: Rational::one() - &g - &dr * rat(3, 2),
            ..ChowCurveP2::zero()
        },
        // e^{(d−2)/2·h} − e^{−p − (d+2)/2·h} − (d−2)/2·h²
        FamilyKind::EvenWall => {
            if d % 2 != 0 {
                return Err(domain(format!("even-wall family needs even d, got {d}")));
            }
            let mut c =
                exp_class(&zero, &rat(d - 2, 2)) - exp_class(&-Rational::one(), &rat(-(d + 2), 2));
            c.ah2 -= &rat(d - 2, 2);
            c
        }
        // e^{p + (d−3)/2·h} − e^{−(d+3)/2·h} + h²
        FamilyKind::OddWall => {
            if d % 2 == 0 {
                return Err(domain(format!("odd-wall family needs odd d, got {d}")));
            }
            let mut c =
                exp_class(&Rational::one(), &rat(d - 3, 2)) - exp_class(&zero, &rat(-(d + 3), 2));
            c.ah2 += &Rational::one();
            c
        }
    };
    Ok(FamilyClass {
        chern,
        kind,
        degree_d: d,
    })
}

/// Degree of `λ(w)` on the family's parameter curve:
/// `Coeff_{ph²}[ch(F) · td_rel · ch(w)]`.
pub fn intersection_degree(fam: &FamilyClass, w: &ChernP2) -> Rational {
    let integrand = &(&fam.chern * &todd_relative()) * &w.to_chow().pullback();
    integrand.coeff(Monomial::PH2)
}

/// `D = (1−d)A + L`, solved from the degrees of `D`, `A`, `L` on the pencil
/// `P` and on the Jacobian curve `T`.
pub fn d_in_al(d: i64) -> Result<DivisorAL> {
    if d < 3 {
        return Err(domain(format!("requires d >= 3, got {d}")));
    }
    let pencil = family_class(FamilyKind::Pencil, d)?;
    let jac = family_class(FamilyKind::Jacobian, d)?;
    let dc = d_class(d);
    let d_p = intersection_degree(&pencil, &dc);
    let d_t = intersection_degree(&jac, &dc);

    // Intersection constants on the two test curves. A·P and A·T follow from
    // GRR; L·P = 0 and L·T = d·g come from the geometry of L.
    let a_p = intersection_degree(&pencil, &point());
    let a_t = intersection_degree(&jac, &point());
    let l_p = Rational::zero();
    let l_t = Rational::integer(d * genus(d)?);

    // a·(A·P) + l·(L·P) = D·P, a·(A·T) + l·(L·T) = D·T.
    let det = &a_p * &l_t - &l_p * &a_t;
    if det.is_zero() {
        return Err(Error::RankDeficient(
            "test curves do not separate A and L".into(),
        ));
    }
    let a = (&d_p * &l_t - &l_p * &d_t) / &det;
    let l = (&a_p * &d_t - &d_p * &a_t) / &det;
    Ok(DivisorAL { a, l })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ch(r: i64, c: i64, num: i64, den: i64) -> ChernP2 {
        ChernP2::of(r, c, rat(num, den))
    }

    fn lk(k: i64) -> DivisorAL {
        DivisorAL::l_plus(Rational::integer(k))
    }

    #[test]
    fn genus_values() {
        assert_eq!(genus(6).unwrap(), 10);
        assert_eq!(genus(3).unwrap(), 1);
        assert_eq!(genus(4).unwrap(), 3);
        assert!(genus(0).is_err());
    }

    #[test]
    fn first_wall_destabilizers() {
        assert_eq!(first_wall_destabilizer(6).unwrap(), ch(1, 2, 0, 1));
        assert_eq!(first_wall_destabilizer(5).unwrap(), ch(1, 1, 1, 2));
        assert_eq!(first_wall_destabilizer(4).unwrap(), ch(1, 1, -1, 2));
        assert!(first_wall_destabilizer(2).is_err());
    }

    #[test]
    fn orthogonal_classes() {
        let m6 = moduli(6).unwrap();
        assert_eq!(
            orthogonal_wall_class(&m6, &ch(1, 2, 0, 1)).unwrap(),
            ch(-6, 1, 41, 2)
        );
        for d in 3..=12 {
            let w = orthogonal_wall_class(&moduli(d).unwrap(), &line_bundle(0)).unwrap();
            assert_eq!(w, ChernP2::of(-d, 1, rat(2 * d - 3, 2)));
        }
        // Odd d against O((d−3)/2): w = −d + h + d(d²−5)/8·h².
        for d in (3..=13).step_by(2) {
            let w = orthogonal_wall_class(&moduli(d).unwrap(), &line_bundle((d - 3) / 2)).unwrap();
            assert_eq!(w, ChernP2::of(-d, 1, rat(d * (d * d - 5), 8)));
        }
        let w = orthogonal_wall_class(&moduli(5).unwrap(), &line_bundle(1)).unwrap();
        assert_eq!(w, ch(-5, 1, 25, 2));
    }

    #[test]
    fn orthogonal_class_of_proportional_inputs_fails() {
        let m6 = moduli(6).unwrap();
        let err = orthogonal_wall_class(&m6, &(2 * &m6)).unwrap_err();
        assert!(matches!(err, Error::RankDeficient(_)));
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_decompose(&ch(-6, 1, 41, 2), 6).unwrap(), lk(16));
        for d in 3..9 {
            assert_eq!(lambda_decompose(&point(), d).unwrap(), DivisorAL::a());
        }
        assert_eq!(
            lambda_decompose(&ch(-6, 1, 9, 2), 6).unwrap(),
            DivisorAL::l()
        );
        assert!(lambda_decompose(&line_bundle(0), 6).is_err());
    }

    #[test]
    fn wall_divisors_d6() {
        assert_eq!(wall_divisor(6, &ch(1, 1, 1, 2)).unwrap(), lk(11));
        assert_eq!(wall_divisor(6, &ch(1, 3, -7, 2)).unwrap(), lk(3));
        assert_eq!(wall_divisor(6, &ch(1, 2, -1, 1)).unwrap(), lk(10));
    }

    #[test]
    fn nef_examples() {
        assert_eq!(nef_generators(6).unwrap(), (DivisorAL::a(), lk(16)));
        assert_eq!(nef_generators(5).unwrap().1, lk(9));
        assert_eq!(nef_generators(4).unwrap().1, lk(3));
        assert!(nef_generators(2).is_err());
    }

    #[test]
    fn effective_examples() {
        for d in 3..=12 {
            let (a, l) = effective_generators(d).unwrap();
            assert_eq!(a, DivisorAL::a());
            assert_eq!(l, wall_divisor(d, &line_bundle(0)).unwrap());
        }
    }

    #[test]
    fn family_p_parts() {
        let pencil = family_class(FamilyKind::Pencil, 6).unwrap();
        assert_eq!(
            pencil.chern.p_part(),
            crate::chow::ChowP2::new(Rational::one(), Rational::zero(), Rational::zero())
        );

        // −e^{−p − 4h} contributes +p·(1 − 4h + 8h²).
        let even = family_class(FamilyKind::EvenWall, 6).unwrap();
        let pp = even.chern.p_part();
        assert_eq!(
            (pp.c0, pp.c1, pp.c2),
            (Rational::one(), Rational::integer(-4), Rational::integer(8))
        );

        let odd = family_class(FamilyKind::OddWall, 5).unwrap();
        let pp = odd.chern.p_part();
        assert_eq!(
            (pp.c0, pp.c1, pp.c2),
            (Rational::one(), Rational::one(), rat(1, 2))
        );

        assert!(family_class(FamilyKind::EvenWall, 5).is_err());
        assert!(family_class(FamilyKind::OddWall, 6).is_err());
    }

    #[test]
    fn test_curve_degrees() {
        for d in 3..=10 {
            let g = genus(d).unwrap();
            let pencil = family_class(FamilyKind::Pencil, d).unwrap();
            let jac = family_class(FamilyKind::Jacobian, d).unwrap();
            assert_eq!(
                intersection_degree(&pencil, &d_class(d)),
                Rational::integer(1 - d)
            );
            assert_eq!(
                intersection_degree(&jac, &d_class(d)),
                Rational::integer(d * g)
            );
            assert_eq!(intersection_degree(&pencil, &point()), Rational::one());
            assert_eq!(intersection_degree(&jac, &point()), Rational::zero());
        }
        assert_eq!(d_class(6), ch(-6, 1, -1, 2));
    }

    #[test]
    fn d_in_al_examples() {
        assert_eq!(d_in_al(6).unwrap(), lk(-5));
        assert_eq!(d_in_al(4).unwrap(), lk(-3));
        assert_eq!(d_in_al(3).unwrap(), lk(-2));
    }

    #[test]
    fn both_nef_routes_agree() {
        for d in 3..=12 {
            assert_eq!(
                nef_via_wall_family(d).unwrap(),
                nef_closed_form(d).unwrap(),
                "d = {d}"
            );
        }
    }

    #[test]
    fn display() {
        assert_eq!(lk(16).to_string(), "16A + L");
        assert_eq!(DivisorAL::a().to_string(), "A");
        assert_eq!(DivisorAL::l().to_string(), "L");
        assert_eq!(lk(-5).to_string(), "-5A + L");
        assert_eq!(
            DivisorAL::new(rat(3, 2), Rational::integer(-2)).to_string(),
            "3/2A - 2L"
        );
        assert_eq!(DivisorAL::default().to_string(), "0");
    }

    fn coeffs() -> impl Strategy<Value = (i64, i64)> {
        (-5i64..5, -8i64..8)
    }

    /// A class `(−d·c, c, c²/2 + n)`, orthogonal to the class of `M_d`.
    fn orthogonal(d: i64, (c, n): (i64, i64)) -> ChernP2 {
        ChernP2::of(-d * c, c, rat(c * c, 2) + Rational::integer(n))
    }

    fn p_free_noise() -> impl Strategy<Value = ChowCurveP2> {
        [
            (-5i64..5, 1i64..4),
            (-5i64..5, 1i64..4),
            (-5i64..5, 1i64..4),
        ]
        .prop_map(|[a, b, c]| {
            crate::chow::ChowP2::new(rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1)).pullback()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn lambda_is_linear(d in 3i64..=12, s1 in coeffs(), s2 in coeffs()) {
            let (w1, w2) = (orthogonal(d, s1), orthogonal(d, s2));
            let lhs = lambda_decompose(&(&w1 + &w2), d).unwrap();
            let rhs = &lambda_decompose(&w1, d).unwrap() + &lambda_decompose(&w2, d).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn p_free_terms_do_not_change_degrees(noise in p_free_noise(), d in 3i64..=10,
                                              use_wall in any::<bool>(), jacobian in any::<bool>(),
                                              s in coeffs()) {
            let kind = match (use_wall, jacobian, d % 2 == 0) {
                (true, _, true) => FamilyKind::EvenWall,
                (true, _, false) => FamilyKind::OddWall,
                (false, true, _) => FamilyKind::Jacobian,
                (false, false, _) => FamilyKind::Pencil,
            };
            let fam = family_class(kind, d).unwrap();
            let mut noisy = fam.clone();
            noisy.chern = &noisy.chern + &noise;
            let w = orthogonal(d, s);
            prop_assert_eq!(intersection_degree(&fam, &w), intersection_degree(&noisy, &w));
        }
    }
}
