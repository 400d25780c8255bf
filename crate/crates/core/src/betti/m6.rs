//! The wall-crossing from `Q_6` to `M_6` and the resulting `P(M_6)`.

use super::{kronecker_poincare, space_poincare, DimVector, PoincarePolynomial, SpaceDescriptor};
use crate::error::{Error, Result};
use crate::exactmath::{projective_poincare, rat, QPoly, Rational};
use crate::ktheory::{euler_hom, moduli, ChernP2};
use crate::walls::{wall_between, Wall};

/// `dim M_6 = 6² + 1`.
pub const M6_DEGREE: usize = 37;

/// An actual wall of `M_6` with its destabilizing subobject.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActualWall {
    pub label: &'static str,
    pub destabilizer: ChernP2,
}

impl ActualWall {
    pub fn wall(&self) -> Result<Wall> {
        wall_between(&moduli(6)?, &self.destabilizer)
    }
}

/// The seven actual walls of `M_6`, outermost first. `W0` is the collapsing wall.
pub fn m6_actual_walls() -> Vec<ActualWall> {
    let w = |label, r, c, e: Rational| ActualWall {
        label,
        destabilizer: ChernP2::of(r, c, e),
    };
    vec![
        w("W5", 1, 2, Rational::zero()),
        w("W4", 1, 1, rat(1, 2)),
        w("W3", 1, 2, rat(-1, 1)),
        w("W2", 1, 1, rat(-1, 2)),
        w("W1'", 1, 2, rat(-2, 1)),
        w("W1", 1, 3, rat(-7, 2)),
        w("W0", 1, 0, Rational::zero()),
    ]
}

/// A flipping wall of `M_6`: the exceptional loci on both sides are projective
/// bundles over `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallRecord {
    pub label: &'static str,
    pub destabilizer: ChernP2,
    pub base: SpaceDescriptor,
}

/// The six flipping walls, innermost first.
pub fn m6_wall_records() -> Vec<WallRecord> {
    use SpaceDescriptor::*;
    let destab = |label: &str| {
        m6_actual_walls()
            .into_iter()
            .find(|w| w.label == label)
            .expect("known label")
            .destabilizer
    };
    let rec = |label, base| WallRecord {
        label,
        destabilizer: destab(label),
        base,
    };
    vec![
        rec("W1", HilbModel(8, 6)),
        rec("W1'", Product(vec![HilbModel(4, 2), Hilb(2)])),
        rec("W2", Product(vec![HilbModel(5, 2), Projective(2)])),
        rec("W3", Product(vec![HilbModel(3, 1), Projective(2)])),
        rec("W4", HilbModel(4, 1)),
        rec("W5", Hilb(2)),
    ]
}

/// `(dim Ext¹(Q, S), dim Ext¹(S, Q))` for destabilizer `S` and quotient
/// `Q = v − S`, read off from the Euler pairing (no Hom or Ext² between them).
pub fn ext_dims_at_wall(d: i64, destab: &ChernP2) -> Result<(u64, u64)> {
    let quotient = &moduli(d)? - destab;
    let ext = |chi: Rational, from: &ChernP2, to: &ChernP2| -> Result<u64> {
        if !chi.is_negative() {
            return Err(Error::Convention(format!(
                "χ({from}, {to}) = {chi} is not negative"
            )));
        }
        (-chi)
            .to_i64()
            .map(|x| x as u64)
            .ok_or_else(|| Error::Convention(format!("χ({from}, {to}) is not an integer")))
    };
    let a = ext(euler_hom(&quotient, destab), &quotient, destab)?;
    let b = ext(euler_hom(destab, &quotient), destab, &quotient)?;
    Ok((a, b))
}

/// `(P(P^{a−1}) − P(P^{b−1}))·P(base)`: a `P^{b−1}`-bundle is replaced by a
/// `P^{a−1}`-bundle over the same base.
pub fn wall_contribution(d: i64, rec: &WallRecord) -> Result<QPoly> {
    let (a, b) = ext_dims_at_wall(d, &rec.destabilizer)?;
    let fiber = &projective_poincare(a as u32 - 1) - &projective_poincare(b as u32 - 1);
    Ok(&fiber * space_poincare(&rec.base)?.poly())
}

/// `P(N_6) = P(N(3; 5, 4))`.
pub fn n6() -> Result<PoincarePolynomial> {
    kronecker_poincare(3, DimVector { e: 5, f: 4 })
}

/// `P(Q_6)`, a `P^17`-bundle over `N_6`.
pub fn q6() -> Result<PoincarePolynomial> {
    space_poincare(&SpaceDescriptor::bundle(
        SpaceDescriptor::Projective(17),
        SpaceDescriptor::Kronecker(3, DimVector { e: 5, f: 4 }),
    ))
}

/// `P(M_6) = P(Q_6) + Σ wall contributions`.
pub fn assemble_m6() -> Result<PoincarePolynomial> {
    let mut total = q6()?.into_poly();
    for rec in m6_wall_records() {
        total = &total + &wall_contribution(6, &rec)?;
    }
    let out = PoincarePolynomial::new(total)?;
    if out.degree() != Some(M6_DEGREE) || !out.poly().is_palindromic()? {
        return Err(Error::Convention(format!(
            "P(M_6) is not palindromic of degree 37: {out}"
        )));
    }
    Ok(out)
}
