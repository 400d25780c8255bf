//! Poincaré polynomials `Σ b_{2i} q^i` of the spaces in the `M_6`
//! wall-crossing: Hilbert schemes of points and their models, Kronecker
//! moduli, Grassmannians, and the final assembly of `P(M_6)`.

mod brute;
mod hilb;
mod kronecker;
mod m6;

use std::fmt;

pub use brute::{brute_force_kronecker_count, MAX_ENTRIES};
pub use hilb::{hilb_euler_characteristic, hilb_model_poincare, hilb_poincare, MAX_HILB_POINTS};
pub use kronecker::{gl_order, kronecker_poincare, DimVector};
pub use m6::{
    assemble_m6, ext_dims_at_wall, m6_actual_walls, m6_wall_records, n6, q6, wall_contribution,
    ActualWall, WallRecord, M6_DEGREE,
};

use crate::error::{domain, Result};
use crate::exactmath::{grassmannian_poincare, projective_poincare, QPoly};

/// A polynomial with nonnegative integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincarePolynomial(QPoly);

impl PoincarePolynomial {
    pub fn new(poly: QPoly) -> Result<Self> {
        if !poly.has_nonnegative_coeffs() {
            return Err(domain(format!("negative Betti number in {poly}")));
        }
        Ok(PoincarePolynomial(poly))
    }

    pub fn poly(&self) -> &QPoly {
        &self.0
    }

    pub fn into_poly(self) -> QPoly {
        self.0
    }

    /// Top degree in `q`, i.e. the complex dimension for a smooth projective space.
    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    /// Euler characteristic.
    pub fn euler(&self) -> num_bigint::BigInt {
        self.0.value_at_one()
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A space whose Poincaré polynomial can be computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceDescriptor {
    Projective(u32),
    Grassmannian(u32, u32),
    Hilb(u32),
    HilbModel(u32, u32),
    Kronecker(u32, DimVector),
    Product(Vec<SpaceDescriptor>),
    /// A Zariski-locally trivial fibration; its polynomial is the product.
    Bundle {
        fiber: Box<SpaceDescriptor>,
        base: Box<SpaceDescriptor>,
    },
}

impl SpaceDescriptor {
    pub fn bundle(fiber: SpaceDescriptor, base: SpaceDescriptor) -> Self {
        SpaceDescriptor::Bundle {
            fiber: Box::new(fiber),
            base: Box::new(base),
        }
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceDescriptor::Projective(n) => write!(f, "P^{n}"),
            SpaceDescriptor::Grassmannian(k, n) => write!(f, "Gr({k},{n})"),
            SpaceDescriptor::Hilb(n) => write!(f, "Hilb^{n}"),
            SpaceDescriptor::HilbModel(n, k) => write!(f, "(Hilb^{n})_{k}"),
            SpaceDescriptor::Kronecker(m, dv) => write!(f, "N({m};{},{})", dv.e, dv.f),
            SpaceDescriptor::Product(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join(" x "))
            }
            SpaceDescriptor::Bundle { fiber, base } => write!(f, "{fiber}-bundle over {base}"),
        }
    }
}

pub fn space_poincare(sd: &SpaceDescriptor) -> Result<PoincarePolynomial> {
    match sd {
        SpaceDescriptor::Projective(n) => PoincarePolynomial::new(projective_poincare(*n)),
        SpaceDescriptor::Grassmannian(k, n) => {
            PoincarePolynomial::new(grassmannian_poincare(*k, *n)?)
        }
        SpaceDescriptor::Hilb(n) => hilb_poincare(*n),
        SpaceDescriptor::HilbModel(n, k) => hilb_model_poincare(*n, *k),
        SpaceDescriptor::Kronecker(m, dv) => kronecker_poincare(*m, *dv),
        SpaceDescriptor::Product(parts) => {
            let mut acc = QPoly::one();
            for part in parts {
                acc = &acc * space_poincare(part)?.poly();
            }
            PoincarePolynomial::new(acc)
        }
        SpaceDescriptor::Bundle { fiber, base } => {
            let poly = space_poincare(fiber)?.poly() * space_poincare(base)?.poly();
            PoincarePolynomial::new(poly)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_negative_coefficients() {
        assert!(PoincarePolynomial::new(QPoly::from_i64s(&[1, -1])).is_err());
        assert!(PoincarePolynomial::new(QPoly::zero()).is_ok());
    }

    #[test]
    fn descriptor_examples() {
        let p2 = QPoly::from_i64s(&[1, 1, 1]);
        let sq = SpaceDescriptor::Product(vec![
            SpaceDescriptor::Projective(2),
            SpaceDescriptor::Projective(2),
        ]);
        assert_eq!(space_poincare(&sq).unwrap().poly(), &(&p2 * &p2));

        let g = space_poincare(&SpaceDescriptor::HilbModel(8, 6)).unwrap();
        assert_eq!(g.poly(), &(&grassmannian_poincare(2, 9).unwrap() * &p2));

        let n6 = DimVector::new(5, 4).unwrap();
        let q6 = SpaceDescriptor::bundle(
            SpaceDescriptor::Projective(17),
            SpaceDescriptor::Kronecker(3, n6),
        );
        let expect = &projective_poincare(17) * kronecker_poincare(3, n6).unwrap().poly();
        assert_eq!(space_poincare(&q6).unwrap().poly(), &expect);
        assert_eq!(q6.to_string(), "P^17-bundle over N(3;5,4)");
        assert!(space_poincare(&SpaceDescriptor::HilbModel(6, 3)).is_err());
        assert!(space_poincare(&SpaceDescriptor::Grassmannian(3, 2)).is_err());
    }

    fn smooth_space() -> impl Strategy<Value = SpaceDescriptor> {
        let leaf = prop_oneof![
            (0u32..=8).prop_map(SpaceDescriptor::Projective),
            (0u32..=7)
                .prop_flat_map(|n| (0..=n).prop_map(move |k| SpaceDescriptor::Grassmannian(k, n))),
            (0u32..=6).prop_map(SpaceDescriptor::Hilb),
            prop::sample::select(vec![(3u32, 1u32), (4, 1), (4, 2), (5, 2), (8, 6)])
                .prop_map(|(n, k)| SpaceDescriptor::HilbModel(n, k)),
            prop::sample::select(vec![
                (3u32, 1u32, 1u32),
                (3, 2, 1),
                (3, 1, 2),
                (3, 3, 2),
                (4, 2, 1),
                (3, 5, 4)
            ])
            .prop_map(|(m, e, f)| SpaceDescriptor::Kronecker(m, DimVector::new(e, f).unwrap())),
        ];
        leaf.prop_recursive(2, 6, 3, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 1..=3).prop_map(SpaceDescriptor::Product),
                (inner.clone(), inner).prop_map(|(f, b)| SpaceDescriptor::bundle(f, b)),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn smooth_spaces_are_palindromic(sd in smooth_space()) {
            let p = space_poincare(&sd).unwrap();
            prop_assert!(p.poly().is_palindromic().unwrap(), "{} -> {}", sd, p);
            prop_assert_eq!(p.poly().coeff(0), 1.into());
        }
    }
}
