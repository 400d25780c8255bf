//! Poincaré polynomials of Hilbert schemes of points on the plane and of the
//! birational models that appear as wall-crossing centers.

use num_bigint::BigInt;

use super::PoincarePolynomial;
use crate::error::{domain, Result};
use crate::exactmath::{grassmannian_poincare, projective_poincare, QPoly};

pub const MAX_HILB_POINTS: u32 = 12;

/// `P(Hilb^n(P²))` as the `z^n` coefficient of
/// `Π_{k≥1} 1/((1 − q^{k−1}z^k)(1 − q^k z^k)(1 − q^{k+1}z^k))`.
pub fn hilb_poincare(n: u32) -> Result<PoincarePolynomial> {
    if n > MAX_HILB_POINTS {
        return Err(domain(format!(
            "Hilb^{n} is outside the supported range 0..={MAX_HILB_POINTS}"
        )));
    }
    let n = n as usize;
    // series[j] is the coefficient of z^j.
    let mut series: Vec<QPoly> = vec![QPoly::zero(); n + 1];
    series[0] = QPoly::one();
    for k in 1..=n {
        for q_exp in [k - 1, k, k + 1] {
            // Multiply by 1/(1 − q^{q_exp} z^k) = Σ_j q^{j·q_exp} z^{jk};
            // in place, ascending: s[j] += q^{q_exp} · s[j − k].
            for j in k..=n {
                let add = series[j - k].shift(q_exp);
                series[j] = &series[j] + &add;
            }
        }
    }
    PoincarePolynomial::new(series.swap_remove(n))
}

/// `P((Hilb^n)_k)` for the models needed by the `M_6` wall-crossing.
///
/// `(n, 0)` is the Hilbert scheme itself. The flips from `Hilb^n` to
/// `(Hilb^n)_k` replace projective bundles over the flipped loci:
///
/// * `(Hilb^3)_1 = Hilb^3 + (P(P^0) − P(P^3))·P(P²)`
/// * `(Hilb^4)_1 = Hilb^4 + (P(P^1) − P(P^4))·P(P²)`
/// * `(Hilb^4)_2 = (Hilb^4)_1 + (P(P^0) − P(P^3))·P(P² × P²)`
/// * `(Hilb^5)_2 = Hilb^5 + (P(P²) − P(P^5))·P(P²) + (P(P^1) − P(P^4))·P(P² × P²)`
/// * `(Hilb^8)_6 ≅ Gr(2, 9)`-bundle over `P²`.
pub fn hilb_model_poincare(n: u32, k: u32) -> Result<PoincarePolynomial> {
    let pp = |m: u32| projective_poincare(m);
    let p2 = pp(2);
    let p2xp2 = &p2 * &p2;
    let flip = |from: u32, to: u32, base: &QPoly| &(&pp(from) - &pp(to)) * base;

    let poly = match (n, k) {
        (_, 0) => return hilb_poincare(n),
        (3, 1) => hilb_poincare(3)?.into_poly() + flip(0, 3, &p2),
        (4, 1) => hilb_poincare(4)?.into_poly() + flip(1, 4, &p2),
        (4, 2) => hilb_model_poincare(4, 1)?.into_poly() + flip(0, 3, &p2xp2),
        (5, 2) => hilb_poincare(5)?.into_poly() + flip(2, 5, &p2) + flip(1, 4, &p2xp2),
        (8, 6) => &grassmannian_poincare(2, 9)? * &p2,
        _ => return Err(domain(format!("no model data for (Hilb^{n})_{k}"))),
    };
    PoincarePolynomial::new(poly)
}

/// `χ(Hilb^n(P²))`, the number of triples of partitions of total size `n`.
pub fn hilb_euler_characteristic(n: u32) -> Result<BigInt> {
    Ok(hilb_poincare(n)?.poly().value_at_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    /// All partitions of `n`, as weakly decreasing part lists.
    fn partitions(n: usize) -> Vec<Vec<usize>> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if n == 0 {
                out.push(cur.clone());
                return;
            }
            for part in (1..=n.min(max)).rev() {
                cur.push(part);
                rec(n - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Betti numbers from the torus-fixed points of `Hilb^n(P²)`: triples of
    /// partitions `(λ⁰, λ¹, λ²)` of total size `n`, where the Białynicki-Birula
    /// cell of a fixed point has dimension
    /// `(|λ⁰| − ℓ(λ⁰)) + |λ¹| + (|λ²| + ℓ(λ²))`.
    fn fixed_point_oracle(n: usize) -> QPoly {
        let mut coeffs = vec![0i64; 2 * n + 1];
        for n0 in 0..=n {
            for n1 in 0..=n - n0 {
                let n2 = n - n0 - n1;
                for l0 in partitions(n0) {
                    for l1 in partitions(n1) {
                        for l2 in partitions(n2) {
                            let dim = (n0 - l0.len()) + l1.iter().sum::<usize>() + (n2 + l2.len());
                            coeffs[dim] += 1;
                        }
                    }
                }
            }
        }
        QPoly::from_i64s(&coeffs)
    }

    #[test]
    fn small_cases() {
        assert_eq!(hilb_poincare(0).unwrap().poly(), &QPoly::one());
        assert_eq!(hilb_poincare(1).unwrap().poly(), &p(&[1, 1, 1]));
        assert_eq!(hilb_poincare(2).unwrap().poly(), &p(&[1, 2, 3, 2, 1]));
        assert!(hilb_poincare(13).is_err());
    }

    #[test]
    fn matches_fixed_point_count() {
        for n in 0..=8 {
            assert_eq!(
                hilb_poincare(n as u32).unwrap().poly(),
                &fixed_point_oracle(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn euler_characteristic_counts_partition_triples() {
        // Σ_n χ(Hilb^n) z^n = Π 1/(1 − z^k)^3
        let expect = [1, 3, 9, 22, 51, 108, 221, 429, 810];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(
                hilb_euler_characteristic(n as u32).unwrap(),
                BigInt::from(*e)
            );
            let triples: usize = (0..=n)
                .flat_map(|a| (0..=n - a).map(move |b| (a, b, n - a - b)))
                .map(|(a, b, c)| partitions(a).len() * partitions(b).len() * partitions(c).len())
                .sum();
            assert_eq!(triples, *e as usize);
        }
    }

    #[test]
    fn hilbert_schemes_are_palindromic_of_dimension_2n() {
        for n in 0..=MAX_HILB_POINTS {
            let h = hilb_poincare(n).unwrap();
            assert!(h.poly().is_palindromic().unwrap());
            assert_eq!(h.poly().degree(), Some(2 * n as usize));
        }
    }

    #[test]
    fn model_examples() {
        let h3 = hilb_poincare(3).unwrap().into_poly();
        let expect = &h3 + &(&(&QPoly::one() - &p(&[1, 1, 1, 1])) * &p(&[1, 1, 1]));
        assert_eq!(hilb_model_poincare(3, 1).unwrap().poly(), &expect);
        assert_eq!(
            hilb_model_poincare(3, 1).unwrap().poly(),
            &p(&[1, 1, 3, 3, 3, 1, 1])
        );

        let g = &grassmannian_poincare(2, 9).unwrap() * &p(&[1, 1, 1]);
        assert_eq!(hilb_model_poincare(8, 6).unwrap().poly(), &g);

        let pp = projective_poincare;
        let p2 = pp(2);
        let h5 = hilb_poincare(5).unwrap().into_poly();
        let expect = &(&h5 + &(&(&pp(2) - &pp(5)) * &p2)) + &(&(&pp(1) - &pp(4)) * &(&p2 * &p2));
        assert_eq!(hilb_model_poincare(5, 2).unwrap().poly(), &expect);

        assert_eq!(
            hilb_model_poincare(7, 0).unwrap(),
            hilb_poincare(7).unwrap()
        );
        assert!(hilb_model_poincare(6, 3).is_err());
    }

    #[test]
    fn models_are_palindromic_of_dimension_2n() {
        // Flips preserve dimension and palindromicity.
        for (n, k) in [(3, 1), (4, 1), (4, 2), (5, 2), (8, 6)] {
            let m = hilb_model_poincare(n, k).unwrap();
            assert!(m.poly().is_palindromic().unwrap(), "({n},{k})");
            assert_eq!(m.poly().degree(), Some(2 * n as usize));
        }
    }
}
