//! Finite-field point count of Kronecker moduli by direct enumeration.
//!
//! This is an oracle for [`super::kronecker_poincare`] and shares none of its
//! code: it enumerates `m`-tuples of `f × e` matrices over `F_p`, tests
//! stability against every subspace of the source, and divides the count of
//! stable tuples by the order of `GL_e × GL_f / F_p^*`.
//!
//! Stability is invariant under `GL_f × GL_e`, so instead of enumerating the
//! first matrix we put it in rank normal form and weight by the number of
//! matrices of each rank. The count is unchanged.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::DimVector;
use crate::error::{domain, Error, Result};

/// Upper bound on the number of tuples the enumeration will visit.
const MAX_WORK: u64 = 60_000_000;

/// Largest `m·e·f` accepted.
pub const MAX_ENTRIES: u32 = 20;

/// Number of `F_p`-points of `N(m; e, f)`.
pub fn brute_force_kronecker_count(m: u32, dv: DimVector, p: u32) -> Result<BigInt> {
    if !is_small_prime(p) {
        return Err(domain(format!("{p} is not a prime below 256")));
    }
    if m == 0 {
        return Err(domain("Kronecker quiver needs at least one arrow"));
    }
    if !dv.is_coprime() {
        return Err(domain(format!("dimension vector {dv} is not coprime")));
    }
    let (e, f) = (dv.e as usize, dv.f as usize);
    if m * dv.e * dv.f > MAX_ENTRIES {
        return Err(domain(format!(
            "m·e·f = {} exceeds the enumeration limit {MAX_ENTRIES}",
            m * dv.e * dv.f
        )));
    }
    let free_digits = (m as usize - 1) * e * f;
    let work = (p as u64)
        .checked_pow(free_digits as u32)
        .and_then(|w| w.checked_mul(e.min(f) as u64 + 1))
        .filter(|&w| w <= MAX_WORK)
        .ok_or_else(|| {
            domain(format!(
                "enumerating {p}^{free_digits} tuples is infeasible"
            ))
        })?;
    debug_assert!(work <= MAX_WORK);

    let field = Field { p: p as u8 };
    let subspaces = field.nonzero_subspaces(e);
    let rank_counts = field.matrices_by_rank(f, e);

    let mut stable_total = BigInt::zero();
    for (rank, count) in rank_counts.iter().enumerate() {
        if *count == 0 {
            continue;
        }
        let first = normal_form(f, e, rank);
        let mut rest = vec![0u8; free_digits];
        let mut stable_here: u64 = 0;
        loop {
            let mut maps: Vec<&[u8]> = Vec::with_capacity(m as usize);
            maps.push(&first);
            if e * f == 0 {
                maps.extend(std::iter::repeat_n(&[][..], m as usize - 1));
            } else {
                maps.extend(rest.chunks(e * f));
            }
            if field.is_stable(&maps, e, f, &subspaces) {
                stable_here += 1;
            }
            if !field.increment(&mut rest) {
                break;
            }
        }
        stable_total += BigInt::from(stable_here) * BigInt::from(*count);
    }

    let group = gl_order_at(dv.e, p) * gl_order_at(dv.f, p);
    let numerator = stable_total * BigInt::from(p - 1);
    let (quot, rem) = numerator.div_rem(&group);
    if !rem.is_zero() {
        return Err(Error::Convention(format!(
            "stable count over F_{p} is not divisible by the group order"
        )));
    }
    Ok(quot)
}

fn is_small_prime(p: u32) -> bool {
    (2..256).contains(&p)
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `|GL_n(F_p)|`, computed directly.
fn gl_order_at(n: u32, p: u32) -> BigInt {
    let p = BigInt::from(p);
    let pn = num_traits::pow(p.clone(), n as usize);
    (0..n as usize)
        .map(|i| &pn - num_traits::pow(p.clone(), i))
        .product()
}

/// Row-major `rows × cols` matrix with ones on the first `rank` diagonal slots.
fn normal_form(rows: usize, cols: usize, rank: usize) -> Vec<u8> {
    let mut m = vec![0u8; rows * cols];
    for i in 0..rank {
        m[i * cols + i] = 1;
    }
    m
}

struct Field {
    p: u8,
}

impl Field {
    fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    fn inv(&self, a: u8) -> u8 {
        (1..self.p)
            .find(|&x| self.mul(a, x) == 1)
            .expect("nonzero element of a field")
    }

    /// Odometer step in base p; false after wrapping back to all zeros.
    fn increment(&self, digits: &mut [u8]) -> bool {
        for d in digits.iter_mut() {
            *d += 1;
            if *d < self.p {
                return true;
            }
            *d = 0;
        }
        false
    }

    /// Rank of a list of vectors of length `len`.
    fn rank(&self, mut vecs: Vec<Vec<u8>>, len: usize) -> usize {
        let mut rank = 0;
        for col in 0..len {
            let Some(pivot) = (rank..vecs.len()).find(|&i| vecs[i][col] != 0) else {
                continue;
            };
            vecs.swap(rank, pivot);
            let inv = self.inv(vecs[rank][col]);
            let pivot_row: Vec<u8> = vecs[rank].iter().map(|&x| self.mul(x, inv)).collect();
            for (i, row) in vecs.iter_mut().enumerate() {
                if i == rank || row[col] == 0 {
                    continue;
                }
                let factor = self.p - row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = self.add(*x, self.mul(factor, y));
                }
            }
            vecs[rank] = pivot_row;
            rank += 1;
            if rank == vecs.len() {
                break;
            }
        }
        rank
    }

    /// How many `rows × cols` matrices there are of each rank.
    fn matrices_by_rank(&self, rows: usize, cols: usize) -> Vec<u64> {
        let mut counts = vec![0u64; rows.min(cols) + 1];
        let mut entries = vec![0u8; rows * cols];
        loop {
            let row_vecs: Vec<Vec<u8>> = entries.chunks(cols).map(<[u8]>::to_vec).collect();
            counts[self.rank(row_vecs, cols)] += 1;
            if !self.increment(&mut entries) {
                break;
            }
        }
        counts
    }

    /// Bases (in reduced row echelon form) of every nonzero subspace of
    /// `F_p^n`, smallest dimension first.
    fn nonzero_subspaces(&self, n: usize) -> Vec<Vec<Vec<u8>>> {
        let mut out = Vec::new();
        for k in 1..=n {
            for pivots in combinations(n, k) {
                // Free slots: row i, column j > pivot_i with j not a pivot.
                let free: Vec<(usize, usize)> = pivots
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &pc)| {
                        (pc + 1..n)
                            .filter(|j| !pivots.contains(j))
                            .map(move |j| (i, j))
                    })
                    .collect();
                let mut vals = vec![0u8; free.len()];
                loop {
                    let mut basis = vec![vec![0u8; n]; k];
                    for (i, &pc) in pivots.iter().enumerate() {
                        basis[i][pc] = 1;
                    }
                    for (&(i, j), &v) in free.iter().zip(&vals) {
                        basis[i][j] = v;
                    }
                    out.push(basis);
                    if !self.increment(&mut vals) {
                        break;
                    }
                }
            }
        }
        out
    }

    /// `maps[i]` is a row-major `f × e` matrix. The representation is stable
    /// iff no subspace `E' ⊆ E` has `dim E'·f > e·dim(Σ φ_i(E'))`.
    fn is_stable(&self, maps: &[&[u8]], e: usize, f: usize, subspaces: &[Vec<Vec<u8>>]) -> bool {
        // m·e ≤ m·e·f ≤ MAX_ENTRIES images, each of length f ≤ MAX_ENTRIES.
        let mut images = [[0u8; MAX_ENTRIES as usize]; MAX_ENTRIES as usize];
        for basis in subspaces {
            let mut n = 0;
            for phi in maps {
                for v in basis {
                    for row in 0..f {
                        images[n][row] = (0..e).fold(0u8, |acc, col| {
                            self.add(acc, self.mul(phi[row * e + col], v[col]))
                        });
                    }
                    n += 1;
                }
            }
            let image_dim = self.rank_in_place(&mut images[..n], f);
            if basis.len() * f > e * image_dim {
                return false;
            }
        }
        true
    }

    /// Rank of the first `len` entries of each row; destroys the rows.
    fn rank_in_place(&self, rows: &mut [[u8; MAX_ENTRIES as usize]], len: usize) -> usize {
        let mut rank = 0;
        for col in 0..len {
            if rank == rows.len() {
                break;
            }
            let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = self.inv(rows[rank][col]);
            for x in &mut rows[rank][col..len] {
                *x = self.mul(*x, inv);
            }
            let pivot_row = rows[rank];
            for (i, row) in rows.iter_mut().enumerate() {
                if i == rank || row[col] == 0 {
                    continue;
                }
                let factor = self.p - row[col];
                for j in col..len {
                    row[j] = self.add(row[j], self.mul(factor, pivot_row[j]));
                }
            }
            rank += 1;
        }
        rank
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}
