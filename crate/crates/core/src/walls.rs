//! Bridgeland potential walls in the `(s, t)` upper half-plane.
//!
//! Every wall is a semicircle centered on the real axis. Walls are stored as
//! `(center, radius²)` so that all comparisons stay rational even when the
//! radius itself is irrational.

use std::fmt;

use crate::divisors::first_wall_destabilizer;
use crate::error::{domain, Error, Result};
use crate::exactmath::{rat, Rational};
use crate::ktheory::{line_bundle, moduli, ChernP2};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Wall {
    center: Rational,
    radius_sq: Rational,
}

impl Wall {
    pub fn new(center: Rational, radius_sq: Rational) -> Result<Self> {
        if !radius_sq.is_positive() {
            return Err(Error::EmptyWall(radius_sq.to_string()));
        }
        Ok(Wall { center, radius_sq })
    }

    pub fn center(&self) -> &Rational {
        &self.center
    }

    pub fn radius_sq(&self) -> &Rational {
        &self.radius_sq
    }

    /// Radius as a float; for display only.
    pub fn radius_f64(&self) -> f64 {
        self.radius_sq.to_f64().sqrt()
    }

    pub fn twisted(&self, n: i64) -> Wall {
        Wall {
            center: &self.center + Rational::integer(n),
            radius_sq: self.radius_sq.clone(),
        }
    }

    pub fn dualized(&self) -> Wall {
        Wall {
            center: -&self.center,
            radius_sq: self.radius_sq.clone(),
        }
    }

    /// Signed power of the wall's top point `(center, √radius²)` with respect
    /// to `other`: negative inside, zero on, positive outside.
    fn top_point_power(&self, other: &Wall) -> Rational {
        let dx = &self.center - &other.center;
        &dx * &dx + &self.radius_sq - &other.radius_sq
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "center {}, radius^2 {}", self.center, self.radius_sq)
    }
}

/// The numerical wall where `v` and `w` have equal Bridgeland slope:
/// center `x = (r e' − r' e)/(r c' − r' c)` and
/// `R² = x² − 2(c e' − c' e)/(r c' − r' c)`.
pub fn wall_between(v: &ChernP2, w: &ChernP2) -> Result<Wall> {
    let (r, c, e) = (v.rank(), v.degree(), v.ch2());
    let (r2, c2, e2) = (w.rank(), w.degree(), w.ch2());
    let det = r * c2 - r2 * c;
    if det == 0 {
        return Err(Error::NoSemicircularWall);
    }
    let det = Rational::integer(det);
    let x = (e2 * r - e * r2) / &det;
    let cross = (e2 * c - e * c2) / &det;
    let radius_sq = &x * &x - cross * 2;
    Wall::new(x, radius_sq)
}

/// Rank-one candidate destabilizers of `moduli(d)` whose walls lie between
/// the collapsing wall and the first wall, inclusive.
///
/// The result is sorted by descending radius², with candidates that share a
/// wall adjacent. These are potential walls only; which of them are actual
/// walls is curated data.
pub fn enumerate_potential_walls(d: i64) -> Result<Vec<(ChernP2, Wall)>> {
    if d < 3 {
        return Err(domain(format!("wall enumeration requires d >= 3, got {d}")));
    }
    let v = moduli(d)?;
    let lower = wall_between(&v, &line_bundle(0))?;
    let upper = wall_between(&v, &first_wall_destabilizer(d)?)?;
    let (lo, hi) = (lower.radius_sq(), upper.radius_sq());

    let mut out = Vec::new();
    for c in 0..=d / 2 {
        // e ≡ c²/2 mod Z and e ≤ c²/2. For rank one R² = x² + 2(d·e − e_v·c)/d
        // increases with e, so walk e downwards until R² drops below lo.
        let mut e = rat(c * c, 2);
        loop {
            let w = ChernP2::of(1, c, e.clone());
            let Ok(wall) = wall_between(&v, &w) else {
                break;
            };
            if wall.radius_sq() < lo {
                break;
            }
            if wall.radius_sq() <= hi {
                out.push((w, wall));
            }
            e = e - 1;
        }
    }
    out.sort_by(|(va, a), (vb, b)| {
        b.radius_sq()
            .cmp(a.radius_sq())
            .then_with(|| a.center().cmp(b.center()))
            .then_with(|| (vb.degree(), vb.ch2()).cmp(&(va.degree(), va.ch2())))
    });
    Ok(out)
}

/// A wall from a reference system, remembering the parameter `x` it was
/// listed under before any transform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceWall {
    pub source_x: Rational,
    pub wall: Wall,
}

/// An ordered list of walls for some other moduli problem, used to decide
/// which birational model a chamber corresponds to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceWallSystem {
    label: String,
    walls: Vec<ReferenceWall>,
}

impl ReferenceWallSystem {
    pub fn new(label: impl Into<String>, mut walls: Vec<ReferenceWall>) -> Self {
        walls.sort_by(|a, b| b.wall.radius_sq().cmp(a.wall.radius_sq()));
        ReferenceWallSystem {
            label: label.into(),
            walls,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn walls(&self) -> &[ReferenceWall] {
        &self.walls
    }

    pub fn len(&self) -> usize {
        self.walls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walls.is_empty()
    }

    /// The wall listed under parameter `x`, if any.
    pub fn by_source(&self, x: &Rational) -> Option<&Wall> {
        self.walls
            .iter()
            .find(|w| &w.source_x == x)
            .map(|w| &w.wall)
    }
}

/// Walls for `Hilb^n` of the plane: centered at `x` with radius² `x² − 2n`,
/// for the two cases `n ∈ {4, 8}` that the `M_6` wall-crossing needs.
///
/// The `n = 8` list repeats `x = −17/2`; it is stored once.
pub fn hilb_reference_walls(n: u32) -> Result<ReferenceWallSystem> {
    let (xs, shift): (&[(i64, i64)], i64) = match n {
        8 => (
            &[
                (-17, 2),
                (-15, 2),
                (-13, 2),
                (-11, 2),
                (-5, 1),
                (-9, 2),
                (-25, 6),
            ],
            16,
        ),
        4 => (&[(-9, 2), (-7, 2), (-3, 1)], 8),
        _ => return Err(domain(format!("no reference wall data for Hilb^{n}"))),
    };
    let walls = xs
        .iter()
        .map(|&(num, den)| {
            let x = rat(num, den);
            let r2 = &x * &x - shift;
            Ok(ReferenceWall {
                source_x: x.clone(),
                wall: Wall::new(x, r2)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ReferenceWallSystem::new(format!("hilb{n}"), walls))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WallTransform {
    /// Tensoring by `O(n)` moves every center by `n`.
    Twist(i64),
    /// The derived dual reflects centers through the origin.
    Dual,
}

pub fn transform_walls(ws: &ReferenceWallSystem, op: WallTransform) -> ReferenceWallSystem {
    let walls = ws
        .walls
        .iter()
        .map(|rw| ReferenceWall {
            source_x: rw.source_x.clone(),
            wall: match op {
                WallTransform::Twist(n) => rw.wall.twisted(n),
                WallTransform::Dual => rw.wall.dualized(),
            },
        })
        .collect();
    let tag = match op {
        WallTransform::Twist(n) => format!("twist({n})"),
        WallTransform::Dual => "dual".to_string(),
    };
    ReferenceWallSystem::new(format!("{}|{}", ws.label, tag), walls)
}

/// Number of reference walls strictly enclosing the top point of `wall`.
///
/// Reference walls are nested, so this count is the index `k` of the
/// birational model `(Hilb^n)_k` whose chamber contains the top point.
pub fn locate_model(wall: &Wall, refs: &ReferenceWallSystem) -> Result<usize> {
    let mut count = 0;
    for rw in &refs.walls {
        let power = wall.top_point_power(&rw.wall);
        if power.is_zero() {
            return Err(Error::Ambiguous(format!(
                "top point of wall ({wall}) lies on reference wall x = {}",
                rw.source_x
            )));
        }
        if power.is_negative() {
            count += 1;
        }
    }
    Ok(count)
}
