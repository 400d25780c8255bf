//! Command-line front end.
//!
//! [`run`] never touches the process: it returns the exit code and the text
//! destined for stdout and stderr, so it can be tested directly.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::betti::{
    assemble_m6, m6_actual_walls, space_poincare, DimVector, PoincarePolynomial, SpaceDescriptor,
};
use crate::divisors::{
    effective_generators, family_class, intersection_degree, nef_generators, wall_divisor,
    DivisorAL, FamilyKind,
};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::ktheory::{euler_hom, euler_product, ChernP2};
use crate::walls::{enumerate_potential_walls, Wall};

pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "sheafwall",
    version,
    about = "Exact computations on moduli of plane sheaves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Potential and actual Bridgeland walls of M_d.
    Walls {
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        json: bool,
        /// Also draw the walls as semicircles into this SVG file.
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Generators of the nef cone of M_d.
    Nef {
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        json: bool,
    },
    /// Generators of the effective cone of M_d.
    Effective {
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        json: bool,
    },
    /// The divisor attached to the wall of a destabilizing class.
    Divisor {
        #[arg(long)]
        degree: i64,
        #[arg(long, value_name = "R,C,E", allow_hyphen_values = true)]
        destabilizer: ChernP2,
        #[arg(long)]
        json: bool,
    },
    /// Degree of λ(w) on a test curve in M_d.
    Intersect {
        #[arg(long, value_name = "pencil|jacobian|even-wall|odd-wall")]
        family: FamilyKind,
        #[arg(long)]
        degree: i64,
        #[arg(long, value_name = "R,C,E", allow_hyphen_values = true)]
        w: ChernP2,
        #[arg(long)]
        json: bool,
    },
    /// Euler pairing of two classes on the plane.
    Euler {
        #[arg(long, value_name = "R,C,E", allow_hyphen_values = true)]
        v: ChernP2,
        #[arg(long, value_name = "R,C,E", allow_hyphen_values = true)]
        w: ChernP2,
        /// `hom` computes χ(v, w); `product` pairs ch(v)·ch(w) without dualizing.
        #[arg(long, value_enum, default_value_t = Pairing::Hom)]
        pairing: Pairing,
        #[arg(long)]
        json: bool,
    },
    /// Poincaré polynomial of a space.
    Betti {
        /// M6, N6, Q6, p:n, hilb:n, hilb:n:k, kronecker:m:e:f or gr:k:n.
        #[arg(long)]
        space: Space,
        #[arg(long)]
        json: bool,
        /// Also evaluate the polynomial at this rational number.
        #[arg(long, value_name = "Q", allow_hyphen_values = true)]
        at: Option<Rational>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Pairing {
    Hom,
    Product,
}

#[derive(Clone, Debug)]
enum Space {
    M6,
    Described(SpaceDescriptor),
}

impl std::str::FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown space {s:?}"));
        let mut parts = s.split(':');
        let head = parts.next().unwrap_or_default().to_ascii_lowercase();
        let nums: Vec<u32> = parts
            .map(|p| p.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let n6 = || SpaceDescriptor::Kronecker(3, DimVector { e: 5, f: 4 });
        Ok(match (head.as_str(), nums.as_slice()) {
            ("m6", []) => Space::M6,
            ("n6", []) => Space::Described(n6()),
            ("q6", []) => Space::Described(SpaceDescriptor::bundle(
                SpaceDescriptor::Projective(17),
                n6(),
            )),
            ("p", [n]) => Space::Described(SpaceDescriptor::Projective(*n)),
            ("hilb", [n]) => Space::Described(SpaceDescriptor::Hilb(*n)),
            ("hilb", [n, k]) => Space::Described(SpaceDescriptor::HilbModel(*n, *k)),
            ("kronecker", [m, e, f]) => {
                Space::Described(SpaceDescriptor::Kronecker(*m, DimVector::new(*e, *f)?))
            }
            ("gr", [k, n]) => Space::Described(SpaceDescriptor::Grassmannian(*k, *n)),
            _ => return Err(bad()),
        })
    }
}

/// Parse `argv` (including the program name) and execute it.
///
/// Exit codes: 0 on success, 1 on usage errors, 2 when a computation fails.
pub fn run(argv: &[String]) -> CliOutput {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                CliOutput {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(stdout) => CliOutput {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(err) => CliOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
    }
}

fn execute(cmd: Command) -> Result<String> {
    match cmd {
        Command::Walls { degree, json, svg } => walls_cmd(degree, json, svg.as_deref()),
        Command::Nef { degree, json } => {
            let (a, b) = nef_generators(degree)?;
            Ok(cone_output(&a, &b, json))
        }
        Command::Effective { degree, json } => {
            let (a, b) = effective_generators(degree)?;
            Ok(cone_output(&a, &b, json))
        }
        Command::Divisor {
            degree,
            destabilizer,
            json,
        } => {
            let div = wall_divisor(degree, &destabilizer)?;
            Ok(if json {
                pretty(&divisor_json(&div))
            } else {
                format!("{div}\n")
            })
        }
        Command::Intersect {
            family,
            degree,
            w,
            json,
        } => {
            let deg = intersection_degree(&family_class(family, degree)?, &w);
            Ok(if json {
                pretty(&json!({ "degree": deg.to_string() }))
            } else {
                format!("{deg}\n")
            })
        }
        Command::Euler {
            v,
            w,
            pairing,
            json,
        } => {
            let chi = match pairing {
                Pairing::Hom => euler_hom(&v, &w),
                Pairing::Product => euler_product(&v, &w),
            };
            Ok(if json {
                pretty(&json!({ "chi": chi.to_string() }))
            } else {
                format!("{chi}\n")
            })
        }
        Command::Betti { space, json, at } => {
            let (label, poly) = match &space {
                Space::M6 => ("M6".to_string(), assemble_m6()?),
                Space::Described(sd) => (sd.to_string(), space_poincare(sd)?),
            };
            Ok(betti_output(&label, &poly, json, at.as_ref()))
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn divisor_json(d: &DivisorAL) -> Value {
    json!({ "a": d.a.to_string(), "l": d.l.to_string() })
}

fn cone_output(a: &DivisorAL, b: &DivisorAL, json: bool) -> String {
    if json {
        pretty(&json!({ "generators": [divisor_json(a), divisor_json(b)] }))
    } else {
        format!("{a}, {b}\n")
    }
}

fn betti_output(label: &str, p: &PoincarePolynomial, json: bool, at: Option<&Rational>) -> String {
    let value = at.map(|x| p.poly().eval_rational(x));
    if json {
        let coeffs: Vec<String> = p.poly().coeffs().iter().map(ToString::to_string).collect();
        let mut obj = json!({
            "space": label,
            "coefficients": coeffs,
            "degree": p.degree(),
            "euler": p.euler().to_string(),
        });
        if let (Some(x), Some(v)) = (at, &value) {
            obj["at"] = json!({ "q": x.to_string(), "value": v.to_string() });
        }
        return pretty(&obj);
    }
    let mut out = format!("P({label}) = {p}\n");
    let degree = p
        .degree()
        .map_or_else(|| "-".to_string(), |d| d.to_string());
    writeln!(out, "degree {degree}, euler characteristic {}", p.euler()).unwrap();
    if let (Some(x), Some(v)) = (at, value) {
        writeln!(out, "value at q = {x}: {v}").unwrap();
    }
    out
}

struct WallRow {
    label: Option<&'static str>,
    destabilizer: ChernP2,
    wall: Wall,
    divisor: DivisorAL,
}

fn walls_cmd(d: i64, json: bool, svg: Option<&Path>) -> Result<String> {
    // Only M_6 has curated actual walls.
    let curated = if d == 6 {
        m6_actual_walls()
    } else {
        Vec::new()
    };
    let mut rows = Vec::new();
    for (destab, wall) in enumerate_potential_walls(d)? {
        let label = curated
            .iter()
            .find(|a| a.destabilizer == destab)
            .map(|a| a.label);
        let divisor = wall_divisor(d, &destab)?;
        rows.push(WallRow {
            label,
            destabilizer: destab,
            wall,
            divisor,
        });
    }

    if let Some(path) = svg {
        let walls: Vec<Wall> = rows.iter().map(|r| r.wall.clone()).collect();
        render_svg(&walls, path)
            .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?;
    }

    if json {
        let items: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "label": r.label,
                    "actual": r.label.is_some(),
                    "destabilizer": {
                        "r": r.destabilizer.rank(),
                        "c": r.destabilizer.degree(),
                        "e": r.destabilizer.ch2().to_string(),
                    },
                    "center": r.wall.center().to_string(),
                    "radius_sq": r.wall.radius_sq().to_string(),
                    "divisor": divisor_json(&r.divisor),
                })
            })
            .collect();
        return Ok(pretty(&json!({ "degree": d, "walls": items })));
    }

    let mut out = String::new();
    writeln!(
        out,
        "{:<6} {:<14} {:<8} {:<10} {:<10} status",
        "wall", "destabilizer", "center", "radius^2", "divisor"
    )
    .unwrap();
    for r in &rows {
        let status = if r.label.is_some() {
            "actual"
        } else if curated.is_empty() {
            "potential"
        } else {
            "potential only"
        };
        writeln!(
            out,
            "{:<6} {:<14} {:<8} {:<10} {:<10} {status}",
            r.label.unwrap_or("-"),
            r.destabilizer.to_string(),
            r.wall.center().to_string(),
            r.wall.radius_sq().to_string(),
            r.divisor.to_string(),
        )
        .unwrap();
    }
    Ok(out)
}

const SVG_WIDTH: f64 = 800.0;
const SVG_MARGIN: f64 = 20.0;

/// Draw walls as semicircles in the upper half-plane.
///
/// Geometry is computed from the exact centers and radii; floats appear only
/// in the serialized coordinates, which are printed to three decimals so the
/// output is byte-identical across runs.
pub fn render_svg_string(walls: &[Wall]) -> Result<String> {
    if walls.is_empty() {
        return Err(Error::Domain("no walls to draw".into()));
    }
    let radii: Vec<f64> = walls.iter().map(Wall::radius_f64).collect();
    let centers: Vec<f64> = walls.iter().map(|w| w.center().to_f64()).collect();
    let left = centers
        .iter()
        .zip(&radii)
        .map(|(c, r)| c - r)
        .fold(f64::INFINITY, f64::min);
    let right = centers
        .iter()
        .zip(&radii)
        .map(|(c, r)| c + r)
        .fold(f64::NEG_INFINITY, f64::max);
    let top = radii.iter().copied().fold(0.0, f64::max);
    let scale = (SVG_WIDTH - 2.0 * SVG_MARGIN) / (right - left);
    let height = top * scale + 2.0 * SVG_MARGIN;
    let base = height - SVG_MARGIN;
    let px = |x: f64| SVG_MARGIN + (x - left) * scale;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH:.0}" height="{height:.3}" viewBox="0 0 {SVG_WIDTH:.0} {height:.3}">"#
    )
    .unwrap();
    writeln!(
        s,
        r#"  <line x1="0" y1="{base:.3}" x2="{SVG_WIDTH:.0}" y2="{base:.3}" stroke="gray" stroke-width="1"/>"#
    )
    .unwrap();
    for ((w, c), r) in walls.iter().zip(&centers).zip(&radii) {
        let rr = r * scale;
        writeln!(
            s,
            r#"  <path d="M {:.3} {base:.3} A {rr:.3} {rr:.3} 0 0 1 {:.3} {base:.3}" fill="none" stroke="black" stroke-width="1"><title>center {}, radius^2 {}</title></path>"#,
            px(c - r),
            px(c + r),
            w.center(),
            w.radius_sq(),
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}

pub fn render_svg(walls: &[Wall], path: &Path) -> std::io::Result<()> {
    let svg = render_svg_string(walls)
        .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidInput, e.to_string()))?;
    std::fs::write(path, svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn call(args: &[&str]) -> CliOutput {
        let argv: Vec<String> = std::iter::once("sheafwall")
            .chain(args.iter().copied())
            .map(String::from)
            .collect();
        run(&argv)
    }

    #[test]
    fn nef_text() {
        let out = call(&["nef", "--degree", "6"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "A, 16A + L\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["nef"]).code, 1);
        assert_eq!(call(&["frobnicate"]).code, 1);
        assert_eq!(call(&["nef", "--degree", "6", "--bogus"]).code, 1);
        let out = call(&["nef", "--degree", "2"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.starts_with("error: domain error"));
        assert_eq!(call(&["--help"]).code, 0);
    }

    #[test]
    fn hyphenated_classes_parse() {
        let out = call(&["divisor", "--degree", "6", "--destabilizer", "1,3,-7/2"]);
        assert_eq!(out.stdout, "3A + L\n");
        let out = call(&[
            "intersect",
            "--family",
            "even-wall",
            "--degree",
            "6",
            "--w",
            "-6,1,-1/2",
        ]);
        assert_eq!(out.stdout, "-21\n");
        let out = call(&["euler", "--v", "1,0,0", "--w", "1,1,1/2"]);
        assert_eq!(out.stdout, "3\n");
    }

    #[test]
    fn walls_mark_actual_and_potential() {
        let out = call(&["walls", "--degree", "6"]);
        assert_eq!(out.code, 0);
        let actual = out
            .stdout
            .lines()
            .filter(|l| l.ends_with(" actual"))
            .count();
        assert_eq!(actual, 7);
        assert!(out.stdout.contains("potential only"));
    }

    #[test]
    fn betti_at_a_rational_point() {
        let out = call(&["betti", "--space", "p:2", "--at", "-1/2"]);
        assert!(
            out.stdout.contains("value at q = -1/2: 3/4"),
            "{}",
            out.stdout
        );
        assert_eq!(call(&["betti", "--space", "hilb:6:3"]).code, 2);
        assert_eq!(call(&["betti", "--space", "nonsense"]).code, 1);
    }

    #[test]
    fn svg_is_deterministic_and_rejects_empty() {
        let w = vec![
            Wall::new(rat(-4, 3), rat(64, 9)).unwrap(),
            Wall::new(rat(-4, 3), rat(16, 9)).unwrap(),
        ];
        let a = render_svg_string(&w).unwrap();
        assert_eq!(a, render_svg_string(&w).unwrap());
        assert_eq!(a.matches("<path").count(), 2);
        assert!(render_svg_string(&[]).is_err());
    }
}
