// Nef and effective cones of M_d for small d.
//
// The second nef generator is found twice: once from the class orthogonal
// to the first-wall destabilizer, and once by making a divisor vanish on
// the curve that the first wall contracts.

use sheafwall::divisors::{effective_generators, nef_generators, nef_via_wall_family};

pub fn run_example() -> sheafwall::Result<()> {
    println!("{:>3}  {:<18} {:<18} effective", "d", "nef", "nef (curve)");
    for d in 3..=12 {
        let (a, b) = nef_generators(d)?;
        let via_curve = nef_via_wall_family(d)?;
        assert_eq!(b, via_curve);
        let (e1, e2) = effective_generators(d)?;
        println!(
            "{d:>3}  {:<18} {:<18} {e1}, {e2}",
            format!("{a}, {b}"),
            via_curve.to_string()
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("cones");
}
