// Poincaré polynomials of Hilbert schemes of points on P² and of the
// flipped models used at the walls of M_6.

use sheafwall::betti::{hilb_euler_characteristic, hilb_model_poincare, hilb_poincare};

pub fn run_example() -> sheafwall::Result<()> {
    for n in 0..=6 {
        println!(
            "Hilb^{n}: {}   (euler {})",
            hilb_poincare(n)?,
            hilb_euler_characteristic(n)?
        );
    }
    for (n, k) in [(3, 1), (4, 1), (4, 2), (5, 2), (8, 6)] {
        println!("(Hilb^{n})_{k}: {}", hilb_model_poincare(n, k)?);
    }
    Ok(())
}

fn main() {
    run_example().expect("Hilbert schemes");
}
