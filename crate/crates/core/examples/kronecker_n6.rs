// Betti numbers of Kronecker moduli, checked against a point count over
// small finite fields.

use sheafwall::betti::{brute_force_kronecker_count, kronecker_poincare, DimVector};
use sheafwall::Rational;

pub fn run_example() -> sheafwall::Result<()> {
    let n6 = kronecker_poincare(3, DimVector::new(5, 4)?)?;
    println!("P(N(3;5,4)) = {n6}");

    for (e, f) in [(1, 1), (2, 1), (1, 2), (3, 2)] {
        let dv = DimVector::new(e, f)?;
        let poly = kronecker_poincare(3, dv)?;
        for p in [2u32, 3] {
            let counted = brute_force_kronecker_count(3, dv, p)?;
            let predicted = poly.poly().eval(&p.into());
            println!("N(3;{e},{f}) over F_{p}: counted {counted}, polynomial gives {predicted}");
            assert_eq!(Rational::from(counted), Rational::from(predicted));
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("Kronecker moduli");
}
