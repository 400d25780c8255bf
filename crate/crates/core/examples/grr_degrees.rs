// Degrees of determinant line bundles on test curves, computed by
// Grothendieck-Riemann-Roch in the Chow ring of (curve) × P².

use sheafwall::divisors::{d_class, d_in_al, family_class, genus, intersection_degree, FamilyKind};
use sheafwall::ktheory::point;

pub fn run_example() -> sheafwall::Result<()> {
    for d in 3..=8 {
        let pencil = family_class(FamilyKind::Pencil, d)?;
        let jac = family_class(FamilyKind::Jacobian, d)?;
        let dc = d_class(d);
        println!(
            "d = {d}: D.P = {}, D.T = {} (g = {}), A.P = {}, A.T = {}, so D = {}",
            intersection_degree(&pencil, &dc),
            intersection_degree(&jac, &dc),
            genus(d)?,
            intersection_degree(&pencil, &point()),
            intersection_degree(&jac, &point()),
            d_in_al(d)?,
        );
        let kind = if d % 2 == 0 {
            FamilyKind::EvenWall
        } else {
            FamilyKind::OddWall
        };
        let contracted = family_class(kind, d)?;
        println!(
            "        D on the first-wall curve: {}",
            intersection_degree(&contracted, &dc)
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("GRR degrees");
}
