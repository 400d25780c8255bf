// The seven actual walls of M_6: destabilizers, radii and wall divisors.
//
// Run with `cargo run --example m6_walls`.

use sheafwall::betti::m6_actual_walls;
use sheafwall::divisors::wall_divisor;

pub fn run_example() -> sheafwall::Result<()> {
    println!(
        "{:<5} {:<12} {:<8} {:<9} divisor",
        "wall", "subobject", "center", "radius^2"
    );
    for w in m6_actual_walls() {
        let wall = w.wall()?;
        let div = wall_divisor(6, &w.destabilizer)?;
        println!(
            "{:<5} {:<12} {:<8} {:<9} {div}",
            w.label,
            w.destabilizer.to_string(),
            wall.center().to_string(),
            wall.radius_sq().to_string(),
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("walls of M_6");
}
