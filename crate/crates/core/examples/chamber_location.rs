// Which model of a Hilbert scheme appears at a wall of M_6.
//
// Reference walls for Hilb^8 are moved by a twist; those for Hilb^4 by a
// derived dual followed by a twist. Counting how many of them enclose the
// top of our wall gives the index of the model.

use sheafwall::betti::m6_actual_walls;
use sheafwall::walls::{hilb_reference_walls, locate_model, transform_walls, WallTransform};

pub fn run_example() -> sheafwall::Result<()> {
    let find = |label: &str| {
        m6_actual_walls()
            .into_iter()
            .find(|w| w.label == label)
            .expect("known wall")
            .wall()
    };

    let hilb8 = transform_walls(&hilb_reference_walls(8)?, WallTransform::Twist(3));
    let w1 = find("W1")?;
    println!(
        "W1 ({w1}) sits in chamber {} of {}",
        locate_model(&w1, &hilb8)?,
        hilb8.label()
    );

    let hilb4 = transform_walls(
        &transform_walls(&hilb_reference_walls(4)?, WallTransform::Dual),
        WallTransform::Twist(-5),
    );
    for rw in hilb4.walls() {
        println!(
            "  {} wall x = {} moves to {}",
            hilb4.label(),
            rw.source_x,
            rw.wall
        );
    }
    let w4 = find("W4")?;
    println!(
        "W4 ({w4}) sits in chamber {} of {}",
        locate_model(&w4, &hilb4)?,
        hilb4.label()
    );
    Ok(())
}

fn main() {
    run_example().expect("chamber location");
}
