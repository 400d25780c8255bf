// Draw the walls of M_6 together with the twisted Hilb^8 reference walls.
//
// Writes `m6_walls.svg` into the system temp directory, or to the path
// given as the first argument.

use std::path::{Path, PathBuf};

use sheafwall::betti::m6_actual_walls;
use sheafwall::cli::render_svg;
use sheafwall::walls::{hilb_reference_walls, transform_walls, Wall, WallTransform};

pub fn run_example() -> sheafwall::Result<()> {
    write_svg(&std::env::temp_dir().join("m6_walls.svg"))
}

fn write_svg(path: &Path) -> sheafwall::Result<()> {
    let mut walls: Vec<Wall> = m6_actual_walls()
        .iter()
        .map(|w| w.wall())
        .collect::<sheafwall::Result<_>>()?;
    let hilb8 = transform_walls(&hilb_reference_walls(8)?, WallTransform::Twist(3));
    walls.extend(hilb8.walls().iter().map(|rw| rw.wall.clone()));

    render_svg(&walls, path)
        .map_err(|e| sheafwall::Error::Domain(format!("writing {}: {e}", path.display())))?;
    println!("wrote {} arcs to {}", walls.len(), path.display());
    Ok(())
}

fn main() {
    let result = match std::env::args().nth(1) {
        Some(path) => write_svg(&PathBuf::from(path)),
        None => run_example(),
    };
    result.expect("SVG");
}
