// P(M_6) from P(Q_6) plus one correction per flipping wall.

use sheafwall::betti::{assemble_m6, ext_dims_at_wall, m6_wall_records, q6, wall_contribution};

pub fn run_example() -> sheafwall::Result<()> {
    println!("P(Q_6) = {}", q6()?);
    for rec in m6_wall_records() {
        let (a, b) = ext_dims_at_wall(6, &rec.destabilizer)?;
        let contribution = wall_contribution(6, &rec)?;
        println!(
            "{:<4} {} ext dims ({a}, {b}) over {}: euler {:+}",
            rec.label,
            rec.destabilizer,
            rec.base,
            contribution.value_at_one(),
        );
    }
    let m6 = assemble_m6()?;
    println!("P(M_6) = {m6}");
    println!("euler characteristic {}", m6.euler());
    Ok(())
}

fn main() {
    run_example().expect("P(M_6)");
}
