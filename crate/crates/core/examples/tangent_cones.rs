// Tangent cones through Mora's standard basis algorithm.

use tangent_cone::deform::tangent_cone;
use tangent_cone::verify::build_example;
use tangent_cone::{Ideal, Result, Ring};

pub fn run() -> Result<()> {
    let r = Ring::rational(&["x", "y"]);
    for gens in [&["y^2 - x^3"][..], &["y^2 - x^2 - x^3"], &["x^2 + y^3", "x*y^2"]] {
        let i = Ideal::parse(&r, gens)?;
        println!("{i:<24} -> {}", tangent_cone(&i)?);
    }
    for n in 1..=4 {
        let p = build_example(n)?;
        let start = std::time::Instant::now();
        let cone = tangent_cone(&p)?;
        println!("n = {n}: {cone}  ({:?})", start.elapsed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
