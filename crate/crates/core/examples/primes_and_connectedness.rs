// Minimal primes through the origin, the graphs Γ_s, sdim and slicing.

use tangent_cone::spectrum::{connected_in_codim, gamma_graph, min_primes_general, sdim, slice_check};
use tangent_cone::{Ideal, Polynomial, Result, Ring};

fn describe(i: &Ideal) -> Result<()> {
    let primes = min_primes_general(i)?;
    println!("{i}");
    for p in &primes {
        println!("  {:<18} {:<20} dim {}", p.ideal.to_string(), p.kind.name(), p.dim);
    }
    let d = primes.iter().map(|p| p.dim).max().unwrap_or(0);
    for s in 0..=d {
        let g = gamma_graph(&primes, d, s)?;
        println!("  s = {s}: edges {:?}, connected {}", g.edges(), connected_in_codim(i, s)?.connected);
    }
    println!("  sdim = {:?}", sdim(i)?);
    Ok(())
}

pub fn run() -> Result<()> {
    let r = Ring::rational(&["x", "y", "z", "w"]);
    // two planes through the origin meeting only there
    let planes = Ideal::parse(&r, &["x*z", "x*w", "y*z", "y*w"])?;
    describe(&planes)?;
    // a hyperplane and a plane meeting in a line
    describe(&Ideal::parse(&r, &["x*z", "y*z"])?)?;
    // a hyperplane and a parabolic cylinder
    describe(&Ideal::parse(&r, &["x*(y - z^2)", "x*w"])?)?;
    // the component x = 1 misses the origin
    describe(&Ideal::parse(&r, &["(x - 1)*y", "(x - 1)*z"])?)?;

    let x_plus_z = &Polynomial::var(&r, 0) + &Polynomial::var(&r, 2);
    let slice = slice_check(&planes, &x_plus_z, 1)?;
    println!(
        "slicing the two planes by x + z: sdim {:?} -> {:?}, connected {} -> {}, violations {:?}",
        slice.sdim_before, slice.sdim_after, slice.connected_before, slice.connected_after, slice.violations()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
