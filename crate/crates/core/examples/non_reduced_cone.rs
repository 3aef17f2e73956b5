// A ring that is not connected in codimension 1 whose tangent cone is.

use tangent_cone::verify::verify_counterexample;
use tangent_cone::Result;

pub fn run() -> Result<()> {
    let rep = verify_counterexample()?;
    println!("I = {}, in(I) = {}", rep.ideal, rep.tangent_cone);
    for (name, c) in [("ring", &rep.ring), ("cone", &rep.cone)] {
        let vertices: Vec<String> = c.graph.vertices.iter().map(|p| p.ideal.to_string()).collect();
        println!("{name}: primes {vertices:?}, edges {:?}, connected in codim 1: {}", c.graph.edges(), c.connected);
    }
    println!("sdim ring {:?}, sdim cone {:?}", rep.sdim_ring, rep.sdim_cone);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
