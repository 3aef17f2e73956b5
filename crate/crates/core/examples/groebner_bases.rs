// Global Groebner bases, local standard bases and the ideal operations
// built on them.

use tangent_cone::basis::{ideal_colon, ideal_intersect, saturate, Ideal};
use tangent_cone::{CoefficientField, MonomialOrder, Polynomial, Result, Ring};

pub fn run() -> Result<()> {
    let r = Ring::rational(&["x", "y", "z"]);
    let twisted = Ideal::parse(&r, &["y - x^2", "z - x^3"])?;
    println!("degrevlex basis of the twisted cubic: {}", twisted.groebner()?);
    println!("lex basis:                            {}", twisted.with_order(MonomialOrder::Lex).groebner()?);

    // y^2 = x^3 + x^2 has a node at the origin; locally it is two branches
    let node = Ideal::parse(&r, &["y^2 - x^3 - x^2"])?;
    println!("local standard basis of the node:     {}", node.local_basis());

    let a = Ideal::parse(&r, &["x*y", "x*z"])?;
    let b = Ideal::parse(&r, &["y"])?;
    println!("(xy, xz) ∩ (y) = {}", ideal_intersect(&a, &b)?);
    println!("(xy, xz) : x   = {}", ideal_colon(&a, &Polynomial::var(&r, 0))?);
    println!("(x^2 y) : y^∞  = {}", saturate(&Ideal::parse(&r, &["x^2*y"])?, &Polynomial::var(&r, 1))?);

    let fp = Ring::new(&["x", "y"], CoefficientField::prime(7)?, MonomialOrder::DegRevLex)?;
    println!("over F_7: {}", Ideal::parse(&fp, &["8*x^2 + y", "x*y"])?.groebner()?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
