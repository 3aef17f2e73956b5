// The deformation hom(I) from I to its tangent cone, with the checks that
// it specializes correctly and has no t-torsion.

use tangent_cone::deform::{
    check_hom_identities, homogenized_ideal, is_t_regular, naive_homogenization, t_decompose,
};
use tangent_cone::{parse_polynomial, Ideal, Result, Ring};

pub fn run() -> Result<()> {
    let r = Ring::rational(&["x", "y"]);
    let i = Ideal::parse(&r, &["x", "x + y^2"])?;
    let h = homogenized_ideal(&i, None)?;
    println!("hom{i} = ({})", h.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "));
    for c in &h.certificates {
        println!("  {:<24} {}", c.identity, c.holds);
    }

    // homogenizing the given generators one by one misses x = (x + y^2) - y^2
    let naive = naive_homogenization(&i)?;
    println!("generator-wise {naive}: t-regular = {}", is_t_regular(&naive)?);

    let ext = h.extended_ring.clone();
    let f = parse_polynomial("x*t + y^2 + x^3*t^2", &ext)?;
    for (degree, part) in t_decompose(&f)? {
        println!("  t-degree {degree}: {part}");
    }

    let r3 = Ring::rational(&["x", "y", "z"]);
    let a = Ideal::parse(&r3, &["x*(x + y^2)", "x*z"])?;
    let b = Ideal::parse(&r3, &["x"])?;
    let report = check_hom_identities(&a, &b, None)?;
    for c in &report.checks {
        println!("  identity {:<6} {}", c.item, c.holds);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
