// Hilbert series, Hilbert coefficients and Hilbert-Samuel polynomials.

use tangent_cone::deform::tangent_cone;
use tangent_cone::hilbert::{artinian_length, hilbert_samuel, hilbert_series, local_hilbert_series};
use tangent_cone::verify::build_example;
use tangent_cone::{Ideal, Result, Ring};

pub fn run() -> Result<()> {
    // the projective twisted cubic
    let r = Ring::rational(&["x", "y", "z", "w"]);
    let twisted = Ideal::parse(&r, &["x*z - y^2", "x*w - y*z", "y*w - z^2"])?;
    let h = hilbert_series(&twisted)?;
    println!("{twisted}: h(t) = {}, dim {:?}, degree {}", h.numerator_string(), h.dim, h.e[0]);

    let cusp = Ideal::parse(&Ring::rational(&["x", "y"]), &["y^2 - x^3"])?;
    let h = local_hilbert_series(&cusp)?;
    println!("cusp: multiplicity {}, HS(j) = {}", h.e[0], h.hs_polynomial);

    for n in 1..=4 {
        let cone = tangent_cone(&build_example(n)?)?;
        let h = hilbert_series(&cone)?;
        println!(
            "n = {n}: h(t) = {:<14} e = {:?}  HS(j) = {}",
            h.numerator_string(),
            h.e.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            h.hs_polynomial
        );
        println!("        Σ HF(i), i ≤ {} = {}", 2 * n + 6, hilbert_samuel(&build_example(n)?, 2 * n + 6)?);
    }

    let r4 = Ring::rational(&["x", "y", "z", "w"]);
    for n in 1..=5 {
        let q = Ideal::parse(&r4, &["x".to_string(), "y".into(), format!("z^{n}"), format!("w^{n}")])?;
        println!("length of k[x,y,z,w]/(x, y, z^{n}, w^{n}) = {}", artinian_length(&q)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
