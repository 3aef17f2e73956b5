// The curves parametrized by (s t^(2n+1), s^(2n+1) t, t^2, s^2): their
// tangent cones fail the classical multiplicity bounds.

use tangent_cone::verify::{distinct_hilbert_polynomials, verify_example};
use tangent_cone::Result;

pub fn run() -> Result<()> {
    println!("{:>2} {:<14} {:>3} {:>4} {:>4}  {:<38} {:>3}", "n", "h(t)", "e0", "e1", "e2", "A N S.1 S.2 GN corrected h2", "ok");
    for n in 1..=4 {
        let rep = verify_example(n)?;
        let marks: Vec<&str> = rep.verdicts.iter().map(|v| if v.holds { "+" } else { "-" }).collect();
        println!(
            "{n:>2} {:<14} {:>3} {:>4} {:>4}  {:<38} {:>3}",
            rep.hilbert.numerator_string(),
            rep.hilbert.e[0],
            rep.hilbert.e[1],
            rep.hilbert.e[2],
            marks.join(" "),
            rep.certified()
        );
    }
    println!("Hilbert polynomials pairwise distinct: {}", distinct_hilbert_polynomials(&[1, 2, 3, 4])?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
