// The two products on R[t0] and the involution.

use zollstock::RT0Element;

pub fn run_example() -> zollstock::Result<()> {
    let x: RT0Element = "t0 + t1".parse()?;
    let one = RT0Element::one();

    println!("t1 · t1       = {}", "t1".parse::<RT0Element>()?.dot_mul(&"t1".parse()?));
    println!("(t0+t1)^·2    = {}", x.dot_pow(2));
    println!("1 ⊙ (t0+t1)   = {}", one.odot(&x));
    println!("t1 · (t0+t1)  = {}", "t1".parse::<RT0Element>()?.dot_mul(&x));
    println!("ι(t0^2*t1)    = {}", "t0^2*t1".parse::<RT0Element>()?.iota());
    for n in 1..=4 {
        println!("1^(⊙{n})       = {}", one.odot_pow(n));
    }

    let y: RT0Element = "t0*t1".parse()?;
    assert_eq!(x.odot(&y).iota(), y.iota().odot(&x.iota()));
    assert_eq!(y.iota().iota(), y);
    Ok(())
}

#[allow(dead_code)]
fn main() -> zollstock::Result<()> {
    run_example()
}
