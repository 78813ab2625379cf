// The ring R: products through covering pairs, truncation to R_d, and decoding.

use zollstock::ring_r::{decode_rd, r_monomial};
use zollstock::{Polynomial, RElement};

pub fn run_example() -> zollstock::Result<()> {
    let t1 = r_monomial(&[1]);
    let t1t2 = r_monomial(&[1, 1]);
    println!("t1 · t1      = {}", t1.r_mul(&t1));
    println!("t1 · t1*t2   = {}", t1.r_mul(&t1t2));

    let f = RElement::from_polynomial(&"t1^2 + 3*t1*t2".parse::<Polynomial>()?)?;
    for d in 1..=3 {
        let fd = f.project_to_level(d);
        println!("level {d}: {}", fd.value());
        if d >= 2 {
            let back = decode_rd(fd.value(), d)?;
            assert_eq!(back, f);
        }
    }

    // t2 alone is not the image of anything at level 2
    match decode_rd(&"t2".parse()?, 2) {
        Ok(_) => unreachable!(),
        Err(e) => println!("decode t2: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> zollstock::Result<()> {
    run_example()
}
