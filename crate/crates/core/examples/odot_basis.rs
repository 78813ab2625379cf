// Expanding elements of R[t0] in the two ⊙-word bases.

use zollstock::basis::{evaluate_expansion, expand, format_expansion, BasisKind, DegreeBasis};
use zollstock::RT0Element;

pub fn run_example() -> zollstock::Result<()> {
    for n in 0..=4 {
        let b = DegreeBasis::new(n, BasisKind::Structure);
        println!("degree {n}: {} words, det {}", b.rank(), b.determinant());
    }
    for s in ["t1", "t0", "t0*t1 + t1^2 + 2*t1*t2", "t1*t2^2"] {
        let x: RT0Element = s.parse()?;
        for kind in [BasisKind::Structure, BasisKind::Iota] {
            let terms = expand(&x, kind)?;
            assert_eq!(evaluate_expansion(&terms, kind), x);
            println!("{s:>24} = {}", format_expansion(&terms, kind));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> zollstock::Result<()> {
    run_example()
}
