// ψ/φ classes of the two-pointed space and substituting a degree-one class for t0.

use zollstock::base_algebra::BaseOperad;
use zollstock::rt0::ClassConstants;
use zollstock::RT0Element;

pub fn run_example() -> zollstock::Result<()> {
    let c = ClassConstants::new();
    println!("ψ0 = {}, ψ1 = {}, φ0 = {}, φ1 = {}", c.psi0, c.psi1, c.phi0, c.phi1);
    assert_eq!(&c.psi1 - &c.phi1, "t1".parse()?);

    let base = BaseOperad::dual_numbers();
    let alg = base.algebra(2)?;
    let h = base.phi(2, 0)?.clone();
    for s in ["t0 + t1", "t0^2", "t0*t1 + t1*t2"] {
        let x: RT0Element = s.parse()?;
        let y = x.substitute_class(&h, alg)?;
        println!("{s} at t0 = h: {}", y.format(alg));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> zollstock::Result<()> {
    run_example()
}
