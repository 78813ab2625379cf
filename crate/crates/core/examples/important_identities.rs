// The two ψ̃-power identities, over the trivial base and over Q[h]/h^2.

use zollstock::base_algebra::BaseOperad;
use zollstock::mtilde::{important_a, important_a_exhaustive, MTilde};

pub fn run_example() -> zollstock::Result<()> {
    let (ok, lhs, rhs) = important_a(1, 2)?;
    println!("d0=1 d1=2: {ok}\n  lhs {lhs}\n  rhs {rhs}");
    println!("{:?}", important_a_exhaustive(6)?);

    for base in [BaseOperad::trivial(), BaseOperad::dual_numbers()] {
        let op = MTilde::new(&base);
        let out = op.important_b(2, &[0, 2, 0], &[1, 0, 0], 1)?;
        println!("{}: n=2 d=(0,2,0) e=(1,0,0) j=1 holds {}", base.name(), out.holds);
        let c = op.important_b_exhaustive(2, 3)?;
        println!("{}: exhaustive pass {} ({} instances)", base.name(), c.pass, c.params["instances"]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> zollstock::Result<()> {
    run_example()
}
