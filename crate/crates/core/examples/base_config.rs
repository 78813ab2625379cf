// Describing a base operad in the config format and checking the axioms over it.

use zollstock::base_algebra::BaseOperad;
use zollstock::mtilde::operad_axiom_check;

const CONFIG: &str = "\
# Q[h]/h^2 in every arity, phi_i = h
[algebra n=*]
basis pt deg 0
basis h deg 1
mul h h = 0
phi * = h

clutch m=* n=* j=* pt pt = pt
clutch m=* n=* j=* pt h = h
clutch m=* n=* j=* h pt = h
clutch m=* n=* j=* h h = 0
";

pub fn run_example() -> zollstock::Result<()> {
    let base = BaseOperad::parse(CONFIG, "dual")?;
    println!("B_2 basis: {:?}", base.algebra(2)?.names());
    for c in operad_axiom_check(&base, 2, 1) {
        println!("{} {} ({} instances)", if c.pass { "pass" } else { "FAIL" }, c.id, c.params["instances"]);
    }
    match BaseOperad::parse("[algebra n=*]\nbasis pt deg 0\nmul pt pt = q\n", "broken") {
        Ok(_) => unreachable!(),
        Err(e) => println!("broken config: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> zollstock::Result<()> {
    run_example()
}
