// Compositions, permutations and pairings in the super endomorphism operad.

use zollstock::perm::Perm;
use zollstock::super_operad::{es_axiom_check, es_compose, es_permute, pair, SuperSpace, SuperTensor};

pub fn run_example() -> zollstock::Result<()> {
    let space = SuperSpace::parse(
        "vector e even\nvector o1 odd\nvector o2 odd\npair e e = 1\npair o1 o2 = 1\npair o2 o1 = -1\n",
    )?;
    println!("{space}");
    let v = SuperTensor::basis(vec![0, 1]);
    let w = SuperTensor::basis(vec![2, 0]);
    println!("(e⊗o1) ∘1 (o2⊗e) = {}", es_compose(&space, &v, &w, 1)?.format(&space));

    let swap = Perm::transposition(2, 0, 1);
    let odd = SuperTensor::basis(vec![1, 2]);
    println!("swap(o1⊗o2) = {}", es_permute(&space, &swap, &odd)?.format(&space));
    println!("<o1⊗o2, o2⊗o1> = {}", pair(&space, &odd, &SuperTensor::basis(vec![2, 1]))?);

    for c in es_axiom_check(&space, 2) {
        println!("{} {}", if c.pass { "pass" } else { "FAIL" }, c.id);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> zollstock::Result<()> {
    run_example()
}
