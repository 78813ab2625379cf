// Pairing a composite against a decomposable tensor, split over a dual basis.

use zollstock::super_operad::{vowa_check, vowa_exhaustive, SuperSpace, SuperTensor};

pub fn run_example() -> zollstock::Result<()> {
    let space = SuperSpace::standard(3)?;
    let duals = space.dual_basis()?;
    let v = SuperTensor::basis(vec![1, 2, 0]);
    let w = SuperTensor::basis(vec![2, 1]);
    let alpha: Vec<_> = [0, 1, 2].iter().map(|&i| space.basis_vector(i)).collect();
    let out = vowa_check(&space, &duals, &v, &w, 1, &alpha)?;
    println!("lhs {} rhs {} holds {}", out.lhs, out.rhs_full, out.holds());

    if let Err(e) = vowa_check(&space, &duals, &SuperTensor::basis(vec![0, 1]), &w, 1, &alpha[..2]) {
        println!("odd v: {e}");
    }

    for d in 1..=4 {
        let c = vowa_exhaustive(&SuperSpace::standard(d)?, 2)?;
        println!("dim {d}: pass {} ({} instances)", c.pass, c.params["instances"]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> zollstock::Result<()> {
    run_example()
}
