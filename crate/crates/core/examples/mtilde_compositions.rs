// The four composition cases and the actions in the extended operad over a base.

use zollstock::base_algebra::BaseOperad;
use zollstock::mtilde::{MTilde, MTildeElement};
use zollstock::perm::Perm;
use zollstock::{Polynomial, RT0Element};

pub fn run_example() -> zollstock::Result<()> {
    let base = BaseOperad::trivial();
    let op = MTilde::new(&base);
    let p = |s: &str| s.parse::<Polynomial>();
    let u = |s: &str| -> zollstock::Result<MTildeElement> { Ok(MTildeElement::unary(s.parse::<RT0Element>()?)) };

    let x = u("t0")?;
    let s2 = MTildeElement::stable(0, &[p("t1")?, p("1")?, p("1")?])?;
    let s2b = MTildeElement::stable(0, &[p("1")?, p("t1")?, p("1")?])?;

    let show = |label: &str, e: &MTildeElement| println!("{label:<22} {}", e.format(&base));
    show("t0 ∘1 1", &op.compose(&x, &u("1")?, 1)?);
    show("s ∘1 t0", &op.compose(&s2b, &x, 1)?);
    show("t0 ∘1 s", &op.compose(&x, &s2, 1)?);
    show("s ∘2 s", &op.compose(&s2, &s2b, 2)?);

    let cycle = Perm::cycle(2);
    show("τ · s", &op.act(&cycle, &s2)?);
    show("swap · (t0)", &op.act(&Perm::transposition(2, 0, 1), &x)?);

    for i in 0..=2 {
        let (psi, phi) = op.psi_phi_classes(2, i)?;
        show(&format!("ψ̃_{i}"), &psi);
        show(&format!("φ̃_{i}"), &phi);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> zollstock::Result<()> {
    run_example()
}
