//! Counit, antipode and coproduct checks for a few small forms.

use bilinear_hopf::arith::CycloNumber;
use bilinear_hopf::hopf::{golden_cotriangular, small_cyclic, verify_hopf_axioms, BEPresentation};
use bilinear_hopf::matrix::ExactMatrix;

fn main() -> bilinear_hopf::Result<()> {
    let forms = [
        (
            "AD(1,2)",
            BEPresentation::new(ExactMatrix::antidiag(&[
                CycloNumber::int(1),
                CycloNumber::int(2),
            ])?)?,
        ),
        ("golden", golden_cotriangular()),
        ("AD(1,1,zeta_7)", small_cyclic(7)?),
    ];
    for (label, p) in &forms {
        let r = verify_hopf_axioms(p, 2)?;
        println!(
            "{label:<16} counit {:?}  antipode {:?}  S(I) in I {:?}  coproduct {:?}  (closure degree {})",
            r.counit, r.antipode_axiom, r.s_preserves_ideal, r.comult_compatible, r.closure_degree
        );
    }
    Ok(())
}
