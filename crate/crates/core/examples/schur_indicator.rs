//! The Frobenius-Schur indicator n / tr(F), computed directly and through
//! the Haar state applied to the square of the character.

use bilinear_hopf::arith::CycloNumber;
use bilinear_hopf::haar::{schur_indicator, schur_indicator_via_character};
use bilinear_hopf::hopf::{signed_antidiagonal, BEPresentation};
use bilinear_hopf::matrix::ExactMatrix;

fn show(label: &str, p: &BEPresentation) -> bilinear_hopf::Result<()> {
    println!(
        "{label:<28} n={:<2} tr F = {:<6} nu2 = {:<5} (character route {})",
        p.size(),
        p.trace_f().to_z_string(),
        schur_indicator(p)?.to_z_string(),
        schur_indicator_via_character(p)?.to_z_string()
    );
    Ok(())
}

fn main() -> bilinear_hopf::Result<()> {
    show(
        "identity",
        &BEPresentation::new(ExactMatrix::identity(3, 1))?,
    )?;
    let skew = ExactMatrix::antidiag(&[CycloNumber::int(1), CycloNumber::int(-1)])?;
    show("AD(1,-1)", &BEPresentation::new(skew)?)?;
    for n in [3, 5, 7, 9] {
        show(
            &format!("signed antidiagonal, n={n}"),
            &signed_antidiagonal(n)?,
        )?;
    }
    Ok(())
}
