//! Degree-2 Haar moments and a check of their invariance modulo the relations.

use bilinear_hopf::haar::{invariance_check, HaarMomentTable};
use bilinear_hopf::hopf::golden_cotriangular;
use bilinear_hopf::io::moment_table_text;

fn main() -> bilinear_hopf::Result<()> {
    let p = golden_cotriangular();
    let table = HaarMomentTable::new(&p)?;
    print!("{}", moment_table_text(&table));
    let report = invariance_check(&p, 2)?;
    println!(
        "right invariance {:?}, left invariance {:?}, {} index tuples, closure degree {}",
        report.right, report.left, report.tuples_checked, report.closure_degree
    );
    Ok(())
}
