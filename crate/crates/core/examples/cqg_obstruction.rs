//! Positivity of the ratios f_i / f_j of a diagonal F, a necessary condition
//! for a compact quantum group structure.

use bilinear_hopf::hopf::{golden_cotriangular, six_dim_cyclic, BEPresentation};
use bilinear_hopf::matrix::ExactMatrix;

fn main() -> bilinear_hopf::Result<()> {
    for m in 1..=6 {
        println!(
            "AD(xi,1,1,1,1,1), m={m}: {:?}",
            six_dim_cyclic(m)?.cqg_obstruction()
        );
    }
    println!("golden form: {:?}", golden_cotriangular().cqg_obstruction());
    println!(
        "identity:    {:?}",
        BEPresentation::new(ExactMatrix::identity(4, 1))?.cqg_obstruction()
    );
    Ok(())
}
