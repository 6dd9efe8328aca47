//! AD(1,1,t) with t^2 + 3t + 1 = 0: cotriangular, yet S has infinite order.

use bilinear_hopf::arith::is_root_of_unity;
use bilinear_hopf::hopf::{golden_cotriangular, golden_root, DEFAULT_MAX_K};
use bilinear_hopf::io::report::antipode_text;

fn main() -> bilinear_hopf::Result<()> {
    let t = golden_root();
    println!("t = {} ~ {:.6}", t.to_z_string(), t.approx().0);
    let p = golden_cotriangular();
    let a = p.analyze(DEFAULT_MAX_K)?;
    println!("trace of F: {}", p.trace_f().to_z_string());
    println!("cotriangular: {}", a.cotriangular_hint);
    println!("antipode order: {}", antipode_text(&a.antipode_order));
    let t2 = &t * &t;
    println!(
        "t^2 = {} is a root of unity: {}",
        t2.to_z_string(),
        is_root_of_unity(&t2)?.is_some()
    );
    for v in a.s_squared_spectrum.unwrap_or_default() {
        println!(
            "  S^2 eigenvalue {:>20} ~ {:+.6}",
            v.to_z_string(),
            v.approx().0
        );
    }
    Ok(())
}
