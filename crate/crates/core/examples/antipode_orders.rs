//! Antipode orders and q-classes of the cyclic anti-diagonal families.

use bilinear_hopf::hopf::{six_dim_cyclic, small_cyclic, DEFAULT_MAX_K};
use bilinear_hopf::io::report::{antipode_text, q_class_text};

fn main() -> bilinear_hopf::Result<()> {
    println!("AD(xi,1,1,1,1,1), xi of order m");
    for m in 1..=10 {
        let a = six_dim_cyclic(m)?.analyze(DEFAULT_MAX_K)?;
        println!(
            "  m={m:>2}  order {:>3}  cosemisimple {:<5}  q {}",
            antipode_text(&a.antipode_order),
            a.cosemisimple,
            q_class_text(a.q_class)
        );
    }
    println!("smallest cyclic forms");
    for m in 3..=9 {
        let p = small_cyclic(m)?;
        let a = p.analyze(DEFAULT_MAX_K)?;
        println!(
            "  m={m:>2}  n={}  order {:>3}  cosemisimple {:<5}  tr F ~ {:+.4}  q {}",
            p.size(),
            antipode_text(&a.antipode_order),
            a.cosemisimple,
            p.trace_f().approx().0,
            q_class_text(a.q_class)
        );
    }
    Ok(())
}
