//! Exact arithmetic in cyclotomic fields and the classification of q.

use bilinear_hopf::arith::{certified_sign, is_root_of_unity, q_class, CycloNumber};

fn main() -> bilinear_hopf::Result<()> {
    let z3 = CycloNumber::zeta(3);
    let z4 = CycloNumber::zeta(4);
    println!("strict addition across fields: {:?}", z3.try_add(&z4).err());
    let sum = &z3 + &z4;
    println!(
        "zeta_3 + zeta_4 = {} in conductor {}",
        sum.to_z_string(),
        sum.conductor()
    );
    println!(
        "1 / (1 + zeta_5) = {}",
        (CycloNumber::one(5) + CycloNumber::zeta(5))
            .inv()?
            .to_z_string()
    );
    println!("order of -zeta_3: {:?}", is_root_of_unity(&-z3.clone())?);

    let phi = CycloNumber::parse(5, "-z^2-z^3")?;
    println!(
        "{} ~ {:.6}, sign {:?}",
        phi.to_z_string(),
        phi.approx().0,
        certified_sign(&phi)
    );

    for t in -3..=3 {
        println!("tr F = {t:>2}: q is {:?}", q_class(&CycloNumber::int(t)));
    }
    Ok(())
}
