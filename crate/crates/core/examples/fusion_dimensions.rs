//! Quotient dimensions of truncated B(E) against the SL(2) fusion recursion
//! `d_{k+1} = n d_k - d_{k-1}`.

use std::time::Instant;

use bilinear_hopf::arith::CycloNumber;
use bilinear_hopf::matrix::ExactMatrix;
use bilinear_hopf::nc::{build_relations, IdealTruncation};

fn fusion_sum(n: usize, d: usize) -> usize {
    let (mut prev, mut cur) = (0usize, 1usize);
    let mut total = 0;
    for _ in 0..=d {
        total += cur * cur;
        let next = n * cur - prev;
        prev = cur;
        cur = next;
    }
    total
}

fn main() -> bilinear_hopf::Result<()> {
    let skew = ExactMatrix::antidiag(&[CycloNumber::int(1), CycloNumber::int(-1)])?;
    let t = CycloNumber::parse(5, "z+z^4-1")?;
    let golden = ExactMatrix::antidiag(&[CycloNumber::int(1), CycloNumber::int(1), t])?;
    for (label, e, max_d) in [("AD(1,-1)", &skew, 3), ("AD(1,1,t)", &golden, 2)] {
        let rels = build_relations(e)?;
        let n = e.size();
        for d in 1..=max_d {
            let start = Instant::now();
            let trunc = IdealTruncation::build(&rels, n, d, 2)?;
            println!(
                "{label:>10} d={d}: quotient {:>4}, fusion {:>4}, {} products, {:.2?}",
                trunc.quotient_dimension(),
                fusion_sum(n, d),
                trunc.product_count(),
                start.elapsed()
            );
        }
    }
    Ok(())
}
