//! Exact Gaussian binomials and the closed-form family bounds.

use qdiam::qcount::{evaluate, gauss_binom, kleitman_bound, BoundKind, BoundParams};

pub fn run_example() -> qdiam::Result<()> {
    for n in 0..=5 {
        let row: Vec<String> = (0..=n).map(|k| gauss_binom(n, k, 2).to_string()).collect();
        println!("[{n} k]_2: {}", row.join(" "));
    }
    println!("[40 20]_3 = {}", gauss_binom(40, 20, 3));
    println!("largest family of diameter <= 3 in GF(2)^5: {}", kleitman_bound(5, 3, 2)?);

    let p = BoundParams { q: 2, n: 7, t: Some(2), ..Default::default() };
    for kind in [BoundKind::TypeAEven, BoundKind::OddStability, BoundKind::TypeBEven] {
        let e = evaluate(kind, p)?;
        let tag = if e.in_hypothesis_range { "in range" } else { "outside range" };
        println!("{kind:?}(n=7, t=2) = {} ({tag}: {})", e.value, e.hypothesis);
    }
    let e = evaluate(BoundKind::Nontrivial, BoundParams { q: 2, n: 8, k: Some(3), s: Some(1), ..Default::default() })?;
    println!("nontrivial 1-intersecting 3-spaces in GF(2)^8: {}", e.value);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
