//! Exhaustive search for the largest families of bounded diameter, with every
//! maximum family listed and matched against the known equality cases.

use qdiam::oracle::{max_diameter_family, verify_characterization, OracleConfig};

pub fn run_example() -> qdiam::Result<()> {
    let cfg = OracleConfig::default();
    for (q, n, d) in [(2, 3, 2), (2, 4, 2), (2, 4, 3), (3, 3, 2), (2, 5, 3)] {
        let r = max_diameter_family(q, n, d, true, &cfg)?;
        let c = verify_characterization(&r)?;
        println!(
            "q={q} n={n} d={d}: optimum {} (formula {}), {} maximum families, case {:?}, matches {}, {} nodes",
            r.optimum,
            r.reference_bound.as_ref().map_or("-".into(), |v| v.to_string()),
            r.witness_count,
            c.case,
            c.matches,
            r.nodes_explored
        );
    }
    let r = max_diameter_family(2, 4, 2, false, &cfg)?;
    println!("{}", r.to_json());
    Ok(())
}

fn main() {
    run_example().unwrap();
}
