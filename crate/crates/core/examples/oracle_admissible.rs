//! Largest families avoiding one forbidden configuration class.

use qdiam::families::ForbiddenClass;
use qdiam::oracle::{max_admissible_family, OracleConfig};

pub fn run_example() -> qdiam::Result<()> {
    let cfg = OracleConfig::default();
    for (n, d, class) in [(4, 2, ForbiddenClass::AEven), (4, 3, ForbiddenClass::AOdd), (4, 2, ForbiddenClass::BEven)] {
        let r = max_admissible_family(2, n, d, class, false, &cfg)?;
        println!(
            "n={n} d={d} {}: optimum {}, reference {} = {}",
            class.name(),
            r.optimum,
            r.reference_formula.as_deref().unwrap_or("-"),
            r.reference_bound.as_ref().map_or("-".into(), |v| v.to_string())
        );
        if let Some(w) = r.witnesses.first() {
            println!("  one witness has layers {:?}", w.layer_sizes());
        }
    }
    // d = 2n leaves nothing: every family is contained in the whole lattice
    let r = max_admissible_family(2, 3, 6, ForbiddenClass::AEven, false, &cfg)?;
    println!("n=3 d=6 A-even: feasible {}, {:?}", r.feasible, r.diagnostics);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
