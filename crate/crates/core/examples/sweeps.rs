//! Checking the closed-form inequalities over whole parameter grids.

use qdiam::oracle::{inequality_sweep, SweepKind, SweepSpec};

pub fn run_example() -> qdiam::Result<()> {
    for kind in [SweepKind::Lemma26, SweepKind::HPositive, SweepKind::NontrivialBelowEkr, SweepKind::TypebBelowTypea] {
        let r = inequality_sweep(&SweepSpec::standard(kind))?;
        println!("{}: {} tuples, {} failures", kind.name(), r.tuples, r.failures);
        if let Some(row) = r.failing().last() {
            println!("  last failure {:?}, margin {}", row.params, row.margin);
        }
    }
    let narrow = SweepSpec { qs: vec![2], ts: vec![2], n_max: Some(15), ..SweepSpec::standard(SweepKind::HPositive) };
    print!("{}", inequality_sweep(&narrow)?.to_csv());
    Ok(())
}

fn main() {
    run_example().unwrap();
}
