//! Listing every k-dimensional subspace, sequentially or in parallel.

use qdiam::grassmann::{enumerate_layer, enumerate_layer_par, lattice_size, Budget, LatticeIndex};
use qdiam::qcount::gauss_binom;
use qdiam::Field;

pub fn run_example() -> qdiam::Result<()> {
    let f = Field::new(2)?;
    let budget = Budget::default();
    for s in enumerate_layer(f, 4, 2, &budget)?.take(5) {
        println!("{s}");
    }
    let planes = enumerate_layer_par(f, 6, 3, 4, &budget)?;
    println!("{} 3-spaces of GF(2)^6, formula {}", planes.len(), gauss_binom(6, 3, 2));

    let lat = LatticeIndex::build(Field::new(3)?, 3, &budget)?.with_distance_table(&budget)?;
    println!("GF(3)^3 has {} subspaces ({})", lat.len(), lattice_size(3, 3));
    let (i, j) = (lat.layer_range(1).start, lat.layer_range(2).end - 1);
    println!("d({}, {}) = {}", lat.get(i), lat.get(j), lat.distance(i, j));

    let tight = Budget::items(100);
    if let Err(e) = LatticeIndex::build(f, 7, &tight) {
        println!("GF(2)^7 with a 100 item budget: {e}");
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
