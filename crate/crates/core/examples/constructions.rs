//! The standard extremal families: lower and upper balls, double balls,
//! stars and the Hilton-Milner type families.

use qdiam::families::{self, canonical_family, Canonical};
use qdiam::grassmann::Budget;
use qdiam::{Field, Subspace};

pub fn run_example() -> qdiam::Result<()> {
    let f = Field::new(2)?;
    let b = Budget::default();
    let n = 7;
    let x: Subspace = "2:7:1:1000000".parse()?;
    let y = Subspace::from_generators(f, n, &[[0u8, 1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0, 0]])?;

    let named = [
        ("L_2", canonical_family(f, n, 2, &Canonical::Lower, &b)?),
        ("U_2", canonical_family(f, n, 2, &Canonical::Upper, &b)?),
        ("D_2(X)", families::canonical_double_ball(&x, 2, &b)?),
        ("B(X,2)", families::ball(&x, 2, &b)?),
        ("star of X in layer 3", families::star(3, &x, &b)?),
        ("HM(7,3,X,Y)", families::hm_family(&x, &y, &b)?),
        ("HM*(7,3,Y)", families::hm_star3(&y, &b)?),
        ("K(7,3,X,Y)", families::k_family(&x, &y, &b)?),
        ("K*(7,3,Y)", families::k_star3(&y, &b)?),
    ];
    for (name, fam) in &named {
        println!("{name:>22}: {:>5} members, layers {:?}", fam.len(), fam.layer_sizes());
    }
    let d = families::diameter(&named[2].1)?;
    println!("diameter of D_2(X) = {d}");
    Ok(())
}

fn main() {
    run_example().unwrap();
}
