//! Testing a family against the four forbidden configuration classes.

use qdiam::families::{self, Admissibility, ForbiddenClass};
use qdiam::grassmann::Budget;
use qdiam::Subspace;

pub fn run_example() -> qdiam::Result<()> {
    let b = Budget::default();
    let x: Subspace = "2:7:1:1000000".parse()?;
    let y: Subspace = "2:7:3:0100000,0010000,0001000".parse()?;
    let ball = families::ball(&x, 2, &b)?;
    let k = families::k_family(&x, &y, &b)?;

    for (name, fam, classes) in [
        ("B(X,2)", &ball, [ForbiddenClass::AEven, ForbiddenClass::BEven]),
        ("K(7,3,X,Y)", &k, [ForbiddenClass::AOdd, ForbiddenClass::BOdd]),
    ] {
        for class in classes {
            match families::is_admissible(fam, class, 2, &b)? {
                Admissibility::Admissible => println!("{name} is {}-admissible", class.name()),
                Admissibility::DiameterExceeds { diameter, limit } => {
                    println!("{name}: diameter {diameter} above {limit}")
                }
                Admissibility::Contained { witness } => println!("{name} sits inside {witness}"),
            }
        }
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
