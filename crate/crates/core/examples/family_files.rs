//! Writing a family to the text format and reading it back.

use qdiam::families::{self, SubspaceFamily};
use qdiam::grassmann::Budget;
use qdiam::Subspace;

pub fn run_example() -> qdiam::Result<()> {
    let x: Subspace = "3:3:1:100".parse()?;
    let fam = families::double_ball(&x, &x.perp(), 1, &Budget::default())?;
    let text = fam.to_file_string();
    print!("{text}");

    let back = SubspaceFamily::parse_str(&text)?;
    assert_eq!(back, fam);

    let broken = text.replacen("3:3:1:", "3:3:1:2", 1);
    match SubspaceFamily::parse_str(&broken) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("corrupted file: {e}"),
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
