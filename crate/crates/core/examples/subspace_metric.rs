//! Subspaces in reduced row echelon form and the distance
//! `d(A, B) = dim A + dim B - 2 dim(A ∩ B)`.

use qdiam::{Field, Subspace};

pub fn run_example() -> qdiam::Result<()> {
    let f = Field::new(3)?;
    let a = Subspace::from_generators(f, 4, &[[1u8, 2, 0, 1], [2, 1, 1, 0]])?;
    let b = Subspace::from_generators(f, 4, &[[0u8, 0, 1, 1]])?;
    println!("A = {a} (dim {}, pivots {:?})", a.dim(), a.pivots());
    println!("B = {b}");
    println!("A + B = {}, A ∩ B = {}", a.sum(&b)?, a.intersect(&b)?);
    println!("d(A, B) = {}", a.distance(&b));

    // perp under the standard dot product preserves distances
    let (ap, bp) = (a.perp(), b.perp());
    println!("A^perp = {ap}, B^perp = {bp}, d = {}", ap.distance(&bp));
    assert_eq!(ap.distance(&bp), a.distance(&b));

    let parsed: Subspace = "3:4:2:1201,0011".parse()?;
    println!("parsed {parsed}, contains (1,2,1,2)? {}", parsed.contains_vector(&[1, 2, 1, 2])?);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
