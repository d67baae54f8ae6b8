//! Arithmetic in the small fields GF(q) backing every other module.

use qdiam::gfq::{field_arith, FieldOp, SUPPORTED_ORDERS};
use qdiam::Field;

pub fn run_example() -> qdiam::Result<()> {
    for q in SUPPORTED_ORDERS {
        let f = Field::new(q as u64)?;
        let spec = f.spec();
        println!("GF({q}) = GF({}^{}), reduction {:?}", spec.characteristic(), spec.degree(), spec.reduction_poly());
    }

    let f4 = Field::new(4)?;
    // 2 stands for the polynomial x, 3 for x + 1
    let x = 2;
    println!("in GF(4): x * x = {}, x + 1 = {}, 1/x = {}", f4.mul(x, x), f4.add(x, 1), f4.inv(x)?);
    println!("7 * 9 in GF(13) = {}", field_arith(Field::new(13)?, FieldOp::Mul, 7, 9)?);

    match Field::new(6) {
        Ok(_) => unreachable!("6 is not a prime power"),
        Err(e) => println!("GF(6): {e}"),
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
