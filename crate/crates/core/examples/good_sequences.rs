// Good sequences over Ł₃ and the Chang group they generate.

use cyclord::good_seq::{good_decompose, ChangElement, GoodSequence};
use cyclord::mv::MvAlgebra;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let l3 = MvAlgebra::lukasiewicz(3)?;
    let five = good_decompose(&l3, &[2, 3])?;
    println!("2 + 3 as a good sequence: {:?}", five.terms());
    let four = GoodSequence::new(&l3, vec![3, 1])?;
    println!("5 + 4 = {:?}", five.add(&four)?.terms());
    println!("5 - 4 = {:?}", five.subtract(&four)?.terms());
    println!("4 - 5 fails: {}", four.subtract(&five).is_err());

    let a = ChangElement::from_positive(five.clone());
    let b = ChangElement::from_positive(four).negate();
    println!("5 + (-4) = {:?}", a.add(&b)?);
    println!("min(5, -4) = {:?}", a.meet(&b)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
