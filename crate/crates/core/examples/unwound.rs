// The unwound ℤ × C of ℤ/3 and the Chang group of Ł₄.

use cyclord::correspondence::{rieger_check, ChainChang};
use cyclord::mv::MvAlgebra;
use cyclord::pco::{make_cyclic_group, Unwound};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z3 = make_cyclic_group(3)?;
    let uw = Unwound::new(&z3)?;
    let (a, b) = (uw.element(0, 2), uw.element(0, 2));
    println!("(0,2) + (0,2) = {:?}", uw.add(a, b));
    println!("-(0,1) = {:?}", uw.neg(uw.element(0, 1)));
    println!("Rieger check: {:?}", rieger_check(&z3)?);

    let l4 = MvAlgebra::lukasiewicz(4)?;
    let g = ChainChang::new(&l4)?;
    println!("Ł4 Chang: (0,2) + (0,3) = {:?}", g.add((0, 2), (0, 3))?);
    println!("(1,0) <= (0,3): {}", g.leq((1, 0), (0, 3))?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
