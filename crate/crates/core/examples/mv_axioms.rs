// Build Γ(ℤ², (2,3)), check the MV axioms, classify it and break it.

use cyclord::mv::{DerivedOp, MvAlgebra};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = MvAlgebra::gamma(&[2, 3])?;
    println!("|A| = {}, axioms hold: {}", a.size(), a.check_axioms().holds());
    println!("shape: {:?}", a.shape_classify()?);
    println!("predicates: {:?}", a.algebra_predicates());
    println!("(1,2) meet (2,1) = {:?}", a.derived_op(DerivedOp::Meet, 6, 9)?);
    println!("chain factors at units {:?}", a.decompose_product(4)?);

    let mut oplus = a.oplus_rows();
    oplus[1][2] = 0;
    let broken = MvAlgebra::new(oplus, a.neg_table().to_vec(), a.zero())?;
    let report = broken.check_axioms();
    let first = report.first_failure().ok_or("mutation went unnoticed")?;
    println!("mutated table fails {} at {:?}", first.name, first.witness);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
