// First-order invariants: D-formulas, Zakon invariants, regularity.

use cyclord::model_check::{
    co_predicates, d_law, d_witness, eq_invariants, pseudo_classify, zakon_invariant, Bounds,
    Subject,
};
use cyclord::mv::MvAlgebra;
use cyclord::pco::{make_cyclic_group, make_product_pco};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z8 = make_cyclic_group(8)?;
    println!("Z/8 predicates: {:?}", co_predicates(&z8)?);
    println!("Z/8 D(4,0) witness: {:?} (law: {})", d_witness(&z8, 4, 0)?, d_law(8, 4, 0));
    println!("Z/6 D(4,2) witness: {:?}", d_witness(&make_cyclic_group(6)?, 4, 2)?);
    println!("[2](Z/6) = {}", zakon_invariant(&make_cyclic_group(6)?, 2)?);

    let z2 = make_cyclic_group(2)?;
    let v4 = make_product_pco(&z2, &z2);
    let a = eq_invariants(Subject::Pco(&make_cyclic_group(4)?), Bounds::default())?;
    let b = eq_invariants(Subject::Pco(&v4), Bounds::default())?;
    println!("Z/4 vs Z2xZ2 zakon: {:?} vs {:?}", a.zakon[0], b.zakon[0]);

    let l2l3 = MvAlgebra::product(&MvAlgebra::lukasiewicz(2)?, &MvAlgebra::lukasiewicz(3)?);
    let r = pseudo_classify(&l2l3, 4)?;
    println!("Ł2×Ł3: chain criteria {}, product criteria {}", r.chain.satisfied, r.product.satisfied);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
