// Isomorphism search between p.c.o. groups and between MV-algebras.

use cyclord::correspondence::{group_iso, mv_iso, pco_iso, DEFAULT_ISO_CAP};
use cyclord::mv::MvAlgebra;
use cyclord::pco::{make_cyclic_group, make_product_pco};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z2 = make_cyclic_group(2)?;
    let z3 = make_cyclic_group(3)?;
    let z6 = make_cyclic_group(6)?;
    let p = make_product_pco(&z2, &z3);
    println!("Z2xZ3 ≅ Z6 as groups: {:?}", group_iso(&p, &z6, DEFAULT_ISO_CAP)?.map(|w| w.map));
    println!("as p.c.o. groups: {}", pco_iso(&p, &z6, DEFAULT_ISO_CAP)?.is_some());

    let a = MvAlgebra::gamma(&[1, 2])?;
    let b = MvAlgebra::gamma(&[2, 1])?;
    let w = mv_iso(&a, &b, DEFAULT_ISO_CAP)?.ok_or("not isomorphic")?;
    println!("Γ(1,2) ≅ Γ(2,1) via {:?}, verified {}", w.map, w.verify_mv(&a, &b));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
