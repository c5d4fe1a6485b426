// The wound-round ℤ²/ℤ(2,3) and its canonical MV-algebra.

use cyclord::correspondence::{mv_iso, DEFAULT_ISO_CAP};
use cyclord::mv::MvAlgebra;
use cyclord::pco::{canonical_mv, check_ac_class, LatticeQuotientPco, Pco};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let w = LatticeQuotientPco::wound_round(&[2, 3])?;
    println!("normal form of (5,7): {:?}", w.normalize(&[5, 7])?);
    println!("R((0,0),(1,0),(1,1)) = {}", w.rel(&vec![0, 0], &vec![1, 0], &vec![1, 1]));
    println!("|A(C)| = {}", w.non_isolated().len());
    println!("AC class: {}", check_ac_class(&w).holds());

    let (m, labels) = canonical_mv(&w)?;
    let g = MvAlgebra::gamma(&[2, 3])?;
    let iso = mv_iso(&m, &g, DEFAULT_ISO_CAP)?.ok_or("not isomorphic")?;
    println!("canonical MV-algebra has {} elements, ≅ Γ(ℤ²,(2,3)) via {:?}", m.size(), iso.map);
    println!("labels: {:?}", &labels[..4]);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
