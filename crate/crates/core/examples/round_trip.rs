// A ≅ canonical MV-algebra of C(A), for a chain and for a product.

use cyclord::correspondence::{chain_from_co, co_from_chain, round_trip, DEFAULT_ISO_CAP};
use cyclord::mv::MvAlgebra;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let l5 = MvAlgebra::lukasiewicz(5)?;
    let c = co_from_chain(&l5)?;
    println!("C(Ł5): |C| = {}, c.o. {}", c.size(), c.is_co());
    println!("back to a chain of size {}", chain_from_co(&c)?.size());
    let r = round_trip(&l5, DEFAULT_ISO_CAP)?;
    println!("Ł5 round trip: {}", r.holds());

    let g = MvAlgebra::gamma(&[2, 3])?;
    let r = round_trip(&g, DEFAULT_ISO_CAP)?;
    println!("Γ(ℤ²,(2,3)) via {:?}: {}", r.path, r.holds());

    let l2 = MvAlgebra::lukasiewicz(2)?;
    let r = round_trip(&l2, DEFAULT_ISO_CAP)?;
    println!("Ł2: canonical size {} vs {}, holds {}", r.canonical_size, r.size, r.holds());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
