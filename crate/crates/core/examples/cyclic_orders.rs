// Cyclic orders on small groups and a partial one on ℤ/6.

use cyclord::pco::{abelian_groups_up_to, co_structures, make_cyclic_group, r_from_order};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z5 = make_cyclic_group(5)?;
    println!("Z/5: R(0,1,2) = {}, R(0,2,1) = {}", z5.rel(0, 1, 2), z5.rel(0, 2, 1));
    println!("R(0,1,3,4) = {}", z5.r_tuple(&[0, 1, 3, 4])?);

    for (name, g) in abelian_groups_up_to(8) {
        println!("{name}: {} cyclic orders", co_structures(&g).len());
    }

    let z6 = make_cyclic_group(6)?.group_only();
    let partial = r_from_order(&z6, &[(1, 2), (1, 5), (4, 2), (4, 5)])?;
    let report = partial.check_axioms();
    println!("Z/6 partial order: p.c.o. {}, c.o. {}", report.holds(), report.is_co());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
