// ℤ/5 × ℤ/5 is partially cyclically ordered but outside the AC class.

use cyclord::pco::{canonical_mv, check_ac_class, make_cyclic_group, make_product_pco};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z5 = make_cyclic_group(5)?;
    let p = make_product_pco(&z5, &z5);
    println!("p.c.o. axioms: {}", p.check_axioms().holds());
    let report = check_ac_class(&p);
    for v in &report.verdicts {
        let at: Vec<String> = v.witness.iter().flatten().map(|&i| report.label(i)).collect();
        println!("{:<26} {}", v.name, if v.holds() { "ok".into() } else { format!("fails at {at:?}") });
    }
    println!("canonical_mv: {:?}", canonical_mv(&p).err());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
