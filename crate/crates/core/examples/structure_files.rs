// Parse generator specs and print canonical structure files.

use cyclord::io::{parse_structure, serialize_structure};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for doc in [
        r#"{"kind":"mv","gamma":[2]}"#,
        r#"{"kind":"co","cyclic":3}"#,
        r#"{"kind":"pco","wound":[2,3]}"#,
        r#"{"kind":"pco","product":[{"kind":"co","cyclic":2},{"kind":"co","cyclic":2}]}"#,
    ] {
        let s = parse_structure(doc.as_bytes())?;
        print!("{}", serialize_structure(&s));
    }
    let err = parse_structure(br#"{"kind":"mv","oplus":[[0]]}"#).unwrap_err();
    println!("{err}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
