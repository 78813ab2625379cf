// Running verification suites from code and reading the report.

use zollstock::verify::{run_suite, Options};

pub fn run_example() -> zollstock::Result<()> {
    let opts = Options { max_degree: Some(6), seed: 7, ..Options::default() };
    let report = run_suite("dim", &opts)?;
    print!("{report}");
    println!();
    let report = run_suite("identity", &Options { max_n: Some(4), ..Options::default() })?;
    println!("{}", report.to_json());
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> zollstock::Result<()> {
    run_example()
}
