//! Operator relations of the left creation operators, checked exactly on a
//! truncated Fock space.

use soficlab::corpus;
use soficlab::dynamics::verify_fock_relations;

fn main() -> soficlab::Result<()> {
    for spec in [corpus::golden_mean(), corpus::sft_001(), corpus::first()] {
        let report = verify_fock_relations(&spec, 6)?;
        println!("{}", spec.name().unwrap_or("language"));
        print!("{}", report.render());
    }
    Ok(())
}
