//! Exact Hadwiger numbers with branch-set witnesses, plus an exhaustive
//! absence check: the Petersen graph has a K_5 model but no K_6 model.
//!
//! Run with: cargo run --example hadwiger_witness

use lambda_lab::generators::{make_family, FamilySpec};
use lambda_lab::minors::{hadwiger_number, has_clique_minor, validate_minor_model};

fn main() -> lambda_lab::Result<()> {
    for (name, spec) in [
        ("Petersen", FamilySpec::Petersen),
        ("K_3,3", FamilySpec::CompleteBipartite(3, 3)),
        ("cube", FamilySpec::Cube),
        ("wheel W_7", FamilySpec::Wheel(7)),
    ] {
        let g = make_family(&spec)?;
        let res = hadwiger_number(&g)?;
        println!("{name}: h = {}", res.h);
        for (i, set) in res.witness.branch_sets().iter().enumerate() {
            println!("  branch set {i}: {:?}", set.iter().map(|v| v.index()).collect::<Vec<_>>());
        }
        println!("  witness valid: {}", validate_minor_model(&g, &res.witness));
        let beyond = has_clique_minor(&g, res.h + 1)?;
        println!("  K_{} model exists: {}", res.h + 1, beyond.is_some());
    }
    Ok(())
}
