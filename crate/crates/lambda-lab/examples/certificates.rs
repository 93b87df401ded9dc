//! Build a reduction certificate, print its JSON, verify it from scratch,
//! and show that tampering is caught.
//!
//! Run with: cargo run --example certificates

use lambda_lab::generators::{make_family, FamilySpec};
use lambda_lab::theorem::{certify, verify_certificate, Step};

fn main() -> lambda_lab::Result<()> {
    let petersen = make_family(&FamilySpec::Petersen)?;
    let cert = certify(&petersen)?;
    println!("{}", serde_json::to_string_pretty(&cert)?);

    let verification = verify_certificate(&petersen, &cert)?;
    println!("verified: {}", verification.valid);

    let mut tampered = cert.clone();
    if let Some(Step::Contract { lambda_after, .. }) = tampered.steps.first_mut() {
        *lambda_after -= 1;
    }
    let verification = verify_certificate(&petersen, &tampered)?;
    println!(
        "tampered ledger rejected: {} ({})",
        !verification.valid,
        verification.failure.unwrap_or_default()
    );
    Ok(())
}
