//! Every 3-connected noncomplete graph has an edge whose contraction keeps
//! it 3-connected without dropping the Hadwiger number. Find it for some
//! named graphs and follow a full contraction chain down to a complete
//! graph.
//!
//! Run with: cargo run --example contractible_edges

use lambda_lab::connectivity::is_three_connected;
use lambda_lab::generators::{make_family, FamilySpec};
use lambda_lab::graph6::write_graph6;
use lambda_lab::minors::hadwiger_number;
use lambda_lab::structure::find_contractible_edge;

fn main() -> lambda_lab::Result<()> {
    for (name, spec) in [
        ("wheel W_5", FamilySpec::Wheel(5)),
        ("prism", FamilySpec::Prism),
        ("cube", FamilySpec::Cube),
        ("K_3,3", FamilySpec::CompleteBipartite(3, 3)),
    ] {
        let g = make_family(&spec)?;
        let (e, h) = find_contractible_edge(&g)?;
        println!("{name}: contract {e} (h stays {})", h.h);
    }

    println!("\nchain from the Petersen graph:");
    let mut cur = make_family(&FamilySpec::Petersen)?;
    while !cur.is_complete() {
        let (e, h) = find_contractible_edge(&cur)?;
        let (next, _) = cur.contract_edge(e)?;
        assert!(is_three_connected(&next));
        assert_eq!(hadwiger_number(&next)?.h, h.h);
        println!(
            "  {} --contract {e}--> {}",
            write_graph6(&cur),
            write_graph6(&next)
        );
        cur = next;
    }
    println!("  reached K_{}", cur.vertex_count());
    Ok(())
}
