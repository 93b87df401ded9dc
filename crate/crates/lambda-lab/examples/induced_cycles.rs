//! Enumerate the induced cycles of the cube, split them into separating and
//! nonseparating, and check that C(G) spans the whole cycle space over
//! GF(2).
//!
//! Run with: cargo run --example induced_cycles

use lambda_lab::cycles::{cycle_space_rank_check, induced_cycles, is_nonseparating};
use lambda_lab::generators::{make_family, FamilySpec};

fn main() -> lambda_lab::Result<()> {
    let cube = make_family(&FamilySpec::Cube)?;
    println!("cube: {} vertices, {} edges", cube.vertex_count(), cube.edge_count());

    let all = induced_cycles(&cube);
    println!("{} induced cycles in total:", all.len());
    for c in all.iter() {
        let keep = is_nonseparating(&cube, c)?;
        println!(
            "  {:?}  len {}  {}",
            c.sorted_indices(),
            c.len(),
            if keep { "nonseparating (a face)" } else { "separating" }
        );
    }

    let r = cycle_space_rank_check(&cube)?;
    println!(
        "cycle space: rank {} of expected {} -> spans: {}",
        r.rank, r.expected, r.spans
    );
    Ok(())
}
