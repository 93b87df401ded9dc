//! Contract an edge and lift every nonseparating induced cycle of the
//! contracted graph back into the original, showing the injection that
//! makes the characteristic monotone under contraction.
//!
//! Run with: cargo run --example contraction_lift

use lambda_lab::cycles::nonseparating_induced_cycles;
use lambda_lab::generators::{make_family, FamilySpec};
use lambda_lab::structure::{cycle_lift, triangles_through_edge};

fn main() -> lambda_lab::Result<()> {
    let prism = make_family(&FamilySpec::Prism)?;
    let e = prism.edge(0, 3)?; // a vertical edge
    let (contracted, _) = prism.contract_edge(e)?;
    println!(
        "prism / {e} is a wheel on {} vertices with {} edges",
        contracted.vertex_count(),
        contracted.edge_count()
    );

    let lift = cycle_lift(&prism, e)?;
    println!("lift table over C(G/e), merged vertex {}:", lift.merged());
    for (from, to) in lift.iter() {
        println!("  {:?}  ->  {:?}", from.sorted_indices(), to.sorted_indices());
    }

    let host = nonseparating_induced_cycles(&prism).len();
    let image = lift.len();
    let te = triangles_through_edge(&prism, e)?.len();
    println!("|C(G)| = {host}, |image| = {image}, triangles through {e}: {te}");
    println!("check |C(G)| >= |C(G/e)| + |T_e|: {host} >= {} -> {}", image + te, host >= image + te);
    Ok(())
}
