//! Over-dominating colourings and the cycle-count corollary they imply:
//! with q = ⌊2k/3⌋, a 3-connected graph with an over-dominating
//! k-colouring has |C(G)| >= |E| − |V| + q(q−1)(q−2)/6 + 1.
//!
//! Run with: cargo run --example over_dominating

use lambda_lab::cycles::characteristic;
use lambda_lab::generators::{make_family, FamilySpec};
use lambda_lab::graph::{Graph, VertexId};
use lambda_lab::theorem::{check_corollary, is_over_dominating, Colouring};

fn main() -> lambda_lab::Result<()> {
    let k6 = Graph::complete(6)?;
    let singletons = Colouring::singletons(&k6);
    let dom = is_over_dominating(&k6, &singletons)?;
    println!("K_6 with singleton classes over-dominating: {}", dom.over_dominating);
    let r = check_corollary(&k6, &singletons)?;
    println!(
        "  k = {}, floor(2k/3) = {}, bound {} <= |C| = {} (holds: {}), h = {} >= {}",
        r.k,
        r.floor_two_thirds,
        r.bound,
        characteristic(&k6).cycle_count,
        r.cycle_count_ok,
        r.h,
        1 + r.floor_two_thirds
    );

    let k33 = make_family(&FamilySpec::CompleteBipartite(3, 3))?;
    let sides = Colouring::new(vec![
        (0..3).map(VertexId::new).collect(),
        (3..6).map(VertexId::new).collect(),
    ])?;
    let dom = is_over_dominating(&k33, &sides)?;
    println!("K_3,3 with its two sides over-dominating: {}", dom.over_dominating);

    // a proper colouring of the wheel W_6 that fails to dominate
    let w6 = make_family(&FamilySpec::Wheel(6))?;
    let f = Colouring::new(vec![
        vec![VertexId::new(0)],
        vec![VertexId::new(1), VertexId::new(3)],
        vec![VertexId::new(2), VertexId::new(4)],
        vec![VertexId::new(5)],
    ])?;
    let dom = is_over_dominating(&w6, &f)?;
    println!("W_6 rim colouring over-dominating: {}", dom.over_dominating);
    for v in &dom.violations {
        println!("  violation: {v:?}");
    }
    Ok(())
}
