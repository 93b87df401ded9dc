//! Decompose at a separating triangle and watch the characteristic behave
//! almost additively: Λ(G) >= ΣΛ(G_i) − 2(r−1), with equality for two K_4
//! factors.
//!
//! Run with: cargo run --example clique_sums

use lambda_lab::cycles::characteristic;
use lambda_lab::generators::{make_family, FamilySpec};
use lambda_lab::graph::VertexId;
use lambda_lab::graph6::write_graph6;
use lambda_lab::structure::{decompose_at_triangle, separating_triangles};

fn main() -> lambda_lab::Result<()> {
    for r in 2..=4 {
        let chain = make_family(&FamilySpec::CliqueSumChain(r))?;
        let seps = separating_triangles(&chain);
        println!(
            "chain of {r} K_4's ({}), separating triangles: {:?}",
            write_graph6(&chain),
            seps.iter().map(|t| t.map(|v| v.index())).collect::<Vec<_>>()
        );
        let t = [VertexId::new(0), VertexId::new(1), VertexId::new(2)];
        let dec = decompose_at_triangle(&chain, t)?;
        let lam = characteristic(&chain).lambda;
        let parts: Vec<i64> = dec
            .factors
            .iter()
            .map(|f| characteristic(&f.graph).lambda)
            .collect();
        let bound: i64 = parts.iter().sum::<i64>() - 2 * (r as i64 - 1);
        println!(
            "  lambda = {lam}, factor lambdas = {parts:?}, bound = {bound}, slack = {}",
            lam - bound
        );
    }
    Ok(())
}
