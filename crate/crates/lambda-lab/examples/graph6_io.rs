//! Read and write the graph6 line format, including header stripping and
//! the precise parse errors.
//!
//! Run with: cargo run --example graph6_io

use lambda_lab::graph::Graph;
use lambda_lab::graph6::{parse_graph6, parse_graph6_lines, write_graph6};

fn main() -> lambda_lab::Result<()> {
    let k4 = Graph::complete(4)?;
    println!("K_4 encodes as {:?}", write_graph6(&k4));

    let round = parse_graph6(&write_graph6(&k4))?;
    println!("round-trip equal: {}", round == k4);

    let text = ">>graph6<<C~\nD~{\n\nA_\n";
    let graphs = parse_graph6_lines(text).expect("all lines parse");
    println!("parsed {} graphs from a headered multi-line file", graphs.len());
    for g in &graphs {
        println!("  n = {}, m = {:>2}  ({})", g.vertex_count(), g.edge_count(), write_graph6(g));
    }

    for bad in ["", "D~", "C!", "B~"] {
        println!("parse {bad:?}: {}", parse_graph6(bad).unwrap_err());
    }
    Ok(())
}
