//! Compute the basic quantities for a handful of named graphs: the
//! nonseparating induced cycle count |C(G)|, the characteristic
//! Λ(G) = |C| − |E| + |V|, the Hadwiger number h(G), and the bound Λ(K_h)
//! it must dominate.
//!
//! Run with: cargo run --example analyze_basics

use lambda_lab::cycles::characteristic;
use lambda_lab::generators::{make_family, FamilySpec};
use lambda_lab::minors::hadwiger_number;
use lambda_lab::theorem::{check_main_inequality, lambda_of_complete};

fn main() -> lambda_lab::Result<()> {
    let families = [
        ("K_4", FamilySpec::Complete(4)),
        ("K_7", FamilySpec::Complete(7)),
        ("K_5 - e", FamilySpec::CompleteMinusEdge(5)),
        ("wheel W_6", FamilySpec::Wheel(6)),
        ("prism", FamilySpec::Prism),
        ("cube", FamilySpec::Cube),
        ("K_3,3", FamilySpec::CompleteBipartite(3, 3)),
        ("Petersen", FamilySpec::Petersen),
    ];
    println!(
        "{:<10} {:>3} {:>3} {:>5} {:>3} {:>7} {:>9} {:>7}",
        "graph", "n", "m", "|C|", "h", "lambda", "lambda(K_h)", "verdict"
    );
    for (name, spec) in families {
        let g = make_family(&spec)?;
        let c = characteristic(&g);
        let h = hadwiger_number(&g)?.h;
        let bound = lambda_of_complete(h)?.value;
        let check = check_main_inequality(&g)?;
        println!(
            "{:<10} {:>3} {:>3} {:>5} {:>3} {:>7} {:>9} {:>7}",
            name,
            c.vertex_count,
            c.edge_count,
            c.cycle_count,
            h,
            c.lambda,
            bound,
            if check.holds { "ok" } else { "VIOLATED" }
        );
    }
    Ok(())
}
