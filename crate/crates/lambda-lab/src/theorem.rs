//! The main-inequality checker `Λ(K_h(G)) ≤ Λ(G)`, its replay as a
//! machine-checkable certificate, and the over-dominating-colouring
//! corollary checkers.
//!
//! A certificate reduces a 3-connected graph to a complete graph of its own
//! Hadwiger order: while a separating triangle exists the graph decomposes
//! into clique-sum factors and the chain follows a factor of equal Hadwiger
//! number; otherwise a contractible edge is contracted. Every step carries
//! the numeric ledger for its local inequality, and the verifier recomputes
//! all of it from scratch.

use serde::{Deserialize, Serialize};

use crate::connectivity::is_three_connected;
use crate::cycles::{characteristic, is_nonseparating, Cycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::graph6::{parse_graph6, write_graph6};
use crate::minors::hadwiger_number;
use crate::structure::{
    cycle_lift, decompose_at_triangle, find_contractible_edge, separating_triangles,
    triangles_through_edge,
};

/// `Λ(K_h) = C(h,3) − C(h,2) + h` in closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompleteCharacteristic {
    pub h: usize,
    pub value: i64,
}

fn binom3(h: i64) -> i64 {
    h * (h - 1) * (h - 2) / 6
}

fn binom2(h: i64) -> i64 {
    h * (h - 1) / 2
}

/// The characteristic of the complete graph on `h` vertices, exactly.
pub fn lambda_of_complete(h: usize) -> Result<CompleteCharacteristic> {
    if h == 0 {
        return Err(Error::InvalidParameter {
            reason: "the bound is defined for h >= 1".into(),
        });
    }
    let hh = h as i64;
    Ok(CompleteCharacteristic {
        h,
        value: binom3(hh) - binom2(hh) + hh,
    })
}

/// Outcome of checking `Λ(K_h(G)) ≤ Λ(G)` on one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InequalityCheck {
    pub holds: bool,
    /// `Λ(K_h)`, the bound the characteristic must meet.
    pub bound: i64,
    pub lambda: i64,
    pub h: usize,
}

pub fn check_main_inequality(g: &Graph) -> Result<InequalityCheck> {
    if !is_three_connected(g) {
        return Err(Error::NotThreeConnected);
    }
    let h = hadwiger_number(g)?.h;
    let bound = lambda_of_complete(h)?.value;
    let lambda = characteristic(g).lambda;
    Ok(InequalityCheck {
        holds: bound <= lambda,
        bound,
        lambda,
        h,
    })
}

/// One step of a certificate chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Step {
    /// Split at a separating triangle and follow a factor with the same
    /// Hadwiger number.
    Decompose {
        triangle: [usize; 3],
        factor_lambdas: Vec<i64>,
        factor_hadwigers: Vec<usize>,
        chosen_factor: usize,
        lambda_before: i64,
        lambda_after: i64,
    },
    /// Contract an edge that keeps 3-connectivity and the Hadwiger number.
    Contract {
        edge: [usize; 2],
        lambda_before: i64,
        lambda_after: i64,
        cycles_before: usize,
        lifted_cycles: usize,
        triangles_on_edge: usize,
    },
    /// The chain ends at a complete graph of this order.
    Base { order: usize },
}

/// A replayable reduction of a 3-connected graph to `K_{h(G)}` whose ledger
/// proves `Λ` never increased along the way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph: String,
    pub steps: Vec<Step>,
    pub h: usize,
    pub lambda: i64,
    pub lhs: i64,
}

fn contract_ledger_gap(
    lambda_before: i64,
    lambda_after: i64,
    cycles_before: usize,
    lifted: usize,
    triangles_on_edge: usize,
) -> i64 {
    // Λ(G) − Λ(G/e) must equal (|C(G)| − |im lift|) − (|T_e| + 1) + 1
    let rhs = (cycles_before as i64 - lifted as i64) - (triangles_on_edge as i64 + 1) + 1;
    lambda_before - lambda_after - rhs
}

/// Builds the certificate for `g`, checking every local ledger as it goes.
pub fn certify(g: &Graph) -> Result<Certificate> {
    if !is_three_connected(g) {
        return Err(Error::NotThreeConnected);
    }
    let h = hadwiger_number(g)?.h;
    let lambda = characteristic(g).lambda;
    let mut steps = Vec::new();
    let mut cur = g.clone();
    loop {
        if cur.is_complete() {
            steps.push(Step::Base {
                order: cur.vertex_count(),
            });
            break;
        }
        let seps = separating_triangles(&cur);
        if let Some(&t) = seps.first() {
            let dec = decompose_at_triangle(&cur, t)?;
            let h_cur = hadwiger_number(&cur)?.h;
            let lambda_before = characteristic(&cur).lambda;
            let factor_lambdas: Vec<i64> = dec
                .factors
                .iter()
                .map(|f| characteristic(&f.graph).lambda)
                .collect();
            let factor_hadwigers = dec
                .factors
                .iter()
                .map(|f| hadwiger_number(&f.graph).map(|r| r.h))
                .collect::<Result<Vec<_>>>()?;
            let chosen = factor_hadwigers
                .iter()
                .position(|&fh| fh == h_cur)
                .ok_or_else(|| Error::TheoremViolation {
                    reason: format!(
                        "no clique-sum factor of {} attains h = {h_cur}",
                        write_graph6(&cur)
                    ),
                })?;
            let lambda_after = factor_lambdas[chosen];
            let r = factor_lambdas.len() as i64;
            let sum: i64 = factor_lambdas.iter().sum();
            if lambda_before < sum - 2 * (r - 1) || lambda_before < lambda_after {
                return Err(Error::TheoremViolation {
                    reason: format!(
                        "decomposition ledger fails on {}: Λ = {lambda_before}, factor Λs {factor_lambdas:?}",
                        write_graph6(&cur)
                    ),
                });
            }
            steps.push(Step::Decompose {
                triangle: t.map(|v| v.index()),
                factor_lambdas,
                factor_hadwigers,
                chosen_factor: chosen,
                lambda_before,
                lambda_after,
            });
            cur = dec.factors[chosen].graph.clone();
        } else {
            let (e, _) = find_contractible_edge(&cur)?;
            let lift = cycle_lift(&cur, e)?;
            let te = triangles_through_edge(&cur, e)?.len();
            let before = characteristic(&cur);
            let (contracted, _) = cur.contract_edge(e)?;
            let after = characteristic(&contracted);
            let gap = contract_ledger_gap(
                before.lambda,
                after.lambda,
                before.cycle_count,
                lift.len(),
                te,
            );
            if gap != 0 || before.lambda < after.lambda {
                return Err(Error::TheoremViolation {
                    reason: format!(
                        "contraction ledger fails on {} at edge {e}",
                        write_graph6(&cur)
                    ),
                });
            }
            steps.push(Step::Contract {
                edge: [e.a().index(), e.b().index()],
                lambda_before: before.lambda,
                lambda_after: after.lambda,
                cycles_before: before.cycle_count,
                lifted_cycles: lift.len(),
                triangles_on_edge: te,
            });
            cur = contracted;
        }
    }
    Ok(Certificate {
        graph: write_graph6(g),
        steps,
        h,
        lambda,
        lhs: lambda_of_complete(h)?.value,
    })
}

/// Result of replaying a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub valid: bool,
    /// Human-readable reason for the first failure, when invalid.
    pub failure: Option<String>,
}

impl Verification {
    fn ok() -> Self {
        Verification {
            valid: true,
            failure: None,
        }
    }

    fn fail(reason: String) -> Self {
        Verification {
            valid: false,
            failure: Some(reason),
        }
    }
}

/// Replays `cert` against `g`, recomputing every graph and every ledger
/// quantity from scratch. Returns `Ok` with the verdict; structurally
/// unusable certificates (wrong graph, missing base, out-of-range indices)
/// are [`Error::MalformedCertificate`].
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Result<Verification> {
    let claimed = parse_graph6(&cert.graph).map_err(|e| Error::MalformedCertificate {
        reason: format!("graph field does not parse: {e}"),
    })?;
    if claimed != *g {
        return Err(Error::MalformedCertificate {
            reason: "certificate is for a different graph".into(),
        });
    }
    match cert.steps.last() {
        Some(Step::Base { .. }) => {}
        _ => {
            return Err(Error::MalformedCertificate {
                reason: "certificate must end with a base step".into(),
            })
        }
    }
    if !is_three_connected(g) {
        return Ok(Verification::fail("graph is not 3-connected".into()));
    }

    let h = hadwiger_number(g)?.h;
    if h != cert.h {
        return Ok(Verification::fail(format!(
            "recorded h = {} but recomputed h = {h}",
            cert.h
        )));
    }
    let lambda = characteristic(g).lambda;
    if lambda != cert.lambda {
        return Ok(Verification::fail(format!(
            "recorded lambda = {} but recomputed {lambda}",
            cert.lambda
        )));
    }
    let bound = lambda_of_complete(h)?.value;
    if bound != cert.lhs {
        return Ok(Verification::fail(format!(
            "recorded bound = {} but recomputed {bound}",
            cert.lhs
        )));
    }

    let mut cur = g.clone();
    let mut prev_after: Option<i64> = None;
    for (idx, step) in cert.steps.iter().enumerate() {
        let is_last = idx + 1 == cert.steps.len();
        match step {
            Step::Base { order } => {
                if !is_last {
                    return Err(Error::MalformedCertificate {
                        reason: format!("base step at position {idx} is not final"),
                    });
                }
                if !cur.is_complete() || cur.vertex_count() != *order {
                    return Ok(Verification::fail(format!(
                        "chain ends at {} but base records order {order}",
                        write_graph6(&cur)
                    )));
                }
                if *order != cert.h {
                    return Ok(Verification::fail(format!(
                        "base order {order} differs from recorded h = {}",
                        cert.h
                    )));
                }
            }
            Step::Decompose {
                triangle,
                factor_lambdas,
                factor_hadwigers,
                chosen_factor,
                lambda_before,
                lambda_after,
            } => {
                let n = cur.vertex_count();
                if triangle.iter().any(|&v| v >= n) {
                    return Err(Error::MalformedCertificate {
                        reason: format!("triangle {triangle:?} out of range at step {idx}"),
                    });
                }
                let t = triangle.map(VertexId::new);
                let dec = match decompose_at_triangle(&cur, t) {
                    Ok(d) => d,
                    Err(e) => return Ok(Verification::fail(format!("step {idx}: {e}"))),
                };
                if *chosen_factor >= dec.factors.len() {
                    return Err(Error::MalformedCertificate {
                        reason: format!("chosen factor {chosen_factor} out of range at step {idx}"),
                    });
                }
                let real_lambdas: Vec<i64> = dec
                    .factors
                    .iter()
                    .map(|f| characteristic(&f.graph).lambda)
                    .collect();
                let real_h = dec
                    .factors
                    .iter()
                    .map(|f| hadwiger_number(&f.graph).map(|r| r.h))
                    .collect::<Result<Vec<_>>>()?;
                let before = characteristic(&cur).lambda;
                let h_cur = hadwiger_number(&cur)?.h;
                if real_lambdas != *factor_lambdas || real_h != *factor_hadwigers {
                    return Ok(Verification::fail(format!(
                        "step {idx}: recorded factor ledger differs from recomputation"
                    )));
                }
                if before != *lambda_before || real_lambdas[*chosen_factor] != *lambda_after {
                    return Ok(Verification::fail(format!(
                        "step {idx}: recorded lambdas differ from recomputation"
                    )));
                }
                if real_h[*chosen_factor] != h_cur {
                    return Ok(Verification::fail(format!(
                        "step {idx}: chosen factor has h = {} but the graph has h = {h_cur}",
                        real_h[*chosen_factor]
                    )));
                }
                if dec.factors.iter().any(|f| !is_three_connected(&f.graph)) {
                    return Ok(Verification::fail(format!(
                        "step {idx}: a clique-sum factor is not 3-connected"
                    )));
                }
                let r = real_lambdas.len() as i64;
                let sum: i64 = real_lambdas.iter().sum();
                if before < sum - 2 * (r - 1) || before < *lambda_after {
                    return Ok(Verification::fail(format!(
                        "step {idx}: decomposition inequality fails"
                    )));
                }
                if let Some(prev) = prev_after {
                    if prev != before {
                        return Ok(Verification::fail(format!(
                            "step {idx}: chain lambda mismatch"
                        )));
                    }
                }
                prev_after = Some(*lambda_after);
                cur = dec.factors[*chosen_factor].graph.clone();
            }
            Step::Contract {
                edge,
                lambda_before,
                lambda_after,
                cycles_before,
                lifted_cycles,
                triangles_on_edge,
            } => {
                let n = cur.vertex_count();
                if edge.iter().any(|&v| v >= n) || edge[0] == edge[1] {
                    return Err(Error::MalformedCertificate {
                        reason: format!("edge {edge:?} out of range at step {idx}"),
                    });
                }
                let e = match cur.edge(edge[0], edge[1]) {
                    Ok(e) => e,
                    Err(e) => return Ok(Verification::fail(format!("step {idx}: {e}"))),
                };
                let before = characteristic(&cur);
                let te = triangles_through_edge(&cur, e)?;
                // each triangle through e must be nonseparating, hence in C(G)
                for t in &te {
                    let tc = Cycle::from_sequence(t).expect("triangle");
                    if !is_nonseparating(&cur, &tc)? {
                        return Ok(Verification::fail(format!(
                            "step {idx}: triangle {t:?} through the edge separates the graph"
                        )));
                    }
                }
                let lift = match cycle_lift(&cur, e) {
                    Ok(l) => l,
                    Err(err) => return Ok(Verification::fail(format!("step {idx}: {err}"))),
                };
                let (contracted, _) = cur.contract_edge(e)?;
                if !is_three_connected(&contracted) {
                    return Ok(Verification::fail(format!(
                        "step {idx}: contraction loses 3-connectivity"
                    )));
                }
                if hadwiger_number(&contracted)?.h != hadwiger_number(&cur)?.h {
                    return Ok(Verification::fail(format!(
                        "step {idx}: contraction changes the Hadwiger number"
                    )));
                }
                let after = characteristic(&contracted);
                if before.lambda != *lambda_before
                    || after.lambda != *lambda_after
                    || before.cycle_count != *cycles_before
                    || lift.len() != *lifted_cycles
                    || te.len() != *triangles_on_edge
                {
                    return Ok(Verification::fail(format!(
                        "step {idx}: recorded contraction ledger differs from recomputation"
                    )));
                }
                if contract_ledger_gap(
                    before.lambda,
                    after.lambda,
                    before.cycle_count,
                    lift.len(),
                    te.len(),
                ) != 0
                    || before.lambda < after.lambda
                {
                    return Ok(Verification::fail(format!(
                        "step {idx}: contraction ledger identity fails"
                    )));
                }
                if let Some(prev) = prev_after {
                    if prev != before.lambda {
                        return Ok(Verification::fail(format!(
                            "step {idx}: chain lambda mismatch"
                        )));
                    }
                }
                prev_after = Some(after.lambda);
                cur = contracted;
            }
        }
    }
    Ok(Verification::ok())
}

/// A partition of the vertices into nonempty colour classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    classes: Vec<Vec<VertexId>>,
}

impl Colouring {
    pub fn new(classes: Vec<Vec<VertexId>>) -> Result<Self> {
        if classes.iter().any(|c| c.is_empty()) {
            return Err(Error::ImproperColouring {
                reason: "empty colour class".into(),
            });
        }
        let mut seen = std::collections::BTreeSet::new();
        for c in &classes {
            for v in c {
                if !seen.insert(*v) {
                    return Err(Error::ImproperColouring {
                        reason: format!("vertex {v} appears in two classes"),
                    });
                }
            }
        }
        Ok(Colouring { classes })
    }

    /// One singleton class per vertex.
    pub fn singletons(g: &Graph) -> Self {
        Colouring {
            classes: g.vertices().map(|v| vec![v]).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    /// Checks that the classes partition `V(g)` with no edge inside a class.
    fn validate_for(&self, g: &Graph) -> Result<()> {
        let covered: usize = self.classes.iter().map(|c| c.len()).sum();
        if covered != g.vertex_count() {
            return Err(Error::ImproperColouring {
                reason: format!(
                    "classes cover {covered} vertices, graph has {}",
                    g.vertex_count()
                ),
            });
        }
        for c in &self.classes {
            if c.iter().any(|v| v.index() >= g.vertex_count()) {
                return Err(Error::ImproperColouring {
                    reason: "class contains an unknown vertex".into(),
                });
            }
            for (i, &u) in c.iter().enumerate() {
                for &w in &c[i + 1..] {
                    if g.has_edge(u, w) {
                        return Err(Error::ImproperColouring {
                            reason: format!("edge {u}-{w} inside a class"),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// A specific failure of the over-domination conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominationViolation {
    /// The vertex has no neighbour in the class.
    MissingNeighbour { vertex: VertexId, class: usize },
    /// Neither class has a vertex adjacent to all of the other.
    UncoveredPair { class_a: usize, class_b: usize },
}

#[derive(Clone, Debug)]
pub struct DominationCheck {
    pub over_dominating: bool,
    pub violations: Vec<DominationViolation>,
}

/// Checks that the colouring is dominating (every vertex has a neighbour in
/// every other class) and that every class pair has a one-sided total
/// dominator.
pub fn is_over_dominating(g: &Graph, f: &Colouring) -> Result<DominationCheck> {
    f.validate_for(g)?;
    let masks: Vec<u64> = f
        .classes
        .iter()
        .map(|c| c.iter().fold(0u64, |m, v| m | 1 << v.index()))
        .collect();
    let mut violations = Vec::new();
    for (ci, &mask) in masks.iter().enumerate() {
        for v in g.vertices() {
            let row = g.adj_bits(v.index());
            if mask >> v.index() & 1 == 0 && row & mask == 0 {
                violations.push(DominationViolation::MissingNeighbour { vertex: v, class: ci });
            }
        }
    }
    for a in 0..masks.len() {
        for b in a + 1..masks.len() {
            let a_covers = crate::graph::BitIter(masks[a])
                .any(|v| g.adj_bits(v) & masks[b] == masks[b]);
            let b_covers = crate::graph::BitIter(masks[b])
                .any(|v| g.adj_bits(v) & masks[a] == masks[a]);
            if !a_covers && !b_covers {
                violations.push(DominationViolation::UncoveredPair { class_a: a, class_b: b });
            }
        }
    }
    Ok(DominationCheck {
        over_dominating: violations.is_empty(),
        violations,
    })
}

/// Outcome of the colouring corollary on one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorollaryCheck {
    pub holds: bool,
    pub hadwiger_ok: bool,
    pub cycle_count_ok: bool,
    /// The evaluated lower bound on `|C(G)|`; exact, computed scaled by 6.
    pub bound: i64,
    pub h: usize,
    pub k: usize,
    pub floor_two_thirds: i64,
}

/// For a 3-connected graph with an over-dominating `k`-colouring, checks
/// `h(G) >= 1 + ⌊2k/3⌋` and the induced cycle-count bound
/// `|E| − |V| + q³/6 − q²/2 + q/3 + 1 <= |C(G)|` with `q = ⌊2k/3⌋`,
/// in integer arithmetic scaled by 6.
#[allow(clippy::int_plus_one)]
pub fn check_corollary(g: &Graph, f: &Colouring) -> Result<CorollaryCheck> {
    if !is_three_connected(g) {
        return Err(Error::NotThreeConnected);
    }
    let dom = is_over_dominating(g, f)?;
    if !dom.over_dominating {
        return Err(Error::NotOverDominating);
    }
    let k = f.k();
    let q = (2 * k as i64) / 3;
    let h = hadwiger_number(g)?.h;
    let hadwiger_ok = (h as i64) >= 1 + q;
    let c = characteristic(g);
    let m = c.edge_count as i64;
    let n = c.vertex_count as i64;
    // 6·bound = 6(|E| − |V|) + q³ − 3q² + 2q + 6, and q(q−1)(q−2) is
    // divisible by 6, so the bound itself is an exact integer
    let scaled = 6 * (m - n) + q * q * q - 3 * q * q + 2 * q + 6;
    debug_assert_eq!(scaled % 6, 0);
    let bound = scaled / 6;
    let cycle_count_ok = scaled <= 6 * c.cycle_count as i64;
    Ok(CorollaryCheck {
        holds: hadwiger_ok && cycle_count_ok,
        hadwiger_ok,
        cycle_count_ok,
        bound,
        h,
        k,
        floor_two_thirds: q,
    })
}
