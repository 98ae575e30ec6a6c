//! The fundamental relation γ* and its quotient ring.
//!
//! Two elements are γ-related when they lie together in some finite sum
//! of finite products; γ* is the transitive closure. The quotient carries
//! induced single-valued operations and is an ordinary ring.

use std::sync::Arc;

use thiserror::Error;

use crate::ideal::class_c;
use crate::ring::{validate_hyperring, RawHyperring, Ring, RingError};
use crate::set::ElemSet;

/// γ* is computed by a subset-family fixpoint; past this carrier size the
/// family bound `2ⁿ` stops being a safe worst case.
pub const GAMMA_CAP: usize = 12;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GammaError {
    #[error("carrier size {0} exceeds gamma cap {1}")]
    CapExceeded(usize, usize),
    /// The induced operation depends on the representative. The
    /// fundamental-ring construction guarantees this cannot happen, so
    /// seeing it means the partition computation is wrong.
    #[error("induced {op} is not well-defined on classes ({a},{b})")]
    IllDefined { op: &'static str, a: usize, b: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// The γ*-class partition with the induced ring structure.
pub struct FundamentalQuotient {
    /// The quotient as a hyperring with singleton cells. Passing full
    /// validation with singleton cells is exactly the ordinary ring
    /// axiom check.
    pub ring: Ring,
    /// Class index → members, ordered by least member.
    pub classes: Vec<ElemSet>,
    /// Element → class index.
    pub projection: Vec<usize>,
}

/// All finite sums of finite products: close the product family under
/// setwise addition.
fn sum_product_family(r: &Ring) -> Vec<ElemSet> {
    let mut found: Vec<ElemSet> = class_c(r).to_vec();
    let mut work = found.clone();
    while let Some(cur) = work.pop() {
        for i in 0..found.len() {
            let next = r.set_add(&cur, &found[i]);
            if !found.contains(&next) {
                found.push(next);
                work.push(next);
            }
        }
    }
    found
}

pub fn gamma_star(r: &Ring) -> Result<FundamentalQuotient, GammaError> {
    if r.n > GAMMA_CAP {
        return Err(GammaError::CapExceeded(r.n, GAMMA_CAP));
    }
    let family = sum_product_family(r);

    // Union-find over co-membership gives the transitive closure of γ.
    let mut parent: Vec<usize> = (0..r.n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for u in &family {
        if let Some(first) = u.min_elem() {
            for x in u.iter() {
                let (a, b) = (find(&mut parent, first), find(&mut parent, x));
                if a != b {
                    parent[b] = a;
                }
            }
        }
    }

    let mut classes: Vec<ElemSet> = Vec::new();
    let mut projection = vec![usize::MAX; r.n];
    for x in 0..r.n {
        if projection[x] != usize::MAX {
            continue;
        }
        let root = find(&mut parent, x);
        let members: ElemSet = (0..r.n)
            .filter(|&y| find(&mut parent, y) == root)
            .collect();
        let idx = classes.len();
        for m in members.iter() {
            projection[m] = idx;
        }
        classes.push(members);
    }
    let k = classes.len();

    // Induced operations: constant over representatives, by construction
    // of γ*; assert rather than trust.
    let mut add = vec![vec![0usize; k]; k];
    for a in 0..k {
        for b in 0..k {
            let mut expected: Option<usize> = None;
            for x in classes[a].iter() {
                for y in classes[b].iter() {
                    let c = projection[r.add(x, y)];
                    match expected {
                        None => expected = Some(c),
                        Some(e) if e != c => {
                            return Err(GammaError::IllDefined { op: "addition", a, b })
                        }
                        _ => {}
                    }
                }
            }
            add[a][b] = expected.expect("classes nonempty");
        }
    }
    let mut mul = vec![vec![0usize; k]; k];
    for a in 0..k {
        for b in 0..k {
            let mut expected: Option<usize> = None;
            for x in classes[a].iter() {
                for y in classes[b].iter() {
                    for c in r.mul(x, y).iter() {
                        let cls = projection[c];
                        match expected {
                            None => expected = Some(cls),
                            Some(e) if e != cls => {
                                return Err(GammaError::IllDefined {
                                    op: "multiplication",
                                    a,
                                    b,
                                })
                            }
                            _ => {}
                        }
                    }
                }
            }
            mul[a][b] = expected.expect("mul cells nonempty");
        }
    }

    let raw = RawHyperring {
        name: format!("{} / gamma*", r.name),
        n: k,
        zero: projection[r.zero],
        add,
        mul: mul
            .into_iter()
            .map(|row| row.into_iter().map(|c| vec![c]).collect())
            .collect(),
    };
    Ok(FundamentalQuotient {
        ring: Arc::new(validate_hyperring(&raw)?),
        classes,
        projection,
    })
}
