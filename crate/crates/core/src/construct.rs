//! Catalog hyperring constructions: ℤ_n templates, the fixed 4-element
//! example ring, direct products, quotients by a hyperideal, and 2×2
//! hypermatrix rings.

use std::sync::Arc;

use thiserror::Error;

use crate::ideal::{self, IdealError};
use crate::ring::{
    validate_hyperring, validate_hyperring_sampled, RawHyperring, Ring, RingError,
};
use crate::set::ElemSet;

/// Product carriers stay at or below this size.
pub const PRODUCT_CAP: usize = 16;
/// Hypermatrix base rings stay at or below this size (carrier `n⁴`).
pub const MATRIX_BASE_CAP: usize = 4;
/// Deterministic sample count for hypermatrix validation.
pub const MATRIX_SAMPLES: usize = 4096;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("carrier size {0} exceeds cap {1}")]
    CapExceeded(usize, usize),
    #[error("quotient multiplication is not representative-independent: \
             classes ({0},{1}) disagree between representatives")]
    IllDefinedQuotient(usize, usize),
    #[error("subset is not a hyperideal")]
    NotHyperideal,
    #[error("quotient by the whole ring is undefined")]
    NotProper,
    #[error("subset is not a subhyperring: witness ({0},{1})")]
    NotSubhyperring(usize, usize),
}

/// The 4-element example hyperring: addition mod 4 and the set-valued
/// multiplication with `1∘1 = 3∘3 = 1∘3` the whole carrier,
/// `1∘2 = 2∘3 = {0,2}`, `2∘2 = {0}`, and an annihilating zero.
pub fn z4h() -> Ring {
    let raw = RawHyperring {
        name: "z4h".into(),
        n: 4,
        zero: 0,
        add: (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect(),
        mul: vec![
            vec![vec![0], vec![0], vec![0], vec![0]],
            vec![vec![0], vec![0, 1, 2, 3], vec![0, 2], vec![0, 1, 2, 3]],
            vec![vec![0], vec![0, 2], vec![0], vec![0, 2]],
            vec![vec![0], vec![0, 1, 2, 3], vec![0, 2], vec![0, 1, 2, 3]],
        ],
    };
    Arc::new(validate_hyperring(&raw).expect("builtin tables are a hyperring"))
}

fn a_suffix(a: &[u64]) -> String {
    a.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `ℤ_n` with `x∘y = {x·a·y mod n : a ∈ A}`. Always validated in full.
pub fn zn_template(n: usize, a: &[u64]) -> Result<Ring, RingError> {
    assert!(n >= 1, "carrier must be nonempty");
    assert!(!a.is_empty(), "multiplier set must be nonempty");
    let name = format!("zn({n},{{{}}})", a_suffix(a));
    let raw = RawHyperring {
        name,
        n,
        zero: 0,
        add: (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect(),
        mul: (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let mut cell: Vec<usize> = a
                            .iter()
                            .map(|&m| {
                                let m = (m % n as u64) as usize;
                                x * m % n * y % n
                            })
                            .collect();
                        cell.sort_unstable();
                        cell.dedup();
                        cell
                    })
                    .collect()
            })
            .collect(),
    };
    validate_hyperring(&raw).map(Arc::new)
}

#[inline]
pub fn pair_index(n2: usize, i: usize, j: usize) -> usize {
    i * n2 + j
}

#[inline]
pub fn pair_split(n2: usize, idx: usize) -> (usize, usize) {
    (idx / n2, idx % n2)
}

/// Direct product with flattened carrier `(i, j) ↦ i·n₂ + j`.
pub fn product_ring(r1: &Ring, r2: &Ring) -> Result<Ring, ConstructError> {
    let (n1, n2) = (r1.n, r2.n);
    let n = n1 * n2;
    if n > PRODUCT_CAP {
        return Err(ConstructError::CapExceeded(n, PRODUCT_CAP));
    }
    let name = format!("{} x {}", r1.name, r2.name);
    let add = (0..n)
        .map(|p| {
            let (a1, a2) = pair_split(n2, p);
            (0..n)
                .map(|q| {
                    let (b1, b2) = pair_split(n2, q);
                    pair_index(n2, r1.add(a1, b1), r2.add(a2, b2))
                })
                .collect()
        })
        .collect();
    let mul = (0..n)
        .map(|p| {
            let (a1, a2) = pair_split(n2, p);
            (0..n)
                .map(|q| {
                    let (b1, b2) = pair_split(n2, q);
                    let c1 = r1.mul(a1, b1);
                    let c2 = r2.mul(a2, b2);
                    let mut cell = Vec::new();
                    for x in c1.iter() {
                        for y in c2.iter() {
                            cell.push(pair_index(n2, x, y));
                        }
                    }
                    cell.sort_unstable();
                    cell
                })
                .collect()
        })
        .collect();
    let raw = RawHyperring {
        name,
        n,
        zero: pair_index(n2, r1.zero, r2.zero),
        add,
        mul,
    };
    Ok(Arc::new(validate_hyperring(&raw)?))
}

/// A quotient `R/J` with its projection map.
pub struct Quotient {
    pub ring: Ring,
    /// Element of `R` → class index in the quotient carrier.
    pub projection: Vec<usize>,
    /// Class index → coset members in `R`.
    pub classes: Vec<ElemSet>,
}

/// Quotient by a proper hyperideal. Cosets are the additive classes of
/// `J`, indexed by their least representative in ascending order.
/// `mul([a],[b]) = {[c] : c ∈ a∘b}` is checked for representative
/// independence and rejected otherwise.
pub fn quotient_ring(r: &Ring, j: &ElemSet) -> Result<Quotient, ConstructError> {
    if !ideal::is_hyperideal(r, j) {
        return Err(ConstructError::NotHyperideal);
    }
    if *j == r.carrier() {
        return Err(ConstructError::NotProper);
    }
    // Partition into additive cosets a + J.
    let mut class_of = vec![usize::MAX; r.n];
    let mut classes: Vec<ElemSet> = Vec::new();
    for a in 0..r.n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let coset: ElemSet = j.iter().map(|x| r.add(a, x)).collect();
        let idx = classes.len();
        for m in coset.iter() {
            class_of[m] = idx;
        }
        classes.push(coset);
    }
    let k = classes.len();
    let rep = |c: usize| classes[c].min_elem().expect("coset nonempty");

    let add = (0..k)
        .map(|a| (0..k).map(|b| class_of[r.add(rep(a), rep(b))]).collect())
        .collect();

    // Representative independence of the induced multiplication.
    let mut mul: Vec<Vec<Vec<usize>>> = Vec::with_capacity(k);
    for a in 0..k {
        let mut row = Vec::with_capacity(k);
        for b in 0..k {
            let mut expected: Option<ElemSet> = None;
            for x in classes[a].iter() {
                for y in classes[b].iter() {
                    let got: ElemSet = r.mul(x, y).iter().map(|c| class_of[c]).collect();
                    match &expected {
                        None => expected = Some(got),
                        Some(e) if *e != got => {
                            return Err(ConstructError::IllDefinedQuotient(a, b))
                        }
                        _ => {}
                    }
                }
            }
            row.push(expected.expect("classes nonempty").to_vec());
        }
        mul.push(row);
    }

    let raw = RawHyperring {
        name: format!("{} / {{{}}}", r.name, j.csv()),
        n: k,
        zero: class_of[r.zero],
        add,
        mul,
    };
    Ok(Quotient {
        ring: Arc::new(validate_hyperring(&raw)?),
        projection: class_of,
        classes,
    })
}

#[inline]
pub fn mat_index(n: usize, m: [usize; 4]) -> usize {
    ((m[0] * n + m[1]) * n + m[2]) * n + m[3]
}

#[inline]
pub fn mat_split(n: usize, idx: usize) -> [usize; 4] {
    [
        idx / (n * n * n),
        idx / (n * n) % n,
        idx / n % n,
        idx % n,
    ]
}

/// The four entry sets of a 2×2 hypermatrix product:
/// `(A∘B)_{ij} = Σ_t A_{it} ∘ B_{tj}` (set sum of set products).
pub fn hypermatrix_cells(r: &Ring, a: [usize; 4], b: [usize; 4]) -> [ElemSet; 4] {
    let cell = |p: usize, q: usize, s: usize, t: usize| {
        r.set_add(&r.mul(a[p], b[q]), &r.mul(a[s], b[t]))
    };
    [
        cell(0, 0, 1, 2), // (0,0): A00∘B00 + A01∘B10
        cell(0, 1, 1, 3), // (0,1): A00∘B01 + A01∘B11
        cell(2, 0, 3, 2), // (1,0): A10∘B00 + A11∘B10
        cell(2, 1, 3, 3), // (1,1): A10∘B01 + A11∘B11
    ]
}

/// Embed `x` into the (1,1) slot of a 2×2 matrix, zeros elsewhere.
pub fn diag_embed(r: &Ring, x: usize) -> [usize; 4] {
    [x, r.zero, r.zero, r.zero]
}

/// 2×2 hypermatrix ring over a base of at most [`MATRIX_BASE_CAP`]
/// elements. The carrier is all `n⁴` matrices; each mul cell is the
/// Cartesian product of the four entry sets. Axioms are validated on a
/// fixed deterministic sample of triples.
pub fn matrix_ring(r: &Ring, k: usize) -> Result<Ring, ConstructError> {
    if k != 2 {
        return Err(ConstructError::CapExceeded(k, 2));
    }
    if r.n > MATRIX_BASE_CAP {
        return Err(ConstructError::CapExceeded(r.n, MATRIX_BASE_CAP));
    }
    let n = r.n;
    let size = n * n * n * n;
    let add = (0..size)
        .map(|p| {
            let a = mat_split(n, p);
            (0..size)
                .map(|q| {
                    let b = mat_split(n, q);
                    mat_index(
                        n,
                        [
                            r.add(a[0], b[0]),
                            r.add(a[1], b[1]),
                            r.add(a[2], b[2]),
                            r.add(a[3], b[3]),
                        ],
                    )
                })
                .collect()
        })
        .collect();
    let mul = (0..size)
        .map(|p| {
            let a = mat_split(n, p);
            (0..size)
                .map(|q| {
                    let b = mat_split(n, q);
                    let cells = hypermatrix_cells(r, a, b);
                    let mut out = Vec::new();
                    for c0 in cells[0].iter() {
                        for c1 in cells[1].iter() {
                            for c2 in cells[2].iter() {
                                for c3 in cells[3].iter() {
                                    out.push(mat_index(n, [c0, c1, c2, c3]));
                                }
                            }
                        }
                    }
                    out.sort_unstable();
                    out
                })
                .collect()
        })
        .collect();
    let raw = RawHyperring {
        name: format!("M2({})", r.name),
        n: size,
        zero: mat_index(n, [r.zero; 4]),
        add,
        mul,
    };
    Ok(Arc::new(validate_hyperring_sampled(&raw, MATRIX_SAMPLES)?))
}

/// Membership of every entry of every matrix of `s` in the base ideal.
pub fn matrix_set_in_ideal(n: usize, s: &ElemSet, ideal: &ElemSet) -> bool {
    s.iter()
        .all(|m| mat_split(n, m).iter().all(|&e| ideal.contains(e)))
}

/// Reindex a subhyperring `t ⊆ R` (closed under subtraction and `∘`) as a
/// standalone ring. Returns the ring together with the member list in
/// ascending order (new index → old index).
pub fn subhyperring(r: &Ring, t: &ElemSet) -> Result<(Ring, Vec<usize>), ConstructError> {
    if t.is_empty() || !t.contains(r.zero) {
        return Err(ConstructError::NotSubhyperring(r.zero, r.zero));
    }
    for a in t.iter() {
        for b in t.iter() {
            if !t.contains(r.sub(a, b)) {
                return Err(ConstructError::NotSubhyperring(a, b));
            }
            if !r.mul(a, b).is_subset(t) {
                return Err(ConstructError::NotSubhyperring(a, b));
            }
        }
    }
    let members = t.to_vec();
    let index_of = |x: usize| members.iter().position(|&m| m == x).unwrap();
    let k = members.len();
    let raw = RawHyperring {
        name: format!("{}|{{{}}}", r.name, t.csv()),
        n: k,
        zero: index_of(r.zero),
        add: (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| index_of(r.add(members[a], members[b])))
                    .collect()
            })
            .collect(),
        mul: (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| {
                        r.mul(members[a], members[b])
                            .iter()
                            .map(index_of)
                            .collect()
                    })
                    .collect()
            })
            .collect(),
    };
    Ok((Arc::new(validate_hyperring(&raw)?), members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{enumerate_hyperideals, is_local};

    #[test]
    fn zn_degenerate_multiplier_gives_ordinary_ring() {
        let z4 = zn_template(4, &[1]).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(z4.mul(x, y), ElemSet::singleton(x * y % 4));
            }
        }
        assert!(z4.strongly_distributive());
    }

    #[test]
    fn zn_examples_validate() {
        let z6a = zn_template(6, &[2, 3]).unwrap();
        assert!(z6a.units().identities.is_empty());
        let z10a = zn_template(10, &[2, 3]).unwrap();
        assert!(z10a.units().identities.contains(7));
        // z4h is realizable as a template with representatives of all
        // residues; the builtin fixed tables must agree.
        let t = zn_template(4, &[1, 2, 3, 4]).unwrap();
        let z = z4h();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(t.mul(x, y), z.mul(x, y));
            }
        }
    }

    #[test]
    fn product_with_trivial_relabels() {
        let z = z4h();
        let triv = zn_template(1, &[1]).unwrap();
        let p = product_ring(&z, &triv).unwrap();
        assert_eq!(p.n, 4);
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(p.mul(x, y), z.mul(x, y));
                assert_eq!(p.add(x, y), z.add(x, y));
            }
        }
    }

    #[test]
    fn product_of_z4h_with_itself() {
        let p = product_ring(&z4h(), &z4h()).unwrap();
        assert_eq!(p.n, 16);
        assert!(!is_local(&p).unwrap());
        // Ordinary Z2 × Z3 has singleton cells everywhere.
        let q = product_ring(&zn_template(2, &[1]).unwrap(), &zn_template(3, &[1]).unwrap())
            .unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(q.mul(x, y).len(), 1);
            }
        }
        // Cap: 16 × anything larger than 1 is rejected.
        assert!(matches!(
            product_ring(&p, &z4h()),
            Err(ConstructError::CapExceeded(64, _))
        ));
    }

    #[test]
    fn quotient_of_z4h_by_maximal() {
        let z = z4h();
        let q = quotient_ring(&z, &ElemSet::from_indices([0, 2])).unwrap();
        assert_eq!(q.ring.n, 2);
        assert_eq!(q.classes[0], ElemSet::from_indices([0, 2]));
        assert_eq!(q.classes[1], ElemSet::from_indices([1, 3]));
        assert_eq!(q.projection, vec![0, 1, 0, 1]);
        // [1]∘[1] covers both classes; the zero class annihilates.
        assert_eq!(q.ring.mul(1, 1), ElemSet::from_indices([0, 1]));
        assert_eq!(q.ring.mul(0, 1), ElemSet::singleton(0));
    }

    #[test]
    fn quotient_by_zero_is_isomorphic() {
        let z = z4h();
        let q = quotient_ring(&z, &ElemSet::singleton(0)).unwrap();
        assert_eq!(q.ring.n, 4);
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(q.ring.mul(x, y), z.mul(x, y));
            }
        }
    }

    #[test]
    fn quotient_of_z6a() {
        let z6a = zn_template(6, &[2, 3]).unwrap();
        let q = quotient_ring(&z6a, &ElemSet::from_indices([0, 3])).unwrap();
        assert_eq!(q.ring.n, 3);
        assert_eq!(q.ring.mul(1, 1), ElemSet::from_indices([0, 2]));
        assert_eq!(q.ring.mul(1, 2), ElemSet::from_indices([0, 1]));
        assert_eq!(q.ring.mul(2, 2), ElemSet::from_indices([0, 2]));
        for y in 0..3 {
            assert_eq!(q.ring.mul(0, y), ElemSet::singleton(0));
        }
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let z = z4h();
        assert!(matches!(
            quotient_ring(&z, &ElemSet::from_indices([0, 1])),
            Err(ConstructError::NotHyperideal)
        ));
    }

    #[test]
    fn matrix_ring_over_ordinary_z2() {
        let z2 = zn_template(2, &[1]).unwrap();
        let m = matrix_ring(&z2, 2).unwrap();
        assert_eq!(m.n, 16);
        // Ordinary matrices: singleton products everywhere.
        for x in 0..16 {
            for y in 0..16 {
                assert_eq!(m.mul(x, y).len(), 1);
            }
        }
        assert!(matches!(
            matrix_ring(&m, 2),
            Err(ConstructError::CapExceeded(16, _))
        ));
        assert!(matches!(
            matrix_ring(&z2, 3),
            Err(ConstructError::CapExceeded(3, 2))
        ));
    }

    #[test]
    fn diagonal_embedding_multiplies_like_the_base() {
        let z = z4h();
        for x in 0..4 {
            for y in 0..4 {
                let cells = hypermatrix_cells(&z, diag_embed(&z, x), diag_embed(&z, y));
                // Product of two diagonal embeddings is the embedding of
                // x∘y in the (1,1) slot.
                assert_eq!(cells[0], z.mul(x, y));
                for c in &cells[1..] {
                    assert_eq!(*c, ElemSet::singleton(0));
                }
            }
        }
        // Membership in M2(I) is componentwise.
        let i = ElemSet::from_indices([0, 2]);
        let e2 = ElemSet::singleton(mat_index(4, diag_embed(&z, 2)));
        assert!(matrix_set_in_ideal(4, &e2, &i));
        let e1 = ElemSet::singleton(mat_index(4, diag_embed(&z, 1)));
        assert!(!matrix_set_in_ideal(4, &e1, &i));
    }

    #[test]
    fn subhyperring_reindexes() {
        let z = z4h();
        let (t, members) = subhyperring(&z, &ElemSet::from_indices([0, 2])).unwrap();
        assert_eq!(t.n, 2);
        assert_eq!(members, vec![0, 2]);
        // 2∘2 = {0} in the base becomes 1∘1 = {0} in the subring.
        assert_eq!(t.mul(1, 1), ElemSet::singleton(0));
        assert!(matches!(
            subhyperring(&z, &ElemSet::from_indices([0, 1])),
            Err(ConstructError::NotSubhyperring(0, 1))
        ));
        let _ = enumerate_hyperideals(&t).unwrap();
    }
}
