//! Hyperideal construction, enumeration, and the ideal calculus:
//! radical, D-set, colon, products, maximal/local structure, and the
//! product-class **C** membership test.

use thiserror::Error;

use crate::ring::{FiniteHyperring, RingFlags};
use crate::set::ElemSet;

/// Largest carrier for hyperideal enumeration. Join closure over principal
/// ideals stays cheap well past the full-validation cap, and the built-in
/// catalog carries one 30-element surrogate ring.
pub const ENUM_CAP: usize = 32;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("subset is not a hyperideal: {0:?}")]
    NotHyperideal(IdealViolation),
    #[error("carrier size {0} exceeds enumeration cap {1}")]
    CapExceeded(usize, usize),
}

/// Why a subset fails the hyperideal closure conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealViolation {
    Empty,
    /// `a − b` escapes the subset.
    Subtraction { a: usize, b: usize },
    /// `r∘x ⊄ S` for `x ∈ S`.
    Absorption { r: usize, x: usize },
}

/// A subset known to satisfy the hyperideal closure conditions in its ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Hyperideal {
    pub members: ElemSet,
}

impl Hyperideal {
    pub fn csv(&self) -> String {
        self.members.csv()
    }
}

/// Check the two closure conditions, returning the first violation found.
/// Absorption is scanned before subtraction, each in ascending order.
pub fn check_hyperideal(ring: &FiniteHyperring, s: &ElemSet) -> Result<(), IdealViolation> {
    if s.is_empty() {
        return Err(IdealViolation::Empty);
    }
    for r in 0..ring.n {
        for x in s.iter() {
            if !ring.mul(r, x).is_subset(s) {
                return Err(IdealViolation::Absorption { r, x });
            }
        }
    }
    for a in s.iter() {
        for b in s.iter() {
            if !s.contains(ring.sub(a, b)) {
                return Err(IdealViolation::Subtraction { a, b });
            }
        }
    }
    Ok(())
}

pub fn is_hyperideal(ring: &FiniteHyperring, s: &ElemSet) -> bool {
    check_hyperideal(ring, s).is_ok()
}

/// The least hyperideal containing `seed`, by worklist fixpoint over the
/// two closure rules.
pub fn generate_hyperideal(ring: &FiniteHyperring, seed: &ElemSet) -> Hyperideal {
    let mut s = *seed;
    s.insert(ring.zero);
    loop {
        let mut next = s;
        for a in s.iter() {
            for b in s.iter() {
                next.insert(ring.sub(a, b));
            }
        }
        for r in 0..ring.n {
            for x in s.iter() {
                next.union_in_place(&ring.mul(r, x));
            }
        }
        if next == s {
            return Hyperideal { members: s };
        }
        s = next;
    }
}

fn sort_sets(sets: &mut Vec<ElemSet>) {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    sets.dedup();
}

/// All hyperideals of the ring, as the closure of the principal ideals
/// under pairwise join, sorted by size then lexicographically. Includes
/// the carrier itself.
pub fn enumerate_hyperideals(ring: &FiniteHyperring) -> Result<Vec<Hyperideal>, IdealError> {
    if ring.n > ENUM_CAP {
        return Err(IdealError::CapExceeded(ring.n, ENUM_CAP));
    }
    let sets = ring.ideal_cache.get_or_init(|| {
        let mut found: Vec<ElemSet> = Vec::new();
        let mut work: Vec<ElemSet> = Vec::new();
        for x in 0..ring.n {
            let p = generate_hyperideal(ring, &ElemSet::singleton(x)).members;
            if !found.contains(&p) {
                found.push(p);
                work.push(p);
            }
        }
        while let Some(cur) = work.pop() {
            for i in 0..found.len() {
                let join = generate_hyperideal(ring, &cur.union(&found[i])).members;
                if !found.contains(&join) {
                    found.push(join);
                    work.push(join);
                }
            }
        }
        sort_sets(&mut found);
        found
    });
    Ok(sets.iter().map(|&members| Hyperideal { members }).collect())
}

/// Proper hyperideals only.
pub fn proper_hyperideals(ring: &FiniteHyperring) -> Result<Vec<Hyperideal>, IdealError> {
    let full = ring.carrier();
    Ok(enumerate_hyperideals(ring)?
        .into_iter()
        .filter(|i| i.members != full)
        .collect())
}

/// The family **C** of all finite product sets `r₁∘…∘r_k`, `k ≥ 1`
/// (singletons included as one-factor products), sorted by size then
/// lexicographically.
pub fn class_c(ring: &FiniteHyperring) -> &[ElemSet] {
    ring.class_c_cache.get_or_init(|| {
        let mut found: Vec<ElemSet> = Vec::new();
        let mut work: Vec<ElemSet> = Vec::new();
        for r in 0..ring.n {
            let s = ElemSet::singleton(r);
            if !found.contains(&s) {
                found.push(s);
                work.push(s);
            }
        }
        while let Some(cur) = work.pop() {
            for r in 0..ring.n {
                let next = ring.lift(&cur, &ElemSet::singleton(r));
                if !found.contains(&next) {
                    found.push(next);
                    work.push(next);
                }
            }
        }
        sort_sets(&mut found);
        found
    })
}

/// A **C**-hyperideal meets no product set it does not contain. Returns
/// the first violating product set otherwise (family scan order: size,
/// then lexicographic).
pub fn c_hyperideal_violation(ring: &FiniteHyperring, ideal: &ElemSet) -> Option<ElemSet> {
    class_c(ring)
        .iter()
        .find(|a| a.intersects(ideal) && !a.is_subset(ideal))
        .copied()
}

pub fn is_c_hyperideal(ring: &FiniteHyperring, ideal: &ElemSet) -> bool {
    c_hyperideal_violation(ring, ideal).is_none()
}

/// Prime test for an arbitrary subset: proper hyperideal with
/// `x∘y ⊆ P ⇒ x ∈ P ∨ y ∈ P` over all elements.
pub fn is_prime_set(ring: &FiniteHyperring, p: &ElemSet) -> bool {
    if *p == ring.carrier() || !is_hyperideal(ring, p) {
        return false;
    }
    for x in 0..ring.n {
        for y in 0..ring.n {
            if ring.mul(x, y).is_subset(p) && !p.contains(x) && !p.contains(y) {
                return false;
            }
        }
    }
    true
}

/// All prime hyperideals (cached).
pub fn prime_hyperideals(ring: &FiniteHyperring) -> Result<Vec<Hyperideal>, IdealError> {
    enumerate_hyperideals(ring)?;
    let primes = ring.prime_cache.get_or_init(|| {
        ring.ideal_cache
            .get()
            .expect("ideal cache filled above")
            .iter()
            .filter(|s| is_prime_set(ring, s))
            .copied()
            .collect()
    });
    Ok(primes.iter().map(|&members| Hyperideal { members }).collect())
}

/// `√I`: the intersection of all prime hyperideals containing `I`, or the
/// whole carrier when none does.
pub fn radical(ring: &FiniteHyperring, ideal: &ElemSet) -> Result<ElemSet, IdealError> {
    let primes = prime_hyperideals(ring)?;
    let mut out = ring.carrier();
    let mut any = false;
    for p in &primes {
        if ideal.is_subset(&p.members) {
            out = out.intersection(&p.members);
            any = true;
        }
    }
    Ok(if any { out } else { ring.carrier() })
}

/// `√⟨0⟩` (cached): the intersection of all prime hyperideals.
pub fn radical_zero(ring: &FiniteHyperring) -> Result<ElemSet, IdealError> {
    if let Some(&v) = ring.radical_zero_cache.get() {
        return Ok(v);
    }
    let zero_ideal = generate_hyperideal(ring, &ElemSet::EMPTY).members;
    let v = radical(ring, &zero_ideal)?;
    Ok(*ring.radical_zero_cache.get_or_init(|| v))
}

/// `{r : rᵏ ⊆ I for some k ≥ 1}` with whole-set containment of the power.
pub fn d_set(ring: &FiniteHyperring, ideal: &ElemSet) -> ElemSet {
    let mut out = ElemSet::EMPTY;
    for r in 0..ring.n {
        if ring.power_orbit(r).iter().any(|p| p.is_subset(ideal)) {
            out.insert(r);
        }
    }
    out
}

/// `(I : a) = {r : r∘a ⊆ I}`. Always a hyperideal when `I` is one.
pub fn colon_element(ring: &FiniteHyperring, ideal: &ElemSet, a: usize) -> Hyperideal {
    let members: ElemSet = (0..ring.n)
        .filter(|&r| ring.mul(r, a).is_subset(ideal))
        .collect();
    debug_assert!(check_hyperideal(ring, &members).is_ok());
    Hyperideal { members }
}

/// `(I : J) = {r : r∘j ⊆ I for all j ∈ J}`.
pub fn colon_set(ring: &FiniteHyperring, ideal: &ElemSet, by: &ElemSet) -> Hyperideal {
    let members: ElemSet = (0..ring.n)
        .filter(|&r| by.iter().all(|j| ring.mul(r, j).is_subset(ideal)))
        .collect();
    debug_assert!(check_hyperideal(ring, &members).is_ok());
    Hyperideal { members }
}

/// The hyperideal generated by all products `i∘j`, `i ∈ I`, `j ∈ J`.
pub fn ideal_product(ring: &FiniteHyperring, lhs: &ElemSet, rhs: &ElemSet) -> Hyperideal {
    let mut prods = ElemSet::EMPTY;
    for i in lhs.iter() {
        for j in rhs.iter() {
            prods.union_in_place(&ring.mul(i, j));
        }
    }
    generate_hyperideal(ring, &prods)
}

/// `Iᵏ`, `k ≥ 1`, by iterated ideal product.
pub fn ideal_power(ring: &FiniteHyperring, ideal: &ElemSet, k: usize) -> Hyperideal {
    assert!(k >= 1);
    let mut cur = Hyperideal { members: *ideal };
    for _ in 1..k {
        cur = ideal_product(ring, &cur.members, ideal);
    }
    cur
}

/// Elementwise product containment: every `i∘j` with `i ∈ lhs`, `j ∈ rhs`
/// lies inside `target`. Equivalent to `ideal_product(lhs, rhs) ⊆ target`
/// when `target` is a hyperideal.
pub fn pairwise_products_in(
    ring: &FiniteHyperring,
    lhs: &ElemSet,
    rhs: &ElemSet,
    target: &ElemSet,
) -> bool {
    lhs.iter()
        .all(|i| rhs.iter().all(|j| ring.mul(i, j).is_subset(target)))
}

/// Maximal elements of the proper-hyperideal poset under inclusion.
pub fn maximal_hyperideals(ring: &FiniteHyperring) -> Result<Vec<Hyperideal>, IdealError> {
    let proper = proper_hyperideals(ring)?;
    Ok(proper
        .iter()
        .filter(|i| {
            !proper
                .iter()
                .any(|j| i.members != j.members && i.members.is_subset(&j.members))
        })
        .copied()
        .collect())
}

pub fn is_local(ring: &FiniteHyperring) -> Result<bool, IdealError> {
    Ok(maximal_hyperideals(ring)?.len() == 1)
}

/// All whole-ring predicates, including the lattice-dependent `local`.
pub fn ring_flags(ring: &FiniteHyperring) -> Result<RingFlags, IdealError> {
    let u = ring.units();
    let nonzero_nilpotent = (0..ring.n).any(|x| x != ring.zero && ring.is_nilpotent(x));
    let integral = (0..ring.n).all(|x| {
        (0..ring.n).all(|y| {
            !ring.mul(x, y).contains(ring.zero) || x == ring.zero || y == ring.zero
        })
    });
    let hyperfield = ring.n > 1
        && (0..ring.n).all(|x| x == ring.zero || u.units.contains(x));
    let regular = (0..ring.n).all(|x| ring.is_regular_element(x));
    Ok(RingFlags {
        strongly_distributive: ring.strongly_distributive(),
        reduced: !nonzero_nilpotent,
        integral_hyperdomain: integral,
        hyperfield,
        regular_ring: regular,
        local: is_local(ring)?,
        has_identity: !u.identities.is_empty(),
        has_scalar_identity: !u.scalar_identities.is_empty(),
    })
}
