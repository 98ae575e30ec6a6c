//! Finite multiplicative hyperrings as validated tables.
//!
//! A hyperring here is an abelian group `(R, +)` given by an `n×n`
//! addition table together with a set-valued multiplication table: each
//! cell `mul[a][b]` is a nonempty subset of the carrier. Validation checks
//! the three hyperring axioms exhaustively and records whether the
//! distributive inclusions hold with equality.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::set::ElemSet;

/// Largest carrier accepted for full table validation.
pub const VALIDATE_CAP: usize = 64;

/// The interchange document for a hyperring. Field order is the wire
/// contract; `mul` cells must be nonempty, strictly increasing index lists.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RawHyperring {
    pub name: String,
    pub n: usize,
    pub zero: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<Vec<usize>>>,
}

/// Which hyperring axiom a validation failure names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// `(carrier, add)` is an abelian group with the declared zero.
    AdditiveGroup,
    /// `a∘(b∘c) = (a∘b)∘c` as sets.
    Associativity,
    /// `a∘(b+c) ⊆ a∘b + a∘c` and `(b+c)∘a ⊆ b∘a + c∘a`.
    Distributivity,
    /// `a∘(−b) = (−a)∘b = −(a∘b)` as sets.
    SignCompatibility,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::AdditiveGroup => "additive-group",
            Axiom::Associativity => "associativity",
            Axiom::Distributivity => "distributivity",
            Axiom::SignCompatibility => "sign-compatibility",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("axiom violation: {axiom} at (a,b,c)=({},{},{})", witness.0, witness.1, witness.2)]
    AxiomViolation { axiom: Axiom, witness: (usize, usize, usize) },
    #[error("empty operand in set product")]
    EmptyOperand,
    #[error("carrier size {0} exceeds cap {1}")]
    CapExceeded(usize, usize),
}

/// Identity/unit data computed in one scan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnitData {
    /// `e` with `a ∈ a∘e` for every `a`.
    pub identities: ElemSet,
    /// `e` with `a∘e = {a}` for every `a`.
    pub scalar_identities: ElemSet,
    /// `x` such that `e ∈ x∘y` for some identity `e` and some `y`.
    pub units: ElemSet,
}

/// Scan results for one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementProfile {
    pub index: usize,
    pub is_unit: bool,
    pub is_identity: bool,
    pub is_scalar_identity: bool,
    pub is_regular: bool,
    /// `None` when the notion does not apply (zero or a unit).
    pub is_irreducible: Option<bool>,
    /// `None` when the notion does not apply (zero or a unit).
    pub is_prime_element: Option<bool>,
    pub is_nilpotent: bool,
}

/// Whole-ring predicates. `local` needs the hyperideal lattice and is
/// computed in the ideals module; see [`crate::ideal::ring_flags`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingFlags {
    pub strongly_distributive: bool,
    pub reduced: bool,
    pub integral_hyperdomain: bool,
    pub hyperfield: bool,
    pub regular_ring: bool,
    pub local: bool,
    pub has_identity: bool,
    pub has_scalar_identity: bool,
}

/// A validated finite multiplicative hyperring.
///
/// Tables are immutable after validation; the lazily computed caches are
/// write-once (`OnceLock`), so sharing a ring across threads is safe.
pub struct FiniteHyperring {
    pub name: String,
    pub n: usize,
    pub zero: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    mul: Vec<ElemSet>,
    strongly_distributive: bool,
    pub(crate) units_cache: OnceLock<UnitData>,
    pub(crate) ideal_cache: OnceLock<Vec<ElemSet>>,
    pub(crate) prime_cache: OnceLock<Vec<ElemSet>>,
    pub(crate) class_c_cache: OnceLock<Vec<ElemSet>>,
    pub(crate) radical_zero_cache: OnceLock<ElemSet>,
}

impl std::fmt::Debug for FiniteHyperring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteHyperring({}, n={})", self.name, self.n)
    }
}

impl FiniteHyperring {
    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// The table cell `a∘b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> ElemSet {
        self.mul[a * self.n + b]
    }

    pub fn carrier(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    pub fn strongly_distributive(&self) -> bool {
        self.strongly_distributive
    }

    /// `X + Y = {x + y : x ∈ X, y ∈ Y}`.
    pub fn set_add(&self, xs: &ElemSet, ys: &ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for x in xs.iter() {
            for y in ys.iter() {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// `−X = {−x : x ∈ X}`.
    pub fn set_neg(&self, xs: &ElemSet) -> ElemSet {
        xs.iter().map(|x| self.neg(x)).collect()
    }

    /// Lift of `∘` to sets: `X ∘ Y = ⋃ x∘y`.
    pub fn lift(&self, xs: &ElemSet, ys: &ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for x in xs.iter() {
            for y in ys.iter() {
                out.union_in_place(&self.mul(x, y));
            }
        }
        out
    }

    /// Left-to-right fold of the lifted product over `operands`.
    /// Fold order is immaterial by the associativity axiom.
    pub fn set_product(&self, operands: &[ElemSet]) -> Result<ElemSet, RingError> {
        if operands.is_empty() || operands.iter().any(ElemSet::is_empty) {
            return Err(RingError::EmptyOperand);
        }
        let mut acc = operands[0];
        for op in &operands[1..] {
            acc = self.lift(&acc, op);
        }
        Ok(acc)
    }

    /// `x∘y∘z` evaluated as a fold of singletons.
    pub fn triple(&self, x: usize, y: usize, z: usize) -> ElemSet {
        self.lift(&self.mul(x, y), &ElemSet::singleton(z))
    }

    /// Identities, scalar identities, and units (cached).
    pub fn units(&self) -> &UnitData {
        self.units_cache.get_or_init(|| {
            let n = self.n;
            let mut identities = ElemSet::EMPTY;
            let mut scalar = ElemSet::EMPTY;
            for e in 0..n {
                let mut ident = true;
                let mut sc = true;
                for a in 0..n {
                    let cell = self.mul(a, e);
                    if !cell.contains(a) {
                        ident = false;
                        sc = false;
                        break;
                    }
                    if cell != ElemSet::singleton(a) {
                        sc = false;
                    }
                }
                if ident {
                    identities.insert(e);
                }
                if sc {
                    scalar.insert(e);
                }
            }
            let mut units = ElemSet::EMPTY;
            if !identities.is_empty() {
                for x in 0..n {
                    'search: for y in 0..n {
                        if self.mul(x, y).intersects(&identities) {
                            units.insert(x);
                            break 'search;
                        }
                    }
                }
            }
            UnitData { identities, scalar_identities: scalar, units }
        })
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.units().units.contains(x)
    }

    /// Nonunit elements. With no identity every element is a nonunit.
    pub fn nonunits(&self) -> ElemSet {
        self.carrier().difference(&self.units().units)
    }

    /// The sequence of set powers `x, x², x³, …` up to its first repeat.
    pub fn power_orbit(&self, x: usize) -> Vec<ElemSet> {
        let mut seen = Vec::new();
        let mut cur = ElemSet::singleton(x);
        loop {
            if seen.contains(&cur) {
                return seen;
            }
            seen.push(cur);
            cur = self.lift(&cur, &ElemSet::singleton(x));
        }
    }

    /// Whole-set power `xᵏ`, `k ≥ 1`.
    pub fn power(&self, x: usize, k: usize) -> ElemSet {
        assert!(k >= 1);
        let mut cur = ElemSet::singleton(x);
        for _ in 1..k {
            cur = self.lift(&cur, &ElemSet::singleton(x));
        }
        cur
    }

    pub fn is_nilpotent(&self, x: usize) -> bool {
        let zero = ElemSet::singleton(self.zero);
        self.power_orbit(x).into_iter().any(|p| p == zero)
    }

    pub fn is_regular_element(&self, r: usize) -> bool {
        let sq = self.mul(r, r);
        (0..self.n).any(|x| self.lift(&sq, &ElemSet::singleton(x)).contains(r))
    }

    /// No factorization `x ∈ x₁∘x₂` with both factors nonunit.
    /// Only defined for nonzero nonunits.
    pub fn is_irreducible(&self, x: usize) -> Option<bool> {
        if x == self.zero || self.is_unit(x) {
            return None;
        }
        let nonunits = self.nonunits();
        for a in nonunits.iter() {
            for b in nonunits.iter() {
                if self.mul(a, b).contains(x) {
                    return Some(false);
                }
            }
        }
        Some(true)
    }

    /// `x₁∘x₂ ⊆ x∘r` forces a factor into some `x∘rᵢ`.
    /// Only defined for nonzero nonunits.
    pub fn is_prime_element(&self, x: usize) -> Option<bool> {
        if x == self.zero || self.is_unit(x) {
            return None;
        }
        let n = self.n;
        let divisible = |y: usize| (0..n).any(|r| self.mul(x, r).contains(y));
        for x1 in 0..n {
            for x2 in 0..n {
                let prod = self.mul(x1, x2);
                for r in 0..n {
                    if prod.is_subset(&self.mul(x, r)) {
                        if !divisible(x1) && !divisible(x2) {
                            return Some(false);
                        }
                        break;
                    }
                }
            }
        }
        Some(true)
    }

    pub fn element_profile(&self, x: usize) -> ElementProfile {
        let u = self.units();
        ElementProfile {
            index: x,
            is_unit: u.units.contains(x),
            is_identity: u.identities.contains(x),
            is_scalar_identity: u.scalar_identities.contains(x),
            is_regular: self.is_regular_element(x),
            is_irreducible: self.is_irreducible(x),
            is_prime_element: self.is_prime_element(x),
            is_nilpotent: self.is_nilpotent(x),
        }
    }

    pub fn to_raw(&self) -> RawHyperring {
        let n = self.n;
        RawHyperring {
            name: self.name.clone(),
            n,
            zero: self.zero,
            add: (0..n)
                .map(|a| (0..n).map(|b| self.add(a, b)).collect())
                .collect(),
            mul: (0..n)
                .map(|a| (0..n).map(|b| self.mul(a, b).to_vec()).collect())
                .collect(),
        }
    }

    /// Canonical single-line JSON emission of the table document.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_raw()).expect("table document serializes")
    }
}

fn check_tables(raw: &RawHyperring) -> Result<(Vec<usize>, Vec<ElemSet>), RingError> {
    if raw.n == 0 {
        return Err(RingError::MalformedTable("carrier must be nonempty".into()));
    }
    if raw.n > VALIDATE_CAP {
        return Err(RingError::CapExceeded(raw.n, VALIDATE_CAP));
    }
    check_tables_shape_only(raw)
}

/// Validate raw tables into a [`FiniteHyperring`].
///
/// Checks, in order: table shape, the abelian-group axioms for `(R, +)`,
/// lifted associativity, the distributive inclusions, and sign
/// compatibility. The first violation is reported with a witness triple
/// (scanned in lexicographic order); strong distributivity is recorded as
/// a flag rather than an error.
pub fn validate_hyperring(raw: &RawHyperring) -> Result<FiniteHyperring, RingError> {
    let n = raw.n;
    let (add, mul) = check_tables(raw)?;
    let at = |a: usize, b: usize| add[a * n + b];

    // Abelian group: identity, commutativity, associativity, inverses.
    let zero = raw.zero;
    for a in 0..n {
        if at(a, zero) != a || at(zero, a) != a {
            return Err(RingError::AxiomViolation {
                axiom: Axiom::AdditiveGroup,
                witness: (a, zero, zero),
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            if at(a, b) != at(b, a) {
                return Err(RingError::AxiomViolation {
                    axiom: Axiom::AdditiveGroup,
                    witness: (a, b, zero),
                });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(RingError::AxiomViolation {
                        axiom: Axiom::AdditiveGroup,
                        witness: (a, b, c),
                    });
                }
            }
        }
    }
    let mut neg = Vec::with_capacity(n);
    for a in 0..n {
        match (0..n).find(|&b| at(a, b) == zero) {
            Some(b) => neg.push(b),
            None => {
                return Err(RingError::AxiomViolation {
                    axiom: Axiom::AdditiveGroup,
                    witness: (a, a, zero),
                })
            }
        }
    }

    let ring = FiniteHyperring {
        name: raw.name.clone(),
        n,
        zero,
        add,
        neg,
        mul,
        strongly_distributive: false,
        units_cache: OnceLock::new(),
        ideal_cache: OnceLock::new(),
        prime_cache: OnceLock::new(),
        class_c_cache: OnceLock::new(),
        radical_zero_cache: OnceLock::new(),
    };

    // Axiom (i): lifted associativity.
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let left = ring.lift(&ElemSet::singleton(a), &ring.mul(b, c));
                let right = ring.lift(&ring.mul(a, b), &ElemSet::singleton(c));
                if left != right {
                    return Err(RingError::AxiomViolation {
                        axiom: Axiom::Associativity,
                        witness: (a, b, c),
                    });
                }
            }
        }
    }

    // Axiom (ii): distributive inclusions, equality tracked for the flag.
    let mut strongly = true;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let bc = ring.add(b, c);
                let left = ring.mul(a, bc);
                let rhs = ring.set_add(&ring.mul(a, b), &ring.mul(a, c));
                if !left.is_subset(&rhs) {
                    return Err(RingError::AxiomViolation {
                        axiom: Axiom::Distributivity,
                        witness: (a, b, c),
                    });
                }
                if left != rhs {
                    strongly = false;
                }
                let left2 = ring.mul(bc, a);
                let rhs2 = ring.set_add(&ring.mul(b, a), &ring.mul(c, a));
                if !left2.is_subset(&rhs2) {
                    return Err(RingError::AxiomViolation {
                        axiom: Axiom::Distributivity,
                        witness: (a, b, c),
                    });
                }
                if left2 != rhs2 {
                    strongly = false;
                }
            }
        }
    }

    // Axiom (iii): a∘(−b) = (−a)∘b = −(a∘b).
    for a in 0..n {
        for b in 0..n {
            let expect = ring.set_neg(&ring.mul(a, b));
            if ring.mul(a, ring.neg(b)) != expect || ring.mul(ring.neg(a), b) != expect {
                return Err(RingError::AxiomViolation {
                    axiom: Axiom::SignCompatibility,
                    witness: (a, b, zero),
                });
            }
        }
    }

    let mut ring = ring;
    ring.strongly_distributive = strongly;
    Ok(ring)
}

pub fn validate_from_json(doc: &str) -> Result<FiniteHyperring, RingError> {
    let raw: RawHyperring = serde_json::from_str(doc)
        .map_err(|e| RingError::MalformedTable(format!("json: {e}")))?;
    validate_hyperring(&raw)
}

/// Number of deterministic sample triples used when a carrier is too
/// large for the full axiom scan.
pub const SAMPLED_VALIDATION_TRIPLES: usize = 4096;

/// Full validation up to [`VALIDATE_CAP`], deterministic sampled
/// validation beyond it (hypermatrix carriers reach 256). Returns the
/// ring and whether sampling was used.
pub fn validate_from_json_auto(doc: &str) -> Result<(FiniteHyperring, bool), RingError> {
    let raw: RawHyperring = serde_json::from_str(doc)
        .map_err(|e| RingError::MalformedTable(format!("json: {e}")))?;
    if raw.n <= VALIDATE_CAP {
        Ok((validate_hyperring(&raw)?, false))
    } else {
        Ok((validate_hyperring_sampled(&raw, SAMPLED_VALIDATION_TRIPLES)?, true))
    }
}

/// Validate with deterministically sampled axiom triples instead of the
/// full `n³` scan. Used for hypermatrix carriers (up to 256 elements)
/// where exhaustive validation is infeasible. Additive identity,
/// commutativity, and inverses are still checked in full.
pub fn validate_hyperring_sampled(
    raw: &RawHyperring,
    samples: usize,
) -> Result<FiniteHyperring, RingError> {
    let n = raw.n;
    if n == 0 {
        return Err(RingError::MalformedTable("carrier must be nonempty".into()));
    }
    if n > ElemSet::CAPACITY {
        return Err(RingError::CapExceeded(n, ElemSet::CAPACITY));
    }
    let (add, mul) = check_tables_shape_only(raw)?;
    let at = |a: usize, b: usize| add[a * n + b];
    let zero = raw.zero;
    for a in 0..n {
        if at(a, zero) != a || at(zero, a) != a {
            return Err(RingError::AxiomViolation {
                axiom: Axiom::AdditiveGroup,
                witness: (a, zero, zero),
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            if at(a, b) != at(b, a) {
                return Err(RingError::AxiomViolation {
                    axiom: Axiom::AdditiveGroup,
                    witness: (a, b, zero),
                });
            }
        }
    }
    let mut neg = Vec::with_capacity(n);
    for a in 0..n {
        match (0..n).find(|&b| at(a, b) == zero) {
            Some(b) => neg.push(b),
            None => {
                return Err(RingError::AxiomViolation {
                    axiom: Axiom::AdditiveGroup,
                    witness: (a, a, zero),
                })
            }
        }
    }

    let mut ring = FiniteHyperring {
        name: raw.name.clone(),
        n,
        zero,
        add,
        neg,
        mul,
        strongly_distributive: false,
        units_cache: OnceLock::new(),
        ideal_cache: OnceLock::new(),
        prime_cache: OnceLock::new(),
        class_c_cache: OnceLock::new(),
        radical_zero_cache: OnceLock::new(),
    };

    // Fixed-seed linear congruential sequence: same triples every run.
    let mut state = 0x2545f4914f6cdd1du64;
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) as usize % n
    };
    let mut strongly = true;
    for _ in 0..samples {
        let (a, b, c) = (next(), next(), next());
        let at = |x: usize, y: usize| ring.add(x, y);
        if at(at(a, b), c) != at(a, at(b, c)) {
            return Err(RingError::AxiomViolation {
                axiom: Axiom::AdditiveGroup,
                witness: (a, b, c),
            });
        }
        let left = ring.lift(&ElemSet::singleton(a), &ring.mul(b, c));
        let right = ring.lift(&ring.mul(a, b), &ElemSet::singleton(c));
        if left != right {
            return Err(RingError::AxiomViolation {
                axiom: Axiom::Associativity,
                witness: (a, b, c),
            });
        }
        let bc = ring.add(b, c);
        let lhs = ring.mul(a, bc);
        let rhs = ring.set_add(&ring.mul(a, b), &ring.mul(a, c));
        if !lhs.is_subset(&rhs) {
            return Err(RingError::AxiomViolation {
                axiom: Axiom::Distributivity,
                witness: (a, b, c),
            });
        }
        if lhs != rhs {
            strongly = false;
        }
        let expect = ring.set_neg(&ring.mul(a, b));
        if ring.mul(a, ring.neg(b)) != expect || ring.mul(ring.neg(a), b) != expect {
            return Err(RingError::AxiomViolation {
                axiom: Axiom::SignCompatibility,
                witness: (a, b, zero),
            });
        }
    }
    ring.strongly_distributive = strongly;
    Ok(ring)
}

fn check_tables_shape_only(raw: &RawHyperring) -> Result<(Vec<usize>, Vec<ElemSet>), RingError> {
    let n = raw.n;
    if raw.zero >= n {
        return Err(RingError::MalformedTable(format!(
            "zero index {} out of range for n={}",
            raw.zero, n
        )));
    }
    if raw.add.len() != n || raw.add.iter().any(|row| row.len() != n) {
        return Err(RingError::MalformedTable("add table is not n×n".into()));
    }
    if raw.mul.len() != n || raw.mul.iter().any(|row| row.len() != n) {
        return Err(RingError::MalformedTable("mul table is not n×n".into()));
    }
    let mut add = Vec::with_capacity(n * n);
    for row in &raw.add {
        for &v in row {
            if v >= n {
                return Err(RingError::MalformedTable(format!(
                    "add entry {v} out of range"
                )));
            }
            add.push(v);
        }
    }
    let mut mul = Vec::with_capacity(n * n);
    for (a, row) in raw.mul.iter().enumerate() {
        for (b, cell) in row.iter().enumerate() {
            if cell.is_empty() {
                return Err(RingError::MalformedTable(format!(
                    "mul cell ({a},{b}) is empty"
                )));
            }
            let mut set = ElemSet::EMPTY;
            let mut prev: Option<usize> = None;
            for &v in cell {
                if v >= n {
                    return Err(RingError::MalformedTable(format!(
                        "mul entry {v} at ({a},{b}) out of range"
                    )));
                }
                if prev.is_some_and(|p| p >= v) {
                    return Err(RingError::MalformedTable(format!(
                        "mul cell ({a},{b}) is not a strictly increasing list"
                    )));
                }
                prev = Some(v);
                set.insert(v);
            }
            mul.push(set);
        }
    }
    Ok((add, mul))
}

/// Shared handle used throughout the engine.
pub type Ring = Arc<FiniteHyperring>;
