//! Hyperideal classification: prime, primary, maximal, the 1-absorbing
//! family (prime / primary / strongly primary / weakly primary), the
//! 2-absorbing pair, and 1-triple-zero search.
//!
//! Witnesses are always the lexicographically least violating tuple, and
//! re-evaluating the defining condition on a witness reproduces the
//! violation (see [`replay_witness`]).

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::ideal::{
    self, is_c_hyperideal, maximal_hyperideals, radical, radical_zero, IdealError,
};
use crate::ring::FiniteHyperring;
use crate::set::ElemSet;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("ideal is not proper")]
    NotProper,
    #[error("subset is not a hyperideal")]
    NotHyperideal,
    #[error("ideal is not weakly 1-absorbing primary")]
    NotWeakly,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// The classes a witness can refute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum IdealClass {
    Prime,
    Primary,
    OneAbsPrime,
    OneAbsPrimary,
    StronglyOneAbsPrimary,
    WeaklyOneAbsPrimary,
    TwoAbsorbing,
    TwoAbsorbingPrimary,
}

impl IdealClass {
    pub fn name(&self) -> &'static str {
        match self {
            IdealClass::Prime => "prime",
            IdealClass::Primary => "primary",
            IdealClass::OneAbsPrime => "one_abs_prime",
            IdealClass::OneAbsPrimary => "one_abs_primary",
            IdealClass::StronglyOneAbsPrimary => "strongly_one_abs_primary",
            IdealClass::WeaklyOneAbsPrimary => "weakly_one_abs_primary",
            IdealClass::TwoAbsorbing => "two_absorbing",
            IdealClass::TwoAbsorbingPrimary => "two_absorbing_primary",
        }
    }
}

/// Full class-membership vector for one hyperideal, with a witness tuple
/// for every class that fails. Serializes with sorted keys.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassificationReport {
    pub ideal: String,
    pub is_c_hyperideal: bool,
    pub maximal: bool,
    pub one_abs_primary: bool,
    pub one_abs_prime: bool,
    /// `√I` as a csv string when `√I` is prime (the "P" of a P-classed
    /// ideal); `None` otherwise.
    pub p: Option<String>,
    pub prime: bool,
    pub primary: bool,
    pub proper: bool,
    pub strongly_one_abs_primary: bool,
    pub two_absorbing: bool,
    pub two_absorbing_primary: bool,
    pub weakly_one_abs_primary: bool,
    /// True when no triple ever satisfied the weakly guard
    /// `0 ∉ x∘y∘z ⊆ I`.
    pub weakly_vacuous: bool,
    /// Class name → lexicographically least violating tuple.
    pub witnesses: BTreeMap<String, Vec<usize>>,
}

/// Shared per-ideal context so each predicate scans once.
struct Ctx<'r> {
    ring: &'r FiniteHyperring,
    ideal: ElemSet,
    rad: ElemSet,
    rad_zero: ElemSet,
    nonunits: ElemSet,
}

impl<'r> Ctx<'r> {
    fn new(ring: &'r FiniteHyperring, ideal: &ElemSet) -> Result<Ctx<'r>, ClassifyError> {
        if !ideal::is_hyperideal(ring, ideal) {
            return Err(ClassifyError::NotHyperideal);
        }
        if *ideal == ring.carrier() {
            return Err(ClassifyError::NotProper);
        }
        Ok(Ctx {
            ring,
            ideal: *ideal,
            rad: radical(ring, ideal)?,
            rad_zero: radical_zero(ring)?,
            nonunits: ring.nonunits(),
        })
    }
}

/// `x∘y ⊆ I ⇒ x ∈ I ∨ y ∈ I`, all elements. Returns the first violating
/// pair.
pub fn prime_violation(ring: &FiniteHyperring, ideal: &ElemSet) -> Option<(usize, usize)> {
    for x in 0..ring.n {
        for y in 0..ring.n {
            if ring.mul(x, y).is_subset(ideal) && !ideal.contains(x) && !ideal.contains(y) {
                return Some((x, y));
            }
        }
    }
    None
}

fn primary_violation(ctx: &Ctx) -> Option<(usize, usize)> {
    let r = ctx.ring;
    for x in 0..r.n {
        for y in 0..r.n {
            if r.mul(x, y).is_subset(&ctx.ideal)
                && !ctx.ideal.contains(x)
                && !ctx.rad.contains(y)
            {
                return Some((x, y));
            }
        }
    }
    None
}

/// Violations of the 1-absorbing family share one scan shape: nonunit
/// triples with `x∘y∘z ⊆ I` (plus the weakly guard), failing both escape
/// clauses. `z_target` is `I`, `√I`, or `√0`.
fn one_abs_violation(
    ctx: &Ctx,
    z_target: &ElemSet,
    weakly_guard: bool,
) -> (Option<(usize, usize, usize)>, bool) {
    let r = ctx.ring;
    let mut fired = false;
    let mut witness = None;
    'scan: for x in ctx.nonunits.iter() {
        for y in ctx.nonunits.iter() {
            let xy = r.mul(x, y);
            let xy_in = xy.is_subset(&ctx.ideal);
            for z in ctx.nonunits.iter() {
                let xyz = r.lift(&xy, &ElemSet::singleton(z));
                if !xyz.is_subset(&ctx.ideal) {
                    continue;
                }
                if weakly_guard && xyz.contains(r.zero) {
                    continue;
                }
                fired = true;
                if !xy_in && !z_target.contains(z) {
                    witness = Some((x, y, z));
                    break 'scan;
                }
            }
        }
    }
    (witness, fired)
}

fn two_abs_violation(ctx: &Ctx, primary_variant: bool) -> Option<(usize, usize, usize)> {
    let r = ctx.ring;
    let target = if primary_variant { &ctx.rad } else { &ctx.ideal };
    for x in 0..r.n {
        for y in 0..r.n {
            let xy = r.mul(x, y);
            let xy_in = xy.is_subset(&ctx.ideal);
            for z in 0..r.n {
                let xyz = r.lift(&xy, &ElemSet::singleton(z));
                if !xyz.is_subset(&ctx.ideal) {
                    continue;
                }
                if xy_in
                    || r.mul(x, z).is_subset(target)
                    || r.mul(y, z).is_subset(target)
                {
                    continue;
                }
                return Some((x, y, z));
            }
        }
    }
    None
}

macro_rules! predicate {
    ($name:ident, $doc:literal, |$ctx:ident| $body:expr) => {
        #[doc = $doc]
        pub fn $name(
            ring: &FiniteHyperring,
            ideal: &ElemSet,
        ) -> Result<Result<(), Vec<usize>>, ClassifyError> {
            let $ctx = Ctx::new(ring, ideal)?;
            Ok($body)
        }
    };
}

fn to_witness2(v: Option<(usize, usize)>) -> Result<(), Vec<usize>> {
    match v {
        None => Ok(()),
        Some((x, y)) => Err(vec![x, y]),
    }
}

fn to_witness3(v: Option<(usize, usize, usize)>) -> Result<(), Vec<usize>> {
    match v {
        None => Ok(()),
        Some((x, y, z)) => Err(vec![x, y, z]),
    }
}

predicate!(is_prime, "Prime: `x∘y ⊆ I ⇒ x ∈ I ∨ y ∈ I`.", |ctx| {
    to_witness2(prime_violation(ctx.ring, &ctx.ideal))
});

predicate!(is_primary, "Primary: `x∘y ⊆ I ⇒ x ∈ I ∨ y ∈ √I`.", |ctx| {
    to_witness2(primary_violation(&ctx))
});

predicate!(
    is_one_absorbing_prime,
    "1-absorbing prime: nonunit `x∘y∘z ⊆ I ⇒ x∘y ⊆ I ∨ z ∈ I`.",
    |ctx| to_witness3(one_abs_violation(&ctx, &ctx.ideal, false).0)
);

predicate!(
    is_one_absorbing_primary,
    "1-absorbing primary: nonunit `x∘y∘z ⊆ I ⇒ x∘y ⊆ I ∨ z ∈ √I`.",
    |ctx| to_witness3(one_abs_violation(&ctx, &ctx.rad, false).0)
);

predicate!(
    is_strongly_one_absorbing_primary,
    "Strongly 1-absorbing primary: nonunit `x∘y∘z ⊆ I ⇒ x∘y ⊆ I ∨ z ∈ √0`.",
    |ctx| to_witness3(one_abs_violation(&ctx, &ctx.rad_zero, false).0)
);

predicate!(
    is_weakly_one_absorbing_primary,
    "Weakly 1-absorbing primary: nonunit `0 ∉ x∘y∘z ⊆ I ⇒ x∘y ⊆ I ∨ z ∈ √I`.",
    |ctx| to_witness3(one_abs_violation(&ctx, &ctx.rad, true).0)
);

predicate!(
    is_two_absorbing,
    "2-absorbing: `x∘y∘z ⊆ I ⇒ x∘y ⊆ I ∨ x∘z ⊆ I ∨ y∘z ⊆ I`, all elements.",
    |ctx| to_witness3(two_abs_violation(&ctx, false))
);

predicate!(
    is_two_absorbing_primary,
    "2-absorbing primary: `x∘y∘z ⊆ I ⇒ x∘y ⊆ I ∨ x∘z ⊆ √I ∨ y∘z ⊆ √I`.",
    |ctx| to_witness3(two_abs_violation(&ctx, true))
);

/// Maximality inside the enumerated lattice.
pub fn is_maximal(ring: &FiniteHyperring, ideal: &ElemSet) -> Result<bool, ClassifyError> {
    if *ideal == ring.carrier() {
        return Err(ClassifyError::NotProper);
    }
    Ok(maximal_hyperideals(ring)?
        .iter()
        .any(|m| m.members == *ideal))
}

/// A nonunit triple with `x∘y∘z = {0}`, `x∘y ⊄ I`, `z ∉ √I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TripleZero {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// All 1-triple-zeros of a weakly 1-absorbing primary ideal, in
/// lexicographic order.
pub fn find_one_triple_zeros(
    ring: &FiniteHyperring,
    ideal: &ElemSet,
) -> Result<Vec<TripleZero>, ClassifyError> {
    if is_weakly_one_absorbing_primary(ring, ideal)?.is_err() {
        return Err(ClassifyError::NotWeakly);
    }
    triple_zeros_unchecked(ring, ideal)
}

pub(crate) fn triple_zeros_unchecked(
    ring: &FiniteHyperring,
    ideal: &ElemSet,
) -> Result<Vec<TripleZero>, ClassifyError> {
    let rad = radical(ring, ideal)?;
    let zero = ElemSet::singleton(ring.zero);
    let nonunits = ring.nonunits();
    let mut out = Vec::new();
    for x in nonunits.iter() {
        for y in nonunits.iter() {
            let xy = ring.mul(x, y);
            if xy.is_subset(ideal) {
                continue;
            }
            for z in nonunits.iter() {
                if rad.contains(z) {
                    continue;
                }
                if ring.lift(&xy, &ElemSet::singleton(z)) == zero {
                    out.push(TripleZero { x, y, z });
                }
            }
        }
    }
    Ok(out)
}

/// `I` is a free 1-triple-zero with respect to `J∘H∘K` when no element
/// triple from `J×H×K` is a 1-triple-zero of `I`. Requires `I` weakly
/// 1-absorbing primary and `J∘H∘K ⊆ I` elementwise.
pub fn is_free_one_triple_zero(
    ring: &FiniteHyperring,
    ideal: &ElemSet,
    j: &ElemSet,
    h: &ElemSet,
    k: &ElemSet,
) -> Result<bool, ClassifyError> {
    if is_weakly_one_absorbing_primary(ring, ideal)?.is_err() {
        return Err(ClassifyError::PreconditionFailed(
            "ideal is not weakly 1-absorbing primary".into(),
        ));
    }
    for a in j.iter() {
        for b in h.iter() {
            for c in k.iter() {
                if !ring.triple(a, b, c).is_subset(ideal) {
                    return Err(ClassifyError::PreconditionFailed(
                        "J∘H∘K is not contained in the ideal".into(),
                    ));
                }
            }
        }
    }
    let zeros = triple_zeros_unchecked(ring, ideal)?;
    Ok(!zeros
        .iter()
        .any(|t| j.contains(t.x) && h.contains(t.y) && k.contains(t.z)))
}

/// Classify one proper hyperideal completely.
pub fn classify(ring: &FiniteHyperring, ideal: &ElemSet) -> Result<ClassificationReport, ClassifyError> {
    let ctx = Ctx::new(ring, ideal)?;
    let mut witnesses = BTreeMap::new();
    let mut note = |class: IdealClass, w: &Result<(), Vec<usize>>| -> bool {
        match w {
            Ok(()) => true,
            Err(tuple) => {
                witnesses.insert(class.name().to_string(), tuple.clone());
                false
            }
        }
    };

    let prime = note(IdealClass::Prime, &to_witness2(prime_violation(ring, ideal)));
    let primary = note(IdealClass::Primary, &to_witness2(primary_violation(&ctx)));
    let one_abs_prime = note(
        IdealClass::OneAbsPrime,
        &to_witness3(one_abs_violation(&ctx, &ctx.ideal, false).0),
    );
    let one_abs_primary = note(
        IdealClass::OneAbsPrimary,
        &to_witness3(one_abs_violation(&ctx, &ctx.rad, false).0),
    );
    let strongly = note(
        IdealClass::StronglyOneAbsPrimary,
        &to_witness3(one_abs_violation(&ctx, &ctx.rad_zero, false).0),
    );
    let (weak_wit, weak_fired) = one_abs_violation(&ctx, &ctx.rad, true);
    let weakly = note(IdealClass::WeaklyOneAbsPrimary, &to_witness3(weak_wit));
    let two_abs = note(IdealClass::TwoAbsorbing, &to_witness3(two_abs_violation(&ctx, false)));
    let two_abs_primary = note(
        IdealClass::TwoAbsorbingPrimary,
        &to_witness3(two_abs_violation(&ctx, true)),
    );

    Ok(ClassificationReport {
        ideal: ideal.csv(),
        is_c_hyperideal: is_c_hyperideal(ring, ideal),
        maximal: is_maximal(ring, ideal)?,
        one_abs_primary,
        one_abs_prime,
        p: ideal::is_prime_set(ring, &ctx.rad).then(|| ctx.rad.csv()),
        prime,
        primary,
        proper: true,
        strongly_one_abs_primary: strongly,
        two_absorbing: two_abs,
        two_absorbing_primary: two_abs_primary,
        weakly_one_abs_primary: weakly,
        weakly_vacuous: !weak_fired,
        witnesses,
    })
}

/// Re-evaluate the defining condition of `class` on a previously returned
/// witness tuple; `true` means the violation reproduces.
pub fn replay_witness(
    ring: &FiniteHyperring,
    ideal: &ElemSet,
    class: IdealClass,
    w: &[usize],
) -> Result<bool, ClassifyError> {
    let ctx = Ctx::new(ring, ideal)?;
    let in_i = |s: &ElemSet| s.is_subset(&ctx.ideal);
    Ok(match (class, w) {
        (IdealClass::Prime, [x, y]) => {
            in_i(&ring.mul(*x, *y)) && !ideal.contains(*x) && !ideal.contains(*y)
        }
        (IdealClass::Primary, [x, y]) => {
            in_i(&ring.mul(*x, *y)) && !ideal.contains(*x) && !ctx.rad.contains(*y)
        }
        (IdealClass::OneAbsPrime, [x, y, z]) => {
            let xyz = ring.triple(*x, *y, *z);
            [*x, *y, *z].iter().all(|&e| ctx.nonunits.contains(e))
                && in_i(&xyz)
                && !in_i(&ring.mul(*x, *y))
                && !ideal.contains(*z)
        }
        (IdealClass::OneAbsPrimary, [x, y, z]) => {
            let xyz = ring.triple(*x, *y, *z);
            [*x, *y, *z].iter().all(|&e| ctx.nonunits.contains(e))
                && in_i(&xyz)
                && !in_i(&ring.mul(*x, *y))
                && !ctx.rad.contains(*z)
        }
        (IdealClass::StronglyOneAbsPrimary, [x, y, z]) => {
            let xyz = ring.triple(*x, *y, *z);
            [*x, *y, *z].iter().all(|&e| ctx.nonunits.contains(e))
                && in_i(&xyz)
                && !in_i(&ring.mul(*x, *y))
                && !ctx.rad_zero.contains(*z)
        }
        (IdealClass::WeaklyOneAbsPrimary, [x, y, z]) => {
            let xyz = ring.triple(*x, *y, *z);
            [*x, *y, *z].iter().all(|&e| ctx.nonunits.contains(e))
                && in_i(&xyz)
                && !xyz.contains(ring.zero)
                && !in_i(&ring.mul(*x, *y))
                && !ctx.rad.contains(*z)
        }
        (IdealClass::TwoAbsorbing, [x, y, z]) => {
            in_i(&ring.triple(*x, *y, *z))
                && !in_i(&ring.mul(*x, *y))
                && !in_i(&ring.mul(*x, *z))
                && !in_i(&ring.mul(*y, *z))
        }
        (IdealClass::TwoAbsorbingPrimary, [x, y, z]) => {
            in_i(&ring.triple(*x, *y, *z))
                && !in_i(&ring.mul(*x, *y))
                && !ring.mul(*x, *z).is_subset(&ctx.rad)
                && !ring.mul(*y, *z).is_subset(&ctx.rad)
        }
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{product_ring, z4h, zn_template};
    use crate::ideal::{enumerate_hyperideals, proper_hyperideals};

    #[test]
    fn z4h_maximal_ideal_is_everything_good() {
        let r = z4h();
        let m = ElemSet::from_indices([0, 2]);
        let rep = classify(&r, &m).unwrap();
        assert!(rep.prime);
        assert!(rep.primary);
        assert!(rep.maximal);
        assert!(rep.one_abs_prime);
        assert!(rep.one_abs_primary);
        assert!(rep.strongly_one_abs_primary);
        assert!(rep.weakly_one_abs_primary);
        assert!(rep.two_absorbing);
        assert!(rep.two_absorbing_primary);
        assert!(!rep.is_c_hyperideal);
        assert_eq!(rep.p.as_deref(), Some("0,2"));
        assert!(rep.witnesses.is_empty());
    }

    #[test]
    fn z4h_zero_ideal() {
        let r = z4h();
        let zero = ElemSet::singleton(0);
        let rep = classify(&r, &zero).unwrap();
        assert!(!rep.prime);
        assert_eq!(rep.witnesses["prime"], vec![2, 2]);
        // 2∘2 = {0} but 2 ∈ √{0} = {0,2}.
        assert!(rep.primary);
        assert!(rep.one_abs_prime);
        assert!(rep.strongly_one_abs_primary);
        // Every subset of {0} contains zero, so the weakly guard never fires.
        assert!(rep.weakly_one_abs_primary);
        assert!(rep.weakly_vacuous);
    }

    #[test]
    fn not_proper_is_an_error() {
        let r = z4h();
        assert_eq!(
            classify(&r, &ElemSet::full(4)).unwrap_err(),
            ClassifyError::NotProper
        );
        assert_eq!(
            classify(&r, &ElemSet::from_indices([0, 1])).unwrap_err(),
            ClassifyError::NotHyperideal
        );
    }

    #[test]
    fn prime_implies_one_abs_prime_on_small_rings() {
        for ring in [z4h(), zn_template(6, &[2, 3]).unwrap(), zn_template(10, &[2]).unwrap()] {
            for i in proper_hyperideals(&ring).unwrap() {
                let rep = classify(&ring, &i.members).unwrap();
                if rep.prime {
                    assert!(rep.one_abs_prime, "{} {}", ring.name, rep.ideal);
                }
                if rep.one_abs_prime {
                    assert!(rep.two_absorbing, "{} {}", ring.name, rep.ideal);
                }
            }
        }
    }

    #[test]
    fn z10a_principal_prime_surrogate() {
        let z10a = zn_template(10, &[2, 3]).unwrap();
        let i = ElemSet::from_indices([0, 5]);
        let rep = classify(&z10a, &i).unwrap();
        assert!(rep.one_abs_prime);
        assert!(rep.prime);
    }

    #[test]
    fn z6a_fixture_verdicts() {
        let z6a = zn_template(6, &[2, 3]).unwrap();
        let rep = classify(&z6a, &ElemSet::from_indices([0, 3])).unwrap();
        // All products land in {0,…}∪(3xy, 4xy mod 6); scan decides.
        assert!(rep.primary);
        assert!(rep.one_abs_primary);
        // Triple products always contain 0 here, so weakly is vacuous.
        assert!(rep.weakly_one_abs_primary && rep.weakly_vacuous);
        let rep0 = classify(&z6a, &ElemSet::singleton(0)).unwrap();
        assert!(!rep0.one_abs_primary);
        assert_eq!(rep0.witnesses["one_abs_primary"], vec![1, 2, 3]);
    }

    #[test]
    fn z30_surrogate_generated_ideal() {
        let r = zn_template(30, &[2, 4]).unwrap();
        let i = crate::ideal::generate_hyperideal(&r, &ElemSet::singleton(15)).members;
        assert_eq!(i, ElemSet::from_indices([0, 15]));
        let rep = classify(&r, &i).unwrap();
        assert!(rep.weakly_one_abs_primary);
        assert!(rep.weakly_vacuous);
        assert!(!rep.one_abs_primary);
        assert_eq!(rep.witnesses["one_abs_primary"], vec![1, 3, 5]);
    }

    #[test]
    fn product_ring_has_no_strongly_ideal() {
        let prod = product_ring(&z4h(), &z4h()).unwrap();
        for i in proper_hyperideals(&prod).unwrap() {
            let rep = classify(&prod, &i.members).unwrap();
            assert!(!rep.strongly_one_abs_primary, "ideal {}", rep.ideal);
        }
    }

    #[test]
    fn witnesses_replay() {
        for ring in [z4h(), zn_template(10, &[2]).unwrap(), zn_template(6, &[3]).unwrap()] {
            for i in proper_hyperideals(&ring).unwrap() {
                let rep = classify(&ring, &i.members).unwrap();
                for (class_name, tuple) in &rep.witnesses {
                    let class = [
                        IdealClass::Prime,
                        IdealClass::Primary,
                        IdealClass::OneAbsPrime,
                        IdealClass::OneAbsPrimary,
                        IdealClass::StronglyOneAbsPrimary,
                        IdealClass::WeaklyOneAbsPrimary,
                        IdealClass::TwoAbsorbing,
                        IdealClass::TwoAbsorbingPrimary,
                    ]
                    .into_iter()
                    .find(|c| c.name() == class_name)
                    .unwrap();
                    assert!(
                        replay_witness(&ring, &i.members, class, tuple).unwrap(),
                        "{} {} {:?}",
                        ring.name,
                        class_name,
                        tuple
                    );
                }
            }
        }
    }

    #[test]
    fn triple_zero_search() {
        let prod = product_ring(&z4h(), &z4h()).unwrap();
        let zero = ElemSet::singleton(0);
        let zeros = find_one_triple_zeros(&prod, &zero).unwrap();
        assert!(!zeros.is_empty());
        // Witness triple for a free check: the zero ideal of Z4H has none.
        let r = z4h();
        assert!(find_one_triple_zeros(&r, &ElemSet::singleton(0))
            .unwrap()
            .is_empty());
        let m = ElemSet::from_indices([0, 2]);
        assert!(is_free_one_triple_zero(&r, &m, &m, &m, &m).unwrap());
    }

    #[test]
    fn free_triple_zero_precondition() {
        let r = z4h();
        let m = ElemSet::from_indices([0, 2]);
        let full = ElemSet::full(4);
        // 1∘1∘1 = Z4 ⊄ {0,2}: containment precondition fails.
        assert!(matches!(
            is_free_one_triple_zero(&r, &m, &full, &full, &full),
            Err(ClassifyError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn triple_zero_inside_an_ideal_triple() {
        // In ordinary Z6, (2,2,3) is a 1-triple-zero of the zero ideal:
        // 2·2·3 ≡ 0, {4} ⊄ {0}, and 3 is outside √{0} = {0}. It sits
        // inside <2>∘<2>∘<3> ⊆ {0}, so the freeness check must fail.
        let z6 = zn_template(6, &[1]).unwrap();
        let zero = ElemSet::singleton(0);
        let evens = ElemSet::from_indices([0, 2, 4]);
        let threes = ElemSet::from_indices([0, 3]);
        let zeros = find_one_triple_zeros(&z6, &zero).unwrap();
        assert!(zeros.contains(&TripleZero { x: 2, y: 2, z: 3 }));
        assert_eq!(
            is_free_one_triple_zero(&z6, &zero, &evens, &evens, &threes),
            Ok(false)
        );
        // Swapping in a triple without zero-divisor collisions is free.
        assert_eq!(
            is_free_one_triple_zero(&z6, &zero, &zero, &evens, &threes),
            Ok(true)
        );
    }

    #[test]
    fn classification_chains_hold_across_rings() {
        let rings = [
            z4h(),
            zn_template(6, &[2, 3]).unwrap(),
            zn_template(10, &[2, 3]).unwrap(),
            zn_template(12, &[1]).unwrap(),
            zn_template(6, &[3]).unwrap(),
        ];
        for ring in rings {
            for i in proper_hyperideals(&ring).unwrap() {
                let rep = classify(&ring, &i.members).unwrap();
                let chain = [
                    (rep.prime, rep.one_abs_prime),
                    (rep.one_abs_prime, rep.two_absorbing),
                    (rep.primary, rep.one_abs_primary),
                    (rep.one_abs_primary, rep.two_absorbing_primary),
                    (rep.one_abs_prime, rep.one_abs_primary),
                    (rep.strongly_one_abs_primary, rep.one_abs_primary),
                    (rep.one_abs_primary, rep.weakly_one_abs_primary),
                ];
                for (idx, (a, b)) in chain.iter().enumerate() {
                    assert!(!a || *b, "chain {idx} broken: {} {}", ring.name, rep.ideal);
                }
            }
        }
        // enumerate_hyperideals is used transitively; touch it so the
        // import is honest.
        let _ = enumerate_hyperideals(&z4h()).unwrap();
    }
}
