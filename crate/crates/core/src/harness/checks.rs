//! The individual theorem checks.
//!
//! Every check enumerates the objects matching its hypothesis (ideals
//! from enumeration, elements, homomorphisms from the pool), counts the
//! hypothesis-satisfying instances it evaluated, and stops at the first
//! instance whose conclusion fails, recording a witness. Zero instances
//! means the check was vacuous on that ring. Biconditionals are split
//! into separate directed checks (`.fwd`/`.rev`, or a cycle for chains of
//! equivalences) so a failure localizes.

use serde_json::{json, Value};

use crate::classify::{classify, find_one_triple_zeros, ClassificationReport, ClassifyError};
use crate::construct::{hypermatrix_cells, quotient_ring, subhyperring, MATRIX_BASE_CAP};
use crate::gamma::{gamma_star, GAMMA_CAP};
use crate::harness::context::{HarnessError, Mode, RingCtx, SuiteCtx};
use crate::hom::GoodHomomorphism;
use crate::ideal::{
    self, colon_element, colon_set, generate_hyperideal, ideal_power, ideal_product,
    pairwise_products_in,
};
use crate::ring::Ring;
use crate::set::ElemSet;

pub struct CheckResult {
    pub instances: u64,
    pub witness: Option<Value>,
}

pub type CheckFn = fn(&RingCtx, Mode, &SuiteCtx) -> Result<CheckResult, HarnessError>;

pub struct Check {
    pub id: &'static str,
    pub run: CheckFn,
}

/// Instance counter with first-counterexample capture.
struct Scan {
    instances: u64,
    witness: Option<Value>,
}

impl Scan {
    fn new() -> Scan {
        Scan { instances: 0, witness: None }
    }

    /// Record one hypothesis-satisfying instance; returns `true` when the
    /// scan should stop (conclusion failed).
    fn check(&mut self, conclusion: bool, witness: impl FnOnce() -> Value) -> bool {
        self.instances += 1;
        if conclusion {
            false
        } else {
            self.witness = Some(witness());
            true
        }
    }

    fn done(self) -> Result<CheckResult, HarnessError> {
        Ok(CheckResult { instances: self.instances, witness: self.witness })
    }
}

/// Classification for an ideal of `ctx`, from the cache when it is one of
/// the enumerated proper ideals.
fn report_for(ctx: &RingCtx, members: &ElemSet) -> Result<ClassificationReport, HarnessError> {
    if let Some(i) = ctx.info(members) {
        return Ok(i.report.clone());
    }
    Ok(classify(&ctx.ring, members)?)
}

/// Classification in a ring without a prebuilt context. `NotProper`
/// never reaches here; callers guard properness first.
fn report_in(ring: &Ring, members: &ElemSet) -> Result<ClassificationReport, HarnessError> {
    classify(ring, members).map_err(HarnessError::from)
}

/// `x∘y ⊆ target` for all member pairs of two sets.
fn set_pairs_in(r: &Ring, a: &ElemSet, b: &ElemSet, target: &ElemSet) -> bool {
    pairwise_products_in(r, a, b, target)
}

fn union_product(r: &Ring, x: usize, y: usize) -> ElemSet {
    r.mul(x, y)
}

// ---------------------------------------------------------------------
// Section 3: 1-absorbing prime hyperideals
// ---------------------------------------------------------------------

/// 1-absorbing prime `I` forces `√I` prime and `(I:z)` prime for every
/// nonunit `z ∉ I`.
fn t3_radical(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let mut scan = Scan::new();
    for i in ctx.ideals(mode) {
        if !i.report.one_abs_prime {
            continue;
        }
        let rad_prime = ideal::is_prime_set(&ctx.ring, &i.radical);
        let mut bad_colon: Option<(usize, ElemSet)> = None;
        for z in ctx.nonunits().difference(&i.members).iter() {
            let col = colon_element(&ctx.ring, &i.members, z).members;
            if !ideal::is_prime_set(&ctx.ring, &col) {
                bad_colon = Some((z, col));
                break;
            }
        }
        let concl = rad_prime && bad_colon.is_none();
        if scan.check(concl, || {
            json!({
                "ideal": i.csv(),
                "radical": i.radical.csv(),
                "radical_prime": rad_prime,
                "colon": bad_colon.as_ref().map(|(z, col)| json!({"z": z, "set": col.csv()})),
            })
        }) {
            break;
        }
    }
    scan.done()
}

/// If `u + v` is a unit for every nonunit `u` and unit `v`, the ring is
/// local. Vacuous when no such pair exists.
fn t3_locallem(ctx: &RingCtx, _mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let units = ctx.ring.units().units;
    let nonunits = ctx.nonunits();
    let mut pairs = 0u64;
    let mut all_unit = true;
    for u in nonunits.iter() {
        for v in units.iter() {
            pairs += 1;
            if !units.contains(ctx.ring.add(u, v)) {
                all_unit = false;
            }
        }
    }
    let mut scan = Scan::new();
    if pairs > 0 && all_unit {
        scan.check(ctx.flags.local, || {
            json!({"maximal_ideals": ctx.maximals.iter().map(|m| m.csv()).collect::<Vec<_>>()})
        });
    }
    scan.done()
}

/// 1-absorbing prime but not prime forces the ring local.
fn t3_notprime(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let mut scan = Scan::new();
    for i in ctx.ideals(mode) {
        if !(i.report.one_abs_prime && !i.report.prime) {
            continue;
        }
        if scan.check(ctx.flags.local, || {
            json!({
                "ideal": i.csv(),
                "maximal_ideals": ctx.maximals.iter().map(|m| m.csv()).collect::<Vec<_>>(),
            })
        }) {
            break;
        }
    }
    scan.done()
}

/// `x∘y∘J ⊆ I` for 1-absorbing prime `I` forces `x∘y ⊆ I` or `J ⊆ I`.
fn t3_xyj(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let r = &ctx.ring;
    let nonunits = ctx.nonunits();
    let mut scan = Scan::new();
    'outer: for i in ctx.ideals(mode) {
        if !i.report.one_abs_prime {
            continue;
        }
        let masks = ctx.pair_targets(&i.members);
        for x in nonunits.iter() {
            for y in nonunits.iter() {
                let xy_in = union_product(r, x, y).is_subset(&i.members);
                let mask = &masks[x * r.n + y];
                for j in ctx.ideals(mode) {
                    if !j.members.is_subset(mask) {
                        continue;
                    }
                    let concl = xy_in || j.members.is_subset(&i.members);
                    if scan.check(concl, || {
                        json!({"ideal": i.csv(), "x": x, "y": y, "J": j.csv()})
                    }) {
                        break 'outer;
                    }
                }
            }
        }
    }
    scan.done()
}

/// A primary ideal with prime radical `P` and `(P²:c) ⊆ I` for every
/// `c ∈ P − I` is 1-absorbing prime.
fn t3_p2c(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let r = &ctx.ring;
    let mut scan = Scan::new();
    for i in ctx.ideals(mode) {
        if !i.report.primary || !ctx.is_prime(&i.radical) {
            continue;
        }
        let p2 = ideal_power(r, &i.radical, 2).members;
        let hypothesis = i
            .radical
            .difference(&i.members)
            .iter()
            .all(|c| colon_element(r, &p2, c).members.is_subset(&i.members));
        if !hypothesis {
            continue;
        }
        if scan.check(i.report.one_abs_prime, || {
            json!({
                "ideal": i.csv(),
                "P": i.radical.csv(),
                "witness": i.report.witnesses.get("one_abs_prime"),
            })
        }) {
            break;
        }
    }
    scan.done()
}

type Mat = [usize; 4];

fn cartesian(cells: &[ElemSet; 4]) -> Vec<Mat> {
    let mut out = Vec::new();
    for a in cells[0].iter() {
        for b in cells[1].iter() {
            for c in cells[2].iter() {
                for d in cells[3].iter() {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn matset_lift(r: &Ring, s: &[Mat], b: Mat) -> Vec<Mat> {
    let mut out = Vec::new();
    for m in s {
        out.extend(cartesian(&hypermatrix_cells(r, *m, b)));
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn matset_in(s: &[Mat], ideal: &ElemSet) -> bool {
    s.iter().all(|m| m.iter().all(|&e| ideal.contains(e)))
}

/// If the 2×2 hypermatrix ideal over `I` satisfies the 1-absorbing
/// condition on diagonal embeddings, `I` is 1-absorbing prime. Runs on
/// rings with a scalar identity, small enough for the matrix carrier.
fn t3_matrix(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let r = &ctx.ring;
    if r.units().scalar_identities.is_empty() || r.n > MATRIX_BASE_CAP {
        return Scan::new().done();
    }
    let embed = |x: usize| -> Mat { [x, r.zero, r.zero, r.zero] };
    let mut scan = Scan::new();
    for i in ctx.ideals(mode) {
        let mut diag_one_abs = true;
        'triples: for x in 0..r.n {
            for y in 0..r.n {
                let exy = cartesian(&hypermatrix_cells(r, embed(x), embed(y)));
                for z in 0..r.n {
                    let exyz = matset_lift(r, &exy, embed(z));
                    if !matset_in(&exyz, &i.members) {
                        continue;
                    }
                    if !matset_in(&exy, &i.members) && !i.members.contains(z) {
                        diag_one_abs = false;
                        break 'triples;
                    }
                }
            }
        }
        if !diag_one_abs {
            continue;
        }
        if scan.check(i.report.one_abs_prime, || {
            json!({"ideal": i.csv(), "witness": i.report.witnesses.get("one_abs_prime")})
        }) {
            break;
        }
    }
    scan.done()
}

fn gamma_projected(ctx: &RingCtx) -> Result<Option<(Ring, Vec<usize>)>, HarnessError> {
    if ctx.ring.units().scalar_identities.is_empty() || ctx.ring.n > GAMMA_CAP {
        return Ok(None);
    }
    let q = gamma_star(&ctx.ring).map_err(|e| match e {
        crate::gamma::GammaError::Ring(r) => HarnessError::Catalog(r.into()),
        other => HarnessError::Classify(ClassifyError::PreconditionFailed(other.to_string())),
    })?;
    Ok(Some((q.ring, q.projection)))
}

fn t3_gamma(
    ctx: &RingCtx,
    mode: Mode,
    forward: bool,
) -> Result<CheckResult, HarnessError> {
    let Some((qring, proj)) = gamma_projected(ctx)? else {
        return Scan::new().done();
    };
    let mut scan = Scan::new();
    for i in ctx.ideals(mode) {
        let image: ElemSet = i.members.iter().map(|e| proj[e]).collect();
        let image_proper =
            image != qring.carrier() && ideal::is_hyperideal(&qring, &image);
        let image_one_abs = image_proper
            && report_in(&qring, &image)?.one_abs_prime;
        let (hyp, concl) = if forward {
            (i.report.one_abs_prime, image_one_abs)
        } else {
            (image_one_abs, i.report.one_abs_prime)
        };
        if !hyp {
            continue;
        }
        if scan.check(concl, || {
            json!({"ideal": i.csv(), "projected": image.csv(), "projected_proper": image_proper})
        }) {
            break;
        }
    }
    scan.done()
}

fn t3_gamma_fwd(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t3_gamma(ctx, mode, true)
}

fn t3_gamma_rev(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t3_gamma(ctx, mode, false)
}

/// The ideal-triple property: every `J∘H∘K ⊆ I` (elementwise) forces
/// `J∘H ⊆ I` or `K ⊆ target(I)`.
fn ideal_triple_property(
    ctx: &RingCtx,
    mode: Mode,
    i_members: &ElemSet,
    target: &ElemSet,
) -> Option<(String, String, String)> {
    let r = &ctx.ring;
    let masks = ctx.pair_targets(i_members);
    for j in ctx.ideals(mode) {
        for h in ctx.ideals(mode) {
            // K qualifies iff K ⊆ mask(j,h) for every (j,h) member pair.
            let mut common = ElemSet::full(r.n);
            for a in j.members.iter() {
                for b in h.members.iter() {
                    common = common.intersection(&masks[a * r.n + b]);
                }
            }
            if common.is_empty() {
                continue;
            }
            let jh_in = set_pairs_in(r, &j.members, &h.members, i_members);
            for k in ctx.ideals(mode) {
                if !k.members.is_subset(&common) {
                    continue;
                }
                if !jh_in && !k.members.is_subset(target) {
                    return Some((j.csv(), h.csv(), k.csv()));
                }
            }
        }
    }
    None
}

fn ideal3(
    ctx: &RingCtx,
    mode: Mode,
    forward: bool,
    one_abs_of: fn(&ClassificationReport) -> bool,
    target_of: fn(&RingCtx, &crate::harness::context::IdealInfo) -> ElemSet,
) -> Result<CheckResult, HarnessError> {
    let mut scan = Scan::new();
    for i in ctx.ideals(mode) {
        let target = target_of(ctx, i);
        if forward {
            if !one_abs_of(&i.report) {
                continue;
            }
            let violation = ideal_triple_property(ctx, mode, &i.members, &target);
            if scan.check(violation.is_none(), || {
                let (j, h, k) = violation.clone().unwrap();
                json!({"ideal": i.csv(), "J": j, "H": h, "K": k})
            }) {
                break;
            }
        } else {
            if ideal_triple_property(ctx, mode, &i.members, &target).is_some() {
                continue;
            }
            if scan.check(one_abs_of(&i.report), || {
                json!({"ideal": i.csv(), "witness": i.report.witnesses})
            }) {
                break;
            }
        }
    }
    scan.done()
}

fn t3_ideal3_fwd(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    ideal3(ctx, mode, true, |r| r.one_abs_prime, |_, i| i.members)
}

fn t3_ideal3_rev(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    ideal3(ctx, mode, false, |r| r.one_abs_prime, |_, i| i.members)
}

// ---------------------------------------------------------------------
// Section 4: 1-absorbing primary hyperideals
// ---------------------------------------------------------------------

fn implication_over_ideals(
    ctx: &RingCtx,
    mode: Mode,
    hyp: impl Fn(&crate::harness::context::IdealInfo) -> bool,
    concl: impl Fn(&crate::harness::context::IdealInfo) -> bool,
) -> Result<CheckResult, HarnessError> {
    let mut scan = Scan::new();
    for i in ctx.ideals(mode) {
        if !hyp(i) {
            continue;
        }
        if scan.check(concl(i), || json!({"ideal": i.csv(), "witnesses": i.report.witnesses})) {
            break;
        }
    }
    scan.done()
}

fn t4_chain_a(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    implication_over_ideals(ctx, mode, |i| i.report.primary, |i| i.report.one_abs_primary)
}

fn t4_chain_b(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    implication_over_ideals(
        ctx,
        mode,
        |i| i.report.one_abs_primary,
        |i| i.report.two_absorbing_primary,
    )
}

fn t4_radical(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let mut scan = Scan::new();
    for i in ctx.ideals(mode) {
        if !i.report.one_abs_primary {
            continue;
        }
        if scan.check(ideal::is_prime_set(&ctx.ring, &i.radical), || {
            json!({"ideal": i.csv(), "radical": i.radical.csv()})
        }) {
            break;
        }
    }
    scan.done()
}

fn t4_notprimary(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let mut scan = Scan::new();
    for i in ctx.ideals(mode) {
        if !(i.report.one_abs_primary && !i.report.primary) {
            continue;
        }
        if scan.check(ctx.flags.local, || {
            json!({
                "ideal": i.csv(),
                "maximal_ideals": ctx.maximals.iter().map(|m| m.csv()).collect::<Vec<_>>(),
                "primary_witness": i.report.witnesses.get("primary"),
            })
        }) {
            break;
        }
    }
    scan.done()
}

fn t4_nonlocal(
    ctx: &RingCtx,
    mode: Mode,
    forward: bool,
) -> Result<CheckResult, HarnessError> {
    if ctx.flags.local {
        return Scan::new().done();
    }
    if forward {
        implication_over_ideals(ctx, mode, |i| i.report.one_abs_primary, |i| i.report.primary)
    } else {
        implication_over_ideals(ctx, mode, |i| i.report.primary, |i| i.report.one_abs_primary)
    }
}

fn t4_nonlocal_fwd(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t4_nonlocal(ctx, mode, true)
}

fn t4_nonlocal_rev(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t4_nonlocal(ctx, mode, false)
}

/// `I = I₁×R₂` with `I₁` primary, or symmetrically `R₁×I₂` with `I₂`
/// primary.
fn rectangular_primary(ctx: &RingCtx, members: &ElemSet) -> Result<bool, HarnessError> {
    let Some((lctx, rctx)) = &ctx.product else {
        return Ok(false);
    };
    let n2 = rctx.ring.n;
    let mut left = ElemSet::EMPTY;
    let mut right = ElemSet::EMPTY;
    for p in members.iter() {
        left.insert(p / n2);
        right.insert(p % n2);
    }
    if members.len() != left.len() * right.len() {
        return Ok(false);
    }
    let full_left = left == lctx.ring.carrier();
    let full_right = right == rctx.ring.carrier();
    if full_right && !full_left {
        return Ok(report_for(lctx, &left)?.primary);
    }
    if full_left && !full_right {
        return Ok(report_for(rctx, &right)?.primary);
    }
    Ok(false)
}

fn t4_product(
    ctx: &RingCtx,
    mode: Mode,
    edge: u8,
) -> Result<CheckResult, HarnessError> {
    if ctx.product.is_none() {
        return Scan::new().done();
    }
    let mut scan = Scan::new();
    for i in ctx.ideals(mode) {
        let rect = rectangular_primary(ctx, &i.members)?;
        let (hyp, concl) = match edge {
            1 => (i.report.one_abs_primary, i.report.primary),
            2 => (i.report.primary, rect),
            _ => (rect, i.report.one_abs_primary),
        };
        if !hyp {
            continue;
        }
        if scan.check(concl, || json!({"ideal": i.csv(), "rectangular_primary": rect})) {
            break;
        }
    }
    scan.done()
}

fn t4_product_1to2(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t4_product(ctx, mode, 1)
}

fn t4_product_2to3(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t4_product(ctx, mode, 2)
}

fn t4_product_3to1(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t4_product(ctx, mode, 3)
}

/// In a local strongly distributive ring a nonzero prime element is
/// irreducible.
fn t4_irred(ctx: &RingCtx, _mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    if !(ctx.flags.local && ctx.flags.strongly_distributive) {
        return Scan::new().done();
    }
    let r = &ctx.ring;
    let mut scan = Scan::new();
    for x in 0..r.n {
        if r.is_prime_element(x) != Some(true) {
            continue;
        }
        if scan.check(r.is_irreducible(x) == Some(true), || json!({"x": x})) {
            break;
        }
    }
    scan.done()
}

/// In a local strongly distributive ring with maximal ideal `M`, a prime
/// element `x ∈ M` with `⟨x∘R⟩ ≠ M` makes `⟨x∘M⟩` 1-absorbing primary
/// and not primary.
fn t4_xm(ctx: &RingCtx, _mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    if !(ctx.flags.local && ctx.flags.strongly_distributive) {
        return Scan::new().done();
    }
    let r = &ctx.ring;
    let m = ctx.maximals[0];
    let mut scan = Scan::new();
    for x in m.iter() {
        if r.is_prime_element(x) != Some(true) {
            continue;
        }
        let mut x_r = ElemSet::EMPTY;
        for t in 0..r.n {
            x_r.union_in_place(&r.mul(x, t));
        }
        if generate_hyperideal(r, &x_r).members == m {
            continue;
        }
        let mut x_m = ElemSet::EMPTY;
        for t in m.iter() {
            x_m.union_in_place(&r.mul(x, t));
        }
        let j = generate_hyperideal(r, &x_m).members;
        let ok = if j == r.carrier() {
            false
        } else {
            let rep = report_for(ctx, &j)?;
            rep.one_abs_primary && !rep.primary
        };
        if scan.check(ok, || json!({"x": x, "xM_ideal": j.csv()})) {
            break;
        }
    }
    scan.done()
}

/// For a 1-absorbing primary, non-primary `I`, every pair `x ∉ I`,
/// `y ∉ √I` with `x∘y ⊆ I` has `x` irreducible.
fn t4_witness(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let r = &ctx.ring;
    let nonunits = ctx.nonunits();
    let mut scan = Scan::new();
    'outer: for i in ctx.ideals(mode) {
        if !(i.report.one_abs_primary && !i.report.primary) {
            continue;
        }
        for x in nonunits.difference(&i.members).iter() {
            for y in nonunits.difference(&i.radical).iter() {
                if !r.mul(x, y).is_subset(&i.members) {
                    continue;
                }
                if scan.check(r.is_irreducible(x) == Some(true), || {
                    json!({"ideal": i.csv(), "x": x, "y": y})
                }) {
                    break 'outer;
                }
            }
        }
    }
    scan.done()
}

/// In a local ring, `P∘M` is 1-absorbing primary for any prime `P ⊆ M`.
fn t4_pm(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    if !ctx.flags.local {
        return Scan::new().done();
    }
    let m = ctx.maximals[0];
    let mut scan = Scan::new();
    for p in ctx.ideals(mode) {
        if !ctx.is_prime(&p.members) || !p.members.is_subset(&m) {
            continue;
        }
        let j = ideal_product(&ctx.ring, &p.members, &m).members;
        let ok = j != ctx.ring.carrier() && report_for(ctx, &j)?.one_abs_primary;
        if scan.check(ok, || json!({"P": p.csv(), "PM": j.csv()})) {
            break;
        }
    }
    scan.done()
}

/// `(I:a)` is primary for 1-absorbing primary `I` and nonunit `a ∉ I`.
fn t4_colon(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let r = &ctx.ring;
    let mut scan = Scan::new();
    'outer: for i in ctx.ideals(mode) {
        if !i.report.one_abs_primary {
            continue;
        }
        for a in ctx.nonunits().difference(&i.members).iter() {
            let col = colon_element(r, &i.members, a).members;
            let ok = col != r.carrier() && report_for(ctx, &col)?.primary;
            if scan.check(ok, || json!({"ideal": i.csv(), "a": a, "colon": col.csv()})) {
                break 'outer;
            }
        }
    }
    scan.done()
}

/// Intersections of 1-absorbing primary ideals sharing one prime radical
/// stay 1-absorbing primary with that radical.
fn t4_cap(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let mut scan = Scan::new();
    let mut groups: Vec<(ElemSet, Vec<&crate::harness::context::IdealInfo>)> = Vec::new();
    for i in ctx.ideals(mode) {
        if !i.report.one_abs_primary || !ctx.is_prime(&i.radical) {
            continue;
        }
        match groups.iter_mut().find(|(p, _)| *p == i.radical) {
            Some((_, v)) => v.push(i),
            None => groups.push((i.radical, vec![i])),
        }
    }
    'outer: for (p, members) in &groups {
        let mut families: Vec<Vec<&crate::harness::context::IdealInfo>> = Vec::new();
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                families.push(vec![members[a], members[b]]);
            }
        }
        if members.len() > 2 {
            families.push(members.clone());
        }
        for family in families {
            let cap = family
                .iter()
                .fold(ctx.ring.carrier(), |acc, i| acc.intersection(&i.members));
            let rep = report_for(ctx, &cap)?;
            let ok = rep.one_abs_primary && ctx.radical_of(&cap) == *p;
            if scan.check(ok, || {
                json!({
                    "P": p.csv(),
                    "family": family.iter().map(|i| i.csv()).collect::<Vec<_>>(),
                    "intersection": cap.csv(),
                })
            }) {
                break 'outer;
            }
        }
    }
    scan.done()
}

/// The side condition of the section-4 homomorphism theorem: when the
/// target is local the map must send nonunits to nonunits.
fn t4_side_condition(h: &GoodHomomorphism, target: &RingCtx) -> bool {
    !target.flags.local || h.preserves_nonunits()
}

#[allow(clippy::too_many_arguments)]
fn hom_pre(
    ctx: &RingCtx,
    mode: Mode,
    s: &SuiteCtx,
    require_mono: bool,
    require_nonunit_preserving: bool,
    use_side_condition: bool,
    hyp_class: fn(&ClassificationReport) -> bool,
    concl_class: fn(&ClassificationReport) -> bool,
) -> Result<CheckResult, HarnessError> {
    let mut scan = Scan::new();
    'outer: for ph in s.pool.from_source(&ctx.name) {
        if require_mono && !ph.hom.is_injective() {
            continue;
        }
        if require_nonunit_preserving && !ph.hom.preserves_nonunits() {
            continue;
        }
        if use_side_condition && !t4_side_condition(&ph.hom, &ph.target) {
            continue;
        }
        for i2 in ph.target.ideals(mode) {
            if !hyp_class(&i2.report) {
                continue;
            }
            let pre: ElemSet = (0..ctx.ring.n)
                .filter(|&x| i2.members.contains(ph.hom.apply(x)))
                .collect();
            let ok = pre != ctx.ring.carrier()
                && ideal::is_hyperideal(&ctx.ring, &pre)
                && concl_class(&report_for(ctx, &pre)?);
            if scan.check(ok, || {
                json!({"hom": ph.id, "target_ideal": i2.csv(), "preimage": pre.csv()})
            }) {
                break 'outer;
            }
        }
    }
    scan.done()
}

fn hom_img(
    ctx: &RingCtx,
    mode: Mode,
    s: &SuiteCtx,
    use_side_condition: bool,
    hyp_class: fn(&ClassificationReport) -> bool,
    concl_class: fn(&ClassificationReport) -> bool,
) -> Result<CheckResult, HarnessError> {
    let mut scan = Scan::new();
    'outer: for ph in s.pool.from_source(&ctx.name) {
        if !ph.hom.is_surjective() {
            continue;
        }
        if use_side_condition && !t4_side_condition(&ph.hom, &ph.target) {
            continue;
        }
        let kernel = ph.hom.kernel();
        for i1 in ctx.ideals(mode) {
            if !hyp_class(&i1.report) || !kernel.is_subset(&i1.members) {
                continue;
            }
            let img = ph.hom.image_of_set(&i1.members);
            let ok = img != ph.target.ring.carrier()
                && ideal::is_hyperideal(&ph.target.ring, &img)
                && concl_class(&report_for(&ph.target, &img)?);
            if scan.check(ok, || {
                json!({"hom": ph.id, "source_ideal": i1.csv(), "image": img.csv()})
            }) {
                break 'outer;
            }
        }
    }
    scan.done()
}

fn t4_hom_pre(ctx: &RingCtx, mode: Mode, s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    hom_pre(ctx, mode, s, false, false, true, |r| r.one_abs_primary, |r| r.one_abs_primary)
}

fn t4_hom_img(ctx: &RingCtx, mode: Mode, s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    hom_img(ctx, mode, s, true, |r| r.one_abs_primary, |r| r.one_abs_primary)
}

fn t4_quot(
    ctx: &RingCtx,
    mode: Mode,
    forward: bool,
) -> Result<CheckResult, HarnessError> {
    let r = &ctx.ring;
    let mut scan = Scan::new();
    'outer: for j in ctx.ideals(mode) {
        let q = quotient_ring(r, &j.members)?;
        // Side condition: a local quotient must receive nonunits from
        // nonunits.
        if ideal::is_local(&q.ring)? {
            let q_units = q.ring.units().units;
            let ok = ctx
                .nonunits()
                .iter()
                .all(|x| !q_units.contains(q.projection[x]));
            if !ok {
                continue;
            }
        }
        for i in ctx.ideals(mode) {
            if !j.members.is_subset(&i.members) {
                continue;
            }
            let image: ElemSet = i.members.iter().map(|e| q.projection[e]).collect();
            let image_one_abs = image != q.ring.carrier()
                && report_in(&q.ring, &image)?.one_abs_primary;
            let (hyp, concl) = if forward {
                (i.report.one_abs_primary, image_one_abs)
            } else {
                (image_one_abs, i.report.one_abs_primary)
            };
            if !hyp {
                continue;
            }
            if scan.check(concl, || {
                json!({"ideal": i.csv(), "J": j.csv(), "quotient_ideal": image.csv()})
            }) {
                break 'outer;
            }
        }
    }
    scan.done()
}

fn t4_quot_fwd(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t4_quot(ctx, mode, true)
}

fn t4_quot_rev(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t4_quot(ctx, mode, false)
}

/// `x∘y∘J ⊆ I` for 1-absorbing primary `I` forces `x∘y ⊆ I` or `J ⊆ √I`.
fn t4_xyjrad(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let r = &ctx.ring;
    let nonunits = ctx.nonunits();
    let mut scan = Scan::new();
    'outer: for i in ctx.ideals(mode) {
        if !i.report.one_abs_primary {
            continue;
        }
        let masks = ctx.pair_targets(&i.members);
        for x in nonunits.iter() {
            for y in nonunits.iter() {
                let xy_in = r.mul(x, y).is_subset(&i.members);
                let mask = &masks[x * r.n + y];
                for j in ctx.ideals(mode) {
                    if !j.members.is_subset(mask) {
                        continue;
                    }
                    let concl = xy_in || j.members.is_subset(&i.radical);
                    if scan.check(concl, || {
                        json!({"ideal": i.csv(), "x": x, "y": y, "J": j.csv()})
                    }) {
                        break 'outer;
                    }
                }
            }
        }
    }
    scan.done()
}

fn t4_ideal3_fwd(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    ideal3(ctx, mode, true, |r| r.one_abs_primary, |_, i| i.radical)
}

fn t4_ideal3_rev(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    ideal3(ctx, mode, false, |r| r.one_abs_primary, |_, i| i.radical)
}

// ---------------------------------------------------------------------
// Section 5: strongly 1-absorbing primary hyperideals
// ---------------------------------------------------------------------

fn t5_cap2(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let strongly: Vec<_> = ctx
        .ideals(mode)
        .filter(|i| i.report.strongly_one_abs_primary)
        .collect();
    let mut scan = Scan::new();
    'outer: for a in 0..strongly.len() {
        for b in a + 1..strongly.len() {
            let cap = strongly[a].members.intersection(&strongly[b].members);
            let ok = report_for(ctx, &cap)?.strongly_one_abs_primary;
            if scan.check(ok, || {
                json!({
                    "I1": strongly[a].csv(),
                    "I2": strongly[b].csv(),
                    "intersection": cap.csv(),
                })
            }) {
                break 'outer;
            }
        }
    }
    scan.done()
}

/// The characterization split: strongly ⇔ (1-absorbing primary with
/// `√I = √0`) or (local with `M = √I` and `M² ⊆ I`).
fn t5_char_rhs(ctx: &RingCtx, i: &crate::harness::context::IdealInfo) -> bool {
    let branch1 = i.report.one_abs_primary && i.radical == ctx.radical_zero;
    let branch2 = ctx.flags.local
        && ctx.maximals[0] == i.radical
        && pairwise_products_in(&ctx.ring, &ctx.maximals[0], &ctx.maximals[0], &i.members);
    branch1 || branch2
}

fn t5_char_fwd(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    implication_over_ideals(
        ctx,
        mode,
        |i| i.report.strongly_one_abs_primary,
        |i| t5_char_rhs(ctx, i),
    )
}

fn t5_char_rev(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    implication_over_ideals(
        ctx,
        mode,
        |i| t5_char_rhs(ctx, i),
        |i| i.report.strongly_one_abs_primary,
    )
}

fn t5_primechar_rhs(ctx: &RingCtx, p: &ElemSet) -> bool {
    *p == ctx.radical_zero || (ctx.flags.local && *p == ctx.maximals[0])
}

fn t5_primechar(
    ctx: &RingCtx,
    mode: Mode,
    forward: bool,
) -> Result<CheckResult, HarnessError> {
    let mut scan = Scan::new();
    for p in ctx.ideals(mode) {
        if !ctx.is_prime(&p.members) {
            continue;
        }
        let (hyp, concl) = if forward {
            (p.report.strongly_one_abs_primary, t5_primechar_rhs(ctx, &p.members))
        } else {
            (t5_primechar_rhs(ctx, &p.members), p.report.strongly_one_abs_primary)
        };
        if !hyp {
            continue;
        }
        if scan.check(concl, || json!({"P": p.csv()})) {
            break;
        }
    }
    scan.done()
}

fn t5_primechar_fwd(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t5_primechar(ctx, mode, true)
}

fn t5_primechar_rev(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t5_primechar(ctx, mode, false)
}

fn t5_pmchar(
    ctx: &RingCtx,
    mode: Mode,
    forward: bool,
) -> Result<CheckResult, HarnessError> {
    if !ctx.flags.local {
        return Scan::new().done();
    }
    let m = ctx.maximals[0];
    let mut scan = Scan::new();
    for p in ctx.ideals(mode) {
        if !ctx.is_prime(&p.members) {
            continue;
        }
        let pm = ideal_product(&ctx.ring, &p.members, &m).members;
        let pm_strongly =
            pm != ctx.ring.carrier() && report_for(ctx, &pm)?.strongly_one_abs_primary;
        let rhs = p.members == ctx.radical_zero || p.members == m;
        let (hyp, concl) = if forward { (pm_strongly, rhs) } else { (rhs, pm_strongly) };
        if !hyp {
            continue;
        }
        if scan.check(concl, || json!({"P": p.csv(), "PM": pm.csv()})) {
            break;
        }
    }
    scan.done()
}

fn t5_pmchar_fwd(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t5_pmchar(ctx, mode, true)
}

fn t5_pmchar_rev(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t5_pmchar(ctx, mode, false)
}

fn t5_exist(
    ctx: &RingCtx,
    mode: Mode,
    forward: bool,
) -> Result<CheckResult, HarnessError> {
    let exists = ctx.ideals(mode).any(|i| i.report.strongly_one_abs_primary);
    let rhs = ideal::is_prime_set(&ctx.ring, &ctx.radical_zero) || ctx.flags.local;
    let (hyp, concl) = if forward { (exists, rhs) } else { (rhs, exists) };
    let mut scan = Scan::new();
    if hyp {
        scan.check(concl, || {
            json!({"exists_strongly": exists, "radical_zero": ctx.radical_zero.csv(), "local": ctx.flags.local})
        });
    }
    scan.done()
}

fn t5_exist_fwd(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t5_exist(ctx, mode, true)
}

fn t5_exist_rev(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t5_exist(ctx, mode, false)
}

fn t5_noprod(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    if ctx.product.is_none() {
        return Scan::new().done();
    }
    implication_over_ideals(ctx, mode, |_| true, |i| !i.report.strongly_one_abs_primary)
}

fn t5_ideal3_fwd(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    ideal3(ctx, mode, true, |r| r.strongly_one_abs_primary, |c, _| c.radical_zero)
}

fn t5_ideal3_rev(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    ideal3(ctx, mode, false, |r| r.strongly_one_abs_primary, |c, _| c.radical_zero)
}

fn t5_zeroonly(
    ctx: &RingCtx,
    mode: Mode,
    forward: bool,
) -> Result<CheckResult, HarnessError> {
    let strongly: Vec<ElemSet> = ctx
        .ideals(mode)
        .filter(|i| i.report.strongly_one_abs_primary)
        .map(|i| i.members)
        .collect();
    let lhs = strongly == vec![ctx.zero_ideal];
    let rhs = ctx.flags.hyperfield || (!ctx.flags.local && ctx.flags.integral_hyperdomain);
    let (hyp, concl) = if forward { (lhs, rhs) } else { (rhs, lhs) };
    let mut scan = Scan::new();
    if hyp {
        scan.check(concl, || {
            json!({
                "strongly_ideals": strongly.iter().map(|s| s.csv()).collect::<Vec<_>>(),
                "hyperfield": ctx.flags.hyperfield,
                "local": ctx.flags.local,
                "integral_hyperdomain": ctx.flags.integral_hyperdomain,
            })
        });
    }
    scan.done()
}

fn t5_zeroonly_fwd(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t5_zeroonly(ctx, mode, true)
}

fn t5_zeroonly_rev(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t5_zeroonly(ctx, mode, false)
}

fn t5_colon(
    ctx: &RingCtx,
    mode: Mode,
    strongly_form: bool,
) -> Result<CheckResult, HarnessError> {
    let r = &ctx.ring;
    let mut scan = Scan::new();
    'outer: for i in ctx.ideals(mode) {
        if !i.report.one_abs_primary {
            continue;
        }
        for j in ctx.ideals(mode) {
            let excluded = if strongly_form { &i.radical } else { &i.members };
            if j.members.is_subset(excluded) {
                continue;
            }
            let col = colon_set(r, &i.members, &j.members).members;
            let rep_ok = if col == r.carrier() {
                false
            } else {
                let rep = report_for(ctx, &col)?;
                if strongly_form {
                    rep.strongly_one_abs_primary
                } else {
                    rep.primary
                }
            };
            if scan.check(rep_ok, || {
                json!({"ideal": i.csv(), "J": j.csv(), "colon": col.csv()})
            }) {
                break 'outer;
            }
        }
    }
    scan.done()
}

fn t5_colonj(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t5_colon(ctx, mode, false)
}

fn t5_colonstrong(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t5_colon(ctx, mode, true)
}

fn t5_hom_pre(ctx: &RingCtx, mode: Mode, s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    hom_pre(
        ctx,
        mode,
        s,
        true,
        false,
        false,
        |r| r.strongly_one_abs_primary,
        |r| r.strongly_one_abs_primary,
    )
}

fn t5_hom_img(ctx: &RingCtx, mode: Mode, s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    hom_img(
        ctx,
        mode,
        s,
        false,
        |r| r.strongly_one_abs_primary,
        |r| r.strongly_one_abs_primary,
    )
}

/// A strongly 1-absorbing primary `I` intersects every fixture
/// subhyperring `T` in a strongly 1-absorbing primary ideal of `T`.
fn t5_subring(ctx: &RingCtx, mode: Mode, s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let fixtures: Vec<&ElemSet> = s
        .subrings
        .iter()
        .filter(|(name, _)| *name == ctx.name)
        .map(|(_, t)| t)
        .collect();
    if fixtures.is_empty() {
        return Scan::new().done();
    }
    let mut scan = Scan::new();
    'outer: for t in fixtures {
        let (sub, members) = subhyperring(&ctx.ring, t)?;
        for i in ctx.ideals(mode) {
            if !i.report.strongly_one_abs_primary {
                continue;
            }
            let cap = t.intersection(&i.members);
            if cap == *t {
                // The statement is about a proper hyperideal of T.
                continue;
            }
            let sub_ideal: ElemSet = cap
                .iter()
                .map(|e| members.iter().position(|&m| m == e).unwrap())
                .collect();
            let ok = ideal::is_hyperideal(&sub, &sub_ideal)
                && report_in(&sub, &sub_ideal)?.strongly_one_abs_primary;
            if scan.check(ok, || {
                json!({"T": t.csv(), "ideal": i.csv(), "intersection": cap.csv()})
            }) {
                break 'outer;
            }
        }
    }
    scan.done()
}

// ---------------------------------------------------------------------
// Section 6: weakly 1-absorbing primary hyperideals
// ---------------------------------------------------------------------

fn t6_chain_a(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    implication_over_ideals(
        ctx,
        mode,
        |i| i.report.one_abs_primary,
        |i| i.report.weakly_one_abs_primary,
    )
}

/// In a local ring whose maximal ideal is `√0`, every proper hyperideal
/// is weakly 1-absorbing primary.
fn t6_chain_b(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    if !(ctx.flags.local && ctx.maximals[0] == ctx.radical_zero) {
        return Scan::new().done();
    }
    implication_over_ideals(ctx, mode, |_| true, |i| i.report.weakly_one_abs_primary)
}

fn t6_maxrad(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let mut scan = Scan::new();
    for i in ctx.ideals(mode) {
        if !(i.report.weakly_one_abs_primary && ctx.maximals.contains(&i.radical)) {
            continue;
        }
        if scan.check(i.report.primary && i.report.one_abs_primary, || {
            json!({
                "ideal": i.csv(),
                "radical": i.radical.csv(),
                "primary_witness": i.report.witnesses.get("primary"),
            })
        }) {
            break;
        }
    }
    scan.done()
}

/// In a reduced ring, a nonzero weakly 1-absorbing primary ideal has a
/// prime radical.
fn t6_reduced(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    if !ctx.flags.reduced {
        return Scan::new().done();
    }
    let mut scan = Scan::new();
    for i in ctx.ideals(mode) {
        if !(i.report.weakly_one_abs_primary && i.members != ctx.zero_ideal) {
            continue;
        }
        if scan.check(ideal::is_prime_set(&ctx.ring, &i.radical), || {
            json!({"ideal": i.csv(), "radical": i.radical.csv()})
        }) {
            break;
        }
    }
    scan.done()
}

fn t6_regular(
    ctx: &RingCtx,
    mode: Mode,
    edge: u8,
) -> Result<CheckResult, HarnessError> {
    if !ctx.flags.regular_ring {
        return Scan::new().done();
    }
    let zero = ctx.zero_ideal;
    let pick = |i: &crate::harness::context::IdealInfo, which: u8| match which {
        1 => i.report.weakly_one_abs_primary,
        2 => i.report.primary,
        _ => i.report.one_abs_primary,
    };
    let (h, c) = match edge {
        1 => (1, 2),
        2 => (2, 3),
        _ => (3, 1),
    };
    implication_over_ideals(
        ctx,
        mode,
        move |i| i.members != zero && pick(i, h),
        move |i| pick(i, c),
    )
}

fn t6_regular_1to2(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t6_regular(ctx, mode, 1)
}

fn t6_regular_2to3(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t6_regular(ctx, mode, 2)
}

fn t6_regular_3to1(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t6_regular(ctx, mode, 3)
}

/// For a 1-triple-zero `(x,y,z)` of a weakly ideal in a strongly
/// distributive ring: `0 ∈ x∘y∘I`, and when `x,y ∉ (I:z)` also
/// `0 ∈ y∘z∘I` and `0 ∈ x∘z∘I`.
fn t6_triple(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    if !ctx.flags.strongly_distributive {
        return Scan::new().done();
    }
    let r = &ctx.ring;
    let zero = r.zero;
    let prod3 = |a: usize, b: usize, s: &ElemSet| -> ElemSet {
        r.lift(&r.lift(&ElemSet::singleton(a), &ElemSet::singleton(b)), s)
    };
    let mut scan = Scan::new();
    'outer: for i in ctx.ideals(mode) {
        if !i.report.weakly_one_abs_primary {
            continue;
        }
        for tz in find_one_triple_zeros(r, &i.members)? {
            let part1 = prod3(tz.x, tz.y, &i.members).contains(zero);
            let colon_z = colon_element(r, &i.members, tz.z).members;
            let part2 = if !colon_z.contains(tz.x) && !colon_z.contains(tz.y) {
                prod3(tz.y, tz.z, &i.members).contains(zero)
                    && prod3(tz.x, tz.z, &i.members).contains(zero)
            } else {
                true
            };
            if scan.check(part1 && part2, || {
                json!({"ideal": i.csv(), "x": tz.x, "y": tz.y, "z": tz.z})
            }) {
                break 'outer;
            }
        }
    }
    scan.done()
}

/// Intersections of weakly ideals sharing one prime radical stay weakly.
fn t6_capfam(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let mut groups: Vec<(ElemSet, Vec<&crate::harness::context::IdealInfo>)> = Vec::new();
    for i in ctx.ideals(mode) {
        if !i.report.weakly_one_abs_primary || !ctx.is_prime(&i.radical) {
            continue;
        }
        match groups.iter_mut().find(|(p, _)| *p == i.radical) {
            Some((_, v)) => v.push(i),
            None => groups.push((i.radical, vec![i])),
        }
    }
    let mut scan = Scan::new();
    'outer: for (p, members) in &groups {
        let mut families: Vec<Vec<&crate::harness::context::IdealInfo>> = Vec::new();
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                families.push(vec![members[a], members[b]]);
            }
        }
        if members.len() > 2 {
            families.push(members.clone());
        }
        for family in families {
            let cap = family
                .iter()
                .fold(ctx.ring.carrier(), |acc, i| acc.intersection(&i.members));
            let ok = report_for(ctx, &cap)?.weakly_one_abs_primary;
            if scan.check(ok, || {
                json!({
                    "P": p.csv(),
                    "family": family.iter().map(|i| i.csv()).collect::<Vec<_>>(),
                    "intersection": cap.csv(),
                })
            }) {
                break 'outer;
            }
        }
    }
    scan.done()
}

fn t6_product(
    ctx: &RingCtx,
    mode: Mode,
    edge: u8,
) -> Result<CheckResult, HarnessError> {
    let Some((lctx, rctx)) = &ctx.product else {
        return Scan::new().done();
    };
    if !(lctx.flags.has_identity && rctx.flags.has_identity)
        || lctx.flags.hyperfield
        || rctx.flags.hyperfield
    {
        return Scan::new().done();
    }
    let mut scan = Scan::new();
    for i in ctx.ideals(mode) {
        if i.members == ctx.zero_ideal {
            continue;
        }
        let rect = rectangular_primary(ctx, &i.members)?;
        let (hyp, concl) = match edge {
            1 => (i.report.weakly_one_abs_primary, rect),
            2 => (rect, i.report.one_abs_primary),
            3 => (i.report.one_abs_primary, i.report.primary),
            _ => (i.report.primary, i.report.weakly_one_abs_primary),
        };
        if !hyp {
            continue;
        }
        if scan.check(concl, || json!({"ideal": i.csv(), "rectangular_primary": rect})) {
            break;
        }
    }
    scan.done()
}

fn t6_product_1to2(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t6_product(ctx, mode, 1)
}

fn t6_product_2to3(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t6_product(ctx, mode, 2)
}

fn t6_product_3to4(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t6_product(ctx, mode, 3)
}

fn t6_product_4to1(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    t6_product(ctx, mode, 4)
}

fn t6_hom_pre(ctx: &RingCtx, mode: Mode, s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    hom_pre(
        ctx,
        mode,
        s,
        true,
        true,
        false,
        |r| r.weakly_one_abs_primary,
        |r| r.weakly_one_abs_primary,
    )
}

fn t6_hom_img(ctx: &RingCtx, mode: Mode, s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    hom_img(
        ctx,
        mode,
        s,
        false,
        |r| r.weakly_one_abs_primary,
        |r| r.weakly_one_abs_primary,
    )
}

/// For weakly `I` that is a free 1-triple-zero with respect to a nonzero
/// `J∘H∘K ⊆ I`: `J∘H ⊆ I` or `K ⊆ √I`.
fn t6_free(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let r = &ctx.ring;
    let zero_mask_target = ElemSet::singleton(r.zero);
    let zmasks = ctx.pair_targets(&zero_mask_target);
    let mut scan = Scan::new();
    'outer: for i in ctx.ideals(mode) {
        if !i.report.weakly_one_abs_primary {
            continue;
        }
        let masks = ctx.pair_targets(&i.members);
        for j in ctx.ideals(mode) {
            for h in ctx.ideals(mode) {
                let jh_in = set_pairs_in(r, &j.members, &h.members, &i.members);
                for k in ctx.ideals(mode) {
                    let mut contained = true;
                    let mut all_zero = true;
                    let mut free = true;
                    'pairs: for a in j.members.iter() {
                        for b in h.members.iter() {
                            let mask = &masks[a * r.n + b];
                            if !k.members.is_subset(mask) {
                                contained = false;
                                break 'pairs;
                            }
                            let zm = &zmasks[a * r.n + b];
                            if !k.members.is_subset(zm) {
                                all_zero = false;
                            }
                            // A triple-zero needs a∘b ⊄ I and some
                            // k-member outside √I whose product is {0}.
                            if free && !r.mul(a, b).is_subset(&i.members) {
                                let bad = k.members.intersection(zm).difference(&i.radical);
                                if !bad.is_empty() {
                                    free = false;
                                }
                            }
                        }
                    }
                    if !contained || all_zero || !free {
                        continue;
                    }
                    let concl = jh_in || k.members.is_subset(&i.radical);
                    if scan.check(concl, || {
                        json!({"ideal": i.csv(), "J": j.csv(), "H": h.csv(), "K": k.csv()})
                    }) {
                        break 'outer;
                    }
                }
            }
        }
    }
    scan.done()
}

/// For weakly `I` and `x∘y∘K ⊆ I` with `x∘y ⊄ I` and no `(x,y,k)` a
/// 1-triple-zero: `K ⊆ √I`.
fn t6_klem(ctx: &RingCtx, mode: Mode, _s: &SuiteCtx) -> Result<CheckResult, HarnessError> {
    let r = &ctx.ring;
    let nonunits = ctx.nonunits();
    let zmasks = ctx.pair_targets(&ElemSet::singleton(r.zero));
    let mut scan = Scan::new();
    'outer: for i in ctx.ideals(mode) {
        if !i.report.weakly_one_abs_primary {
            continue;
        }
        let masks = ctx.pair_targets(&i.members);
        for x in 0..r.n {
            for y in 0..r.n {
                if r.mul(x, y).is_subset(&i.members) {
                    continue;
                }
                let mask = &masks[x * r.n + y];
                // (x,y,k) can be a 1-triple-zero only for nonunit x,y.
                let tz_possible = nonunits.contains(x) && nonunits.contains(y);
                for k in ctx.ideals(mode) {
                    if !k.members.is_subset(mask) {
                        continue;
                    }
                    if tz_possible {
                        let zeros = k
                            .members
                            .intersection(&zmasks[x * r.n + y])
                            .difference(&i.radical);
                        if !zeros.is_empty() {
                            continue;
                        }
                    }
                    let concl = k.members.is_subset(&i.radical);
                    if scan.check(concl, || {
                        json!({"ideal": i.csv(), "x": x, "y": y, "K": k.csv()})
                    }) {
                        break 'outer;
                    }
                }
            }
        }
    }
    scan.done()
}

/// All checks, in report order.
pub fn registry() -> Vec<Check> {
    vec![
        Check { id: "T3.GAMMA.fwd", run: t3_gamma_fwd },
        Check { id: "T3.GAMMA.rev", run: t3_gamma_rev },
        Check { id: "T3.IDEAL3.fwd", run: t3_ideal3_fwd },
        Check { id: "T3.IDEAL3.rev", run: t3_ideal3_rev },
        Check { id: "T3.LOCALLEM", run: t3_locallem },
        Check { id: "T3.MATRIX", run: t3_matrix },
        Check { id: "T3.NOTPRIME", run: t3_notprime },
        Check { id: "T3.P2C", run: t3_p2c },
        Check { id: "T3.RADICAL", run: t3_radical },
        Check { id: "T3.XYJ", run: t3_xyj },
        Check { id: "T4.CAP", run: t4_cap },
        Check { id: "T4.CHAIN.a", run: t4_chain_a },
        Check { id: "T4.CHAIN.b", run: t4_chain_b },
        Check { id: "T4.COLON", run: t4_colon },
        Check { id: "T4.HOM.img", run: t4_hom_img },
        Check { id: "T4.HOM.pre", run: t4_hom_pre },
        Check { id: "T4.IDEAL3.fwd", run: t4_ideal3_fwd },
        Check { id: "T4.IDEAL3.rev", run: t4_ideal3_rev },
        Check { id: "T4.IRRED", run: t4_irred },
        Check { id: "T4.NONLOCAL.fwd", run: t4_nonlocal_fwd },
        Check { id: "T4.NONLOCAL.rev", run: t4_nonlocal_rev },
        Check { id: "T4.NOTPRIMARY", run: t4_notprimary },
        Check { id: "T4.PM", run: t4_pm },
        Check { id: "T4.PRODUCT.1to2", run: t4_product_1to2 },
        Check { id: "T4.PRODUCT.2to3", run: t4_product_2to3 },
        Check { id: "T4.PRODUCT.3to1", run: t4_product_3to1 },
        Check { id: "T4.QUOT.fwd", run: t4_quot_fwd },
        Check { id: "T4.QUOT.rev", run: t4_quot_rev },
        Check { id: "T4.RADICAL", run: t4_radical },
        Check { id: "T4.WITNESS", run: t4_witness },
        Check { id: "T4.XM", run: t4_xm },
        Check { id: "T4.XYJRAD", run: t4_xyjrad },
        Check { id: "T5.CAP2", run: t5_cap2 },
        Check { id: "T5.CHAR.fwd", run: t5_char_fwd },
        Check { id: "T5.CHAR.rev", run: t5_char_rev },
        Check { id: "T5.COLONJ", run: t5_colonj },
        Check { id: "T5.COLONSTRONG", run: t5_colonstrong },
        Check { id: "T5.EXIST.fwd", run: t5_exist_fwd },
        Check { id: "T5.EXIST.rev", run: t5_exist_rev },
        Check { id: "T5.HOM.img", run: t5_hom_img },
        Check { id: "T5.HOM.pre", run: t5_hom_pre },
        Check { id: "T5.IDEAL3.fwd", run: t5_ideal3_fwd },
        Check { id: "T5.IDEAL3.rev", run: t5_ideal3_rev },
        Check { id: "T5.NOPROD", run: t5_noprod },
        Check { id: "T5.PMCHAR.fwd", run: t5_pmchar_fwd },
        Check { id: "T5.PMCHAR.rev", run: t5_pmchar_rev },
        Check { id: "T5.PRIMECHAR.fwd", run: t5_primechar_fwd },
        Check { id: "T5.PRIMECHAR.rev", run: t5_primechar_rev },
        Check { id: "T5.SUBRING", run: t5_subring },
        Check { id: "T5.ZEROONLY.fwd", run: t5_zeroonly_fwd },
        Check { id: "T5.ZEROONLY.rev", run: t5_zeroonly_rev },
        Check { id: "T6.CAPFAM", run: t6_capfam },
        Check { id: "T6.CHAIN.a", run: t6_chain_a },
        Check { id: "T6.CHAIN.b", run: t6_chain_b },
        Check { id: "T6.FREE", run: t6_free },
        Check { id: "T6.HOM.img", run: t6_hom_img },
        Check { id: "T6.HOM.pre", run: t6_hom_pre },
        Check { id: "T6.KLEM", run: t6_klem },
        Check { id: "T6.MAXRAD", run: t6_maxrad },
        Check { id: "T6.PRODUCT.1to2", run: t6_product_1to2 },
        Check { id: "T6.PRODUCT.2to3", run: t6_product_2to3 },
        Check { id: "T6.PRODUCT.3to4", run: t6_product_3to4 },
        Check { id: "T6.PRODUCT.4to1", run: t6_product_4to1 },
        Check { id: "T6.REDUCED", run: t6_reduced },
        Check { id: "T6.REGULAR.1to2", run: t6_regular_1to2 },
        Check { id: "T6.REGULAR.2to3", run: t6_regular_2to3 },
        Check { id: "T6.REGULAR.3to1", run: t6_regular_3to1 },
        Check { id: "T6.TRIPLE", run: t6_triple },
    ]
}
