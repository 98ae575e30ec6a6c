//! Per-ring evaluation context: enumerated ideals with their full
//! classifications, lattice data, and the homomorphism pool.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::classify::{classify, ClassificationReport, ClassifyError};
use crate::construct::{pair_index, pair_split, quotient_ring, ConstructError};
use crate::harness::catalog::{Catalog, CatalogError};
use crate::hom::{check_good_homomorphism, identity_hom, GoodHomomorphism};
use crate::ideal::{
    self, maximal_hyperideals, prime_hyperideals, proper_hyperideals, radical, radical_zero,
    IdealError,
};
use crate::ring::{Ring, RingFlags};
use crate::set::ElemSet;

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum HarnessError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error("unknown theorem id: {0}")]
    UnknownTheorem(String),
    #[error("unknown catalog ring: {0}")]
    UnknownRing(String),
}

/// Quantifier scope for ideal variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every hyperideal.
    All,
    /// Only **C**-hyperideals, following the blanket convention.
    COnly,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::All => "all",
            Mode::COnly => "c-only",
        }
    }

    pub fn parse(s: &str) -> Option<Mode> {
        match s {
            "all" => Some(Mode::All),
            "c-only" => Some(Mode::COnly),
            _ => None,
        }
    }
}

/// One proper hyperideal with everything the checks ask about.
pub struct IdealInfo {
    pub members: ElemSet,
    pub is_c: bool,
    pub radical: ElemSet,
    pub report: ClassificationReport,
}

impl IdealInfo {
    pub fn csv(&self) -> String {
        self.members.csv()
    }
}

/// A catalog ring with precomputed lattice and classification data.
pub struct RingCtx {
    pub name: String,
    pub ring: Ring,
    /// Proper hyperideals, sorted by size then lexicographically.
    pub ideals: Vec<IdealInfo>,
    pub primes: Vec<ElemSet>,
    pub maximals: Vec<ElemSet>,
    pub radical_zero: ElemSet,
    /// The least hyperideal `⟨0⟩`.
    pub zero_ideal: ElemSet,
    pub flags: RingFlags,
    /// Factor contexts, for product members.
    pub product: Option<(Arc<RingCtx>, Arc<RingCtx>)>,
}

impl RingCtx {
    pub fn new(ring: Ring, factors: Option<(Ring, Ring)>) -> Result<Arc<RingCtx>, HarnessError> {
        let mut ideals = Vec::new();
        for i in proper_hyperideals(&ring)? {
            ideals.push(IdealInfo {
                members: i.members,
                is_c: ideal::is_c_hyperideal(&ring, &i.members),
                radical: radical(&ring, &i.members)?,
                report: classify(&ring, &i.members)?,
            });
        }
        let product = match factors {
            None => None,
            Some((l, r)) => Some((RingCtx::new(l, None)?, RingCtx::new(r, None)?)),
        };
        Ok(Arc::new(RingCtx {
            name: ring.name.clone(),
            primes: prime_hyperideals(&ring)?.iter().map(|p| p.members).collect(),
            maximals: maximal_hyperideals(&ring)?.iter().map(|m| m.members).collect(),
            radical_zero: radical_zero(&ring)?,
            zero_ideal: ideal::generate_hyperideal(&ring, &ElemSet::EMPTY).members,
            flags: ideal::ring_flags(&ring)?,
            ideals,
            ring,
            product,
        }))
    }

    /// Proper hyperideals visible under the mode.
    pub fn ideals(&self, mode: Mode) -> impl Iterator<Item = &IdealInfo> {
        self.ideals
            .iter()
            .filter(move |i| mode == Mode::All || i.is_c)
    }

    pub fn info(&self, members: &ElemSet) -> Option<&IdealInfo> {
        self.ideals.iter().find(|i| i.members == *members)
    }

    pub fn is_prime(&self, s: &ElemSet) -> bool {
        self.primes.contains(s)
    }

    pub fn radical_of(&self, s: &ElemSet) -> ElemSet {
        radical(&self.ring, s).expect("within enumeration cap")
    }

    pub fn nonunits(&self) -> ElemSet {
        self.ring.nonunits()
    }

    /// For each element pair `(x,y)`, the set of `z` with
    /// `x∘y∘z ⊆ target`. One mask per pair, row-major.
    pub fn pair_targets(&self, target: &ElemSet) -> Vec<ElemSet> {
        let r = &self.ring;
        let n = r.n;
        // rows[w] = {z : w∘z ⊆ target}
        let rows: Vec<ElemSet> = (0..n)
            .map(|w| (0..n).filter(|&z| r.mul(w, z).is_subset(target)).collect())
            .collect();
        let mut out = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let mut mask = ElemSet::full(n);
                for w in r.mul(x, y).iter() {
                    mask = mask.intersection(&rows[w]);
                }
                out.push(mask);
            }
        }
        out
    }
}

/// A pool homomorphism with contexts on both ends.
pub struct PoolHom {
    pub id: String,
    pub hom: GoodHomomorphism,
    pub source: Arc<RingCtx>,
    pub target: Arc<RingCtx>,
}

/// The finite, explicit homomorphism pool: identities, quotient
/// projections, product projections, and product injections where they
/// are good homomorphisms. Sorted by id.
pub struct Pool {
    pub homs: Vec<PoolHom>,
}

impl Pool {
    /// Homs whose source is the named ring.
    pub fn from_source<'p>(&'p self, name: &str) -> impl Iterator<Item = &'p PoolHom> + 'p {
        let name = name.to_string();
        self.homs.iter().filter(move |h| h.source.name == name)
    }
}

/// Contexts for every catalog entry plus the pool.
pub struct SuiteCtx {
    pub contexts: BTreeMap<String, Arc<RingCtx>>,
    pub pool: Pool,
    pub subrings: Vec<(String, ElemSet)>,
}

pub fn build_suite_ctx(catalog: &Catalog) -> Result<SuiteCtx, HarnessError> {
    let mut contexts = BTreeMap::new();
    for entry in &catalog.entries {
        contexts.insert(
            entry.name.clone(),
            RingCtx::new(entry.ring.clone(), entry.factors.clone())?,
        );
    }

    let mut homs: Vec<PoolHom> = Vec::new();
    for ctx in contexts.values() {
        homs.push(PoolHom {
            id: format!("id({})", ctx.name),
            hom: identity_hom(&ctx.ring),
            source: ctx.clone(),
            target: ctx.clone(),
        });
        for j in &ctx.ideals {
            let q = quotient_ring(&ctx.ring, &j.members)?;
            let target = RingCtx::new(q.ring.clone(), None)?;
            let hom = check_good_homomorphism(&ctx.ring, &q.ring, q.projection.clone())
                .expect("quotient projection is a good homomorphism");
            homs.push(PoolHom {
                id: format!("proj({} -> {})", ctx.name, q.ring.name),
                hom,
                source: ctx.clone(),
                target,
            });
        }
    }
    for entry in &catalog.entries {
        let Some((l, r)) = &entry.factors else { continue };
        let prod_ctx = contexts[&entry.name].clone();
        let (lctx, rctx) = prod_ctx.product.clone().expect("product ctx has factors");
        let n2 = r.n;
        let pi1: Vec<usize> = (0..entry.ring.n).map(|q| pair_split(n2, q).0).collect();
        let pi2: Vec<usize> = (0..entry.ring.n).map(|q| pair_split(n2, q).1).collect();
        homs.push(PoolHom {
            id: format!("pi1({})", entry.name),
            hom: check_good_homomorphism(&entry.ring, l, pi1)
                .expect("first projection is a good homomorphism"),
            source: prod_ctx.clone(),
            target: lctx.clone(),
        });
        homs.push(PoolHom {
            id: format!("pi2({})", entry.name),
            hom: check_good_homomorphism(&entry.ring, r, pi2)
                .expect("second projection is a good homomorphism"),
            source: prod_ctx.clone(),
            target: rctx.clone(),
        });
        // Injections are pool members only where they really are good.
        let inj1: Vec<usize> = (0..l.n).map(|x| pair_index(n2, x, r.zero)).collect();
        if let Ok(hom) = check_good_homomorphism(l, &entry.ring, inj1) {
            homs.push(PoolHom {
                id: format!("inj1({})", entry.name),
                hom,
                source: lctx.clone(),
                target: prod_ctx.clone(),
            });
        }
        let inj2: Vec<usize> = (0..r.n).map(|y| pair_index(n2, l.zero, y)).collect();
        if let Ok(hom) = check_good_homomorphism(r, &entry.ring, inj2) {
            homs.push(PoolHom {
                id: format!("inj2({})", entry.name),
                hom,
                source: rctx,
                target: prod_ctx,
            });
        }
    }
    homs.sort_by(|a, b| a.id.cmp(&b.id));

    Ok(SuiteCtx {
        contexts,
        pool: Pool { homs },
        subrings: catalog
            .subrings
            .iter()
            .map(|f| (f.ring_name.clone(), f.members))
            .collect(),
    })
}
