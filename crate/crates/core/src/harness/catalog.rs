//! The built-in ring catalog the theorem suite runs over.

use thiserror::Error;

use crate::construct::{product_ring, quotient_ring, z4h, zn_template, ConstructError};
use crate::ideal::{proper_hyperideals, IdealError};
use crate::ring::{Ring, RingError};
use crate::set::ElemSet;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

/// Size caps for catalog construction.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Template sweep runs over carriers `2..=template_max_n`.
    pub template_max_n: usize,
    /// Product members are kept only up to this carrier size.
    pub product_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { template_max_n: 12, product_cap: 16 }
    }
}

/// How a catalog member was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Fixed 4-element example tables.
    Fixed,
    Template { n: usize, a: Vec<u64> },
    Product { left: String, right: String },
    Quotient { base: String, ideal: String },
}

pub struct CatalogEntry {
    pub name: String,
    pub ring: Ring,
    pub provenance: Provenance,
    /// Factor rings, for product members.
    pub factors: Option<(Ring, Ring)>,
}

/// Named subhyperrings used by the subring-intersection check.
pub struct SubringFixture {
    pub ring_name: String,
    pub members: ElemSet,
}

pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub subrings: Vec<SubringFixture>,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }
}

const TEMPLATE_MULTIPLIERS: &[&[u64]] = &[&[1], &[2], &[3], &[2, 3], &[2, 4]];

/// Build the default catalog: the fixed 4-element example ring, the
/// template sweep, two products, all quotients of the example ring and of
/// `zn(6,{2,3})` by their proper hyperideals, and the 30-element
/// `{2,4}`-multiplier surrogate. Entries are sorted by name.
pub fn builtin_catalog(limits: &Limits) -> Result<Catalog, CatalogError> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let push = |entries: &mut Vec<CatalogEntry>, name: String, ring: Ring, provenance: Provenance, factors| {
        entries.push(CatalogEntry { name, ring, provenance, factors });
    };

    let z = z4h();
    push(&mut entries, z.name.clone(), z.clone(), Provenance::Fixed, None);

    for n in 2..=limits.template_max_n {
        for a in TEMPLATE_MULTIPLIERS {
            // Template construction validates; a failing pair would be
            // rejected here rather than entering the catalog.
            match zn_template(n, a) {
                Ok(ring) => push(
                    &mut entries,
                    ring.name.clone(),
                    ring,
                    Provenance::Template { n, a: a.to_vec() },
                    None,
                ),
                Err(RingError::AxiomViolation { .. }) => continue,
                Err(e) => return Err(e.into()),
            }
        }
    }

    let products: Vec<(Ring, Ring)> = vec![
        (z4h(), z4h()),
        (zn_template(2, &[1])?, zn_template(3, &[1])?),
    ];
    for (l, r) in products {
        if l.n * r.n <= limits.product_cap {
            let p = product_ring(&l, &r)?;
            push(
                &mut entries,
                p.name.clone(),
                p,
                Provenance::Product { left: l.name.clone(), right: r.name.clone() },
                Some((l, r)),
            );
        }
    }

    for base in [z4h(), zn_template(6, &[2, 3])?] {
        for ideal in proper_hyperideals(&base)? {
            let q = quotient_ring(&base, &ideal.members)?;
            push(
                &mut entries,
                q.ring.name.clone(),
                q.ring,
                Provenance::Quotient { base: base.name.clone(), ideal: ideal.csv() },
                None,
            );
        }
    }

    let surrogate = zn_template(30, &[2, 4])?;
    push(
        &mut entries,
        surrogate.name.clone(),
        surrogate,
        Provenance::Template { n: 30, a: vec![2, 4] },
        None,
    );

    entries.sort_by(|a, b| a.name.cmp(&b.name));

    let subrings = vec![
        ("z4h", vec![0usize, 2]),
        ("zn(4,{1})", vec![0, 2]),
        ("zn(6,{1})", vec![0, 2, 4]),
        ("zn(6,{1})", vec![0, 3]),
        ("zn(6,{2,3})", vec![0, 3]),
        ("zn(6,{2,3})", vec![0, 2, 4]),
        ("zn(8,{1})", vec![0, 2, 4, 6]),
        ("zn(8,{1})", vec![0, 4]),
        ("zn(9,{2})", vec![0, 3, 6]),
        ("zn(12,{1})", vec![0, 2, 4, 6, 8, 10]),
        ("zn(12,{1})", vec![0, 3, 6, 9]),
        ("zn(12,{1})", vec![0, 4, 8]),
        ("zn(12,{1})", vec![0, 6]),
    ]
    .into_iter()
    .map(|(name, members)| SubringFixture {
        ring_name: name.to_string(),
        members: ElemSet::from_indices(members),
    })
    .collect();

    Ok(Catalog { entries, subrings })
}
