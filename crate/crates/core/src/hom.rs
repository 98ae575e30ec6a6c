//! Good homomorphisms between hyperrings: additive maps that carry `x∘y`
//! onto `φ(x)∘φ(y)` as sets, with ideal transfer along them.

use thiserror::Error;

use crate::ideal::{check_hyperideal, Hyperideal};
use crate::ring::Ring;
use crate::set::ElemSet;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum HomError {
    #[error("map is not total on the source carrier")]
    NotTotal,
    #[error("not a good homomorphism: {op} fails at ({x},{y})")]
    NotHomomorphism { op: &'static str, x: usize, y: usize },
    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),
}

/// A verified good homomorphism.
#[derive(Clone)]
pub struct GoodHomomorphism {
    pub source: Ring,
    pub target: Ring,
    pub map: Vec<usize>,
}

impl std::fmt::Debug for GoodHomomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} -> {} {:?}", self.source.name, self.target.name, self.map)
    }
}

/// Check both defining equalities exhaustively.
pub fn check_good_homomorphism(
    source: &Ring,
    target: &Ring,
    map: Vec<usize>,
) -> Result<GoodHomomorphism, HomError> {
    if map.len() != source.n || map.iter().any(|&v| v >= target.n) {
        return Err(HomError::NotTotal);
    }
    for x in 0..source.n {
        for y in 0..source.n {
            if map[source.add(x, y)] != target.add(map[x], map[y]) {
                return Err(HomError::NotHomomorphism { op: "addition", x, y });
            }
            let image: ElemSet = source.mul(x, y).iter().map(|c| map[c]).collect();
            if image != target.mul(map[x], map[y]) {
                return Err(HomError::NotHomomorphism { op: "multiplication", x, y });
            }
        }
    }
    Ok(GoodHomomorphism {
        source: source.clone(),
        target: target.clone(),
        map,
    })
}

impl GoodHomomorphism {
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image_of_set(&self, s: &ElemSet) -> ElemSet {
        s.iter().map(|x| self.map[x]).collect()
    }

    pub fn image(&self) -> ElemSet {
        (0..self.source.n).map(|x| self.map[x]).collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == self.target.carrier()
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.source.n
    }

    /// `{x : φ(x) = 0}`.
    pub fn kernel(&self) -> ElemSet {
        (0..self.source.n)
            .filter(|&x| self.map[x] == self.target.zero)
            .collect()
    }

    /// Every nonunit of the source maps to a nonunit of the target.
    pub fn preserves_nonunits(&self) -> bool {
        let src_nonunits = self.source.nonunits();
        let tgt_units = self.target.units().units;
        src_nonunits.iter().all(|x| !tgt_units.contains(self.map[x]))
    }

    /// `φ⁻¹(I₂)`, verified to be a hyperideal of the source.
    pub fn preimage_ideal(&self, target_ideal: &ElemSet) -> Result<Hyperideal, HomError> {
        if check_hyperideal(&self.target, target_ideal).is_err() {
            return Err(HomError::HypothesisUnmet(
                "preimage argument is not a hyperideal of the target".into(),
            ));
        }
        let members: ElemSet = (0..self.source.n)
            .filter(|&x| target_ideal.contains(self.map[x]))
            .collect();
        check_hyperideal(&self.source, &members).map_err(|_| {
            HomError::HypothesisUnmet("preimage is not a hyperideal".into())
        })?;
        Ok(Hyperideal { members })
    }

    /// `φ(I₁)` for a surjective map with `ker(φ) ⊆ I₁`, verified to be a
    /// hyperideal of the target.
    pub fn image_ideal(&self, source_ideal: &ElemSet) -> Result<Hyperideal, HomError> {
        if check_hyperideal(&self.source, source_ideal).is_err() {
            return Err(HomError::HypothesisUnmet(
                "image argument is not a hyperideal of the source".into(),
            ));
        }
        if !self.is_surjective() {
            return Err(HomError::HypothesisUnmet("map is not surjective".into()));
        }
        if !self.kernel().is_subset(source_ideal) {
            return Err(HomError::HypothesisUnmet(
                "kernel is not contained in the ideal".into(),
            ));
        }
        let members = self.image_of_set(source_ideal);
        check_hyperideal(&self.target, &members)
            .map_err(|_| HomError::HypothesisUnmet("image is not a hyperideal".into()))?;
        Ok(Hyperideal { members })
    }
}

/// The identity on a ring.
pub fn identity_hom(r: &Ring) -> GoodHomomorphism {
    check_good_homomorphism(r, r, (0..r.n).collect()).expect("identity is a good homomorphism")
}
