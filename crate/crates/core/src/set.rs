//! Small bitset over carrier indices.
//!
//! Every subset of a hyperring carrier (mul-table cells, hyperideals,
//! product-class members, γ*-classes) is an `ElemSet`. The fixed 256-bit
//! backing covers the largest structure the engine builds (2×2 hypermatrix
//! carriers of size `n⁴ ≤ 256`).

use std::fmt;

/// A subset of `{0, …, n−1}` for some carrier size `n ≤ 256`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet([u64; 4]);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet([0; 4]);

    /// Maximum carrier size representable.
    pub const CAPACITY: usize = 256;

    pub fn singleton(i: usize) -> ElemSet {
        let mut s = ElemSet::EMPTY;
        s.insert(i);
        s
    }

    /// The full carrier `{0, …, n−1}`.
    pub fn full(n: usize) -> ElemSet {
        assert!(n <= Self::CAPACITY);
        let mut s = ElemSet::EMPTY;
        for w in 0..4 {
            let lo = w * 64;
            if n >= lo + 64 {
                s.0[w] = !0;
            } else if n > lo {
                s.0[w] = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> ElemSet {
        let mut s = ElemSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < Self::CAPACITY);
        self.0[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < Self::CAPACITY && self.0[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for w in 0..4 {
            out.0[w] |= other.0[w];
        }
        out
    }

    #[inline]
    pub fn union_in_place(&mut self, other: &ElemSet) {
        for w in 0..4 {
            self.0[w] |= other.0[w];
        }
    }

    #[inline]
    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for w in 0..4 {
            out.0[w] &= other.0[w];
        }
        out
    }

    #[inline]
    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for w in 0..4 {
            out.0[w] &= !other.0[w];
        }
        out
    }

    #[inline]
    pub fn is_subset(&self, other: &ElemSet) -> bool {
        (0..4).all(|w| self.0[w] & !other.0[w] == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &ElemSet) -> bool {
        (0..4).any(|w| self.0[w] & other.0[w] != 0)
    }

    /// Smallest member, if any.
    pub fn min_elem(&self) -> Option<usize> {
        for w in 0..4 {
            if self.0[w] != 0 {
                return Some(w * 64 + self.0[w].trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let words = self.0;
        (0..4).flat_map(move |w| {
            let mut bits = words[w];
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let i = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + i)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Members as a comma-joined index list, e.g. `"0,2"`.
    pub fn csv(&self) -> String {
        self.iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parse a comma-joined index list. Whitespace is not accepted.
    pub fn parse_csv(s: &str) -> Option<ElemSet> {
        let mut out = ElemSet::EMPTY;
        if s.is_empty() {
            return Some(out);
        }
        for part in s.split(',') {
            let i: usize = part.parse().ok()?;
            if i >= Self::CAPACITY {
                return None;
            }
            out.insert(i);
        }
        Some(out)
    }
}

/// Lexicographic order on the ascending member lists.
impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.csv())
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElemSet::from_indices(iter)
    }
}
