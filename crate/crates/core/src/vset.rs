//! Compact vertex sets over a fixed universe 0..n, used by the clique
//! enumerators and the simplex pair loops. One u64 word per 64 vertices;
//! graphs of a few hundred vertices stay inline.

use smallvec::SmallVec;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct VSet {
    words: SmallVec<[u64; 4]>,
}

impl VSet {
    pub fn empty(universe: usize) -> Self {
        let nwords = universe.div_ceil(64).max(1);
        VSet {
            words: smallvec::smallvec![0; nwords],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[cfg(test)]
    pub fn contains(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect(&self, other: &VSet) -> VSet {
        debug_assert_eq!(self.words.len(), other.words.len());
        VSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn intersects(&self, other: &VSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn union(&self, other: &VSet) -> VSet {
        debug_assert_eq!(self.words.len(), other.words.len());
        VSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &VSet) -> VSet {
        VSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    /// `self ∩ other ∩ {i : i > pivot}` in one pass; the workhorse of the
    /// ordered clique extension.
    pub fn intersect_above(&self, other: &VSet, pivot: usize) -> VSet {
        let mut words: SmallVec<[u64; 4]> = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & b)
            .collect();
        let w = pivot / 64;
        for word in words.iter_mut().take(w) {
            *word = 0;
        }
        let shift = pivot % 64;
        if shift == 63 {
            words[w] = 0;
        } else {
            words[w] &= !((1u64 << (shift + 1)) - 1);
        }
        VSet { words }
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}
