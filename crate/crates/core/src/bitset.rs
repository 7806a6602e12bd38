use std::hash::{DefaultHasher, Hash, Hasher};

/// Fixed-length set of element indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bitset {
    len: usize,
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = u32>) -> Self {
        let mut b = Self::new(len);
        for i in idx {
            b.insert(i);
        }
        b
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn insert(&mut self, i: u32) -> bool {
        let (w, m) = ((i / 64) as usize, 1u64 << (i % 64));
        let fresh = self.words[w] & m == 0;
        self.words[w] |= m;
        fresh
    }

    #[inline]
    pub fn contains(&self, i: u32) -> bool {
        self.words[(i / 64) as usize] & (1u64 << (i % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros();
                w &= w - 1;
                Some(k as u32 * 64 + t)
            })
        })
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// 128-bit hash of the member indices; the canonical identity of a subgroup.
    pub fn fingerprint(&self) -> u128 {
        let mut lo = DefaultHasher::new();
        self.words.hash(&mut lo);
        let mut hi = DefaultHasher::new();
        0x9e37_79b9_7f4a_7c15u64.hash(&mut hi);
        self.words.hash(&mut hi);
        self.len.hash(&mut hi);
        ((hi.finish() as u128) << 64) | lo.finish() as u128
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_ops() {
        let mut a = Bitset::from_indices(130, [0, 5, 64, 129]);
        assert_eq!(a.count(), 4);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 5, 64, 129]);
        assert!(!a.insert(5));
        let b = Bitset::from_indices(130, [5, 129]);
        assert!(b.is_subset(&a));
        a.intersect_with(&b);
        assert_eq!(a, b);
        assert_ne!(a.fingerprint(), Bitset::from_indices(130, [5]).fingerprint());
    }
}
