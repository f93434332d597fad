/// Growable bitset; missing high words read as zero.
#[derive(Debug, Clone, Default)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Self { words: Vec::with_capacity(bits.div_ceil(64)) }
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    pub fn remove(&mut self, i: usize) {
        if let Some(w) = self.words.get_mut(i / 64) {
            *w &= !(1 << (i % 64));
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().enumerate().all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (i, a) in self.words.iter_mut().enumerate() {
            *a &= other.words.get(i).copied().unwrap_or(0);
        }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = BitSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    proptest! {
        #[test]
        fn agrees_with_btreeset(a in proptest::collection::vec(0usize..300, 0..40),
                                b in proptest::collection::vec(0usize..300, 0..40)) {
            let sa: BTreeSet<usize> = a.iter().copied().collect();
            let sb: BTreeSet<usize> = b.iter().copied().collect();
            let ba: BitSet = a.iter().copied().collect();
            let bb: BitSet = b.iter().copied().collect();
            prop_assert_eq!(ba.len(), sa.len());
            prop_assert_eq!(ba.is_subset(&bb), sa.is_subset(&sb));
            let u: Vec<usize> = ba.union(&bb).iter().collect();
            prop_assert_eq!(u, sa.union(&sb).copied().collect::<Vec<_>>());
            let mut i = ba.clone();
            i.intersect_with(&bb);
            prop_assert_eq!(i.iter().collect::<Vec<_>>(), sa.intersection(&sb).copied().collect::<Vec<_>>());
        }
    }

    #[test]
    fn trailing_zero_words_do_not_matter_for_subset() {
        let mut a = BitSet::new();
        a.insert(200);
        a.remove(200);
        let b = BitSet::new();
        assert!(a.is_subset(&b));
        assert!(a.is_empty());
    }
}
