//! Fixed-capacity bit sets over vertex slots, used on the hot paths of the
//! burning search.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct SlotSet {
    words: Vec<u64>,
}

impl SlotSet {
    pub(crate) fn empty(capacity: usize) -> Self {
        SlotSet {
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    #[cfg(test)]
    pub(crate) fn full(capacity: usize) -> Self {
        let mut set = Self::empty(capacity);
        for slot in 0..capacity {
            set.insert(slot);
        }
        set
    }

    #[inline]
    pub(crate) fn insert(&mut self, slot: usize) {
        self.words[slot / 64] |= 1 << (slot % 64);
    }

    #[inline]
    pub(crate) fn contains(&self, slot: usize) -> bool {
        self.words[slot / 64] & (1 << (slot % 64)) != 0
    }

    #[inline]
    pub(crate) fn union_with(&mut self, other: &SlotSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + bit)
            })
        })
    }
}
