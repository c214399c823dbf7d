use std::fmt;

/// A subset of players `0..n`, stored as a bitmask.
///
/// Bit `i` set means player `i` belongs to the set. The same value is read
/// as an action profile in which exactly the members play 1, so set
/// inclusion coincides with the product order on profiles.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlayerSet(u32);

/// Largest player count representable by [`PlayerSet`].
pub const MAX_PLAYERS: usize = 32;

impl PlayerSet {
    pub const EMPTY: PlayerSet = PlayerSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        PlayerSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// All players `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_PLAYERS, "at most {MAX_PLAYERS} players supported");
        if n == MAX_PLAYERS {
            PlayerSet(u32::MAX)
        } else {
            PlayerSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        PlayerSet(1u32 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> Self {
        items
            .into_iter()
            .fold(PlayerSet::EMPTY, |acc, i| acc.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_PLAYERS && self.0 & (1u32 << i) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        PlayerSet(self.0 | (1u32 << i))
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        PlayerSet(self.0 & !(1u32 << i))
    }

    #[must_use]
    pub fn toggle(self, i: usize) -> Self {
        PlayerSet(self.0 ^ (1u32 << i))
    }

    pub fn union(self, other: Self) -> Self {
        PlayerSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        PlayerSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        PlayerSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: Self) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Lowest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Highest member, if any.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// All subsets of `self`, in increasing bitmask order, starting with the
    /// empty set and ending with `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Number of subsets, `2^len`.
    pub fn subset_count(self) -> u64 {
        1u64 << self.len()
    }

    /// Packs the members of `self` that lie in `mask` into consecutive low
    /// bits, following the order of `mask`'s members.
    pub fn compress(self, mask: PlayerSet) -> usize {
        let mut out = 0usize;
        for (k, i) in mask.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << k;
            }
        }
        out
    }

    /// Inverse of [`PlayerSet::compress`].
    pub fn expand(code: usize, mask: PlayerSet) -> PlayerSet {
        let mut out = PlayerSet::EMPTY;
        for (k, i) in mask.iter().enumerate() {
            if code & (1 << k) != 0 {
                out = out.with(i);
            }
        }
        out
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }

    /// Members as 1-based indices, the usual display convention.
    pub fn one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Debug for PlayerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Displays the set with 1-based player labels, e.g. `{1,2,3}`.
impl fmt::Display for PlayerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for PlayerSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        PlayerSet::from_indices(iter)
    }
}

impl IntoIterator for PlayerSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

#[derive(Clone, Debug)]
pub struct Members(u32);

impl Iterator for Members {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = PlayerSet;
    fn next(&mut self) -> Option<PlayerSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(PlayerSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerate_all() {
        let s = PlayerSet::from_indices([1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(subs[0], PlayerSet::EMPTY);
        assert_eq!(*subs.last().unwrap(), s);
        assert_eq!(PlayerSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn compress_roundtrip() {
        let mask = PlayerSet::from_indices([0, 2, 5]);
        for x in mask.subsets() {
            assert_eq!(PlayerSet::expand(x.compress(mask), mask), x);
        }
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(PlayerSet::from_indices([0, 2]).to_string(), "{1,3}");
        assert_eq!(PlayerSet::EMPTY.to_string(), "{}");
    }

    #[test]
    fn lex_order() {
        let a = PlayerSet::from_indices([0, 4]);
        let b = PlayerSet::from_indices([1]);
        assert!(a.lex_cmp(b).is_lt());
        assert_eq!(PlayerSet::full(3).last(), Some(2));
    }
}
