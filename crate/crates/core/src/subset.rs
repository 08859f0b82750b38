//! Ground-set subsets as 64-bit masks. Element `i` corresponds to bit `i`,
//! which caps ground sets at 64 elements everywhere in this crate.

use std::fmt;

/// Hard upper bound on ground-set size imposed by the bitmask representation.
pub const MAX_GROUND_SET: usize = 64;

/// A subset of `{0, ..., n-1}` stored as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The full set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND_SET);
        if n == MAX_GROUND_SET {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_GROUND_SET);
        Subset(1u64 << i)
    }

    /// Builds a subset from element indices. Panics on indices >= 64;
    /// range checks against a specific ground set are the caller's job.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        let mut bits = 0u64;
        for e in elems {
            assert!(e < MAX_GROUND_SET, "element {e} out of bitmask range");
            bits |= 1u64 << e;
        }
        Subset(bits)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_GROUND_SET && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Self) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        Subset(self.0 ^ other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        Subset(Self::full(n).0 & !self.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates the elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the sorted element lists (not numeric mask
    /// order): `{0,5}` precedes `{2,3}`.
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, e) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// All k-element subsets of `{0, ..., n-1}` in lexicographic order of their
/// sorted element lists.
pub fn k_subsets(n: usize, k: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Subset::EMPTY);
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(Subset::from_elements(idx.iter().copied()));
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All subsets of `{0, ..., n-1}`; requires n <= 25 to keep the output sane.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    assert!(n <= 25, "full subset enumeration capped at n = 25");
    (0u64..(1u64 << n)).map(Subset::from_bits)
}
