//! Exact matroid queries from an explicit basis family: rank, closure,
//! cyclic flats, connectivity, duality, split detection, and extraction of
//! the cyclic-flat count tables consumed by the face-count formulas.
//!
//! Everything here is desk scale by design: ranks are maxima of basis
//! intersections, connectivity is an exhaustive separator search, and flats
//! are enumerated as closures. Correctness first, speed second.

use std::collections::HashSet;

use thiserror::Error;

use crate::subset::{all_subsets, k_subsets, Subset, MAX_GROUND_SET};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("ground set of size {n} exceeds the {MAX_GROUND_SET}-element limit")]
    GroundSetTooLarge { n: usize },
    #[error("basis family is empty")]
    NoBases,
    #[error("basis {basis} has {len} elements, expected rank {rank}")]
    BasisSizeMismatch {
        basis: Subset,
        len: usize,
        rank: usize,
    },
    #[error("duplicate basis {basis}")]
    DuplicateBasis { basis: Subset },
    #[error("element {element} is outside the ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("rank {rank} exceeds ground set size {n}")]
    RankTooLarge { rank: usize, n: usize },
    #[error("basis exchange fails for {b1} and {b2} at element {element}")]
    ExchangeFailure {
        b1: Subset,
        b2: Subset,
        element: usize,
    },
    #[error("matroid is not connected")]
    NotConnected,
    #[error("matroid is not split: cyclic flats {f} and {g} violate the intersection bound")]
    NotSplit { f: Subset, g: Subset },
}

/// A matroid given by its ground-set size and explicit basis family.
///
/// Bases are stored sorted and deduplicated. `new` performs the cheap
/// structural checks; the quadratic basis-exchange test is a separate call
/// because it dominates construction time for dense basis families.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<Subset>,
}

impl Matroid {
    pub fn new(n: usize, bases: Vec<Subset>) -> Result<Self, MatroidError> {
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge { n });
        }
        if bases.is_empty() {
            return Err(MatroidError::NoBases);
        }
        let rank = bases[0].len();
        if rank > n {
            return Err(MatroidError::RankTooLarge { rank, n });
        }
        let full = Subset::full(n);
        let mut sorted = bases;
        for &b in &sorted {
            if b.len() != rank {
                return Err(MatroidError::BasisSizeMismatch {
                    basis: b,
                    len: b.len(),
                    rank,
                });
            }
            if !b.is_subset_of(full) {
                let element = b.iter().find(|&e| e >= n).unwrap();
                return Err(MatroidError::ElementOutOfRange { element, n });
            }
        }
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(MatroidError::DuplicateBasis { basis: w[0] });
        }
        Ok(Matroid {
            n,
            rank,
            bases: sorted,
        })
    }

    pub fn from_basis_lists(n: usize, bases: &[Vec<usize>]) -> Result<Self, MatroidError> {
        for b in bases {
            if let Some(&e) = b.iter().find(|&&e| e >= n) {
                return Err(MatroidError::ElementOutOfRange { element: e, n });
            }
        }
        Matroid::new(
            n,
            bases
                .iter()
                .map(|b| Subset::from_elements(b.iter().copied()))
                .collect(),
        )
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    /// Exhaustive basis-exchange check. Quadratic in the number of bases;
    /// intended for ground sets up to a dozen elements.
    pub fn check_exchange(&self) -> Result<(), MatroidError> {
        let set: HashSet<Subset> = self.bases.iter().copied().collect();
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                if b1 == b2 {
                    continue;
                }
                'elems: for e in b1.difference(b2).iter() {
                    for f in b2.difference(b1).iter() {
                        if set.contains(&b1.without(e).with(f)) {
                            continue 'elems;
                        }
                    }
                    return Err(MatroidError::ExchangeFailure {
                        b1,
                        b2,
                        element: e,
                    });
                }
            }
        }
        Ok(())
    }

    fn rank_bits(&self, s: Subset) -> usize {
        self.bases
            .iter()
            .map(|b| b.intersect(s).len())
            .max()
            .unwrap_or(0)
    }

    /// Rank of a subset: the largest intersection with a basis.
    pub fn rank_of(&self, s: Subset) -> Result<usize, MatroidError> {
        if !s.is_subset_of(Subset::full(self.n)) {
            let element = s.iter().find(|&e| e >= self.n).unwrap();
            return Err(MatroidError::ElementOutOfRange { element, n: self.n });
        }
        Ok(self.rank_bits(s))
    }

    fn closure_bits(&self, s: Subset) -> Subset {
        let r = self.rank_bits(s);
        let mut cl = s;
        for e in s.complement(self.n).iter() {
            if self.rank_bits(s.with(e)) == r {
                cl = cl.with(e);
            }
        }
        cl
    }

    /// Closure: the subset together with every element that does not raise
    /// its rank.
    pub fn closure_of(&self, s: Subset) -> Result<Subset, MatroidError> {
        if !s.is_subset_of(Subset::full(self.n)) {
            let element = s.iter().find(|&e| e >= self.n).unwrap();
            return Err(MatroidError::ElementOutOfRange { element, n: self.n });
        }
        Ok(self.closure_bits(s))
    }

    fn is_flat(&self, s: Subset) -> bool {
        self.closure_bits(s) == s
    }

    /// A set is cyclic when its restriction has no coloops: removing any
    /// single element leaves the rank unchanged.
    fn is_cyclic_set(&self, s: Subset) -> bool {
        let r = self.rank_bits(s);
        s.iter().all(|e| self.rank_bits(s.without(e)) == r)
    }

    /// Every cyclic flat, including the empty set (when the matroid has no
    /// loops) and possibly the ground set. Sorted by size, then by the
    /// lexicographic order of the element lists.
    pub fn cyclic_flats(&self) -> Vec<CyclicFlat> {
        let mut flats: Vec<Subset> = Vec::new();
        if self.n <= 16 {
            // small ground sets: scan everything
            for s in all_subsets(self.n) {
                if self.is_flat(s) && self.is_cyclic_set(s) {
                    flats.push(s);
                }
            }
        } else {
            // every flat is the closure of an independent set, and
            // independent sets have at most `rank` elements
            let mut seen: HashSet<Subset> = HashSet::new();
            for size in 0..=self.rank {
                for s in k_subsets(self.n, size) {
                    let cl = self.closure_bits(s);
                    if seen.insert(cl) && self.is_cyclic_set(cl) {
                        flats.push(cl);
                    }
                }
            }
        }
        let mut out: Vec<CyclicFlat> = flats
            .into_iter()
            .map(|f| CyclicFlat {
                elements: f,
                rank: self.rank_bits(f),
                size: f.len(),
            })
            .collect();
        out.sort_by(|a, b| {
            a.size
                .cmp(&b.size)
                .then_with(|| a.elements.lex_cmp(b.elements))
        });
        out
    }

    /// Complement the bases. The dual of a free matroid has rank zero and a
    /// single empty basis, which this crate admits as a valid matroid.
    pub fn dual(&self) -> Matroid {
        let mut bases: Vec<Subset> = self
            .bases
            .iter()
            .map(|b| b.complement(self.n))
            .collect();
        bases.sort();
        Matroid {
            n: self.n,
            rank: self.n - self.rank,
            bases,
        }
    }

    /// Partition of the ground set into connected components.
    ///
    /// Fast path: union-find over the fundamental circuits of one basis.
    /// Fundamental circuits never cross components, so the resulting
    /// partition refines the true one; it is accepted only when the part
    /// ranks add up to the matroid rank, which certifies an exact
    /// direct-sum decomposition (and the finest one is the components).
    /// Should the certificate ever fail, the exhaustive separator scan
    /// decides instead; that scan is the desk-scale reference and caps the
    /// ground set at 25 elements.
    pub fn connected_components(&self) -> Vec<Subset> {
        if let Some(parts) = self.components_by_fundamental_circuits() {
            return parts;
        }
        self.components_by_separator_scan()
    }

    fn components_by_fundamental_circuits(&self) -> Option<Vec<Subset>> {
        let base = self.bases[0];
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for e in base.complement(self.n).iter() {
            for f in base.iter() {
                if self.is_basis(base.without(f).with(e)) {
                    let (re, rf) = (find(&mut parent, e), find(&mut parent, f));
                    parent[re] = rf;
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Subset> =
            std::collections::BTreeMap::new();
        for e in 0..self.n {
            let root = find(&mut parent, e);
            let entry = groups.entry(root).or_insert(Subset::EMPTY);
            *entry = entry.with(e);
        }
        let parts: Vec<Subset> = groups.into_values().collect();
        let rank_sum: usize = parts.iter().map(|&p| self.rank_bits(p)).sum();
        if rank_sum != self.rank {
            return None;
        }
        let mut parts = parts;
        parts.sort_by(|a, b| a.lex_cmp(*b));
        Some(parts)
    }

    /// Separators are the subsets `S` with `rk(S) + rk(E \ S) = rk(E)`;
    /// components are the minimal nonempty ones, found by intersecting all
    /// separators containing each element. Exhaustive over all subsets.
    fn components_by_separator_scan(&self) -> Vec<Subset> {
        let full = Subset::full(self.n);
        let mut separators: Vec<Subset> = Vec::new();
        for s in all_subsets(self.n) {
            if s.is_empty() || s == full {
                continue;
            }
            if self.rank_bits(s) + self.rank_bits(s.complement(self.n)) == self.rank {
                separators.push(s);
            }
        }
        let mut components = Vec::new();
        let mut remaining = full;
        while !remaining.is_empty() {
            let e = remaining.iter().next().unwrap();
            let mut comp = full;
            for &s in &separators {
                if s.contains(e) {
                    comp = comp.intersect(s);
                }
            }
            components.push(comp);
            remaining = remaining.difference(comp);
        }
        components.sort_by(|a, b| a.lex_cmp(*b));
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Restriction to a subset, with elements renumbered in increasing
    /// order. Returns the restricted matroid and the original label of each
    /// new element.
    pub fn restriction(&self, s: Subset) -> (Matroid, Vec<usize>) {
        let labels = s.elements();
        let r = self.rank_bits(s);
        let mut bases: Vec<Subset> = self
            .bases
            .iter()
            .filter(|b| b.intersect(s).len() == r)
            .map(|b| {
                Subset::from_elements(
                    b.intersect(s)
                        .iter()
                        .map(|e| labels.binary_search(&e).unwrap()),
                )
            })
            .collect();
        bases.sort();
        bases.dedup();
        (
            Matroid {
                n: labels.len(),
                rank: r,
                bases,
            },
            labels,
        )
    }

    fn proper_cyclic_flats(&self) -> Vec<CyclicFlat> {
        self.cyclic_flats()
            .into_iter()
            .filter(|f| !f.elements.is_empty() && f.size < self.n)
            .collect()
    }

    /// Split test: a connected matroid passes when every pair of proper
    /// nonempty cyclic flats `F`, `G` satisfies
    /// `|F ∩ G| + rank <= rk(F) + rk(G)`. Returns the first violating pair.
    /// Disconnected input is tested component by component, with the
    /// certificate reported in global labels.
    pub fn split_certificate(&self) -> Option<(Subset, Subset)> {
        let components = self.connected_components();
        if components.len() == 1 {
            let flats = self.proper_cyclic_flats();
            for (i, f) in flats.iter().enumerate() {
                for g in flats.iter().skip(i + 1) {
                    let c = f.elements.intersect(g.elements).len();
                    if c + self.rank > f.rank + g.rank {
                        return Some((f.elements, g.elements));
                    }
                }
            }
            return None;
        }
        for comp in components {
            let (sub, labels) = self.restriction(comp);
            if let Some((f, g)) = sub.split_certificate() {
                let lift = |s: Subset| Subset::from_elements(s.iter().map(|e| labels[e]));
                return Some((lift(f), lift(g)));
            }
        }
        None
    }

    pub fn is_split(&self) -> bool {
        self.split_certificate().is_none()
    }

    /// Counts of proper nonempty cyclic flats by rank and size, and of
    /// modular pairs among them by the canonical intersection key. Defined
    /// only for connected split matroids; anything else is an error.
    pub fn cyclic_flat_tables(&self) -> Result<(LambdaTable, MuTable), MatroidError> {
        if !self.is_connected() {
            return Err(MatroidError::NotConnected);
        }
        if let Some((f, g)) = self.split_certificate() {
            return Err(MatroidError::NotSplit { f, g });
        }
        let flats = self.proper_cyclic_flats();
        let mut lambda = LambdaTable::new();
        for f in &flats {
            lambda.increment(f.rank, f.size);
        }
        let mut mu = MuTable::new();
        for (i, f) in flats.iter().enumerate() {
            for g in flats.iter().skip(i + 1) {
                let inter = f.elements.intersect(g.elements);
                let union = f.elements.union(g.elements);
                let rk_inter = self.rank_bits(inter);
                let rk_union = self.rank_bits(union);
                if f.rank + g.rank == rk_inter + rk_union {
                    let key = MuKey::canonical(
                        f.rank - rk_inter,
                        g.rank - rk_inter,
                        f.elements.difference(g.elements).len(),
                        g.elements.difference(f.elements).len(),
                    );
                    mu.increment(key);
                }
            }
        }
        Ok((lambda, mu))
    }
}

/// A cyclic flat: a flat whose restriction has no coloops.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CyclicFlat {
    pub elements: Subset,
    pub rank: usize,
    pub size: usize,
}

/// Counts of proper nonempty cyclic flats keyed by (rank, size).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LambdaTable {
    entries: std::collections::BTreeMap<(usize, usize), u64>,
}

impl LambdaTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn increment(&mut self, rank: usize, size: usize) {
        *self.entries.entry((rank, size)).or_insert(0) += 1;
    }

    pub fn insert(&mut self, rank: usize, size: usize, count: u64) {
        if count > 0 {
            self.entries.insert((rank, size), count);
        }
    }

    pub fn get(&self, rank: usize, size: usize) -> u64 {
        self.entries.get(&(rank, size)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(r, h), &c)| (r, h, c))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

/// Canonical key for an unordered modular pair of cyclic flats:
/// `a = |F1 \ F2|`, `b = |F2 \ F1|`, `alpha = rk F1 - rk(F1 ∩ F2)`,
/// `beta = rk F2 - rk(F1 ∩ F2)`, ordered so that `a < b`, or `a = b` and
/// `alpha <= beta`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MuKey {
    pub alpha: usize,
    pub beta: usize,
    pub a: usize,
    pub b: usize,
}

impl MuKey {
    pub fn canonical(alpha: usize, beta: usize, a: usize, b: usize) -> Self {
        if a < b || (a == b && alpha <= beta) {
            MuKey { alpha, beta, a, b }
        } else {
            MuKey {
                alpha: beta,
                beta: alpha,
                a: b,
                b: a,
            }
        }
    }
}

/// Counts of modular pairs of proper nonempty cyclic flats by canonical key.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MuTable {
    entries: std::collections::BTreeMap<MuKey, u64>,
}

impl MuTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn increment(&mut self, key: MuKey) {
        *self.entries.entry(key).or_insert(0) += 1;
    }

    pub fn insert(&mut self, key: MuKey, count: u64) {
        if count > 0 {
            self.entries.insert(key, count);
        }
    }

    pub fn get(&self, key: MuKey) -> u64 {
        self.entries.get(&key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (MuKey, u64)> + '_ {
        self.entries.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}
