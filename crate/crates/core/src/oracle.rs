//! Brute-force face lattice of a matroid base polytope, used as ground
//! truth for the formula engine at small scale.
//!
//! The polytope is described by one vertex per basis plus the standard
//! inequality system (coordinate bounds and one rank bound per cyclic
//! flat). A face is a set of vertices closed under the tight-set
//! intersection: starting from the full vertex set, intersecting with the
//! tight-vertex set of each inequality and deduplicating until a fixpoint
//! enumerates every nonempty face. Dimensions come from exact integer
//! elimination on vertex difference vectors; no floating point anywhere.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigInt;
use thiserror::Error;

use crate::matroid::Matroid;
use crate::poly::FPolynomial;
use crate::subset::Subset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("ground set of size {n} exceeds the oracle limit of {limit}; raise the limit to proceed")]
    GroundSetLimit { n: usize, limit: usize },
    #[error("face enumeration exceeded the configured limit of {limit} faces")]
    FaceLimit { limit: usize },
}

/// Hard limits for the oracle. Exceeding one is a refusal, never a
/// truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_ground_set: usize,
    pub max_faces: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_ground_set: 10,
            max_faces: 500_000,
        }
    }
}

impl OracleLimits {
    pub fn with_max_ground_set(n: usize) -> Self {
        OracleLimits {
            max_ground_set: n,
            ..Default::default()
        }
    }
}

/// The polytope vertices: one 0/1 indicator point per basis, as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    pub n: usize,
    pub vertices: Vec<Subset>,
}

pub fn polytope_vertices(m: &Matroid) -> VertexSet {
    VertexSet {
        n: m.ground_set_size(),
        vertices: m.bases().to_vec(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    /// sum of the supported coordinates <= rhs
    Le,
    /// sum of the supported coordinates >= rhs
    Ge,
}

/// One linear inequality with 0/1 coefficients given by `support`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub support: Subset,
    pub rhs: usize,
    pub sense: Sense,
}

impl Inequality {
    pub fn satisfied_by(&self, v: Subset) -> bool {
        let lhs = v.intersect(self.support).len();
        match self.sense {
            Sense::Le => lhs <= self.rhs,
            Sense::Ge => lhs >= self.rhs,
        }
    }

    pub fn tight_at(&self, v: Subset) -> bool {
        v.intersect(self.support).len() == self.rhs
    }
}

/// The H-description used by the oracle: coordinate bounds plus one rank
/// bound per cyclic flat, together with the implicit equality fixing the
/// coordinate sum. Redundant rows are harmless for the closure method.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalitySystem {
    pub n: usize,
    pub rank: usize,
    pub rows: Vec<Inequality>,
}

pub fn inequality_system(m: &Matroid) -> InequalitySystem {
    let n = m.ground_set_size();
    let mut rows = Vec::with_capacity(2 * n);
    for i in 0..n {
        rows.push(Inequality {
            support: Subset::singleton(i),
            rhs: 0,
            sense: Sense::Ge,
        });
        rows.push(Inequality {
            support: Subset::singleton(i),
            rhs: 1,
            sense: Sense::Le,
        });
    }
    for flat in m.cyclic_flats() {
        rows.push(Inequality {
            support: flat.elements,
            rhs: flat.rank,
            sense: Sense::Le,
        });
    }
    InequalitySystem {
        n,
        rank: m.rank(),
        rows,
    }
}

impl InequalitySystem {
    /// Every vertex must satisfy every row; used as a self-check in tests.
    pub fn validates(&self, vertices: &VertexSet) -> bool {
        vertices
            .vertices
            .iter()
            .all(|&v| self.rows.iter().all(|row| row.satisfied_by(v)))
    }
}

/// Vertex subsets as packed bitsets over vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct VertBits(Vec<u64>);

impl VertBits {
    fn full(n: usize) -> Self {
        let words = n.div_ceil(64);
        let mut v = vec![u64::MAX; words];
        if !n.is_multiple_of(64) {
            v[words - 1] = (1u64 << (n % 64)) - 1;
        }
        VertBits(v)
    }

    fn empty(n: usize) -> Self {
        VertBits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1u64 << (i % 64);
    }

    fn intersect(&self, other: &Self) -> Self {
        VertBits(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a & b)
                .collect(),
        )
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.0.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                out.push(wi * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }
}

/// One face: the indices of its vertices (into the canonical vertex list)
/// and its affine dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertex_indices: Vec<usize>,
    pub dim: usize,
}

/// All nonempty faces of the base polytope, the full polytope included,
/// sorted by dimension and then by vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    pub vertices: VertexSet,
    pub faces: Vec<Face>,
}

impl FaceLattice {
    pub fn dim(&self) -> usize {
        self.faces.last().map_or(0, |f| f.dim)
    }

    /// Face counts by dimension, read off as a polynomial.
    pub fn f_vector(&self) -> FPolynomial {
        let mut counts = vec![BigInt::from(0); self.dim() + 1];
        for f in &self.faces {
            counts[f.dim] += 1;
        }
        FPolynomial::from_coeffs(counts)
    }
}

/// Exact affine dimension of a set of 0/1 points: the rank of the
/// difference vectors against the first point, by fraction-free integer
/// elimination.
fn affine_dim(points: &[Subset], n: usize) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = points[0];
    let mut mat: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|&p| {
            (0..n)
                .map(|i| p.contains(i) as i128 - base.contains(i) as i128)
                .collect()
        })
        .collect();
    let rows = mat.len();
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..n {
        let Some(pivot) = (rank..rows).find(|&i| mat[i][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let (pivot_rows, rest) = mat.split_at_mut(rank + 1);
        let pivot_row = &pivot_rows[rank];
        let pivot_val = pivot_row[col];
        for row in rest.iter_mut() {
            let factor = row[col];
            for (entry, &piv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *entry = (*entry * pivot_val - factor * piv) / prev;
            }
        }
        prev = pivot_val;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Complete face lattice by breadth-first tight-set intersection. Refuses
/// (never truncates) when a configured limit is exceeded.
pub fn face_lattice(m: &Matroid, limits: &OracleLimits) -> Result<FaceLattice, OracleError> {
    let n = m.ground_set_size();
    if n > limits.max_ground_set {
        return Err(OracleError::GroundSetLimit {
            n,
            limit: limits.max_ground_set,
        });
    }
    let vertices = polytope_vertices(m);
    let system = inequality_system(m);
    let num_vertices = vertices.vertices.len();

    let tight_sets: Vec<VertBits> = system
        .rows
        .iter()
        .map(|row| {
            let mut bits = VertBits::empty(num_vertices);
            for (i, &v) in vertices.vertices.iter().enumerate() {
                if row.tight_at(v) {
                    bits.set(i);
                }
            }
            bits
        })
        .collect();

    let root = VertBits::full(num_vertices);
    let mut seen: HashSet<VertBits> = HashSet::new();
    seen.insert(root.clone());
    let mut queue: VecDeque<VertBits> = VecDeque::new();
    queue.push_back(root);
    while let Some(face) = queue.pop_front() {
        for tight in &tight_sets {
            let smaller = face.intersect(tight);
            if smaller.is_empty() || smaller == face {
                continue;
            }
            if seen.contains(&smaller) {
                continue;
            }
            if seen.len() >= limits.max_faces {
                return Err(OracleError::FaceLimit {
                    limit: limits.max_faces,
                });
            }
            seen.insert(smaller.clone());
            queue.push_back(smaller);
        }
    }

    let mut faces: Vec<Face> = seen
        .into_iter()
        .map(|bits| {
            let idx = bits.indices();
            let pts: Vec<Subset> = idx.iter().map(|&i| vertices.vertices[i]).collect();
            Face {
                dim: affine_dim(&pts, n),
                vertex_indices: idx,
            }
        })
        .collect();
    faces.sort_by(|a, b| {
        a.dim
            .cmp(&b.dim)
            .then_with(|| a.vertex_indices.cmp(&b.vertex_indices))
    });
    Ok(FaceLattice { vertices, faces })
}

/// f-polynomial via the face lattice.
pub fn f_vector_oracle(m: &Matroid, limits: &OracleLimits) -> Result<FPolynomial, OracleError> {
    Ok(face_lattice(m, limits)?.f_vector())
}

/// Census of 2-dimensional faces by their vertex count. For matroid base
/// polytopes only triangles and squares occur, but anything else found is
/// reported rather than hidden.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoFaceCensus {
    pub triangles: u64,
    pub squares: u64,
    pub other: BTreeMap<usize, u64>,
}

pub fn classify_2faces(m: &Matroid, limits: &OracleLimits) -> Result<TwoFaceCensus, OracleError> {
    let lattice = face_lattice(m, limits)?;
    let mut census = TwoFaceCensus::default();
    for face in lattice.faces.iter().filter(|f| f.dim == 2) {
        match face.vertex_indices.len() {
            3 => census.triangles += 1,
            4 => census.squares += 1,
            k => *census.other.entry(k).or_insert(0) += 1,
        }
    }
    Ok(census)
}
