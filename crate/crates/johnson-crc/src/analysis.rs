//! Complete-regularity analysis: distance partitions, intersection matrices,
//! exact spectra via Lloyd's theorem, design strength, opposite codes.
//!
//! All spectral computation is exact. By Lloyd's theorem the eigenvalues of
//! the intersection matrix of a completely regular code are eigenvalues of the
//! graph, so instead of numeric eigensolving we evaluate the characteristic
//! polynomial at the `w + 1` candidate values `theta_i(n, w)` with big-integer
//! arithmetic and keep the roots.

use std::collections::HashMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

use crate::code::Code;
use crate::johnson::{binomial, JohnsonGraph, JohnsonParams, Subset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("matrix has {found} graph eigenvalues as roots, expected {expected}: it cannot be the intersection matrix of a completely regular code in this graph")]
    LloydViolation { expected: usize, found: usize },
    #[error("cell sizes are not positive integers: the array is infeasible")]
    NonIntegralSizes,
    #[error("covering radius is 0: the code is the full vertex set")]
    DegenerateInput,
    #[error("intersection matrix rows must sum to the valency {k}")]
    BadRowSums { k: i64 },
    #[error("intersection matrix must have positive off-diagonal entries")]
    NonPositiveOffDiagonal,
}

// ---------------------------------------------------------------------------
// Distance partition
// ---------------------------------------------------------------------------

/// The distance partition of the vertex set with respect to a code: cell `i`
/// holds the vertices at graph distance exactly `i` from the code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistancePartition {
    /// Cell index per vertex rank.
    pub cell_of: Vec<u8>,
    /// Vertex ranks per cell, each ascending.
    pub cells: Vec<Vec<u32>>,
}

impl DistancePartition {
    /// Covering radius: index of the farthest nonempty cell.
    pub fn rho(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cell_sizes(&self) -> Vec<u64> {
        self.cells.iter().map(|c| c.len() as u64).collect()
    }
}

/// Multi-source BFS layering from the code over Johnson adjacency.
pub fn distance_partition(graph: &JohnsonGraph, code: &Code) -> DistancePartition {
    let v = graph.vertex_count();
    let mut cell_of = vec![u8::MAX; v];
    let mut frontier: Vec<u32> = code.blocks().iter().map(|&b| graph.rank(b)).collect();
    for &r in &frontier {
        cell_of[r as usize] = 0;
    }
    let mut cells = vec![frontier.clone()];
    let mut depth = 0u8;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for &nb in graph.neighbors_of(u) {
                if cell_of[nb as usize] == u8::MAX {
                    cell_of[nb as usize] = depth;
                    next.push(nb);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        cells.push(next.clone());
        frontier = next;
    }
    DistancePartition { cell_of, cells }
}

// ---------------------------------------------------------------------------
// Intersection matrix
// ---------------------------------------------------------------------------

/// The tridiagonal `(rho+1) x (rho+1)` intersection matrix of an equitable
/// distance partition, stored as its three diagonals.
///
/// Row `i` of the matrix is `(gamma_i, alpha_i, beta_i)`: the number of
/// neighbors a cell-`i` vertex has in cells `i-1`, `i`, `i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionMatrix {
    /// `alpha_0 ..= alpha_rho`.
    pub alpha: Vec<u32>,
    /// `beta_0 ..= beta_{rho-1}`.
    pub beta: Vec<u32>,
    /// `gamma_1 ..= gamma_rho`.
    pub gamma: Vec<u32>,
}

impl IntersectionMatrix {
    pub fn new(alpha: Vec<u32>, beta: Vec<u32>, gamma: Vec<u32>) -> Self {
        assert_eq!(alpha.len(), beta.len() + 1);
        assert_eq!(beta.len(), gamma.len());
        IntersectionMatrix { alpha, beta, gamma }
    }

    pub fn rho(&self) -> usize {
        self.alpha.len() - 1
    }

    /// `gamma_i` with the convention `gamma_0 = 0`.
    pub fn gamma_at(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.gamma[i - 1]
        }
    }

    /// `beta_i` with the convention `beta_rho = 0`.
    pub fn beta_at(&self, i: usize) -> u32 {
        if i == self.rho() {
            0
        } else {
            self.beta[i]
        }
    }

    /// Full row `(gamma_i, alpha_i, beta_i)`.
    pub fn row(&self, i: usize) -> (u32, u32, u32) {
        (self.gamma_at(i), self.alpha[i], self.beta_at(i))
    }

    /// Checks row sums equal the valency and off-diagonals are positive.
    pub fn validate(&self, k: i64) -> Result<(), AnalysisError> {
        for i in 0..=self.rho() {
            let (g, a, b) = self.row(i);
            if g as i64 + a as i64 + b as i64 != k {
                return Err(AnalysisError::BadRowSums { k });
            }
        }
        if self.beta.iter().any(|&b| b == 0) || self.gamma.iter().any(|&g| g == 0) {
            return Err(AnalysisError::NonPositiveOffDiagonal);
        }
        Ok(())
    }

    /// The intersection array `{beta_0, ...; gamma_1, ...}` as display text.
    pub fn array_string(&self) -> String {
        let b: Vec<String> = self.beta.iter().map(|x| x.to_string()).collect();
        let g: Vec<String> = self.gamma.iter().map(|x| x.to_string()).collect();
        format!("{{{}; {}}}", b.join(","), g.join(","))
    }

    /// Characteristic polynomial `det(xI - M)` evaluated at `x`, exactly.
    ///
    /// Uses the standard three-term recurrence for tridiagonal determinants;
    /// every intermediate value is a `BigInt`, so there is no overflow to
    /// reason about.
    pub fn char_poly_at(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut prev = BigInt::one(); // det of empty matrix
        let mut cur = &x - BigInt::from(self.alpha[0]);
        for i in 1..=self.rho() {
            let diag = &x - BigInt::from(self.alpha[i]);
            let off = BigInt::from(self.beta[i - 1]) * BigInt::from(self.gamma[i - 1]);
            let next = diag * &cur - off * &prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// The eigenvector of the matrix for eigenvalue `theta`, normalized to
    /// `v_0 = 1`, as exact rationals.
    ///
    /// The tridiagonal recurrence gives each entry by back-substitution:
    /// `beta_i v_{i+1} = (theta - alpha_i) v_i - gamma_i v_{i-1}`. The first
    /// entry of an eigenvector of such a matrix is never zero, so the
    /// normalization is always possible.
    pub fn eigenvector(&self, theta: i64) -> Vec<BigRational> {
        let rho = self.rho();
        let mut v = Vec::with_capacity(rho + 1);
        v.push(BigRational::one());
        if rho == 0 {
            return v;
        }
        let theta = BigRational::from_integer(BigInt::from(theta));
        for i in 0..rho {
            let alpha = BigRational::from_integer(BigInt::from(self.alpha[i]));
            let beta = BigRational::from_integer(BigInt::from(self.beta[i]));
            let prev = if i == 0 {
                BigRational::zero()
            } else {
                let gamma = BigRational::from_integer(BigInt::from(self.gamma[i - 1]));
                gamma * &v[i - 1]
            };
            let next = ((&theta - alpha) * &v[i] - prev) / beta;
            v.push(next);
        }
        v
    }
}

/// One eigenvalue of a code, tagged with its index in the descending
/// eigenvalue sequence of the ambient graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Eigenvalue {
    pub index: u32,
    pub value: i64,
}

/// Exact spectrum of an intersection matrix inside `J(n, w)`.
///
/// Evaluates `det(theta I - M)` at each of the `w + 1` graph eigenvalues and
/// returns the roots found, in descending value order. A completely regular
/// code with covering radius `rho` must produce exactly `rho + 1` roots;
/// anything less is a Lloyd violation and the matrix belongs to no completely
/// regular code of this graph.
pub fn matrix_spectrum(
    m: &IntersectionMatrix,
    params: JohnsonParams,
) -> Result<Vec<Eigenvalue>, AnalysisError> {
    let mut out = Vec::new();
    for i in 0..=params.w() {
        let value = params.theta(i).expect("index in range");
        if m.char_poly_at(value).is_zero() {
            out.push(Eigenvalue { index: i, value });
        }
    }
    if out.len() != m.rho() + 1 {
        return Err(AnalysisError::LloydViolation {
            expected: m.rho() + 1,
            found: out.len(),
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Complete-regularity check
// ---------------------------------------------------------------------------

/// The three neighbor counts of one vertex: toward the previous cell, within
/// its own cell, toward the next cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct NeighborCounts {
    pub toward_prev: u32,
    pub within: u32,
    pub toward_next: u32,
}

/// First regularity violation, in canonical (colex) vertex order: the earliest
/// vertex whose neighbor counts differ from the earlier vertices of its cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub cell: usize,
    pub vertex: Subset,
    pub counts: NeighborCounts,
    pub baseline_vertex: Subset,
    pub baseline: NeighborCounts,
}

/// Outcome of [`check_crc`].
#[derive(Debug, Clone)]
pub struct CrcReport {
    pub is_crc: bool,
    pub partition: DistancePartition,
    pub cell_sizes: Vec<u64>,
    /// Present iff the code is completely regular.
    pub matrix: Option<IntersectionMatrix>,
    /// Present iff the code is completely regular.
    pub spectrum: Option<Vec<Eigenvalue>>,
    /// Largest `t` such that the blocks form a `t`-design.
    pub strength: u32,
    /// `lambda_0 ..= lambda_strength`.
    pub lambda: Vec<u128>,
    /// Present iff the code is not completely regular.
    pub witness: Option<Witness>,
}

impl CrcReport {
    pub fn rho(&self) -> usize {
        self.partition.rho()
    }

    /// Looks up an eigenvalue index in the spectrum.
    pub fn has_eigenvalue_index(&self, index: u32) -> bool {
        self.spectrum
            .as_ref()
            .is_some_and(|s| s.iter().any(|e| e.index == index))
    }

    pub fn spectrum_indices(&self) -> Option<Vec<u32>> {
        self.spectrum
            .as_ref()
            .map(|s| s.iter().map(|e| e.index).collect())
    }
}

/// Verifies complete regularity of a code by counting, for every vertex, its
/// neighbors in the adjacent cells of the distance partition.
///
/// Failure is a report outcome carrying the first witness in canonical vertex
/// order, not an error.
pub fn check_crc(graph: &JohnsonGraph, code: &Code) -> CrcReport {
    let partition = distance_partition(graph, code);
    let rho = partition.rho();
    let v = graph.vertex_count();

    let mut baselines: Vec<Option<(NeighborCounts, u32)>> = vec![None; rho + 1];
    let mut witness = None;

    for r in 0..v as u32 {
        let cell = partition.cell_of[r as usize] as usize;
        let mut counts = NeighborCounts {
            toward_prev: 0,
            within: 0,
            toward_next: 0,
        };
        for &nb in graph.neighbors_of(r) {
            // BFS layering guarantees adjacent vertices differ by at most one cell.
            let c = partition.cell_of[nb as usize] as usize;
            if c + 1 == cell {
                counts.toward_prev += 1;
            } else if c == cell {
                counts.within += 1;
            } else {
                debug_assert_eq!(c, cell + 1);
                counts.toward_next += 1;
            }
        }
        match baselines[cell] {
            None => baselines[cell] = Some((counts, r)),
            Some((base, base_rank)) => {
                if base != counts {
                    witness = Some(Witness {
                        cell,
                        vertex: graph.vertex(r),
                        counts,
                        baseline_vertex: graph.vertex(base_rank),
                        baseline: base,
                    });
                    break;
                }
            }
        }
    }

    let (strength, lambda) = strength(code);
    let cell_sizes = partition.cell_sizes();

    if let Some(witness) = witness {
        return CrcReport {
            is_crc: false,
            partition,
            cell_sizes,
            matrix: None,
            spectrum: None,
            strength,
            lambda,
            witness: Some(witness),
        };
    }

    let mut alpha = Vec::with_capacity(rho + 1);
    let mut beta = Vec::with_capacity(rho);
    let mut gamma = Vec::with_capacity(rho);
    for (i, b) in baselines.iter().enumerate() {
        let (c, _) = b.expect("no cell of a distance partition is empty");
        alpha.push(c.within);
        if i < rho {
            beta.push(c.toward_next);
        }
        if i > 0 {
            gamma.push(c.toward_prev);
        }
    }
    let matrix = IntersectionMatrix::new(alpha, beta, gamma);
    let spectrum = matrix_spectrum(&matrix, graph.params())
        .expect("an equitable partition satisfies Lloyd's theorem");

    CrcReport {
        is_crc: true,
        partition,
        cell_sizes,
        matrix: Some(matrix),
        spectrum: Some(spectrum),
        strength,
        lambda,
        witness: None,
    }
}

// ---------------------------------------------------------------------------
// Design strength
// ---------------------------------------------------------------------------

/// Largest `t` such that every `t`-subset of the ground set lies in a constant
/// number `lambda_t` of blocks, together with the table
/// `[lambda_0, ..., lambda_t]`.
///
/// Coverage is counted by iterating blocks and incrementing their `C(w, t)`
/// sub-subsets, which beats scanning all `C(n, t)` subsets for sparse codes.
pub fn strength(code: &Code) -> (u32, Vec<u128>) {
    let n = code.params().n();
    let w = code.params().w();
    let mut lambda: Vec<u128> = vec![code.len() as u128];

    for t in 1..=w {
        match coverage_constant(code, t, n) {
            Some(l) => lambda.push(l),
            None => return (t - 1, lambda),
        }
    }
    (w, lambda)
}

/// The constant `lambda_t` if every `t`-subset is covered equally, else None.
fn coverage_constant(code: &Code, t: u32, n: u32) -> Option<u128> {
    let expected_keys = binomial(n as u64, t as u64);
    if t == 1 {
        let mut counts = [0u64; 64];
        for b in code.blocks() {
            let mut bits = b.bits();
            while bits != 0 {
                counts[bits.trailing_zeros() as usize] += 1;
                bits &= bits - 1;
            }
        }
        let first = counts[0];
        if first == 0 {
            return None;
        }
        for &c in counts.iter().take(n as usize) {
            if c != first {
                return None;
            }
        }
        return Some(first as u128);
    }

    let mut counts: HashMap<u64, u64> = HashMap::new();
    for b in code.blocks() {
        for_each_sub_mask(b.bits(), t, &mut |m| {
            *counts.entry(m).or_insert(0) += 1;
        });
    }
    if counts.len() as u128 != expected_keys {
        return None; // some t-subset is uncovered while others are not
    }
    let mut values = counts.values();
    let first = *values.next()?;
    values.all(|&v| v == first).then_some(first as u128)
}

/// Calls `f` with every `t`-element sub-mask of `mask`.
fn for_each_sub_mask(mask: u64, t: u32, f: &mut impl FnMut(u64)) {
    let positions: Vec<u32> = {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        let mut bits = mask;
        while bits != 0 {
            v.push(bits.trailing_zeros());
            bits &= bits - 1;
        }
        v
    };
    let w = positions.len();
    let t = t as usize;
    if t > w {
        return;
    }
    let mut idx: Vec<usize> = (0..t).collect();
    loop {
        let mut m = 0u64;
        for &i in &idx {
            m |= 1 << positions[i];
        }
        f(m);
        // next combination
        let mut i = t;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + w - t {
                break;
            }
        }
        if idx[i] == i + w - t {
            return;
        }
        idx[i] += 1;
        for j in i + 1..t {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Opposite code and cell sizes
// ---------------------------------------------------------------------------

/// The opposite code: the farthest cell `C_rho` of the distance partition.
pub fn opposite_code(graph: &JohnsonGraph, code: &Code) -> Result<Code, AnalysisError> {
    let partition = distance_partition(graph, code);
    if partition.rho() == 0 {
        return Err(AnalysisError::DegenerateInput);
    }
    let blocks: Vec<Subset> = partition.cells[partition.rho()]
        .iter()
        .map(|&r| graph.vertex(r))
        .collect();
    Ok(Code::new(graph.params(), blocks).expect("cells are valid nonempty vertex sets"))
}

/// Solves the edge-count identities `|C_{i+1}| gamma_{i+1} = |C_i| beta_i`
/// under `sum |C_i| = total` and returns the exact cell sizes, or flags the
/// array as infeasible when any size fails to be a positive integer.
pub fn cell_size_chain(
    m: &IntersectionMatrix,
    total: u128,
) -> Result<Vec<u128>, AnalysisError> {
    let rho = m.rho();
    // ratios r_i = |C_i| / |C_0|
    let mut ratios = vec![BigRational::one()];
    for i in 0..rho {
        let next = &ratios[i] * BigRational::new(BigInt::from(m.beta[i]), BigInt::from(m.gamma[i]));
        ratios.push(next);
    }
    let sum: BigRational = ratios.iter().cloned().sum();
    let c0 = BigRational::from_integer(BigInt::from(total)) / sum;
    let mut sizes = Vec::with_capacity(rho + 1);
    for r in &ratios {
        let s = &c0 * r;
        if !s.is_integer() || !s.numer().is_positive() {
            return Err(AnalysisError::NonIntegralSizes);
        }
        let (_, digits) = s.to_integer().to_u64_digits();
        let val = match digits.len() {
            0 => 0u128,
            1 => digits[0] as u128,
            2 => (digits[1] as u128) << 64 | digits[0] as u128,
            _ => return Err(AnalysisError::NonIntegralSizes),
        };
        sizes.push(val);
    }
    Ok(sizes)
}
