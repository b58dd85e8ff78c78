//! The Johnson graph `J(n, w)` as a pure combinatorial structure.
//!
//! Vertices are the `w`-subsets of `{1, ..., n}`, adjacent when they meet in a
//! `(w-1)`-subset. Everything here is exact integer combinatorics: eigenvalues,
//! the Delsarte clique partition of the edge set, and the local grid structure
//! on a vertex neighborhood.

use std::fmt;

use thiserror::Error;

/// Hard cap on the number of vertices a materialized [`JohnsonGraph`] may have.
///
/// Distance partitions and exhaustive searches are only run at desk scale;
/// anything larger should go through the closed-form routines instead.
pub const MAX_GRAPH_VERTICES: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JohnsonError {
    #[error("ground-set size {n} exceeds 64 (subsets are stored in one machine word)")]
    GroundSetTooLarge { n: u32 },
    #[error("subset size w={w} exceeds n/2 for n={n}; replace the code by its complementary (n-w)-subsets and retry")]
    SubsetSizeAboveHalf { n: u32, w: u32 },
    #[error("invalid parameters: n={n}, w={w} (need 1 <= w <= n/2)")]
    InvalidParams { n: u32, w: u32 },
    #[error("eigenvalue index {i} out of range 0..={w}")]
    EigenvalueIndexOutOfRange { i: u32, w: u32 },
    #[error("element {element} outside ground set {{1, ..., {n}}}")]
    ElementOutOfRange { element: u32, n: u32 },
    #[error("expected a {expected}-subset, got {got} elements")]
    WrongSubsetSize { expected: u32, got: u32 },
    #[error("subsets of different sizes ({a} and {b}) have no Johnson distance")]
    MismatchedSizes { a: u32, b: u32 },
    #[error("J({n},{w}) has {count} vertices, above the materialization cap {cap}")]
    GraphTooLarge { n: u32, w: u32, count: u64, cap: u64 },
}

/// Binomial coefficient `C(n, k)` as an exact `u128`.
///
/// Saturates never: all uses stay within `n <= 64`, where `C(64, 32) < 2^63`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

// ---------------------------------------------------------------------------
// Subset
// ---------------------------------------------------------------------------

/// A subset of `{1, ..., n}` stored as a bit mask: bit `i` set means element
/// `i + 1` is present. Comparing masks numerically is exactly the
/// colexicographic order on subsets, which is the canonical vertex order
/// everywhere in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u64);

impl Subset {
    /// Builds a subset from 1-based element labels. Duplicates collapse.
    pub fn from_elements(elements: &[u32], n: u32) -> Result<Self, JohnsonError> {
        let mut bits = 0u64;
        for &e in elements {
            if e == 0 || e > n {
                return Err(JohnsonError::ElementOutOfRange { element: e, n });
            }
            bits |= 1 << (e - 1);
        }
        Ok(Subset(bits))
    }

    /// Wraps a raw bit mask.
    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, element: u32) -> bool {
        element >= 1 && element <= 64 && (self.0 >> (element - 1)) & 1 == 1
    }

    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub const fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    /// Complement within `{1, ..., n}`.
    pub fn complement(self, n: u32) -> Subset {
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Subset(full & !self.0)
    }

    /// 1-based elements in ascending order.
    pub fn elements(self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len() as usize);
        let mut bits = self.0;
        while bits != 0 {
            out.push(bits.trailing_zeros() + 1);
            bits &= bits - 1;
        }
        out
    }

    /// All subsets obtained by removing one element, in colex order.
    pub fn facets(self) -> Vec<Subset> {
        let mut out = Vec::with_capacity(self.len() as usize);
        let mut bits = self.0;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            out.push(Subset(self.0 & !low));
            bits &= bits - 1;
        }
        // Removing a larger element yields a smaller mask.
        out.reverse();
        out
    }

    /// Colexicographic rank among all `|self|`-subsets of any ground set.
    pub fn colex_rank(self) -> u64 {
        let mut rank = 0u128;
        let mut bits = self.0;
        let mut i = 1u64;
        while bits != 0 {
            let pos = bits.trailing_zeros() as u64;
            rank += binomial(pos, i);
            bits &= bits - 1;
            i += 1;
        }
        rank as u64
    }

    /// Inverse of [`Subset::colex_rank`] for `w`-subsets.
    pub fn from_colex_rank(mut rank: u64, w: u32) -> Subset {
        let mut bits = 0u64;
        for i in (1..=w as u64).rev() {
            // Largest position p with C(p, i) <= rank.
            let mut p = i - 1;
            while binomial(p + 1, i) <= rank as u128 {
                p += 1;
            }
            bits |= 1 << p;
            rank -= binomial(p, i) as u64;
        }
        Subset(bits)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

// ---------------------------------------------------------------------------
// Parameters and eigenvalues
// ---------------------------------------------------------------------------

/// Validated parameters of a Johnson graph `J(n, w)` with `1 <= w <= n/2`
/// and `n <= 64`.
///
/// `J(n, w)` and `J(n, n-w)` are isomorphic; inputs with `w > n/2` are
/// rejected rather than silently complemented so that reports always speak
/// about the labels the caller supplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JohnsonParams {
    n: u32,
    w: u32,
}

impl JohnsonParams {
    pub fn new(n: u32, w: u32) -> Result<Self, JohnsonError> {
        if n > 64 {
            return Err(JohnsonError::GroundSetTooLarge { n });
        }
        if w >= 1 && 2 * w > n {
            return Err(JohnsonError::SubsetSizeAboveHalf { n, w });
        }
        if w < 1 || n < 2 {
            return Err(JohnsonError::InvalidParams { n, w });
        }
        Ok(JohnsonParams { n, w })
    }

    pub const fn n(self) -> u32 {
        self.n
    }

    pub const fn w(self) -> u32 {
        self.w
    }

    /// Valency `k = w(n - w)`.
    pub const fn valency(self) -> i64 {
        self.w as i64 * (self.n - self.w) as i64
    }

    /// Number of vertices, `C(n, w)`.
    pub fn vertex_count(self) -> u128 {
        binomial(self.n as u64, self.w as u64)
    }

    /// The `i`-th eigenvalue of the graph, `theta_i = (n-w-i)(w-i) - i`.
    ///
    /// The sequence is strictly descending in `i`, from the valency at `i = 0`
    /// down to `-w` at `i = w`.
    pub fn theta(self, i: u32) -> Result<i64, JohnsonError> {
        theta(self.n, self.w, i)
    }

    /// Size of a Delsarte clique, `1 - k/theta_w = n - w + 1`.
    pub const fn clique_size(self) -> u32 {
        self.n - self.w + 1
    }

    /// Checks that `s` is a valid vertex of this graph.
    pub fn check_vertex(self, s: Subset) -> Result<(), JohnsonError> {
        if self.n < 64 && s.bits() >> self.n != 0 {
            let element = 64 - s.bits().leading_zeros();
            return Err(JohnsonError::ElementOutOfRange { element, n: self.n });
        }
        if s.len() != self.w {
            return Err(JohnsonError::WrongSubsetSize {
                expected: self.w,
                got: s.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for JohnsonParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J({},{})", self.n, self.w)
    }
}

/// Eigenvalue `theta_i(n, w) = (n-w-i)(w-i) - i` of the Johnson graph.
pub fn theta(n: u32, w: u32, i: u32) -> Result<i64, JohnsonError> {
    if w < 1 || 2 * w > n || n > 64 {
        return Err(JohnsonError::InvalidParams { n, w });
    }
    if i > w {
        return Err(JohnsonError::EigenvalueIndexOutOfRange { i, w });
    }
    let (n, w, i) = (n as i64, w as i64, i as i64);
    Ok((n - w - i) * (w - i) - i)
}

/// Johnson distance `w - |x ∩ y|` between two `w`-subsets.
pub fn distance(x: Subset, y: Subset) -> Result<u32, JohnsonError> {
    if x.len() != y.len() {
        return Err(JohnsonError::MismatchedSizes {
            a: x.len(),
            b: y.len(),
        });
    }
    Ok(x.len() - x.intersection(y).len())
}

/// All vertices at distance 1 from `x`, in colex order.
///
/// There are exactly `w(n - w)` of them: drop one element of `x`, add one
/// element outside.
pub fn neighbors(x: Subset, params: JohnsonParams) -> Result<Vec<Subset>, JohnsonError> {
    params.check_vertex(x)?;
    let mut out = Vec::with_capacity(params.valency() as usize);
    let outside = x.complement(params.n()).bits();
    let mut drop_bits = x.bits();
    while drop_bits != 0 {
        let d = drop_bits & drop_bits.wrapping_neg();
        let mut add_bits = outside;
        while add_bits != 0 {
            let a = add_bits & add_bits.wrapping_neg();
            out.push(Subset::from_bits(x.bits() ^ d | a));
            add_bits &= add_bits - 1;
        }
        drop_bits &= drop_bits - 1;
    }
    out.sort_unstable();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Delsarte cliques
// ---------------------------------------------------------------------------

/// A maximum clique of `J(n, w)` meeting the Delsarte bound: the `n - w + 1`
/// vertices containing a fixed `(w-1)`-subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelsarteClique {
    /// The common `(w-1)`-subset.
    pub base: Subset,
    /// Member vertices in colex order.
    pub members: Vec<Subset>,
}

impl DelsarteClique {
    /// The clique of all `w`-supersets of `base`.
    pub fn from_base(base: Subset, params: JohnsonParams) -> Result<Self, JohnsonError> {
        if base.len() != params.w() - 1 {
            return Err(JohnsonError::WrongSubsetSize {
                expected: params.w() - 1,
                got: base.len(),
            });
        }
        if params.n() < 64 && base.bits() >> params.n() != 0 {
            let element = 64 - base.bits().leading_zeros();
            return Err(JohnsonError::ElementOutOfRange {
                element,
                n: params.n(),
            });
        }
        let mut members = Vec::with_capacity(params.clique_size() as usize);
        let mut add_bits = base.complement(params.n()).bits();
        while add_bits != 0 {
            let a = add_bits & add_bits.wrapping_neg();
            members.push(Subset::from_bits(base.bits() | a));
            add_bits &= add_bits - 1;
        }
        Ok(DelsarteClique { base, members })
    }
}

/// The clique set the graph is geometric with respect to: one Delsarte clique
/// per `(w-1)`-subset of the ground set, ordered by base. Every edge of
/// `J(n, w)` lies in exactly one of them.
pub fn delsarte_cliques(params: JohnsonParams) -> Vec<DelsarteClique> {
    subsets_in_colex_order(params.n(), params.w() - 1)
        .into_iter()
        .map(|base| DelsarteClique::from_base(base, params).expect("base is valid"))
        .collect()
}

/// All `w`-subsets of `{1, ..., n}` in colex order (ascending bit masks).
pub fn subsets_in_colex_order(n: u32, w: u32) -> Vec<Subset> {
    let count = binomial(n as u64, w as u64) as usize;
    let mut out = Vec::with_capacity(count);
    if w == 0 {
        out.push(Subset::from_bits(0));
        return out;
    }
    if w > n {
        return out;
    }
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut mask = (1u64 << w) - 1;
    loop {
        out.push(Subset::from_bits(mask));
        if out.len() == count {
            break;
        }
        // Gosper's hack: next mask with the same popcount.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        debug_assert!(mask <= limit);
    }
    out
}

// ---------------------------------------------------------------------------
// Local grid
// ---------------------------------------------------------------------------

/// The neighborhood of a vertex laid out as a `w x (n-w)` grid: two neighbors
/// are adjacent iff they share a row or a column. Row `r` holds the vertices
/// dropping the `r`-th smallest element of `x`; column `c` holds those adding
/// the `c`-th smallest outside element. Each row together with `x` itself is a
/// Delsarte clique.
#[derive(Debug, Clone)]
pub struct LocalGrid {
    pub center: Subset,
    pub rows: usize,
    pub cols: usize,
    /// Row-major: `cells[r * cols + c]`.
    pub cells: Vec<Subset>,
}

impl LocalGrid {
    pub fn cell(&self, r: usize, c: usize) -> Subset {
        self.cells[r * self.cols + c]
    }
}

/// Grid labeling of `neighbors(x)`; see [`LocalGrid`].
pub fn local_grid(x: Subset, params: JohnsonParams) -> Result<LocalGrid, JohnsonError> {
    params.check_vertex(x)?;
    let dropped = x.elements();
    let added = x.complement(params.n()).elements();
    let mut cells = Vec::with_capacity(dropped.len() * added.len());
    for &d in &dropped {
        for &a in &added {
            cells.push(Subset::from_bits(
                x.bits() & !(1 << (d - 1)) | (1 << (a - 1)),
            ));
        }
    }
    Ok(LocalGrid {
        center: x,
        rows: dropped.len(),
        cols: added.len(),
        cells,
    })
}

// ---------------------------------------------------------------------------
// Materialized graph
// ---------------------------------------------------------------------------

/// A fully materialized Johnson graph: the colex-ordered vertex list and, per
/// vertex, the sorted list of neighbor ranks.
///
/// Adjacency is cheap to recompute from bit masks, so this exists purely to
/// give distance partitions and searches dense `u32` indices to work with.
#[derive(Debug, Clone)]
pub struct JohnsonGraph {
    params: JohnsonParams,
    vertices: Vec<Subset>,
    adjacency: Vec<Vec<u32>>,
}

impl JohnsonGraph {
    pub fn new(params: JohnsonParams) -> Result<Self, JohnsonError> {
        let count = params.vertex_count();
        if count > MAX_GRAPH_VERTICES as u128 {
            return Err(JohnsonError::GraphTooLarge {
                n: params.n(),
                w: params.w(),
                count: count.min(u64::MAX as u128) as u64,
                cap: MAX_GRAPH_VERTICES,
            });
        }
        let vertices = subsets_in_colex_order(params.n(), params.w());
        let mut adjacency = Vec::with_capacity(vertices.len());
        for &x in &vertices {
            let mut nb = Vec::with_capacity(params.valency() as usize);
            let outside = x.complement(params.n()).bits();
            let mut drop_bits = x.bits();
            while drop_bits != 0 {
                let d = drop_bits & drop_bits.wrapping_neg();
                let mut add_bits = outside;
                while add_bits != 0 {
                    let a = add_bits & add_bits.wrapping_neg();
                    let y = Subset::from_bits(x.bits() ^ d | a);
                    nb.push(y.colex_rank() as u32);
                    add_bits &= add_bits - 1;
                }
                drop_bits &= drop_bits - 1;
            }
            nb.sort_unstable();
            adjacency.push(nb);
        }
        Ok(JohnsonGraph {
            params,
            vertices,
            adjacency,
        })
    }

    pub fn params(&self) -> JohnsonParams {
        self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Subset] {
        &self.vertices
    }

    pub fn vertex(&self, rank: u32) -> Subset {
        self.vertices[rank as usize]
    }

    /// Colex rank of a vertex; the inverse of [`JohnsonGraph::vertex`].
    pub fn rank(&self, s: Subset) -> u32 {
        debug_assert_eq!(s.len(), self.params.w());
        s.colex_rank() as u32
    }

    pub fn neighbors_of(&self, rank: u32) -> &[u32] {
        &self.adjacency[rank as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, w: u32) -> JohnsonParams {
        JohnsonParams::new(n, w).unwrap()
    }

    fn subset(elements: &[u32]) -> Subset {
        Subset::from_elements(elements, 64).unwrap()
    }

    #[test]
    fn theta_matches_direct_evaluation() {
        assert_eq!(theta(6, 3, 2).unwrap(), -1);
        assert_eq!(theta(6, 3, 0).unwrap(), 9);
        assert_eq!(theta(9, 3, 0).unwrap(), 18);
        assert_eq!(theta(9, 3, 2).unwrap(), 2);
        assert_eq!(theta(9, 3, 3).unwrap(), -3);
    }

    #[test]
    fn theta_at_zero_is_valency_and_at_w_is_minus_w() {
        for n in 2..=30u32 {
            for w in 1..=n / 2 {
                assert_eq!(theta(n, w, 0).unwrap(), (w * (n - w)) as i64);
                assert_eq!(theta(n, w, w).unwrap(), -(w as i64));
            }
        }
    }

    #[test]
    fn theta_of_j_n4_at_zero_is_4n_minus_16() {
        for n in 8..=64u32 {
            assert_eq!(theta(n, 4, 0).unwrap(), 4 * n as i64 - 16);
        }
    }

    #[test]
    fn theta_is_strictly_descending() {
        for n in 2..=40u32 {
            for w in 1..=n / 2 {
                for i in 0..w {
                    assert!(theta(n, w, i).unwrap() > theta(n, w, i + 1).unwrap());
                }
            }
        }
    }

    #[test]
    fn theta_rejects_out_of_range() {
        assert!(theta(6, 3, 4).is_err());
        assert!(theta(6, 4, 1).is_err());
    }

    #[test]
    fn params_reject_w_above_half_with_complement_hint() {
        let err = JohnsonParams::new(6, 4).unwrap_err();
        assert!(matches!(err, JohnsonError::SubsetSizeAboveHalf { .. }));
        assert!(err.to_string().contains("complementary"));
    }

    #[test]
    fn distance_examples() {
        assert_eq!(
            distance(subset(&[1, 2, 3]), subset(&[1, 4, 5])).unwrap(),
            2
        );
        assert_eq!(distance(subset(&[1, 2, 3]), subset(&[1, 2, 3])).unwrap(), 0);
        assert_eq!(
            distance(subset(&[1, 2, 3]), subset(&[4, 5, 6])).unwrap(),
            3
        );
        assert!(distance(subset(&[1, 2]), subset(&[1, 2, 3])).is_err());
    }

    #[test]
    fn distance_agrees_with_bfs_hops() {
        // Metric formula vs. breadth-first layering over the adjacency lists.
        for (n, w) in [(7u32, 3u32), (8, 2), (8, 4)] {
            let g = JohnsonGraph::new(params(n, w)).unwrap();
            let v = g.vertex_count();
            let mut dist = vec![u32::MAX; v];
            dist[0] = 0;
            let mut frontier = vec![0u32];
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for &u in &frontier {
                    for &nb in g.neighbors_of(u) {
                        if dist[nb as usize] == u32::MAX {
                            dist[nb as usize] = dist[u as usize] + 1;
                            next.push(nb);
                        }
                    }
                }
                frontier = next;
            }
            for r in 0..v as u32 {
                let d = distance(g.vertex(0), g.vertex(r)).unwrap();
                assert_eq!(dist[r as usize], d, "vertex {}", g.vertex(r));
            }
        }
    }

    #[test]
    fn neighbor_counts_match_valency() {
        let p = params(6, 3);
        let nb = neighbors(subset(&[1, 2, 3]), p).unwrap();
        assert_eq!(nb.len(), 9);
        for n in 8..=12u32 {
            let p = params(n, 4);
            let nb = neighbors(subset(&[1, 2, 3, 4]), p).unwrap();
            assert_eq!(nb.len(), (4 * n - 16) as usize);
        }
    }

    #[test]
    fn neighbors_of_12_in_j42() {
        let p = params(4, 2);
        let nb = neighbors(subset(&[1, 2]), p).unwrap();
        let expect: Vec<Subset> = [[1, 3], [2, 3], [1, 4], [2, 4]]
            .iter()
            .map(|e| subset(e))
            .collect();
        assert_eq!(nb, expect); // colex order
    }

    #[test]
    fn neighbors_are_in_colex_order_and_at_distance_one() {
        let p = params(8, 3);
        let x = subset(&[2, 5, 7]);
        let nb = neighbors(x, p).unwrap();
        for pair in nb.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        for y in nb {
            assert_eq!(distance(x, y).unwrap(), 1);
        }
    }

    #[test]
    fn delsarte_clique_family_partitions_edges() {
        for (n, w) in [(6u32, 3u32), (7, 2), (8, 3)] {
            let p = params(n, w);
            let cliques = delsarte_cliques(p);
            assert_eq!(cliques.len(), binomial(n as u64, w as u64 - 1) as usize);
            let mut edge_total = 0u128;
            for cl in &cliques {
                let m = cl.members.len();
                assert_eq!(m as u32, n - w + 1);
                for i in 0..m {
                    for j in i + 1..m {
                        assert_eq!(
                            cl.members[i].intersection(cl.members[j]),
                            cl.base,
                            "members meet in exactly the base"
                        );
                    }
                }
                edge_total += (m * (m - 1) / 2) as u128;
            }
            // Each edge covered once: clique edges sum to |E| = C(n,w) k / 2.
            let expect = p.vertex_count() * p.valency() as u128 / 2;
            assert_eq!(edge_total, expect);
        }
    }

    #[test]
    fn every_vertex_lies_in_w_cliques() {
        let p = params(7, 3);
        let cliques = delsarte_cliques(p);
        for x in subsets_in_colex_order(7, 3) {
            let count = cliques
                .iter()
                .filter(|cl| cl.base.is_subset_of(x))
                .count();
            assert_eq!(count, 3);
        }
    }

    #[test]
    fn local_grid_shape_and_rows() {
        let p = params(6, 3);
        let grid = local_grid(subset(&[1, 2, 3]), p).unwrap();
        assert_eq!((grid.rows, grid.cols), (3, 3));

        let p = params(10, 4);
        let grid = local_grid(subset(&[1, 2, 3, 4]), p).unwrap();
        assert_eq!((grid.rows, grid.cols), (4, 6));

        // Row r together with the center is the Delsarte clique over
        // center minus its r-th element.
        for r in 0..grid.rows {
            let dropped = grid.center.elements()[r];
            let base = Subset::from_bits(grid.center.bits() & !(1 << (dropped - 1)));
            for c in 0..grid.cols {
                assert!(base.is_subset_of(grid.cell(r, c)));
            }
        }
    }

    #[test]
    fn local_grid_is_a_rook_graph_labeling() {
        let p = params(8, 3);
        let g = JohnsonGraph::new(p).unwrap();
        let x = g.vertex(17);
        let grid = local_grid(x, p).unwrap();
        for r1 in 0..grid.rows {
            for c1 in 0..grid.cols {
                for r2 in 0..grid.rows {
                    for c2 in 0..grid.cols {
                        if (r1, c1) == (r2, c2) {
                            continue;
                        }
                        let adjacent =
                            distance(grid.cell(r1, c1), grid.cell(r2, c2)).unwrap() == 1;
                        assert_eq!(adjacent, r1 == r2 || c1 == c2);
                    }
                }
            }
        }
    }

    #[test]
    fn colex_rank_roundtrip() {
        for (i, s) in subsets_in_colex_order(9, 4).iter().enumerate() {
            assert_eq!(s.colex_rank(), i as u64);
            assert_eq!(Subset::from_colex_rank(i as u64, 4), *s);
        }
    }

    #[test]
    fn facets_are_all_w_minus_1_subsets() {
        let x = subset(&[2, 4, 7, 8]);
        let f = x.facets();
        assert_eq!(f.len(), 4);
        for y in &f {
            assert_eq!(y.len(), 3);
            assert!(y.is_subset_of(x));
        }
        for pair in f.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn graph_adjacency_matches_distance_one() {
        let g = JohnsonGraph::new(params(6, 3)).unwrap();
        assert_eq!(g.vertex_count(), 20);
        for r in 0..20u32 {
            let nb = g.neighbors_of(r);
            assert_eq!(nb.len(), 9);
            for &s in nb {
                assert_eq!(distance(g.vertex(r), g.vertex(s)).unwrap(), 1);
            }
        }
    }

    #[test]
    fn subset_display_and_elements() {
        let s = subset(&[3, 1, 5]);
        assert_eq!(s.elements(), vec![1, 3, 5]);
        assert_eq!(s.to_string(), "{1,3,5}");
    }
}
