//! First homology of multibranched surfaces.
//!
//! Cellular picture: each branch is a circle; a sector of genus `g` with `k`
//! boundary circles contributes `2g` handle loops, `k - 1` arcs joining its
//! boundary basepoints, and one 2-cell whose boundary reads
//! `sum(degree_i * branch_i)`. Hence
//!
//! ```text
//! H1 = Z^(2 * total genus) + Z^(b1 of the sector/branch graph) + coker(P)
//! ```
//!
//! where `P` is the sector-by-branch [`presentation_matrix`]. For the one-sector
//! family the graph is a star, so `H1(X_g(p1..pn)) = Z/p + Z^(2g+n-1)` with
//! `p = gcd(p_i)`, which is [`h1_formula`].

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{smith_normal_form, IntegerMatrix};
use crate::scalar::Int;
use crate::surface::MultibranchedSurface;

/// A finitely generated abelian group `Z^rank + Z/d1 + ... + Z/dk` with
/// `d1 | d2 | ... | dk` and every `di >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup<T> {
    rank: usize,
    torsion: Vec<T>,
}

impl<T: Int> AbelianGroup<T> {
    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Builds the group from a divisibility chain of nonnegative invariant
    /// factors; units are dropped and zeros count toward the free rank.
    ///
    /// Panics if the chain is broken.
    pub fn from_invariant_factors(rank: usize, factors: impl IntoIterator<Item = T>) -> Self {
        let mut rank = rank;
        let mut torsion = Vec::new();
        for d in factors {
            let d = d.abs();
            if d.is_zero() {
                rank += 1;
            } else if !d.is_one() {
                torsion.push(d);
            }
        }
        for w in torsion.windows(2) {
            assert!(
                w[1].is_multiple_of(&w[0]),
                "invariant factors {:?} do not form a chain",
                torsion
            );
        }
        Self { rank, torsion }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[T] {
        &self.torsion
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

/// `Z/2 ⊕ Z^4`, `Z^2`, or `0`.
impl<T: fmt::Display> fmt::Display for AbelianGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// One row per sector, one column per branch (canonical order); entry
/// `(s, b)` is the sum of signed degrees of the boundary circles of `s` on `b`.
pub fn presentation_matrix<T: Int>(surface: &MultibranchedSurface) -> IntegerMatrix<T> {
    let mut p = IntegerMatrix::<T>::zeros(surface.sectors().len(), surface.branches().len());
    for (s, b, degree) in surface.attachments() {
        p[(s, b)] = p[(s, b)].clone() + T::from_small(degree);
    }
    p
}

/// First Betti number of the bipartite sector/branch graph with one edge per
/// boundary circle.
pub fn graph_cycle_rank(surface: &MultibranchedSurface) -> usize {
    let sectors = surface.sectors().len();
    let vertices = sectors + surface.branches().len();
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut edges = 0;
    let mut components = vertices;
    for (s, b, _) in surface.attachments() {
        edges += 1;
        let (rs, rb) = (find(&mut parent, s), find(&mut parent, sectors + b));
        if rs != rb {
            parent[rs] = rb;
            components -= 1;
        }
    }
    edges + components - vertices
}

/// `H1` via Smith normal form of the presentation matrix.
pub fn homology_h1<T: Int>(surface: &MultibranchedSurface) -> AbelianGroup<T> {
    let snf = smith_normal_form(&presentation_matrix::<T>(surface));
    let factors = snf.factors();
    let handles = 2 * surface.total_genus() as usize;
    let free = handles + graph_cycle_rank(surface) + surface.branches().len() - factors.len();
    AbelianGroup::from_invariant_factors(free, factors)
}

/// Closed form `Z/p + Z^(2g+n-1)` for `X_g(p1, ..., pn)`, `p = gcd(p_i)`.
pub fn h1_formula<T: Int>(genus: u32, degrees: &[T]) -> Result<AbelianGroup<T>> {
    if degrees.is_empty() {
        return Err(Error::EmptyDegrees);
    }
    if let Some((i, p)) = degrees.iter().enumerate().find(|(_, p)| **p < T::two()) {
        return Err(Error::DegreeTooSmall {
            index: i + 1,
            value: p.to_string(),
        });
    }
    let p = degrees.iter().fold(T::zero(), |acc, d| acc.gcd(d));
    let rank = 2 * genus as usize + degrees.len() - 1;
    Ok(AbelianGroup::from_invariant_factors(rank, [p]))
}
