//! Embedding questions for multibranched surfaces in the 3-sphere.
//!
//! Two directions are covered. [`s3_obstruction`] reports the obstructions:
//! an irregular surface embeds in no closed orientable 3-manifold, and a
//! subcomplex of the 3-sphere has torsion-free `H1`. For `X_g(p1, p2, p3)`
//! with `gcd = 1`, [`construct_certificate`] produces the arithmetic data of
//! an embedding for large genus: a 3-component link `L = l1 ∪ l2 ∪ l3` with
//! linking numbers `a_ij`, and cable slopes `q_i / p_i` so that the cable link
//! `K = k1 ∪ k2 ∪ k3` has `lk(l_i, K) = 0` for every `i`. That vanishing is what
//! lets a Seifert surface of `K` be pushed off `N(L)`; the surface itself is
//! not constructed here.

use crate::braid::{linking_matrix_of_braid, pure_braid_word, BraidWord};
use crate::error::{Error, Result};
use crate::homology::homology_h1;
use crate::scalar::{gcd3, Int};
use crate::surface::{is_regular, MultibranchedSurface};

/// Pairwise linking numbers `a_ij = lk(l_i, l_j)` of a 3-component link.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkingMatrix<T> {
    pub a12: T,
    pub a13: T,
    pub a23: T,
}

impl<T: Int> LinkingMatrix<T> {
    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        match (i.min(j), i.max(j)) {
            (0, 1) => Some(&self.a12),
            (0, 2) => Some(&self.a13),
            (1, 2) => Some(&self.a23),
            _ => None,
        }
    }

    /// `sum_{j != i} a_ij p_j` for each `i`.
    pub fn cross_sums(&self, p: &[T; 3]) -> [T; 3] {
        let [p1, p2, p3] = p.clone();
        [
            self.a12.clone() * p2.clone() + self.a13.clone() * p3.clone(),
            self.a12.clone() * p1.clone() + self.a23.clone() * p3,
            self.a13.clone() * p1 + self.a23.clone() * p2,
        ]
    }

    pub fn as_array(&self) -> [T; 3] {
        [self.a12.clone(), self.a13.clone(), self.a23.clone()]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Irregular: no closed orientable 3-manifold contains it.
    NotEmbeddableAnyClosedOrientable3Manifold,
    /// Regular, but `H1` has torsion.
    ObstructedInS3,
    /// Neither obstruction applies. This is not a claim of embeddability.
    NoObstructionFound,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::NotEmbeddableAnyClosedOrientable3Manifold => {
                "NotEmbeddableAnyClosedOrientable3Manifold"
            }
            Verdict::ObstructedInS3 => "ObstructedInS3",
            Verdict::NoObstructionFound => "NoObstructionFound",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            Verdict::NotEmbeddableAnyClosedOrientable3Manifold,
            Verdict::ObstructedInS3,
            Verdict::NoObstructionFound,
        ]
        .into_iter()
        .find(|v| v.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ObstructionReport<T> {
    pub regular: bool,
    pub torsion: Vec<T>,
    pub verdict: Verdict,
}

pub fn s3_obstruction<T: Int>(surface: &MultibranchedSurface) -> ObstructionReport<T> {
    let regular = is_regular(surface);
    let torsion = homology_h1::<T>(surface).torsion().to_vec();
    let verdict = if !regular {
        Verdict::NotEmbeddableAnyClosedOrientable3Manifold
    } else if !torsion.is_empty() {
        Verdict::ObstructedInS3
    } else {
        Verdict::NoObstructionFound
    };
    ObstructionReport {
        regular,
        torsion,
        verdict,
    }
}

/// Splits `a = alpha * a1` with `gcd(alpha, m) = 1` and every prime of `a1`
/// dividing `m`.
pub fn coprime_split<T: Int>(a: &T, m: &T) -> Result<(T, T)> {
    if *a < T::one() {
        return Err(Error::NotPositive {
            name: "a",
            value: a.to_string(),
        });
    }
    if *m < T::one() {
        return Err(Error::NotPositive {
            name: "m",
            value: m.to_string(),
        });
    }
    let mut alpha = a.clone();
    loop {
        let g = alpha.gcd(m);
        if g.is_one() {
            break;
        }
        alpha = alpha / g;
    }
    let a1 = a.clone() / alpha.clone();
    Ok((alpha, a1))
}

fn check_triple<T: Int>(p: &[T; 3]) -> Result<()> {
    const NAMES: [&str; 3] = ["p1", "p2", "p3"];
    for (name, v) in NAMES.iter().zip(p) {
        if *v <= T::one() {
            return Err(Error::ArgumentTooSmall {
                name,
                value: v.to_string(),
            });
        }
    }
    let g = gcd3(&p[0], &p[1], &p[2]);
    if !g.is_one() {
        return Err(Error::NotCoprime(g.to_string()));
    }
    Ok(())
}

/// Index of the linking variable for the unordered pair `{i, j}`:
/// `{0,1} -> a12`, `{0,2} -> a13`, `{1,2} -> a23`.
fn pair_slot(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 1) => 0,
        (0, 2) => 1,
        (1, 2) => 2,
        _ => unreachable!("pairs of distinct indices below 3"),
    }
}

/// Integers `x = a12, y = a13, z = a23` with
/// `gcd(a, bx + cy) = gcd(b, ax + cz) = gcd(c, ay + bz) = 1`.
///
/// The construction needs the third entry odd, so the triple is first rotated
/// left by the smallest amount that makes it so, and the answer is mapped
/// back through the pair indices.
pub fn lemma_witness<T: Int>(a: &T, b: &T, c: &T) -> Result<LinkingMatrix<T>> {
    let p = [a.clone(), b.clone(), c.clone()];
    check_triple(&p)?;
    let shift = (0..3)
        .find(|k| p[(k + 2) % 3].is_odd())
        .expect("gcd 1 rules out three even entries");
    let [ra, rb, rc] = [0, 1, 2].map(|i| p[(i + shift) % 3].clone());

    let (alpha, _) = coprime_split(&ra, &rc)?;
    let (beta, _) = coprime_split(&rb, &rc)?;
    let (gamma, _) = coprime_split(&rc, &(ra.clone() * rb.clone()))?;
    let ab = alpha * beta;
    let rotated = [
        ab.clone(),
        -(rb * ab.clone()) + gamma.clone(),
        -(ra * ab.clone()) + gamma,
    ];

    let mut out = [T::zero(), T::zero(), T::zero()];
    for (slot, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
        out[pair_slot((i + shift) % 3, (j + shift) % 3)] = rotated[slot].clone();
    }
    let [a12, a13, a23] = out;
    Ok(LinkingMatrix { a12, a13, a23 })
}

/// Arithmetic witness that `X_g(p1, p2, p3)` embeds in the 3-sphere for large
/// enough `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingCertificate<T> {
    pub degrees: [T; 3],
    pub linking: LinkingMatrix<T>,
    /// Cable slopes `q_i / p_i`.
    pub slopes: [T; 3],
    /// `lk(l_i, K) = q_i + sum_j a_ij p_j`.
    pub cable_linking: [T; 3],
    /// `gcd(p_i, q_i) == 1`
    pub coprime: [bool; 3],
    pub braid: BraidWord<T>,
    /// Linking numbers read back off the braid closure.
    pub braid_linking: LinkingMatrix<T>,
}

impl<T: Int> EmbeddingCertificate<T> {
    pub fn linking_check(&self) -> bool {
        self.cable_linking.iter().all(|x| x.is_zero())
    }

    pub fn coprime_check(&self) -> bool {
        self.coprime.iter().all(|&c| c)
    }

    pub fn braid_check(&self) -> bool {
        self.braid_linking == self.linking
    }

    /// Recomputes every identity from the degrees, linking numbers, slopes and
    /// braid, ignoring the stored check fields.
    pub fn verify(&self) -> bool {
        let sums = self.linking.cross_sums(&self.degrees);
        let zero_linking = self
            .slopes
            .iter()
            .zip(&sums)
            .all(|(q, s)| (q.clone() + s.clone()).is_zero());
        let coprime = self
            .degrees
            .iter()
            .zip(&self.slopes)
            .all(|(p, q)| p.gcd(q).is_one());
        let braid = linking_matrix_of_braid(&self.braid).is_ok_and(|m| m == self.linking);
        zero_linking && coprime && braid && self.braid.is_pure()
    }
}

pub fn construct_certificate<T: Int>(p1: &T, p2: &T, p3: &T) -> Result<EmbeddingCertificate<T>> {
    let degrees = [p1.clone(), p2.clone(), p3.clone()];
    check_triple(&degrees)?;
    let linking = lemma_witness(p1, p2, p3)?;
    let sums = linking.cross_sums(&degrees);
    let slopes = sums.clone().map(|s| -s);
    let cable_linking = [0, 1, 2].map(|i| slopes[i].clone() + sums[i].clone());
    let coprime = [0, 1, 2].map(|i| degrees[i].gcd(&slopes[i]).is_one());
    let braid = pure_braid_word(&linking.a12, &linking.a13, &linking.a23);
    let braid_linking = linking_matrix_of_braid(&braid)?;
    Ok(EmbeddingCertificate {
        degrees,
        linking,
        slopes,
        cable_linking,
        coprime,
        braid,
        braid_linking,
    })
}
