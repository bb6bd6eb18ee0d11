//! Boundary slopes on the tori `∂N(C_i)` of a 3-component link, in
//! (longitude λ, meridian μ) coordinates.
//!
//! In a Case 1 configuration, two annuli `A` and `A'` run between `∂N(C2)`
//! and `∂N(C3)`, with slopes `pλ2 + qμ2` and `rλ2 + sμ2` on `∂N(C2)` and
//! `ps - qr = ±1`. Twisting `n2` and `n3` times gives a 3-punctured sphere
//! with boundary slopes
//!
//! ```text
//! ∂N(C1): (n3 - n2)λ1 - μ1
//! ∂N(C2): (p + n2 r)λ2 + (q + n2 s)μ2
//! ∂N(C3): (-q - n3 s)λ3 + (-p - n3 r)μ3
//! ```
//!
//! and the λ-coefficients are the covering degrees `(p1, p2, p3)`, which then
//! satisfy `s p2 + r p3 + s r p1 = ps - qr`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Int;

/// A slope `lam·λ + mu·μ`, reduced: `gcd(lam, mu) = 1`, `lam >= 0`, and the
/// meridian is `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slope<T> {
    lam: T,
    mu: T,
}

impl<T: Int> Slope<T> {
    pub fn new(lam: T, mu: T) -> Result<Self> {
        let g = lam.gcd(&mu);
        if g.is_zero() {
            return Err(Error::ZeroSlope);
        }
        let (mut lam, mut mu) = (lam / g.clone(), mu / g);
        if lam.is_negative() || (lam.is_zero() && mu.is_negative()) {
            lam = -lam;
            mu = -mu;
        }
        Ok(Self { lam, mu })
    }

    pub fn lam(&self) -> &T {
        &self.lam
    }

    pub fn mu(&self) -> &T {
        &self.mu
    }

    pub fn is_meridional(&self) -> bool {
        self.lam.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.lam.is_one()
    }
}

impl<T: Int> fmt::Display for Slope<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}λ {} {}μ",
            self.lam,
            if self.mu.is_negative() { "-" } else { "+" },
            self.mu.abs()
        )
    }
}

/// Annulus slopes `(p, q)`, `(r, s)` and twist counts `n2`, `n3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Case1Witness<T> {
    pub p: T,
    pub q: T,
    pub r: T,
    pub s: T,
    pub n2: T,
    pub n3: T,
}

impl<T: Int> Case1Witness<T> {
    pub fn new(p: T, q: T, r: T, s: T, n2: T, n3: T) -> Result<Self> {
        let w = Self { p, q, r, s, n2, n3 };
        let det = w.determinant();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(w)
    }

    /// `ps - qr`
    pub fn determinant(&self) -> T {
        self.p.clone() * self.s.clone() - self.q.clone() * self.r.clone()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundarySlope<T> {
    /// `(λ, μ)` coefficients before reduction.
    pub raw: (T, T),
    pub slope: Slope<T>,
}

impl<T: Int> BoundarySlope<T> {
    fn new(lam: T, mu: T) -> Result<Self> {
        Ok(Self {
            slope: Slope::new(lam.clone(), mu.clone())?,
            raw: (lam, mu),
        })
    }

    /// Meridional or integral slopes have multiplicity below 2.
    pub fn is_degenerate(&self) -> bool {
        self.slope.is_meridional() || self.slope.is_integral()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlopeData<T> {
    /// Slopes on `∂N(C1)`, `∂N(C2)`, `∂N(C3)`.
    pub slopes: [BoundarySlope<T>; 3],
    /// λ-coefficients `(n3 - n2, p + n2 r, -q - n3 s)`.
    pub signed_multiplicities: [T; 3],
    pub determinant: T,
}

impl<T: Int> SlopeData<T> {
    pub fn multiplicities(&self) -> [T; 3] {
        self.signed_multiplicities.clone().map(|m| m.abs())
    }

    /// Indices (0-based) of the slopes that are integral or meridional.
    pub fn degenerate(&self) -> Vec<usize> {
        (0..3).filter(|&i| self.slopes[i].is_degenerate()).collect()
    }

    /// `s P2 + r P3 + s r P1` over the signed multiplicities.
    pub fn identity_value(&self, w: &Case1Witness<T>) -> T {
        let [m1, m2, m3] = self.signed_multiplicities.clone();
        w.s.clone() * m2 + w.r.clone() * m3 + w.s.clone() * w.r.clone() * m1
    }
}

pub fn slopes_from_witness<T: Int>(w: &Case1Witness<T>) -> Result<SlopeData<T>> {
    let determinant = w.determinant();
    if !determinant.abs().is_one() {
        return Err(Error::NotUnimodular(determinant.to_string()));
    }
    let Case1Witness { p, q, r, s, n2, n3 } = w.clone();
    let c1 = (n3.clone() - n2.clone(), -T::one());
    let c2 = (
        p.clone() + n2.clone() * r.clone(),
        q.clone() + n2 * s.clone(),
    );
    let c3 = (-q - n3.clone() * s, -p - n3 * r);
    let signed_multiplicities = [c1.0.clone(), c2.0.clone(), c3.0.clone()];
    Ok(SlopeData {
        slopes: [
            BoundarySlope::new(c1.0, c1.1)?,
            BoundarySlope::new(c2.0, c2.1)?,
            BoundarySlope::new(c3.0, c3.1)?,
        ],
        signed_multiplicities,
        determinant,
    })
}
