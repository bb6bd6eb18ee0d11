//! Arithmetic conditions for genus-0 embeddings of `X_0(p1, p2, p3)`.
//!
//! **Case 1** asks for integers `r, s` and `ε ∈ {+1, -1}` with
//!
//! ```text
//! s p2 + r p3 + s r p1 = ε.
//! ```
//!
//! Multiplying by `p1` and completing the product turns this into
//!
//! ```text
//! (p2 + r p1)(p3 + s p1) = p2 p3 + ε p1 =: N_ε,
//! ```
//!
//! so every solution is a signed divisor `m` of `N_ε` with `m ≡ p2` and
//! `N_ε / m ≡ p3 (mod p1)`, and conversely each such divisor gives one
//! solution `r = (m - p2) / p1`, `s = (N_ε / m - p3) / p1`. Enumerating the
//! divisors of `N_+` and `N_-` therefore decides the equation exactly. When
//! `N_ε = 0` there is no solution: a zero factor forces `p1 | p2` (or `p3`)
//! together with `p1 = p2 p3`, impossible for entries above 1.
//!
//! **Case 2** asks for `t` with `p3 = 1 + t p1`.
//!
//! Other sign patterns of `(±p1, ±p2, ±p3)` reduce to these by replacing
//! `(r, s)` with `(-r, s)`, `(r, -s)` or `(-r, -s)`, so only positive inputs
//! are handled.

use crate::error::{Error, Result};
use crate::scalar::{gcd3, Int};
use crate::slope::Case1Witness;

/// `s p2 + r p3 + s r p1 = eps`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Case1Solution<T> {
    pub r: T,
    pub s: T,
    pub eps: i8,
}

impl<T: Int> Case1Solution<T> {
    pub fn satisfies(&self, p1: &T, p2: &T, p3: &T) -> bool {
        let lhs = self.s.clone() * p2.clone()
            + self.r.clone() * p3.clone()
            + self.s.clone() * self.r.clone() * p1.clone();
        lhs == T::from_small(self.eps.into())
    }

    /// The twisting data realizing `(p1, p2, p3)` as boundary multiplicities:
    /// `p = p2`, `q = -p3 - p1 s`, `n2 = 0`, `n3 = p1`.
    pub fn to_witness(&self, p1: &T, p2: &T, p3: &T) -> Case1Witness<T> {
        Case1Witness {
            p: p2.clone(),
            q: -p3.clone() - p1.clone() * self.s.clone(),
            r: self.r.clone(),
            s: self.s.clone(),
            n2: T::zero(),
            n3: p1.clone(),
        }
    }
}

/// All positive divisors of `|n|` were tried for this `N_ε`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExhaustedProduct<T> {
    pub eps: i8,
    pub n: T,
    pub divisors: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Case1Outcome<T> {
    Witness(Case1Solution<T>),
    /// No divisor of `N_+` or `N_-` satisfies both congruences.
    Exhausted(Vec<ExhaustedProduct<T>>),
}

impl<T> Case1Outcome<T> {
    pub fn witness(&self) -> Option<&Case1Solution<T>> {
        match self {
            Case1Outcome::Witness(w) => Some(w),
            Case1Outcome::Exhausted(_) => None,
        }
    }
}

fn check_inputs<T: Int>(p: [&T; 3]) -> Result<()> {
    const NAMES: [&str; 3] = ["p1", "p2", "p3"];
    // narrow types cannot exceed the cap
    let cap = T::from_i64(1 << 31);
    for (name, v) in NAMES.into_iter().zip(p) {
        if *v <= T::one() {
            return Err(Error::ArgumentTooSmall {
                name,
                value: v.to_string(),
            });
        }
        if cap.as_ref().is_some_and(|c| v > c) {
            return Err(Error::ArgumentTooLarge {
                name,
                value: v.to_string(),
            });
        }
    }
    Ok(())
}

/// Positive divisors of `|n|` in increasing order, by trial division.
pub fn divisors<T: Int>(n: &T) -> Vec<T> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = T::one();
    while d.clone() * d.clone() <= n {
        if n.is_multiple_of(&d) {
            let co = n.clone() / d.clone();
            if co != d {
                large.push(co);
            }
            small.push(d.clone());
        }
        d = d + T::one();
    }
    small.extend(large.into_iter().rev());
    small
}

fn witness_key<T: Int>(w: &Case1Solution<T>) -> (T, T, T, T) {
    (w.r.abs(), w.s.abs(), w.r.clone(), w.s.clone())
}

/// Decides Case 1 by divisor enumeration, returning either the witness that
/// minimizes `(|r|, |s|, r, s)` or the list of exhausted products.
pub fn case1_search<T: Int>(p1: &T, p2: &T, p3: &T) -> Result<Case1Outcome<T>> {
    check_inputs([p1, p2, p3])?;
    let mut best: Option<Case1Solution<T>> = None;
    let mut exhausted = Vec::with_capacity(2);
    for eps in [1i8, -1] {
        let n = p2.clone() * p3.clone() + T::from_small(eps.into()) * p1.clone();
        let divs = if n.is_zero() {
            Vec::new()
        } else {
            divisors(&n)
        };
        for d in &divs {
            for m in [d.clone(), -d.clone()] {
                if !(m.clone() - p2.clone()).is_multiple_of(p1) {
                    continue;
                }
                let co = n.clone() / m.clone();
                if !(co.clone() - p3.clone()).is_multiple_of(p1) {
                    continue;
                }
                debug_assert!(m.clone() * co.clone() == n);
                let cand = Case1Solution {
                    r: (m - p2.clone()) / p1.clone(),
                    s: (co - p3.clone()) / p1.clone(),
                    eps,
                };
                if best
                    .as_ref()
                    .is_none_or(|b| witness_key(&cand) < witness_key(b))
                {
                    best = Some(cand);
                }
            }
        }
        exhausted.push(ExhaustedProduct {
            eps,
            n,
            divisors: divs,
        });
    }
    Ok(match best {
        Some(w) => Case1Outcome::Witness(w),
        None => Case1Outcome::Exhausted(exhausted),
    })
}

pub fn case1_decide<T: Int>(p1: &T, p2: &T, p3: &T) -> Result<Option<Case1Solution<T>>> {
    Ok(case1_search(p1, p2, p3)?.witness().cloned())
}

/// Scans `-bound <= r, s <= bound` in lexicographic `(r, s)` order and returns
/// the first solution.
///
/// For fixed `r` the equation is linear in `s`, `s (p2 + r p1) = ε - r p3`, so
/// each `r` is settled by one exact division per sign instead of a loop over
/// `s`; the result is the same as the full double scan.
pub fn case1_bruteforce<T: Int>(p1: &T, p2: &T, p3: &T, bound: &T) -> Option<Case1Solution<T>> {
    let mut r = -bound.clone();
    while r <= *bound {
        let m = p2.clone() + r.clone() * p1.clone();
        let mut found: Option<Case1Solution<T>> = None;
        for eps in [-1i8, 1] {
            let rhs = T::from_small(eps.into()) - r.clone() * p3.clone();
            let s = if m.is_zero() {
                // every s works, the first in scan order is -bound
                if rhs.is_zero() {
                    Some(-bound.clone())
                } else {
                    None
                }
            } else if rhs.is_multiple_of(&m) {
                Some(rhs / m.clone())
            } else {
                None
            };
            if let Some(s) = s.filter(|s| s.abs() <= *bound) {
                if found.as_ref().is_none_or(|f| s < f.s) {
                    found = Some(Case1Solution {
                        r: r.clone(),
                        s,
                        eps,
                    });
                }
            }
        }
        if found.is_some() {
            return found;
        }
        r = r + T::one();
    }
    None
}

/// `t` with `p3 = 1 + t p1`, if one exists.
pub fn case2_decide<T: Int>(p1: &T, p2: &T, p3: &T) -> Result<Option<T>> {
    check_inputs([p1, p2, p3])?;
    let g = gcd3(p1, p2, p3);
    if !g.is_one() {
        return Err(Error::NotCoprime(g.to_string()));
    }
    let (t, rem) = (p3.clone() - T::one()).div_rem(p1);
    Ok(rem.is_zero().then_some(t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Genus0Verdict {
    RealizableCase1,
    RealizableCase2,
    /// Neither condition holds in any assignment. This does not show that
    /// `X_0` fails to embed.
    NoCase1or2,
}

impl Genus0Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Genus0Verdict::RealizableCase1 => "RealizableCase1",
            Genus0Verdict::RealizableCase2 => "RealizableCase2",
            Genus0Verdict::NoCase1or2 => "NoCase1or2",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            Self::RealizableCase1,
            Self::RealizableCase2,
            Self::NoCase1or2,
        ]
        .into_iter()
        .find(|v| v.name() == name)
    }
}

/// Results with the entry at `index` playing `p1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct P1Choice<T> {
    pub index: usize,
    pub p1: T,
    /// The other two entries in input order.
    pub others: [T; 2],
    /// Case 1 for `(p1, others[0], others[1])`; the equation is symmetric in
    /// `p2 <-> p3`, so this covers both orders.
    pub case1: Case1Outcome<T>,
    /// `case2[k]` is Case 2 with `p3 = others[k]`.
    pub case2: [Option<T>; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Genus0Decision<T> {
    pub triple: [T; 3],
    pub choices: Vec<P1Choice<T>>,
}

impl<T: Int> Genus0Decision<T> {
    pub fn case1_realizable(&self) -> bool {
        self.choices.iter().any(|c| c.case1.witness().is_some())
    }

    pub fn case2_realizable(&self) -> bool {
        self.choices
            .iter()
            .any(|c| c.case2.iter().any(Option::is_some))
    }

    /// The first choice of `p1` in input order that realizes anything decides
    /// the verdict; within a choice Case 2 is checked before Case 1. Both
    /// flags are available from [`Self::case1_realizable`] and
    /// [`Self::case2_realizable`].
    pub fn verdict(&self) -> Genus0Verdict {
        for c in &self.choices {
            if c.case2.iter().any(Option::is_some) {
                return Genus0Verdict::RealizableCase2;
            }
            if c.case1.witness().is_some() {
                return Genus0Verdict::RealizableCase1;
            }
        }
        Genus0Verdict::NoCase1or2
    }
}

pub fn genus0_report<T: Int>(a: &T, b: &T, c: &T) -> Result<Genus0Decision<T>> {
    let triple = [a.clone(), b.clone(), c.clone()];
    check_inputs([a, b, c])?;
    let g = gcd3(a, b, c);
    if !g.is_one() {
        return Err(Error::NotCoprime(g.to_string()));
    }
    let mut choices = Vec::with_capacity(3);
    for index in 0..3 {
        let p1 = triple[index].clone();
        let mut rest = (0..3).filter(|&i| i != index).map(|i| triple[i].clone());
        let others = [
            rest.next().expect("two others"),
            rest.next().expect("two others"),
        ];
        let case1 = case1_search(&p1, &others[0], &others[1])?;
        let case2 = [
            case2_decide(&p1, &others[1], &others[0])?,
            case2_decide(&p1, &others[0], &others[1])?,
        ];
        choices.push(P1Choice {
            index,
            p1,
            others,
            case1,
            case2,
        });
    }
    Ok(Genus0Decision { triple, choices })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sol(r: i64, s: i64, eps: i8) -> Case1Solution<i64> {
        Case1Solution { r, s, eps }
    }

    /// Literal double loop over the box, the definition of the search.
    fn double_scan(p: [i64; 3], bound: i64) -> Option<Case1Solution<i64>> {
        for r in -bound..=bound {
            for s in -bound..=bound {
                let v = s * p[1] + r * p[2] + s * r * p[0];
                if v == 1 || v == -1 {
                    return Some(sol(r, s, v as i8));
                }
            }
        }
        None
    }

    #[test]
    fn decide_examples() {
        assert_eq!(case1_decide(&3i64, &3, &2).unwrap(), Some(sol(-2, -1, -1)));
        assert_eq!(case1_decide(&2i64, &6, &3).unwrap(), Some(sol(-1, 1, 1)));
        assert!(sol(-2, -1, -1).satisfies(&3, &3, &2));
        assert!(matches!(
            case1_decide(&1i64, &3, &2),
            Err(Error::ArgumentTooSmall { name: "p1", .. })
        ));
        assert!(matches!(
            case1_decide(&3i64, &((1i64 << 31) + 1), &2),
            Err(Error::ArgumentTooLarge { name: "p2", .. })
        ));
    }

    #[test]
    fn five_seven_eighteen_has_no_case1() {
        for p in [
            [5i64, 7, 18],
            [5, 18, 7],
            [7, 5, 18],
            [7, 18, 5],
            [18, 5, 7],
            [18, 7, 5],
        ] {
            let out = case1_search(&p[0], &p[1], &p[2]).unwrap();
            assert!(out.witness().is_none(), "{p:?}");
            assert_eq!(case1_bruteforce(&p[0], &p[1], &p[2], &1000), None);
        }
        match case1_search(&5i64, &7, &18).unwrap() {
            Case1Outcome::Exhausted(products) => {
                assert_eq!(products[0].n, 131);
                assert_eq!(products[0].divisors, vec![1, 131]);
                assert_eq!(products[1].n, 121);
                assert_eq!(products[1].divisors, vec![1, 11, 121]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bruteforce_examples() {
        let w = case1_bruteforce(&3i64, &3, &2, &10).unwrap();
        assert!(w.satisfies(&3, &3, &2));
        assert_eq!(case1_bruteforce(&2i64, &6, &3, &2), Some(sol(-1, 1, 1)));
    }

    #[test]
    fn bruteforce_matches_double_scan() {
        for p1 in 2..=9i64 {
            for p2 in 2..=9 {
                for p3 in 2..=9 {
                    let p = [p1, p2, p3];
                    assert_eq!(
                        case1_bruteforce(&p1, &p2, &p3, &25),
                        double_scan(p, 25),
                        "{p:?}"
                    );
                }
            }
        }
        // degenerate rows of the scan (p2 + r p1 = 0) with p3 = 1
        assert_eq!(case1_bruteforce(&2i64, &2, &1, &1), Some(sol(-1, -1, -1)));
        assert_eq!(double_scan([2, 2, 1], 1), Some(sol(-1, -1, -1)));
    }

    #[test]
    fn tie_break_is_minimal() {
        for p1 in 2..=12i64 {
            for p2 in 2..=12 {
                for p3 in 2..=12 {
                    let Some(w) = case1_decide(&p1, &p2, &p3).unwrap() else {
                        continue;
                    };
                    assert!(w.satisfies(&p1, &p2, &p3));
                    // nothing with smaller (|r|, |s|) exists
                    for r in -w.r.abs()..=w.r.abs() {
                        for s in -60..=60i64 {
                            let v = s * p2 + r * p3 + s * r * p1;
                            if v.abs() == 1 {
                                let cand = sol(r, s, v as i8);
                                assert!(witness_key(&cand) >= witness_key(&w), "{p1},{p2},{p3}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(&36i64), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(divisors(&-6i64), vec![1, 2, 3, 6]);
        assert_eq!(divisors(&1i64), vec![1]);
        assert!(divisors(&0i64).is_empty());
    }

    #[test]
    fn zero_product_has_no_solution() {
        // p1 = p2 p3 makes N_- vanish
        let out = case1_search(&6i64, &2, &3).unwrap();
        if let Case1Outcome::Exhausted(products) = &out {
            assert!(products.iter().any(|e| e.n == 0 && e.divisors.is_empty()));
        }
        assert_eq!(
            out.witness().is_some(),
            double_scan([6, 2, 3], 200).is_some()
        );
    }

    #[test]
    fn case2_examples() {
        assert_eq!(case2_decide(&2i64, &5, &3).unwrap(), Some(1));
        assert_eq!(case2_decide(&4i64, &9, &9).unwrap(), Some(2));
        let residues: Vec<i64> = [(5, 7), (5, 18), (7, 5), (7, 18), (18, 5), (18, 7)]
            .iter()
            .map(|&(p1, p3): &(i64, i64)| p3 % p1)
            .collect();
        assert_eq!(residues, vec![2, 3, 5, 4, 5, 7]);
        for (p1, p2, p3) in [
            (5i64, 18, 7),
            (5, 7, 18),
            (7, 18, 5),
            (7, 5, 18),
            (18, 7, 5),
            (18, 5, 7),
        ] {
            assert_eq!(case2_decide(&p1, &p2, &p3).unwrap(), None);
        }
        assert_eq!(
            case2_decide(&2i64, &4, &6),
            Err(Error::NotCoprime("2".into()))
        );
    }

    #[test]
    fn report_examples() {
        let d = genus0_report(&5i64, &7, &18).unwrap();
        assert_eq!(d.verdict(), Genus0Verdict::NoCase1or2);
        assert!(!d.case1_realizable() && !d.case2_realizable());

        let d = genus0_report(&2i64, &3, &5).unwrap();
        assert_eq!(d.verdict(), Genus0Verdict::RealizableCase2);
        assert_eq!(d.choices[0].p1, 2);
        assert_eq!(d.choices[0].others, [3, 5]);
        assert_eq!(d.choices[0].case2[0], Some(1));
        assert!(d.case1_realizable());

        let d = genus0_report(&3i64, &3, &2).unwrap();
        assert_eq!(d.verdict(), Genus0Verdict::RealizableCase1);
        assert_eq!(d.choices[0].case1.witness(), Some(&sol(-2, -1, -1)));

        assert_eq!(
            genus0_report(&2i64, &4, &6),
            Err(Error::NotCoprime("2".into()))
        );
    }

    #[test]
    fn round_trip_through_slopes() {
        use crate::slope::slopes_from_witness;
        for p1 in 2..=15i64 {
            for p2 in 2..=15 {
                for p3 in 2..=15 {
                    let Some(w) = case1_decide(&p1, &p2, &p3).unwrap() else {
                        continue;
                    };
                    let twist = w.to_witness(&p1, &p2, &p3);
                    let data = slopes_from_witness(&twist).unwrap();
                    assert_eq!(data.signed_multiplicities, [p1, p2, p3]);
                    assert_eq!(data.determinant, i64::from(w.eps));
                }
            }
        }
    }
}
