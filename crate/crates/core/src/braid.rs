//! Braid words on three strands, stored run-length and freely reduced, and the
//! pairwise linking numbers of their closures.

use std::fmt;

use crate::embed::LinkingMatrix;
use crate::error::{Error, Result};
use crate::scalar::{parse_int, Int};

/// `σ_generator^exponent`, with `exponent != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter<T> {
    pub generator: usize,
    pub exponent: T,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord<T> {
    strands: usize,
    letters: Vec<Letter<T>>,
}

impl<T: Int> BraidWord<T> {
    pub fn new(strands: usize) -> Self {
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter<T>] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends `σ_generator^exponent`, merging with the last letter and
    /// cancelling to the empty letter where possible.
    pub fn push(&mut self, generator: usize, exponent: T) -> Result<()> {
        if generator == 0 || generator >= self.strands {
            return Err(Error::BraidGenerator {
                generator,
                strands: self.strands,
            });
        }
        if exponent.is_zero() {
            return Ok(());
        }
        match self.letters.last_mut() {
            Some(last) if last.generator == generator => {
                last.exponent = last.exponent.clone() + exponent;
                if last.exponent.is_zero() {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(Letter {
                generator,
                exponent,
            }),
        }
        Ok(())
    }

    pub fn extend(&mut self, other: &BraidWord<T>) -> Result<()> {
        for l in &other.letters {
            self.push(l.generator, l.exponent.clone())?;
        }
        Ok(())
    }

    /// Parses `s1^12 s2 s1^-26 s2^-15`; the empty string is the trivial braid.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let mut word = Self::new(strands);
        for token in text.split_whitespace() {
            let bad = || Error::BraidToken(token.to_string());
            let rest = token.strip_prefix('s').ok_or_else(bad)?;
            let (gen, exp) = match rest.split_once('^') {
                Some((g, e)) => (
                    g,
                    parse_int::<T>(e).filter(|e| !e.is_zero()).ok_or_else(bad)?,
                ),
                None => (rest, T::one()),
            };
            if gen.is_empty() || !gen.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let generator: usize = gen.parse().map_err(|_| bad())?;
            word.push(generator, exp)?;
        }
        Ok(word)
    }

    /// Permutation induced on strand positions: entry `k` is the strand that
    /// ends at position `k`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            if l.exponent.is_odd() {
                at.swap(l.generator - 1, l.generator);
            }
        }
        at
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().iter().enumerate().all(|(i, &s)| i == s)
    }
}

impl<T: Int> fmt::Display for BraidWord<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if l.exponent.is_one() {
                write!(f, "s{}", l.generator)?;
            } else {
                write!(f, "s{}^{}", l.generator, l.exponent)?;
            }
        }
        Ok(())
    }
}

/// `A12^a12 · A13^a13 · A23^a23` where `A12 = σ1²`, `A23 = σ2²` and
/// `A13 = σ2 σ1² σ2⁻¹`; the closure is a 3-component link with
/// `lk(l_i, l_j) = a_ij`.
pub fn pure_braid_word<T: Int>(a12: &T, a13: &T, a23: &T) -> BraidWord<T> {
    let two = T::two();
    let mut w = BraidWord::new(3);
    let ok = "generators 1 and 2 exist on three strands";
    w.push(1, two.clone() * a12.clone()).expect(ok);
    if !a13.is_zero() {
        w.push(2, T::one()).expect(ok);
        w.push(1, two.clone() * a13.clone()).expect(ok);
        w.push(2, -T::one()).expect(ok);
    }
    w.push(2, two * a23.clone()).expect(ok);
    w
}

/// Linking numbers of the closure of a pure 3-braid: half the signed number of
/// crossings between each pair of strands, tracking strands through the word.
pub fn linking_matrix_of_braid<T: Int>(word: &BraidWord<T>) -> Result<LinkingMatrix<T>> {
    if word.strands() != 3 {
        return Err(Error::NonPureBraid);
    }
    let mut at = [0usize, 1, 2];
    // crossings[i][j] for strand ids i < j
    let mut crossings = [
        [T::zero(), T::zero(), T::zero()],
        [T::zero(), T::zero(), T::zero()],
    ];
    for l in word.letters() {
        let (x, y) = (at[l.generator - 1], at[l.generator]);
        let (i, j) = (x.min(y), x.max(y));
        crossings[i][j] = crossings[i][j].clone() + l.exponent.clone();
        if l.exponent.is_odd() {
            at.swap(l.generator - 1, l.generator);
        }
    }
    if at != [0, 1, 2] {
        return Err(Error::NonPureBraid);
    }
    let half = |c: &T| {
        debug_assert!(
            c.is_even(),
            "pure braids cross each pair an even number of times"
        );
        c.clone() / T::two()
    };
    Ok(LinkingMatrix {
        a12: half(&crossings[0][1]),
        a13: half(&crossings[0][2]),
        a23: half(&crossings[1][2]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lm(a12: i64, a13: i64, a23: i64) -> LinkingMatrix<i64> {
        LinkingMatrix { a12, a13, a23 }
    }

    #[test]
    fn words_for_small_linking() {
        assert_eq!(pure_braid_word(&1i64, &0, &0).to_string(), "s1^2");
        assert_eq!(pure_braid_word(&0i64, &2, &0).to_string(), "s2 s1^4 s2^-1");
        assert_eq!(
            pure_braid_word(&6i64, &-13, &-7).to_string(),
            "s1^12 s2 s1^-26 s2^-15"
        );
        assert_eq!(pure_braid_word(&0i64, &0, &0).to_string(), "");
    }

    #[test]
    fn linking_of_known_words() {
        let w = BraidWord::<i64>::parse(3, "s1^2").unwrap();
        assert_eq!(linking_matrix_of_braid(&w).unwrap(), lm(1, 0, 0));
        let w = BraidWord::<i64>::parse(3, "").unwrap();
        assert_eq!(linking_matrix_of_braid(&w).unwrap(), lm(0, 0, 0));
        let w = BraidWord::<i64>::parse(3, "s1^12 s2 s1^-26 s2^-15").unwrap();
        assert_eq!(linking_matrix_of_braid(&w).unwrap(), lm(6, -13, -7));
    }

    #[test]
    fn linking_by_hand_tracking() {
        // s1 s2 s1 s2 s1 s2 is the full twist: every pair links once
        let w = BraidWord::<i64>::parse(3, "s1 s2 s1 s2 s1 s2").unwrap();
        assert!(w.is_pure());
        assert_eq!(linking_matrix_of_braid(&w).unwrap(), lm(1, 1, 1));
    }

    #[test]
    fn rejects_non_pure() {
        let w = BraidWord::<i64>::parse(3, "s1").unwrap();
        assert_eq!(linking_matrix_of_braid(&w), Err(Error::NonPureBraid));
        let w = BraidWord::<i64>::parse(3, "s1 s2").unwrap();
        assert_eq!(w.permutation(), vec![1, 2, 0]);
        assert_eq!(linking_matrix_of_braid(&w), Err(Error::NonPureBraid));
    }

    #[test]
    fn free_reduction() {
        let w = BraidWord::<i64>::parse(3, "s1^3 s1^-1 s2 s2^-1 s1").unwrap();
        assert_eq!(w.to_string(), "s1^3");
        let w = BraidWord::<i64>::parse(3, "s2 s1 s1^-1 s2^-1").unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn parse_errors() {
        for bad in ["x1", "s", "s1^", "s1^0", "s1^a", "s^2", "s+1"] {
            assert!(
                matches!(BraidWord::<i64>::parse(3, bad), Err(Error::BraidToken(_))),
                "{bad}"
            );
        }
        assert_eq!(
            BraidWord::<i64>::parse(3, "s3"),
            Err(Error::BraidGenerator {
                generator: 3,
                strands: 3
            })
        );
        assert!(BraidWord::<i64>::parse(3, "s0").is_err());
    }

    #[test]
    fn display_round_trips() {
        let w = pure_braid_word(&-3i64, &5, &1);
        assert_eq!(BraidWord::parse(3, &w.to_string()).unwrap(), w);
    }
}
