//! Baric and t-slices of minimal complexes, the statistics `phi_-`/`phi_+`,
//! and the ping-pong sets `X_i^+-` and `X_w`.
//!
//! The baric index of a summand is its internal shift; the t index (path
//! grading) is shift minus homological degree. A slice keeps the summands of
//! one index and the differential entries between them.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::GradingMode;
use crate::complexes::{total_hom, Complex, ComplexError};
use crate::freegroup::{Bessis, Decision, Word};
use crate::scalar::Scalar;
use crate::twists::{reflection_complex, TwistError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SliceError {
    #[error("{0}")]
    WrongMode(&'static str),
    #[error("the zero complex has no slices")]
    Zero,
    #[error("{0} is not a reflection")]
    NotAReflection(Word),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Twist(#[from] TwistError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SliceFlavor {
    Baric,
    T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SliceDecomposition<S> {
    pub flavor: SliceFlavor,
    pub minimal: Complex<S>,
    pub slices: BTreeMap<i64, Complex<S>>,
}

impl<S: Scalar> SliceDecomposition<S> {
    /// `(min, max)` of the nonzero slice indices.
    pub fn range(&self) -> Option<(i64, i64)> {
        Some((*self.slices.keys().next()?, *self.slices.keys().next_back()?))
    }

    pub fn top(&self) -> Option<&Complex<S>> {
        self.slices.values().next_back()
    }

    pub fn bottom(&self) -> Option<&Complex<S>> {
        self.slices.values().next()
    }
}

fn decompose<S: Scalar>(y: &Complex<S>, flavor: SliceFlavor) -> SliceDecomposition<S> {
    let minimal = y.minimize();
    let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for s in minimal.summands() {
        let k = match flavor {
            SliceFlavor::Baric => s.shift,
            SliceFlavor::T => s.shift - s.degree,
        };
        groups.entry(k).or_default().push(s.uid);
    }
    let slices = groups.into_iter().map(|(k, keep)| (k, minimal.restrict(&keep))).collect();
    SliceDecomposition { flavor, minimal, slices }
}

/// Baric slices of the minimal model; orientation gradings only.
pub fn baric_slices<S: Scalar>(y: &Complex<S>) -> Result<SliceDecomposition<S>, SliceError> {
    if !y.mode().is_orientation() {
        return Err(SliceError::WrongMode("baric slices need an orientation grading"));
    }
    Ok(decompose(y, SliceFlavor::Baric))
}

/// t-slices of the minimal model; path grading only.
pub fn t_slices<S: Scalar>(y: &Complex<S>) -> Result<SliceDecomposition<S>, SliceError> {
    if y.mode().is_orientation() {
        return Err(SliceError::WrongMode("t-slices need the path grading"));
    }
    Ok(decompose(y, SliceFlavor::T))
}

/// Baric slices for orientation gradings, t-slices for the path grading.
pub fn slices<S: Scalar>(y: &Complex<S>) -> SliceDecomposition<S> {
    let flavor = if y.mode().is_orientation() { SliceFlavor::Baric } else { SliceFlavor::T };
    decompose(y, flavor)
}

/// `(phi_-, phi_+)`: extreme slice indices of the flavor matching the mode.
pub fn phi<S: Scalar>(y: &Complex<S>) -> Result<(i64, i64), SliceError> {
    slices(y).range().ok_or(SliceError::Zero)
}

/// `dim Hom(Y, P_j<m>[k])` summed over `k`.
pub fn hom_to_projectives<S: Scalar>(y: &Complex<S>, j: usize, m: i64) -> Result<usize, SliceError> {
    let p = Complex::projective(y.rank(), y.mode().clone(), j, 0, 0)?;
    Ok(total_hom(y, &p, m)?)
}

/// `dim Hom(P_j<m>[k], Y)` summed over `k`.
pub fn hom_from_projectives<S: Scalar>(j: usize, m: i64, y: &Complex<S>) -> Result<usize, SliceError> {
    let p = Complex::projective(y.rank(), y.mode().clone(), j, 0, 0)?;
    Ok(total_hom(&p, y, -m)?)
}

fn require_tilde<S: Scalar>(y: &Complex<S>) -> Result<(), SliceError> {
    if *y.mode() != GradingMode::OrientTilde {
        return Err(SliceError::WrongMode("the ping-pong sets use the symmetric grading"));
    }
    Ok(())
}

/// Membership in `X_i^+`: the top baric slice is made of shifts of `P_i`, and
/// `Hom(Y, P_j<phi_-> [*])` vanishes exactly for `j = i`.
///
/// Indecomposability of `Y` is not checked.
pub fn in_x_plus<S: Scalar>(y: &Complex<S>, i: usize) -> Result<bool, SliceError> {
    require_tilde(y)?;
    let dec = baric_slices(y)?;
    let (lo, _) = dec.range().ok_or(SliceError::Zero)?;
    if !dec.top().expect("nonzero").summands().iter().all(|s| s.vertex == i) {
        return Ok(false);
    }
    for j in 1..=y.rank() {
        if (hom_to_projectives(&dec.minimal, j, lo)? == 0) != (j == i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in `X_i^-`: the bottom baric slice is made of shifts of `P_i`,
/// and `Hom(P_j<phi_+> [*], Y)` vanishes exactly for `j = i`.
pub fn in_x_minus<S: Scalar>(y: &Complex<S>, i: usize) -> Result<bool, SliceError> {
    require_tilde(y)?;
    let dec = baric_slices(y)?;
    let (_, hi) = dec.range().ok_or(SliceError::Zero)?;
    if !dec.bottom().expect("nonzero").summands().iter().all(|s| s.vertex == i) {
        return Ok(false);
    }
    for j in 1..=y.rank() {
        if (hom_from_projectives(j, hi, &dec.minimal)? == 0) != (j == i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All `(i, sign)` with `Y` in `X_i^{sign}`.
pub fn ping_pong_memberships<S: Scalar>(y: &Complex<S>) -> Result<Vec<(usize, i32)>, SliceError> {
    let mut out = Vec::new();
    for i in 1..=y.rank() {
        if in_x_plus(y, i)? {
            out.push((i, 1));
        }
        if in_x_minus(y, i)? {
            out.push((i, -1));
        }
    }
    Ok(out)
}

/// `dim Hom(Y, C_t[k])` summed over `k`, with `C_t` the normalized reflection
/// complex in the ordered grading.
pub fn hom_to_reflection<S: Scalar>(y: &Complex<S>, t: &Word) -> Result<usize, SliceError> {
    if *y.mode() != GradingMode::OrientVec {
        return Err(SliceError::WrongMode("reflection complexes use the ordered grading"));
    }
    let c = reflection_complex(t, y.rank())?;
    Ok(total_hom(y, &c, 0)?)
}

/// `dim Hom(C_t[k], Y)` summed over `k`.
pub fn hom_from_reflection<S: Scalar>(t: &Word, y: &Complex<S>) -> Result<usize, SliceError> {
    if *y.mode() != GradingMode::OrientVec {
        return Err(SliceError::WrongMode("reflection complexes use the ordered grading"));
    }
    let c = reflection_complex(t, y.rank())?;
    Ok(total_hom(&c, y, 0)?)
}

/// Membership in `X_w` tested against a finite set of reflections: `Y` lies in
/// baric degrees `>= 0`, and `Hom(Y, C_t[*])` vanishes exactly when `t`
/// divides `w`. Undecided divisibility makes the answer unknown.
pub fn in_x_w<S: Scalar>(
    y: &Complex<S>,
    w: &Word,
    reflections: &[Word],
    bessis: &Bessis,
) -> Result<Decision, SliceError> {
    if *y.mode() != GradingMode::OrientVec {
        return Err(SliceError::WrongMode("X_w uses the ordered grading"));
    }
    let dec = baric_slices(y)?;
    if dec.range().is_some_and(|(lo, _)| lo < 0) {
        return Ok(Decision::False);
    }
    let mut unknown = false;
    for t in reflections {
        if !bessis.is_reflection(t) {
            return Err(SliceError::NotAReflection(t.clone()));
        }
        let vanishes = hom_to_reflection(&dec.minimal, t)? == 0;
        match bessis.divides(t, w) {
            Decision::Unknown => unknown = true,
            d => {
                if (d == Decision::True) != vanishes {
                    return Ok(Decision::False);
                }
            }
        }
    }
    Ok(if unknown { Decision::Unknown } else { Decision::True })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::is_isomorphic;
    use crate::freegroup::{enumerate_reflections, reduced_words};
    use crate::twists::{psi, sigma};
    use num_rational::BigRational;

    type C = Complex<BigRational>;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(n: usize, mode: &GradingMode, i: usize, k: i64, d: i64) -> C {
        C::projective(n, mode.clone(), i, k, d).unwrap()
    }

    #[test]
    fn baric_slice_examples() {
        let tilde = GradingMode::OrientTilde;
        let dec = baric_slices(&p(2, &tilde, 1, 0, 0)).unwrap();
        assert_eq!(dec.slices.len(), 1);
        assert_eq!(dec.slices[&0], p(2, &tilde, 1, 0, 0));

        let y = sigma(1, 1, &p(2, &tilde, 2, 0, 0)).unwrap();
        let dec = baric_slices(&y).unwrap();
        assert_eq!(dec.slices.keys().copied().collect::<Vec<_>>(), vec![0, 1]);
        let s0 = &dec.slices[&0];
        assert_eq!(s0.signature(), vec![(0, 2, 0), (1, 1, 0)]);
        assert_eq!(s0.num_entries(), 1);
        assert_eq!(dec.slices[&1], p(2, &tilde, 1, 1, 1));

        assert!(baric_slices(&p(2, &GradingMode::PathLength, 1, 0, 0)).is_err());
    }

    #[test]
    fn slices_are_additive_and_partition() {
        let tilde = GradingMode::OrientTilde;
        let y = psi(&w("s1 s2^-1"), &p(2, &tilde, 1, 0, 0)).unwrap();
        let sum = y.direct_sum(&y.shift(0, 1)).unwrap();
        let a = baric_slices(&y).unwrap();
        let b = baric_slices(&sum).unwrap();
        for (k, s) in &b.slices {
            let mut expect = a.slices.get(k).map(|c| c.signature()).unwrap_or_default();
            if let Some(c) = a.slices.get(&(k - 1)) {
                expect.extend(c.shift(0, 1).signature());
            }
            expect.sort();
            assert_eq!(s.signature(), expect, "slice {k}");
        }
        let total: usize = b.slices.values().map(|c| c.len()).sum();
        assert_eq!(total, b.minimal.len());
    }

    #[test]
    fn t_slice_examples() {
        let path = GradingMode::PathLength;
        let y = sigma(1, 1, &p(2, &path, 2, 0, 0)).unwrap();
        let dec = t_slices(&y).unwrap();
        assert_eq!(dec.slices.len(), 1);
        assert!(is_isomorphic(&dec.slices[&0], &y));
        assert_eq!(phi(&y).unwrap(), (0, 0));
        // P_1<2>[-1] has t index 2 - 1.
        assert_eq!(phi(&sigma(1, 1, &p(2, &path, 1, 0, 0)).unwrap()).unwrap(), (1, 1));
        assert!(t_slices(&p(2, &GradingMode::OrientVec, 1, 0, 0)).is_err());
    }

    #[test]
    fn phi_examples() {
        let tilde = GradingMode::OrientTilde;
        assert_eq!(phi(&p(3, &tilde, 3, 0, 0)).unwrap(), (0, 0));
        assert_eq!(phi(&sigma(1, 1, &p(2, &tilde, 2, 0, 0)).unwrap()).unwrap(), (0, 1));
        assert_eq!(phi(&sigma(1, 1, &p(2, &tilde, 1, 0, 0)).unwrap()).unwrap(), (1, 1));
        assert_eq!(phi(&C::zero(2, tilde)), Err(SliceError::Zero));
    }

    #[test]
    fn ping_pong_examples() {
        let tilde = GradingMode::OrientTilde;
        let y = sigma(1, 1, &p(2, &tilde, 2, 0, 0)).unwrap();
        assert!(in_x_plus(&y, 1).unwrap());
        assert!(!in_x_plus(&p(2, &tilde, 2, 0, 0), 1).unwrap());
        assert!(in_x_minus(&sigma(1, -1, &p(2, &tilde, 2, 0, 0)).unwrap(), 1).unwrap());
        assert!(in_x_plus(&y, 1).is_ok() && in_x_plus(&y.with_mode(GradingMode::OrientTilde).unwrap(), 1).unwrap());
        let vec = C::projective(2, GradingMode::OrientVec, 1, 0, 0).unwrap();
        assert!(in_x_plus(&vec, 1).is_err());
    }

    /// Twists of a different projective land in the matching set, and no
    /// sampled complex lies in two sets.
    #[test]
    fn ping_pong_first_item_and_disjointness() {
        let tilde = GradingMode::OrientTilde;
        for n in 2..=3 {
            for i in 1..=n {
                for j in (1..=n).filter(|&j| j != i) {
                    let pj = p(n, &tilde, j, 0, 0);
                    assert_eq!(ping_pong_memberships(&sigma(i, 1, &pj).unwrap()).unwrap(), vec![(i, 1)]);
                    assert_eq!(ping_pong_memberships(&sigma(i, -1, &pj).unwrap()).unwrap(), vec![(i, -1)]);
                }
            }
            for word in reduced_words(n, 2).into_iter().filter(|w| !w.is_empty()) {
                for j in 1..=n {
                    let y = psi(&word, &p(n, &tilde, j, 0, 0)).unwrap();
                    assert!(ping_pong_memberships(&y).unwrap().len() <= 1, "{word} P{j}");
                }
            }
        }
    }

    #[test]
    fn x_w_examples() {
        let vec = GradingMode::OrientVec;
        let b = Bessis::new(2, 5);
        let set = vec![w("s1"), w("s2"), w("s1 s2 s1^-1")];
        assert_eq!(in_x_w(&p(2, &vec, 1, -1, 0), &w("s2"), &set, &b).unwrap(), Decision::False);
        // Y_w for w = s2: the complement s1 has the single reflection divisor s1.
        assert_eq!(in_x_w(&p(2, &vec, 1, 0, 0), &w("s2"), &set, &b).unwrap(), Decision::True);
        assert_eq!(in_x_w(&p(2, &vec, 1, 0, 0), &w("s1"), &set, &b).unwrap(), Decision::False);
        // Sigma_2 P_1 has no homs to the shifts of P_2 only.
        let y = sigma(2, 1, &p(2, &vec, 1, 0, 0)).unwrap();
        let homs: Vec<usize> = set.iter().map(|t| hom_to_reflection(&y, t).unwrap()).collect();
        assert_eq!(homs, vec![1, 0, 2]);
        assert_eq!(in_x_w(&y, &w("s2"), &set, &b).unwrap(), Decision::True);
        assert_eq!(in_x_w(&y, &Word::gamma(2), &set, &b).unwrap(), Decision::False);
        assert!(in_x_w(&y, &w("s2"), &[w("s1^-1 s2 s1")], &b).is_err());
    }

    /// `Y_w = sum of C_x` over reflections `x` dividing the complement of `w`
    /// lies in `X_w`, whenever the complement is itself a reflection.
    #[test]
    fn x_w_witnesses() {
        for n in 2..=3 {
            let b = Bessis::new(n, 5);
            let set = enumerate_reflections(n, 3);
            let gamma = Word::gamma(n);
            for s in b.simples().iter().filter(|s| s.exponent_sum() == n as i64 - 1) {
                let comp = gamma.mul(&s.inverse());
                assert!(b.is_reflection(&comp));
                let y: C = reflection_complex(&comp, n).unwrap();
                assert_eq!(in_x_w(&y, s, &set, &b).unwrap(), Decision::True, "w = {s}");
            }
        }
    }
}
