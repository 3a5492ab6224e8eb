//! The twist functors `Sigma_i^{+-1}` and the word action `Psi` of `F_n`.
//!
//! `Sigma_i` is tensoring with `A -> (A e_i (x) e_i A)<s>`, where `s` is the
//! pair degree of the grading mode. On a summand `S = P_j<k>` the bimodule
//! term contributes one copy of `P_i` per basis element `b` of `e_i A e_j`
//! (a "slot"), and the unit map hits `slot(b)` with the dual partner of `b`.

use thiserror::Error;

use crate::algebra::{hom_basis, BasisPath, Element, GradingMode};
use crate::complexes::{Complex, ComplexError};
use crate::freegroup::Word;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("vertex {vertex} out of range for rank {rank}")]
    InvalidVertex { vertex: usize, rank: usize },
    #[error("{0} is not a conjugate of a positive generator")]
    NotAReflection(Word),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

fn check_vertex(i: usize, rank: usize) -> Result<(), TwistError> {
    if i == 0 || i > rank {
        return Err(TwistError::InvalidVertex { vertex: i, rank });
    }
    Ok(())
}

/// `Sigma_i(Y)` (`inverse = false`) or `Sigma_i^-1(Y)` before minimization.
///
/// Forward slots are `P_i<k + s - deg b>` one degree up, reached by
/// `dual(b)`; inverse slots are `P_i<k - deg b>` one degree down, mapping to
/// `S` by `b`. Between slots, `slot(b) -> slot(b')` over an entry `r` carries
/// minus the coefficient of `b'` in `b r`.
pub fn sigma_unreduced<S: Scalar>(i: usize, inverse: bool, y: &Complex<S>) -> Result<Complex<S>, TwistError> {
    check_vertex(i, y.rank())?;
    let mode = y.mode();
    let s = mode.pair_degree();
    let mut parts = y.parts();
    let mut entries: Vec<(usize, usize, Element<S>)> = y.entries().map(|(a, b, e)| (a, b, e.clone())).collect();
    let mut slots: Vec<[usize; 2]> = Vec::with_capacity(y.len());
    for sm in y.summands() {
        let mut ids = [0; 2];
        for (k, b) in hom_basis(i, sm.vertex).into_iter().enumerate() {
            let id = parts.len();
            ids[k] = id;
            let deg_b = mode.degree(&b);
            if inverse {
                parts.push((i, sm.shift - deg_b, sm.degree - 1));
                entries.push((id, sm.uid, Element::basis(b)));
            } else {
                parts.push((i, sm.shift + s - deg_b, sm.degree + 1));
                entries.push((sm.uid, id, Element::basis(b.dual_partner())));
            }
        }
        slots.push(ids);
    }
    for (a, c, r) in y.entries() {
        let (va, vc) = (y.summand(a).vertex, y.summand(c).vertex);
        for (k, b) in hom_basis(i, va).into_iter().enumerate() {
            let prod = Element::basis(b).mul(r);
            for (l, b2) in hom_basis(i, vc).into_iter().enumerate() {
                let coeff = prod.coeff(b2);
                if !coeff.is_zero() {
                    entries.push((slots[a][k], slots[c][l], Element::term(BasisPath::Idem(i), -coeff)));
                }
            }
        }
    }
    Ok(Complex::assemble_checked(y.rank(), mode.clone(), parts, entries))
}

/// Minimal model of `Sigma_i^{sign}(Y)`; `sign` is `1` or `-1`.
pub fn sigma<S: Scalar>(i: usize, sign: i32, y: &Complex<S>) -> Result<Complex<S>, TwistError> {
    let out = sigma_unreduced(i, sign < 0, y)?.minimize();
    debug_assert!(out.is_minimal());
    Ok(out)
}

/// `Psi_w(Y)`: the letters act right to left, minimizing after each.
pub fn psi<S: Scalar>(w: &Word, y: &Complex<S>) -> Result<Complex<S>, TwistError> {
    for &l in w.letters() {
        check_vertex(l.unsigned_abs() as usize, y.rank())?;
    }
    let mut cur = y.clone();
    for &l in w.letters().iter().rev() {
        cur = sigma(l.unsigned_abs() as usize, l.signum(), &cur)?;
    }
    Ok(cur)
}

/// `Psi_w` applied to `P_1 + ... + P_n`.
pub fn psi_generator<S: Scalar>(w: &Word, rank: usize, mode: &GradingMode) -> Result<Complex<S>, TwistError> {
    psi(w, &Complex::generator(rank, mode.clone()))
}

/// The complex `C_t`: `Psi_g(P_i)` for `t = g s_i g^-1` with `g` the maximal
/// conjugator, shifted so that its lowest internal shift and lowest
/// homological degree are both 0. Accepts any conjugate of a positive
/// generator; in the ordered grading the result is concentrated in internal
/// shift 0 exactly for reflections.
pub fn reflection_complex_in<S: Scalar>(t: &Word, rank: usize, mode: &GradingMode) -> Result<Complex<S>, TwistError> {
    let (g, core) = t.cyclic_reduce();
    let &[i] = core.letters() else { return Err(TwistError::NotAReflection(t.clone())) };
    if i < 0 {
        return Err(TwistError::NotAReflection(t.clone()));
    }
    let p = Complex::projective(rank, mode.clone(), i as usize, 0, 0)?;
    let c = psi(&g, &p)?;
    let (lo_deg, _) = c.degree_range().expect("twists of P_i are nonzero");
    let (lo_shift, _) = c.shift_range().expect("twists of P_i are nonzero");
    Ok(c.shift(lo_deg, -lo_shift))
}

/// [`reflection_complex_in`] with the ordered grading.
pub fn reflection_complex<S: Scalar>(t: &Word, rank: usize) -> Result<Complex<S>, TwistError> {
    reflection_complex_in(t, rank, &GradingMode::OrientVec)
}
