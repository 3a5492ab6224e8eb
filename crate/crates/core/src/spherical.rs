//! Ordered spherical collections in the ordered grading, the Hurwitz action on
//! them, and the hom-vanishing criteria for pairs of reflections.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::GradingMode;
use crate::complexes::{hom_table, is_isomorphic, is_isomorphic_up_to_shift, multiplicities, Complex, ComplexError};
use crate::freegroup::{self, Bessis, Decision, FreeGroupError, Word};
use crate::scalar::Scalar;
use crate::slices::{baric_slices, SliceError};
use crate::twists::{psi, reflection_complex, TwistError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SphericalError {
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Slice(#[from] SliceError),
    #[error("{0} is not a reflection")]
    NotAReflection(Word),
    #[error("entry {index} is not the reflection complex of {word}")]
    Unpaired { index: usize, word: Word },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Entry<S> {
    pub reflection: Word,
    pub complex: Complex<S>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SphericalTuple<S> {
    pub entries: Vec<Entry<S>>,
}

impl<S: Scalar> SphericalTuple<S> {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn words(&self) -> Vec<Word> {
        self.entries.iter().map(|e| e.reflection.clone()).collect()
    }

    pub fn product(&self) -> Word {
        freegroup::product(&self.words())
    }

    /// Every complex is isomorphic to the reflection complex of its word up
    /// to homological shift.
    pub fn check_pairing(&self) -> Result<(), SphericalError> {
        for (k, e) in self.entries.iter().enumerate() {
            let c: Complex<S> = reflection_complex(&e.reflection, self.rank())?;
            if !is_isomorphic_up_to_shift(&e.complex, &c) {
                return Err(SphericalError::Unpaired { index: k + 1, word: e.reflection.clone() });
            }
        }
        Ok(())
    }
}

/// `((s_1, P_1), ..., (s_n, P_n))` in the ordered grading.
pub fn base_tuple<S: Scalar>(n: usize) -> SphericalTuple<S> {
    let entries = (1..=n)
        .map(|i| Entry {
            reflection: Word::generator(i),
            complex: Complex::projective(n, GradingMode::OrientVec, i, 0, 0).expect("valid vertex"),
        })
        .collect();
    SphericalTuple { entries }
}

/// `tau_i` for `index = i`, `tau_i^-1` for `index = -i`. The complex track uses
/// the twist by the word of the moving entry.
pub fn hurwitz_spherical<S: Scalar>(index: i32, tup: &SphericalTuple<S>) -> Result<SphericalTuple<S>, SphericalError> {
    let words = freegroup::hurwitz(index, &tup.words())?;
    let i = index.unsigned_abs() as usize;
    let (a, b) = (&tup.entries[i - 1], &tup.entries[i]);
    let mut entries = tup.entries.clone();
    if index > 0 {
        entries[i - 1].complex = psi(&a.reflection, &b.complex)?;
        entries[i].complex = a.complex.clone();
    } else {
        entries[i - 1].complex = b.complex.clone();
        entries[i].complex = psi(&b.reflection.inverse(), &a.complex)?;
    }
    for (e, w) in entries.iter_mut().zip(words) {
        e.reflection = w;
    }
    Ok(SphericalTuple { entries })
}

/// Applies the letters of a braid word left to right.
pub fn hurwitz_spherical_word<S: Scalar>(braid: &Word, tup: &SphericalTuple<S>) -> Result<SphericalTuple<S>, SphericalError> {
    let mut cur = tup.clone();
    for &l in braid.letters() {
        cur = hurwitz_spherical(l, &cur)?;
    }
    Ok(cur)
}

/// Graded endomorphisms summed over all shifts are `k[z]/z^2`: the identity
/// plus one morphism at a nonzero shift whose square lands in a zero space.
pub fn is_spherical<S: Scalar>(e: &Complex<S>) -> Result<bool, SphericalError> {
    let table = hom_table(e, e)?;
    if table.total() != 2 || table.get(0, 0) != 1 {
        return Ok(false);
    }
    let &(k, m) = table.dims.keys().find(|&&key| key != (0, 0)).expect("two-dimensional");
    Ok(table.get(2 * k, 2 * m) == 0)
}

fn in_heart<S: Scalar>(e: &Complex<S>) -> Result<bool, SphericalError> {
    let dec = baric_slices(e)?;
    Ok(matches!(dec.range(), Some((0, 0))))
}

/// Spherical entries in the heart, with homs from earlier to later entries
/// only at internal shift 1 and from later to earlier only at shift 0.
pub fn is_o_spherical<S: Scalar>(tup: &SphericalTuple<S>) -> Result<bool, SphericalError> {
    for e in &tup.entries {
        if *e.complex.mode() != GradingMode::OrientVec || !is_spherical(&e.complex)? || !in_heart(&e.complex)? {
            return Ok(false);
        }
    }
    for (i, a) in tup.entries.iter().enumerate() {
        for (j, b) in tup.entries.iter().enumerate() {
            if i == j {
                continue;
            }
            let allowed = if i < j { 1 } else { 0 };
            if hom_table(&a.complex, &b.complex)?.support_ints().iter().any(|&k| k != allowed) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The criteria for a pair of reflections `(t, u)`, keyed by item number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivReport {
    pub t: Word,
    pub u: Word,
    pub criteria: BTreeMap<u8, Decision>,
}

impl EquivReport {
    /// All decided criteria share one value.
    pub fn agree(&self) -> bool {
        let mut known = self.criteria.values().filter_map(|d| d.known());
        match known.next() {
            Some(first) => known.all(|v| v == first),
            None => true,
        }
    }

    /// The first criterion disagreeing with item 1, or with the first decided item.
    pub fn first_discrepancy(&self) -> Option<(u8, u8)> {
        let (&r, reference) = self.criteria.iter().find(|(_, d)| d.known().is_some())?;
        self.criteria
            .iter()
            .find(|(_, d)| d.known().is_some_and(|v| Some(v) != reference.known()))
            .map(|(&k, _)| (r, k))
    }
}

/// `Z = C<int>[m_1] + ... + C<int>[m_r]` for some `r >= 1` and shifts `m_i`.
fn is_sum_of_shifts<S: Scalar>(z: &Complex<S>, c: &Complex<S>, int: i64) -> Result<bool, SphericalError> {
    let c = c.shift(0, int);
    let mult = multiplicities(&c, z)?;
    let mut sum = Complex::zero(z.rank(), z.mode().clone());
    for (&k, &r) in &mult {
        for _ in 0..r {
            sum = sum.direct_sum(&c.shift(k, 0))?;
        }
    }
    Ok(!sum.is_zero() && is_isomorphic(&sum, z))
}

fn slice_criterion<S: Scalar>(
    y: &Complex<S>,
    range: (i64, i64),
    sum_at: i64,
    summand: &Complex<S>,
    int: i64,
    other: &Complex<S>,
) -> Result<bool, SphericalError> {
    let dec = baric_slices(y)?;
    if dec.range() != Some(range) {
        return Ok(false);
    }
    let (sum_slice, other_slice) = if sum_at == range.1 {
        (dec.top().expect("nonzero"), dec.bottom().expect("nonzero"))
    } else {
        (dec.bottom().expect("nonzero"), dec.top().expect("nonzero"))
    };
    Ok(is_sum_of_shifts(sum_slice, summand, int)? && is_isomorphic_up_to_shift(other_slice, other))
}

/// Twisting `c` by `word` gives the reflection complex of `target` inside the heart.
fn twist_criterion<S: Scalar>(word: &Word, c: &Complex<S>, target: &Word, bessis: &Bessis) -> Result<bool, SphericalError> {
    if !bessis.is_reflection(target) {
        return Ok(false);
    }
    let y = psi(word, c)?;
    let expect: Complex<S> = reflection_complex(target, c.rank())?;
    Ok(in_heart(&y)? && is_isomorphic_up_to_shift(&y, &expect))
}

/// Evaluates items (1), (2), (3) and (5) through (10) for reflections `t`, `u`.
pub fn check_equiv<S: Scalar>(t: &Word, u: &Word, bessis: &Bessis) -> Result<EquivReport, SphericalError> {
    let (t, u) = (t.reduce(), u.reduce());
    for w in [&t, &u] {
        if !bessis.is_reflection(w) {
            return Err(SphericalError::NotAReflection(w.clone()));
        }
    }
    let n = bessis.rank();
    let ct: Complex<S> = reflection_complex(&t, n)?;
    let cu: Complex<S> = reflection_complex(&u, n)?;
    let tut = t.mul(&u).mul(&t.inverse());
    let utu = u.inverse().mul(&t).mul(&u);

    let mut c = BTreeMap::new();
    c.insert(1, bessis.is_simple(&t.mul(&u)));
    c.insert(2, Decision::from_bool(bessis.is_reflection(&tut)));
    c.insert(3, Decision::from_bool(bessis.is_reflection(&utu)));
    let only = |x: &Complex<S>, y: &Complex<S>, k: i64| -> Result<bool, SphericalError> {
        Ok(hom_table(x, y)?.support_ints().iter().all(|&m| m == k))
    };
    c.insert(5, Decision::from_bool(only(&cu, &ct, 0)?));
    c.insert(6, Decision::from_bool(only(&ct, &cu, 1)?));
    c.insert(7, Decision::from_bool(twist_criterion(&t, &cu, &tut, bessis)?));
    c.insert(8, Decision::from_bool(twist_criterion(&u.inverse(), &ct, &utu, bessis)?));
    let y9 = psi(&u, &ct)?;
    c.insert(9, Decision::from_bool(slice_criterion(&y9, (0, 1), 1, &cu, 1, &ct)?));
    let y10 = psi(&t.inverse(), &cu)?;
    c.insert(10, Decision::from_bool(slice_criterion(&y10, (-1, 0), -1, &ct, -1, &cu)?));
    Ok(EquivReport { t, u, criteria: c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::{enumerate_reflections, reduced_words};
    use crate::slices::{hom_from_reflection, hom_to_reflection};
    use crate::twists::sigma;
    use num_rational::BigRational;

    type T = SphericalTuple<BigRational>;
    type C = Complex<BigRational>;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn base_examples() {
        for n in 2..=4 {
            let b: T = base_tuple(n);
            assert_eq!(b.product(), Word::gamma(n));
            assert!(b.entries.iter().all(|e| is_spherical(&e.complex).unwrap()));
            assert!(is_o_spherical(&b).unwrap());
            b.check_pairing().unwrap();
        }
    }

    #[test]
    fn first_move() {
        let b: T = base_tuple(2);
        let t = hurwitz_spherical(1, &b).unwrap();
        assert_eq!(t.words(), vec![w("s1 s2 s1^-1"), w("s1")]);
        let p2 = C::projective(2, GradingMode::OrientVec, 2, 0, 0).unwrap();
        assert!(is_isomorphic(&t.entries[0].complex, &sigma(1, 1, &p2).unwrap()));
        assert_eq!(t.entries[0].complex.signature(), vec![(0, 2, 0), (1, 1, 0), (1, 1, 0)]);
        assert_eq!(t.entries[1].complex, b.entries[0].complex);
        assert!(is_o_spherical(&t).unwrap());
        t.check_pairing().unwrap();

        let back = hurwitz_spherical(-1, &t).unwrap();
        assert_eq!(back.words(), b.words());
        for (x, y) in back.entries.iter().zip(&b.entries) {
            assert!(is_isomorphic_up_to_shift(&x.complex, &y.complex));
        }
        assert!(hurwitz_spherical(2, &b).is_err());
    }

    #[test]
    fn wrong_order_is_not_o_spherical() {
        let b: T = base_tuple(2);
        let swapped = SphericalTuple { entries: vec![b.entries[1].clone(), b.entries[0].clone()] };
        assert!(!is_o_spherical(&swapped).unwrap());
    }

    #[test]
    fn spherical_detection() {
        let vec = GradingMode::OrientVec;
        let p1 = C::projective(2, vec.clone(), 1, 0, 0).unwrap();
        let p2 = C::projective(2, vec, 2, 0, 0).unwrap();
        assert!(is_spherical(&sigma(2, -1, &p1).unwrap()).unwrap());
        assert!(!is_spherical(&p1.direct_sum(&p2).unwrap()).unwrap());
        assert!(!is_spherical(&C::zero(2, GradingMode::OrientVec)).unwrap());
    }

    /// Orbit tuples stay o-spherical and paired.
    #[test]
    fn orbit_preserves_structure() {
        for n in 2..=3 {
            let b: T = base_tuple(n);
            for braid in reduced_words(n - 1, 2) {
                let tup = hurwitz_spherical_word(&braid, &b).unwrap();
                assert_eq!(tup.product(), Word::gamma(n));
                assert!(is_o_spherical(&tup).unwrap(), "{braid}");
                tup.check_pairing().unwrap();
            }
        }
    }

    #[test]
    fn equiv_examples() {
        let b = Bessis::new(2, 5);
        let r = check_equiv::<BigRational>(&w("s1"), &w("s2"), &b).unwrap();
        assert!(r.criteria.values().all(|d| *d == Decision::True), "{r:?}");
        let r = check_equiv::<BigRational>(&w("s2"), &w("s1"), &b).unwrap();
        assert_eq!(r.criteria[&1], Decision::False);
        assert_eq!(r.criteria[&5], Decision::False);
        assert!(r.agree(), "{r:?}");
        let r = check_equiv::<BigRational>(&w("s1"), &w("s1"), &b).unwrap();
        assert_eq!(r.criteria[&2], Decision::True);
        assert_eq!(r.criteria[&1], Decision::False);
        assert!(!r.agree());
        assert!(r.first_discrepancy().is_some());
        assert!(check_equiv::<BigRational>(&w("s1 s2"), &w("s1"), &b).is_err());
    }

    #[test]
    fn equiv_agrees_on_short_pairs() {
        let b = Bessis::new(3, 5);
        let refl = enumerate_reflections(3, 3);
        for t in &refl {
            for u in &refl {
                if t == u {
                    continue;
                }
                let r = check_equiv::<BigRational>(t, u, &b).unwrap();
                assert!(r.agree(), "{r:?}");
            }
        }
    }

    /// Vanishing homs from the reflection complexes of `t` and `u` propagate to
    /// every reflection dividing `tu`, in both directions.
    #[test]
    fn homs_propagate_along_simples() {
        let n = 3;
        let b = Bessis::new(n, 5);
        let refl = enumerate_reflections(n, 3);
        let ys: Vec<C> = reduced_words(n, 2)
            .iter()
            .flat_map(|g| (1..=n).map(move |j| (g.clone(), j)))
            .map(|(g, j)| psi(&g, &C::projective(n, GradingMode::OrientVec, j, 0, 0).unwrap()).unwrap())
            .collect();
        let mut checked = 0;
        for t in &refl {
            for u in &refl {
                let tu = t.mul(u);
                if b.is_simple(&tu) != Decision::True {
                    continue;
                }
                let divisors: Vec<&Word> = refl.iter().filter(|r| b.divides(r, &tu) == Decision::True).collect();
                for y in &ys {
                    if hom_from_reflection(t, y).unwrap() == 0 && hom_from_reflection(u, y).unwrap() == 0 {
                        checked += 1;
                        for r in &divisors {
                            assert_eq!(hom_from_reflection(r, y).unwrap(), 0, "{t} {u} {r}");
                        }
                    }
                    if hom_to_reflection(y, t).unwrap() == 0 && hom_to_reflection(y, u).unwrap() == 0 {
                        checked += 1;
                        for r in &divisors {
                            assert_eq!(hom_to_reflection(y, r).unwrap(), 0, "{t} {u} {r}");
                        }
                    }
                }
            }
        }
        assert!(checked > 0);
    }
}
