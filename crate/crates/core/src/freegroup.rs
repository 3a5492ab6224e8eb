//! Words in the free group `F_n`, reflections, the Hurwitz action and the
//! dual (Bessis) monoid.
//!
//! A word is a sequence of nonzero integers: `k` is `s_k` and `-k` its inverse.
//! `gamma = s_1 s_2 ... s_n`. Reflections are the entries of the tuples in the
//! Hurwitz orbit of `(s_1, ..., s_n)`. They are conjugates of positive
//! generators, but not every such conjugate is one (`s_1^-1 s_2 s_1` is not).

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeGroupError {
    #[error("cannot parse word: {0}")]
    Parse(String),
    #[error("generator index 0 is not allowed")]
    ZeroGenerator,
    #[error("Hurwitz index {index} out of range for a tuple of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{0} is not a reflection")]
    NotAReflection(Word),
    #[error("{0} is not in the positive monoid")]
    NotPositive(Word),
    #[error("unknown within bound {bound}: {what}")]
    Unknown { bound: usize, what: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<i32>) -> Result<Self, FreeGroupError> {
        if letters.contains(&0) {
            return Err(FreeGroupError::ZeroGenerator);
        }
        Ok(Word(letters))
    }

    /// `s_i`.
    pub fn generator(i: usize) -> Self {
        assert!(i >= 1, "generators are 1-based");
        Word(vec![i as i32])
    }

    /// `s_1 s_2 ... s_n`.
    pub fn gamma(n: usize) -> Self {
        Word((1..=n as i32).collect())
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != -w[1])
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    /// Reduced product `self * other`.
    pub fn mul(&self, other: &Word) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v).reduce()
    }

    /// Reduced `self^-1 * other`.
    pub fn left_quotient(&self, other: &Word) -> Self {
        self.inverse().mul(other)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|l| l.signum() as i64).sum()
    }

    /// Exponent sum of each generator; index `k - 1` holds `s_k`.
    pub fn abelianization(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n.max(self.max_generator())];
        for &l in &self.0 {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }

    /// `(g, c)` with `self = g c g^-1`, `c` cyclically reduced and `g` maximal.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let w = self.reduce().0;
        let mut k = 0;
        while w.len() >= 2 * k + 2 && w[k] == -w[w.len() - 1 - k] {
            k += 1;
        }
        (Word(w[..k].to_vec()), Word(w[k..w.len() - k].to_vec()))
    }

    fn substitute(&self, image: impl Fn(i32) -> Vec<i32>) -> Self {
        let mut v = Vec::new();
        for &l in &self.0 {
            let img = image(l.abs());
            if l > 0 {
                v.extend(img);
            } else {
                v.extend(img.iter().rev().map(|x| -x));
            }
        }
        Word(v).reduce()
    }

    /// Image under the Artin automorphism `a_j` (`forward`) or its inverse:
    /// `a_j(s_j) = s_j s_{j+1} s_j^-1`, `a_j(s_{j+1}) = s_j`. Both fix `gamma`
    /// and realize `tau_j^{+-1}` on tuples.
    pub fn artin(&self, j: usize, forward: bool) -> Self {
        let (a, b) = (j as i32, j as i32 + 1);
        self.substitute(|g| match (g, forward) {
            (g, true) if g == a => vec![a, b, -a],
            (g, true) if g == b => vec![a],
            (g, false) if g == a => vec![b],
            (g, false) if g == b => vec![-b, a, b],
            (g, _) => vec![g],
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.0.iter().map(|&l| if l > 0 { format!("s{l}") } else { format!("s{}^-1", -l) }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = FreeGroupError;

    /// Accepts `"s1 s2^-1 s1"`; `""` and `"1"` are the identity.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::identity());
        }
        let bad = |t: &str| FreeGroupError::Parse(format!("bad letter {t:?}"));
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let body = tok.strip_prefix('s').ok_or_else(|| bad(tok))?;
            let (idx, sign) = match body.split_once('^') {
                Some((i, "-1")) => (i, -1),
                Some((i, "1")) => (i, 1),
                Some(_) => return Err(FreeGroupError::Parse(format!("exponent must be 1 or -1 in {tok:?}"))),
                None => (body, 1),
            };
            let i: i32 = idx.parse().map_err(|_| bad(tok))?;
            if i <= 0 {
                return Err(bad(tok));
            }
            letters.push(sign * i);
        }
        Ok(Word(letters))
    }
}

/// `(positive letters, negative letters)` of the reduced word.
pub fn counts(w: &Word) -> (usize, usize) {
    let r = w.reduce();
    let pos = r.0.iter().filter(|&&l| l > 0).count();
    (pos, r.len() - pos)
}

/// All reduced words of length at most `max_len` in `n` generators, by
/// length and then lexicographically in the order `1, -1, 2, -2, ...`.
pub fn reduced_words(n: usize, max_len: usize) -> Vec<Word> {
    let alphabet: Vec<i32> = (1..=n as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![Word::identity()];
    let mut layer = vec![Word::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &a in &alphabet {
                if w.0.last() != Some(&-a) {
                    let mut v = w.0.clone();
                    v.push(a);
                    next.push(Word(v));
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Whether `t` is a conjugate `g s_i g^-1` of a positive generator.
pub fn is_generator_conjugate(t: &Word) -> bool {
    let (_, core) = t.cyclic_reduce();
    core.len() == 1 && core.0[0] > 0
}

/// Whether `t` is a reflection: an entry of some tuple in the Hurwitz orbit
/// of `(s_1, ..., s_n)`, with `n` the largest generator in `t`.
///
/// Reflections are the images of generators under the Artin action. A
/// reflection other than a generator is shortened by some `a_j^{+-1}`, so `t`
/// is pulled back greedily; if no move shortens it, moves that keep the
/// length are explored before rejecting.
pub fn is_reflection(t: &Word) -> bool {
    if !is_generator_conjugate(t) {
        return false;
    }
    let n = t.max_generator();
    let mut cur = t.reduce();
    const PLATEAU: usize = 256;
    let moves = |w: &Word| -> Vec<Word> { (1..n).flat_map(|j| [w.artin(j, true), w.artin(j, false)]).collect() };
    loop {
        if cur.len() == 1 {
            return cur.0[0] > 0;
        }
        if let Some(shorter) = moves(&cur).into_iter().filter(|w| w.len() < cur.len()).min_by_key(|w| w.len()) {
            cur = shorter;
            continue;
        }
        let mut seen: HashSet<Word> = HashSet::from([cur.clone()]);
        let mut queue = VecDeque::from([cur.clone()]);
        let mut found = None;
        'bfs: while let Some(w) = queue.pop_front() {
            for m in moves(&w) {
                if m.len() < cur.len() {
                    found = Some(m);
                    break 'bfs;
                }
                if m.len() == cur.len() && seen.len() < PLATEAU && seen.insert(m.clone()) {
                    queue.push_back(m);
                }
            }
        }
        match found {
            Some(m) => cur = m,
            None => return false,
        }
    }
}

/// `tau_i` (`index = i > 0`) or `tau_i^-1` (`index = -i`) on a tuple:
/// `tau_i (.., a, b, ..) = (.., a b a^-1, a, ..)` and
/// `tau_i^-1 (.., a, b, ..) = (.., b, b^-1 a b, ..)`.
pub fn hurwitz(index: i32, tup: &[Word]) -> Result<Vec<Word>, FreeGroupError> {
    let i = index.unsigned_abs() as usize;
    if i == 0 || i >= tup.len() {
        return Err(FreeGroupError::IndexOutOfRange { index: i, len: tup.len() });
    }
    let mut out = tup.to_vec();
    let (a, b) = (&tup[i - 1], &tup[i]);
    if index > 0 {
        out[i - 1] = a.mul(b).mul(&a.inverse());
        out[i] = a.reduce();
    } else {
        out[i - 1] = b.reduce();
        out[i] = b.inverse().mul(a).mul(b);
    }
    Ok(out)
}

/// Applies the letters of a braid word left to right.
pub fn hurwitz_word(braid: &Word, tup: &[Word]) -> Result<Vec<Word>, FreeGroupError> {
    let mut cur = tup.to_vec();
    for &l in braid.letters() {
        cur = hurwitz(l, &cur)?;
    }
    Ok(cur)
}

pub fn base_tuple(n: usize) -> Vec<Word> {
    (1..=n).map(Word::generator).collect()
}

pub fn product(tup: &[Word]) -> Word {
    tup.iter().fold(Word::identity(), |acc, w| acc.mul(w))
}

/// Breadth-first search of the Hurwitz orbit of `(s_1, ..., s_n)` through
/// tuples whose entries all have length at most `bound`.
pub fn enumerate_red_gamma(n: usize, bound: usize) -> Vec<Vec<Word>> {
    let start = base_tuple(n);
    let gamma = Word::gamma(n);
    let mut seen: HashSet<Vec<Word>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    let mut out = Vec::new();
    while let Some(tup) = queue.pop_front() {
        debug_assert_eq!(product(&tup), gamma);
        for i in 1..n as i32 {
            for idx in [i, -i] {
                let next = hurwitz(idx, &tup).expect("index in range");
                if next.iter().all(|w| w.len() <= bound) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        out.push(tup);
    }
    out
}

fn simple_order(w: &Word) -> (i64, usize, Word) {
    (w.exponent_sum(), w.len(), w.clone())
}

/// Prefix products of the tuples found by [`enumerate_red_gamma`].
pub fn enumerate_simples(n: usize, bound: usize) -> Vec<Word> {
    let mut set = HashSet::new();
    for tup in enumerate_red_gamma(n, bound) {
        let mut acc = Word::identity();
        set.insert(acc.clone());
        for t in &tup {
            acc = acc.mul(t);
            set.insert(acc.clone());
        }
    }
    let mut v: Vec<Word> = set.into_iter().collect();
    v.sort_by_key(simple_order);
    v
}

/// Reflections `g s_i g^-1` of length at most `bound`.
pub fn enumerate_reflections(n: usize, bound: usize) -> Vec<Word> {
    let half = bound.saturating_sub(1) / 2;
    let mut out = Vec::new();
    for g in reduced_words(n, half) {
        for i in 1..=n as i32 {
            if g.0.last().is_some_and(|l| l.abs() == i) {
                continue;
            }
            let t = g.mul(&Word(vec![i])).mul(&g.inverse());
            if is_reflection(&t) {
                out.push(t);
            }
        }
    }
    out.sort_by_key(simple_order);
    out
}

/// Three-valued outcome of a bounded search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    True,
    False,
    Unknown,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::True
        } else {
            Decision::False
        }
    }

    pub fn known(self) -> Option<bool> {
        match self {
            Decision::True => Some(true),
            Decision::False => Some(false),
            Decision::Unknown => None,
        }
    }
}

/// Bounded dual-monoid computations in `F_n`.
#[derive(Debug, Clone)]
pub struct Bessis {
    n: usize,
    bound: usize,
    reflections: Vec<Word>,
    simples: Vec<Word>,
}

impl Bessis {
    pub fn new(n: usize, bound: usize) -> Self {
        Bessis { n, bound, reflections: enumerate_reflections(n, bound), simples: enumerate_simples(n, bound) }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn gamma(&self) -> Word {
        Word::gamma(self.n)
    }

    pub fn reflections(&self) -> &[Word] {
        &self.reflections
    }

    pub fn simples(&self) -> &[Word] {
        &self.simples
    }

    pub fn is_reflection(&self, t: &Word) -> bool {
        is_reflection(t)
    }

    /// Membership of `h` in the monoid generated by the reflections. Each
    /// reflection has exponent sum one and abelianizes to a generator, which
    /// gives exact negative answers; positive answers are factorizations
    /// through the bounded reflection set.
    pub fn in_monoid(&self, h: &Word) -> Decision {
        let mut memo = HashMap::new();
        self.in_monoid_memo(&h.reduce(), &mut memo)
    }

    fn in_monoid_memo(&self, h: &Word, memo: &mut HashMap<Word, Decision>) -> Decision {
        if let Some(d) = memo.get(h) {
            return *d;
        }
        let ab = h.abelianization(self.n);
        let e = h.exponent_sum();
        let d = if ab.iter().any(|&c| c < 0) {
            Decision::False
        } else if e == 0 {
            Decision::from_bool(h.is_empty())
        } else if e == 1 {
            Decision::from_bool(self.is_reflection(h))
        } else {
            let mut cands: Vec<(usize, Word)> = self
                .reflections
                .iter()
                .filter(|t| ab[t.cyclic_reduce().1.max_generator() - 1] >= 1)
                .map(|t| {
                    let rest = t.left_quotient(h);
                    (rest.len(), rest)
                })
                .collect();
            cands.sort();
            let mut out = Decision::Unknown;
            for (_, rest) in cands {
                if self.in_monoid_memo(&rest, memo) == Decision::True {
                    out = Decision::True;
                    break;
                }
            }
            out
        };
        memo.insert(h.clone(), d);
        d
    }

    /// `u <= w`, i.e. `u^-1 w` lies in the monoid.
    pub fn divides(&self, u: &Word, w: &Word) -> Decision {
        self.in_monoid(&u.left_quotient(w))
    }

    /// Whether `w` divides `gamma`.
    pub fn is_simple(&self, w: &Word) -> Decision {
        self.divides(w, &self.gamma())
    }

    /// The largest simple element dividing `g`, taken within the enumerated
    /// simples: the member of the enumerated divisors of `g` that all the others
    /// divide. `g` itself and `gamma` are tried first since they need no
    /// enumeration. An enumerated simple whose divisibility is undecided only
    /// matters if it does not divide the answer.
    pub fn left_factor(&self, g: &Word) -> Result<Word, FreeGroupError> {
        let g = g.reduce();
        match self.in_monoid(&g) {
            Decision::True => {}
            Decision::False => return Err(FreeGroupError::NotPositive(g)),
            Decision::Unknown => {
                return Err(self.unknown(format!("membership of {g} in the positive monoid")));
            }
        }
        if self.is_simple(&g) == Decision::True {
            return Ok(g);
        }
        let gamma = self.gamma();
        if self.divides(&gamma, &g) == Decision::True {
            return Ok(gamma);
        }
        let mut divisors = Vec::new();
        let mut undecided = Vec::new();
        for s in &self.simples {
            match self.divides(s, &g) {
                Decision::True => divisors.push(s),
                Decision::False => {}
                Decision::Unknown => undecided.push(s),
            }
        }
        let lcm = divisors
            .iter()
            .rev()
            .find(|m| divisors.iter().all(|d| self.divides(d, m) == Decision::True))
            .ok_or_else(|| self.unknown(format!("a common multiple of the simple divisors of {g}")))?;
        if let Some(u) = undecided.iter().find(|u| self.divides(u, lcm) != Decision::True) {
            return Err(self.unknown(format!("whether {u} divides {g}")));
        }
        Ok((*lcm).clone())
    }

    fn unknown(&self, what: String) -> FreeGroupError {
        FreeGroupError::Unknown { bound: self.bound, what }
    }

    /// `g = y_1 ... y_k` with `y_i = lf(y_i ... y_k)`.
    pub fn greedy_normal_form(&self, g: &Word) -> Result<Vec<Word>, FreeGroupError> {
        let mut rest = g.reduce();
        let mut out = Vec::new();
        while !rest.is_empty() {
            let y = self.left_factor(&rest)?;
            if y.is_empty() {
                return Err(self.unknown(format!("a simple divisor of {rest}")));
            }
            rest = y.left_quotient(&rest);
            out.push(y);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("s1 s2^-1 s1").letters(), &[1, -2, 1]);
        assert_eq!(w("s1 s2^-1 s1").to_string(), "s1 s2^-1 s1");
        assert_eq!(w("1"), Word::identity());
        assert_eq!(Word::identity().to_string(), "1");
        assert!("s1^2".parse::<Word>().is_err());
        assert!("s0".parse::<Word>().is_err());
        assert!("t1".parse::<Word>().is_err());
        assert_eq!(Word::new(vec![1, 0]), Err(FreeGroupError::ZeroGenerator));
        assert_eq!(serde_json::to_string(&w("s1 s2^-1 s1")).unwrap(), "[1,-2,1]");
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(w("s1 s2 s2^-1").reduce(), w("s1"));
        assert_eq!(Word::identity().reduce(), Word::identity());
        assert_eq!(w("s1 s2 s1^-1").cyclic_reduce(), (w("s1"), w("s2")));
        assert_eq!(w("s2^-1 s1 s3 s1^-1 s2").cyclic_reduce(), (w("s2^-1 s1"), w("s3")));
        assert_eq!(counts(&w("s1 s2^-1")), (1, 1));
        assert_eq!(counts(&w("s1 s1^-1")), (0, 0));
        assert_eq!(counts(&Word::gamma(3)), (3, 0));
    }

    #[test]
    fn reflection_examples() {
        assert!(is_reflection(&w("s2")));
        assert!(!is_reflection(&w("s1^-1")));
        assert!(is_reflection(&w("s1 s2 s1^-1")));
        assert!(!is_reflection(&w("s1 s2")));
        assert!(is_reflection(&w("s2^-1 s1 s2")));
        assert!(!is_reflection(&w("s1^-1 s2 s1")));
        assert!(is_generator_conjugate(&w("s1^-1 s2 s1")));
        assert!(!is_reflection(&w("s1 s1")));
        assert!(!is_reflection(&Word::identity()));
        // Entries of the Hurwitz orbit of (s_1, ..., s_4), found by search.
        assert!(is_reflection(&w("s3 s4 s3^-1")));
        assert!(is_reflection(&w("s1 s2 s3 s2^-1 s1^-1")));
        assert!(!is_reflection(&w("s3^-1 s4 s3")));
    }

    fn enumerate_conjugates(n: usize, half: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for g in reduced_words(n, half) {
            for i in 1..=n as i32 {
                if g.letters().last().is_some_and(|l| l.abs() == i) {
                    continue;
                }
                out.push(g.mul(&Word(vec![i])).mul(&g.inverse()));
            }
        }
        out
    }

    /// Every entry of the bounded Hurwitz orbit passes, and a short conjugate
    /// of a generator passes exactly when the orbit contains it.
    #[test]
    fn reflections_match_hurwitz_orbit() {
        for n in 2..=4 {
            let orbit: HashSet<Word> = enumerate_red_gamma(n, 11).into_iter().flatten().collect();
            for t in &orbit {
                assert!(is_reflection(t), "{t}");
            }
            for t in enumerate_conjugates(n, 2) {
                assert_eq!(is_reflection(&t), orbit.contains(&t), "{t}");
            }
            // Words in fewer generators are decided the same way inside F_n.
            for t in enumerate_conjugates(n - 1, 2) {
                assert_eq!(is_reflection(&t), orbit.contains(&t), "{t} in F_{n}");
            }
        }
    }

    #[test]
    fn longer_conjugates_match_orbit() {
        let orbit: HashSet<Word> = enumerate_red_gamma(2, 15).into_iter().flatten().collect();
        for t in enumerate_conjugates(2, 3) {
            assert_eq!(is_reflection(&t), orbit.contains(&t), "{t}");
        }
    }

    #[test]
    fn hurwitz_examples() {
        let base = base_tuple(2);
        let t = hurwitz(1, &base).unwrap();
        assert_eq!(t, vec![w("s1 s2 s1^-1"), w("s1")]);
        assert_eq!(hurwitz(-1, &t).unwrap(), base);
        assert!(hurwitz(2, &base).is_err());
        let b3 = base_tuple(3);
        assert_eq!(hurwitz_word(&w("s1 s2 s1"), &b3).unwrap(), hurwitz_word(&w("s2 s1 s2"), &b3).unwrap());
        assert_ne!(hurwitz_word(&w("s1 s2"), &b3).unwrap(), hurwitz_word(&w("s2 s1"), &b3).unwrap());
    }

    #[test]
    fn red_gamma_examples() {
        assert_eq!(enumerate_red_gamma(2, 1), vec![base_tuple(2)]);
        let r = enumerate_red_gamma(2, 3);
        assert!(r.contains(&vec![w("s1 s2 s1^-1"), w("s1")]));
        assert!(r.contains(&vec![w("s2"), w("s2^-1 s1 s2")]));
        for tup in enumerate_red_gamma(3, 5) {
            assert_eq!(product(&tup), Word::gamma(3));
            assert!(tup.iter().all(|t| is_reflection(t)));
        }
    }

    /// Distinct reduced braid words of length at most 3 act differently unless
    /// they are equal in the braid group; checked against the permutation and
    /// a second orbit representative.
    #[test]
    fn hurwitz_action_is_free_on_short_braids() {
        let base = base_tuple(3);
        let mut seen: HashMap<Vec<Word>, Word> = HashMap::new();
        for b in reduced_words(2, 3) {
            let img = hurwitz_word(&b, &base).unwrap();
            if let Some(prev) = seen.get(&img) {
                // Equal images only for braid-equal words: b^-1 prev must act trivially on a longer tuple too.
                let probe = hurwitz_word(&prev.inverse().mul(&b), &base_tuple(3)).unwrap();
                assert_eq!(probe, base);
            }
            seen.insert(img, b);
        }
    }

    #[test]
    fn simples_examples() {
        let s = enumerate_simples(2, 1);
        assert_eq!(s, vec![Word::identity(), w("s1"), w("s1 s2")]);
        let s = enumerate_simples(2, 3);
        assert!(s.contains(&w("s2")) && s.contains(&w("s1 s2 s1^-1")));
        for n in 2..=4 {
            assert!(enumerate_simples(n, 3).contains(&Word::gamma(n)));
        }
        let b = Bessis::new(3, 5);
        for s in b.simples() {
            assert_eq!(b.is_simple(s), Decision::True, "{s}");
        }
    }

    #[test]
    fn divides_examples() {
        let b = Bessis::new(2, 5);
        let gamma = Word::gamma(2);
        assert_eq!(b.divides(&w("s1"), &gamma), Decision::True);
        assert_eq!(b.divides(&gamma, &w("s1 s1")), Decision::False);
        assert_eq!(b.divides(&w("s1 s2^-1"), &w("s1 s2^-1")), Decision::True);
        assert_eq!(b.divides(&w("s1 s1"), &gamma), Decision::False);
        assert_eq!(b.divides(&w("s2 s1"), &gamma), Decision::False);
        let b3 = Bessis::new(3, 5);
        assert_eq!(b3.in_monoid(&w("s1 s2 s3 s1")), Decision::True);
    }

    #[test]
    fn normal_form_examples() {
        let b = Bessis::new(2, 5);
        assert_eq!(b.greedy_normal_form(&w("s1 s1")).unwrap(), vec![w("s1"), w("s1")]);
        assert_eq!(b.greedy_normal_form(&w("s1 s2 s1")).unwrap(), vec![w("s1 s2"), w("s1")]);
        assert_eq!(b.left_factor(&w("s1")).unwrap(), w("s1"));
        assert!(matches!(b.left_factor(&w("s1^-1")), Err(FreeGroupError::NotPositive(_))));
        let b3 = Bessis::new(3, 5);
        assert_eq!(b3.greedy_normal_form(&w("s1 s2 s3 s1")).unwrap(), vec![Word::gamma(3), w("s1")]);
        for g in [w("s1 s2 s3 s1"), w("s2 s2 s1"), w("s3 s1 s2"), w("s1 s1 s2"), w("s2 s3 s3")] {
            let Ok(nf) = b3.greedy_normal_form(&g) else { continue };
            assert_eq!(product(&nf), g);
            for (k, y) in nf.iter().enumerate() {
                assert_eq!(b3.is_simple(y), Decision::True);
                assert_eq!(&b3.left_factor(&product(&nf[k..])).unwrap(), y);
            }
        }
    }

    #[test]
    fn left_and_right_divisibility_agree() {
        let b = Bessis::new(3, 5);
        for u in b.simples().iter().take(12) {
            let gamma = b.gamma();
            let left = b.divides(u, &gamma);
            let right = b.in_monoid(&gamma.mul(&u.inverse()));
            assert_eq!(left, right, "{u}");
        }
    }

    proptest! {
        #[test]
        fn hurwitz_preserves_product_and_reflections(braid in prop::collection::vec(prop_oneof![Just(1i32), Just(-1), Just(2), Just(-2)], 0..6)) {
            let b = Word::new(braid).unwrap();
            let tup = hurwitz_word(&b, &base_tuple(3)).unwrap();
            prop_assert_eq!(product(&tup), Word::gamma(3));
            for t in &tup {
                prop_assert!(is_reflection(t));
            }
            prop_assert_eq!(hurwitz_word(&b.inverse(), &tup).unwrap(), base_tuple(3));
        }

        #[test]
        fn braid_relations(seed in prop::collection::vec(prop_oneof![Just(1i32), Just(-1), Just(2), Just(-2), Just(3), Just(-3)], 0..4)) {
            let start = hurwitz_word(&Word::new(seed).unwrap(), &base_tuple(4)).unwrap();
            let a = hurwitz_word(&Word::new(vec![1, 2, 1]).unwrap(), &start).unwrap();
            let b = hurwitz_word(&Word::new(vec![2, 1, 2]).unwrap(), &start).unwrap();
            prop_assert_eq!(a, b);
            let c = hurwitz_word(&Word::new(vec![1, 3]).unwrap(), &start).unwrap();
            let d = hurwitz_word(&Word::new(vec![3, 1]).unwrap(), &start).unwrap();
            prop_assert_eq!(c, d);
        }

        #[test]
        fn reduce_is_idempotent_and_inverse_cancels(letters in prop::collection::vec(prop_oneof![Just(1i32), Just(-1), Just(2), Just(-2), Just(3)], 0..12)) {
            let x = Word::new(letters).unwrap();
            let r = x.reduce();
            prop_assert!(r.is_reduced());
            prop_assert_eq!(r.reduce(), r.clone());
            prop_assert!(x.mul(&x.inverse()).is_empty());
            let (g, c) = x.cyclic_reduce();
            prop_assert_eq!(g.mul(&c).mul(&g.inverse()), r);
        }

        #[test]
        fn artin_action_fixes_gamma(j in 1usize..4, fwd in any::<bool>(), letters in prop::collection::vec(prop_oneof![Just(1i32), Just(-2), Just(3), Just(4)], 0..6)) {
            let gamma = Word::gamma(4);
            prop_assert_eq!(gamma.artin(j, fwd), gamma);
            let x = Word::new(letters).unwrap().reduce();
            prop_assert_eq!(x.artin(j, fwd).artin(j, !fwd), x);
        }
    }
}
