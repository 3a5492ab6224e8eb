//! Bounded complexes of shifted graded projectives `P_i<k>`.
//!
//! Differentials are cohomological (degree `d` to `d + 1`). An entry from
//! `P_i<k>` to `P_j<l>` is right multiplication by a homogeneous element of
//! `e_i A e_j` of degree `l - k`. Summands are kept sorted by homological
//! degree and their uid is their position.

mod format;
mod hom;
pub mod sample;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::algebra::{BasisPath, Element, GradingMode};
use crate::scalar::Scalar;

pub use format::{from_json, to_json, ComplexDoc};
pub use hom::{
    hom_dims, hom_space, hom_table, is_isomorphic, is_isomorphic_up_to_shift, is_null_homotopic,
    multiplicities, total_hom, HomSpace, HomTable,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("grading mode mismatch")]
    ModeMismatch,
    #[error("vertex {vertex} out of range for rank {rank}")]
    InvalidVertex { vertex: usize, rank: usize },
    #[error("unknown summand {0}")]
    UnknownSummand(usize),
    #[error("entry {0} -> {1} does not raise homological degree by one")]
    DegreeRule(usize, usize),
    #[error("entry {0} -> {1} is not in e_i A e_j for its endpoints")]
    NotEndpointPure(usize, usize),
    #[error("entry {0} -> {1} is not homogeneous of the forced degree")]
    Inhomogeneous(usize, usize),
    #[error("differential does not square to zero at {0} -> {1}")]
    NotAComplex(usize, usize),
    #[error("invalid chain map: {0}")]
    InvalidChainMap(String),
    #[error("format error: {0}")]
    Format(String),
}

/// `P_vertex<shift>` placed in cohomological degree `degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Summand {
    pub uid: usize,
    pub vertex: usize,
    pub shift: i64,
    pub degree: i64,
}

impl Summand {
    /// Key for comparing chain groups.
    pub fn class(&self) -> (i64, usize, i64) {
        (self.degree, self.vertex, self.shift)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Complex<S> {
    rank: usize,
    mode: GradingMode,
    summands: Vec<Summand>,
    diff: BTreeMap<(usize, usize), Element<S>>,
}

impl<S: Scalar> Complex<S> {
    pub fn zero(rank: usize, mode: GradingMode) -> Self {
        Complex { rank, mode, summands: Vec::new(), diff: BTreeMap::new() }
    }

    /// The stalk complex `P_i<k>` sitting in degree `d`.
    pub fn projective(rank: usize, mode: GradingMode, i: usize, k: i64, d: i64) -> Result<Self, ComplexError> {
        Self::from_parts(rank, mode, vec![(i, k, d)], Vec::new())
    }

    /// `P_1 + ... + P_n` in degree 0.
    pub fn generator(rank: usize, mode: GradingMode) -> Self {
        let parts = (1..=rank).map(|i| (i, 0, 0)).collect();
        Self::from_parts(rank, mode, parts, Vec::new()).expect("valid stalks")
    }

    /// Builds and validates a complex. `summands` are `(vertex, shift, degree)`
    /// and entries refer to positions in that list.
    pub fn from_parts(
        rank: usize,
        mode: GradingMode,
        summands: Vec<(usize, i64, i64)>,
        entries: Vec<(usize, usize, Element<S>)>,
    ) -> Result<Self, ComplexError> {
        for &(s, t, _) in &entries {
            for k in [s, t] {
                if k >= summands.len() {
                    return Err(ComplexError::UnknownSummand(k));
                }
            }
        }
        let c = Self::assemble(rank, mode, summands, entries);
        c.validate()?;
        Ok(c)
    }

    /// Sorts summands by degree (stably) and drops zero entries, without validation.
    fn assemble(
        rank: usize,
        mode: GradingMode,
        summands: Vec<(usize, i64, i64)>,
        entries: Vec<(usize, usize, Element<S>)>,
    ) -> Self {
        let mut order: Vec<usize> = (0..summands.len()).collect();
        order.sort_by_key(|&k| summands[k].2);
        let mut pos = vec![0; summands.len()];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let summands = order
            .iter()
            .enumerate()
            .map(|(uid, &old)| {
                let (vertex, shift, degree) = summands[old];
                Summand { uid, vertex, shift, degree }
            })
            .collect();
        let mut diff: BTreeMap<(usize, usize), Element<S>> = BTreeMap::new();
        for (s, t, e) in entries {
            let key = (pos[s], pos[t]);
            let cur = diff.remove(&key).unwrap_or_else(Element::zero);
            let sum = cur.add(&e);
            if !sum.is_zero() {
                diff.insert(key, sum);
            }
        }
        Complex { rank, mode, summands, diff }
    }

    pub(crate) fn assemble_checked(
        rank: usize,
        mode: GradingMode,
        summands: Vec<(usize, i64, i64)>,
        entries: Vec<(usize, usize, Element<S>)>,
    ) -> Self {
        let c = Self::assemble(rank, mode, summands, entries);
        debug_assert_eq!(c.validate(), Ok(()));
        c
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn mode(&self) -> &GradingMode {
        &self.mode
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn summand(&self, uid: usize) -> &Summand {
        &self.summands[uid]
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Element<S>)> + '_ {
        self.diff.iter().map(|(&(s, t), e)| (s, t, e))
    }

    pub fn num_entries(&self) -> usize {
        self.diff.len()
    }

    pub fn entry(&self, s: usize, t: usize) -> Option<&Element<S>> {
        self.diff.get(&(s, t))
    }

    pub fn out_entries(&self, s: usize) -> impl Iterator<Item = (usize, &Element<S>)> + '_ {
        self.diff.range((s, 0)..=(s, usize::MAX)).map(|(&(_, t), e)| (t, e))
    }

    /// Incoming entries of every summand.
    pub fn incoming(&self) -> Vec<Vec<(usize, &Element<S>)>> {
        let mut inc = vec![Vec::new(); self.len()];
        for (&(s, t), e) in &self.diff {
            inc[t].push((s, e));
        }
        inc
    }

    pub fn degree_range(&self) -> Option<(i64, i64)> {
        Some((self.summands.first()?.degree, self.summands.last()?.degree))
    }

    pub fn shift_range(&self) -> Option<(i64, i64)> {
        let min = self.summands.iter().map(|s| s.shift).min()?;
        let max = self.summands.iter().map(|s| s.shift).max()?;
        Some((min, max))
    }

    /// Sorted multiset of `(degree, vertex, shift)`.
    pub fn signature(&self) -> Vec<(i64, usize, i64)> {
        let mut v: Vec<_> = self.summands.iter().map(Summand::class).collect();
        v.sort();
        v
    }

    pub fn validate(&self) -> Result<(), ComplexError> {
        for s in &self.summands {
            if s.vertex < 1 || s.vertex > self.rank {
                return Err(ComplexError::InvalidVertex { vertex: s.vertex, rank: self.rank });
            }
        }
        if self.summands.windows(2).any(|w| w[0].degree > w[1].degree) {
            return Err(ComplexError::Format("summands not sorted by degree".into()));
        }
        for (&(s, t), e) in &self.diff {
            let n = self.len();
            if s >= n || t >= n {
                return Err(ComplexError::UnknownSummand(s.max(t)));
            }
            let (a, b) = (&self.summands[s], &self.summands[t]);
            if b.degree != a.degree + 1 {
                return Err(ComplexError::DegreeRule(s, t));
            }
            if e.is_zero() || e.endpoints() != Some((a.vertex, b.vertex)) {
                return Err(ComplexError::NotEndpointPure(s, t));
            }
            if e.homogeneous_degree(&self.mode) != Some(b.shift - a.shift) {
                return Err(ComplexError::Inhomogeneous(s, t));
            }
        }
        for s in 0..self.len() {
            let mut acc: BTreeMap<usize, Element<S>> = BTreeMap::new();
            for (t, e1) in self.out_entries(s) {
                for (u, e2) in self.out_entries(t) {
                    let slot = acc.entry(u).or_insert_with(Element::zero);
                    *slot = slot.add(&e1.mul(e2));
                }
            }
            if let Some((&u, _)) = acc.iter().find(|(_, e)| !e.is_zero()) {
                return Err(ComplexError::NotAComplex(s, u));
            }
        }
        Ok(())
    }

    pub(crate) fn parts(&self) -> Vec<(usize, i64, i64)> {
        self.summands.iter().map(|s| (s.vertex, s.shift, s.degree)).collect()
    }

    /// `Y[hom]<int>`: degrees drop by `hom`, shifts grow by `int`, and the
    /// differential picks up the sign `(-1)^hom`.
    pub fn shift(&self, hom: i64, int: i64) -> Self {
        let sign = if hom.rem_euclid(2) == 1 { -S::one() } else { S::one() };
        Complex {
            rank: self.rank,
            mode: self.mode.clone(),
            summands: self
                .summands
                .iter()
                .map(|s| Summand { degree: s.degree - hom, shift: s.shift + int, ..*s })
                .collect(),
            diff: self.diff.iter().map(|(k, e)| (*k, e.scale(&sign))).collect(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), ComplexError> {
        if self.rank != other.rank {
            return Err(ComplexError::RankMismatch(self.rank, other.rank));
        }
        if self.mode != other.mode {
            return Err(ComplexError::ModeMismatch);
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, ComplexError> {
        self.check_compatible(other)?;
        let off = self.len();
        let mut parts = self.parts();
        parts.extend(other.parts());
        let entries = self
            .entries()
            .map(|(s, t, e)| (s, t, e.clone()))
            .chain(other.entries().map(|(s, t, e)| (s + off, t + off, e.clone())))
            .collect();
        Ok(Self::assemble_checked(self.rank, self.mode.clone(), parts, entries))
    }

    /// The subcomplex-like restriction to `keep` (positions), retaining the
    /// entries between kept summands.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let mut pos = BTreeMap::new();
        for (new, &old) in keep.iter().enumerate() {
            pos.insert(old, new);
        }
        let parts = keep.iter().map(|&k| {
            let s = &self.summands[k];
            (s.vertex, s.shift, s.degree)
        });
        let entries = self
            .entries()
            .filter_map(|(s, t, e)| Some((*pos.get(&s)?, *pos.get(&t)?, e.clone())))
            .collect();
        Self::assemble(self.rank, self.mode.clone(), parts.collect(), entries)
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Complex<T> {
        Complex {
            rank: self.rank,
            mode: self.mode.clone(),
            summands: self.summands.clone(),
            diff: self.diff.iter().map(|(k, e)| (*k, e.map_scalars(&f))).collect(),
        }
    }

    /// Reinterprets the complex under another grading mode; fails if some
    /// entry is not homogeneous of the forced degree there.
    pub fn with_mode(&self, mode: GradingMode) -> Result<Self, ComplexError> {
        let c = Complex { mode, ..self.clone() };
        c.validate()?;
        Ok(c)
    }

    /// Cone of a chain map `f: X -> Y` with zero offsets: `X[1] + Y` with
    /// differential `(x, y) -> (-d x, f x + d y)`.
    pub fn cone(f: &ChainMap<S>) -> Result<Self, ComplexError> {
        if f.hom_offset != 0 || f.int_offset != 0 {
            return Err(ComplexError::InvalidChainMap("cone needs zero offsets".into()));
        }
        f.validate()?;
        let x = f.source.shift(1, 0);
        let y = &f.target;
        let off = x.len();
        let mut parts = x.parts();
        parts.extend(y.parts());
        let mut entries: Vec<_> = x.entries().map(|(s, t, e)| (s, t, e.clone())).collect();
        entries.extend(f.entries().map(|(s, t, e)| (s, t + off, e.clone())));
        entries.extend(y.entries().map(|(s, t, e)| (s + off, t + off, e.clone())));
        Ok(Self::assemble_checked(x.rank, x.mode.clone(), parts, entries))
    }

    /// Homotopy-equivalent complex without invertible entries.
    pub fn minimize(&self) -> Self {
        Minimizer::new(self, false).run().complex
    }

    /// The result of the first Gaussian elimination `minimize` would perform.
    pub fn gaussian_step(&self) -> Option<Self> {
        let mut m = Minimizer::new(self, false);
        m.limit = Some(1);
        let out = m.run();
        (out.steps == 1).then_some(out.complex)
    }

    /// Minimal complex together with chain maps `f: Y -> min(Y)` and
    /// `g: min(Y) -> Y` with `g f` homotopic to the identity and `f g = 1`.
    pub fn minimize_with_equivalence(&self) -> (Self, ChainMap<S>, ChainMap<S>) {
        let out = Minimizer::new(self, true).run();
        let (f, g) = out.maps.expect("maps tracked");
        let fm = ChainMap::new_unchecked(self.clone(), out.complex.clone(), 0, 0, f);
        let gm = ChainMap::new_unchecked(out.complex.clone(), self.clone(), 0, 0, g);
        (out.complex, fm, gm)
    }

    pub fn is_minimal(&self) -> bool {
        self.entries().all(|(s, t, e)| {
            let (a, b) = (&self.summands[s], &self.summands[t]);
            a.vertex != b.vertex || e.idempotent_coeff(a.vertex).is_zero()
        })
    }
}

type EntryMap<S> = BTreeMap<(usize, usize), Element<S>>;

struct Minimized<S> {
    complex: Complex<S>,
    steps: usize,
    maps: Option<(EntryMap<S>, EntryMap<S>)>,
}

/// Gaussian elimination state. `fwd[y]` holds the current map from original
/// summand `y` into live summands; `back[c]` the map from live summand `c`
/// back to the originals.
struct Minimizer<'a, S> {
    src: &'a Complex<S>,
    out: Vec<BTreeMap<usize, Element<S>>>,
    inc: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
    fwd: Option<Vec<BTreeMap<usize, Element<S>>>>,
    back: Option<Vec<BTreeMap<usize, Element<S>>>>,
    limit: Option<usize>,
}

impl<'a, S: Scalar> Minimizer<'a, S> {
    fn new(src: &'a Complex<S>, track: bool) -> Self {
        let n = src.len();
        let mut out = vec![BTreeMap::new(); n];
        let mut inc = vec![BTreeSet::new(); n];
        for (s, t, e) in src.entries() {
            out[s].insert(t, e.clone());
            inc[t].insert(s);
        }
        let ident = |k: usize| {
            let mut m = BTreeMap::new();
            m.insert(k, Element::basis(BasisPath::Idem(src.summands[k].vertex)));
            m
        };
        let (fwd, back) = if track {
            (Some((0..n).map(ident).collect()), Some((0..n).map(ident).collect()))
        } else {
            (None, None)
        };
        Minimizer { src, out, inc, alive: vec![true; n], fwd, back, limit: None }
    }

    fn pivot_at(&self, s: usize) -> Option<(usize, Element<S>)> {
        let a = &self.src.summands[s];
        self.out[s]
            .iter()
            .find(|(t, e)| {
                let b = &self.src.summands[**t];
                b.vertex == a.vertex && b.shift == a.shift && !e.idempotent_coeff(a.vertex).is_zero()
            })
            .map(|(t, e)| (*t, e.clone()))
    }

    fn set_entry(&mut self, a: usize, b: usize, e: Element<S>) {
        if e.is_zero() {
            self.out[a].remove(&b);
            self.inc[b].remove(&a);
        } else {
            self.out[a].insert(b, e);
            self.inc[b].insert(a);
        }
    }

    fn eliminate(&mut self, s: usize, t: usize, pivot: &Element<S>) -> usize {
        let v = self.src.summands[s].vertex;
        let inv = pivot.local_inverse(v).expect("pivot is invertible");
        let sources: Vec<usize> = self.inc[t].iter().copied().filter(|&a| a != s).collect();
        let targets: Vec<(usize, Element<S>)> =
            self.out[s].iter().filter(|(b, _)| **b != t).map(|(b, e)| (*b, e.clone())).collect();
        let mut restart = s;
        for &a in &sources {
            let col = self.out[a][&t].mul(&inv);
            for (b, row) in &targets {
                let upd = col.mul(row);
                if upd.is_zero() {
                    continue;
                }
                let cur = self.out[a].get(b).cloned().unwrap_or_else(Element::zero);
                self.set_entry(a, *b, cur.sub(&upd));
            }
            restart = restart.min(a);
        }
        if let Some(fwd) = self.fwd.as_mut() {
            // f: S -> 0, T -> -inv * row(S), identity elsewhere.
            for row in fwd.iter_mut() {
                if let Some(ft) = row.remove(&t) {
                    let ft_inv = ft.mul(&inv);
                    for (b, r) in &targets {
                        let cur = row.get(b).cloned().unwrap_or_else(Element::zero);
                        let new = cur.sub(&ft_inv.mul(r));
                        if new.is_zero() {
                            row.remove(b);
                        } else {
                            row.insert(*b, new);
                        }
                    }
                }
                row.remove(&s);
            }
        }
        if let Some(back) = self.back.as_mut() {
            // g: A -> A - col(A) * inv * S, identity elsewhere.
            let gs = std::mem::take(&mut back[s]);
            for &a in &sources {
                let coef = self.out[a].get(&t).map(|c| c.mul(&inv));
                if let Some(coef) = coef {
                    for (y, e) in &gs {
                        let cur = back[a].get(y).cloned().unwrap_or_else(Element::zero);
                        let new = cur.sub(&coef.mul(e));
                        if new.is_zero() {
                            back[a].remove(y);
                        } else {
                            back[a].insert(*y, new);
                        }
                    }
                }
            }
            back[t].clear();
        }
        for x in [s, t] {
            for (y, _) in std::mem::take(&mut self.out[x]) {
                self.inc[y].remove(&x);
            }
            for y in std::mem::take(&mut self.inc[x]) {
                self.out[y].remove(&x);
            }
            self.alive[x] = false;
        }
        restart
    }

    fn run(mut self) -> Minimized<S> {
        let n = self.src.len();
        let mut s = 0;
        let mut steps = 0;
        while s < n && self.limit.map_or(true, |l| steps < l) {
            if !self.alive[s] {
                s += 1;
                continue;
            }
            match self.pivot_at(s) {
                Some((t, pivot)) => {
                    s = self.eliminate(s, t, &pivot);
                    steps += 1;
                }
                None => s += 1,
            }
        }
        let live: Vec<usize> = (0..n).filter(|&k| self.alive[k]).collect();
        let mut pos = vec![usize::MAX; n];
        for (new, &old) in live.iter().enumerate() {
            pos[old] = new;
        }
        let parts = live
            .iter()
            .map(|&k| {
                let s = &self.src.summands[k];
                (s.vertex, s.shift, s.degree)
            })
            .collect();
        let mut entries = Vec::new();
        for &a in &live {
            for (b, e) in &self.out[a] {
                entries.push((pos[a], pos[*b], e.clone()));
            }
        }
        let complex = Complex::assemble_checked(self.src.rank, self.src.mode.clone(), parts, entries);
        let maps = match (self.fwd, self.back) {
            (Some(fwd), Some(back)) => {
                let mut f = BTreeMap::new();
                for (y, row) in fwd.into_iter().enumerate() {
                    for (c, e) in row {
                        f.insert((y, pos[c]), e);
                    }
                }
                let mut g = BTreeMap::new();
                for &c in &live {
                    for (y, e) in &back[c] {
                        g.insert((pos[c], *y), e.clone());
                    }
                }
                Some((f, g))
            }
            _ => None,
        };
        Minimized { complex, steps, maps }
    }
}

/// A chain map `source -> target[hom_offset]<int_offset>`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainMap<S> {
    pub source: Complex<S>,
    pub target: Complex<S>,
    pub hom_offset: i64,
    pub int_offset: i64,
    entries: BTreeMap<(usize, usize), Element<S>>,
}

impl<S: Scalar> ChainMap<S> {
    pub fn new(
        source: Complex<S>,
        target: Complex<S>,
        hom_offset: i64,
        int_offset: i64,
        entries: BTreeMap<(usize, usize), Element<S>>,
    ) -> Result<Self, ComplexError> {
        let m = Self::new_unchecked(source, target, hom_offset, int_offset, entries);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        source: Complex<S>,
        target: Complex<S>,
        hom_offset: i64,
        int_offset: i64,
        entries: BTreeMap<(usize, usize), Element<S>>,
    ) -> Self {
        let entries = entries.into_iter().filter(|(_, e)| !e.is_zero()).collect();
        ChainMap { source, target, hom_offset, int_offset, entries }
    }

    pub fn zero(source: Complex<S>, target: Complex<S>) -> Self {
        Self::new_unchecked(source, target, 0, 0, BTreeMap::new())
    }

    pub fn identity(x: &Complex<S>) -> Self {
        let entries = x
            .summands
            .iter()
            .map(|s| ((s.uid, s.uid), Element::basis(BasisPath::Idem(s.vertex))))
            .collect();
        Self::new_unchecked(x.clone(), x.clone(), 0, 0, entries)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Element<S>)> + '_ {
        self.entries.iter().map(|(&(s, t), e)| (s, t, e))
    }

    pub fn entry(&self, s: usize, t: usize) -> Option<&Element<S>> {
        self.entries.get(&(s, t))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn validate(&self) -> Result<(), ComplexError> {
        let bad = |m: String| Err(ComplexError::InvalidChainMap(m));
        self.source.check_compatible(&self.target)?;
        for (&(s, t), e) in &self.entries {
            if s >= self.source.len() || t >= self.target.len() {
                return bad(format!("unknown summand in {s} -> {t}"));
            }
            let (a, b) = (&self.source.summands[s], &self.target.summands[t]);
            if b.degree - self.hom_offset != a.degree {
                return bad(format!("{s} -> {t} has the wrong homological degree"));
            }
            if e.endpoints() != Some((a.vertex, b.vertex)) {
                return bad(format!("{s} -> {t} is not endpoint-pure"));
            }
            if e.homogeneous_degree(&self.source.mode) != Some(b.shift + self.int_offset - a.shift) {
                return bad(format!("{s} -> {t} has the wrong internal degree"));
            }
        }
        // d_X f = (-1)^hom f d_Y, in path order.
        let sign = if self.hom_offset.rem_euclid(2) == 1 { -S::one() } else { S::one() };
        let mut acc: BTreeMap<(usize, usize), Element<S>> = BTreeMap::new();
        for (s, t, e) in self.source.entries() {
            for (&(_, u), f) in self.entries.range((t, 0)..=(t, usize::MAX)) {
                let slot = acc.entry((s, u)).or_insert_with(Element::zero);
                *slot = slot.add(&e.mul(f));
            }
        }
        for (&(s, t), f) in &self.entries {
            for (u, e) in self.target.out_entries(t) {
                let slot = acc.entry((s, u)).or_insert_with(Element::zero);
                *slot = slot.sub(&f.mul(e).scale(&sign));
            }
        }
        match acc.iter().find(|(_, e)| !e.is_zero()) {
            Some((k, _)) => bad(format!("does not commute with differentials at {k:?}")),
            None => Ok(()),
        }
    }

    /// `self` followed by `next`; offsets add.
    pub fn then(&self, next: &ChainMap<S>) -> Result<Self, ComplexError> {
        if self.target.signature() != next.source.signature() || self.target.len() != next.source.len() {
            return Err(ComplexError::InvalidChainMap("composition of mismatched maps".into()));
        }
        let mut acc: BTreeMap<(usize, usize), Element<S>> = BTreeMap::new();
        for (&(s, t), f) in &self.entries {
            for (&(_, u), g) in next.entries.range((t, 0)..=(t, usize::MAX)) {
                let slot = acc.entry((s, u)).or_insert_with(Element::zero);
                *slot = slot.add(&f.mul(g));
            }
        }
        Ok(Self::new_unchecked(
            self.source.clone(),
            next.target.clone(),
            self.hom_offset + next.hom_offset,
            self.int_offset + next.int_offset,
            acc,
        ))
    }

    pub fn sub(&self, other: &ChainMap<S>) -> Self {
        let mut acc = self.entries.clone();
        for (k, e) in &other.entries {
            let cur = acc.remove(k).unwrap_or_else(Element::zero);
            let new = cur.sub(e);
            if !new.is_zero() {
                acc.insert(*k, new);
            }
        }
        Self::new_unchecked(self.source.clone(), self.target.clone(), self.hom_offset, self.int_offset, acc)
    }

    /// Sum over source summands `S` with a matching target summand of the
    /// idempotent coefficient of the diagonal entry; for endomorphisms of a
    /// minimal complex this is the trace of the semisimple reduction.
    pub fn scalar_trace(&self) -> S {
        let mut acc = S::zero();
        for (&(s, t), e) in &self.entries {
            if s == t {
                acc = acc + e.idempotent_coeff(self.source.summands[s].vertex);
            }
        }
        acc
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Complex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (lo, hi) = self.degree_range().expect("nonzero");
        for d in lo..=hi {
            let here: Vec<String> = self
                .summands
                .iter()
                .filter(|s| s.degree == d)
                .map(|s| if s.shift == 0 { format!("P{}", s.vertex) } else { format!("P{}<{}>", s.vertex, s.shift) })
                .collect();
            let body = if here.is_empty() { "0".to_string() } else { here.join(" + ") };
            writeln!(f, "[{d}] {body}")?;
        }
        for (s, t, e) in self.entries() {
            writeln!(f, "  {s} -> {t}: {e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
