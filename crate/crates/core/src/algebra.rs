//! The zigzag algebra of the doubled complete graph.
//!
//! Basis paths are `e_i`, `z_i` and, for every pair `i < j`, the edges
//! `x_ij`, `y_ij` (running `i -> j`) and `x*_ij`, `y*_ij` (running `j -> i`).
//! Products compose left to right: `a * b` is the path `a` followed by `b`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("rank must be at least 1")]
    InvalidRank,
    #[error("vertex {vertex} out of range for rank {rank}")]
    VertexOutOfRange { vertex: usize, rank: usize },
    #[error("element uses a path outside rank {rank}")]
    RankMismatch { rank: usize },
    #[error("cannot parse basis path {0:?}")]
    Parse(String),
}

/// The two edge labels of the doubled graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisPath {
    Idem(usize),
    Loop(usize),
    EdgeX(usize, usize),
    EdgeY(usize, usize),
    EdgeXStar(usize, usize),
    EdgeYStar(usize, usize),
}

impl BasisPath {
    fn sort_key(&self) -> (u8, usize, usize, u8) {
        match *self {
            BasisPath::Idem(i) => (0, i, 0, 0),
            BasisPath::Loop(i) => (1, i, 0, 0),
            BasisPath::EdgeX(i, j) => (2, i, j, 0),
            BasisPath::EdgeY(i, j) => (2, i, j, 1),
            BasisPath::EdgeXStar(i, j) => (2, i, j, 2),
            BasisPath::EdgeYStar(i, j) => (2, i, j, 3),
        }
    }

    pub fn source(&self) -> usize {
        match *self {
            BasisPath::Idem(i) | BasisPath::Loop(i) => i,
            BasisPath::EdgeX(i, _) | BasisPath::EdgeY(i, _) => i,
            BasisPath::EdgeXStar(_, j) | BasisPath::EdgeYStar(_, j) => j,
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            BasisPath::Idem(i) | BasisPath::Loop(i) => i,
            BasisPath::EdgeX(_, j) | BasisPath::EdgeY(_, j) => j,
            BasisPath::EdgeXStar(i, _) | BasisPath::EdgeYStar(i, _) => i,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        matches!(self, BasisPath::Idem(_))
    }

    pub fn is_edge(&self) -> bool {
        !matches!(self, BasisPath::Idem(_) | BasisPath::Loop(_))
    }

    /// Largest vertex index mentioned by the path.
    pub fn max_vertex(&self) -> usize {
        self.source().max(self.target())
    }

    /// Smallest vertex index mentioned by the path.
    pub fn min_vertex(&self) -> usize {
        self.source().min(self.target())
    }

    /// Partner in the coevaluation sum: `e <-> z`, `x <-> x*`, `y <-> y*`.
    pub fn dual_partner(&self) -> BasisPath {
        match *self {
            BasisPath::Idem(i) => BasisPath::Loop(i),
            BasisPath::Loop(i) => BasisPath::Idem(i),
            BasisPath::EdgeX(i, j) => BasisPath::EdgeXStar(i, j),
            BasisPath::EdgeXStar(i, j) => BasisPath::EdgeX(i, j),
            BasisPath::EdgeY(i, j) => BasisPath::EdgeYStar(i, j),
            BasisPath::EdgeYStar(i, j) => BasisPath::EdgeY(i, j),
        }
    }

    pub fn degree(&self, mode: &GradingMode) -> i64 {
        mode.degree(self)
    }

    fn check(&self) -> Result<(), AlgebraError> {
        let ok = match *self {
            BasisPath::Idem(i) | BasisPath::Loop(i) => i >= 1,
            BasisPath::EdgeX(i, j)
            | BasisPath::EdgeY(i, j)
            | BasisPath::EdgeXStar(i, j)
            | BasisPath::EdgeYStar(i, j) => i >= 1 && i < j,
        };
        if ok {
            Ok(())
        } else {
            Err(AlgebraError::Parse(self.to_string()))
        }
    }
}

impl Ord for BasisPath {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for BasisPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BasisPath::Idem(i) => write!(f, "e({i})"),
            BasisPath::Loop(i) => write!(f, "z({i})"),
            BasisPath::EdgeX(i, j) => write!(f, "x({i},{j})"),
            BasisPath::EdgeY(i, j) => write!(f, "y({i},{j})"),
            BasisPath::EdgeXStar(i, j) => write!(f, "x*({i},{j})"),
            BasisPath::EdgeYStar(i, j) => write!(f, "y*({i},{j})"),
        }
    }
}

impl FromStr for BasisPath {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || AlgebraError::Parse(s.to_string());
        let s = s.trim();
        let open = s.find('(').ok_or_else(err)?;
        let inner = s[open..]
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        let nums: Vec<usize> = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| err())?;
        let path = match (&s[..open], nums.as_slice()) {
            ("e", [i]) => BasisPath::Idem(*i),
            ("z", [i]) => BasisPath::Loop(*i),
            ("x", [i, j]) => BasisPath::EdgeX(*i, *j),
            ("y", [i, j]) => BasisPath::EdgeY(*i, *j),
            ("x*", [i, j]) => BasisPath::EdgeXStar(*i, *j),
            ("y*", [i, j]) => BasisPath::EdgeYStar(*i, *j),
            _ => return Err(err()),
        };
        path.check().map_err(|_| err())?;
        Ok(path)
    }
}

/// Product of two basis paths; every nonzero product is a single basis path.
pub fn mul_basis(a: BasisPath, b: BasisPath) -> Option<BasisPath> {
    if a.target() != b.source() {
        return None;
    }
    if a.is_idempotent() {
        return Some(b);
    }
    if b.is_idempotent() {
        return Some(a);
    }
    if a.is_edge() && b.is_edge() && b == a.dual_partner() {
        return Some(BasisPath::Loop(a.source()));
    }
    None
}

/// All `2n^2` basis paths in canonical order.
pub fn basis(n: usize) -> Result<Vec<BasisPath>, AlgebraError> {
    if n < 1 {
        return Err(AlgebraError::InvalidRank);
    }
    let mut out = Vec::with_capacity(2 * n * n);
    out.extend((1..=n).map(BasisPath::Idem));
    out.extend((1..=n).map(BasisPath::Loop));
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(BasisPath::EdgeX(i, j));
            out.push(BasisPath::EdgeY(i, j));
            out.push(BasisPath::EdgeXStar(i, j));
            out.push(BasisPath::EdgeYStar(i, j));
        }
    }
    Ok(out)
}

/// Canonical basis of `e_i A e_j`.
///
/// Panics on vertex 0; use [`ZigzagAlgebra::hom_basis`] for range checking.
pub fn hom_basis(i: usize, j: usize) -> [BasisPath; 2] {
    assert!(i >= 1 && j >= 1, "vertices are 1-based");
    match i.cmp(&j) {
        Ordering::Equal => [BasisPath::Idem(i), BasisPath::Loop(i)],
        Ordering::Less => [BasisPath::EdgeX(i, j), BasisPath::EdgeY(i, j)],
        Ordering::Greater => [BasisPath::EdgeXStar(j, i), BasisPath::EdgeYStar(j, i)],
    }
}

pub fn dual_partner(p: BasisPath) -> BasisPath {
    p.dual_partner()
}

pub fn degree(p: BasisPath, mode: &GradingMode) -> i64 {
    mode.degree(&p)
}

/// An orientation of the doubled complete graph: for every edge `(kind, i, j)`
/// with `i < j`, whether it points `i -> j`. Missing edges point `i -> j`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Orientation {
    directions: BTreeMap<(EdgeKind, usize, usize), bool>,
}

impl Orientation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, kind: EdgeKind, i: usize, j: usize, forward: bool) {
        let (a, b, fwd) = if i < j { (i, j, forward) } else { (j, i, !forward) };
        self.directions.insert((kind, a, b), fwd);
    }

    pub fn is_forward(&self, kind: EdgeKind, i: usize, j: usize) -> bool {
        self.directions.get(&(kind, i, j)).copied().unwrap_or(true)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((EdgeKind, usize, usize), bool)> + '_ {
        self.directions.iter().map(|(k, v)| (*k, *v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GradingMode {
    PathLength,
    OrientTilde,
    OrientVec,
    OrientCustom(Orientation),
}

impl GradingMode {
    pub fn degree(&self, p: &BasisPath) -> i64 {
        let oriented = |kind: EdgeKind, forward_edge: bool| -> i64 {
            let fwd = match self {
                GradingMode::OrientTilde => kind == EdgeKind::X,
                GradingMode::OrientVec => true,
                GradingMode::OrientCustom(o) => {
                    let (i, j) = (p.min_vertex(), p.max_vertex());
                    o.is_forward(kind, i, j)
                }
                GradingMode::PathLength => unreachable!(),
            };
            i64::from(fwd == forward_edge)
        };
        match (self, p) {
            (_, BasisPath::Idem(_)) => 0,
            (GradingMode::PathLength, BasisPath::Loop(_)) => 2,
            (GradingMode::PathLength, _) => 1,
            (_, BasisPath::Loop(_)) => 1,
            (_, BasisPath::EdgeX(..)) => oriented(EdgeKind::X, true),
            (_, BasisPath::EdgeXStar(..)) => oriented(EdgeKind::X, false),
            (_, BasisPath::EdgeY(..)) => oriented(EdgeKind::Y, true),
            (_, BasisPath::EdgeYStar(..)) => oriented(EdgeKind::Y, false),
        }
    }

    pub fn is_orientation(&self) -> bool {
        !matches!(self, GradingMode::PathLength)
    }

    /// Degree of `a` plus degree of its dual partner; the internal shift on the
    /// bimodule term of the twist.
    pub fn pair_degree(&self) -> i64 {
        match self {
            GradingMode::PathLength => 2,
            _ => 1,
        }
    }

    /// Largest degree of any basis path.
    pub fn max_degree(&self) -> i64 {
        self.pair_degree()
    }

    pub fn name(&self) -> &'static str {
        match self {
            GradingMode::PathLength => "path",
            GradingMode::OrientTilde => "tilde",
            GradingMode::OrientVec => "vec",
            GradingMode::OrientCustom(_) => "custom",
        }
    }
}

impl FromStr for GradingMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(GradingMode::PathLength),
            "tilde" => Ok(GradingMode::OrientTilde),
            "vec" => Ok(GradingMode::OrientVec),
            other => Err(format!("unknown grading mode {other:?}")),
        }
    }
}

impl fmt::Display for GradingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl serde::Serialize for GradingMode {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        s.collect_str(self)
    }
}

/// A sparse linear combination of basis paths with no stored zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct Element<S> {
    terms: Vec<(BasisPath, S)>,
}

impl<S: Scalar> Default for Element<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> Element<S> {
    pub fn zero() -> Self {
        Element { terms: Vec::new() }
    }

    pub fn basis(p: BasisPath) -> Self {
        Element { terms: vec![(p, S::one())] }
    }

    pub fn term(p: BasisPath, c: S) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Element { terms: vec![(p, c)] }
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (BasisPath, S)>>(iter: I) -> Self {
        let mut map: BTreeMap<BasisPath, S> = BTreeMap::new();
        for (p, c) in iter {
            let slot = map.entry(p).or_insert_with(S::zero);
            *slot = slot.clone() + c;
        }
        Element { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(BasisPath, S)] {
        &self.terms
    }

    pub fn coeff(&self, p: BasisPath) -> S {
        self.terms
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(S::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((pa, ca)), Some((pb, cb))) => match pa.cmp(pb) {
                    Ordering::Less => {
                        out.push((*pa, ca.clone()));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((*pb, cb.clone()));
                        b.next();
                    }
                    Ordering::Equal => {
                        let c = ca.clone() + cb.clone();
                        if !c.is_zero() {
                            out.push((*pa, c));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some((pa, ca)), None) => {
                    out.push((*pa, ca.clone()));
                    a.next();
                }
                (None, Some((pb, cb))) => {
                    out.push((*pb, cb.clone()));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Element { terms: out }
    }

    pub fn neg(&self) -> Self {
        Element { terms: self.terms.iter().map(|(p, c)| (*p, -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Element { terms: self.terms.iter().map(|(p, a)| (*p, a.clone() * c.clone())).collect() }
    }

    /// Product without rank checks.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().flat_map(|(a, ca)| {
            other.terms.iter().filter_map(move |(b, cb)| {
                mul_basis(*a, *b).map(|p| (p, ca.clone() * cb.clone()))
            })
        }))
    }

    /// `Some((i, j))` when every path runs from `i` to `j`.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let (first, _) = self.terms.first()?;
        let ends = (first.source(), first.target());
        self.terms
            .iter()
            .all(|(p, _)| (p.source(), p.target()) == ends)
            .then_some(ends)
    }

    pub fn is_endpoint_pure(&self) -> bool {
        self.is_zero() || self.endpoints().is_some()
    }

    /// The common degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self, mode: &GradingMode) -> Option<i64> {
        let (first, _) = self.terms.first()?;
        let d = mode.degree(first);
        self.terms.iter().all(|(p, _)| mode.degree(p) == d).then_some(d)
    }

    pub fn max_vertex(&self) -> usize {
        self.terms.iter().map(|(p, _)| p.max_vertex()).max().unwrap_or(0)
    }

    /// Coefficient of the idempotent at vertex `i`.
    pub fn idempotent_coeff(&self, i: usize) -> S {
        self.coeff(BasisPath::Idem(i))
    }

    /// Inverse of `lambda e_i + r` with `r` in the span of `z_i`, when `lambda != 0`.
    pub fn local_inverse(&self, i: usize) -> Option<Self> {
        let lambda = self.idempotent_coeff(i);
        if lambda.is_zero() || self.endpoints() != Some((i, i)) {
            return None;
        }
        let inv = S::one() / lambda;
        let mu = self.coeff(BasisPath::Loop(i));
        Some(Self::from_terms([
            (BasisPath::Idem(i), inv.clone()),
            (BasisPath::Loop(i), -(mu * inv.clone() * inv)),
        ]))
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Element<T> {
        Element::from_terms(self.terms.iter().map(|(p, c)| (*p, f(c))))
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "({c}){p}")?;
            }
        }
        Ok(())
    }
}

/// The algebra of rank `n`, used for range-checked operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZigzagAlgebra {
    rank: usize,
}

impl ZigzagAlgebra {
    pub fn new(rank: usize) -> Result<Self, AlgebraError> {
        if rank < 1 {
            return Err(AlgebraError::InvalidRank);
        }
        Ok(ZigzagAlgebra { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        2 * self.rank * self.rank
    }

    pub fn basis(&self) -> Vec<BasisPath> {
        basis(self.rank).expect("rank checked at construction")
    }

    pub fn hom_basis(&self, i: usize, j: usize) -> Result<[BasisPath; 2], AlgebraError> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        Ok(hom_basis(i, j))
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), AlgebraError> {
        if v >= 1 && v <= self.rank {
            Ok(())
        } else {
            Err(AlgebraError::VertexOutOfRange { vertex: v, rank: self.rank })
        }
    }

    pub fn contains<S: Scalar>(&self, a: &Element<S>) -> bool {
        a.max_vertex() <= self.rank
    }

    pub fn multiply<S: Scalar>(&self, a: &Element<S>, b: &Element<S>) -> Result<Element<S>, AlgebraError> {
        if !self.contains(a) || !self.contains(b) {
            return Err(AlgebraError::RankMismatch { rank: self.rank });
        }
        Ok(a.mul(b))
    }

    pub fn unit<S: Scalar>(&self) -> Element<S> {
        Element::from_terms((1..=self.rank).map(|i| (BasisPath::Idem(i), S::one())))
    }
}
