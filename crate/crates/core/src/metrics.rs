//! Word metrics on the free group read off from slices of `Psi_beta(P_1 + ... + P_n)`,
//! together with their combinatorial counterparts.

use std::collections::HashMap;

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::GradingMode;
use crate::complexes::Complex;
use crate::freegroup::{counts, Bessis, Decision, Word};
use crate::slices::phi;
use crate::twists::{psi_generator, TwistError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("word {word} uses generators beyond rank {rank}")]
    Rank { word: Word, rank: usize },
    #[error(transparent)]
    Twist(#[from] TwistError),
}

fn check_rank(w: &Word, n: usize) -> Result<(), MetricError> {
    if w.max_generator() > n {
        return Err(MetricError::Rank { word: w.clone(), rank: n });
    }
    Ok(())
}

/// `beta^-1 alpha`, reduced.
pub fn quotient(alpha: &Word, beta: &Word) -> Word {
    beta.left_quotient(alpha)
}

/// `Psi_beta` of the generator, minimized.
pub fn image_of_generator(beta: &Word, n: usize, mode: &GradingMode) -> Result<Complex<BigRational>, MetricError> {
    check_rank(beta, n)?;
    Ok(psi_generator(&beta.reduce(), n, mode)?)
}

/// `(phi_-, phi_+)` of `Psi_beta(P_1 + ... + P_n)`: baric slice indices for the
/// orientation gradings, t-slice indices for the path grading.
pub fn homological_phi(beta: &Word, n: usize, mode: &GradingMode) -> Result<(i64, i64), MetricError> {
    let y = image_of_generator(beta, n, mode)?;
    Ok(phi(&y).expect("twists of the generator are nonzero"))
}

/// `(min(phi_-, 0), max(phi_+, 0))`.
pub fn clamp(p: (i64, i64)) -> (i64, i64) {
    (p.0.min(0), p.1.max(0))
}

pub fn d_standard(alpha: &Word, beta: &Word) -> usize {
    quotient(alpha, beta).len()
}

/// Spread of the symmetric-grading interval.
pub fn standard_length_homological(beta: &Word, n: usize) -> Result<usize, MetricError> {
    let (lo, hi) = homological_phi(beta, n, &GradingMode::OrientTilde)?;
    Ok((hi - lo) as usize)
}

/// Clamped spread of the ordered-grading interval.
pub fn dual_length_homological(beta: &Word, n: usize) -> Result<usize, MetricError> {
    let (lo, hi) = clamp(homological_phi(beta, n, &GradingMode::OrientVec)?);
    Ok((hi - lo) as usize)
}

fn gamma_power(n: usize, p: i64) -> Word {
    let g = Word::gamma(n);
    let g = if p < 0 { g.inverse() } else { g };
    (0..p.unsigned_abs()).fold(Word::identity(), |acc, _| acc.mul(&g))
}

/// `(inf, sup)` of `beta` in the Bessis monoid: the largest `p` with
/// `gamma^-p beta` positive and the smallest `q` with `beta <= gamma^q`.
/// `None` when a bounded membership test is undecided.
pub fn garside_inf_sup(beta: &Word, bessis: &Bessis) -> Option<(i64, i64)> {
    let beta = beta.reduce();
    let n = bessis.rank();
    let (pos, neg) = counts(&beta);
    let (lo, hi) = (-(neg as i64), pos as i64);
    let mut inf = None;
    for p in (lo..=hi).rev() {
        match bessis.in_monoid(&gamma_power(n, -p).mul(&beta)) {
            Decision::True => {
                inf = Some(p);
                break;
            }
            Decision::False => {}
            Decision::Unknown => return None,
        }
    }
    let mut sup = None;
    for q in lo..=hi {
        match bessis.in_monoid(&beta.inverse().mul(&gamma_power(n, q))) {
            Decision::True => {
                sup = Some(q);
                break;
            }
            Decision::False => {}
            Decision::Unknown => return None,
        }
    }
    Some((inf?, sup?))
}

/// Words within distance two of the identity in the enumerated simples and
/// their inverses, for meet-in-the-middle distances up to four.
pub struct DualOracle {
    bessis: Bessis,
    generators: Vec<Word>,
    ball: HashMap<Word, usize>,
}

impl DualOracle {
    pub const MAX_DEPTH: usize = 4;

    pub fn new(bessis: Bessis) -> Self {
        let mut generators: Vec<Word> = Vec::new();
        for s in bessis.simples().iter().filter(|s| !s.is_empty()) {
            generators.push(s.clone());
            generators.push(s.inverse());
        }
        let mut ball = HashMap::from([(Word::identity(), 0)]);
        for g in &generators {
            ball.entry(g.clone()).or_insert(1);
        }
        for a in &generators {
            for b in &generators {
                ball.entry(a.mul(b)).or_insert(2);
            }
        }
        DualOracle { bessis, generators, ball }
    }

    pub fn bessis(&self) -> &Bessis {
        &self.bessis
    }

    /// Length over the enumerated simples, when at most [`Self::MAX_DEPTH`].
    pub fn distance(&self, beta: &Word) -> Option<usize> {
        let beta = beta.reduce();
        if let Some(&d) = self.ball.get(&beta) {
            return Some(d);
        }
        if self.generators.iter().any(|x| self.ball.get(&x.left_quotient(&beta)).is_some_and(|&k| k <= 2)) {
            return Some(3);
        }
        if self
            .ball
            .iter()
            .filter(|(_, &k)| k == 2)
            .any(|(x, _)| self.ball.get(&x.left_quotient(&beta)).is_some_and(|&k| k == 2))
        {
            return Some(4);
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualLength {
    pub homological: usize,
    /// Distance over the enumerated simples, an upper bound for the true length.
    pub oracle: Option<usize>,
    pub inf_sup: Option<(i64, i64)>,
    /// The oracle value is the true length.
    pub exact: bool,
}

/// A lower bound for the length over all simples and their inverses: the
/// value from `inf`/`sup` when decided, otherwise the best of `beta != 1`,
/// non-simplicity of `beta` and `beta^-1`, and `|exponent sum| / n` rounded up.
pub fn dual_lower_bound(beta: &Word, bessis: &Bessis) -> usize {
    let beta = beta.reduce();
    if beta.is_empty() {
        return 0;
    }
    if let Some((i, s)) = garside_inf_sup(&beta, bessis) {
        return (s.max(0) - i.min(0)) as usize;
    }
    let n = bessis.rank() as u64;
    let by_sum = beta.exponent_sum().unsigned_abs().div_ceil(n) as usize;
    let not_simple = bessis.is_simple(&beta) == Decision::False && bessis.is_simple(&beta.inverse()) == Decision::False;
    by_sum.max(if not_simple { 2 } else { 1 })
}

/// Homological dual length of `beta` next to the bounded search.
pub fn d_dual(beta: &Word, oracle: &DualOracle) -> Result<DualLength, MetricError> {
    let beta = beta.reduce();
    let n = oracle.bessis().rank();
    let homological = dual_length_homological(&beta, n)?;
    let found = oracle.distance(&beta);
    let inf_sup = garside_inf_sup(&beta, oracle.bessis());
    let exact = found.is_some_and(|d| d <= dual_lower_bound(&beta, oracle.bessis()));
    Ok(DualLength { homological, oracle: found, inf_sup, exact })
}

/// Maximal subwords of a reduced word that are positive or negative and have
/// no two equal adjacent letters. Each is a canonical lift or its inverse.
pub fn cox_pieces(w: &Word) -> Vec<Word> {
    let mut pieces: Vec<Vec<i32>> = Vec::new();
    for &l in w.reduce().letters() {
        match pieces.last_mut() {
            Some(p) if p.last().is_some_and(|&m| m.signum() == l.signum() && m != l) => p.push(l),
            _ => pieces.push(vec![l]),
        }
    }
    pieces.into_iter().map(|p| Word::new(p).expect("nonzero letters")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoxDistance {
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: Option<usize>,
}

/// Distance over the canonical positive lifts of length at most `bound` and
/// their inverses.
///
/// One generator changes the number of sign blocks plus equal adjacent pairs
/// by at most one, so that count is a lower bound; cutting at every sign
/// change and repeated letter attains it when all pieces fit in `bound`.
pub fn d_cox(alpha: &Word, beta: &Word, bound: usize) -> CoxDistance {
    let pieces = cox_pieces(&quotient(alpha, beta));
    let lower = pieces.len();
    let upper = pieces.iter().all(|p| p.len() <= bound).then_some(lower);
    CoxDistance { value: upper, lower, upper }
}

/// Spread of the t-slice interval of `Psi_{beta^-1 alpha}` in the path grading.
pub fn d_exotic(alpha: &Word, beta: &Word, n: usize) -> Result<usize, MetricError> {
    let (lo, hi) = homological_phi(&quotient(alpha, beta), n, &GradingMode::PathLength)?;
    Ok((hi - lo) as usize)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterpart {
    pub name: &'static str,
    pub value: Option<usize>,
    pub exact: bool,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricReport {
    pub word: Word,
    pub mode: GradingMode,
    pub phi: (i64, i64),
    pub clamped: Option<(i64, i64)>,
    pub spread: usize,
    pub counterpart: Counterpart,
}

impl MetricReport {
    /// The homological spread equals a certified combinatorial value.
    pub fn agrees(&self) -> Option<bool> {
        match (self.counterpart.exact, self.counterpart.value) {
            (true, Some(v)) => Some(v == self.spread),
            _ => None,
        }
    }
}

/// Distance from `alpha` to `beta` in the metric attached to `mode`.
pub fn metric_report(alpha: &Word, beta: &Word, n: usize, mode: &GradingMode, bound: usize) -> Result<MetricReport, MetricError> {
    let word = quotient(alpha, beta);
    check_rank(alpha, n)?;
    check_rank(beta, n)?;
    let phi = homological_phi(&word, n, mode)?;
    let (clamped, spread, counterpart) = match mode {
        GradingMode::OrientVec => {
            let c = clamp(phi);
            let d = d_dual(&word, &DualOracle::new(Bessis::new(n, bound)))?;
            let cp = Counterpart {
                name: "dual length",
                value: d.oracle,
                exact: d.exact,
                source: format!("search over simples^±1, bound {bound}"),
            };
            (Some(c), (c.1 - c.0) as usize, cp)
        }
        GradingMode::PathLength => {
            let d = d_cox(alpha, beta, bound);
            let cp = Counterpart {
                name: "d_Cox",
                value: d.value,
                exact: d.value.is_some(),
                source: format!("square-free factorization, bound {bound}"),
            };
            (None, (phi.1 - phi.0) as usize, cp)
        }
        _ => {
            let cp = Counterpart { name: "word length", value: Some(word.len()), exact: true, source: "closed form".into() };
            (None, (phi.1 - phi.0) as usize, cp)
        }
    };
    Ok(MetricReport { word, mode: mode.clone(), phi, clamped, spread, counterpart })
}
