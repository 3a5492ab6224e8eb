//! Verification sweeps, one per acceptance criterion.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{self, hom_basis, BasisPath, EdgeKind, Element, GradingMode, Orientation, ZigzagAlgebra};
use crate::complexes::{is_isomorphic, is_isomorphic_up_to_shift, Complex};
use crate::freegroup::{counts, enumerate_reflections, reduced_words, Bessis, Decision, Word};
use crate::metrics::{d_cox, d_dual, d_exotic, homological_phi, DualOracle};
use crate::slices::{in_x_minus, in_x_plus, ping_pong_memberships};
use crate::spherical::{base_tuple, check_equiv, hurwitz_spherical, is_o_spherical, SphericalTuple};
use crate::twists::{psi, psi_generator, sigma};

type C = Complex<BigRational>;

const MAX_LISTED_FAILURES: usize = 20;

/// Longest reduced product of simples whose twist is computed in the dual sweep.
const METRIC2_MAX_LEN: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Functors,
    Invertibility,
    Metric1,
    Metric2,
    Exotic,
    Pingpong,
    Hurwitz,
    Equiv,
    Faithful,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Algebra,
        Suite::Functors,
        Suite::Invertibility,
        Suite::Metric1,
        Suite::Metric2,
        Suite::Exotic,
        Suite::Pingpong,
        Suite::Hurwitz,
        Suite::Equiv,
        Suite::Faithful,
    ];

    pub fn criterion(self) -> u8 {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") as u8 + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Functors => "functors",
            Suite::Invertibility => "invertibility",
            Suite::Metric1 => "metric1",
            Suite::Metric2 => "metric2",
            Suite::Exotic => "exotic",
            Suite::Pingpong => "pingpong",
            Suite::Hurwitz => "hurwitz",
            Suite::Equiv => "equiv",
            Suite::Faithful => "faithful",
        }
    }

    fn default_ranks(self) -> Vec<usize> {
        match self {
            Suite::Algebra => (1..=5).collect(),
            Suite::Functors => vec![2, 3, 4],
            _ => vec![2, 3],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Ranks, word lengths, seed and enumeration bound for a sweep. Empty ranks
/// and a missing length mean the criterion's own scope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scope {
    pub ranks: Vec<usize>,
    pub maxlen: Option<usize>,
    pub seed: u64,
    pub bound: usize,
}

impl Default for Scope {
    fn default() -> Self {
        Scope { ranks: Vec::new(), maxlen: None, seed: 0, bound: 5 }
    }
}

impl Scope {
    fn ranks(&self, suite: Suite) -> Vec<usize> {
        if self.ranks.is_empty() {
            suite.default_ranks()
        } else {
            self.ranks.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub criterion: u8,
    pub suite: Suite,
    pub passed: bool,
    pub checked: usize,
    /// Instances skipped because a bounded oracle could not certify them.
    pub uncertified: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
    pub scope: String,
}

enum Outcome {
    Pass,
    Fail(String),
    Uncertified,
}

impl From<Result<(), String>> for Outcome {
    fn from(r: Result<(), String>) -> Self {
        match r {
            Ok(()) => Outcome::Pass,
            Err(e) => Outcome::Fail(e),
        }
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    uncertified: usize,
    failures: Vec<String>,
}

impl Tally {
    fn add(&mut self, o: Outcome) {
        match o {
            Outcome::Pass => self.checked += 1,
            Outcome::Uncertified => self.uncertified += 1,
            Outcome::Fail(e) => {
                self.checked += 1;
                self.failures.push(e);
            }
        }
    }

    fn run<I: Sync>(&mut self, items: &[I], f: impl Fn(&I) -> Outcome + Sync) {
        let out: Vec<Outcome> = items.par_iter().map(&f).collect();
        for o in out {
            self.add(o);
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.add(if ok { Outcome::Pass } else { Outcome::Fail(msg()) });
    }

    fn report(self, suite: Suite, scope: String) -> SuiteReport {
        let failure_count = self.failures.len();
        SuiteReport {
            criterion: suite.criterion(),
            suite,
            passed: failure_count == 0 && self.checked > 0,
            checked: self.checked,
            uncertified: self.uncertified,
            failure_count,
            failures: self.failures.into_iter().take(MAX_LISTED_FAILURES).collect(),
            scope,
        }
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn run(suite: Suite, scope: &Scope) -> SuiteReport {
    match suite {
        Suite::Algebra => algebra_suite(scope),
        Suite::Functors => functors_suite(scope),
        Suite::Invertibility => invertibility_suite(scope),
        Suite::Metric1 => metric1_suite(scope),
        Suite::Metric2 => metric2_suite(scope),
        Suite::Exotic => exotic_suite(scope),
        Suite::Pingpong => pingpong_suite(scope),
        Suite::Hurwitz => hurwitz_suite(scope),
        Suite::Equiv => equiv_suite(scope),
        Suite::Faithful => faithful_suite(scope),
    }
}

pub fn three_modes() -> [GradingMode; 3] {
    [GradingMode::PathLength, GradingMode::OrientTilde, GradingMode::OrientVec]
}

/// An orientation of the rank-`n` graph with every edge direction drawn at random.
pub fn random_orientation(rng: &mut ChaCha8Rng, n: usize) -> Orientation {
    let mut o = Orientation::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for kind in [EdgeKind::X, EdgeKind::Y] {
                o.set(kind, i, j, rng.gen());
            }
        }
    }
    o
}

/// A uniformly drawn reduced word of the given length.
pub fn random_reduced_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Word {
    let mut letters: Vec<i32> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = rng.gen_range(1..=n as i32) * if rng.gen() { 1 } else { -1 };
        if letters.last() != Some(&-l) {
            letters.push(l);
        }
    }
    Word::new(letters).expect("nonzero letters")
}

fn projective(n: usize, mode: &GradingMode, i: usize) -> C {
    C::projective(n, mode.clone(), i, 0, 0).expect("valid vertex")
}

fn algebra_suite(scope: &Scope) -> SuiteReport {
    let ranks = scope.ranks(Suite::Algebra);
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(scope.seed);
    for &n in &ranks {
        let a = ZigzagAlgebra::new(n).expect("positive rank");
        t.check(a.dim() == 2 * n * n, || format!("n={n}: dim {}", a.dim()));
        let basis = a.basis();
        for i in 1..=n {
            for j in 1..=n {
                let k = basis.iter().filter(|p| p.source() == i && p.target() == j).count();
                t.check(k == 2, || format!("n={n}: dim e_{i} A e_{j} = {k}"));
            }
        }
        let mut modes = three_modes().to_vec();
        modes.push(GradingMode::OrientCustom(random_orientation(&mut rng, n)));
        for mode in &modes {
            let homogeneous = basis.iter().all(|&p| {
                basis.iter().all(|&q| match algebra::mul_basis(p, q) {
                    Some(r) => mode.degree(&r) == mode.degree(&p) + mode.degree(&q),
                    None => true,
                })
            });
            t.check(homogeneous, || format!("n={n} {mode}: a nonzero product is not homogeneous"));
            let cycles = basis.iter().filter(|p| p.is_edge()).all(|&p| {
                mode.degree(&p) + mode.degree(&p.dual_partner()) == mode.degree(&BasisPath::Loop(p.source()))
            });
            t.check(cycles, || format!("n={n} {mode}: two-cycle relations are not homogeneous"));
        }
        if n <= 3 {
            let elems: Vec<Element<BigRational>> = basis.iter().map(|&p| Element::basis(p)).collect();
            let mut assoc = true;
            for x in &elems {
                for y in &elems {
                    let xy = x.mul(y);
                    for z in &elems {
                        if xy.mul(z) != x.mul(&y.mul(z)) {
                            assoc = false;
                        }
                    }
                }
            }
            t.check(assoc, || format!("n={n}: multiplication is not associative"));
        }
    }
    t.report(Suite::Algebra, format!("ranks {ranks:?}, associativity for n <= 3"))
}

/// `Sigma_i P_j` for `i != j`: `P_j -> P_i<deg a> + P_i<deg b>` with `a, b` the
/// basis of `e_j A e_i`; `Sigma_i^-1 P_j` is the mirror image.
pub fn sigma_closed_form(n: usize, mode: &GradingMode, i: usize, j: usize, inverse: bool) -> C {
    if i == j {
        let s = mode.pair_degree();
        return if inverse {
            C::projective(n, mode.clone(), i, -s, -1).expect("valid vertex")
        } else {
            C::projective(n, mode.clone(), i, s, 1).expect("valid vertex")
        };
    }
    let (parts, entries) = if inverse {
        let paths = hom_basis(i, j);
        (
            vec![(i, -mode.degree(&paths[0]), -1), (i, -mode.degree(&paths[1]), -1), (j, 0, 0)],
            vec![(0, 2, Element::basis(paths[0])), (1, 2, Element::basis(paths[1]))],
        )
    } else {
        let paths = hom_basis(j, i);
        (
            vec![(j, 0, 0), (i, mode.degree(&paths[0]), 1), (i, mode.degree(&paths[1]), 1)],
            vec![(0, 1, Element::basis(paths[0])), (0, 2, Element::basis(paths[1]))],
        )
    };
    C::from_parts(n, mode.clone(), parts, entries).expect("closed forms are complexes")
}

fn functors_suite(scope: &Scope) -> SuiteReport {
    let ranks = scope.ranks(Suite::Functors);
    let mut items = Vec::new();
    for &n in &ranks {
        for mode in three_modes() {
            for i in 1..=n {
                for j in 1..=n {
                    for inverse in [false, true] {
                        items.push((n, mode.clone(), i, j, inverse));
                    }
                }
            }
        }
    }
    let mut t = Tally::default();
    t.run(&items, |(n, mode, i, j, inverse)| {
        let got = sigma(*i, if *inverse { -1 } else { 1 }, &projective(*n, mode, *j)).expect("valid twist");
        let want = sigma_closed_form(*n, mode, *i, *j, *inverse);
        let name = if *inverse { "Sigma^-1" } else { "Sigma" };
        ensure(is_isomorphic(&got, &want), || format!("n={n} {mode}: {name}_{i} P_{j} differs from its closed form")).into()
    });
    t.report(Suite::Functors, format!("ranks {ranks:?}, modes path/tilde/vec, both signs"))
}

fn invertibility_suite(scope: &Scope) -> SuiteReport {
    let ranks = scope.ranks(Suite::Invertibility);
    let maxlen = scope.maxlen.unwrap_or(5);
    let mut items: Vec<(usize, GradingMode, C, String)> = Vec::new();
    for &n in &ranks {
        let mut rng = ChaCha8Rng::seed_from_u64(scope.seed ^ n as u64);
        for mode in three_modes() {
            for j in 1..=n {
                items.push((n, mode.clone(), projective(n, &mode, j), format!("P_{j}")));
            }
            for _ in 0..50 {
                let len = rng.gen_range(0..=maxlen);
                let w = random_reduced_word(&mut rng, n, len);
                let j = rng.gen_range(1..=n);
                let y = psi(&w, &projective(n, &mode, j)).expect("valid twist");
                items.push((n, mode.clone(), y, format!("Psi_({w}) P_{j}")));
            }
        }
    }
    let mut t = Tally::default();
    t.run(&items, |(n, mode, y, label)| {
        for i in 1..=*n {
            let a = sigma(i, 1, &sigma(i, -1, y).expect("valid")).expect("valid");
            let b = sigma(i, -1, &sigma(i, 1, y).expect("valid")).expect("valid");
            if !is_isomorphic(&a, y) || !is_isomorphic(&b, y) {
                return Outcome::Fail(format!("n={n} {mode}: Sigma_{i} does not invert on {label}"));
            }
        }
        Outcome::Pass
    });
    t.report(Suite::Invertibility, format!("ranks {ranks:?}, 50 words of length <= {maxlen} per mode, seed {}", scope.seed))
}

fn metric1_suite(scope: &Scope) -> SuiteReport {
    let ranks = scope.ranks(Suite::Metric1);
    let mut items = Vec::new();
    let mut lens = Vec::new();
    for &n in &ranks {
        let maxlen = scope.maxlen.unwrap_or(if n <= 2 { 6 } else { 5 });
        lens.push(maxlen);
        items.extend(reduced_words(n, maxlen).into_iter().map(|w| (n, w)));
    }
    let mut t = Tally::default();
    t.run(&items, |(n, w)| {
        let (pos, neg) = counts(w);
        let got = homological_phi(w, *n, &GradingMode::OrientTilde).expect("valid word");
        ensure(got == (-(neg as i64), pos as i64), || format!("n={n} {w}: phi {got:?}, letters (+{pos}, -{neg})")).into()
    });
    t.report(Suite::Metric1, format!("ranks {ranks:?}, all reduced words up to lengths {lens:?}"))
}

fn metric2_instances(n: usize, bessis: &Bessis, rng: &mut ChaCha8Rng, samples: usize) -> Vec<Word> {
    let gamma = Word::gamma(n);
    let mut out = vec![gamma.clone(), gamma.inverse()];
    for i in 1..=n {
        out.push(Word::generator(i));
        out.push(Word::generator(i).inverse());
    }
    let simples: Vec<&Word> = bessis.simples().iter().filter(|s| !s.is_empty()).collect();
    for s in &simples {
        out.push((*s).clone());
        out.push(s.inverse());
    }
    for k in 2..=3 {
        for _ in 0..samples {
            let w = (0..k).fold(Word::identity(), |acc, _| {
                let s = simples[rng.gen_range(0..simples.len())];
                acc.mul(&if rng.gen() { s.clone() } else { s.inverse() })
            });
            if w.len() <= METRIC2_MAX_LEN {
                out.push(w);
            }
        }
    }
    out.sort_by_key(|w| (w.len(), w.clone()));
    out.dedup();
    out
}

fn metric2_suite(scope: &Scope) -> SuiteReport {
    let ranks = scope.ranks(Suite::Metric2);
    let samples = 150;
    let mut items = Vec::new();
    let mut oracles = Vec::new();
    for &n in &ranks {
        let mut rng = ChaCha8Rng::seed_from_u64(scope.seed ^ (n as u64) << 8);
        let bessis = Bessis::new(n, scope.bound);
        let inst = metric2_instances(n, &bessis, &mut rng, samples);
        oracles.push(DualOracle::new(bessis));
        items.extend(inst.into_iter().map(|w| (oracles.len() - 1, n, w)));
    }
    let mut t = Tally::default();
    t.run(&items, |(k, n, w)| {
        let d = d_dual(w, &oracles[*k]).expect("valid word");
        match (d.exact, d.oracle) {
            (true, Some(v)) => {
                ensure(v == d.homological, || format!("n={n} {w}: homological {}, oracle {v}", d.homological)).into()
            }
            _ => Outcome::Uncertified,
        }
    });
    t.report(
        Suite::Metric2,
        format!(
            "ranks {ranks:?}, simples bound {}, {samples} products of 2 and 3 simples of length <= {METRIC2_MAX_LEN}, seed {}",
            scope.bound, scope.seed
        ),
    )
}

fn exotic_suite(scope: &Scope) -> SuiteReport {
    let mut ranks = scope.ranks(Suite::Exotic);
    ranks.sort();
    let mut t = Tally::default();
    let cox_bound = 16;
    let e = Word::identity();
    if ranks.contains(&3) {
        let (a, b): (Word, Word) = ("s2 s1".parse().expect("word"), "s1 s3 s1^-1".parse().expect("word"));
        let de = d_exotic(&a, &b, 3).expect("valid words");
        t.check(de == 2, || format!("d_exotic(s2 s1, s1 s3 s1^-1) = {de}"));
        let dc = d_cox(&a, &b, cox_bound).value;
        t.check(dc == Some(3), || format!("d_Cox(s2 s1, s1 s3 s1^-1) = {dc:?}"));
    }
    if ranks.contains(&2) {
        let maxlen = scope.maxlen.unwrap_or(6);
        let words = reduced_words(2, maxlen);
        t.run(&words, |w| {
            let de = d_exotic(w, &e, 2).expect("valid word");
            match d_cox(w, &e, cox_bound).value {
                Some(dc) => ensure(de == dc, || format!("n=2 {w}: d_exotic {de}, d_Cox {dc}")).into(),
                None => Outcome::Uncertified,
            }
        });
    }
    for &n in ranks.iter().filter(|&&n| n > 2) {
        let mut rng = ChaCha8Rng::seed_from_u64(scope.seed ^ 0xe0 ^ n as u64);
        let pairs: Vec<(Word, Word)> = (0..100)
            .map(|_| {
                let (la, lb) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
                (random_reduced_word(&mut rng, n, la), random_reduced_word(&mut rng, n, lb))
            })
            .collect();
        t.run(&pairs, |(a, b)| {
            let de = d_exotic(a, b, n).expect("valid words");
            match d_cox(a, b, cox_bound).value {
                Some(dc) => ensure(de <= dc, || format!("n={n} ({a}, {b}): d_exotic {de} > d_Cox {dc}")).into(),
                None => Outcome::Uncertified,
            }
        });
    }
    t.report(Suite::Exotic, format!("ranks {ranks:?}, 100 seeded pairs of length <= 4 above rank 2, seed {}", scope.seed))
}

fn pingpong_suite(scope: &Scope) -> SuiteReport {
    let ranks = scope.ranks(Suite::Pingpong);
    let maxlen = scope.maxlen.unwrap_or(4);
    let tilde = GradingMode::OrientTilde;
    let mut items = Vec::new();
    for &n in &ranks {
        for w in reduced_words(n, maxlen) {
            for j in 1..=n {
                items.push((n, w.clone(), j));
            }
        }
    }
    let mut t = Tally::default();
    t.run(&items, |(n, w, j)| {
        let n = *n;
        let y = psi(w, &projective(n, &tilde, *j)).expect("valid twist");
        let label = format!("n={n} Psi_({w}) P_{j}");
        let run = || -> Result<(), String> {
            let member = ping_pong_memberships(&y).map_err(|e| e.to_string())?;
            ensure(member.len() <= 1, || format!("{label}: in several sets {member:?}"))?;
            if w.is_empty() {
                for i in (1..=n).filter(|i| i != j) {
                    let plus = sigma(i, 1, &y).expect("valid");
                    let minus = sigma(i, -1, &y).expect("valid");
                    ensure(in_x_plus(&plus, i).unwrap_or(false), || format!("(1) Sigma_{i} P_{j} not in X_{i}^+"))?;
                    ensure(in_x_minus(&minus, i).unwrap_or(false), || format!("(1) Sigma_{i}^-1 P_{j} not in X_{i}^-"))?;
                }
            }
            for &(k, sign) in &member {
                for i in 1..=n {
                    if sign > 0 {
                        let z = sigma(i, 1, &y).expect("valid");
                        ensure(in_x_plus(&z, i).unwrap_or(false), || format!("(5) {label} in X_{k}^+, Sigma_{i} of it not in X_{i}^+"))?;
                        if i != k {
                            let z = sigma(i, -1, &y).expect("valid");
                            ensure(in_x_minus(&z, i).unwrap_or(false), || {
                                format!("(4) {label} in X_{k}^+, Sigma_{i}^-1 of it not in X_{i}^-")
                            })?;
                        }
                    } else {
                        let z = sigma(i, -1, &y).expect("valid");
                        ensure(in_x_minus(&z, i).unwrap_or(false), || format!("(6) {label} in X_{k}^-, Sigma_{i}^-1 of it not in X_{i}^-"))?;
                        if i != k {
                            let z = sigma(i, 1, &y).expect("valid");
                            ensure(in_x_plus(&z, i).unwrap_or(false), || format!("(3) {label} in X_{k}^-, Sigma_{i} of it not in X_{i}^+"))?;
                        }
                    }
                }
            }
            Ok(())
        };
        run().into()
    });
    t.report(Suite::Pingpong, format!("ranks {ranks:?}, all reduced words of length <= {maxlen} on every P_j"))
}

fn braid_words(n: usize, maxlen: usize) -> Vec<Word> {
    reduced_words(n - 1, maxlen)
}

fn tuples_differ(a: &SphericalTuple<BigRational>, b: &SphericalTuple<BigRational>) -> bool {
    a.entries.iter().zip(&b.entries).any(|(x, y)| !is_isomorphic_up_to_shift(&x.complex, &y.complex))
}

fn hurwitz_suite(scope: &Scope) -> SuiteReport {
    let ranks = scope.ranks(Suite::Hurwitz);
    let maxlen = scope.maxlen.unwrap_or(3);
    let mut t = Tally::default();
    for &n in &ranks {
        let base = base_tuple::<BigRational>(n);
        let braids = braid_words(n, maxlen);
        let tuples: Vec<Result<SphericalTuple<BigRational>, String>> = braids
            .par_iter()
            .map(|b| {
                let mut cur = base.clone();
                for &l in b.letters() {
                    cur = hurwitz_spherical(l, &cur).map_err(|e| e.to_string())?;
                }
                Ok(cur)
            })
            .collect();
        let checks: Vec<Outcome> = braids
            .par_iter()
            .zip(&tuples)
            .map(|(b, tup)| {
                let run = || -> Result<(), String> {
                    let tup = tup.as_ref().map_err(|e| format!("n={n} braid {b}: {e}"))?;
                    ensure(tup.product() == Word::gamma(n), || format!("n={n} braid {b}: product changed"))?;
                    ensure(is_o_spherical(tup).unwrap_or(false), || format!("n={n} braid {b}: not o-spherical"))?;
                    tup.check_pairing().map_err(|e| format!("n={n} braid {b}: {e}"))?;
                    if !b.is_empty() {
                        ensure(tup.words() != base.words(), || format!("n={n} braid {b}: fixes the base words"))?;
                        ensure(tuples_differ(tup, &base), || format!("n={n} braid {b}: fixes the base complexes"))?;
                    }
                    Ok(())
                };
                run().into()
            })
            .collect();
        for o in checks {
            t.add(o);
        }
        let ok: Vec<(usize, &SphericalTuple<BigRational>)> =
            tuples.iter().enumerate().filter_map(|(k, r)| r.as_ref().ok().map(|x| (k, x))).collect();
        let pairs: Vec<(usize, usize)> = (0..ok.len()).flat_map(|a| (a + 1..ok.len()).map(move |b| (a, b))).collect();
        let distinct: Vec<Outcome> = pairs
            .par_iter()
            .filter_map(|&(a, b)| {
                let ((ka, ta), (kb, tb)) = (ok[a], ok[b]);
                if ta.words() == tb.words() {
                    let same = !tuples_differ(ta, tb);
                    return Some(
                        ensure(same, || format!("n={n}: braids {} and {} agree on words only", braids[ka], braids[kb])).into(),
                    );
                }
                let differ = tuples_differ(ta, tb);
                Some(ensure(differ, || format!("n={n}: braids {} and {} give isomorphic tuples", braids[ka], braids[kb])).into())
            })
            .collect();
        for o in distinct {
            t.add(o);
        }
    }
    t.report(Suite::Hurwitz, format!("ranks {ranks:?}, braid words of length <= {maxlen}"))
}

fn equiv_suite(scope: &Scope) -> SuiteReport {
    let ranks = scope.ranks(Suite::Equiv);
    let conj_for = |n: usize| scope.maxlen.unwrap_or(if n <= 2 { 2 } else { 1 });
    let mut t = Tally::default();
    for &n in &ranks {
        let conj = conj_for(n);
        let bessis = Bessis::new(n, scope.bound.max(2 * conj + 1));
        let refl = enumerate_reflections(n, 2 * conj + 1);
        let pairs: Vec<(&Word, &Word)> = refl.iter().flat_map(|a| refl.iter().map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
        t.run(&pairs, |(a, b)| match check_equiv::<BigRational>(a, b, &bessis) {
            Err(e) => Outcome::Fail(format!("n={n} ({a}, {b}): {e}")),
            Ok(r) if r.criteria.values().any(|d| *d == Decision::Unknown) => Outcome::Uncertified,
            Ok(r) => ensure(r.agree(), || {
                let (x, y) = r.first_discrepancy().expect("disagreement");
                format!("n={n} ({a}, {b}): items {x} and {y} disagree: {:?}", r.criteria)
            })
            .into(),
        });
    }
    t.report(Suite::Equiv, format!(
            "distinct reflection pairs, conjugator length <= {}",
            ranks.iter().map(|&n| format!("{} at n={n}", conj_for(n))).collect::<Vec<_>>().join(", ")
        ))
}

fn faithful_suite(scope: &Scope) -> SuiteReport {
    let ranks = scope.ranks(Suite::Faithful);
    let maxlen = scope.maxlen.unwrap_or(5);
    let tilde = GradingMode::OrientTilde;
    let mut items = Vec::new();
    for &n in &ranks {
        items.extend(reduced_words(n, maxlen).into_iter().filter(|w| !w.is_empty()).map(|w| (n, w)));
    }
    let mut t = Tally::default();
    t.run(&items, |(n, w)| {
        let g = C::generator(*n, tilde.clone());
        let y: C = psi_generator(w, *n, &tilde).expect("valid word");
        ensure(!is_isomorphic(&y, &g), || format!("n={n}: Psi_({w}) fixes the generator")).into()
    });
    t.report(Suite::Faithful, format!("ranks {ranks:?}, all nontrivial reduced words of length <= {maxlen}"))
}
