//! Morphism spaces in the homotopy category.
//!
//! `Hom(X, Y[p]<m>)` is the degree-`p` cohomology of the hom complex whose
//! chains `C^p(m)` are spanned by triples `(S, T, b)` with `T` in degree
//! `deg S + p` and `b` a basis path of `e_S A e_T` of degree
//! `shift T + m - shift S`.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{ChainMap, Complex, ComplexError};
use crate::algebra::{hom_basis, mul_basis, BasisPath, Element};
use crate::linalg::{self, Echelon, SparseVec};
use crate::scalar::Scalar;

struct ChainBasis {
    items: Vec<(usize, usize, BasisPath)>,
    index: HashMap<(usize, usize, BasisPath), usize>,
}

impl ChainBasis {
    fn len(&self) -> usize {
        self.items.len()
    }
}

/// Summand positions of a complex grouped by homological degree.
fn by_degree<S: Scalar>(c: &Complex<S>) -> BTreeMap<i64, Vec<usize>> {
    let mut out: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for s in c.summands() {
        out.entry(s.degree).or_default().push(s.uid);
    }
    out
}

struct HomContext<'a, S> {
    x: &'a Complex<S>,
    y: &'a Complex<S>,
    x_in: Vec<Vec<(usize, &'a Element<S>)>>,
    y_deg: BTreeMap<i64, Vec<usize>>,
}

impl<'a, S: Scalar> HomContext<'a, S> {
    fn new(x: &'a Complex<S>, y: &'a Complex<S>) -> Result<Self, ComplexError> {
        x.check_compatible(y)?;
        Ok(HomContext { x, y, x_in: x.incoming(), y_deg: by_degree(y) })
    }

    fn p_range(&self) -> Option<(i64, i64)> {
        let (xl, xh) = self.x.degree_range()?;
        let (yl, yh) = self.y.degree_range()?;
        Some((yl - xh, yh - xl))
    }

    fn basis(&self, p: i64, m: i64) -> ChainBasis {
        let mode = self.x.mode();
        let mut items = Vec::new();
        for s in self.x.summands() {
            let Some(ts) = self.y_deg.get(&(s.degree + p)) else { continue };
            for &t in ts {
                let ty = self.y.summand(t);
                let want = ty.shift + m - s.shift;
                for b in hom_basis(s.vertex, ty.vertex) {
                    if mode.degree(&b) == want {
                        items.push((s.uid, t, b));
                    }
                }
            }
        }
        let index = items.iter().enumerate().map(|(k, it)| (*it, k)).collect();
        ChainBasis { items, index }
    }

    /// Rows of `D^p f = f d_Y - (-1)^p d_X f` on the basis of `C^p`.
    fn differential(&self, p: i64, src: &ChainBasis, tgt: &ChainBasis) -> Vec<SparseVec<S>> {
        let sign = if p.rem_euclid(2) == 1 { S::one() } else { -S::one() };
        src.items
            .iter()
            .map(|&(s, t, b)| {
                let mut terms = Vec::new();
                for (t2, a) in self.y.out_entries(t) {
                    for (q, c) in a.terms() {
                        if let Some(r) = mul_basis(b, *q) {
                            let k = tgt.index[&(s, t2, r)];
                            terms.push((k, c.clone()));
                        }
                    }
                }
                for &(s0, a) in &self.x_in[s] {
                    for (q, c) in a.terms() {
                        if let Some(r) = mul_basis(*q, b) {
                            let k = tgt.index[&(s0, t, r)];
                            terms.push((k, sign.clone() * c.clone()));
                        }
                    }
                }
                linalg::sparse_from_pairs(terms)
            })
            .collect()
    }

    fn dims(&self, m: i64) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        let Some((lo, hi)) = self.p_range() else { return out };
        let bases: BTreeMap<i64, ChainBasis> = (lo - 1..=hi + 1).map(|p| (p, self.basis(p, m))).collect();
        let mut ranks = BTreeMap::new();
        for p in lo - 1..=hi {
            let (src, tgt) = (&bases[&p], &bases[&(p + 1)]);
            let r = if src.len() == 0 || tgt.len() == 0 { 0 } else { linalg::rank(self.differential(p, src, tgt)) };
            ranks.insert(p, r);
        }
        for p in lo..=hi {
            let d = bases[&p].len() - ranks[&p] - ranks[&(p - 1)];
            if d > 0 {
                out.insert(p, d);
            }
        }
        out
    }

    fn vector_of(&self, f: &ChainMap<S>, basis: &ChainBasis) -> Option<SparseVec<S>> {
        let mut terms = Vec::new();
        for (s, t, e) in f.entries() {
            for (q, c) in e.terms() {
                terms.push((*basis.index.get(&(s, t, *q))?, c.clone()));
            }
        }
        Some(linalg::sparse_from_pairs(terms))
    }

    fn map_of(&self, v: &SparseVec<S>, basis: &ChainBasis, p: i64, m: i64) -> ChainMap<S> {
        let mut entries: BTreeMap<(usize, usize), Element<S>> = BTreeMap::new();
        for (k, c) in v {
            let (s, t, b) = basis.items[*k];
            let slot = entries.entry((s, t)).or_insert_with(Element::zero);
            *slot = slot.add(&Element::term(b, c.clone()));
        }
        ChainMap::new_unchecked(self.x.clone(), self.y.clone(), p, m, entries)
    }
}

/// Nonzero `dim Hom(X, Y[p]<m>)` for fixed `m`, keyed by `p`.
pub fn hom_dims<S: Scalar>(x: &Complex<S>, y: &Complex<S>, m: i64) -> Result<BTreeMap<i64, usize>, ComplexError> {
    Ok(HomContext::new(x, y)?.dims(m))
}

/// `sum_p dim Hom(X, Y[p]<m>)`.
pub fn total_hom<S: Scalar>(x: &Complex<S>, y: &Complex<S>, m: i64) -> Result<usize, ComplexError> {
    Ok(hom_dims(x, y, m)?.values().sum())
}

#[derive(Debug, Clone)]
pub struct HomSpace<S> {
    pub dim: usize,
    pub basis: Vec<ChainMap<S>>,
}

/// A basis of `Hom(X, Y[hom]<int>)` given by chain-map representatives.
pub fn hom_space<S: Scalar>(x: &Complex<S>, y: &Complex<S>, hom: i64, int: i64) -> Result<HomSpace<S>, ComplexError> {
    let ctx = HomContext::new(x, y)?;
    let here = ctx.basis(hom, int);
    if here.len() == 0 {
        return Ok(HomSpace { dim: 0, basis: Vec::new() });
    }
    let next = ctx.basis(hom + 1, int);
    let prev = ctx.basis(hom - 1, int);
    let cycles = if next.len() == 0 {
        (0..here.len()).map(|k| vec![(k, S::one())]).collect()
    } else {
        linalg::left_kernel(&ctx.differential(hom, &here, &next), next.len())
    };
    let bounds = if prev.len() == 0 { Vec::new() } else { ctx.differential(hom - 1, &prev, &here) };
    let keep = linalg::quotient_basis(&bounds, &cycles);
    let basis: Vec<ChainMap<S>> = keep.iter().map(|&k| ctx.map_of(&cycles[k], &here, hom, int)).collect();
    Ok(HomSpace { dim: basis.len(), basis })
}

/// Whether a chain map is zero in the homotopy category.
pub fn is_null_homotopic<S: Scalar>(f: &ChainMap<S>) -> Result<bool, ComplexError> {
    let ctx = HomContext::new(&f.source, &f.target)?;
    let (p, m) = (f.hom_offset, f.int_offset);
    let here = ctx.basis(p, m);
    let v = ctx
        .vector_of(f, &here)
        .ok_or_else(|| ComplexError::InvalidChainMap("entry outside the hom complex".into()))?;
    let prev = ctx.basis(p - 1, m);
    let mut ech = Echelon::new();
    if prev.len() > 0 {
        for row in ctx.differential(p - 1, &prev, &here) {
            ech.insert(row);
        }
    }
    Ok(ech.reduce(v).is_empty())
}

/// Dimensions of `Hom(X, Y[k]<m>)` over a bounding box outside of which they vanish.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomTable {
    pub hom_range: Option<(i64, i64)>,
    pub int_range: Option<(i64, i64)>,
    pub dims: BTreeMap<(i64, i64), usize>,
}

impl HomTable {
    pub fn get(&self, k: i64, m: i64) -> usize {
        self.dims.get(&(k, m)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    /// `sum_k dim Hom(X, Y[k]<m>)`.
    pub fn total_at_int(&self, m: i64) -> usize {
        self.dims.iter().filter(|((_, mm), _)| *mm == m).map(|(_, d)| d).sum()
    }

    /// Internal shifts carrying a nonzero morphism.
    pub fn support_ints(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.dims.keys().map(|&(_, m)| m).collect();
        v.dedup();
        v.sort();
        v.dedup();
        v
    }
}

pub fn hom_table<S: Scalar>(x: &Complex<S>, y: &Complex<S>) -> Result<HomTable, ComplexError> {
    let ctx = HomContext::new(x, y)?;
    let (Some(hr), Some((xl, xh)), Some((yl, yh))) = (ctx.p_range(), x.shift_range(), y.shift_range()) else {
        return Ok(HomTable { hom_range: None, int_range: None, dims: BTreeMap::new() });
    };
    let ir = (xl - yh, xh - yl + x.mode().max_degree());
    let mut dims = BTreeMap::new();
    for m in ir.0..=ir.1 {
        for (p, d) in ctx.dims(m) {
            dims.insert((p, m), d);
        }
    }
    Ok(HomTable { hom_range: Some(hr), int_range: Some(ir), dims })
}

const ISO_SEED: u64 = 0x5eed_0150;
const ISO_TRIES: u64 = 4;

/// Decides `X = Y` in the homotopy category.
///
/// After minimizing, a morphism between minimal complexes is an isomorphism
/// iff its reduction modulo the radical is invertible on every block of
/// summands sharing `(degree, vertex, shift)`. A seeded random combination
/// of a basis of `Hom(X, Y)` is tested for this; a single basis vector is
/// tested exactly.
pub fn is_isomorphic<S: Scalar>(x: &Complex<S>, y: &Complex<S>) -> bool {
    if x.rank() != y.rank() || x.mode() != y.mode() {
        return false;
    }
    let (x, y) = (x.minimize(), y.minimize());
    if x.signature() != y.signature() {
        return false;
    }
    if x.is_zero() || x == y {
        return true;
    }
    let Ok(space) = hom_space(&x, &y, 0, 0) else { return false };
    if space.dim == 0 {
        return false;
    }
    let mut blocks: BTreeMap<(i64, usize, i64), (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for s in x.summands() {
        blocks.entry(s.class()).or_default().0.push(s.uid);
    }
    for s in y.summands() {
        blocks.entry(s.class()).or_default().1.push(s.uid);
    }
    let invertible = |f: &ChainMap<S>| {
        blocks.values().all(|(xs, ys)| {
            let m: Vec<Vec<S>> = xs
                .iter()
                .map(|&a| {
                    ys.iter()
                        .map(|&b| {
                            let v = x.summand(a).vertex;
                            f.entry(a, b).map(|e| e.idempotent_coeff(v)).unwrap_or_else(S::zero)
                        })
                        .collect()
                })
                .collect();
            linalg::is_invertible(&m)
        })
    };
    if space.dim == 1 {
        return invertible(&space.basis[0]);
    }
    for attempt in 0..ISO_TRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(ISO_SEED + attempt);
        let mut acc: BTreeMap<(usize, usize), Element<S>> = BTreeMap::new();
        for f in &space.basis {
            let c = S::from_int(rng.gen_range(1..=1_000_000));
            for (s, t, e) in f.entries() {
                let slot = acc.entry((s, t)).or_insert_with(Element::zero);
                *slot = slot.add(&e.scale(&c));
            }
        }
        let combo = ChainMap::new_unchecked(x.clone(), y.clone(), 0, 0, acc);
        if invertible(&combo) {
            return true;
        }
    }
    false
}

/// `X = Y[k]` for some `k`.
pub fn is_isomorphic_up_to_shift<S: Scalar>(x: &Complex<S>, y: &Complex<S>) -> bool {
    let (x, y) = (x.minimize(), y.minimize());
    match (x.degree_range(), y.degree_range()) {
        (None, None) => x.rank() == y.rank() && x.mode() == y.mode(),
        (Some((xl, _)), Some((yl, _))) => is_isomorphic(&x, &y.shift(yl - xl, 0)),
        _ => false,
    }
}

/// Multiplicity of `E[k]` as a direct summand of `Z`, keyed by `k`, for an
/// indecomposable `E` with local endomorphism ring.
///
/// It is the rank of the pairing `(f, g) -> tr(g f)` between `Hom(E[k], Z)`
/// and `Hom(Z, E[k])`, where `tr` is the trace of the reduction modulo the
/// radical (this kills every non-invertible endomorphism of `E`).
pub fn multiplicities<S: Scalar>(e: &Complex<S>, z: &Complex<S>) -> Result<BTreeMap<i64, usize>, ComplexError> {
    e.check_compatible(z)?;
    let e = e.minimize();
    let mut out = BTreeMap::new();
    let (Some((el, eh)), Some((zl, zh))) = (e.degree_range(), z.degree_range()) else { return Ok(out) };
    for k in el - zh..=eh - zl {
        let ek = e.shift(k, 0);
        let into = hom_space(&ek, z, 0, 0)?;
        if into.dim == 0 {
            continue;
        }
        let back = hom_space(z, &ek, 0, 0)?;
        if back.dim == 0 {
            continue;
        }
        let rows: Vec<SparseVec<S>> = into
            .basis
            .iter()
            .map(|f| {
                let pairs = back.basis.iter().enumerate().map(|(j, g)| {
                    let comp = f.then(g).expect("composable maps");
                    (j, comp.scalar_trace())
                });
                linalg::sparse_from_pairs(pairs)
            })
            .collect();
        let r = linalg::rank(rows);
        if r > 0 {
            out.insert(k, r);
        }
    }
    Ok(out)
}
