//! The σ-tube algebra `A = ⊕_{i,j} Hom_C(i, T(j))` with the Kleisli product
//! `f * g = F(g) ∘ f`, and the count of its simple blocks.
//!
//! Block sizes come from the trace form on the center: the central element
//! `w` with `tr_Z(L_w L_z) = tr_A(L_z)` for all central `z` equals
//! `Σ_b s_b² e_b`, so its eigenvalues on the center are the squared block
//! sizes. No root finding is involved.

use serde::Serialize;

use crate::exactnum::{Cyclotomic, ExactMatrix, Poly};
use crate::fusion::{CategorySpec, Label, Mor, Obj};
use crate::gluing::Gluing;

use super::{adjunction_maps, induced_half_braidings, premodular, CenterError, FormalObject, SigmaPair};

/// `Hom_C(i, T(j))` inside the algebra: basis vectors `offset..offset + dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TubeBlock {
    pub source: Label,
    pub target: Label,
    pub offset: usize,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct TubeAlgebra {
    pub sigma: Gluing,
    pub blocks: Vec<TubeBlock>,
    /// `F(e)` for every basis vector `e`, a σ-morphism `T(j) -> T(k)`.
    pub extensions: Vec<Mor>,
    pub unit: Vec<Cyclotomic>,
    pub pairs: Vec<SigmaPair>,
    rank: usize,
    owner: Vec<usize>,
}

impl TubeAlgebra {
    pub fn dim(&self) -> usize {
        self.extensions.len()
    }

    pub fn block(&self, i: Label, j: Label) -> &TubeBlock {
        &self.blocks[i * self.rank + j]
    }

    /// The block containing basis vector `b`.
    pub fn block_of(&self, b: usize) -> &TubeBlock {
        &self.blocks[self.owner[b]]
    }

    /// Basis vector `b` as a morphism `i -> T(j)`.
    pub fn basis_morphism(&self, spec: &CategorySpec, b: usize) -> Mor {
        let blk = *self.block_of(b);
        let mut m = Mor::zero(&Obj::simple(spec, blk.source), &self.pairs[blk.target].carrier);
        m.block_mut(blk.source).set(b - blk.offset, 0, Cyclotomic::one());
        m
    }

    /// Product of two basis vectors, as a coordinate vector.
    pub fn basis_product(&self, b1: usize, b2: usize) -> Vec<Cyclotomic> {
        let mut out = vec![Cyclotomic::zero(); self.dim()];
        let (k1, k2) = (*self.block_of(b1), *self.block_of(b2));
        if k1.target != k2.source {
            return out;
        }
        let tgt = *self.block(k1.source, k2.target);
        let m = self.extensions[b2].block(k1.source);
        for r in 0..tgt.dim {
            out[tgt.offset + r] = m.get(r, b1 - k1.offset).clone();
        }
        out
    }

    /// `u * v` for coordinate vectors.
    pub fn product(&self, u: &[Cyclotomic], v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let mut out = vec![Cyclotomic::zero(); self.dim()];
        for b2 in (0..self.dim()).filter(|&b| !v[b].is_zero()) {
            let k2 = *self.block_of(b2);
            for i in 0..self.rank {
                let k1 = *self.block(i, k2.source);
                let tgt = *self.block(i, k2.target);
                let m = self.extensions[b2].block(i);
                for b1 in (k1.offset..k1.offset + k1.dim).filter(|&b| !u[b].is_zero()) {
                    let s = &u[b1] * &v[b2];
                    for r in 0..tgt.dim {
                        let x = m.get(r, b1 - k1.offset);
                        if !x.is_zero() {
                            out[tgt.offset + r] = &out[tgt.offset + r] + &(x * &s);
                        }
                    }
                }
            }
        }
        out
    }

    /// Checks associativity on all basis triples and the two unit laws.
    ///
    /// `(a * b) * c = a * (b * c)` for every `a` says `F(c) ∘ F(b) = F(F(c) ∘ b)`,
    /// and the right side is linear in the coordinates of `b * c`, so the
    /// triple check reduces to one matrix identity per basis pair.
    pub fn check_laws(&self) -> Result<LawReport, CenterError> {
        let mut rep = LawReport::default();
        let n = self.dim();
        for b in 0..n {
            let kb = *self.block_of(b);
            for c in 0..n {
                let kc = *self.block_of(c);
                if kb.target != kc.source {
                    continue;
                }
                rep.associativity += 1;
                let lhs = self.extensions[c].after(&self.extensions[b])?;
                let bc = self.basis_product(b, c);
                let mut rhs = Mor::zero(lhs.src(), lhs.tgt());
                for (e, x) in bc.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    rhs = rhs.add(&self.extensions[e].scale(x))?;
                }
                if !lhs.same_as(&rhs) {
                    rep.violations.push(format!("associativity fails for basis pair ({b}, {c})"));
                }
            }
        }
        for b in 0..n {
            rep.unit += 2;
            let mut e = vec![Cyclotomic::zero(); n];
            e[b] = Cyclotomic::one();
            if self.product(&self.unit, &e) != e {
                rep.violations.push(format!("left unit law fails at {b}"));
            }
            if self.product(&e, &self.unit) != e {
                rep.violations.push(format!("right unit law fails at {b}"));
            }
        }
        Ok(rep)
    }

    /// A basis of the center, as coordinate vectors in `⊕_i Hom(i, T(i))`.
    pub fn center_basis(&self) -> Vec<Vec<Cyclotomic>> {
        let diag: Vec<TubeBlock> = (0..self.rank).map(|i| *self.block(i, i)).collect();
        let mut col_of = vec![usize::MAX; self.dim()];
        let mut unknowns = 0;
        for d in &diag {
            for b in d.offset..d.offset + d.dim {
                col_of[b] = unknowns;
                unknowns += 1;
            }
        }
        let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
        for b in 0..self.dim() {
            let kb = *self.block_of(b);
            let (i, j) = (kb.source, kb.target);
            let r_b = b - kb.offset;
            // z * b - b * z, coordinates in block (i, j)
            let mut eq = vec![vec![Cyclotomic::zero(); unknowns]; kb.dim];
            let fb = self.extensions[b].block(i);
            for c in diag[i].offset..diag[i].offset + diag[i].dim {
                for (r, row) in eq.iter_mut().enumerate() {
                    row[col_of[c]] = &row[col_of[c]] + fb.get(r, c - diag[i].offset);
                }
            }
            for c in diag[j].offset..diag[j].offset + diag[j].dim {
                let fc = self.extensions[c].block(i);
                for (r, row) in eq.iter_mut().enumerate() {
                    row[col_of[c]] = &row[col_of[c]] - fc.get(r, r_b);
                }
            }
            rows.extend(eq.into_iter().filter(|row| row.iter().any(|x| !x.is_zero())));
        }
        let null = if rows.is_empty() {
            (0..unknowns)
                .map(|u| (0..unknowns).map(|v| if u == v { Cyclotomic::one() } else { Cyclotomic::zero() }).collect())
                .collect()
        } else {
            ExactMatrix::from_rows(rows).expect("rectangular").nullspace()
        };
        null.into_iter()
            .map(|v| {
                let mut full = vec![Cyclotomic::zero(); self.dim()];
                for b in 0..self.dim() {
                    if col_of[b] != usize::MAX {
                        full[b] = v[col_of[b]].clone();
                    }
                }
                full
            })
            .collect()
    }

    /// `tr_A(L_z)`, the trace of left multiplication by a central element.
    fn left_trace(&self, z: &[Cyclotomic]) -> Cyclotomic {
        let mut t = Cyclotomic::zero();
        for b in 0..self.dim() {
            let kb = *self.block_of(b);
            let d = *self.block(kb.source, kb.source);
            let fb = self.extensions[b].block(kb.source);
            for c in d.offset..d.offset + d.dim {
                if !z[c].is_zero() {
                    t = &t + &(fb.get(b - kb.offset, c - d.offset) * &z[c]);
                }
            }
        }
        t
    }
}

#[derive(Clone, Debug, Default)]
pub struct LawReport {
    pub associativity: usize,
    pub unit: usize,
    pub violations: Vec<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Builds the σ-tube algebra from the induced pairs on every simple.
pub fn tube_algebra(spec: &CategorySpec, sigma: &Gluing) -> Result<TubeAlgebra, CenterError> {
    premodular(spec)?;
    let k = spec.rank();
    let mut pairs = Vec::with_capacity(k);
    let mut units = Vec::with_capacity(k);
    for j in 0..k {
        let (ind, pair) = induced_half_braidings(spec, sigma, &FormalObject::simple(spec, j))?;
        units.push(ind.unit_inclusion(spec));
        pairs.push(pair);
    }
    let mut blocks = Vec::with_capacity(k * k);
    let mut owner = Vec::new();
    let mut offset = 0;
    for i in 0..k {
        for j in 0..k {
            let dim = pairs[j].carrier.mult(i);
            owner.extend(std::iter::repeat_n(blocks.len(), dim));
            blocks.push(TubeBlock { source: i, target: j, offset, dim });
            offset += dim;
        }
    }
    let mut extensions = vec![None; offset];
    for j in 0..k {
        let x = FormalObject::simple(spec, j);
        for (t, pair) in pairs.iter().enumerate() {
            let adj = adjunction_maps(spec, &x, pair)?;
            let blk = blocks[j * k + t];
            for r in 0..blk.dim {
                let mut e = Mor::zero(&Obj::simple(spec, j), &pair.carrier);
                e.block_mut(j).set(r, 0, Cyclotomic::one());
                extensions[blk.offset + r] = Some(adj.forward(&e)?);
            }
        }
    }
    let extensions: Vec<Mor> = extensions.into_iter().map(|e| e.expect("every basis vector extended")).collect();
    let mut unit = vec![Cyclotomic::zero(); offset];
    for i in 0..k {
        let blk = blocks[i * k + i];
        let col = units[i].block(i);
        for r in 0..blk.dim {
            unit[blk.offset + r] = col.get(r, 0).clone();
        }
    }
    Ok(TubeAlgebra { sigma: sigma.clone(), blocks, extensions, unit, pairs, rank: k, owner })
}

/// Rank of the center category with its block structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CenterRank {
    pub rank: usize,
    /// Matrix block sizes, ascending.
    pub block_dims: Vec<usize>,
    pub total_dim: usize,
}

/// Number of simple objects of the center: the simple blocks of the tube algebra.
pub fn center_rank(spec: &CategorySpec, sigma: &Gluing) -> Result<CenterRank, CenterError> {
    let alg = tube_algebra(spec, sigma)?;
    rank_of(&alg)
}

/// Block decomposition of a constructed tube algebra.
pub fn rank_of(alg: &TubeAlgebra) -> Result<CenterRank, CenterError> {
    let z = alg.center_basis();
    let m = z.len();
    let total = alg.dim();
    // coordinates of products of central elements in the center basis
    let basis = ExactMatrix::from_columns(total, &z);
    let mut mult: Vec<Vec<Vec<Cyclotomic>>> = Vec::with_capacity(m);
    for zs in &z {
        let cols = z
            .iter()
            .map(|zt| basis.solve(&alg.product(zs, zt)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CenterError::NonSplit("the center is not closed under multiplication".into()))?;
        mult.push(cols);
    }
    // L_{z_s} on the center: column t is z_s z_t
    let lmat: Vec<ExactMatrix> = mult.iter().map(|cols| ExactMatrix::from_columns(m, cols)).collect();
    let gram = ExactMatrix::from_fn(m, m, |s, t| lmat[s].checked_mul(&lmat[t]).expect("square").trace());
    let traces: Vec<Cyclotomic> = z.iter().map(|zt| alg.left_trace(zt)).collect();
    let w = gram
        .solve(&traces)
        .map_err(|_| CenterError::NonSplit("the trace form on the center is degenerate".into()))?;
    let mut lw = ExactMatrix::zeros(m, m);
    for (s, ws) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        lw = lw.checked_add(&lmat[s].scale(ws)).expect("square");
    }
    let mut block_dims = Vec::new();
    let mut counted = 0;
    for size in 1.. {
        if size * size > total || counted == m {
            break;
        }
        let shifted = lw.checked_sub(&ExactMatrix::scalar(m, &Cyclotomic::from_int((size * size) as i64)))?;
        let mult = m - shifted.rank();
        block_dims.extend(std::iter::repeat_n(size, mult));
        counted += mult;
    }
    let squares: usize = block_dims.iter().map(|s| s * s).sum();
    if counted != m || squares != total {
        let charpoly = Poly::charpoly(&lw)?;
        return Err(CenterError::NonSplit(format!(
            "{m} central idempotents but block sizes {block_dims:?} cover {squares} of {total}; \
             the size element has characteristic polynomial {charpoly:?}"
        )));
    }
    Ok(CenterRank { rank: m, block_dims, total_dim: total })
}
