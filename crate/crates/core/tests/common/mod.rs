//! Helpers and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use genuscenter::catalog;
use genuscenter::center::TubeAlgebra;
use genuscenter::exactnum::{Cyclotomic, ExactMatrix};
use genuscenter::fusion::{Calculus, CategorySpec, Label, Mor, Obj};
use genuscenter::gluing::Gluing;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn spec(key: &str) -> CategorySpec {
    catalog::builtin(key).unwrap()
}

pub fn all_specs() -> Vec<(&'static str, CategorySpec)> {
    catalog::keys().into_iter().map(|k| (k, spec(k))).collect()
}

pub fn sigma(text: &str) -> Gluing {
    Gluing::parse(text).unwrap()
}

pub fn random_mor(src: &Obj, tgt: &Obj, rng: &mut ChaCha8Rng) -> Mor {
    let mut m = Mor::zero(src, tgt);
    for c in 0..src.mults().len() {
        let b = m.block_mut(c);
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                b.set(i, j, Cyclotomic::from_int(rng.gen_range(-4..=4)));
            }
        }
    }
    m
}

/// The classical tube algebra `⊕_{i,j,a} Hom(a ⊗ i, j ⊗ a)`, built directly from
/// the fusion data with stacking of tubes as product.
pub struct ClassicalTube {
    /// `(i, j, a, charge, row, col)` per basis vector.
    pub basis: Vec<(Label, Label, Label, Label, usize, usize)>,
    pub table: Vec<Vec<Vec<Cyclotomic>>>,
}

pub fn classical_tube(s: &CategorySpec) -> ClassicalTube {
    let calc = Calculus::new(s);
    let k = s.rank();
    let mut basis = Vec::new();
    for i in 0..k {
        for j in 0..k {
            for a in 0..k {
                let src = calc.tensor(&calc.simple(a), &calc.simple(i));
                let tgt = calc.tensor(&calc.simple(j), &calc.simple(a));
                for d in 0..k {
                    for r in 0..tgt.mult(d) {
                        for c in 0..src.mult(d) {
                            basis.push((i, j, a, d, r, c));
                        }
                    }
                }
            }
        }
    }
    let as_mor = |&(i, j, a, d, r, c): &(Label, Label, Label, Label, usize, usize)| {
        let src = calc.tensor(&calc.simple(a), &calc.simple(i));
        let tgt = calc.tensor(&calc.simple(j), &calc.simple(a));
        let mut m = Mor::zero(&src, &tgt);
        m.block_mut(d).set(r, c, Cyclotomic::one());
        m
    };
    let n = basis.len();
    let mut table = vec![vec![vec![Cyclotomic::zero(); n]; n]; n];
    for (p, bf) in basis.iter().enumerate() {
        for (q, bg) in basis.iter().enumerate() {
            // f: a i -> j a, then g: b j -> l b
            let (i, j, a) = (bf.0, bf.1, bf.2);
            let (j2, l, b) = (bg.0, bg.1, bg.2);
            if j != j2 {
                continue;
            }
            let (f, g) = (as_mor(bf), as_mor(bg));
            let (oa, ob, oi, oj, ol) = (calc.simple(a), calc.simple(b), calc.simple(i), calc.simple(j), calc.simple(l));
            for c in s.fusion_channels(b, a) {
                for mu in 0..s.n(b, a, c) {
                    let prod = Mor::chain(&[
                        calc.right_id(&calc.split(b, a, c, mu), &oi),
                        calc.assoc(&ob, &oa, &oi),
                        calc.left_id(&ob, &f),
                        calc.assoc_inv(&ob, &oj, &oa),
                        calc.right_id(&g, &oa),
                        calc.assoc(&ol, &ob, &oa),
                        calc.left_id(&ol, &calc.merge(b, a, c, mu)),
                    ])
                    .unwrap();
                    for d in 0..k {
                        let blk = prod.block(d);
                        for r in 0..blk.rows() {
                            for cc in 0..blk.cols() {
                                let v = blk.get(r, cc);
                                if v.is_zero() {
                                    continue;
                                }
                                let t = basis.iter().position(|&e| e == (i, l, c, d, r, cc)).unwrap();
                                table[p][q][t] = &table[p][q][t] + v;
                            }
                        }
                    }
                }
            }
        }
    }
    ClassicalTube { basis, table }
}

/// Dimension of the center of an algebra given by structure constants.
pub fn center_dim(table: &[Vec<Vec<Cyclotomic>>]) -> usize {
    let n = table.len();
    let mut rows = Vec::new();
    for b in 0..n {
        for t in 0..n {
            let row: Vec<Cyclotomic> = (0..n).map(|u| &table[u][b][t] - &table[b][u][t]).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return n;
    }
    ExactMatrix::from_rows(rows).unwrap().nullspace().len()
}

pub fn structure_table(alg: &TubeAlgebra) -> Vec<Vec<Vec<Cyclotomic>>> {
    let n = alg.dim();
    (0..n).map(|p| (0..n).map(|q| alg.basis_product(p, q)).collect()).collect()
}

/// Left-regular representation: the number of simple blocks is the dimension
/// of the matrices commuting with every `L_b` inside the span of the `L_b`.
pub fn left_regular_rank(alg: &TubeAlgebra) -> usize {
    let t = structure_table(alg);
    let n = alg.dim();
    let lmat = |b: usize| ExactMatrix::from_fn(n, n, |w, v| t[b][v][w].clone());
    let ls: Vec<ExactMatrix> = (0..n).map(lmat).collect();
    // z = Σ c_u L_u commuting with every L_b
    let mut rows = Vec::new();
    for lb in &ls {
        let comms: Vec<ExactMatrix> = ls
            .iter()
            .map(|lu| lu.checked_mul(lb).unwrap().checked_sub(&lb.checked_mul(lu).unwrap()).unwrap())
            .collect();
        for w in 0..n {
            for v in 0..n {
                let row: Vec<Cyclotomic> = comms.iter().map(|c| c.get(w, v).clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return n;
    }
    ExactMatrix::from_rows(rows).unwrap().nullspace().len()
}
