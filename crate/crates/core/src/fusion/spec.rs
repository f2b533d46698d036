//! In-memory skeletal category data.

use std::collections::BTreeMap;

use crate::exactnum::{Cyclotomic, ExactMatrix};

use super::FusionError;

/// Index of a simple object.
pub type Label = usize;

/// Recoupling block `F^{abc}_d`: rows are `(e, alpha, beta)` for the tree
/// `((a b)_e c)_d`, columns are `(f, mu, nu)` for `(a (b c)_f)_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FBlock {
    pub rows: Vec<(Label, usize, usize)>,
    pub cols: Vec<(Label, usize, usize)>,
    pub matrix: ExactMatrix,
}

impl FBlock {
    pub fn row_index(&self, key: (Label, usize, usize)) -> Option<usize> {
        self.rows.iter().position(|r| *r == key)
    }

    pub fn col_index(&self, key: (Label, usize, usize)) -> Option<usize> {
        self.cols.iter().position(|c| *c == key)
    }
}

/// One recorded F entry: `F^{abc}_d[(e, alpha, beta), (f, mu, nu)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FEntry {
    pub a: Label,
    pub b: Label,
    pub c: Label,
    pub d: Label,
    pub e: Label,
    pub f: Label,
    pub mult: [usize; 4],
    pub value: Cyclotomic,
}

/// One recorded R entry: `R^{ab}_c[mu][nu]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct REntry {
    pub a: Label,
    pub b: Label,
    pub c: Label,
    pub mult: [usize; 2],
    pub value: Cyclotomic,
}

/// Raw category data as read from disk, before blocks are assembled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawSpec {
    pub name: String,
    pub labels: Vec<String>,
    pub unit: Label,
    pub dual: Vec<Label>,
    pub fusion: Vec<(Label, Label, Label, usize)>,
    pub f: Vec<FEntry>,
    pub r: Option<Vec<REntry>>,
    pub pivotal: Vec<Cyclotomic>,
}

/// A skeletal (pre)modular category: fusion rules, associator, braiding and
/// pivotal coefficients, all exact.
#[derive(Clone, Debug)]
pub struct CategorySpec {
    name: String,
    labels: Vec<String>,
    unit: Label,
    dual: Vec<Label>,
    n: Vec<usize>,
    f: BTreeMap<(Label, Label, Label, Label), FBlock>,
    r: Option<BTreeMap<(Label, Label, Label), ExactMatrix>>,
    r_inv: Option<BTreeMap<(Label, Label, Label), ExactMatrix>>,
    pivotal: Vec<Cyclotomic>,
    order: u32,
    raw: RawSpec,
}

impl CategorySpec {
    /// Assembles blocks from raw data. Structural problems (bad labels,
    /// malformed dual table) are reported later by `validate_structure`;
    /// this only fails on data that cannot be placed at all.
    pub fn from_raw(raw: RawSpec) -> Result<Self, FusionError> {
        let k = raw.labels.len();
        if k == 0 {
            return Err(FusionError::Malformed("no labels".into()));
        }
        let check = |l: Label, what: &str| -> Result<(), FusionError> {
            if l >= k {
                Err(FusionError::UnknownLabel(format!("{what} refers to label index {l}")))
            } else {
                Ok(())
            }
        };
        check(raw.unit, "unit")?;
        if raw.dual.len() != k {
            return Err(FusionError::Malformed(format!(
                "dual table has {} entries for {} labels",
                raw.dual.len(),
                k
            )));
        }
        for &d in &raw.dual {
            check(d, "dual table")?;
        }
        if raw.pivotal.len() != k {
            return Err(FusionError::Malformed("pivotal table length".into()));
        }
        let mut n = vec![0usize; k * k * k];
        for &(a, b, c, m) in &raw.fusion {
            check(a, "fusion")?;
            check(b, "fusion")?;
            check(c, "fusion")?;
            n[(a * k + b) * k + c] = m;
        }
        let mut spec = CategorySpec {
            name: raw.name.clone(),
            labels: raw.labels.clone(),
            unit: raw.unit,
            dual: raw.dual.clone(),
            n,
            f: BTreeMap::new(),
            r: None,
            r_inv: None,
            pivotal: raw.pivotal.clone(),
            order: 1,
            raw: raw.clone(),
        };
        spec.assemble_f()?;
        if let Some(rs) = &raw.r {
            spec.assemble_r(rs)?;
        }
        let mut order = 1u32;
        let mut note = |c: &Cyclotomic| {
            order = num_integer::lcm(order, c.order());
        };
        for b in spec.f.values() {
            for i in 0..b.matrix.rows() {
                for j in 0..b.matrix.cols() {
                    note(b.matrix.get(i, j));
                }
            }
        }
        if let Some(r) = &spec.r {
            for m in r.values() {
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        note(m.get(i, j));
                    }
                }
            }
        }
        for p in &spec.pivotal {
            note(p);
        }
        spec.order = order;
        Ok(spec)
    }

    fn assemble_f(&mut self) -> Result<(), FusionError> {
        let k = self.rank();
        let mut given: BTreeMap<(Label, Label, Label, Label), Vec<&FEntry>> = BTreeMap::new();
        let raw_f = self.raw.f.clone();
        for e in &raw_f {
            for l in [e.a, e.b, e.c, e.d, e.e, e.f] {
                if l >= k {
                    return Err(FusionError::UnknownLabel(format!("F entry refers to label index {l}")));
                }
            }
            given.entry((e.a, e.b, e.c, e.d)).or_default().push(e);
        }
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    for d in 0..k {
                        let rows = self.left_channels(a, b, c, d);
                        let cols = self.right_channels(a, b, c, d);
                        if rows.is_empty() && cols.is_empty() {
                            continue;
                        }
                        let trivial = a == self.unit || b == self.unit || c == self.unit;
                        let mut m = ExactMatrix::zeros(rows.len(), cols.len());
                        let entries = given.remove(&(a, b, c, d)).unwrap_or_default();
                        if trivial && entries.is_empty() && rows.len() == cols.len() {
                            m = ExactMatrix::identity(rows.len());
                        } else {
                            let mut seen = vec![false; rows.len() * cols.len()];
                            for e in entries {
                                let rk = (e.e, e.mult[0], e.mult[1]);
                                let ck = (e.f, e.mult[2], e.mult[3]);
                                let (Some(i), Some(j)) = (
                                    rows.iter().position(|r| *r == rk),
                                    cols.iter().position(|c| *c == ck),
                                ) else {
                                    return Err(FusionError::Malformed(format!(
                                        "F entry {} for non-admissible channel",
                                        self.f_name(a, b, c, d, e.e, e.f)
                                    )));
                                };
                                m.set(i, j, e.value.clone());
                                seen[i * cols.len() + j] = true;
                            }
                            if let Some(pos) = seen.iter().position(|s| !s) {
                                let (e, _, _) = rows[pos / cols.len()];
                                let (f, _, _) = cols[pos % cols.len()];
                                return Err(FusionError::IncompleteData(format!(
                                    "missing F entry {}",
                                    self.f_name(a, b, c, d, e, f)
                                )));
                            }
                        }
                        self.f.insert((a, b, c, d), FBlock { rows, cols, matrix: m });
                    }
                }
            }
        }
        if let Some((key, _)) = given.into_iter().next() {
            return Err(FusionError::Malformed(format!(
                "F entries given for empty block {}",
                self.f_name(key.0, key.1, key.2, key.3, key.0, key.0)
            )));
        }
        Ok(())
    }

    fn assemble_r(&mut self, rs: &[REntry]) -> Result<(), FusionError> {
        let k = self.rank();
        let mut r = BTreeMap::new();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let m = self.n(a, b, c);
                    if m > 0 {
                        r.insert((a, b, c), (ExactMatrix::zeros(m, m), vec![false; m * m]));
                    }
                }
            }
        }
        for e in rs {
            for l in [e.a, e.b, e.c] {
                if l >= k {
                    return Err(FusionError::UnknownLabel(format!("R entry refers to label index {l}")));
                }
            }
            let Some((m, seen)) = r.get_mut(&(e.a, e.b, e.c)) else {
                return Err(FusionError::Malformed(format!(
                    "R entry R^{{{} {}}}_{} for non-admissible channel",
                    self.labels[e.a], self.labels[e.b], self.labels[e.c]
                )));
            };
            let size = m.rows();
            if e.mult[0] >= size || e.mult[1] >= size {
                return Err(FusionError::Malformed("R multiplicity index out of range".into()));
            }
            m.set(e.mult[0], e.mult[1], e.value.clone());
            seen[e.mult[0] * size + e.mult[1]] = true;
        }
        let mut out = BTreeMap::new();
        let mut inv = BTreeMap::new();
        for ((a, b, c), (m, seen)) in r {
            if seen.iter().any(|s| !s) {
                return Err(FusionError::IncompleteData(format!(
                    "missing R entry R^{{{} {}}}_{}",
                    self.labels[a], self.labels[b], self.labels[c]
                )));
            }
            let mi = m.inverse().map_err(|_| {
                FusionError::Malformed(format!(
                    "R^{{{} {}}}_{} is not invertible",
                    self.labels[a], self.labels[b], self.labels[c]
                ))
            })?;
            inv.insert((a, b, c), mi);
            out.insert((a, b, c), m);
        }
        self.r = Some(out);
        self.r_inv = Some(inv);
        Ok(())
    }

    fn f_name(&self, a: Label, b: Label, c: Label, d: Label, e: Label, f: Label) -> String {
        let l = |x: Label| self.labels.get(x).cloned().unwrap_or_else(|| x.to_string());
        format!("F^{{{} {} {}}}_{}[{}, {}]", l(a), l(b), l(c), l(d), l(e), l(f))
    }

    /// Channels `(e, alpha, beta)` of the tree `((a b)_e c)_d`.
    pub fn left_channels(&self, a: Label, b: Label, c: Label, d: Label) -> Vec<(Label, usize, usize)> {
        let mut out = Vec::new();
        for e in 0..self.rank() {
            for al in 0..self.n(a, b, e) {
                for be in 0..self.n(e, c, d) {
                    out.push((e, al, be));
                }
            }
        }
        out
    }

    /// Channels `(f, mu, nu)` of the tree `(a (b c)_f)_d`.
    pub fn right_channels(&self, a: Label, b: Label, c: Label, d: Label) -> Vec<(Label, usize, usize)> {
        let mut out = Vec::new();
        for f in 0..self.rank() {
            for mu in 0..self.n(b, c, f) {
                for nu in 0..self.n(a, f, d) {
                    out.push((f, mu, nu));
                }
            }
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_name(&self, l: Label) -> &str {
        &self.labels[l]
    }

    pub fn label_index(&self, name: &str) -> Option<Label> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn unit(&self) -> Label {
        self.unit
    }

    pub fn dual(&self, a: Label) -> Label {
        self.dual[a]
    }

    /// Fusion multiplicity `N_{ab}^c`.
    pub fn n(&self, a: Label, b: Label, c: Label) -> usize {
        let k = self.rank();
        self.n[(a * k + b) * k + c]
    }

    pub fn f_block(&self, a: Label, b: Label, c: Label, d: Label) -> Option<&FBlock> {
        self.f.get(&(a, b, c, d))
    }

    pub fn f_blocks(&self) -> impl Iterator<Item = (&(Label, Label, Label, Label), &FBlock)> {
        self.f.iter()
    }

    pub fn has_braiding(&self) -> bool {
        self.r.is_some()
    }

    /// `R^{ab}_c` as a matrix over multiplicity indices.
    pub fn r_block(&self, a: Label, b: Label, c: Label) -> Option<&ExactMatrix> {
        self.r.as_ref()?.get(&(a, b, c))
    }

    pub fn r_inv_block(&self, a: Label, b: Label, c: Label) -> Option<&ExactMatrix> {
        self.r_inv.as_ref()?.get(&(a, b, c))
    }

    pub fn pivotal(&self, a: Label) -> &Cyclotomic {
        &self.pivotal[a]
    }

    /// The least common order of every stored scalar.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn raw(&self) -> &RawSpec {
        &self.raw
    }

    /// Simple labels `c` with `N_{ab}^c > 0`.
    pub fn fusion_channels(&self, a: Label, b: Label) -> Vec<Label> {
        (0..self.rank()).filter(|&c| self.n(a, b, c) > 0).collect()
    }

    /// The scalar `F^{a a* a}_a[1, 1]` entering the left duality maps.
    pub fn f_unit_loop(&self, a: Label) -> Cyclotomic {
        let ad = self.dual(a);
        let u = self.unit;
        self.f_block(a, ad, a, a)
            .and_then(|b| {
                let i = b.row_index((u, 0, 0))?;
                let j = b.col_index((u, 0, 0))?;
                Some(b.matrix.get(i, j).clone())
            })
            .unwrap_or_else(Cyclotomic::zero)
    }
}

impl PartialEq for CategorySpec {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.labels == other.labels
            && self.unit == other.unit
            && self.dual == other.dual
            && self.n == other.n
            && self.f == other.f
            && self.r == other.r
            && self.pivotal == other.pivotal
    }
}
