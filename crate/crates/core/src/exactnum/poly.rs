//! Univariate polynomials with cyclotomic coefficients.

use std::fmt;

use super::{Cyclotomic, ExactError, ExactMatrix};

/// Coefficients stored low degree first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Cyclotomic>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Cyclotomic>) -> Self {
        while coeffs.last().is_some_and(Cyclotomic::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::new(vec![c])
    }

    /// The monic linear polynomial `x - root`.
    pub fn linear(root: &Cyclotomic) -> Self {
        Self::new(vec![-root, Cyclotomic::one()])
    }

    pub fn x() -> Self {
        Self::new(vec![Cyclotomic::zero(), Cyclotomic::one()])
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Cyclotomic> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                Self::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Cyclotomic::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Cyclotomic::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Cyclotomic::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Quotient and remainder of Euclidean division.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self), ExactError> {
        let dl = d.leading().ok_or(ExactError::DivisionByZero)?;
        let dl_inv = dl.inv()?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![Cyclotomic::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] * &dl_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    let t = &c * dc;
                    rem[k + j] -= &t;
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(q), Self::new(rem)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::constant(Cyclotomic::one()), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::constant(Cyclotomic::one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            Some(l) => {
                let inv = l.inv().expect("nonzero");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Cyclotomic::from_int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Cyclotomic) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix.
    pub fn eval_matrix(&self, m: &ExactMatrix) -> ExactMatrix {
        let n = m.rows();
        let mut acc = ExactMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(m).expect("square matrix");
            acc = acc.checked_add(&ExactMatrix::scalar(n, c)).expect("same shape");
        }
        acc
    }

    /// Yun's square-free decomposition of a monic polynomial: entry `k`
    /// holds the product of the irreducible factors of multiplicity `k+1`.
    pub fn squarefree_decomposition(&self) -> Vec<Poly> {
        let f = self.monic();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let fp = f.derivative();
        let mut a = f.gcd(&fp);
        let mut b = f.divrem(&a).expect("gcd divides").0;
        let mut c = fp.divrem(&a).expect("gcd divides").0;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        loop {
            let g = b.gcd(&d);
            out.push(g.clone());
            b = b.divrem(&g).expect("divides").0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.divrem(&g).expect("divides").0;
            d = c.sub(&b.derivative());
            a = a.divrem(&g).map(|x| x.0).unwrap_or(a);
        }
        let _ = a;
        out
    }

    /// Characteristic polynomial `det(x I - m)` via Hessenberg reduction.
    pub fn charpoly(m: &ExactMatrix) -> Result<Poly, ExactError> {
        if !m.is_square() {
            return Err(ExactError::DimensionMismatch("charpoly of non-square matrix".into()));
        }
        let n = m.rows();
        let mut h = m.clone();
        // Reduce to upper Hessenberg form by similarity transforms.
        for col in 0..n.saturating_sub(2) {
            let Some(p) = (col + 1..n).find(|&i| !h.get(i, col).is_zero()) else {
                continue;
            };
            if p != col + 1 {
                swap_rows(&mut h, p, col + 1);
                swap_cols(&mut h, p, col + 1);
            }
            let inv = h.get(col + 1, col).inv()?;
            for i in col + 2..n {
                let f = h.get(i, col) * &inv;
                if f.is_zero() {
                    continue;
                }
                // row_i -= f * row_{col+1}
                for j in 0..n {
                    let v = h.get(col + 1, j);
                    if !v.is_zero() {
                        let nv = h.get(i, j) - &(&f * v);
                        h.set(i, j, nv);
                    }
                }
                // col_{col+1} += f * col_i
                for r in 0..n {
                    let v = h.get(r, i);
                    if !v.is_zero() {
                        let nv = h.get(r, col + 1) + &(&f * v);
                        h.set(r, col + 1, nv);
                    }
                }
            }
        }
        // Recurrence on leading principal submatrices.
        let mut ps: Vec<Poly> = vec![Poly::constant(Cyclotomic::one())];
        for k in 0..n {
            let xk = Poly::new(vec![-h.get(k, k), Cyclotomic::one()]);
            let mut pk = xk.mul(&ps[k]);
            let mut prod = Cyclotomic::one();
            for i in (0..k).rev() {
                prod = &prod * h.get(i + 1, i);
                if prod.is_zero() {
                    break;
                }
                let coef = &prod * h.get(i, k);
                if !coef.is_zero() {
                    pk = pk.sub(&ps[i].scale(&coef));
                }
            }
            ps.push(pk);
        }
        Ok(ps.pop().expect("nonempty"))
    }

    /// Complex roots of the float image (Aberth iteration); a numerical
    /// assist only, never used as an exact answer.
    pub fn complex_roots(&self) -> Vec<num_complex::Complex64> {
        use num_complex::Complex64;
        let Some(deg) = self.degree() else { return Vec::new() };
        if deg == 0 {
            return Vec::new();
        }
        let c: Vec<Complex64> = self.monic().coeffs.iter().map(Cyclotomic::to_complex).collect();
        let eval = |z: Complex64| -> (Complex64, Complex64) {
            let mut p = Complex64::new(0.0, 0.0);
            let mut dp = Complex64::new(0.0, 0.0);
            for a in c.iter().rev() {
                dp = dp * z + p;
                p = p * z + a;
            }
            (p, dp)
        };
        let radius = 1.0 + c.iter().take(deg).map(|a| a.norm()).fold(0.0, f64::max);
        let mut z: Vec<Complex64> = (0..deg)
            .map(|k| Complex64::from_polar(radius * 0.7, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / deg as f64))
            .collect();
        for _ in 0..500 {
            let mut moved = 0.0f64;
            for i in 0..deg {
                let (p, dp) = eval(z[i]);
                if p.norm() == 0.0 {
                    continue;
                }
                let ratio = p / dp;
                let s: Complex64 = (0..deg).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
                let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
                z[i] -= w;
                moved = moved.max(w.norm());
            }
            if moved < 1e-15 {
                break;
            }
        }
        z
    }
}

fn swap_rows(m: &mut ExactMatrix, a: usize, b: usize) {
    for j in 0..m.cols() {
        let t = m.get(a, j).clone();
        m.set(a, j, m.get(b, j).clone());
        m.set(b, j, t);
    }
}

fn swap_cols(m: &mut ExactMatrix, a: usize, b: usize) {
    for i in 0..m.rows() {
        let t = m.get(i, a).clone();
        m.set(i, a, m.get(i, b).clone());
        m.set(i, b, t);
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})x^{i}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
