//! Local operations on left-nested tensor words.
//!
//! A word `w = [x1, ..., xn]` stands for the object `((x1 x2) x3) ... xn`.
//! Applying a morphism `g: LN(U) -> LN(V)` at position `p` of `P ++ U ++ S`
//! regroups to `LN(P) ⊗ LN(U)`, applies `1 ⊗ g`, regroups back and then
//! tensors with the identity of each suffix letter.

use crate::fusion::{Calculus, CategorySpec, FusionError, Label, Mor, Obj};

pub struct WordOps<'a> {
    pub calc: Calculus<'a>,
}

impl<'a> WordOps<'a> {
    pub fn new(spec: &'a CategorySpec) -> Self {
        WordOps { calc: Calculus::new(spec) }
    }

    pub fn spec(&self) -> &'a CategorySpec {
        self.calc.spec
    }

    pub fn obj(&self, w: &[Label]) -> Obj {
        self.calc.word(w)
    }

    /// `LN(p ++ u) -> LN(p) ⊗ LN(u)`.
    pub fn split_word(&self, p: &[Label], u: &[Label]) -> Result<Mor, FusionError> {
        let c = &self.calc;
        let lp = c.word(p);
        if u.is_empty() {
            return c.runit(&lp).inverse();
        }
        if p.is_empty() {
            return c.lunit(&c.word(u)).inverse();
        }
        let mut full: Vec<Label> = p.to_vec();
        full.push(u[0]);
        // LN(p ++ [u0]) is literally LN(p) ⊗ u0.
        let mut acc = Mor::identity(&c.word(&full));
        for j in 1..u.len() {
            let uj = c.simple(u[j]);
            let step = c.right_id(&acc, &uj);
            let a = c.assoc(&lp, &c.word(&u[..j]), &uj);
            acc = a.after(&step)?;
        }
        Ok(acc)
    }

    /// `LN(p) ⊗ LN(u) -> LN(p ++ u)`, inverse of [`WordOps::split_word`].
    pub fn join_word(&self, p: &[Label], u: &[Label]) -> Result<Mor, FusionError> {
        let c = &self.calc;
        let lp = c.word(p);
        if u.is_empty() {
            return Ok(c.runit(&lp));
        }
        if p.is_empty() {
            return Ok(c.lunit(&c.word(u)));
        }
        let mut full: Vec<Label> = p.to_vec();
        full.push(u[0]);
        let mut acc = Mor::identity(&c.word(&full));
        for j in 1..u.len() {
            let uj = c.simple(u[j]);
            let a = c.assoc_inv(&lp, &c.word(&u[..j]), &uj);
            acc = c.right_id(&acc, &uj).after(&a)?;
        }
        Ok(acc)
    }

    /// Applies `g: LN(word[pos..pos+m]) -> LN(out)` inside `word`.
    pub fn local(&self, word: &[Label], pos: usize, m: usize, g: &Mor, out: &[Label]) -> Result<Mor, FusionError> {
        let c = &self.calc;
        if pos + m > word.len() {
            return Err(FusionError::Shape(format!("local operation at {pos}+{m} exceeds word of length {}", word.len())));
        }
        let (p, rest) = word.split_at(pos);
        let (u, s) = rest.split_at(m);
        if *g.src() != c.word(u) || *g.tgt() != c.word(out) {
            return Err(FusionError::Shape("local morphism does not match its word".into()));
        }
        if p.is_empty() && (u.is_empty() || out.is_empty()) && !s.is_empty() {
            // An empty side would leave a stray unit factor; absorb the next letter.
            let s1 = c.simple(s[0]);
            let g1 = Mor::chain(&[self.split_word(u, &s[..1])?, c.right_id(g, &s1), self.join_word(out, &s[..1])?])?;
            let mut out1 = out.to_vec();
            out1.push(s[0]);
            return self.local(word, pos, m + 1, &g1, &out1);
        }
        let lp = c.word(p);
        let mut f = Mor::chain(&[self.split_word(p, u)?, c.left_id(&lp, g), self.join_word(p, out)?])?;
        for &x in s {
            f = c.right_id(&f, &c.simple(x));
        }
        Ok(f)
    }

    /// Replaces `word[pos..pos+m]` by `out`.
    pub fn replaced(word: &[Label], pos: usize, m: usize, out: &[Label]) -> Vec<Label> {
        let mut w = word[..pos].to_vec();
        w.extend_from_slice(out);
        w.extend_from_slice(&word[pos + m..]);
        w
    }

    /// Braiding of the letters at `pos` and `pos + 1`.
    pub fn cross(&self, word: &[Label], pos: usize, over: bool) -> Result<(Mor, Vec<Label>), FusionError> {
        let c = &self.calc;
        let (x, y) = (c.simple(word[pos]), c.simple(word[pos + 1]));
        let g = if over { c.braid(&x, &y) } else { c.braid_inv(&x, &y) };
        let out = [word[pos + 1], word[pos]];
        let w = Self::replaced(word, pos, 2, &out);
        Ok((self.local(word, pos, 2, &g, &out)?, w))
    }

    /// Moves letter `from` across the letters between it and `to`, one
    /// crossing at a time; `over` selects the braiding or its inverse for the
    /// moving strand passing to the right (in front), mirrored when moving left.
    pub fn transport(&self, word: &[Label], from: usize, to: usize, over: bool) -> Result<(Mor, Vec<Label>), FusionError> {
        let mut w = word.to_vec();
        let mut acc = Mor::identity(&self.obj(&w));
        let mut i = from;
        while i != to {
            let (m, nw) = if to > i {
                let r = self.cross(&w, i, over)?;
                i += 1;
                r
            } else {
                let r = self.cross(&w, i - 1, !over)?;
                i -= 1;
                r
            };
            acc = m.after(&acc)?;
            w = nw;
        }
        Ok((acc, w))
    }
}
