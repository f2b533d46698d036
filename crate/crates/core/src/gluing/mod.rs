//! Admissible gluings: fixed-point-free involutions of `{1, ..., 2n}`, their
//! orbits, the three relative positions of two orbits, and the surface
//! obtained by gluing the legs of a disk in pairs.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GluingError {
    #[error("not an admissible gluing: {0}")]
    NotAdmissible(String),
    #[error("cannot parse cycle notation: {0}")]
    Parse(String),
    #[error("position {0} is out of range 1..={1}")]
    OutOfRange(usize, usize),
    #[error("comm_case needs two distinct orbits")]
    SameOrbit,
}

/// A fixed-point-free involution on `{1, ..., 2n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gluing {
    partner: Vec<usize>,
}

/// An orbit `{low, high}` with 1-based positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitInfo {
    pub low: usize,
    pub high: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CommCase {
    /// `[i]' < [i]'' < [j]' < [j]''`.
    Disjoint = 1,
    /// `[i]' < [j]' < [i]'' < [j]''`.
    Interleaved = 2,
    /// `[i]' < [j]' < [j]'' < [i]''`.
    Nested = 3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SurfaceType {
    pub genus: usize,
    pub punctures: usize,
    pub euler: i64,
}

#[derive(Serialize, Deserialize)]
struct GluingJson {
    n: usize,
    pairs: Vec<[usize; 2]>,
}

impl Gluing {
    /// The gluing with no legs (n = 0).
    pub fn empty() -> Self {
        Gluing { partner: Vec::new() }
    }

    /// From 0-based partner indices.
    pub fn from_partner(partner: Vec<usize>) -> Result<Self, GluingError> {
        let m = partner.len();
        if !m.is_multiple_of(2) {
            return Err(GluingError::NotAdmissible(format!("{m} points cannot be paired")));
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= m {
                return Err(GluingError::OutOfRange(p + 1, m));
            }
            if p == i {
                return Err(GluingError::NotAdmissible(format!("{} is a fixed point", i + 1)));
            }
            if partner[p] != i {
                return Err(GluingError::NotAdmissible(format!("{} -> {} is not an involution", i + 1, p + 1)));
            }
        }
        Ok(Gluing { partner })
    }

    /// From 1-based pairs covering `1..=2n` exactly once.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GluingError> {
        let m = 2 * n;
        let mut partner = vec![usize::MAX; m];
        for &(a, b) in pairs {
            for x in [a, b] {
                if x == 0 || x > m {
                    return Err(GluingError::OutOfRange(x, m));
                }
                if partner[x - 1] != usize::MAX {
                    return Err(GluingError::NotAdmissible(format!("{x} appears twice")));
                }
            }
            if a == b {
                return Err(GluingError::NotAdmissible(format!("{a} is a fixed point")));
            }
            partner[a - 1] = b - 1;
            partner[b - 1] = a - 1;
        }
        if let Some(i) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(GluingError::NotAdmissible(format!("{} is not paired", i + 1)));
        }
        Self::from_partner(partner)
    }

    /// Parses cycle notation such as `(1 3)(2 4)` or the compact `(13)(24)`,
    /// where a cycle without separators is read one digit per point.
    /// `()` or an empty string is the empty gluing.
    pub fn parse(text: &str) -> Result<Self, GluingError> {
        let mut pairs = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body_start = rest
                .strip_prefix('(')
                .ok_or_else(|| GluingError::Parse(format!("expected '(' at {rest:?}")))?;
            let close = body_start.find(')').ok_or_else(|| GluingError::Parse("unclosed cycle".into()))?;
            let body = &body_start[..close];
            let tokens: Vec<&str> =
                body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
            let nums: Vec<usize> = if tokens.len() == 1 && tokens[0].len() > 1 && tokens[0].bytes().all(|b| b.is_ascii_digit()) {
                // compact form such as (13): one digit per point
                tokens[0].bytes().map(|b| (b - b'0') as usize).collect()
            } else {
                tokens
                    .iter()
                    .map(|t| t.parse::<usize>().map_err(|_| GluingError::Parse(format!("not a number: {t:?}"))))
                    .collect::<Result<_, _>>()?
            };
            match nums.len() {
                0 => {}
                2 => pairs.push((nums[0], nums[1])),
                1 => return Err(GluingError::NotAdmissible(format!("({}) is a fixed point", nums[0]))),
                l => return Err(GluingError::NotAdmissible(format!("cycle of length {l} is not a transposition"))),
            }
            rest = body_start[close + 1..].trim_start();
        }
        let max = pairs.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        if max % 2 != 0 {
            return Err(GluingError::NotAdmissible(format!("largest point {max} is odd, so {} is unpaired", max + 1)));
        }
        Self::from_pairs(max / 2, &pairs)
    }

    pub fn from_json(text: &str) -> Result<Self, GluingError> {
        let j: GluingJson = serde_json::from_str(text).map_err(|e| GluingError::Parse(e.to_string()))?;
        let pairs: Vec<(usize, usize)> = j.pairs.iter().map(|p| (p[0], p[1])).collect();
        Self::from_pairs(j.n, &pairs)
    }

    pub fn to_json(&self) -> String {
        let j = GluingJson { n: self.n(), pairs: self.orbits().iter().map(|o| [o.low, o.high]).collect() };
        serde_json::to_string(&j).expect("serializable")
    }

    /// Number of orbits.
    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    /// `σ(i)` for a 1-based position.
    pub fn image(&self, i: usize) -> Result<usize, GluingError> {
        if i == 0 || i > self.partner.len() {
            return Err(GluingError::OutOfRange(i, self.partner.len()));
        }
        Ok(self.partner[i - 1] + 1)
    }

    /// 0-based partner table.
    pub fn partner(&self) -> &[usize] {
        &self.partner
    }

    pub fn orbit_info(&self, i: usize) -> Result<OrbitInfo, GluingError> {
        let j = self.image(i)?;
        Ok(OrbitInfo { low: i.min(j), high: i.max(j) })
    }

    /// Orbits sorted by their low position.
    pub fn orbits(&self) -> Vec<OrbitInfo> {
        (0..self.partner.len())
            .filter(|&i| i < self.partner[i])
            .map(|i| OrbitInfo { low: i + 1, high: self.partner[i] + 1 })
            .collect()
    }

    /// The relative position of two distinct orbits, after ordering them by
    /// their low positions.
    pub fn comm_case(&self, a: OrbitInfo, b: OrbitInfo) -> Result<CommCase, GluingError> {
        if a == b {
            return Err(GluingError::SameOrbit);
        }
        let (i, j) = if a.low < b.low { (a, b) } else { (b, a) };
        Ok(if i.high < j.low {
            CommCase::Disjoint
        } else if i.high < j.high {
            CommCase::Interleaved
        } else {
            CommCase::Nested
        })
    }

    /// Genus and punctures of the surface obtained from a disk whose
    /// boundary alternates `2n` legs and `2n` gaps, with leg `i` glued to leg
    /// `σ(i)` reversing direction.
    ///
    /// Corners are identified with a union-find, giving `χ = V - E + F`. The
    /// boundary circles are counted twice: by following gaps across glued
    /// legs, and as connected components of the gap graph on corner classes.
    pub fn surface_type(&self) -> SurfaceType {
        let n = self.n();
        if n == 0 {
            return SurfaceType { genus: 0, punctures: 1, euler: 1 };
        }
        let m = 2 * n;
        // leg i runs from corner 2i to 2i+1, gap i from 2i+1 to 2i+2 (mod 4n)
        let corners = 2 * m;
        let mut uf = UnionFind::new(corners);
        for i in 0..m {
            let j = self.partner[i];
            uf.union(2 * i, 2 * j + 1);
            uf.union(2 * i + 1, 2 * j);
        }
        let v = uf.classes() as i64;
        let e = (n + m) as i64;
        let euler = v - e + 1;

        let mut seen = vec![false; m];
        let mut traced = 0;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            traced += 1;
            let mut g = start;
            while !seen[g] {
                seen[g] = true;
                g = self.partner[(g + 1) % m];
            }
        }

        let mut gaps = UnionFind::new(corners);
        for i in 0..m {
            gaps.union(uf.find(2 * i + 1), uf.find((2 * i + 2) % corners));
        }
        let roots: std::collections::BTreeSet<usize> = (0..m).map(|i| gaps.find(uf.find(2 * i + 1))).collect();
        assert_eq!(traced, roots.len(), "boundary tracing and corner components disagree");

        let k = traced as i64;
        let two_g = 2 - euler - k;
        assert!(two_g >= 0 && two_g % 2 == 0, "inconsistent Euler characteristic");
        SurfaceType { genus: (two_g / 2) as usize, punctures: traced, euler }
    }
}

impl fmt::Display for Gluing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orbits = self.orbits();
        if orbits.is_empty() {
            return write!(f, "()");
        }
        for o in orbits {
            write!(f, "({} {})", o.low, o.high)?;
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

/// All admissible gluings of `2n` points, in lexicographic order of their
/// partner tables.
pub fn enumerate_adm(n: usize) -> Vec<Gluing> {
    fn rec(partner: &mut Vec<usize>, out: &mut Vec<Gluing>) {
        let Some(i) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(Gluing { partner: partner.clone() });
            return;
        };
        for j in i + 1..partner.len() {
            if partner[j] == usize::MAX {
                partner[i] = j;
                partner[j] = i;
                rec(partner, out);
                partner[i] = usize::MAX;
                partner[j] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; 2 * n], &mut out);
    out
}

/// The standard gluing of a genus-`g` surface with `k` punctures: `g`
/// interleaved blocks `(4b+1 4b+3)(4b+2 4b+4)` followed by `k - 1` adjacent
/// pairs. `(0, 1)` gives the empty gluing (a disk).
pub fn sigma_gk(g: usize, k: usize) -> Result<Gluing, GluingError> {
    if k == 0 {
        return Err(GluingError::NotAdmissible("at least one puncture is required".into()));
    }
    let mut pairs = Vec::new();
    for b in 0..g {
        pairs.push((4 * b + 1, 4 * b + 3));
        pairs.push((4 * b + 2, 4 * b + 4));
    }
    for j in 1..k {
        pairs.push((4 * g + 2 * j - 1, 4 * g + 2 * j));
    }
    Gluing::from_pairs(2 * g + k - 1, &pairs)
}
