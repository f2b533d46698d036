//! The on-disk JSON category format.
//!
//! Labels are referenced by name everywhere except the multiplicity
//! indices. Scalars are `{"order": N, "terms": [[exp, num, den], ...]}`;
//! numerators and denominators may be JSON integers or decimal strings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exactnum::Cyclotomic;
use crate::fusion::{FEntry, REntry, RawSpec};

use super::CatalogError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum IntJson {
    Small(i64),
    Big(String),
}

impl IntJson {
    fn to_bigint(&self) -> Result<BigInt, CatalogError> {
        match self {
            IntJson::Small(n) => Ok(BigInt::from(*n)),
            IntJson::Big(s) => s
                .trim()
                .parse()
                .map_err(|_| CatalogError::Invalid(format!("not an integer: {s:?}"))),
        }
    }

    fn from_bigint(n: &BigInt) -> Self {
        i64::try_from(n).map(IntJson::Small).unwrap_or_else(|_| IntJson::Big(n.to_string()))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct ScalarJson {
    order: u32,
    terms: Vec<(i64, IntJson, IntJson)>,
}

impl ScalarJson {
    pub(crate) fn to_cyclotomic(&self) -> Result<Cyclotomic, CatalogError> {
        let raw = self
            .terms
            .iter()
            .map(|(e, n, d)| Ok((*e, n.to_bigint()?, d.to_bigint()?)))
            .collect::<Result<Vec<_>, CatalogError>>()?;
        Cyclotomic::normalize(self.order, &raw).map_err(|e| CatalogError::Invalid(format!("bad scalar: {e}")))
    }

    pub(crate) fn from_cyclotomic(c: &Cyclotomic) -> Self {
        let terms = c
            .to_triples()
            .iter()
            .map(|(e, n, d)| (i64::from(*e), IntJson::from_bigint(n), IntJson::from_bigint(d)))
            .collect();
        ScalarJson { order: c.order(), terms }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FRecord {
    index: [String; 6],
    #[serde(default, skip_serializing_if = "is_zero4")]
    mult: [usize; 4],
    value: ScalarJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RRecord {
    index: [String; 3],
    #[serde(default, skip_serializing_if = "is_zero2")]
    mult: [usize; 2],
    value: ScalarJson,
}

fn is_zero4(m: &[usize; 4]) -> bool {
    m.iter().all(|&x| x == 0)
}

fn is_zero2(m: &[usize; 2]) -> bool {
    m.iter().all(|&x| x == 0)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct CategoryFile {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub(crate) provenance: Option<String>,
    labels: Vec<String>,
    unit: String,
    dual: Vec<String>,
    fusion: Vec<(String, String, String, usize)>,
    #[serde(rename = "F")]
    f: Vec<FRecord>,
    #[serde(rename = "R", default, skip_serializing_if = "Option::is_none")]
    r: Option<Vec<RRecord>>,
    pivotal: Vec<ScalarJson>,
}

impl CategoryFile {
    pub(crate) fn to_raw(&self) -> Result<RawSpec, CatalogError> {
        let idx = |name: &str| -> Result<usize, CatalogError> {
            self.labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| CatalogError::Invalid(format!("unknown label {name:?}")))
        };
        let unit = idx(&self.unit)?;
        let dual = self.dual.iter().map(|d| idx(d)).collect::<Result<Vec<_>, _>>()?;
        if dual.len() != self.labels.len() {
            return Err(CatalogError::Invalid(format!(
                "dual table has {} entries for {} labels",
                dual.len(),
                self.labels.len()
            )));
        }
        if let Some(a) = (0..dual.len()).find(|&a| dual[dual[a]] != a) {
            return Err(CatalogError::Invalid(format!("dual table is not an involution at {:?}", self.labels[a])));
        }
        let fusion = self
            .fusion
            .iter()
            .map(|(a, b, c, n)| Ok((idx(a)?, idx(b)?, idx(c)?, *n)))
            .collect::<Result<Vec<_>, CatalogError>>()?;
        let f = self
            .f
            .iter()
            .map(|r| {
                let [a, b, c, d, e, f] = [0, 1, 2, 3, 4, 5].map(|i| idx(&r.index[i]));
                Ok(FEntry {
                    a: a?,
                    b: b?,
                    c: c?,
                    d: d?,
                    e: e?,
                    f: f?,
                    mult: r.mult,
                    value: r.value.to_cyclotomic()?,
                })
            })
            .collect::<Result<Vec<_>, CatalogError>>()?;
        let r = match &self.r {
            None => None,
            Some(rs) => Some(
                rs.iter()
                    .map(|r| {
                        Ok(REntry {
                            a: idx(&r.index[0])?,
                            b: idx(&r.index[1])?,
                            c: idx(&r.index[2])?,
                            mult: r.mult,
                            value: r.value.to_cyclotomic()?,
                        })
                    })
                    .collect::<Result<Vec<_>, CatalogError>>()?,
            ),
        };
        let pivotal = self.pivotal.iter().map(ScalarJson::to_cyclotomic).collect::<Result<Vec<_>, _>>()?;
        Ok(RawSpec { name: self.name.clone(), labels: self.labels.clone(), unit, dual, fusion, f, r, pivotal })
    }

    pub(crate) fn from_raw(raw: &RawSpec, provenance: Option<String>) -> Self {
        let l = |i: usize| raw.labels[i].clone();
        CategoryFile {
            name: raw.name.clone(),
            provenance,
            labels: raw.labels.clone(),
            unit: l(raw.unit),
            dual: raw.dual.iter().map(|&d| l(d)).collect(),
            fusion: raw.fusion.iter().map(|&(a, b, c, n)| (l(a), l(b), l(c), n)).collect(),
            f: raw
                .f
                .iter()
                .map(|e| FRecord {
                    index: [l(e.a), l(e.b), l(e.c), l(e.d), l(e.e), l(e.f)],
                    mult: e.mult,
                    value: ScalarJson::from_cyclotomic(&e.value),
                })
                .collect(),
            r: raw.r.as_ref().map(|rs| {
                rs.iter()
                    .map(|e| RRecord {
                        index: [l(e.a), l(e.b), l(e.c)],
                        mult: e.mult,
                        value: ScalarJson::from_cyclotomic(&e.value),
                    })
                    .collect()
            }),
            pivotal: raw.pivotal.iter().map(ScalarJson::from_cyclotomic).collect(),
        }
    }

    /// Pretty output with one record per line.
    pub(crate) fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable");
        let serde_json::Value::Object(map) = value else { unreachable!() };
        let mut parts = Vec::new();
        for (k, v) in map {
            let key = serde_json::to_string(&k).expect("string");
            match &v {
                serde_json::Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
                    let body: Vec<String> = items.iter().map(|x| format!("  {x}")).collect();
                    parts.push(format!(" {key}: [\n{}\n ]", body.join(",\n")));
                }
                _ => parts.push(format!(" {key}: {v}")),
            }
        }
        format!("{{\n{}\n}}\n", parts.join(",\n"))
    }
}
