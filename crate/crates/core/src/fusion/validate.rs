//! Axiom checks: structure, pentagon, hexagon, pivotal/spherical, ribbon.

use crate::exactnum::Cyclotomic;

use super::tensor::{Calculus, Mor, Obj};
use super::{CategorySpec, FusionError, Label, RawSpec};

/// Outcome of one validator: how many instances were evaluated and which failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub instances: usize,
    pub violations: Vec<String>,
}

impl CheckReport {
    fn new(check: &str) -> Self {
        CheckReport { check: check.to_string(), instances: 0, violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn names(spec: &CategorySpec, ls: &[Label]) -> String {
    ls.iter().map(|&l| spec.label_name(l)).collect::<Vec<_>>().join(",")
}

/// Unit, dual and fusion-ring consistency.
pub fn validate_structure(spec: &CategorySpec) -> CheckReport {
    let mut rep = CheckReport::new("structure");
    let k = spec.rank();
    let u = spec.unit();
    let mut bad = |msg: String| rep.violations.push(msg);
    for a in 0..k {
        for b in 0..k {
            let want = usize::from(a == b);
            if spec.n(u, a, b) != want || spec.n(a, u, b) != want {
                bad(format!("unit fusion fails for ({})", names(spec, &[a, b])));
            }
            let want_dual = usize::from(b == spec.dual(a));
            if spec.n(a, b, u) != want_dual {
                bad(format!(
                    "N_{{{}}}^1 = {} but dual({}) = {}",
                    names(spec, &[a, b]),
                    spec.n(a, b, u),
                    spec.label_name(a),
                    spec.label_name(spec.dual(a))
                ));
            }
        }
        if spec.dual(spec.dual(a)) != a {
            bad(format!("dual is not an involution at {}", spec.label_name(a)));
        }
    }
    if spec.dual(u) != u {
        bad("dual of the unit is not the unit".into());
    }
    if !spec.pivotal(u).is_one() {
        bad("pivotal coefficient of the unit is not 1".into());
    }
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                for d in 0..k {
                    let lhs: usize = (0..k).map(|e| spec.n(a, b, e) * spec.n(e, c, d)).sum();
                    let rhs: usize = (0..k).map(|f| spec.n(b, c, f) * spec.n(a, f, d)).sum();
                    if lhs != rhs {
                        bad(format!("fusion is not associative at ({})", names(spec, &[a, b, c, d])));
                    }
                }
                let (ad, bd, cd) = (spec.dual(a), spec.dual(b), spec.dual(c));
                if spec.n(a, b, c) != spec.n(bd, ad, cd) {
                    bad(format!("N_{{ab}}^c != N_{{b*a*}}^{{c*}} at ({})", names(spec, &[a, b, c])));
                }
            }
        }
    }
    for (&(a, b, c, d), blk) in spec.f_blocks() {
        if blk.rows.len() != blk.cols.len() || blk.matrix.rank() != blk.rows.len() {
            rep.violations
                .push(format!("F^{{{}}}_{} is not invertible", names(spec, &[a, b, c]), spec.label_name(d)));
        } else if (a == u || b == u || c == u) && !blk.matrix.is_identity() {
            rep.violations.push(format!(
                "F^{{{}}}_{} is not unit-normalized",
                names(spec, &[a, b, c]),
                spec.label_name(d)
            ));
        }
    }
    rep.instances = k * k * k * k;
    rep
}

fn diff_report(lhs: &Mor, rhs: &Mor) -> bool {
    lhs.same_as(rhs)
}

/// Every pentagon instance on simple objects, evaluated exactly.
pub fn check_pentagon(spec: &CategorySpec) -> Result<CheckReport, FusionError> {
    let mut rep = CheckReport::new("pentagon");
    let calc = Calculus::new(spec);
    let k = spec.rank();
    let s: Vec<Obj> = (0..k).map(|a| calc.simple(a)).collect();
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                for d in 0..k {
                    let (oa, ob, oc, od) = (&s[a], &s[b], &s[c], &s[d]);
                    let ab = calc.tensor(oa, ob);
                    let cd = calc.tensor(oc, od);
                    let bc = calc.tensor(ob, oc);
                    let lhs = calc.assoc(oa, ob, &cd).after(&calc.assoc(&ab, oc, od))?;
                    let rhs = Mor::chain(&[
                        calc.right_id(&calc.assoc(oa, ob, oc), od),
                        calc.assoc(oa, &bc, od),
                        calc.left_id(oa, &calc.assoc(ob, oc, od)),
                    ])?;
                    rep.instances += 1;
                    if !diff_report(&lhs, &rhs) {
                        rep.violations.push(format!("pentagon fails at ({})", names(spec, &[a, b, c, d])));
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// Both hexagon identities for the braiding and for its inverse.
pub fn check_hexagon(spec: &CategorySpec) -> Result<CheckReport, FusionError> {
    if !spec.has_braiding() {
        return Err(FusionError::IncompleteData("no R data".into()));
    }
    let mut rep = CheckReport::new("hexagon");
    let calc = Calculus::new(spec);
    let k = spec.rank();
    let s: Vec<Obj> = (0..k).map(|a| calc.simple(a)).collect();
    for inverse in [false, true] {
        let br = |x: &Obj, y: &Obj| if inverse { calc.braid_inv(x, y) } else { calc.braid(x, y) };
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let (oa, ob, oc) = (&s[a], &s[b], &s[c]);
                    // (A B) C -> B (C A)
                    let lhs1 = Mor::chain(&[
                        calc.assoc(oa, ob, oc),
                        br(oa, &calc.tensor(ob, oc)),
                        calc.assoc(ob, oc, oa),
                    ])?;
                    let rhs1 = Mor::chain(&[
                        calc.right_id(&br(oa, ob), oc),
                        calc.assoc(ob, oa, oc),
                        calc.left_id(ob, &br(oa, oc)),
                    ])?;
                    // A (B C) -> (C A) B
                    let lhs2 = Mor::chain(&[
                        calc.assoc_inv(oa, ob, oc),
                        br(&calc.tensor(oa, ob), oc),
                        calc.assoc_inv(oc, oa, ob),
                    ])?;
                    let rhs2 = Mor::chain(&[
                        calc.left_id(oa, &br(ob, oc)),
                        calc.assoc_inv(oa, oc, ob),
                        calc.right_id(&br(oa, oc), ob),
                    ])?;
                    rep.instances += 2;
                    let tag = if inverse { "inverse " } else { "" };
                    if !lhs1.same_as(&rhs1) {
                        rep.violations
                            .push(format!("{tag}hexagon (first) fails at ({})", names(spec, &[a, b, c])));
                    }
                    if !lhs2.same_as(&rhs2) {
                        rep.violations
                            .push(format!("{tag}hexagon (second) fails at ({})", names(spec, &[a, b, c])));
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// Left transpose of a morphism between simple tensor pairs `a ⊗ b -> c`,
/// returned as a map `c* -> b* ⊗ a*`, and transposed once more to
/// `a ⊗ b -> c`. The ratio to the original vertex is the pivotal defect.
fn double_transpose_vertex(calc: &Calculus, a: Label, b: Label, c: Label, mu: usize) -> Result<Mor, FusionError> {
    let spec = calc.spec;
    let (ad, bd, cd) = (spec.dual(a), spec.dual(b), spec.dual(c));
    let (oa, ob, oc) = (calc.simple(a), calc.simple(b), calc.simple(c));
    let (oad, obd, ocd) = (calc.simple(ad), calc.simple(bd), calc.simple(cd));
    let w = calc.merge(a, b, c, mu);
    let ab = calc.tensor(&oa, &ob);
    let bdad = calc.tensor(&obd, &oad);
    // coev_{a b}: 1 -> (a b)(b* a*)
    let coev_ab = Mor::chain(&[
        calc.coev(a),
        calc.right_id(&calc.runit(&oa).inverse()?, &oad),
        calc.right_id(&calc.left_id(&oa, &calc.coev(b)), &oad),
        calc.right_id(&calc.assoc_inv(&oa, &ob, &obd), &oad),
        calc.assoc(&ab, &obd, &oad),
    ])?;
    // w^T: c* -> b* a*
    let wt = Mor::chain(&[
        calc.runit(&ocd).inverse()?,
        calc.left_id(&ocd, &coev_ab),
        calc.left_id(&ocd, &calc.right_id(&w, &bdad)),
        calc.assoc_inv(&ocd, &oc, &bdad),
        calc.right_id(&calc.ev(c), &bdad),
        calc.lunit(&bdad),
    ])?;
    // ev_{b* a*}: (a b)(b* a*) -> 1, using ev of b* and a* (their duals are b and a)
    let ev_pair = Mor::chain(&[
        calc.assoc(&oa, &ob, &bdad),
        calc.left_id(&oa, &calc.assoc_inv(&ob, &obd, &oad)),
        calc.left_id(&oa, &calc.right_id(&calc.ev(bd), &oad)),
        calc.left_id(&oa, &calc.lunit(&oad)),
        calc.ev(ad),
    ])?;
    // w^TT: a b -> c
    Mor::chain(&[
        calc.runit(&ab).inverse()?,
        calc.left_id(&ab, &calc.coev(cd)),
        calc.assoc_inv(&ab, &ocd, &oc),
        calc.right_id(&calc.left_id(&ab, &wt), &oc),
        calc.right_id(&ev_pair, &oc),
        calc.lunit(&oc),
    ])
}

/// Pivotal naturality, sphericality (`dim a = dim a*`, left = right trace)
/// and the ribbon condition `theta_a = theta_{a*}`.
pub fn check_spherical_ribbon(spec: &CategorySpec) -> Result<CheckReport, FusionError> {
    let mut rep = CheckReport::new("spherical-ribbon");
    let calc = Calculus::new(spec);
    let k = spec.rank();
    for a in 0..k {
        for b in 0..k {
            for c in spec.fusion_channels(a, b) {
                for mu in 0..spec.n(a, b, c) {
                    rep.instances += 1;
                    let tt = double_transpose_vertex(&calc, a, b, c, mu)?;
                    let want = spec.pivotal(c) / &(spec.pivotal(a) * spec.pivotal(b));
                    if !tt.same_as(&calc.merge(a, b, c, mu).scale(&want)) {
                        rep.violations.push(format!(
                            "pivotal coefficients are not natural at {} x {} -> {}",
                            spec.label_name(a),
                            spec.label_name(b),
                            spec.label_name(c)
                        ));
                    }
                }
            }
        }
    }
    let dims: Vec<Cyclotomic> = (0..k).map(|a| calc.dim_right(a)).collect();
    for a in 0..k {
        rep.instances += 2;
        if calc.dim_left(a) != dims[a] {
            rep.violations.push(format!("left and right traces differ on {}", spec.label_name(a)));
        }
        if dims[a] != dims[spec.dual(a)] {
            rep.violations.push(format!("dim({}) != dim of its dual", spec.label_name(a)));
        }
    }
    if spec.has_braiding() {
        let th = super::invariants::twists(spec)?;
        for a in 0..k {
            rep.instances += 1;
            if th[a] != th[spec.dual(a)] {
                rep.violations.push(format!("twist of {} differs from twist of its dual", spec.label_name(a)));
            }
        }
    }
    Ok(rep)
}

/// Structure check on unassembled data: out-of-range labels become report
/// entries instead of load errors.
pub fn validate_raw(raw: &RawSpec) -> CheckReport {
    match CategorySpec::from_raw(raw.clone()) {
        Ok(spec) => validate_structure(&spec),
        Err(e) => {
            let mut rep = CheckReport::new("structure");
            rep.violations.push(e.to_string());
            rep
        }
    }
}
