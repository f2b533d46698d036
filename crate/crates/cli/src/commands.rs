//! One function per subcommand. Each resolves its inputs, calls the library
//! and shapes the result into a [`Report`].

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use genuscenter::catalog::{self, CatalogError};
use genuscenter::center::{self, CenterError, FormalObject};
use genuscenter::fusion::{self, CategorySpec, CheckReport, FusionError};
use genuscenter::gluing::{self, Gluing};
use serde_json::{json, Value};

use crate::render::{scalar, scalar_text, verdict, Failure, Report};

pub struct Ctx {
    pub float: Option<usize>,
    pub dirs: Vec<PathBuf>,
}

fn load(ctx: &Ctx, cat: &str) -> Result<CategorySpec, Failure> {
    catalog::resolve(cat, &ctx.dirs).map_err(|e| match e {
        CatalogError::KeyNotFound { .. } | CatalogError::Io { .. } => Failure::usage("unknown-catalog", e),
        _ => Failure::compute("invalid-category", e),
    })
}

fn parse_sigma(text: &str) -> Result<Gluing, Failure> {
    Gluing::parse(text).map_err(|e| Failure::usage("bad-gluing", e))
}

fn center_failure(e: CenterError) -> Failure {
    let kind = match e {
        CenterError::NotPremodular => "not-premodular",
        CenterError::DegenerateOmega => "degenerate-omega",
        CenterError::NonSplit(_) => "non-split",
        _ => "computation",
    };
    Failure::compute(kind, e)
}

fn fusion_failure(e: FusionError) -> Failure {
    Failure::compute("computation", e)
}

fn surface_json(s: &Gluing) -> Value {
    let t = s.surface_type();
    json!({ "g": t.genus, "k": t.punctures })
}

fn check_json(r: &CheckReport) -> Value {
    json!({ "check": r.check, "instances": r.instances, "passed": r.passed(), "violations": r.violations })
}

pub fn validate(ctx: &Ctx, cat: &str) -> Result<Report, Failure> {
    let spec = load(ctx, cat)?;
    let mut checks = vec![fusion::validate_structure(&spec)];
    checks.push(fusion::check_pentagon(&spec).map_err(fusion_failure)?);
    if spec.has_braiding() {
        checks.push(fusion::check_hexagon(&spec).map_err(fusion_failure)?);
    }
    checks.push(fusion::check_spherical_ribbon(&spec).map_err(fusion_failure)?);
    let ok = checks.iter().all(CheckReport::passed);
    let mut text = format!("category {}\n", spec.name());
    for c in &checks {
        let _ = writeln!(text, "  {:<18} {:>6} instances  {}", c.check, c.instances, verdict(c.passed()));
        for v in &c.violations {
            let _ = writeln!(text, "    {v}");
        }
    }
    if !spec.has_braiding() {
        text.push_str("  hexagon            skipped (no braiding)\n");
    }
    let json = json!({
        "category": spec.name(),
        "braided": spec.has_braiding(),
        "checks": checks.iter().map(check_json).collect::<Vec<_>>(),
        "passed": ok,
    });
    Ok(Report { json, text, ok })
}

pub fn gluing_enum(n: usize) -> Result<Report, Failure> {
    let all = gluing::enumerate_adm(n);
    let mut text = String::new();
    let mut rows = Vec::with_capacity(all.len());
    for s in &all {
        let t = s.surface_type();
        let _ = writeln!(text, "{:<28} genus {}  punctures {}", s.to_string(), t.genus, t.punctures);
        rows.push(json!({ "sigma": s.to_string(), "surface": surface_json(s) }));
    }
    Ok(Report { json: json!({ "n": n, "count": all.len(), "gluings": rows }), text, ok: true })
}

fn classify(s: &Gluing) -> Result<Report, Failure> {
    let t = s.surface_type();
    let orbits = s.orbits();
    let mut matrix = Vec::with_capacity(orbits.len());
    for &a in &orbits {
        let row = orbits
            .iter()
            .map(|&b| {
                if a == b {
                    Ok(Value::Null)
                } else {
                    s.comm_case(a, b).map(|c| json!(c as u8)).map_err(|e| Failure::compute("gluing", e))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        matrix.push(row);
    }
    let mut text = format!(
        "sigma     {s}\nsurface   genus {}, punctures {}, euler {}\norbits\n",
        t.genus, t.punctures, t.euler
    );
    for (i, o) in orbits.iter().enumerate() {
        let _ = writeln!(text, "  [{}] = {{{}, {}}}", i + 1, o.low, o.high);
    }
    if orbits.len() > 1 {
        text.push_str("comm cases (1 disjoint, 2 interleaved, 3 nested)\n");
        for row in &matrix {
            let cells: Vec<String> = row.iter().map(|v| v.as_u64().map_or("-".into(), |c| c.to_string())).collect();
            let _ = writeln!(text, "  {}", cells.join(" "));
        }
    }
    let json = json!({
        "sigma": s.to_string(),
        "n": s.n(),
        "surface": { "g": t.genus, "k": t.punctures, "euler": t.euler },
        "orbits": orbits.iter().map(|o| [o.low, o.high]).collect::<Vec<_>>(),
        "comm": matrix,
    });
    Ok(Report { json, text, ok: true })
}

pub fn gluing_classify(sigma: &str) -> Result<Report, Failure> {
    classify(&parse_sigma(sigma)?)
}

pub fn gluing_standard(g: usize, k: usize) -> Result<Report, Failure> {
    classify(&gluing::sigma_gk(g, k).map_err(|e| Failure::usage("bad-surface", e))?)
}

pub fn center_rank(ctx: &Ctx, cat: &str, sigma: &str, timing: bool) -> Result<Report, Failure> {
    let spec = load(ctx, cat)?;
    let s = parse_sigma(sigma)?;
    let start = Instant::now();
    let r = center::center_rank(&spec, &s).map_err(center_failure)?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let t = s.surface_type();
    let blocks: Vec<String> = r.block_dims.iter().map(usize::to_string).collect();
    let mut text = format!(
        "category  {}\nsigma     {s}\nsurface   genus {}, punctures {}\nrank      {}\nblocks    {}\ndimension {}\n",
        spec.name(),
        t.genus,
        t.punctures,
        r.rank,
        blocks.join(" "),
        r.total_dim
    );
    let mut json = json!({
        "category": spec.name(),
        "sigma": s.to_string(),
        "surface": surface_json(&s),
        "rank": r.rank,
        "block_dims": r.block_dims,
        "total_dim": r.total_dim,
    });
    if timing {
        let _ = writeln!(text, "runtime   {elapsed:.1} ms");
        json["runtime_ms"] = json!(elapsed);
    }
    Ok(Report { json, text, ok: true })
}

pub fn verify_induced(ctx: &Ctx, cat: &str, sigma: &str, object: &str) -> Result<Report, Failure> {
    let spec = load(ctx, cat)?;
    let s = parse_sigma(sigma)?;
    let x = spec.label_index(object).ok_or_else(|| {
        Failure::usage("unknown-label", format!("{object:?} is not a label of {}: {}", spec.name(), spec.labels().join(", ")))
    })?;
    let (_, pair) =
        center::induced_half_braidings(&spec, &s, &FormalObject::simple(&spec, x)).map_err(center_failure)?;
    let rep = center::verify_sigma_pair(&spec, &pair).map_err(center_failure)?;
    let carrier: Vec<Value> = (0..spec.rank())
        .filter(|&a| pair.carrier.mult(a) > 0)
        .map(|a| json!([spec.label_name(a), pair.carrier.mult(a)]))
        .collect();
    let parts: Vec<String> = (0..spec.rank())
        .filter(|&a| pair.carrier.mult(a) > 0)
        .map(|a| format!("{}·{}", pair.carrier.mult(a), spec.label_name(a)))
        .collect();
    let mut text = format!(
        "category  {}\nsigma     {s}\nobject    {object}\ncarrier   {}\naxioms    {} instances  {}\n",
        spec.name(),
        parts.join(" + "),
        rep.instances,
        verdict(rep.passed())
    );
    for v in &rep.violations {
        let _ = writeln!(text, "  {v}");
    }
    let json = json!({
        "category": spec.name(),
        "sigma": s.to_string(),
        "object": object,
        "carrier": carrier,
        "instances": rep.instances,
        "violations": rep.violations,
        "passed": rep.passed(),
    });
    Ok(Report { json, text, ok: rep.passed() })
}

pub fn adjoint_check(ctx: &Ctx, cat: &str, sigma: &str, samples: usize) -> Result<Report, Failure> {
    let spec = load(ctx, cat)?;
    let s = parse_sigma(sigma)?;
    let rep = center::check_adjunction(&spec, &s, samples).map_err(center_failure)?;
    let mut text = format!("category {}  sigma {s}\n  {:<8} {:<8} {:>6}  G∘F   F∘G\n", spec.name(), "x", "y", "hom");
    for r in &rep.rows {
        let _ = writeln!(text, "  {:<8} {:<8} {:>6}  {:<5} {}", r.x, r.y, r.hom_c, verdict(r.gf), verdict(r.fg));
    }
    let json = json!({
        "category": spec.name(),
        "sigma": s.to_string(),
        "rows": rep.rows,
        "passed": rep.passed(),
    });
    Ok(Report { json, text, ok: rep.passed() })
}

fn entry_json(ctx: &Ctx, key: &str, source: &str, spec: &CategorySpec) -> Result<(Value, String), Failure> {
    let om = fusion::quantum_dims(spec);
    let sd = if spec.has_braiding() { Some(fusion::s_matrix_and_transparency(spec).map_err(fusion_failure)?) } else { None };
    let names = |ls: &[usize]| ls.iter().map(|&l| spec.label_name(l).to_string()).collect::<Vec<_>>();
    let dims: Vec<Value> = om.weights.iter().map(|d| scalar(d, ctx.float)).collect();
    let json = json!({
        "key": key,
        "source": source,
        "name": spec.name(),
        "labels": spec.labels(),
        "rank": spec.rank(),
        "braided": spec.has_braiding(),
        "modular": sd.as_ref().map(|d| d.modular),
        "transparent": sd.as_ref().map(|d| names(&d.transparent)),
        "dims": dims,
        "total_dim": scalar(&om.total, ctx.float),
    });
    let mut text = format!("{key} ({source})\n  labels      {}\n", spec.labels().join(" "));
    for (l, d) in spec.labels().iter().zip(&om.weights) {
        let _ = writeln!(text, "  dim {l:<7} {}", scalar_text(d, ctx.float));
    }
    let _ = writeln!(text, "  dim Ω       {}", scalar_text(&om.total, ctx.float));
    match &sd {
        Some(d) => {
            let _ = writeln!(text, "  modular     {}\n  transparent {}", d.modular, names(&d.transparent).join(" "));
        }
        None => text.push_str("  braided     false\n"),
    }
    Ok((json, text))
}

pub fn catalog_list(ctx: &Ctx) -> Result<Report, Failure> {
    let mut entries = Vec::new();
    let mut text = String::new();
    for key in catalog::keys() {
        let spec = catalog::builtin(key).map_err(|e| Failure::compute("invalid-category", e))?;
        let (j, t) = entry_json(ctx, key, "bundled", &spec)?;
        entries.push(j);
        text.push_str(&t);
    }
    for dir in &ctx.dirs {
        let Ok(listing) = std::fs::read_dir(dir) else { continue };
        let mut paths: Vec<PathBuf> =
            listing.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.extension().is_some_and(|x| x == "json")).collect();
        paths.sort();
        for p in paths {
            let key = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let spec = catalog::load_spec(&p).map_err(|e| Failure::compute("invalid-category", format!("{}: {e}", p.display())))?;
            let (j, t) = entry_json(ctx, &key, &p.display().to_string(), &spec)?;
            entries.push(j);
            text.push_str(&t);
        }
    }
    Ok(Report { json: json!({ "catalogs": entries }), text, ok: true })
}
