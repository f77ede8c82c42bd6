use std::fmt::Display;
use std::fs;
use std::path::Path;

use bcr_core::alexander::{
    alexander_poly, alexander_via_skein, conway_series, corpus_knot, parse_pd, zbcr_series, PdCode,
    CORPUS,
};
use bcr_core::bridge::{
    verify_main, verify_products, verify_stu, verify_wheels, BcrWeights, Report,
};
use bcr_core::diagram::json::{bcr_to_file, jacobi_to_file, parse, AnyDiagram};
use bcr_core::diagram::{enumerate_bcr, enumerate_jacobi};
use bcr_core::psi::verify_wc_psi;
use bcr_core::rational::format_pq;
use bcr_core::space::{Algebra, ClassKind, DiagramVector};
use bcr_core::weight::{wc_eval, wc_prime_eval};
use bcr_core::{JacobiDiagram, Limits};
use serde_json::{json, Value};

use crate::cache;
use crate::{Check, Cli, Command, DiagramKind, Failure, WeightSystem};

/// Version of every JSON document printed by the tool.
pub const SCHEMA: &str = "bcr/1";

type Outcome = Result<(), Failure>;

fn usage(e: impl Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn emit(v: Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(&v).expect("serializable")
    );
}

pub fn run(cli: &Cli) -> Outcome {
    let limits = Limits::with_max_degree(cli.max_degree);
    match &cli.command {
        Command::Enumerate {
            kind,
            degree,
            connected,
            with_univalent,
        } => enumerate(
            cli.json,
            *kind,
            *degree,
            *connected,
            *with_univalent,
            &limits,
        ),
        Command::Dim { degree } => dim(cli.json, *degree, &limits),
        Command::Weight { system, diagram } => weight(cli.json, *system, diagram, &limits),
        Command::Wbcr {
            diagram,
            numbered,
            no_cache,
        } => wbcr(cli.json, diagram, *numbered, *no_cache, &limits),
        Command::Verify {
            check,
            degree,
            slow,
            no_cache,
        } => verify(cli.json, *check, *degree, *slow, *no_cache, &limits),
        Command::Alexander {
            pd,
            knot,
            series,
            zbcr,
        } => alexander(cli.json, pd.as_deref(), knot.as_deref(), *series, *zbcr),
    }
}

fn enumerate(
    as_json: bool,
    kind: DiagramKind,
    k: usize,
    connected: bool,
    with_univalent: bool,
    limits: &Limits,
) -> Outcome {
    let (name, rows): (&str, Vec<(String, Value)>) = match kind {
        DiagramKind::Bcr => {
            let ds = enumerate_bcr(k, limits).map_err(usage)?;
            let rows = ds
                .iter()
                .map(|d| {
                    (
                        d.word_string(),
                        serde_json::to_value(bcr_to_file(d)).expect("serializable"),
                    )
                })
                .collect();
            ("bcr", rows)
        }
        DiagramKind::Jacobi => {
            let ds = enumerate_jacobi(k, connected, with_univalent, limits).map_err(usage)?;
            let rows = ds
                .iter()
                .map(|d| {
                    (
                        d.canonical_key().to_string(),
                        serde_json::to_value(jacobi_to_file(d)).expect("serializable"),
                    )
                })
                .collect();
            ("jacobi", rows)
        }
    };
    if as_json {
        let diagrams: Vec<Value> = rows
            .iter()
            .map(|(label, f)| json!({"label": label, "diagram": f}))
            .collect();
        emit(json!({
            "schema": SCHEMA,
            "command": "enumerate",
            "kind": name,
            "degree": k,
            "count": rows.len(),
            "diagrams": diagrams,
        }));
    } else {
        println!("{} {name} classes of degree {k}", rows.len());
        for (i, (label, _)) in rows.iter().enumerate() {
            println!("{i:>5}  {label}");
        }
    }
    Ok(())
}

fn dim(as_json: bool, k: usize, limits: &Limits) -> Outcome {
    let alg = Algebra::new(*limits);
    let space = alg.space(k).map_err(usage)?;
    let total = space.dim();
    let primitive = space.dim_of(ClassKind::Primitive) + space.dim_of(ClassKind::Mixed);
    let product = space.dim_of(ClassKind::Product);
    let trivalent = space.dim_of(ClassKind::Trivalent);
    if as_json {
        emit(json!({
            "schema": SCHEMA,
            "command": "dim",
            "degree": k,
            "total": total,
            "primitive": primitive,
            "product": product,
            "trivalent": trivalent,
            "classes": space.classes().len(),
            "relators": space.relator_count(),
        }));
    } else {
        println!("degree  total  primitive  product  trivalent");
        println!("{k:>6}  {total:>5}  {primitive:>9}  {product:>7}  {trivalent:>9}");
    }
    Ok(())
}

fn read_jacobi(path: &Path) -> Result<JacobiDiagram, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    match parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))? {
        AnyDiagram::Jacobi(d) => Ok(d),
        AnyDiagram::Bcr(_) => Err(usage(format!(
            "{}: expected a jacobi diagram",
            path.display()
        ))),
    }
}

fn print_value(as_json: bool, command: &str, extra: Value, value: &bcr_core::Q) {
    if as_json {
        let mut v = json!({"schema": SCHEMA, "command": command, "value": format_pq(value)});
        if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
            m.extend(e);
        }
        emit(v);
    } else {
        println!("{}", format_pq(value));
    }
}

fn weight(as_json: bool, system: WeightSystem, path: &Path, limits: &Limits) -> Outcome {
    let d = read_jacobi(path)?;
    limits.check(d.degree()).map_err(usage)?;
    let v = DiagramVector::from_diagram(&d);
    let (name, value) = match system {
        WeightSystem::Wc => ("wc", wc_eval(&v)),
        WeightSystem::Wcp => (
            "wcp",
            wc_prime_eval(&Algebra::new(*limits), &v).map_err(usage)?,
        ),
    };
    print_value(
        as_json,
        "weight",
        json!({"system": name, "degree": d.degree()}),
        &value,
    );
    Ok(())
}

fn weights_for(k: usize, no_cache: bool, limits: &Limits) -> Result<BcrWeights, Failure> {
    limits.check(k).map_err(usage)?;
    let w = BcrWeights::new(*limits);
    if no_cache || !cache::load(&w, k) {
        w.table(k).map_err(usage)?;
        cache::store(&w, k);
    }
    Ok(w)
}

fn wbcr(as_json: bool, path: &Path, numbered: bool, no_cache: bool, limits: &Limits) -> Outcome {
    let d = read_jacobi(path)?;
    let k = d.degree();
    let value = if numbered {
        limits.check(k).map_err(usage)?;
        BcrWeights::new(*limits).wbcr_numbered(&d).map_err(usage)?
    } else {
        weights_for(k, no_cache, limits)?.wbcr(&d).map_err(usage)?
    };
    print_value(
        as_json,
        "wbcr",
        json!({"degree": k, "numbered": numbered}),
        &value,
    );
    Ok(())
}

fn verify(
    as_json: bool,
    check: Check,
    k: usize,
    slow: bool,
    no_cache: bool,
    limits: &Limits,
) -> Outcome {
    limits.check(k).map_err(usage)?;
    if k >= 4 && !slow && matches!(check, Check::Main | Check::Stu) {
        return Err(usage(format!(
            "degree {k} is slow for this check; pass --slow to run it"
        )));
    }
    let report: Report = match check {
        Check::Wcpsi => {
            if k > 3 {
                return Err(usage("wcpsi supports degrees up to 3"));
            }
            verify_wc_psi(k, limits).map_err(usage)?
        }
        _ => {
            let alg = Algebra::new(*limits);
            let w = weights_for(k, no_cache, limits)?;
            match check {
                Check::Main => verify_main(k, &alg, &w),
                Check::Stu => verify_stu(k, &w),
                Check::Wheels => verify_wheels(k, &alg, &w),
                _ => verify_products(k, &alg, &w),
            }
            .map_err(usage)?
        }
    };
    print_report(as_json, &report);
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn print_report(as_json: bool, r: &Report) {
    let failed = r.failures().count();
    if as_json {
        let items: Vec<Value> = r
            .items
            .iter()
            .map(|i| json!({"label": i.label, "lhs": format_pq(&i.lhs), "rhs": format_pq(&i.rhs), "ok": i.ok()}))
            .collect();
        emit(json!({
            "schema": SCHEMA,
            "command": "verify",
            "check": r.name,
            "degree": r.degree,
            "passed": failed == 0,
            "failures": failed,
            "items": items,
        }));
        return;
    }
    for i in &r.items {
        let mark = if i.ok() { "ok  " } else { "FAIL" };
        println!(
            "{mark} {}  lhs={}  rhs={}",
            i.label,
            format_pq(&i.lhs),
            format_pq(&i.rhs)
        );
    }
    let verdict = if failed == 0 { "PASS" } else { "FAIL" };
    println!(
        "{verdict} {} degree {}: {} items, {failed} failures",
        r.name,
        r.degree,
        r.items.len()
    );
}

fn alexander(
    as_json: bool,
    pd: Option<&Path>,
    knot: Option<&str>,
    series: Option<usize>,
    zbcr: bool,
) -> Outcome {
    let (label, code): (String, PdCode) = match (pd, knot) {
        (Some(p), _) => {
            let text = fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            (
                p.display().to_string(),
                parse_pd(&text).map_err(|e| usage(format!("{}: {e}", p.display())))?,
            )
        }
        (None, Some(n)) => {
            let code = corpus_knot(n).ok_or_else(|| {
                let names: Vec<&str> = CORPUS.iter().map(|c| c.0).collect();
                usage(format!("unknown knot {n:?}; known: {}", names.join(", ")))
            })?;
            (n.to_string(), code)
        }
        (None, None) => return Err(usage("one of --pd or --knot is required")),
    };
    let delta = alexander_poly(&code).map_err(usage)?;
    let skein = alexander_via_skein(&code).map_err(usage)?;
    if skein != delta {
        eprintln!("matrix and skein computations disagree: {delta} vs {skein}");
        return Err(Failure::Verification);
    }
    let order = series.unwrap_or(if zbcr { 6 } else { 0 });
    let coeffs = series.map(|k| conway_series(&delta, k));
    let zs = if zbcr {
        Some(zbcr_series(&delta, order.max(2)).map_err(usage)?)
    } else {
        None
    };
    if as_json {
        let terms: Vec<Value> = delta
            .terms()
            .map(|(e, c)| json!([e, format_pq(c)]))
            .collect();
        let mut v = json!({
            "schema": SCHEMA,
            "command": "alexander",
            "knot": label,
            "crossings": code.len(),
            "delta": delta.to_string(),
            "delta_terms": terms,
        });
        if let Some(c) = &coeffs {
            v["series"] = json!(c.iter().map(format_pq).collect::<Vec<_>>());
        }
        if let Some(z) = &zs {
            let m: Vec<Value> = z
                .iter()
                .enumerate()
                .map(|(i, x)| json!([i + 2, format_pq(x)]))
                .collect();
            v["zbcr"] = json!(m);
        }
        emit(v);
        return Ok(());
    }
    println!("knot: {label}");
    println!("Delta(t) = {delta}");
    if let Some(c) = coeffs {
        println!("Delta(e^h):");
        for (n, x) in c.iter().enumerate() {
            println!("  h^{n}: {}", format_pq(x));
        }
    }
    if let Some(z) = zs {
        println!("Z_k = -[h^k] log Delta(e^h):");
        for (i, x) in z.iter().enumerate() {
            println!("  Z_{}: {}", i + 2, format_pq(x));
        }
    }
    Ok(())
}
