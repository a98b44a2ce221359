//! The five subcommands. Exit codes: 0 success, 1 verification mismatch,
//! 2 invalid prime or pencil parameter, 3 divisibility failure,
//! 4 non-diamond pair, 5 bad start point.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use poncelet_core::algebra::{
    coefficients_by_iteration, coefficients_by_polynomial, double_coefficient,
    poncelet_polynomial, relation_table_by_polynomials,
};
use poncelet_core::cayley::criterion_polynomial;
use poncelet_core::field::Prime;
use poncelet_core::numtheory::{divisors, totient};
use poncelet_core::pencil::{Pencil, RelationTable};
use poncelet_core::projective::ProjPoint;
use poncelet_core::tracer::{self, TraceError};

use crate::output::{json_document, CliError, CmdOutput, Format, Metadata};

fn parse_prime(p: u64) -> Result<Prime, CliError> {
    Prime::new(p).map_err(|e| CliError::new(2, e.to_string()))
}

fn build_pencil(p: u64, c: Option<u64>) -> Result<Pencil, CliError> {
    let prime = parse_prime(p)?;
    match c {
        None => Ok(Pencil::new(prime)),
        Some(c) => Pencil::with_c(prime, c).map_err(|e| CliError::new(2, e.to_string())),
    }
}

fn check_index(name: &str, value: u64, p: u64) -> Result<(), CliError> {
    if value == 0 || value >= p {
        return Err(CliError::new(
            4,
            format!("{name} = {value} is out of range 1..{p}"),
        ));
    }
    Ok(())
}

// ---- table ----

#[derive(Serialize)]
struct TableCell {
    alpha: u64,
    beta: u64,
    n: u64,
}

#[derive(Serialize)]
struct RootSet {
    n: u64,
    zeros: Vec<u64>,
}

#[derive(Serialize)]
struct TablePayload {
    roots: Vec<RootSet>,
    cells: Vec<TableCell>,
    oracle_checked: bool,
}

pub fn cmd_table(p: u64, c: Option<u64>, format: Format, oracle: bool) -> Result<CmdOutput, CliError> {
    let pencil = build_pencil(p, c)?;
    let prime = pencil.prime();
    let table = relation_table_by_polynomials(prime);
    if oracle {
        let retraced = tracer::relation_table_by_tracer(&pencil);
        if retraced != table {
            return Err(CliError::new(
                1,
                format!("tracer oracle disagrees with the polynomial table for p = {p}"),
            ));
        }
    }
    let mut roots = Vec::new();
    for n in divisors(p + 1) {
        if n >= 3 {
            roots.push(RootSet {
                n,
                zeros: coefficients_by_polynomial(n, prime).into_iter().collect(),
            });
        }
    }
    let payload = TablePayload {
        roots,
        cells: table
            .iter()
            .map(|(alpha, beta, n)| TableCell { alpha, beta, n })
            .collect(),
        oracle_checked: oracle,
    };
    let meta = Metadata::with_pencil("table", p, pencil.c().value());
    let text = match format {
        Format::Json => json_document(&meta, &payload),
        Format::Csv => {
            let mut out = String::from("alpha,beta,n\n");
            for cell in &payload.cells {
                let _ = writeln!(out, "{},{},{}", cell.alpha, cell.beta, cell.n);
            }
            out
        }
        Format::Plain => render_table_plain(p, pencil.c().value(), &table, &payload.roots),
    };
    Ok(CmdOutput::ok(text))
}

fn render_table_plain(p: u64, c: u64, table: &RelationTable, roots: &[RootSet]) -> String {
    let mut out = format!("relation table of PG(2,{p}), c = {c} (rows: inner, columns: outer)\n");
    let width = 5;
    let _ = write!(out, "{:>width$} |", "");
    for beta in 1..p {
        let _ = write!(out, "{:>width$}", format!("O_{beta}"));
    }
    out.push('\n');
    let _ = write!(out, "{:-<w$}", "", w = (width + 2) + width * (p as usize - 1));
    out.push('\n');
    for alpha in 1..p {
        let _ = write!(out, "{:>width$} |", format!("O_{alpha}"));
        for beta in 1..p {
            match table.get(alpha, beta) {
                Some(n) => {
                    let _ = write!(out, "{n:>width$}");
                }
                None => {
                    let _ = write!(out, "{:>width$}", ".");
                }
            }
        }
        out.push('\n');
    }
    for set in roots {
        let list = set
            .zeros
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(out, "zeros of P_{} mod {p}: {{{list}}}", set.n);
    }
    out
}

// ---- coeffs ----

#[derive(Serialize)]
struct CoeffMethods {
    polynomial: Vec<u64>,
    iteration: Option<Vec<u64>>,
    doubling: Option<Vec<u64>>,
}

#[derive(Serialize)]
struct CoeffsPayload {
    n: u64,
    coefficients: Vec<u64>,
    methods: CoeffMethods,
    agree: bool,
}

pub fn cmd_coeffs(p: u64, n: u64, c: Option<u64>, format: Format) -> Result<CmdOutput, CliError> {
    let pencil = build_pencil(p, c)?;
    let prime = pencil.prime();
    if n < 3 || (p + 1) % n != 0 {
        return Err(CliError::new(
            3,
            format!("n = {n} must be at least 3 and divide p + 1 = {}", p + 1),
        ));
    }
    let by_poly = coefficients_by_polynomial(n, prime);
    let iteration = if n % 2 == 1 {
        Some(coefficients_by_iteration(n, prime).map_err(|e| CliError::new(3, e.to_string()))?)
    } else {
        None
    };
    // for even n with n/2 >= 3: image of the half coefficients under
    // k ↦ 2/(1 ∓ k^(-1/2)), minus the half family itself
    let doubling: Option<BTreeSet<u64>> = if n % 2 == 0 && n / 2 >= 3 {
        let halves = coefficients_by_polynomial(n / 2, prime);
        let mut images = BTreeSet::new();
        let mut ok = true;
        for &k in &halves {
            match double_coefficient(prime.fp_u(k)) {
                Ok(hs) => images.extend(hs.into_iter().map(|h| h.value())),
                Err(_) => ok = false,
            }
        }
        ok.then(|| images.difference(&halves).copied().collect())
    } else {
        None
    };
    let agree = iteration.as_ref().map_or(true, |i| *i == by_poly)
        && doubling.as_ref().map_or(true, |d| *d == by_poly);
    let payload = CoeffsPayload {
        n,
        coefficients: by_poly.iter().copied().collect(),
        methods: CoeffMethods {
            polynomial: by_poly.iter().copied().collect(),
            iteration: iteration.map(|s| s.into_iter().collect()),
            doubling: doubling.map(|s: BTreeSet<u64>| s.into_iter().collect()),
        },
        agree,
    };
    let meta = Metadata::with_pencil("coeffs", p, pencil.c().value());
    let text = match format {
        Format::Json => json_document(&meta, &payload),
        Format::Csv => {
            let mut out = String::from("n,k\n");
            for k in &payload.coefficients {
                let _ = writeln!(out, "{n},{k}");
            }
            out
        }
        Format::Plain => {
            let fmt_set = |ks: &[u64]| {
                let inner = ks
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(", ");
                format!("{{{inner}}}")
            };
            let mut out = format!(
                "Poncelet coefficients for {n}-gons in PG(2,{p}), c = {}: {}\n",
                pencil.c(),
                fmt_set(&payload.coefficients)
            );
            let _ = writeln!(out, "  polynomial: {}", fmt_set(&payload.methods.polynomial));
            if let Some(i) = &payload.methods.iteration {
                let _ = writeln!(out, "  iteration:  {}", fmt_set(i));
            }
            if let Some(d) = &payload.methods.doubling {
                let _ = writeln!(out, "  doubling:   {}", fmt_set(d));
            }
            let _ = writeln!(out, "  methods agree: {}", if agree { "yes" } else { "NO" });
            out
        }
    };
    let exit_code = if agree { 0 } else { 1 };
    Ok(CmdOutput { text, exit_code })
}

// ---- poly ----

#[derive(Serialize)]
struct PolyPayload {
    n: u64,
    degree: u64,
    coefficients: Vec<String>,
    rendered: String,
}

pub fn cmd_poly(n: u64, format: Format) -> Result<CmdOutput, CliError> {
    if n < 3 {
        return Err(CliError::new(3, format!("n = {n} must be at least 3")));
    }
    let poly = poncelet_polynomial(n);
    let payload = PolyPayload {
        n,
        degree: totient(n) / 2,
        coefficients: poly.coeffs().iter().map(|c| c.to_string()).collect(),
        rendered: poly.to_string(),
    };
    let meta = Metadata::new("poly");
    let text = match format {
        Format::Json => json_document(&meta, &payload),
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (i, c) in payload.coefficients.iter().enumerate() {
                let _ = writeln!(out, "{i},{c}");
            }
            out
        }
        Format::Plain => {
            let mut out = format!("P_{n}(k) = {}\n", payload.rendered);
            let _ = writeln!(out, "degree: {} (= phi({n})/2)", payload.degree);
            let _ = writeln!(
                out,
                "coefficients (ascending): {}",
                payload.coefficients.join(" ")
            );
            out
        }
    };
    Ok(CmdOutput::ok(text))
}

// ---- trace ----

#[derive(Serialize)]
struct TracePayload {
    alpha: u64,
    beta: u64,
    n: u64,
    start: [u64; 3],
    vertices: Vec<[u64; 3]>,
    contacts: Vec<[u64; 3]>,
    sum_identities: bool,
}

fn coords_of(pt: &ProjPoint) -> [u64; 3] {
    let c = pt.coords();
    [c[0].value(), c[1].value(), c[2].value()]
}

fn parse_start(prime: Prime, s: &str) -> Result<ProjPoint, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::new(
            5,
            format!("start point '{s}' must be three comma-separated integers"),
        ));
    }
    let mut vals = [0i64; 3];
    for (v, part) in vals.iter_mut().zip(&parts) {
        *v = part
            .trim()
            .parse::<i64>()
            .map_err(|_| CliError::new(5, format!("start point '{s}' has a non-integer entry")))?;
    }
    if vals.iter().all(|&v| v.rem_euclid(prime.value() as i64) == 0) {
        return Err(CliError::new(5, format!("start point '{s}' is the zero triple")));
    }
    Ok(ProjPoint::from_values(prime, vals))
}

pub fn cmd_trace(
    p: u64,
    alpha: u64,
    beta: u64,
    start: Option<&str>,
    c: Option<u64>,
    format: Format,
) -> Result<CmdOutput, CliError> {
    let pencil = build_pencil(p, c)?;
    let prime = pencil.prime();
    check_index("alpha", alpha, p)?;
    check_index("beta", beta, p)?;
    if alpha == beta {
        return Err(CliError::new(4, "alpha and beta must differ".to_string()));
    }
    let start_point = match start {
        Some(s) => parse_start(prime, s)?,
        None => pencil.conic(beta).points()[0],
    };
    let polygon = tracer::trace(&pencil, alpha, beta, &start_point).map_err(|e| match e {
        TraceError::NotDiamond { .. } => CliError::new(4, e.to_string()),
        TraceError::StartNotOnConic { .. } => CliError::new(5, e.to_string()),
    })?;
    let payload = TracePayload {
        alpha,
        beta,
        n: polygon.n(),
        start: coords_of(&start_point),
        vertices: polygon.vertices().iter().map(coords_of).collect(),
        contacts: polygon.contacts().iter().map(coords_of).collect(),
        sum_identities: tracer::check_sum_identities(&pencil, &polygon),
    };
    let meta = Metadata::with_pencil("trace", p, pencil.c().value());
    let text = match format {
        Format::Json => json_document(&meta, &payload),
        Format::Csv => {
            let mut out =
                String::from("index,vertex_x,vertex_y,vertex_z,contact_x,contact_y,contact_z\n");
            for (i, (v, a)) in payload.vertices.iter().zip(&payload.contacts).enumerate() {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    i + 1,
                    v[0],
                    v[1],
                    v[2],
                    a[0],
                    a[1],
                    a[2]
                );
            }
            out
        }
        Format::Plain => {
            let mut out = format!(
                "PG(2,{p}), c = {}: polygon for (O_{alpha}, O_{beta}) from ({} : {} : {})\n",
                pencil.c(),
                payload.start[0],
                payload.start[1],
                payload.start[2]
            );
            let _ = writeln!(out, "n = {}", payload.n);
            for (i, (v, a)) in payload.vertices.iter().zip(&payload.contacts).enumerate() {
                let _ = writeln!(
                    out,
                    "B_{} = ({} : {} : {})   A_{} = ({} : {} : {})",
                    i + 1,
                    v[0],
                    v[1],
                    v[2],
                    i + 1,
                    a[0],
                    a[1],
                    a[2]
                );
            }
            let _ = writeln!(
                out,
                "sum identities: {}",
                if payload.sum_identities { "ok" } else { "VIOLATED" }
            );
            out
        }
    };
    Ok(CmdOutput::ok(text))
}

// ---- verify ----

#[derive(Serialize)]
struct VerifyCell {
    p: u64,
    n: u64,
    tracer: Vec<u64>,
    polynomial: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    iteration: Option<Vec<u64>>,
    cayley: Vec<u64>,
    pass: bool,
}

#[derive(Serialize)]
struct VerifyPayload {
    p_max: u64,
    n_max: u64,
    cells: Vec<VerifyCell>,
    checked: usize,
    failed: usize,
    all_pass: bool,
}

pub fn cmd_verify(p_max: u64, n_max: u64, format: Format) -> Result<CmdOutput, CliError> {
    let primes: Vec<u64> = (3..=p_max).filter(|&q| Prime::new(q).is_ok()).collect();
    let cells: Vec<VerifyCell> = primes
        .par_iter()
        .flat_map(|&q| {
            let prime = Prime::new(q).expect("filtered to primes");
            let pencil = Pencil::new(prime);
            let groups = tracer::census(&pencil, 1);
            let mut cells = Vec::new();
            for n in divisors(q + 1) {
                if n < 3 || n > n_max {
                    continue;
                }
                let traced: Vec<u64> = groups
                    .get(&n)
                    .map(|g| g.iter().copied().collect())
                    .unwrap_or_default();
                let by_poly: Vec<u64> =
                    coefficients_by_polynomial(n, prime).into_iter().collect();
                let iteration = (n % 2 == 1).then(|| {
                    coefficients_by_iteration(n, prime)
                        .expect("n odd and dividing p+1")
                        .into_iter()
                        .collect::<Vec<u64>>()
                });
                let cayley: Vec<u64> = criterion_polynomial(n)
                    .roots_mod(prime)
                    .into_iter()
                    .filter(|&k| k >= 1)
                    .collect();
                let pass = traced == by_poly
                    && cayley == by_poly
                    && iteration.as_ref().map_or(true, |i| *i == by_poly)
                    && by_poly.len() as u64 == totient(n) / 2;
                cells.push(VerifyCell {
                    p: q,
                    n,
                    tracer: traced,
                    polynomial: by_poly,
                    iteration,
                    cayley,
                    pass,
                });
            }
            cells
        })
        .collect();
    let mut cells = cells;
    cells.sort_by_key(|cell| (cell.p, cell.n));
    let failed = cells.iter().filter(|c| !c.pass).count();
    let payload = VerifyPayload {
        p_max,
        n_max,
        checked: cells.len(),
        failed,
        all_pass: failed == 0,
        cells,
    };
    let meta = Metadata::new("verify");
    let text = match format {
        Format::Json => json_document(&meta, &payload),
        Format::Csv => {
            let mut out = String::from("p,n,pass\n");
            for cell in &payload.cells {
                let _ = writeln!(out, "{},{},{}", cell.p, cell.n, cell.pass);
            }
            out
        }
        Format::Plain => {
            let mut out = String::new();
            for cell in &payload.cells {
                let ks = cell
                    .polynomial
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(", ");
                let _ = writeln!(
                    out,
                    "p={:<4} n={:<3} {} {{{ks}}}",
                    cell.p,
                    cell.n,
                    if cell.pass { "ok  " } else { "FAIL" }
                );
            }
            let _ = writeln!(
                out,
                "{} cells checked, {} failed: {}",
                payload.checked,
                payload.failed,
                if payload.all_pass { "all methods agree" } else { "MISMATCH" }
            );
            out
        }
    };
    let exit_code = if failed == 0 { 0 } else { 1 };
    Ok(CmdOutput { text, exit_code })
}
