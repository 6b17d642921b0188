//! Text-producing commands. Each returns its full output so that the binary
//! only has to print it.

use std::fmt::Write;

use ordbase_core::domains::{
    approx_below, basis_chain_m, bisection_chain, way_below_c, way_below_m, MajorizationPoint, QuadraticSurd,
    RationalInterval, SigmaString,
};
use ordbase_core::effective::{
    computable_element_emitter, relation_emitter, trace, Alpha0, AlphaMajorization, CantorStrings, FiniteMap,
    IntervalBasis,
};
use ordbase_core::gallery::gallery;
use ordbase_core::rational::{int, parse_rational, Rational};
use ordbase_core::report::{ClauseKind, PosetReport};
use ordbase_core::topology::{lambda2_s1_realizer, tn_basis_construction};

use crate::error::CliError;

/// Carriers that can be enumerated and whose way-below relation can be
/// emitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Domain {
    /// `ℚ ∩ [0, 1]`.
    Rationals01,
    /// Rational points of `Λⁿ`.
    Majorization,
    /// Finite strings over `{0, …, n−1}`.
    CantorStrings,
    /// Rational intervals; `emit` lists those way-below `√2`.
    Sqrt2,
}

/// Prints `decode(0), …, decode(count − 1)`, one per line.
pub fn enumerate(domain: Domain, n: usize, count: u64) -> Result<String, CliError> {
    let mut out = String::new();
    match domain {
        Domain::Rationals01 => Alpha0.iter_from(0).take(count as usize).for_each(|q| writeln!(out, "{q}").unwrap()),
        Domain::Majorization => {
            let map = AlphaMajorization::new(majorization_dim(n)?);
            map.iter_from(0).take(count as usize).for_each(|x| writeln!(out, "{x}").unwrap());
        }
        Domain::CantorStrings => {
            let map = CantorStrings::new(alphabet(n)?);
            map.iter_from(0).take(count as usize).for_each(|s| writeln!(out, "{}", show_string(&s)).unwrap());
        }
        Domain::Sqrt2 => {
            IntervalBasis.iter_from(0).take(count as usize).for_each(|iv| writeln!(out, "{}", show_interval(&iv)).unwrap())
        }
    }
    Ok(out)
}

/// Prints the first `steps` outputs of the way-below emitter of `domain`,
/// one per line. A step whose pair is rejected prints `0`.
pub fn emit(domain: Domain, n: usize, steps: u64) -> Result<String, CliError> {
    let codes = match domain {
        Domain::Rationals01 => trace(&relation_emitter(Alpha0, |x: &Rational, y: &Rational| *x == int(0) || x < y), steps),
        Domain::Majorization => {
            let map = AlphaMajorization::new(majorization_dim(n)?);
            trace(&relation_emitter(map, |x: &MajorizationPoint, y: &MajorizationPoint| way_below_m(x, y).expect("same dimension")), steps)
        }
        Domain::CantorStrings => {
            let map = CantorStrings::new(alphabet(n)?);
            trace(&relation_emitter(map, |x: &SigmaString, y: &SigmaString| way_below_c(x, y, 0).expect("finite strings")), steps)
        }
        Domain::Sqrt2 => {
            let root = QuadraticSurd::sqrt2();
            trace(
                &computable_element_emitter(IntervalBasis, |b: &RationalInterval| match b.endpoints() {
                    None => true,
                    Some((lo, hi)) => root.gt_rational(lo) && root.lt_rational(hi),
                }),
                steps,
            )
        }
    };
    let mut out = String::new();
    for c in codes {
        writeln!(out, "{c}").unwrap();
    }
    Ok(out)
}

/// Domains accepted by `approx`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ApproxDomain {
    /// A point of `Λⁿ` written `(p/q,…)`.
    Majorization,
    /// A named real: `sqrt2`.
    Real,
}

/// Parses `(a,b,…)` into a point of `Λⁿ`.
pub fn parse_point(text: &str) -> Result<MajorizationPoint, CliError> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| CliError::Parse(format!("expected (a,b,...), found {text}")))?;
    let coords = inner.split(',').map(|c| parse_rational(c.trim())).collect::<Result<Vec<_>, _>>()?;
    Ok(MajorizationPoint::new(coords)?)
}

/// `approx majorization`: a rational `q ≪ x` with every partial sum within
/// `eps` of `x`, re-checked before printing.
pub fn approx_majorization(point: &str, eps: &str) -> Result<String, CliError> {
    let x = parse_point(point)?;
    let eps = parse_rational(eps)?;
    let q = approx_below(&x, &eps)?;
    let mut out = String::new();
    writeln!(out, "x = {x}").unwrap();
    writeln!(out, "eps = {eps}").unwrap();
    writeln!(out, "q = {q}").unwrap();
    let (sx, sq) = (x.partial_sums(), q.partial_sums());
    for k in 0..x.dim() - 1 {
        let ok = &sx[k] - &eps < sq[k] && sq[k] < sx[k];
        if !ok {
            return Err(CliError::Parse(format!("internal error: sandwich fails at k = {}", k + 1)));
        }
        writeln!(out, "s{}: {} < {} < {}", k + 1, &sx[k] - &eps, sq[k], sx[k]).unwrap();
    }
    Ok(out)
}

/// `approx real sqrt2`: the first bisection interval of `[1, 2]` of width
/// at most `width`.
pub fn approx_real(name: &str, width: &str) -> Result<String, CliError> {
    if name != "sqrt2" {
        return Err(CliError::Parse(format!("unknown real {name}; known: sqrt2")));
    }
    let width = parse_rational(width)?;
    if width <= int(0) {
        return Err(CliError::Parse(String::from("width must be positive")));
    }
    let root = QuadraticSurd::sqrt2();
    let mut out = String::new();
    for (step, iv) in bisection_chain(int(1), int(2), |q| root.gt_rational(q)).enumerate() {
        let (lo, hi) = iv.endpoints().expect("bisection intervals are closed");
        let w = hi - lo;
        if w <= width {
            let two = int(2);
            let bracketed = lo * lo < two && two < hi * hi;
            writeln!(out, "[{lo}, {hi}]").unwrap();
            writeln!(out, "width = {w}").unwrap();
            writeln!(out, "steps = {step}").unwrap();
            writeln!(out, "lo^2 < 2 < hi^2: {bracketed}").unwrap();
            return Ok(out);
        }
    }
    unreachable!("bisection chain is infinite")
}

/// Prints every gallery instance with its clauses. Returns the text and
/// whether every theorem-backed clause passed.
pub fn gallery_text() -> (String, bool) {
    let mut out = String::new();
    let mut ok = true;
    for inst in gallery() {
        let p = &inst.poset;
        writeln!(out, "== {} ==", inst.name).unwrap();
        writeln!(out, "claim: {}", inst.claim).unwrap();
        writeln!(out, "elements: {}", p.labels().join(", ")).unwrap();
        let covers: Vec<String> = p.cover_pairs().iter().map(|&(a, b)| format!("{} < {}", p.label(a), p.label(b))).collect();
        writeln!(out, "covers: {}", if covers.is_empty() { String::from("none") } else { covers.join(", ") }).unwrap();
        if let Some(v) = &inst.multi_utility {
            for (name, values) in v.names.iter().zip(&v.values) {
                let vals: Vec<String> = p.labels().iter().zip(values).map(|(l, x)| format!("{l}: {x}")).collect();
                writeln!(out, "function {name}: {}", vals.join(", ")).unwrap();
            }
        }
        write_clauses(&mut out, &inst.report);
        writeln!(out, "not checked: {}", inst.not_checked).unwrap();
        writeln!(out).unwrap();
        ok &= inst.report.failures().next().is_none();
    }
    (out, ok)
}

/// One line per clause: status, kind, name and note.
pub fn write_clauses(out: &mut String, r: &PosetReport) {
    for e in &r.entries {
        let status = match (e.kind, e.holds) {
            (ClauseKind::Property, Some(h)) => if h { "yes" } else { "no" },
            (_, Some(true)) => "pass",
            (_, Some(false)) => "FAIL",
            (_, None) => "skip",
        };
        write!(out, "  {status:<4} {:<10} {}", e.kind.as_str(), e.property).unwrap();
        if let Some(note) = &e.note {
            write!(out, " ({note})").unwrap();
        }
        writeln!(out).unwrap();
    }
}

/// Fixed walkthrough: the `√2` interval chain, a rational basis chain in
/// `Λ³` and the first realized boxes for `Λ²` with `V = {s₁}`.
pub fn demo() -> String {
    let mut out = String::new();
    writeln!(out, "sqrt2 bisection chain:").unwrap();
    let root = QuadraticSurd::sqrt2();
    for (i, iv) in bisection_chain(int(1), int(2), |q| root.gt_rational(q)).take(9).enumerate() {
        writeln!(out, "  {i}: {}", show_interval(&iv)).unwrap();
    }
    let x = parse_point("(1/2,1/3,1/6)").expect("valid point");
    writeln!(out, "basis chain below {x}:").unwrap();
    for (i, q) in basis_chain_m(&x).take(5).enumerate() {
        writeln!(out, "  {i}: {q}").unwrap();
    }
    writeln!(out, "realized boxes for s1 on the two-dimensional simplex:").unwrap();
    for t in tn_basis_construction(2, lambda2_s1_realizer, 8, 10_000) {
        writeln!(out, "  code {}: ({}, {}) -> {}", t.code, t.lower[0], t.upper[0], t.element).unwrap();
    }
    out
}

fn majorization_dim(n: usize) -> Result<usize, CliError> {
    if n < 2 {
        return Err(CliError::Parse(format!("majorization needs n >= 2, found {n}")));
    }
    Ok(n)
}

fn alphabet(n: usize) -> Result<u8, CliError> {
    match u8::try_from(n) {
        Ok(k @ 1..=10) => Ok(k),
        _ => Err(CliError::Parse(format!("alphabet size must be between 1 and 10, found {n}"))),
    }
}

/// `ε` for the empty string, otherwise the symbols.
pub fn show_string(s: &SigmaString) -> String {
    match s.len() {
        Some(0) => String::from("ε"),
        Some(len) => (0..len).map(|i| char::from(b'0' + s.symbol(i).expect("within length"))).collect(),
        None => format!("{s:?}"),
    }
}

/// `⊥` or `[lo, hi]`.
pub fn show_interval(iv: &RationalInterval) -> String {
    match iv.endpoints() {
        None => String::from("⊥"),
        Some((lo, hi)) => format!("[{lo}, {hi}]"),
    }
}
