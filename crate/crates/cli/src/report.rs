//! Invariants of one interval, computed by the recursion engine, by brute
//! force on the materialized interval, or both.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::time::Instant;

use forest_poset::engine::{self, decompose};
use forest_poset::interval::interval;
use forest_poset::invariants::{
    cardinal_polynomial, characteristic_polynomial, m_polynomial, mobius_number, z_polynomial,
};
use forest_poset::{BivariatePolynomial, Forest, MarkedTreePair, Result, UnivariatePolynomial};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::export;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Fast,
    Brute,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub chi: UnivariatePolynomial,
    /// Roots of `chi` with multiplicity, when it splits over the integers.
    pub exponents: Option<Vec<u64>>,
    pub mobius: BigInt,
    pub m: BivariatePolynomial,
    pub z: BivariatePolynomial,
    pub card: UnivariatePolynomial,
}

#[derive(Clone, Debug, Default)]
pub struct Timings {
    pub fast_ms: Option<f64>,
    pub brute_ms: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub lower: Forest,
    pub upper: Forest,
    pub pair: MarkedTreePair,
    pub method: Method,
    pub invariants: Invariants,
    /// Per-invariant agreement between the two methods, with `Method::Both`.
    pub agreement: Option<BTreeMap<&'static str, bool>>,
    pub timings: Option<Timings>,
    pub trace: Option<String>,
}

fn fast(pair: &MarkedTreePair) -> Invariants {
    let ex = engine::exponents(pair);
    let z = engine::z_fast(pair);
    Invariants {
        chi: ex.polynomial(),
        exponents: Some(ex.as_slice().to_vec()),
        mobius: engine::mobius_fast(pair),
        m: engine::m_fast(pair),
        card: z.substitute_y(&BigInt::zero()),
        z,
    }
}

fn brute(lower: &Forest, upper: &Forest) -> Result<Invariants> {
    let iv = interval(lower, upper)?;
    let p = iv.poset();
    let chi = characteristic_polynomial(p);
    Ok(Invariants {
        exponents: integer_roots(&chi),
        chi,
        mobius: mobius_number(p),
        m: m_polynomial(p),
        z: z_polynomial(p),
        card: cardinal_polynomial(p),
    })
}

/// Integer roots with multiplicity, in increasing order, or `None` if the
/// polynomial does not split into monic linear factors over the integers.
pub fn integer_roots(p: &UnivariatePolynomial) -> Option<Vec<u64>> {
    if !p.is_monic() && p.degree().is_some() {
        return None;
    }
    let mut rest = p.clone();
    let mut roots = Vec::new();
    while rest.degree().unwrap_or(0) > 0 {
        let c0 = rest.coefficient(0);
        let candidates: Box<dyn Iterator<Item = u64>> = if c0.is_zero() {
            Box::new(std::iter::once(0))
        } else {
            let bound: u64 = c0.abs().try_into().ok()?;
            Box::new((1..=bound).filter(move |r| (&c0 % BigInt::from(*r)).is_zero()))
        };
        let (root, quotient) = candidates
            .filter_map(|r| {
                let (q, rem) = rest.div_linear(&BigInt::from(r));
                rem.is_zero().then_some((r, q))
            })
            .next()?;
        roots.push(root);
        rest = quotient;
    }
    roots.sort_unstable();
    Some(roots)
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1000.0
}

/// Computes the invariants of `[lower, upper]`.
pub fn run(
    lower: &Forest,
    upper: &Forest,
    method: Method,
    timed: bool,
    traced: bool,
) -> Result<RunReport> {
    let pair = MarkedTreePair::from_interval(lower, upper)?;
    let mut timings = Timings::default();
    let mut fast_result = None;
    let mut brute_result = None;
    if method != Method::Brute {
        let start = Instant::now();
        fast_result = Some(fast(&pair));
        timings.fast_ms = Some(ms(start));
    }
    if method != Method::Fast {
        let start = Instant::now();
        brute_result = Some(brute(lower, upper)?);
        timings.brute_ms = Some(ms(start));
    }
    let agreement = match (&fast_result, &brute_result) {
        (Some(f), Some(b)) => Some(BTreeMap::from([
            ("chi", f.chi == b.chi),
            ("exponents", f.exponents == b.exponents),
            ("mobius", f.mobius == b.mobius),
            ("m_poly", f.m == b.m),
            ("z_poly", f.z == b.z),
            ("card", f.card == b.card),
        ])),
        _ => None,
    };
    let trace = traced.then(|| decompose(&pair).trace());
    Ok(RunReport {
        lower: lower.clone(),
        upper: upper.clone(),
        pair,
        method,
        invariants: fast_result.or(brute_result).unwrap(),
        agreement,
        timings: timed.then_some(timings),
        trace,
    })
}

impl RunReport {
    pub fn agrees(&self) -> bool {
        self.agreement
            .as_ref()
            .map_or(true, |a| a.values().all(|&ok| ok))
    }

    pub fn chi_factored(&self) -> String {
        match &self.invariants.exponents {
            Some(ex) => engine::ExponentMultiset::new(ex.clone()).factored('y'),
            None => self.invariants.chi.display('y').to_string(),
        }
    }

    fn method_name(&self) -> &'static str {
        match self.method {
            Method::Fast => "fast",
            Method::Brute => "brute",
            Method::Both => "both",
        }
    }

    pub fn to_json(&self) -> Value {
        let inv = &self.invariants;
        let marked: Vec<String> = self.pair.marked().iter().map(|v| v.to_string()).collect();
        json!({
            "subject": {
                "lower": self.lower.to_string(),
                "upper": self.upper.to_string(),
                "labels": self.upper.label_count(),
                "degree": self.pair.degree(),
                "marked": marked,
                "method": self.method_name(),
            },
            "chi_factored": self.chi_factored(),
            "chi_coeffs": export::univariate(&inv.chi),
            "exponents": inv.exponents,
            "mobius": export::integer(&inv.mobius),
            "m_poly": export::bivariate(&inv.m),
            "z_poly": export::bivariate(&inv.z),
            "card": export::univariate(&inv.card),
            "agreement": self.agreement,
            "timings": self.timings.as_ref().map(|t| json!({
                "fast_ms": t.fast_ms,
                "brute_ms": t.brute_ms,
            })),
        })
    }

    pub fn to_text(&self) -> String {
        let inv = &self.invariants;
        let mut out = String::new();
        let marked: Vec<String> = self.pair.marked().iter().map(|v| v.to_string()).collect();
        writeln!(out, "interval   [{}, {}]", self.lower, self.upper).unwrap();
        writeln!(out, "degree     {}", self.pair.degree()).unwrap();
        writeln!(
            out,
            "marked     {}",
            if marked.is_empty() {
                "-".into()
            } else {
                marked.join(" ")
            }
        )
        .unwrap();
        writeln!(out, "method     {}", self.method_name()).unwrap();
        writeln!(out, "chi        {}", self.chi_factored()).unwrap();
        writeln!(out, "           = {}", inv.chi.display('y')).unwrap();
        let ex = match &inv.exponents {
            Some(ex) if ex.is_empty() => "-".to_string(),
            Some(ex) => ex.iter().map(u64::to_string).collect::<Vec<_>>().join(" "),
            None => "chi has non-integer roots".to_string(),
        };
        writeln!(out, "exponents  {ex}").unwrap();
        writeln!(out, "mobius     {}", inv.mobius).unwrap();
        writeln!(out, "M          {}", inv.m).unwrap();
        writeln!(out, "Z          {}", inv.z).unwrap();
        writeln!(out, "Card       {}", inv.card.display('x')).unwrap();
        if let Some(agreement) = &self.agreement {
            let parts: Vec<String> = agreement
                .iter()
                .map(|(k, ok)| format!("{k}={}", if *ok { "ok" } else { "MISMATCH" }))
                .collect();
            writeln!(out, "agreement  {}", parts.join(" ")).unwrap();
        }
        if let Some(t) = &self.timings {
            for (name, v) in [("fast", t.fast_ms), ("brute", t.brute_ms)] {
                if let Some(v) = v {
                    writeln!(out, "time       {name} {v:.3} ms").unwrap();
                }
            }
        }
        if let Some(trace) = &self.trace {
            out.push_str("decomposition\n");
            for line in trace.lines() {
                writeln!(out, "  {line}").unwrap();
            }
        }
        out
    }
}
