//! Enumeration of weight-3 cube-root candidates and the pair scan.
//!
//! A search enumerates exponent tuples over one base family, keeps those whose
//! expansion starts at a positive power of `q`, expands each survivor once,
//! optionally drops tuples whose coefficients show no growth in their
//! 3-adic denominators, and then classifies every unordered pair (including
//! each tuple with itself) at every prime `5 <= p <= prime_max`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::asd::{
    asd_check, classify_pair, vp, CaseKind, CoefficientTable, PrimeCase, PrimeReport, Residues,
    Valuation,
};
use crate::catalog::NamedForm;
use crate::error::{Error, Result};
use crate::eta::{TupleSpec, BASES_8};
use crate::ligozat::kronecker;
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub bases: [u64; 4],
    /// Each exponent lies in `[-exponent_bound, exponent_bound]`.
    pub exponent_bound: i64,
    /// Sum of the four exponents; 18 gives weight 3 for cube roots.
    pub weight_sum: i64,
    pub prime_max: u64,
    /// Largest index `np` read by the scans.
    pub n_bound: u64,
    pub denominator_filter: bool,
    pub filter_prime: u64,
    /// Growth needed to keep a candidate: the window maximum of the
    /// denominator exponent must exceed this.
    pub filter_threshold: i64,
    pub witness_min: usize,
    /// Also admit tuples whose expansion lives in a fractional power of `q`.
    pub allow_ramified: bool,
    /// Worker threads; `1` runs sequentially, `0` uses every core.
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            bases: BASES_8,
            exponent_bound: 23,
            weight_sum: 18,
            prime_max: 47,
            n_bound: 500,
            denominator_filter: true,
            filter_prime: 3,
            filter_threshold: 0,
            witness_min: 2,
            allow_ramified: false,
            jobs: 0,
        }
    }
}

impl SearchConfig {
    fn parallel(&self) -> bool {
        self.jobs != 1 && par::AVAILABLE
    }

    /// Primes scanned: `5 <= p <= prime_max`.
    pub fn primes(&self) -> Vec<u64> {
        primes_between(5, self.prime_max)
    }
}

pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(2)..=hi)
        .filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect()
}

/// All tuples with entries in `[-B, B]` summing to `weight_sum`, in
/// lexicographic order.
pub fn enumerate(cfg: &SearchConfig) -> impl Iterator<Item = TupleSpec> + '_ {
    let b = cfg.exponent_bound.max(0);
    let range = move || -b..=b;
    range().flat_map(move |m| {
        range().flat_map(move |n| {
            range().filter_map(move |r| {
                let s = cfg.weight_sum - m - n - r;
                (s.abs() <= b).then(|| TupleSpec::cube_root(cfg.bases, [m, n, r, s]))
            })
        })
    })
}

/// Whether the expansion of `t` starts at a positive exponent, and (unless
/// ramified tuples are allowed) at an integral one.
pub fn admissible(t: &TupleSpec, allow_ramified: bool) -> bool {
    let lead = t.to_eta().leading_exponent();
    lead > num_rational::Rational64::zero() && (allow_ramified || lead.is_integer())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterDecision {
    pub keep: bool,
    /// Largest `-vp(a_n)` over the whole window (0 if all p-integral).
    pub max_exponent: i64,
    /// The same over the first half of the window.
    pub first_half_max: i64,
}

/// Denominator growth of `table` at `p` over `n <= window`.
pub fn denominator_profile(
    table: &CoefficientTable,
    window: u64,
    p: u64,
    threshold: i64,
) -> FilterDecision {
    let window = window.min(table.max_n());
    let d = |n: u64| match vp(&table.get(n), p) {
        Valuation::Finite(v) if v < 0 => -v,
        _ => 0,
    };
    let first_half_max = (1..=window / 2).map(d).max().unwrap_or(0);
    let max_exponent = (window / 2 + 1..=window)
        .map(d)
        .max()
        .unwrap_or(0)
        .max(first_half_max);
    FilterDecision {
        keep: max_exponent > threshold && max_exponent > first_half_max,
        max_exponent,
        first_half_max,
    }
}

/// Expands `t` to `window` coefficients and applies [`denominator_profile`].
pub fn denominator_filter(
    t: &TupleSpec,
    window: u64,
    p: u64,
    threshold: i64,
) -> Result<FilterDecision> {
    let table = expand_table(t, window)?;
    Ok(denominator_profile(&table, window, p, threshold))
}

/// Coefficient table of `t` through index `n_bound`.
pub fn expand_table(t: &TupleSpec, n_bound: u64) -> Result<CoefficientTable> {
    let eq = t.to_eta();
    let mu = *eq.leading_exponent().denom() as u64;
    let order = (n_bound / mu + 1) as i64;
    let series = eq.expand(order)?;
    Ok(CoefficientTable::from_series(t.to_string(), &series)?.truncated(n_bound))
}

/// A tuple with its table and residues at each scanned prime.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub tuple: TupleSpec,
    pub table: CoefficientTable,
    pub residues: Vec<Residues>,
}

impl Candidate {
    pub fn new(tuple: TupleSpec, cfg: &SearchConfig) -> Result<Self> {
        let table = expand_table(&tuple, cfg.n_bound)?;
        Ok(Self::from_table(tuple, table, cfg))
    }

    pub fn from_table(tuple: TupleSpec, table: CoefficientTable, cfg: &SearchConfig) -> Self {
        let residues = cfg.primes().iter().map(|&p| table.residues(p)).collect();
        Candidate {
            tuple,
            table,
            residues,
        }
    }
}

/// Per-prime classification of `(a, b)`; `None` as soon as a prime gives no match.
pub fn scan_pair(
    a: &Candidate,
    b: &Candidate,
    cfg: &SearchConfig,
) -> Result<Option<Vec<PrimeReport>>> {
    let mut out = Vec::with_capacity(a.residues.len());
    for (ra, rb) in a.residues.iter().zip(&b.residues) {
        let n_max = cfg.n_bound / ra.p();
        let rb = if a.tuple == b.tuple { ra } else { rb };
        let report = classify_pair(ra, rb, n_max, cfg.witness_min)?;
        if report.case == PrimeCase::NoMatch {
            return Ok(None);
        }
        out.push(report);
    }
    Ok(Some(out))
}

/// Assignment of Case 1 / Case 2 to residue classes of `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CasePattern {
    pub modulus: u64,
    pub classes: BTreeMap<u64, CaseKind>,
}

impl fmt::Display for CasePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut by_kind: BTreeMap<CaseKind, Vec<u64>> = BTreeMap::new();
        for (&r, &k) in &self.classes {
            by_kind.entry(k).or_default().push(r);
        }
        if by_kind.is_empty() {
            return write!(f, "undetermined");
        }
        if self.modulus == 1 || by_kind.len() == 1 {
            let k = by_kind.keys().next().copied().unwrap_or(CaseKind::NoMatch);
            return write!(f, "{k} at every prime");
        }
        let parts: Vec<String> = by_kind
            .iter()
            .map(|(k, rs)| {
                let rs: Vec<String> = rs.iter().map(u64::to_string).collect();
                format!("{k} iff p ≡ {} mod {}", rs.join(", "), self.modulus)
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

fn least_modulus(
    per_prime: &[PrimeReport],
    label: impl Fn(&PrimeReport) -> Option<CaseKind>,
) -> Option<u64> {
    'modulus: for modulus in 1..=24u64 {
        let mut classes = BTreeMap::new();
        for r in per_prime {
            let Some(k) = label(r) else { continue };
            match classes.insert(r.p % modulus, k) {
                Some(prev) if prev != k => continue 'modulus,
                _ => {}
            }
        }
        return Some(modulus);
    }
    None
}

/// Least `m <= 24` such that the case at each scanned prime depends only on `p mod m`.
///
/// Degenerate primes, where both cases hold, do not constrain the split
/// between Case 1 and Case 2. They get a class of their own when the set
/// of degenerate primes is itself periodic with a small enough modulus,
/// and are left out of the pattern otherwise.
pub fn infer_pattern(per_prime: &[PrimeReport]) -> Option<CasePattern> {
    let kind = |r: &PrimeReport| Some(r.case.kind()).filter(|&k| k != CaseKind::Both);
    let m1 = least_modulus(per_prime, kind)?;
    let m2 =
        least_modulus(per_prime, |r| {
            Some(r.case.kind() == CaseKind::Both).map(|b| {
                if b {
                    CaseKind::Both
                } else {
                    CaseKind::One
                }
            })
        });
    let (modulus, keep_both) = match m2.map(|m| m.lcm(&m1)) {
        Some(m) if m <= 24 => (m, true),
        _ => (m1, false),
    };
    let mut classes = BTreeMap::new();
    for r in per_prime {
        let k = r.case.kind();
        if k != CaseKind::Both || keep_both {
            classes.insert(r.p % modulus, k);
        }
    }
    Some(CasePattern { modulus, classes })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewformMatch {
    pub form: String,
    /// Discriminant of the quadratic twist; 1 for no twist.
    pub discriminant: i64,
    /// Nebentypus discriminant of the matched form, when known.
    pub nebentypus: Option<i64>,
    /// Primes where `c_p` equals the scan constant itself, not only its square.
    pub signed_agreements: usize,
    /// `(p, c_p)` of the twisted form.
    pub coefficients: Vec<(u64, i64)>,
}

impl NewformMatch {
    pub fn describe(&self) -> String {
        if self.discriminant == 1 {
            self.form.clone()
        } else {
            format!("{} twisted by ({}|.)", self.form, self.discriminant)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidatePair {
    pub h1: TupleSpec,
    pub h2: TupleSpec,
    pub per_prime: Vec<PrimeReport>,
    pub pattern: Option<CasePattern>,
    pub matched_newform: Option<NewformMatch>,
}

impl CandidatePair {
    pub fn new(h1: TupleSpec, h2: TupleSpec, per_prime: Vec<PrimeReport>) -> Self {
        let pattern = infer_pattern(&per_prime);
        CandidatePair {
            h1,
            h2,
            per_prime,
            pattern,
            matched_newform: None,
        }
    }
}

/// Discriminants of the quadratic characters of conductor at most 24,
/// starting with the trivial character.
pub const TWIST_DISCRIMINANTS: [i64; 18] = [
    1, -3, -4, 5, -7, -8, 8, -11, 12, 13, -15, 17, -19, -20, 21, -23, -24, 24,
];

fn residue_eq(x: i64, y: i64, m: u64) -> bool {
    (x as i128 - y as i128).rem_euclid(m as i128) == 0
}

/// Quadratic twists of `candidates` whose `c_p` reproduce every scan
/// constant of `pair` modulo `p^2`. Among full matches the one with the most
/// signed agreements wins; ties keep catalog and twist order.
pub fn match_newform(
    pair: &CandidatePair,
    candidates: &[NamedForm],
) -> Result<Option<NewformMatch>> {
    let pmax = pair.per_prime.iter().map(|r| r.p).max().unwrap_or(0);
    let mut best: Option<NewformMatch> = None;
    for cand in candidates {
        let series = cand.expand(pmax as i64 + 1)?;
        if series.ramification() != 1 {
            continue;
        }
        let coeff = |p: u64| -> Option<i64> {
            let c = series.grid_coefficient(p as i64);
            c.is_integer().then(|| c.to_integer().to_i64()).flatten()
        };
        'twist: for &d in &TWIST_DISCRIMINANTS {
            let mut signed = 0;
            let mut coefficients = Vec::with_capacity(pair.per_prime.len());
            for r in &pair.per_prime {
                let m = r.p * r.p;
                let Some(g) = coeff(r.p) else { continue 'twist };
                let c = g * kronecker(d, r.p as i64) as i64;
                let ok = match r.case {
                    PrimeCase::CaseOne { first, second } => {
                        residue_eq(c, first, m) && residue_eq(c, second, m)
                    }
                    PrimeCase::CaseTwo(k) => {
                        let sq = (c as i128 * c as i128).rem_euclid(m as i128) as i64;
                        residue_eq(sq, k.cp_sq, m)
                    }
                    PrimeCase::NoMatch => false,
                };
                if !ok {
                    continue 'twist;
                }
                let exact = match r.case {
                    PrimeCase::CaseOne { .. } => true,
                    PrimeCase::CaseTwo(k) => residue_eq(c, k.ab, m),
                    PrimeCase::NoMatch => false,
                };
                signed += usize::from(exact);
                coefficients.push((r.p, c));
            }
            let better = best.as_ref().is_none_or(|b| signed > b.signed_agreements);
            if better {
                best = Some(NewformMatch {
                    form: cand.name.to_string(),
                    discriminant: d,
                    nebentypus: cand.nebentypus,
                    signed_agreements: signed,
                    coefficients,
                });
            }
        }
    }
    Ok(best)
}

/// Result of checking a matched pair against the congruence definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchCheck {
    pub p: u64,
    /// The forms checked, e.g. `h1`, `h1+h2`, `h1-h2`.
    pub combinations: Vec<(String, bool)>,
}

impl MatchCheck {
    pub fn passed(&self) -> bool {
        self.combinations.iter().all(|(_, ok)| *ok)
    }
}

/// Runs [`asd_check`] at every scanned prime with the matched `c_p`: on the
/// two forms separately at Case 1 primes, and on `h1 ± alpha h2` with
/// `c_p` and `-c_p` at Case 2 primes where `alpha^2 ≡ 1`.
pub fn verify_match(
    a: &CoefficientTable,
    b: &CoefficientTable,
    pair: &CandidatePair,
    m: &NewformMatch,
    weight: u32,
    n_bound: u64,
) -> Result<Vec<MatchCheck>> {
    let neb = m
        .nebentypus
        .ok_or_else(|| Error::InvalidArgument("match has no nebentypus".into()))?;
    let one = BigRational::from_integer(1.into());
    let sum = a.add_scaled(b, &one)?;
    let diff = a.add_scaled(b, &-one)?;
    let mut out = Vec::new();
    for (r, &(p, c)) in pair.per_prime.iter().zip(&m.coefficients) {
        let chi =
            kronecker(neb, p as i64) as i64 * kronecker(m.discriminant, p as i64).pow(2) as i64;
        let n_max = n_bound / p;
        let check = |t: &CoefficientTable, c: i64| -> Result<bool> {
            Ok(asd_check(t, &BigInt::from(c), chi, weight, p, n_max)?.passed())
        };
        let combinations = match r.case {
            PrimeCase::CaseTwo(k) if !k.degenerate && k.alpha_sq == Some(1) => {
                vec![
                    ("h1+h2".to_string(), check(&sum, c)?),
                    ("h1-h2".to_string(), check(&diff, -c)?),
                ]
            }
            _ => vec![
                ("h1".to_string(), check(a, c)?),
                ("h2".to_string(), check(b, c)?),
            ],
        };
        out.push(MatchCheck { p, combinations });
    }
    Ok(out)
}

/// Scan statistics for one search run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub enumerated: usize,
    pub admissible: usize,
    pub dropped_by_filter: usize,
    pub candidates: usize,
    pub pairs_scanned: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    pub config: SearchConfig,
    pub stats: SearchStats,
    pub pairs: Vec<CandidatePair>,
}

/// Expands `tuples` (deduplicated and sorted) into candidates, applying the
/// denominator filter when configured. Returns kept candidates and the
/// number dropped.
pub fn prepare_candidates(
    tuples: &[TupleSpec],
    cfg: &SearchConfig,
) -> Result<(Vec<Candidate>, usize)> {
    let mut tuples = tuples.to_vec();
    tuples.sort();
    tuples.dedup();
    let parallel = cfg.parallel();
    let prepared: Vec<Result<Option<Candidate>>> = par::map(&tuples, parallel, |t| {
        let table = expand_table(t, cfg.n_bound)?;
        if cfg.denominator_filter {
            let d =
                denominator_profile(&table, cfg.n_bound, cfg.filter_prime, cfg.filter_threshold);
            if !d.keep {
                return Ok(None);
            }
        }
        Ok(Some(Candidate::from_table(*t, table, cfg)))
    });
    let mut kept = Vec::new();
    let mut dropped = 0;
    for p in prepared {
        match p? {
            Some(c) => kept.push(c),
            None => dropped += 1,
        }
    }
    Ok((kept, dropped))
}

/// Classifies every unordered pair of `candidates` (including each with
/// itself) and keeps pairs assigned Case 1 or Case 2 at every prime.
pub fn scan_candidates(candidates: &[Candidate], cfg: &SearchConfig) -> Result<Vec<CandidatePair>> {
    let parallel = cfg.parallel();
    let n = candidates.len();
    let found: Vec<Result<CandidatePair>> = par::flat_map_range(n, parallel, |i| {
        let mut out = Vec::new();
        for j in i..n {
            match scan_pair(&candidates[i], &candidates[j], cfg) {
                Ok(Some(per_prime)) => out.push(Ok(CandidatePair::new(
                    candidates[i].tuple,
                    candidates[j].tuple,
                    per_prime,
                ))),
                Ok(None) => {}
                Err(e) => out.push(Err(e)),
            }
        }
        out
    });
    found.into_iter().collect()
}

/// [`prepare_candidates`] followed by [`scan_candidates`].
pub fn pair_scan(candidates: &[TupleSpec], cfg: &SearchConfig) -> Result<Vec<CandidatePair>> {
    par::with_jobs(cfg.jobs, || {
        let (prepared, _) = prepare_candidates(candidates, cfg)?;
        scan_candidates(&prepared, cfg)
    })
}

/// The full pipeline: enumerate, admit, expand, filter, scan, match.
pub fn run_search(cfg: &SearchConfig, newforms: &[NamedForm]) -> Result<SearchOutcome> {
    par::with_jobs(cfg.jobs, || {
        let mut stats = SearchStats::default();
        let tuples: Vec<TupleSpec> = enumerate(cfg)
            .inspect(|_| stats.enumerated += 1)
            .filter(|t| admissible(t, cfg.allow_ramified))
            .collect();
        stats.admissible = tuples.len();
        let (candidates, dropped) = prepare_candidates(&tuples, cfg)?;
        stats.dropped_by_filter = dropped;
        stats.candidates = candidates.len();
        stats.pairs_scanned = candidates.len() * (candidates.len() + 1) / 2;
        let mut pairs = scan_candidates(&candidates, cfg)?;
        for pair in &mut pairs {
            pair.matched_newform = match_newform(pair, newforms)?;
        }
        Ok(SearchOutcome {
            config: cfg.clone(),
            stats,
            pairs,
        })
    })
}
