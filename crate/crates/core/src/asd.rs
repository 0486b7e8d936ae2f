//! Atkin–Swinnerton-Dyer congruences: p-adic valuations, the integrality
//! check against a congruence form, and ratio scans modulo `p^2`.
//!
//! Scans read coefficients through [`Residues`], a per-prime reduction of a
//! [`CoefficientTable`] modulo `p^2`. A ratio `x_{np} / y_n` is only formed
//! when `y_n` is a p-adic unit and `x_{np}` is p-integral; every other `n`
//! (with `p ∤ n`) is counted as skipped.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::FracSeries;

/// p-adic valuation of a rational number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    /// The valuation of zero.
    Infinite,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

pub fn vp(x: &BigRational, p: u64) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    Valuation::Finite(vp_int(x.numer(), p) as i64 - vp_int(x.denom(), p) as i64)
}

fn vp_int(x: &BigInt, p: u64) -> u64 {
    let p = BigInt::from(p);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

fn vp_u64(mut x: u64, p: u64) -> i64 {
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// Representative of `x mod m` in `(-m/2, m/2]`.
pub fn symmetric(x: u64, m: u64) -> i64 {
    let x = x % m;
    if x > m / 2 {
        x as i64 - m as i64
    } else {
        x as i64
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

fn reduce_int(x: &BigInt, m: u64) -> u64 {
    x.mod_floor(&BigInt::from(m))
        .to_u64()
        .expect("residue below modulus")
}

fn reduce_i64(x: i64, m: u64) -> u64 {
    (x as i128).rem_euclid(m as i128) as u64
}

/// Fourier coefficients `a_1, ..., a_max` of `sum a_n q^(n/mu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    form_id: String,
    mu: u64,
    coeffs: Vec<BigRational>,
}

impl CoefficientTable {
    /// `coeffs[0]` is `a_1`.
    pub fn new(form_id: impl Into<String>, mu: u64, coeffs: Vec<BigRational>) -> Self {
        assert!(mu > 0, "mu must be positive");
        CoefficientTable {
            form_id: form_id.into(),
            mu,
            coeffs,
        }
    }

    pub fn from_integers(form_id: impl Into<String>, coeffs: &[i64]) -> Self {
        Self::new(
            form_id,
            1,
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// Reads `a_n` for `1 <= n < trunc` from the grid of `series`; `mu` is
    /// the series' ramification.
    pub fn from_series(form_id: impl Into<String>, series: &FracSeries) -> Result<Self> {
        if let Some((e, _)) = series.leading() {
            if e <= 0 {
                return Err(Error::NotCuspidal(
                    num_rational::Rational64::new(e, series.ramification() as i64).to_string(),
                ));
            }
        }
        let max_n = (series.trunc() - 1).max(0);
        let coeffs = (1..=max_n).map(|n| series.grid_coefficient(n)).collect();
        Ok(Self::new(form_id, series.ramification(), coeffs))
    }

    pub fn form_id(&self) -> &str {
        &self.form_id
    }

    pub fn mu(&self) -> u64 {
        self.mu
    }

    pub fn max_n(&self) -> u64 {
        self.coeffs.len() as u64
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `a_n`; zero for `n = 0` or `n` beyond the table.
    pub fn get(&self, n: u64) -> BigRational {
        if n == 0 {
            return BigRational::zero();
        }
        self.coeffs
            .get(n as usize - 1)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn renamed(&self, form_id: impl Into<String>) -> Self {
        Self::new(form_id, self.mu, self.coeffs.clone())
    }

    pub fn truncated(&self, max_n: u64) -> Self {
        let k = (max_n as usize).min(self.coeffs.len());
        Self::new(self.form_id.clone(), self.mu, self.coeffs[..k].to_vec())
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        Self::new(
            self.form_id.clone(),
            self.mu,
            self.coeffs.iter().map(|x| x * c).collect(),
        )
    }

    /// `self + c * other`, on the common index range.
    pub fn add_scaled(&self, other: &Self, c: &BigRational) -> Result<Self> {
        if self.mu != other.mu {
            return Err(Error::InvalidArgument(format!(
                "cannot add tables with mu {} and {}",
                self.mu, other.mu
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b * c)
            .collect();
        Ok(Self::new(self.form_id.clone(), self.mu, coeffs))
    }

    pub fn map_indexed(&self, f: impl Fn(u64, &BigRational) -> BigRational) -> Self {
        Self::new(
            self.form_id.clone(),
            self.mu,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| f(i as u64 + 1, c))
                .collect(),
        )
    }

    pub fn residues(&self, p: u64) -> Residues {
        Residues::new(self, p)
    }
}

/// Coefficients of a table reduced modulo `p^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residues {
    p: u64,
    modulus: u64,
    /// Index `n - 1`; `None` when `a_n` is not p-integral.
    values: Vec<Option<u64>>,
}

impl Residues {
    pub fn new(table: &CoefficientTable, p: u64) -> Self {
        let modulus = p * p;
        let values = table
            .coeffs
            .iter()
            .map(|c| {
                let den = reduce_int(c.denom(), modulus);
                let inv = inv_mod(den, modulus)?;
                Some(mul_mod(reduce_int(c.numer(), modulus), inv, modulus))
            })
            .collect();
        Residues { p, modulus, values }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: u64) -> Option<u64> {
        self.values[n as usize - 1]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ScanOutcome {
    /// Every admissible ratio agrees; symmetric residue mod `p^2`.
    Constant { value: i64 },
    /// The ratio at `n` differs from the ratio at an earlier index.
    NotConstant { n: u64 },
    /// Fewer admissible indices than the witness minimum.
    TooFewWitnesses,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanResult {
    pub outcome: ScanOutcome,
    pub witnesses: usize,
    pub skipped: usize,
}

impl ScanResult {
    pub fn constant(&self) -> Option<i64> {
        match self.outcome {
            ScanOutcome::Constant { value } => Some(value),
            _ => None,
        }
    }
}

/// Scans `num_{np} / den_n` modulo `p^2` over `1 <= n <= n_max`, `p ∤ n`.
pub fn ratio_scan(
    num: &Residues,
    den: &Residues,
    n_max: u64,
    witness_min: usize,
) -> Result<ScanResult> {
    let p = num.p;
    assert_eq!(p, den.p, "residues for different primes");
    if num.len() < n_max * p {
        return Err(Error::InsufficientCoefficients {
            needed: n_max * p,
            available: num.len(),
        });
    }
    if den.len() < n_max {
        return Err(Error::InsufficientCoefficients {
            needed: n_max,
            available: den.len(),
        });
    }
    let m = num.modulus;
    let mut common: Option<u64> = None;
    let (mut witnesses, mut skipped) = (0, 0);
    for n in (1..=n_max).filter(|n| n % p != 0) {
        let (Some(d), Some(x)) = (den.get(n), num.get(n * p)) else {
            skipped += 1;
            continue;
        };
        let Some(inv) = inv_mod(d, m) else {
            skipped += 1;
            continue;
        };
        let r = mul_mod(x, inv, m);
        witnesses += 1;
        match common {
            None => common = Some(r),
            Some(c) if c != r => {
                return Ok(ScanResult {
                    outcome: ScanOutcome::NotConstant { n },
                    witnesses,
                    skipped,
                })
            }
            Some(_) => {}
        }
    }
    let outcome = match common {
        Some(c) if witnesses >= witness_min => ScanOutcome::Constant {
            value: symmetric(c, m),
        },
        _ => ScanOutcome::TooFewWitnesses,
    };
    Ok(ScanResult {
        outcome,
        witnesses,
        skipped,
    })
}

/// `a_{np} / a_n mod p^2` for `n <= n_max`.
pub fn case1_scan(
    a: &CoefficientTable,
    p: u64,
    n_max: u64,
    witness_min: usize,
) -> Result<ScanResult> {
    let r = a.residues(p);
    ratio_scan(&r, &r, n_max, witness_min)
}

/// Constants of a successful cross-ratio scan, as symmetric residues mod `p^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseTwoConstants {
    /// `a_{np} / b_n`.
    pub ab: i64,
    /// `b_{np} / a_n`.
    pub ba: i64,
    /// `ab / ba`; undefined when `ba` is not a unit.
    pub alpha_sq: Option<i64>,
    /// `ab * ba`.
    pub cp_sq: i64,
    /// Both constants vanish.
    pub degenerate: bool,
}

impl CaseTwoConstants {
    fn new(ab: i64, ba: i64, p: u64) -> Self {
        let m = p * p;
        let (x, y) = (reduce_i64(ab, m), reduce_i64(ba, m));
        CaseTwoConstants {
            ab,
            ba,
            alpha_sq: inv_mod(y, m).map(|inv| symmetric(mul_mod(x, inv, m), m)),
            cp_sq: symmetric(mul_mod(x, y, m), m),
            degenerate: x == 0 && y == 0,
        }
    }

    /// The common value when both cross-ratios agree.
    pub fn common(&self) -> Option<i64> {
        (self.ab == self.ba).then_some(self.ab)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseTwoScan {
    pub ab: ScanResult,
    pub ba: ScanResult,
    pub constants: Option<CaseTwoConstants>,
}

fn case2_from_residues(
    a: &Residues,
    b: &Residues,
    n_max: u64,
    witness_min: usize,
) -> Result<CaseTwoScan> {
    let ab = ratio_scan(a, b, n_max, witness_min)?;
    let ba = ratio_scan(b, a, n_max, witness_min)?;
    let constants = match (ab.constant(), ba.constant()) {
        (Some(x), Some(y)) => Some(CaseTwoConstants::new(x, y, a.p)),
        _ => None,
    };
    Ok(CaseTwoScan { ab, ba, constants })
}

/// Cross-ratios `a_{np} / b_n` and `b_{np} / a_n` mod `p^2` for `n <= n_max`.
pub fn case2_scan(
    a: &CoefficientTable,
    b: &CoefficientTable,
    p: u64,
    n_max: u64,
    witness_min: usize,
) -> Result<CaseTwoScan> {
    case2_from_residues(&a.residues(p), &b.residues(p), n_max, witness_min)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrimeCase {
    /// Both self-ratios are constant.
    CaseOne {
        first: i64,
        second: i64,
    },
    /// Both cross-ratios are constant.
    CaseTwo(CaseTwoConstants),
    NoMatch,
}

impl PrimeCase {
    pub fn kind(&self) -> CaseKind {
        match self {
            PrimeCase::CaseOne {
                first: 0,
                second: 0,
            } => CaseKind::Both,
            PrimeCase::CaseOne { .. } => CaseKind::One,
            PrimeCase::CaseTwo(_) => CaseKind::Two,
            PrimeCase::NoMatch => CaseKind::NoMatch,
        }
    }

    /// Every `a_{np}` and `b_{np}` vanishes mod `p^2`, so both cases hold.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            PrimeCase::CaseOne {
                first: 0,
                second: 0
            }
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseKind {
    One,
    Two,
    /// Every `a_{np}` and `b_{np}` vanishes mod `p^2`.
    Both,
    NoMatch,
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseKind::One => "Case 1",
            CaseKind::Two => "Case 2",
            CaseKind::Both => "both cases",
            CaseKind::NoMatch => "no match",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeReport {
    pub p: u64,
    pub case: PrimeCase,
    pub witnesses: usize,
    pub skipped: usize,
}

/// Classifies a pair at one prime from precomputed residues. Case 1 is
/// preferred when both self-ratios are constant; otherwise the cross-ratios
/// are tried.
pub fn classify_pair(
    a: &Residues,
    b: &Residues,
    n_max: u64,
    witness_min: usize,
) -> Result<PrimeReport> {
    let p = a.p;
    let sa = ratio_scan(a, a, n_max, witness_min)?;
    let sb = if std::ptr::eq(a, b) {
        sa
    } else {
        ratio_scan(b, b, n_max, witness_min)?
    };
    if let (Some(x), Some(y)) = (sa.constant(), sb.constant()) {
        return Ok(PrimeReport {
            p,
            case: PrimeCase::CaseOne {
                first: x,
                second: y,
            },
            witnesses: sa.witnesses + sb.witnesses,
            skipped: sa.skipped + sb.skipped,
        });
    }
    let two = case2_from_residues(a, b, n_max, witness_min)?;
    let (witnesses, skipped) = (
        two.ab.witnesses + two.ba.witnesses,
        two.ab.skipped + two.ba.skipped,
    );
    Ok(PrimeReport {
        p,
        case: two.constants.map_or(PrimeCase::NoMatch, PrimeCase::CaseTwo),
        witnesses,
        skipped,
    })
}

/// Table-level wrapper around [`classify_pair`].
pub fn classify_tables(
    a: &CoefficientTable,
    b: &CoefficientTable,
    p: u64,
    n_max: u64,
    witness_min: usize,
) -> Result<PrimeReport> {
    let ra = a.residues(p);
    if a == b {
        return classify_pair(&ra, &ra, n_max, witness_min);
    }
    classify_pair(&ra, &b.residues(p), n_max, witness_min)
}

/// The two columns of a printed scan table at one prime: the common value
/// of `a_{np}/a_n` and `b_{np}/b_n`, and the common value of `a_{np}/b_n`
/// and `b_{np}/a_n`, each present only when constant and equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub p: u64,
    pub self_ratio: Option<i64>,
    pub cross_ratio: Option<i64>,
}

pub fn table_row(
    a: &CoefficientTable,
    b: &CoefficientTable,
    p: u64,
    n_max: u64,
    witness_min: usize,
) -> Result<TableRow> {
    let (ra, rb) = (a.residues(p), b.residues(p));
    let sa = ratio_scan(&ra, &ra, n_max, witness_min)?.constant();
    let sb = ratio_scan(&rb, &rb, n_max, witness_min)?.constant();
    let two = case2_from_residues(&ra, &rb, n_max, witness_min)?;
    Ok(TableRow {
        p,
        self_ratio: sa.filter(|_| sa == sb),
        cross_ratio: two.constants.and_then(|c| c.common()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AsdFailure {
    pub n: u64,
    pub valuation: Valuation,
    pub required: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AsdOutcome {
    pub p: u64,
    pub checked: u64,
    pub failure: Option<AsdFailure>,
}

impl AsdOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `vp(a_{np} - c_p a_n + chi_p p^(k-1) a_{n/p}) >= (k-1) vp(np)` for
/// `1 <= n <= n_max`, with `a_{n/p} = 0` when `p ∤ n`. Stops at the first
/// failing `n`.
pub fn asd_check(
    h: &CoefficientTable,
    c_p: &BigInt,
    chi_p: i64,
    k: u32,
    p: u64,
    n_max: u64,
) -> Result<AsdOutcome> {
    if k == 0 {
        return Err(Error::InvalidArgument("weight must be positive".into()));
    }
    if h.max_n() < n_max * p {
        return Err(Error::InsufficientCoefficients {
            needed: n_max * p,
            available: h.max_n(),
        });
    }
    let c_p = BigRational::from_integer(c_p.clone());
    let pk = BigRational::from_integer(BigInt::from(chi_p) * BigInt::from(p).pow(k - 1));
    for n in 1..=n_max {
        let mut x = h.get(n * p) - &c_p * h.get(n);
        if n % p == 0 {
            x += &pk * h.get(n / p);
        }
        let v = vp(&x, p);
        let required = (k as i64 - 1) * vp_u64(n * p, p);
        if v < Valuation::Finite(required) {
            return Ok(AsdOutcome {
                p,
                checked: n,
                failure: Some(AsdFailure {
                    n,
                    valuation: v,
                    required,
                }),
            });
        }
    }
    Ok(AsdOutcome {
        p,
        checked: n_max,
        failure: None,
    })
}

/// Sign pattern `p -> u_p` with `c_p ≡ u_p a_p (mod p^2)`, periodic in `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistPattern {
    pub modulus: u64,
    /// Sign on each residue class mod `modulus` that some prime determined.
    pub signs: BTreeMap<u64, i32>,
}

impl fmt::Display for TwistPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mod {}:", self.modulus)?;
        for (r, s) in &self.signs {
            write!(f, " {r}->{}", if *s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// Looks for `u_p ∈ {±1}` with `c_p ≡ u_p a_p (mod p^2)` at every prime in
/// `primes`, depending only on `p mod m` for the least such `m <= 24`.
/// Primes where both sides vanish mod `p^2` constrain nothing.
pub fn twist_detect(
    a_p: &BTreeMap<u64, i64>,
    c_p: &BTreeMap<u64, i64>,
    primes: &[u64],
) -> Option<TwistPattern> {
    let mut signs: Vec<(u64, i32)> = Vec::new();
    for &p in primes {
        let m = p * p;
        let a = reduce_i64(*a_p.get(&p)?, m);
        let c = reduce_i64(*c_p.get(&p)?, m);
        let plus = c == a;
        let minus = c == (m - a) % m;
        match (plus, minus) {
            (true, true) => {}
            (true, false) => signs.push((p, 1)),
            (false, true) => signs.push((p, -1)),
            (false, false) => return None,
        }
    }
    'modulus: for modulus in 1..=24u64 {
        let mut table: BTreeMap<u64, i32> = BTreeMap::new();
        for &(p, s) in &signs {
            match table.insert(p % modulus, s) {
                Some(prev) if prev != s => continue 'modulus,
                _ => {}
            }
        }
        return Some(TwistPattern {
            modulus,
            signs: table,
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn valuations() {
        assert_eq!(vp(&q(18, 1), 3), Valuation::Finite(2));
        assert_eq!(vp(&q(5, 9), 3), Valuation::Finite(-2));
        assert_eq!(vp(&q(0, 1), 7), Valuation::Infinite);
        assert!(Valuation::Finite(i64::MAX) < Valuation::Infinite);
    }

    #[test]
    fn residues_of_fractions() {
        let t = CoefficientTable::new("t", 1, vec![q(1, 2), q(5, 1), q(1, 5)]);
        let r = t.residues(5);
        assert_eq!(r.get(1), Some(13));
        assert_eq!(r.get(2), Some(5));
        assert_eq!(r.get(3), None);
        assert_eq!(symmetric(24, 25), -1);
        assert_eq!(symmetric(12, 25), 12);
    }

    #[test]
    fn multiplicative_table_is_case_one() {
        // a_n = n^2 is completely multiplicative: a_{np}/a_n = p^2 ≡ 0
        let t =
            CoefficientTable::from_integers("sq", &(1..=100).map(|n| n * n).collect::<Vec<_>>());
        assert_eq!(case1_scan(&t, 5, 20, 2).unwrap().constant(), Some(0));
        // a_n = n: ratio p
        let t = CoefficientTable::from_integers("id", &(1..=100).collect::<Vec<_>>());
        let s = case1_scan(&t, 7, 14, 2).unwrap();
        assert_eq!(s.constant(), Some(7));
        assert_eq!(s.witnesses, 12);
        assert!(case1_scan(&t, 7, 15, 2).is_err());
    }

    #[test]
    fn witness_minimum() {
        let t = CoefficientTable::from_integers("id", &(1..=20).collect::<Vec<_>>());
        let s = case1_scan(&t, 5, 1, 2).unwrap();
        assert_eq!(s.outcome, ScanOutcome::TooFewWitnesses);
        assert_eq!(case1_scan(&t, 5, 1, 1).unwrap().constant(), Some(5));
    }

    #[test]
    fn skipped_non_units() {
        let mut c: Vec<i64> = (1..=50).collect();
        c[1] = 10; // a_2 divisible by 5
        let t = CoefficientTable::from_integers("x", &c);
        let s = case1_scan(&t, 5, 4, 2).unwrap();
        assert_eq!(s.skipped, 1);
        assert_eq!(s.witnesses, 3);
    }

    #[test]
    fn case2_degenerate_and_alpha() {
        let z = CoefficientTable::from_integers("z", &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        let two = case2_scan(&z, &z, 7, 2, 1).unwrap();
        let c = two.constants.unwrap();
        assert!(c.degenerate);
        assert_eq!(c.alpha_sq, None);
        let c = CaseTwoConstants::new(6, 6, 5);
        assert_eq!((c.alpha_sq, c.cp_sq, c.degenerate), (Some(1), 11, false));
    }

    #[test]
    fn asd_check_hecke() {
        // a_n = n^2 satisfies a_{np} - p^2 a_n = 0 with c_p = p^2 and chi = 0
        let t =
            CoefficientTable::from_integers("sq", &(1..=200).map(|n| n * n).collect::<Vec<_>>());
        let ok = asd_check(&t, &BigInt::from(25), 0, 3, 5, 40).unwrap();
        assert!(ok.passed());
        let bad = asd_check(&t, &BigInt::from(26), 0, 3, 5, 40).unwrap();
        assert_eq!(bad.failure.unwrap().n, 1);
    }

    #[test]
    fn twist_signs() {
        let primes = [5, 7, 11, 13];
        let a: BTreeMap<u64, i64> = primes.iter().map(|&p| (p, p as i64 + 1)).collect();
        let c = a.clone();
        let t = twist_detect(&a, &c, &primes).unwrap();
        assert_eq!(t.modulus, 1);
        let c: BTreeMap<u64, i64> = a
            .iter()
            .map(|(&p, &x)| (p, if p % 4 == 1 { x } else { -x }))
            .collect();
        assert_eq!(twist_detect(&a, &c, &primes).unwrap().modulus, 4);
        let c: BTreeMap<u64, i64> = a.iter().map(|(&p, &x)| (p, x + 1)).collect();
        assert_eq!(twist_detect(&a, &c, &primes), None);
    }
}
