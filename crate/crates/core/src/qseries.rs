//! Truncated formal series in a fractional power of `q` over the rationals.
//!
//! A [`FracSeries`] with ramification `M` stores terms `c_e * q^(e/M)` for
//! integer grid indices `e` strictly below the truncation index `T`; every
//! term at or beyond `T` is unknown (`O(q^(T/M))`). Coefficients are exact
//! [`BigRational`]s and are never zero in storage.
//!
//! Operations between series on different grids rescale both operands to the
//! least common grid. Results are not reduced back to a minimal grid; call
//! [`FracSeries::canonicalize`] for that.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Truncated series `sum c_e q^(e/M) + O(q^(T/M))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracSeries {
    ramification: u64,
    coeffs: BTreeMap<i64, BigRational>,
    trunc: i64,
}

impl FracSeries {
    /// Builds a series from `(grid index, coefficient)` pairs. Zero
    /// coefficients and indices at or beyond `trunc` are discarded; repeated
    /// indices are summed.
    pub fn new<I>(ramification: u64, terms: I, trunc: i64) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        assert!(ramification > 0, "ramification must be positive");
        let mut coeffs: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            if e >= trunc {
                continue;
            }
            *coeffs.entry(e).or_insert_with(BigRational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        FracSeries {
            ramification,
            coeffs,
            trunc,
        }
    }

    /// Dense constructor: `coeffs[k]` is the coefficient at grid index `start + k`.
    pub fn from_dense(ramification: u64, start: i64, coeffs: Vec<BigRational>, trunc: i64) -> Self {
        Self::new(
            ramification,
            coeffs
                .into_iter()
                .enumerate()
                .map(|(k, c)| (start + k as i64, c)),
            trunc,
        )
    }

    /// Integer-coefficient power series in `q` starting at `q^0`, known to `O(q^trunc)`.
    pub fn from_integers(coeffs: &[i64], trunc: i64) -> Self {
        Self::new(
            1,
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (k as i64, BigRational::from_integer(c.into()))),
            trunc,
        )
    }

    pub fn zero(ramification: u64, trunc: i64) -> Self {
        Self::new(ramification, std::iter::empty(), trunc)
    }

    /// `1 + O(q^trunc)`.
    pub fn one(trunc: i64) -> Self {
        Self::monomial(BigRational::one(), 0, 1, trunc)
    }

    /// `c * q^(index/ramification) + O(q^(trunc/ramification))`.
    pub fn monomial(c: BigRational, index: i64, ramification: u64, trunc: i64) -> Self {
        Self::new(ramification, [(index, c)], trunc)
    }

    pub fn ramification(&self) -> u64 {
        self.ramification
    }

    /// Truncation index on the grid; the series is `O(q^(trunc/M))`.
    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Truncation bound as an exponent of `q`.
    pub fn trunc_exponent(&self) -> Rational64 {
        Rational64::new(self.trunc, self.ramification as i64)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// True when no term is known to be nonzero below the truncation bound.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest stored term as `(grid index, coefficient)`.
    pub fn leading(&self) -> Option<(i64, &BigRational)> {
        self.coeffs.iter().next().map(|(&e, c)| (e, c))
    }

    /// Exponent of the lowest stored term.
    pub fn leading_exponent(&self) -> Option<Rational64> {
        self.leading()
            .map(|(e, _)| Rational64::new(e, self.ramification as i64))
    }

    /// Coefficient at grid index `e` (zero when absent). Does not check the truncation bound.
    pub fn grid_coefficient(&self, e: i64) -> BigRational {
        self.coeffs
            .get(&e)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of `q^(numerator/denominator)`.
    ///
    /// Exponents below the truncation bound that are absent or fall between
    /// grid points have coefficient zero.
    pub fn coefficient(&self, numerator: i64, denominator: u64) -> Result<BigRational> {
        if denominator == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let m = self.ramification as i128;
        let (num, den) = (numerator as i128, denominator as i128);
        if num * m >= self.trunc as i128 * den {
            return Err(Error::BeyondTruncation {
                requested: Rational64::new(numerator, denominator as i64).to_string(),
                bound: self.trunc_exponent().to_string(),
            });
        }
        if (num * m) % den != 0 {
            return Ok(BigRational::zero());
        }
        Ok(self.grid_coefficient(((num * m) / den) as i64))
    }

    /// Same series on the grid `(1/ramification)Z`; `ramification` must be a
    /// multiple of the current one.
    pub fn to_grid(&self, ramification: u64) -> Self {
        assert!(
            ramification.is_multiple_of(self.ramification),
            "grid {} does not refine grid {}",
            ramification,
            self.ramification
        );
        let f = (ramification / self.ramification) as i64;
        if f == 1 {
            return self.clone();
        }
        FracSeries {
            ramification,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e * f, c.clone()))
                .collect(),
            trunc: self.trunc * f,
        }
    }

    /// Smallest grid carrying every stored index and the truncation bound.
    pub fn canonicalize(&self) -> Self {
        let mut g = self.ramification as i64;
        g = g.gcd(&self.trunc);
        for &e in self.coeffs.keys() {
            g = g.gcd(&e);
        }
        let g = g.max(1);
        if g == 1 {
            return self.clone();
        }
        FracSeries {
            ramification: self.ramification / g as u64,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e / g, c.clone()))
                .collect(),
            trunc: self.trunc / g,
        }
    }

    /// Lowers the truncation index to `min(trunc, new_trunc)`.
    pub fn truncate(&self, new_trunc: i64) -> Self {
        let trunc = self.trunc.min(new_trunc);
        FracSeries {
            ramification: self.ramification,
            coeffs: self
                .coeffs
                .range(..trunc)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
            trunc,
        }
    }

    /// Substitutes `q -> q^k`.
    pub fn dilate(&self, k: u64) -> Self {
        assert!(k > 0);
        let k = k as i64;
        FracSeries {
            ramification: self.ramification,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e * k, c.clone()))
                .collect(),
            trunc: self.trunc * k,
        }
    }

    /// Multiplies by `q^(index/ramification)` on this series' grid.
    pub fn shift(&self, index: i64) -> Self {
        FracSeries {
            ramification: self.ramification,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + index, c.clone()))
                .collect(),
            trunc: self.trunc + index,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ramification, self.trunc);
        }
        FracSeries {
            ramification: self.ramification,
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
            trunc: self.trunc,
        }
    }

    pub fn neg(&self) -> Self {
        FracSeries {
            ramification: self.ramification,
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, -v)).collect(),
            trunc: self.trunc,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.ramification.lcm(&other.ramification);
        let a = self.to_grid(m);
        let b = other.to_grid(m);
        let trunc = a.trunc.min(b.trunc);
        let terms = a
            .coeffs
            .into_iter()
            .chain(b.coeffs)
            .filter(|(e, _)| *e < trunc);
        Self::new(m, terms, trunc)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cauchy product. If the operands are known to `O(q^a)` and `O(q^b)`
    /// with leading exponents `l1`, `l2`, the product is known to
    /// `O(q^min(a + l2, b + l1))`.
    pub fn mul(&self, other: &Self) -> Self {
        let m = self.ramification.lcm(&other.ramification);
        let a = self.to_grid(m);
        let b = other.to_grid(m);
        let la = a.leading().map_or(a.trunc, |(e, _)| e);
        let lb = b.leading().map_or(b.trunc, |(e, _)| e);
        let trunc = (a.trunc + lb).min(b.trunc + la);
        let coeffs = convolve(&a.coeffs, &b.coeffs, trunc);
        FracSeries {
            ramification: m,
            coeffs,
            trunc,
        }
    }

    /// Integer power by repeated squaring; negative powers go through [`FracSeries::invert`].
    pub fn pow_int(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.invert()?.pow_int(-k);
        }
        let lead = self.leading().map(|(e, _)| e);
        let Some(lead) = lead else {
            if k == 0 {
                return Err(Error::ZeroSeries);
            }
            // 0 + O(q^a) to the k-th power
            let t = self.trunc.saturating_mul(k);
            return Ok(Self::zero(self.ramification, t));
        };
        // 1 known to the relative precision of self
        let mut acc = Self::monomial(BigRational::one(), 0, self.ramification, self.trunc - lead);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse; the leading exponent is negated.
    pub fn invert(&self) -> Result<Self> {
        self.pow_rational(Rational64::from_integer(-1))
    }

    /// Principal `n`-th root: the root whose leading coefficient is the
    /// rational `n`-th root of this series' leading coefficient.
    pub fn nth_root(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "root degree must be positive".into(),
            ));
        }
        self.pow_rational(Rational64::new(1, n as i64))
    }

    /// `self^alpha` for rational `alpha = a/n`.
    ///
    /// Writes `self = c q^(e/M) (1 + u)` and expands `(1 + u)^alpha` by
    /// J.C.P. Miller's recurrence. When `n` does not divide `a*e` the result
    /// moves to the grid `(1/(nM))Z`.
    pub fn pow_rational(&self, alpha: Rational64) -> Result<Self> {
        let (e0, c0) = self.leading().ok_or(Error::ZeroSeries)?;
        let a = *alpha.numer();
        let n = *alpha.denom();
        let lead_coeff = rational_power(c0, a, n)?;
        if a == 0 {
            return Ok(Self::monomial(
                lead_coeff,
                0,
                self.ramification,
                self.trunc - e0,
            ));
        }

        let rel = (self.trunc - e0) as usize;
        let c0 = c0.clone();
        let unit: Vec<(usize, BigRational)> = self
            .coeffs
            .range(e0 + 1..)
            .map(|(&e, c)| ((e - e0) as usize, c / &c0))
            .collect();
        let g = miller_power(&unit, a, n, rel);

        let ae = a as i128 * e0 as i128;
        let (ramification, lead, stretch) = if ae % n as i128 == 0 {
            (self.ramification, (ae / n as i128) as i64, 1i64)
        } else {
            (self.ramification * n as u64, ae as i64, n)
        };
        let terms = g
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (lead + stretch * k as i64, c * &lead_coeff));
        Ok(Self::new(ramification, terms, lead + stretch * rel as i64))
    }

    /// `{"ramification": M, "terms": [[e, num, den], ...], "trunc": T}` with
    /// exact integers.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(&e, c)| json!([e, big_json(c.numer()), big_json(c.denom())]))
            .collect();
        json!({
            "ramification": self.ramification,
            "terms": terms,
            "trunc": self.trunc,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidArgument(format!("series JSON: {m}"));
        let ramification = v["ramification"]
            .as_u64()
            .filter(|&m| m > 0)
            .ok_or_else(|| bad("ramification"))?;
        let trunc = v["trunc"].as_i64().ok_or_else(|| bad("trunc"))?;
        let mut terms = Vec::new();
        for t in v["terms"].as_array().ok_or_else(|| bad("terms"))? {
            let t = t
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| bad("term"))?;
            let e = t[0].as_i64().ok_or_else(|| bad("index"))?;
            let num = json_big(&t[1]).ok_or_else(|| bad("numerator"))?;
            let den = json_big(&t[2])
                .filter(|d| !d.is_zero())
                .ok_or_else(|| bad("denominator"))?;
            terms.push((e, BigRational::new(num, den)));
        }
        Ok(Self::new(ramification, terms, trunc))
    }
}

impl fmt::Display for FracSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.ramification as i64;
        let mut first = true;
        for (&e, c) in &self.coeffs {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let exp = Rational64::new(e, m);
            if exp.is_zero() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "q{}", exponent_suffix(exp))?;
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(q{})", exponent_suffix(self.trunc_exponent()))
    }
}

fn exponent_suffix(exp: Rational64) -> String {
    if exp.is_one() {
        String::new()
    } else if exp.is_integer() && !exp.is_negative() {
        format!("^{}", exp.numer())
    } else {
        format!("^({exp})")
    }
}

pub(crate) fn big_json(x: &BigInt) -> Value {
    // arbitrary_precision keeps every digit of the integer
    Value::Number(
        x.to_string()
            .parse()
            .expect("integer literal is valid JSON"),
    )
}

pub(crate) fn json_big(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().ok(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// `c^(a/n)` over the rationals, if it exists.
fn rational_power(c: &BigRational, a: i64, n: i64) -> Result<BigRational> {
    let not_power = || Error::NotAnNthPower {
        coefficient: c.to_string(),
        degree: n,
    };
    let root = if n == 1 {
        c.clone()
    } else {
        if c.is_negative() && n % 2 == 0 {
            return Err(not_power());
        }
        let nu = n as u32;
        let num = c.numer().nth_root(nu);
        let den = c.denom().nth_root(nu);
        if num.pow(nu) != *c.numer() || den.pow(nu) != *c.denom() {
            return Err(not_power());
        }
        BigRational::new(num, den)
    };
    Ok(if a >= 0 {
        num_traits::pow(root, a as usize)
    } else {
        num_traits::pow(root.recip(), a.unsigned_abs() as usize)
    })
}

/// Coefficients `g_0..g_{len-1}` of `(1 + sum_k v_k q^k)^(a/n)`, with `unit`
/// holding the nonzero `(k, v_k)` for `k >= 1`.
///
/// `m g_m = sum_{k=1}^{m} ((a/n + 1) k - m) v_k g_{m-k}`.
fn miller_power(unit: &[(usize, BigRational)], a: i64, n: i64, len: usize) -> Vec<BigRational> {
    if len == 0 {
        return Vec::new();
    }
    if unit.iter().all(|(_, v)| v.is_integer()) {
        if let Some(g) = miller_power_integral(unit, a, n, len) {
            return g;
        }
    }
    let mut g: Vec<BigRational> = Vec::with_capacity(len);
    g.push(BigRational::one());
    let n_big = BigInt::from(n);
    for m in 1..len {
        let mut s = BigRational::zero();
        for (k, v) in unit {
            if *k > m {
                break;
            }
            let coef = (a + n) * *k as i64 - n * m as i64;
            if coef != 0 {
                s += v * &g[m - k] * BigRational::from_integer(coef.into());
            }
        }
        g.push(s / BigRational::from_integer(&n_big * BigInt::from(m)));
    }
    g
}

/// Integer fast path of [`miller_power`]: with integral `v_k`, every `g_m`
/// lies in `Z[1/n]` with denominator dividing `n^(2m)`, so `G_m = g_m n^(2m)`
/// is an integer and `G_m = (1/(n m)) sum ((a+n)k - nm) v_k n^(2k) G_{m-k}`.
/// Returns `None` if a division is inexact.
fn miller_power_integral(
    unit: &[(usize, BigRational)],
    a: i64,
    n: i64,
    len: usize,
) -> Option<Vec<BigRational>> {
    let n_sq = BigInt::from(n * n);
    let weights: Vec<(usize, BigInt)> = unit
        .iter()
        .filter(|(k, _)| *k < len)
        .map(|(k, v)| {
            let w = if n == 1 {
                v.numer().clone()
            } else {
                v.numer() * num_traits::pow(n_sq.clone(), *k)
            };
            (*k, w)
        })
        .collect();
    let mut big_g: Vec<BigInt> = Vec::with_capacity(len);
    big_g.push(BigInt::one());
    for m in 1..len {
        let mut s = BigInt::zero();
        for (k, w) in &weights {
            if *k > m {
                break;
            }
            let coef = (a + n) * *k as i64 - n * m as i64;
            if coef != 0 {
                s += (&big_g[m - k] * w) * coef;
            }
        }
        let d = BigInt::from(n * m as i64);
        let (q, r) = s.div_rem(&d);
        if !r.is_zero() {
            return None;
        }
        big_g.push(q);
    }
    if n == 1 {
        return Some(big_g.into_iter().map(BigRational::from_integer).collect());
    }
    let mut den = BigInt::one();
    let mut out = Vec::with_capacity(len);
    for gm in big_g {
        out.push(BigRational::new(gm, den.clone()));
        den *= &n_sq;
    }
    Some(out)
}

/// Truncated product of two coefficient maps on a common grid, done over
/// the integers after clearing denominators.
fn convolve(
    a: &BTreeMap<i64, BigRational>,
    b: &BTreeMap<i64, BigRational>,
    trunc: i64,
) -> BTreeMap<i64, BigRational> {
    let (Some((&la, _)), Some((&lb, _))) = (a.iter().next(), b.iter().next()) else {
        return BTreeMap::new();
    };
    let base = la + lb;
    if base >= trunc {
        return BTreeMap::new();
    }
    let (da, na) = integerize(a);
    let (db, nb) = integerize(b);
    let width = (trunc - base) as usize;
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); width];
    for (ea, ca) in &na {
        let room = trunc - ea;
        for (eb, cb) in &nb {
            if *eb >= room {
                break;
            }
            acc[(ea + eb - base) as usize] += ca * cb;
        }
    }
    let den = da * db;
    acc.into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (base + k as i64, BigRational::new(c, den.clone())))
        .collect()
}

/// Common denominator and the numerators over it.
fn integerize(m: &BTreeMap<i64, BigRational>) -> (BigInt, Vec<(i64, BigInt)>) {
    let mut lcd = BigInt::one();
    for c in m.values() {
        if !c.denom().is_one() {
            lcd = lcd.lcm(c.denom());
        }
    }
    let nums = m
        .iter()
        .map(|(&e, c)| {
            let n = if c.denom().is_one() {
                c.numer() * &lcd
            } else {
                c.numer() * (&lcd / c.denom())
            };
            (e, n)
        })
        .collect();
    (lcd, nums)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn add_cancels() {
        let a = FracSeries::from_integers(&[1, 1], 10);
        let b = FracSeries::from_integers(&[-1, 1], 10);
        let s = a.add(&b);
        assert_eq!(s.terms().collect::<Vec<_>>(), vec![(1, &q(2))]);
        assert_eq!(s.trunc(), 10);
        assert_eq!(a.add(&FracSeries::zero(1, 10)), a);
    }

    #[test]
    fn add_uses_lcm_grid_and_min_trunc() {
        let a = FracSeries::new(2, [(1, q(1))], 8); // q^(1/2) + O(q^4)
        let b = FracSeries::new(3, [(1, q(1))], 9); // q^(1/3) + O(q^3)
        let s = a.add(&b);
        assert_eq!(s.ramification(), 6);
        assert_eq!(s.trunc(), 18);
        assert_eq!(s.coefficient(1, 2).unwrap(), q(1));
        assert_eq!(s.coefficient(1, 3).unwrap(), q(1));
    }

    #[test]
    fn geometric_series() {
        let one_minus_q = FracSeries::from_integers(&[1, -1], 20);
        let geo = FracSeries::from_integers(&[1; 20], 20);
        let p = one_minus_q.mul(&geo);
        assert_eq!(p, FracSeries::one(20));
        let inv = one_minus_q.invert().unwrap();
        assert_eq!(inv, geo);
    }

    #[test]
    fn ramified_monomials_multiply() {
        let a = FracSeries::monomial(q(1), 1, 24, 47);
        let p = a.mul(&a).canonicalize();
        assert_eq!(p.ramification(), 12);
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![(1, &q(1))]);
    }

    #[test]
    fn invert_monomial() {
        let s = FracSeries::monomial(q(1), 1, 1, 10);
        let inv = s.invert().unwrap();
        assert_eq!(inv.leading(), Some((-1, &q(1))));
        assert_eq!(inv.trunc(), 8);
        assert!(FracSeries::zero(1, 5).invert().is_err());
    }

    #[test]
    fn cube_root_of_cube() {
        let s = FracSeries::from_integers(&[1, 3, 3, 1], 12);
        assert_eq!(
            s.nth_root(3).unwrap(),
            FracSeries::from_integers(&[1, 1], 12)
        );
        let m = FracSeries::monomial(q(1), 3, 1, 9);
        assert_eq!(m.nth_root(3).unwrap().leading(), Some((1, &q(1))));
    }

    #[test]
    fn root_moves_to_finer_grid() {
        // q * (1 + q): cube root is q^(1/3) (1 + q/3 - q^2/9 + ...)
        let s = FracSeries::from_integers(&[0, 1, 1], 5);
        let root = s.nth_root(3).unwrap();
        assert_eq!(root.ramification(), 3);
        assert_eq!(root.coefficient(1, 3).unwrap(), q(1));
        assert_eq!(root.coefficient(4, 3).unwrap(), r(1, 3));
        assert_eq!(root.coefficient(7, 3).unwrap(), r(-1, 9));
        assert_eq!(root.trunc_exponent(), Rational64::new(13, 3));
    }

    #[test]
    fn not_an_nth_power() {
        let s = FracSeries::from_integers(&[2, 1], 5);
        assert!(matches!(s.nth_root(3), Err(Error::NotAnNthPower { .. })));
        let s = FracSeries::from_integers(&[-1, 1], 5);
        assert!(matches!(s.nth_root(2), Err(Error::NotAnNthPower { .. })));
        assert_eq!(s.nth_root(3).unwrap().leading(), Some((0, &q(-1))));
        let s = FracSeries::new(1, [(0, r(8, 27))], 3);
        assert_eq!(s.nth_root(3).unwrap().leading(), Some((0, &r(2, 3))));
    }

    #[test]
    fn rational_unit_part_takes_slow_path() {
        let s = FracSeries::new(1, [(0, q(1)), (1, r(1, 2)), (3, r(-2, 7))], 15);
        let root = s.nth_root(3).unwrap();
        assert_eq!(root.pow_int(3).unwrap(), s);
    }

    #[test]
    fn coefficient_rules() {
        let s = FracSeries::from_integers(&[1, 2], 5);
        assert_eq!(s.coefficient(1, 1).unwrap(), q(2));
        assert_eq!(s.coefficient(3, 1).unwrap(), q(0));
        assert!(matches!(
            s.coefficient(5, 1),
            Err(Error::BeyondTruncation { .. })
        ));
        let t = FracSeries::new(3, [(1, q(1))], 30);
        assert_eq!(t.coefficient(1, 2).unwrap(), q(0));
    }

    #[test]
    fn product_of_zero_series_tracks_precision() {
        let z = FracSeries::zero(1, 4);
        let s = FracSeries::from_integers(&[0, 0, 1], 10);
        let p = z.mul(&s);
        assert!(p.is_zero());
        assert_eq!(p.trunc(), 6);
    }

    #[test]
    fn display_and_json() {
        let s = FracSeries::new(3, [(1, q(1)), (4, r(-1, 3)), (6, q(2))], 9);
        assert_eq!(s.to_string(), "q^(1/3) - 1/3*q^(4/3) + 2*q^2 + O(q^3)");
        let v = s.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"ramification":3,"terms":[[1,1,1],[4,-1,3],[6,2,1]],"trunc":9}"#
        );
        assert_eq!(FracSeries::from_json(&v).unwrap(), s);
        assert_eq!(FracSeries::zero(1, 2).to_string(), "O(q^2)");
    }
}
