//! Eta-quotients `prod eta(delta z)^(r_delta)` with rational exponents.
//!
//! An [`EtaQuotient`] is a formal object: products, quotients and roots are
//! exponent-vector arithmetic, and [`EtaQuotient::expand`] turns it into a
//! [`FracSeries`] only when coefficients are needed.

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qseries::FracSeries;

/// The product part `prod_{n>=1} (1 - q^n)` of `eta`, known to `O(q^order)`.
///
/// Built from the pentagonal number theorem: the only nonzero coefficients
/// are `(-1)^k` at `k(3k-1)/2`, `k` ranging over the integers.
pub fn euler_function(order: i64) -> FracSeries {
    let mut terms = Vec::new();
    let mut k: i64 = 0;
    loop {
        let a = k * (3 * k - 1) / 2;
        let b = k * (3 * k + 1) / 2;
        if a >= order {
            break;
        }
        let sign: i64 = if k % 2 == 0 { 1 } else { -1 };
        terms.push((a, sign));
        if k > 0 && b < order {
            terms.push((b, sign));
        }
        k += 1;
    }
    FracSeries::new(
        1,
        terms
            .into_iter()
            .map(|(e, c)| (e, num_rational::BigRational::from_integer(c.into()))),
        order.max(0),
    )
}

/// Finite product of `eta(delta z)^(r_delta)`, kept sorted by `delta` with
/// distinct scales and nonzero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EtaQuotient {
    terms: Vec<(u64, Rational64)>,
}

impl EtaQuotient {
    pub fn new<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, Rational64)>,
    {
        let mut v: Vec<(u64, Rational64)> = terms.into_iter().collect();
        assert!(v.iter().all(|(d, _)| *d > 0), "eta scales must be positive");
        v.sort_by_key(|(d, _)| *d);
        let mut out: Vec<(u64, Rational64)> = Vec::with_capacity(v.len());
        for (d, r) in v {
            match out.last_mut() {
                Some((ld, lr)) if *ld == d => *lr += r,
                _ => out.push((d, r)),
            }
        }
        out.retain(|(_, r)| !r.is_zero());
        EtaQuotient { terms: out }
    }

    /// Integer exponents, e.g. `from_ints(&[(1, -8), (2, 12), (4, 14)])`.
    pub fn from_ints(terms: &[(u64, i64)]) -> Self {
        Self::new(terms.iter().map(|&(d, r)| (d, Rational64::from_integer(r))))
    }

    /// The empty quotient, i.e. the constant 1.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &[(u64, Rational64)] {
        &self.terms
    }

    pub fn is_one(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn exponent(&self, delta: u64) -> Rational64 {
        self.terms
            .iter()
            .find(|(d, _)| *d == delta)
            .map_or_else(Rational64::zero, |(_, r)| *r)
    }

    /// `(1/2) sum r_delta`.
    pub fn weight(&self) -> Rational64 {
        self.terms.iter().map(|(_, r)| *r).sum::<Rational64>() / 2
    }

    /// Exponent of `q` in the leading term of the expansion, `sum r_delta delta / 24`.
    pub fn leading_exponent(&self) -> Rational64 {
        self.terms
            .iter()
            .map(|(d, r)| *r * Rational64::from_integer(*d as i64))
            .sum::<Rational64>()
            / 24
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, r)| r.is_integer())
    }

    /// Least common denominator of the exponents.
    pub fn root_degree(&self) -> i64 {
        self.terms.iter().fold(1, |acc, (_, r)| acc.lcm(r.denom()))
    }

    pub fn combine(&self, other: &Self) -> Self {
        Self::new(self.terms.iter().chain(other.terms.iter()).copied())
    }

    pub fn scale(&self, k: Rational64) -> Self {
        Self::new(self.terms.iter().map(|&(d, r)| (d, r * k)))
    }

    pub fn inverse(&self) -> Self {
        self.scale(-Rational64::one())
    }

    /// Expansion known to `O(q^order)`.
    ///
    /// Computes `q^L prod (q^delta; q^delta)_inf^(D r_delta)` with integer
    /// powers `D r_delta`, then takes the `D`-th root of the unit part, where
    /// `D` is the common exponent denominator.
    pub fn expand(&self, order: i64) -> Result<FracSeries> {
        let lead = self.leading_exponent();
        let m = *lead.denom();
        let l = *lead.numer();
        let trunc = order * m;
        // unit terms q^k needed: l + m k < order m
        let room = trunc - l;
        let unit_len = if room <= 0 { 0 } else { (room + m - 1) / m };
        if unit_len == 0 {
            return Ok(FracSeries::zero(m as u64, trunc));
        }
        let unit = self.unit_part(unit_len)?;
        let terms = unit
            .terms()
            .map(|(k, c)| (l + m * k, c.clone()))
            .collect::<Vec<_>>();
        Ok(FracSeries::new(m as u64, terms, trunc))
    }

    /// Expansion with `terms` known coefficients after the leading exponent.
    pub fn expand_terms(&self, terms: usize) -> Result<FracSeries> {
        let lead = self.leading_exponent();
        let unit = self.unit_part(terms as i64)?;
        let m = *lead.denom();
        let shifted = unit
            .terms()
            .map(|(k, c)| (lead.numer() + m * k, c.clone()))
            .collect::<Vec<_>>();
        Ok(FracSeries::new(
            m as u64,
            shifted,
            lead.numer() + m * terms as i64,
        ))
    }

    /// `prod_delta (q^delta; q^delta)_inf^(r_delta)` to `O(q^len)`.
    fn unit_part(&self, len: i64) -> Result<FracSeries> {
        let d = self.root_degree();
        let mut acc = FracSeries::one(len);
        for &(delta, r) in &self.terms {
            let power = r * Rational64::from_integer(d);
            let base_len = (len + delta as i64 - 1) / delta as i64;
            let factor = euler_function(base_len)
                .dilate(delta)
                .truncate(len)
                .pow_rational(power)?;
            acc = acc.mul(&factor);
        }
        if d > 1 {
            acc = acc.pow_rational(Rational64::new(1, d))?;
        }
        Ok(acc)
    }

    fn check_level(&self, level: u64) -> Result<()> {
        if level == 0 {
            return Err(Error::InvalidArgument("level must be positive".into()));
        }
        if !self.is_integral() {
            return Err(Error::NonIntegralExponents);
        }
        if let Some(&(delta, _)) = self.terms.iter().find(|(d, _)| !level.is_multiple_of(*d)) {
            return Err(Error::ScaleNotDividingLevel { delta, level });
        }
        Ok(())
    }

    /// Order of vanishing at the cusps of `Gamma_0(level)`, one entry per
    /// cusp denominator `d | level`:
    /// `level / (24 gcd(d, level/d) d) * sum_delta gcd(d, delta)^2 r_delta / delta`.
    pub fn cusp_orders(&self, level: u64) -> Result<Vec<CuspOrder>> {
        self.check_level(level)?;
        let n = level as i64;
        Ok(divisors(level)
            .into_iter()
            .map(|d| {
                let di = d as i64;
                let g = di.gcd(&(n / di));
                let sum: Rational64 = self
                    .terms
                    .iter()
                    .map(|&(delta, r)| {
                        let gd = di.gcd(&(delta as i64));
                        r * Rational64::new(gd * gd, delta as i64)
                    })
                    .sum();
                CuspOrder {
                    denominator: d,
                    order: sum * Rational64::new(n, 24 * g * di),
                    cusps: euler_phi(g as u64),
                }
            })
            .collect())
    }

    pub fn is_holomorphic(&self, level: u64) -> Result<bool> {
        Ok(self
            .cusp_orders(level)?
            .iter()
            .all(|c| !c.order.is_negative()))
    }

    pub fn is_cuspidal(&self, level: u64) -> Result<bool> {
        Ok(self
            .cusp_orders(level)?
            .iter()
            .all(|c| c.order.is_positive()))
    }

    /// `[[delta, r_num, r_den], ...]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(d, r)| json!([d, r.numer(), r.denom()]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad =
            || Error::InvalidArgument("eta-quotient JSON must be [[delta, num, den], ...]".into());
        let arr = v.as_array().ok_or_else(bad)?;
        let mut terms = Vec::with_capacity(arr.len());
        for t in arr {
            let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
            let d = t[0].as_u64().filter(|&d| d > 0).ok_or_else(bad)?;
            let n = t[1].as_i64().ok_or_else(bad)?;
            let den = t[2].as_i64().filter(|&x| x != 0).ok_or_else(bad)?;
            terms.push((d, Rational64::new(n, den)));
        }
        Ok(Self::new(terms))
    }
}

impl fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "1");
        }
        let fmt_term = |d: u64, r: Rational64| {
            let base = if d == 1 {
                "eta(q)".to_string()
            } else {
                format!("eta(q^{d})")
            };
            if r.is_one() {
                base
            } else if r.is_integer() {
                format!("{base}^{}", r.numer())
            } else {
                format!("{base}^({r})")
            }
        };
        let num: Vec<String> = self
            .terms
            .iter()
            .filter(|(_, r)| r.is_positive())
            .map(|&(d, r)| fmt_term(d, r))
            .collect();
        let den: Vec<String> = self
            .terms
            .iter()
            .filter(|(_, r)| r.is_negative())
            .map(|&(d, r)| fmt_term(d, -r))
            .collect();
        let num = if num.is_empty() {
            "1".to_string()
        } else {
            num.join("*")
        };
        match den.len() {
            0 => write!(f, "{num}"),
            1 => write!(f, "{num}/{}", den[0]),
            _ => write!(f, "{num}/({})", den.join("*")),
        }
    }
}

/// Order of an eta-quotient at the cusps with denominator `denominator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuspOrder {
    pub denominator: u64,
    #[serde(serialize_with = "ser_rational")]
    pub order: Rational64,
    /// Number of `Gamma_0(N)` cusps with this denominator, `phi(gcd(d, N/d))`.
    pub cusps: u64,
}

fn ser_rational<S: serde::Serializer>(
    r: &Rational64,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Index of `Gamma_0(level)` in `SL_2(Z)`.
pub fn gamma0_index(level: u64) -> u64 {
    let mut idx = level;
    for p in prime_factors(level) {
        idx = idx / p * (p + 1);
    }
    idx
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// Base list `(1, 2, 3, 6)`.
pub const BASES_6: [u64; 4] = [1, 2, 3, 6];
/// Base list `(1, 2, 4, 8)`.
pub const BASES_8: [u64; 4] = [1, 2, 4, 8];

/// `root`-th root of `eta(q^a)^m eta(q^b)^n eta(q^c)^r eta(q^d)^s`, written
/// `[m,n,r,s]@(a,b,c,d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TupleSpec {
    pub bases: [u64; 4],
    pub exponents: [i64; 4],
    pub root: u64,
}

impl TupleSpec {
    pub fn cube_root(bases: [u64; 4], exponents: [i64; 4]) -> Self {
        TupleSpec {
            bases,
            exponents,
            root: 3,
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.exponents.iter().sum()
    }

    /// Whether the bases all divide 6 or all divide 8.
    pub fn has_standard_bases(&self) -> bool {
        self.bases.iter().all(|b| 6 % b == 0) || self.bases.iter().all(|b| 8 % b == 0)
    }

    pub fn to_eta(&self) -> EtaQuotient {
        EtaQuotient::new(
            self.bases
                .iter()
                .zip(self.exponents)
                .map(|(&b, e)| (b, Rational64::new(e, self.root as i64))),
        )
    }

    pub fn weight(&self) -> Rational64 {
        self.to_eta().weight()
    }

    /// The eta-quotient under the root, with integer exponents.
    pub fn radicand(&self) -> EtaQuotient {
        EtaQuotient::new(
            self.bases
                .iter()
                .zip(self.exponents)
                .map(|(&b, e)| (b, Rational64::from_integer(e))),
        )
    }
}

impl fmt::Display for TupleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.exponents;
        write!(f, "[{},{},{},{}]", e[0], e[1], e[2], e[3])?;
        if self.bases == BASES_6 {
            write!(f, "@6")
        } else if self.bases == BASES_8 {
            write!(f, "@8")
        } else {
            let b = self.bases;
            write!(f, "@({},{},{},{})", b[0], b[1], b[2], b[3])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn ints(s: &FracSeries, upto: i64) -> Vec<i64> {
        (0..upto)
            .map(|e| {
                let c = s.grid_coefficient(e);
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    fn naive_euler(order: usize) -> Vec<i64> {
        let mut c = vec![0i64; order];
        c[0] = 1;
        for n in 1..order {
            for i in (n..order).rev() {
                c[i] -= c[i - n];
            }
        }
        c
    }

    #[test]
    fn euler_small_orders() {
        assert_eq!(ints(&euler_function(8), 8), vec![1, -1, -1, 0, 0, 1, 0, 1]);
        assert_eq!(euler_function(1).to_string(), "1 + O(q)");
        let e = euler_function(13);
        assert_eq!(
            e.grid_coefficient(12),
            BigRational::from_integer((-1).into())
        );
        assert_eq!(ints(&e, 13), naive_euler(13));
    }

    #[test]
    fn delta_prefix() {
        let delta = EtaQuotient::from_ints(&[(1, 24)]).expand(4).unwrap();
        assert_eq!(delta.ramification(), 1);
        assert_eq!(ints(&delta, 4), vec![0, 1, -24, 252]);
    }

    #[test]
    fn canonical_form() {
        let e = EtaQuotient::from_ints(&[(4, 2), (1, 3), (4, -2), (2, 0)]);
        assert_eq!(e.terms(), &[(1, Rational64::from_integer(3))]);
        assert!(e.combine(&e.inverse()).is_one());
    }

    #[test]
    fn weight_and_leading() {
        let ea = EtaQuotient::from_ints(&[(1, -4), (2, 6), (4, 4)]);
        assert_eq!(ea.weight(), Rational64::from_integer(3));
        assert_eq!(EtaQuotient::one().weight(), Rational64::zero());
        let h2 = TupleSpec::cube_root(BASES_8, [8, -12, 22, 0]);
        assert_eq!(h2.weight(), Rational64::from_integer(3));
        assert_eq!(h2.to_eta().leading_exponent(), Rational64::one());
    }

    #[test]
    fn cusp_orders_of_delta() {
        let delta = EtaQuotient::from_ints(&[(1, 24)]);
        let o = delta.cusp_orders(1).unwrap();
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].order, Rational64::one());
        for c in EtaQuotient::one().cusp_orders(12).unwrap() {
            assert!(c.order.is_zero());
        }
    }

    #[test]
    fn cusp_orders_errors() {
        let h = TupleSpec::cube_root(BASES_8, [8, -12, 22, 0]).to_eta();
        assert_eq!(h.cusp_orders(16), Err(Error::NonIntegralExponents));
        let e = EtaQuotient::from_ints(&[(3, 1)]);
        assert_eq!(
            e.cusp_orders(16),
            Err(Error::ScaleNotDividingLevel {
                delta: 3,
                level: 16
            })
        );
    }

    #[test]
    fn divisor_helpers() {
        assert_eq!(divisors(16), vec![1, 2, 4, 8, 16]);
        assert_eq!(gamma0_index(16), 24);
        assert_eq!(gamma0_index(1), 1);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn display_round_trip_json() {
        let h = TupleSpec::cube_root(BASES_8, [8, -12, 22, 0]).to_eta();
        assert_eq!(h.to_string(), "eta(q)^(8/3)*eta(q^4)^(22/3)/eta(q^2)^4");
        assert_eq!(h.to_json().to_string(), "[[1,8,3],[2,-4,1],[4,22,3]]");
        assert_eq!(EtaQuotient::from_json(&h.to_json()).unwrap(), h);
        assert_eq!(
            TupleSpec::cube_root(BASES_6, [1, 2, 3, 12]).to_string(),
            "[1,2,3,12]@6"
        );
    }
}
