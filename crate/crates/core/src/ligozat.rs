//! Kronecker symbols and the weight-0 modularity criterion for eta-quotients
//! on `Gamma_0(N)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::eta::EtaQuotient;

/// Kronecker symbol `(a | n)`, defined for every pair of integers.
pub fn kronecker(a: i64, n: i64) -> i32 {
    let (mut a, mut n) = (a as i128, n as i128);
    if n == 0 {
        return i32::from(a == 1 || a == -1);
    }
    let mut result = 1;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    let twos = n.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        n >>= twos;
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    // Jacobi symbol for odd positive n
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Modulus for the congruence conditions on the exponent sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LigozatModulus {
    #[serde(rename = "24")]
    TwentyFour,
    #[serde(rename = "8")]
    Eight,
}

impl LigozatModulus {
    pub fn value(self) -> i64 {
        match self {
            LigozatModulus::TwentyFour => 24,
            LigozatModulus::Eight => 8,
        }
    }

    pub fn from_value(m: i64) -> Result<Self> {
        match m {
            24 => Ok(LigozatModulus::TwentyFour),
            8 => Ok(LigozatModulus::Eight),
            _ => Err(Error::InvalidArgument(format!(
                "modulus must be 24 or 8, got {m}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Modular function of weight 0 for `Gamma_0(N)`.
    ModularFunctionGamma0N,
    /// Conditions hold modulo 8 only: modular for `Gamma_0(N) ∩ Gamma(6)`.
    ModularFunctionGamma0NCapGamma6,
    Fails,
}

impl Verdict {
    pub fn passes(self) -> bool {
        self != Verdict::Fails
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LigozatReport {
    pub level: u64,
    pub modulus_used: LigozatModulus,
    /// `sum r_delta * delta`.
    pub delta_sum: i64,
    /// `sum r_delta * N / delta`.
    pub codelta_sum: i64,
    /// `sum r_delta`.
    pub exponent_sum: i64,
    pub cond_delta: bool,
    pub cond_codelta: bool,
    pub cond_weight0: bool,
    pub verdict: Verdict,
    /// `s = prod (N/delta)^(r_delta)`, a rational number.
    #[serde(serialize_with = "ser_display")]
    pub character_spec: BigRational,
    /// Squarefree part of `s`; the character is `a -> (kernel | a)`.
    pub character_kernel: i64,
    /// Every exponent is even, so the quotient is also modular on `Gamma(12N)`.
    pub all_exponents_even: bool,
    pub terms: Vec<(u64, i64)>,
}

fn ser_display<T: fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Evaluates the three conditions on the exponent vector of `eq` at `level`.
pub fn check_ligozat(
    eq: &EtaQuotient,
    level: u64,
    modulus: LigozatModulus,
) -> Result<LigozatReport> {
    if level == 0 {
        return Err(Error::InvalidArgument("level must be positive".into()));
    }
    if !eq.is_integral() {
        return Err(Error::NonIntegralExponents);
    }
    let mut terms = Vec::with_capacity(eq.terms().len());
    for &(delta, r) in eq.terms() {
        if !level.is_multiple_of(delta) {
            return Err(Error::ScaleNotDividingLevel { delta, level });
        }
        terms.push((delta, r.to_integer()));
    }
    let n = level as i64;
    let delta_sum: i64 = terms.iter().map(|&(d, r)| r * d as i64).sum();
    let codelta_sum: i64 = terms.iter().map(|&(d, r)| r * (n / d as i64)).sum();
    let exponent_sum: i64 = terms.iter().map(|&(_, r)| r).sum();

    let holds = |m: i64| delta_sum % m == 0 && codelta_sum % m == 0 && exponent_sum == 0;
    let m = modulus.value();
    let verdict = if holds(24) {
        Verdict::ModularFunctionGamma0N
    } else if modulus == LigozatModulus::Eight && holds(8) {
        Verdict::ModularFunctionGamma0NCapGamma6
    } else {
        Verdict::Fails
    };

    let mut s = BigRational::one();
    for &(d, r) in &terms {
        let base = BigRational::from_integer(BigInt::from(n / d as i64));
        s *= num_traits::pow::Pow::pow(base, r as i32);
    }
    let character_kernel = squarefree_part(&(s.numer() * s.denom()));

    Ok(LigozatReport {
        level,
        modulus_used: modulus,
        delta_sum,
        codelta_sum,
        exponent_sum,
        cond_delta: delta_sum % m == 0,
        cond_codelta: codelta_sum % m == 0,
        cond_weight0: exponent_sum == 0,
        verdict,
        character_spec: s,
        character_kernel,
        all_exponents_even: terms.iter().all(|&(_, r)| r % 2 == 0),
        terms,
    })
}

/// `prod_delta (N/delta | a)^(r_delta)` for `a` coprime to the level.
pub fn character_eval(report: &LigozatReport, a: i64) -> Result<i32> {
    if !report.verdict.passes() {
        return Err(Error::InvalidArgument(
            "character is only defined when the criterion passes".into(),
        ));
    }
    if a.gcd(&(report.level as i64)) != 1 {
        return Err(Error::NotCoprime {
            a,
            level: report.level,
        });
    }
    let n = report.level as i64;
    let mut v = 1;
    for &(d, r) in &report.terms {
        if r % 2 != 0 {
            v *= kronecker(n / d as i64, a);
        }
    }
    Ok(v)
}

/// Squarefree part of a positive integer; the input here is a product of
/// divisors of the level, so trial division is enough.
fn squarefree_part(x: &BigInt) -> i64 {
    let mut x = x.abs();
    let mut out: i64 = 1;
    let mut p: u64 = 2;
    while x > BigInt::one() {
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&x % &bp) == BigInt::from(0) {
            x /= &bp;
            e += 1;
        }
        if e % 2 == 1 {
            out *= p as i64;
        }
        p += 1;
        if BigInt::from(p) * BigInt::from(p) > x && x > BigInt::one() {
            out *= x.to_i64().expect("squarefree kernel fits in i64");
            break;
        }
    }
    out
}

impl fmt::Display for LigozatReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.modulus_used.value();
        let mark = |b: bool| if b { "ok" } else { "FAIL" };
        writeln!(f, "level N = {}, congruences modulo {m}", self.level)?;
        writeln!(
            f,
            "  sum r_d * d     = {:>6}  residue {:>3} mod {m}  {}",
            self.delta_sum,
            self.delta_sum.rem_euclid(m),
            mark(self.cond_delta)
        )?;
        writeln!(
            f,
            "  sum r_d * N/d   = {:>6}  residue {:>3} mod {m}  {}",
            self.codelta_sum,
            self.codelta_sum.rem_euclid(m),
            mark(self.cond_codelta)
        )?;
        writeln!(
            f,
            "  sum r_d         = {:>6}  {}",
            self.exponent_sum,
            mark(self.cond_weight0)
        )?;
        writeln!(f, "  character: a -> ({} | a)", self.character_kernel)?;
        if self.all_exponents_even {
            writeln!(f, "  all exponents even")?;
        }
        write!(f, "  verdict: {:?}", self.verdict)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_small() {
        assert_eq!(kronecker(3, 5), -1);
        assert_eq!(kronecker(2, 7), 1);
        assert_eq!(kronecker(1, -9), 1);
        assert_eq!(kronecker(-1, -1), -1);
        assert_eq!(kronecker(5, 0), 0);
        assert_eq!(kronecker(-1, 0), 1);
        assert_eq!(kronecker(3, 2), -1);
        assert_eq!(kronecker(7, 2), 1);
        assert_eq!(kronecker(4, 2), 0);
        assert_eq!(kronecker(-3, 7), 1);
    }

    #[test]
    fn worked_quotient_levels() {
        let g = EtaQuotient::from_ints(&[(1, -4), (2, 6), (4, -2)]);
        let r16 = check_ligozat(&g, 16, LigozatModulus::TwentyFour).unwrap();
        assert_eq!(r16.verdict, Verdict::ModularFunctionGamma0N);
        assert_eq!(
            (r16.delta_sum, r16.codelta_sum, r16.exponent_sum),
            (0, -24, 0)
        );
        assert_eq!(r16.character_kernel, 1);
        let r8 = check_ligozat(&g, 8, LigozatModulus::TwentyFour).unwrap();
        assert!(r8.cond_delta && !r8.cond_codelta && r8.cond_weight0);
        assert_eq!(r8.codelta_sum.rem_euclid(24), 12);
        assert_eq!(r8.verdict, Verdict::Fails);
        assert!(character_eval(&r8, 1).is_err());
    }

    #[test]
    fn mod8_variant() {
        // sum r d = 8, sum r N/d = 8 at N = 4
        let g = EtaQuotient::from_ints(&[(1, 8), (2, -16), (4, 8)]);
        assert_eq!(
            check_ligozat(&g, 4, LigozatModulus::TwentyFour)
                .unwrap()
                .verdict,
            Verdict::Fails
        );
        assert_eq!(
            check_ligozat(&g, 4, LigozatModulus::Eight).unwrap().verdict,
            Verdict::ModularFunctionGamma0NCapGamma6
        );
    }

    #[test]
    fn empty_and_errors() {
        let r = check_ligozat(&EtaQuotient::one(), 7, LigozatModulus::TwentyFour).unwrap();
        assert!(r.verdict.passes());
        assert_eq!(character_eval(&r, 1).unwrap(), 1);
        assert_eq!(
            character_eval(&r, 14),
            Err(Error::NotCoprime { a: 14, level: 7 })
        );
        assert!(LigozatModulus::from_value(12).is_err());
    }

    #[test]
    fn character_matches_kernel() {
        let g = EtaQuotient::from_ints(&[(1, -4), (2, -3), (4, 4), (6, 3)]);
        let r = check_ligozat(&g, 12, LigozatModulus::TwentyFour).unwrap();
        assert!(r.verdict.passes(), "{r}");
        assert_eq!(r.character_kernel, 3);
        for a in [1, 5, 7, 11, 13, 25, -1, -5, -13] {
            assert_eq!(
                character_eval(&r, a).unwrap(),
                kronecker(r.character_kernel, a)
            );
        }
    }
}
