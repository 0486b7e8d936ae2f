//! Every concrete form the reproduction needs: the weight-1 blocks on
//! `Gamma_1(6)` and `Gamma_1(12)`, the `t` family on `Gamma_1(4) ∩ Gamma_0(8)`,
//! the tuple figures, the worked-example pair `H1`, `H2`, and the twisted
//! newform `f`.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use crate::asd::CoefficientTable;
use crate::error::{Error, Result};
use crate::eta::{EtaQuotient, TupleSpec, BASES_6, BASES_8};
use crate::ligozat::kronecker;
use crate::qseries::FracSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormObject {
    Eta(EtaQuotient),
    /// `sum (D | n) a_n q^n` for the expansion `sum a_n q^n` of `base`.
    Twist {
        base: EtaQuotient,
        discriminant: i64,
    },
}

/// Printed leading coefficients: `coeffs[i]` belongs to `q^(start + i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prefix {
    pub start: i64,
    pub coeffs: Vec<i64>,
}

impl Prefix {
    fn sparse(start: i64, end: i64, terms: &[(i64, i64)]) -> Self {
        let mut coeffs = vec![0; (end - start) as usize];
        for &(e, c) in terms {
            coeffs[(e - start) as usize] = c;
        }
        Prefix { start, coeffs }
    }

    /// Exponent one past the last printed coefficient.
    pub fn end(&self) -> i64 {
        self.start + self.coeffs.len() as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedForm {
    pub name: &'static str,
    pub object: FormObject,
    pub claimed_prefix: Option<Prefix>,
    pub group_label: &'static str,
    pub source: &'static str,
    /// Discriminant `D` of the nebentypus `p -> (D | p)`, for congruence forms.
    pub nebentypus: Option<i64>,
}

impl NamedForm {
    pub fn eta(&self) -> Option<&EtaQuotient> {
        match &self.object {
            FormObject::Eta(e) => Some(e),
            FormObject::Twist { .. } => None,
        }
    }

    /// Expansion known to `O(q^order)`.
    pub fn expand(&self, order: i64) -> Result<FracSeries> {
        match &self.object {
            FormObject::Eta(e) => e.expand(order),
            FormObject::Twist { base, discriminant } => {
                let s = base.expand(order)?;
                let m = s.ramification();
                if m != 1 {
                    return Err(Error::InvalidArgument(
                        "twists need an integral q-expansion".into(),
                    ));
                }
                let d = *discriminant;
                let terms: Vec<(i64, BigRational)> = s
                    .terms()
                    .map(|(n, c)| (n, c * BigRational::from_integer(kronecker(d, n).into())))
                    .collect();
                Ok(FracSeries::new(1, terms, s.trunc()))
            }
        }
    }

    /// Whether the expansion reproduces the printed prefix exactly.
    pub fn prefix_matches(&self) -> Result<Option<bool>> {
        let Some(prefix) = &self.claimed_prefix else {
            return Ok(None);
        };
        let s = self.expand(prefix.end())?;
        for (i, &c) in prefix.coeffs.iter().enumerate() {
            let got = s.coefficient(prefix.start + i as i64, 1)?;
            if got != BigRational::from_integer(c.into()) {
                return Ok(Some(false));
            }
        }
        Ok(Some(true))
    }
}

fn q(terms: &[(u64, i64)]) -> EtaQuotient {
    EtaQuotient::from_ints(terms)
}

const BLOCKS_6: &str = "M_1(Gamma_1(6))";
const LEVEL_8: &str = "M_0(Gamma_1(4) ∩ Gamma_0(8))";
const LEVEL_16: &str = "M_0(Gamma_1(16))";
const WEIGHT_3: &str = "M_3(Gamma_1(4) ∩ Gamma_0(8))";

/// Names accepted by [`block`].
pub const BLOCK_NAMES: [&str; 17] = [
    "a",
    "b",
    "c",
    "d",
    "e",
    "t",
    "(t+1)/2",
    "(t+1)/2t",
    "4(t+1)/(1-t)",
    "sqrt(t)",
    "sqrt((t+1)/2)",
    "E_a",
    "E_b",
    "H1",
    "H2",
    "eta(q^4)^6",
    "f",
];

/// Looks up a catalog entry by name.
pub fn block(name: &str) -> Result<NamedForm> {
    let form = |name, eq, prefix, group_label, source| NamedForm {
        name,
        object: FormObject::Eta(eq),
        claimed_prefix: prefix,
        group_label,
        source,
        nebentypus: None,
    };
    let dense = |start, coeffs: &[i64]| {
        Some(Prefix {
            start,
            coeffs: coeffs.to_vec(),
        })
    };
    let blocks = "weight-1 blocks";
    let tfam = "t family";
    Ok(match name {
        "a" => form(
            "a",
            q(&[(1, 1), (2, -2), (3, -3), (6, 6)]),
            dense(1, &[1, -1, 1, 1]),
            BLOCKS_6,
            blocks,
        ),
        "b" => form(
            "b",
            q(&[(1, -2), (2, 1), (3, 6), (6, -3)]),
            dense(0, &[1, 2, 4, 2]),
            BLOCKS_6,
            blocks,
        ),
        "c" => form(
            "c",
            q(&[(1, -3), (2, 6), (3, 1), (6, -2)]),
            dense(0, &[1, 3, 3, 3]),
            BLOCKS_6,
            blocks,
        ),
        "d" => form(
            "d",
            q(&[(1, 6), (2, -3), (3, -2), (6, 1)]),
            dense(0, &[1, -6, 12, -6]),
            BLOCKS_6,
            blocks,
        ),
        "e" => form(
            "e",
            q(&[(1, 2), (2, -1), (3, 2), (6, -1)]),
            dense(0, &[1, -2, 0, -2]),
            "M_1(Gamma_1(12))",
            blocks,
        ),
        "t" => form("t", q(&[(1, 8), (2, -12), (4, 4)]), None, LEVEL_8, tfam),
        "(t+1)/2" => form(
            "(t+1)/2",
            q(&[(1, 4), (2, -14), (4, 14), (8, -4)]),
            None,
            LEVEL_8,
            tfam,
        ),
        "(t+1)/2t" => form(
            "(t+1)/2t",
            q(&[(1, -4), (2, -2), (4, 10), (8, -4)]),
            None,
            LEVEL_8,
            tfam,
        ),
        "4(t+1)/(1-t)" => form(
            "4(t+1)/(1-t)",
            q(&[(2, -4), (4, 12), (8, -8)]),
            None,
            LEVEL_8,
            tfam,
        ),
        "sqrt(t)" => form(
            "sqrt(t)",
            q(&[(1, 4), (2, -6), (4, 2)]),
            None,
            LEVEL_16,
            tfam,
        ),
        "sqrt((t+1)/2)" => form(
            "sqrt((t+1)/2)",
            q(&[(1, 2), (2, -7), (4, 7), (8, -2)]),
            None,
            LEVEL_16,
            tfam,
        ),
        "E_a" => form("E_a", q(&[(1, -4), (2, 6), (4, 4)]), None, WEIGHT_3, tfam),
        "E_b" => form("E_b", q(&[(2, 8), (4, -6), (8, 4)]), None, WEIGHT_3, tfam),
        "H1" => form(
            "H1",
            h1(),
            None,
            "S_3 of a non-congruence subgroup of Gamma_0(16)",
            "worked example",
        ),
        "H2" => form(
            "H2",
            h2(),
            None,
            "S_3 of a non-congruence subgroup of Gamma_0(16)",
            "worked example",
        ),
        "eta(q^4)^6" => NamedForm {
            nebentypus: Some(-4),
            ..form(
                "eta(q^4)^6",
                q(&[(4, 6)]),
                None,
                "S_3(Gamma_0(16), (-4|.))",
                "worked example",
            )
        },
        "f" => NamedForm {
            name: "f",
            object: FormObject::Twist {
                base: q(&[(4, 6)]),
                discriminant: -3,
            },
            claimed_prefix: Some(Prefix::sparse(0, 50, &f_printed())),
            group_label: "S_3(Gamma_0(144), (-4|.))",
            source: "worked example",
            nebentypus: Some(-4),
        },
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

/// `cbrt(eta(q^2)^12 eta(q^4)^14 / eta(q)^8)`.
pub fn h1() -> EtaQuotient {
    TupleSpec::cube_root(BASES_8, [-8, 12, 14, 0]).to_eta()
}

/// `cbrt(eta(q)^8 eta(q^4)^22 / eta(q^2)^12)`.
pub fn h2() -> EtaQuotient {
    TupleSpec::cube_root(BASES_8, [8, -12, 22, 0]).to_eta()
}

/// The weight-0 quotient linking `H1` to `h2` of Figure 2 row 2.
pub fn worked_linking_quotient() -> EtaQuotient {
    q(&[(1, -4), (2, 6), (4, -2)])
}

/// Nonzero coefficients of `f` below `q^50`, as printed.
pub fn f_printed() -> Vec<(i64, i64)> {
    vec![
        (1, 1),
        (5, 6),
        (13, 10),
        (17, 30),
        (25, 11),
        (29, -42),
        (37, -70),
        (41, -18),
        (49, 49),
    ]
}

/// One row of the printed table of scan constants: the self-ratio column
/// and the cross-ratio column, each blank or a residue mod `p^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrintedScanRow {
    pub p: u64,
    pub self_ratio: Option<i64>,
    pub cross_ratio: Option<i64>,
}

/// The table of constants for `(H1, H2)` as printed, `5 <= p <= 47`, `np <= 500`.
pub fn worked_example_table() -> Vec<PrintedScanRow> {
    let row = |p, s, c| PrintedScanRow {
        p,
        self_ratio: s,
        cross_ratio: c,
    };
    vec![
        row(5, Some(6), None),
        row(7, None, Some(0)),
        row(11, None, Some(0)),
        row(13, None, Some(10)),
        row(17, Some(30), None),
        row(19, None, Some(0)),
        row(23, None, Some(0)),
        row(29, Some(-42), None),
        row(31, None, Some(0)),
        row(37, None, Some(-70)),
        row(41, Some(-18), None),
        row(43, None, Some(0)),
        row(47, None, Some(0)),
    ]
}

/// Closed-form label of a figure entry as a product of catalog blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Label {
    pub text: &'static str,
    pub factors: Vec<(&'static str, Rational64)>,
}

impl Label {
    pub fn quotient(&self) -> Result<EtaQuotient> {
        let mut acc = EtaQuotient::one();
        for &(name, k) in &self.factors {
            let b = block(name)?;
            let e = b
                .eta()
                .ok_or_else(|| Error::UnknownName(name.to_string()))?;
            acc = acc.combine(&e.scale(k));
        }
        Ok(acc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureEntry {
    pub tuple: TupleSpec,
    pub label: Label,
}

impl FigureEntry {
    /// Whether the label's exponent vector equals the tuple's.
    pub fn label_matches(&self) -> Result<bool> {
        Ok(self.label.quotient()? == self.tuple.to_eta())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureRow {
    pub h1: FigureEntry,
    pub h2: FigureEntry,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Figure {
    pub number: u8,
    pub caption: &'static str,
    pub bases: [u64; 4],
    /// Rows are pairs forming a basis at every good prime (Figures 3 and 4).
    pub asd_pairs: bool,
    pub rows: Vec<FigureRow>,
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn entry(
    bases: [u64; 4],
    e: [i64; 4],
    text: &'static str,
    factors: &[(&'static str, Rational64)],
) -> FigureEntry {
    FigureEntry {
        tuple: TupleSpec::cube_root(bases, e),
        label: Label {
            text,
            factors: factors.to_vec(),
        },
    }
}

/// Rows of Figure `which` (1 to 4).
pub fn figures(which: u8) -> Result<Figure> {
    let one = Rational64::one();
    let (b6, b8) = (BASES_6, BASES_8);
    let fig = match which {
        1 => Figure {
            number: 1,
            caption: "forms for subgroups of Gamma_1(12)",
            bases: b6,
            asd_pairs: false,
            rows: vec![
                FigureRow {
                    h1: entry(
                        b6,
                        [4, 7, -4, 11],
                        "cbrt(b/d) acd",
                        &[("a", one), ("b", r(1, 3)), ("c", one), ("d", r(2, 3))],
                    ),
                    h2: entry(
                        b6,
                        [-4, 11, 4, 7],
                        "cbrt(b/d)^2 acd",
                        &[("a", one), ("b", r(2, 3)), ("c", one), ("d", r(1, 3))],
                    ),
                },
                FigureRow {
                    h1: entry(
                        b6,
                        [13, -2, -7, 14],
                        "cbrt(b/c) acd",
                        &[("a", one), ("b", r(1, 3)), ("c", r(2, 3)), ("d", one)],
                    ),
                    h2: entry(
                        b6,
                        [14, -7, -2, 13],
                        "cbrt(b/c)^2 acd",
                        &[("a", one), ("b", r(2, 3)), ("c", r(1, 3)), ("d", one)],
                    ),
                },
            ],
        },
        2 => Figure {
            number: 2,
            caption: "forms for subgroups of Gamma_0(8) ∩ Gamma_1(4)",
            bases: b8,
            asd_pairs: false,
            rows: vec![
                FigureRow {
                    h1: entry(
                        b8,
                        [-8, 20, 2, 4],
                        "cbrt((t+1)/2) E_b",
                        &[("(t+1)/2", r(1, 3)), ("E_b", one)],
                    ),
                    h2: entry(
                        b8,
                        [-4, 22, -8, 8],
                        "cbrt((t+1)/2)^2 E_b",
                        &[("(t+1)/2", r(2, 3)), ("E_b", one)],
                    ),
                },
                FigureRow {
                    h1: entry(
                        b8,
                        [-4, 6, 16, 0],
                        "t^(1/3) E_a",
                        &[("t", r(1, 3)), ("E_a", one)],
                    ),
                    h2: entry(
                        b8,
                        [4, -6, 20, 0],
                        "t^(2/3) E_a",
                        &[("t", r(2, 3)), ("E_a", one)],
                    ),
                },
                FigureRow {
                    h1: entry(
                        b8,
                        [4, 10, -4, 8],
                        "cbrt((t+1)/2t) E_b",
                        &[("(t+1)/2t", r(1, 3)), ("E_b", one)],
                    ),
                    h2: entry(
                        b8,
                        [8, -4, 10, 4],
                        "cbrt((t+1)/2t)^2 E_b",
                        &[("(t+1)/2t", r(2, 3)), ("E_b", one)],
                    ),
                },
                FigureRow {
                    h1: entry(
                        b8,
                        [0, 20, -6, 4],
                        "cbrt(4(t+1)/(1-t)) E_b",
                        &[("4(t+1)/(1-t)", r(1, 3)), ("E_b", one)],
                    ),
                    h2: entry(
                        b8,
                        [0, 16, 6, -4],
                        "cbrt(4(t+1)/(1-t))^2 E_b",
                        &[("4(t+1)/(1-t)", r(2, 3)), ("E_b", one)],
                    ),
                },
            ],
        },
        3 => Figure {
            number: 3,
            caption: "pairs for subgroups of Gamma_1(12) forming bases",
            bases: b6,
            asd_pairs: true,
            rows: vec![FigureRow {
                h1: entry(
                    b6,
                    [-8, 13, 8, 5],
                    "cbrt(e/b) abc",
                    &[("a", one), ("b", r(2, 3)), ("c", one), ("e", r(1, 3))],
                ),
                h2: entry(
                    b6,
                    [8, 5, -8, 13],
                    "cbrt(e/b)^2 ace",
                    &[("a", one), ("b", r(-2, 3)), ("c", one), ("e", r(5, 3))],
                ),
            }],
        },
        4 => Figure {
            number: 4,
            caption: "pairs for subgroups of Gamma_0(16) ∩ Gamma_1(4) forming bases",
            bases: b8,
            asd_pairs: true,
            rows: vec![
                FigureRow {
                    h1: entry(
                        b8,
                        [-2, 23, -13, 10],
                        "((t+1)/2t)^(1/6) E_b",
                        &[("(t+1)/2t", r(1, 6)), ("E_b", one)],
                    ),
                    h2: entry(
                        b8,
                        [-10, 19, 7, 2],
                        "((t+1)/2t)^(5/6) E_b",
                        &[("(t+1)/2t", r(5, 6)), ("E_b", one)],
                    ),
                },
                FigureRow {
                    h1: entry(
                        b8,
                        [8, -12, 22, 0],
                        "sqrt(t) E_a",
                        &[("t", r(1, 2)), ("E_a", one)],
                    ),
                    h2: entry(
                        b8,
                        [-8, 12, 14, 0],
                        "sqrt(t)^5 E_a",
                        &[("t", r(5, 2)), ("E_a", one)],
                    ),
                },
                FigureRow {
                    h1: entry(
                        b8,
                        [0, -8, 30, -4],
                        "(4(t+1)/(1-t))^(8/3) E_b",
                        &[("4(t+1)/(1-t)", r(8, 3)), ("E_b", one)],
                    ),
                    h2: entry(
                        b8,
                        [0, 8, 6, 4],
                        "t^(-2/3) E_b",
                        &[("t", r(-2, 3)), ("E_b", one)],
                    ),
                },
                FigureRow {
                    h1: entry(
                        b8,
                        [2, 17, -11, 10],
                        "((t+1)/2)^(1/6) E_a",
                        &[("(t+1)/2", r(1, 6)), ("E_a", one)],
                    ),
                    h2: entry(
                        b8,
                        [10, -11, 17, 2],
                        "((t+1)/2)^(5/6) E_a",
                        &[("(t+1)/2", r(5, 6)), ("E_a", one)],
                    ),
                },
            ],
        },
        _ => {
            return Err(Error::InvalidArgument(format!(
                "no figure {which}; figures are 1 to 4"
            )))
        }
    };
    Ok(fig)
}

/// Rational-function side of a `t`-family identity, built from the
/// expansion of `t` (and `E_a` for `E_b`) to `O(q^order)`.
pub fn t_family_rational_side(name: &str, order: i64) -> Result<FracSeries> {
    // extra precision covers the pole of 4(t+1)/(1-t) and the q-shift of 1/t
    let t = block("t")?.eta().expect("eta").expand(order + 2)?;
    let one = FracSeries::one(order + 2);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let t_plus_1 = t.add(&one);
    let s = match name {
        "(t+1)/2" => t_plus_1.scale(&half),
        "(t+1)/2t" => t_plus_1.scale(&half).mul(&t.invert()?),
        "4(t+1)/(1-t)" => t_plus_1
            .scale(&BigRational::from_integer(4.into()))
            .mul(&one.sub(&t).invert()?),
        "sqrt(t)" => t.nth_root(2)?,
        "sqrt((t+1)/2)" => t_plus_1.scale(&half).nth_root(2)?,
        "E_b" => {
            let ea = block("E_a")?.eta().expect("eta").expand(order + 2)?;
            t.scale(&BigRational::from_integer(2.into()))
                .mul(&t_plus_1.invert()?)
                .mul(&ea)
        }
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(s.truncate(order))
}

/// `sum chi(n mod m) a_n q^(n/mu)`.
pub fn twist(table: &CoefficientTable, m: u64, chi: impl Fn(u64) -> i64) -> CoefficientTable {
    assert!(m > 0, "modulus must be positive");
    table.map_indexed(|n, c| {
        let s = chi(n % m);
        if s == 0 {
            BigRational::zero()
        } else {
            c * BigRational::from_integer(s.into())
        }
    })
}

/// Legendre symbol modulo 3 on residues.
pub fn legendre_mod3(r: u64) -> i64 {
    match r % 3 {
        1 => 1,
        2 => -1,
        _ => 0,
    }
}

/// Coefficients `a_1 .. a_(order-1)` of `f`, the twist of `eta(q^4)^6` by the
/// Legendre symbol modulo 3.
pub fn newform_f(order: i64) -> Result<CoefficientTable> {
    if order < 2 {
        return Err(Error::InvalidArgument("order must be at least 2".into()));
    }
    let base = CoefficientTable::from_series("eta(q^4)^6", &q(&[(4, 6)]).expand(order)?)?;
    Ok(twist(&base, 3, legendre_mod3).renamed("f"))
}

/// Nebentypus of `f` as a character modulo 144: `(-4 | p)` away from 2 and 3.
pub fn nebentypus_f(p: u64) -> i64 {
    if p.is_multiple_of(2) || p.is_multiple_of(3) {
        0
    } else {
        kronecker(-4, p as i64) as i64
    }
}

/// Integral eta-products offered to newform matching.
pub fn congruence_candidates() -> Vec<NamedForm> {
    ["eta(q^4)^6", "E_a", "E_b"]
        .iter()
        .map(|n| block(n).expect("catalog name"))
        .collect()
}
