//! Exact coefficient rings.
//!
//! A [`Scalar`] carries its ring with it. Two scalars are equal iff their
//! rings and canonical payloads agree. Arithmetic between different rings is
//! an error through the `try_*` methods; the operator impls panic on a
//! mismatch and are meant for code that has already checked homogeneity.

mod mpoly;
mod parse;
mod upoly;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use mpoly::{Coeff, Fp, MPoly, Monomial};
pub use upoly::UPoly;

use crate::error::{Error, Result};

/// A coefficient ring.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Ring {
    Rational,
    /// Laurent polynomials over Q in the named variables.
    Laurent { vars: Arc<[String]> },
    /// Polynomials over F_p in the named variables.
    FpPoly { p: u64, vars: Arc<[String]> },
    /// Q[x]/(m(x)) with `m` monic.
    Algebraic { generator: Arc<str>, minpoly: Arc<UPoly> },
    /// Univariate rational functions Q(q).
    RationalFunction { var: Arc<str> },
}

/// An element of a [`Ring`] in canonical form.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Laurent { vars: Arc<[String]>, poly: MPoly<BigRational> },
    FpPoly { p: u64, vars: Arc<[String]>, poly: MPoly<Fp> },
    Algebraic { generator: Arc<str>, minpoly: Arc<UPoly>, value: UPoly },
    RationalFunction { var: Arc<str>, num: UPoly, den: UPoly },
}

pub(crate) fn q_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Ring {
    pub fn laurent<S: AsRef<str>>(vars: &[S]) -> Ring {
        Ring::Laurent { vars: vars.iter().map(|v| v.as_ref().to_string()).collect::<Vec<_>>().into() }
    }

    pub fn fp<S: AsRef<str>>(p: u64, vars: &[S]) -> Ring {
        Ring::FpPoly { p, vars: vars.iter().map(|v| v.as_ref().to_string()).collect::<Vec<_>>().into() }
    }

    pub fn rational_function(var: &str) -> Ring {
        Ring::RationalFunction { var: var.into() }
    }

    /// `Q[generator]/(minpoly)`; the polynomial is made monic.
    pub fn algebraic(generator: &str, minpoly: UPoly) -> Result<Ring> {
        match minpoly.degree() {
            Some(d) if d >= 1 => Ok(Ring::Algebraic { generator: generator.into(), minpoly: Arc::new(minpoly.monic()) }),
            _ => Err(Error::InvalidArgument("minimal polynomial must have positive degree".into())),
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            Ring::Rational | Ring::Algebraic { .. } | Ring::RationalFunction { .. } => true,
            Ring::Laurent { vars } | Ring::FpPoly { vars, .. } => vars.is_empty(),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Ring::FpPoly { p, .. } => *p,
            _ => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(&q_int(n)).expect("integers embed in every ring")
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        self.from_rational(&BigRational::from_integer(n.clone())).expect("integers embed in every ring")
    }

    /// Image of a rational number; fails in characteristic `p` when `p`
    /// divides the denominator.
    pub fn from_rational(&self, c: &BigRational) -> Result<Scalar> {
        Ok(match self {
            Ring::Rational => Scalar::Rational(c.clone()),
            Ring::Laurent { vars } => Scalar::Laurent { vars: vars.clone(), poly: MPoly::constant(vars.len(), c.clone()) },
            Ring::FpPoly { p, vars } => {
                let f = rational_mod_p(c, *p).ok_or_else(|| Error::NotInvertible(self.to_string()))?;
                Scalar::FpPoly { p: *p, vars: vars.clone(), poly: MPoly::constant(vars.len(), f) }
            }
            Ring::Algebraic { generator, minpoly } => Scalar::Algebraic {
                generator: generator.clone(),
                minpoly: minpoly.clone(),
                value: UPoly::constant(c.clone()),
            },
            Ring::RationalFunction { var } => {
                Scalar::RationalFunction { var: var.clone(), num: UPoly::constant(c.clone()), den: UPoly::one() }
            }
        })
    }

    /// The named generator of the ring.
    pub fn var(&self, name: &str) -> Result<Scalar> {
        match self {
            Ring::Laurent { vars } => {
                let i = vars.iter().position(|v| v == name).ok_or_else(|| Error::Parse(format!("unknown variable `{name}` in {self}")))?;
                let mut e = vec![0; vars.len()];
                e[i] = 1;
                Ok(Scalar::Laurent { vars: vars.clone(), poly: MPoly::monomial(e, BigRational::one()) })
            }
            Ring::FpPoly { p, vars } => {
                let i = vars.iter().position(|v| v == name).ok_or_else(|| Error::Parse(format!("unknown variable `{name}` in {self}")))?;
                let mut e = vec![0; vars.len()];
                e[i] = 1;
                Ok(Scalar::FpPoly { p: *p, vars: vars.clone(), poly: MPoly::monomial(e, Fp::new(1, *p)) })
            }
            Ring::Algebraic { generator, minpoly } if &**generator == name => Ok(Scalar::algebraic_reduced(
                generator.clone(),
                minpoly.clone(),
                UPoly::monomial(1, BigRational::one()),
            )),
            Ring::RationalFunction { var } if &**var == name => Ok(Scalar::RationalFunction {
                var: var.clone(),
                num: UPoly::monomial(1, BigRational::one()),
                den: UPoly::one(),
            }),
            _ => Err(Error::Parse(format!("unknown variable `{name}` in {self}"))),
        }
    }

    /// Names of the ring generators.
    pub fn variables(&self) -> Vec<String> {
        match self {
            Ring::Rational => vec![],
            Ring::Laurent { vars } | Ring::FpPoly { vars, .. } => vars.to_vec(),
            Ring::Algebraic { generator, .. } => vec![generator.to_string()],
            Ring::RationalFunction { var } => vec![var.to_string()],
        }
    }

    /// Parses an expression such as `2*d^-1 + z*zs - 3/4` in this ring.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        parse::parse_expr(self, text)
    }
}

fn rational_mod_p(c: &BigRational, p: u64) -> Option<Fp> {
    let m = BigInt::from(p);
    let n = c.numer().mod_floor(&m).to_i128().unwrap();
    let d = c.denom().mod_floor(&m).to_i128().unwrap();
    let d = Fp::new(d, p).inv()?;
    Some(Coeff::mul(&Fp::new(n, p), &d))
}

impl std::str::FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ring> {
        let s = s.trim();
        if s == "rational" || s == "Q" {
            return Ok(Ring::Rational);
        }
        let (kind, rest) = s.split_once(':').ok_or_else(|| Error::Parse(format!("unknown ring `{s}`")))?;
        let names = |list: &str| -> Result<Vec<String>> {
            let v: Vec<String> = list.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect();
            for name in &v {
                if !name.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(Error::Parse(format!("bad variable name `{name}`")));
                }
            }
            let mut sorted = v.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != v.len() {
                return Err(Error::Parse("repeated variable name".into()));
            }
            Ok(v)
        };
        match kind {
            "laurent" => Ok(Ring::laurent(&names(rest)?)),
            "frac" => {
                let v = names(rest)?;
                if v.len() != 1 {
                    return Err(Error::Parse("frac takes exactly one variable".into()));
                }
                Ok(Ring::rational_function(&v[0]))
            }
            "fp" => {
                let (p, vars) = match rest.split_once('[') {
                    Some((p, v)) => (p, names(v.strip_suffix(']').ok_or_else(|| Error::Parse("missing `]`".into()))?)?),
                    None => (rest, vec![]),
                };
                let p: u64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad prime `{p}`")))?;
                if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) || p > (1 << 62) {
                    return Err(Error::Parse(format!("{p} is not a supported prime")));
                }
                Ok(Ring::fp(p, &vars))
            }
            "algebraic" => {
                let idents = parse::identifiers(rest);
                if idents.len() != 1 {
                    return Err(Error::Parse("minimal polynomial must use exactly one variable".into()));
                }
                let frac = Ring::rational_function(&idents[0]);
                match frac.parse(rest)? {
                    Scalar::RationalFunction { num, den, .. } if den.degree() == Some(0) => {
                        Ring::algebraic(&idents[0], num.scale(&den.coeffs()[0].recip()))
                    }
                    _ => Err(Error::Parse("minimal polynomial must be a polynomial".into())),
                }
            }
            _ => Err(Error::Parse(format!("unknown ring `{s}`"))),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rational => write!(f, "rational"),
            Ring::Laurent { vars } => write!(f, "laurent:{}", vars.join(",")),
            Ring::FpPoly { p, vars } if vars.is_empty() => write!(f, "fp:{p}"),
            Ring::FpPoly { p, vars } => write!(f, "fp:{p}[{}]", vars.join(",")),
            Ring::Algebraic { generator, minpoly } => {
                write!(f, "algebraic:{}", format_upoly(minpoly, generator).replace(' ', ""))
            }
            Ring::RationalFunction { var } => write!(f, "frac:{var}"),
        }
    }
}

impl Scalar {
    fn algebraic_reduced(generator: Arc<str>, minpoly: Arc<UPoly>, value: UPoly) -> Scalar {
        let value = value.divrem(&minpoly).1;
        Scalar::Algebraic { generator, minpoly, value }
    }

    fn rational_function(var: Arc<str>, num: UPoly, den: UPoly) -> Scalar {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Scalar::RationalFunction { var, num, den: UPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g);
        let (den, _) = den.divrem(&g);
        let l = den.lead().unwrap().recip();
        Scalar::RationalFunction { var, num: num.scale(&l), den: den.scale(&l) }
    }

    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Rational(_) => Ring::Rational,
            Scalar::Laurent { vars, .. } => Ring::Laurent { vars: vars.clone() },
            Scalar::FpPoly { p, vars, .. } => Ring::FpPoly { p: *p, vars: vars.clone() },
            Scalar::Algebraic { generator, minpoly, .. } => {
                Ring::Algebraic { generator: generator.clone(), minpoly: minpoly.clone() }
            }
            Scalar::RationalFunction { var, .. } => Ring::RationalFunction { var: var.clone() },
        }
    }

    pub fn same_ring(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => true,
            (Scalar::Laurent { vars: a, .. }, Scalar::Laurent { vars: b, .. }) => a == b,
            (Scalar::FpPoly { p, vars: a, .. }, Scalar::FpPoly { p: q, vars: b, .. }) => p == q && a == b,
            (
                Scalar::Algebraic { generator: g1, minpoly: m1, .. },
                Scalar::Algebraic { generator: g2, minpoly: m2, .. },
            ) => g1 == g2 && m1 == m2,
            (Scalar::RationalFunction { var: a, .. }, Scalar::RationalFunction { var: b, .. }) => a == b,
            _ => false,
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.ring().to_string(), other.ring().to_string()))
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(c) => Zero::is_zero(c),
            Scalar::Laurent { poly, .. } => poly.is_zero(),
            Scalar::FpPoly { poly, .. } => poly.is_zero(),
            Scalar::Algebraic { value, .. } => value.is_zero(),
            Scalar::RationalFunction { num, .. } => num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring().one()
    }

    pub fn zero_like(&self) -> Scalar {
        self.ring().zero()
    }

    pub fn one_like(&self) -> Scalar {
        self.ring().one()
    }

    /// The rational value if this scalar is a constant of its ring.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(c) => Some(c.clone()),
            Scalar::Laurent { poly, .. } => poly.as_constant().map(|c| c.cloned().unwrap_or_else(BigRational::zero)),
            Scalar::Algebraic { value, .. } => match value.degree() {
                None => Some(BigRational::zero()),
                Some(0) => Some(value.coeffs()[0].clone()),
                _ => None,
            },
            Scalar::RationalFunction { num, den, .. } => match (num.degree(), den.degree()) {
                (None, _) => Some(BigRational::zero()),
                (Some(0), Some(0)) => Some(&num.coeffs()[0] / &den.coeffs()[0]),
                _ => None,
            },
            Scalar::FpPoly { .. } => None,
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Laurent { vars, poly: a }, Scalar::Laurent { poly: b, .. }) => {
                Scalar::Laurent { vars: vars.clone(), poly: a.add(b) }
            }
            (Scalar::FpPoly { p, vars, poly: a }, Scalar::FpPoly { poly: b, .. }) => {
                Scalar::FpPoly { p: *p, vars: vars.clone(), poly: a.add(b) }
            }
            (Scalar::Algebraic { generator, minpoly, value: a }, Scalar::Algebraic { value: b, .. }) => {
                Scalar::Algebraic { generator: generator.clone(), minpoly: minpoly.clone(), value: a.add(b) }
            }
            (Scalar::RationalFunction { var, num: n1, den: d1 }, Scalar::RationalFunction { num: n2, den: d2, .. }) => {
                if d1 == d2 {
                    Scalar::rational_function(var.clone(), n1.add(n2), d1.clone())
                } else {
                    Scalar::rational_function(var.clone(), n1.mul(d2).add(&n2.mul(d1)), d1.mul(d2))
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Laurent { vars, poly } => Scalar::Laurent { vars: vars.clone(), poly: poly.neg() },
            Scalar::FpPoly { p, vars, poly } => Scalar::FpPoly { p: *p, vars: vars.clone(), poly: poly.neg() },
            Scalar::Algebraic { generator, minpoly, value } => {
                Scalar::Algebraic { generator: generator.clone(), minpoly: minpoly.clone(), value: value.neg() }
            }
            Scalar::RationalFunction { var, num, den } => {
                Scalar::RationalFunction { var: var.clone(), num: num.neg(), den: den.clone() }
            }
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Laurent { vars, poly: a }, Scalar::Laurent { poly: b, .. }) => {
                Scalar::Laurent { vars: vars.clone(), poly: a.mul(b)? }
            }
            (Scalar::FpPoly { p, vars, poly: a }, Scalar::FpPoly { poly: b, .. }) => {
                Scalar::FpPoly { p: *p, vars: vars.clone(), poly: a.mul(b)? }
            }
            (Scalar::Algebraic { generator, minpoly, value: a }, Scalar::Algebraic { value: b, .. }) => {
                Scalar::algebraic_reduced(generator.clone(), minpoly.clone(), a.mul(b))
            }
            (Scalar::RationalFunction { var, num: n1, den: d1 }, Scalar::RationalFunction { num: n2, den: d2, .. }) => {
                Scalar::rational_function(var.clone(), n1.mul(n2), d1.mul(d2))
            }
            _ => unreachable!(),
        })
    }

    pub fn try_inv(&self) -> Result<Scalar> {
        let not_inv = || Error::NotInvertible(self.ring().to_string());
        if self.is_zero() {
            return Err(not_inv());
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Laurent { vars, poly } => {
                if poly.terms().len() != 1 {
                    return Err(not_inv());
                }
                let (m, c) = poly.terms().iter().next().unwrap();
                let inv: Vec<i64> = m.iter().map(|e| e.checked_neg().ok_or(Error::ExponentOverflow)).collect::<Result<_>>()?;
                Scalar::Laurent { vars: vars.clone(), poly: MPoly::monomial(inv, c.recip()) }
            }
            Scalar::FpPoly { p, vars, poly } => match poly.as_constant() {
                Some(Some(c)) => Scalar::FpPoly { p: *p, vars: vars.clone(), poly: MPoly::constant(vars.len(), c.inv().unwrap()) },
                _ => return Err(not_inv()),
            },
            Scalar::Algebraic { generator, minpoly, value } => {
                let (g, s, _) = value.xgcd(minpoly);
                if g.degree() != Some(0) {
                    return Err(not_inv());
                }
                Scalar::algebraic_reduced(generator.clone(), minpoly.clone(), s)
            }
            Scalar::RationalFunction { var, num, den } => Scalar::rational_function(var.clone(), den.clone(), num.clone()),
        })
    }

    /// Exact division. In fields this is multiplication by the inverse; in
    /// polynomial rings the quotient must exist in the ring.
    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        let not_div = || Error::NotDivisible(self.ring().to_string());
        match (self, other) {
            (Scalar::Laurent { vars, poly: a }, Scalar::Laurent { poly: b, .. }) => {
                let q = a.div_exact(b)?.ok_or_else(not_div)?;
                Ok(Scalar::Laurent { vars: vars.clone(), poly: q })
            }
            (Scalar::FpPoly { p, vars, poly: a }, Scalar::FpPoly { poly: b, .. }) => {
                let q = a.div_exact(b)?.ok_or_else(not_div)?;
                if q.has_negative_exponent() {
                    return Err(not_div());
                }
                Ok(Scalar::FpPoly { p: *p, vars: vars.clone(), poly: q })
            }
            _ => {
                if other.is_zero() {
                    return Err(not_div());
                }
                self.try_mul(&other.try_inv()?)
            }
        }
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.try_inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&b)?;
            }
            k >>= 1;
            if k > 0 {
                b = b.try_mul(&b)?;
            }
        }
        Ok(acc)
    }

    /// Substitutes values for every variable of a Laurent polynomial (or of
    /// a rational function). All values must live in one ring, which is the
    /// ring of the result.
    pub fn evaluate(&self, assignment: &BTreeMap<String, Scalar>) -> Result<Scalar> {
        let target = match assignment.values().next() {
            Some(v) => v.ring(),
            None => Ring::Rational,
        };
        for v in assignment.values() {
            if v.ring() != target {
                return Err(Error::RingMismatch(target.to_string(), v.ring().to_string()));
            }
        }
        let lookup = |name: &str| assignment.get(name).ok_or_else(|| Error::UnassignedVariable(name.to_string()));
        match self {
            Scalar::Laurent { vars, poly } => {
                let values: Vec<&Scalar> = vars.iter().map(|v| lookup(v)).collect::<Result<_>>()?;
                let mut acc = target.zero();
                for (m, c) in poly.terms() {
                    let mut term = target.from_rational(c)?;
                    for (i, &e) in m.iter().enumerate() {
                        if e < 0 && values[i].is_zero() {
                            return Err(Error::ZeroToNegativePower(vars[i].clone()));
                        }
                        if e != 0 {
                            term = term.try_mul(&values[i].pow(e)?)?;
                        }
                    }
                    acc = acc.try_add(&term)?;
                }
                Ok(acc)
            }
            Scalar::RationalFunction { var, num, den } => {
                let x = lookup(var)?;
                let eval = |p: &UPoly| -> Result<Scalar> {
                    let mut acc = target.zero();
                    for c in p.coeffs().iter().rev() {
                        acc = acc.try_mul(x)?.try_add(&target.from_rational(c)?)?;
                    }
                    Ok(acc)
                };
                let d = eval(den)?;
                if d.is_zero() {
                    return Err(Error::ZeroToNegativePower(var.to_string()));
                }
                eval(num)?.try_div(&d)
            }
            Scalar::Rational(c) => target.from_rational(c),
            _ => Err(Error::Unsupported(self.ring().to_string(), "evaluate".into())),
        }
    }
}

macro_rules! panicking_op {
    ($tr:ident, $m:ident, $tm:ident) => {
        impl std::ops::$tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$tm(rhs).unwrap_or_else(|e| panic!("scalar arithmetic: {e}"))
            }
        }
        impl std::ops::$tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$tm(&rhs).unwrap_or_else(|e| panic!("scalar arithmetic: {e}"))
            }
        }
    };
}

panicking_op!(Add, add, try_add);
panicking_op!(Sub, sub, try_sub);
panicking_op!(Mul, mul, try_mul);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Joins signed terms, given as (is_negative, magnitude text).
fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn term_text(coeff_abs: String, coeff_is_one: bool, mono: String) -> String {
    match (mono.is_empty(), coeff_is_one) {
        (true, _) => coeff_abs,
        (false, true) => mono,
        (false, false) => format!("{coeff_abs}*{mono}"),
    }
}

fn monomial_text(vars: &[String], m: &[i64]) -> String {
    m.iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{}", vars[i], e) })
        .collect::<Vec<_>>()
        .join("*")
}

pub(crate) fn format_upoly(p: &UPoly, var: &str) -> String {
    let terms = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !Zero::is_zero(*c))
        .map(|(k, c)| {
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            (c.is_negative(), term_text(format_rational(&c.abs()), c.abs().is_one(), mono))
        })
        .collect();
    join_terms(terms)
}

fn wrap(s: String) -> String {
    if s.contains(' ') || s.starts_with('-') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Scalar::Rational(c) => format_rational(c),
            Scalar::Laurent { vars, poly } => join_terms(
                poly.terms()
                    .iter()
                    .rev()
                    .map(|(m, c)| (c.is_negative(), term_text(format_rational(&c.abs()), c.abs().is_one(), monomial_text(vars, m))))
                    .collect(),
            ),
            Scalar::FpPoly { vars, poly, .. } => join_terms(
                poly.terms()
                    .iter()
                    .rev()
                    .map(|(m, c)| (false, term_text(c.value.to_string(), c.value == 1, monomial_text(vars, m))))
                    .collect(),
            ),
            Scalar::Algebraic { generator, value, .. } => format_upoly(value, generator),
            Scalar::RationalFunction { var, num, den } => {
                if den.degree() == Some(0) {
                    format_upoly(num, var)
                } else {
                    format!("{}/{}", wrap(format_upoly(num, var)), wrap(format_upoly(den, var)))
                }
            }
        };
        f.write_str(&s)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Scalar", 2)?;
        st.serialize_field("ring", &self.ring().to_string())?;
        st.serialize_field("repr", &self.to_string())?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            ring: String,
            repr: String,
        }
        let raw = Raw::deserialize(d)?;
        let ring: Ring = raw.ring.parse().map_err(serde::de::Error::custom)?;
        ring.parse(&raw.repr).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> Ring {
        s.parse().unwrap()
    }

    #[test]
    fn evaluate_identity_and_root() {
        let r = ring("laurent:d");
        let d = r.var("d").unwrap();
        let zero = (&d - &d).evaluate(&[("d".to_string(), Ring::Rational.from_int(5))].into()).unwrap();
        assert!(zero.is_zero());

        let t = ring("laurent:t");
        let s = t.parse("t^2 - t").unwrap();
        let v = s.evaluate(&[("t".to_string(), Ring::Rational.one())].into()).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn evaluate_into_algebraic_reduces() {
        let r = ring("laurent:d");
        let alg = ring("algebraic:x^2-x-1");
        let x = alg.var("x").unwrap();
        let v = r.parse("d^2").unwrap().evaluate(&[("d".to_string(), x)].into()).unwrap();
        assert_eq!(v, alg.parse("x + 1").unwrap());
        assert_eq!(v.to_string(), "x + 1");
    }

    #[test]
    fn evaluate_errors() {
        let r = ring("laurent:d,z");
        let s = r.parse("d^-1 + z").unwrap();
        let only_d: BTreeMap<_, _> = [("d".to_string(), Ring::Rational.one())].into();
        assert!(matches!(s.evaluate(&only_d), Err(Error::UnassignedVariable(v)) if v == "z"));
        let zero_d: BTreeMap<_, _> = [("d".to_string(), Ring::Rational.zero()), ("z".to_string(), Ring::Rational.one())].into();
        assert!(matches!(s.evaluate(&zero_d), Err(Error::ZeroToNegativePower(_))));
        let mixed: BTreeMap<_, _> = [("d".to_string(), Ring::Rational.one()), ("z".to_string(), ring("fp:2").one())].into();
        assert!(matches!(s.evaluate(&mixed), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn mixed_ring_arithmetic_is_an_error() {
        let a = Ring::Rational.one();
        let b = ring("laurent:d").one();
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn char_two_doubles_vanish() {
        let r = ring("fp:2[t]");
        let x = r.parse("t^3 + t + 1").unwrap();
        assert!((&x + &x).is_zero());
    }

    #[test]
    fn laurent_division() {
        let r = ring("laurent:z,zs");
        let a = r.parse("1 - z*zs").unwrap();
        let b = r.parse("z^-1 - zs").unwrap();
        assert_eq!(a.try_div(&b).unwrap(), r.parse("z").unwrap());
        assert!(matches!(r.parse("1 + z").unwrap().try_div(&a), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn rational_function_canonical() {
        let r = ring("frac:q");
        let two = r.parse("q + q^-1").unwrap();
        let back = r.parse("(q^2 + 1)/q").unwrap();
        assert_eq!(two, back);
        let inv = r.parse("1/(q + q^-1)").unwrap();
        assert!((&inv * &two).is_one());
        assert_eq!(two.to_string(), "(q^2 + 1)/q");
    }

    #[test]
    fn ring_selectors_round_trip() {
        for s in ["rational", "laurent:d,z,zs,A", "fp:2[t]", "fp:3", "algebraic:x^2-x-1", "frac:q"] {
            assert_eq!(ring(s).to_string(), s);
        }
    }

    #[test]
    fn display_round_trips_through_parse() {
        let r = ring("laurent:d,z,zs,A");
        for e in ["0", "-1", "3/4*d^-1*z - A^2 + 7", "-A^-3 - A^-5", "zs"] {
            let s = r.parse(e).unwrap();
            assert_eq!(r.parse(&s.to_string()).unwrap(), s, "{e}");
        }
        let j = serde_json::to_string(&r.parse("d^-2 - z").unwrap()).unwrap();
        assert_eq!(j, r#"{"ring":"laurent:d,z,zs,A","repr":"-z + d^-2"}"#);
        let back: Scalar = serde_json::from_str(&j).unwrap();
        assert_eq!(back, r.parse("d^-2 - z").unwrap());
    }
}
