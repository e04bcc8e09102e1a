//! Poincaré series arithmetic.
//!
//! The residue-field series `P_K(z)` is never computed here; it is an input,
//! either as a truncated coefficient list or as a rational function. From it
//! the derivation-module series is `1 + (h1 + h2)·P_K(z)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Betti numbers `β_0, …, β_N` of a module; `N` is the order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TruncatedSeries {
    coeffs: Vec<u64>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSeries("no coefficients".into()));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Product with `1 + z`, truncated at the same order. Each output
    /// coefficient `c_i + c_{i-1}` only needs inputs up to order `i`, so the
    /// result is exact through order `N`.
    pub fn times_one_plus_z(&self) -> Result<Self> {
        let coeffs = (0..self.coeffs.len())
            .map(|i| {
                let prev = if i == 0 { 0 } else { self.coeffs[i - 1] };
                self.coeffs[i]
                    .checked_add(prev)
                    .ok_or(Error::Overflow("times_one_plus_z"))
            })
            .collect::<Result<_>>()?;
        Ok(TruncatedSeries { coeffs })
    }

    /// Product with `1 + z` when the coefficients describe a polynomial
    /// (nothing beyond order `N`); the order grows by one.
    pub fn polynomial_times_one_plus_z(&self) -> Result<Self> {
        let mut extended = self.coeffs.clone();
        extended.push(0);
        TruncatedSeries { coeffs: extended }.times_one_plus_z()
    }

    fn check_residue_field(&self) -> Result<()> {
        match self.coeffs[0] {
            1 => Ok(()),
            other => Err(Error::BadResidueField(other)),
        }
    }

    /// `1 + scale·self`.
    fn one_plus_scaled(&self, scale: u64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                scale
                    .checked_mul(c)
                    .and_then(|x| x.checked_add(u64::from(i == 0)))
                    .ok_or(Error::Overflow("series scaling"))
            })
            .collect::<Result<_>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// `1 + (h1 + h2)·P_K`, coefficientwise.
pub fn der_series(h1: u64, h2: u64, pk: &TruncatedSeries) -> Result<TruncatedSeries> {
    pk.check_residue_field()?;
    let scale = h1.checked_add(h2).ok_or(Error::Overflow("h1 + h2"))?;
    pk.one_plus_scaled(scale)
}

/// Series of one summand of the module: `1 + h·P_K` when the relevant
/// projection is not ℕ, `1 + P_K` otherwise.
pub fn d_branch_series(h: u64, is_natural: bool, pk: &TruncatedSeries) -> Result<TruncatedSeries> {
    pk.check_residue_field()?;
    pk.one_plus_scaled(if is_natural { 1 } else { h })
}

/// `β_i(Der)` from `β_i(K)`: the constant `1` only enters at `i = 0`.
pub fn betti_of_der(i: usize, betti_k: u64, h1: u64, h2: u64) -> u64 {
    let scaled = (h1 + h2) * betti_k;
    if i == 0 {
        1 + scaled
    } else {
        scaled
    }
}

/// Integer polynomial, ascending coefficients, no trailing zeros (zero is `[]`).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct Poly(Vec<i64>);

impl Poly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    fn to_big(&self) -> Vec<BigInt> {
        self.0.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn from_big(coeffs: &[BigInt]) -> Result<Self> {
        coeffs
            .iter()
            .map(|c| c.to_i64().ok_or(Error::Overflow("polynomial coefficient")))
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }

    /// `self + k·other`
    fn add_scaled(&self, other: &Poly, k: i64) -> Result<Poly> {
        let len = self.0.len().max(other.0.len());
        (0..len)
            .map(|i| {
                k.checked_mul(other.coeff(i))
                    .and_then(|x| x.checked_add(self.coeff(i)))
                    .ok_or(Error::Overflow("polynomial sum"))
            })
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let c = content(v);
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lead = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let top = r.last().unwrap().clone();
        for x in r.iter_mut() {
            *x *= &lead;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &top * bc;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd over `ℤ[z]`.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive(a);
    let mut y = primitive(b);
    while !y.is_empty() {
        let r = primitive(&pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    x
}

fn exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() + 1 - b.len()];
    let lead = b.last().unwrap();
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / lead;
        for (i, bc) in b.iter().enumerate() {
            rem[i + shift] -= &c * bc;
        }
        q[shift] = c;
        trim(&mut rem);
    }
    debug_assert!(rem.is_empty(), "division was not exact");
    trim(&mut q);
    q
}

/// `numerator / denominator` with `denominator(0) = 1`, in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalSeries {
    numerator: Poly,
    denominator: Poly,
}

impl RationalSeries {
    /// Reduces by the polynomial gcd and the common integer content, then
    /// requires the denominator to have constant term `±1` (sign normalized
    /// to `+1`).
    pub fn new(numerator: Poly, denominator: Poly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidSeries("zero denominator".into()));
        }
        let mut num = numerator.to_big();
        let mut den = denominator.to_big();
        let g = poly_gcd(&num, &den);
        num = exact_div(&num, &g);
        den = exact_div(&den, &g);
        let c = content(&num).gcd(&content(&den));
        if !c.is_zero() && !c.is_one() {
            num.iter_mut().for_each(|x| *x /= &c);
            den.iter_mut().for_each(|x| *x /= &c);
        }
        let d0 = den.first().cloned().unwrap_or_default();
        if d0.abs() != BigInt::one() {
            return Err(Error::InvalidSeries(format!(
                "denominator constant term must be 1 after reduction, got {d0}"
            )));
        }
        if d0.is_negative() {
            num.iter_mut().for_each(|x| *x = -&*x);
            den.iter_mut().for_each(|x| *x = -&*x);
        }
        Ok(RationalSeries {
            numerator: Poly::from_big(&num)?,
            denominator: Poly::from_big(&den)?,
        })
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    /// Power-series coefficients `c_0..=c_order`.
    pub fn expand_signed(&self, order: usize) -> Result<Vec<i128>> {
        let mut out: Vec<i128> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut c = i128::from(self.numerator.coeff(n));
            for k in 1..=n.min(self.denominator.0.len().saturating_sub(1)) {
                let term = i128::from(self.denominator.coeff(k))
                    .checked_mul(out[n - k])
                    .ok_or(Error::Overflow("series expansion"))?;
                c = c
                    .checked_sub(term)
                    .ok_or(Error::Overflow("series expansion"))?;
            }
            out.push(c);
        }
        Ok(out)
    }

    /// Expansion as Betti numbers; fails if a coefficient is negative.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        let coeffs = self
            .expand_signed(order)?
            .into_iter()
            .map(|c| {
                if c < 0 {
                    return Err(Error::InvalidSeries(format!(
                        "coefficient {c} is not a Betti number"
                    )));
                }
                u64::try_from(c).map_err(|_| Error::Overflow("series expansion"))
            })
            .collect::<Result<Vec<_>>>()?;
        TruncatedSeries::new(coeffs)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.numerator, self.denominator)
    }
}

/// `(q + (h1 + h2)·p) / q` for `P_K = p / q`.
pub fn der_series_rational(h1: u64, h2: u64, pk: &RationalSeries) -> Result<RationalSeries> {
    let scale = i64::try_from(h1 + h2).map_err(|_| Error::Overflow("h1 + h2"))?;
    let numerator = pk.denominator.add_scaled(&pk.numerator, scale)?;
    RationalSeries::new(numerator, pk.denominator.clone())
}

/// Parses an ascending coefficient list such as `1,-2,0,3`.
pub fn parse_coeffs<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<T>()
                .map_err(|_| Error::Parse(format!("bad coefficient {t:?} in {s:?}")))
        })
        .collect()
}

/// Parses the `p(z);q(z)` wire format.
pub fn parse_rational(s: &str) -> Result<RationalSeries> {
    let (p, q) = s
        .split_once(';')
        .ok_or_else(|| Error::Parse(format!("expected \"p;q\", got {s:?}")))?;
    RationalSeries::new(Poly::new(parse_coeffs(p)?), Poly::new(parse_coeffs(q)?))
}
