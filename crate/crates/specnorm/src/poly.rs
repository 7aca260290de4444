//! Minimal polynomial arithmetic for the spectrum constructors.
//!
//! Integer polynomials (degree <= 3) support primitivity and rational-root
//! irreducibility tests; polynomials over a small prime field (degree <= 6,
//! p <= 97) support division and trial-division factorization. The ASCII
//! syntax is `t^2+t+1` with optional whitespace and minus signs; display
//! re-emits the same syntax canonically.

use std::fmt;

use crate::error::{Error, Result};

/// Degree cap for factorization over a prime field.
pub const POLY_MOD_P_DEGREE_BUDGET: usize = 6;
/// Degree cap for the rational irreducibility test.
pub const POLY_Z_DEGREE_BUDGET: usize = 3;
/// Modulus cap keeping the monic-divisor scan at `97^3` candidates.
pub const MODULUS_BUDGET: u64 = 97;

/// Trial-division primality with divisors up to `10^6`.
pub fn check_prime(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::NotPrime(n));
    }
    if n > 1_000_000_000_000 {
        return Err(Error::PrimeTooLarge { value: n });
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return Err(Error::NotPrime(n));
        }
        d += 1;
    }
    Ok(())
}

/// Integer polynomial in `t`, little-endian coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyZ {
    coeffs: Vec<i64>,
}

impl PolyZ {
    pub fn new(coeffs: &[i64]) -> Self {
        let mut coeffs = coeffs.to_vec();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::InvalidPolynomial("empty input".into()));
        }
        let bytes = cleaned.as_bytes();
        let mut coeffs: Vec<i64> = Vec::new();
        let mut i = 0;
        let mut first = true;
        while i < bytes.len() {
            let sign = match bytes[i] {
                b'+' if !first => {
                    i += 1;
                    1i64
                }
                b'-' => {
                    i += 1;
                    -1i64
                }
                b'+' => {
                    return Err(Error::InvalidPolynomial(format!(
                        "{cleaned:?}: leading +"
                    )))
                }
                _ => 1i64,
            };
            first = false;
            let digits_at = |mut j: usize| {
                let start = j;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                (start, j)
            };
            let (ds, de) = digits_at(i);
            let coeff: i64 = if ds == de {
                1
            } else {
                cleaned[ds..de].parse().map_err(|_| {
                    Error::InvalidPolynomial(format!("{cleaned:?}: coefficient too large"))
                })?
            };
            i = de;
            let exp: usize = if i < bytes.len() && bytes[i] == b't' {
                i += 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let (es, ee) = digits_at(i);
                    if es == ee {
                        return Err(Error::InvalidPolynomial(format!(
                            "{cleaned:?}: ^ without exponent"
                        )));
                    }
                    i = ee;
                    cleaned[es..ee].parse().map_err(|_| {
                        Error::InvalidPolynomial(format!("{cleaned:?}: exponent too large"))
                    })?
                } else {
                    1
                }
            } else {
                if ds == de {
                    return Err(Error::InvalidPolynomial(format!(
                        "{cleaned:?}: unexpected character at byte {i}"
                    )));
                }
                0
            };
            if exp > 12 {
                return Err(Error::InvalidPolynomial(format!(
                    "{cleaned:?}: exponent {exp} above limit 12"
                )));
            }
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, 0);
            }
            coeffs[exp] += sign * coeff;
            if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                return Err(Error::InvalidPolynomial(format!(
                    "{cleaned:?}: unexpected character at byte {i}"
                )));
            }
        }
        Ok(PolyZ::new(&coeffs))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Gcd of the coefficient magnitudes; 0 for the zero polynomial.
    pub fn content(&self) -> u64 {
        self.coeffs
            .iter()
            .fold(0u64, |acc, &c| gcd(acc, c.unsigned_abs()))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// First rational root in the deterministic candidate order, reduced,
    /// with positive denominator.
    pub fn rational_root(&self) -> Option<(i64, i64)> {
        let deg = self.degree()?;
        if deg == 0 {
            return None;
        }
        if self.coeffs[0] == 0 {
            return Some((0, 1));
        }
        let lead = self.coeffs[deg].unsigned_abs();
        for num in divisors(self.coeffs[0].unsigned_abs()) {
            for den in divisors(lead) {
                if gcd(num, den) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let num = sign * num as i64;
                    let den = den as i64;
                    // den^deg * f(num/den), exact in i128.
                    let mut value = 0i128;
                    for (k, &c) in self.coeffs.iter().enumerate() {
                        let mut term = c as i128;
                        for _ in 0..k {
                            term *= num as i128;
                        }
                        for _ in k..deg {
                            term *= den as i128;
                        }
                        value += term;
                    }
                    if value == 0 {
                        return Some((num, den));
                    }
                }
            }
        }
        None
    }

    /// Irreducibility over the rationals for degree <= 3, where having no
    /// rational root is equivalent for degrees 2 and 3.
    pub fn is_irreducible_over_q(&self) -> Result<bool> {
        match self.degree() {
            None | Some(0) => Ok(false),
            Some(1) => Ok(true),
            Some(d @ 2..=3) => {
                let _ = d;
                Ok(self.rational_root().is_none())
            }
            Some(d) => Err(Error::InvalidPolynomial(format!(
                "degree {d} exceeds the rational-irreducibility budget {POLY_Z_DEGREE_BUDGET}"
            ))),
        }
    }

    pub fn reduce_mod(&self, p: u64) -> Result<PolyModP> {
        PolyModP::new(p, &self.coeffs)
    }
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else if c < 0 {
                f.write_str("-")?;
            } else {
                f.write_str("+")?;
            }
            first = false;
            write_term(f, c.unsigned_abs(), k)?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, magnitude: u64, exp: usize) -> fmt::Result {
    match (magnitude, exp) {
        (m, 0) => write!(f, "{m}"),
        (1, 1) => f.write_str("t"),
        (1, e) => write!(f, "t^{e}"),
        (m, 1) => write!(f, "{m}t"),
        (m, e) => write!(f, "{m}t^{e}"),
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Polynomial over `F_p`, little-endian residues, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyModP {
    p: u64,
    coeffs: Vec<u64>,
}

/// `unit * prod factors[i].0 ^ factors[i].1` with monic irreducible factors
/// sorted by degree then coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u64,
    pub factors: Vec<(PolyModP, u32)>,
}

impl PolyModP {
    pub fn new(p: u64, coeffs: &[i64]) -> Result<Self> {
        check_prime(p)?;
        if p > MODULUS_BUDGET {
            return Err(Error::InvalidConfig(format!(
                "modulus {p} exceeds the factorization budget {MODULUS_BUDGET}"
            )));
        }
        let mut residues: Vec<u64> = coeffs
            .iter()
            .map(|&c| (c.rem_euclid(p as i64)) as u64)
            .collect();
        while residues.last() == Some(&0) {
            residues.pop();
        }
        if residues.len() > POLY_MOD_P_DEGREE_BUDGET + 1 {
            return Err(Error::InvalidPolynomial(format!(
                "degree {} exceeds the factorization budget {POLY_MOD_P_DEGREE_BUDGET}",
                residues.len() - 1
            )));
        }
        Ok(PolyModP {
            p,
            coeffs: residues,
        })
    }

    fn from_residues(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyModP { p, coeffs }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x + c) % self.p)
    }

    pub fn mul(&self, other: &PolyModP) -> PolyModP {
        assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return PolyModP::from_residues(self.p, Vec::new());
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        PolyModP::from_residues(self.p, out)
    }

    fn inv_mod(&self, a: u64) -> u64 {
        // Fermat inverse; p is prime and a nonzero.
        let mut result = 1u64;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        result
    }

    pub fn divrem(&self, divisor: &PolyModP) -> Result<(PolyModP, PolyModP)> {
        assert_eq!(self.p, divisor.p);
        let Some(ddeg) = divisor.degree() else {
            return Err(Error::InvalidPolynomial("division by zero polynomial".into()));
        };
        let p = self.p;
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Ok((
                PolyModP::from_residues(p, Vec::new()),
                PolyModP::from_residues(p, rem),
            ));
        }
        let lead_inv = self.inv_mod(divisor.leading());
        let qlen = rem.len() - ddeg;
        let mut quot = vec![0u64; qlen];
        for k in (0..qlen).rev() {
            let c = rem[k + ddeg] * lead_inv % p;
            quot[k] = c;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = (rem[k + i] + p * p - c * dc % p) % p;
            }
        }
        Ok((
            PolyModP::from_residues(p, quot),
            PolyModP::from_residues(p, rem),
        ))
    }

    pub fn divides(&self, other: &PolyModP) -> Result<bool> {
        Ok(other.divrem(self)?.1.is_zero())
    }

    pub fn make_monic(&self) -> PolyModP {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.inv_mod(self.leading());
        PolyModP::from_residues(
            self.p,
            self.coeffs.iter().map(|&c| c * inv % self.p).collect(),
        )
    }

    /// Monic polynomials of the given degree in deterministic order: the
    /// lower coefficients run as a little-endian base-p counter.
    fn monic_of_degree(p: u64, degree: usize) -> impl Iterator<Item = PolyModP> {
        let count = (p as u128).pow(degree as u32);
        (0..count).map(move |i| {
            let mut coeffs = Vec::with_capacity(degree + 1);
            let mut i = i;
            for _ in 0..degree {
                coeffs.push((i % p as u128) as u64);
                i /= p as u128;
            }
            coeffs.push(1);
            PolyModP { p, coeffs }
        })
    }

    /// Smallest monic divisor of degree between 1 and half the degree; such
    /// a divisor is irreducible by minimality. `None` means irreducible for
    /// degrees >= 1.
    pub fn smallest_proper_divisor(&self) -> Result<Option<PolyModP>> {
        let Some(deg) = self.degree() else { return Ok(None) };
        for d in 1..=deg / 2 {
            for cand in PolyModP::monic_of_degree(self.p, d) {
                if cand.divides(self)? {
                    return Ok(Some(cand));
                }
            }
        }
        Ok(None)
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        match self.degree() {
            None | Some(0) => Ok(false),
            Some(_) => Ok(self.smallest_proper_divisor()?.is_none()),
        }
    }

    pub fn factorize(&self) -> Result<Factorization> {
        if self.is_zero() {
            return Err(Error::InvalidPolynomial(
                "cannot factor the zero polynomial".into(),
            ));
        }
        let unit = self.leading();
        let mut work = self.make_monic();
        let mut parts: Vec<PolyModP> = Vec::new();
        while work.degree().is_some_and(|d| d >= 1) {
            match work.smallest_proper_divisor()? {
                Some(g) => {
                    let (q, r) = work.divrem(&g)?;
                    debug_assert!(r.is_zero());
                    parts.push(g);
                    work = q;
                }
                None => {
                    parts.push(work.clone());
                    break;
                }
            }
        }
        parts.sort_by_key(|f| (f.coeffs.len(), f.coeffs.clone()));
        let mut factors: Vec<(PolyModP, u32)> = Vec::new();
        for part in parts {
            match factors.last_mut() {
                Some((prev, mult)) if *prev == part => *mult += 1,
                _ => factors.push((part, 1)),
            }
        }
        Ok(Factorization { unit, factors })
    }
}

impl fmt::Display for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            write_term(f, c, k)?;
        }
        Ok(())
    }
}
