//! Canonical desk-scale spectra and the documented example morphisms.
//!
//! Constructors return ordinary validated spaces: chains, discrete spaces,
//! the diamond, the star of the integers with chosen primes, the star of a
//! polynomial line over a small prime field, and a three-level fragment of
//! the integer polynomial plane where maximal points `(p, g)` tie primes to
//! factors of the chosen polynomials mod p. Point names are human-readable
//! so exports are self-explanatory.

use crate::error::{Error, Result};
use crate::morphism::OwnedMorphism;
use crate::poly::{check_prime, PolyModP, PolyZ};
use crate::ratio::Ratio;
use crate::space::SpectralSpace;

pub fn chain_space(n: usize) -> Result<SpectralSpace> {
    if n == 0 || n > 26 {
        return Err(Error::InvalidSize(n));
    }
    let names: Vec<String> = (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let pairs: Vec<(String, String)> = names
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect();
    SpectralSpace::build(&format!("chain{n}"), &names, &pairs)
}

pub fn discrete_space(n: usize) -> Result<SpectralSpace> {
    if n == 0 {
        return Err(Error::InvalidSize(n));
    }
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    SpectralSpace::build(&format!("discrete{n}"), &names, &[] as &[(&str, &str)])
}

pub fn diamond_space() -> SpectralSpace {
    SpectralSpace::build(
        "diamond",
        &["a", "b1", "b2", "c"],
        &[("a", "b1"), ("a", "b2"), ("b1", "c"), ("b2", "c")],
    )
    .expect("fixed diamond data builds")
}

/// Star of the integers: `(0)` specializing to one closed point per prime.
pub fn spec_z(primes: &[u64]) -> Result<SpectralSpace> {
    if primes.is_empty() {
        return Err(Error::InvalidSize(0));
    }
    let mut points = vec!["(0)".to_owned()];
    let mut pairs = Vec::new();
    for &p in primes {
        check_prime(p)?;
        let name = format!("({p})");
        pairs.push(("(0)".to_owned(), name.clone()));
        points.push(name);
    }
    SpectralSpace::build("Spec(Z)", &points, &pairs)
}

/// Star of the polynomial line over `F_p`: `(0)` specializing to one closed
/// point per irreducible polynomial, normalized monic.
pub fn spec_fp_t(p: u64, polys: &[PolyModP]) -> Result<SpectralSpace> {
    check_prime(p)?;
    if polys.is_empty() {
        return Err(Error::InvalidSize(0));
    }
    let mut points = vec!["(0)".to_owned()];
    let mut pairs = Vec::new();
    for poly in polys {
        if poly.modulus() != p {
            return Err(Error::InvalidConfig(format!(
                "polynomial {poly} has modulus {}, expected {p}",
                poly.modulus()
            )));
        }
        if poly.degree().map_or(true, |d| d == 0) {
            return Err(Error::InvalidPolynomial(format!(
                "{poly} is constant and generates no closed point"
            )));
        }
        if let Some(factor) = poly.smallest_proper_divisor()? {
            return Err(Error::Reducible {
                poly: poly.to_string(),
                factor: factor.to_string(),
            });
        }
        let name = format!("({})", poly.make_monic());
        pairs.push(("(0)".to_owned(), name.clone()));
        points.push(name);
    }
    SpectralSpace::build(&format!("Spec(F{p}[t])"), &points, &pairs)
}

fn check_fragment_poly(poly: &PolyZ) -> Result<()> {
    if poly.degree().map_or(true, |d| d == 0) {
        return Err(Error::InvalidPolynomial(format!(
            "{poly} is constant and generates no prime"
        )));
    }
    if !poly.is_primitive() {
        return Err(Error::Reducible {
            poly: poly.to_string(),
            factor: poly.content().to_string(),
        });
    }
    if !poly.is_irreducible_over_q()? {
        let (num, den) = poly.rational_root().expect("reducible cubic has a root");
        let factor = PolyZ::new(&[-num, den]);
        return Err(Error::Reducible {
            poly: poly.to_string(),
            factor: factor.to_string(),
        });
    }
    Ok(())
}

/// Three-level fragment of the integer polynomial plane: `(0)` over primes
/// `(p)` and polynomials `(f)`, with maximal points `(p, g)` for each monic
/// irreducible factor `g` of some chosen `f` mod `p`. `(f) -> (p, g)` holds
/// exactly when `g` divides `f` mod `p`.
pub fn spec_z_t_fragment(primes: &[u64], polys: &[PolyZ]) -> Result<SpectralSpace> {
    if primes.is_empty() || polys.is_empty() {
        return Err(Error::InvalidSize(0));
    }
    for &p in primes {
        check_prime(p)?;
    }
    for poly in polys {
        check_fragment_poly(poly)?;
    }
    let mut points = vec!["(0)".to_owned()];
    let mut pairs = Vec::new();
    for &p in primes {
        let name = format!("({p})");
        pairs.push(("(0)".to_owned(), name.clone()));
        points.push(name);
    }
    for poly in polys {
        let name = format!("({poly})");
        pairs.push(("(0)".to_owned(), name.clone()));
        points.push(name);
    }
    for &p in primes {
        for poly in polys {
            let reduced = poly.reduce_mod(p)?;
            for (g, _) in reduced.factorize()?.factors {
                let name = format!("({p}, {g})");
                if !points.contains(&name) {
                    points.push(name.clone());
                    pairs.push((format!("({p})"), name.clone()));
                }
                pairs.push((format!("({poly})"), name));
            }
        }
    }
    SpectralSpace::build("Spec(Z[t])-fragment", &points, &pairs)
}

/// An example morphism together with its documented norm; the computed value
/// may differ, and reports surface the comparison rather than hide it.
#[derive(Debug, Clone)]
pub struct NormExample {
    pub label: &'static str,
    pub morphism: OwnedMorphism,
    pub documented_norm: Ratio,
}

/// The three fixed example morphisms: a rational point of the line (norm 0),
/// the plane-onto-line projection (norm 1), and the contraction of the
/// rational line into the integer plane fragment (documented as 2; the
/// fragment-scale ratios are checked against that claim, not assumed).
pub fn norm_examples() -> Vec<NormExample> {
    let p2 = |s: &str| PolyZ::parse(s).unwrap().reduce_mod(2).unwrap();
    let line = spec_fp_t(2, &[p2("t"), p2("t+1")]).unwrap();
    let point = SpectralSpace::build("point", &["*"], &[] as &[(&str, &str)]).unwrap();
    let rational_point =
        OwnedMorphism::build("rational-point", point, line, &[("*", "(t)")]).unwrap();

    let plane = SpectralSpace::build(
        "Spec(k[s,t])-fragment",
        &["(0)", "(t)", "(t-1)", "(s, t)", "(s-1, t)", "(s, t-1)", "(s-1, t-1)"],
        &[
            ("(0)", "(t)"),
            ("(0)", "(t-1)"),
            ("(t)", "(s, t)"),
            ("(t)", "(s-1, t)"),
            ("(t-1)", "(s, t-1)"),
            ("(t-1)", "(s-1, t-1)"),
        ],
    )
    .unwrap();
    let target_line = SpectralSpace::build(
        "Spec(k[t])-fragment",
        &["(0)", "(t)", "(t-1)"],
        &[("(0)", "(t)"), ("(0)", "(t-1)")],
    )
    .unwrap();
    let projection = OwnedMorphism::build(
        "projection-to-line",
        plane,
        target_line,
        &[
            ("(0)", "(0)"),
            ("(t)", "(t)"),
            ("(t-1)", "(t-1)"),
            ("(s, t)", "(t)"),
            ("(s-1, t)", "(t)"),
            ("(s, t-1)", "(t-1)"),
            ("(s-1, t-1)", "(t-1)"),
        ],
    )
    .unwrap();

    let polys = [PolyZ::parse("t").unwrap(), PolyZ::parse("t+1").unwrap()];
    let plane_fragment = spec_z_t_fragment(&[2, 3], &polys).unwrap();
    let rational_line = SpectralSpace::build(
        "Spec(Q[t])-fragment",
        &["(0)", "(t)", "(t+1)"],
        &[("(0)", "(t)"), ("(0)", "(t+1)")],
    )
    .unwrap();
    let contraction = OwnedMorphism::build(
        "generic-fiber-contraction",
        rational_line,
        plane_fragment,
        &[("(0)", "(0)"), ("(t)", "(t)"), ("(t+1)", "(t+1)")],
    )
    .unwrap();

    vec![
        NormExample {
            label: "rational-point",
            morphism: rational_point,
            documented_norm: Ratio::ZERO,
        },
        NormExample {
            label: "projection-to-line",
            morphism: projection,
            documented_norm: Ratio::ONE,
        },
        NormExample {
            label: "generic-fiber-contraction",
            morphism: contraction,
            documented_norm: Ratio::from_integer(2),
        },
    ]
}
