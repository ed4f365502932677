//! Text and JSON serializations of zeta-polynomials. Both round-trip
//! exactly: coefficients travel as decimal integer strings, never floats.
//!
//! Text form: `36*zeta(5) - 12*zeta(2)*zeta(3)`, `1/4*zeta(4)`,
//! `2*pi^2*ln2`. Atoms: `pi`, `ln2`, `zeta(s)`, `li_half(s)`,
//! `mpl_half(b,c)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::atom::ZetaAtom;
use super::poly::{ZetaMonomial, ZetaPolynomial};
use crate::error::{Error, Result};

impl fmt::Display for ZetaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest monomial first reads like the paper's displays
        let mut first = true;
        for (mono, coeff) in self.iter().collect::<Vec<_>>().into_iter().rev() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_one = mag.is_one();
            if mono.is_unit() {
                write!(f, "{}", format_rational(&mag))?;
            } else if is_one {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl FromStr for ZetaPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s == "0" {
            return Ok(ZetaPolynomial::zero());
        }
        let mut poly = ZetaPolynomial::zero();
        // split into signed terms; signs only occur at top level since atom
        // arguments are bare integers
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut sign_negative = false;
        let mut seen_any = false;
        for ch in s.chars() {
            match ch {
                '+' | '-' if seen_any && !current.trim().is_empty() => {
                    terms.push((sign_negative, current.trim().to_string()));
                    current = String::new();
                    sign_negative = ch == '-';
                }
                '-' if !seen_any || current.trim().is_empty() => {
                    sign_negative = !sign_negative;
                    seen_any = true;
                }
                '+' if current.trim().is_empty() => {
                    seen_any = true;
                }
                _ => {
                    if !ch.is_whitespace() {
                        seen_any = true;
                    }
                    current.push(ch);
                }
            }
        }
        if !current.trim().is_empty() {
            terms.push((sign_negative, current.trim().to_string()));
        }
        for (neg, term) in terms {
            let (mono, mut coeff) = parse_term(&term)?;
            if neg {
                coeff = -coeff;
            }
            poly.add_term(mono, coeff);
        }
        Ok(poly)
    }
}

fn parse_term(term: &str) -> Result<(ZetaMonomial, BigRational)> {
    let mut coeff = BigRational::one();
    let mut mono = ZetaMonomial::unit();
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in term {term:?}")));
        }
        if factor.chars().next().unwrap().is_ascii_digit() {
            coeff *= parse_rational(factor)?;
        } else {
            let (atom, exp) = parse_atom_pow(factor)?;
            mono = mono.mul(&ZetaMonomial::atom_pow(atom, exp));
        }
    }
    Ok((mono, coeff))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let parse_int = |t: &str| {
        BigInt::parse_bytes(t.trim().as_bytes(), 10)
            .ok_or_else(|| Error::Parse(format!("bad integer {t:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => Ok(BigRational::new(parse_int(n)?, parse_int(d)?)),
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

fn parse_atom_pow(s: &str) -> Result<(ZetaAtom, u32)> {
    let (base, exp) = match s.split_once('^') {
        Some((b, e)) => {
            let exp: u32 = e
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
            (b.trim(), exp)
        }
        None => (s, 1),
    };
    let atom = parse_atom(base)?;
    atom.validate()?;
    Ok((atom, exp))
}

fn parse_atom(s: &str) -> Result<ZetaAtom> {
    match s {
        "pi" => return Ok(ZetaAtom::Pi),
        "ln2" => return Ok(ZetaAtom::Ln2),
        _ => {}
    }
    let (name, rest) = s
        .split_once('(')
        .ok_or_else(|| Error::Parse(format!("unknown atom {s:?}")))?;
    let args = rest
        .strip_suffix(')')
        .ok_or_else(|| Error::Parse(format!("missing ')' in {s:?}")))?;
    let nums: Vec<u32> = args
        .split(',')
        .map(|a| a.trim().parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse(format!("bad atom arguments in {s:?}")))?;
    match (name.trim(), nums.as_slice()) {
        ("zeta", [s]) => Ok(ZetaAtom::Zeta(*s)),
        ("li_half", [s]) => Ok(ZetaAtom::LiHalf(*s)),
        ("mpl_half", [b, c]) => Ok(ZetaAtom::MplHalf(*b, *c)),
        _ => Err(Error::Parse(format!("unknown atom {s:?}"))),
    }
}

#[derive(Serialize, Deserialize)]
struct RatDto {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct AtomPowDto {
    kind: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    params: Vec<u32>,
    exp: u32,
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    coeff: RatDto,
    atoms: Vec<AtomPowDto>,
}

#[derive(Serialize, Deserialize)]
struct PolyDto {
    terms: Vec<TermDto>,
}

/// Structured JSON form `{"terms":[{"coeff":{"num","den"},"atoms":[...]}]}`.
pub fn to_json(poly: &ZetaPolynomial) -> String {
    let dto = PolyDto {
        terms: poly
            .iter()
            .map(|(mono, coeff)| TermDto {
                coeff: RatDto {
                    num: coeff.numer().to_string(),
                    den: coeff.denom().to_string(),
                },
                atoms: mono
                    .iter()
                    .map(|(a, e)| {
                        let (kind, params) = match *a {
                            ZetaAtom::Pi => ("pi", vec![]),
                            ZetaAtom::Ln2 => ("ln2", vec![]),
                            ZetaAtom::Zeta(s) => ("zeta", vec![s]),
                            ZetaAtom::LiHalf(s) => ("li_half", vec![s]),
                            ZetaAtom::MplHalf(b, c) => ("mpl_half", vec![b, c]),
                        };
                        AtomPowDto { kind: kind.to_string(), params, exp: *e }
                    })
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string(&dto).expect("polynomial serialization cannot fail")
}

pub fn from_json(s: &str) -> Result<ZetaPolynomial> {
    let dto: PolyDto =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("polynomial JSON: {e}")))?;
    let mut poly = ZetaPolynomial::zero();
    for term in dto.terms {
        let num = BigInt::parse_bytes(term.coeff.num.as_bytes(), 10)
            .ok_or_else(|| Error::Parse(format!("bad numerator {:?}", term.coeff.num)))?;
        let den = BigInt::parse_bytes(term.coeff.den.as_bytes(), 10)
            .ok_or_else(|| Error::Parse(format!("bad denominator {:?}", term.coeff.den)))?;
        let mut mono = ZetaMonomial::unit();
        for ap in term.atoms {
            let atom = match (ap.kind.as_str(), ap.params.as_slice()) {
                ("pi", []) => ZetaAtom::Pi,
                ("ln2", []) => ZetaAtom::Ln2,
                ("zeta", [s]) => ZetaAtom::Zeta(*s),
                ("li_half", [s]) => ZetaAtom::LiHalf(*s),
                ("mpl_half", [b, c]) => ZetaAtom::MplHalf(*b, *c),
                _ => return Err(Error::Parse(format!("unknown atom kind {:?}", ap.kind))),
            };
            atom.validate()?;
            mono = mono.mul(&ZetaMonomial::atom_pow(atom, ap.exp));
        }
        poly.add_term(mono, BigRational::new(num, den));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_matches_expected_shapes() {
        let mut p = ZetaPolynomial::zero();
        p.add_term(
            ZetaMonomial::atom(ZetaAtom::Zeta(5)),
            BigRational::from_integer(36.into()),
        );
        p.add_term(
            ZetaMonomial::atom(ZetaAtom::Zeta(2)).mul(&ZetaMonomial::atom(ZetaAtom::Zeta(3))),
            BigRational::from_integer(BigInt::from(-12)),
        );
        assert_eq!(p.to_string(), "36*zeta(5) - 12*zeta(2)*zeta(3)");

        let q = ZetaPolynomial::from_atom(ZetaAtom::Zeta(2));
        assert_eq!(q.to_string(), "zeta(2)");
        assert_eq!(ZetaPolynomial::zero().to_string(), "0");

        let mut r = ZetaPolynomial::zero();
        r.add_term(
            ZetaMonomial::atom(ZetaAtom::Zeta(4)),
            BigRational::new(1.into(), 4.into()),
        );
        assert_eq!(r.to_string(), "1/4*zeta(4)");
    }

    #[test]
    fn parse_round_trip_examples() {
        for text in [
            "36*zeta(5) - 12*zeta(2)*zeta(3)",
            "1/4*zeta(4)",
            "-2*pi^2*ln2 + zeta(3)",
            "6*zeta(3) - 2*ln2^3 - 6*li_half(3) - 6*ln2*li_half(2)",
            "mpl_half(2,1)",
            "0",
        ] {
            let p: ZetaPolynomial = text.parse().unwrap();
            let back = p.to_string();
            let p2: ZetaPolynomial = back.parse().unwrap();
            assert_eq!(p, p2, "{text}");
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("zeta(1)".parse::<ZetaPolynomial>().is_err()); // below s=2
        assert!("frob(3)".parse::<ZetaPolynomial>().is_err());
        assert!("".parse::<ZetaPolynomial>().is_err());
        assert!("2*zeta(3".parse::<ZetaPolynomial>().is_err());
    }

    fn arb_atom() -> impl Strategy<Value = ZetaAtom> {
        prop_oneof![
            Just(ZetaAtom::Pi),
            Just(ZetaAtom::Ln2),
            (2u32..9).prop_map(ZetaAtom::Zeta),
            (2u32..9).prop_map(ZetaAtom::LiHalf),
            ((2u32..6), (1u32..4)).prop_map(|(b, c)| ZetaAtom::MplHalf(b, c)),
        ]
    }

    fn arb_poly() -> impl Strategy<Value = ZetaPolynomial> {
        proptest::collection::vec(
            (
                proptest::collection::vec((arb_atom(), 1u32..4), 0..4),
                -999i64..1000,
                1i64..60,
            ),
            0..6,
        )
        .prop_map(|terms| {
            let mut p = ZetaPolynomial::zero();
            for (atoms, num, den) in terms {
                let mut mono = ZetaMonomial::unit();
                for (a, e) in atoms {
                    mono = mono.mul(&ZetaMonomial::atom_pow(a, e));
                }
                p.add_term(mono, BigRational::new(num.into(), den.into()));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn text_round_trip_exact(p in arb_poly()) {
            let text = p.to_string();
            let back: ZetaPolynomial = text.parse().unwrap();
            prop_assert_eq!(&p, &back);
        }

        #[test]
        fn json_round_trip_exact(p in arb_poly()) {
            let json = to_json(&p);
            let back = from_json(&json).unwrap();
            prop_assert_eq!(&p, &back);
        }
    }
}
