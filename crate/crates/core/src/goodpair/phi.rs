use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// Evaluates `φ′` at a point, or reports that it is undefined there.
pub trait PhiDerivative<S> {
    fn derivative(&self, z: &S) -> Result<S>;
}

/// The functions `φ` the tools know about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phi {
    /// `ζ^d`, `d ≥ 2`.
    Pow(u32),
    Log,
    Exp,
}

impl Phi {
    pub fn pow(d: u32) -> Result<Phi> {
        if d < 2 {
            return Err(Error::Invariant(format!("degree {d} is below 2")));
        }
        Ok(Phi::Pow(d))
    }

    /// Whether `φ′` maps rationals to rationals.
    pub fn is_exact(&self) -> bool {
        !matches!(self, Phi::Exp)
    }

    pub fn apply_f64(&self, z: Complex64) -> Result<Complex64> {
        let v = match self {
            Phi::Pow(d) => z.powu(*d),
            Phi::Exp => z.exp(),
            Phi::Log => {
                if z.is_zero() {
                    return Err(Error::Undefined("log at 0".into()));
                }
                z.ln()
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite)
        }
    }
}

impl PhiDerivative<Rational> for Phi {
    fn derivative(&self, z: &Rational) -> Result<Rational> {
        match self {
            Phi::Pow(d) => Ok(Rational::from_integer(BigInt::from(*d))
                * num_traits::pow(z.clone(), *d as usize - 1)),
            Phi::Log => {
                if z.is_zero() {
                    Err(Error::Undefined("1/ζ at ζ = 0".into()))
                } else {
                    Ok(z.recip())
                }
            }
            Phi::Exp => Err(Error::NotExact("exp′ is not rational".into())),
        }
    }
}

impl PhiDerivative<Complex64> for Phi {
    fn derivative(&self, z: &Complex64) -> Result<Complex64> {
        let v = match self {
            Phi::Pow(d) => z.powu(d - 1) * f64::from(*d),
            Phi::Exp => z.exp(),
            Phi::Log => {
                if z.is_zero() {
                    return Err(Error::Undefined("1/ζ at ζ = 0".into()));
                }
                Complex64::one() / z
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite)
        }
    }
}

impl fmt::Display for Phi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phi::Pow(d) => write!(f, "pow:{d}"),
            Phi::Log => f.write_str("log"),
            Phi::Exp => f.write_str("exp"),
        }
    }
}

/// Accepts `pow:d`, `pow d`, `log`, `exp`.
impl FromStr for Phi {
    type Err = Error;

    fn from_str(s: &str) -> Result<Phi> {
        let s = s.trim();
        match s {
            "log" => return Ok(Phi::Log),
            "exp" => return Ok(Phi::Exp),
            _ => {}
        }
        let rest = s
            .strip_prefix("pow")
            .map(|r| r.trim_start_matches([':', ' ']))
            .ok_or_else(|| Error::Parse(format!("unknown φ `{s}`")))?;
        let d = rest
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad degree in `{s}`")))?;
        Phi::pow(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, rat_frac};

    #[test]
    fn parse_and_print() {
        assert_eq!("pow:3".parse::<Phi>().unwrap(), Phi::Pow(3));
        assert_eq!("pow 2".parse::<Phi>().unwrap(), Phi::Pow(2));
        assert_eq!("log".parse::<Phi>().unwrap(), Phi::Log);
        assert!("pow:1".parse::<Phi>().is_err());
        assert!("sin".parse::<Phi>().is_err());
        assert_eq!(Phi::Pow(4).to_string(), "pow:4");
    }

    #[test]
    fn exact_derivatives() {
        assert_eq!(Phi::Pow(3).derivative(&rat(2)).unwrap(), rat(12));
        assert_eq!(Phi::Log.derivative(&rat(4)).unwrap(), rat_frac(1, 4));
        assert!(matches!(
            Phi::Log.derivative(&rat(0)),
            Err(Error::Undefined(_))
        ));
        assert!(matches!(
            PhiDerivative::<Rational>::derivative(&Phi::Exp, &rat(1)),
            Err(Error::NotExact(_))
        ));
    }

    #[test]
    fn float_derivatives() {
        let z = Complex64::new(0.5, -1.0);
        assert!((Phi::Exp.derivative(&z).unwrap() - z.exp()).norm() < 1e-15);
        assert!((Phi::Pow(2).derivative(&z).unwrap() - z * 2.0).norm() < 1e-15);
        assert!(Phi::Log.derivative(&Complex64::zero()).is_err());
    }
}
