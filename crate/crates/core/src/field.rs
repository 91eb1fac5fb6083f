use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field: a prime field GF(p) or the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    #[default]
    Rational,
    Prime(u32),
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);
    pub const GF3: FieldSpec = FieldSpec::Prime(3);

    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p) && p < (1 << 31) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::InvalidField(format!("gf{p}")))
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u32;
    while (i as u64) * (i as u64) <= p as u64 {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "qq" || t == "rational" || t == "rationals" {
            return Ok(FieldSpec::Rational);
        }
        let digits = t
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("gf"))
            .ok_or_else(|| Error::InvalidField(s.to_string()))?;
        let p: u32 = digits.parse().map_err(|_| Error::InvalidField(s.to_string()))?;
        FieldSpec::prime(p).map_err(|_| Error::InvalidField(s.to_string()))
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "gf{p}"),
        }
    }
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a % p, p - 2, p)
}

pub(crate) fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fields() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert_eq!("gf2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert_eq!("GF(101)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(101));
        assert!("gf4".parse::<FieldSpec>().is_err());
        assert!("gf1".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for f in [FieldSpec::Rational, FieldSpec::Prime(3), FieldSpec::Prime(1009)] {
            assert_eq!(f.to_string().parse::<FieldSpec>().unwrap(), f);
        }
    }

    #[test]
    fn inverses() {
        for a in 1..101 {
            assert_eq!(a * mod_inverse(a, 101) % 101, 1);
        }
    }
}
