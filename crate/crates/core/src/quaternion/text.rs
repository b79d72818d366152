//! Text form `a+bi+cj+dk` (coefficients with denominator 1 or 2) and the
//! JSON form `{"d":[d1,di,dj,dk]}` holding doubled coefficients.
//!
//! `Display` always writes all four terms, e.g. `3/2-1/2i+1/2j+1/2k` or
//! `1+2i+0j+0k`. The parser also accepts omitted terms and bare units.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Quat, QuatError};

fn write_coeff(f: &mut fmt::Formatter<'_>, d: i64) -> fmt::Result {
    if d % 2 == 0 {
        write!(f, "{}", d / 2)
    } else {
        write!(f, "{d}/2")
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.doubled();
        write_coeff(f, d[0])?;
        for (x, unit) in d[1..].iter().zip(["i", "j", "k"]) {
            f.write_str(if *x < 0 { "-" } else { "+" })?;
            write_coeff(f, x.abs())?;
            f.write_str(unit)?;
        }
        Ok(())
    }
}

impl FromStr for Quat {
    type Err = QuatError;

    fn from_str(s: &str) -> Result<Quat, QuatError> {
        let bad = || QuatError::Parse(s.to_string());
        let s_trim = s.trim();
        if s_trim.is_empty() {
            return Err(bad());
        }
        let bytes = s_trim.as_bytes();
        let mut d: [Option<i64>; 4] = [None; 4];
        let mut pos = 0;
        while pos < bytes.len() {
            let mut neg = false;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                neg = bytes[pos] == b'-';
                pos += 1;
            } else if pos != 0 {
                return Err(bad());
            }
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
                pos += 1;
            }
            let num = &s_trim[start..pos];
            let slot = match bytes.get(pos) {
                Some(b'i') => 1,
                Some(b'j') => 2,
                Some(b'k') => 3,
                _ => 0,
            };
            if slot != 0 {
                pos += 1;
            }
            let doubled = if num.is_empty() {
                if slot == 0 {
                    return Err(bad());
                }
                2
            } else {
                parse_doubled(num).ok_or_else(bad)?
            };
            if d[slot].is_some() {
                return Err(bad());
            }
            d[slot] = Some(if neg { -doubled } else { doubled });
        }
        Quat::from_doubled(d.map(|x| x.unwrap_or(0)))
    }
}

fn parse_doubled(num: &str) -> Option<i64> {
    match num.split_once('/') {
        None => num.parse::<i64>().ok()?.checked_mul(2),
        Some((n, "2")) => n.parse().ok(),
        Some((n, "1")) => n.parse::<i64>().ok()?.checked_mul(2),
        Some(_) => None,
    }
}

#[derive(Serialize, Deserialize)]
struct QuatJson {
    d: [i64; 4],
}

impl Serialize for Quat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QuatJson { d: self.doubled() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quat {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Quat, D::Error> {
        let j = QuatJson::deserialize(de)?;
        Quat::from_doubled(j.d).map_err(serde::de::Error::custom)
    }
}
