//! Canonical text and JSON forms of q,t-scalars.
//!
//! Terms are written in ascending (total degree, q-degree) order, e.g.
//! `1 - q + 3/2*q^2*t^(-1/2)`. Half-integral exponents are parenthesized
//! fractions; integral ones are bare (`q^-2`). A rational function renders as
//! `(num)/(den)` unless the denominator is 1.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::laurent::{Exp, LaurentQT};
use super::ratqt::RatQT;
use super::BigRat;
use crate::error::{Error, Result};

fn render_exp(var: char, e2: i64, out: &mut String) {
    if e2 == 0 {
        return;
    }
    out.push(var);
    if e2 == 2 {
        return;
    }
    if e2 % 2 == 0 {
        out.push_str(&format!("^{}", e2 / 2));
    } else {
        out.push_str(&format!("^({e2}/2)"));
    }
}

pub fn render_laurent(f: &LaurentQT) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in f.terms().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let mut mono = String::new();
        render_exp('q', e.q2, &mut mono);
        if e.t2 != 0 && !mono.is_empty() {
            mono.push('*');
        }
        render_exp('t', e.t2, &mut mono);
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&a.to_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

pub fn render_ratqt(f: &RatQT) -> String {
    if f.den().is_one() {
        render_laurent(f.num())
    } else {
        format!("({})/({})", render_laurent(f.num()), render_laurent(f.den()))
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek() == Some(b' ') {
            self.i += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at byte {} of {:?}",
            self.i,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.i;
        if self.peek() == Some(b'-') {
            self.i += 1;
        }
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i])
            .ok()
            .and_then(|t| t.parse::<BigInt>().ok())
            .ok_or_else(|| self.err("expected integer"))
    }

    fn rational(&mut self) -> Result<BigRat> {
        let n = self.integer()?;
        if self.eat(b'/') {
            let d = self.integer()?;
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(BigRat::new(n, d))
        } else {
            Ok(BigRat::from_integer(n))
        }
    }

    /// Exponent after `^`, returned doubled.
    fn exponent(&mut self) -> Result<i64> {
        if !self.eat(b'^') {
            return Ok(2);
        }
        let v = if self.eat(b'(') {
            let r = self.rational()?;
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            r
        } else {
            BigRat::from_integer(self.integer()?)
        };
        let d = v * BigRat::from_integer(2.into());
        if !d.is_integer() {
            return Err(self.err("exponent not a multiple of 1/2"));
        }
        i64::try_from(d.to_integer()).map_err(|_| self.err("exponent out of range"))
    }

    fn term(&mut self) -> Result<(Exp, BigRat)> {
        let mut coef = BigRat::one();
        let mut e = Exp::ZERO;
        let mut first = true;
        loop {
            match self.peek() {
                Some(b'q') => {
                    self.i += 1;
                    e.q2 += self.exponent()?;
                }
                Some(b't') => {
                    self.i += 1;
                    e.t2 += self.exponent()?;
                }
                Some(b) if b.is_ascii_digit() && first => {
                    coef = self.rational()?;
                }
                _ => return Err(self.err("expected term")),
            }
            first = false;
            if !self.eat(b'*') {
                return Ok((e, coef));
            }
        }
    }

    fn laurent(&mut self) -> Result<LaurentQT> {
        let mut f = LaurentQT::zero();
        self.skip_ws();
        let mut neg = self.eat(b'-');
        loop {
            self.skip_ws();
            let (e, c) = self.term()?;
            f.add_term(e, if neg { -c } else { c });
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    neg = false;
                }
                Some(b'-') => {
                    self.i += 1;
                    neg = true;
                }
                _ => return Ok(f),
            }
        }
    }
}

pub fn parse_laurent(s: &str) -> Result<LaurentQT> {
    let mut c = Cursor { s: s.as_bytes(), i: 0 };
    let f = c.laurent()?;
    c.skip_ws();
    if c.i != c.s.len() {
        return Err(c.err("trailing input"));
    }
    Ok(f)
}

pub fn parse_ratqt(s: &str) -> Result<RatQT> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix('(') {
        let mut c = Cursor { s: rest.as_bytes(), i: 0 };
        let num = c.laurent()?;
        c.skip_ws();
        if !(c.eat(b')') && c.eat(b'/') && c.eat(b'(')) {
            return Err(c.err("expected ')/('"));
        }
        let den = c.laurent()?;
        c.skip_ws();
        if !c.eat(b')') || c.i != c.s.len() {
            return Err(c.err("expected closing ')'"));
        }
        RatQT::new(num, den)
    } else {
        Ok(RatQT::from_laurent(parse_laurent(s)?))
    }
}

struct Triples<'a>(&'a LaurentQT);

impl Serialize for Triples<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (e, c) in self.0.terms() {
            seq.serialize_element(&(e.q2, e.t2, c.to_string()))?;
        }
        seq.end()
    }
}

impl Serialize for LaurentQT {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Triples(self).serialize(s)
    }
}

fn laurent_from_triples(v: Vec<(i64, i64, String)>) -> Result<LaurentQT> {
    let mut f = LaurentQT::zero();
    for (q2, t2, c) in v {
        let c: BigRat = c
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
        f.add_term(Exp::new(q2, t2), c);
    }
    Ok(f)
}

impl<'de> Deserialize<'de> for LaurentQT {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<(i64, i64, String)>::deserialize(d)?;
        laurent_from_triples(v).map_err(de::Error::custom)
    }
}

/// `{"num": [[a2, b2, "coef"], ...], "den": [...]}` with doubled exponents.
impl Serialize for RatQT {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RatQT", 2)?;
        st.serialize_field("num", &Triples(self.num()))?;
        st.serialize_field("den", &Triples(self.den()))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for RatQT {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: LaurentQT,
            den: LaurentQT,
        }
        let raw = Raw::deserialize(d)?;
        RatQT::new(raw.num, raw.den).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_examples() {
        let f = &LaurentQT::one_minus(2, 0) + &LaurentQT::monomial(BigRat::new(3.into(), 2.into()), Exp::new(5, -1));
        assert_eq!(render_laurent(&f), "1 - q^2 + 3/2*q^(5/2)*t^(-1/2)");
        let g = RatQT::one_minus(1, 1).inv().unwrap();
        assert_eq!(render_ratqt(&g), "(-1)/(-1 + q*t)");
        assert_eq!(render_laurent(&LaurentQT::qt_pow(-2, 1)), "q^-2*t");
    }

    #[test]
    fn parse_roundtrip_examples() {
        for s in ["0", "1 - q", "q^-2*t", "(-1)/(-1 + q*t)", "1 - q^2 + 3/2*q^(5/2)*t^(-1/2)"] {
            let f = parse_ratqt(s).unwrap();
            assert_eq!(render_ratqt(&f), s);
        }
        assert!(parse_ratqt("q^").is_err());
        assert!(parse_ratqt("1 +").is_err());
    }

    #[test]
    fn json_shape() {
        let f = RatQT::new(LaurentQT::qt_pow(1, 0), LaurentQT::one_minus(0, 1)).unwrap();
        let v = serde_json::to_string(&f).unwrap();
        assert_eq!(v, r#"{"num":[[2,0,"-1"]],"den":[[0,0,"-1"],[0,2,"1"]]}"#);
        let back: RatQT = serde_json::from_str(&v).unwrap();
        assert_eq!(back, f);
    }
}
