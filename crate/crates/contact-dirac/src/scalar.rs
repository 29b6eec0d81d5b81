//! Exact scalars in the field Q(i, sqrt 2).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero (degenerate scalar)")]
    DegenerateScalar,
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// `r + s*sqrt2` with rational `r`, `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
struct Quad {
    r: BigRational,
    s: BigRational,
}

impl Quad {
    fn zero() -> Self {
        Quad {
            r: BigRational::zero(),
            s: BigRational::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    fn add(&self, o: &Quad) -> Quad {
        Quad {
            r: &self.r + &o.r,
            s: &self.s + &o.s,
        }
    }

    fn sub(&self, o: &Quad) -> Quad {
        Quad {
            r: &self.r - &o.r,
            s: &self.s - &o.s,
        }
    }

    fn neg(&self) -> Quad {
        Quad {
            r: -&self.r,
            s: -&self.s,
        }
    }

    fn mul(&self, o: &Quad) -> Quad {
        if self.is_zero() || o.is_zero() {
            return Quad::zero();
        }
        let two = BigRational::from_integer(BigInt::from(2));
        Quad {
            r: &self.r * &o.r + two * (&self.s * &o.s),
            s: &self.r * &o.s + &self.s * &o.r,
        }
    }

    fn inv(&self) -> Option<Quad> {
        let two = BigRational::from_integer(BigInt::from(2));
        let norm = &self.r * &self.r - two * (&self.s * &self.s);
        if norm.is_zero() {
            return None;
        }
        Some(Quad {
            r: &self.r / &norm,
            s: -(&self.s / &norm),
        })
    }

    fn to_f64(&self) -> f64 {
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        let s = self.s.to_f64().unwrap_or(f64::NAN);
        r + s * std::f64::consts::SQRT_2
    }
}

/// Exact element `(a + b*sqrt2) + i*(c + d*sqrt2)` of Q(i, sqrt 2).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: Quad,
    im: Quad,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies one of the four field operations.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, ScalarError> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            re: Quad::zero(),
            im: Quad::zero(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn i() -> Self {
        Scalar::from_parts(rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1))
    }

    pub fn sqrt2() -> Self {
        Scalar::from_parts(rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1))
    }

    /// `1/sqrt2 = sqrt2/2`.
    pub fn inv_sqrt2() -> Self {
        Scalar::from_parts(rat(0, 1), rat(1, 2), rat(0, 1), rat(0, 1))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_ratio(n, 1)
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_parts(rat(n, d), rat(0, 1), rat(0, 1), rat(0, 1))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar {
            re: Quad {
                r: q,
                s: BigRational::zero(),
            },
            im: Quad::zero(),
        }
    }

    pub fn from_parts(
        re_rat: BigRational,
        re_sqrt2: BigRational,
        im_rat: BigRational,
        im_sqrt2: BigRational,
    ) -> Self {
        Scalar {
            re: Quad {
                r: re_rat,
                s: re_sqrt2,
            },
            im: Quad {
                r: im_rat,
                s: im_sqrt2,
            },
        }
    }

    /// The four rational coordinates `(re_rat, re_sqrt2, im_rat, im_sqrt2)`.
    pub fn parts(&self) -> [&BigRational; 4] {
        [&self.re.r, &self.re.s, &self.im.r, &self.im.s]
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.s.is_zero() && self.re.r.is_one()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    pub fn real_part(&self) -> Scalar {
        Scalar {
            re: self.re.clone(),
            im: Quad::zero(),
        }
    }

    pub fn imag_part(&self) -> Scalar {
        Scalar {
            re: self.im.clone(),
            im: Quad::zero(),
        }
    }

    pub fn conj(&self) -> Scalar {
        Scalar {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn scale_i(&self) -> Scalar {
        Scalar {
            re: self.im.neg(),
            im: self.re.clone(),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        // 1/(x+iy) = (x-iy)/(x^2+y^2) with x, y in Q(sqrt2)
        let norm = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let ninv = norm.inv().ok_or(ScalarError::DegenerateScalar)?;
        Ok(Scalar {
            re: self.re.mul(&ninv),
            im: self.im.neg().mul(&ninv),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut out = Scalar::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn to_float(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.im.is_zero() && o.im.is_zero() {
            return Scalar {
                re: self.re.mul(&o.re),
                im: Quad::zero(),
            };
        }
        Scalar {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar {
                (&self).$f(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: &Scalar) -> Scalar {
                (&self).$f(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar {
                self.$f(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if o.is_zero() {
            return;
        }
        self.re = self.re.add(&o.re);
        self.im = self.im.add(&o.im);
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self += &o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.re = self.re.sub(&o.re);
        self.im = self.im.sub(&o.im);
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, o: Scalar) {
        *self -= &o;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn fmt_quad(q: &Quad) -> String {
    let mut out = String::new();
    if !q.r.is_zero() {
        out.push_str(&fmt_rational(&q.r));
    }
    if !q.s.is_zero() {
        if out.is_empty() {
            out.push_str(&fmt_rational(&q.s));
        } else if q.s.is_negative() {
            out.push('-');
            out.push_str(&fmt_rational(&q.s.abs()));
        } else {
            out.push('+');
            out.push_str(&fmt_rational(&q.s));
        }
        out.push_str("*s2");
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let re = fmt_quad(&self.re);
        if self.im.is_zero() {
            return write!(f, "{re}");
        }
        let im = fmt_quad(&self.im);
        if re.is_empty() {
            write!(f, "({im})*i")
        } else {
            write!(f, "{re}+({im})*i")
        }
    }
}

/// Recursive-descent reader for sums and products of rationals, `s2` and `i`.
struct Reader<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn err(&self, reason: impl Into<String>) -> ScalarError {
        ScalarError::Parse {
            input: self.src.to_string(),
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    acc = acc
                        .checked_div(&d)
                        .map_err(|_| self.err("division by zero"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = self.src[start..self.pos]
                    .parse()
                    .map_err(|_| self.err("bad integer literal"))?;
                Ok(Scalar::from_rational(BigRational::from_integer(n)))
            }
            Some(b's') => {
                if self.src[self.pos..].starts_with("s2") {
                    self.pos += 2;
                    Ok(Scalar::sqrt2())
                } else {
                    Err(self.err("unknown symbol"))
                }
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(Scalar::i())
            }
            Some(_) => Err(self.err(format!("unexpected character at offset {}", self.pos))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut r = Reader {
            src: s,
            bytes: s.as_bytes(),
            pos: 0,
        };
        let v = r.expr()?;
        if r.peek().is_some() {
            return Err(r.err(format!("trailing input at offset {}", r.pos)));
        }
        Ok(v)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Str(s) => s.parse().map_err(de::Error::custom),
            Raw::Int(n) => Ok(Scalar::from_int(n)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(&Scalar::sqrt2() * &Scalar::sqrt2(), Scalar::from_int(2));
        assert_eq!(
            &Scalar::inv_sqrt2() * &Scalar::inv_sqrt2(),
            Scalar::from_ratio(1, 2)
        );
    }

    #[test]
    fn gaussian_quotient() {
        let q = s("1+i").checked_div(&s("1-i")).unwrap();
        assert_eq!(q, Scalar::i());
    }

    #[test]
    fn conj_cases() {
        assert_eq!(Scalar::i().conj(), -Scalar::i());
        assert_eq!(s("3+2*s2").conj(), s("3+2*s2"));
        assert_eq!(s("i*s2").conj(), s("-i*s2"));
    }

    #[test]
    fn division_by_zero_is_degenerate() {
        assert_eq!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(ScalarError::DegenerateScalar)
        );
        assert_eq!(
            scalar_arith(&Scalar::one(), &Scalar::zero(), ArithOp::Div),
            Err(ScalarError::DegenerateScalar)
        );
    }

    #[test]
    fn to_float_cases() {
        assert_eq!(
            Scalar::from_ratio(1, 2).to_float(),
            Complex64::new(0.5, 0.0)
        );
        assert!((Scalar::sqrt2().to_float().re - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(Scalar::i().to_float(), Complex64::new(0.0, 1.0));
    }

    #[test]
    fn text_format_round_trip() {
        let x = s("1/2+3/4*s2+(-5/6+7/8*s2)*i");
        assert_eq!(x.to_string(), "1/2+3/4*s2+(-5/6+7/8*s2)*i");
        for t in [
            "0",
            "-1",
            "1/3*s2",
            "(1)*i",
            "(-1/2*s2)*i",
            "2-3*s2",
            "-1/2-1/2*s2+(1)*i",
        ] {
            assert_eq!(s(t).to_string(), t);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("1+".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
        assert!("(1".parse::<Scalar>().is_err());
    }
}
