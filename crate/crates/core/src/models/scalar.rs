use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::exact::{parse_rational, rat_int, rat_to_f64, CyclotomicNumber, Rational};

/// A parameter value: exact rational when possible, complex float otherwise.
///
/// Arithmetic stays exact while both operands are exact.
#[derive(Clone, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Complex(Complex64),
}

impl Scalar {
    pub fn int(n: i64) -> Self {
        Scalar::Exact(rat_int(n))
    }

    pub fn zero() -> Self {
        Scalar::int(0)
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(q) => Complex64::new(rat_to_f64(q), 0.0),
            Scalar::Complex(z) => *z,
        }
    }

    pub fn re(&self) -> f64 {
        self.to_complex().re
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(q) => Some(q),
            Scalar::Complex(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    /// Exact zero, or a complex value with both parts exactly 0.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.is_zero(),
            Scalar::Complex(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    /// Zero up to `tol` for complex values; exact zero otherwise.
    pub fn is_negligible(&self, tol: f64) -> bool {
        match self {
            Scalar::Exact(q) => q.is_zero(),
            Scalar::Complex(z) => z.norm() <= tol,
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        (0..e).fold(Scalar::one(), |acc, _| &acc * self)
    }

    pub fn parse(s: &str) -> crate::Result<Scalar> {
        let t = s.trim();
        if t.contains(['i', 'j']) {
            return parse_complex(t).map(Scalar::Complex);
        }
        parse_rational(t).map(Scalar::Exact)
    }
}

/// Parses `"re+imi"`, `"re-imi"`, `"imi"`, `"i"` or a plain real.
pub fn parse_complex(s: &str) -> crate::Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || crate::Error::Parameter(format!("not a complex number: {s:?}"));
    let real = |x: &str| -> crate::Result<f64> {
        if x.contains('/') {
            Ok(rat_to_f64(&parse_rational(x)?))
        } else {
            x.parse::<f64>().map_err(|_| bad())
        }
    };
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return Ok(Complex64::new(real(&t)?, 0.0));
    };
    // Split at the last sign that is not the leading one and not part of an exponent.
    let bytes = body.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            split = Some(k);
            break;
        }
    }
    let (re_s, im_s) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im_s {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => real(x)?,
    };
    Ok(Complex64::new(real(re_s)?, im))
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => write!(f, "{q}"),
            Scalar::Complex(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::Exact(q)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

macro_rules! scalar_op {
    ($tr:ident, $m:ident) => {
        impl $tr for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                match (self, o) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.$m(b)),
                    _ => Scalar::Complex(self.to_complex().$m(o.to_complex())),
                }
            }
        }
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
    };
}
scalar_op!(Add, add);
scalar_op!(Sub, sub);
scalar_op!(Mul, mul);
scalar_op!(Div, div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(q) => Scalar::Exact(-q),
            Scalar::Complex(z) => Scalar::Complex(-z),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(q) if q.is_integer() && q.numer().abs() < (1i64 << 53).into() => {
                s.serialize_i64(q.numer().try_into().unwrap())
            }
            Scalar::Exact(q) => s.serialize_str(&q.to_string()),
            Scalar::Complex(z) => {
                let mut st = s.serialize_struct("Complex", 2)?;
                st.serialize_field("re", &z.re)?;
                st.serialize_field("im", &z.im)?;
                st.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        scalar_from_json(&v).map_err(de::Error::custom)
    }
}

pub fn scalar_from_json(v: &serde_json::Value) -> crate::Result<Scalar> {
    use serde_json::Value;
    let bad = || crate::Error::Parameter(format!("bad scalar: {v}"));
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Scalar::int(i))
            } else {
                let x = n.as_f64().ok_or_else(bad)?;
                Rational::from_float(x).map(Scalar::Exact).ok_or_else(bad)
            }
        }
        Value::String(s) => Scalar::parse(s),
        Value::Object(m) => {
            let re = m.get("re").and_then(Value::as_f64).ok_or_else(bad)?;
            let im = m.get("im").and_then(Value::as_f64).unwrap_or(0.0);
            Ok(Scalar::Complex(Complex64::new(re, im)))
        }
        _ => Err(bad()),
    }
}

/// A twist `xi_k`: a root of unity `exp(2 pi i power/order)` kept in lowest
/// terms, or a complex number of modulus at most one.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Twist {
    Root { order: u64, power: u64 },
    Complex(Complex64),
}

impl Twist {
    pub fn root(order: u64, power: i64) -> Self {
        assert!(order > 0, "root of unity order must be positive");
        let p = power.rem_euclid(order as i64) as u64;
        let g = p.gcd(&order);
        if p == 0 {
            return Twist::Root { order: 1, power: 0 };
        }
        Twist::Root { order: order / g, power: p / g }
    }

    pub fn one() -> Self {
        Twist::root(1, 0)
    }

    pub fn minus_one() -> Self {
        Twist::root(2, 1)
    }

    /// `delta(k) = [xi_k = 1]`, decided exactly.
    pub fn is_one(&self) -> bool {
        match self {
            Twist::Root { order, .. } => *order == 1,
            Twist::Complex(z) => z.re == 1.0 && z.im == 0.0,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Twist::Root { order, power } => {
                Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * *power as f64 / *order as f64)
            }
            Twist::Complex(z) => *z,
        }
    }

    pub fn to_cyclotomic(&self) -> Option<CyclotomicNumber> {
        match self {
            Twist::Root { order, power } => Some(CyclotomicNumber::root_of_unity(*order, *power as i64)),
            Twist::Complex(_) => None,
        }
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            Twist::Root { order, .. } => Some(*order),
            Twist::Complex(_) => None,
        }
    }

    pub fn norm(&self) -> f64 {
        match self {
            Twist::Root { .. } => 1.0,
            Twist::Complex(z) => z.norm(),
        }
    }

    pub fn inverse(&self) -> Twist {
        match self {
            Twist::Root { order, power } => Twist::root(*order, -(*power as i64)),
            Twist::Complex(z) => Twist::Complex(z.inv()),
        }
    }

    /// Parses `1`, `-1`, `i`, `-i`, `e(k/n)` (meaning `exp(2 pi i k/n)`),
    /// or a complex literal.
    pub fn parse(s: &str) -> crate::Result<Twist> {
        let t = s.trim();
        match t {
            "1" => return Ok(Twist::one()),
            "-1" => return Ok(Twist::minus_one()),
            "i" => return Ok(Twist::root(4, 1)),
            "-i" => return Ok(Twist::root(4, 3)),
            _ => {}
        }
        if let Some(inner) = t.strip_prefix("e(").and_then(|x| x.strip_suffix(')')) {
            let q = parse_rational(inner)?;
            let n: i64 = q.denom().try_into().map_err(|_| crate::Error::Parameter("root order too large".into()))?;
            let k: i64 = q.numer().try_into().map_err(|_| crate::Error::Parameter("root power too large".into()))?;
            return Ok(Twist::root(n as u64, k));
        }
        let z = parse_complex(t)?;
        if z.norm() > 1.0 {
            return Err(crate::Error::Parameter(format!("|xi| > 1: {s}")));
        }
        Ok(Twist::Complex(z))
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Twist::Root { order: 1, .. } => write!(f, "1"),
            Twist::Root { order: 2, .. } => write!(f, "-1"),
            Twist::Root { order, power } => write!(f, "e({power}/{order})"),
            Twist::Complex(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}

impl Serialize for Twist {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Twist::Root { order, power } => {
                let mut st = s.serialize_struct("Root", 2)?;
                st.serialize_field("order", order)?;
                st.serialize_field("power", power)?;
                st.end()
            }
            Twist::Complex(z) => {
                let mut st = s.serialize_struct("Complex", 2)?;
                st.serialize_field("re", &z.re)?;
                st.serialize_field("im", &z.im)?;
                st.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Twist {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde_json::Value;
        let v = Value::deserialize(d)?;
        match &v {
            Value::Object(m) if m.contains_key("order") => {
                let order = m["order"].as_u64().filter(|&o| o > 0).ok_or_else(|| de::Error::custom("bad order"))?;
                let power = m.get("power").and_then(Value::as_i64).unwrap_or(0);
                Ok(Twist::root(order, power))
            }
            Value::Object(m) => {
                let re = m.get("re").and_then(Value::as_f64).ok_or_else(|| de::Error::custom("bad twist"))?;
                let im = m.get("im").and_then(Value::as_f64).unwrap_or(0.0);
                Ok(Twist::Complex(Complex64::new(re, im)))
            }
            Value::String(s) => Twist::parse(s).map_err(de::Error::custom),
            Value::Number(n) if n.as_i64() == Some(1) => Ok(Twist::one()),
            Value::Number(n) if n.as_i64() == Some(-1) => Ok(Twist::minus_one()),
            _ => Err(de::Error::custom(format!("bad twist {v}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("0.5+2i").unwrap(), Complex64::new(0.5, 2.0));
        assert_eq!(parse_complex("3-i").unwrap(), Complex64::new(3.0, -1.0));
        assert_eq!(parse_complex("-2i").unwrap(), Complex64::new(0.0, -2.0));
        assert_eq!(parse_complex("1e-3+1e-2i").unwrap(), Complex64::new(1e-3, 1e-2));
        assert_eq!(parse_complex("-4").unwrap(), Complex64::new(-4.0, 0.0));
    }

    #[test]
    fn twist_normal_form() {
        assert_eq!(Twist::root(4, 2), Twist::minus_one());
        assert!(Twist::root(6, 6).is_one());
        assert_eq!(Twist::parse("e(2/6)").unwrap(), Twist::root(3, 1));
        assert!(!Twist::Complex(Complex64::new(1.0, 1e-300)).is_one());
    }

    #[test]
    fn scalar_json_roundtrip() {
        for s in [Scalar::int(3), Scalar::Exact(crate::exact::rat(-5, 7)), Scalar::Complex(Complex64::new(0.5, -1.0))] {
            let j = serde_json::to_string(&s).unwrap();
            let back: Scalar = serde_json::from_str(&j).unwrap();
            assert_eq!(back, s);
        }
    }
}
