use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Linear form with rational coefficients, one per variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<BigRational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::Validation("linear form has no nonzero coefficient".into()));
        }
        Ok(LinearForm { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        LinearForm::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut c = vec![BigRational::zero(); n];
        c[i] = BigRational::one();
        LinearForm { coeffs: c }
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    /// Compose with a linear change of variables: variable `i` goes to `images[i]`.
    pub fn substitute(&self, images: &[LinearForm]) -> Result<LinearForm> {
        let n = images.first().map(|l| l.nvars()).unwrap_or(0);
        let mut out = vec![BigRational::zero(); n];
        for (c, img) in self.coeffs.iter().zip(images) {
            for (o, a) in out.iter_mut().zip(&img.coeffs) {
                *o += c * a;
            }
        }
        LinearForm::new(out)
    }

    /// Extra variables with zero coefficients.
    pub fn widen(&self, n: usize) -> LinearForm {
        let mut c = self.coeffs.clone();
        c.resize(n, BigRational::zero());
        LinearForm { coeffs: c }
    }

    /// Scalar multiples of each other.
    pub fn proportional(&self, other: &LinearForm) -> bool {
        let n = self.nvars();
        for i in 0..n {
            for j in i + 1..n {
                if &self.coeffs[i] * &other.coeffs[j] != &self.coeffs[j] * &other.coeffs[i] {
                    return false;
                }
            }
        }
        true
    }

    pub fn format(&self, names: &[String]) -> String {
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                if a.is_integer() {
                    s.push_str(&a.numer().to_string());
                } else {
                    s.push_str(&format!("({}/{})", a.numer(), a.denom()));
                }
            }
            s.push_str(&names[i]);
        }
        s
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", v.join(", "))
    }
}

/// Parse `2w + 3x - 5z`, `x+y`, `-3*y`: integer coefficients, declared variables only.
pub fn parse_linear_form(text: &str, names: &[String]) -> std::result::Result<LinearForm, String> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let mut coeffs = vec![BigRational::zero(); names.len()];
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let mut first = true;
    loop {
        skip_ws(&mut pos);
        if pos >= chars.len() {
            if first {
                return Err("empty expression".into());
            }
            break;
        }
        let mut sign = 1i32;
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -1;
            }
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(format!("expected `+` or `-` at column {}", pos + 1));
        }
        first = false;
        let start = pos;
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        let coef = if pos > start {
            let digits: String = chars[start..pos].iter().collect();
            let v: BigInt = digits.parse().map_err(|_| format!("bad integer `{digits}`"))?;
            skip_ws(&mut pos);
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                skip_ws(&mut pos);
            }
            v
        } else {
            BigInt::one()
        };
        let vstart = pos;
        while pos < chars.len() && (chars[pos].is_alphanumeric() || chars[pos] == '_') {
            pos += 1;
        }
        if pos == vstart {
            return Err(format!("expected a variable at column {}", vstart + 1));
        }
        let name: String = chars[vstart..pos].iter().collect();
        let idx = names
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| format!("unknown variable `{name}`"))?;
        let c = BigRational::from_integer(coef * BigInt::from(sign));
        coeffs[idx] += c;
    }
    LinearForm::new(coeffs).map_err(|_| "expression is identically zero".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        ["w", "x", "y", "z"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_examples() {
        let l = parse_linear_form("2w + 3x - 5z", &names()).unwrap();
        assert_eq!(l, LinearForm::from_ints(&[2, 3, 0, -5]).unwrap());
        let l = parse_linear_form("-3*y+x", &names()).unwrap();
        assert_eq!(l, LinearForm::from_ints(&[0, 1, -3, 0]).unwrap());
        assert_eq!(l.format(&names()), "x - 3y");
    }

    #[test]
    fn parse_errors() {
        assert!(parse_linear_form("", &names()).is_err());
        assert!(parse_linear_form("x + q", &names()).is_err());
        assert!(parse_linear_form("x - x", &names()).is_err());
        assert!(parse_linear_form("3", &names()).is_err());
        assert!(parse_linear_form("x y", &names()).is_err());
    }

    #[test]
    fn proportionality() {
        let a = LinearForm::from_ints(&[1, 0, 0, 0]).unwrap();
        let b = LinearForm::from_ints(&[2, 0, 0, 0]).unwrap();
        let c = LinearForm::from_ints(&[1, 1, 0, 0]).unwrap();
        assert!(a.proportional(&b));
        assert!(!a.proportional(&c));
    }
}
