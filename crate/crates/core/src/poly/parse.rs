use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{MultiLaurent, PolyError, Vars};

/// Canonical rendering: terms in decreasing lexicographic exponent order,
/// `*` between factors, `^` for exponents other than 1.
pub(super) fn render(p: &MultiLaurent) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let factors: Vec<String> = p
            .vars()
            .names()
            .iter()
            .zip(e)
            .filter(|(_, &x)| x != 0)
            .map(|(v, &x)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
            .collect();
        if factors.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Vars,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, PolyError> {
        Err(PolyError::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiLaurent, PolyError> {
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
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiLaurent, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiLaurent, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            return base.pow(e).or_else(|_| self.err("negative power of a non-monomial"));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i32, PolyError> {
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        let mut neg = false;
        if self.peek() == Some(b'-') {
            neg = true;
            self.pos += 1;
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected exponent");
        }
        let v: i32 = std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().or_else(|_| self.err("exponent overflow"))?;
        if paren {
            if self.peek() != Some(b')') {
                return self.err("expected `)`");
            }
            self.pos += 1;
        }
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<MultiLaurent, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap();
                Ok(MultiLaurent::constant(self.vars, n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.vars.index(name) {
                    Some(_) => Ok(MultiLaurent::var(self.vars, name).unwrap()),
                    None => {
                        self.pos = start;
                        self.err(&format!("unknown variable `{name}`"))
                    }
                }
            }
            _ => self.err("expected a number, variable or `(`"),
        }
    }
}

pub(super) fn parse_poly(vars: &Vars, s: &str) -> Result<MultiLaurent, PolyError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, vars };
    let r = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_errors_carry_position() {
        let v = Vars::a();
        match parse_poly(&v, "A + q") {
            Err(PolyError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly(&v, "A^").is_err());
        assert!(parse_poly(&v, "(A + 1").is_err());
    }

    #[test]
    fn render_parse_roundtrip_examples() {
        let v = Vars::vz();
        for s in ["-v^4 + v^2*z^2 + 2*v^2", "-v*z^-1 + v^-1*z^-1", "0", "-1", "3*v*z"] {
            assert_eq!(render(&parse_poly(&v, s).unwrap()), s);
        }
        assert_eq!(render(&parse_poly(&v, "(v + z)^2").unwrap()), "v^2 + 2*v*z + z^2");
        assert_eq!(render(&parse_poly(&v, "v^(-2)").unwrap()), "v^-2");
    }
}
