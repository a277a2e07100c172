//! Text formats: the polynomial grammar, surface files, and family files.
//!
//! Grammar: integer literals, named variables, `+ - * ^`, parentheses;
//! whitespace-insensitive; multiplication is always explicit. Exponents are
//! non-negative integer literals.

use branchcurve_algebra::domain::{Rationals, Ring};
use branchcurve_algebra::multipoly::MultiPoly;
use branchcurve_algebra::RationalPoly;

use crate::focal::LineFamily;
use crate::surface::{SurfaceModel, UserInvariants};
use crate::GeometryError;

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> GeometryError {
        GeometryError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expr(&mut self) -> Result<RationalPoly, GeometryError> {
        let mut acc = if self.peek() == Some(b'-') {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalPoly, GeometryError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.bump();
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<RationalPoly, GeometryError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.integer_literal()?;
            if e < 0 {
                return Err(self.error("negative exponent"));
            }
            if e > 64 {
                return Err(self.error("exponent too large"));
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalPoly, GeometryError> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.bump();
                Ok(inner)
            }
            Some(b'-') => {
                self.bump();
                Ok(self.atom()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer_literal()?;
                Ok(MultiPoly::constant(
                    Rationals,
                    self.vars.len(),
                    Rationals.from_i64(n),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.text.len()
                    && (self.text[self.pos].is_ascii_alphanumeric()
                        || self.text[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
                match self.vars.iter().position(|v| *v == name) {
                    Some(idx) => Ok(MultiPoly::variable(Rationals, self.vars.len(), idx)),
                    None => {
                        self.pos = start;
                        Err(self.error(format!(
                            "unknown variable '{name}' (expected one of {})",
                            self.vars.join(", ")
                        )))
                    }
                }
            }
            Some(c) => Err(self.error(format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer_literal(&mut self) -> Result<i64, GeometryError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| self.error("integer literal out of range"))
    }
}

/// Parse a polynomial in the named variables with exact integer
/// coefficients.
pub fn parse_polynomial(text: &str, vars: &[&str]) -> Result<RationalPoly, GeometryError> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
        vars,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return Err(p.error("trailing input"));
    }
    Ok(out)
}

pub const SURFACE_VARS: [&str; 4] = ["x0", "x1", "x2", "x3"];
pub const FAMILY_VARS: [&str; 2] = ["u", "v"];

/// Parse a surface file: optional `# key=value` headers
/// (g, ksq, chi, deg_gamma), then one homogeneous polynomial in x0..x3.
pub fn parse_surface_text(text: &str) -> Result<SurfaceModel, GeometryError> {
    let mut user = UserInvariants::default();
    let mut poly_line: Option<String> = None;
    for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            let rest = rest.trim();
            if let Some((key, value)) = rest.split_once('=') {
                let value: i64 = value.trim().parse().map_err(|_| {
                    GeometryError::Input(format!("bad header value in '{trimmed}'"))
                })?;
                match key.trim() {
                    "g" => user.g = Some(value),
                    "ksq" => user.ksq = Some(value),
                    "chi" => user.chi = Some(value),
                    "deg_gamma" => user.deg_gamma = Some(value),
                    _ => {}
                }
            }
            continue;
        }
        if poly_line.is_some() {
            return Err(GeometryError::Input(
                "surface file must contain exactly one polynomial line".into(),
            ));
        }
        poly_line = Some(trimmed.to_string());
    }
    let line = poly_line
        .ok_or_else(|| GeometryError::Input("surface file contains no polynomial".into()))?;
    let f = parse_polynomial(&line, &SURFACE_VARS)?;
    if f.homogeneous_degree().is_none() {
        return Err(GeometryError::NonHomogeneousInput);
    }
    SurfaceModel::new(f, user)
}

/// Parse a family file: two content lines, each a comma-separated 4-vector
/// of polynomials in (u, v). A `parametric:` prefix on the first line makes
/// it a parametric pair, otherwise the two rows are plane equations.
pub fn parse_family_text(
    text: &str,
) -> Result<LineFamily<branchcurve_algebra::Rationals>, GeometryError> {
    let mut rows: Vec<String> = Vec::new();
    let mut parametric = false;
    for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut content = trimmed.to_string();
        if rows.is_empty() {
            if let Some(rest) = trimmed.strip_prefix("parametric:") {
                parametric = true;
                content = rest.trim().to_string();
            }
        }
        rows.push(content);
    }
    if rows.len() != 2 {
        return Err(GeometryError::Input(format!(
            "family file needs exactly two vector lines, found {}",
            rows.len()
        )));
    }
    let parse_row = |row: &str| -> Result<[RationalPoly; 4], GeometryError> {
        let parts: Vec<&str> = row.split(',').collect();
        if parts.len() != 4 {
            return Err(GeometryError::Input(format!(
                "family rows need 4 comma-separated entries, found {}",
                parts.len()
            )));
        }
        let polys: Result<Vec<RationalPoly>, GeometryError> = parts
            .iter()
            .map(|p| parse_polynomial(p, &FAMILY_VARS))
            .collect();
        Ok(polys?.try_into().expect("four entries"))
    };
    let first = parse_row(&rows[0])?;
    let second = parse_row(&rows[1])?;
    Ok(if parametric {
        LineFamily::ParametricPair {
            p: first,
            q: second,
        }
    } else {
        LineFamily::DualPair {
            a: first,
            b: second,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::fermat_surface;

    #[test]
    fn fermat_cubic_parses() {
        let f = parse_polynomial("x0^3+x1^3+x2^3+x3^3", &SURFACE_VARS).unwrap();
        assert_eq!(f, fermat_surface(3));
    }

    #[test]
    fn product_expansion() {
        // x0*(x1+x2)^2 = x0 x1^2 + 2 x0 x1 x2 + x0 x2^2.
        let f = parse_polynomial("x0*(x1+x2)^2", &SURFACE_VARS).unwrap();
        let c = |n: i64| Rationals.from_i64(n);
        let expect = MultiPoly::from_terms(
            Rationals,
            4,
            vec![
                (vec![1, 2, 0, 0], c(1)),
                (vec![1, 1, 1, 0], c(2)),
                (vec![1, 0, 2, 0], c(1)),
            ],
        );
        assert_eq!(f, expect);
    }

    #[test]
    fn whitespace_and_signs() {
        let f = parse_polynomial(" - x0 * x1 + 2 * x2^2 - ( x3 - x0 ) * x3 ", &SURFACE_VARS)
            .unwrap();
        assert_eq!(f.homogeneous_degree(), Some(2));
        let g = parse_polynomial("-x0*x1+2*x2^2-x3^2+x0*x3", &SURFACE_VARS).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_polynomial("x0^3 + y", &SURFACE_VARS) {
            Err(GeometryError::Syntax { position, .. }) => assert_eq!(position, 7),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_polynomial("x0 +", &SURFACE_VARS).is_err());
        assert!(parse_polynomial("(x0", &SURFACE_VARS).is_err());
        assert!(parse_polynomial("x0 x1", &SURFACE_VARS).is_err());
    }

    #[test]
    fn nonhomogeneous_surface_rejected() {
        let err = parse_surface_text("x0^2 + x1").unwrap_err();
        assert!(matches!(err, GeometryError::NonHomogeneousInput));
    }

    #[test]
    fn surface_headers() {
        let text = "# Steiner quartic\n# g=0\n# ksq=9\n# chi=1\n# deg_gamma=3\n\
                    x0^2*x1^2+x1^2*x2^2+x2^2*x0^2-x0*x1*x2*x3\n";
        let s = parse_surface_text(text).unwrap();
        assert_eq!(s.d, 4);
        assert!(!s.smooth_claimed);
        assert_eq!(s.deg_gamma, 3);
        assert_eq!(s.invariants.g, 0);
        assert_eq!(s.invariants.ksq, 9);
        assert_eq!(s.invariants.chi, 1);
    }

    #[test]
    fn family_files() {
        let dual = "0, u, -1, 0\n0, v, 0, -1\n";
        match parse_family_text(dual).unwrap() {
            LineFamily::DualPair { a, .. } => {
                assert!(a[0].is_zero());
                assert_eq!(a[1], parse_polynomial("u", &FAMILY_VARS).unwrap());
            }
            _ => panic!("dual expected"),
        }
        let para = "# quadric tangent family\nparametric: 1, u, v, u*v\n0, 1, 1, u+v\n";
        match parse_family_text(para).unwrap() {
            LineFamily::ParametricPair { p, q } => {
                assert_eq!(p[3], parse_polynomial("u*v", &FAMILY_VARS).unwrap());
                assert_eq!(q[3], parse_polynomial("u+v", &FAMILY_VARS).unwrap());
            }
            _ => panic!("parametric expected"),
        }
    }
}
