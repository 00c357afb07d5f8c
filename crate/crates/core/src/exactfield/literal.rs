//! Element literals: sums of terms `c`, `c*z^k`, `c*t`, `c*z^k*t` with a
//! rational coefficient c. `z` denotes ζ_m and `t` the quadratic
//! generator. Whitespace-insensitive; bare `z`, `z^k` and `t` factors are
//! accepted. Canonical printing uses ascending powers with explicit
//! coefficients.

use num::{BigInt, One, Signed, Zero};

use super::{CycElem, FieldError, QuadElem, Rat, Tower, TowerElems};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Z,
    T,
    Star,
    Caret,
    Slash,
    Plus,
    Minus,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, FieldError> {
    let mut toks = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n: BigInt = digits.parse().map_err(|_| FieldError::Parse(format!("bad integer `{digits}`")))?;
                toks.push(Tok::Num(n));
            }
            'z' => {
                chars.next();
                toks.push(Tok::Z);
            }
            't' => {
                chars.next();
                toks.push(Tok::T);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            '/' => {
                chars.next();
                toks.push(Tok::Slash);
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            other => return Err(FieldError::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_num(&mut self) -> Result<BigInt, FieldError> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(n.clone()),
            other => Err(FieldError::Parse(format!("expected an integer, found {other:?}"))),
        }
    }

    /// factor := rational | z [^ [-] int] | t ; returns (coeff, zexp, tdeg)
    fn factor(&mut self) -> Result<(Rat, i64, u32), FieldError> {
        match self.next().cloned() {
            Some(Tok::Num(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.next();
                    let d = self.expect_num()?;
                    if d.is_zero() {
                        return Err(FieldError::Parse("zero denominator".into()));
                    }
                    Ok((Rat::new(n, d), 0, 0))
                } else {
                    Ok((Rat::from_integer(n), 0, 0))
                }
            }
            Some(Tok::Z) => {
                let mut exp: i64 = 1;
                if self.peek() == Some(&Tok::Caret) {
                    self.next();
                    let mut sign = 1i64;
                    if self.peek() == Some(&Tok::Minus) {
                        self.next();
                        sign = -1;
                    }
                    let n = self.expect_num()?;
                    let n: i64 = n
                        .try_into()
                        .map_err(|_| FieldError::Parse("exponent out of range".into()))?;
                    exp = sign * n;
                }
                Ok((Rat::one(), exp, 0))
            }
            Some(Tok::T) => Ok((Rat::one(), 0, 1)),
            other => Err(FieldError::Parse(format!("expected a factor, found {other:?}"))),
        }
    }

    /// term := factor (* factor)*
    fn term(&mut self, tower: &Tower) -> Result<QuadElem, FieldError> {
        let (mut coeff, mut zexp, mut tdeg) = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.next();
            let (c, z, t) = self.factor()?;
            coeff *= c;
            zexp += z;
            tdeg += t;
        }
        if tdeg > 1 {
            return Err(FieldError::Parse("repeated `t` in a term".into()));
        }
        let base = tower.zeta_pow(zexp).scale(&coeff);
        if tdeg == 0 {
            Ok(QuadElem::from_cyc(base))
        } else {
            if !tower.has_radicand() {
                return Err(FieldError::MissingRadicand);
            }
            Ok(QuadElem::new(tower.zero_cyc(), base))
        }
    }
}

pub fn parse_scalar(tower: &Tower, s: &str) -> Result<QuadElem, FieldError> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(FieldError::Parse("empty element literal".into()));
    }
    let mut p = Parser { toks: &toks, pos: 0 };
    let mut total = tower.zero();
    let mut first = true;
    loop {
        let mut negate = false;
        match p.peek() {
            Some(Tok::Plus) => {
                p.next();
            }
            Some(Tok::Minus) => {
                p.next();
                negate = true;
            }
            None if !first => break,
            None => return Err(FieldError::Parse("empty element literal".into())),
            _ if first => {}
            Some(other) => {
                return Err(FieldError::Parse(format!("expected + or - between terms, found {other:?}")))
            }
        }
        let t = p.term(tower)?;
        total = if negate { &total - &t } else { &total + &t };
        first = false;
        if p.peek().is_none() {
            break;
        }
    }
    Ok(total)
}

pub fn parse_cyc(tower: &Tower, s: &str) -> Result<CycElem, FieldError> {
    let q = parse_scalar(tower, s)?;
    q.as_cyc()
        .cloned()
        .ok_or_else(|| FieldError::Parse("expected an element of the base field (no `t`)".into()))
}

fn push_term(out: &mut String, c: &Rat, power: usize, t_factor: bool) {
    let neg = c.is_negative();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else if neg {
        out.push('-');
    } else {
        out.push('+');
    }
    let abs = c.abs();
    out.push_str(&abs.to_string());
    match power {
        0 => {}
        1 => out.push_str("*z"),
        k => out.push_str(&format!("*z^{k}")),
    }
    if t_factor {
        out.push_str("*t");
    }
}

pub fn print_cyc(x: &CycElem) -> String {
    let mut out = String::new();
    for (i, c) in x.coeffs().iter().enumerate() {
        if !c.is_zero() {
            push_term(&mut out, c, i, false);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn print_scalar(x: &QuadElem) -> String {
    let mut out = String::new();
    for (i, c) in x.base().coeffs().iter().enumerate() {
        if !c.is_zero() {
            push_term(&mut out, c, i, false);
        }
    }
    for (i, c) in x.t_coeff().coeffs().iter().enumerate() {
        if !c.is_zero() {
            push_term(&mut out, c, i, true);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
