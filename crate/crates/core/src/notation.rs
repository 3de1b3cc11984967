//! Text notation for scalars, forms and structure equations.
//!
//! Form expressions: sums of products of rational numbers, parameters with
//! optional integer powers, basis forms `e134` and parenthesized
//! subexpressions, e.g. `-t^2/4*(3*e13 - e24)`. Juxtaposition multiplies.
//!
//! Structure notation: `(0,0,0,0,12,14+23)`, one entry per `de^k`, each entry
//! `0` or a signed sum of index pairs with optional coefficients
//! (`2*t*12`, `2t·12`, `-35`).

use crate::error::{Error, Result};
use crate::exterior::{KForm, MultiIndex, DIM};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Basis(Vec<usize>),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() && c != '·'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '\'' || c == '′' || c == '_'
}

fn tokenize(src: &str, offset: usize) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = offset + i;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((pos, Tok::Plus));
                i += 1
            }
            '-' | '−' => {
                out.push((pos, Tok::Minus));
                i += 1
            }
            '*' | '·' => {
                out.push((pos, Tok::Star));
                i += 1
            }
            '/' => {
                out.push((pos, Tok::Slash));
                i += 1
            }
            '^' => {
                out.push((pos, Tok::Caret));
                i += 1
            }
            '(' => {
                out.push((pos, Tok::LParen));
                i += 1
            }
            ')' => {
                out.push((pos, Tok::RParen));
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = text.parse::<i64>().map_err(|_| Error::Parse {
                    pos,
                    msg: format!("number `{text}` out of range"),
                })?;
                out.push((pos, Tok::Num(n)));
            }
            'e' if i + 1 < chars.len() && chars[i + 1].is_ascii_digit() => {
                i += 1;
                let mut ix = Vec::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    ix.push(chars[i].to_digit(10).unwrap() as usize);
                    i += 1;
                }
                if i < chars.len() && is_ident_continue(chars[i]) {
                    return Err(Error::Parse {
                        pos,
                        msg: "basis form must be followed by an operator or space".into(),
                    });
                }
                out.push((pos, Tok::Basis(ix)));
            }
            c if is_ident_start(c) => {
                let start = i;
                while i < chars.len() && is_ident_continue(chars[i]) {
                    i += 1;
                }
                out.push((pos, Tok::Ident(chars[start..i].iter().collect())));
            }
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<KForm> {
        let mut acc: Option<KForm> = None;
        let mut first = true;
        loop {
            let negate = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let start = self.here();
            let mut term = self.term()?;
            if negate {
                term = -term;
            }
            acc = Some(match acc {
                None => term,
                Some(a) => {
                    if !a.is_zero() && !term.is_zero() && a.degree() != term.degree() {
                        return Err(Error::Parse {
                            pos: start,
                            msg: "sum of forms of different degree".into(),
                        });
                    }
                    &a + &term
                }
            });
        }
        Ok(acc.unwrap_or_else(|| KForm::zero(0)))
    }

    fn term(&mut self) -> Result<KForm> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.power()?;
                    acc = acc.wedge(&rhs);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let rhs = self.power()?;
                    if rhs.degree() != 0 {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "division by a form".into(),
                        });
                    }
                    let inv = rhs.as_scalar().inverse().ok_or_else(|| Error::Parse {
                        pos: at,
                        msg: "divisor must be a nonzero monomial".into(),
                    })?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::Basis(_) | Tok::LParen) => {
                    let rhs = self.power()?;
                    acc = acc.wedge(&rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<KForm> {
        let at = self.here();
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let exp = match self.peek() {
            Some(Tok::Num(n)) => *n,
            _ => return self.err("expected integer exponent"),
        };
        self.pos += 1;
        if base.degree() != 0 {
            return Err(Error::Parse {
                pos: at,
                msg: "only scalars can be raised to a power".into(),
            });
        }
        let s = base.as_scalar();
        let s = if neg {
            s.inverse().ok_or_else(|| Error::Parse {
                pos: at,
                msg: "negative power of a non-monomial".into(),
            })?
        } else {
            s
        };
        Ok(KForm::scalar(s.pow(exp as u32)))
    }

    fn atom(&mut self) -> Result<KForm> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(KForm::scalar(Scalar::from_int(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(KForm::scalar(Scalar::var(&name)))
            }
            Some(Tok::Basis(ix)) => {
                self.pos += 1;
                basis_form(&ix).map_err(|e| match e {
                    Error::Parse { msg, .. } => Error::Parse { pos: at, msg },
                    other => other,
                })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(other) => self.err(format!("unexpected token {other:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// `e^{i1} ^ ... ^ e^{ik}` for arbitrary (not necessarily sorted) indices.
fn basis_form(ix: &[usize]) -> Result<KForm> {
    let mut acc = KForm::scalar(Scalar::one());
    for &i in ix {
        if !(1..=DIM).contains(&i) {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("index {i} outside 1..{DIM}"),
            });
        }
        acc = acc.wedge(&KForm::e(&[i]));
    }
    Ok(acc)
}

fn parse_expr_at(src: &str, offset: usize) -> Result<KForm> {
    let toks = tokenize(src, offset)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: offset + src.chars().count(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses a form expression such as `t^2/2*(e34 - e56)`.
pub fn parse_form(src: &str) -> Result<KForm> {
    parse_expr_at(src, 0)
}

/// Parses a scalar expression such as `-3/4*t^2` or `1/2`.
pub fn parse_scalar(src: &str) -> Result<Scalar> {
    let f = parse_form(src)?;
    if f.degree() != 0 && !f.is_zero() {
        return Err(Error::Parse {
            pos: 0,
            msg: "expected a scalar, found a form".into(),
        });
    }
    Ok(f.as_scalar())
}

/// One signed term of a structure-notation entry: coefficient and index pair.
fn parse_pair_term(term: &str, offset: usize, negate: bool) -> Result<KForm> {
    let chars: Vec<char> = term.chars().collect();
    let trimmed_end = chars.len();
    if trimmed_end < 2
        || !chars[trimmed_end - 1].is_ascii_digit()
        || !chars[trimmed_end - 2].is_ascii_digit()
    {
        return Err(Error::Parse {
            pos: offset,
            msg: format!("`{term}` does not end in a two-digit index pair"),
        });
    }
    let i = chars[trimmed_end - 2].to_digit(10).unwrap() as usize;
    let j = chars[trimmed_end - 1].to_digit(10).unwrap() as usize;
    let pair_pos = offset + trimmed_end - 2;
    for (k, idx) in [(0, i), (1, j)] {
        if !(1..=DIM).contains(&idx) {
            return Err(Error::Parse {
                pos: pair_pos + k,
                msg: format!("index {idx} outside 1..{DIM}"),
            });
        }
    }
    if i >= j {
        return Err(Error::Parse {
            pos: pair_pos,
            msg: format!("pair {i}{j} must satisfy i < j"),
        });
    }
    let mut coef_chars: Vec<char> = chars[..trimmed_end - 2].to_vec();
    while coef_chars.last().is_some_and(|c| c.is_whitespace()) {
        coef_chars.pop();
    }
    let explicit_sep = matches!(coef_chars.last(), Some('*') | Some('·'));
    if explicit_sep {
        coef_chars.pop();
    }
    let coef_src: String = coef_chars.iter().collect();
    let coef = if coef_src.trim().is_empty() {
        if explicit_sep {
            return Err(Error::Parse {
                pos: offset,
                msg: "dangling multiplication".into(),
            });
        }
        Scalar::one()
    } else {
        if !explicit_sep && coef_chars.last().is_some_and(|c| c.is_ascii_digit()) {
            return Err(Error::Parse {
                pos: offset,
                msg: format!("ambiguous term `{term}`: separate the coefficient with `*`"),
            });
        }
        parse_scalar_at(&coef_src, offset)?
    };
    let coef = if negate { -coef } else { coef };
    let idx = MultiIndex::new(&[i, j]).expect("validated pair");
    Ok(KForm::monomial(idx, coef))
}

fn parse_scalar_at(src: &str, offset: usize) -> Result<Scalar> {
    let f = parse_expr_at(src, offset)?;
    if f.degree() != 0 && !f.is_zero() {
        return Err(Error::Parse {
            pos: offset,
            msg: "coefficient must be a scalar".into(),
        });
    }
    Ok(f.as_scalar())
}

fn parse_entry(entry: &str, offset: usize) -> Result<KForm> {
    let trimmed = entry.trim();
    if trimmed == "0" {
        return Ok(KForm::zero(2));
    }
    if trimmed.is_empty() {
        return Err(Error::Parse {
            pos: offset,
            msg: "empty entry".into(),
        });
    }
    let chars: Vec<char> = entry.chars().collect();
    let mut out = KForm::zero(2);
    let mut start = 0;
    let mut negate = false;
    let mut depth = 0i32;
    let mut k = 0;
    // Split at top-level signs that start a new term (not the sign of an exponent).
    let flush = |from: usize, to: usize, negate: bool, out: &mut KForm| -> Result<()> {
        let piece: String = chars[from..to].iter().collect();
        if piece.trim().is_empty() {
            return Err(Error::Parse {
                pos: offset + from,
                msg: "missing term".into(),
            });
        }
        let lead = piece.len() - piece.trim_start().len();
        let lead_chars = piece[..lead].chars().count();
        *out += &parse_pair_term(piece.trim(), offset + from + lead_chars, negate)?;
        Ok(())
    };
    while k < chars.len() {
        let c = chars[k];
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' | '−' if depth == 0 => {
                let prev = chars[..k].iter().rev().find(|c| !c.is_whitespace());
                let is_exponent_sign = prev == Some(&'^');
                let is_leading = chars[..k].iter().all(|c| c.is_whitespace());
                if is_leading {
                    negate = c != '+';
                    start = k + 1;
                } else if !is_exponent_sign {
                    flush(start, k, negate, &mut out)?;
                    negate = c != '+';
                    start = k + 1;
                }
            }
            _ => {}
        }
        k += 1;
    }
    flush(start, chars.len(), negate, &mut out)?;
    Ok(out)
}

/// Parses structure notation into the six differentials `de^1..de^6`.
pub fn parse_differentials(notation: &str) -> Result<[KForm; DIM]> {
    let chars: Vec<char> = notation.chars().collect();
    let open = chars.iter().position(|c| !c.is_whitespace());
    let close = chars.iter().rposition(|c| !c.is_whitespace());
    let (open, close) = match (open, close) {
        (Some(o), Some(c)) if chars[o] == '(' && chars[c] == ')' && o < c => (o, c),
        _ => {
            return Err(Error::Parse {
                pos: open.unwrap_or(0),
                msg: "expected a parenthesized list of six entries".into(),
            })
        }
    };
    let mut entries = Vec::new();
    let mut start = open + 1;
    let mut depth = 0;
    for k in open + 1..close {
        match chars[k] {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                entries.push((start, chars[start..k].iter().collect::<String>()));
                start = k + 1;
            }
            _ => {}
        }
    }
    entries.push((start, chars[start..close].iter().collect::<String>()));
    if entries.len() != DIM {
        return Err(Error::Parse {
            pos: close,
            msg: format!("expected {DIM} entries, found {}", entries.len()),
        });
    }
    let mut out: [KForm; DIM] = std::array::from_fn(|_| KForm::zero(2));
    for (k, (pos, text)) in entries.into_iter().enumerate() {
        out[k] = parse_entry(&text, pos)?;
    }
    Ok(out)
}

/// Canonical structure notation for the given differentials.
pub fn render_differentials(de: &[KForm; DIM]) -> String {
    let entries: Vec<String> = de.iter().map(render_entry).collect();
    format!("({})", entries.join(","))
}

fn render_entry(form: &KForm) -> String {
    if form.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, coef) in form.terms() {
        let pair = idx.to_string();
        let mut monomials: Vec<_> = coef.terms().collect();
        monomials.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| a.cmp(b)));
        for (m, q) in monomials {
            let negative = q < &num_traits::Zero::zero();
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = if negative { -q.clone() } else { q.clone() };
            let mut factors = Vec::new();
            if !num_traits::One::is_one(&mag) {
                factors.push(mag.to_string());
            }
            if !m.is_one() {
                factors.push(m.to_string());
            }
            factors.push(pair.clone());
            out.push_str(&factors.join("*"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> KForm {
        parse_form(s).unwrap()
    }

    #[test]
    fn form_expressions() {
        let t = Scalar::var("t");
        let t2 = &t * &t;
        let got = f("t^2/2*(e34 - e56)");
        let half = Scalar::from_ratio(1, 2);
        let expected = (&KForm::e(&[3, 4]) - &KForm::e(&[5, 6])).scale(&(&t2 * &half));
        assert_eq!(got, expected);
        assert_eq!(f("e21"), -KForm::e(&[1, 2]));
        assert_eq!(f("2t e13"), KForm::e(&[1, 3]).scale(&Scalar::from_int(2)).scale(&t));
        assert_eq!(f("t^-1"), KForm::scalar(Scalar::var_pow("t", -1)));
    }

    #[test]
    fn form_errors_carry_position() {
        match parse_form("e13 + e1") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(parse_form("e17").is_err());
        assert!(parse_form("(e12").is_err());
    }

    #[test]
    fn structure_notation() {
        let de = parse_differentials("(0,0,0,0,12,34)").unwrap();
        assert_eq!(de[4], KForm::e(&[1, 2]));
        assert_eq!(de[5], KForm::e(&[3, 4]));
        let de = parse_differentials("(0, 0, 0, 12, 23, 14 − 35)").unwrap();
        assert_eq!(de[5], &KForm::e(&[1, 4]) - &KForm::e(&[3, 5]));
        let de = parse_differentials("(0,0,0,0,0,2t·12)").unwrap();
        assert_eq!(de[5], KForm::e(&[1, 2]).scale(&(Scalar::from_int(2) * Scalar::var("t"))));
        let de = parse_differentials("(0,0,0,0,0,0)").unwrap();
        assert!(de.iter().all(KForm::is_zero));
    }

    #[test]
    fn structure_notation_errors() {
        for bad in [
            "(0,0,0,0,12)",
            "(0,0,0,0,21,0)",
            "(0,0,0,0,17,0)",
            "0,0,0,0,0,0",
            "(0,0,0,0,1x,0)",
            "(0,0,0,0,312,0)",
            "(0,0,0,0,12+,0)",
        ] {
            assert!(parse_differentials(bad).is_err(), "{bad}");
        }
        match parse_differentials("(0,0,0,0,12,43)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 12),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn render_round_trip() {
        for src in [
            "(0,0,0,0,12,34)",
            "(0,0,0,12,23,14-35)",
            "(0,0,0,0,t*13-t*24,t*14+t*23)",
            "(0,0,2*15,2*25,0,2*13+2*24)",
            "(0,0,0,0,b*t*13+t*13,-2*t*12)",
        ] {
            let de = parse_differentials(src).unwrap();
            let rendered = render_differentials(&de);
            assert_eq!(parse_differentials(&rendered).unwrap(), de);
        }
        let de = parse_differentials("(0,0,0,0,12,34)").unwrap();
        assert_eq!(render_differentials(&de), "(0,0,0,0,12,34)");
    }
}
