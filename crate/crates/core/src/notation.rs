//! Text notation for descriptors.
//!
//! ```text
//! descriptor := term ("+" term)* | "0"
//! term       := "Z" ["^" mult] | "C" int ["^" mult] | "U" prime
//! mult       := positive-int | "inf"
//! ```
//!
//! Whitespace is ignored. `C n` with composite `n` is split into primary
//! parts, `C 1` is accepted and dropped, `U p` marks unbounded p-torsion.

use std::fmt;

use crate::abelian::AbelianDescriptor;
use crate::cardinal::Cardinal;
use crate::error::{Error, Result};
use crate::primes::is_prime;

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let digits: String = self.src[self.pos..]
            .chars()
            .take_while(char::is_ascii_digit)
            .collect();
        if digits.is_empty() {
            return self.err("expected an integer");
        }
        self.pos += digits.len();
        digits.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "integer out of range".into(),
        })
    }

    fn mult(&mut self) -> Result<Cardinal> {
        if !self.eat('^') {
            return Ok(Cardinal::ONE);
        }
        self.skip_ws();
        if self.src[self.pos..].starts_with("inf") {
            self.pos += 3;
            return Ok(Cardinal::Inf);
        }
        let start = self.pos;
        match self.int()? {
            0 => Err(Error::Parse {
                pos: start,
                msg: "multiplicity must be positive".into(),
            }),
            n => Ok(Cardinal::Finite(n)),
        }
    }
}

/// Parses descriptor text into a canonical descriptor.
pub fn parse_descriptor(s: &str) -> Result<AbelianDescriptor> {
    let mut lx = Lexer { src: s, pos: 0 };
    if lx.eat('0') {
        return match lx.peek() {
            None => Ok(AbelianDescriptor::trivial()),
            Some(_) => lx.err("unexpected input after 0"),
        };
    }
    let mut raw = Vec::new();
    let mut free_rank = Cardinal::ZERO;
    let mut unbounded = Vec::new();
    loop {
        match lx.peek() {
            Some('Z') => {
                lx.pos += 1;
                free_rank = free_rank + lx.mult()?;
            }
            Some('C') => {
                lx.pos += 1;
                lx.skip_ws();
                let start = lx.pos;
                let n = lx.int()?;
                if n == 0 {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "cyclic group of order 0".into(),
                    });
                }
                raw.push((n, lx.mult()?));
            }
            Some('U') => {
                lx.pos += 1;
                lx.skip_ws();
                let start = lx.pos;
                let p = lx.int()?;
                if !is_prime(p) {
                    return Err(Error::Parse {
                        pos: start,
                        msg: format!("{p} is not prime"),
                    });
                }
                unbounded.push(p);
            }
            Some(_) => return lx.err("expected Z, C, U or 0"),
            None => return lx.err("unexpected end of input"),
        }
        match lx.peek() {
            None => break,
            Some('+') => lx.pos += 1,
            Some(_) => return lx.err("expected +"),
        }
    }
    AbelianDescriptor::canonicalize(&raw, free_rank, &unbounded)
}

fn fmt_mult(f: &mut fmt::Formatter<'_>, c: Cardinal) -> fmt::Result {
    if c != Cardinal::ONE {
        write!(f, "^{c}")?;
    }
    Ok(())
}

impl fmt::Display for AbelianDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            let r = if first { Ok(()) } else { f.write_str(" + ") };
            first = false;
            r
        };
        if !self.free_rank().is_zero() {
            sep(f)?;
            f.write_str("Z")?;
            fmt_mult(f, self.free_rank())?;
        }
        for (&(p, k), &c) in self.summands() {
            sep(f)?;
            write!(f, "C{}", num_bigint::BigUint::from(p).pow(k))?;
            fmt_mult(f, c)?;
        }
        for p in self.unbounded_primes() {
            sep(f)?;
            write!(f, "U{p}")?;
        }
        Ok(())
    }
}
