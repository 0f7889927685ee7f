//! Group descriptors: `expr := term { "x" term }`,
//! `term := atom [ "wr" atom ] [ "." nat ]`, with atoms `A n`, `S n`, `C n`,
//! `D n`, `PSL(n,q)`, `SL(n,q)`, `PGL(n,q)`, `PSU(3,q)`, `Sz(q)`, `J1` and
//! parenthesized expressions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::is_prime_power;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Descriptor {
    Alternating(u32),
    Symmetric(u32),
    Cyclic(u32),
    /// Dihedral group of the given order.
    Dihedral(u32),
    Psl { n: u32, q: u32 },
    Sl { n: u32, q: u32 },
    Pgl { n: u32, q: u32 },
    Psu3(u32),
    Suzuki(u32),
    J1,
    Product(Vec<Descriptor>),
    Wreath(Box<Descriptor>, Box<Descriptor>),
    Extension(Box<Descriptor>, u32),
}

/// Parses a descriptor string.
pub fn parse(input: &str) -> Result<Descriptor> {
    let mut p = Parser { s: input.as_bytes(), pos: 0 };
    let d = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(d)
}

impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Descriptor> {
        parse(s)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Consumes `token` (after whitespace) when present.
    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn nat(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        text.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: format!("number `{text}` is too large"),
        })
    }

    fn prime_power(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let q = self.nat()?;
        if is_prime_power(q as u64).is_none() {
            return Err(Error::Parse {
                pos: start,
                msg: format!("{q} is not a prime power"),
            });
        }
        Ok(q)
    }

    fn expr(&mut self) -> Result<Descriptor> {
        let mut terms = vec![self.term()?];
        while self.eat_keyword("x") {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Descriptor::Product(terms)
        })
    }

    /// Keywords must not run into a following letter (so `x` never eats
    /// the start of an identifier).
    fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let rest = &self.s[self.pos..];
        if rest.starts_with(kw.as_bytes()) {
            let next = rest.get(kw.len()).copied();
            if next.is_none_or(|c| !c.is_ascii_lowercase()) {
                self.pos += kw.len();
                return true;
            }
        }
        false
    }

    fn term(&mut self) -> Result<Descriptor> {
        let mut d = self.atom()?;
        if self.eat_keyword("wr") {
            let top = self.atom()?;
            d = Descriptor::Wreath(Box::new(d), Box::new(top));
        }
        if self.eat(".") {
            let start = self.pos;
            let k = self.nat()?;
            if k < 2 {
                return Err(Error::Parse {
                    pos: start,
                    msg: "extension order must be at least 2".into(),
                });
            }
            d = Descriptor::Extension(Box::new(d), k);
        }
        Ok(d)
    }

    fn atom(&mut self) -> Result<Descriptor> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("(") {
            let d = self.expr()?;
            self.expect(")")?;
            return Ok(d);
        }
        for (name, ctor) in [("PSL(", 0), ("SL(", 1), ("PGL(", 2)] {
            if self.eat(name) {
                let n = self.nat()?;
                if n < 2 {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "matrix dimension must be at least 2".into(),
                    });
                }
                self.expect(",")?;
                let q = self.prime_power()?;
                self.expect(")")?;
                return Ok(match ctor {
                    0 => Descriptor::Psl { n, q },
                    1 => Descriptor::Sl { n, q },
                    _ => Descriptor::Pgl { n, q },
                });
            }
        }
        if self.eat("PSU(") {
            let n_pos = self.pos;
            if self.nat()? != 3 {
                return Err(Error::Parse {
                    pos: n_pos,
                    msg: "only PSU(3,q) is supported".into(),
                });
            }
            self.expect(",")?;
            let q = self.prime_power()?;
            self.expect(")")?;
            return Ok(Descriptor::Psu3(q));
        }
        if self.eat("Sz(") {
            let q_pos = self.pos;
            let q = self.prime_power()?;
            if q != 8 {
                return Err(Error::Parse {
                    pos: q_pos,
                    msg: format!("Sz({q}) is unsupported; only Sz(8) is available"),
                });
            }
            self.expect(")")?;
            return Ok(Descriptor::Suzuki(q));
        }
        if self.eat("J1") {
            return Ok(Descriptor::J1);
        }
        let Some(&c) = self.s.get(self.pos) else {
            return Err(self.error("unexpected end of input"));
        };
        if matches!(c, b'A' | b'S' | b'C' | b'D') {
            self.pos += 1;
            let n = self.nat()?;
            return match c {
                b'A' if n >= 1 => Ok(Descriptor::Alternating(n)),
                b'S' if n >= 1 => Ok(Descriptor::Symmetric(n)),
                b'C' if n >= 1 => Ok(Descriptor::Cyclic(n)),
                b'D' if n >= 2 && n % 2 == 0 => Ok(Descriptor::Dihedral(n)),
                b'D' => Err(Error::Parse {
                    pos: start,
                    msg: format!("D{n}: the dihedral order must be even"),
                }),
                _ => Err(Error::Parse {
                    pos: start,
                    msg: "degree must be positive".into(),
                }),
            };
        }
        Err(self.error("expected a group name"))
    }
}

impl Descriptor {
    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Product(_) | Descriptor::Wreath(..) | Descriptor::Extension(..) => {
                write!(f, "({self})")
            }
            _ => write!(f, "{self}"),
        }
    }

    fn fmt_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Product(_) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Alternating(n) => write!(f, "A{n}"),
            Descriptor::Symmetric(n) => write!(f, "S{n}"),
            Descriptor::Cyclic(n) => write!(f, "C{n}"),
            Descriptor::Dihedral(n) => write!(f, "D{n}"),
            Descriptor::Psl { n, q } => write!(f, "PSL({n},{q})"),
            Descriptor::Sl { n, q } => write!(f, "SL({n},{q})"),
            Descriptor::Pgl { n, q } => write!(f, "PGL({n},{q})"),
            Descriptor::Psu3(q) => write!(f, "PSU(3,{q})"),
            Descriptor::Suzuki(q) => write!(f, "Sz({q})"),
            Descriptor::J1 => write!(f, "J1"),
            Descriptor::Product(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    t.fmt_term(f)?;
                }
                Ok(())
            }
            Descriptor::Wreath(a, b) => {
                a.fmt_atom(f)?;
                write!(f, " wr ")?;
                b.fmt_atom(f)
            }
            Descriptor::Extension(base, k) => {
                match base.as_ref() {
                    Descriptor::Wreath(..) => write!(f, "{base}")?,
                    other => other.fmt_atom(f)?,
                }
                write!(f, ".{k}")
            }
        }
    }
}
