//! Ring descriptors such as `zmod:10`, `gf:2^3`, `prod:(gf:2^1,zmod:5)` or
//! `file:ring.txt`.

use std::fmt;
use std::path::PathBuf;

use meadow_core::arith::is_prime;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Descriptor {
    Zmod(u64),
    Galois { p: u64, k: u32 },
    Product(Vec<Descriptor>),
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid ring descriptor `{input}`: {message}")]
pub struct DescriptorError {
    pub input: String,
    pub message: String,
}

struct Parser<'a> {
    input: &'a str,
    rest: &'a str,
}

impl<'a> Parser<'a> {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T, DescriptorError> {
        Err(DescriptorError {
            input: self.input.to_string(),
            message: message.into(),
        })
    }

    fn eat(&mut self, prefix: &str) -> bool {
        match self.rest.strip_prefix(prefix) {
            Some(r) => {
                self.rest = r;
                true
            }
            None => false,
        }
    }

    fn int<T: std::str::FromStr>(&mut self, what: &str) -> Result<T, DescriptorError> {
        let end = self
            .rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest.len());
        let (digits, rest) = self.rest.split_at(end);
        if digits.is_empty() {
            return self.fail(format!("expected {what}"));
        }
        match digits.parse() {
            Ok(v) => {
                self.rest = rest;
                Ok(v)
            }
            Err(_) => self.fail(format!("{what} `{digits}` is out of range")),
        }
    }

    fn desc(&mut self, nested: bool) -> Result<Descriptor, DescriptorError> {
        if self.eat("zmod:") {
            let n: u64 = self.int("a modulus")?;
            if n == 0 {
                return self.fail("zmod needs a modulus of at least 1");
            }
            Ok(Descriptor::Zmod(n))
        } else if self.eat("gf:") {
            let p: u64 = self.int("a prime")?;
            if !self.eat("^") {
                return self.fail("expected `^` in gf:P^K");
            }
            let k: u32 = self.int("an exponent")?;
            if !is_prime(p) {
                return self.fail(format!("{p} is not prime; write gf:P^K with P prime"));
            }
            if k == 0 {
                return self.fail("the exponent in gf:P^K must be at least 1");
            }
            Ok(Descriptor::Galois { p, k })
        } else if self.eat("prod:(") {
            let mut parts = vec![self.desc(true)?];
            while self.eat(",") {
                parts.push(self.desc(true)?);
            }
            if !self.eat(")") {
                return self.fail("expected `,` or `)` in prod:(...)");
            }
            if parts.len() < 2 {
                return self.fail("prod needs at least two factors");
            }
            Ok(Descriptor::Product(parts))
        } else if self.eat("file:") {
            let end = if nested {
                self.rest.find([',', ')']).unwrap_or(self.rest.len())
            } else {
                self.rest.len()
            };
            let (path, rest) = self.rest.split_at(end);
            if path.is_empty() {
                return self.fail("empty file path");
            }
            self.rest = rest;
            Ok(Descriptor::File(PathBuf::from(path)))
        } else {
            self.fail("expected zmod:N, gf:P^K, prod:(...) or file:PATH")
        }
    }
}

impl std::str::FromStr for Descriptor {
    type Err = DescriptorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser { input: s, rest: s };
        let d = parser.desc(false)?;
        if !parser.rest.is_empty() {
            return parser.fail(format!("unexpected trailing `{}`", parser.rest));
        }
        Ok(d)
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Zmod(n) => write!(f, "zmod:{n}"),
            Descriptor::Galois { p, k } => write!(f, "gf:{p}^{k}"),
            Descriptor::Product(parts) => {
                write!(f, "prod:(")?;
                for (i, d) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{d}")?;
                }
                write!(f, ")")
            }
            Descriptor::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}
