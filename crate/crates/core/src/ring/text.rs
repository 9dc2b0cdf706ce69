//! The line-oriented `meadowspec` file format for [`RingSpec`].
//!
//! ```text
//! meadowspec 1
//! order 2
//! zero 0
//! one 1
//! add
//! 0 1
//! 1 0
//! mul
//! 0 0
//! 0 1
//! ```
//!
//! `#` starts a comment that runs to the end of the line; blank lines are
//! ignored.

use std::fmt::Write as _;

use thiserror::Error;

use super::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

struct Lines<'a> {
    inner: Box<dyn Iterator<Item = (usize, &'a str)> + 'a>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let inner = text.lines().enumerate().filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then_some((i + 1, body))
        });
        Lines {
            inner: Box::new(inner),
            last: 0,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str), FormatError> {
        match self.inner.next() {
            Some((n, l)) => {
                self.last = n;
                Ok((n, l))
            }
            None => Err(err(
                self.last + 1,
                format!("unexpected end of input, expected {what}"),
            )),
        }
    }

    fn keyword_value(&mut self, key: &str) -> Result<(usize, usize), FormatError> {
        let (n, line) = self.next(key)?;
        let mut parts = line.split_whitespace();
        if parts.next() != Some(key) {
            return Err(err(
                n,
                format!("expected `{key} <integer>`, found `{line}`"),
            ));
        }
        let value = parts
            .next()
            .ok_or_else(|| err(n, format!("missing value after `{key}`")))?;
        if parts.next().is_some() {
            return Err(err(n, format!("trailing tokens after `{key} {value}`")));
        }
        let v = value
            .parse()
            .map_err(|_| err(n, format!("`{value}` is not a non-negative integer")))?;
        Ok((n, v))
    }

    fn table(&mut self, name: &str, order: usize) -> Result<Vec<usize>, FormatError> {
        let (n, header) = self.next(name)?;
        if header != name {
            return Err(err(
                n,
                format!("expected `{name}` header, found `{header}`"),
            ));
        }
        let mut out = Vec::with_capacity(order * order);
        for row in 0..order {
            let (n, line) = self.next(&format!("row {row} of the {name} table"))?;
            let before = out.len();
            for tok in line.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| err(n, format!("`{tok}` is not a non-negative integer")))?;
                out.push(v);
            }
            let got = out.len() - before;
            if got != order {
                return Err(err(
                    n,
                    format!("{name} row {row} has {got} entries, expected {order}"),
                ));
            }
        }
        Ok(out)
    }
}

/// Parses a `meadowspec` document. Only the syntax is checked here; closure
/// and the ring axioms are checked by [`super::load_ring`].
pub fn parse(text: &str) -> Result<RingSpec, FormatError> {
    let mut lines = Lines::new(text);
    let (n, magic) = lines.next("`meadowspec 1`")?;
    if magic.split_whitespace().collect::<Vec<_>>() != ["meadowspec", "1"] {
        return Err(err(n, format!("expected `meadowspec 1`, found `{magic}`")));
    }
    let (n, order) = lines.keyword_value("order")?;
    if order == 0 {
        return Err(err(n, "order must be at least 1"));
    }
    let (_, zero) = lines.keyword_value("zero")?;
    let (_, one) = lines.keyword_value("one")?;
    let add = lines.table("add", order)?;
    let mul = lines.table("mul", order)?;
    if let Some((n, extra)) = lines.inner.next() {
        return Err(err(n, format!("unexpected trailing content `{extra}`")));
    }
    Ok(RingSpec {
        order,
        zero,
        one,
        add,
        mul,
    })
}

/// Renders a spec in canonical form (no comments, single spaces).
pub fn render(spec: &RingSpec) -> String {
    let mut out = String::new();
    let n = spec.order;
    writeln!(out, "meadowspec 1").unwrap();
    writeln!(out, "order {n}").unwrap();
    writeln!(out, "zero {}", spec.zero).unwrap();
    writeln!(out, "one {}", spec.one).unwrap();
    for (name, table) in [("add", &spec.add), ("mul", &spec.mul)] {
        writeln!(out, "{name}").unwrap();
        for row in table.chunks(n) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", cells.join(" ")).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{load_ring, FiniteCommRing, RingOps};

    const GF2: &str = "\
# the field with two elements
meadowspec 1
order 2   # carrier size
zero 0
one 1

add
0 1
1 0
mul
0 0
0 1
";

    #[test]
    fn parses_with_comments() {
        let spec = parse(GF2).unwrap();
        assert_eq!(spec.order, 2);
        assert_eq!(spec.add, vec![0, 1, 1, 0]);
        assert_eq!(spec.mul, vec![0, 0, 0, 1]);
        let r = load_ring(&spec).unwrap();
        assert_eq!(r.mul(r.one(), r.one()), r.one());
    }

    #[test]
    fn render_is_canonical() {
        let spec = parse(GF2).unwrap();
        let text = render(&spec);
        assert!(text.starts_with("meadowspec 1\norder 2\nzero 0\none 1\nadd\n0 1\n"));
        assert_eq!(parse(&text).unwrap(), spec);
    }

    #[test]
    fn roundtrip_of_structured_ring() {
        let r = FiniteCommRing::galois(3, 2).unwrap();
        let back = load_ring(&parse(&render(&r.to_spec())).unwrap()).unwrap();
        assert_eq!(back.to_spec(), r.to_spec());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse("meadowspec 2\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse("meadowspec 1\norder x\n").unwrap_err();
        assert_eq!(e.line, 2);
        let bad_row = GF2.replace("1 0\nmul", "1\nmul");
        let e = parse(&bad_row).unwrap_err();
        assert_eq!(e.line, 9);
        assert!(e.message.contains("expected 2"));
        let e = parse("meadowspec 1\norder 2\nzero 0\n").unwrap_err();
        assert!(e.message.contains("end of input"));
        let e = parse(&format!("{GF2}extra\n")).unwrap_err();
        assert_eq!(e.line, 13);
        let e = parse("meadowspec 1\norder 0\n").unwrap_err();
        assert_eq!(e.line, 2);
    }
}
