//! The algebra table text format.
//!
//! ```text
//! # comment
//! order 2
//! zero 0
//! one 1
//! add
//! 0 1
//! 1 1
//! mul
//! 0 0
//! 0 1
//! ```
//!
//! Semilattice files start with `kind semilattice`, carry the join table in
//! the `add` block and omit `mul` and `one`.

use std::fmt::Write as _;

use hemiring::{AlgebraError, FiniteHemiring, FiniteSemilattice, OpTable};

/// Failure to read a table file.
#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    /// Malformed text.
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    /// Well-formed tables that violate the algebra's axioms.
    #[error("invalid algebra: {0}")]
    Algebra(#[from] AlgebraError),
}

/// Parsed contents of a table file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraFile {
    Hemiring(FiniteHemiring),
    Semilattice(FiniteSemilattice),
}

#[derive(Default)]
struct Raw {
    kind: Option<String>,
    order: Option<usize>,
    zero: Option<usize>,
    one: Option<usize>,
    add: Option<Vec<usize>>,
    mul: Option<Vec<usize>>,
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn number(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse().map_err(|_| {
        syntax(
            line,
            format!("expected a non-negative integer, found `{token}`"),
        )
    })
}

fn scan(text: &str) -> Result<Raw, ParseError> {
    let mut raw = Raw::default();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    while let Some((no, line)) = lines.next() {
        let mut words = line.split_whitespace();
        let key = words.next().unwrap_or_default();
        let args: Vec<&str> = words.collect();
        let single = |what: &str| -> Result<usize, ParseError> {
            match args.as_slice() {
                [v] => number(v, no),
                _ => Err(syntax(no, format!("`{what}` takes exactly one value"))),
            }
        };
        match key {
            "kind" => {
                let [v] = args.as_slice() else {
                    return Err(syntax(no, "`kind` takes exactly one value"));
                };
                if raw.kind.replace(v.to_string()).is_some() {
                    return Err(syntax(no, "duplicate `kind`"));
                }
            }
            "order" | "zero" | "one" => {
                let v = single(key)?;
                let slot = match key {
                    "order" => &mut raw.order,
                    "zero" => &mut raw.zero,
                    _ => &mut raw.one,
                };
                if slot.replace(v).is_some() {
                    return Err(syntax(no, format!("duplicate `{key}`")));
                }
            }
            "add" | "mul" => {
                if !args.is_empty() {
                    return Err(syntax(
                        no,
                        format!("`{key}` stands alone; rows follow on the next lines"),
                    ));
                }
                let n = raw
                    .order
                    .ok_or_else(|| syntax(no, format!("`{key}` block before `order`")))?;
                let mut entries = Vec::with_capacity(n * n);
                for row in 0..n {
                    let (rno, text) = lines.next().ok_or_else(|| {
                        syntax(no, format!("`{key}` block ends after {row} of {n} rows"))
                    })?;
                    let values = text
                        .split_whitespace()
                        .map(|t| number(t, rno))
                        .collect::<Result<Vec<_>, _>>()?;
                    if values.len() != n {
                        return Err(syntax(
                            rno,
                            format!("row has {} entries, expected {n}", values.len()),
                        ));
                    }
                    if let Some(&v) = values.iter().find(|&&v| v >= n) {
                        return Err(syntax(rno, format!("entry {v} out of range for order {n}")));
                    }
                    entries.extend(values);
                }
                let slot = if key == "add" {
                    &mut raw.add
                } else {
                    &mut raw.mul
                };
                if slot.replace(entries).is_some() {
                    return Err(syntax(no, format!("duplicate `{key}` block")));
                }
            }
            other => return Err(syntax(no, format!("unknown directive `{other}`"))),
        }
    }
    Ok(raw)
}

/// A file's tables before any axiom is checked.
#[derive(Clone, Debug)]
pub struct Tables {
    pub semilattice: bool,
    pub add: OpTable,
    pub mul: Option<OpTable>,
    pub zero: usize,
    pub one: Option<usize>,
}

/// Reads the tables without validating the algebra.
pub fn parse_tables(text: &str) -> Result<Tables, ParseError> {
    let raw = scan(text)?;
    let end = text.lines().count();
    let order = raw.order.ok_or_else(|| syntax(end, "missing `order`"))?;
    if order == 0 {
        return Err(ParseError::Algebra(AlgebraError::InvalidOrder(0)));
    }
    let zero = raw.zero.ok_or_else(|| syntax(end, "missing `zero`"))?;
    for (name, v) in [("zero", Some(zero)), ("one", raw.one)] {
        if let Some(v) = v.filter(|&v| v >= order) {
            return Err(syntax(
                end,
                format!("`{name}` {v} out of range for order {order}"),
            ));
        }
    }
    let add = OpTable::new(
        order,
        &raw.add.ok_or_else(|| syntax(end, "missing `add` block"))?,
    )?;
    match raw.kind.as_deref() {
        Some("semilattice") => {
            if raw.mul.is_some() || raw.one.is_some() {
                return Err(syntax(
                    end,
                    "semilattice files take no `mul` block or `one`",
                ));
            }
            Ok(Tables {
                semilattice: true,
                add,
                mul: None,
                zero,
                one: None,
            })
        }
        None | Some("hemiring") | Some("semiring") => {
            let mul = raw.mul.ok_or_else(|| syntax(end, "missing `mul` block"))?;
            Ok(Tables {
                semilattice: false,
                add,
                mul: Some(OpTable::new(order, &mul)?),
                zero,
                one: raw.one,
            })
        }
        Some(other) => Err(syntax(1, format!("unknown kind `{other}`"))),
    }
}

/// Parses either kind of file.
pub fn parse(text: &str) -> Result<AlgebraFile, ParseError> {
    let t = parse_tables(text)?;
    match t.mul {
        None => Ok(AlgebraFile::Semilattice(FiniteSemilattice::new(
            t.add, t.zero,
        )?)),
        Some(mul) => Ok(AlgebraFile::Hemiring(FiniteHemiring::new(
            t.add, mul, t.zero, t.one,
        )?)),
    }
}

/// Parses a hemiring file.
pub fn parse_hemiring(text: &str) -> Result<FiniteHemiring, ParseError> {
    match parse(text)? {
        AlgebraFile::Hemiring(r) => Ok(r),
        AlgebraFile::Semilattice(_) => {
            Err(syntax(1, "expected a hemiring file, found a semilattice"))
        }
    }
}

/// Parses a semilattice file.
pub fn parse_semilattice(text: &str) -> Result<FiniteSemilattice, ParseError> {
    match parse(text)? {
        AlgebraFile::Semilattice(m) => Ok(m),
        AlgebraFile::Hemiring(_) => Err(syntax(1, "expected `kind semilattice`")),
    }
}

fn write_block(out: &mut String, name: &str, t: &OpTable) {
    out.push_str(name);
    out.push('\n');
    let n = t.order();
    for a in 0..n {
        let row: Vec<String> = t.row(a).map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

fn header(out: &mut String, comments: &[&str]) {
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
}

/// Serializes a hemiring; `one` is written only when recorded.
pub fn write_hemiring(r: &FiniteHemiring, comments: &[&str]) -> String {
    let mut out = String::new();
    header(&mut out, comments);
    let _ = writeln!(out, "order {}", r.order());
    let _ = writeln!(out, "zero {}", r.zero());
    if let Some(one) = r.one() {
        let _ = writeln!(out, "one {one}");
    }
    write_block(&mut out, "add", r.add_table());
    write_block(&mut out, "mul", r.mul_table());
    out
}

/// Serializes a semilattice.
pub fn write_semilattice(m: &FiniteSemilattice, comments: &[&str]) -> String {
    let mut out = String::new();
    header(&mut out, comments);
    out.push_str("kind semilattice\n");
    let _ = writeln!(out, "order {}", m.order());
    let _ = writeln!(out, "zero {}", m.zero());
    write_block(&mut out, "add", m.join_table());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hemiring::constructions::{boolean_b, two_zero_mult};

    const B: &str = "# Boolean semifield\norder 2\nzero 0\none 1\nadd\n0 1\n1 1\nmul\n0 0\n0 1\n";

    #[test]
    fn parses_and_round_trips_b() {
        let b = parse_hemiring(B).unwrap();
        assert_eq!(b, boolean_b());
        assert_eq!(parse_hemiring(&write_hemiring(&b, &["x"])).unwrap(), b);
        let two = two_zero_mult();
        assert_eq!(parse_hemiring(&write_hemiring(&two, &[])).unwrap(), two);
    }

    #[test]
    fn semilattice_round_trip() {
        let m = FiniteSemilattice::diamond();
        let text = write_semilattice(&m, &[]);
        assert!(text.starts_with("kind semilattice\n"));
        assert_eq!(parse_semilattice(&text).unwrap(), m);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad_row = "order 2\nzero 0\nadd\n0 1\n1\nmul\n0 0\n0 1\n";
        match parse(bad_row) {
            Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 5),
            other => panic!("unexpected {other:?}"),
        }
        match parse("order 2\nzero 0\nfoo 3\n") {
            Err(ParseError::Syntax { line, message }) => {
                assert_eq!(line, 3);
                assert!(message.contains("foo"));
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse("order 2\nzero 0\nadd\n0 1\n1 7\n") {
            Err(ParseError::Syntax { line: 5, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn axiom_failures_are_reported() {
        let noncommutative =
            "order 3\nzero 0\nadd\n0 1 2\n1 1 2\n2 1 2\nmul\n0 0 0\n0 0 0\n0 0 0\n";
        assert!(matches!(
            parse(noncommutative),
            Err(ParseError::Algebra(AlgebraError::AxiomViolation { .. }))
        ));
    }
}
