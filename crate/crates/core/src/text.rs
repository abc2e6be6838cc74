//! Line-oriented text formats.
//!
//! `.alg`:
//! ```text
//! # comment
//! dim 4
//! basis 1 x y x^2
//! generators x y
//! mul x x = 1*x^2
//! mul x y = 1/2*x^2 + (1+i)*y
//! ```
//! Products with the unity are implicit; each unordered pair is given at
//! most once and missing pairs are zero.
//!
//! `.pres`:
//! ```text
//! vars S1 S2
//! rel S1^2 - S2
//! truncate 5
//! ```

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::algebra::{LocalAlgebra, Presentation, Table};
use crate::exact::{parse_poly, Scalar};
use crate::{Error, Result};

struct Line<'a> {
    number: usize,
    keyword: &'a str,
    rest: &'a str,
    /// 1-based column where `rest` starts.
    rest_col: usize,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest_start = raw.len() - rest.len();
        Some(Line {
            number: k + 1,
            keyword,
            rest: rest.trim_end(),
            rest_col: rest_start + 1,
        })
    })
}

fn err(line: &Line, col: usize, msg: impl Into<String>) -> Error {
    Error::parse(line.number, col, msg)
}

/// Position of a byte offset inside `rest` as a 1-based column.
fn col_of(line: &Line, offset: usize) -> usize {
    line.rest_col + line.rest[..offset].chars().count()
}

/// Splits `text` into signed summands at top-level `+`/`-`, returning the
/// byte offset of each summand's body.
fn summands(text: &str) -> Vec<(bool, usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    let bytes = text.as_bytes();
    for (k, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let prev = text[..k].trim_end();
                // A sign right after an operator belongs to the coefficient.
                if prev.ends_with(['*', '/', '^']) {
                    continue;
                }
                if !prev.is_empty() || k > 0 && !text[start..k].trim().is_empty() {
                    out.push((negative, start, &text[start..k]));
                }
                negative = b == b'-';
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push((negative, start, &text[start..]));
    out
}

fn parse_combination(line: &Line, offset: usize, text: &str, labels: &[String]) -> Result<Vec<Scalar>> {
    let mut v = vec![Scalar::zero(); labels.len()];
    if text.trim() == "0" {
        return Ok(v);
    }
    for (negative, start, term) in summands(text) {
        let at = offset + start;
        let term_trim = term.trim();
        let lead = term.len() - term.trim_start().len();
        if term_trim.is_empty() {
            return Err(err(line, col_of(line, at), "empty term"));
        }
        let (coeff_text, name) = match term_trim.rsplit_once('*') {
            Some((c, n)) if labels.iter().any(|l| l == n.trim()) => (Some(c), n.trim()),
            _ => (None, term_trim),
        };
        let Some(index) = labels.iter().position(|l| l == name) else {
            return Err(err(
                line,
                col_of(line, at + lead),
                format!("term '{term_trim}' does not end in a basis name"),
            ));
        };
        let coeff = match coeff_text {
            Some(c) => parse_poly(c, &[])
                .map_err(|e| e.at_line(line.number, col_of(line, at + lead) - 1))
                .and_then(|p| {
                    if p.is_constant() {
                        Ok(p.constant_term())
                    } else {
                        Err(err(line, col_of(line, at + lead), format!("'{c}' is not a scalar")))
                    }
                })?,
            None => Scalar::one(),
        };
        let coeff = if negative { -coeff } else { coeff };
        v[index] = &v[index] + &coeff;
    }
    Ok(v)
}

/// Parses a `.alg` file. The result is not validated.
pub fn parse_algebra(text: &str) -> Result<LocalAlgebra> {
    let mut dim: Option<(usize, usize)> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut gens: Option<(usize, Vec<String>)> = None;
    let mut table = Table::new();
    let mut seen = BTreeMap::new();
    for line in lines(text) {
        match line.keyword {
            "dim" => {
                let n = line
                    .rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| err(&line, line.rest_col, "expected a dimension"))?;
                dim = Some((n, line.number));
            }
            "basis" => {
                let names: Vec<String> = line.rest.split_whitespace().map(String::from).collect();
                if names.is_empty() {
                    return Err(err(&line, line.rest_col, "empty basis"));
                }
                labels = Some(names);
            }
            "generators" => {
                gens = Some((line.number, line.rest.split_whitespace().map(String::from).collect()));
            }
            "mul" => {
                let labels = labels
                    .as_ref()
                    .ok_or_else(|| err(&line, 1, "'mul' before 'basis'"))?;
                let (lhs, rhs) = line
                    .rest
                    .split_once('=')
                    .ok_or_else(|| err(&line, line.rest_col, "expected '='"))?;
                let names: Vec<&str> = lhs.split_whitespace().collect();
                let [a, b] = names.as_slice() else {
                    return Err(err(&line, line.rest_col, "expected two basis names before '='"));
                };
                let index = |n: &str| {
                    labels
                        .iter()
                        .position(|l| l == n)
                        .ok_or_else(|| err(&line, line.rest_col, format!("unknown basis name '{n}'")))
                };
                let (i, j) = (index(a)?, index(b)?);
                if i == 0 || j == 0 {
                    return Err(err(&line, line.rest_col, "products with the unity are implicit"));
                }
                let key = (i.min(j), i.max(j));
                if let Some(prev) = seen.insert(key, line.number) {
                    return Err(err(&line, line.rest_col, format!("product already given on line {prev}")));
                }
                let v = parse_combination(&line, lhs.len() + 1, rhs, labels)?;
                table.insert((i, j), v.clone());
                table.insert((j, i), v);
            }
            other => return Err(err(&line, 1, format!("unknown keyword '{other}'"))),
        }
    }
    let labels = labels.ok_or_else(|| Error::parse(1, 1, "missing 'basis' line"))?;
    if let Some((n, at)) = dim {
        if n != labels.len() {
            return Err(Error::parse(
                at,
                1,
                format!("dim {n} but the basis has {} names", labels.len()),
            ));
        }
    }
    let a = LocalAlgebra::from_table(labels, &table)?;
    match gens {
        Some((at, names)) => {
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            a.with_generator_labels(&names).map_err(|e| Error::parse(at, 1, e.to_string()))
        }
        None => Ok(a),
    }
}

fn format_coeff(c: &Scalar) -> String {
    if c.is_real() || c.re().is_zero() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

fn format_sum(v: &[Scalar], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_real() && c.re().is_negative();
        let body = format!("{}*{name}", format_coeff(&if negative { -c.clone() } else { c.clone() }));
        match (out.is_empty(), negative) {
            (true, true) => out = format!("-{body}"),
            (true, false) => out = body,
            (false, true) => out += &format!(" - {body}"),
            (false, false) => out += &format!(" + {body}"),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Prints a `.alg` file; `parse_algebra` reads it back to an equal algebra.
pub fn print_algebra(a: &LocalAlgebra) -> String {
    let labels = a.labels();
    let mut out = format!("dim {}\nbasis {}\n", a.dim(), labels.join(" "));
    if let Some(gens) = a.generators() {
        let names: Option<Vec<&str>> = gens
            .iter()
            .map(|g| {
                let nz: Vec<usize> = (0..g.len()).filter(|&k| !g[k].is_zero()).collect();
                match nz.as_slice() {
                    [k] if g[*k].is_one() => Some(labels[*k].as_str()),
                    _ => None,
                }
            })
            .collect();
        match names {
            Some(names) => out += &format!("generators {}\n", names.join(" ")),
            None => out += "# generators are not basis vectors and are omitted\n",
        }
    }
    for ((i, j), v) in a.table() {
        out += &format!("mul {} {} = {}\n", labels[i], labels[j], format_sum(&v, labels));
    }
    out
}

/// Parses a `.pres` file.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut vars: Option<Vec<String>> = None;
    let mut rels = Vec::new();
    let mut truncation = None;
    for line in lines(text) {
        match line.keyword {
            "vars" => {
                let names: Vec<String> = line.rest.split_whitespace().map(String::from).collect();
                if names.is_empty() {
                    return Err(err(&line, line.rest_col, "no variables"));
                }
                vars = Some(names);
            }
            "rel" => {
                let vars = vars.as_ref().ok_or_else(|| err(&line, 1, "'rel' before 'vars'"))?;
                let p = parse_poly(line.rest, vars).map_err(|e| e.at_line(line.number, line.rest_col - 1))?;
                rels.push(p);
            }
            "truncate" => {
                let d = line
                    .rest
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| err(&line, line.rest_col, "expected a degree"))?;
                truncation = Some(d);
            }
            other => return Err(err(&line, 1, format!("unknown keyword '{other}'"))),
        }
    }
    let vars = vars.ok_or_else(|| Error::parse(1, 1, "missing 'vars' line"))?;
    let p = Presentation::new(vars, rels)?;
    Ok(match truncation {
        Some(d) => p.with_truncation(d),
        None => p,
    })
}

pub fn print_presentation(p: &Presentation) -> String {
    let mut out = format!("vars {}\n", p.vars().join(" "));
    for r in p.relations() {
        out += &format!("rel {}\n", r.display(p.vars()));
    }
    if let Some(d) = p.truncation() {
        out += &format!("truncate {d}\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadric::canonical_quadric_algebra;

    #[test]
    fn canonical_round_trip() {
        let a = canonical_quadric_algebra(2);
        let text = print_algebra(&a);
        assert_eq!(
            text,
            "dim 4\nbasis 1 S1 S2 S1^2\ngenerators S1 S2\nmul S1 S1 = 1*S1^2\nmul S2 S2 = 1*S1^2\n"
        );
        let b = parse_algebra(&text).unwrap();
        assert_eq!(b, a);
        assert!(b.validate().passed());
    }

    #[test]
    fn coefficients_and_signs() {
        let text = "# test\nbasis 1 x y\nmul x x = -1/2*y + (1+i)*y - y\n";
        let a = parse_algebra(text).unwrap();
        assert_eq!(a.product(1, 1)[2], "-1/2+i".parse().unwrap());
        assert_eq!(print_algebra(&a), "dim 3\nbasis 1 x y\nmul x x = (-1/2+i)*y\n");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_algebra("basis 1 x\nmul x x = 1//2*x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_algebra("basis 1 x\nmul x z = x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_algebra("dim 3\nbasis 1 x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = parse_presentation("vars x\nrel x^2 +* x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, col, .. } if col > 4), "{e}");
    }

    #[test]
    fn presentation_round_trip() {
        let text = "vars S1 S2 S3 S4\nrel S1^2 - S3\nrel S1*S2\nrel S2^2\nrel S1*S3 - S4\nrel S1*S4\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.relations().len(), 5);
        let again = parse_presentation(&print_presentation(&p)).unwrap();
        assert_eq!(again.relations(), p.relations());
        let t = parse_presentation("vars x\nrel x^3\ntruncate 4\n").unwrap();
        assert_eq!(t.truncation(), Some(4));
    }
}
