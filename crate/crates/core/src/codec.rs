//! Plain-text profile format.
//!
//! ```text
//! <m> <n>
//! <m ids, top first>   (n rows)
//! ```
//!
//! The parser accepts runs of spaces or tabs and an optional final newline.
//! The emitter writes single spaces and always ends with a newline.

use crate::error::{Error, Result};
use crate::ordering::{check_permutation, Ordering};
use crate::profile::Profile;

pub fn parse(text: &str) -> Result<Profile> {
    let mut lines = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));
    let header = lines
        .next()
        .ok_or_else(|| Error::MalformedHeader("empty input".into()))?;
    let fields = split_fields(header);
    if fields.len() != 2 {
        return Err(Error::MalformedHeader(format!(
            "expected `<m> <n>`, got {header:?}"
        )));
    }
    let m = parse_count(fields[0], "m")?;
    let n = parse_count(fields[1], "n")?;

    let mut rows: Vec<&str> = lines.collect();
    // A trailing newline leaves one empty piece behind.
    if rows.last().is_some_and(|l| l.trim_matches([' ', '\t']).is_empty()) {
        rows.pop();
    }
    if rows.len() != n {
        return Err(Error::WrongRowCount {
            expected: n,
            found: rows.len(),
        });
    }

    let mut orderings = Vec::with_capacity(n);
    for (i, line) in rows.iter().enumerate() {
        let row = i + 1;
        let ids = split_fields(line)
            .into_iter()
            .map(|f| {
                f.parse::<usize>().map_err(|_| Error::MalformedRow {
                    row,
                    detail: format!("`{f}` is not a non-negative integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if ids.len() != m {
            return Err(Error::MalformedRow {
                row,
                detail: format!("expected {m} ids, found {}", ids.len()),
            });
        }
        if let Err(Error::NotAPermutation { detail, .. }) = check_permutation(&ids) {
            return Err(Error::RowNotAPermutation { row, m, detail });
        }
        orderings.push(Ordering::from_vec_unchecked(ids));
    }
    Profile::new(m, orderings)
}

pub fn emit(u: &Profile) -> String {
    let mut out = format!("{} {}\n", u.m(), u.n());
    for o in u.orderings() {
        out.push_str(&o.to_string());
        out.push('\n');
    }
    out
}

fn split_fields(line: &str) -> Vec<&str> {
    line.split([' ', '\t']).filter(|f| !f.is_empty()).collect()
}

fn parse_count(field: &str, name: &str) -> Result<usize> {
    match field.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(Error::MalformedHeader(format!(
            "{name} must be a positive integer, got `{field}`"
        ))),
    }
}
