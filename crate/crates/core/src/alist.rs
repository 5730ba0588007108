//! MacKay's alist format for sparse binary matrices.
//!
//! ```text
//! n m                      columns, rows
//! max_col_w max_row_w
//! col weights (n numbers)
//! row weights (m numbers)
//! n lines: 1-based row indices of each column, padded with 0 to max_col_w
//! m lines: 1-based column indices of each row, padded with 0 to max_row_w
//! ```

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

pub fn to_alist(h: &BitMatrix) -> String {
    let (m, n) = (h.rows(), h.cols());
    let t = h.transpose();
    let cols: Vec<Vec<usize>> = (0..n).map(|j| t.row_ones(j).collect()).collect();
    let rows: Vec<Vec<usize>> = (0..m).map(|i| h.row_ones(i).collect()).collect();
    let max_c = cols.iter().map(Vec::len).max().unwrap_or(0);
    let max_r = rows.iter().map(Vec::len).max().unwrap_or(0);

    let join = |it: &mut dyn Iterator<Item = usize>| {
        it.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    };
    let mut out = String::new();
    writeln!(out, "{n} {m}").unwrap();
    writeln!(out, "{max_c} {max_r}").unwrap();
    writeln!(out, "{}", join(&mut cols.iter().map(Vec::len))).unwrap();
    writeln!(out, "{}", join(&mut rows.iter().map(Vec::len))).unwrap();
    for (lists, width) in [(&cols, max_c), (&rows, max_r)] {
        for list in lists {
            let mut padded = list.iter().map(|&x| x + 1).chain(std::iter::repeat(0));
            writeln!(out, "{}", join(&mut padded.by_ref().take(width))).unwrap();
        }
    }
    out
}

pub fn from_alist(text: &str) -> Result<BitMatrix> {
    let err = |msg: String| Error::Alist(msg);
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let mut numbers = |what: &str| -> Result<Vec<usize>> {
        let line = lines.next().ok_or_else(|| err(format!("missing {what}")))?;
        line.split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| err(format!("bad number '{t}' in {what}")))
            })
            .collect()
    };

    let header = numbers("header")?;
    let [n, m] = header[..] else {
        return Err(err("header must be 'n m'".into()));
    };
    let maxes = numbers("max weights")?;
    let [max_c, max_r] = maxes[..] else {
        return Err(err(
            "second line must be 'max_col_weight max_row_weight'".into()
        ));
    };
    let col_w = numbers("column weights")?;
    let row_w = numbers("row weights")?;
    if n > 0 && col_w.len() != n || m > 0 && row_w.len() != m {
        return Err(err("weight list lengths disagree with the header".into()));
    }
    if col_w.iter().copied().max().unwrap_or(0) != max_c
        || row_w.iter().copied().max().unwrap_or(0) != max_r
    {
        return Err(err("max weights disagree with the weight lists".into()));
    }

    let mut h = BitMatrix::zeros(m, n);
    for (j, &w) in col_w
        .iter()
        .enumerate()
        .take(if max_c == 0 { 0 } else { n })
    {
        let list = numbers("column list")?;
        let entries: Vec<usize> = list.iter().copied().filter(|&x| x != 0).collect();
        if entries.len() != w {
            return Err(err(format!(
                "column {} has {} entries, weight says {w}",
                j + 1,
                entries.len()
            )));
        }
        for r in entries {
            if r > m {
                return Err(err(format!(
                    "row index {r} out of range in column {}",
                    j + 1
                )));
            }
            h.set(r - 1, j, true);
        }
    }
    for (i, &w) in row_w
        .iter()
        .enumerate()
        .take(if max_r == 0 { 0 } else { m })
    {
        let list = numbers("row list")?;
        let entries: Vec<usize> = list.iter().copied().filter(|&x| x != 0).collect();
        if entries.len() != w {
            return Err(err(format!(
                "row {} has {} entries, weight says {w}",
                i + 1,
                entries.len()
            )));
        }
        let expected: Vec<usize> = h.row_ones(i).map(|c| c + 1).collect();
        let mut got = entries;
        got.sort_unstable();
        if got != expected {
            return Err(err(format!(
                "row {} disagrees with the column lists",
                i + 1
            )));
        }
    }
    Ok(h)
}

pub fn write_alist(h: &BitMatrix, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_alist(h))?;
    Ok(())
}

pub fn read_alist(path: impl AsRef<Path>) -> Result<BitMatrix> {
    from_alist(&std::fs::read_to_string(path)?)
}
