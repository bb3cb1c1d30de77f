use std::fmt;

use crate::error::{Error, Result};

/// A plane partition: rows of positive entries, non-increasing along rows
/// and down columns.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PlanePartition {
    rows: Vec<Vec<u64>>,
}

impl PlanePartition {
    pub fn new(mut rows: Vec<Vec<u64>>) -> Result<Self> {
        for r in &mut rows {
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        for (i, r) in rows.iter().enumerate() {
            if r.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidPartSeq(format!("row {} increases", i + 1)));
            }
            if i > 0 {
                let above = &rows[i - 1];
                if r.len() > above.len() || r.iter().zip(above).any(|(x, y)| x > y) {
                    return Err(Error::InvalidPartSeq(format!("column increases below row {i}")));
                }
            }
        }
        Ok(PlanePartition { rows })
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn weight(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join("/"))
    }
}

pub const MAX_PLANE_WEIGHT: u64 = 16;

/// All plane partitions of weight `n`, built row by row under the row
/// above.
pub fn enum_plane_partitions(n: u64) -> Result<Vec<PlanePartition>> {
    if n > MAX_PLANE_WEIGHT {
        return Err(Error::TooLarge(format!(
            "plane partitions of weight {n} > {MAX_PLANE_WEIGHT}"
        )));
    }
    let mut out = Vec::new();
    let mut rows = Vec::new();
    let top = vec![n; n as usize];
    rows_under(&top, n, &mut rows, &mut out);
    Ok(out)
}

fn rows_under(above: &[u64], remaining: u64, rows: &mut Vec<Vec<u64>>, out: &mut Vec<PlanePartition>) {
    if remaining == 0 {
        out.push(PlanePartition { rows: rows.clone() });
        return;
    }
    let mut row = Vec::new();
    each_row(above, remaining, &mut row, &mut |row| {
        let used: u64 = row.iter().sum();
        rows.push(row.to_vec());
        rows_under(row, remaining - used, rows, out);
        rows.pop();
    });
}

/// Non-empty non-increasing rows bounded entrywise by `above`, of total
/// at most `budget`.
fn each_row(above: &[u64], budget: u64, row: &mut Vec<u64>, f: &mut dyn FnMut(&[u64])) {
    let j = row.len();
    if j > 0 {
        f(row);
    }
    if j >= above.len() {
        return;
    }
    let cap = above[j].min(budget).min(row.last().copied().unwrap_or(u64::MAX));
    for v in 1..=cap {
        row.push(v);
        each_row(above, budget - v, row, f);
        row.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| enum_plane_partitions(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 6, 13, 24, 48]);
        for p in enum_plane_partitions(5).unwrap() {
            assert_eq!(PlanePartition::new(p.rows().to_vec()).unwrap(), p);
            assert_eq!(p.weight(), 5);
        }
    }

    #[test]
    fn validation() {
        assert!(PlanePartition::new(vec![vec![1, 2]]).is_err());
        assert!(PlanePartition::new(vec![vec![2, 1], vec![1, 1, 1]]).is_err());
        assert_eq!(
            PlanePartition::new(vec![vec![2, 1], vec![1]]).unwrap().to_string(),
            "[2,1/1]"
        );
    }
}
