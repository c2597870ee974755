//! The furtherness matrix and what can be read off it.

use crate::point_set::PointSet;
use crate::space::FinSpace;

/// `entries[i][j] = Ψ(a_i, a_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FurtherMatrix {
    labels: Vec<String>,
    entries: Vec<Vec<u8>>,
}

/// Facts about a single point derived from its row and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointReport {
    pub index: usize,
    pub row_zero_count: usize,
    pub column_zero_count: usize,
    /// `{y | Ψ(x,y) = 0}`, which is `U_x`.
    pub row_zeros: PointSet,
    /// `{y | Ψ(y,x) = 0}`, which is the closure of `{x}`.
    pub column_zeros: PointSet,
    /// `{x}` is open: the only zero in the row is the diagonal.
    pub open_singleton: bool,
    /// Zero row.
    pub maximum: bool,
    /// Zero column.
    pub minimum: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixReport {
    pub points: Vec<PointReport>,
    pub rows_distinct: bool,
    pub columns_distinct: bool,
    /// Same as `rows_distinct`.
    pub is_t0: bool,
    /// Sufficient condition for contractibility.
    pub has_zero_row_or_column: bool,
}

impl MatrixReport {
    pub fn open_singletons(&self) -> PointSet {
        self.points.iter().filter(|p| p.open_singleton).map(|p| p.index).collect()
    }

    pub fn maximum_points(&self) -> PointSet {
        self.points.iter().filter(|p| p.maximum).map(|p| p.index).collect()
    }

    pub fn minimum_points(&self) -> PointSet {
        self.points.iter().filter(|p| p.minimum).map(|p| p.index).collect()
    }
}

impl FinSpace {
    pub fn furtherness_matrix(&self) -> FurtherMatrix {
        let n = self.n();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| self.furtherness(i, j) as u8).collect())
            .collect();
        FurtherMatrix {
            labels: self.labels().to_vec(),
            entries,
        }
    }
}

impl FurtherMatrix {
    /// Builds a matrix from raw rows.
    pub fn from_rows(labels: Vec<String>, entries: Vec<Vec<u8>>) -> Self {
        assert_eq!(labels.len(), entries.len());
        assert!(entries.iter().all(|r| r.len() == labels.len()));
        FurtherMatrix { labels, entries }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        u32::from(self.entries[i][j])
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i]
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        self.entries.iter().map(|r| r[j]).collect()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.entries
    }

    pub fn max_entry(&self) -> u32 {
        self.entries
            .iter()
            .flatten()
            .copied()
            .max()
            .map_or(0, u32::from)
    }

    /// Every entry of row `x` is at most the matching entry of row `y`.
    pub fn row_dominates(&self, x: usize, y: usize) -> bool {
        self.entries[x]
            .iter()
            .zip(&self.entries[y])
            .all(|(a, b)| a <= b)
    }

    pub fn row_zeros(&self, x: usize) -> PointSet {
        (0..self.n()).filter(|&y| self.entries[x][y] == 0).collect()
    }

    pub fn column_zeros(&self, x: usize) -> PointSet {
        (0..self.n()).filter(|&y| self.entries[y][x] == 0).collect()
    }

    pub fn rows_distinct(&self) -> bool {
        all_distinct((0..self.n()).map(|i| self.entries[i].clone()))
    }

    pub fn columns_distinct(&self) -> bool {
        all_distinct((0..self.n()).map(|j| self.column(j)))
    }

    pub fn report(&self) -> MatrixReport {
        let n = self.n();
        let points: Vec<PointReport> = (0..n)
            .map(|x| {
                let row_zeros = self.row_zeros(x);
                let column_zeros = self.column_zeros(x);
                PointReport {
                    index: x,
                    row_zero_count: row_zeros.len(),
                    column_zero_count: column_zeros.len(),
                    row_zeros,
                    column_zeros,
                    open_singleton: row_zeros.len() == 1,
                    maximum: row_zeros.len() == n,
                    minimum: column_zeros.len() == n,
                }
            })
            .collect();
        let has_zero_row_or_column = points.iter().any(|p| p.maximum || p.minimum);
        let rows_distinct = self.rows_distinct();
        MatrixReport {
            points,
            rows_distinct,
            columns_distinct: self.columns_distinct(),
            is_t0: rows_distinct,
            has_zero_row_or_column,
        }
    }
}

fn all_distinct<T: Eq + std::hash::Hash>(items: impl Iterator<Item = T>) -> bool {
    let mut seen = std::collections::HashSet::new();
    items.into_iter().all(|it| seen.insert(it))
}

impl std::fmt::Display for FurtherMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let width = self
            .labels
            .iter()
            .map(|l| l.chars().count())
            .chain(std::iter::once(2))
            .max()
            .unwrap_or(2);
        write!(f, "{:width$}", "")?;
        for l in &self.labels {
            write!(f, " {l:>width$}")?;
        }
        writeln!(f)?;
        for (l, row) in self.labels.iter().zip(&self.entries) {
            write!(f, "{l:>width$}")?;
            for v in row {
                write!(f, " {v:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
