//! The two comparison grids: fixed `(n, m)` cells and interval cells.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A fixed count or an inclusive interval, as printed in report rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Fixed(usize),
    Interval(usize, usize),
}

impl Label {
    pub fn from_bounds(lo: usize, hi: usize) -> Self {
        if lo == hi {
            Label::Fixed(lo)
        } else {
            Label::Interval(lo, hi)
        }
    }

    pub fn bounds(self) -> (usize, usize) {
        match self {
            Label::Fixed(v) => (v, v),
            Label::Interval(lo, hi) => (lo, hi),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Fixed(v) => write!(f, "{v}"),
            Label::Interval(lo, hi) => write!(f, "{lo}-{hi}"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Report(format!("bad n/m label {s:?}"));
        match s.split_once('-') {
            Some((lo, hi)) => Ok(Label::Interval(
                lo.parse().map_err(|_| bad())?,
                hi.parse().map_err(|_| bad())?,
            )),
            None => s.parse().map(Label::Fixed).map_err(|_| bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub n: Label,
    pub m: Label,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grid {
    /// Fixed `n` and `m`: 5 x 5 small cells plus the dense `n = 90` ladder.
    Table1,
    /// `n` and `m` drawn per graph from intervals.
    Table2,
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table1" => Ok(Grid::Table1),
            "table2" => Ok(Grid::Table2),
            _ => Err(Error::InvalidParameter(format!(
                "unknown grid {s:?} (expected table1 or table2)"
            ))),
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Grid::Table1 => "table1",
            Grid::Table2 => "table2",
        })
    }
}

impl Grid {
    pub fn cells(self) -> Vec<Cell> {
        match self {
            Grid::Table1 => table1_cells(),
            Grid::Table2 => table2_cells(),
        }
    }
}

fn table1_cells() -> Vec<Cell> {
    let small = [10, 30, 50, 70, 90];
    let mut cells: Vec<Cell> = small
        .iter()
        .flat_map(|&n| {
            small.iter().map(move |&m| Cell {
                n: Label::Fixed(n),
                m: Label::Fixed(m),
            })
        })
        .collect();
    cells.extend((200..=7800).step_by(400).map(|m| Cell {
        n: Label::Fixed(90),
        m: Label::Fixed(m),
    }));
    cells
}

fn table2_cells() -> Vec<Cell> {
    // (n interval, m step, number of m intervals)
    let blocks = [
        ((10, 30), 100, 8),
        ((30, 50), 300, 8),
        ((50, 70), 500, 9),
        ((70, 90), 1000, 8),
    ];
    blocks
        .iter()
        .flat_map(|&((n_lo, n_hi), step, rungs)| {
            (0..rungs).map(move |k| Cell {
                n: Label::Interval(n_lo, n_hi),
                m: Label::Interval(k * step + 1, (k + 1) * step),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_counts() {
        assert_eq!(Grid::Table1.cells().len(), 45);
        assert_eq!(Grid::Table2.cells().len(), 33);
    }

    #[test]
    fn table1_contents() {
        let cells = Grid::Table1.cells();
        assert_eq!(
            cells[0],
            Cell {
                n: Label::Fixed(10),
                m: Label::Fixed(10)
            }
        );
        assert_eq!(
            cells[24],
            Cell {
                n: Label::Fixed(90),
                m: Label::Fixed(90)
            }
        );
        assert_eq!(cells[25].m, Label::Fixed(200));
        assert_eq!(cells[44].m, Label::Fixed(7800));
        assert!(cells[25..].iter().all(|c| c.n == Label::Fixed(90)));
    }

    #[test]
    fn table2_contents() {
        let cells = Grid::Table2.cells();
        assert_eq!(cells[0].m, Label::Interval(1, 100));
        assert_eq!(cells[7].m, Label::Interval(701, 800));
        assert_eq!(
            cells[15],
            Cell {
                n: Label::Interval(30, 50),
                m: Label::Interval(2101, 2400)
            }
        );
        assert_eq!(
            cells[24],
            Cell {
                n: Label::Interval(50, 70),
                m: Label::Interval(4001, 4500)
            }
        );
        assert_eq!(
            cells[32],
            Cell {
                n: Label::Interval(70, 90),
                m: Label::Interval(7001, 8000)
            }
        );
    }

    #[test]
    fn label_text() {
        for l in [Label::Fixed(90), Label::Interval(1, 100)] {
            assert_eq!(l.to_string().parse::<Label>().unwrap(), l);
        }
        assert_eq!(Label::from_bounds(3, 3), Label::Fixed(3));
        assert!("x".parse::<Label>().is_err());
        assert_eq!("table2".parse::<Grid>().unwrap(), Grid::Table2);
        assert!("table3".parse::<Grid>().is_err());
    }
}
