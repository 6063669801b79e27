//! Plain-text diagrams: Young, 2-modular, the centered Sylvester layout and
//! the alternating shifted layouts.

use std::fmt::Write as _;

use crate::bijections::{require, shifted_layout, sylvester_inverse_from_rows};
use crate::error::Result;
use crate::{Partition, PartitionClass};

/// A box label. `Blank` boxes count 1 toward cell totals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Blank,
    One,
    Two,
}

impl Cell {
    pub fn value(self) -> u64 {
        match self {
            Cell::Blank | Cell::One => 1,
            Cell::Two => 2,
        }
    }

    fn glyph(self) -> char {
        match self {
            Cell::Blank => '#',
            Cell::One => '1',
            Cell::Two => '2',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    /// Absolute column of the first cell.
    pub offset: usize,
    pub cells: Vec<Cell>,
}

impl Row {
    pub fn end(&self) -> usize {
        self.offset + self.cells.len()
    }
}

/// Rows of cells. The minimum offset is always 0.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagram {
    pub rows: Vec<Row>,
    /// Column at which the centered Sylvester layout splits into left and
    /// right halves; cells in columns `< split` are on the left.
    pub split: Option<usize>,
}

fn two_modular_cells(part: u64) -> Vec<Cell> {
    let mut cells = vec![Cell::Two; part.div_ceil(2) as usize];
    if part % 2 == 1 {
        *cells.last_mut().expect("odd parts are nonzero") = Cell::One;
    }
    cells
}

pub fn render_young(lambda: &Partition) -> Diagram {
    Diagram {
        rows: lambda
            .parts()
            .iter()
            .map(|&p| Row {
                offset: 0,
                cells: vec![Cell::Blank; p as usize],
            })
            .collect(),
        split: None,
    }
}

/// Row `i` holds `⌈λ_i/2⌉` boxes labelled 2, the last labelled 1 when `λ_i`
/// is odd.
pub fn render_two_modular(lambda: &Partition) -> Diagram {
    Diagram {
        rows: lambda
            .parts()
            .iter()
            .map(|&p| Row {
                offset: 0,
                cells: two_modular_cells(p),
            })
            .collect(),
        split: None,
    }
}

/// Each odd part `λ_i` is centered on the split with `(λ_i+1)/2` boxes to the
/// left and `(λ_i−1)/2` to the right.
pub fn render_sylvester_centered(lambda: &Partition) -> Result<Diagram> {
    require(lambda, PartitionClass::Odd)?;
    let split = lambda.largest().div_ceil(2) as usize;
    let rows = lambda
        .parts()
        .iter()
        .map(|&p| Row {
            offset: split - p.div_ceil(2) as usize,
            cells: vec![Cell::Blank; p as usize],
        })
        .collect();
    Ok(Diagram {
        rows,
        split: Some(split),
    })
}

/// The alternating layout of a distinct partition: even-numbered rows end
/// one column before the row above, odd-numbered rows start where the row
/// above starts. With `modular`, rows are the 2-modular rows of `μ`.
pub fn render_shifted(mu: &Partition, modular: bool) -> Result<Diagram> {
    require(mu, PartitionClass::Distinct)?;
    let cells: Vec<Vec<Cell>> = mu
        .parts()
        .iter()
        .map(|&p| {
            if modular {
                two_modular_cells(p)
            } else {
                vec![Cell::Blank; p as usize]
            }
        })
        .collect();
    let lengths: Vec<u64> = cells.iter().map(|c| c.len() as u64).collect();
    let rows = shifted_layout(&lengths)
        .into_iter()
        .zip(cells)
        .map(|((offset, _), cells)| Row { offset, cells })
        .collect();
    Ok(Diagram { rows, split: None })
}

impl Diagram {
    pub fn width(&self) -> usize {
        self.rows.iter().map(Row::end).max().unwrap_or(0)
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(|r| r.cells.len()).sum()
    }

    /// Sum of cell values: the weight of the partition drawn, for every style.
    pub fn label_sum(&self) -> u64 {
        self.rows
            .iter()
            .flat_map(|r| &r.cells)
            .map(|c| c.value())
            .sum()
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        (0..self.width())
            .map(|c| {
                self.rows
                    .iter()
                    .filter(|r| r.offset <= c && c < r.end())
                    .count()
            })
            .collect()
    }

    /// Lengths of the maximal run of odd-length columns at the left edge.
    pub fn leading_odd_columns(&self) -> Vec<usize> {
        self.column_lengths()
            .into_iter()
            .take_while(|l| l % 2 == 1)
            .collect()
    }

    /// Row lengths once the leading odd columns are removed.
    pub fn residual_rows(&self) -> Vec<usize> {
        let cut = self.leading_odd_columns().len();
        self.rows
            .iter()
            .filter(|r| r.end() > cut)
            .map(|r| r.end() - cut.max(r.offset))
            .collect()
    }

    /// Row intervals `[offset, end)`.
    pub fn row_intervals(&self) -> Vec<(usize, usize)> {
        self.rows.iter().map(|r| (r.offset, r.end())).collect()
    }

    /// Boxes left and right of the split, if there is one.
    pub fn split_counts(&self) -> Option<(usize, usize)> {
        let split = self.split?;
        let left = self
            .rows
            .iter()
            .map(|r| r.end().min(split).saturating_sub(r.offset))
            .sum();
        Some((left, self.cell_count() - left))
    }

    /// One line per row: `#` for blank boxes, digits for labels, and `|` at
    /// the split. Lines carry no trailing spaces and end in a newline.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let mut line = " ".repeat(row.offset);
            for (i, cell) in row.cells.iter().enumerate() {
                if self.split == Some(row.offset + i) {
                    line.push('|');
                }
                line.push(cell.glyph());
            }
            if self.split == Some(row.end()) {
                line.push('|');
            }
            let _ = writeln!(out, "{}", line.trim_end());
        }
        out
    }
}

impl std::fmt::Display for Diagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Sylvester's inverse read off the plain shifted diagram of `μ`.
pub fn sylvester_inverse_from_diagram(diagram: &Diagram) -> Option<Partition> {
    sylvester_inverse_from_rows(&diagram.row_intervals())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::sylvester_inverse;
    use crate::enumeration::class_members;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn young_and_modular() {
        assert_eq!(render_young(&p(&[3, 2])).to_text(), "###\n##\n");
        assert_eq!(render_young(&p(&[])).to_text(), "");
        assert_eq!(render_two_modular(&p(&[5])).to_text(), "221\n");
        assert_eq!(render_two_modular(&p(&[4])).to_text(), "22\n");
        let modular = render_two_modular(&p(&[28, 22, 20, 16, 13, 7, 6, 4, 3, 2]));
        assert_eq!(modular.rows.len(), 10);
        assert_eq!(modular.label_sum(), 121);
    }

    #[test]
    fn sylvester_layout() {
        let d = render_sylvester_centered(&p(&[13, 13, 11, 5, 5, 3, 1, 1])).unwrap();
        let widths: Vec<usize> = d.rows.iter().map(|r| r.cells.len()).collect();
        assert_eq!(widths, vec![13, 13, 11, 5, 5, 3, 1, 1]);
        assert_eq!(d.split, Some(7));
        assert_eq!(d.split_counts(), Some((30, 22)));
        assert_eq!(
            render_sylvester_centered(&p(&[1])).unwrap().to_text(),
            "#|\n"
        );
        assert_eq!(
            render_sylvester_centered(&p(&[3, 1])).unwrap().to_text(),
            "##|#\n #|\n"
        );
        assert!(render_sylvester_centered(&p(&[2])).is_err());
    }

    #[test]
    fn shifted_plain() {
        let d = render_shifted(&p(&[14, 11, 10, 8, 6, 3]), false).unwrap();
        assert_eq!(d.leading_odd_columns(), vec![1, 1, 3, 5, 5]);
        assert_eq!(d.residual_rows(), vec![9, 8, 7, 6, 4, 3]);
        assert_eq!(d.cell_count(), 52);
        assert!(render_shifted(&p(&[2, 2]), false).is_err());
        assert_eq!(render_shifted(&p(&[1]), true).unwrap().to_text(), "1\n");
        assert_eq!(render_shifted(&p(&[1]), false).unwrap().to_text(), "#\n");
    }

    #[test]
    fn shifted_modular_leading_columns() {
        let d = render_shifted(&p(&[28, 22, 20, 16, 13, 7, 6, 4, 3, 2]), true).unwrap();
        assert_eq!(d.label_sum(), 121);
        assert_eq!(d.leading_odd_columns(), vec![1, 1, 3, 5, 5]);
        assert!(d.column_lengths()[..4].iter().all(|l| l % 2 == 1));
    }

    #[test]
    fn geometry_inverse_matches() {
        for n in 0..=20 {
            for mu in class_members(n, PartitionClass::Distinct) {
                let d = render_shifted(&mu, false).unwrap();
                assert_eq!(
                    sylvester_inverse_from_diagram(&d).as_ref(),
                    sylvester_inverse(&mu).as_ref().ok()
                );
            }
        }
    }
}
