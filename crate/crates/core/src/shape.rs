//! Words over `{r, c}`, simple diagrams built from them, diagonal indexing and
//! ASCII rendering.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::ribbon::Decomposition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// A length-`n` column glued on the left.
    C,
    /// A length-`n` row glued at the bottom.
    R,
}

impl Letter {
    pub fn swapped(self) -> Self {
        match self {
            Letter::C => Letter::R,
            Letter::R => Letter::C,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::C => 'c',
            Letter::R => 'r',
        }
    }
}

/// A word `w_1 w_2 ... w_k` over `{r, c}`.
///
/// `w_1` is the outermost letter: `(c w, n)` is `(w, n)` with one more column.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn repeat(letter: Letter, times: usize) -> Self {
        Word(vec![letter; times])
    }

    /// All `2^k` words of length `k`, in lexicographic order with `c < r`.
    pub fn all(k: usize) -> Vec<Word> {
        (0..1usize << k)
            .map(|bits| {
                Word(
                    (0..k)
                        .map(|i| {
                            if bits >> (k - 1 - i) & 1 == 0 {
                                Letter::C
                            } else {
                                Letter::R
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// The letter `w_i`, 1-based.
    pub fn letter(&self, i: usize) -> Letter {
        self.0[i - 1]
    }

    pub fn count_c(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::C).count()
    }

    pub fn count_r(&self) -> usize {
        self.len() - self.count_c()
    }

    /// `C_w - R_w`.
    pub fn hor(&self) -> i64 {
        self.count_c() as i64 - self.count_r() as i64
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn swapped(&self) -> Word {
        Word(self.0.iter().map(|l| l.swapped()).collect())
    }

    /// The orbit of the word under letter swap (reflection in the anti-diagonal)
    /// and reversal (180 degree rotation).
    pub fn isometry_orbit(&self) -> BTreeSet<Word> {
        let swapped = self.swapped();
        [
            self.clone(),
            self.reversed(),
            swapped.reversed(),
            swapped,
        ]
        .into_iter()
        .collect()
    }

    /// Prepend a letter, giving `l w`.
    pub fn prepend(&self, letter: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.0);
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                'c' => Ok(Letter::C),
                'r' => Ok(Letter::R),
                other => Err(Error::Parse(format!(
                    "word letters must be 'r' or 'c', found {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// A box of a diagram. Rows grow downward, columns rightward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub const fn new(row: i32, col: i32) -> Self {
        Cell { row, col }
    }

    pub const fn content(self) -> i32 {
        self.col - self.row
    }

    pub const fn right(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub const fn left(self) -> Cell {
        Cell::new(self.row, self.col - 1)
    }

    pub const fn up(self) -> Cell {
        Cell::new(self.row - 1, self.col)
    }

    pub const fn down(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }
}

const ABSENT: u32 = u32::MAX;

/// The simple diagram `(w, n)` in its canonical embedding: the base square
/// occupies rows `1..=n` and columns `1..=n`, so the diagonal index of a cell is
/// `content + k + 1` and the top-right cell lies on diagonal `n + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleDiagram {
    word: Word,
    n: usize,
    cells: Vec<Cell>,
    min_col: i32,
    max_row: i32,
    width: usize,
    grid: Vec<u32>,
    min_diagonal: i64,
    diagonals: Vec<Vec<usize>>,
}

impl SimpleDiagram {
    pub fn new(word: Word, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        let n_i = n as i32;
        let mut cells: Vec<Cell> = (1..=n_i)
            .flat_map(|row| (1..=n_i).map(move |col| Cell::new(row, col)))
            .collect();
        let mut min_col = 1;
        let mut max_row = n_i;
        for &letter in word.letters().iter().rev() {
            match letter {
                Letter::C => {
                    min_col -= 1;
                    cells.extend((max_row - n_i + 1..=max_row).map(|row| Cell::new(row, min_col)));
                }
                Letter::R => {
                    max_row += 1;
                    cells.extend((min_col..min_col + n_i).map(|col| Cell::new(max_row, col)));
                }
            }
        }
        cells.sort_unstable();

        let width = (n_i - min_col + 1) as usize;
        let height = max_row as usize;
        let mut grid = vec![ABSENT; width * height];
        for (idx, cell) in cells.iter().enumerate() {
            grid[(cell.row - 1) as usize * width + (cell.col - min_col) as usize] = idx as u32;
        }

        let k = word.len() as i64;
        let min_diagonal = cells
            .iter()
            .map(|c| c.content() as i64 + k + 1)
            .min()
            .unwrap_or(1);
        let top = n as i64 + k;
        let mut diagonals = vec![Vec::new(); (top - min_diagonal + 1) as usize];
        // cells are sorted by row, so each diagonal list comes out top-first
        for (idx, cell) in cells.iter().enumerate() {
            let d = cell.content() as i64 + k + 1;
            diagonals[(d - min_diagonal) as usize].push(idx);
        }

        Ok(SimpleDiagram {
            word,
            n,
            cells,
            min_col,
            max_row,
            width,
            grid,
            min_diagonal,
            diagonals,
        })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.word.len()
    }

    /// `n + k`: the number of strips in any decomposition and the index of
    /// the top-right diagonal.
    pub fn strip_count(&self) -> usize {
        self.n + self.k()
    }

    /// All cells, sorted by `(row, col)`.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn min_col(&self) -> i32 {
        self.min_col
    }

    pub fn max_row(&self) -> i32 {
        self.max_row
    }

    /// Index of `cell` into [`cells`](Self::cells), if it belongs to the diagram.
    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        if cell.row < 1 || cell.row > self.max_row || cell.col < self.min_col {
            return None;
        }
        let col = (cell.col - self.min_col) as usize;
        if col >= self.width {
            return None;
        }
        match self.grid[(cell.row - 1) as usize * self.width + col] {
            ABSENT => None,
            idx => Some(idx as usize),
        }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.index_of(cell).is_some()
    }

    pub fn diagonal_of(&self, cell: Cell) -> i64 {
        cell.content() as i64 + self.k() as i64 + 1
    }

    pub fn min_diagonal(&self) -> i64 {
        self.min_diagonal
    }

    /// Indices of the cells on diagonal `d`, topmost first. Empty when the
    /// diagonal does not meet the diagram.
    pub fn diagonal_indices(&self, d: i64) -> &[usize] {
        if d < self.min_diagonal || d > self.strip_count() as i64 {
            return &[];
        }
        &self.diagonals[(d - self.min_diagonal) as usize]
    }

    /// The cells on diagonal `d`, topmost first.
    pub fn diagonal_cells(&self, d: i64) -> Vec<Cell> {
        self.diagonal_indices(d)
            .iter()
            .map(|&i| self.cells[i])
            .collect()
    }

    /// Render the diagram, one glyph per cell. With a decomposition each strip
    /// is drawn with its own glyph.
    pub fn render_ascii(&self, decomposition: Option<&Decomposition>) -> Result<String> {
        if let Some(dec) = decomposition {
            if dec.diagram() != self {
                return Err(Error::InvalidArgument(
                    "decomposition belongs to a different diagram".into(),
                ));
            }
        }
        let mut out = String::new();
        for row in 1..=self.max_row {
            let mut line = String::new();
            for col in self.min_col..=self.n as i32 {
                match self.index_of(Cell::new(row, col)) {
                    None => line.push(' '),
                    Some(idx) => line.push(match decomposition {
                        None => '▪',
                        Some(dec) => strip_glyph(dec.strip_at(idx)),
                    }),
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        Ok(out)
    }
}

const GLYPHS: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

fn strip_glyph(strip: usize) -> char {
    GLYPHS
        .get(strip.wrapping_sub(1))
        .map(|&b| b as char)
        .unwrap_or('#')
}
