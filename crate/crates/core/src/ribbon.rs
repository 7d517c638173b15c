//! Border strips, decompositions and tableaux over simple diagrams, with the
//! above / inner relations and the inversion statistic read directly off a
//! decomposition.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::shape::{Cell, SimpleDiagram};

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Why a set of cells fails to be a border strip.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StripDefect {
    #[error("no cells")]
    Empty,
    #[error("two cells share content {0}")]
    RepeatedContent(i32),
    #[error("content {0} is missing between the tail and the head")]
    ContentGap(i32),
    #[error("cells of content {0} and the next content are not edge-adjacent")]
    NotAdjacent(i32),
    #[error("contains the 2x2 block with top-left corner {0}")]
    Contains2x2(Cell),
}

/// A connected skew set of cells with no 2x2 block; one cell per content over
/// a gap-free content interval. Cells are kept tail first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderStrip {
    cells: Vec<Cell>,
}

impl BorderStrip {
    pub fn new(cells: &[Cell]) -> Result<Self, StripDefect> {
        check_border_strip(cells)?;
        let mut sorted = cells.to_vec();
        sorted.sort_by_key(|c| c.content());
        Ok(BorderStrip { cells: sorted })
    }

    /// The cell of maximal content.
    pub fn head(&self) -> Cell {
        *self.cells.last().unwrap()
    }

    /// The cell of minimal content.
    pub fn tail(&self) -> Cell {
        self.cells[0]
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `(min content, max content)`.
    pub fn content_interval(&self) -> (i32, i32) {
        (self.tail().content(), self.head().content())
    }
}

pub fn is_border_strip(cells: &[Cell]) -> bool {
    check_border_strip(cells).is_ok()
}

/// `(head, tail)` of a border strip, or `None` if the cells do not form one.
pub fn head_tail(cells: &[Cell]) -> Option<(Cell, Cell)> {
    let strip = BorderStrip::new(cells).ok()?;
    Some((strip.head(), strip.tail()))
}

pub fn check_border_strip(cells: &[Cell]) -> Result<(), StripDefect> {
    if cells.is_empty() {
        return Err(StripDefect::Empty);
    }
    let mut by_content = cells.to_vec();
    by_content.sort_by_key(|c| c.content());
    for pair in by_content.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        match b.content() - a.content() {
            0 => return Err(StripDefect::RepeatedContent(a.content())),
            1 => {
                if b != a.right() && b != a.up() {
                    return Err(StripDefect::NotAdjacent(a.content()));
                }
            }
            _ => return Err(StripDefect::ContentGap(a.content() + 1)),
        }
    }
    // implied by the above, checked on its own anyway
    let mut sorted = cells.to_vec();
    sorted.sort_unstable();
    for &c in &sorted {
        let block = [c.right(), c.down(), c.down().right()];
        if block.iter().all(|b| sorted.binary_search(b).is_ok()) {
            return Err(StripDefect::Contains2x2(c));
        }
    }
    Ok(())
}

/// First violated invariant of a candidate decomposition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompositionDefect {
    #[error("assignment covers {found} cells, diagram has {expected}")]
    WrongCellCount { expected: usize, found: usize },
    #[error("cell {cell} carries strip id {strip}, outside 1..={max}")]
    StripIdOutOfRange { cell: Cell, strip: usize, max: usize },
    #[error("strip {strip} has {size} cells instead of {expected}")]
    StripSize { strip: usize, size: usize, expected: usize },
    #[error("strip {strip} is not a border strip: {defect}")]
    NotBorderStrip { strip: usize, defect: StripDefect },
    #[error("strip {strip} has its head on diagonal {head_diagonal}")]
    HeadDiagonal { strip: usize, head_diagonal: i64 },
    #[error("strips {0} and {1} are each inner to the other")]
    InnerCycle(usize, usize),
}

/// First violated invariant of a candidate tableau.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauDefect {
    #[error("labeling covers {found} cells, diagram has {expected}")]
    WrongCellCount { expected: usize, found: usize },
    #[error("cell {cell} carries label {label}, outside 1..={max}")]
    LabelOutOfRange { cell: Cell, label: usize, max: usize },
    #[error("row decreases at {0}")]
    RowDecrease(Cell),
    #[error("column decreases at {0}")]
    ColumnDecrease(Cell),
    #[error("label {label} fills {size} cells instead of {expected}")]
    ClassSize { label: usize, size: usize, expected: usize },
    #[error("label {label} does not fill a border strip: {defect}")]
    NotBorderStrip { label: usize, defect: StripDefect },
}

/// A tiling of a simple diagram by `n`-cell border strips. Each strip is
/// identified by the diagonal holding its head, so ids run over `1..=n+k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    diagram: Arc<SimpleDiagram>,
    strips: Vec<usize>,
}

impl Decomposition {
    /// Checked constructor; `strips[i]` is the strip id of `diagram.cells()[i]`.
    pub fn new(diagram: Arc<SimpleDiagram>, strips: Vec<usize>) -> Result<Self> {
        let dec = Decomposition { diagram, strips };
        dec.validate().map_err(Error::Decomposition)?;
        Ok(dec)
    }

    pub(crate) fn new_unchecked(diagram: Arc<SimpleDiagram>, strips: Vec<usize>) -> Self {
        Decomposition { diagram, strips }
    }

    /// Build from unlabeled strips, assigning each its head diagonal as id.
    pub fn from_strips(diagram: Arc<SimpleDiagram>, strips: &[Vec<Cell>]) -> Result<Self> {
        let mut assignment = vec![0; diagram.len()];
        for cells in strips {
            let strip = BorderStrip::new(cells).map_err(|defect| {
                Error::Decomposition(DecompositionDefect::NotBorderStrip { strip: 0, defect })
            })?;
            let id = diagram.diagonal_of(strip.head());
            let id = usize::try_from(id).unwrap_or(0);
            for &c in cells {
                let idx = diagram
                    .index_of(c)
                    .ok_or_else(|| Error::InvalidArgument(alloc::format!("cell {c} outside diagram")))?;
                assignment[idx] = id;
            }
        }
        Decomposition::new(diagram, assignment)
    }

    pub fn diagram(&self) -> &SimpleDiagram {
        &self.diagram
    }

    pub fn diagram_arc(&self) -> &Arc<SimpleDiagram> {
        &self.diagram
    }

    /// Strip ids aligned with `diagram().cells()`.
    pub fn assignment(&self) -> &[usize] {
        &self.strips
    }

    pub fn strip_at(&self, cell_index: usize) -> usize {
        self.strips[cell_index]
    }

    pub fn strip_of(&self, cell: Cell) -> Option<usize> {
        self.diagram.index_of(cell).map(|i| self.strips[i])
    }

    pub fn strip_count(&self) -> usize {
        self.diagram.strip_count()
    }

    /// Cells of strip `id`, sorted by `(row, col)`.
    pub fn strip_cells(&self, id: usize) -> Vec<Cell> {
        self.diagram
            .cells()
            .iter()
            .zip(&self.strips)
            .filter(|&(_, &s)| s == id)
            .map(|(&c, _)| c)
            .collect()
    }

    pub fn head(&self, id: usize) -> Option<Cell> {
        self.diagram
            .cells()
            .iter()
            .zip(&self.strips)
            .filter(|&(_, &s)| s == id)
            .map(|(&c, _)| c)
            .max_by_key(|c| c.content())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn validate(&self) -> Result<(), DecompositionDefect> {
        let d = &*self.diagram;
        let m = d.strip_count();
        let n = d.n();
        if self.strips.len() != d.len() {
            return Err(DecompositionDefect::WrongCellCount {
                expected: d.len(),
                found: self.strips.len(),
            });
        }
        let mut classes: Vec<Vec<Cell>> = vec![Vec::new(); m + 1];
        for (&cell, &s) in d.cells().iter().zip(&self.strips) {
            if s == 0 || s > m {
                return Err(DecompositionDefect::StripIdOutOfRange { cell, strip: s, max: m });
            }
            classes[s].push(cell);
        }
        for (s, cells) in classes.iter().enumerate().skip(1) {
            if cells.len() != n {
                return Err(DecompositionDefect::StripSize {
                    strip: s,
                    size: cells.len(),
                    expected: n,
                });
            }
            let strip = BorderStrip::new(cells)
                .map_err(|defect| DecompositionDefect::NotBorderStrip { strip: s, defect })?;
            let head_diagonal = d.diagonal_of(strip.head());
            if head_diagonal != s as i64 {
                return Err(DecompositionDefect::HeadDiagonal { strip: s, head_diagonal });
            }
        }
        if let Some((a, b)) = self.inner_relation().cycle() {
            return Err(DecompositionDefect::InnerCycle(a, b));
        }
        Ok(())
    }

    fn check_id(&self, id: usize) -> Result<()> {
        if id == 0 || id > self.strip_count() {
            return Err(Error::UnknownStrip(id));
        }
        Ok(())
    }

    /// For every cell, whether it is reachable from strip `from` by unit
    /// down/right steps through diagram cells.
    fn reach_from(&self, from: usize) -> Vec<bool> {
        let d = &*self.diagram;
        let mut reach = vec![false; d.len()];
        // cells are sorted by (row, col): up and left neighbours come first
        for (idx, &cell) in d.cells().iter().enumerate() {
            reach[idx] = self.strips[idx] == from
                || d.index_of(cell.up()).is_some_and(|i| reach[i])
                || d.index_of(cell.left()).is_some_and(|i| reach[i]);
        }
        reach
    }

    /// Whether some cell of `upper` reaches some cell of `lower` by a path of
    /// down/right steps through the diagram.
    pub fn above(&self, upper: usize, lower: usize) -> Result<bool> {
        self.check_id(upper)?;
        self.check_id(lower)?;
        if upper == lower {
            return Ok(false);
        }
        let reach = self.reach_from(upper);
        Ok(self.strips.iter().zip(&reach).any(|(&s, &r)| s == lower && r))
    }

    /// The transitive closure of the above relation.
    pub fn inner_relation(&self) -> InnerOrder {
        let m = self.strip_count();
        let mut above = vec![false; m * m];
        for from in 1..=m {
            let reach = self.reach_from(from);
            for (&s, &r) in self.strips.iter().zip(&reach) {
                if r && s != from && s >= 1 && s <= m {
                    above[(from - 1) * m + (s - 1)] = true;
                }
            }
        }
        let mut inner = above.clone();
        for via in 0..m {
            for a in 0..m {
                if inner[a * m + via] {
                    for b in 0..m {
                        if inner[via * m + b] {
                            inner[a * m + b] = true;
                        }
                    }
                }
            }
        }
        InnerOrder { m, above, inner }
    }

    /// Pairs `(s1, s2)` of strips with overlapping content intervals, `s1`
    /// inner to `s2` and `s1 > s2`. The count is `inv(T)`.
    pub fn inversions_direct(&self) -> Vec<(usize, usize)> {
        let m = self.strip_count();
        let mut interval = vec![(i32::MAX, i32::MIN); m + 1];
        for (&c, &s) in self.diagram.cells().iter().zip(&self.strips) {
            let e = &mut interval[s];
            e.0 = e.0.min(c.content());
            e.1 = e.1.max(c.content());
        }
        let order = self.inner_relation();
        let mut out = Vec::new();
        for s1 in 1..=m {
            for s2 in 1..s1 {
                let (a, b) = (interval[s1], interval[s2]);
                let overlap = a.0 <= b.1 && b.0 <= a.1;
                if overlap && order.inner(s1, s2) {
                    out.push((s1, s2));
                }
            }
        }
        out
    }

    pub fn inversion_count(&self) -> usize {
        self.inversions_direct().len()
    }
}

impl PartialOrd for Decomposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Decomposition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.diagram.word(), self.diagram.n(), &self.strips).cmp(&(
            other.diagram.word(),
            other.diagram.n(),
            &other.strips,
        ))
    }
}

/// The above relation of a decomposition and its transitive closure.
#[derive(Debug, Clone)]
pub struct InnerOrder {
    m: usize,
    above: Vec<bool>,
    inner: Vec<bool>,
}

impl InnerOrder {
    pub fn strip_count(&self) -> usize {
        self.m
    }

    fn at(table: &[bool], m: usize, a: usize, b: usize) -> bool {
        a >= 1 && b >= 1 && a <= m && b <= m && table[(a - 1) * m + (b - 1)]
    }

    pub fn above(&self, a: usize, b: usize) -> bool {
        Self::at(&self.above, self.m, a, b)
    }

    pub fn inner(&self, a: usize, b: usize) -> bool {
        Self::at(&self.inner, self.m, a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.inner(a, b) || self.inner(b, a)
    }

    /// A pair of strips inner to each other, if any.
    pub fn cycle(&self) -> Option<(usize, usize)> {
        (1..=self.m)
            .flat_map(|a| (a..=self.m).map(move |b| (a, b)))
            .find(|&(a, b)| self.inner(a, b) && self.inner(b, a))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.cycle().is_none()
    }
}

/// A border-strip tableau of a simple diagram with strips of size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    diagram: Arc<SimpleDiagram>,
    labels: Vec<usize>,
}

impl Tableau {
    pub fn new(diagram: Arc<SimpleDiagram>, labels: Vec<usize>) -> Result<Self> {
        let t = Tableau { diagram, labels };
        t.validate().map_err(Error::Tableau)?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(diagram: Arc<SimpleDiagram>, labels: Vec<usize>) -> Self {
        Tableau { diagram, labels }
    }

    pub fn diagram(&self) -> &SimpleDiagram {
        &self.diagram
    }

    pub fn diagram_arc(&self) -> &Arc<SimpleDiagram> {
        &self.diagram
    }

    /// Labels aligned with `diagram().cells()`.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label_of(&self, cell: Cell) -> Option<usize> {
        self.diagram.index_of(cell).map(|i| self.labels[i])
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn validate(&self) -> Result<(), TableauDefect> {
        let d = &*self.diagram;
        validate_labeling(d.cells(), &self.labels, d.strip_count(), Some(d.n()))
    }

    /// The underlying decomposition: label `j` becomes the strip whose id is
    /// the diagonal of its head.
    pub fn decomposition(&self) -> Result<Decomposition> {
        let m = self.diagram.strip_count();
        let mut head_diagonal = vec![i64::MIN; m + 1];
        let mut head_content = vec![i32::MIN; m + 1];
        for (&c, &l) in self.diagram.cells().iter().zip(&self.labels) {
            if l == 0 || l > m {
                return Err(Error::InvalidArgument(alloc::format!("label {l} out of range")));
            }
            if c.content() > head_content[l] {
                head_content[l] = c.content();
                head_diagonal[l] = self.diagram.diagonal_of(c);
            }
        }
        let strips = self
            .labels
            .iter()
            .map(|&l| usize::try_from(head_diagonal[l]).unwrap_or(0))
            .collect();
        Decomposition::new(self.diagram.clone(), strips)
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.diagram.word(), self.diagram.n(), &self.labels).cmp(&(
            other.diagram.word(),
            other.diagram.n(),
            &other.labels,
        ))
    }
}

/// Validate a filling of an arbitrary cell set: labels in `1..=max_label`,
/// rows and columns weakly increasing, every label class a border strip (of
/// exactly `strip_size` cells when given). Adjacency is taken between cells
/// present in the set, which suffices for row- and column-convex shapes.
pub fn validate_labeling(
    cells: &[Cell],
    labels: &[usize],
    max_label: usize,
    strip_size: Option<usize>,
) -> Result<(), TableauDefect> {
    if cells.len() != labels.len() {
        return Err(TableauDefect::WrongCellCount {
            expected: cells.len(),
            found: labels.len(),
        });
    }
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by_key(|&i| cells[i]);
    let lookup = |c: Cell| -> Option<usize> {
        order
            .binary_search_by(|&i| cells[i].cmp(&c))
            .ok()
            .map(|p| order[p])
    };
    let mut classes: Vec<Vec<Cell>> = vec![Vec::new(); max_label + 1];
    for &i in &order {
        let (cell, label) = (cells[i], labels[i]);
        if label == 0 || label > max_label {
            return Err(TableauDefect::LabelOutOfRange { cell, label, max: max_label });
        }
        if lookup(cell.left()).is_some_and(|j| labels[j] > label) {
            return Err(TableauDefect::RowDecrease(cell));
        }
        if lookup(cell.up()).is_some_and(|j| labels[j] > label) {
            return Err(TableauDefect::ColumnDecrease(cell));
        }
        classes[label].push(cell);
    }
    for (label, class) in classes.iter().enumerate().skip(1) {
        match strip_size {
            Some(expected) if class.len() != expected => {
                return Err(TableauDefect::ClassSize {
                    label,
                    size: class.len(),
                    expected,
                })
            }
            None if class.is_empty() => continue,
            _ => {}
        }
        check_border_strip(class).map_err(|defect| TableauDefect::NotBorderStrip { label, defect })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::Word;

    fn c(row: i32, col: i32) -> Cell {
        Cell::new(row, col)
    }

    fn square(n: usize) -> Arc<SimpleDiagram> {
        Arc::new(SimpleDiagram::new(Word::empty(), n).unwrap())
    }

    fn dec(d: &Arc<SimpleDiagram>, strips: &[Vec<Cell>]) -> Decomposition {
        Decomposition::from_strips(d.clone(), strips).unwrap()
    }

    #[test]
    fn strip_predicate() {
        assert!(is_border_strip(&[c(1, 1), c(1, 2), c(2, 1)]));
        assert!(!is_border_strip(&[c(1, 1), c(1, 2), c(2, 1), c(2, 2)]));
        assert!(is_border_strip(&[c(1, 1), c(1, 2), c(1, 3), c(1, 4), c(2, 1)]));
        assert!(!is_border_strip(&[]));
        assert_eq!(check_border_strip(&[c(1, 1), c(1, 3)]), Err(StripDefect::ContentGap(1)));
        assert_eq!(check_border_strip(&[c(1, 1), c(3, 4)]), Err(StripDefect::NotAdjacent(0)));
    }

    #[test]
    fn heads_and_tails() {
        assert_eq!(head_tail(&[c(1, 1)]), Some((c(1, 1), c(1, 1))));
        assert_eq!(head_tail(&[c(1, 1), c(1, 2), c(2, 1)]), Some((c(1, 2), c(2, 1))));
        // the pictured strip: head alone top right, tail alone bottom left
        let pictured = [c(1, 5), c(2, 3), c(2, 4), c(2, 5), c(3, 3), c(4, 1), c(4, 2), c(4, 3)];
        assert_eq!(head_tail(&pictured), Some((c(1, 5), c(4, 1))));
    }

    #[test]
    fn square_tilings() {
        let d = square(2);
        let vertical = dec(&d, &[vec![c(1, 1), c(2, 1)], vec![c(1, 2), c(2, 2)]]);
        assert!(vertical.is_valid());
        assert_eq!(vertical.strip_of(c(2, 1)), Some(1));
        assert!(vertical.above(1, 2).unwrap());
        assert!(!vertical.above(2, 1).unwrap());
        assert!(vertical.inner_relation().inner(1, 2));
        assert!(vertical.inversions_direct().is_empty());

        let horizontal = dec(&d, &[vec![c(1, 1), c(1, 2)], vec![c(2, 1), c(2, 2)]]);
        assert_eq!(horizontal.inversions_direct(), vec![(2, 1)]);

        let whole = Decomposition::new(d.clone(), vec![2, 2, 2, 2]);
        assert!(matches!(whole, Err(Error::Decomposition(DecompositionDefect::StripIdOutOfRange { .. }))
            | Err(Error::Decomposition(DecompositionDefect::StripSize { .. }))));
        assert!(matches!(vertical.above(1, 3), Err(Error::UnknownStrip(3))));
    }

    #[test]
    fn single_cell() {
        let d = square(1);
        let one = Decomposition::new(d, vec![1]).unwrap();
        assert!(one.inversions_direct().is_empty());
    }

    #[test]
    fn ccrcc_relations() {
        let d = Arc::new(SimpleDiagram::new("ccrcc".parse().unwrap(), 3).unwrap());
        let blue = vec![c(1, 1), c(1, 2), c(1, 3)];
        let red = vec![c(2, 0), c(2, 1), c(2, 2)];
        let yellow = vec![c(3, -2), c(3, -1), c(3, 0)];
        let strips = [
            blue,
            red,
            yellow,
            vec![c(1, -1), c(1, 0), c(2, -1)],
            vec![c(2, -3), c(2, -2), c(3, -3)],
            vec![c(2, 3), c(3, 2), c(3, 3)],
            vec![c(3, 1), c(4, 0), c(4, 1)],
            vec![c(4, -3), c(4, -2), c(4, -1)],
        ];
        let t = dec(&d, &strips);
        let (b, r, y) = (8, 6, 3);
        assert_eq!(t.strip_of(c(1, 3)), Some(b));
        assert_eq!(t.strip_of(c(2, 2)), Some(r));
        assert_eq!(t.strip_of(c(3, 0)), Some(y));
        assert!(t.above(b, r).unwrap());
        assert!(t.above(r, y).unwrap());
        assert!(!t.above(b, y).unwrap());
        assert!(!t.above(y, b).unwrap());
        let order = t.inner_relation();
        assert!(order.inner(b, y));
        assert!(order.comparable(y, b));
        assert!(order.is_antisymmetric());
    }

    #[test]
    fn mixed_type_example_tableau() {
        let rows: [&[usize]; 6] = [
            &[1, 1, 1, 1, 4],
            &[1, 2, 4, 4, 4],
            &[2, 2, 5, 5],
            &[2, 3, 5],
            &[3, 3, 7],
            &[6, 6, 7],
        ];
        let mut cells = Vec::new();
        let mut labels = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            for (col, &l) in row.iter().enumerate() {
                cells.push(c(r as i32 + 1, col as i32 + 1));
                labels.push(l);
            }
        }
        assert_eq!(validate_labeling(&cells, &labels, 7, None), Ok(()));
        let blue: Vec<Cell> = cells.iter().zip(&labels).filter(|(_, &l)| l == 1).map(|(&c, _)| c).collect();
        assert_eq!(blue, vec![c(1, 1), c(1, 2), c(1, 3), c(1, 4), c(2, 1)]);
    }

    #[test]
    fn tableau_column_decrease() {
        let d = square(2);
        // rows (1,1)=1 (1,2)=2 / (2,1)=2 (2,2)=1
        let err = Tableau::new(d.clone(), vec![1, 2, 2, 1]).unwrap_err();
        assert!(matches!(
            err,
            Error::Tableau(TableauDefect::ColumnDecrease(_)) | Error::Tableau(TableauDefect::RowDecrease(_))
        ));
        let ok = Tableau::new(d, vec![1, 2, 1, 2]).unwrap();
        assert_eq!(ok.decomposition().unwrap().assignment(), &[1, 2, 1, 2]);
    }
}
