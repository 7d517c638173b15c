//! Exhaustive enumeration of BSP permutations, tableaux and decompositions by
//! constrained backtracking over one-line sequences, plus two brute-force
//! oracles that search tilings directly.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::perm::{self, Permutation};
use crate::poly::QPolynomial;
use crate::ribbon::{Decomposition, Tableau};
use crate::shape::{Cell, Letter, SimpleDiagram, Word};

/// Size limits for exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Largest `n + k` for searches that materialize their results.
    pub max_symbols: usize,
    /// Largest `n + k` for count-only searches.
    pub max_count_symbols: usize,
    /// Largest number of candidates an oracle may examine.
    pub hard_cap: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_symbols: 10,
            max_count_symbols: 12,
            hard_cap: 20_000_000,
        }
    }
}

impl EnumerationBudget {
    pub fn with_max_symbols(max_symbols: usize) -> Self {
        EnumerationBudget {
            max_symbols,
            max_count_symbols: max_symbols.max(12),
            ..Default::default()
        }
    }

    pub fn check_enumerate(&self, symbols: usize) -> Result<()> {
        if symbols > self.max_symbols {
            return Err(Error::Budget {
                what: "enumeration symbols",
                requested: symbols,
                limit: self.max_symbols,
            });
        }
        Ok(())
    }

    pub fn check_count(&self, symbols: usize) -> Result<()> {
        if symbols > self.max_count_symbols {
            return Err(Error::Budget {
                what: "counting symbols",
                requested: symbols,
                limit: self.max_count_symbols,
            });
        }
        Ok(())
    }

    fn check_cap(&self, what: &'static str, requested: usize) -> Result<()> {
        if requested > self.hard_cap {
            return Err(Error::Budget {
                what,
                requested,
                limit: self.hard_cap,
            });
        }
        Ok(())
    }
}

/// The pair constraints of `BSP(w, n)`, optionally with the no-`n`-descent
/// condition, prepared for backtracking over one-line sequences.
#[derive(Debug, Clone)]
pub struct BspSearch {
    m: usize,
    n: usize,
    descent_free: bool,
    /// For each value, `(other, must_be_placed)` checked when it is placed.
    constraints: Vec<Vec<(usize, bool)>>,
}

impl BspSearch {
    pub fn new(word: &Word, n: usize, descent_free: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        let m = n + word.len();
        if m > 63 {
            return Err(Error::Budget {
                what: "search width",
                requested: m,
                limit: 63,
            });
        }
        let mut constraints = vec![Vec::new(); m + 1];
        for (i, &letter) in word.letters().iter().enumerate() {
            let (low, high) = (i + 1, n + i + 1);
            let (first, second) = match letter {
                Letter::C => (low, high),
                Letter::R => (high, low),
            };
            constraints[second].push((first, true));
            constraints[first].push((second, false));
        }
        Ok(BspSearch {
            m,
            n,
            descent_free,
            constraints,
        })
    }

    pub fn symbols(&self) -> usize {
        self.m
    }

    #[inline]
    fn admissible(&self, value: usize, prev: Option<usize>, placed: u64) -> bool {
        if self.descent_free && prev.is_some_and(|p| p > value + self.n) {
            return false;
        }
        self.constraints[value]
            .iter()
            .all(|&(other, must)| (placed >> other & 1 == 1) == must)
    }

    fn count_from(&self, depth: usize, prev: Option<usize>, placed: u64) -> u64 {
        if depth == self.m {
            return 1;
        }
        (1..=self.m)
            .filter(|&v| placed >> v & 1 == 0 && self.admissible(v, prev, placed))
            .map(|v| self.count_from(depth + 1, Some(v), placed | 1 << v))
            .sum()
    }

    pub fn count(&self) -> u64 {
        self.count_from(0, None, 0)
    }

    /// Members whose first entry is `first`; summing over all `first` gives
    /// [`count`](Self::count).
    pub fn count_with_first(&self, first: usize) -> u64 {
        if first == 0 || first > self.m || !self.admissible(first, None, 0) {
            return 0;
        }
        self.count_from(1, Some(first), 1 << first)
    }

    /// Members in lexicographic one-line order.
    pub fn iter(&self) -> BspIter<'_> {
        BspIter {
            search: self,
            prefix: Vec::with_capacity(self.m),
            cursor: vec![1; self.m + 1],
            placed: 0,
            done: false,
        }
    }
}

/// Lexicographic stream over a [`BspSearch`].
#[derive(Debug, Clone)]
pub struct BspIter<'a> {
    search: &'a BspSearch,
    prefix: Vec<usize>,
    cursor: Vec<usize>,
    placed: u64,
    done: bool,
}

impl Iterator for BspIter<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let m = self.search.m;
        while !self.done {
            let depth = self.prefix.len();
            if depth == m {
                let out = Permutation::new(self.prefix.clone()).expect("prefix is a permutation");
                match self.prefix.pop() {
                    Some(v) => self.placed &= !(1 << v),
                    None => self.done = true,
                }
                return Some(out);
            }
            let prev = self.prefix.last().copied();
            let found = (self.cursor[depth]..=m)
                .find(|&v| self.placed >> v & 1 == 0 && self.search.admissible(v, prev, self.placed));
            match found {
                Some(v) => {
                    self.cursor[depth] = v + 1;
                    self.prefix.push(v);
                    self.placed |= 1 << v;
                    self.cursor[depth + 1] = 1;
                }
                None => match self.prefix.pop() {
                    Some(v) => self.placed &= !(1 << v),
                    None => self.done = true,
                },
            }
        }
        None
    }
}

fn diagram(word: &Word, n: usize) -> Result<Arc<SimpleDiagram>> {
    Ok(Arc::new(SimpleDiagram::new(word.clone(), n)?))
}

/// All of `BSP(w, n)`, lexicographically.
pub fn enum_bsp(word: &Word, n: usize, budget: &EnumerationBudget) -> Result<Vec<Permutation>> {
    let search = BspSearch::new(word, n, false)?;
    budget.check_enumerate(search.symbols())?;
    Ok(search.iter().collect())
}

/// The `n`-descent-free members of `BSP(w, n)`, lexicographically; one per
/// decomposition.
pub fn enum_bsd_permutations(
    word: &Word,
    n: usize,
    budget: &EnumerationBudget,
) -> Result<Vec<Permutation>> {
    let search = BspSearch::new(word, n, true)?;
    budget.check_enumerate(search.symbols())?;
    Ok(search.iter().collect())
}

/// `BST(w, n)` as `ψ⁻¹` of each BSP member.
pub fn enum_bst(word: &Word, n: usize, budget: &EnumerationBudget) -> Result<Vec<Tableau>> {
    let d = diagram(word, n)?;
    enum_bsp(word, n, budget)?
        .iter()
        .map(|sigma| perm::psi_inverse_in(sigma, &d))
        .collect()
}

/// `BSD(w, n)`, one decomposition per descent-free BSP member.
pub fn enum_bsd(word: &Word, n: usize, budget: &EnumerationBudget) -> Result<Vec<Decomposition>> {
    let d = diagram(word, n)?;
    enum_bsd_permutations(word, n, budget)?
        .iter()
        .map(|sigma| perm::decomposition_of(sigma, &d))
        .collect()
}

/// `|BSP(w, n)| = |BST(w, n)|` without materializing.
pub fn count_bsp(word: &Word, n: usize, budget: &EnumerationBudget) -> Result<u64> {
    let search = BspSearch::new(word, n, false)?;
    budget.check_count(search.symbols())?;
    Ok(search.count())
}

/// `|BSD(w, n)|` without materializing.
pub fn count_bsd(word: &Word, n: usize, budget: &EnumerationBudget) -> Result<u64> {
    let search = BspSearch::new(word, n, true)?;
    budget.check_count(search.symbols())?;
    Ok(search.count())
}

/// `Σ q^inv(T)` over `BSD(w, n)`, computed from the windowed inversion count
/// of each descent-free BSP member.
pub fn qpoly_bsd(word: &Word, n: usize, budget: &EnumerationBudget) -> Result<QPolynomial> {
    let search = BspSearch::new(word, n, true)?;
    budget.check_enumerate(search.symbols())?;
    let mut tally: Vec<u64> = Vec::new();
    for sigma in search.iter() {
        let inv = sigma.inv_window(n);
        if tally.len() <= inv {
            tally.resize(inv + 1, 0);
        }
        tally[inv] += 1;
    }
    Ok(QPolynomial::from_coeffs(tally.into_iter().map(BigInt::from).collect()))
}

/// `Σ q^(inv(T) + R_w)` over `BSD(w, n)`, computed from the closed window
/// `0 < j - i <= n`. The extra pairs are exactly `(i, n + i)` for the `r`
/// letters, so this is `q^(R_w)` times [`qpoly_bsd`]. It is the weighting under
/// which `q(cw) + q(rw) = [n+1]_q q(w)` and the total over words is
/// `[n+1]_q^k [n]_q!`; the unweighted polynomial satisfies neither once `k >= 1`.
pub fn qpoly_bsd_weighted(word: &Word, n: usize, budget: &EnumerationBudget) -> Result<QPolynomial> {
    let search = BspSearch::new(word, n, true)?;
    budget.check_enumerate(search.symbols())?;
    let mut out = QPolynomial::zero();
    for sigma in search.iter() {
        out.add_term(sigma.inv_window(n + 1), &BigInt::from(1));
    }
    Ok(out)
}

/// Same polynomial, with each inversion count read off the decomposition
/// through the inner relation.
pub fn qpoly_bsd_direct(word: &Word, n: usize, budget: &EnumerationBudget) -> Result<QPolynomial> {
    let mut out = QPolynomial::zero();
    for dec in enum_bsd(word, n, budget)? {
        out.add_term(dec.inversion_count(), &BigInt::from(1));
    }
    Ok(out)
}

/// BSTs grouped by their underlying decomposition.
pub fn fibers(
    word: &Word,
    n: usize,
    budget: &EnumerationBudget,
) -> Result<BTreeMap<Decomposition, Vec<Tableau>>> {
    let mut groups: BTreeMap<Decomposition, Vec<Tableau>> = BTreeMap::new();
    for t in enum_bst(word, n, budget)? {
        groups.entry(t.decomposition()?).or_default().push(t);
    }
    Ok(groups)
}

/// Every ribbon tiling of `diagram` by strips of `diagram.n()` cells, found by
/// covering the least uncovered cell with each strip that fits.
pub fn oracle_tilings(
    diagram: &Arc<SimpleDiagram>,
    budget: &EnumerationBudget,
) -> Result<Vec<Decomposition>> {
    budget.check_enumerate(diagram.strip_count())?;
    let mut search = TilingSearch {
        diagram,
        n: diagram.n(),
        covered: vec![false; diagram.len()],
        strips: Vec::new(),
        found: Vec::new(),
        visited: 0,
        cap: budget.hard_cap,
    };
    search.run()?;
    let mut out = search
        .found
        .iter()
        .map(|strips| Decomposition::from_strips(diagram.clone(), strips))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

struct TilingSearch<'a> {
    diagram: &'a SimpleDiagram,
    n: usize,
    covered: Vec<bool>,
    strips: Vec<Vec<Cell>>,
    found: Vec<Vec<Vec<Cell>>>,
    visited: usize,
    cap: usize,
}

impl TilingSearch<'_> {
    fn free(&self, cell: Cell) -> Option<usize> {
        self.diagram.index_of(cell).filter(|&i| !self.covered[i])
    }

    /// Paths of `len` further cells from `start`, stepping with `steps`.
    fn paths(&self, start: Cell, len: usize, steps: [fn(Cell) -> Cell; 2]) -> Vec<Vec<Cell>> {
        if len == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for step in steps {
            let next = step(start);
            if self.free(next).is_some() {
                for mut rest in self.paths(next, len - 1, steps) {
                    rest.insert(0, next);
                    out.push(rest);
                }
            }
        }
        out
    }

    fn run(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.cap {
            return Err(Error::Budget {
                what: "tiling search nodes",
                requested: self.visited,
                limit: self.cap,
            });
        }
        let Some(first) = self.covered.iter().position(|&c| !c) else {
            self.found.push(self.strips.clone());
            return Ok(());
        };
        let anchor = self.diagram.cells()[first];
        for before in 0..self.n {
            let backs = self.paths(anchor, before, [Cell::left, Cell::down]);
            let fronts = self.paths(anchor, self.n - 1 - before, [Cell::right, Cell::up]);
            for back in &backs {
                for front in &fronts {
                    let mut strip: Vec<Cell> = back.iter().rev().copied().collect();
                    strip.push(anchor);
                    strip.extend_from_slice(front);
                    let idx: Vec<usize> = strip.iter().filter_map(|&c| self.diagram.index_of(c)).collect();
                    for &i in &idx {
                        self.covered[i] = true;
                    }
                    self.strips.push(strip);
                    let res = self.run();
                    self.strips.pop();
                    for &i in &idx {
                        self.covered[i] = false;
                    }
                    res?;
                }
            }
        }
        Ok(())
    }
}

/// Every border-strip tableau of `diagram`, obtained by trying all labelings
/// of every oracle tiling.
pub fn oracle_tableaux(
    diagram: &Arc<SimpleDiagram>,
    budget: &EnumerationBudget,
) -> Result<Vec<Tableau>> {
    let tilings = oracle_tilings(diagram, budget)?;
    let m = diagram.strip_count();
    let labelings = (1..=m).try_fold(1usize, |acc, i| acc.checked_mul(i)).unwrap_or(usize::MAX);
    budget.check_cap("labelings examined", labelings.saturating_mul(tilings.len()))?;
    let mut out = Vec::new();
    for tiling in &tilings {
        let mut relabel: Vec<usize> = (1..=m).collect();
        loop {
            let labels = tiling
                .assignment()
                .iter()
                .map(|&s| relabel[s - 1])
                .collect();
            if let Ok(t) = Tableau::new(diagram.clone(), labels) {
                out.push(t);
            }
            if !next_permutation(&mut relabel) {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}
