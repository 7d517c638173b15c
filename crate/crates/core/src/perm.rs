//! Permutations in one-line notation, the BSP membership predicate, the map
//! from tableaux to permutations and back, descent statistics and removal of
//! `n`-descents.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::ribbon::{Decomposition, Tableau};
use crate::shape::{Letter, SimpleDiagram, Word};

/// A permutation of `1..=m`, stored with its inverse. Positions and values are
/// both 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    one_line: Vec<usize>,
    inverse: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let m = one_line.len();
        let mut inverse = vec![0; m];
        for (pos, &v) in one_line.iter().enumerate() {
            if v == 0 || v > m || inverse[v - 1] != 0 {
                return Err(Error::InvalidArgument(format!(
                    "{one_line:?} is not a permutation of 1..={m}"
                )));
            }
            inverse[v - 1] = pos + 1;
        }
        Ok(Permutation { one_line, inverse })
    }

    pub fn identity(m: usize) -> Self {
        let one_line: Vec<usize> = (1..=m).collect();
        Permutation {
            inverse: one_line.clone(),
            one_line,
        }
    }

    pub fn len(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.one_line.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `σ(i)`.
    pub fn value(&self, position: usize) -> usize {
        self.one_line[position - 1]
    }

    /// `σ⁻¹(v)`.
    pub fn position(&self, value: usize) -> usize {
        self.inverse[value - 1]
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            one_line: self.inverse.clone(),
            inverse: self.one_line.clone(),
        }
    }

    /// Exchange the entries at positions `i` and `i + 1`.
    pub fn swap_adjacent(&mut self, i: usize) {
        self.one_line.swap(i - 1, i);
        let (a, b) = (self.one_line[i - 1], self.one_line[i]);
        self.inverse[a - 1] = i;
        self.inverse[b - 1] = i + 1;
    }

    /// Classical inversion number of the one-line sequence.
    pub fn inversions(&self) -> usize {
        let s = &self.one_line;
        (0..s.len())
            .map(|i| s[i + 1..].iter().filter(|&&v| v < s[i]).count())
            .sum()
    }

    /// Positions `i` with `σ(i) - kk > σ(i + 1)`.
    pub fn descents_k(&self, kk: usize) -> Vec<usize> {
        self.one_line
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1] + kk)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn des_k(&self, kk: usize) -> usize {
        self.one_line.windows(2).filter(|w| w[0] > w[1] + kk).count()
    }

    /// Value pairs `i < j` with `j - i < n` appearing out of order.
    pub fn inv_window(&self, n: usize) -> usize {
        let m = self.len();
        let mut count = 0;
        for i in 1..=m {
            for j in i + 1..=m.min(i + n - 1) {
                if self.position(i) > self.position(j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Whether `σ ∈ BSP(w, n)`: for each letter `w_i`, `i` precedes `n + i`
    /// when `w_i = c` and follows it when `w_i = r`.
    pub fn is_bsp_member(&self, word: &Word, n: usize) -> Result<bool> {
        check_size(self.len(), n + word.len())?;
        Ok(word.letters().iter().enumerate().all(|(i, &l)| {
            let (low, high) = (self.position(i + 1), self.position(n + i + 1));
            match l {
                Letter::C => low < high,
                Letter::R => low > high,
            }
        }))
    }

    /// The unique word of length `k` whose BSP set contains `σ`.
    pub fn word_of(&self, n: usize, k: usize) -> Result<Word> {
        check_size(self.len(), n + k)?;
        Ok(Word::new(
            (1..=k)
                .map(|i| {
                    if self.position(i) < self.position(n + i) {
                        Letter::C
                    } else {
                        Letter::R
                    }
                })
                .collect(),
        ))
    }

    /// Swap away `n`-descents, scanning from the left and restarting after
    /// each swap, until none remain.
    pub fn canonicalize(&self, n: usize) -> Permutation {
        let mut out = self.clone();
        let mut i = 1;
        while i < out.len() {
            if out.value(i) > out.value(i + 1) + n {
                out.swap_adjacent(i);
                i = 1;
            } else {
                i += 1;
            }
        }
        out
    }
}

fn check_size(found: usize, expected: usize) -> Result<()> {
    if found != expected {
        return Err(Error::SizeMismatch { expected, found });
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.one_line.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Permutation::new(Vec::new());
        }
        let values = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad permutation entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

/// `ψ`: label `j` heading diagonal `i` gives `σ(j) = i`.
pub fn psi(tableau: &Tableau) -> Result<Permutation> {
    tableau.validate().map_err(Error::Tableau)?;
    let d = tableau.diagram();
    let m = d.strip_count();
    let mut head_content = vec![i32::MIN; m];
    let mut one_line = vec![0; m];
    for (&cell, &label) in d.cells().iter().zip(tableau.labels()) {
        if cell.content() > head_content[label - 1] {
            head_content[label - 1] = cell.content();
            one_line[label - 1] = usize::try_from(d.diagonal_of(cell)).unwrap_or(0);
        }
    }
    Permutation::new(one_line).map_err(|_| {
        Error::Internal(String::from("heads of a valid tableau do not fill diagonals 1..=n+k"))
    })
}

/// `ψ⁻¹` for a word and strip size.
pub fn psi_inverse(sigma: &Permutation, word: &Word, n: usize) -> Result<Tableau> {
    let diagram = Arc::new(SimpleDiagram::new(word.clone(), n)?);
    psi_inverse_in(sigma, &diagram)
}

/// `ψ⁻¹` on an already built diagram. Each diagonal `d` receives the labels
/// `j` with `d ≤ σ(j) ≤ d + n - 1`, ascending from the top.
pub fn psi_inverse_in(sigma: &Permutation, diagram: &Arc<SimpleDiagram>) -> Result<Tableau> {
    if !sigma.is_bsp_member(diagram.word(), diagram.n())? {
        return Err(Error::NotBspMember);
    }
    let labels = fill_labels(sigma, diagram)?;
    Ok(Tableau::new_unchecked(diagram.clone(), labels))
}

pub(crate) fn fill_labels(sigma: &Permutation, diagram: &SimpleDiagram) -> Result<Vec<usize>> {
    let n = diagram.n() as i64;
    let m = diagram.strip_count();
    let mut labels = vec![0; diagram.len()];
    for d in diagram.min_diagonal()..=m as i64 {
        let slots = diagram.diagonal_indices(d);
        let mut next = slots.iter();
        for j in 1..=m {
            let s = sigma.value(j) as i64;
            if d <= s && s < d + n {
                let &idx = next.next().ok_or_else(|| {
                    Error::Internal(format!("diagonal {d} has more active labels than cells"))
                })?;
                labels[idx] = j;
            }
        }
        if next.next().is_some() {
            return Err(Error::Internal(format!(
                "diagonal {d} has fewer active labels than cells"
            )));
        }
    }
    Ok(labels)
}

/// The decomposition underlying `ψ⁻¹(σ)`, without building the tableau.
pub fn decomposition_of(sigma: &Permutation, diagram: &Arc<SimpleDiagram>) -> Result<Decomposition> {
    if !sigma.is_bsp_member(diagram.word(), diagram.n())? {
        return Err(Error::NotBspMember);
    }
    let strips = fill_labels(sigma, diagram)?
        .into_iter()
        .map(|j| sigma.value(j))
        .collect();
    Ok(Decomposition::new_unchecked(diagram.clone(), strips))
}
