//! Count-only searches split by the first one-line entry across threads.

use rayon::prelude::*;
use ribbon_core::enumerate::{BspSearch, EnumerationBudget};
use ribbon_core::{Result, Word};

fn count(word: &Word, n: usize, descent_free: bool, budget: &EnumerationBudget) -> Result<u64> {
    let search = BspSearch::new(word, n, descent_free)?;
    budget.check_count(search.symbols())?;
    Ok((1..=search.symbols())
        .into_par_iter()
        .map(|first| search.count_with_first(first))
        .sum())
}

/// `|BSD(w, n)|`.
pub fn count_bsd(word: &Word, n: usize, budget: &EnumerationBudget) -> Result<u64> {
    count(word, n, true, budget)
}

/// `|BSP(w, n)| = |BST(w, n)|`.
pub fn count_bsp(word: &Word, n: usize, budget: &EnumerationBudget) -> Result<u64> {
    count(word, n, false, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ribbon_core::enumerate;

    #[test]
    fn matches_serial_counts() {
        let b = EnumerationBudget::default();
        for k in 0..=3 {
            for w in Word::all(k) {
                for n in 1..=3 {
                    assert_eq!(count_bsd(&w, n, &b).unwrap(), enumerate::count_bsd(&w, n, &b).unwrap());
                    assert_eq!(count_bsp(&w, n, &b).unwrap(), enumerate::count_bsp(&w, n, &b).unwrap());
                }
            }
        }
    }
}
