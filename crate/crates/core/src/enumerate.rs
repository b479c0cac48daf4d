//! Random-access enumeration of every formula up to a given depth.
//!
//! Level 0 holds the leaves. Level `k` holds the leaves, every unary
//! operator applied to a level `k − 1` formula, and every binary operator
//! applied to a pair of level `k − 1` formulas. Each formula of depth at most
//! `k` therefore appears exactly once, and formula `i` can be rebuilt from
//! `i` alone, which lets sweeps be split across threads without
//! materialising the whole family.

use crate::syntax::Formula;

#[derive(Debug, Clone)]
pub struct FormulaFamily {
    leaves: Vec<Formula>,
    unary: Vec<char>,
    binary: Vec<char>,
    /// `sizes[k]` is the number of formulas of depth at most `k`.
    sizes: Vec<usize>,
}

impl FormulaFamily {
    pub fn new(depth: usize, leaves: Vec<Formula>, unary: Vec<char>, binary: Vec<char>) -> Self {
        let mut sizes = vec![leaves.len()];
        for _ in 0..depth {
            let prev = *sizes.last().expect("non-empty");
            let next = leaves.len() + unary.len() * prev + binary.len() * prev * prev;
            sizes.push(next);
        }
        Self {
            leaves,
            unary,
            binary,
            sizes,
        }
    }

    /// Formulas over the named variables built with `N`, `C`, `K` and `A`.
    pub fn standard(depth: usize, variables: &[char]) -> Self {
        Self::new(
            depth,
            variables.iter().map(|&v| Formula::Atom(v)).collect(),
            vec!['N'],
            vec!['C', 'K', 'A'],
        )
    }

    pub fn depth(&self) -> usize {
        self.sizes.len() - 1
    }

    pub fn len(&self) -> usize {
        *self.sizes.last().expect("non-empty")
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Formula number `index`; panics when out of range.
    pub fn get(&self, index: usize) -> Formula {
        assert!(index < self.len(), "index {index} out of range");
        self.build(self.depth(), index)
    }

    fn build(&self, level: usize, mut index: usize) -> Formula {
        if index < self.leaves.len() {
            return self.leaves[index].clone();
        }
        index -= self.leaves.len();
        let prev = self.sizes[level - 1];
        if index < self.unary.len() * prev {
            let symbol = self.unary[index / prev];
            return Formula::Op(symbol, vec![self.build(level - 1, index % prev)]);
        }
        index -= self.unary.len() * prev;
        let pairs = prev * prev;
        let symbol = self.binary[index / pairs];
        let pair = index % pairs;
        Formula::Op(
            symbol,
            vec![
                self.build(level - 1, pair / prev),
                self.build(level - 1, pair % prev),
            ],
        )
    }

    pub fn iter(&self) -> impl Iterator<Item = Formula> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }
}
